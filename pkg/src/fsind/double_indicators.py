"""Indicators of the irreducible modules M(O, eta) over the double of G.

Each indicator is computed along three independent routes:

  * zform    -- (1/|C|) sum_y z_m(s, y) eta(y) over the centralizer C,
  * charform -- (1/|G|) sum over class members g and a in G_m(g) of the
                double character at (p_g, a^m),
  * closed   -- the per-type integer case formulas (or, for central
                classes, reduction to the plain group indicator).

nu_double() runs all three and refuses to return unless they agree.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .characters import (
    ClassFunction,
    angle_param,
    irreducible_characters_of_centralizer,
)
from .group import (
    GroupElement,
    GroupParams,
    GroupError,
    element,
    enumerate_group,
    gen_a,
    gen_u,
    inverse,
    multiply,
    power,
)
from .group_indicators import INT_TOL, IndicatorValue, nu_group_bruteforce
from .structure import (
    CENTRAL,
    TYPE_III,
    ConjugacyClass,
    VerificationError,
    center,
    centralizer,
    conjugacy_classes,
    subgroup_from_generators,
)

GM_CASES = ("i", "ii", "iii", "iv", "v", "vi", "vii", "viii", "ix", "x", "xi")


@dataclass(frozen=True)
class GmRecord:
    base: GroupElement
    m: int
    members: frozenset
    power_map: dict = field(hash=False, compare=False)


@lru_cache(maxsize=None)
def gm_bruteforce(x: GroupElement, m: int) -> GmRecord:
    """G_m(x) = {a : prod_{j<m} a^-j x a^j = 1}, by exhaustive scan."""
    if m < 1:
        raise GroupError("m must be positive")
    params = x.params
    one = element(params, 0, 0, 0)
    members = set()
    power_map = {}
    for a in enumerate_group(params):
        a_inv = inverse(a)
        prod = one
        term = x
        for _ in range(m):
            prod = multiply(prod, term)
            term = multiply(multiply(a_inv, term), a)
        if prod == one:
            am = power(a, m)
            if multiply(am, x) != multiply(x, am):
                raise VerificationError(f"a^m fails to centralize {x} for a={a}, m={m}")
            members.add(a)
            power_map[a] = am
    return GmRecord(base=x, m=m, members=frozenset(members), power_map=power_map)


def _gm_closed_case(x: GroupElement, a: GroupElement, m: int):
    """Returns (case_id, is_member) from the eleven divisibility cases."""
    params = x.params
    mod = 2 ** params.l
    k = params.k
    r, i = x.s, x.i
    s, j = a.s, a.i
    if x.x == 0:
        if a.x == 0:
            # membership depends only on the base here
            return "i", (m * i) % k == 0 and (m * r) % mod == 0
        if i % 2 == 0:
            return "ii", m % 2 == 0 and (j % 2 == 1 or (m * r) % 4 == 0)
        cond = m % 2 == 0 and (
            (j % 2 == 0 and (m * s) % 4 == 0)
            or (j % 2 == 1 and (m * (r + s)) % 4 == 0)
        )
        return "iii", cond
    # base a^r u^i v
    if a.x == 0:
        if (m * j) % k != 0:
            case = {(0, 0): "iv", (0, 1): "v", (1, 0): "vi", (1, 1): "vii"}[(i % 2, j % 2)]
            return case, False
        if i % 2 == 0 and j % 2 == 0:
            cond = m % 2 == 0 and (
                ((m * r) % 4 == 0 and (m * s) % mod == 0)
                or ((m * r) % 4 != 0 and s % (mod // 2) == mod // 4)
            )
            return "iv", cond
        if i % 2 == 0 and j % 2 == 1:
            return "v", m % 4 == 0 and (m * s) % mod == 0
        if i % 2 == 1 and j % 2 == 0:
            return "vi", m % 2 == 0 and (m * s) % mod == 0
        return "vii", m % 4 == 0 and (m * s) % mod == 0
    # candidate also carries v
    if i % 2 == 0 and j % 2 == 0:
        cond = (
            m % 2 == 0
            and (m * (i - j)) % k == 0
            and (m * r - (1 - mod // 4) * m * s) % mod == 0
        )
        return "viii", cond
    if i % 2 == 0 and j % 2 == 1:
        case = "ix"
    elif i % 2 == 1 and j % 2 == 0:
        case = "x"
    else:
        case = "xi"
    need4 = case in ("ix", "x")
    cond = (
        m % (4 if need4 else 2) == 0
        and (m * (i - j)) % k == 0
        and (m * (r - s)) % mod == 0
    )
    return case, cond


def gm_closed(x: GroupElement, m: int, fired: set | None = None) -> frozenset:
    """Closed-form G_m(x) for noncentral x; cross-checked against brute force."""
    params = x.params
    if x in center(params).elements:
        raise GroupError("gm_closed requires a noncentral base element")
    members = set()
    for a in enumerate_group(params):
        case, is_member = _gm_closed_case(x, a, m)
        if is_member:
            members.add(a)
            if fired is not None:
                fired.add(case)
    brute = gm_bruteforce(x, m).members
    if members != brute:
        bad = sorted(members ^ brute, key=lambda e: (e.x, e.i, e.s))[0]
        raise VerificationError(
            f"G_m closed form disagrees with brute force at x={x}, m={m}, a={bad}"
        )
    return frozenset(members)


def z_m(x: GroupElement, y: GroupElement, m: int) -> int:
    rec = gm_bruteforce(x, m)
    return sum(1 for a in rec.members if rec.power_map[a] == y)


@dataclass(eq=False)
class DoubleModuleLabel:
    cls: ConjugacyClass
    eta: ClassFunction
    eta_id: int

    @property
    def dim(self) -> int:
        return self.cls.size * round(self.eta.degree.real)

    def __repr__(self):
        return f"M(class({self.cls.representative}), eta#{self.eta_id})"


_LABEL_CACHE: dict = {}


def all_labels(params: GroupParams) -> tuple:
    """One label per (conjugacy class, centralizer irreducible)."""
    if params in _LABEL_CACHE:
        return _LABEL_CACHE[params]
    labels = []
    for cls in conjugacy_classes(params):
        C = centralizer(params, cls.representative)
        table = irreducible_characters_of_centralizer(params, C)
        for eta_id, eta in enumerate(table.irreducibles):
            labels.append(DoubleModuleLabel(cls=cls, eta=eta, eta_id=eta_id))
    if sum(lab.dim ** 2 for lab in labels) != params.order ** 2:
        raise VerificationError("double-module labels: sum dim^2 != |G|^2")
    out = tuple(labels)
    _LABEL_CACHE[params] = out
    return out


def nu_double_zform(label: DoubleModuleLabel, m: int) -> IndicatorValue:
    rep = label.cls.representative
    C = label.eta.domain
    rec = gm_bruteforce(rep, m)
    counts = Counter(rec.power_map[a] for a in rec.members)
    if any(y not in C.elements for y in counts):
        raise VerificationError(f"power of G_m({rep}) member escaped the centralizer")
    raw = sum(cnt * label.eta(y) for y, cnt in counts.items()) / C.order
    return IndicatorValue(m=m, raw=raw, rounded=round(raw.real), paths={"zform": raw})


def double_character_value(label: DoubleModuleLabel, g: GroupElement, h: GroupElement) -> complex:
    """Character of M(O, eta) at p_g bowtie h: the trace on the g-graded part."""
    if g not in label.cls.member_set():
        return 0j
    if multiply(h, g) != multiply(g, h):
        return 0j  # h permutes the grading off the diagonal
    idx = label.cls.members.index(g)
    gi = label.cls.coset_reps[idx]
    c = multiply(multiply(inverse(gi), h), gi)
    return label.eta(c)


@lru_cache(maxsize=None)
def _charform_counts(cls: ConjugacyClass, m: int) -> tuple:
    """Multiplicities of eta-arguments in the charform sum, per (class, m).

    Shared across every eta of the same centralizer: the pair (g, a)
    contributes eta(g_i^-1 a^m g_i) whenever a^m centralizes g.
    """
    counter = Counter()
    for g, gi in zip(cls.members, cls.coset_reps):
        rec = gm_bruteforce(g, m)
        gi_inv = inverse(gi)
        for a in rec.members:
            h = rec.power_map[a]
            if multiply(h, g) != multiply(g, h):
                continue
            counter[multiply(multiply(gi_inv, h), gi)] += 1
    return tuple(counter.items())


def nu_double_charform(label: DoubleModuleLabel, m: int) -> IndicatorValue:
    params = label.cls.representative.params
    raw = sum(cnt * label.eta(c) for c, cnt in _charform_counts(label.cls, m))
    raw /= params.order
    return IndicatorValue(m=m, raw=raw, rounded=round(raw.real), paths={"charform": raw})


def nu_double_central(label: DoubleModuleLabel, m: int) -> IndicatorValue:
    """Central class: indicator of eta as a G-character if x^m = 1, else 0."""
    x = label.cls.representative
    params = x.params
    if label.cls.size != 1 or x not in center(params).elements:
        raise GroupError("nu_double_central needs a central singleton class")
    if power(x, m) == element(params, 0, 0, 0):
        inner = nu_group_bruteforce(label.eta, m)
        raw, rounded = inner.raw, inner.rounded
    else:
        raw, rounded = 0j, 0
    return IndicatorValue(m=m, raw=raw, rounded=rounded, paths={"central": raw})


@lru_cache(maxsize=None)
def _h_subgroup(params: GroupParams) -> "Subgroup":
    a, u = gen_a(params), gen_u(params)
    return subgroup_from_generators((multiply(a, a), multiply(u, u)))


def _eta_power_trivial_on_h(label: DoubleModuleLabel, half_m: int) -> bool:
    H = _h_subgroup(label.cls.representative.params)
    angles = label.eta.angles
    return all((half_m * angles[h]) % 1 == 0 for h in H.elements)


def _center_sign(label: DoubleModuleLabel) -> int:
    params = label.cls.representative.params
    half_a = element(params, 2 ** (params.l - 1), 0, 0)
    ang = label.eta.angles[half_a] % 1
    if ang == 0:
        return 1
    if ang == Fraction(1, 2):
        return -1
    raise VerificationError(f"eta(a^(2^(l-1))) = exp(2 pi i {ang}) is not a sign")


def _closed_type3(label: DoubleModuleLabel, m: int) -> Fraction:
    rep = label.cls.representative
    params = rep.params
    k, mod = params.k, 2 ** params.l
    g_k, g_l = math.gcd(m, k), math.gcd(m, mod)
    if m % 2 == 1:
        return Fraction(0)
    if rep.i % 2 == 0 and rep.s % 2 == 1 and m % 4 == 2:
        # the only branch that sees eta: sign at the central involution
        return Fraction(g_k * _center_sign(label), 2)
    return Fraction(g_k * g_l, 4)


def nu_double_closed(label: DoubleModuleLabel, m: int) -> int:
    """Per-type integer case formulas for noncentral classes."""
    rep = label.cls.representative
    params = rep.params
    tag = label.cls.type_tag
    k, mod = params.k, 2 ** params.l
    eta = label.eta

    if tag == CENTRAL:
        return nu_double_central(label, m).rounded

    if tag == TYPE_III:
        val = _closed_type3(label, m)
        if val.denominator != 1:
            raise VerificationError(f"Type III closed form for {label} at m={m} is {val}")
        return int(val)

    # Types I and II share the 0 / 1 / 2-or-4 skeleton over m mod 4
    if m % 2 == 1:
        return 0

    if tag == "TypeI-odd":
        # eta linear on <a, u^2>; t read off from eta(u^2)
        t = angle_param(eta, element(params, 0, 2, 0), k // 2)
        if m % 4 == 2:
            return 1
        full = (m * rep.s) % mod == 0 and (m * rep.i) % k == 0 and (m * t) % k == 0
        return 4 if full else 2

    if tag == "TypeI-even":
        if eta.angles is not None:
            # linear psi_{s,t} on <a, u>
            es = angle_param(eta, gen_a(params), mod // 2)
            et = angle_param(eta, gen_u(params), k)
            p = (
                (m * rep.i) % k == 0
                and (m * rep.s) % mod == 0
                and (m * es) % (mod // 2) == 0
                and (m * et) % k == 0
            )
            return 1 + (1 if p else 0)
        # 2-dim eta induced from <a, u^2> with odd a-parameter
        t = eta.label["t"]
        if m % 4 == 2:
            return 1
        full = m % mod == 0 and (m * t) % k == 0 and (m * rep.i) % k == 0
        return 4 if full else 2

    if tag == "TypeII":
        full = (
            (m * rep.i) % k == 0
            and (m * rep.s) % mod == 0
            and _eta_power_trivial_on_h(label, m // 2)
        )
        if full:
            return 4
        return 2 if m % 4 == 0 else 1

    raise GroupError(f"unknown class type {tag}")


def nu_double(label: DoubleModuleLabel, m: int) -> IndicatorValue:
    """All paths, with mandatory agreement."""
    zf = nu_double_zform(label, m)
    cf = nu_double_charform(label, m)
    closed = nu_double_closed(label, m)
    values = {"zform": zf.rounded, "charform": cf.rounded, "closed": closed}
    if len(set(values.values())) != 1:
        raise VerificationError(
            f"indicator paths disagree for {label} at m={m}: {values}"
        )
    return IndicatorValue(
        m=m,
        raw=zf.raw,
        rounded=zf.rounded,
        paths={"zform": zf.raw, "charform": cf.raw, "closed": complex(closed)},
    )


def find_negative_indicators(params: GroupParams) -> list:
    """All labels with nu_2 = -1; nonempty for every group in the family."""
    hits = []
    for label in all_labels(params):
        val = nu_double(label, 2)
        if val.rounded < 0:
            hits.append((label, 2, val.rounded))
    if not hits:
        raise VerificationError(
            f"no negative nu_2 found at (l={params.l}, k={params.k})"
        )
    for label, _, value in hits:
        rep = label.cls.representative
        ok = (
            value == -1
            and label.cls.type_tag == TYPE_III
            and rep.i % 2 == 0
            and rep.s % 2 == 1
            and _center_sign(label) == -1
        )
        if not ok:
            raise VerificationError(f"unexpected negative-indicator shape: {label}")
    return hits
