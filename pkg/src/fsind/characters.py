"""Class functions, induction, and irreducible character tables.

Character values are complex doubles built from exact root-of-unity
angles (fractions p/q of a full turn).  Linear characters additionally
carry their exact angle map, which later code uses to read off integer
parameters and to test conditions like eta^(m/2) = 1 without any
floating-point slop.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .group import (
    GroupElement,
    GroupParams,
    GroupError,
    conjugate,
    element,
    gen_a,
    gen_u,
    gen_v,
    identity,
    inverse,
    multiply,
    power,
)
from .structure import Subgroup, VerificationError, subgroup_from_generators

ORTHO_TOL = 1e-9
DEDUPE_TOL = 1e-6


def unit(angle: Fraction) -> complex:
    """exp(2*pi*i*angle) for an exact rational angle."""
    a = angle - int(angle)
    return cmath.exp(2j * cmath.pi * float(a))


class ClassFunction:
    """Total map from a subgroup's elements to complex values."""

    def __init__(self, domain: Subgroup, values: dict, label=None, angles=None):
        if set(values) != set(domain.elements):
            raise GroupError("class function values must cover the whole domain")
        self.domain = domain
        self.values = values
        self.label = label or {}
        self.angles = angles  # elem -> Fraction, for linear characters only

    @property
    def degree(self) -> complex:
        return self.values[identity(self.domain.params)]

    def __call__(self, g: GroupElement) -> complex:
        return self.values[g]

    def __repr__(self):
        fam = self.label.get("family", "classfn")
        return f"<{fam} degree={self.degree.real:.0f} on order-{self.domain.order} subgroup>"


def inner_product(f: ClassFunction, g: ClassFunction) -> complex:
    if f.domain.elements != g.domain.elements:
        raise GroupError("inner product needs a common domain")
    n = f.domain.order
    return sum(f(h) * g(h).conjugate() for h in f.domain.elements) / n


def restrict(f: ClassFunction, H: Subgroup) -> ClassFunction:
    if not H.elements <= f.domain.elements:
        raise GroupError("restriction target is not a subgroup of the domain")
    values = {h: f(h) for h in H.elements}
    angles = {h: f.angles[h] for h in H.elements} if f.angles else None
    return ClassFunction(H, values, label={"family": "restricted"}, angles=angles)


def induce(f: ClassFunction, T: Subgroup, label=None) -> ClassFunction:
    """Induced class function (1/|H|) sum_x f0(x g x^-1), f0 zero off H."""
    H = f.domain
    if not H.elements <= T.elements:
        raise GroupError("can only induce from a subgroup")

    def value_at(g):
        acc = 0j
        for x in T.elements:
            c = conjugate(g, x)
            if c in H.elements:
                acc += f(c)
        return acc / H.order

    values = {}
    if T.order == T.params.order:
        # the result is a class function, so evaluate once per class of T
        from .structure import conjugacy_classes

        for cls in conjugacy_classes(T.params):
            val = value_at(cls.representative)
            for member in cls.members:
                values[member] = val
    else:
        for g in T.elements:
            values[g] = value_at(g)
    return ClassFunction(T, values, label=label)


@dataclass(frozen=True)
class CharacterTable:
    group: Subgroup
    irreducibles: tuple

    @property
    def labels(self):
        return tuple(chi.label for chi in self.irreducibles)

    def degrees(self):
        return sorted(round(chi.degree.real) for chi in self.irreducibles)


@lru_cache(maxsize=None)
def full_group(params: GroupParams) -> Subgroup:
    return subgroup_from_generators((gen_a(params), gen_u(params), gen_v(params)))


@lru_cache(maxsize=None)
def h1_subgroup(params: GroupParams) -> Subgroup:
    """H1 = <a, u^2>, abelian of order 2^(l-1) k."""
    u = gen_u(params)
    return subgroup_from_generators((gen_a(params), multiply(u, u)))


@lru_cache(maxsize=None)
def h2_subgroup(params: GroupParams) -> Subgroup:
    """H2 = <a, u>, nonabelian of order 2^l k."""
    return subgroup_from_generators((gen_a(params), gen_u(params)))


def _sorted_angle_key(chi: ClassFunction):
    order = chi.domain.sorted_elements()
    return tuple(chi.angles[g] for g in order)


def abelian_characters(A: Subgroup) -> list:
    """All |A| homomorphisms A -> unit circle, by peeling cyclic factors.

    Repeatedly picks a maximal-order element outside the current span and
    extends every character of the span in all compatible ways; the value
    on the new generator is an e-th root of the already-fixed value of its
    e-th power.
    """
    if not A.is_abelian:
        raise GroupError("abelian_characters needs an abelian subgroup")
    params = A.params
    one = identity(params)
    elems = A.sorted_elements()
    order_of = {}
    for g in elems:
        n, cur = 1, g
        while cur != one:
            cur = multiply(cur, g)
            n += 1
        order_of[g] = n

    span = {one: Fraction(0)}  # element -> exponent word angle placeholder
    chars = [{one: Fraction(0)}]
    while len(span) < A.order:
        h = max(
            (g for g in elems if g not in span),
            key=lambda g: (order_of[g], [-c for c in (g.x, g.i, g.s)]),
        )
        # e = least power of h landing back in the span
        e, cur = 1, h
        while cur not in span:
            cur = multiply(cur, h)
            e += 1
        h_pow_e = cur
        new_chars = []
        for chi in chars:
            base = chi[h_pow_e]
            for j in range(e):
                root = Fraction(base + j, e)
                ext = dict(chi)
                step = one
                for t in range(1, e):
                    step = multiply(step, h)
                    for b, ang in chi.items():
                        ext[multiply(b, step)] = (ang + t * root) % 1
                new_chars.append(ext)
        chars = new_chars
        new_span = dict(span)
        step = one
        for t in range(1, e):
            step = multiply(step, h)
            for b in span:
                new_span[multiply(b, step)] = Fraction(0)
        span = new_span
    if len(chars) != A.order:
        raise VerificationError("abelian character count != |A|")
    out = []
    for angle_map in chars:
        values = {g: unit(angle_map[g]) for g in A.elements}
        out.append(ClassFunction(A, values, label={"family": "abelian-hom"}, angles=angle_map))
    out.sort(key=_sorted_angle_key)
    for idx, chi in enumerate(out):
        chi.label["index"] = idx
    return out


def _check_multiplicative(chi: ClassFunction, sample_cap: int = 300):
    elems = chi.domain.sorted_elements()
    if len(elems) <= sample_cap:
        pairs = ((g, h) for g in elems for h in elems)
    else:
        stride = len(elems) // 17 + 1
        pairs = ((g, h) for g in elems[::stride] for h in elems[::stride])
    for g, h in pairs:
        if abs(chi(multiply(g, h)) - chi(g) * chi(h)) > ORTHO_TOL:
            raise VerificationError(f"character not multiplicative at ({g}, {h})")


def linear_characters_of_G(params: GroupParams) -> list:
    """The eight sign characters {a, u, v} -> {-1, 1}."""
    G = full_group(params)
    out = []
    for ra in (0, 1):
        for ru in (0, 1):
            for rv in (0, 1):
                angles = {
                    g: Fraction(g.s * ra + g.i * ru + g.x * rv, 2) % 1
                    for g in G.elements
                }
                values = {g: unit(angles[g]) for g in G.elements}
                chi = ClassFunction(
                    G,
                    values,
                    label={
                        "family": "linear",
                        "signs": ((-1) ** ra, (-1) ** ru, (-1) ** rv),
                        "trivial": (ra, ru, rv) == (0, 0, 0),
                    },
                    angles=angles,
                )
                _check_multiplicative(chi)
                out.append(chi)
    return out


def h2_linear_character(params: GroupParams, r: int, t: int) -> ClassFunction:
    """psi_{r,t} on H2 = <a, u>: a^s u^i -> e(rs / 2^(l-1)) e(ti / k)."""
    H2 = h2_subgroup(params)
    half = 2 ** (params.l - 1)
    angles = {
        g: (Fraction(r * g.s, half) + Fraction(t * g.i, params.k)) % 1
        for g in H2.elements
    }
    values = {g: unit(angles[g]) for g in H2.elements}
    return ClassFunction(
        H2, values, label={"family": "h2-linear", "r": r, "t": t}, angles=angles
    )


def h1_character(params: GroupParams, r: int, t: int) -> ClassFunction:
    """phi_{r,t} on H1 = <a, u^2>: a^s u^(2i) -> e(rs / 2^l) e(ti / (k/2))."""
    H1 = h1_subgroup(params)
    mod = 2 ** params.l
    half_k = params.k // 2
    angles = {
        g: (Fraction(r * g.s, mod) + Fraction(t * (g.i // 2), half_k)) % 1
        for g in H1.elements
    }
    values = {g: unit(angles[g]) for g in H1.elements}
    return ClassFunction(
        H1, values, label={"family": "h1-linear", "r": r, "t": t}, angles=angles
    )


def _assert_orthonormal(table: CharacterTable):
    irr = table.irreducibles
    for idx, chi in enumerate(irr):
        for jdx in range(idx, len(irr)):
            ip = inner_product(chi, irr[jdx])
            want = 1.0 if idx == jdx else 0.0
            if abs(ip - want) > ORTHO_TOL * table.group.order:
                raise VerificationError(
                    f"orthogonality failure: <irr[{idx}], irr[{jdx}]> = {ip}"
                )


@lru_cache(maxsize=None)
def irreducible_characters_of_G(params: GroupParams) -> CharacterTable:
    """8 linear + induced 2-dim family + induced 4-dim family."""
    from .structure import conjugacy_classes  # deferred: structure imports nothing back

    G = full_group(params)
    l, k = params.l, params.k
    half = 2 ** (l - 1)
    chars = linear_characters_of_G(params)

    # 2-dim: induce linear characters of H2 with phi^2 != 1, one per {phi, phi^-1}
    two_dim = []
    for r in range(half):
        for t in range(k):
            if (2 * r) % half == 0 and (2 * t) % k == 0:
                continue  # phi^2 = 1: induction is reducible
            if ((-r) % half, (-t) % k) < (r, t):
                continue  # phi^-1 induces the same irreducible
            phi = h2_linear_character(params, r, t)
            two_dim.append(
                induce(phi, G, label={"family": "2dim", "r": r, "t": t})
            )
    if len(two_dim) != 2 ** (l - 2) * k - 2:
        raise VerificationError(f"2-dim family count {len(two_dim)} is wrong")

    # 4-dim: induce characters of H1 with odd a-parameter, one per 4-orbit
    mod = 2 ** l
    half_k = k // 2
    four_dim = []
    for r in range(1, mod, 2):
        for t in range(half_k):
            orbit = {
                (r, t),
                ((params.n1 * r) % mod, t),
                ((-r) % mod, (-t) % half_k),
                ((params.n2 * r) % mod, (-t) % half_k),
            }
            if (r, t) != min(orbit):
                continue
            phi = h1_character(params, r, t)
            four_dim.append(
                induce(phi, G, label={"family": "4dim", "r": r, "t": t})
            )
    if len(four_dim) != 2 ** (l - 3) * half_k:
        raise VerificationError(f"4-dim family count {len(four_dim)} is wrong")

    irr = tuple(chars + two_dim + four_dim)
    if len(irr) != len(conjugacy_classes(params)):
        raise VerificationError("irreducible count != class count")
    if sum(round(chi.degree.real) ** 2 for chi in irr) != params.order:
        raise VerificationError("sum of squared degrees != |G|")
    table = CharacterTable(group=G, irreducibles=irr)
    _assert_orthonormal(table)
    return table


def _h2_centralizer_table(params: GroupParams, C: Subgroup) -> CharacterTable:
    """Irreducibles of <a, u>: 2^(l-1) k linear + 2^(l-3) k induced 2-dim."""
    l, k = params.l, params.k
    half = 2 ** (l - 1)
    mod = 2 ** l
    linear = [
        ClassFunction(
            C,
            {g: chi(g) for g in C.elements},
            label=dict(chi.label, family="h2-linear"),
            angles=chi.angles,
        )
        for chi in (
            h2_linear_character(params, r, t)
            for r in range(half)
            for t in range(k)
        )
    ]
    two_dim = []
    for r in range(1, mod, 2):
        for t in range(k // 2):
            if ((params.n1 * r) % mod, t) < (r, t):
                continue  # conjugate by u gives the same induced character
            phi = h1_character(params, r, t)
            chi = induce(
                phi, C, label={"family": "induced-in-centralizer", "r": r, "t": t}
            )
            if abs(inner_product(chi, chi) - 1) > DEDUPE_TOL:
                raise VerificationError(f"induced centralizer character ({r},{t}) not irreducible")
            two_dim.append(chi)
    irr = tuple(linear + two_dim)
    if sum(round(chi.degree.real) ** 2 for chi in irr) != C.order:
        raise VerificationError("centralizer table incomplete: sum d^2 != |C|")
    table = CharacterTable(group=C, irreducibles=irr)
    _assert_orthonormal(table)
    return table


def irreducible_characters_of_centralizer(params: GroupParams, C: Subgroup) -> CharacterTable:
    if C.order == params.order:
        return irreducible_characters_of_G(params)
    if C.is_abelian:
        return CharacterTable(group=C, irreducibles=tuple(abelian_characters(C)))
    if C.elements != h2_subgroup(params).elements:
        raise GroupError("nonabelian centralizer other than <a,u> cannot occur")
    return _h2_centralizer_table(params, C)


def angle_param(chi: ClassFunction, g: GroupElement, q: int) -> int:
    """Integer p with chi(g) = exp(2 pi i p / q), from the exact angle."""
    if chi.angles is None:
        raise GroupError("angle_param needs a linear character with exact angles")
    p = chi.angles[g] * q
    if p.denominator != 1:
        raise VerificationError(f"character value at {g} is not a {q}-th root of unity")
    return int(p) % q
