"""Center, conjugacy classes and centralizers of G = Z_{2^l} x| D_k.

Everything here is computed twice: once by brute force over the full
element list, and once from the closed-form descriptions (center
generators, per-type class sizes and counts, centralizer generating
sets).  Any disagreement raises VerificationError -- the artifact is a
verification instrument, so a mismatch is a bug, not a warning.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .group import (
    GroupElement,
    GroupParams,
    GroupError,
    conjugate,
    element,
    element_order,
    enumerate_group,
    gen_a,
    gen_u,
    gen_v,
    generated_subgroup,
    identity,
    inverse,
    multiply,
)

CENTRAL = "Central"
TYPE_I_EVEN = "TypeI-even"
TYPE_I_ODD = "TypeI-odd"
TYPE_II = "TypeII"
TYPE_III = "TypeIII"


class VerificationError(RuntimeError):
    """Brute force and closed form disagree."""


def element_key(e: GroupElement):
    """Deterministic enumeration order: lexicographic on (x, i, s)."""
    return (e.x, e.i, e.s)


@dataclass(frozen=True)
class Subgroup:
    params: GroupParams
    elements: frozenset
    generators: tuple
    is_abelian: bool

    @property
    def order(self) -> int:
        return len(self.elements)

    def sorted_elements(self) -> list:
        return sorted(self.elements, key=element_key)

    def __contains__(self, e: GroupElement) -> bool:
        return e in self.elements


def subgroup_from_generators(gens) -> Subgroup:
    gens = tuple(gens)
    elems = generated_subgroup(gens)
    abelian = all(
        multiply(g, h) == multiply(h, g) for g in elems for h in elems
    )
    params = gens[0].params
    if params.order % len(elems) != 0:
        raise VerificationError("subgroup order does not divide |G|")
    return Subgroup(params=params, elements=elems, generators=gens, is_abelian=abelian)


@dataclass(frozen=True)
class ConjugacyClass:
    representative: GroupElement
    members: tuple  # discovery order, members[0] == representative
    type_tag: str
    coset_reps: tuple  # coset_reps[j] * rep * coset_reps[j]^-1 == members[j]

    @property
    def size(self) -> int:
        return len(self.members)

    def member_set(self) -> frozenset:
        return frozenset(self.members)


def class_type(params: GroupParams, rep: GroupElement, central_set) -> str:
    if rep in central_set:
        return CENTRAL
    if rep.x == 1:
        return TYPE_III
    if rep.i % 2 == 1:
        return TYPE_II
    return TYPE_I_EVEN if rep.s % 2 == 0 else TYPE_I_ODD


@lru_cache(maxsize=None)
def center(params: GroupParams) -> Subgroup:
    """Z(G) = <a^(2^(l-1)), u^(k/2)>, checked against brute force."""
    everything = enumerate_group(params)
    brute = frozenset(
        g for g in everything
        if all(multiply(g, h) == multiply(h, g) for h in everything)
    )
    half_a = element(params, 2 ** (params.l - 1), 0, 0)
    half_u = element(params, 0, params.k // 2, 0)
    closed = generated_subgroup([half_a, half_u])
    if brute != closed or len(brute) != 4:
        raise VerificationError(
            f"center mismatch at (l={params.l}, k={params.k}): "
            f"brute order {len(brute)}, closed order {len(closed)}"
        )
    return Subgroup(
        params=params,
        elements=brute,
        generators=(half_a, half_u),
        is_abelian=True,
    )


def _closed_form_class(params: GroupParams, rep: GroupElement) -> frozenset:
    """Member set from the explicit descriptions, per type of rep."""
    mod = 2 ** params.l
    k = params.k
    s, i = rep.s, rep.i
    if rep.x == 0:
        if i % 2 == 0:
            raw = [(s, i), (params.n1 * s, i), (params.n2 * s, -i), (-s, -i)]
        else:
            raw = [(s, i), (s + mod // 2, i), (-s, -i), (-s + mod // 2, -i)]
        return frozenset(element(params, a, b, 0) for a, b in raw)
    members = set()
    for r in range(mod // 2):
        for t in range(k // 4):
            members.add(element(params, 2 * r + s, 4 * t + i, 1))
            members.add(element(params, 2 * r + params.n2 * s, 4 * t - i, 1))
            members.add(element(params, 2 * r - s, 4 * t + 2 - i, 1))
            members.add(element(params, 2 * r + params.n1 * s, 4 * t + 2 + i, 1))
    return frozenset(members)


def _check_class_census(params: GroupParams, classes) -> None:
    l, k = params.l, params.k
    expected_total = 6 + 5 * 2 ** (l - 3) * (k // 2)
    if len(classes) != expected_total:
        raise VerificationError(
            f"class count {len(classes)} != {expected_total} at (l={l}, k={k})"
        )
    expected = {
        CENTRAL: (4, {1}),
        TYPE_I_EVEN: (2 ** (l - 3) * k - 2, {2}),
        TYPE_I_ODD: (2 ** (l - 3) * (k // 2), {4}),
        TYPE_II: (2 ** (l - 3) * k, {4}),
        TYPE_III: (4, {2 ** (l - 2) * k}),
    }
    for tag, (count, sizes) in expected.items():
        got = [c for c in classes if c.type_tag == tag]
        if len(got) != count or any(c.size not in sizes for c in got):
            raise VerificationError(
                f"class census for {tag} at (l={l}, k={k}): "
                f"expected {count} classes of sizes {sizes}, got "
                f"{[(c.representative, c.size) for c in got]}"
            )
    for c in classes:
        if c.type_tag is CENTRAL:
            continue
        closed = _closed_form_class(params, c.representative)
        if closed != c.member_set():
            raise VerificationError(
                f"closed-form class of {c.representative} disagrees with orbit"
            )


@lru_cache(maxsize=None)
def conjugacy_classes(params: GroupParams) -> tuple:
    """Orbit partition of G, with per-type closed-form census checks."""
    everything = enumerate_group(params)
    central_set = center(params).elements
    seen = set()
    classes = []
    for rep in everything:  # enumeration order makes rep minimal in its class
        if rep in seen:
            continue
        members = [rep]
        coset_reps = [identity(params)]
        found = {rep}
        for h in everything:
            t = conjugate(rep, h)
            if t not in found:
                found.add(t)
                members.append(t)
                coset_reps.append(h)
        seen |= found
        classes.append(
            ConjugacyClass(
                representative=rep,
                members=tuple(members),
                type_tag=class_type(params, rep, central_set),
                coset_reps=tuple(coset_reps),
            )
        )
    if sum(c.size for c in classes) != params.order:
        raise VerificationError("class equation violated")
    _check_class_census(params, classes)
    return tuple(classes)


def _closed_form_centralizer_gens(params: GroupParams, g: GroupElement, tag: str):
    a, u = gen_a(params), gen_u(params)
    aa = element(params, 2, 0, 0)
    if tag == TYPE_I_EVEN:
        return (a, u)
    if tag == TYPE_I_ODD:
        return (a, multiply(u, u))
    if tag == TYPE_II:
        if g.s % 2 == 0:
            return (aa, u)
        return (aa, multiply(a, u))
    if tag == TYPE_III:
        half_a = element(params, 2 ** (params.l - 1), 0, 0)
        half_u = element(params, 0, params.k // 2, 0)
        return (half_a, half_u, g)
    raise GroupError(f"unexpected type tag {tag}")


@lru_cache(maxsize=None)
def centralizer(params: GroupParams, g: GroupElement) -> Subgroup:
    """C_G(g), brute force checked against the closed-form generators."""
    everything = enumerate_group(params)
    brute = frozenset(
        h for h in everything if multiply(h, g) == multiply(g, h)
    )
    central = center(params)
    if g in central.elements:
        full = subgroup_from_generators((gen_a(params), gen_u(params), gen_v(params)))
        if brute != full.elements:
            raise VerificationError("central element with proper centralizer")
        return full
    tag = class_type(params, g, central.elements)
    gens = _closed_form_centralizer_gens(params, g, tag)
    sub = subgroup_from_generators(gens)
    if sub.elements != brute:
        raise VerificationError(
            f"centralizer of {g} ({tag}): closed form disagrees with brute force"
        )
    if tag == TYPE_III and (sub.order != 8 or not sub.is_abelian):
        raise VerificationError(f"TypeIII centralizer of {g} is not abelian of order 8")
    if tag == TYPE_II and not sub.is_abelian:
        raise VerificationError(f"TypeII centralizer of {g} is not abelian")
    return sub


def is_completely_real(params: GroupParams) -> bool:
    """Every element conjugate to its inverse?"""
    class_of = {}
    for c in conjugacy_classes(params):
        for m in c.members:
            class_of[m] = c.representative
    return all(
        class_of[g] == class_of[inverse(g)] for g in enumerate_group(params)
    )


def is_generated_by_involutions(params: GroupParams) -> bool:
    """v, uv, auv are involutions generating all of G."""
    v = gen_v(params)
    uv = element(params, 0, 1, 1)
    auv = element(params, 1, 1, 1)
    gens = (v, uv, auv)
    if any(element_order(g) != 2 for g in gens):
        return False
    return generated_subgroup(gens) == frozenset(enumerate_group(params))
