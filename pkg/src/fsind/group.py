"""Exact arithmetic for the groups G = Z_{2^l} x| D_k.

Elements are kept in the canonical normal form a^s u^i v^x with
0 <= s < 2^l, 0 <= i < k, x in {0, 1}.  The defining relations are

    a^(2^l) = u^k = v^2 = 1,   u a u^-1 = a^n1,   v a v = a^n2,   v u v = u^-1

with n1 = 2^(l-1) + 1 and n2 = 2^(l-1) - 1.  Pushing a-powers left through
u^i v^x gives the closed multiplication rule used below, so no word
rewriting happens at runtime.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import product

DEFAULT_ORDER_CAP = 2 ** 16


class GroupError(ValueError):
    pass


@dataclass(frozen=True)
class GroupParams:
    l: int
    k: int
    n1: int
    n2: int
    order: int

    def __repr__(self):
        return f"GroupParams(l={self.l}, k={self.k})"


@dataclass(frozen=True)
class GroupElement:
    """a^s u^i v^x in canonical form; equality is fieldwise."""

    s: int
    i: int
    x: int
    params: GroupParams

    def __repr__(self):
        parts = []
        if self.s:
            parts.append(f"a^{self.s}" if self.s != 1 else "a")
        if self.i:
            parts.append(f"u^{self.i}" if self.i != 1 else "u")
        if self.x:
            parts.append("v")
        return "*".join(parts) if parts else "1"


def make_group(l: int, k: int, order_cap: int = DEFAULT_ORDER_CAP) -> GroupParams:
    """Validate (l, k) and derive n1, n2 and the group order."""
    if l < 3:
        raise GroupError(f"l must be at least 3, got {l}")
    if k % 4 != 0 or k <= 0:
        raise GroupError(f"k must be a positive multiple of 4, got {k}")
    order = 2 ** (l + 1) * k
    if order > order_cap:
        raise GroupError(f"group order {order} exceeds enumeration cap {order_cap}")
    n1 = 2 ** (l - 1) + 1
    n2 = 2 ** (l - 1) - 1
    mod = 2 ** l
    assert n1 * n1 % mod == 1 and n2 * n2 % mod == 1
    assert (n1 * n2) % mod == mod - 1
    return GroupParams(l=l, k=k, n1=n1, n2=n2, order=order)


def element(params: GroupParams, s: int, i: int, x: int) -> GroupElement:
    return GroupElement(s % 2 ** params.l, i % params.k, x % 2, params)


def identity(params: GroupParams) -> GroupElement:
    return GroupElement(0, 0, 0, params)


def gen_a(params: GroupParams) -> GroupElement:
    return GroupElement(1, 0, 0, params)


def gen_u(params: GroupParams) -> GroupElement:
    return GroupElement(0, 1, 0, params)


def gen_v(params: GroupParams) -> GroupElement:
    return GroupElement(0, 0, 1, params)


def _check_params(e1: GroupElement, e2: GroupElement):
    if e1.params != e2.params:
        raise GroupError("elements belong to different groups")


def multiply(e1: GroupElement, e2: GroupElement) -> GroupElement:
    """(a^s1 u^i1 v^x1)(a^s2 u^i2 v^x2) in canonical form."""
    _check_params(e1, e2)
    p = e1.params
    mod = 2 ** p.l
    # u^i a = a^(n1^i) u^i and v a = a^n2 v, so a^s2 passes left through
    # u^i1 v^x1 picking up the unit n1^i1 * n2^x1.
    unit = pow(p.n1, e1.i, mod) * pow(p.n2, e1.x, mod)
    s = (e1.s + unit * e2.s) % mod
    i = (e1.i + (e2.i if e1.x == 0 else -e2.i)) % p.k
    x = (e1.x + e2.x) % 2
    return GroupElement(s, i, x, p)


def inverse(e: GroupElement) -> GroupElement:
    p = e.params
    # e^-1 = v^-x u^-i a^-s, assembled with the multiply rule (v^-1 = v).
    out = GroupElement(0, 0, e.x, p)
    out = multiply(out, GroupElement(0, (-e.i) % p.k, 0, p))
    out = multiply(out, GroupElement((-e.s) % 2 ** p.l, 0, 0, p))
    return out


def power(e: GroupElement, m: int) -> GroupElement:
    """e^m by square-and-multiply; negative m goes through the inverse."""
    if m < 0:
        return power(inverse(e), -m)
    acc = identity(e.params)
    base = e
    while m:
        if m & 1:
            acc = multiply(acc, base)
        base = multiply(base, base)
        m >>= 1
    return acc


def conjugate(g: GroupElement, h: GroupElement) -> GroupElement:
    """h * g * h^-1."""
    return multiply(multiply(h, g), inverse(h))


def element_order(e: GroupElement) -> int:
    one = identity(e.params)
    cur = e
    n = 1
    while cur != one:
        cur = multiply(cur, e)
        n += 1
    return n


@lru_cache(maxsize=None)
def enumerate_group(params: GroupParams) -> tuple[GroupElement, ...]:
    """All elements, ordered lexicographically on (x, i, s)."""
    return tuple(
        GroupElement(s, i, x, params)
        for x, i, s in product(range(2), range(params.k), range(2 ** params.l))
    )


def generated_subgroup(gens) -> frozenset:
    """Closure of gens under multiplication and inversion."""
    gens = list(gens)
    if not gens:
        raise GroupError("need at least one generator")
    params = gens[0].params
    closure = {identity(params)}
    frontier = [identity(params)]
    gens = gens + [inverse(g) for g in gens]
    while frontier:
        cur = frontier.pop()
        for g in gens:
            nxt = multiply(cur, g)
            if nxt not in closure:
                closure.add(nxt)
                frontier.append(nxt)
    return frozenset(closure)


@lru_cache(maxsize=None)
def group_exponent(params: GroupParams) -> int:
    return math.lcm(*(element_order(e) for e in enumerate_group(params)))
