"""Higher Frobenius-Schur indicators nu_m for G-modules.

Two routes: the power-sum brute force (1/|G|) sum chi(g^m), and exact
integer case formulas per character family.  Both must agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .characters import ClassFunction
from .group import GroupParams, GroupError, enumerate_group, power
from .structure import VerificationError

INT_TOL = 1e-6


@dataclass(frozen=True)
class IndicatorValue:
    m: int
    raw: complex
    rounded: int
    paths: dict = None

    def __post_init__(self):
        if abs(self.raw - self.rounded) > INT_TOL:
            raise VerificationError(
                f"indicator {self.raw} at m={self.m} is not integral"
            )


@lru_cache(maxsize=None)
def power_table(params: GroupParams, m: int) -> dict:
    return {g: power(g, m) for g in enumerate_group(params)}


def nu_group_bruteforce(chi: ClassFunction, m: int) -> IndicatorValue:
    params = chi.domain.params
    if chi.domain.order != params.order:
        raise GroupError("group indicator needs a character of the full group")
    if m < 1:
        raise GroupError("m must be positive")
    powers = power_table(params, m)
    raw = sum(chi(powers[g]) for g in enumerate_group(params)) / params.order
    return IndicatorValue(m=m, raw=raw, rounded=round(raw.real), paths={"bruteforce": raw})


def nu_group_closed(params: GroupParams, label: dict, m: int) -> int:
    """Case formulas: linear / 2-dim psi_{r,t} / 4-dim phi_{r,t}."""
    family = label.get("family")
    l, k = params.l, params.k
    if family == "linear":
        return 1 if m % 2 == 0 or label["trivial"] else 0
    if family == "2dim":
        r, t = label["r"], label["t"]
        half = 2 ** (l - 1)
        trivial_power = (m * r) % half == 0 and (m * t) % k == 0
        return (1 if m % 2 == 0 else 0) + (1 if trivial_power else 0)
    if family == "4dim":
        r, t = label["r"], label["t"]
        if m % 2 == 1:
            return 0
        if m % 4 == 2:
            return 1
        # 4 | m: value is 2 + 2<phi_{mr, (m/2)t}, 1> over H1
        mod = 2 ** l
        if (m * r) % mod == 0 and ((m // 2) * t) % (k // 2) == 0:
            return 4
        return 2
    raise GroupError(f"character has no closed-form family label: {label}")
