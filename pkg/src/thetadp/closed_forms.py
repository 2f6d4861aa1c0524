"""Exact closed forms for theta graphs.

Every quotient is evaluated as an exact integer division that raises if a
remainder appears; divisibility holds for all valid inputs, so a remainder
means a bug upstream.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import prod

from thetadp.arith import ceil_mth_root, exact_div, pair_counts
from thetadp.theta import ThetaSpec


class Case(str, enum.Enum):
    THETA3_I = "theta3:opposite-parity"
    THETA3_II = "theta3:mixed-parity"
    THETA3_III = "theta3:same-parity"
    DUAL_SAME = "dual:t=1"
    DUAL_TWISTED = "dual:t>1"
    ZERO = "zero:m<=2"


@dataclass(frozen=True)
class FormulaResult:
    value: int
    case: Case

    def __int__(self) -> int:
        return self.value


def chromatic_poly_cycle(n: int, m: int) -> int:
    """``P(C_n, m) = (m-1)^n + (-1)^n (m-1)``; valid down to ``n = 1``."""
    if n < 1:
        raise ValueError(f"cycle length must be positive, got {n}")
    return (m - 1) ** n + (-1) ** n * (m - 1)


def chromatic_poly_theta(spec: ThetaSpec, m: int) -> int:
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    if m == 1:
        return 0
    n = spec.n
    first = exact_div(
        prod(chromatic_poly_cycle(l + 1, m) for l in spec.lengths), (m * (m - 1)) ** (n - 1)
    )
    second = exact_div(prod(chromatic_poly_cycle(l, m) for l in spec.lengths), m ** (n - 1))
    return first + second


def _theta3_case(spec: ThetaSpec) -> Case:
    p1, p2, p3 = (x % 2 for x in spec.lengths)
    if p1 == p2 == p3:
        return Case.THETA3_III
    if p2 != p1 and p3 != p1:
        return Case.THETA3_I
    return Case.THETA3_II


def dp_theta3(spec: ThetaSpec, m: int) -> FormulaResult:
    """DP color function of a theta graph (exactly three paths)."""
    if spec.n != 3:
        raise ValueError(f"dp_theta3 needs exactly 3 paths, got {spec.n}")
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    l1, l2, l3 = spec.lengths
    case = _theta3_case(spec)
    if case is Case.THETA3_II and (l1 % 2 != l3 % 2 or l1 % 2 == l2 % 2):
        # ThetaSpec ordering already guarantees this; kept as a guard.
        raise ValueError(f"{spec} is not in canonical order")
    if m == 1 or (m == 2 and case is not Case.THETA3_II):
        return FormulaResult(0, Case.ZERO)
    q = m - 1
    total = l1 + l2 + l3
    if case is Case.THETA3_I:
        value = chromatic_poly_theta(spec, m)
    elif case is Case.THETA3_II:
        value = exact_div(
            q**total + q**l1 - q**l2 - q ** (l3 + 1) + (-1) ** (l2 + 1) * (m - 2), m
        )
    else:
        value = exact_div(q**total - q**l1 - q**l2 - q**l3 + 2 * (-1) ** total, m)
    return FormulaResult(value, case)


def dual_dp_generalized(spec: ThetaSpec, m: int) -> FormulaResult:
    """Dual DP color function (maximum over full covers) for any ``n``."""
    if m < 2:
        raise ValueError(f"m must be at least 2, got {m}")
    counts = [pair_counts(l, m) for l in spec.lengths]
    s = [c.aligned for c in counts]
    o = [c.split for c in counts]
    t = spec.t
    twisted = range(1, t)  # 0-based indices 2..t
    untwisted = [0, *range(t, spec.n)]
    big_o = prod(o)
    # m*S/prod(s_2..s_t)*prod(o_2..o_t) written without division (s_i may be 0 at m=2)
    left = m * prod(s[i] for i in untwisted) * prod(o[i] for i in twisted)
    right = m * prod(o[i] for i in untwisted) * prod(s[i] for i in twisted)
    value = left + m * (m - 2) * big_o + right
    return FormulaResult(value, Case.DUAL_SAME if t == 1 else Case.DUAL_TWISTED)


def amgm_radicand(spec: ThetaSpec, m: int) -> int:
    """``m^(2m) * S * O^(m-1)``: the m-th power of the AM-GM lower bound."""
    counts = [pair_counts(l, m) for l in spec.lengths]
    if any(c.split == 0 for c in counts):
        raise ArithmeticError(f"split count vanishes for {spec} at m={m}")
    big_s = prod(c.aligned for c in counts)
    big_o = prod(c.split for c in counts)
    return m ** (2 * m) * big_s * big_o ** (m - 1)


def amgm_bound(spec: ThetaSpec, m: int) -> int:
    """Ceiling of the AM-GM lower bound on the DP color function, exactly."""
    if m < 3:
        raise ValueError(f"the AM-GM bound needs m >= 3, got {m}")
    return ceil_mth_root(m, amgm_radicand(spec, m))


@dataclass(frozen=True)
class SufficiencyReport:
    spec: ThetaSpec
    m: int
    bound: int
    chromatic: int

    @property
    def holds(self) -> bool:
        return self.bound == self.chromatic

    def __bool__(self) -> bool:
        return self.holds


def sufficiency_check(spec: ThetaSpec, m: int) -> SufficiencyReport:
    """Whether the AM-GM bound alone certifies ``P_DP(G, m) = P(G, m)``."""
    return SufficiencyReport(spec, m, amgm_bound(spec, m), chromatic_poly_theta(spec, m))
