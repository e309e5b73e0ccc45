"""Systematic listing of feasible parameter sets, keyed on the positive eigenvalue q."""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from .params import ParamSet, derive_from_qc

COLUMNS = ("n", "k", "c", "s", "ell", "lambda1", "lambda2", "m1", "m2", "K1", "K2")


@dataclass(frozen=True)
class DivisibilityConstants:
    """Integers in q with n = A*c + B + D/c and m1 = A*c + E + (F*c + q*D)/(c*(c + 2q))."""

    q: int
    A: int
    B: int
    D: int
    E: int
    F: int

    @classmethod
    def for_q(cls, q: int) -> DivisibilityConstants:
        return cls(
            q=q,
            A=q * q + 3 * q + 2,
            B=2 * q**3 + 3 * q * q - q,
            D=q**4 - q * q,
            E=q**3 - 4 * q - 2,
            F=q * (q + 1) * (q * q + 2 * q + 3),
        )

    def divisibility_ok(self, c: int) -> bool:
        """Necessary conditions on c: c | D and (c + 2q) | F + q*D/c."""
        if self.D % c:
            return False
        return (self.F + self.q * (self.D // c)) % (c + 2 * self.q) == 0


def n_bounds(q: int) -> tuple[int, int]:
    """Exact ``(n_min, n_max)`` for SRNT graphs with positive eigenvalue q."""
    if q < 1:
        raise ValueError(f"q must be positive, got {q}")
    B = 2 * q**3 + 3 * q * q - q
    # square of 2q(q+1)sqrt(q^2+q-2)
    V = 4 * q * q * (q + 1) ** 2 * (q * q + q - 2)
    t = isqrt(V)
    if t * t != V:
        t += 1
    return B + t, q * q * (q + 3) ** 2


def enumerate_for_q(q: int) -> list[ParamSet]:
    if q < 1:
        raise ValueError(f"q must be positive, got {q}")
    consts = DivisibilityConstants.for_q(q)
    rows = []
    for c in range(1, q * (q + 1) + 1):
        # q = 1 gives D = 0, which every c divides
        if not consts.divisibility_ok(c):
            continue
        report = derive_from_qc(q, c)
        if report.feasible:
            rows.append(report.params)
    rows.sort(key=lambda p: (p.n, p.k))
    return rows


def enumerate_up_to_n(N: int) -> list[ParamSet]:
    if N < 10:
        raise ValueError(f"N must be at least 10, got {N}")
    rows = []
    q = 1
    while n_bounds(q)[0] <= N:
        rows.extend(p for p in enumerate_for_q(q) if p.n <= N)
        q += 1
    rows.sort(key=lambda p: (p.n, p.k))
    return rows
