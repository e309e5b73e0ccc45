"""Exact parameter algebra for strongly regular triangle-free graphs.

Everything here is integer or :class:`fractions.Fraction` arithmetic. Python
integers are unbounded, so there is no silent wraparound to guard against.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt
from typing import Union

Rational = Union[int, Fraction]

KNOWN_SIX = frozenset({(3, 1), (5, 2), (7, 1), (10, 2), (16, 4), (22, 6)})

# failure identifiers, in reporting order
NON_SQUARE_S = "non-square-s"
PARITY = "parity"
ELL_NOT_INTEGER = "ell-not-integer"
N_NOT_INTEGER = "n-not-integer"
M1_NOT_INTEGER = "m1-not-integer"
KREIN_1 = "krein-1"
KREIN_2 = "krein-2"
DEGREE_BOUND = "degree-bound"


class KreinFormMismatch(ArithmeticError):
    """The displayed algebraic forms of a Krein parameter disagree."""


@dataclass(frozen=True)
class ParamSet:
    k: int
    c: int
    q: int
    s: int
    ell: int
    n: int
    lambda2: int
    m1: int
    m2: int
    K1: Rational
    K2: Rational

    @property
    def lambda1(self) -> int:
        return self.q

    def as_row(self) -> tuple:
        """Values in table order: n, k, c, s, ell, lambda1, lambda2, m1, m2, K1, K2."""
        return (self.n, self.k, self.c, self.s, self.ell, self.q, self.lambda2,
                self.m1, self.m2, self.K1, self.K2)


@dataclass(frozen=True)
class FeasibilityReport:
    k: int
    c: int
    failures: tuple[str, ...]
    params: ParamSet | None = None
    # whatever could be evaluated, feasible or not (exact rationals)
    values: dict = field(default_factory=dict, compare=False)

    @property
    def feasible(self) -> bool:
        return not self.failures

    @property
    def verdict(self) -> str:
        return "feasible" if self.feasible else "infeasible"


def exact_sqrt(x: int) -> int | None:
    """Return the integer square root of ``x`` if it is a perfect square, else None."""
    if x < 0:
        return None
    t = isqrt(x)
    return t if t * t == x else None


def _normalize(x: Fraction) -> Rational:
    return x.numerator if x.denominator == 1 else x


def check_preconditions(k: int, c: int) -> None:
    if not (isinstance(k, int) and isinstance(c, int)):
        raise TypeError("k and c must be integers")
    if k < 3 or c < 1 or c >= k:
        raise ValueError(f"need k >= 3 and k > c >= 1, got k={k}, c={c}")


def krein_params(k: int, c: int, s: int, m1: Rational, m2: Rational) -> tuple[Rational, Rational]:
    """Krein parameters ``(K1, K2)`` from the s,c polynomial form.

    Every other closed form (in k and the eigenvalues, in the
    ``lambda**2 + lambda - c`` factor, and in the multiplicities) is evaluated
    too, and :class:`KreinFormMismatch` is raised unless all agree.
    """
    if k == 0 or c == 0 or s == 0:
        raise ValueError("k, c and s must be nonzero")
    l1 = Fraction(s - c, 2)
    l2 = Fraction(-s - c, 2)
    m1 = Fraction(m1)
    m2 = Fraction(m2)

    k1_forms = {
        "s,c": Fraction((s + c) * (s - c + 2) * ((s + c) ** 2 - 2 * (s + 3 * c)), 16),
        "k,lambda": l1 * l2**2 - 2 * l1**2 * l2 - l1**2 - k * l1 + k * l2**2 + 2 * k * l2,
        "k,lambda factored": (k + l1) * (l2 + 1) ** 2 - (l1 + 1) * (k + l1 + 2 * l1 * l2),
        "lambda2 quadratic": Fraction((s + c) * (s - c + 2), 4) * (l2**2 + l2 - c),
        "multiplicity": Fraction(c * s * (s + c), 2) * (m1 / k - 1),
    }
    k2_forms = {
        "s,c": Fraction((s - c) * (s + c - 2) * ((s - c) ** 2 + 2 * (s - 3 * c)), 16),
        "k,lambda": l1**2 * l2 - 2 * l1 * l2**2 - l2**2 - k * l2 + k * l1**2 + 2 * k * l1,
        "k,lambda factored": (k + l2) * (l1 + 1) ** 2 - (l2 + 1) * (k + l2 + 2 * l1 * l2),
        "lambda1 quadratic": Fraction((s - c) * (s + c - 2), 4) * (l1**2 + l1 - c),
        "multiplicity": Fraction(c * s * (s - c), 2) * (m2 / k - 1),
    }
    for name, forms in (("K1", k1_forms), ("K2", k2_forms)):
        if len(set(forms.values())) != 1:
            raise KreinFormMismatch(f"{name} forms disagree for k={k}, c={c}, s={s}: {forms}")
    return _normalize(k1_forms["s,c"]), _normalize(k2_forms["s,c"])


def degree_bound_check(k: int, c: int) -> str:
    """Return ``"pass"``, ``"fail-cor2"`` (k < 3c-1) or ``"fail-cor4"`` (4k < 14c+25, unknown pair)."""
    check_preconditions(k, c)
    if k < 3 * c - 1:
        return "fail-cor2"
    if (k, c) in KNOWN_SIX:
        return "pass"
    if 4 * k < 14 * c + 25:
        return "fail-cor4"
    return "pass"


def derive_from_kc(k: int, c: int) -> FeasibilityReport:
    check_preconditions(k, c)
    failures = []
    values: dict = {"k": k, "c": c}

    disc = c * c + 4 * (k - c)
    s = exact_sqrt(disc)
    if s is None:
        failures.append(NON_SQUARE_S)
    elif (s - c) % 2:
        failures.append(PARITY)

    if (k * (k - 1)) % c:
        failures.append(ELL_NOT_INTEGER)
        failures.append(N_NOT_INTEGER)
    ell = Fraction(k * (k - 1), c)
    n = 1 + k + ell
    values.update(ell=_normalize(ell), n=_normalize(n))

    # s-dependent conditions can only be evaluated for integer s
    if s is not None:
        num1 = k * ((k - 1 + c) * (s + c) - 2 * c)
        if num1 % (2 * c * s):
            failures.append(M1_NOT_INTEGER)
        m1 = Fraction(num1, 2 * c * s)
        m2 = Fraction(k * ((k - 1 + c) * (s - c) + 2 * c), 2 * c * s)
        K1, K2 = krein_params(k, c, s, m1, m2)
        if K1 < 0:
            failures.append(KREIN_1)
        if K2 < 0:
            failures.append(KREIN_2)
        values.update(s=s, q=_normalize(Fraction(s - c, 2)), lambda2=_normalize(Fraction(-s - c, 2)),
                      m1=_normalize(m1), m2=_normalize(m2), K1=K1, K2=K2)

    if degree_bound_check(k, c) != "pass":
        failures.append(DEGREE_BOUND)

    params = None
    if not failures:
        params = ParamSet(
            k=k, c=c, q=(s - c) // 2, s=s, ell=int(ell), n=int(n), lambda2=-(s + c) // 2,
            m1=int(values["m1"]), m2=int(values["m2"]), K1=values["K1"], K2=values["K2"],
        )
    return FeasibilityReport(k=k, c=c, failures=tuple(failures), params=params, values=values)


def derive_from_qc(q: int, c: int) -> FeasibilityReport:
    """Same as :func:`derive_from_kc` with the degree given through the positive eigenvalue ``q``."""
    if q < 1 or c < 1:
        raise ValueError(f"need q >= 1 and c >= 1, got q={q}, c={c}")
    return derive_from_kc((q + 1) * c + q * q, c)


def closed_forms_at(k: int, c: int, s: Rational) -> dict[str, Fraction]:
    """Eigenvalues and multiplicities evaluated at an arbitrary (possibly negative) ``s``."""
    s = Fraction(s)
    return {
        "k": (s * s - c * c) / 4 + c,
        "lambda1": (s - c) / 2,
        "lambda2": (-s - c) / 2,
        "m1": Fraction(k) / (2 * c * s) * ((k - 1 + c) * (s + c) - 2 * c),
        "m2": Fraction(k) / (2 * c * s) * ((k - 1 + c) * (s - c) + 2 * c),
    }
