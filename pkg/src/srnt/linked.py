"""Parameters of linked pairs (X, X'), where X' is the second subconstituent of X at every vertex."""

from __future__ import annotations

from dataclasses import dataclass, fields

from .params import ParamSet, derive_from_kc, exact_sqrt

KNOWN_PAIRS = {1: ("Clebsch", "Petersen"), 2: ("Higman-Sims", "M22")}


class NotLinkedPairCandidate(ValueError):
    pass


class ClosedFormMismatch(ArithmeticError):
    pass


@dataclass(frozen=True)
class LinkedPairParams:
    q: int
    unprimed: ParamSet
    primed: ParamSet
    r: int
    discriminant: int

    @property
    def existence(self) -> str:
        if self.q in KNOWN_PAIRS:
            return "known: %s/%s" % KNOWN_PAIRS[self.q]
        return "open existence"


def _closed_forms(q: int) -> tuple[ParamSet, ParamSet]:
    a = q * q + 3 * q + 1
    b = q * q + 2 * q - 1
    d = q * q + q - 1
    x = ParamSet(
        k=q * a, c=q * (q + 1), q=q, s=q * (q + 3), ell=b * a, n=q * q * (q + 3) ** 2,
        lambda2=-q * (q + 2), m1=b * a, m2=q * a,
        K1=q * q * (q + 1) * (q + 2) * (q + 3) * d, K2=0,
    )
    xp = ParamSet(
        k=q * q * (q + 2), c=q * q, q=q, s=q * (q + 2), ell=(q + 1) * (q + 2) * d, n=b * a,
        lambda2=-q * (q + 1), m1=a * d, m2=(q + 1) * b,
        K1=q * q * (q + 1) ** 2 * (q**3 + 2 * q * q - q - 1), K2=q * q * d,
    )
    return x, xp


def linked_pair_family(q: int) -> LinkedPairParams:
    """Both parameter sets of the linked pair for ``q``, from closed forms, re-derived independently."""
    if q < 1:
        raise ValueError(f"q must be positive, got {q}")
    x, xp = _closed_forms(q)
    for label, closed in (("X", x), ("X'", xp)):
        report = derive_from_kc(closed.k, closed.c)
        if not report.feasible:
            raise ClosedFormMismatch(f"{label} for q={q} is infeasible: {report.failures}")
        diffs = [f.name for f in fields(ParamSet)
                 if getattr(closed, f.name) != getattr(report.params, f.name)]
        if diffs:
            raise ClosedFormMismatch(f"{label} for q={q}: closed form differs in {diffs}")
    c = x.c
    return LinkedPairParams(q=q, unprimed=x, primed=xp, r=q, discriminant=(c - 1) ** 2 * (4 * c + 1))


def solve_k_for_c(c: int) -> int | None:
    """Degree of a linked-pair graph with the given c, or None.

    A root exists only when 4c + 1 is an odd square (2r+1)**2, i.e. c = r(r+1).
    (c = 1 makes the discriminant vanish, but 4c + 1 = 5 is not a square and
    the double root k = 2 is out of range anyway.)
    """
    if c < 1:
        raise ValueError(f"c must be positive, got {c}")
    if exact_sqrt(4 * c + 1) is None:
        return None
    disc = (c - 1) ** 2 * (4 * c + 1)
    root = exact_sqrt(disc)
    num = 3 * c + 1 + root
    if num % 2:
        return None
    k = num // 2
    assert k * k - (3 * c + 1) * k - c * (c * c - 4 * c - 1) == 0
    return k


def subconstituent_params(k: int, c: int) -> tuple[int, int, int]:
    """``(k', c', q)`` for the would-be partner X' of a feasible (k, c).

    Raises :class:`NotLinkedPairCandidate` when q is not a positive integer
    or c' = c - q < 1.
    """
    report = derive_from_kc(k, c)
    if not report.feasible:
        raise ValueError(f"(k={k}, c={c}) is not feasible: {report.failures}")
    num = c * c * (k - 2)
    den = k * k - (c + 1) * k + c * (c - 1)
    if den == 0:
        raise ZeroDivisionError(f"degenerate denominator for k={k}, c={c}")
    if num % den:
        raise NotLinkedPairCandidate(f"q = {num}/{den} is not an integer for k={k}, c={c}")
    q = num // den
    if q < 1 or c - q < 1:
        raise NotLinkedPairCandidate(f"q = {q} gives c' = {c - q} for k={k}, c={c}")
    return k - c, c - q, q
