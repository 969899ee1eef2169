"""
Search coefficient streams for congruences F(an + b) = 0 (mod m).

Everything reported here is evidence up to the expansion order, never a
proof: the status vocabulary is ``candidate`` / ``verified-to-order``.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from math import gcd

from .errors import InsufficientOrder
from .series import IntSeries

CANDIDATE = "candidate"
VERIFIED = "verified-to-order"


@dataclass(frozen=True)
class CongruenceClaim:
    step: int
    residue: int
    modulus: int
    evidence: int = 0
    status: str = CANDIDATE

    def __post_init__(self):
        if self.step < 1:
            raise ValueError(f"step must be >= 1, got {self.step}")
        if not 0 <= self.residue < self.step:
            raise ValueError(f"residue {self.residue} not in [0, {self.step})")
        if self.modulus < 2:
            raise ValueError(f"modulus must be >= 2, got {self.modulus}")
        if self.status not in (CANDIDATE, VERIFIED):
            raise ValueError(f"unknown status {self.status!r}")

    def implies(self, other: "CongruenceClaim") -> bool:
        """True if ``other`` is a refinement of this claim (same or weaker modulus)."""
        return (
            other.step % self.step == 0
            and (other.residue - self.residue) % self.step == 0
            and self.modulus % other.modulus == 0
        )

    def as_row(self) -> dict:
        return {
            "step": self.step,
            "residue": self.residue,
            "modulus": self.modulus,
            "evidence": self.evidence,
            "status": self.status,
        }


def check_claim(series: IntSeries, claim: CongruenceClaim) -> CongruenceClaim:
    """Test the claim against every in-range coefficient."""
    values = series.coeffs[claim.residue :: claim.step]
    if not values:
        raise InsufficientOrder(
            f"no index {claim.step}n+{claim.residue} within order {series.order}"
        )
    ok = all(v % claim.modulus == 0 for v in values)
    return replace(claim, evidence=len(values), status=VERIFIED if ok else CANDIDATE)


def _progressions(series, max_step, min_evidence):
    if max_step < 1:
        raise ValueError("max_step must be >= 1")
    if min_evidence < 2:
        raise ValueError("min_evidence must be >= 2")
    if series.order < max_step * min_evidence:
        raise InsufficientOrder(
            f"order {series.order} < max_step * min_evidence = {max_step * min_evidence}"
        )
    for a in range(1, max_step + 1):
        for b in range(a):
            values = series.coeffs[b::a]
            if len(values) >= min_evidence:
                yield a, b, values


def scan(series: IntSeries, max_step: int, min_evidence: int) -> list:
    """Strongest congruence per progression (step <= max_step), refinements dropped.

    Output is ordered by (step, residue). Progressions that vanish
    identically are left out; see ``zero_progressions``.
    """
    reported: list[CongruenceClaim] = []
    for a, b, values in _progressions(series, max_step, min_evidence):
        m = gcd(*values)
        if m == 0 or m == 1:
            continue
        claim = CongruenceClaim(a, b, m, len(values), VERIFIED)
        if not any(r.implies(claim) for r in reported):
            reported.append(claim)
    return reported


def zero_progressions(series: IntSeries, max_step: int, min_evidence: int) -> list:
    """(step, residue, evidence) for progressions that are identically zero."""
    found = []
    for a, b, values in _progressions(series, max_step, min_evidence):
        if any(values):
            continue
        if any(a % s == 0 and (b - r) % s == 0 for s, r, _ in found):
            continue
        found.append((a, b, len(values)))
    return found
