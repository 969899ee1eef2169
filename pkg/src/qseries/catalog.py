"""
Catalog of identities for the 3-core families, plus the engine that checks
them coefficient by coefficient.

Notation in the statements: fk = (q^k; q^k)_inf, B3, A3, a3 are the 3-core
triple, pair and single counts, omega/v/u the representation numbers of
x-block + 3*y-block forms with 3, 2, 1 variables per block.

Three kinds of entry:

* ``series-equality``: lhs(N) and rhs(N) agree through q^N. Dissections
  such as sum B3(6n+4) q^n are built by expanding the base series far
  enough that the dissected series itself reaches order N.
* ``coefficient-relation``: F(an+b) equals a linear combination of
  G(a_i n + b_i), checked for every n with an + b <= N.
* ``congruence``: (lhs - rhs)[n] is divisible by m for every n <= N lying
  in one of the listed progressions (step, residue, modulus).
"""

from __future__ import annotations

import re
import time
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

from . import series as S
from .errors import BuildFailure
from .eta import bracket, eta_quotient, jacobi_cube, p_series, phi, psi, euler_power
from .partitions import A3_PAIR, A3_SINGLE, B3, divisor_delta, family_series
from .quadforms import omega_series
from .series import IntSeries

Builder = Callable[[int], IntSeries]

KINDS = ("series-equality", "coefficient-relation", "congruence")

# base ids, one per identity or family; every catalog entry belongs to one
INVENTORY = (
    "lemid1", "lemid2", "lemid3", "lemid4", "lemid05", "lemid5",
    "thm1id1", "thm1id2", "mid", "equi",
    "f134", "f153", "f3216", "f3319",
    "B32n", "B32n1", "rec1", "rec2", "re1", "re2", "cor1",
    "jacobi", "Pq", "midid", "recipro",
    "B3n0", "B3n1", "B3n2", "b33", "b33cor",
    "B36n", "B36n4", "phipsi", "Pqexp", "B3nexp", "B3n1exp",
    "mod24", "fap", "c5", "mod120",
    "wgen", "w3n2", "w6n5", "omega65",
    "w6n2", "w12n2", "omega122",
    "w3n1", "w6n4", "omega1210",
    "go", "bb41", "hs", "u124", "lin86", "linA3", "bn22k",
)

FAMILY_KS = range(1, 7)
HS_PARAMS = ((2, 2), (5, 2))
BN_KS = (1, 2)
FAP_PARAMS = ((1, 3), (1, 5), (2, 5), (1, 7))


@dataclass(frozen=True)
class IdentityEntry:
    id: str
    description: str
    lhs: Builder
    rhs: Builder
    kind: str
    anchor: str
    progressions: tuple = ()
    min_order: int = 0

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown entry kind {self.kind!r}")
        if self.kind == "congruence" and not self.progressions:
            raise ValueError(f"{self.id}: congruence entry needs progressions")

    @property
    def family(self) -> str:
        return self.id.split("[", 1)[0]


@dataclass(frozen=True)
class VerificationReport:
    id: str
    order: int
    checked: int  # last index compared, -1 if nothing was in range
    passed: bool
    mismatch: int | None = None
    lhs_value: int | None = None
    rhs_value: int | None = None
    ms: float = 0.0

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"


# -- builders ---------------------------------------------------------------


@lru_cache(maxsize=64)
def b3(order):
    return family_series(B3, order)


@lru_cache(maxsize=64)
def big_a3(order):
    return family_series(A3_PAIR, order)


@lru_cache(maxsize=64)
def small_a3(order):
    return family_series(A3_SINGLE, order)


@lru_cache(maxsize=64)
def omega(order, k=3):
    return omega_series(k, order)


def eta_sum(*terms) -> Builder:
    """Builder for sum of c * q^s * prod f_k^e over terms (c, s, {k: e})."""

    def build(order):
        acc = S.zero(order)
        for c, s, spec in terms:
            acc = S.add(acc, S.scale(S.shift(eta_quotient(spec, order), s), c))
        return acc

    return build


def section(base: Builder, m: int, r: int) -> Builder:
    """Builder for sum_n base[mn + r] q^n, exact through the requested order."""
    return lambda order: S.dissect(base(m * order + r), m, r)


def _relation(base: Builder, step: int, residue: int, terms) -> tuple:
    # terms: (coefficient, builder, step_i, residue_i), all indices <= step*n + residue
    def lhs(order):
        return S.dissect(base(order), step, residue)

    def rhs(order):
        top = (order - residue) // step
        acc = S.zero(top)
        for c, other, a, b in terms:
            part = S.truncate(S.dissect(other(order), a, b), top)
            acc = S.add(acc, S.scale(part, c))
        return acc

    return lhs, rhs


def _zero(order):
    return S.zero(order)


# -- catalog ----------------------------------------------------------------


def _series_entries():
    E = []

    def eq(id_, desc, lhs, rhs, anchor):
        E.append(IdentityEntry(id_, desc, lhs, rhs, "series-equality", anchor))

    eq("lemid1", "2-dissection of f3^3/f1",
       eta_sum((1, 0, {3: 3, 1: -1})),
       eta_sum((1, 0, {4: 3, 6: 2, 2: -2, 12: -1}), (1, 1, {12: 3, 4: -1})),
       "f3^3/f1 = f4^3 f6^2/(f2^2 f12) + q f12^3/f4")
    eq("lemid2", "2-dissection of f3/f1^3",
       eta_sum((1, 0, {3: 1, 1: -3})),
       eta_sum((1, 0, {4: 6, 6: 3, 2: -9, 12: -2}), (3, 1, {4: 2, 6: 1, 12: 2, 2: -7})),
       "f3/f1^3 = f4^6 f6^3/(f2^9 f12^2) + 3q f4^2 f6 f12^2/f2^7")
    eq("lemid3", "2-dissection of f1^3/f3",
       eta_sum((1, 0, {1: 3, 3: -1})),
       eta_sum((1, 0, {4: 3, 12: -1}), (-3, 1, {2: 2, 12: 3, 4: -1, 6: -2})),
       "f1^3/f3 = f4^3/f12 - 3q f2^2 f12^3/(f4 f6^2)")
    eq("lemid4", "2-dissection of f1/f3^3",
       eta_sum((1, 0, {1: 1, 3: -3})),
       eta_sum((1, 0, {2: 1, 4: 2, 12: 2, 6: -7}), (-1, 1, {2: 3, 12: 6, 4: -2, 6: -9})),
       "f1/f3^3 = f2 f4^2 f12^2/f6^7 - q f2^3 f12^6/(f4^2 f6^9)")
    eq("lemid05", "2-dissection of 1/f1^4",
       eta_sum((1, 0, {1: -4})),
       eta_sum((1, 0, {4: 14, 2: -14, 8: -4}), (4, 1, {4: 2, 8: 4, 2: -10})),
       "1/f1^4 = f4^14/(f2^14 f8^4) + 4q f4^2 f8^4/f2^10")
    eq("lemid5", "2-dissection of 1/f1^8",
       eta_sum((1, 0, {1: -8})),
       eta_sum((1, 0, {4: 28, 2: -28, 8: -8}), (8, 1, {4: 16, 2: -24}), (16, 2, {4: 4, 8: 8, 2: -20})),
       "1/f1^8 = f4^28/(f2^28 f8^8) + 8q f4^16/f2^24 + 16q^2 f4^4 f8^8/f2^20")

    eq("thm1id1", "f2^8 f3^4/f1^4 split",
       eta_sum((1, 0, {2: 8, 3: 4, 1: -4})),
       eta_sum((1, 0, {2: 3, 3: 9, 1: -3, 6: -1}), (1, 1, {6: 8})),
       "f2^8 f3^4/f1^4 = f2^3 f3^9/(f1^3 f6) + q f6^8")
    eq("thm1id2", "f2^5 f3^4 f6/f1^4 split",
       eta_sum((1, 0, {2: 5, 3: 4, 6: 1, 1: -4})),
       eta_sum((1, 0, {3: 9, 1: -3}), (1, 1, {6: 9, 2: -3})),
       "f2^5 f3^4 f6/f1^4 = f3^9/f1^3 + q f6^9/f2^3")
    eq("mid", "cleared-denominator form of thm1id1",
       eta_sum((1, 0, {2: 8, 3: 4, 6: 1})),
       eta_sum((1, 0, {1: 1, 2: 3, 3: 9}), (1, 1, {1: 4, 6: 9})),
       "f2^8 f3^4 f6 = f1 f2^3 f3^9 + q f1^4 f6^9")

    def equi_lhs(n):
        return S.power(bracket(2, 6, n), 4)

    def equi_rhs(n):
        b1 = bracket(1, 6, n)
        return S.add(S.mul(b1, S.power(bracket(3, 6, n), 3)), S.shift(S.power(b1, 4), 1))

    eq("equi", "bracket form of mid", equi_lhs, equi_rhs,
       "[q^2;q^6]^4 = [q;q^6][q^3;q^6]^3 + q[q;q^6]^4, [x;p] = (x;p)(p/x;p)")

    eq("f134", "2-dissection of f3^4/f1^4",
       eta_sum((1, 0, {3: 4, 1: -4})),
       eta_sum((1, 0, {4: 9, 6: 5, 2: -11, 12: -3}), (3, 2, {4: 1, 6: 1, 12: 5, 2: -7}),
               (4, 1, {4: 5, 6: 3, 12: 1, 2: -9})),
       "f3^4/f1^4 = f4^9 f6^5/(f2^11 f12^3) + 3q^2 f4 f6 f12^5/f2^7 + 4q f4^5 f6^3 f12/f2^9")
    eq("f153", "2-dissection of 1/(f1^5 f3)",
       eta_sum((1, 0, {1: -5, 3: -1})),
       eta_sum((1, 0, {4: 14, 2: -17, 6: -1, 12: -2}), (3, 2, {4: 6, 12: 6, 6: -5, 2: -13}),
               (5, 1, {4: 10, 12: 2, 2: -15, 6: -3}), (-9, 3, {4: 2, 12: 10, 6: -7, 2: -11})),
       "1/(f1^5 f3) = f4^14/(f2^17 f6 f12^2) + 3q^2 f4^6 f12^6/(f6^5 f2^13)"
       " + q(5 f4^10 f12^2/(f2^15 f6^3) - 9q^2 f4^2 f12^10/(f6^7 f2^11))")
    eq("f3216", "2-dissection of f3^2/f1^6",
       eta_sum((1, 0, {3: 2, 1: -6})),
       eta_sum((1, 0, {4: 12, 6: 6, 2: -18, 12: -4}), (6, 1, {4: 8, 6: 4, 2: -16}),
               (9, 2, {4: 4, 6: 2, 12: 4, 2: -14})),
       "f3^2/f1^6 = f4^12 f6^6/(f2^18 f12^4) + 6q f4^8 f6^4/f2^16 + 9q^2 f4^4 f6^2 f12^4/f2^14")
    eq("f3319", "2-dissection of f3^3/f1^9",
       eta_sum((1, 0, {3: 3, 1: -9})),
       eta_sum((1, 0, {4: 18, 6: 9, 2: -27, 12: -6}), (27, 2, {4: 10, 6: 5, 12: 2, 2: -23}),
               (9, 1, {4: 14, 6: 7, 2: -25, 12: -2}), (27, 3, {4: 6, 6: 3, 12: 6, 2: -21})),
       "f3^3/f1^9 = f4^18 f6^9/(f2^27 f12^6) + 27q^2 f4^10 f6^5 f12^2/f2^23"
       " + 9q(f4^14 f6^7/(f2^25 f12^2) + 3q^2 f4^6 f6^3 f12^6/f2^21)")

    eq("B32n", "sum B3(2n) q^n",
       section(b3, 2, 0),
       eta_sum((1, 0, {2: 9, 3: 6, 1: -6, 6: -3}), (3, 1, {2: 1, 3: 2, 6: 5, 1: -2})),
       "sum B3(2n) q^n = f2^9 f3^6/(f1^6 f6^3) + 3q f2 f3^2 f6^5/f1^2")
    eq("B32n1", "sum B3(2n+1) q^n",
       section(b3, 2, 1),
       eta_sum((3, 0, {2: 5, 3: 4, 6: 1, 1: -4}), (1, 1, {6: 9, 2: -3})),
       "sum B3(2n+1) q^n = 3 f2^5 f3^4 f6/f1^4 + q f6^9/f2^3")

    def jacobi_rhs(n):
        return S.sub(p_series(n, 3), S.scale(S.shift(jacobi_cube(n, 9), 1), 3))

    eq("jacobi", "3-dissection of f1^3",
       eta_sum((1, 0, {1: 3})), jacobi_rhs,
       "f1^3 = P(q^3) - 3q f9^3, P(q) = sum (-1)^m (6m+1) q^(m(3m+1)/2)")

    def pq_rhs(n):
        f1 = eta_quotient({1: 1}, n)
        first = S.mul(f1, S.mul(phi(n), phi(n, 3)))
        second = S.shift(S.mul(f1, S.mul(psi(n, 2), psi(n, 6))), 1)
        return S.add(first, S.scale(second, 4))

    eq("Pq", "theta-product form of P(q)", lambda n: p_series(n), pq_rhs,
       "P(q) = f(-q) phi(q) phi(q^3) + 4q f(-q) psi(q^2) psi(q^6)")

    def midid_lhs(n):
        return S.sub(S.power(p_series(n), 3), S.scale(S.shift(eta_quotient({3: 9}, n), 1), 27))

    eq("midid", "P(q)^3 - 27q f3^9", midid_lhs, eta_sum((1, 0, {1: 12, 3: -3})),
       "P(q)^3 - 27q f3^9 = f1^12/f3^3")

    def recipro_rhs(n):
        p3 = p_series(n, 3)
        f9c = eta_quotient({9: 3}, n)
        inner = S.add(S.add(S.power(p3, 2), S.scale(S.shift(S.mul(p3, f9c), 1), 3)),
                      S.scale(S.shift(S.power(f9c, 2), 2), 9))
        return S.mul(eta_quotient({9: 3, 3: -12}, n), inner)

    eq("recipro", "3-dissection of 1/f1^3", eta_sum((1, 0, {1: -3})), recipro_rhs,
       "1/f1^3 = f9^3/f3^12 (P(q^3)^2 + 3q P(q^3) f9^3 + 9q^2 f9^6)")

    eq("B3n0", "sum B3(3n) q^n", section(b3, 3, 0),
       lambda n: S.mul(S.power(p_series(n), 2), eta_quotient({3: 3, 1: -3}, n)),
       "sum B3(3n) q^n = P(q)^2 f3^3/f1^3")
    eq("B3n1", "sum B3(3n+1) q^n", section(b3, 3, 1),
       lambda n: S.scale(S.mul(p_series(n), eta_quotient({3: 6, 1: -3}, n)), 3),
       "sum B3(3n+1) q^n = 3 P(q) f3^6/f1^3")
    eq("B3n2", "sum B3(3n+2) q^n", section(b3, 3, 2),
       eta_sum((9, 0, {3: 9, 1: -3})),
       "sum B3(3n+2) q^n = 9 f3^9/f1^3")

    eq("B36n", "sum B3(6n) q^n", section(b3, 6, 0),
       eta_sum((1, 0, {2: 10, 3: 9, 1: -7, 6: -6}), (16, 1, {2: 7, 6: 3, 1: -4}),
               (27, 1, {2: 2, 3: 5, 6: 2, 1: -3})),
       "sum B3(6n) q^n = f2^10 f3^9/(f1^7 f6^6) + 16q f2^7 f6^3/f1^4 + 27q f2^2 f3^5 f6^2/f1^3")
    eq("B36n4", "sum B3(6n+4) q^n", section(b3, 6, 4),
       eta_sum((24, 0, {2: 8, 3: 3, 1: -5})),
       "sum B3(6n+4) q^n = 24 f2^8 f3^3/f1^5")
    eq("phipsi[phi]", "phi as an eta quotient", lambda n: phi(n),
       eta_sum((1, 0, {2: 5, 1: -2, 4: -2})), "phi(q) = f2^5/(f1^2 f4^2)")
    eq("phipsi[psi]", "psi as an eta quotient", lambda n: psi(n),
       eta_sum((1, 0, {2: 2, 1: -1})), "psi(q) = f2^2/f1")
    eq("Pqexp", "P(q) as eta quotients", lambda n: p_series(n),
       eta_sum((1, 0, {2: 5, 6: 5, 1: -1, 3: -2, 4: -2, 12: -2}), (4, 1, {1: 1, 4: 2, 12: 2, 2: -1, 6: -1})),
       "P(q) = f2^5 f6^5/(f1 f3^2 f4^2 f12^2) + 4q f1 f4^2 f12^2/(f2 f6)")
    eq("B3nexp", "sum B3(3n) q^n as eta quotients", section(b3, 3, 0),
       eta_sum((1, 0, {2: 10, 6: 10, 1: -5, 3: -1, 4: -4, 12: -4}), (16, 2, {3: 3, 4: 4, 12: 4, 1: -1, 2: -2, 6: -2}),
               (8, 1, {2: 4, 3: 1, 6: 4, 1: -3})),
       "sum B3(3n) q^n = f2^10 f6^10/(f1^5 f3 f4^4 f12^4) + 16q^2 f3^3 f4^4 f12^4/(f1 f2^2 f6^2)"
       " + 8q f2^4 f3 f6^4/f1^3")
    eq("B3n1exp", "sum B3(3n+1) q^n as eta quotients", section(b3, 3, 1),
       eta_sum((3, 0, {2: 5, 3: 4, 6: 5, 1: -4, 4: -2, 12: -2}), (12, 1, {3: 6, 4: 2, 12: 2, 1: -2, 2: -1, 6: -1})),
       "sum B3(3n+1) q^n = 3 f2^5 f3^4 f6^5/(f1^4 f4^2 f12^2) + 12q f3^6 f4^2 f12^2/(f1^2 f2 f6)")

    def wgen_rhs(n):
        x = eta_quotient({6: 2, 9: 1, 36: 1, 3: -1, 12: -1, 18: -1}, n)
        inner = S.add(phi(n, 9), S.scale(S.shift(x, 1), 2))
        return S.mul(S.power(phi(n, 3), 3), S.power(inner, 3))

    eq("wgen", "omega generating function via the 3-dissection of phi", omega, wgen_rhs,
       "phi(q)^3 phi(q^3)^3 = phi(q^3)^3 (phi(q^9) + 2q f6^2 f9 f36/(f3 f12 f18))^3")
    eq("w3n2", "sum omega(3n+2) q^n", section(omega, 3, 2),
       eta_sum((12, 0, {2: 19, 6: 3, 1: -8, 4: -8})),
       "sum omega(3n+2) q^n = 12 f2^19 f6^3/(f1^8 f4^8)")
    eq("w6n5", "sum omega(6n+5) q^n", section(omega, 6, 5),
       eta_sum((96, 0, {2: 8, 3: 3, 1: -5})),
       "sum omega(6n+5) q^n = 96 f2^8 f3^3/f1^5")
    eq("w6n2", "sum omega(6n+2) q^n", section(omega, 6, 2),
       eta_sum((12, 0, {2: 20, 3: 3, 1: -9, 4: -8}), (192, 1, {3: 3, 4: 8, 1: -1, 2: -4})),
       "sum omega(6n+2) q^n = 12(f2^20 f3^3/(f1^9 f4^8) + 16q f3^3 f4^8/(f1 f2^4))")
    eq("w12n2", "sum omega(12n+2) q^n", section(omega, 12, 2),
       eta_sum((12, 0, {2: 10, 3: 9, 1: -7, 6: -6}), (192, 1, {2: 7, 6: 3, 1: -4}),
               (324, 1, {2: 2, 3: 5, 6: 2, 1: -3})),
       "sum omega(12n+2) q^n = 12(f2^10 f3^9/(f1^7 f6^6) + 16q f2^7 f6^3/f1^4 + 27q f2^2 f3^5 f6^2/f1^3)")
    eq("w3n1", "sum omega(3n+1) q^n", section(omega, 3, 1),
       eta_sum((6, 0, {2: 17, 6: 9, 1: -7, 3: -3, 4: -7, 12: -3})),
       "sum omega(3n+1) q^n = 6 f2^17 f6^9/(f1^7 f3^3 f4^7 f12^3)")
    eq("w6n4", "sum omega(6n+4) q^n", section(omega, 6, 4),
       eta_sum((48, 0, {3: 2, 2: 11, 1: -6, 6: -1}), (-6, 0, {2: 19, 6: 3, 1: -8, 4: -8}),
               (-96, 1, {4: 8, 6: 3, 2: -5})),
       "sum omega(6n+4) q^n = 6(8 f3^2 f2^11/(f1^6 f6) - f2^19 f6^3/(f1^8 f4^8) - 16q f4^8 f6^3/f2^5)")

    def go_rhs(n):
        return S.from_coeffs([divisor_delta(3 * j + 1) for j in range(n + 1)], n)

    eq("go", "a3 via divisors", small_a3, go_rhs, "a3(n) = d_{1,3}(3n+1) - d_{2,3}(3n+1)")
    return E


def _relation_entries():
    E = []

    def rel(id_, desc, base, step, residue, terms, anchor):
        lhs, rhs = _relation(base, step, residue, terms)
        E.append(IdentityEntry(id_, desc, lhs, rhs, "coefficient-relation", anchor, min_order=residue))

    rel("rec1", "B3 recurrence", b3, 4, 1, [(3, b3, 2, 0)], "B3(4n+1) = 3 B3(2n)")
    rel("rec2", "B3 recurrence", b3, 4, 3, [(3, b3, 2, 1), (4, b3, 1, 0)],
        "B3(4n+3) = 3 B3(2n+1) + 4 B3(n)")
    for k in FAMILY_KS:
        c = (4 ** (k + 1) + (-1) ** k) // 5
        d = (4 ** (k + 1) - 4 * (-1) ** k) // 5
        rel(f"re1[{k}]", f"2-adic family, k={k}", b3, 2 ** (k + 1), 2 ** k - 1, [(c, b3, 2, 0)],
            f"B3(2^(k+1) n + 2^k - 1) = ((4^(k+1) + (-1)^k)/5) B3(2n), k={k}")
        rel(f"re2[{k}]", f"2-adic family, k={k}", b3, 2 ** (k + 1), 2 ** (k + 1) - 1,
            [(c, b3, 2, 1), (d, b3, 1, 0)],
            f"B3(2^(k+1) n + 2^(k+1) - 1) = ((4^(k+1) + (-1)^k)/5) B3(2n+1)"
            f" + ((4^(k+1) - 4(-1)^k)/5) B3(n), k={k}")
    for k in FAMILY_KS:
        rel(f"b33[{k}]", f"3-adic family, k={k}", b3, 3 ** k, 3 ** k - 1, [(9 ** k, b3, 1, 0)],
            f"B3(3^k n + 3^k - 1) = 3^(2k) B3(n), k={k}")

    rel("omega65", "omega vs B3", omega, 6, 5, [(4, b3, 6, 4)], "omega(6n+5) = 4 B3(6n+4)")
    rel("omega122", "omega vs B3", omega, 12, 2, [(12, b3, 6, 0)], "omega(12n+2) = 12 B3(6n)")
    rel("omega1210", "omega vs B3", omega, 12, 10, [(6, b3, 6, 4)], "omega(12n+10) = 6 B3(6n+4)")

    rel("bb41", "a3 self-similarity", small_a3, 4, 1, [(1, small_a3, 1, 0)], "a3(4n+1) = a3(n)")
    for p, k in HS_PARAMS:
        pk = p ** k
        rel(f"hs[{p},{k}]", f"a3 self-similarity, p={p}, k={k}", small_a3, pk, (pk - 1) // 3,
            [(1, small_a3, 1, 0)], f"a3(p^k n + (p^k - 1)/3) = a3(n), p={p}, k={k}")
    rel("u124", "u vs a3", lambda n: omega(n, 1), 12, 4, [(6, small_a3, 1, 0)], "u(12n+4) = 6 a3(n)")
    rel("lin86", "A3 relation", big_a3, 8, 6, [(7, big_a3, 2, 1)], "A3(8n+6) = 7 A3(2n+1)")
    rel("linA3", "v vs A3", lambda n: omega(n, 2), 6, 5, [(12, big_a3, 2, 1)], "v(6n+5) = 12 A3(2n+1)")
    for k in BN_KS:
        m = 2 ** (2 * k + 2)
        rel(f"bn22k[{k}]", f"A3 family, k={k}", big_a3, m, 2 * (m - 1) // 3,
            [((m - 1) // 3, big_a3, 4, 2), (-(m - 4) // 3, big_a3, 1, 0)],
            f"A3(2^(2k+2) n + 2(2^(2k+2) - 1)/3) = ((2^(2k+2) - 1)/3) A3(4n+2)"
            f" - ((2^(2k+2) - 4)/3) A3(n), k={k}")
    return E


def _congruence_entries():
    E = []

    def cong(id_, desc, lhs, progressions, anchor, rhs=_zero):
        E.append(IdentityEntry(id_, desc, lhs, rhs, "congruence", anchor,
                               progressions=tuple(progressions),
                               min_order=min(r for _, r, _ in progressions)))

    for k in FAMILY_KS:
        m = (4 ** (k + 1) + (-1) ** k) // 5
        cong(f"cor1[{k}]", f"2-adic congruence, k={k}", b3, [(2 ** (k + 1), 2 ** k - 1, m)],
             f"B3(2^(k+1) n + 2^k - 1) = 0 mod (4^(k+1) + (-1)^k)/5, k={k}")
    for k in FAMILY_KS:
        cong(f"b33cor[{k}]", f"3-adic congruences, k={k}", b3,
             [(3 ** k, 3 ** k - 1, 9 ** k), (3 ** k, 2 * 3 ** (k - 1) - 1, 3 ** (2 * k - 1))],
             f"B3(3^k n + 3^k - 1) = 0 mod 3^(2k) and B3(3^k n + 2*3^(k-1) - 1) = 0 mod 3^(2k-1), k={k}")
    cong("mod24", "B3(6n+4) mod 24", b3, [(6, 4, 24)], "B3(6n+4) = 0 mod 24")
    for a, p in FAP_PARAMS:
        cong(f"fap[{a},{p}]", f"Frobenius congruence, a={a}, p={p}",
             lambda n, a=a, p=p: euler_power(a, p, n), [(1, 0, p)],
             f"f_a^p = f_(ap) mod p, a={a}, p={p}",
             rhs=lambda n, a=a, p=p: eta_quotient({a * p: 1}, n))
    cong("c5", "coefficients of f2^3 f3^3 mod 5", eta_sum((1, 0, {2: 3, 3: 3})),
         [(5, 1, 5), (5, 4, 5)], "c(5n+1) = c(5n+4) = 0 mod 5 where sum c(m) q^m = f2^3 f3^3")
    cong("mod120", "B3 mod 120", b3, [(30, 10, 120), (30, 28, 120)],
         "B3(30n+10) = B3(30n+28) = 0 mod 120")
    return E


@lru_cache(maxsize=1)
def catalog() -> tuple:
    entries = _series_entries() + _relation_entries() + _congruence_entries()
    order = {base: i for i, base in enumerate(INVENTORY)}
    # stable: inventory order, then definition order within a family
    entries.sort(key=lambda e: order[e.family])
    return tuple(entries)


# -- engine -----------------------------------------------------------------

_FILTER_OK = re.compile(r"^[A-Za-z0-9_*?\[\],]+$")


def _compile_pattern(pat: str):
    # '*' and '?' are wildcards; brackets are literal so re1[2] names one entry
    return re.compile("^" + "".join(".*" if ch == "*" else "." if ch == "?" else re.escape(ch) for ch in pat) + "$")


def parse_filter(text: str | None):
    """Comma-separated glob patterns matched against entry ids and family ids."""
    if text is None:
        return None
    if not text or not _FILTER_OK.match(text) or any(not p for p in text.split(",")):
        raise ValueError(f"bad filter {text!r}: use comma-separated ids with * and ? wildcards")
    return [_compile_pattern(p) for p in text.split(",")]


def select(pattern: str | None = None) -> list:
    pats = parse_filter(pattern)
    if pats is None:
        return list(catalog())
    return [e for e in catalog() if any(p.match(e.id) or p.match(e.family) for p in pats)]


def verify(entry: IdentityEntry, order: int) -> VerificationReport:
    if order < 1:
        raise ValueError(f"order must be >= 1, got {order}")
    start = time.perf_counter()
    if order < entry.min_order:
        return VerificationReport(entry.id, order, -1, True, ms=_ms(start))
    try:
        lhs = entry.lhs(order)
        rhs = entry.rhs(order)
    except Exception as exc:
        raise BuildFailure(entry.id, exc) from exc
    top = min(lhs.order, rhs.order)
    if entry.kind == "congruence":
        bad = _first_noncongruent(lhs, rhs, entry.progressions, top)
    else:
        bad = S.first_mismatch(lhs, rhs, top)
    if bad is None:
        return VerificationReport(entry.id, order, top, True, ms=_ms(start))
    return VerificationReport(entry.id, order, top, False, bad, lhs.coeffs[bad], rhs.coeffs[bad], ms=_ms(start))


def _first_noncongruent(lhs, rhs, progressions, top):
    for n in range(top + 1):
        for step, residue, modulus in progressions:
            if n % step == residue and (lhs.coeffs[n] - rhs.coeffs[n]) % modulus:
                return n
    return None


def _ms(start):
    return (time.perf_counter() - start) * 1000.0


def verify_all(order: int, pattern: str | None = None) -> list:
    """Verify every entry (or those matching ``pattern``), in catalog order."""
    if order < 1:
        raise ValueError(f"order must be >= 1, got {order}")
    return [verify(e, order) for e in select(pattern)]
