"""
Closed-form expansions: Euler products f_k = (q^k; q^k)_inf, the theta
functions phi, psi and f(a, b), Jacobi's cube, the series P(q), bracket
products and general eta quotients prod f_k^{e_k}.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Mapping

from . import series as S
from .errors import BadResidue, DivergentSpec
from .series import IntSeries


def _parse_terms(terms) -> tuple:
    items = terms.items() if isinstance(terms, Mapping) else terms
    merged: dict[int, int] = {}
    for k, e in items:
        k, e = int(k), int(e)
        if k < 1:
            raise ValueError(f"eta scale must be positive, got {k}")
        merged[k] = merged.get(k, 0) + e
    return tuple(sorted((k, e) for k, e in merged.items() if e))


@dataclass(frozen=True)
class EtaQuotientSpec:
    """prod_k f_k^{e_k}, stored as sorted (scale, exponent) pairs with no zero exponents."""

    terms: tuple

    def __init__(self, terms=()):
        object.__setattr__(self, "terms", _parse_terms(terms))

    def __mul__(self, other):
        return EtaQuotientSpec(self.terms + other.terms)

    def __str__(self):
        return ",".join(f"{k}:{e}" for k, e in self.terms)

    @classmethod
    def parse(cls, text: str) -> "EtaQuotientSpec":
        """Parse ``"3:9,1:-3"``; raises ValueError naming the bad token."""
        pairs = []
        for tok in text.split(","):
            tok = tok.strip()
            k, sep, e = tok.partition(":")
            try:
                if not sep:
                    raise ValueError
                k_i, e_i = int(k), int(e)
            except ValueError:
                raise ValueError(f"malformed eta term {tok!r} (expected scale:exponent)") from None
            if k_i < 1:
                raise ValueError(f"malformed eta term {tok!r} (scale must be positive)")
            pairs.append((k_i, e_i))
        return cls(pairs)


@dataclass(frozen=True)
class ThetaSpec:
    """f(sign1*q^s, sign2*q^t) evaluated at q^argument_scale.

    ``kind`` is one of phi, psi, euler_f or general; the first three fix
    the signs and exponents.
    """

    kind: str = "general"
    sign1: int = 1
    s: int = 1
    sign2: int = 1
    t: int = 1
    argument_scale: int = 1

    def arguments(self):
        if self.kind == "phi":
            return 1, 1, 1, 1
        if self.kind == "psi":
            return 1, 1, 1, 3
        if self.kind == "euler_f":
            return -1, 1, -1, 2
        if self.kind == "general":
            return self.sign1, self.s, self.sign2, self.t
        raise ValueError(f"unknown theta kind {self.kind!r}")


# -- Euler products and theta functions -----------------------------------


@lru_cache(maxsize=256)
def euler_f(k: int, order: int) -> IntSeries:
    """(q^k; q^k)_inf through q^order, by the pentagonal number theorem."""
    if k < 1:
        raise ValueError("k must be positive")
    vals = [0] * (order + 1)
    n = 0
    while True:
        hit = False
        for m in ((n, -n) if n else (0,)):
            e = k * m * (3 * m - 1) // 2
            if e <= order:
                vals[e] += -1 if m % 2 else 1
                hit = True
        if not hit:
            break
        n += 1
    return IntSeries(tuple(vals), order)


@lru_cache(maxsize=64)
def phi(order: int, scale: int = 1) -> IntSeries:
    """phi(q^scale) = sum over all integers n of q^(scale n^2)."""
    vals = [0] * (order + 1)
    vals[0] = 1
    n = 1
    while scale * n * n <= order:
        vals[scale * n * n] = 2
        n += 1
    return IntSeries(tuple(vals), order)


@lru_cache(maxsize=64)
def psi(order: int, scale: int = 1) -> IntSeries:
    """psi(q^scale) = sum_{n>=0} q^(scale n(n+1)/2)."""
    vals = [0] * (order + 1)
    n = 0
    while scale * n * (n + 1) // 2 <= order:
        vals[scale * n * (n + 1) // 2] = 1
        n += 1
    return IntSeries(tuple(vals), order)


def theta_general(spec: ThetaSpec, order: int) -> IntSeries:
    """Ramanujan's f(a, b) = sum_n a^(n(n+1)/2) b^(n(n-1)/2) for monomial a, b."""
    sign1, s, sign2, t = spec.arguments()
    if s + t < 1:
        raise DivergentSpec(f"f(a, b) needs |ab| < 1; got exponents s={s}, t={t}")
    if s < 0 or t < 0:
        raise DivergentSpec(f"negative exponent (s={s}, t={t}) does not give a power series in q")
    if sign1 not in (1, -1) or sign2 not in (1, -1):
        raise ValueError("signs must be +1 or -1")
    c = spec.argument_scale
    vals = [0] * (order + 1)

    def term(n):
        u, v = n * (n + 1) // 2, n * (n - 1) // 2
        return c * (s * u + t * v), (sign1 ** (u % 2)) * (sign2 ** (v % 2))

    # exponent is nondecreasing in |n| along each direction once s + t >= 1
    for step in (1, -1):
        n = 0 if step == 1 else -1
        while True:
            e, sign = term(n)
            if e > order:
                break
            vals[e] += sign
            n += step
    return IntSeries(tuple(vals), order)


@lru_cache(maxsize=64)
def jacobi_cube(order: int, scale: int = 1) -> IntSeries:
    """sum_{n>=0} (-1)^n (2n+1) q^(scale n(n+1)/2), which equals f_scale^3."""
    vals = [0] * (order + 1)
    n = 0
    while scale * n * (n + 1) // 2 <= order:
        vals[scale * n * (n + 1) // 2] = (-1) ** n * (2 * n + 1)
        n += 1
    return IntSeries(tuple(vals), order)


@lru_cache(maxsize=64)
def p_series(order: int, scale: int = 1) -> IntSeries:
    """P(q^scale) = sum over all integers m of (-1)^m (6m+1) q^(scale m(3m+1)/2)."""
    vals = [0] * (order + 1)
    m = 0
    while True:
        hit = False
        for mm in ((m, -m) if m else (0,)):
            e = scale * mm * (3 * mm + 1) // 2
            if e <= order:
                vals[e] += (-1) ** (mm % 2) * (6 * mm + 1)
                hit = True
        if not hit:
            break
        m += 1
    return IntSeries(tuple(vals), order)


def _times_one_minus(vals, e):
    # in place: vals *= (1 - q^e)
    for i in range(len(vals) - 1, e - 1, -1):
        vals[i] -= vals[i - e]


@lru_cache(maxsize=64)
def bracket(a: int, b: int, order: int) -> IntSeries:
    """[q^a; q^b]_inf = (q^a; q^b)_inf (q^(b-a); q^b)_inf by direct product."""
    if not 0 < a < b:
        raise BadResidue(f"bracket needs 0 < a < b, got a={a}, b={b}")
    vals = [0] * (order + 1)
    vals[0] = 1
    for start in (a, b - a):
        e = start
        while e <= order:
            _times_one_minus(vals, e)
            e += b
    return IntSeries(tuple(vals), order)


def naive_euler_product(k: int, order: int) -> IntSeries:
    """prod_{n>=1} (1 - q^(kn)) multiplied out factor by factor (test oracle)."""
    vals = [0] * (order + 1)
    vals[0] = 1
    e = k
    while e <= order:
        _times_one_minus(vals, e)
        e += k
    return IntSeries(tuple(vals), order)


# -- eta quotients ---------------------------------------------------------


@lru_cache(maxsize=1024)
def euler_power(k: int, e: int, order: int) -> IntSeries:
    """f_k^e for any integer e."""
    if e == 0:
        return S.one(order)
    cubes, rest = divmod(abs(e), 3)
    if e < 0:
        # invert the sparse factors, never the dense powers
        parts = [S.power(_cube_inverse(k, order), cubes), S.power(_euler_inverse(k, order), rest)]
    else:
        parts = [S.power(jacobi_cube(order, k), cubes), S.power(euler_f(k, order), rest)]
    return S.mul(*parts)


@lru_cache(maxsize=256)
def _euler_inverse(k: int, order: int) -> IntSeries:
    return S.inverse(euler_f(k, order))


@lru_cache(maxsize=256)
def _cube_inverse(k: int, order: int) -> IntSeries:
    return S.inverse(jacobi_cube(order, k))


def _as_spec(spec) -> EtaQuotientSpec:
    if isinstance(spec, EtaQuotientSpec):
        return spec
    if isinstance(spec, str):
        return EtaQuotientSpec.parse(spec)
    return EtaQuotientSpec(spec)


def eta_quotient(spec, order: int) -> IntSeries:
    """prod_k f_k^{e_k} through q^order.

    ``spec`` is an EtaQuotientSpec, a mapping {scale: exponent}, a list of
    pairs, or a string like ``"3:9,1:-3"``.
    """
    return _eta_quotient(_as_spec(spec).terms, order)


@lru_cache(maxsize=1024)
def _eta_quotient(terms: tuple, order: int) -> IntSeries:
    factors = [euler_power(k, e, order) for k, e in terms]
    if not factors:
        return S.one(order)
    # sparse factors first keeps the running product cheap for longer
    factors.sort(key=lambda s: len(s.support()))
    result = factors[0]
    for f in factors[1:]:
        result = S.mul(result, f)
    return result


def eta(order: int, *terms) -> IntSeries:
    """Shorthand: eta(N, (2, 5), (1, -2)) or eta(N, {2: 5, 1: -2})."""
    if len(terms) == 1 and isinstance(terms[0], (Mapping, str, EtaQuotientSpec)):
        return eta_quotient(terms[0], order)
    return eta_quotient(list(terms), order)
