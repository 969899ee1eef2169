"""
Truncated power series in q with exact integer coefficients.

An ``IntSeries`` of order N knows its coefficients for q^0 .. q^N and nothing
beyond. Binary operations truncate to the smaller order of their operands.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import NonUnitConstantTerm, OrderExceeded, ResidueOutOfRange

# fraction of nonzero coefficients below which mul/inverse walk the support only
SPARSE_DENSITY = 0.5


@dataclass(frozen=True, eq=False)
class IntSeries:
    coeffs: tuple
    order: int

    def __post_init__(self):
        if self.order < 0:
            raise ValueError(f"order must be nonnegative, got {self.order}")
        if len(self.coeffs) != self.order + 1:
            raise ValueError("length of coeffs must equal order + 1")

    def __len__(self):
        return self.order + 1

    def __getitem__(self, n):
        return coefficient(self, n)

    def __iter__(self):
        return iter(self.coeffs)

    def __repr__(self):
        head = ", ".join(str(c) for c in self.coeffs[:8])
        more = ", ..." if self.order >= 8 else ""
        return f"IntSeries([{head}{more}], order={self.order})"

    def __eq__(self, other):
        if not isinstance(other, IntSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __add__(self, other):
        return add(self, _promote(other, self.order))

    __radd__ = __add__

    def __sub__(self, other):
        return add(self, neg(_promote(other, self.order)))

    def __rsub__(self, other):
        return add(_promote(other, self.order), neg(self))

    def __neg__(self):
        return neg(self)

    def __mul__(self, other):
        if isinstance(other, int):
            return scale(self, other)
        return mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, int):
            return scale(self, other)
        return NotImplemented

    def __pow__(self, e):
        return power(self, e)

    def support(self):
        """Indices of the nonzero coefficients."""
        return [i for i, c in enumerate(self.coeffs) if c]


def _promote(x, order):
    if isinstance(x, IntSeries):
        return x
    if isinstance(x, int):
        return from_coeffs([x], order)
    raise TypeError(f"cannot combine IntSeries with {type(x).__name__}")


def from_coeffs(values: Iterable[int], order: int) -> IntSeries:
    """Series with the given leading coefficients, zero-filled (or cut) to ``order``."""
    if order < 0:
        raise ValueError(f"order must be nonnegative, got {order}")
    vals = [int(v) for v in values][: order + 1]
    vals.extend([0] * (order + 1 - len(vals)))
    return IntSeries(tuple(vals), order)


def zero(order: int) -> IntSeries:
    return IntSeries((0,) * (order + 1), order)


def one(order: int) -> IntSeries:
    return from_coeffs([1], order)


def monomial(c: int, e: int, order: int) -> IntSeries:
    """c * q^e truncated to ``order``."""
    vals = [0] * (order + 1)
    if e <= order:
        vals[e] = c
    return IntSeries(tuple(vals), order)


def truncate(a: IntSeries, order: int) -> IntSeries:
    if order > a.order:
        raise OrderExceeded(f"cannot extend a series of order {a.order} to {order}")
    return IntSeries(a.coeffs[: order + 1], order)


def add(a: IntSeries, b: IntSeries) -> IntSeries:
    n = min(a.order, b.order)
    return IntSeries(tuple(x + y for x, y in zip(a.coeffs[: n + 1], b.coeffs)), n)


def neg(a: IntSeries) -> IntSeries:
    return IntSeries(tuple(-x for x in a.coeffs), a.order)


def sub(a: IntSeries, b: IntSeries) -> IntSeries:
    return add(a, neg(b))


def scale(a: IntSeries, c: int) -> IntSeries:
    return IntSeries(tuple(c * x for x in a.coeffs), a.order)


def shift(a: IntSeries, s: int) -> IntSeries:
    """q^s * a, keeping the order of ``a``."""
    if s < 0:
        raise ValueError("shift must be nonnegative")
    return IntSeries(((0,) * s + a.coeffs)[: a.order + 1], a.order)


def _as_objects(values):
    arr = np.empty(len(values), dtype=object)
    arr[:] = values
    return arr


def mul(a: IntSeries, b: IntSeries, sparse: bool = True) -> IntSeries:
    """Cauchy product truncated to min(order(a), order(b)).

    Schoolbook convolution; each row is a vectorised multiply-add over
    Python ints. With ``sparse`` the outer loop visits only the nonzero
    coefficients of the sparser operand.
    """
    n = min(a.order, b.order)
    x, y = a.coeffs[: n + 1], b.coeffs[: n + 1]
    if sparse:
        sx = [i for i, c in enumerate(x) if c]
        sy = [i for i, c in enumerate(y) if c]
        if len(sy) < len(sx):
            x, y, sx = y, x, sy
    else:
        sx = range(n + 1)
    out = np.zeros(n + 1, dtype=object)
    yarr = _as_objects(y)
    for i in sx:
        out[i:] += x[i] * yarr[: n + 1 - i]
    return IntSeries(tuple(int(c) for c in out), n)


def power(a: IntSeries, e: int) -> IntSeries:
    """a**e by binary exponentiation; a**0 is 1."""
    if e < 0:
        raise ValueError("exponent must be nonnegative; use inverse() for negative powers")
    result = one(a.order)
    base = a
    while e:
        if e & 1:
            result = mul(result, base)
        e >>= 1
        if e:
            base = mul(base, base)
    return result


def inverse(a: IntSeries) -> IntSeries:
    """Multiplicative inverse in Z[[q]]; the constant term must be +1 or -1."""
    a0 = a.coeffs[0]
    if a0 not in (1, -1):
        raise NonUnitConstantTerm(f"constant term {a0} is not a unit over the integers")
    n = a.order
    support = [j for j in range(1, n + 1) if a.coeffs[j]]
    b = [0] * (n + 1)
    b[0] = a0
    if len(support) <= SPARSE_DENSITY * n:
        for m in range(1, n + 1):
            s = 0
            for j in support:
                if j > m:
                    break
                s += a.coeffs[j] * b[m - j]
            b[m] = -a0 * s
    else:
        arr = _as_objects(a.coeffs)
        rev = np.zeros(n + 1, dtype=object)
        # rev[n - i] holds b[i], so a_1..a_m pairs with b_{m-1}..b_0
        rev[n] = b[0]
        for m in range(1, n + 1):
            s = arr[1 : m + 1].dot(rev[n - m + 1 :])
            b[m] = -a0 * int(s)
            rev[n - m] = b[m]
    return IntSeries(tuple(b), n)


def substitute_power(a: IntSeries, m: int, max_order: int | None = None) -> IntSeries:
    """a(q^m). The result has order order(a)*m, capped at ``max_order`` if given."""
    if m < 1:
        raise ValueError("m must be a positive integer")
    order = a.order * m
    if max_order is not None:
        order = min(order, max_order)
    vals = [0] * (order + 1)
    for i, c in enumerate(a.coeffs):
        if i * m > order:
            break
        vals[i * m] = c
    return IntSeries(tuple(vals), order)


def dissect(a: IntSeries, m: int, r: int) -> IntSeries:
    """The series sum_n a_{mn+r} q^n."""
    if m < 1:
        raise ValueError("m must be a positive integer")
    if not 0 <= r < m:
        raise ResidueOutOfRange(f"residue {r} not in [0, {m})")
    if r > a.order:
        raise OrderExceeded(f"residue {r} exceeds series order {a.order}")
    vals = a.coeffs[r::m]
    return IntSeries(tuple(vals), len(vals) - 1)


def coefficient(a: IntSeries, n: int) -> int:
    if n < 0:
        raise IndexError(n)
    if n > a.order:
        raise OrderExceeded(f"coefficient {n} requested from a series of order {a.order}")
    return a.coeffs[n]


def _check_upto(a, b, upto):
    if upto > min(a.order, b.order):
        raise OrderExceeded(f"comparison through q^{upto} exceeds available order {min(a.order, b.order)}")


def eq_upto(a: IntSeries, b: IntSeries, upto: int) -> bool:
    _check_upto(a, b, upto)
    return a.coeffs[: upto + 1] == b.coeffs[: upto + 1]


def congruent_upto(a: IntSeries, b: IntSeries, modulus: int, upto: int) -> bool:
    if modulus < 2:
        raise ValueError("modulus must be at least 2")
    _check_upto(a, b, upto)
    return all((x - y) % modulus == 0 for x, y in zip(a.coeffs[: upto + 1], b.coeffs))


def first_mismatch(a: IntSeries, b: IntSeries, upto: int | None = None) -> int | None:
    if upto is None:
        upto = min(a.order, b.order)
    _check_upto(a, b, upto)
    for i in range(upto + 1):
        if a.coeffs[i] != b.coeffs[i]:
            return i
    return None


# -- cache file ------------------------------------------------------------

CACHE_MAGIC = "# qseries v1"


def dumps(a: IntSeries, name: str) -> str:
    if any(ch.isspace() for ch in name) or not name:
        raise ValueError(f"series name must be a nonempty token without whitespace: {name!r}")
    lines = [f"{CACHE_MAGIC} name={name} order={a.order}"]
    lines.extend(f"{n}\t{c}" for n, c in enumerate(a.coeffs) if c)
    return "\n".join(lines) + "\n"


def loads(text: str) -> tuple[str, IntSeries]:
    """Parse the cache format; returns (name, series)."""
    lines = text.splitlines()
    if not lines or not lines[0].startswith(CACHE_MAGIC + " "):
        raise ValueError("not a qseries v1 file")
    fields = dict(tok.split("=", 1) for tok in lines[0][len(CACHE_MAGIC) + 1 :].split())
    try:
        name, order = fields["name"], int(fields["order"])
    except KeyError as exc:
        raise ValueError(f"missing header field {exc}") from None
    vals = [0] * (order + 1)
    last = -1
    for line in lines[1:]:
        if not line.strip():
            continue
        n_str, c_str = line.split("\t")
        n = int(n_str)
        if n <= last or n > order:
            raise ValueError(f"bad coefficient index {n}")
        vals[n] = int(c_str)
        last = n
    return name, IntSeries(tuple(vals), order)


def save(path, a: IntSeries, name: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(dumps(a, name))


def load(path) -> tuple[str, IntSeries]:
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())
