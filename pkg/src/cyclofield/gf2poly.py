"""Arithmetic in F2[T].

A polynomial is stored as a nonnegative integer whose bit i is the
coefficient of T^i, so T^4+T+1 is 0b10011.  Addition is XOR and
multiplication is carryless shift-and-add.  The zero polynomial has
degree -1.

Places of the rational function field F2(T) are modelled by :class:`Place`,
either a monic irreducible polynomial or the infinite place.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

__all__ = [
    "BinaryPoly", "Place", "INFINITY", "PolyParseError",
    "poly_add", "poly_mul", "poly_divrem", "poly_gcd", "powmod",
    "is_irreducible", "monic_irreducibles", "places_up_to",
    "order_mod", "factor_int", "parse_poly", "format_poly", "parse_place",
]

# trial division is used up to this degree, Rabin's test above it
TRIAL_DIVISION_MAX_DEGREE = 16


class PolyParseError(ValueError):
    """Malformed polynomial text; ``position`` is the offending index."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


def _mul(a: int, b: int) -> int:
    if a < b:
        a, b = b, a
    c = 0
    while b:
        if b & 1:
            c ^= a
        a <<= 1
        b >>= 1
    return c


def _divmod(a: int, b: int) -> tuple[int, int]:
    if b == 0:
        raise ZeroDivisionError("division by zero polynomial")
    db = b.bit_length()
    q = 0
    while a.bit_length() >= db:
        shift = a.bit_length() - db
        q ^= 1 << shift
        a ^= b << shift
    return q, a


def _mod(a: int, b: int) -> int:
    return _divmod(a, b)[1]


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, _mod(a, b)
    return a


def _powmod(a: int, e: int, m: int) -> int:
    result = 1
    a = _mod(a, m)
    while e:
        if e & 1:
            result = _mod(_mul(result, a), m)
        a = _mod(_mul(a, a), m)
        e >>= 1
    return _mod(result, m)


@dataclass(frozen=True, order=True)
class BinaryPoly:
    """Immutable polynomial over F2 with little-endian bit encoding."""

    bits: int = 0

    def __post_init__(self):
        if self.bits < 0:
            raise ValueError("bit encoding must be nonnegative")

    @classmethod
    def from_exponents(cls, *exponents: int) -> BinaryPoly:
        bits = 0
        for e in exponents:
            bits ^= 1 << e
        return cls(bits)

    @property
    def degree(self) -> int:
        return self.bits.bit_length() - 1

    def coefficients(self) -> list[int]:
        """Coefficients from T^0 upwards; empty for the zero polynomial."""
        return [(self.bits >> i) & 1 for i in range(self.bits.bit_length())]

    def is_zero(self) -> bool:
        return self.bits == 0

    def __bool__(self) -> bool:
        return self.bits != 0

    def __add__(self, other: BinaryPoly) -> BinaryPoly:
        return BinaryPoly(self.bits ^ other.bits)

    __sub__ = __add__

    def __mul__(self, other: BinaryPoly) -> BinaryPoly:
        return BinaryPoly(_mul(self.bits, other.bits))

    def __divmod__(self, other: BinaryPoly) -> tuple[BinaryPoly, BinaryPoly]:
        q, r = _divmod(self.bits, other.bits)
        return BinaryPoly(q), BinaryPoly(r)

    def __floordiv__(self, other: BinaryPoly) -> BinaryPoly:
        return divmod(self, other)[0]

    def __mod__(self, other: BinaryPoly) -> BinaryPoly:
        return divmod(self, other)[1]

    def __pow__(self, e: int) -> BinaryPoly:
        if e < 0:
            raise ValueError("negative exponent")
        result, base = 1, self.bits
        while e:
            if e & 1:
                result = _mul(result, base)
            base = _mul(base, base)
            e >>= 1
        return BinaryPoly(result)

    def __call__(self, x: BinaryPoly) -> BinaryPoly:
        """Substitute the polynomial ``x`` for T (Horner)."""
        acc = 0
        for c in reversed(self.coefficients()):
            acc = _mul(acc, x.bits) ^ c
        return BinaryPoly(acc)

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"BinaryPoly({format_poly(self)!r})"


ZERO = BinaryPoly(0)
ONE = BinaryPoly(1)
T = BinaryPoly(0b10)


def poly_add(a: BinaryPoly, b: BinaryPoly) -> BinaryPoly:
    return a + b


def poly_mul(a: BinaryPoly, b: BinaryPoly) -> BinaryPoly:
    return a * b


def poly_divrem(a: BinaryPoly, b: BinaryPoly) -> tuple[BinaryPoly, BinaryPoly]:
    """Return ``(q, r)`` with ``a == q*b + r`` and ``deg r < deg b``.

    Raises ZeroDivisionError when ``b`` is zero.
    """
    return divmod(a, b)


def poly_gcd(a: BinaryPoly, b: BinaryPoly) -> BinaryPoly:
    return BinaryPoly(_gcd(a.bits, b.bits))


def powmod(base: BinaryPoly, exponent: int, modulus: BinaryPoly) -> BinaryPoly:
    """``base**exponent mod modulus`` by square-and-multiply."""
    if modulus.degree < 1:
        raise ValueError("modulus must be nonconstant")
    if exponent < 0:
        raise ValueError("negative exponent")
    return BinaryPoly(_powmod(base.bits, exponent, modulus.bits))


@lru_cache(maxsize=None)
def _irreducibles_of_degree(d: int) -> tuple[int, ...]:
    found = []
    for bits in range(1 << d, 1 << (d + 1)):
        if _is_irreducible(bits):
            found.append(bits)
    return tuple(found)


def _rabin(f: int) -> bool:
    n = f.bit_length() - 1
    x = 0b10

    def frob_power(k):
        y = x
        for _ in range(k):
            y = _mod(_mul(y, y), f)
        return y

    if frob_power(n) != _mod(x, f):
        return False
    for p in factor_int(n):
        if _gcd(f, frob_power(n // p) ^ x) != 1:
            return False
    return True


def _is_irreducible(f: int) -> bool:
    n = f.bit_length() - 1
    if n < 1:
        return False
    if n == 1:
        return True
    if not f & 1:
        return False
    if n > TRIAL_DIVISION_MAX_DEGREE:
        return _rabin(f)
    for d in range(1, n // 2 + 1):
        for g in _irreducibles_of_degree(d):
            if _mod(f, g) == 0:
                return False
    return True


def is_irreducible(p: BinaryPoly) -> bool:
    """True iff ``p`` is irreducible over F2.  Constants are not."""
    return _is_irreducible(p.bits)


def monic_irreducibles(d: int) -> list[BinaryPoly]:
    """All irreducibles of degree ``d`` in ascending bit-value order."""
    if d < 1:
        raise ValueError("degree must be positive")
    return [BinaryPoly(b) for b in _irreducibles_of_degree(d)]


@lru_cache(maxsize=None)
def factor_int(n: int) -> dict[int, int]:
    """Prime factorisation by trial division (fine for n < 2**40)."""
    if n < 1:
        raise ValueError("n must be positive")
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def order_mod(p: BinaryPoly, m: BinaryPoly) -> int:
    """Multiplicative order of ``p`` in (F2[T]/(m))^*, ``m`` irreducible.

    Starts at 2^deg(m) - 1 and strips prime factors while the power stays 1.
    """
    if not is_irreducible(m):
        raise ValueError(f"modulus {m} is not irreducible")
    if (p % m).is_zero():
        raise ValueError(f"{p} is divisible by {m}")
    order = (1 << m.degree) - 1
    for prime in factor_int(order):
        while order % prime == 0 and _powmod(p.bits, order // prime, m.bits) == 1:
            order //= prime
    return order


@dataclass(frozen=True)
class Place:
    """A place of F2(T): finite (irreducible polynomial) or infinite (poly None)."""

    poly: Optional[BinaryPoly] = None

    def __post_init__(self):
        if self.poly is not None and not is_irreducible(self.poly):
            raise ValueError(f"{self.poly} is not irreducible")

    @property
    def is_infinite(self) -> bool:
        return self.poly is None

    @property
    def degree(self) -> int:
        return 1 if self.poly is None else self.poly.degree

    def sort_key(self) -> tuple[int, int, int]:
        # infinity first, then by degree, then by bit value
        if self.poly is None:
            return (0, 0, 0)
        return (1, self.poly.degree, self.poly.bits)

    def __lt__(self, other: Place) -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        return "inf" if self.poly is None else format_poly(self.poly)


INFINITY = Place(None)


def places_up_to(bound: int) -> list[Place]:
    """Every place of degree <= bound, in canonical order."""
    out = [INFINITY] if bound >= 1 else []
    for d in range(1, bound + 1):
        out.extend(Place(p) for p in monic_irreducibles(d))
    return out


_TERM = re.compile(r"T\^(\d+)|T|1")


def parse_poly(text: str) -> BinaryPoly:
    """Parse ``"T^4+T+1"`` style text or an MSB-first bit string like ``"10011"``.

    Duplicate terms cancel, so ``"T^2+T^2"`` is zero.
    """
    compact = "".join(text.split())
    if not compact:
        raise PolyParseError("empty polynomial", 0)
    if re.fullmatch(r"[01]+", compact):
        return BinaryPoly(int(compact, 2))

    # error positions refer to the original string
    where = [i for i, ch in enumerate(text) if not ch.isspace()] + [len(text)]
    bits = 0
    i, n = 0, len(compact)
    while True:
        m = _TERM.match(compact, i)
        if not m:
            raise PolyParseError("expected a term", where[i])
        if m.group(1) is not None:
            e = int(m.group(1))
            if e < 2:
                raise PolyParseError("exponent must be at least 2", where[m.start(1)])
        else:
            e = 1 if m.group(0) == "T" else 0
        bits ^= 1 << e
        i = m.end()
        if i == n:
            break
        if compact[i] != "+":
            raise PolyParseError(f"expected '+', got {compact[i]!r}", where[i])
        i += 1
    return BinaryPoly(bits)


def format_poly(p: BinaryPoly) -> str:
    if p.is_zero():
        return "0"
    terms = []
    for i in range(p.degree, -1, -1):
        if (p.bits >> i) & 1:
            terms.append("1" if i == 0 else "T" if i == 1 else f"T^{i}")
    return "+".join(terms)


def parse_place(text: str) -> Place:
    if text.strip().lower() in ("inf", "infinity", "oo"):
        return INFINITY
    p = parse_poly(text)
    if not is_irreducible(p):
        raise ValueError(f"{format_poly(p)} is not irreducible")
    return Place(p)
