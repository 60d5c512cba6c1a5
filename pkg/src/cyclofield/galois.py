"""Galois data for the compositum of a Carlitz cyclotomic field and a constant field.

For an irreducible conductor M of degree d, Gal(k(Lambda_M)/k) is cyclic of
order 2^d - 1, generated by lambda -> C_g(lambda) for a generator g of
(F2[T]/M)^*.  Adjoining F_{2^n} multiplies by a cyclic group of order n
generated by the arithmetic Frobenius.  Group elements are therefore pairs
``(a, b)`` meaning tau^a chi^b, added componentwise modulo ``(2^d - 1, n)``.

Subgroups are stored as the Hermite normal form of the lattice they pull back
to in Z^2: rows ``(x, y)`` and ``(0, z)`` with ``x | 2^d - 1``, ``z | n`` and
``0 <= y < z``.  The form is unique, so subgroup equality is tuple equality.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Iterable

from .gf2poly import (
    BinaryPoly, Place, ONE, format_poly, is_irreducible, order_mod, places_up_to,
)

__all__ = [
    "GaloisContext", "Subgroup", "FrobeniusData", "SplittingType",
    "new_context", "find_generator", "dlog", "frobenius", "span_subgroup",
    "subgroup_from_generators", "sylow5_of_decomposition", "decomposition_subgroup",
    "subgroups_of_index", "splitting_in_subfield", "spectrum",
    "CarlitzPoly", "carlitz_action",
]

GroupElement = tuple[int, int]


class ReducibleModulusError(ValueError):
    pass


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def find_generator(m: BinaryPoly) -> BinaryPoly:
    """Least polynomial (by bit value) generating (F2[T]/m)^*."""
    if not is_irreducible(m):
        raise ReducibleModulusError(f"{format_poly(m)} is not irreducible")
    full = (1 << m.degree) - 1
    for bits in range(1, 1 << m.degree):
        g = BinaryPoly(bits)
        if order_mod(g, m) == full:
            return g
    raise AssertionError("multiplicative group of a finite field is cyclic")


@dataclass(frozen=True)
class GaloisContext:
    """Gal(k(Lambda_M) F_{2^n} / k) as Z_{2^d-1} x Z_n."""

    modulus: BinaryPoly
    n: int
    generator: BinaryPoly
    cyclotomic_order: int
    dlog_table: dict = field(repr=False, compare=False)

    @property
    def degree(self) -> int:
        return self.modulus.degree

    @property
    def order(self) -> int:
        return self.cyclotomic_order * self.n

    @property
    def moduli(self) -> tuple[int, int]:
        return (self.cyclotomic_order, self.n)

    def add(self, g: GroupElement, h: GroupElement) -> GroupElement:
        return ((g[0] + h[0]) % self.cyclotomic_order, (g[1] + h[1]) % self.n)

    def scale(self, k: int, g: GroupElement) -> GroupElement:
        return ((k * g[0]) % self.cyclotomic_order, (k * g[1]) % self.n)

    def element_order(self, g: GroupElement) -> int:
        N, n = self.moduli
        o1 = N // gcd(g[0], N)
        o2 = n // gcd(g[1], n)
        return o1 * o2 // gcd(o1, o2)

    def elements(self) -> list[GroupElement]:
        return [(a, b) for a in range(self.cyclotomic_order) for b in range(self.n)]

    def full_group(self) -> Subgroup:
        return Subgroup(self.cyclotomic_order, self.n, 1, 0, 1)

    def trivial_group(self) -> Subgroup:
        return Subgroup(self.cyclotomic_order, self.n, self.cyclotomic_order, 0, self.n)

    def cyclotomic_factor(self) -> Subgroup:
        """Z_{2^d-1} x {0}: fixes the constant field extension k F_{2^n}."""
        return Subgroup(self.cyclotomic_order, self.n, 1, 0, self.n)


def new_context(m: BinaryPoly, n: int) -> GaloisContext:
    if n < 1:
        raise ValueError("constant-field degree must be positive")
    if m.degree < 1 or not is_irreducible(m):
        raise ReducibleModulusError(f"{format_poly(m)} is not an irreducible nonconstant modulus")
    g = find_generator(m)
    order = (1 << m.degree) - 1
    table = {}
    x = ONE
    for k in range(order):
        table[x.bits] = k
        x = (x * g) % m
    return GaloisContext(m, n, g, order, table)


def dlog(ctx: GaloisContext, p: BinaryPoly) -> int:
    """Exponent k with generator^k == p mod M."""
    r = p % ctx.modulus
    if r.is_zero():
        raise ValueError(f"{format_poly(p)} is divisible by the modulus")
    return ctx.dlog_table[r.bits]


@dataclass(frozen=True, order=True)
class Subgroup:
    """Subgroup of Z_N x Z_n in Hermite normal form ``<(x, y), (0, z)>``."""

    N: int
    n: int
    x: int
    y: int
    z: int

    @property
    def order(self) -> int:
        return (self.N // self.x) * (self.n // self.z)

    @property
    def index(self) -> int:
        return self.x * self.z

    def generators(self) -> tuple[GroupElement, GroupElement]:
        return ((self.x % self.N, self.y % self.n), (0, self.z % self.n))

    def __contains__(self, g: GroupElement) -> bool:
        a, b = g
        if a % self.x:
            return False
        return (b - (a // self.x) * self.y) % self.z == 0

    def elements(self) -> list[GroupElement]:
        out = set()
        for i in range(self.N // self.x):
            for j in range(self.n // self.z):
                out.add(((i * self.x) % self.N, (i * self.y + j * self.z) % self.n))
        return sorted(out)

    def join(self, other: Subgroup) -> Subgroup:
        return subgroup_from_generators(self.N, self.n, self.generators() + other.generators())

    def issubset(self, other: Subgroup) -> bool:
        return all(g in other for g in self.generators())

    def __str__(self) -> str:
        (a1, b1), (a2, b2) = self.generators()
        return f"⟨({a1},{b1}),({a2},{b2})⟩"


def subgroup_from_generators(N: int, n: int, gens: Iterable[GroupElement]) -> Subgroup:
    """Hermite normal form of the lattice spanned by ``gens``, (N,0) and (0,n)."""
    pivot = (0, 0)
    z = 0
    for a, b in list(gens) + [(N, 0), (0, n)]:
        g, s, t = _xgcd(pivot[0], a)
        if g == 0:
            z = gcd(z, b)
            continue
        other = (a // g) * pivot[1] - (pivot[0] // g) * b
        pivot = (g, s * pivot[1] + t * b)
        z = gcd(z, other)
    x, y = pivot
    return Subgroup(N, n, x, y % z, z)


def span_subgroup(ctx: GaloisContext, g: GroupElement) -> Subgroup:
    return subgroup_from_generators(ctx.cyclotomic_order, ctx.n, [g])


@dataclass(frozen=True)
class FrobeniusData:
    place: Place
    inertia: Subgroup
    frobenius: GroupElement

    @property
    def ramified(self) -> bool:
        return self.inertia.order > 1


def frobenius(ctx: GaloisContext, place: Place) -> FrobeniusData:
    """Inertia group and Frobenius (a coset representative when ramified)."""
    n = ctx.n
    if place.is_infinite:
        # q = 2: the infinite place splits completely in k(Lambda_M)
        return FrobeniusData(place, ctx.trivial_group(), (0, 1 % n))
    p = place.poly
    if p == ctx.modulus:
        return FrobeniusData(place, ctx.cyclotomic_factor(), (0, p.degree % n))
    return FrobeniusData(place, ctx.trivial_group(), (dlog(ctx, p), p.degree % n))


def decomposition_subgroup(ctx: GaloisContext, place: Place) -> Subgroup:
    data = frobenius(ctx, place)
    return data.inertia.join(span_subgroup(ctx, data.frobenius))


def sylow5_of_decomposition(ctx: GaloisContext, place: Place, p: int = 5) -> Subgroup:
    """The order-``p`` subgroup of the (cyclic) decomposition group of an unramified place."""
    data = frobenius(ctx, place)
    if data.ramified:
        raise ValueError(f"{place} is ramified; its decomposition group need not be cyclic")
    size = ctx.element_order(data.frobenius)
    if size % p:
        raise ValueError(f"decomposition group of {place} has order {size}, not divisible by {p}")
    return span_subgroup(ctx, ctx.scale(size // p, data.frobenius))


def subgroups_of_index(ctx: GaloisContext, index: int) -> list[Subgroup]:
    N, n = ctx.moduli
    if index < 1 or (N * n) % index:
        raise ValueError(f"index {index} does not divide the group order {N * n}")
    out = []
    for x in range(1, N + 1):
        if N % x or index % x:
            continue
        z = index // x
        if n % z:
            continue
        for y in range(z):
            if ((N // x) * y) % z == 0:
                out.append(Subgroup(N, n, x, y, z))
    return sorted(out)


@dataclass(frozen=True)
class SplittingType:
    e: int
    f: int
    g: int

    def place_degree(self, base_degree: int) -> int:
        return base_degree * self.f

    @property
    def is_split(self) -> bool:
        return self.e == 1 and self.f == 1

    @property
    def is_inert(self) -> bool:
        return self.e == 1 and self.g == 1

    def __str__(self) -> str:
        return f"({self.e},{self.f},{self.g})"


def _order_modulo(ctx: GaloisContext, g: GroupElement, sub: Subgroup) -> int:
    k, h = 1, g
    while h not in sub:
        h = ctx.add(h, g)
        k += 1
    return k


def splitting_in_subfield(ctx: GaloisContext, place: Place, U: Subgroup) -> SplittingType:
    """Decomposition of ``place`` in the fixed field of ``U``."""
    data = frobenius(ctx, place)
    with_inertia = U.join(data.inertia)
    e = with_inertia.order // U.order
    f = _order_modulo(ctx, data.frobenius, with_inertia)
    g = U.index // (e * f)
    return SplittingType(e, f, g)


def spectrum(ctx: GaloisContext, U: Subgroup, bound: int) -> tuple[int, ...]:
    """Place counts N_1..N_bound of the fixed field of ``U`` (degrees over F2)."""
    counts = [0] * (bound + 1)
    for place in places_up_to(bound):
        st = splitting_in_subfield(ctx, place, U)
        deg = st.place_degree(place.degree)
        if deg <= bound:
            counts[deg] += st.g
    return tuple(counts[1:])


class CarlitzPoly:
    """An F2-linear polynomial sum_i c_i x^(2^i) with c_i in F2[T]."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[BinaryPoly]):
        c = list(coeffs)
        while c and c[-1].is_zero():
            c.pop()
        self.coeffs = tuple(c)

    def __eq__(self, other):
        return isinstance(other, CarlitzPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other: CarlitzPoly) -> CarlitzPoly:
        k = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (BinaryPoly(0),) * (k - len(self.coeffs))
        b = other.coeffs + (BinaryPoly(0),) * (k - len(other.coeffs))
        return CarlitzPoly(x + y for x, y in zip(a, b))

    def compose(self, other: CarlitzPoly) -> CarlitzPoly:
        """``self(other(x))``; uses (sum b_j x^(2^j))^(2^i) = sum b_j^(2^i) x^(2^(i+j))."""
        out = [BinaryPoly(0)] * (len(self.coeffs) + len(other.coeffs))
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b ** (1 << i)
        return CarlitzPoly(out)

    def dense(self) -> dict[int, BinaryPoly]:
        """Map x-degree -> nonzero coefficient."""
        return {1 << i: c for i, c in enumerate(self.coeffs) if c}

    def __repr__(self):
        parts = []
        for deg, c in sorted(self.dense().items(), reverse=True):
            mono = "x" if deg == 1 else f"x^{deg}"
            parts.append(mono if c == ONE else f"({format_poly(c)}){mono}")
        return " + ".join(parts) or "0"


_CARLITZ_T = CarlitzPoly([BinaryPoly(0b10), ONE])


def carlitz_action(A: BinaryPoly) -> CarlitzPoly:
    """C_A with C_1 = x and C_T = x^2 + T x, by Horner in C_T."""
    acc = CarlitzPoly([])
    for c in reversed(A.coefficients()):
        acc = _CARLITZ_T.compose(acc)
        if c:
            acc = acc + CarlitzPoly([ONE])
    return acc
