"""PGL(2, F2) acting on the places of F2(T), and subfield fingerprints.

A map with matrix ``(a, b, c, d)`` is the field automorphism T -> (aT+b)/(cT+d).
It sends the place of an irreducible P of degree m to the place of the
numerator (cT+d)^m P((aT+b)/(cT+d)).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .galois import GaloisContext, SplittingType, Subgroup, splitting_in_subfield
from .gf2poly import BinaryPoly, Place, INFINITY, is_irreducible, places_up_to, format_poly


@dataclass(frozen=True)
class MoebiusMap:
    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if (self.a * self.d + self.b * self.c) % 2 != 1:
            raise ValueError("matrix is not invertible over F2")

    @property
    def encoding(self) -> int:
        return self.a << 3 | self.b << 2 | self.c << 1 | self.d

    def __mul__(self, other: MoebiusMap) -> MoebiusMap:
        """Composition of field automorphisms: ``(self * other)(f) = self(other(f))``.

        Substituting other's fraction into T and then self's gives the
        matrix product other.matrix @ self.matrix.
        """
        a1, b1, c1, d1 = other.a, other.b, other.c, other.d
        a2, b2, c2, d2 = self.a, self.b, self.c, self.d
        return MoebiusMap((a1 * a2 + b1 * c2) % 2, (a1 * b2 + b1 * d2) % 2,
                          (c1 * a2 + d1 * c2) % 2, (c1 * b2 + d1 * d2) % 2)

    def inverse(self) -> MoebiusMap:
        # adjugate; the determinant is 1 over F2
        return MoebiusMap(self.d, self.b, self.c, self.a)

    def __str__(self) -> str:
        return f"T -> ({self.a}T+{self.b})/({self.c}T+{self.d})"


IDENTITY = MoebiusMap(1, 0, 0, 1)


def enumerate_maps() -> list[MoebiusMap]:
    """The six elements of PGL(2, F2): identity, then ascending encoding."""
    maps = []
    for enc in range(16):
        a, b, c, d = (enc >> 3) & 1, (enc >> 2) & 1, (enc >> 1) & 1, enc & 1
        if (a * d + b * c) % 2 == 1:
            maps.append(MoebiusMap(a, b, c, d))
    maps.sort(key=lambda m: (m != IDENTITY, m.encoding))
    return maps


def act_place(sigma: MoebiusMap, place: Place) -> Place:
    a, b, c, d = BinaryPoly(sigma.a), BinaryPoly(sigma.b), BinaryPoly(sigma.c), BinaryPoly(sigma.d)
    num = a * BinaryPoly(0b10) + b
    den = c * BinaryPoly(0b10) + d
    if place.is_infinite:
        # image is the pole of the substituted T, i.e. the zero of cT + d
        return INFINITY if sigma.c == 0 else Place(den)
    p = place.poly
    m = p.degree
    image = BinaryPoly(0)
    for i, coeff in enumerate(p.coefficients()):
        if coeff:
            image = image + num ** i * den ** (m - i)
    if image.degree < 1:
        # P was the linear factor vanishing at sigma(infinity)
        return INFINITY
    if image.degree != m or not is_irreducible(image):
        raise AssertionError(f"{sigma} sent {format_poly(p)} to non-place {format_poly(image)}")
    return Place(image)


@dataclass(frozen=True)
class Fingerprint:
    subgroup: Subgroup
    bound: int
    entries: tuple[tuple[Place, SplittingType], ...]

    def as_dict(self) -> dict[Place, SplittingType]:
        return dict(self.entries)

    def image(self, sigma: MoebiusMap) -> dict[Place, SplittingType]:
        return {act_place(sigma, p): st for p, st in self.entries}


def fingerprint(ctx: GaloisContext, U: Subgroup, bound: int) -> Fingerprint:
    entries = tuple((p, splitting_in_subfield(ctx, p, U)) for p in places_up_to(bound))
    return Fingerprint(U, bound, entries)


def certifies(ctx: GaloisContext, sigma: MoebiusMap, U_a: Subgroup, U_b: Subgroup,
              bound: int = 7) -> bool:
    """True if every place up to ``bound`` splits in fix(U_a) as its image splits in fix(U_b)."""
    target = fingerprint(ctx, U_b, bound).as_dict()
    return all(target[act_place(sigma, p)] == st for p, st in fingerprint(ctx, U_a, bound).entries)


def find_isomorphism(ctx: GaloisContext, U_a: Subgroup, U_b: Subgroup,
                     bound: int = 7) -> Optional[MoebiusMap]:
    """First map carrying the splitting table of fix(U_a) onto that of fix(U_b).

    Only places up to ``bound`` are compared, so a hit is a compatibility
    certificate at that bound rather than a proof of isomorphism.
    """
    fa = fingerprint(ctx, U_a, bound)
    fb = fingerprint(ctx, U_b, bound).as_dict()
    for sigma in enumerate_maps():
        if all(fb[act_place(sigma, p)] == st for p, st in fa.entries):
            return sigma
    return None
