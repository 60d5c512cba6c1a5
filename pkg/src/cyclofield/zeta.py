"""Zeta numerators, class numbers and genera from place counts.

All arithmetic is on Python integers, so nothing can wrap around.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Sequence


class InconsistentDataError(ValueError):
    """Place counts or ramification data that no function field can have."""


@dataclass(frozen=True)
class PlaceSpectrum:
    """Counts N_1..N_B of places of each degree over F_q."""

    counts: tuple[int, ...]
    q: int = 2

    def __post_init__(self):
        object.__setattr__(self, "counts", tuple(int(c) for c in self.counts))
        if self.q < 2:
            raise ValueError("q must be at least 2")
        if any(c < 0 for c in self.counts):
            raise ValueError("place counts must be nonnegative")

    @property
    def bound(self) -> int:
        return len(self.counts)

    def __getitem__(self, degree: int) -> int:
        return self.counts[degree - 1]


@dataclass(frozen=True)
class LPolynomial:
    coefficients: tuple[int, ...]
    genus: int
    q: int = 2

    def __post_init__(self):
        g, q, a = self.genus, self.q, self.coefficients
        if len(a) != 2 * g + 1:
            raise ValueError(f"expected {2 * g + 1} coefficients, got {len(a)}")
        if a[0] != 1:
            raise InconsistentDataError("constant term must be 1")
        for i in range(g + 1):
            if a[2 * g - i] != q ** (g - i) * a[i]:
                raise InconsistentDataError(f"functional equation fails at degree {2 * g - i}")

    def __call__(self, u: int) -> int:
        return sum(c * u ** i for i, c in enumerate(self.coefficients))


@dataclass(frozen=True)
class Ramification:
    """A tamely ramified base place: its degree and splitting (e, f, g)."""

    base_degree: int
    e: int
    f: int
    g: int

    @property
    def different_degree(self) -> int:
        return (self.e - 1) * self.f * self.base_degree * self.g


def divisor_counts(spec: PlaceSpectrum) -> tuple[int, ...]:
    """A_0..A_B: coefficients of prod_d (1 - u^d)^(-N_d) truncated at u^B."""
    B = spec.bound
    series = [1] + [0] * B
    for d, N in enumerate(spec.counts, start=1):
        if N == 0:
            continue
        # (1 - u^d)^(-N) = sum_k C(N+k-1, k) u^(dk)
        factor = [0] * (B + 1)
        for k in range(B // d + 1):
            factor[d * k] = comb(N + k - 1, k)
        series = [sum(series[j] * factor[i - j] for j in range(i + 1)) for i in range(B + 1)]
    return tuple(series)


def _recurrence(A: Sequence[int], q: int, upto: int) -> list[int]:
    def at(i):
        return A[i] if i >= 0 else 0
    return [at(i) - (q + 1) * at(i - 1) + q * at(i - 2) for i in range(upto + 1)]


def l_polynomial(spec: PlaceSpectrum, genus: int) -> LPolynomial:
    """Numerator of the zeta function; needs counts up to degree ``genus``."""
    if genus < 0:
        raise ValueError("genus must be nonnegative")
    if spec.bound < genus:
        raise ValueError(f"need place counts up to degree {genus}, have {spec.bound}")
    q = spec.q
    A = divisor_counts(spec)
    low = _recurrence(A, q, genus)
    high = [q ** (genus - i) * low[i] for i in range(genus - 1, -1, -1)]
    return LPolynomial(tuple(low + high), genus, q)


def class_number(L: LPolynomial) -> int:
    h = L(1)
    if h < 1:
        raise InconsistentDataError(f"L(1) = {h} is not a class number")
    return h


def genus_rh(ext_degree: int, ramification: Sequence[Ramification]) -> int:
    """Genus of a tame degree-``ext_degree`` extension of a genus-0 field.

    2g - 2 = -2 * ext_degree + sum of (e - 1) f deg g over ramified places.
    """
    if ext_degree < 1:
        raise ValueError("extension degree must be positive")
    total = 0
    for r in ramification:
        if r.e < 2:
            raise ValueError("listed places must be ramified (e >= 2)")
        if r.e % 2 == 0:
            raise ValueError("wild ramification (even e) is not supported over F2")
        total += r.different_degree
    twice = total - 2 * ext_degree + 2
    if twice % 2:
        raise InconsistentDataError("different degree has the wrong parity")
    if twice < 0:
        raise InconsistentDataError(f"Riemann-Hurwitz gives 2g - 2 = {twice - 2}")
    return twice // 2


@dataclass(frozen=True)
class Check:
    name: str
    expected: object
    got: object

    @property
    def ok(self) -> bool:
        return self.expected == self.got


@dataclass(frozen=True)
class WeilReport:
    checks: tuple[Check, ...]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.ok]


def verify_weil_consistency(spec: PlaceSpectrum, genus: int) -> WeilReport:
    """Cross-check counts up to degree 2g against the zeta relations.

    Every a_i is computed straight from the A-recurrence and compared with the
    functional-equation value; A_{2g-1}, A_{2g} are compared with
    h (q^(n-g+1) - 1)/(q - 1).
    """
    g, q = genus, spec.q
    if spec.bound != 2 * g:
        raise ValueError(f"need counts up to exactly degree {2 * g}, have {spec.bound}")
    A = divisor_counts(spec)
    direct = _recurrence(A, q, 2 * g)
    checks = [Check("a_0 = 1", 1, direct[0])]
    for i in range(g + 1, 2 * g + 1):
        checks.append(Check(f"a_{i} = q^{i - g} a_{2 * g - i}",
                            q ** (i - g) * direct[2 * g - i], direct[i]))
    checks.append(Check(f"a_{2 * g} = q^g", q ** g, direct[2 * g]))
    h = sum(direct[: g + 1]) + sum(q ** (g - i) * direct[i] for i in range(g))
    for n in (2 * g - 1, 2 * g):
        if n > 2 * g - 2 and n >= 0:
            checks.append(Check(f"A_{n} closed form", h * (q ** (n - g + 1) - 1) // (q - 1), A[n]))
    return WeilReport(tuple(checks))
