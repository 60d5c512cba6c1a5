"""End-to-end pipeline: subfields of k(Lambda_M) F_{2^n}, their invariants,
and the reproduction of the genus-4, class-number-1 computation over F2.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

from . import galois, zeta
from .galois import GaloisContext, Subgroup, new_context, subgroup_from_generators
from .gf2poly import (
    BinaryPoly, Place, INFINITY, format_poly, is_irreducible, monic_irreducibles,
    order_mod, parse_poly, places_up_to, powmod,
)
from .moebius import MoebiusMap, act_place, enumerate_maps, find_isomorphism

log = logging.getLogger(__name__)

DEFAULT_MODULUS = "T^4+T+1"
DEFAULT_N = 5
DEFAULT_INDEX = 5
DEFAULT_BOUND = 7
DEFAULT_PATTERN = (0, 0, 0, 1)


class ConfigError(ValueError):
    """Invalid run configuration (CLI exit code 2)."""


@dataclass(frozen=True)
class RunConfig:
    modulus: str = DEFAULT_MODULUS
    n: int = DEFAULT_N
    index: int = DEFAULT_INDEX
    bound: int = DEFAULT_BOUND
    fmt: str = "json"
    pattern: Optional[tuple[int, ...]] = DEFAULT_PATTERN

    def modulus_poly(self) -> BinaryPoly:
        try:
            m = parse_poly(self.modulus)
        except ValueError as exc:
            raise ConfigError(str(exc)) from exc
        if m.degree < 1 or not is_irreducible(m):
            raise ConfigError(f"modulus {format_poly(m)} is not irreducible")
        return m

    def validate(self) -> None:
        self.modulus_poly()
        if self.n < 1:
            raise ConfigError("constant degree must be positive")
        if self.bound < 1:
            raise ConfigError("bound must be positive")
        if self.fmt not in ("json", "md", "csv"):
            raise ConfigError(f"unknown format {self.fmt!r}")
        if self.pattern is not None and len(self.pattern) > self.bound:
            raise ConfigError("pattern is longer than the bound")


@dataclass
class FieldReport:
    subgroup: Subgroup
    labels: list[str]
    degree: int
    spectrum: tuple[int, ...]
    genus: Optional[int]
    l_polynomial: Optional[tuple[int, ...]]
    class_number: Optional[int]
    ramified: list[str]
    split: list[str]
    inert: list[str]
    constant_extension: bool = False
    provenance: str = "derived"
    isomorphic_to: Optional[dict] = None

    def to_dict(self) -> dict:
        return {
            "subgroup": str(self.subgroup),
            "labels": list(self.labels),
            "degree": self.degree,
            "spectrum": list(self.spectrum),
            "genus": self.genus,
            "l_polynomial": None if self.l_polynomial is None else list(self.l_polynomial),
            "class_number": self.class_number,
            "ramified": self.ramified,
            "split": self.split,
            "inert": self.inert,
            "constant_extension": self.constant_extension,
            "provenance": self.provenance,
            "isomorphic_to": self.isomorphic_to,
        }


def labelled_subgroups(ctx: GaloisContext) -> dict[str, Subgroup]:
    """Fixing groups of L, k_5 and R_1..R_4 in the default context."""
    N, n = ctx.moduli
    out = {
        "L": subgroup_from_generators(N, n, [(5, 0), (0, 1)]),
        "k5": subgroup_from_generators(N, n, [(1, 0)]),
    }
    for label, a in (("R1", 3), ("R2", 12), ("R3", 6), ("R4", 9)):
        out[label] = subgroup_from_generators(N, n, [(a, 1), (5, 0)])
    return out


def _is_default_setting(ctx: GaloisContext, index: int) -> bool:
    return ctx.modulus == parse_poly(DEFAULT_MODULUS) and ctx.n == 5 and index == 5


def build_report(ctx: GaloisContext, U: Subgroup, bound: int, labels: list[str]) -> FieldReport:
    spec = galois.spectrum(ctx, U, bound)
    ramified, split, inert = [], [], []
    ram_data = []
    for place in places_up_to(bound):
        st = galois.splitting_in_subfield(ctx, place, U)
        if st.e > 1:
            ramified.append(str(place))
            ram_data.append(zeta.Ramification(place.degree, st.e, st.f, st.g))
        elif st.is_split:
            split.append(str(place))
        elif st.is_inert:
            inert.append(str(place))
    constant_degree = U.join(ctx.cyclotomic_factor()).index
    report = FieldReport(U, labels, U.index, spec, None, None, None, ramified, split, inert,
                         constant_extension=constant_degree > 1)
    if report.constant_extension:
        return report
    genus = zeta.genus_rh(U.index, ram_data)
    if bound < genus:
        raise ConfigError(f"bound {bound} is below the genus {genus} of {U}")
    L = zeta.l_polynomial(zeta.PlaceSpectrum(spec, q=2), genus)
    report.genus = genus
    report.l_polynomial = L.coefficients
    report.class_number = zeta.class_number(L)
    return report


ContextFactory = Callable[[BinaryPoly, int], GaloisContext]


def classify(config: RunConfig = RunConfig(),
             context_factory: ContextFactory = new_context) -> list[FieldReport]:
    config.validate()
    ctx = context_factory(config.modulus_poly(), config.n)
    try:
        subgroups = galois.subgroups_of_index(ctx, config.index)
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc

    named = {}
    if _is_default_setting(ctx, config.index):
        named = {U: label for label, U in labelled_subgroups(ctx).items()}

    reports = []
    for i, U in enumerate(subgroups, start=1):
        labels = [f"S{i}"] + ([named[U]] if U in named else [])
        r = build_report(ctx, U, config.bound, labels)
        if U in named and named[U] in ("R1", "R2"):
            r.provenance = "reference"
        reports.append(r)

    if config.pattern is not None:
        k = len(config.pattern)
        reports = [r for r in reports
                   if not r.constant_extension and r.spectrum[:k] == tuple(config.pattern)]

    geometric = [r for r in reports if not r.constant_extension]
    for r in geometric:
        for other in geometric:
            if other is r:
                continue
            sigma = find_isomorphism(ctx, r.subgroup, other.subgroup, config.bound)
            if sigma is not None:
                r.isomorphic_to = {"partner": str(other.subgroup), "moebius": str(sigma)}
                break
    log.info("classified %d subgroups of index %d, kept %d",
             len(subgroups), config.index, len(reports))
    return reports


def table_powers(modulus: BinaryPoly, extras: Optional[Sequence[BinaryPoly]] = None) -> list[dict]:
    """Rows T^j mod M for j = 1..2^d - 2, then reductions of ``extras``.

    ``extras`` defaults to the other irreducibles of the same degree as M.
    """
    if modulus.degree < 1 or not is_irreducible(modulus):
        raise ConfigError(f"modulus {format_poly(modulus)} is not irreducible")
    if extras is None:
        extras = [p for p in monic_irreducibles(modulus.degree) if p != modulus]
    T = BinaryPoly(0b10)
    rows = []
    for j in range(1, (1 << modulus.degree) - 1):
        rows.append({"input": "T" if j == 1 else f"T^{j}",
                     "residue": format_poly(powmod(T, j, modulus))})
    for p in extras:
        rows.append({"input": format_poly(p), "residue": format_poly(p % modulus)})
    return rows


def theta_symbol(g: tuple[int, int]) -> str:
    def part(sym, e):
        return "" if e == 0 else sym if e == 1 else f"{sym}^{e}"
    return (part("τ", g[0]) + part("χ", g[1])) or "id"


def frobenius_table(ctx: GaloisContext, places: Optional[Sequence[Place]] = None,
                    sub_order: int = 5) -> list[dict]:
    if places is None:
        places = places_up_to(ctx.degree)
    rows = []
    for place in places:
        data = galois.frobenius(ctx, place)
        D = galois.decomposition_subgroup(ctx, place)
        row = {
            "place": str(place),
            "degree": place.degree,
            "ramified": data.ramified,
            "cyclotomic_order": None,
            "theta": list(data.frobenius),
            "theta_symbol": theta_symbol(data.frobenius),
            "decomposition": str(D),
            "decomposition_order": D.order,
            "inertia": str(data.inertia),
            "sub_order": None,
        }
        if not data.ramified:
            row["cyclotomic_order"] = 1 if place.is_infinite else order_mod(place.poly, ctx.modulus)
            if D.order % sub_order == 0:
                row["sub_order"] = str(galois.sylow5_of_decomposition(ctx, place, sub_order))
        rows.append(row)
    return rows


@dataclass(frozen=True)
class ReferenceCheck:
    group: str
    name: str
    expected: object
    got: object

    @property
    def ok(self) -> bool:
        return self.expected == self.got

    def to_dict(self) -> dict:
        return {"group": self.group, "check": self.name, "expected": str(self.expected),
                "got": str(self.got), "status": "pass" if self.ok else "FAIL"}


def _safe(fn):
    try:
        return fn()
    except Exception as exc:  # a crashed check is a failed check
        return f"error: {type(exc).__name__}: {exc}"


def verify_paper(context_factory: ContextFactory = new_context) -> list[ReferenceCheck]:
    """Every published value of the genus-4 classification, recomputed."""
    P = parse_poly
    M = P(DEFAULT_MODULUS)
    T = P("T")
    checks: list[ReferenceCheck] = []

    def add(group, name, expected, thunk):
        checks.append(ReferenceCheck(group, name, expected, _safe(thunk)))

    # power table
    table = {
        1: "T", 2: "T^2", 3: "T^3", 4: "T+1", 5: "T^2+T", 6: "T^3+T^2", 7: "T^3+T+1",
        8: "T^2+1", 9: "T^3+T", 10: "T^2+T+1", 11: "T^3+T^2+T", 12: "T^3+T^2+T+1",
        13: "T^3+T^2+1", 14: "T^3+1",
    }
    for j, want in table.items():
        add("gf2poly", f"T^{j} mod M", want, lambda j=j: format_poly(powmod(T, j, M)))
    add("gf2poly", "T^4+T^3+1 mod M", "T^3+T", lambda: format_poly(P("T^4+T^3+1") % M))
    add("gf2poly", "T^4+T^3+T^2+T+1 mod M", "T^3+T^2",
        lambda: format_poly(P("T^4+T^3+T^2+T+1") % M))
    add("gf2poly", "T^7+T^4+1 mod M", "T^3+1", lambda: format_poly(P("T^7+T^4+1") % M))
    add("gf2poly", "T^7+T^3+1 mod M", "T", lambda: format_poly(P("T^7+T^3+1") % M))
    for text in ("T^4+T+1", "T^7+T^4+1", "T^7+T^3+1"):
        add("gf2poly", f"{text} irreducible", True, lambda t=text: is_irreducible(P(t)))
    add("gf2poly", "degree-4 places", ["T^4+T+1", "T^4+T^3+1", "T^4+T^3+T^2+T+1"],
        lambda: [format_poly(p) for p in monic_irreducibles(4)])
    orders = {"T": 15, "T+1": 15, "T^2+T+1": 3, "T^3+T^2+1": 15, "T^3+T+1": 15,
              "T^4+T^3+1": 5, "T^4+T^3+T^2+T+1": 5}
    for text, want in orders.items():
        add("gf2poly", f"o(phi_{text})", want, lambda t=text: order_mod(P(t), M))

    # Frobenius data
    def ctx1():
        return context_factory(M, 1)

    def ctx5():
        return context_factory(M, 5)

    add("galois", "generator of (F2[T]/M)^*", "T", lambda: format_poly(ctx5().generator))
    add("galois", "dlog(T+1)", 4, lambda: galois.dlog(ctx5(), P("T+1")))
    add("galois", "dlog(T^3+1)", 14, lambda: galois.dlog(ctx5(), P("T^3+1")))

    def D1(text):
        c = ctx1()
        place = INFINITY if text == "inf" else Place(P(text))
        return galois.decomposition_subgroup(c, place)

    def span1(*gens):
        return subgroup_from_generators(15, 1, list(gens))

    add("galois", "D_T = <tau>", span1((1, 0)), lambda: D1("T"))
    add("galois", "D_{T+1} = <tau>", span1((1, 0)), lambda: D1("T+1"))
    add("galois", "D_{T^3+T^2+1} = <tau>", span1((1, 0)), lambda: D1("T^3+T^2+1"))
    add("galois", "D_{T^3+T+1} = <tau>", span1((1, 0)), lambda: D1("T^3+T+1"))
    add("galois", "D_inf trivial", span1(), lambda: D1("inf"))
    add("galois", "D_{T^2+T+1} = <tau^5>", span1((5, 0)), lambda: D1("T^2+T+1"))
    add("galois", "D_{T^4+T^3+1} = <tau^3>", span1((3, 0)), lambda: D1("T^4+T^3+1"))
    add("galois", "D_{T^4+T^3+T^2+T+1} = <tau^3>", span1((3, 0)), lambda: D1("T^4+T^3+T^2+T+1"))

    thetas = {"T": (1, 1), "T+1": (4, 1), "T^3+T^2+1": (13, 3), "T^3+T+1": (7, 3),
              "T^4+T^3+1": (9, 4), "T^4+T^3+T^2+T+1": (6, 4)}
    for text, want in thetas.items():
        add("galois", f"theta_{text}", want,
            lambda t=text: galois.frobenius(ctx5(), Place(P(t))).frobenius)
    add("galois", "theta_inf", (0, 1), lambda: galois.frobenius(ctx5(), INFINITY).frobenius)

    def span5(*gens):
        return subgroup_from_generators(15, 5, list(gens))

    H = {"T": (6, 1), "T^3+T^2+1": (6, 1), "T^4+T^3+1": (6, 1),
         "T+1": (9, 1), "T^3+T+1": (9, 1), "T^4+T^3+T^2+T+1": (9, 1),
         "T^7+T^4+1": (12, 1), "T^7+T^3+1": (3, 1)}
    for text, gen in H.items():
        add("galois", f"H_{text}", span5(gen),
            lambda t=text: galois.sylow5_of_decomposition(ctx5(), Place(P(t))))
    add("galois", "<tau^6 chi> != <tau^9 chi>", True, lambda: span5((6, 1)) != span5((9, 1)))
    add("galois", "index-5 subfields (L, k5, R1..R4)", 6,
        lambda: len(galois.subgroups_of_index(ctx5(), 5)))

    def split5(label, text):
        c = ctx5()
        place = INFINITY if text == "inf" else Place(P(text))
        return galois.splitting_in_subfield(c, place, labelled_subgroups(c)[label])

    S = galois.SplittingType
    for label in ("R1", "R2", "R3", "R4"):
        add("galois", f"inf inert in {label}", S(1, 5, 1), lambda lb=label: split5(lb, "inf"))
        add("galois", f"T^2+T+1 inert in {label}", S(1, 5, 1),
            lambda lb=label: split5(lb, "T^2+T+1"))
    for label in ("R1", "R2"):
        add("galois", f"M totally ramified in {label}", S(5, 1, 1),
            lambda lb=label: split5(lb, DEFAULT_MODULUS))
        for place in places_up_to(4):
            if place.poly == M:
                continue
            add("galois", f"{place} inert in {label}", S(1, 5, 1),
                lambda lb=label, t=str(place): split5(lb, t))
    for text in ("T", "T^3+T^2+1", "T^4+T^3+1"):
        add("galois", f"{text} splits in R3", S(1, 1, 5), lambda t=text: split5("R3", t))
    for text in ("T+1", "T^3+T+1", "T^4+T^3+T^2+T+1"):
        add("galois", f"{text} splits in R4", S(1, 1, 5), lambda t=text: split5("R4", t))
    add("galois", "T^7+T^4+1 splits in R2", S(1, 1, 5), lambda: split5("R2", "T^7+T^4+1"))
    add("galois", "T^7+T^4+1 inert in R1", S(1, 5, 1), lambda: split5("R1", "T^7+T^4+1"))
    add("galois", "T^7+T^3+1 splits in R1", S(1, 1, 5), lambda: split5("R1", "T^7+T^3+1"))
    add("galois", "T^7+T^3+1 inert in R2", S(1, 5, 1), lambda: split5("R2", "T^7+T^3+1"))
    add("galois", "k5: no places of degree 1", (0,),
        lambda: galois.spectrum(ctx5(), labelled_subgroups(ctx5())["k5"], 1))

    # zeta
    reference_L = (1, -3, 2, 0, 1, 0, 8, -24, 16)

    def r1_spectrum(bound):
        c = ctx5()
        return galois.spectrum(c, labelled_subgroups(c)["R1"], bound)

    add("zeta", "N_1..N_5 of R1", (0, 0, 0, 1, 3), lambda: r1_spectrum(5))
    add("zeta", "A_0..A_5 of R1", (1, 0, 0, 0, 1, 3),
        lambda: zeta.divisor_counts(zeta.PlaceSpectrum(r1_spectrum(5))))
    add("zeta", "L-polynomial of R1", reference_L,
        lambda: zeta.l_polynomial(zeta.PlaceSpectrum(r1_spectrum(4)), 4).coefficients)
    add("zeta", "h = P(1)", 1,
        lambda: zeta.class_number(zeta.LPolynomial(reference_L, 4)))
    add("zeta", "Riemann-Hurwitz genus with different p^4", 4,
        lambda: zeta.genus_rh(5, [zeta.Ramification(4, 5, 1, 1)]))
    add("zeta", "Weil consistency of R1 to degree 8", True,
        lambda: zeta.verify_weil_consistency(zeta.PlaceSpectrum(r1_spectrum(8)), 4).ok)

    # Moebius maps
    maps = enumerate_maps()
    inv_T = MoebiusMap(0, 1, 1, 0)
    inv_T1 = MoebiusMap(0, 1, 1, 1)
    add("moebius", "|PGL(2,F2)|", 6, lambda: len(maps))
    add("moebius", "T -> 1/T and T -> 1/(T+1) present", True,
        lambda: inv_T in maps and inv_T1 in maps)
    for sigma, src, dst in ((inv_T, "T^4+T+1", "T^4+T^3+1"),
                            (inv_T, "T^7+T^4+1", "T^7+T^3+1"),
                            (inv_T1, "T^4+T+1", "T^4+T^3+T^2+T+1")):
        add("moebius", f"{sigma}: {src} -> {dst}", dst,
            lambda s=sigma, t=src: str(act_place(s, Place(P(t)))))
    add("moebius", "sigma(R1) = R2 with sigma: T -> 1/T", str(inv_T),
        lambda: str(find_isomorphism(ctx5(), labelled_subgroups(ctx5())["R1"],
                                     labelled_subgroups(ctx5())["R2"], 7)))

    # classification
    def survivors():
        return classify(RunConfig(), context_factory)

    add("classify", "surviving fields", 2, lambda: len(survivors()))
    add("classify", "survivors are R1, R2", [["S3", "R1"], ["S4", "R2"]],
        lambda: [r.labels for r in survivors()])
    add("classify", "genus and h of survivors", [(4, 1), (4, 1)],
        lambda: [(r.genus, r.class_number) for r in survivors()])
    add("classify", "L-polynomials of survivors", [reference_L, reference_L],
        lambda: [r.l_polynomial for r in survivors()])
    return checks
