"""Lower and upper bounds on ambient dimensions for k-regular maps.

Lower bounds come from nonvanishing dual or Chern class degrees of the
relevant configuration bundles: a class surviving in degree d over a
k-point configuration space forces every k-regular map into R^N (or C^N)
to have N at least d plus the point count (real, closed pieces) or d plus
one (plane pieces).  Every report names the rule that produced each number;
closed-form power-of-two evaluations are kept separate from the bundle
computations so the two can be compared in tests.

Upper bounds are genuine constructions: the monomial curve in the plane,
the (1, x) sphere embedding, a table of 3-regular maps of real projective
spaces, and coordinate direct sums of those for disjoint pieces.  When both
sides meet, the report marks the bound tight.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional, Sequence

from .bundles import COMPLEX, REAL, UnsupportedBundleError, lambda_top
from .fields import digit_sum_base_p, is_prime
from .manifolds import (ComplexProj, Euclid, ManifoldSpec, QuatProj,
                        RealProj, Sphere, atoms, floor_log2, is_closed,
                        real_dimension, render, top_dual_degree_closed_form)

MAIN_THEOREM_1 = "Main Theorem I"
MAIN_THEOREM_2 = "Main Theorem II"
DISJOINT_REAL = "disjoint union lower bound (real)"
DISJOINT_COMPLEX = "disjoint union lower bound (complex)"

_CLOSED_ATOMS = (Sphere, RealProj, ComplexProj, QuatProj)


@dataclass(frozen=True)
class RegularQuery:
    """Pieces (spec, point count) asked about together, with a regime."""

    pieces: tuple
    regime: str = REAL

    def __post_init__(self):
        if self.regime not in (REAL, COMPLEX):
            raise ValueError(f"unknown regime {self.regime!r}")
        pieces = tuple((spec, points) for spec, points in self.pieces)
        if not pieces:
            raise ValueError("a query needs at least one piece")
        for spec, points in pieces:
            if not isinstance(points, int) or points < 2:
                raise ValueError(
                    f"piece ({render(spec)}, {points!r}): point count must "
                    "be an integer >= 2")
        object.__setattr__(self, "pieces", pieces)


@dataclass(frozen=True)
class PieceBound:
    """One piece's share of a bound: class degree and its contribution."""

    spec: ManifoldSpec
    points: int
    top_degree: int
    contribution: int
    is_lower_bound: bool
    source: str


@dataclass(frozen=True)
class ExistenceRecord:
    """A construction: a k-regular map into R^(ambient_dim) exists."""

    ambient_dim: int
    source: str


@dataclass(frozen=True)
class TightnessInfo:
    """Best known construction next to a lower bound."""

    upper: ExistenceRecord
    tight: bool


@dataclass(frozen=True)
class BoundReport:
    bound: int
    theorem: str
    breakdown: tuple
    tightness: Optional[TightnessInfo] = None


def _require_closed_product(spec: ManifoldSpec, context: str) -> None:
    if not is_closed(spec):
        raise ValueError(f"{context} needs closed factors, got "
                         f"{render(spec)}")


def _tightness(record: Optional[ExistenceRecord],
               bound: int) -> Optional[TightnessInfo]:
    if record is None:
        return None
    return TightnessInfo(record, record.ambient_dim == bound)


def bound_product_2regular(spec: ManifoldSpec) -> BoundReport:
    """Least ambient dimension forced on 2-regular maps of a closed product.

    The bound is the two-point bundle's top degree plus two.  Factors must
    come from the sphere and projective families.
    """
    _require_closed_product(spec, "the product bound")
    profile = lambda_top(spec, 2, REAL)
    bound = profile.top_degree + 2
    piece = PieceBound(spec, 2, profile.top_degree, bound,
                       profile.is_lower_bound, profile.source)
    return BoundReport(bound, MAIN_THEOREM_1, (piece,),
                       _tightness(upper_existence_piece(spec, 2), bound))


def main_theorem_1_closed_form(spec: ManifoldSpec) -> int:
    """Power-of-two evaluation of the product bound; no bundle algebra."""
    _require_closed_product(spec, "the product bound")
    total = 2
    for atom in atoms(spec):
        if isinstance(atom, Sphere):
            total += atom.m
        elif isinstance(atom, RealProj):
            total += 2 ** (floor_log2(atom.m) + 1) - 1
        elif isinstance(atom, ComplexProj):
            total += 2 ** (floor_log2(atom.m) + 2) - 2
        else:
            total += 2 ** (floor_log2(atom.m) + 3) - 4
    return total


_MT2_SINGLE = (Sphere, RealProj, ComplexProj, QuatProj)


def _is_mt2_piece(spec: ManifoldSpec, points: int) -> bool:
    if isinstance(spec, Euclid):
        return spec.m == 2 and points >= 2 and points & (points - 1) == 0
    return isinstance(spec, _MT2_SINGLE) and points == 2


def bound_disjoint(query: RegularQuery) -> BoundReport:
    """Sum of per-piece bundle degrees plus point counts (real regime).

    Pieces must each be supported by lambda_top; an unsupported piece
    raises with the piece named.  The theorem label records whether the
    query sits inside the disjoint-union theorem's families.
    """
    if query.regime != REAL:
        raise ValueError("bound_disjoint handles the real regime; use "
                         "bound_complex_disjoint for complex queries")
    breakdown = []
    for spec, points in query.pieces:
        profile = lambda_top(spec, points, REAL)
        breakdown.append(PieceBound(spec, points, profile.top_degree,
                                    profile.top_degree + points,
                                    profile.is_lower_bound, profile.source))
    bound = sum(piece.contribution for piece in breakdown)
    if len(query.pieces) == 1 and query.pieces[0][1] == 2 \
            and is_closed(query.pieces[0][0]):
        theorem = MAIN_THEOREM_1
    elif all(_is_mt2_piece(spec, points) for spec, points in query.pieces):
        theorem = MAIN_THEOREM_2
    else:
        theorem = DISJOINT_REAL
    return BoundReport(bound, theorem, tuple(breakdown),
                       _tightness(upper_existence(query), bound))


def main_theorem_2_closed_form(
        pieces: Sequence[tuple[ManifoldSpec, int]]) -> int:
    """Power-of-two evaluation of the disjoint-union bound.

    Pieces must be planes with power-of-two point counts or single closed
    sphere/projective factors with two points.
    """
    total = 0
    for spec, points in pieces:
        if not _is_mt2_piece(spec, points):
            raise ValueError(
                f"({render(spec)}, {points}) is outside the disjoint-union "
                "theorem's families")
        if isinstance(spec, Euclid):
            total += 2 * points - 1
        elif isinstance(spec, Sphere):
            total += spec.m + 2
        elif isinstance(spec, RealProj):
            total += 2 ** (floor_log2(spec.m) + 1) + 1
        elif isinstance(spec, ComplexProj):
            total += 2 ** (floor_log2(spec.m) + 2)
        else:
            total += 2 ** (floor_log2(spec.m) + 3) - 2
    return total


def handel_disjoint_closed_form(specs: Sequence[ManifoldSpec]) -> int:
    """Two points per closed piece: sum of (dimension + top dual degree) + 2n."""
    total = 2 * len(specs)
    for spec in specs:
        _require_closed_product(spec, "the two-point disjoint bound")
        total += real_dimension(spec) + top_dual_degree_closed_form(
            spec).top_degree
    return total


def bound_complex_disjoint(query: RegularQuery) -> BoundReport:
    """Complex-regular lower bound: per-piece Chern degrees summed.

    Supported pieces: (S^m, 2), (CP^m, 2) with m >= 4 (certified lower
    bound on the top degree), and (R^m, p) for odd primes p.
    """
    if query.regime != COMPLEX:
        raise ValueError("bound_complex_disjoint needs a complex-regime "
                         "query")
    breakdown = []
    for spec, points in query.pieces:
        if isinstance(spec, Euclid):
            if not (points % 2 == 1 and is_prime(points)):
                raise UnsupportedBundleError(
                    f"({render(spec)}, {points}): complex plane pieces "
                    "need an odd prime point count")
            degree = (spec.m + 1) // 2 * (points - 1)
            breakdown.append(PieceBound(
                spec, points, degree, degree + 1, True,
                "complex p-point classes over R^m survive to degree "
                "floor((m+1)/2)*(p-1) (Blagojevic-Cohen-Luck-Ziegler "
                "2015)"))
        else:
            profile = lambda_top(spec, points, COMPLEX)
            breakdown.append(PieceBound(
                spec, points, profile.top_degree,
                profile.top_degree + points, profile.is_lower_bound,
                profile.source))
    bound = sum(piece.contribution for piece in breakdown)
    if len(breakdown) == 1:
        only = breakdown[0]
        if isinstance(only.spec, Euclid):
            theorem = "Blagojevic-Cohen-Luck-Ziegler (2015)"
        else:
            theorem = "complex two-point lower bound"
    else:
        theorem = DISJOINT_COMPLEX
    return BoundReport(bound, theorem, tuple(breakdown), None)


# ---------------------------------------------------------------------------
# Cited closed-form bounds.

def _power_of(m: int, p: int) -> bool:
    if m < 1:
        return False
    while m % p == 0:
        m //= p
    return m == 1


def bound_cited(kind: str, **params) -> BoundReport:
    """Five closed-form bounds quoted from the literature, by keyword.

    Kinds: 'real-euclid' (m, k), 'complex-euclid-odd-prime' (m, p),
    'complex-prime-power' (m, k, p), 'complex-stacked-planes' (n, m, p),
    'complex-disjoint-planes' (ms, p).
    """
    maker = _CITED.get(kind)
    if maker is None:
        raise ValueError(f"unknown cited bound {kind!r}; known kinds: "
                         + ", ".join(sorted(_CITED)))
    return maker(**params)


def _cited_real_euclid(m: int, k: int) -> BoundReport:
    if not (isinstance(m, int) and m >= 1 and isinstance(k, int) and k >= 2):
        raise ValueError("need m >= 1 and k >= 2")
    alpha = digit_sum_base_p(k, 2)
    bound = m * (k - alpha) + alpha
    theorem = "Blagojevic-Luck-Ziegler (2016)"
    piece = PieceBound(Euclid(m), k, bound - 1, bound, True,
                       f"k-regular maps of R^m: N >= m(k - alpha(k)) + "
                       f"alpha(k) with alpha({k}) = {alpha}")
    return BoundReport(bound, theorem, (piece,))


def _cited_complex_euclid(m: int, p: int) -> BoundReport:
    if not (isinstance(m, int) and m >= 1):
        raise ValueError("need m >= 1")
    if not (is_prime(p) and p % 2 == 1):
        raise ValueError(f"{p!r} is not an odd prime")
    return bound_complex_disjoint(
        RegularQuery(((Euclid(m), p),), COMPLEX))


def _cited_complex_prime_power(m: int, k: int, p: int) -> BoundReport:
    if not is_prime(p):
        raise ValueError(f"{p!r} is not prime")
    if not _power_of(m, p):
        raise ValueError(f"m = {m!r} must be a power of p = {p}")
    if not (isinstance(k, int) and k >= 2):
        raise ValueError("need k >= 2")
    alpha = digit_sum_base_p(k, p)
    bound = m * (k - alpha) + alpha
    piece = PieceBound(Euclid(2 * m), k, bound - 1, bound, True,
                       f"complex k-regular maps of C^m (m a power of {p}): "
                       f"N >= m(k - alpha_p(k)) + alpha_p(k) with "
                       f"alpha_{p}({k}) = {alpha}")
    return BoundReport(bound, "Blagojevic-Cohen-Luck-Ziegler (2015)",
                       (piece,))


def _cited_stacked_planes(n: int, m: int, p: int) -> BoundReport:
    if not (isinstance(n, int) and n >= 1):
        raise ValueError("need n >= 1")
    base = _cited_complex_euclid(m, p)
    bound = n * base.bound
    piece = PieceBound(Euclid(m), n * p, bound - 1, bound, True,
                       f"complex np-regular maps: n = {n} copies of the "
                       "p-regular plane bound")
    return BoundReport(bound, "Blagojevic-Cohen-Luck-Ziegler (2015)",
                       (piece,))


def _cited_disjoint_planes(ms: Sequence[int], p: int) -> BoundReport:
    if not ms:
        raise ValueError("need at least one plane piece")
    query = RegularQuery(tuple((Euclid(m), p) for m in ms), COMPLEX)
    report = bound_complex_disjoint(query)
    return BoundReport(report.bound,
                       "Blagojevic-Cohen-Luck-Ziegler (2015)",
                       report.breakdown)


_CITED: dict[str, Callable[..., BoundReport]] = {
    "real-euclid": _cited_real_euclid,
    "complex-euclid-odd-prime": _cited_complex_euclid,
    "complex-prime-power": _cited_complex_prime_power,
    "complex-stacked-planes": _cited_stacked_planes,
    "complex-disjoint-planes": _cited_disjoint_planes,
}


# ---------------------------------------------------------------------------
# Existence table and upper bounds.

def _alpha2(q: int) -> int:
    return digit_sum_base_p(q, 2)


def _is_pow2(x: int) -> bool:
    return x >= 1 and x & (x - 1) == 0


@dataclass(frozen=True)
class TableRow:
    label: str
    matches: Callable[[int], bool]
    ambient: Callable[[int], int]


PROJECTIVE_3REGULAR_TABLE: tuple[TableRow, ...] = (
    TableRow("m = 8q+3 or 8q+5 (q > 0)",
             lambda m: m % 8 in (3, 5) and m // 8 > 0,
             lambda m: 2 * m - min(5, _alpha2(m // 8))),
    TableRow("m = 8q+1 (q > 0)",
             lambda m: m % 8 == 1 and m // 8 > 0,
             lambda m: 2 * m - min(7, _alpha2(m // 8)) + 2),
    TableRow("m = 32q+7 (q > 0)",
             lambda m: m % 32 == 7 and m // 32 > 0,
             lambda m: 2 * m - 6),
    TableRow("m = 8q+7 (q > 1)",
             lambda m: m % 8 == 7 and m // 8 > 1,
             lambda m: 2 * m - 5),
    TableRow("m = 3 mod 8, m >= 19",
             lambda m: m % 8 == 3 and m >= 19,
             lambda m: 2 * m - 4),
    TableRow("m = 1 mod 4, m != 2^i + 1",
             lambda m: m % 4 == 1 and not _is_pow2(m - 1),
             lambda m: 2 * m - 2),
    TableRow("m = 4q or 4q+2, q > 0 and not a power of two",
             lambda m: m % 4 in (0, 2) and m // 4 > 0
             and not _is_pow2(m // 4),
             lambda m: 2 * m - 1),
    TableRow("m = 2^j + 1 (j >= 2)",
             lambda m: m - 1 >= 4 and _is_pow2(m - 1),
             lambda m: 2 * m - 1),
    TableRow("m = 2^j + 2 (j >= 3)",
             lambda m: m - 2 >= 8 and _is_pow2(m - 2),
             lambda m: 2 * m),
)


def projective_table_matches(m: int) -> list[tuple[TableRow, int]]:
    """All table rows covering RP^m, with their ambient dimensions."""
    return [(row, row.ambient(m)) for row in PROJECTIVE_3REGULAR_TABLE
            if row.matches(m)]


def projective_3regular_upper(m: int) -> Optional[ExistenceRecord]:
    """Smallest tabled ambient dimension for a 3-regular map of RP^m."""
    hits = projective_table_matches(m)
    if not hits:
        return None
    row, ambient = min(hits, key=lambda pair: pair[1])
    return ExistenceRecord(ambient,
                           f"3-regular projective construction, {row.label}")


def upper_existence_piece(spec: ManifoldSpec,
                          points: int) -> Optional[ExistenceRecord]:
    """Known construction for one piece, or None; never guesses."""
    if isinstance(spec, Sphere) and points in (2, 3):
        return ExistenceRecord(spec.m + 2,
                               "sphere (1, x) embedding (3-regular)")
    if isinstance(spec, RealProj) and points in (2, 3):
        record = projective_3regular_upper(spec.m)
        if record is None or points == 3:
            return record
        return ExistenceRecord(record.ambient_dim,
                               record.source + " (restricted to 2-regular)")
    if isinstance(spec, Euclid) and spec.m == 2 and points >= 2:
        return ExistenceRecord(2 * points - 1,
                               "monomial curve in the plane "
                               "(Cohen-Handel 1978)")
    return None


def upper_existence(query: RegularQuery) -> Optional[ExistenceRecord]:
    """Direct sum of per-piece constructions when every piece has one."""
    if query.regime != REAL:
        return None
    records = [upper_existence_piece(spec, points)
               for spec, points in query.pieces]
    if any(record is None for record in records):
        return None
    if len(records) == 1:
        return records[0]
    total = sum(record.ambient_dim for record in records)
    return ExistenceRecord(total, "coordinate direct sum of piece "
                                  "constructions")
