"""Randomized full-rank checks for explicit regular maps.

Two example maps and their direct sums: the monomial curve z -> (1, z, ...,
z^(k-1)) on the plane, realified to 2k-1 coordinates and checked with exact
rational arithmetic (points are Gaussian rationals, rank by fraction-free
Bareiss elimination), and the sphere embedding x -> (1, x), checked in
floating point via singular values with a relative threshold of 1e-8.

Sampling is reproducible: trial i draws from random.Random(seed * 1000003
+ i), so verdicts and witnesses are independent of trial order and identical
across runs.  Sampled configurations keep a minimum pairwise separation of
1e-3 to stay away from the honest degeneracies (coincident points).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Optional, Sequence, Union

import numpy as np

RELATIVE_RANK_TOLERANCE = 1e-8
MIN_SEPARATION = 1e-3
_SEED_STRIDE = 1_000_003
_MAX_WITNESSES = 3

Gaussian = tuple[Fraction, Fraction]


@dataclass(frozen=True)
class VandermondeMap:
    """z -> (1, z, ..., z^(k-1)) on the plane, realified; k-regular."""

    k: int

    def __post_init__(self):
        if not isinstance(self.k, int) or self.k < 2:
            raise ValueError(f"need an integer k >= 2, got {self.k!r}")


@dataclass(frozen=True)
class SphereOneI:
    """x -> (1, x) on S^m; 3-regular (a line meets a sphere twice)."""

    m: int

    def __post_init__(self):
        if not isinstance(self.m, int) or self.m < 2:
            raise ValueError(f"need an integer m >= 2, got {self.m!r}")


@dataclass(frozen=True)
class DirectSum:
    """Block direct sum of maps on the disjoint union of their domains."""

    parts: tuple

    def __post_init__(self):
        parts = tuple(self.parts)
        if not parts:
            raise ValueError("empty direct sum")
        for part in parts:
            if not isinstance(part, (VandermondeMap, SphereOneI)):
                raise ValueError(f"not a summable map: {part!r}")
        object.__setattr__(self, "parts", parts)


ExampleMap = Union[VandermondeMap, SphereOneI, DirectSum]


def map_parts(example: ExampleMap) -> tuple:
    return example.parts if isinstance(example, DirectSum) else (example,)


def ambient_dim(example: ExampleMap) -> int:
    total = 0
    for part in map_parts(example):
        total += 2 * part.k - 1 if isinstance(part, VandermondeMap) \
            else part.m + 2
    return total


def claimed_regularity(example: ExampleMap) -> tuple[int, ...]:
    """Per-part point counts the map is asserted to handle."""
    return tuple(part.k if isinstance(part, VandermondeMap) else 3
                 for part in map_parts(example))


def render_map(example: ExampleMap) -> str:
    return "+".join(
        f"vandermonde:{part.k}" if isinstance(part, VandermondeMap)
        else f"sphere:{part.m}" for part in map_parts(example))


def parse_map(text: str) -> ExampleMap:
    """Inverse of render_map: 'vandermonde:3+sphere:4' and the like."""
    parts: list[Union[VandermondeMap, SphereOneI]] = []
    for chunk in text.split("+"):
        chunk = chunk.strip()
        family, sep, number = chunk.partition(":")
        if not sep or not number.isdigit():
            raise ValueError(f"bad map piece {chunk!r}; want vandermonde:K "
                             "or sphere:M")
        if family == "vandermonde":
            parts.append(VandermondeMap(int(number)))
        elif family == "sphere":
            parts.append(SphereOneI(int(number)))
        else:
            raise ValueError(f"unknown map family {family!r}")
    return parts[0] if len(parts) == 1 else DirectSum(tuple(parts))


# ---------------------------------------------------------------------------
# Exact rational linear algebra.

def _gm_mul(a: Gaussian, b: Gaussian) -> Gaussian:
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def _gm_sub(a: Gaussian, b: Gaussian) -> Gaussian:
    return (a[0] - b[0], a[1] - b[1])


def as_gaussian(value) -> Gaussian:
    """Coerce an int, Fraction, or (re, im) pair to a Gaussian rational."""
    if isinstance(value, tuple):
        re, im = value
        return (Fraction(re), Fraction(im))
    if isinstance(value, (int, Fraction)):
        return (Fraction(value), Fraction(0))
    raise ValueError(f"not an exact plane point: {value!r}")


def integer_rank_bareiss(rows: list[list[int]]) -> int:
    """Rank of an integer matrix by fraction-free elimination.

    Every row below the pivot gets the full Sylvester update (including the
    multiply-through when its pivot-column entry is zero); the exact
    divisions by the previous pivot rely on that.
    """
    mat = [row[:] for row in rows]
    if not mat:
        return 0
    ncols = len(mat[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(mat)) if mat[i][col]), None)
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        row_r = mat[rank]
        lead = row_r[col]
        for i in range(rank + 1, len(mat)):
            row_i = mat[i]
            entry = row_i[col]
            for j in range(col + 1, ncols):
                row_i[j] = (row_i[j] * lead - entry * row_r[j]) // prev
            row_i[col] = 0
        prev = lead
        rank += 1
    return rank


def rational_rank(rows: Sequence[Sequence[Fraction]]) -> int:
    """Rank over QQ: clear denominators row by row, then Bareiss."""
    cleared = []
    for row in rows:
        denom = lcm(*(f.denominator for f in row)) if row else 1
        cleared.append([int(f * denom) for f in row])
    return integer_rank_bareiss(cleared)


def vandermonde_columns(points: Sequence, k: int) -> list[list[Fraction]]:
    """Realified evaluation matrix, (2k-1) rows by len(points) columns."""
    pts = [as_gaussian(p) for p in points]
    rows: list[list[Fraction]] = [[Fraction(1)] * len(pts)]
    powers = [(Fraction(1), Fraction(0))] * len(pts)
    for _ in range(1, k):
        powers = [_gm_mul(p, z) for p, z in zip(powers, pts)]
        rows.append([p[0] for p in powers])
        rows.append([p[1] for p in powers])
    return rows


def vandermonde_rank_exact(points: Sequence, k: int) -> int:
    """Exact rank of the realified monomial matrix at the given points.

    For t <= k pairwise distinct points the rank is t: extending to k
    distinct points gives a square complex Vandermonde matrix with nonzero
    determinant, and complex independence implies real independence.
    """
    if not isinstance(k, int) or k < 2:
        raise ValueError(f"need an integer k >= 2, got {k!r}")
    pts = [as_gaussian(p) for p in points]
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            if pts[i] == pts[j]:
                raise ValueError(f"points {i} and {j} coincide")
    return rational_rank(vandermonde_columns(pts, k))


def vandermonde_determinant(points: Sequence) -> Gaussian:
    """Product of pairwise differences; nonzero iff points are distinct."""
    pts = [as_gaussian(p) for p in points]
    det: Gaussian = (Fraction(1), Fraction(0))
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            det = _gm_mul(det, _gm_sub(pts[j], pts[i]))
    return det


# ---------------------------------------------------------------------------
# Float path.

def _rank_from_singular(singular: np.ndarray, rel_tol: float) -> int:
    if singular.size == 0 or singular[0] == 0.0:
        return 0
    return int(np.count_nonzero(singular > rel_tol * singular[0]))


def float_rank(matrix: np.ndarray,
               rel_tol: float = RELATIVE_RANK_TOLERANCE) -> int:
    """Numerical rank: singular values above rel_tol times the largest."""
    if matrix.size == 0:
        return 0
    singular = np.linalg.svd(matrix, compute_uv=False)
    return _rank_from_singular(singular, rel_tol)


def sphere_columns(points: Sequence[Sequence[float]]) -> np.ndarray:
    """(1, x) evaluation matrix, (m+2) rows by len(points) columns."""
    arr = np.asarray(points, dtype=float)
    ones = np.ones((arr.shape[0], 1))
    return np.hstack([ones, arr]).T


# ---------------------------------------------------------------------------
# Sampling.

def _sample_plane_points(rng: random.Random, count: int) -> list[Gaussian]:
    points: list[Gaussian] = []
    while len(points) < count:
        z = (Fraction(rng.randint(-64, 64), rng.randint(1, 8)),
             Fraction(rng.randint(-64, 64), rng.randint(1, 8)))
        if all(_too_far_plane(z, w) for w in points):
            points.append(z)
    return points


def _too_far_plane(z: Gaussian, w: Gaussian) -> bool:
    d = _gm_sub(z, w)
    return float(d[0]) ** 2 + float(d[1]) ** 2 >= MIN_SEPARATION ** 2


def _sample_sphere_points(rng: random.Random, m: int,
                          count: int) -> list[tuple[float, ...]]:
    points: list[tuple[float, ...]] = []
    while len(points) < count:
        vec = [rng.gauss(0.0, 1.0) for _ in range(m + 1)]
        norm = sum(v * v for v in vec) ** 0.5
        if norm < 1e-6:
            continue
        x = tuple(v / norm for v in vec)
        if all(sum((a - b) ** 2 for a, b in zip(x, y)) >= MIN_SEPARATION ** 2
               for y in points):
            points.append(x)
    return points


@dataclass(frozen=True)
class Witness:
    """A failing trial: its index and the sampled points per part."""

    trial: int
    points: tuple


@dataclass(frozen=True)
class RegularityReport:
    example: ExampleMap
    tuple_sizes: tuple[int, ...]
    trials: int
    seed: int
    violations: int
    witnesses: tuple
    min_singular_ratio: Optional[float]
    verdict: str
    expected_violation: bool


def evaluate_rank(example: ExampleMap, points_per_part: Sequence
                  ) -> tuple[int, int]:
    """(rank, requested rank) for explicit point tuples; re-checks witnesses."""
    parts = map_parts(example)
    if len(points_per_part) != len(parts):
        raise ValueError(f"need point tuples for {len(parts)} parts")
    wanted = sum(len(pts) for pts in points_per_part)
    exact = all(isinstance(part, VandermondeMap) for part in parts)
    if exact:
        rank = rational_rank(_exact_block_matrix(parts, points_per_part))
    else:
        rank = float_rank(_float_block_matrix(parts, points_per_part))
    return rank, wanted


def _exact_block_matrix(parts, points_per_part) -> list[list[Fraction]]:
    total_cols = sum(len(pts) for pts in points_per_part)
    rows: list[list[Fraction]] = []
    col_offset = 0
    zero = Fraction(0)
    for part, pts in zip(parts, points_per_part):
        block = vandermonde_columns(pts, part.k)
        for block_row in block:
            row = [zero] * total_cols
            row[col_offset:col_offset + len(pts)] = block_row
            rows.append(row)
        col_offset += len(pts)
    return rows


def _float_block_matrix(parts, points_per_part) -> np.ndarray:
    total_cols = sum(len(pts) for pts in points_per_part)
    blocks: list[np.ndarray] = []
    col_offset = 0
    for part, pts in zip(parts, points_per_part):
        if isinstance(part, VandermondeMap):
            exact = vandermonde_columns([as_gaussian(p) for p in pts], part.k)
            block = np.array([[float(v) for v in row] for row in exact])
        else:
            block = sphere_columns(pts)
        wide = np.zeros((block.shape[0], total_cols))
        wide[:, col_offset:col_offset + block.shape[1]] = block
        blocks.append(wide)
        col_offset += block.shape[1]
    return np.vstack(blocks)


def sample_check_regular(example: ExampleMap,
                         tuple_sizes: Union[int, Sequence[int], None] = None,
                         trials: int = 1000,
                         seed: int = 0) -> RegularityReport:
    """Seeded random full-rank verification; never hides a failure.

    tuple_sizes defaults to the claimed regularity (one entry per part).
    A rank below the requested total is counted as a violation and up to
    three witnesses are kept, re-checkable with evaluate_rank.  Sizes above
    the claimed regularity are allowed; the report flags that violations
    are then expected rather than alarming.
    """
    parts = map_parts(example)
    claims = claimed_regularity(example)
    if tuple_sizes is None:
        sizes = claims
    elif isinstance(tuple_sizes, int):
        if len(parts) != 1:
            raise ValueError("per-part tuple sizes required for direct sums")
        sizes = (tuple_sizes,)
    else:
        sizes = tuple(tuple_sizes)
    if len(sizes) != len(parts):
        raise ValueError(f"need {len(parts)} tuple sizes, got {len(sizes)}")
    for size in sizes:
        if not isinstance(size, int) or size < 1:
            raise ValueError(f"tuple sizes must be positive, got {size!r}")
    if not isinstance(trials, int) or trials < 1:
        raise ValueError("trials must be a positive integer")

    exact = all(isinstance(part, VandermondeMap) for part in parts)
    violations = 0
    witnesses: list[Witness] = []
    min_ratio: Optional[float] = None
    for trial in range(trials):
        rng = random.Random(seed * _SEED_STRIDE + trial)
        points_per_part = tuple(
            tuple(_sample_plane_points(rng, size))
            if isinstance(part, VandermondeMap)
            else tuple(_sample_sphere_points(rng, part.m, size))
            for part, size in zip(parts, sizes))
        if exact:
            rank = rational_rank(_exact_block_matrix(parts, points_per_part))
        else:
            matrix = _float_block_matrix(parts, points_per_part)
            singular = np.linalg.svd(matrix, compute_uv=False)
            rank = _rank_from_singular(singular, RELATIVE_RANK_TOLERANCE)
            if singular.size and singular[0] > 0.0:
                ratio = float(singular[-1] / singular[0])
                if min_ratio is None or ratio < min_ratio:
                    min_ratio = ratio
        if rank < sum(sizes):
            violations += 1
            if len(witnesses) < _MAX_WITNESSES:
                witnesses.append(Witness(trial, points_per_part))
    return RegularityReport(
        example=example,
        tuple_sizes=sizes,
        trials=trials,
        seed=seed,
        violations=violations,
        witnesses=tuple(witnesses),
        min_singular_ratio=min_ratio,
        verdict="counterexample" if violations else "no-violation-found",
        expected_violation=any(size > claim
                               for size, claim in zip(sizes, claims)),
    )
