"""Top nonvanishing degrees for configuration-space bundles.

A BundleProfile records, for a base manifold and a point count, the largest
degree in which the relevant characteristic class of the associated
configuration bundle survives, together with the rule that produced it.
Only rules backed by a computation or a cited identity are implemented;
anything else raises UnsupportedBundleError rather than guessing.
"""

from __future__ import annotations

from dataclasses import dataclass

from .grassmann import chern_height_of_first_class
from .manifolds import (ComplexProj, Euclid, ManifoldSpec, Sphere, is_closed,
                        real_dimension, render, top_dual_degree)

REAL = "real"
COMPLEX = "complex"


class UnsupportedBundleError(ValueError):
    """No implemented rule determines the requested bundle degree."""


@dataclass(frozen=True)
class BundleProfile:
    """Top degree data for the k-point bundle over `spec`.

    `top_degree` is exact unless `is_lower_bound` is set, in which case the
    true top degree is only known to be >= it.  `source` names the rule.
    """

    spec: ManifoldSpec
    points: int
    regime: str
    top_degree: int
    is_lower_bound: bool
    source: str


def lambda_top(spec: ManifoldSpec, points: int = 2,
               regime: str = REAL) -> BundleProfile:
    """Top degree of the k-point bundle class, or a certified lower bound.

    Real regime: closed connected specs with two points (dimension plus the
    top dual class degree), and the plane with a power-of-two point count.
    Complex regime: spheres with two points (floor(m/2)) and CP^m, m >= 4,
    with two points (lower bound 2m-2).  Everything else raises.
    """
    if not isinstance(points, int) or points < 2:
        raise ValueError(f"point count must be an integer >= 2, got {points!r}")
    if regime == REAL:
        if isinstance(spec, Euclid) and spec.m == 2:
            if points & (points - 1) == 0:
                return BundleProfile(
                    spec, points, regime, points - 1, False,
                    "plane bundle with power-of-two points (Cohen-Handel "
                    "1978): top class in degree k-1")
            raise UnsupportedBundleError(
                f"({render(spec)}, {points}): plane rule needs a "
                "power-of-two point count")
        if points == 2 and is_closed(spec):
            profile = top_dual_degree(spec)
            return BundleProfile(
                spec, points, regime,
                real_dimension(spec) + profile.top_degree, False,
                "two-point bundle over a closed manifold: dimension plus "
                "top dual class degree")
        raise UnsupportedBundleError(
            f"({render(spec)}, {points}) has no real-regime rule "
            "(closed specs need exactly two points)")
    if regime == COMPLEX:
        if isinstance(spec, Sphere) and points == 2:
            return BundleProfile(
                spec, points, regime, spec.m // 2, False,
                "complex two-point bundle over a sphere: top degree "
                "floor(m/2)")
        if isinstance(spec, ComplexProj) and points == 2 and spec.m >= 4:
            height = chern_height_of_first_class(2, spec.m)
            return BundleProfile(
                spec, points, regime, height, True,
                "complex two-point bundle over CP^m: top degree >= 2m-2 "
                "(ring height of the first class)")
        raise UnsupportedBundleError(
            f"({render(spec)}, {points}) has no complex-regime rule")
    raise ValueError(f"unknown regime {regime!r}")
