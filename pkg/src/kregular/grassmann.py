"""Cohomology presentations of Grassmannians as truncated quotient rings.

H*(G_k(F^(n+1))) is presented as a polynomial ring on the universal classes
of the tautological k-plane bundle, modulo the ideal generated by the
homogeneous parts of the inverted total class in degrees n-k+2 .. n+1.  Two
flavors: Stiefel-Whitney generators over GF(2) (|w_i| = i) and Chern
generators (|c_i| = 2i), the latter over the rationals by default (the
integral cohomology is torsion-free, so rational row reduction certifies
integral (non)vanishing) or over GF(2) for mod-2 questions.

Normal forms come from per-degree reduced row echelon data: the ideal's
degree-d slice is spanned by monomial multiples of the homogeneous
generators, columns are monomials in descending lexicographic order within
the degree, and the quotient basis is the non-pivot columns.  All reduction
is exact (Fraction or GF(p)); nothing is floated.
"""

from __future__ import annotations

import math
import threading
from functools import lru_cache
from typing import Optional, Sequence, Union

from .fields import Coeff, Field, GF2, PrimeField, QQ
from .series import GradedSeries, SeriesRing

CHERN = "chern"
STIEFEL_WHITNEY = "sw"


class InconclusiveTruncationError(RuntimeError):
    """The truncation is too small to certify the requested (non)vanishing."""


class GrassmannPresentation:
    """Truncated presentation of H*(G_k(F^(n+1))) with normal-form data.

    k and n fix the Grassmannian (1 <= k <= n); `classes` picks Chern or
    Stiefel-Whitney generators; `field` defaults to QQ for Chern and GF(2)
    for Stiefel-Whitney.  The default truncation is one generator degree
    past the top cohomological degree, enough to extract the relations and
    to certify the height of the first class without retries.
    """

    def __init__(self, k: int, n: int, classes: str = CHERN,
                 field: Optional[Field] = None,
                 truncation: Optional[int] = None):
        if not (isinstance(k, int) and isinstance(n, int) and 1 <= k <= n):
            raise ValueError(f"need integers 1 <= k <= n, got k={k}, n={n}")
        if classes == CHERN:
            scale = 2
            prefix = "c"
            if field is None:
                field = QQ
        elif classes == STIEFEL_WHITNEY:
            scale = 1
            prefix = "w"
            if field is None:
                field = GF2
            if field != GF2:
                raise ValueError("Stiefel-Whitney classes live over GF(2)")
        else:
            raise ValueError(f"unknown class family {classes!r}")
        top = scale * k * (n + 1 - k)
        if truncation is None:
            truncation = top + scale
        if truncation < scale * (n + 1):
            raise ValueError(
                f"truncation {truncation} cannot hold the relations "
                f"(need >= {scale * (n + 1)})")
        self.k = k
        self.n = n
        self.classes = classes
        self.scale = scale
        self.top_degree = top
        self.ring = SeriesRing(
            field, [(f"{prefix}{i}", scale * i) for i in range(1, k + 1)],
            truncation)
        self.relations = self._extract_relations()
        self._degree_data: dict[int, _DegreeData] = {}
        self._lock = threading.Lock()

    def _extract_relations(self) -> tuple[GradedSeries, ...]:
        # Homogeneous parts of the inverted total class, degrees n-k+2..n+1.
        total = self.ring.one()
        for gen in self.ring.gens():
            total = total + gen
        dual = total.inverse()
        return tuple(dual.homogeneous_part(self.scale * j)
                     for j in range(self.n - self.k + 2, self.n + 2))

    def first_class(self) -> GradedSeries:
        """The degree-`scale` generator (c1 or w1)."""
        return self.ring.gen(self.ring.names[0])

    def relation_generators(self) -> tuple[GradedSeries, ...]:
        return self.relations

    def quotient_basis(self, degree: int) -> tuple[tuple[int, ...], ...]:
        """Monomial basis of the degree-d piece of the quotient."""
        return self._data(degree).basis

    def total_dimension(self) -> int:
        """Sum of quotient dimensions over all degrees up to the top."""
        return sum(len(self.quotient_basis(d))
                   for d in range(self.top_degree + 1))

    def normal_form(self, element: GradedSeries) -> "QuotientElement":
        """Canonical coordinates of `element` on the quotient basis.

        Linear over the coefficient field; the zero answer is exact ideal
        membership for every degree within the truncation.
        """
        self.ring.require_same(element.ring)
        field = self.ring.field
        degree_of = self.ring.degree_of
        by_degree: dict[int, dict[tuple[int, ...], Coeff]] = {}
        for exponents, coeff in element.terms.items():
            by_degree.setdefault(degree_of(exponents), {})[exponents] = coeff
        coords: dict[tuple[int, ...], Coeff] = {}
        for degree, terms in by_degree.items():
            data = self._data(degree)
            vec = [terms.get(mono, field.zero) for mono in data.monomials]
            for col, row in data.pivots:
                c = vec[col]
                if c != field.zero:
                    for j in range(col, len(vec)):
                        vec[j] = field.sub(vec[j], field.mul(c, row[j]))
            for j in data.basis_columns:
                if vec[j] != field.zero:
                    coords[data.monomials[j]] = vec[j]
        return QuotientElement(self, coords)

    def height(self, element: GradedSeries) -> Union[int, float]:
        """Largest t with element^t nonzero in the quotient.

        Units (nonzero constant term) return math.inf.  When a vanishing
        power cannot be certified inside the truncation the call raises
        InconclusiveTruncationError instead of guessing.
        """
        self.ring.require_same(element.ring)
        if element.is_zero() or self.normal_form(element).is_zero():
            return 0
        if element.constant_coefficient() != self.ring.field.zero:
            return math.inf
        gmax = element.top_degree()
        power = element
        t = 1
        while True:
            if self.normal_form(power).is_zero():
                if gmax * t <= self.ring.truncation:
                    return t - 1
                raise InconclusiveTruncationError(
                    f"power {t} computes to zero but only degrees up to "
                    f"{self.ring.truncation} are certified; rebuild with "
                    f"truncation >= {gmax * t}")
            t += 1
            power = power * element

    def _data(self, degree: int) -> "_DegreeData":
        got = self._degree_data.get(degree)
        if got is not None:
            return got
        with self._lock:
            got = self._degree_data.get(degree)
            if got is None:
                got = self._reduce_degree(degree)
                self._degree_data[degree] = got
            return got

    def _reduce_degree(self, degree: int) -> "_DegreeData":
        if degree > self.ring.truncation:
            raise InconclusiveTruncationError(
                f"degree {degree} exceeds the ring truncation "
                f"{self.ring.truncation}")
        field = self.ring.field
        monomials = self.ring.monomials_of_degree(degree)
        index = {mono: i for i, mono in enumerate(monomials)}
        pivots: list[tuple[int, list[Coeff]]] = []
        for relation in self.relations:
            rel_degree = relation.top_degree()
            if rel_degree is None or rel_degree > degree:
                continue
            for mono in self.ring.monomials_of_degree(degree - rel_degree):
                shifted = GradedSeries(self.ring, {mono: field.one}) * relation
                row = [field.zero] * len(monomials)
                for exponents, coeff in shifted.terms.items():
                    row[index[exponents]] = coeff
                _rref_insert(field, pivots, row)
        pivots.sort()
        pivot_cols = {col for col, _ in pivots}
        basis_columns = tuple(i for i in range(len(monomials))
                              if i not in pivot_cols)
        basis = tuple(monomials[i] for i in basis_columns)
        return _DegreeData(tuple(monomials), tuple(pivots), basis_columns,
                           basis)


class _DegreeData:
    __slots__ = ("monomials", "pivots", "basis_columns", "basis")

    def __init__(self, monomials, pivots, basis_columns, basis):
        self.monomials = monomials
        self.pivots = pivots
        self.basis_columns = basis_columns
        self.basis = basis


def _rref_insert(field: Field, pivots: list[tuple[int, list[Coeff]]],
                 row: list[Coeff]) -> None:
    """Fold one row into reduced echelon state (pivots normalized to 1)."""
    for col, prow in pivots:
        c = row[col]
        if c != field.zero:
            for j in range(col, len(row)):
                row[j] = field.sub(row[j], field.mul(c, prow[j]))
    lead = next((j for j, v in enumerate(row) if v != field.zero), None)
    if lead is None:
        return
    inv = field.inv(row[lead])
    if inv != field.one:
        for j in range(lead, len(row)):
            row[j] = field.mul(inv, row[j])
    for col, prow in pivots:
        c = prow[lead]
        if c != field.zero:
            for j in range(lead, len(row)):
                prow[j] = field.sub(prow[j], field.mul(c, row[j]))
    pivots.append((lead, row))


class QuotientElement:
    """Element of a Grassmann quotient in canonical coordinates.

    Coordinates are kept on the monomial basis (non-pivot monomials of each
    degree); the element is zero iff the coordinate dict is empty.
    """

    __slots__ = ("presentation", "coords")

    def __init__(self, presentation: GrassmannPresentation,
                 coords: dict[tuple[int, ...], Coeff]):
        self.presentation = presentation
        self.coords = coords

    def is_zero(self) -> bool:
        return not self.coords

    def coefficient(self, exponents: Sequence[int]) -> Coeff:
        return self.coords.get(tuple(exponents),
                               self.presentation.ring.field.zero)

    def __add__(self, other: "QuotientElement") -> "QuotientElement":
        if other.presentation is not self.presentation:
            if other.presentation.ring != self.presentation.ring:
                raise ValueError("quotient elements from different "
                                 "presentations")
        field = self.presentation.ring.field
        out = dict(self.coords)
        for mono, coeff in other.coords.items():
            v = field.add(out.get(mono, field.zero), coeff)
            if v == field.zero:
                out.pop(mono, None)
            else:
                out[mono] = v
        return QuotientElement(self.presentation, out)

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, QuotientElement)
                and other.presentation.ring == self.presentation.ring
                and other.coords == self.coords)

    def __hash__(self) -> int:
        return hash((self.presentation.ring,
                     frozenset(self.coords.items())))

    def to_series(self) -> GradedSeries:
        """The canonical representative as an ambient ring element."""
        return self.presentation.ring.from_terms(dict(self.coords))

    def render(self) -> str:
        return self.to_series().render()

    def __repr__(self) -> str:
        return f"<quotient element {self.render()}>"


@lru_cache(maxsize=None)
def cached_presentation(k: int, n: int, classes: str = CHERN,
                        field: Optional[Field] = None,
                        truncation: Optional[int] = None
                        ) -> GrassmannPresentation:
    """Shared presentations; safe because instances are internally locked."""
    return GrassmannPresentation(k, n, classes, field, truncation)


def chern_height_of_first_class(k: int, n: int) -> int:
    """Exact height of c1 in H*(G_k(C^(n+1)); QQ) by row reduction."""
    pres = cached_presentation(k, n, CHERN)
    h = pres.height(pres.first_class())
    assert isinstance(h, int)
    return h


def kappa_case(m: int, a: int, b: int) -> int:
    """Vanishing exponent in the two-point module over CP^m (m >= 4).

    For the combination a*u + b*f (f the first Chern class of the module's
    Grassmann ring, u the extension class with 2u = 0 and u^2 = f*u) this
    returns the largest exponent t with a nonzero power: with b != 0 the
    free summand b^t f^t survives exactly to the ring height of f; with
    b = 0 the remaining u-component a^t f^(t-1) u survives one step more.
    (0, 0) is rejected.
    """
    if not (isinstance(m, int) and m >= 4):
        raise ValueError(f"need an integer m >= 4, got {m!r}")
    if not (isinstance(a, int) and isinstance(b, int)):
        raise ValueError("coefficients must be integers")
    if a == 0 and b == 0:
        raise ValueError("the zero combination has no vanishing exponent")
    h = chern_height_of_first_class(2, m)
    return h if b != 0 else h + 1


class YasuiIntegralModule:
    """Two-point configuration module over CP^m with basis {1, u}.

    The free summand lives in the rational Chern presentation of
    G_2(C^(m+1)); the u-summand is 2-torsion (coefficients in GF(2) over
    the same presentation reduced mod 2) with u^2 = c1*u.  Multiplication:

        (x1 + y1 u)(x2 + y2 u) = x1 x2 + (x1' y2 + x2' y1 + y1 y2 c1') u

    where ' is mod-2 reduction of the free part, which therefore must have
    integer coefficients.
    """

    def __init__(self, m: int):
        if not (isinstance(m, int) and m >= 2):
            raise ValueError(f"need an integer m >= 2, got {m!r}")
        self.m = m
        self.free_presentation = cached_presentation(2, m, CHERN)
        self.torsion_presentation = cached_presentation(2, m, CHERN,
                                                        field=GF2)

    def element(self, free: GradedSeries,
                upart: GradedSeries) -> "YasuiElement":
        self.free_presentation.ring.require_same(free.ring)
        self.torsion_presentation.ring.require_same(upart.ring)
        return YasuiElement(self, free, upart)

    def one(self) -> "YasuiElement":
        return YasuiElement(self, self.free_presentation.ring.one(),
                            self.torsion_presentation.ring.zero())

    def u(self) -> "YasuiElement":
        return YasuiElement(self, self.free_presentation.ring.zero(),
                            self.torsion_presentation.ring.one())

    def first_class(self) -> "YasuiElement":
        return YasuiElement(self, self.free_presentation.first_class(),
                            self.torsion_presentation.ring.zero())

    def reduce_mod_2(self, free: GradedSeries) -> GradedSeries:
        """Mod-2 image of an integer-coefficient free-part representative."""
        terms: dict[tuple[int, ...], int] = {}
        for exponents, coeff in free.terms.items():
            if coeff.denominator != 1:
                raise ValueError(
                    "mod-2 reduction needs integer coefficients, got "
                    f"{coeff!r}")
            terms[exponents] = coeff.numerator % 2
        return self.torsion_presentation.ring.from_terms(terms)


class YasuiElement:
    """x + y*u in a YasuiIntegralModule; representatives stay ambient."""

    __slots__ = ("module", "free", "upart")

    def __init__(self, module: YasuiIntegralModule, free: GradedSeries,
                 upart: GradedSeries):
        self.module = module
        self.free = free
        self.upart = upart

    def __add__(self, other: "YasuiElement") -> "YasuiElement":
        self._check(other)
        return YasuiElement(self.module, self.free + other.free,
                            self.upart + other.upart)

    def __mul__(self, other: "YasuiElement") -> "YasuiElement":
        self._check(other)
        mod = self.module
        free = self.free * other.free
        r1 = mod.reduce_mod_2(self.free)
        r2 = mod.reduce_mod_2(other.free)
        c1_mod2 = mod.torsion_presentation.first_class()
        upart = (r1 * other.upart + r2 * self.upart
                 + self.upart * other.upart * c1_mod2)
        return YasuiElement(mod, free, upart)

    def __pow__(self, exponent: int) -> "YasuiElement":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a nonnegative integer")
        out = self.module.one()
        for _ in range(exponent):
            out = out * self
        return out

    def is_zero(self) -> bool:
        return (self.module.free_presentation.normal_form(self.free).is_zero()
                and self.module.torsion_presentation.normal_form(
                    self.upart).is_zero())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, YasuiElement):
            return NotImplemented
        self._check(other)
        free_diff = self.free - other.free
        upart_diff = self.upart - other.upart
        return (self.module.free_presentation.normal_form(
                    free_diff).is_zero()
                and self.module.torsion_presentation.normal_form(
                    upart_diff).is_zero())

    def __hash__(self) -> int:
        raise TypeError("unhashable: equality is up to the defining ideal")

    def _check(self, other: "YasuiElement") -> None:
        if other.module.m != self.module.m:
            raise ValueError("elements from modules over different CP^m")

    def __repr__(self) -> str:
        return (f"<({self.free.render()}) + ({self.upart.render()})*u "
                f"over CP^{self.module.m}>")


class YasuiMod2Module:
    """Mod-2 sibling with basis {1, v, v^2} and v^3 = c1*v over G_2(C^(m+1))."""

    def __init__(self, m: int):
        if not (isinstance(m, int) and m >= 2):
            raise ValueError(f"need an integer m >= 2, got {m!r}")
        self.m = m
        self.presentation = cached_presentation(2, m, CHERN, field=GF2)

    def element(self, comp0: GradedSeries, comp1: GradedSeries,
                comp2: GradedSeries) -> "YasuiMod2Element":
        for comp in (comp0, comp1, comp2):
            self.presentation.ring.require_same(comp.ring)
        return YasuiMod2Element(self, (comp0, comp1, comp2))

    def one(self) -> "YasuiMod2Element":
        ring = self.presentation.ring
        return YasuiMod2Element(self, (ring.one(), ring.zero(), ring.zero()))

    def v(self) -> "YasuiMod2Element":
        ring = self.presentation.ring
        return YasuiMod2Element(self, (ring.zero(), ring.one(), ring.zero()))


class YasuiMod2Element:
    """x0 + x1*v + x2*v^2 with v^3 = c1*v; components in the GF(2) ring."""

    __slots__ = ("module", "comps")

    def __init__(self, module: YasuiMod2Module,
                 comps: tuple[GradedSeries, GradedSeries, GradedSeries]):
        self.module = module
        self.comps = comps

    def __add__(self, other: "YasuiMod2Element") -> "YasuiMod2Element":
        self._check(other)
        return YasuiMod2Element(self.module, tuple(
            a + b for a, b in zip(self.comps, other.comps)))

    def __mul__(self, other: "YasuiMod2Element") -> "YasuiMod2Element":
        # v*v = v^2, v*v^2 = c1*v, v^2*v^2 = c1*v^2.
        self._check(other)
        x0, x1, x2 = self.comps
        y0, y1, y2 = other.comps
        c1 = self.module.presentation.first_class()
        z0 = x0 * y0
        z1 = x0 * y1 + x1 * y0 + c1 * (x1 * y2 + x2 * y1)
        z2 = x0 * y2 + x2 * y0 + x1 * y1 + c1 * (x2 * y2)
        return YasuiMod2Element(self.module, (z0, z1, z2))

    def is_zero(self) -> bool:
        nf = self.module.presentation.normal_form
        return all(nf(comp).is_zero() for comp in self.comps)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, YasuiMod2Element):
            return NotImplemented
        self._check(other)
        nf = self.module.presentation.normal_form
        return all(nf(a - b).is_zero()
                   for a, b in zip(self.comps, other.comps))

    def __hash__(self) -> int:
        raise TypeError("unhashable: equality is up to the defining ideal")

    def _check(self, other: "YasuiMod2Element") -> None:
        if other.module.m != self.module.m:
            raise ValueError("elements from modules over different CP^m")
