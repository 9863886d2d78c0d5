"""Manifold specs and their mod-2 total and dual class computations."""

import random

import pytest

from kregular import (ComplexProj, Euclid, Product, QuatProj, RealProj,
                      Sphere, atoms, cohomology_ring, dual_sw, floor_log2,
                      is_closed, real_dimension, render, top_dual_degree,
                      top_dual_degree_closed_form, total_sw)


def test_dimension_validation():
    for family in (Sphere, RealProj, ComplexProj, QuatProj):
        with pytest.raises(ValueError):
            family(1)
        with pytest.raises(ValueError):
            family(-2)
    with pytest.raises(ValueError):
        Euclid(0)
    assert Euclid(1).m == 1


def test_product_flattening_and_validation():
    inner = Product((Sphere(2), RealProj(3)))
    outer = Product((inner, ComplexProj(2)))
    assert outer.factors == (Sphere(2), RealProj(3), ComplexProj(2))
    with pytest.raises(ValueError):
        Product(())
    with pytest.raises(ValueError):
        Product((Sphere(2), "RP^3"))


def test_atoms_and_render():
    spec = Product((Sphere(3), RealProj(5)))
    assert atoms(spec) == (Sphere(3), RealProj(5))
    assert atoms(Sphere(4)) == (Sphere(4),)
    assert render(spec) == "S^3 x RP^5"
    assert render(QuatProj(2)) == "HP^2"


def test_real_dimension_and_closedness():
    assert real_dimension(Sphere(3)) == 3
    assert real_dimension(ComplexProj(2)) == 4
    assert real_dimension(QuatProj(2)) == 8
    assert real_dimension(Product((Euclid(2), ComplexProj(3)))) == 8
    assert is_closed(Product((Sphere(2), RealProj(3))))
    assert not is_closed(Product((Sphere(2), Euclid(1))))


def test_floor_log2():
    assert [floor_log2(m) for m in (1, 2, 3, 4, 7, 8)] == [0, 1, 1, 2, 2, 3]
    with pytest.raises(ValueError):
        floor_log2(0)


# ---------------------------------------------------------------------------
# Total classes.

def test_total_sw_sphere_is_one():
    for m in (2, 5, 9):
        assert total_sw(Sphere(m)).render() == "1"


def test_total_sw_rp5():
    assert total_sw(RealProj(5)).render() == "1 + a^2 + a^4"


def test_total_sw_cp2():
    assert total_sw(ComplexProj(2)).render() == "1 + b + b^2"


def test_total_sw_rp4():
    # (1+a)^5 with a^5 = 0: the binomial coefficients 5, 10, 10, 5 leave
    # only the linear and quartic terms.
    assert total_sw(RealProj(4)).render() == "1 + a + a^4"


# ---------------------------------------------------------------------------
# Dual classes.

def test_dual_sw_examples():
    assert dual_sw(RealProj(5)).render() == "1 + a^2"
    assert dual_sw(Sphere(6)).render() == "1"
    assert dual_sw(RealProj(4)).render() == "1 + a + a^2 + a^3"


def test_dual_sw_product_with_sphere_factor():
    spec = Product((Sphere(2), RealProj(3)))
    assert dual_sw(spec) == cohomology_ring(spec).one()


def test_product_ring_generator_names():
    ring = cohomology_ring(Product((RealProj(3), ComplexProj(2))))
    assert ring.names == ("a1", "b2")
    assert ring.degrees == (1, 2)
    single = cohomology_ring(RealProj(5))
    assert single.names == ("a",)


def test_total_times_dual_is_one():
    specs = [RealProj(7), ComplexProj(5), QuatProj(3), Sphere(4),
             Product((RealProj(6), ComplexProj(4))),
             Product((Sphere(3), RealProj(5), QuatProj(2)))]
    for spec in specs:
        assert real_dimension(spec) <= 64
        ring = cohomology_ring(spec)
        assert total_sw(spec) * dual_sw(spec) == ring.one()


def test_top_dual_degree_examples():
    assert top_dual_degree(RealProj(5)).top_degree == 2
    assert top_dual_degree(ComplexProj(4)).top_degree == 6
    assert top_dual_degree(QuatProj(2)).top_degree == 4
    assert top_dual_degree(Sphere(7)).top_degree == 0
    assert top_dual_degree(RealProj(5)).method == "series-inversion"


def test_closed_form_examples():
    assert top_dual_degree_closed_form(RealProj(4)).top_degree == 3
    assert top_dual_degree_closed_form(
        Product((RealProj(3), ComplexProj(2)))).top_degree == 2
    assert top_dual_degree_closed_form(Sphere(7)).top_degree == 0
    assert top_dual_degree_closed_form(Euclid(3)).top_degree == 0
    assert top_dual_degree_closed_form(RealProj(4)).method == "closed-form"


@pytest.mark.parametrize("family", [RealProj, ComplexProj, QuatProj])
def test_brute_force_matches_closed_form_small(family):
    # Full m in [2, 64] sweep is an acceptance criterion.
    for m in range(2, 17):
        brute = top_dual_degree(family(m)).top_degree
        closed = top_dual_degree_closed_form(family(m)).top_degree
        assert brute == closed, (family.__name__, m)


def test_top_coefficient_is_one():
    for spec in (RealProj(6), ComplexProj(5), QuatProj(3)):
        dual = dual_sw(spec)
        top = dual.top_degree()
        part = dual.homogeneous_part(top)
        assert list(part.terms.values()) == [1]


def test_product_multiplicativity_random_pairs():
    rng = random.Random(2024)
    families = (Sphere, RealProj, ComplexProj, QuatProj)
    for _ in range(30):
        a = families[rng.randrange(4)](rng.randint(2, 8))
        b = families[rng.randrange(4)](rng.randint(2, 8))
        if real_dimension(a) + real_dimension(b) > 32:
            continue
        q_prod = top_dual_degree(Product((a, b))).top_degree
        assert q_prod == top_dual_degree(a).top_degree \
            + top_dual_degree(b).top_degree
