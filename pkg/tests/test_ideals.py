"""Minor ideals, multiplication maps, containment ladders, cross-checks."""

from fractions import Fraction

import pytest

from detrep.ideals import (
    component_dim,
    component_matrix,
    containment_degree,
    diagram_crosscheck,
    disjointness_check,
    mult_map_matrix,
    mult_map_report,
    u_generators,
)
from detrep.linalg import in_column_space, rank
from detrep.polynomials import HomPoly, X, Y, Z, h0_p2, mono_basis, parse_hompoly
from detrep.sampling import derive_rng, random_hompoly


def triple(*texts):
    return tuple(parse_hompoly(t) for t in texts)


# ---------------------------------------------------------------- generators


def test_u_generators_hand_expansion():
    f = triple("x", "2*y", "3*z")
    g = triple("y", "z", "x")
    u = u_generators(f, g)
    assert u.n == 0
    assert len(u.generators) == 6
    # minors of f against the coordinate row
    assert u.generators[0] == parse_hompoly("-x*y")        # x*y - 2*y*x
    assert u.generators[1] == parse_hompoly("-2*x*z")      # x*z - 3*z*x
    assert u.generators[2] == parse_hompoly("-y*z")        # 2*y*z - 3*z*y
    # minors of g
    assert u.generators[3] == parse_hompoly("y^2 - x*z")
    assert u.generators[4] == parse_hompoly("y*z - x^2")
    assert u.generators[5] == parse_hompoly("z^2 - x*y")


def test_u_generators_degree_checks():
    with pytest.raises(ValueError):
        u_generators(triple("x", "y", "z"), triple("x^2", "y^2", "z^2"))
    with pytest.raises(ValueError):
        u_generators(triple("x", "y", "z"), triple("x", "y", "z"), n=3)


def test_generators_vanish_where_triple_matches_coordinates():
    # at a point where (f1,f2,f3) is proportional to (x,y,z) all f-minors die
    f = triple("y", "z", "x")
    u = u_generators(f, f)
    pt = (Fraction(1), Fraction(1), Fraction(1))
    for gen in u.generators:
        assert gen.evaluate(pt) == 0


# ---------------------------------------------------------------- mult map


def test_mult_map_rank_matches_ideal_component():
    # two code paths: column rank of the bilinear map vs the graded piece
    rng = derive_rng(31, "mult", 0)
    for n in (0, 1):
        f = tuple(random_hompoly(rng, n + 1) for _ in range(3))
        g = tuple(random_hompoly(rng, n + 1) for _ in range(3))
        u = u_generators(f, g)
        assert rank(mult_map_matrix(u)) == component_dim(list(u.generators), 2 * n + 3)


def test_mult_map_surjective_generic_small():
    rng = derive_rng(31, "mult", 1)
    f = tuple(random_hompoly(rng, 1) for _ in range(3))
    g = tuple(random_hompoly(rng, 1) for _ in range(3))
    rep = mult_map_report(u_generators(f, g))
    assert rep.target_dim == h0_p2(3)
    assert rep.surjective


def test_mult_map_collapses_for_equal_triples():
    f = triple("x", "y", "z")
    u = u_generators(f, f)
    assert all(gen.is_zero() for gen in u.generators)
    assert not mult_map_report(u).surjective


def test_recombining_the_pair_preserves_the_image():
    rng = derive_rng(31, "gl2", 0)
    f = tuple(random_hompoly(rng, 2) for _ in range(3))
    g = tuple(random_hompoly(rng, 2) for _ in range(3))
    f2 = tuple(p * Fraction(2) + q * Fraction(3) for p, q in zip(f, g))
    g2 = tuple(p + q * Fraction(2) for p, q in zip(f, g))
    ua, ub = u_generators(f, g), u_generators(f2, g2)
    assert rank(mult_map_matrix(ua)) == rank(mult_map_matrix(ub))
    # span equality in the generating degree
    A = component_matrix(list(ua.generators), ua.n + 2)
    assert all(in_column_space(A, gen.coeff_vector()).member for gen in ub.generators)


# ---------------------------------------------------------------- ladders


def brute_monomial_ideal_dim(exps, k):
    # valid for monomial generators only: count divisible monomials
    count = 0
    for m in mono_basis(k):
        if any(all(m[i] >= e[i] for i in range(3)) for e in exps):
            count += 1
    return count


def test_component_dim_against_divisibility_count():
    cases = [
        [(1, 0, 0), (0, 1, 0), (0, 0, 1)],
        [(2, 0, 0), (0, 2, 0), (0, 0, 2)],
        [(2, 1, 0), (0, 0, 3)],
        [(1, 1, 0), (0, 1, 1), (1, 0, 1)],
    ]
    for exps in cases:
        gens = [HomPoly.monomial(e) for e in exps]
        for k in range(0, 7):
            assert component_dim(gens, k) == brute_monomial_ideal_dim(exps, k)


def test_containment_degree_coordinate_ideal():
    rep = containment_degree([X, Y, Z], k_max=5)
    assert rep.reached == 1


def test_containment_degree_squares():
    rep = containment_degree([X * X, Y * Y, Z * Z], k_max=8)
    assert rep.reached == 4
    dims = {row.k: row.dim for row in rep.ladder}
    assert dims[3] == 9  # only x^3 alone misses... the monomial count says 9 of 10
    assert dims[4] == h0_p2(4)


def test_containment_not_reached_reports_none():
    # two squares share the zero point (0:0:1), the ladder can never fill
    rep = containment_degree([X * X, Y * Y], k_max=9)
    assert rep.reached is None
    assert len(rep.ladder) == 10


def test_component_dim_of_principal_ideal():
    f = parse_hompoly("x^2 + y*z")
    for k in (2, 3, 4):
        assert component_dim([f], k) == h0_p2(k - 2)


# ---------------------------------------------------------------- cross-checks


def test_crosscheck_generic_pair_all_green():
    rng = derive_rng(31, "cross", 0)
    f = tuple(random_hompoly(rng, 1) for _ in range(3))
    g = tuple(random_hompoly(rng, 1) for _ in range(3))
    rep = diagram_crosscheck(f, g)
    assert rep.gpli
    assert rep.mult_surjective
    assert rep.tangent_surjective
    assert rep.agree


def test_crosscheck_equal_triples_degenerate():
    f = triple("x", "y", "z")
    rep = diagram_crosscheck(f, f)
    assert not rep.gpli
    assert not rep.mult_surjective
    assert not rep.tangent_surjective
    assert rep.agree


def test_disjointness_of_the_special_pair():
    # vanishing loci {y=z=0} and {x=z=0} share no projective point
    n = 1
    zero = HomPoly.zero(n + 1)
    f = (HomPoly.monomial((0, 0, n + 1)), HomPoly.monomial((n + 1, 0, 0)), zero)
    g = (zero, HomPoly.monomial((0, 0, n + 1)), HomPoly.monomial((0, n + 1, 0)))
    rep = disjointness_check(f, g)
    assert rep.disjoint_certified


def test_disjointness_fails_for_equal_triples():
    f = triple("x", "y", "z")
    rep = disjointness_check(f, f, k_max=6)
    assert not rep.disjoint_certified
