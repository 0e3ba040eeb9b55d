"""Recognition pipeline: circulant criterion, tensor splitting, towers."""
from __future__ import annotations

from fractions import Fraction

import pytest

from qsymgraph.classify import (
    canonical_key,
    check_landau_relations,
    classify,
    cyclic_criterion,
    enumerate_homogeneous,
    landau_verify,
    product_factor_candidates,
    product_test,
    recognize_fuss_catalan,
    regular_graph_reps,
)
from qsymgraph.closure import ClosureConfig
from qsymgraph.graphs import (
    GraphError,
    complement,
    complete,
    cube,
    disjoint_copies,
    edgeless,
    eight_spoke_wheel,
    multi_simplex,
    n_gon,
    nine_star,
    oriented_n_gon,
    parse_graph,
    tensor_product,
)
from qsymgraph.scalars import CyclotomicElement


def discrete_torus():
    """Rook moves one step on a 3 by 3 grid with wraparound."""
    edges = set()
    for x in range(3):
        for y in range(3):
            v = 3 * x + y
            for w in (3 * ((x + 1) % 3) + y, 3 * x + (y + 1) % 3):
                edges.add((min(v, w), max(v, w)))
    text = "vertices 9\n" + "".join(f"edge c {a} {b}\n" for a, b in sorted(edges))
    return parse_graph(text)


# -- circulant criterion ------------------------------------------------------


def test_wheel_passes_with_the_five_exact_values():
    verdict = cyclic_criterion(eight_spoke_wheel())
    assert verdict.accepted
    assert verdict.n == 8
    three = CyclotomicElement.from_rational(8, 3)
    one = CyclotomicElement.from_rational(8, 1)
    minus_one = CyclotomicElement.from_rational(8, -1)
    # In the order-8 power basis 1, z, z^2, z^3 the square root of two
    # is z - z^3.
    root_two_minus_one = CyclotomicElement(
        8, (Fraction(-1), Fraction(1), Fraction(0), Fraction(-1))
    )
    minus_root_two_minus_one = CyclotomicElement(
        8, (Fraction(-1), Fraction(-1), Fraction(0), Fraction(1))
    )
    assert verdict.values == (
        three,
        root_two_minus_one,
        one,
        minus_root_two_minus_one,
        minus_one,
    )
    assert len(set(verdict.values)) == 5


@pytest.mark.parametrize("e", [1, 2])
def test_both_nine_stars_pass(e):
    verdict = cyclic_criterion(nine_star(e))
    assert verdict.accepted
    assert verdict.n == 9
    assert len(set(verdict.values)) == len(verdict.values)


def test_square_rejected_by_the_small_n_exclusion():
    verdict = cyclic_criterion(n_gon(4))
    assert not verdict.accepted
    assert verdict.n == 4


def test_two_tetrahedra_rejected_by_value_collision():
    verdict = cyclic_criterion(disjoint_copies(2, complete(4)))
    assert not verdict.accepted
    assert "collision" in verdict.reason
    minus_one = CyclotomicElement.from_rational(8, -1)
    # The middle of the value list shows the collision that matters:
    # both nontrivial character sums degenerate to the same number.
    assert verdict.values[1] == verdict.values[2] == minus_one


def test_pentagon_passes_criterion():
    verdict = cyclic_criterion(n_gon(5))
    assert verdict.accepted
    assert len(set(verdict.values)) == 3


# -- tensor splitting ---------------------------------------------------------


def test_cube_splits_as_four_times_two():
    verdict = product_test(cube(), complete(4), complete(2))
    assert verdict.accepted
    assert verdict.classification is not None
    indices = sorted(f.indices for f in verdict.classification.factors)
    assert indices == [(2,), (4,)]
    prefix = verdict.classification.series.prefix(5)
    assert prefix == [1, 1, 4, 20, 112]


def test_hexagon_splits_as_triangle_times_segment():
    verdict = product_test(n_gon(6), complete(3), complete(2))
    assert verdict.accepted
    prefix = verdict.classification.series.prefix(4)
    assert prefix == [1, 1, 4, 20]


def test_torus_is_rejected_on_shared_ratios():
    # The torus really is the square of a triangle, but both factors
    # carry the same spectrum, so the splitting argument cannot run.
    from qsymgraph.graphs import is_isomorphic

    torus = discrete_torus()
    assert is_isomorphic(torus, tensor_product(complete(3), complete(3)))
    verdict = product_test(torus, complete(3), complete(3))
    assert not verdict.accepted
    assert "ratio" in verdict.reason


def test_shape_mismatch_is_rejected_quickly():
    verdict = product_test(n_gon(6), complete(3), complete(3))
    assert not verdict.accepted


def test_hexagon_really_is_that_product():
    from qsymgraph.graphs import is_isomorphic

    assert is_isomorphic(n_gon(6), tensor_product(complete(3), complete(2)))
    assert is_isomorphic(cube(), tensor_product(complete(4), complete(2)))


def test_factor_candidates_are_connected_regular():
    cands = product_factor_candidates(4)
    assert all(c.n == 4 for c in cands)
    names = sorted(c.edge_count() for c in cands)
    assert names == [4, 6]  # the square and the complete graph


# -- multi-simplex shapes -----------------------------------------------------


def test_point_sets_and_complete_graphs():
    match = recognize_fuss_catalan(edgeless(6))
    assert match is not None and match.indices == (6,)
    match = recognize_fuss_catalan(complete(5))
    assert match is not None and match.indices == (5,)


def test_disjoint_complete_copies():
    match = recognize_fuss_catalan(disjoint_copies(2, complete(4)))
    assert match is not None
    assert match.indices == (2, 4)
    # An index of 2 keeps the closed form out of reach.
    assert not match.generic


def test_two_squares_recognized_as_triple():
    match = recognize_fuss_catalan(disjoint_copies(2, n_gon(4)))
    assert match is not None
    assert match.indices == (2, 2, 2)
    assert not match.generic


def test_explicit_multi_simplex_colors():
    match = recognize_fuss_catalan(multi_simplex(3, 5))
    assert match is not None
    assert match.indices == (3, 5)
    assert not match.generic
    match = recognize_fuss_catalan(multi_simplex(4, 4))
    assert match is not None and match.generic


def test_pentagon_is_no_simplex():
    assert recognize_fuss_catalan(n_gon(5)) is None


# -- averaging tower ----------------------------------------------------------


@pytest.mark.parametrize("ns", [(2, 3), (2, 2, 2), (4,)])
def test_landau_relations_hold_on_simplices(ns):
    report = landau_verify(multi_simplex(*ns))
    assert report.indices == ns
    assert report.all_pass
    assert report.failures == ()


def test_landau_rejects_non_simplices():
    with pytest.raises(GraphError):
        landau_verify(n_gon(5))
    with pytest.raises(GraphError):
        landau_verify(cube())


def test_perturbed_tower_fails_exchange_with_witness():
    ns = (2, 3)
    g = multi_simplex(*ns)
    report = landau_verify(g)
    assert report.all_pass
    # Rebuild the matrices, then knock one entry off.
    import math

    n = 6
    radix = [3, 1]
    digs = [[(v // radix[i]) % ns[i] for i in range(2)] for v in range(n)]
    ps = []
    for i in range(1, 4):
        scale = Fraction(1, math.prod(ns[i - 1 :]))
        ps.append(
            [
                [
                    scale if digs[a][: i - 1] == digs[b][: i - 1] else Fraction(0)
                    for b in range(n)
                ]
                for a in range(n)
            ]
        )
    ps[1][0][0] += Fraction(1, 7)
    ps[1][1][1] -= Fraction(1, 7)
    bad = check_landau_relations(ps, ns)
    assert not bad.all_pass
    assert any("exchange" in f or "diagonal" in f or "symmetric" in f for f in bad.failures)


# -- end-to-end classification ------------------------------------------------


def test_classify_pentagon():
    c = classify(n_gon(5))
    assert c.kind == "dihedral"
    assert c.describe() == "Dihedral(5)"
    assert c.series_prefix(5) == [1, 1, 3, 13, 63]


def test_classify_cube():
    c = classify(cube())
    assert c.kind == "tensor_product"
    assert c.describe() == "TensorProduct(FussCatalan(2), FussCatalan(4))"
    assert c.series_prefix(5) == [1, 1, 4, 20, 112]


def test_classify_oriented_cycles():
    for n in (3, 5):
        c = classify(oriented_n_gon(n), ClosureConfig(max_level=2))
        assert c.kind == "cyclic_group"
        assert c.describe() == f"CyclicGroup({n})"


def test_classify_square_through_its_complement():
    c = classify(n_gon(4), ClosureConfig(max_level=3))
    assert c.kind == "fuss_catalan"
    assert c.indices == (2, 2)
    assert not c.generic
    assert c.prefix is not None
    assert list(c.prefix[:3]) == [1, 1, 3]


def test_classify_torus_stays_unknown():
    c = classify(discrete_torus(), ClosureConfig(max_level=3))
    assert c.kind == "unknown"
    assert list(c.prefix) == [1, 1, 3, 15]
    assert any("not transitive" not in line for line in c.trail)


def test_classify_agrees_with_complement():
    base = classify(n_gon(5))
    comp = classify(complement(n_gon(5)))
    assert base.kind == comp.kind == "dihedral"
    assert base.n == comp.n == 5


def test_classify_wheel_is_dihedral():
    c = classify(eight_spoke_wheel(), ClosureConfig(max_level=2))
    assert c.describe() == "Dihedral(8)"
    assert c.series_prefix(5) == [1, 1, 5, 34, 260]


# -- enumeration --------------------------------------------------------------


def test_enumeration_to_five_vertices():
    report = enumerate_homogeneous(5, ClosureConfig(max_level=3))
    assert report.total == 12
    sizes = {n: len(v) for n, v in report.per_n().items()}
    assert sizes == {1: 1, 2: 2, 3: 2, 4: 4, 5: 3}
    pentagon_rows = [
        e for e in report.entries if e.n == 5 and e.classification.kind == "dihedral"
    ]
    assert len(pentagon_rows) == 1
    assert pentagon_rows[0].classification.describe() == "Dihedral(5)"


def test_enumeration_single_point():
    report = enumerate_homogeneous(1)
    assert report.total == 1
    assert report.entries[0].classification.indices == (1,)


def test_enumeration_guard():
    with pytest.raises(ValueError):
        enumerate_homogeneous(10)
    with pytest.raises(ValueError):
        enumerate_homogeneous(0)


def test_canonical_key_separates_sizes():
    assert canonical_key(edgeless(3)) != canonical_key(edgeless(4))
    assert canonical_key(n_gon(4)) == canonical_key(
        parse_graph("vertices 4\nedge c 0 2\nedge c 2 1\nedge c 1 3\nedge c 0 3\n")
    )


def test_regular_reps_small_counts():
    assert len(regular_graph_reps(4)) == 2
    assert len(regular_graph_reps(5)) == 2
    for g in regular_graph_reps(6):
        degrees = {sum(1 for c in g.components for p in c.pairs if v in p) for v in range(6)}
        assert len(degrees) == 1
