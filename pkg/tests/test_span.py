import json
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from cksquare.generators import FieldTag, Series, basis, min_generators, parse_label, build_generator
from cksquare.matrix import CKMatrix, commutator, embed_field
from cksquare.span import (ClosureBoundExceeded, LieBasis, LinearDependence, NotClosed, RationalSpan,
                           StructureConstants, is_closed, is_subspace, jacobi_defect, jacobi_holds, lie_closure,
                           reconstruct, same_span, span_insert, span_of, structure_constants)

vec = st.lists(st.fractions(min_value=-3, max_value=3, max_denominator=2), min_size=5, max_size=5)


@settings(max_examples=60, deadline=None)
@given(st.lists(vec, min_size=1, max_size=7), st.lists(st.integers(-3, 3), min_size=7, max_size=7))
def test_coordinates_reproduce_combinations(vectors, coeffs):
    span = RationalSpan(5)
    kept = [v for v in vectors if span.insert(v)]
    assert span.rank == len(kept) <= 5
    target = [sum((c * v[i] for c, v in zip(coeffs, kept)), Fraction(0)) for i in range(5)]
    coords = span.coordinates(target)
    assert coords is not None
    rebuilt = [sum((coords.get(k, 0) * kept[k][i] for k in range(len(kept))), Fraction(0)) for i in range(5)]
    assert rebuilt == target
    assert all(span.contains(v) for v in vectors)


def test_echelon_form():
    span = span_of([[2, 4, 0], [1, 2, 1], [3, 6, 1]], 3)
    assert span.rank == 2
    assert span.echelon() == [(1, 2, 0), (0, 0, 1)]
    assert not span.contains([0, 1, 0]) and span.coordinates([0, 1, 0]) is None


def test_non_mutating_insert():
    span = span_of([[1, 0]], 2)
    grown, added = span_insert(span, [0, 1])
    assert added and grown.rank == 2 and span.rank == 1
    assert span_insert(span, [3, 0]) == (span, False)


def test_wrong_ambient_dimension():
    with pytest.raises(ValueError):
        RationalSpan(2).insert([1, 2, 3])


def _gens(labels, N, omega, tag=FieldTag.R):
    return [build_generator(parse_label(t), N, omega, tag) for t in labels]


def test_closure_of_two_rotations_is_so3():
    g = lie_closure(_gens(["J(0,1)", "J(1,2)"], 2, [1, 1]), labels=["J(0,1)", "J(1,2)"])
    assert g.dim == 3 and g.labels[2] == "[J(0,1),J(1,2)]"
    assert same_span(g, LieBasis.from_matrices([m for _, m in basis(Series.sa, FieldTag.R, 2, [1, 1])]))


def test_single_generator_spans_a_line():
    assert lie_closure(_gens(["J(0,1)"], 2, [1, 1])).dim == 1
    assert lie_closure([]).dim == 0


def test_closure_bound():
    with pytest.raises(ClosureBoundExceeded):
        lie_closure(_gens(["J(0,1)", "J(1,2)"], 2, [1, 1]), max_dim=2)
    with pytest.raises(ClosureBoundExceeded):
        lie_closure(_gens(["J(0,1)", "J(1,2)"], 2, [1, 1]), max_dim=1)


@settings(max_examples=15, deadline=None)
@given(st.randoms(use_true_random=False))
def test_closure_is_order_independent_and_idempotent(rnd):
    mats = [m for _, m in min_generators(Series.sa, FieldTag.C, 2, [1, -1])]
    rnd.shuffle(mats)
    g = lie_closure(mats)
    assert g.dim == 8
    again = lie_closure(g.matrices)
    assert same_span(again, g) and is_closed(g)


def test_strict_basis_rejects_dependence():
    a = CKMatrix.from_rationals([[0, 1], [0, 0]])
    with pytest.raises(LinearDependence):
        LieBasis.from_matrices([a, a.scale(2)], ["a", "2a"])
    assert LieBasis.from_matrices([a, a.scale(2)], strict=False).dim == 1


def test_structure_constants_of_so3():
    b = LieBasis.from_matrices([m for _, m in basis(Series.sa, FieldTag.R, 2, [2, 3])])
    sc = structure_constants(b)
    # [J01,J02] = 2 J12, [J01,J12] = -J02, [J02,J12] = 3 J01
    assert sc.bracket(0, 1) == {2: 2} and sc.bracket(0, 2) == {1: -1} and sc.bracket(1, 2) == {0: 3}
    assert sc.get(1, 0, 2) == -2
    for i in range(3):
        for j in range(3):
            assert reconstruct(sc, b, i, j) == commutator(b.matrices[i], b.matrices[j])
    assert jacobi_holds(sc)


@pytest.mark.parametrize("omega,c", [([1, 1], 1), ([1, -1], 1), ([0, 1], 0), ([-2, 5], -2)])
def test_first_rotation_constant_is_omega1(omega, c):
    b = LieBasis.from_matrices([m for _, m in basis(Series.sa, FieldTag.R, 2, omega)])
    assert structure_constants(b).get(0, 1, 2) == c


def test_subspace_relations():
    sa_r = LieBasis.from_matrices([m for _, m in basis(Series.sa, FieldTag.R, 2, [1, 1])])
    sa_c = LieBasis.from_matrices([m for _, m in basis(Series.sa, FieldTag.C, 2, [1, 1])])
    sl_r = LieBasis.from_matrices([m for _, m in basis(Series.sl, FieldTag.R, 2, [1, 1])])
    lifted = LieBasis.from_matrices([embed_field(m, FieldTag.C) for m in sa_r.matrices])
    assert is_subspace(lifted, sa_c) and is_subspace(sa_r, sl_r)
    m01 = LieBasis.from_matrices(_gens(["M(0,1)"], 2, [1, 1]))
    assert not is_subspace(m01, sa_r)
    with pytest.raises(ValueError):
        is_subspace(sa_r, sa_c)


def test_structure_constants_json_roundtrip():
    b = LieBasis.from_matrices([m for _, m in basis(Series.sl, FieldTag.C, 1, [-1])])
    sc = structure_constants(b)
    payload = json.loads(json.dumps(sc.to_json()))
    back = StructureConstants.from_json(payload)
    assert back.data == sc.data and back.dim == sc.dim
    assert all(r["i"] < r["j"] for r in payload["constants"])


def test_not_closed_is_reported():
    mats = _gens(["J(0,1)", "J(1,2)"], 2, [1, 1])
    with pytest.raises(NotClosed):
        structure_constants(LieBasis.from_matrices(mats))


def test_jacobi_defect_detects_broken_constants():
    sc = StructureConstants(3, {(0, 1): {2: Fraction(1)}, (0, 2): {1: Fraction(-1)}, (1, 2): {0: Fraction(2)}})
    assert jacobi_defect(sc, 0, 1, 2) == {}
    bad = StructureConstants(3, {(0, 1): {0: Fraction(1)}, (1, 2): {1: Fraction(1)}})
    assert not jacobi_holds(bad)
    assert not jacobi_holds(bad, samples=50)
