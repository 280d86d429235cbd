import json
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

import oracle
from cksquare.analysis import (AlgebraDescriptor, Signature, analyze_site, cartan_aliases,
                               cartan_dimension, cartan_label, character, describe,
                               dimension_formula, expected_signature, identify, is_semisimple,
                               killing_form, real_form_invariants, signature, standard_name)
from cksquare.generators import Series, site_realization
from cksquare.scalar import FieldTag
from cksquare.span import LieBasis, structure_constants

SITES = [(s, f) for s in Series for f in FieldTag]


def test_signature_of_simple_forms():
    assert signature([[1, 0], [0, -3]]) == Signature(1, 1, 0)
    assert signature([[0, 1], [1, 0]]) == Signature(1, 1, 0)
    assert signature([[0, 0], [0, 0]]) == Signature(0, 0, 2)
    assert signature([[1, 1], [1, 1]]) == Signature(1, 0, 1)
    assert signature([]) == Signature(0, 0, 0)
    with pytest.raises(ValueError):
        signature([[0, 1], [2, 0]])


sym = st.integers(2, 5).flatmap(lambda n: st.tuples(
    st.lists(st.lists(st.integers(-3, 3), min_size=n, max_size=n), min_size=n, max_size=n),
    st.lists(st.lists(st.integers(-2, 2), min_size=n, max_size=n), min_size=n, max_size=n)))


@settings(max_examples=60, deadline=None)
@given(sym)
def test_signature_is_a_congruence_invariant(data):
    raw, lower = data
    n = len(raw)
    a = [[Fraction(raw[i][j] + raw[j][i]) for j in range(n)] for i in range(n)]
    # unit lower triangular, so invertible over Q
    p = [[Fraction(1) if i == j else Fraction(lower[i][j]) if j < i else Fraction(0)
          for j in range(n)] for i in range(n)]
    pap = [[sum(p[k][i] * a[k][l] * p[l][j] for k in range(n) for l in range(n))
            for j in range(n)] for i in range(n)]
    assert signature(pap) == signature(a)
    assert signature(a).n == n


@pytest.mark.parametrize("w1,expected", [(1, Signature(0, 3, 0)), (-1, Signature(2, 1, 0)), (0, Signature(0, 1, 2))])
def test_killing_of_the_rotation_algebra(w1, expected):
    b = LieBasis.from_matrices([m for _, m in site_realization(Series.sa, FieldTag.R, 2, [w1, 1])])
    form = killing_form(structure_constants(b))
    # B(J01, J01) = -2 w1 and B(J12, J12) = -2 w2 with w2 = 1
    assert form[0][0] == -2 * w1 and form[2][2] == -2
    assert signature(form) == expected
    assert is_semisimple(form) == (w1 != 0)


def test_dimension_formula_table():
    assert [[dimension_formula(p, q, 2) for p in (1, 2, 4)] for q in (1, 2, 4)] == [
        [3, 8, 21], [8, 16, 35], [21, 35, 66]]
    assert dimension_formula(4, 4, 3) == 120 == real_form_invariants("so*(16)")[0]
    for bad in ((3, 1, 1), (1, 1, 0)):
        with pytest.raises(ValueError):
            dimension_formula(*bad)


@pytest.mark.parametrize("series,tag", SITES)
@pytest.mark.parametrize("N", [1, 2, 3])
def test_formula_matches_the_defining_equations(series, tag, N):
    assert oracle.defining_dimension(series.name, tag.name, N, [1.0] * N) == dimension_formula(tag.dim, series.q, N)


@pytest.mark.parametrize("label,dim", [("A_2", 8), ("C_3", 21), ("A_5", 35), ("D_6", 66), ("A_2⊕A_2", 16),
                                       ("A_3", 15), ("B_2", 10), ("C_2", 10), ("D_4", 28), ("E_8", 248), ("F_4", 52)])
def test_cartan_dimension(label, dim):
    assert cartan_dimension(label) == dim


@pytest.mark.parametrize("series,tag", SITES)
@pytest.mark.parametrize("N", [1, 2, 3, 4])
def test_cartan_label_has_the_site_dimension(series, tag, N):
    label = cartan_label(series, tag, N)
    if N == 1 and series is Series.sa and tag is FieldTag.R:
        assert label == "D_1"
    assert cartan_dimension(label) == dimension_formula(tag.dim, series.q, N)


def test_printed_aliases():
    assert cartan_aliases(Series.sl, FieldTag.Q, 1) == ("A_3", "D_3")
    assert cartan_aliases(Series.sa, FieldTag.R, 2)[0] == "B_1"
    assert cartan_aliases(Series.sa, FieldTag.C, 3) == ("A_3",)


@pytest.mark.parametrize("series,tag,N,omega,name", [
    ("sa", FieldTag.R, 2, [1, 1], "so(3)"),
    ("sa", FieldTag.R, 2, [1, -1], "so(2,1)"),
    ("sa", FieldTag.C, 2, [-1, 1], "su(1,2)"),
    ("sa", FieldTag.Q, 1, [1], "sp(2)"),
    ("sl", FieldTag.R, 2, [1, -1], "sl(3,ℝ)"),
    ("sl", FieldTag.C, 1, [1], "sl(2,ℂ)"),
    ("sl", FieldTag.Q, 2, [1, 1], "su*(6)"),
    ("sy", FieldTag.R, 2, [1, 1], "sp(6,ℝ)"),
    ("sy", FieldTag.C, 2, [1, 1], "su(3,3)"),
    ("sy", FieldTag.Q, 2, [1, 1], "so*(12)"),
    ("sa", FieldTag.R, 2, [1, 0], "contracted: sa_{+0}(3,ℝ)"),
])
def test_standard_names(series, tag, N, omega, name):
    assert standard_name(series, tag, N, omega) == name


def test_identify_marks_contractions():
    assert identify("sa", FieldTag.R, 2, [1, 1]) == ("so(3)", "B_1")
    assert identify("sy", FieldTag.C, 2, [0, 1])[1] == "non-simple"


@pytest.mark.parametrize("name,sig", [("so(3)", (0, 3, 0)), ("so(2,1)", (2, 1, 0)), ("sl(3,ℝ)", (5, 3, 0)),
                                      ("su*(6)", (14, 21, 0)), ("sp(6,ℝ)", (12, 9, 0)), ("su(3,3)", (18, 17, 0)),
                                      ("so*(12)", (30, 36, 0)), ("sl(2,ℂ)", (3, 3, 0)), ("so(2)", (0, 0, 1))])
def test_expected_signatures(name, sig):
    assert expected_signature(name) == Signature(*sig)


@pytest.mark.parametrize("sig,value", [((0, 3, 0), -3), ((2, 1, 0), 1), ((0, 0, 0), 0)])
def test_character(sig, value):
    assert character(Signature(*sig)) == value


def test_unknown_real_form():
    with pytest.raises(ValueError):
        real_form_invariants("e7(7)")


ORACLE_CASES = [(s, f, N, w) for N, w in [(1, [1]), (1, [-1]), (2, [1, 1]), (2, [1, -1]), (2, [1, 0]), (2, [0, -1])]
                for s, f in SITES]


@pytest.mark.parametrize("series,tag,N,omega", ORACLE_CASES,
                         ids=[f"{s.name}-{f.name}-N{N}-{''.join(map(str, w))}" for s, f, N, w in ORACLE_CASES])
def test_killing_signature_matches_float_oracle(series, tag, N, omega):
    d = describe(series, tag, N, omega)
    graded = series is Series.sl and 0 in omega
    mats = oracle.closure(oracle.site_generators(series.name, tag.name, N, [float(x) for x in omega], graded))
    assert d.dim == len(mats)
    assert (d.signature.plus, d.signature.minus, d.signature.zero) == oracle.killing_signature(mats)
    assert d.character == character(d.signature) == d.signature.plus - d.signature.minus


def test_descriptor_json_roundtrip():
    d = describe("sy", FieldTag.C, 1, [-1])
    text = json.dumps(d.to_json(), sort_keys=True)
    assert AlgebraDescriptor.from_json(json.loads(text)) == d
    assert d.summary() == "su(2,2), A_3, dim 15, signature (8,7,0)"


def test_site_analysis_parts():
    site = analyze_site("sa", "C", 2, [1, 1])
    assert site.basis.dim == site.constants.dim == len(site.killing) == 8
    assert site.descriptor.semisimple
