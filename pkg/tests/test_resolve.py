"""Plane-curve germ resolution: numerical data, dual graphs, relations."""

from fractions import Fraction

import pytest

from igusa.charts import CharacterSpec
from igusa.poly import parse_poly
from igusa.resolve import (
    NonRationalCenterError,
    relations_check,
    resolution_candidate_poles,
    resolve_germ,
)


def _tree(text):
    return resolve_germ(parse_poly(text, vars=("x", "y")))


def test_cusp_numerical_data():
    tree = _tree("y^2-x^3")
    assert tree.numerical_data() == [(2, 2), (3, 3), (6, 5)]


def test_cusp_dual_graph():
    tree = _tree("y^2-x^3")
    # a path E1 -- E3 -- E2 with the strict branch on E3
    assert tree.adjacency == {frozenset({1, 3}), frozenset({2, 3})}
    assert [s.attached_to for s in tree.strict_components] == [3]


def test_cusp_candidate_poles():
    cps = resolution_candidate_poles(_tree("y^2-x^3"))
    assert {(c.real_part, c.expected_order) for c in cps} == {
        (Fraction(-1), 1),
        (Fraction(-5, 6), 1),
    }


@pytest.mark.parametrize("r", [1, 2, 3])
def test_odd_family_table(r):
    # E_1(2,2) ... E_r(2r,r+1), E_{r+1}(2r+1,r+2), E_{r+2}(4r+2,2r+3)
    tree = _tree(f"x^2+y^{2 * r + 1}")
    expected = [(2 * i, i + 1) for i in range(1, r + 1)]
    expected += [(2 * r + 1, r + 2), (4 * r + 2, 2 * r + 3)]
    assert tree.numerical_data() == expected
    # the last curve E_{r+2} carries the distinguished candidate
    # -1/2 - 1/(2r+1), which is the maximum of the real parts
    distinguished = max(c.real_part for c in resolution_candidate_poles(tree))
    assert distinguished == Fraction(-(2 * r + 3), 4 * r + 2)
    assert distinguished == Fraction(-1, 2) - Fraction(1, 2 * r + 1)


def test_odd_family_dual_graph():
    tree = _tree("x^2+y^5")
    assert tree.adjacency == {
        frozenset({1, 2}),
        frozenset({2, 4}),
        frozenset({3, 4}),
    }
    assert [s.attached_to for s in tree.strict_components] == [4]


def test_normal_crossings_immediately():
    tree = _tree("x*y")
    assert tree.numerical_data() == []
    assert tree.adjacency == set()


def test_irrational_directions_stop():
    # x^2+y^2 is a normal crossing in the blown-up surface after one step:
    # the strict transform meets the exceptional curve in two non-rational
    # points, recorded as a degree-2 component
    tree = _tree("x^2+y^2")
    assert tree.numerical_data() == [(2, 2)]
    assert [(s.attached_to, s.degree) for s in tree.strict_components] == [(1, 2)]


def test_relations_on_corpus():
    corpus = ["y^2-x^3", "y^2-x^5", "x^2+y^3", "x^2+y^5", "x*y*(x+y)+x^4", "x^2+y^2"]
    for text in corpus:
        tree = _tree(text)
        for step in range(1, len(tree.log) + 1):
            report = relations_check(tree, step)
            assert report["ok"], (text, step, report)


def test_relation_values_first_cusp_step():
    tree = _tree("y^2-x^3")
    report = relations_check(tree, 1)
    assert report["relation1"]["lhs"] == 2
    assert report["relation1"]["rhs"] == 2
    assert report["relation2"]["lhs"] == Fraction(-2)


def test_recursion_consistency():
    # recompute each (N,nu) from the logged parents and multiplicity
    for text in ("y^2-x^3", "x^2+y^5", "x^2+y^7"):
        tree = _tree(text)
        for rec in tree.log:
            parents = list(rec.axes.values())
            N = rec.mu + sum(N for _, N, _ in parents)
            nu = 2 - len(parents) + sum(nu for _, _, nu in parents)
            curve = tree.curve(rec.new_id)
            assert (curve.N, curve.nu) == (N, nu), (text, rec.step)


def test_candidate_pole_character_filter():
    tree = _tree("x^2+y^5")
    # data (2,2),(4,3),(5,4),(10,7), strict N=1: nothing divisible by 3
    assert resolution_candidate_poles(tree, CharacterSpec(order=3)) == []
    with_d2 = resolution_candidate_poles(tree, CharacterSpec(order=2))
    assert {c.real_part for c in with_d2} == {
        Fraction(-1),
        Fraction(-3, 4),
        Fraction(-7, 10),
    }


def test_rejects_non_squarefree():
    with pytest.raises(ValueError):
        _tree("y^2")
    # squarefree products of distinct lines are accepted
    _tree("x^2*y+x*y^2")


def test_rejects_nonvanishing_or_zero():
    with pytest.raises(ValueError):
        _tree("x+1")
    with pytest.raises(ValueError):
        resolve_germ(parse_poly("0", vars=("x", "y")))


def test_non_rational_center_error():
    # tangent cone (y^2-2x^2)^2: the singular directions are irrational
    with pytest.raises(NonRationalCenterError):
        _tree("(y^2-2*x^2)^2+x^5")


def test_dot_export():
    dot = _tree("y^2-x^3").to_dot()
    assert 'E1 [label="E1(2,2)"]' in dot
    assert 'E2 [label="E2(3,3)"]' in dot
    assert 'E3 [label="E3(6,5)"]' in dot
    assert "E1 -- E3" in dot
