from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from singlink.corpus import gamma_family, n_family
from singlink.graph import (GraphShapeError, PlumbingError, PlumbingGraph, SeifertData,
                            evaluate_cf, hj_expansion, parse_plumbing, seifert_to_plumbing,
                            serialize_plumbing, vertex_degrees)

from conftest import trees


def test_parse_two_vertices():
    g = parse_plumbing("vertex a -2\nvertex b -3\nedge a b\n")
    assert g.ids == ("a", "b")
    assert g.weights == (-2, -3)
    assert g.sorted_edges() == [("a", "b")]


def test_parse_d4_star():
    text = "vertex c -2\nvertex x -2\nvertex y -2\nvertex z -2\nedge c x\nedge c y\nedge c z\n"
    g = parse_plumbing(text)
    assert len(g) == 4 and g.is_tree()
    assert vertex_degrees(g) == [3, 1, 1, 1]


@pytest.mark.parametrize("text, message, line", [
    ("edge a b\n", "dangling endpoint a", 1),
    ("vertex a -2\nvertex a -3\n", "duplicate vertex id a", 2),
    ("vertex a -2\nedge a a\n", "self-loop at a", 2),
    ("vertex a -2\nvertex b -2\nedge a b\nedge b a\n", "duplicate edge", 4),
    ("vertex a x\n", "expected integer weight", 1),
    ("vertx a -2\n", "unknown statement", 1),
    ("# only a comment\n", "no vertices", None),
    ("seifert -2 1/2 3/2 1/3\n", "must lie strictly between 0 and 1", 1),
    ("seifert -2 1/2 1/2 1/0\n", "bad ratio", 1),
])
def test_parse_errors(text, message, line):
    with pytest.raises(PlumbingError) as info:
        parse_plumbing(text)
    assert message in str(info.value)
    assert info.value.line == line


def test_comments_and_genus():
    g = parse_plumbing("vertex a -2 genus 1  # a torus\n\n")
    assert g.vertices[0].genus == 1
    with pytest.raises(GraphShapeError):
        g.require_plumbing_tree()


def test_cycle_rejected_downstream():
    g = parse_plumbing("vertex a -3\nvertex b -3\nvertex c -3\nedge a b\nedge b c\nedge a c\n")
    assert not g.is_tree()
    with pytest.raises(GraphShapeError, match="cycle"):
        g.require_plumbing_tree()


def test_disconnected_rejected():
    g = parse_plumbing("vertex a -2\nvertex b -2\n")
    with pytest.raises(GraphShapeError, match="disconnected"):
        g.require_plumbing_tree()


@pytest.mark.parametrize("x, terms", [
    (Fraction(-2), [-2]),
    (Fraction(-3, 2), [-2, -2]),
    (Fraction(-9, 4), [-3, -2, -2, -2]),
])
def test_hj_examples(x, terms):
    assert hj_expansion(x) == terms
    assert evaluate_cf(terms) == x


def _all_expansions(max_len: int, lo: int):
    """Every all-<=-2 expansion with terms in [lo, -2] and length <= max_len."""
    out = [[]]
    for _ in range(max_len):
        out = out + [t + [a] for t in out if len(t) < max_len for a in range(lo, -1)]
    return [t for t in out if t]


def test_hj_minus_nine_quarters_is_shortest():
    target = Fraction(-9, 4)
    hits = {tuple(t) for t in _all_expansions(4, -4) if evaluate_cf(t) == target}
    assert hits == {(-3, -2, -2, -2)}


def test_hj_rejects_small():
    for x in (Fraction(-1), Fraction(0), Fraction(-1, 2)):
        with pytest.raises(ValueError):
            hj_expansion(x)


@given(st.integers(2, 200).flatmap(lambda p: st.tuples(st.just(p), st.integers(1, p - 1))))
def test_hj_round_trip(pq):
    p, q = pq
    x = Fraction(-p, q)
    terms = hj_expansion(x)
    assert all(a <= -2 for a in terms)
    assert evaluate_cf(terms) == x


def test_hj_round_trip_exhaustive():
    for p in range(2, 201):
        for q in range(1, p):
            x = Fraction(-p, q)
            assert evaluate_cf(hj_expansion(x)) == x


def test_seifert_d4():
    g = seifert_to_plumbing(SeifertData(-2, Fraction(1, 2), Fraction(1, 2), Fraction(1, 2)))
    assert g.weights == (-2, -2, -2, -2)
    assert vertex_degrees(g) == [3, 1, 1, 1]


@pytest.mark.parametrize("p", range(1, 7))
def test_seifert_gamma(p):
    g = seifert_to_plumbing(SeifertData(-2, Fraction(1, 3), Fraction(2, 3), Fraction(p, p + 1)))
    assert g.weights == (-2, -3, -2, -2) + (-2,) * p
    degrees = dict(zip(g.ids, vertex_degrees(g)))
    assert degrees["c"] == 3
    assert degrees["a1"] == degrees["b2"] == degrees[f"d{p}"] == 1
    assert all(degrees[f"d{i}"] == 2 for i in range(1, p))
    assert gamma_family(p) == g.reordered(gamma_family(p).ids)


def test_seifert_remark_one_legs():
    g = seifert_to_plumbing(SeifertData(-2, Fraction(1, 2), Fraction(2, 3), Fraction(5, 6)))
    assert g.weights == (-2, -2, -2, -2, -2, -2, -2, -2, -2)
    assert hj_expansion(Fraction(-6, 5)) == [-2] * 5


@given(st.integers(-6, -1), st.lists(st.fractions(min_value=0, max_value=1, max_denominator=30),
                                     min_size=3, max_size=3))
def test_seifert_vertex_count(e0, rs):
    if any(not 0 < r < 1 for r in rs):
        return
    g = seifert_to_plumbing(SeifertData(e0, *rs))
    assert len(g) == 1 + sum(len(hj_expansion(-1 / r)) for r in rs)
    assert g.is_tree()


def test_single_vertex_degree():
    assert vertex_degrees(PlumbingGraph.from_lists([("a", -2)])) == [0]


def test_n_family_order():
    assert n_family(5).weights == (-2, -2, -2, -5)


@settings(max_examples=60)
@given(trees())
def test_parse_serialize_identity(g):
    assert parse_plumbing(serialize_plumbing(g)) == g
    assert serialize_plumbing(parse_plumbing(serialize_plumbing(g))) == serialize_plumbing(g)


def test_serialize_genus_and_order():
    g = PlumbingGraph.from_lists([("z", -2, 1), ("a", -3)], [("z", "a")])
    assert serialize_plumbing(g) == "vertex z -2 genus 1\nvertex a -3\nedge a z\n"


def test_seifert_file():
    g = parse_plumbing("# E8\nseifert -2 1/2 2/3 4/5\n")
    assert g.seifert is not None and g.seifert.e0 == -2
    assert len(g) == 8
    with pytest.raises(PlumbingError, match="cannot be mixed"):
        parse_plumbing("seifert -2 1/2 2/3 4/5\nvertex x -2\n")
