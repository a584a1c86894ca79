from fractions import Fraction

import pytest
from hypothesis import given, settings

from singlink.corpus import (corpus, d4, e_type, gamma_family, m_family, n_family, p_family,
                             star)
from singlink.cycle import bad_vertices, fundamental_cycle, is_rational
from singlink.graph import hj_expansion, lens_chain, vertex_degrees
from singlink.lattice import intersection_matrix, is_negative_definite
from singlink.openbook import (BadVertexPresent, ConsistencyError, InvalidCycle, SupportKind,
                               binding_vector, classify_support, heegaard_bounds,
                               milnor_openbook, minimal_milnor_openbook, planar_invariants,
                               valid_cycles)

from conftest import trees

RATIONAL = [e for e in corpus() if is_negative_definite(intersection_matrix(e.graph))
            and is_rational(e.graph).rational]


def test_d4_examples():
    ob = milnor_openbook(d4(), (1, 2, 1, 1))
    assert (ob.n, ob.page_genus, ob.binding_count, ob.norm) == ((0, 1, 0, 0), 1, 1, 1)
    ob = milnor_openbook(d4(), (2, 2, 1, 1))
    assert (ob.page_genus, ob.binding_count, ob.norm) == (1, 2, 2)
    with pytest.raises(InvalidCycle) as info:
        milnor_openbook(d4(), (5, 1, 1, 1))
    assert min(info.value.n) < 0


def test_n_zero_rejected():
    # the E8 lattice is unimodular, so I m = 0 forces m = 0; use a degenerate cycle check instead
    with pytest.raises(InvalidCycle):
        milnor_openbook(d4(), (0, 1, 1, 1))
    with pytest.raises(InvalidCycle):
        milnor_openbook(d4(), (1, 2, 1))


@pytest.mark.parametrize("p", range(2, 9))
def test_gamma(p):
    ob = minimal_milnor_openbook(gamma_family(p))
    assert sorted(ob.n) == [0] * (len(ob.n) - 1) + [1]
    assert (ob.page_genus, ob.binding_count, ob.norm) == (2, 1, 3)


@pytest.mark.parametrize("n", range(2, 7))
def test_families(n):
    ob = minimal_milnor_openbook(n_family(n))
    assert ob.n == (0, 1, 0, n - 2)
    assert (ob.page_genus, ob.binding_count) == (1, n - 1)
    ob = minimal_milnor_openbook(p_family(n))
    assert (ob.page_genus, ob.binding_count, ob.norm) == (n, 1, 2 * n - 1)


@pytest.mark.parametrize("k", range(0, 7))
def test_m_family(k):
    ob = minimal_milnor_openbook(m_family(k))
    assert ob.m == (1,) + (2,) * (k + 1) + (1, 1)
    assert ob.n == (1,) + (0,) * k + (1, 1, 1)
    assert (ob.page_genus, ob.binding_count) == (1, 4)


def test_e8():
    ob = minimal_milnor_openbook(e_type(8))
    assert (ob.page_genus, ob.binding_count, ob.norm) == (1, 1, 1)


def test_planar_examples():
    inv = planar_invariants(lens_chain(9, 8))
    assert (inv.genus, inv.binding, inv.norm) == (0, 2, 0)
    inv = planar_invariants(star(-3, "1/2", "1/2", "1/2"))
    assert (inv.binding, inv.norm) == (3, 1)
    with pytest.raises(BadVertexPresent):
        planar_invariants(gamma_family(2))


def test_lens_corollary():
    for p in range(2, 31):
        for q in range(1, p):
            if Fraction(p, q).denominator != q:
                continue
            a = hj_expansion(Fraction(-p, q))
            assert planar_invariants(lens_chain(p, q)).binding == 2 - 2 * len(a) - sum(a)


@settings(max_examples=40, deadline=None)
@given(trees(max_size=8))
def test_planar_agrees(g):
    if bad_vertices(g) or not is_negative_definite(intersection_matrix(g)):
        return
    inv = planar_invariants(g)
    ob = minimal_milnor_openbook(g)
    assert inv.genus == ob.page_genus == 0
    assert inv.binding == ob.binding_count == -sum(
        v.weight + d for v, d in zip(g.vertices, vertex_degrees(g)))


def test_classify():
    for k in (6, 7, 8):
        assert classify_support(e_type(k)).kind is SupportKind.ELLIPTIC
    assert str(classify_support(gamma_family(3))) == "higher(2)"
    assert classify_support(star(-3, "2/3", "2/3", "2/3")).kind is SupportKind.PLANAR
    for e in RATIONAL:
        s = e.graph.seifert
        if s is not None:
            assert (classify_support(e.graph).kind is SupportKind.PLANAR) == (s.e0 <= -3)


def test_classify_cross_check_fires():
    from dataclasses import replace
    g = star(-3, "1/2", "1/2", "1/2")
    lying = replace(g, seifert=replace(g.seifert, e0=-2))
    with pytest.raises(ConsistencyError):
        classify_support(lying)


@pytest.mark.parametrize("g, r, upper, norm", [(0, 4, 3, 2), (3, 1, 6, 5), (0, 1, 0, -1)])
def test_heegaard(g, r, upper, norm):
    hb = heegaard_bounds(g, r)
    assert (hb.heegaard_upper, hb.page_norm) == (upper, norm)


def test_heegaard_chain():
    hb = heegaard_bounds(2, 1, heegaard_genus=4)
    assert hb.chain and "4" in hb.chain[0]
    with pytest.raises(ConsistencyError):
        heegaard_bounds(0, 1, heegaard_genus=1)


def _small(entries):
    return [e for e in entries if len(e.graph) <= 8]


@pytest.mark.parametrize("e", _small(RATIONAL), ids=lambda e: e.name)
def test_valid_cycles_genus_and_minimality(e):
    g = e.graph
    z = fundamental_cycle(g)
    cycles = list(valid_cycles(g, [x + 2 for x in z]))
    assert z in cycles
    books = [milnor_openbook(g, m) for m in cycles]
    for ob in books:
        assert ob.norm == 2 * ob.page_genus - 2 + ob.binding_count
        assert ob.n == binding_vector(g, ob.m)
    best = min((ob.page_genus, ob.page_genus + ob.binding_count) for ob in books)
    zb = milnor_openbook(g, z)
    assert (zb.page_genus, zb.page_genus + zb.binding_count) == best
    minimizers = [ob for ob in books
                  if (ob.page_genus, ob.page_genus + ob.binding_count, ob.norm) ==
                  (zb.page_genus, zb.page_genus + zb.binding_count, zb.norm)]
    assert [ob.m for ob in minimizers] == [z]


def test_valid_cycles_matches_filter():
    import itertools
    g = d4()
    bounds = [3, 4, 3, 3]
    expected = [m for m in itertools.product(*(range(1, b + 1) for b in bounds))
                if all(x >= 0 for x in binding_vector(g, m)) and any(binding_vector(g, m))]
    assert list(valid_cycles(g, bounds)) == expected


@pytest.mark.parametrize("e", _small(RATIONAL), ids=lambda e: e.name)
def test_genus_numerator_even(e):
    g = e.graph
    d = vertex_degrees(g)
    for m in valid_cycles(g, [x + 2 for x in fundamental_cycle(g)]):
        n = binding_vector(g, m)
        assert sum((di - 2) * mi + (mi - 1) * ni for di, mi, ni in zip(d, m, n)) % 2 == 0
