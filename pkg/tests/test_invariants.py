import pytest
from hypothesis import given, settings, strategies as st

import oracles
from conftest import DIAMOND, DIAGONAL_PAIR, DOMINO, RING8, SQUARE2, SQUARE3
from pixtopo import (
    Adjacency,
    DigitalObject,
    analyze,
    count_blocks,
    count_components,
    count_holes,
    count_pixels,
    count_tunnels_direct,
    count_vertices,
    has_separating_tunnels,
    is_k_separating,
    is_tunnel_free,
    tunnels_by_formula,
)
from pixtopo.invariants import _analyze_dense


small_objects = st.builds(
    DigitalObject,
    st.sets(st.tuples(st.integers(-3, 8), st.integers(-3, 8)), max_size=36),
)


def obj(pixels):
    return DigitalObject(pixels)


# --- individual counters on the canonical fixtures -------------------------

def test_count_pixels():
    assert count_pixels(obj([])) == 0
    assert count_pixels(obj([(0, 0)])) == 1
    assert count_pixels(obj(DIAMOND)) == 4


def test_count_vertices():
    assert count_vertices(obj([(0, 0)])) == 4
    assert count_vertices(obj(DOMINO)) == 6
    assert count_vertices(obj(DIAMOND)) == 12


def test_count_blocks():
    assert count_blocks(obj([(0, 0)])) == 0
    assert count_blocks(obj(SQUARE2)) == 1
    assert count_blocks(obj(SQUARE3)) == 4


def test_count_components():
    assert count_components(obj([]), Adjacency.ZERO) == 0
    assert count_components(obj([(0, 0)]), Adjacency.ZERO) == 1
    assert count_components(obj(DIAMOND), Adjacency.ZERO) == 1
    assert count_components(obj(DIAMOND), Adjacency.ONE) == 4
    assert count_components(obj([(0, 0), (5, 5)]), Adjacency.ZERO) == 2


def test_count_holes():
    assert count_holes(obj([(0, 0)])) == 0
    assert count_holes(obj(RING8)) == 1
    assert count_holes(obj(DIAMOND)) == 1
    assert count_holes(obj([])) == 0


def test_count_tunnels_direct():
    assert count_tunnels_direct(obj(DOMINO)) == 0
    assert count_tunnels_direct(obj(DIAGONAL_PAIR)) == 1
    assert count_tunnels_direct(obj(DIAMOND)) == 4


def test_tunnels_by_formula():
    assert tunnels_by_formula(1, 4, 1, 0, 0) == 0
    assert tunnels_by_formula(4, 12, 1, 1, 0) == 4
    assert tunnels_by_formula(0, 0, 0, 0, 0) == 0
    assert tunnels_by_formula(2, 4, 1, 0, 0) == -2  # nonsense inputs stay signed


def test_analyze_single_pixel():
    rep = analyze(obj([(0, 0)]))
    assert (rep.p, rep.v, rep.c0, rep.c1, rep.h, rep.b) == (1, 4, 1, 1, 0, 0)
    assert rep.t_direct == rep.t_formula == 0
    assert rep.consistent


def test_analyze_diamond():
    rep = analyze(obj(DIAMOND))
    assert (rep.p, rep.v, rep.c0, rep.c1, rep.h, rep.b) == (4, 12, 1, 4, 1, 0)
    assert rep.t_direct == rep.t_formula == 4
    assert rep.consistent


def test_analyze_full_2x2():
    rep = analyze(obj(SQUARE2))
    assert (rep.p, rep.v, rep.c0, rep.c1, rep.h, rep.b) == (4, 9, 1, 1, 0, 1)
    assert rep.t_direct == rep.t_formula == 0
    assert rep.consistent


def test_analyze_empty():
    rep = analyze(obj([]))
    assert (rep.p, rep.v, rep.c0, rep.c1, rep.h, rep.b, rep.t_direct, rep.t_formula) == (
        0, 0, 0, 0, 0, 0, 0, 0,
    )
    assert rep.consistent


def test_is_tunnel_free():
    assert is_tunnel_free(obj(DOMINO))
    assert not is_tunnel_free(obj(DIAGONAL_PAIR))
    assert is_tunnel_free(obj([]))


def test_tunnel_free_objects_zero_the_formula():
    for pixels in (DOMINO, SQUARE2, SQUARE3, RING8, []):
        rep = analyze(obj(pixels))
        assert rep.t_direct == 0
        assert rep.t_formula == 0


def test_is_k_separating():
    square = obj(SQUARE3)
    center = obj([(1, 1)])
    assert not is_k_separating(center, square, Adjacency.ZERO)
    assert not is_k_separating(center, square, Adjacency.ONE)
    column = obj([(1, 0), (1, 1), (1, 2)])
    assert is_k_separating(column, square, Adjacency.ZERO)
    assert is_k_separating(column, square, Adjacency.ONE)
    assert not is_k_separating(square, square, Adjacency.ZERO)


def test_is_k_separating_requires_subset():
    with pytest.raises(ValueError):
        is_k_separating(obj([(9, 9)]), obj(SQUARE3), Adjacency.ZERO)


def test_has_separating_tunnels():
    assert has_separating_tunnels(obj(DIAMOND))
    assert not has_separating_tunnels(obj(RING8))
    # the two tunnel notions genuinely differ on a lone diagonal pair
    assert count_tunnels_direct(obj(DIAGONAL_PAIR)) == 1
    assert not has_separating_tunnels(obj(DIAGONAL_PAIR))
    assert not has_separating_tunnels(obj([]))


def test_separating_tunnels_imply_counted_tunnels():
    for pixels in (DIAMOND, RING8, DIAGONAL_PAIR, DOMINO, SQUARE3):
        if has_separating_tunnels(obj(pixels)):
            assert count_tunnels_direct(obj(pixels)) > 0


# --- equivalence with the brute-force oracles ------------------------------

@given(small_objects)
@settings(max_examples=300)
def test_analyze_matches_oracles(o):
    rep = analyze(o)
    expected = oracles.report(o.pixels)
    got = {
        "p": rep.p, "v": rep.v, "c0": rep.c0, "c1": rep.c1, "h": rep.h,
        "b": rep.b, "t_direct": rep.t_direct, "t_formula": rep.t_formula,
    }
    assert got == expected
    assert rep.consistent


@given(small_objects)
@settings(max_examples=150)
def test_dense_path_matches_sparse_path(o):
    if not o:
        return
    sparse = analyze(o)
    dense = _analyze_dense(o)
    assert sparse == dense


@given(small_objects)
def test_formula_consistency_is_universal(o):
    assert analyze(o).consistent


@given(small_objects)
@settings(max_examples=200)
def test_separating_tunnels_need_counted_tunnels(o):
    if has_separating_tunnels(o):
        assert count_tunnels_direct(o) > 0


@given(small_objects)
def test_monotone_bounds_and_parity(o):
    rep = analyze(o)
    assert rep.v <= 4 * rep.p
    assert rep.b <= rep.p
    assert rep.t_direct <= rep.v
    assert rep.c0 <= rep.c1
    assert (rep.v + rep.b + rep.t_direct) % 2 == 0


@given(small_objects, st.integers(-10**9, 10**9), st.integers(-10**9, 10**9))
@settings(max_examples=100)
def test_translation_invariance(o, dx, dy):
    rep = analyze(o)
    moved = analyze(o.translate(dx, dy))
    assert rep == moved


_SYMMETRIES = [
    lambda x, y: (x, y),
    lambda x, y: (-x, y),
    lambda x, y: (x, -y),
    lambda x, y: (-x, -y),
    lambda x, y: (y, x),
    lambda x, y: (-y, x),
    lambda x, y: (y, -x),
    lambda x, y: (-y, -x),
]


@given(small_objects, st.integers(0, 7))
@settings(max_examples=150)
def test_square_symmetry_invariance(o, which):
    sym = _SYMMETRIES[which]
    mapped = DigitalObject(sym(x, y) for x, y in o.pixels)
    a, b = analyze(o), analyze(mapped)
    assert (a.p, a.v, a.c0, a.c1, a.h, a.b, a.t_direct) == (
        b.p, b.v, b.c0, b.c1, b.h, b.b, b.t_direct,
    )


def test_exhaustive_3x3_smoke():
    cells = [(x, y) for y in range(3) for x in range(3)]
    for mask in range(512):
        o = DigitalObject(cells[i] for i in range(9) if mask >> i & 1)
        rep = analyze(o)
        assert rep.consistent, f"subset {mask:#05x}"
