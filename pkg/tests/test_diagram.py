import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pretzelpoly.bracket import statesum
from pretzelpoly.diagram import (
    Diagram,
    KauffmanState,
    PretzelSpec,
    build_diagram,
    circle_counts,
    classify,
    classify_state_general,
    classify_state_p11n,
    count_circles,
    iter_states,
    pq_counts,
)
from pretzelpoly.errors import DomainError, InvalidSpecError, UnsupportedFamilyError
from pretzelpoly.laurent import LaurentPoly

GOLDEN = LaurentPoly({7: 1, 3: -1, -5: -1})

entries = st.integers(-4, 4).filter(bool)
specs = st.lists(entries, min_size=1, max_size=4).map(lambda t: PretzelSpec(tuple(t)))
# per-state python loops stay below 2**10 states
small_specs = st.lists(st.integers(-3, 3).filter(bool), min_size=1, max_size=3).map(
    lambda t: PretzelSpec(tuple(t)))


# -- specs and diagrams ---------------------------------------------------------

@pytest.mark.parametrize("text, tangles", [
    ("1,1,-4", (1, 1, -4)),
    (" 2, -3 ", (2, -3)),
    ("P(1,1,1)", (1, 1, 1)),
    ("5", (5,)),
])
def test_parse(text, tangles):
    assert PretzelSpec.parse(text).tangles == tangles


@pytest.mark.parametrize("text", ["", "1,,2", "1,a", "1,1,0", "0", "1.5,2"])
def test_parse_rejects(text):
    with pytest.raises(InvalidSpecError):
        PretzelSpec.parse(text)


def test_zero_tangle_rejected():
    with pytest.raises(InvalidSpecError):
        build_diagram((1, 1, 0))
    with pytest.raises(InvalidSpecError):
        PretzelSpec(())


def test_build_p111():
    d = build_diagram("1,1,1")
    assert d.n_crossings == 3
    assert [c.column for c in d.crossings] == [0, 1, 2]


def test_build_p115():
    d = build_diagram((1, 1, 5))
    assert d.n_crossings == 7
    assert [len(r) for r in d.column_slices()] == [1, 1, 5]


def test_build_signs():
    d = build_diagram((-2, 3))
    assert d.n_crossings == 5
    assert list(d.signs) == [-1, -1, 1, 1, 1]


@given(specs)
def test_wiring_is_perfect_matching_and_connected(spec):
    d = build_diagram(spec)
    w = d.wire
    assert d.n_crossings == spec.crossing_count
    assert np.all(w >= 0)
    assert np.array_equal(w[w], np.arange(d.n_ports))
    assert np.all(w != np.arange(d.n_ports))
    # 4-valent graph: crossings joined by arcs
    parent = list(range(d.n_crossings))

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    for a, b in d.arcs():
        parent[find(a >> 2)] = find(b >> 2)
    assert len({find(j) for j in range(d.n_crossings)}) == 1


# -- states ---------------------------------------------------------------------

def test_state_encoding():
    s = KauffmanState.from_string("ABA")
    assert s.mask == 0b010
    assert str(s) == "ABA"
    assert s.b_count == 1 and s.a_count == 2
    assert str(KauffmanState(0b110, 3)) == "ABB"
    with pytest.raises(DomainError):
        KauffmanState.from_string("ABC")
    with pytest.raises(DomainError):
        KauffmanState(8, 3)
    with pytest.raises(DomainError):
        KauffmanState(0, 64)


def test_state_rotation():
    s = KauffmanState.from_string("BAAB" "A")
    assert str(s.rotate(1)) == "AABAB"
    assert s.rotate(5) == s


# -- circle counts --------------------------------------------------------------

@pytest.mark.parametrize("state, circles", [("AAA", 3), ("AAB", 2), ("ABA", 2), ("BAA", 2),
                                            ("BAB", 1), ("ABB", 1), ("BBA", 1), ("BBB", 2)])
def test_p111_circles(state, circles):
    d = build_diagram("1,1,1")
    assert count_circles(d, KauffmanState.from_string(state)) == circles


def test_hopf_circles():
    d = build_diagram("1,1")
    assert [count_circles(d, s) for s in iter_states(d)] == [2, 1, 1, 2]


def test_state_size_mismatch():
    with pytest.raises(DomainError):
        count_circles(build_diagram("1,1,1"), KauffmanState(0, 2))


@settings(max_examples=60, deadline=None)
@given(small_specs)
def test_union_find_matches_kernels(spec):
    d = build_diagram(spec)
    expected = np.array([count_circles(d, s) for s in iter_states(d)])
    for backend in ("numpy", None):
        assert np.array_equal(circle_counts(d, backend=backend), expected)


@settings(max_examples=60, deadline=None)
@given(specs)
def test_circle_bounds(spec):
    d = build_diagram(spec)
    counts = circle_counts(d)
    assert counts.min() >= 1
    assert counts.max() <= d.n_crossings + 1


@settings(max_examples=60, deadline=None)
@given(small_specs, st.integers(0, 3))
def test_rotation_relabels_circles(spec, shift):
    shift %= spec.k
    d = build_diagram(spec)
    rotated = build_diagram(spec.rotate(shift))
    offset = sum(abs(p) for p in spec.tangles[:shift])
    for s in iter_states(d):
        assert count_circles(rotated, s.rotate(offset)) == count_circles(d, s)


@settings(max_examples=40, deadline=None)
@given(small_specs)
def test_mirror_swaps_markers(spec):
    d = build_diagram(spec)
    m = build_diagram(spec.mirror())
    for s in iter_states(d):
        assert count_circles(m, s.swapped()) == count_circles(d, s)


def test_free_loops():
    assert count_circles(Diagram.unknot(), KauffmanState(0, 0)) == 1
    d = build_diagram("1,1,1").with_free_loops(2)
    assert count_circles(d, KauffmanState.from_string("AAA")) == 5


# -- smoothing convention calibration -------------------------------------------

def test_convention_reproduces_both_anchors():
    assert statesum(build_diagram("1,1,1")) == GOLDEN
    for n in range(2, 9):
        d = build_diagram((1, 1, n))
        assert count_circles(d, KauffmanState.all_a(d.n_crossings)) == 3


def test_opposite_convention_is_rejected():
    flip = "positive-A-horizontal"
    assert statesum(build_diagram("1,1,1"), convention=flip) != GOLDEN
    assert statesum(build_diagram("1,1,1"), convention=flip) == GOLDEN.substitute_inverse()
    d = build_diagram((1, 1, 4))
    assert count_circles(d, KauffmanState.all_a(6), convention=flip) != 3


# -- lemma classifiers ----------------------------------------------------------

P114 = PretzelSpec((1, 1, 4))


@pytest.mark.parametrize("b_positions, expected", [
    ((), 3),
    ((0,), 2), ((1,), 2), ((2,), 2), ((5,), 2),
    ((0, 3, 4), 2),
    ((3, 4), 3),
    ((0, 1), 1),
    ((1, 2, 3, 4, 5), 4),
])
def test_classify_p11n_examples(b_positions, expected):
    s = KauffmanState.with_b_at(6, b_positions)
    assert classify_state_p11n(P114, s) == expected
    assert count_circles(build_diagram(P114), s) == expected


@pytest.mark.parametrize("spec", ["1,1,1", "1,1", "1,2,3", "1,1,-3", "1,1,1,2"])
def test_classify_p11n_rejects(spec):
    d = build_diagram(spec)
    with pytest.raises(UnsupportedFamilyError):
        classify_state_p11n(spec, KauffmanState(0, d.n_crossings))


@pytest.mark.parametrize("p, q, expected", [(2, 3, 4), (2, 0, 3), (0, 0, 1), (0, 4, 5), (3, 5, 7)])
def test_classify_general_examples(p, q, expected):
    assert classify_state_general(3, 5, p, q) == expected


@pytest.mark.parametrize("m, n, p, q", [(3, 5, 4, 0), (3, 5, 0, 6), (3, 5, -1, 0), (0, 5, 0, 0)])
def test_classify_general_domain(m, n, p, q):
    with pytest.raises(DomainError):
        classify_state_general(m, n, p, q)


def test_classification_fields():
    c = classify("1,1,3", KauffmanState.from_string("BAABA"))
    assert (c.b_total, c.b_on_v1, c.b_on_v2, c.p, c.q) == (2, True, False, 1, 1)
    c = classify("2,3", KauffmanState.from_string("BAABA"))
    assert c.p is None and c.b_on_v1 is None


@pytest.mark.parametrize("n", range(2, 11))
def test_lemma44_sweep(n):
    spec = PretzelSpec.p11n(n)
    d = build_diagram(spec)
    counts = circle_counts(d)
    for s in iter_states(d):
        assert classify_state_p11n(spec, s) == counts[s.mask]


@pytest.mark.parametrize("m", range(1, 5))
@pytest.mark.parametrize("n", range(2, 9))
def test_lemma47_sweep(m, n):
    d = build_diagram(PretzelSpec.ones_then(m, n))
    masks = np.arange(1 << d.n_crossings)
    counts = circle_counts(d, masks)
    p, q = pq_counts(m, n, masks)
    for mask in range(0, 1 << d.n_crossings, 7):
        c = classify(d.spec, KauffmanState(mask, d.n_crossings))
        assert (c.p, c.q) == (p[mask], q[mask])
    predicted = [classify_state_general(m, n, int(a), int(b)) for a, b in zip(p, q)]
    assert np.array_equal(predicted, counts)
