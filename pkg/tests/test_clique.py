from itertools import combinations

from hypothesis import given, settings
from hypothesis import strategies as st

from ramseykit.clique import complement_masks, find_clique, max_clique, naive_find_clique


@st.composite
def graphs(draw, max_n=11):
    n = draw(st.integers(0, max_n))
    pairs = list(combinations(range(n), 2))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    masks = [0] * n
    for (a, b), on in zip(pairs, keep):
        if on:
            masks[a] |= 1 << b
            masks[b] |= 1 << a
    return masks


def is_clique(masks, vs):
    return all(masks[a] >> b & 1 for a, b in combinations(vs, 2))


def brute_omega(masks):
    n = len(masks)
    return max((k for k in range(n + 1) for s in combinations(range(n), k) if is_clique(masks, s)), default=0)


@settings(max_examples=300, deadline=None)
@given(graphs(), st.integers(1, 6))
def test_find_clique_matches_lex_enumeration(masks, k):
    assert find_clique(masks, k) == naive_find_clique(masks, k)


@settings(max_examples=200, deadline=None)
@given(graphs())
def test_max_clique_is_maximum(masks):
    found = max_clique(masks)
    assert is_clique(masks, found)
    assert len(found) == brute_omega(masks)


@settings(max_examples=100, deadline=None)
@given(graphs(), st.integers(1, 5))
def test_stop_at_returns_a_clique_at_least_that_big_when_one_exists(masks, target):
    found = max_clique(masks, stop_at=target)
    assert is_clique(masks, found)
    if brute_omega(masks) >= target:
        assert len(found) >= target


def test_complement_masks_has_no_loops():
    masks = [0b110, 0b101, 0b011]  # triangle
    assert complement_masks(masks) == [0, 0, 0]


def test_k_one_picks_lowest_vertex_of_within():
    assert find_clique([0, 0, 0], 1, within=0b110) == [1]
    assert find_clique([], 1) is None
