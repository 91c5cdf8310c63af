"""Parity between the compiled kernels and the pure-Python fallback."""

import pytest
from hypothesis import given, strategies as st

from wordlab import _fallback
from wordlab import kernels
from conftest import binary_words

speedups = pytest.importorskip("wordlab._speedups")

words = st.binary(min_size=1, max_size=64).map(
    lambda b: bytes(c % 3 for c in b)  # small alphabet makes borders likely
)


def test_selected_backend_is_exposed():
    assert kernels.BACKEND in ("compiled", "pure")
    assert callable(kernels.border_table)


@given(words)
def test_border_table_parity(w):
    assert speedups.border_table(w) == _fallback.border_table(w)


@given(words)
def test_frontier_parity(w):
    assert speedups.frontier_length(w) == _fallback.frontier_length(w)


@given(words, words)
def test_occurrences_parity(p, t):
    assert speedups.occurrences(p, t) == _fallback.occurrences(p, t)


def test_exhaustive_parity_small_binary():
    for w in binary_words(10):
        assert speedups.border_table(w) == _fallback.border_table(w)
        assert speedups.frontier_length(w) == _fallback.frontier_length(w)


@pytest.mark.parametrize("impl", [speedups, _fallback])
def test_empty_inputs_rejected(impl):
    with pytest.raises(ValueError):
        impl.border_table(b"")
    with pytest.raises(ValueError):
        impl.frontier_length(b"")
    with pytest.raises(ValueError):
        impl.occurrences(b"", b"abc")


@pytest.mark.parametrize("impl", [speedups, _fallback])
def test_overlapping_occurrences(impl):
    assert impl.occurrences(b"aa", b"aabaaa") == [0, 3, 4]
    assert impl.occurrences(b"ab", b"abaaaab") == [0, 5]
    assert impl.occurrences(b"a", b"a") == [0]
    assert impl.occurrences(b"ab", b"b") == []
