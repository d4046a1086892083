"""Shared hypothesis strategies for matrix-valued properties."""

import hypothesis.strategies as st

from interweave import BitMatrix


def row_words(n):
    return st.integers(min_value=0, max_value=(1 << n) - 1)


def matrices(n):
    """Random order-n BitMatrix."""
    return st.lists(row_words(n), min_size=n, max_size=n).map(BitMatrix)


def matrices_any(min_n=1, max_n=8):
    """Random BitMatrix of any order in [min_n, max_n]."""
    return st.integers(min_n, max_n).flatmap(matrices)


def matrix_pairs(min_n=1, max_n=8):
    """Two independent matrices of one shared order."""
    return st.integers(min_n, max_n).flatmap(
        lambda n: st.tuples(matrices(n), matrices(n))
    )


def matrix_triples(min_n=1, max_n=6):
    return st.integers(min_n, max_n).flatmap(
        lambda n: st.tuples(matrices(n), matrices(n), matrices(n))
    )
