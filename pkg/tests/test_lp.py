import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from stabmult.lp import Unbounded, maximize


def best_vertex(c, A, b):
    """Optimum of a 2-variable LP by enumerating intersections of constraint lines."""
    rows = [(list(r), bi) for r, bi in zip(A, b)] + [([-1, 0], 0), ([0, -1], 0)]
    best = None
    for (r1, b1), (r2, b2) in itertools.combinations(rows, 2):
        det = r1[0] * r2[1] - r1[1] * r2[0]
        if det == 0:
            continue
        x = (Fraction(b1 * r2[1] - b2 * r1[1], det), Fraction(r1[0] * b2 - r2[0] * b1, det))
        if all(r[0] * x[0] + r[1] * x[1] <= bi for r, bi in rows):
            val = c[0] * x[0] + c[1] * x[1]
            best = val if best is None else max(best, val)
    return best


def test_textbook_example():
    opt, x = maximize([1, 1], [[1, 2], [3, 1]], [4, 6])
    assert opt == Fraction(14, 5)
    assert x == [Fraction(8, 5), Fraction(6, 5)]


def test_degenerate_origin():
    # every constraint is tight at the origin; Bland's rule must still terminate
    opt, _ = maximize([1, 1], [[1, -1], [-1, 1], [1, 1]], [0, 0, 2])
    assert opt == 2


def test_unbounded():
    with pytest.raises(Unbounded):
        maximize([1, 0], [[-1, 1]], [1])


def test_input_checks():
    with pytest.raises(ValueError):
        maximize([1], [[1]], [-1])
    with pytest.raises(ValueError):
        maximize([1, 1], [[1]], [1])


@settings(max_examples=150)
@given(
    st.lists(st.integers(-3, 3), min_size=2, max_size=2),
    st.lists(st.tuples(st.integers(-3, 3), st.integers(-3, 3), st.integers(0, 5)), min_size=1, max_size=4),
)
def test_matches_vertex_enumeration(c, cons):
    # box constraints keep the problem bounded
    A = [[a0, a1] for a0, a1, _ in cons] + [[1, 0], [0, 1]]
    b = [bi for _, _, bi in cons] + [4, 4]
    opt, x = maximize(c, A, b)
    assert opt == best_vertex(c, A, b)
    assert all(v >= 0 for v in x)
    assert all(sum(a * v for a, v in zip(row, x)) <= bi for row, bi in zip(A, b))
    assert c[0] * x[0] + c[1] * x[1] == opt
