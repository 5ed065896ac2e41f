import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from rxindex.bounds import (
    BoundParams,
    alpha0_bound,
    layered_chain_bound,
    ramsey_sum,
    ramsey_upper,
    steiner_rainbow_constant,
)
from rxindex.detect import free_graphs, max_independent_in
from rxindex.errors import InputDomainError
from rxindex.graph import hairy_clique, spheres, star


def pascal_ramsey(a, b, memo={}):
    """R-bound through the Pascal recursion, kept separate from the closed form."""
    if a == 1 or b == 1:
        return 1
    if (a, b) not in memo:
        memo[a, b] = pascal_ramsey(a - 1, b) + pascal_ramsey(a, b - 1)
    return memo[a, b]


def test_ramsey_examples():
    assert [ramsey_upper(2, b) for b in range(1, 8)] == list(range(1, 8))
    assert ramsey_upper(3, 3) == 6
    assert ramsey_upper(4, 3) == 10
    with pytest.raises(InputDomainError):
        ramsey_upper(0, 3)


@given(st.integers(1, 40), st.integers(1, 40))
def test_ramsey_identities(a, b):
    assert ramsey_upper(a, b) == ramsey_upper(b, a) == pascal_ramsey(a, b)
    assert ramsey_upper(a, 2) == a
    if a > 1 and b > 1:
        assert ramsey_upper(a, b) == ramsey_upper(a - 1, b) + ramsey_upper(a, b - 1)


def test_alpha0_examples():
    assert alpha0_bound(3, 3, 1) == 3
    assert alpha0_bound(4, 3, 1) == 4
    assert alpha0_bound(3, 3, 2) == 45 == math.comb(10, 8)


@pytest.mark.parametrize("r,s", [(3, 3), (3, 4), (4, 3), (5, 5)])
def test_alpha0_increasing(r, s):
    values = [alpha0_bound(r, s, i) for i in range(1, 5)]
    assert all(a < b for a, b in zip(values, values[1:]))


def test_constant_example():
    expected_sum = ramsey_upper(9, 3) + ramsey_upper(9, 45)
    assert ramsey_sum(3, 3, 5) == expected_sum
    c = steiner_rainbow_constant(BoundParams(3, 3, 5))
    assert c == 1 * (expected_sum + 1) + 8
    assert c > 8
    assert steiner_rainbow_constant((3, 3, 6)) > c
    assert layered_chain_bound((3, 3, 5)) <= c


def test_constant_monotone_grid():
    grid = {(r, s, l): steiner_rainbow_constant((r, s, l)) for r in (3, 4) for s in (3, 4) for l in (5, 6, 7)}
    for (r, s, l), v in grid.items():
        if r == 3:
            assert grid[4, s, l] > v
        if s == 3:
            assert grid[r, 4, l] > v
        if l < 7:
            assert grid[r, s, l + 1] > v


@pytest.mark.parametrize("args", [(2, 3, 5), (3, 2, 5), (3, 3, 4)])
def test_params_validation(args):
    with pytest.raises(InputDomainError):
        BoundParams(*args)


def test_sphere_independence_below_bound_small():
    for g in free_graphs(6, [star(3), hairy_clique(3)], labeled=False):
        for c in range(g.n):
            for i, layer in enumerate(spheres(g, c)[1:], start=1):
                assert len(max_independent_in(g, layer)) < alpha0_bound(3, 3, i)
