import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from rainbowrado import (
    Solution,
    SolutionMode,
    eval_f,
    inverse_probe,
    linear,
    parse,
    solutions_binary,
    solutions_linear,
)
from rainbowrado.equations import floor_inverse
from rainbowrado.errors import ArityCapExceeded, DomainError

from conftest import GRID


def brute_binary(eq, n):
    return [(x, eq.apply((x,))) for x in range(eq.domain_floor, n + 1) if eq.apply((x,)) <= n]


def brute_linear(eq, n, distinct):
    out = []
    for xs in itertools.product(range(1, n + 1), repeat=len(eq.coeffs)):
        y = eq.apply(xs)
        if y <= n:
            vals = xs + (y,)
            if not distinct or len(set(vals)) == len(vals):
                out.append(vals)
    return out


@pytest.mark.parametrize("text, x, y", [("y=2*x+1", 3, 7), ("y=x^2", 4, 16), ("y=x^2+1", 3, 10)])
def test_eval_f(text, x, y):
    assert eval_f(parse(text), x) == y


def test_eval_below_floor():
    with pytest.raises(DomainError):
        eval_f(parse("y=x^2"), 1)


@pytest.mark.parametrize("text, y, x", [("y=x^2", 16, 4), ("y=x^2", 15, None), ("y=2*x+1", 7, 3), ("y=x^2", 1, None)])
def test_inverse_probe(text, y, x):
    assert inverse_probe(parse(text), y) == x


def test_inverse_round_trip_grid():
    for eq in GRID:
        for x in range(eq.domain_floor, 2000):
            assert inverse_probe(eq, eval_f(eq, x)) == x
        # spot checks up to 10^4
        for x in range(2000, 10**4, 997):
            assert inverse_probe(eq, eval_f(eq, x)) == x


def test_solutions_binary_examples():
    assert solutions_binary(parse("y=x^2+1"), 10) == [Solution((1,), 2), Solution((2,), 5), Solution((3,), 10)]
    assert solutions_binary(parse("y=2*x+1"), 4) == [Solution((1,), 3)]
    assert solutions_binary(parse("y=x^2"), 3) == []


@pytest.mark.parametrize("n", [1, 5, 17, 60])
def test_solutions_binary_vs_scan(n):
    for eq in GRID:
        for mode in SolutionMode:
            got = [s.values for s in solutions_binary(eq, n, mode)]
            assert got == brute_binary(eq, n)
            # strictly increasing in both coordinates
            assert all(a[0] < b[0] and a[1] < b[1] for a, b in zip(got, got[1:]))


def test_solution_count_matches_floor_inverse():
    for eq in GRID:
        for n in range(1, 200):
            expected = max(0, floor_inverse(eq, n) - eq.domain_floor + 1)
            assert len(solutions_binary(eq, n)) == expected


def test_solutions_linear_examples():
    eq = parse("y=x1+x2")
    rep = {s.values for s in solutions_linear(eq, 4, "repeats")}
    assert {(1, 1, 2), (2, 2, 4), (1, 3, 4), (3, 1, 4), (1, 2, 3), (2, 1, 3)} <= rep
    dist = {s.values for s in solutions_linear(eq, 4, "distinct")}
    assert dist == {(1, 2, 3), (2, 1, 3), (1, 3, 4), (3, 1, 4)}
    assert solutions_linear(parse("y=x1+x2+10"), 5) == []


@pytest.mark.parametrize("a", [(1,), (2,), (1, 1), (1, 2), (2, 1, 1), (1, 1, 1)])
@pytest.mark.parametrize("c", [0, 1, 3])
def test_solutions_linear_vs_product(a, c):
    eq = linear(a, c)
    for n in (1, 6, 11):
        for mode in SolutionMode:
            got = [s.values for s in solutions_linear(eq, n, mode)]
            assert got == brute_linear(eq, n, mode is SolutionMode.DISTINCT)


@given(st.lists(st.integers(1, 3), min_size=1, max_size=3), st.integers(0, 3), st.integers(1, 14))
def test_distinct_subset_of_repeats(a, c, n):
    eq = linear(a, c)
    dist = set(solutions_linear(eq, n, "distinct"))
    assert dist <= set(solutions_linear(eq, n, "repeats"))


def test_dedupe_keeps_one_per_permutation_class():
    eq = linear((1, 1, 2))
    full = solutions_linear(eq, 15, "repeats")
    ded = solutions_linear(eq, 15, "repeats", dedupe=True)
    classes = {(tuple(sorted(s.inputs[:2])), s.inputs[2], s.output) for s in full}
    assert len(ded) == len(classes)
    assert all(s.inputs[0] <= s.inputs[1] for s in ded)


def test_arity_cap():
    eq = linear((1,) * 5)
    with pytest.raises(ArityCapExceeded):
        solutions_linear(eq, 10)
    # all ones (y=5) plus one 2 in any of the five positions (y=6)
    assert len(solutions_linear(eq, 6, "repeats", arity_cap=5)) == 6
