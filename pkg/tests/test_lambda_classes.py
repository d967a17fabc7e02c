from fractions import Fraction

import pytest

from rainbowrado import (
    BlockColoring,
    block_color,
    canonical_coloring,
    enumerate_exact_colorings,
    find_rainbow,
    general_term,
    lambda_class,
    lambda_classes,
    make_coloring,
    parse,
    solutions_binary,
    structure_check,
)
from rainbowrado.lambda_classes import BLUE, RED, ResidueColoring, canonical_coloring_forward

from conftest import GRID, first_n


def rational_general_term(a, b, x1, i):
    """x_{i+1} = a^(i+1) * (sum_{j=1..i} b / a^(j+1) + x1 / a), in exact rationals."""
    a, b, x1 = Fraction(a), Fraction(b), Fraction(x1)
    val = a ** (i + 1) * (sum(b / a ** (j + 1) for j in range(1, i + 1)) + x1 / a)
    assert val.denominator == 1
    return int(val)


@pytest.mark.parametrize("args, value", [((2, 1, 1, 3), 15), ((1, 2, 1, 4), 9), ((3, 0, 2, 2), 18)])
def test_general_term_examples(args, value):
    assert general_term(*args) == value


def test_general_term_matches_rational_closed_form():
    for a in range(1, 6):
        for b in range(0, 5):
            for x1 in range(1, 5):
                for i in range(0, 8):
                    assert general_term(a, b, x1, i) == rational_general_term(a, b, x1, i)


def test_general_term_bound():
    with pytest.raises(OverflowError):
        general_term(2, 1, 1, 100, bound=10**6)


def test_lambda_class_examples():
    assert lambda_class(parse("y=x+2"), 1, 9).members == (1, 3, 5, 7, 9)
    assert lambda_class(parse("y=x^2"), 2, 16).members == (2, 4, 16)
    assert lambda_class(parse("y=2*x+1"), 6, 12).members == (6,)
    # below the domain floor the class is a singleton
    assert lambda_class(parse("y=x^2"), 1, 16).members == (1,)


@pytest.mark.parametrize(
    "text, n, classes",
    [
        ("y=2*x+1", 7, [[1, 3, 7], [2, 5], [4], [6]]),
        ("y=x+2", 5, [[1, 3, 5], [2, 4]]),
        ("y=x^2+1", 10, [[1, 2, 5], [3, 10], [4], [6], [7], [8], [9]]),
        ("y=x^2", 16, [[1], [2, 4, 16], [3, 9], [5], [6], [7], [8], [10], [11], [12], [13], [14], [15]]),
    ],
)
def test_canonical_coloring_examples(text, n, classes):
    col = canonical_coloring(parse(text), n)
    assert col.classes() == classes
    assert [list(c.members) for c in lambda_classes(parse(text), n)] == classes


def test_backward_walk_equals_forward_scan():
    for eq in GRID:
        for n in range(first_n(eq), 60):
            assert canonical_coloring(eq, n) == canonical_coloring_forward(eq, n)


def test_canonical_coloring_needs_a_solution():
    with pytest.raises(ValueError):
        canonical_coloring(parse("y=x^2"), 3)


def test_structure_check_examples():
    parity = make_coloring(8, [m % 2 for m in range(1, 9)])
    assert structure_check(parity, parse("y=x+2"))
    # residues mod 4 refine parity, so parity is also y=x+4 compatible
    assert structure_check(parity, parse("y=x+4"))
    alternating = make_coloring(8, [1, 2] * 4)
    assert structure_check(alternating, parse("y=x+4")) is True
    col = make_coloring(8, [1, 2, 1, 2, 2, 1, 2, 1])
    assert structure_check(col, parse("y=x+4")) is False  # 1 and 5 differ
    for eq in GRID:
        assert structure_check(canonical_coloring(eq, 30), eq)


def test_partition_property():
    for b in range(1, 7):
        eq = parse(f"y=x+{b}")
        for n in range(b + 1, 40):
            members = [m for lam in range(1, b + 1) for m in lambda_class(eq, lam, n).members]
            assert sorted(members) == list(range(1, n + 1))


def test_canonical_coloring_has_no_rainbow():
    for eq in GRID:
        for n in range(first_n(eq), 61):
            assert find_rainbow(canonical_coloring(eq, n), solutions_binary(eq, n)) is None


def test_one_more_color_forces_rainbow():
    for eq in GRID:
        for n in range(first_n(eq), 11):
            k = canonical_coloring(eq, n).k + 1
            if k > n:
                continue
            sols = solutions_binary(eq, n)
            assert all(find_rainbow(col, sols) is not None for col in enumerate_exact_colorings(n, k))


@pytest.mark.parametrize("a, b, m, color", [(2, 1, 5, BLUE), (1, 2, 3, BLUE), (2, 1, 1, RED), (2, 1, 7, RED)])
def test_block_color_examples(a, b, m, color):
    assert block_color(a, b, m) == color


def test_block_color_separates_solutions():
    for a in range(1, 5):
        for b in range(0, 5):
            if (a, b) == (1, 0):
                continue
            for m in range(1, 10**4 + 1):
                assert block_color(a, b, m) != block_color(a, b, a * m + b)


def test_block_boundaries_are_general_terms():
    for a, b in [(1, 1), (1, 3), (2, 0), (2, 1), (3, 2)]:
        bounds = BlockColoring(a, b).boundaries(5000)
        assert bounds == [general_term(a, b, 1, i) for i in range(len(bounds))]


def test_block_rejects_identity():
    with pytest.raises(ValueError):
        BlockColoring(1, 0)


def test_residue_coloring():
    assert ResidueColoring(3).coloring(7).colors == (1, 2, 3, 1, 2, 3, 1)
