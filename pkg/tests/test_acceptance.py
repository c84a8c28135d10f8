"""Acceptance suite: one test function (possibly parametrised) per criterion.

A PASS/FAIL line for each criterion is printed in the pytest terminal summary.
"""

import random
import time
from itertools import permutations
from math import factorial

import pytest
import sympy

from semikron import oracle
from semikron.characters import (
    character_table,
    kronecker_coefficient,
    lr_coefficient,
    lr_coefficient_by_characters,
    specht_dimension,
)
from semikron.dual import ISTAR, dual_kronecker
from semikron.isn import cell_tensor_multiplicity, isn_kronecker
from semikron.orbits import count_matrices, count_orbits, enumerate_matrix_orbits
from semikron.partition_algebra import (
    cell_module,
    delta_check,
    enumerate_diagrams,
    left_cells,
    stability_scan,
    standard_filtration,
)
from semikron.partitions import enumerate_partitions, remove_one_box
from semikron.polynomial import XPolynomial
from semikron.subgroups import ind_res_multiplicity, stabilizer_with_big_embedding

from matrix_examples import border_only, branching_sum, hook_border, upper_triangular


def shapes_up_to(n):
    return [lam for k in range(n + 1) for lam in enumerate_partitions(k)]


# 1 -------------------------------------------------------------------------


@pytest.mark.parametrize("n", [2, 3, 4])
def test_criterion_01_isn_formula_matches_oracle(n):
    start = time.perf_counter()
    shapes = shapes_up_to(n)
    for lam in shapes:
        for mu in shapes:
            got = oracle.decompose_tensor(oracle.ISN, n, lam, mu)
            for nu in shapes:
                assert isn_kronecker(lam, mu, nu, n) == got.get(nu, 0), (lam, mu, nu)
    assert time.perf_counter() - start < 120


# 2 -------------------------------------------------------------------------


@pytest.mark.parametrize("n", [0, 1, 2, 3, 4])
def test_criterion_02_cell_multiplicities_match_oracle(n):
    for k in range(n + 1):
        for l in range(n + 1):
            got = oracle.decompose_cell_tensor(oracle.ISN, n, k, l)
            for m in range(n + 1):
                assert cell_tensor_multiplicity(k, l, m, n) == got.get(m, 0), (k, l, m)


def test_criterion_02_closed_form_equals_count_over_m_factorial():
    start = time.perf_counter()
    a, b, c = sympy.symbols("a b c", nonnegative=True, integer=True)
    count = sympy.binomial(a + b + c, b) * sympy.binomial(a + c, a) * sympy.factorial(a + b) * sympy.factorial(b + c)
    closed = sympy.factorial(a + b) * sympy.factorial(b + c) / (sympy.factorial(a) * sympy.factorial(b) * sympy.factorial(c))
    assert sympy.simplify(sympy.combsimp(count / sympy.factorial(a + b + c) / closed)) == 1
    for k in range(9):
        for l in range(9):
            for m in range(9):
                if max(k, l) <= m <= k + l:
                    bb = k + l - m
                    subs = {a: k - bb, b: bb, c: l - bb}
                    assert count.subs(subs) / sympy.factorial(m) == cell_tensor_multiplicity(k, l, m, 8)
                else:
                    assert cell_tensor_multiplicity(k, l, m, 8) == 0
    assert time.perf_counter() - start < 30


# 3 -------------------------------------------------------------------------


@pytest.mark.parametrize("bordered", [False, True])
def test_criterion_03_counting_formula_matches_enumeration(bordered):
    start = time.perf_counter()
    for k in range(1, 5):
        for l in range(1, 5):
            for m in range((k + 1) * (l + 1)):
                orbits = enumerate_matrix_orbits(k, l, m, bordered)
                assert count_matrices(k, l, m, bordered) == sum(o.orbit_size for o in orbits), (k, l, m)
    assert time.perf_counter() - start < 60


# 4 -------------------------------------------------------------------------


def partitions_with_exactly(n, parts):
    return sum(1 for p in enumerate_partitions(n) if len(p) == parts)


def test_criterion_04_point_values():
    for n in range(1, 6):
        assert count_matrices(n, n, n) == factorial(n)
        assert count_orbits(n, n, n) == 1
        assert count_matrices(n, n, n, bordered=True) == factorial(n)
    for k in range(1, 5):
        for l in range(1, 5):
            assert count_orbits(k, l, k * l) == 1
            big, small = max(k, l), min(k, l)
            assert count_orbits(k, l, big) == partitions_with_exactly(big, small)


# 5 -------------------------------------------------------------------------


HOOK_SIZES = [(k, l) for k in range(2, 7) for l in range(2, 9 - k)]


@pytest.mark.parametrize("k,l", HOOK_SIZES)
def test_criterion_05_special_stabilizers_hook(k, l):
    # first row (0,1,..,1), first column (0,1,..,1), zero elsewhere.
    # At k = l = 2 this matrix is a permutation matrix whose stabilizer is
    # the diagonal S_2, not S_1 x S_1, and the branching formula fails.
    group = stabilizer_with_big_embedding(hook_border(k, l))
    for lam in enumerate_partitions(k):
        for mu in enumerate_partitions(l):
            for nu in enumerate_partitions(k + l - 2):
                expected = branching_sum(lam, mu, nu, remove_one_box)
                assert ind_res_multiplicity(group, lam, mu, nu) == expected, (lam, mu, nu)


@pytest.mark.parametrize("k", [2, 3])
def test_criterion_05_special_stabilizers_triangular(k):
    group = stabilizer_with_big_embedding(upper_triangular(k))
    assert group.order == 1
    m = k * (k + 1) // 2
    for lam in enumerate_partitions(k):
        for mu in enumerate_partitions(k):
            for nu in enumerate_partitions(m):
                expected = specht_dimension(lam) * specht_dimension(mu) * specht_dimension(nu)
                assert ind_res_multiplicity(group, lam, mu, nu) == expected


@pytest.mark.parametrize("k,l", [(k, l) for k in range(1, 5) for l in range(1, 5)])
def test_criterion_05_special_stabilizers_border(k, l):
    group = stabilizer_with_big_embedding(border_only(k, l), bordered=True)
    for lam in enumerate_partitions(k):
        for mu in enumerate_partitions(l):
            for nu in enumerate_partitions(k + l):
                assert ind_res_multiplicity(group, lam, mu, nu) == lr_coefficient(lam, mu, nu)


# 6 -------------------------------------------------------------------------


@pytest.mark.parametrize("n", [2, 3, 4])
def test_criterion_06_dual_formula_matches_oracle(n):
    start = time.perf_counter()
    shapes = oracle.simple_labels(oracle.ISTAR, n)
    for lam in shapes:
        for mu in shapes:
            got = oracle.decompose_tensor(oracle.ISTAR, n, lam, mu)
            for nu in shapes_up_to(n):
                assert dual_kronecker(lam, mu, nu, ISTAR, n) == got.get(nu, 0), (lam, mu, nu)
    assert time.perf_counter() - start < 300


# 7 -------------------------------------------------------------------------


PARAMETERS = [
    (2, 3),
    (5, 7),
    (XPolynomial.variable("x"), XPolynomial.variable("y")),
]


@pytest.mark.parametrize("a,b", PARAMETERS, ids=["2-3", "5-7", "symbolic"])
def test_criterion_07_diagonal_map_is_multiplicative(a, b):
    small = enumerate_diagrams(2)
    assert all(delta_check(d1, d2, a, b) for d1 in small for d2 in small)
    rng = random.Random(20240515)
    large = enumerate_diagrams(3)
    for _ in range(100_000):
        assert delta_check(rng.choice(large), rng.choice(large), a, b)


# 8 -------------------------------------------------------------------------


def test_criterion_08_partition_algebra_counterexample():
    start = time.perf_counter()
    assert len(enumerate_diagrams(2)) == 15
    cells = left_cells(2)
    assert [len(c) for c in cells] == [2, 3, 3, 3, 2, 2]
    report = standard_filtration(cell_module(cells[1]), cell_module(cells[4]))
    assert report.layer_dimensions == (3, 2, 1)
    assert report.cell_filtration is False
    assert time.perf_counter() - start < 1


# 9 -------------------------------------------------------------------------


STABILITY_CASES = [
    (lam, mu, nu)
    for lam in enumerate_partitions(2)
    for mu in enumerate_partitions(2)
    for nu in enumerate_partitions(4)
]


@pytest.mark.parametrize("lam,mu,nu", STABILITY_CASES, ids=lambda p: str(p))
def test_criterion_09_first_row_stability(lam, mu, nu):
    scan = stability_scan(lam, mu, nu, 4)
    values = [v for _, v in scan.values]
    print(f"{lam} {mu} {nu}: {values} constant from a={scan.onset}")
    assert len(set(values[2:])) == 1


# 10 ------------------------------------------------------------------------


def test_criterion_10_character_infrastructure():
    start = time.perf_counter()
    for n in range(13):
        table = character_table(n)
        assert sum(table.class_sizes) == factorial(n)
        for i, row_i in enumerate(table.values):
            for j, row_j in enumerate(table.values):
                inner = sum(c * x * y for c, x, y in zip(table.class_sizes, row_i, row_j))
                assert inner == (factorial(n) if i == j else 0)
    for total in range(9):
        for a in range(total + 1):
            for lam in enumerate_partitions(a):
                for mu in enumerate_partitions(total - a):
                    for nu in enumerate_partitions(total):
                        assert lr_coefficient(lam, mu, nu) == lr_coefficient_by_characters(lam, mu, nu)
    for n in range(7):
        shapes = enumerate_partitions(n)
        for triple in ((x, y, z) for x in shapes for y in shapes for z in shapes):
            value = kronecker_coefficient(*triple)
            assert all(kronecker_coefficient(*p) == value for p in permutations(triple))
    assert time.perf_counter() - start < 180

