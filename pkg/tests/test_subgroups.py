from math import factorial

import pytest

from semikron.characters import kronecker_coefficient, specht_dimension
from semikron.errors import InternalConsistencyError
from semikron.orbits import enumerate_matrix_orbits
from semikron.partitions import Partition, enumerate_partitions
from semikron.subgroups import (
    EmbeddedSubgroup,
    compose,
    grid_subgroup,
    identity,
    ind_res_multiplicity,
    inverse,
    stabilizer_with_big_embedding,
)

from matrix_examples import upper_triangular

P = Partition


def test_compose_is_right_to_left():
    p, q = (1, 2, 0), (1, 0, 2)
    assert compose(p, q) == (2, 1, 0)
    assert compose(p, inverse(p)) == identity(3)


def test_all_ones_stabilizer_is_everything():
    for k, l in [(1, 1), (2, 3), (3, 2), (3, 3)]:
        group = stabilizer_with_big_embedding([[1] * l for _ in range(k)])
        assert group.order == factorial(k) * factorial(l)
        assert group.m == k * l
        group.check()


def test_triangular_stabilizer_is_trivial():
    for k in range(1, 5):
        group = stabilizer_with_big_embedding(upper_triangular(k))
        assert group.order == 1
        assert group.m == k * (k + 1) // 2


def test_identity_matrix_gives_diagonal_group():
    for k in range(1, 5):
        eye = [[int(i == j) for j in range(k)] for i in range(k)]
        group = stabilizer_with_big_embedding(eye)
        assert group.order == factorial(k)
        assert all(g == h == big for g, h, big in group.elements)


def test_grid_subgroup_examples():
    assert grid_subgroup(1, 1).elements == (((0,), (0,), (0,)),)
    group = grid_subgroup(2, 2)
    swap = [big for g, h, big in group.elements if g == (1, 0) and h == (0, 1)]
    assert swap == [(2, 3, 0, 1)]
    for k, l in [(1, 3), (2, 2), (2, 3), (3, 3)]:
        grid = grid_subgroup(k, l)
        assert grid.order == factorial(k) * factorial(l)
        grid.check()
    with pytest.raises(ValueError):
        grid_subgroup(0, 2)


def test_grid_matches_all_ones_stabilizer():
    for k, l in [(2, 2), (2, 3), (3, 2)]:
        ones = stabilizer_with_big_embedding([[1] * l for _ in range(k)])
        assert set(ones.elements) == set(grid_subgroup(k, l).elements)


def test_check_rejects_non_groups():
    bad = EmbeddedSubgroup(k=2, l=1, m=2, elements=(((1, 0), (0,), (1, 0)),))
    with pytest.raises(InternalConsistencyError):
        bad.check()
    not_closed = EmbeddedSubgroup(
        k=3, l=1, m=3,
        elements=(((0, 1, 2), (0,), (0, 1, 2)), ((1, 0, 2), (0,), (1, 0, 2)), ((0, 2, 1), (0,), (0, 2, 1))),
    )
    with pytest.raises(InternalConsistencyError):
        not_closed.check()


def test_diagonal_group_gives_kronecker():
    for n in range(1, 5):
        eye = [[int(i == j) for j in range(n)] for i in range(n)]
        group = stabilizer_with_big_embedding(eye)
        shapes = enumerate_partitions(n)
        for lam in shapes:
            for mu in shapes:
                for nu in shapes:
                    assert ind_res_multiplicity(group, lam, mu, nu) == kronecker_coefficient(lam, mu, nu)


def test_trivial_group_gives_dimension_product():
    group = stabilizer_with_big_embedding(upper_triangular(2))
    for lam in enumerate_partitions(2):
        for mu in enumerate_partitions(2):
            for nu in enumerate_partitions(3):
                expected = specht_dimension(lam) * specht_dimension(mu) * specht_dimension(nu)
                assert ind_res_multiplicity(group, lam, mu, nu) == expected


def test_labeling_does_not_change_multiplicities():
    matrix = ((1, 1, 0), (0, 1, 1), (1, 0, 0))
    plain = stabilizer_with_big_embedding(matrix)
    ones = [(i, j) for i, row in enumerate(matrix) for j, v in enumerate(row) if v]
    reversed_labels = stabilizer_with_big_embedding(matrix, labeling=list(reversed(ones)))
    reversed_labels.check()
    for lam in enumerate_partitions(3):
        for mu in enumerate_partitions(3):
            for nu in enumerate_partitions(5):
                assert ind_res_multiplicity(plain, lam, mu, nu) == ind_res_multiplicity(
                    reversed_labels, lam, mu, nu
                )
    with pytest.raises(ValueError):
        stabilizer_with_big_embedding(matrix, labeling=ones[:-1])


def test_induced_dimension_count():
    # sum over nu of mult * dim(nu) equals [S_m : H] * dim(lam) * dim(mu)
    for k, l in [(2, 2), (2, 3), (3, 3)]:
        for m in range(1, min(k * l, 8) + 1):
            for orbit in enumerate_matrix_orbits(k, l, m):
                group = orbit.stabilizer
                group.check()
                index = factorial(m) // group.order
                for lam in enumerate_partitions(k):
                    for mu in enumerate_partitions(l):
                        total = sum(
                            ind_res_multiplicity(group, lam, mu, nu) * specht_dimension(nu)
                            for nu in enumerate_partitions(m)
                        )
                        assert total == index * specht_dimension(lam) * specht_dimension(mu)


def test_size_mismatch_is_rejected():
    group = grid_subgroup(2, 2)
    with pytest.raises(ValueError):
        ind_res_multiplicity(group, P((2,)), P((2,)), P((3,)))
