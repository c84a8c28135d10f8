"""Matrix configurations with known induction-restriction multiplicities."""

from semikron.characters import kronecker_coefficient, lr_coefficient
from semikron.partitions import enumerate_partitions


def hook_border(k, l):
    """k x l matrix whose first row is (0,1,..,1), first column (0,1,..,1), zero elsewhere."""
    return tuple(
        tuple(1 if (i == 0) != (j == 0) else 0 for j in range(l)) for i in range(k)
    )


def upper_triangular(k):
    return tuple(tuple(1 if j >= i else 0 for j in range(k)) for i in range(k))


def border_only(k, l):
    """Bordered matrix with ones exactly in row 0 and column 0 (corner excluded)."""
    return tuple(
        tuple(1 if (i == 0) != (j == 0) else 0 for j in range(l + 1)) for i in range(k + 1)
    )


def border_and_diagonal(k):
    return tuple(
        tuple(1 if ((i == 0) != (j == 0)) or (i == j and i > 0) else 0 for j in range(k + 1))
        for i in range(k + 1)
    )


def branching_sum(lam, mu, nu, remove_one_box):
    return sum(
        lr_coefficient(a, b, nu) for a in remove_one_box(lam) for b in remove_one_box(mu)
    )


def border_diagonal_formula(lam, mu, nu):
    k = sum(lam)
    parts = enumerate_partitions(k)
    total = 0
    for alpha in parts:
        g1 = kronecker_coefficient(lam, mu, alpha)
        if not g1:
            continue
        for beta in parts:
            for gamma in parts:
                g2 = kronecker_coefficient(beta, gamma, alpha)
                if not g2:
                    continue
                for delta in parts:
                    for eps in parts:
                        g3 = kronecker_coefficient(delta, eps, beta)
                        if not g3:
                            continue
                        for kappa in enumerate_partitions(2 * k):
                            total += (
                                lr_coefficient(eps, kappa, nu)
                                * lr_coefficient(gamma, delta, kappa)
                                * g3 * g2 * g1
                            )
    return total
