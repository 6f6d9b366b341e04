"""Shared builders for the test suite: seeded random matrices, conjugated
modules, and the catalog shortcuts used across files."""

from fractions import Fraction
import random

from lietrace.catalog import get, list_entries, sample_endomorphisms
from lietrace.liealg import LieAlgebra
from lietrace.ratlin import Matrix, determinant
from lietrace.repn import Representation, adjoint_module, trivial_module


def random_matrix(rng: random.Random, n: int, num=3, den=2) -> Matrix:
    return Matrix([[Fraction(rng.randint(-num, num), rng.randint(1, den))
                    for _ in range(n)] for _ in range(n)])


def random_invertible(rng: random.Random, n: int) -> Matrix:
    while True:
        m = random_matrix(rng, n)
        if determinant(m) != 0:
            return m


def random_int_matrix(rng: random.Random, n: int, bound=3):
    return tuple(tuple(rng.randint(-bound, bound) for _ in range(n))
                 for _ in range(n))


def conjugated_module(module: Representation, p: Matrix) -> Representation:
    """rho'(x) = P rho(x) P^-1: a representation whenever rho is."""
    from lietrace.ratlin import inverse
    p_inv = inverse(p)
    return Representation(algebra=module.algebra, dim=module.dim,
                          actions=tuple(p * a * p_inv for a in module.actions))


def direct_sum(a: Representation, b: Representation) -> Representation:
    assert a.algebra == b.algebra
    dim = a.dim + b.dim
    actions = []
    for x, y in zip(a.actions, b.actions):
        rows = []
        for i in range(a.dim):
            rows.append(list(x.row(i)) + [Fraction(0)] * b.dim)
        for i in range(b.dim):
            rows.append([Fraction(0)] * a.dim + list(y.row(i)))
        actions.append(Matrix(rows))
    return Representation(algebra=a.algebra, dim=dim, actions=tuple(actions))


def heisenberg_defining_module(algebra: LieAlgebra) -> Representation:
    """The 3x3 strictly-upper-triangular picture of heisenberg3."""
    e01 = Matrix([[0, 1, 0], [0, 0, 0], [0, 0, 0]])
    e12 = Matrix([[0, 0, 0], [0, 0, 1], [0, 0, 0]])
    e02 = Matrix([[0, 0, 1], [0, 0, 0], [0, 0, 0]])
    return Representation(algebra=algebra, dim=3, actions=(e01, e12, e02))


NILPOTENT_NAMES = ["abelian_1", "abelian_2", "abelian_3", "abelian_4",
                   "heisenberg3", "heisenberg5", "filiform4"]

ALL_NAMES = NILPOTENT_NAMES + ["sol3"]


def random_modules(seed: int, count: int) -> list[Representation]:
    """Validated random modules: conjugated adjoints, conjugated defining
    modules, and direct sums, spread over the catalog."""
    rng = random.Random(seed)
    out = []
    names = ALL_NAMES
    while len(out) < count:
        name = names[rng.randrange(len(names))]
        algebra = get(name).algebra
        choice = rng.randrange(3)
        if choice == 0:
            base = adjoint_module(algebra)
        elif choice == 1 and name == "heisenberg3":
            base = heisenberg_defining_module(algebra)
        else:
            base = direct_sum(trivial_module(algebra), adjoint_module(algebra))
        out.append(conjugated_module(base, random_invertible(rng, base.dim)))
    return out
