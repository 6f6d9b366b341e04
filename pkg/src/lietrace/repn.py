"""Finite-dimensional representations of the Lie algebras in liealg.

A representation is a list of action matrices, one per basis vector of the
algebra, subject to rho([e_i, e_j]) = rho(e_i) rho(e_j) - rho(e_j) rho(e_i).
Intertwiners are the coefficient maps that make pulled-back cochain
complexes comparable; equivariance is checked exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .liealg import LieAlgebra, LieMorphism, ad
from .ratlin import Matrix


class NotARepresentation(ValueError):
    def __init__(self, i: int, j: int):
        self.pair = (i, j)
        super().__init__(f"compatibility fails on basis pair ({i},{j}): "
                         f"rho([e_i,e_j]) != [rho(e_i), rho(e_j)]")


class NotEquivariant(ValueError):
    def __init__(self, basis_index: int):
        self.basis_index = basis_index
        super().__init__(f"intertwiner not equivariant at basis vector {basis_index}")


class DimensionMismatch(ValueError):
    pass


@dataclass(frozen=True)
class Representation:
    algebra: LieAlgebra
    dim: int
    actions: tuple  # one dim x dim Matrix per algebra basis vector

    def __post_init__(self):
        if self.dim < 1:
            raise DimensionMismatch("module dimension must be at least 1")
        actions = tuple(a if isinstance(a, Matrix) else Matrix(a)
                        for a in self.actions)
        if len(actions) != self.algebra.dim:
            raise DimensionMismatch("need one action matrix per algebra basis vector")
        for a in actions:
            if a.rows != self.dim or a.cols != self.dim:
                raise DimensionMismatch(f"action matrix is {a.rows}x{a.cols}, "
                                        f"expected {self.dim}x{self.dim}")
        object.__setattr__(self, "actions", actions)

    def act(self, x_index: int) -> Matrix:
        return self.actions[x_index]


def trivial_module(algebra: LieAlgebra) -> Representation:
    """The one-dimensional module with zero action."""
    zero = Matrix.zero(1, 1)
    return Representation(algebra=algebra, dim=1,
                          actions=tuple(zero for _ in range(algebra.dim)))


def adjoint_module(algebra: LieAlgebra) -> Representation:
    """The algebra acting on itself by ad; a representation by Jacobi."""
    units = [tuple(Fraction(a == i) for a in range(algebra.dim))
             for i in range(algebra.dim)]
    return Representation(algebra=algebra, dim=algebra.dim,
                          actions=tuple(ad(algebra, u) for u in units))


def validate_rep(v: Representation) -> None:
    """Check rho([e_i,e_j]) = commutator of actions, all pairs i < j."""
    alg = v.algebra
    for i in range(alg.dim):
        for j in range(i + 1, alg.dim):
            lhs = Matrix.zero(v.dim, v.dim)
            for k, c in alg.brackets.get((i, j), {}).items():
                lhs = lhs + c * v.actions[k]
            rhs = v.actions[i] * v.actions[j] - v.actions[j] * v.actions[i]
            if lhs != rhs:
                raise NotARepresentation(i, j)


def pullback(f: LieMorphism, v: Representation) -> Representation:
    """The module with action rho(f(x)): new action for e_i is
    sum_j f[j][i] rho(e_j).  Composition-reversing in f."""
    if v.algebra != f.target:
        raise DimensionMismatch("module is not over the morphism target")
    m = f.matrix
    actions = []
    for i in range(f.source.dim):
        acc = Matrix.zero(v.dim, v.dim)
        for j in range(f.target.dim):
            c = m[j, i]
            if c != 0:
                acc = acc + c * v.actions[j]
        actions.append(acc)
    return Representation(algebra=f.source, dim=v.dim, actions=tuple(actions))


@dataclass(frozen=True)
class Intertwiner:
    """Module map from the pullback of v along f back into v.

    Equivariance: matrix * rho(f(e_i)) == rho(e_i) * matrix for every i.
    For the trivial module any 1x1 matrix qualifies; for the adjoint module
    of an automorphism f, the inverse matrix of f is the canonical choice.
    """
    morphism: LieMorphism
    module: Representation
    matrix: Matrix

    def __post_init__(self):
        m = self.matrix if isinstance(self.matrix, Matrix) else Matrix(self.matrix)
        object.__setattr__(self, "matrix", m)
        if m.rows != self.module.dim or m.cols != self.module.dim:
            raise DimensionMismatch("intertwiner must be square of the module dimension")


def identity_intertwiner(f: LieMorphism, v: Representation) -> Intertwiner:
    return Intertwiner(morphism=f, module=v, matrix=Matrix.identity(v.dim))


def validate_intertwiner(xi: Intertwiner) -> None:
    pulled = pullback(xi.morphism, xi.module)
    for i in range(xi.morphism.source.dim):
        if xi.matrix * pulled.actions[i] != xi.module.actions[i] * xi.matrix:
            raise NotEquivariant(i)
