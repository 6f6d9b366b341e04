"""Chevalley-Eilenberg cochain complex with module coefficients.

Degree p cochains are spanned by pairs (S, u): S a p-subset of basis indices
(lexicographic order), u a module basis index; the basis index is
subset_rank * module_dim + u (subset-major).  The differential of a cochain
omega, evaluated on x_1 .. x_{p+1} (positions 1-based), is

    sum_i (-1)^(i+1) rho(x_i) omega(..., x_i omitted, ...)
  + sum_{i<j} (-1)^(i+j) omega([x_i, x_j], ..., x_i, x_j omitted, ...)

d o d = 0 is verified exactly when the complex is built; with the trivial
module the first sum drops out and d is determined by the brackets alone.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .liealg import LieAlgebra, LieMorphism
from .ratlin import (Matrix, Vector, exterior_power, image_basis, kernel_basis,
                     kron, p_subsets, rank, rref, solve_in_span, NotInSpan)
from .repn import Intertwiner, Representation


class ModuleAlgebraMismatch(ValueError):
    pass


class InternalDSquareNonzero(ArithmeticError):
    """d o d != 0: unreachable for a valid algebra/module pair; reaching it
    means either an implementation bug or unvalidated input."""
    def __init__(self, degree: int):
        self.degree = degree
        super().__init__(f"d squared nonzero at degree {degree}")


class ChainMapViolation(ValueError):
    def __init__(self, degree: int):
        self.degree = degree
        super().__init__(f"induced map does not commute with d at degree {degree}")


class InternalConsistencyFailure(ArithmeticError):
    """An identity that must hold (Hopf trace, span membership of induced
    cocycles) failed; indicates a bug, not bad input."""


@dataclass(frozen=True)
class CochainComplex:
    algebra: LieAlgebra
    module: Representation
    dims: tuple            # dims[p] = C(n,p) * module dim, p = 0..n
    differentials: tuple   # differentials[p]: C^p -> C^(p+1), p = 0..n-1

    @property
    def top_degree(self) -> int:
        return self.algebra.dim


def build_complex(algebra: LieAlgebra, module: Representation) -> CochainComplex:
    """Assemble all differentials and verify d o d = 0 exactly."""
    if module.algebra != algebra:
        raise ModuleAlgebraMismatch("module is not over the given algebra")
    n = algebra.dim
    m = module.dim
    dims = tuple(_binomial(n, p) * m for p in range(n + 1))
    differentials = tuple(_differential(algebra, module, p) for p in range(n))
    for p in range(n - 1):
        if not (differentials[p + 1] * differentials[p]).is_zero():
            raise InternalDSquareNonzero(p)
    return CochainComplex(algebra=algebra, module=module, dims=dims,
                          differentials=differentials)


def _binomial(n: int, p: int) -> int:
    return comb(n, p)


def _differential(algebra: LieAlgebra, module: Representation, p: int) -> Matrix:
    """Matrix of d_p: C^p -> C^(p+1) in the subset-major bases."""
    n, m = algebra.dim, module.dim
    sources = p_subsets(n, p)
    targets = p_subsets(n, p + 1)
    src_rank = {s: a for a, s in enumerate(sources)}
    rows = [[Fraction(0)] * (len(sources) * m) for _ in range(len(targets) * m)]

    for t_rank, big in enumerate(targets):
        # first sum: remove one argument, act by it on the module
        for a, x in enumerate(big):          # a is 0-based; formula uses a+1
            rest = big[:a] + big[a + 1:]
            sign = 1 if a % 2 == 0 else -1   # (-1)^((a+1)+1)
            action = module.actions[x]
            col0 = src_rank[rest] * m
            row0 = t_rank * m
            for w in range(m):
                arow = action.entries[w]
                for u in range(m):
                    if arow[u] != 0:
                        rows[row0 + w][col0 + u] += sign * arow[u]
        # second sum: bracket two arguments back into the cochain
        for a in range(p + 1):
            for b in range(a + 1, p + 1):
                comps = algebra.brackets.get((big[a], big[b]), {})
                if not comps:
                    continue
                rest = tuple(x for idx, x in enumerate(big) if idx not in (a, b))
                pair_sign = -1 if (a + b) % 2 == 1 else 1  # (-1)^((a+1)+(b+1))
                for k, c in comps.items():
                    if k in rest:
                        continue  # repeated argument, alternating form gives 0
                    pos = sum(1 for r in rest if r < k)
                    merged = tuple(sorted(rest + (k,)))
                    sign = pair_sign * (1 if pos % 2 == 0 else -1)
                    col0 = src_rank[merged] * m
                    row0 = t_rank * m
                    for u in range(m):
                        rows[row0 + u][col0 + u] += sign * c
    return Matrix(rows)


# ---------------------------------------------------------------------------
# cohomology
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CohomologyData:
    """Per-degree bases, all deterministic.

    representative_basis extends coboundary_basis to a basis of the cocycle
    space, chosen greedily from the kernel basis in its natural order; its
    classes form the basis used for induced cohomology maps.
    """
    degree: int
    betti: int
    cocycle_basis: tuple
    coboundary_basis: tuple
    representative_basis: tuple


def cohomology(complex_: CochainComplex) -> list[CohomologyData]:
    n = complex_.top_degree
    out = []
    for p in range(n + 1):
        if p < n:
            cocycles = kernel_basis(complex_.differentials[p])
        else:
            dim = complex_.dims[n]
            cocycles = [tuple(Fraction(i == j) for i in range(dim))
                        for j in range(dim)]
        coboundaries = image_basis(complex_.differentials[p - 1]) if p > 0 else []
        reps = _complete_basis(coboundaries, cocycles)
        betti = len(cocycles) - len(coboundaries)
        assert len(reps) == betti, "representative count disagrees with betti"
        out.append(CohomologyData(degree=p, betti=betti,
                                  cocycle_basis=tuple(cocycles),
                                  coboundary_basis=tuple(coboundaries),
                                  representative_basis=tuple(reps)))
    # Euler characteristic certificate: alternating sums over bases and over
    # cochain dimensions must agree.
    lhs = sum((-1) ** p * data.betti for p, data in enumerate(out))
    rhs = sum((-1) ** p * d for p, d in enumerate(complex_.dims))
    if lhs != rhs:
        raise InternalConsistencyFailure("Euler characteristic mismatch")
    return out


def betti_numbers(complex_: CochainComplex) -> tuple:
    return tuple(data.betti for data in cohomology(complex_))


def _complete_basis(fixed: list, candidates: list) -> list:
    """Greedy rank extension: keep candidates (in order) that grow the span
    of `fixed`.  Deterministic because candidate order is canonical."""
    span_rows = [list(v) for v in fixed]
    current = rank(Matrix(span_rows)) if span_rows else 0
    chosen = []
    for cand in candidates:
        trial = span_rows + [list(cand)]
        r = rank(Matrix(trial))
        if r > current:
            span_rows = trial
            current = r
            chosen.append(cand)
    return chosen


# ---------------------------------------------------------------------------
# induced maps
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ChainMap:
    """Degreewise maps F_p = Lambda^p(f transpose) (x) xi, commuting with d."""
    complex: CochainComplex
    blocks: tuple  # blocks[p]: C^p -> C^p


def induced_chain_map(complex_: CochainComplex, f: LieMorphism,
                      xi: Intertwiner) -> ChainMap:
    """Build all degree blocks and verify the chain-map property exactly."""
    n = complex_.top_degree
    if f.source.dim != n or f.target.dim != n:
        raise ModuleAlgebraMismatch("morphism dimension does not match the complex")
    ft = f.matrix.transpose()
    blocks = tuple(kron(exterior_power(ft, p), xi.matrix) for p in range(n + 1))
    for p in range(n):
        d = complex_.differentials[p]
        if blocks[p + 1] * d != d * blocks[p]:
            raise ChainMapViolation(p)
    return ChainMap(complex=complex_, blocks=blocks)


def induced_cohomology_map(cohom: list[CohomologyData],
                           chain_map: ChainMap) -> list[Matrix]:
    """Matrix of the induced map on each H^p in the representative basis.

    Each image F_p h is a cocycle, hence expressible in the independent
    system (representatives | coboundaries); the representative block of the
    coefficients is the column.  NotInSpan here is an internal failure.
    """
    out = []
    for p, data in enumerate(cohom):
        reps = list(data.representative_basis)
        bound = list(data.coboundary_basis)
        if not reps:
            out.append(Matrix([]))
            continue
        cols = []
        for h in reps:
            image = chain_map.blocks[p].apply(h)
            try:
                coeffs = solve_in_span(reps + bound, image)
            except NotInSpan as exc:
                raise InternalConsistencyFailure(
                    f"induced cocycle leaves the cocycle space at degree {p}"
                ) from exc
            cols.append(tuple(coeffs[: len(reps)]))
        out.append(Matrix.from_columns(cols, rows=len(reps)))
    return out
