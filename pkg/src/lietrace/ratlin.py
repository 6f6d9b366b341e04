"""Exact rational linear algebra.

Everything downstream (cochain complexes, Lefschetz numbers, fixed point
counts) is built on the primitives here.  All arithmetic is over Fraction;
there are no floats and no tolerances anywhere.  Determinism matters: rref
scans columns left to right and always picks the first usable pivot row, so
every derived basis (kernels, image bases, cohomology representatives) is
reproducible across runs and platforms.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from fractions import Fraction


class NonSquare(ValueError):
    """Operation requires a square matrix."""


class DegreeOutOfRange(ValueError):
    """Exterior power degree p outside 0 <= p <= n."""


class NotInSpan(ValueError):
    """solve_in_span target not expressible in the given basis."""


class SingularMatrix(ValueError):
    """Inverse of a singular matrix was requested."""


# ---------------------------------------------------------------------------
# rational text form: optional '-', digits, optional '/' digits
# ---------------------------------------------------------------------------

_RATIONAL_RE = re.compile(r"^-?\d+(/\d+)?$")


def parse_rational(text: str) -> Fraction:
    """Parse 'p' or 'p/q' (q > 0 after canonicalization).  Rejects floats,
    exponents, whitespace and anything else outside the grammar."""
    if not isinstance(text, str) or not _RATIONAL_RE.match(text):
        raise ValueError(f"not a rational literal: {text!r}")
    if "/" in text:
        num, den = text.split("/")
        if int(den) == 0:
            raise ValueError(f"zero denominator: {text!r}")
        return Fraction(int(num), int(den))
    return Fraction(int(text))


def format_rational(value: Fraction) -> str:
    """Canonical text form, lowest terms, '7' or '-3/2'."""
    return str(Fraction(value))


def as_fraction(value) -> Fraction:
    """Coerce int / Fraction / rational string to Fraction.  Floats are
    rejected on purpose: exactness is the whole point."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot coerce {type(value).__name__} to Fraction exactly")


# ---------------------------------------------------------------------------
# vectors: plain tuples of Fraction
# ---------------------------------------------------------------------------

Vector = tuple  # tuple[Fraction, ...]


def vec(values) -> Vector:
    return tuple(as_fraction(v) for v in values)


def vec_add(u: Vector, v: Vector) -> Vector:
    assert len(u) == len(v)
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u: Vector, v: Vector) -> Vector:
    assert len(u) == len(v)
    return tuple(a - b for a, b in zip(u, v))


def vec_scale(c, v: Vector) -> Vector:
    c = as_fraction(c)
    return tuple(c * a for a in v)


def zero_vec(n: int) -> Vector:
    return (Fraction(0),) * n


def is_zero_vec(v: Vector) -> bool:
    return all(a == 0 for a in v)


# ---------------------------------------------------------------------------
# Matrix
# ---------------------------------------------------------------------------

class Matrix:
    """Immutable dense matrix over Fraction.

    Row-major tuple-of-tuples storage.  Multiplication skips zero entries,
    which makes products with the (very sparse) cochain differentials cheap.
    """

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries):
        rows = tuple(tuple(as_fraction(x) for x in row) for row in entries)
        self.rows = len(rows)
        self.cols = len(rows[0]) if rows else 0
        for row in rows:
            if len(row) != self.cols:
                raise ValueError("ragged rows")
        self.entries = rows

    # -- constructors -------------------------------------------------------

    @staticmethod
    def identity(n: int) -> "Matrix":
        return Matrix([[Fraction(i == j) for j in range(n)] for i in range(n)])

    @staticmethod
    def zero(rows: int, cols: int) -> "Matrix":
        return Matrix([[Fraction(0)] * cols for _ in range(rows)])

    @staticmethod
    def from_columns(columns, rows: int | None = None) -> "Matrix":
        columns = list(columns)
        if rows is None:
            rows = len(columns[0])
        return Matrix([[col[i] for col in columns] for i in range(rows)])

    @staticmethod
    def diagonal(values) -> "Matrix":
        values = [as_fraction(v) for v in values]
        n = len(values)
        return Matrix([[values[i] if i == j else Fraction(0) for j in range(n)]
                       for i in range(n)])

    # -- basic structure ----------------------------------------------------

    def __eq__(self, other):
        return (isinstance(other, Matrix)
                and self.rows == other.rows and self.cols == other.cols
                and self.entries == other.entries)

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        body = "; ".join(" ".join(format_rational(x) for x in row)
                         for row in self.entries)
        return f"Matrix[{self.rows}x{self.cols}: {body}]"

    def __getitem__(self, index):
        i, j = index
        return self.entries[i][j]

    def row(self, i: int) -> Vector:
        return self.entries[i]

    def column(self, j: int) -> Vector:
        return tuple(self.entries[i][j] for i in range(self.rows))

    def columns(self):
        return [self.column(j) for j in range(self.cols)]

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.entries for x in row)

    def transpose(self) -> "Matrix":
        return Matrix([[self.entries[i][j] for i in range(self.rows)]
                       for j in range(self.cols)])

    def to_lists(self):
        return [list(row) for row in self.entries]

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: "Matrix") -> "Matrix":
        assert self.rows == other.rows and self.cols == other.cols
        return Matrix([[a + b for a, b in zip(r1, r2)]
                       for r1, r2 in zip(self.entries, other.entries)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        assert self.rows == other.rows and self.cols == other.cols
        return Matrix([[a - b for a, b in zip(r1, r2)]
                       for r1, r2 in zip(self.entries, other.entries)])

    def __neg__(self) -> "Matrix":
        return Matrix([[-a for a in row] for row in self.entries])

    def __mul__(self, other):
        if isinstance(other, Matrix):
            if self.cols != other.rows:
                raise ValueError(f"shape mismatch {self.rows}x{self.cols} * "
                                 f"{other.rows}x{other.cols}")
            out = [[Fraction(0)] * other.cols for _ in range(self.rows)]
            for i in range(self.rows):
                row = self.entries[i]
                acc = out[i]
                for k in range(self.cols):
                    a = row[k]
                    if a == 0:
                        continue
                    brow = other.entries[k]
                    for j in range(other.cols):
                        b = brow[j]
                        if b != 0:
                            acc[j] += a * b
            return Matrix(out)
        return Matrix([[as_fraction(other) * a for a in row]
                       for row in self.entries])

    def __rmul__(self, other):
        return Matrix([[as_fraction(other) * a for a in row]
                       for row in self.entries])

    def apply(self, v: Vector) -> Vector:
        """Matrix times column vector."""
        assert len(v) == self.cols
        return tuple(sum((row[j] * v[j] for j in range(self.cols)),
                         Fraction(0)) for row in self.entries)

    def trace(self) -> Fraction:
        if not self.is_square():
            raise NonSquare("trace of non-square matrix")
        return sum((self.entries[i][i] for i in range(self.rows)), Fraction(0))

    def submatrix(self, row_idx, col_idx) -> "Matrix":
        return Matrix([[self.entries[i][j] for j in col_idx] for i in row_idx])

    def hstack(self, other: "Matrix") -> "Matrix":
        assert self.rows == other.rows
        return Matrix([r1 + r2 for r1, r2 in zip(self.entries, other.entries)])


# ---------------------------------------------------------------------------
# elimination
# ---------------------------------------------------------------------------

def rref(m: Matrix) -> tuple[Matrix, tuple[int, ...], int]:
    """Reduced row echelon form.

    Deterministic pivot rule: scan columns left to right; in each column take
    the first row (top to bottom, at or below the current pivot row) with a
    nonzero entry.  Returns (reduced, pivot_columns, rank).
    """
    work = [list(row) for row in m.entries]
    nrows, ncols = m.rows, m.cols
    pivots = []
    prow = 0
    for col in range(ncols):
        if prow >= nrows:
            break
        sel = None
        for r in range(prow, nrows):
            if work[r][col] != 0:
                sel = r
                break
        if sel is None:
            continue
        work[prow], work[sel] = work[sel], work[prow]
        inv = 1 / work[prow][col]
        work[prow] = [x * inv for x in work[prow]]
        for r in range(nrows):
            if r != prow and work[r][col] != 0:
                factor = work[r][col]
                work[r] = [a - factor * b for a, b in zip(work[r], work[prow])]
        pivots.append(col)
        prow += 1
    return Matrix(work) if nrows else m, tuple(pivots), len(pivots)


def rank(m: Matrix) -> int:
    return rref(m)[2]


def kernel_basis(m: Matrix) -> list[Vector]:
    """Basis of the null space, one vector per free column.

    Convention: the free variable is set to 1, pivot variables are read off
    the reduced rows.  Free columns are visited left to right, so the result
    order is canonical.  kernel_basis([[1,1]]) == [(-1, 1)].
    """
    if m.rows == 0:
        return [tuple(Fraction(i == j) for i in range(m.cols))
                for j in range(m.cols)]
    reduced, pivots, _ = rref(m)
    pivot_set = set(pivots)
    basis = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        v = [Fraction(0)] * m.cols
        v[free] = Fraction(1)
        for prow, pcol in enumerate(pivots):
            v[pcol] = -reduced.entries[prow][free]
        basis.append(tuple(v))
    return basis


def image_basis(m: Matrix) -> list[Vector]:
    """Pivot columns of m: a canonical basis of the column space."""
    _, pivots, _ = rref(m)
    return [m.column(j) for j in pivots]


def determinant(m: Matrix) -> Fraction:
    """Exact Gaussian elimination with row swaps (sign tracked)."""
    if not m.is_square():
        raise NonSquare(f"determinant of {m.rows}x{m.cols} matrix")
    n = m.rows
    if n == 0:
        return Fraction(1)
    work = [list(row) for row in m.entries]
    det = Fraction(1)
    for col in range(n):
        sel = None
        for r in range(col, n):
            if work[r][col] != 0:
                sel = r
                break
        if sel is None:
            return Fraction(0)
        if sel != col:
            work[col], work[sel] = work[sel], work[col]
            det = -det
        det *= work[col][col]
        inv = 1 / work[col][col]
        for r in range(col + 1, n):
            if work[r][col] != 0:
                factor = work[r][col] * inv
                work[r] = [a - factor * b for a, b in zip(work[r], work[col])]
    return det


def inverse(m: Matrix) -> Matrix:
    """Inverse via Gauss-Jordan on [m | I]."""
    if not m.is_square():
        raise NonSquare("inverse of non-square matrix")
    n = m.rows
    reduced, pivots, r = rref(m.hstack(Matrix.identity(n)))
    if r < n or any(p >= n for p in pivots):
        raise SingularMatrix("matrix is singular")
    return reduced.submatrix(range(n), range(n, 2 * n))


def solve_in_span(basis: list[Vector], target: Vector) -> list[Fraction]:
    """Coefficients expressing target in an independent basis.

    Raises NotInSpan when the basis is dependent or the target falls outside
    its span.  Used to read induced cohomology maps off representative bases,
    where failure means an internal inconsistency upstream.
    """
    if not basis:
        if is_zero_vec(target):
            return []
        raise NotInSpan("empty basis cannot express a nonzero target")
    b = Matrix.from_columns(basis)
    assert len(target) == b.rows
    reduced, pivots, r = rref(b.hstack(Matrix.from_columns([target])))
    if r > 0 and pivots[-1] == b.cols:
        raise NotInSpan("target not in span of basis")
    if r < b.cols:
        raise NotInSpan("basis is linearly dependent")
    coeffs = [Fraction(0)] * b.cols
    for prow, pcol in enumerate(pivots):
        coeffs[pcol] = reduced.entries[prow][b.cols]
    return coeffs


# ---------------------------------------------------------------------------
# exterior powers
# ---------------------------------------------------------------------------

def p_subsets(n: int, p: int) -> list[tuple[int, ...]]:
    """All p-element subsets of {0..n-1} in lexicographic order."""
    return list(itertools.combinations(range(n), p))


def exterior_power(m: Matrix, p: int) -> Matrix:
    """p-th exterior power: rows/columns indexed by lexicographically ordered
    p-subsets; entry (S, T) is the minor of m with rows S and columns T.

    Multiplicative (Cauchy-Binet) and Lambda^1 m == m; Lambda^0 m == [1].
    """
    if not m.is_square():
        raise NonSquare("exterior power of non-square matrix")
    n = m.rows
    if p < 0 or p > n:
        raise DegreeOutOfRange(f"degree {p} not in 0..{n}")
    subsets = p_subsets(n, p)
    return Matrix([[determinant(m.submatrix(s, t)) for t in subsets]
                   for s in subsets])


def kron(a: Matrix, b: Matrix) -> Matrix:
    """Kronecker product; block (i,j) is a[i][j] * b."""
    out = []
    for i in range(a.rows):
        for w in range(b.rows):
            row = []
            for j in range(a.cols):
                aij = a.entries[i][j]
                row.extend(aij * x if aij != 0 else Fraction(0)
                           for x in b.entries[w])
            out.append(row)
    return Matrix(out)


# ---------------------------------------------------------------------------
# polynomials over Fraction (dense, low degree first) -- internal helpers for
# the Jordan-Chevalley decomposition
# ---------------------------------------------------------------------------

def _poly_trim(p):
    while p and p[-1] == 0:
        p = p[:-1]
    return p


def _poly_add(p, q):
    n = max(len(p), len(q))
    p = p + [Fraction(0)] * (n - len(p))
    q = q + [Fraction(0)] * (n - len(q))
    return _poly_trim([a + b for a, b in zip(p, q)])


def _poly_scale(c, p):
    return _poly_trim([c * a for a in p])


def _poly_mul(p, q):
    if not p or not q:
        return []
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] += a * b
    return _poly_trim(out)


def _poly_divmod(p, q):
    q = _poly_trim(list(q))
    assert q, "division by zero polynomial"
    p = list(p)
    quot = [Fraction(0)] * max(0, len(p) - len(q) + 1)
    lead = q[-1]
    while len(_poly_trim(p)) >= len(q):
        p = _poly_trim(p)
        shift = len(p) - len(q)
        c = p[-1] / lead
        quot[shift] = c
        for i, b in enumerate(q):
            p[shift + i] -= c * b
    return _poly_trim(quot), _poly_trim(p)


def _poly_gcd(p, q):
    """Monic gcd."""
    p, q = _poly_trim(list(p)), _poly_trim(list(q))
    while q:
        p, q = q, _poly_divmod(p, q)[1]
    if p:
        p = _poly_scale(1 / p[-1], p)
    return p


def _poly_derivative(p):
    return _poly_trim([i * a for i, a in enumerate(p)][1:])


def _poly_mod_inverse(p, modulus):
    """Inverse of p in Q[x]/(modulus) via extended Euclid; None if not a unit."""
    r0, r1 = _poly_trim(list(modulus)), _poly_divmod(p, modulus)[1]
    s0, s1 = [], [Fraction(1)]
    while r1:
        q, rem = _poly_divmod(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, _poly_add(s0, _poly_scale(Fraction(-1), _poly_mul(q, s1)))
    if len(r0) != 1:  # gcd not constant -> not invertible
        return None
    return _poly_divmod(_poly_scale(1 / r0[0], s0), modulus)[1]


def _poly_eval_matrix(p, m: Matrix) -> Matrix:
    """Horner evaluation p(m)."""
    n = m.rows
    out = Matrix.zero(n, n)
    for a in reversed(p):
        out = out * m + a * Matrix.identity(n)
    return out


def minimal_polynomial(m: Matrix) -> list[Fraction]:
    """Monic minimal polynomial, found as the first linear dependence among
    I, m, m^2, ... (flattened to vectors)."""
    if not m.is_square():
        raise NonSquare("minimal polynomial of non-square matrix")
    n = m.rows
    powers = [Matrix.identity(n)]
    while True:
        k = len(powers)
        flat = [tuple(x for row in mat.entries for x in row) for mat in powers]
        target = powers[-1] * m
        flat_target = tuple(x for row in target.entries for x in row)
        try:
            coeffs = solve_in_span(flat, flat_target)
        except NotInSpan:
            powers.append(target)
            assert k <= n, "minimal polynomial degree exceeded dimension"
            continue
        # m^k = sum coeffs[i] m^i  ->  x^k - sum coeffs[i] x^i
        return _poly_trim([-c for c in coeffs] + [Fraction(1)])


def squarefree_part(p) -> list[Fraction]:
    """p / gcd(p, p'), monic: the radical of p."""
    g = _poly_gcd(p, _poly_derivative(p))
    quot, rem = _poly_divmod(p, g)
    assert not rem
    if quot:
        quot = _poly_scale(1 / quot[-1], quot)
    return quot


def is_squarefree(p) -> bool:
    return len(_poly_gcd(p, _poly_derivative(p))) == 1


@dataclass(frozen=True)
class JordanParts:
    """Additive Jordan-Chevalley decomposition m = semisimple + nilpotent."""
    semisimple: Matrix
    nilpotent: Matrix


def jordan_chevalley(m: Matrix) -> JordanParts:
    """Decompose m = S + N with S semisimple (squarefree minimal polynomial
    over Q), N nilpotent, SN = NS.  No eigenvalues are computed: S = a(m) for
    a polynomial a obtained by Newton iteration on the squarefree part of the
    minimal polynomial in Q[x]/(min poly).
    """
    if not m.is_square():
        raise NonSquare("jordan_chevalley of non-square matrix")
    mu = minimal_polynomial(m)
    rad = squarefree_part(mu)
    rad_prime = _poly_derivative(rad)
    a = [Fraction(0), Fraction(1)]  # start at a(x) = x
    # f_rad(a_k) lies in an ideal that squares each step; deg mu iterations
    # are more than enough for the multiplicities to be exhausted.
    steps = max(1, (len(mu) - 1).bit_length())
    for _ in range(steps):
        val = _poly_divmod(_poly_compose_mod(rad, a, mu), mu)[1]
        if not val:
            break
        deriv = _poly_divmod(_poly_compose_mod(rad_prime, a, mu), mu)[1]
        inv = _poly_mod_inverse(deriv, mu)
        assert inv is not None, "derivative not invertible mod minimal polynomial"
        a = _poly_divmod(_poly_add(a, _poly_scale(Fraction(-1), _poly_mul(val, inv))), mu)[1]
    assert not _poly_divmod(_poly_compose_mod(rad, a, mu), mu)[1], \
        "Newton iteration failed to converge"
    semi = _poly_eval_matrix(a, m)
    return JordanParts(semisimple=semi, nilpotent=m - semi)


def _poly_compose_mod(p, a, modulus):
    """p(a(x)) mod modulus, Horner in the quotient ring."""
    out = []
    for c in reversed(p):
        out = _poly_divmod(_poly_add(_poly_mul(out, a), [c] if c != 0 else []),
                           modulus)[1]
    return out


def is_nilpotent_matrix(m: Matrix) -> bool:
    if not m.is_square():
        raise NonSquare("nilpotency test of non-square matrix")
    power = m
    for _ in range(m.rows):
        if power.is_zero():
            return True
        power = power * m
    return power.is_zero()
