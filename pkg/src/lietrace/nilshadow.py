"""Nilshadow of a split solvable Lie algebra.

Input: a solvable algebra presented as a nilpotent ideal (spanned by a set
of basis indices, containing all brackets) plus an abelian complement.  The
shadow carries the same underlying space with the modified bracket

    [a1 + n1, a2 + n2]' = [n1, n2] + nil(ad a1)(n2) - nil(ad a2)(n1)

where nil(-) is the nilpotent part of the additive Jordan-Chevalley
decomposition.  Discarding the commuting semisimple parts of the complement
action is exactly what makes the result nilpotent while keeping every
determinant of the form det(I - T) unchanged for split-compatible maps T:
the induced map on the shadow is T itself under the identity identification
of underlying spaces, and that equality is verified, not assumed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .liealg import (LieAlgebra, LieMorphism, endomorphism, is_morphism,
                     is_nilpotent, is_solvable, validate)
from .ratlin import Matrix, determinant, jordan_chevalley


class NotAnIdeal(ValueError):
    pass


class IdealNotNilpotent(ValueError):
    pass


class ComplementNotAbelian(ValueError):
    pass


class SemisimplePartsDoNotCommute(ValueError):
    pass


class SplitNotPreserved(ValueError):
    def __init__(self, index: int):
        self.index = index
        super().__init__(f"map sends ideal basis vector {index} outside the ideal")


@dataclass(frozen=True)
class SplitPresentation:
    """Solvable algebra with marked nilpotent ideal and abelian complement.

    nil_ideal and complement are disjoint sorted index tuples covering all
    basis indices.  An empty complement (nilpotent input) is allowed and
    makes the shadow construction the identity.
    """
    algebra: LieAlgebra
    nil_ideal: tuple
    complement: tuple

    def __post_init__(self):
        object.__setattr__(self, "nil_ideal", tuple(sorted(self.nil_ideal)))
        object.__setattr__(self, "complement", tuple(sorted(self.complement)))
        n = self.algebra.dim
        combined = sorted(self.nil_ideal + self.complement)
        if combined != list(range(n)):
            raise ValueError("nil_ideal and complement must partition the basis indices")


def validate_split(split: SplitPresentation) -> None:
    """All structural preconditions, in a fixed order so failures are stable:
    solvability, ideal property, abelian complement, nilpotency of the ideal,
    commuting semisimple parts that kill the complement."""
    algebra = split.algebra
    validate(algebra)
    if not is_solvable(algebra):
        raise ValueError("algebra is not solvable")
    ideal = set(split.nil_ideal)
    n = algebra.dim

    for i in range(n):
        for j in split.nil_ideal:
            if i == j:
                continue
            image = algebra.basis_bracket(i, j)
            if any(image[k] != 0 for k in range(n) if k not in ideal):
                raise NotAnIdeal(f"[e{i}, e{j}] leaves the span of the ideal")

    for a in split.complement:
        for b in split.complement:
            if a < b and any(x != 0 for x in algebra.basis_bracket(a, b)):
                raise ComplementNotAbelian(f"[e{a}, e{b}] != 0")

    # brackets of complement vectors vanish and brackets touching the ideal
    # land in it, so [g, g] is inside the ideal once the two checks above
    # pass; restricting to the ideal therefore yields a genuine subalgebra.
    if split.nil_ideal and not is_nilpotent(_restrict_to_ideal(split)):
        raise IdealNotNilpotent("marked ideal is not nilpotent")

    semis = [jordan_chevalley(_ad_matrix(algebra, c)).semisimple
             for c in split.complement]
    for idx, s in zip(split.complement, semis):
        for c in split.complement:
            if any(s[r, c] != 0 for r in range(n)):
                raise SemisimplePartsDoNotCommute(
                    f"semisimple part of ad(e{idx}) does not kill the complement")
    for x in range(len(semis)):
        for y in range(x + 1, len(semis)):
            if semis[x] * semis[y] != semis[y] * semis[x]:
                raise SemisimplePartsDoNotCommute(
                    f"semisimple parts of ad(e{split.complement[x]}) and "
                    f"ad(e{split.complement[y]}) do not commute")


def _restrict_to_ideal(split: SplitPresentation) -> LieAlgebra:
    """Subalgebra on the ideal indices (valid once ideal-ness is known)."""
    pos = {idx: a for a, idx in enumerate(split.nil_ideal)}
    sub = {}
    for (i, j), comps in split.algebra.brackets.items():
        if i in pos and j in pos:
            sub[(pos[i], pos[j])] = {pos[k]: c for k, c in comps.items()}
    return LieAlgebra(dim=len(split.nil_ideal), brackets=sub)


def _ad_matrix(algebra: LieAlgebra, index: int) -> Matrix:
    cols = [algebra.basis_bracket(index, j) for j in range(algebra.dim)]
    return Matrix.from_columns(cols, rows=algebra.dim)


@dataclass(frozen=True)
class ShadowResult:
    split: SplitPresentation
    shadow: LieAlgebra
    semisimple_parts: tuple   # one matrix per complement generator


def build_shadow(split: SplitPresentation) -> ShadowResult:
    """Replace each complement action by its nilpotent part.

    The shadow bracket keeps ideal x ideal brackets, sets complement pairs to
    zero, and lets a complement generator act on the ideal through
    nil(ad a) = ad a - semisimple(ad a).  The result is validated (Jacobi)
    and must be nilpotent.
    """
    validate_split(split)
    algebra = split.algebra
    n = algebra.dim
    ideal = set(split.nil_ideal)
    nil_parts = {}
    semis = []
    for c in split.complement:
        parts = jordan_chevalley(_ad_matrix(algebra, c))
        nil_parts[c] = parts.nilpotent
        semis.append(parts.semisimple)

    brackets = {}
    def _put(i, j, column):
        entry = {k: column[k] for k in range(n) if column[k] != 0}
        if entry:
            brackets[(i, j)] = entry

    for i in range(n):
        for j in range(i + 1, n):
            if i in ideal and j in ideal:
                _put(i, j, algebra.basis_bracket(i, j))
            elif i in ideal:          # j in complement: [n, a] = -nil(ad a)(n)
                _put(i, j, tuple(-x for x in nil_parts[j].column(i)))
            elif j in ideal:          # i in complement: [a, n] = nil(ad a)(n)
                _put(i, j, nil_parts[i].column(j))
            # complement x complement: zero

    shadow = LieAlgebra(dim=n, brackets=brackets, labels=algebra.labels)
    validate(shadow)
    if not is_nilpotent(shadow):
        raise IdealNotNilpotent("shadow bracket failed to be nilpotent")
    return ShadowResult(split=split, shadow=shadow,
                        semisimple_parts=tuple(semis))


@dataclass(frozen=True)
class ShadowMapReport:
    shadow_map: LieMorphism       # endomorphism of the shadow algebra
    is_shadow_morphism: bool
    det_input: Fraction           # det(I - T) on the input algebra
    det_shadow: Fraction          # det(I - S) on the shadow


def induced_shadow_map(result: ShadowResult, t: LieMorphism) -> ShadowMapReport:
    """Carry an endomorphism T of the split algebra over to the shadow.

    T must map the ideal into itself; the induced map S is T under the
    identity identification of underlying spaces, so det(I - S) = det(I - T)
    holds by construction and is re-verified here.  Whether S also respects
    the shadow bracket is reported, not assumed: the Lefschetz pipeline on
    the shadow only makes sense when it does.
    """
    split = result.split
    if t.source is not t.target and t.source != t.target:
        raise ValueError("shadow transport needs an endomorphism")
    if t.source != split.algebra:
        raise ValueError("endomorphism is not over the split algebra")
    ideal = set(split.nil_ideal)
    for j in split.nil_ideal:
        col = t.matrix.column(j)
        if any(col[r] != 0 for r in range(t.matrix.rows) if r not in ideal):
            raise SplitNotPreserved(j)

    shadow_map = endomorphism(result.shadow, t.matrix)
    det_input = determinant(Matrix.identity(t.matrix.rows) - t.matrix)
    det_shadow = determinant(Matrix.identity(t.matrix.rows) - shadow_map.matrix)
    assert det_input == det_shadow, "identification must preserve det(I - .)"
    return ShadowMapReport(shadow_map=shadow_map,
                           is_shadow_morphism=is_morphism(shadow_map),
                           det_input=det_input,
                           det_shadow=det_shadow)
