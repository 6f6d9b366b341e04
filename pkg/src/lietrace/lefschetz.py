"""Twisted Lefschetz numbers and the determinant linearization.

Three numbers are computed side by side and never collapsed:

  * the cochain-level alternating trace  sum_p (-1)^p tr F_p,
  * the cohomology-level alternating trace over induced maps on H^p,
  * det(I - A) for the designated linear map A (by default the morphism
    matrix itself; callers working with a solvable algebra through its
    nilshadow pass the induced shadow map instead).

The first two must agree for every valid input (Hopf trace identity for an
exact-category chain map); a mismatch raises.  The third is the linearized
prediction and may legitimately differ, e.g. for twisted coefficients whose
intertwiner has trace other than 1 — the report just records the facts.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cecomplex import (CochainComplex, InternalConsistencyFailure,
                        build_complex, cohomology, induced_chain_map,
                        induced_cohomology_map)
from .liealg import LieAlgebra, LieMorphism, check_morphism, validate
from .ratlin import Matrix, determinant
from .repn import Intertwiner, Representation, validate_intertwiner, validate_rep


@dataclass(frozen=True)
class LefschetzReport:
    betti: tuple
    dims: tuple
    cohomology_maps: tuple        # induced map on each H^p, representative basis
    cohomology_traces: tuple      # trace of the induced map on each H^p
    cochain_traces: tuple         # trace of F_p on each C^p
    lefschetz: Fraction           # alternating sum of cohomology_traces
    hopf: Fraction                # alternating sum of cochain_traces
    det_i_minus_a: Fraction
    agree: bool                   # lefschetz == det_i_minus_a
    note: str = ""                # labels legitimate disagreement as expected


def linearization(a: Matrix) -> Fraction:
    """det(I - A), the fixed-point count of the linearized map."""
    return determinant(Matrix.identity(a.rows) - a)


def alternating_trace(matrices) -> Fraction:
    return sum(((-1) ** p * m.trace() for p, m in enumerate(matrices)),
               Fraction(0))


def twisted_lefschetz(algebra: LieAlgebra, module: Representation,
                      morphism: LieMorphism, intertwiner: Intertwiner,
                      linearization_matrix: Matrix | None = None,
                      validate_inputs: bool = True) -> LefschetzReport:
    """Full pipeline: validate, build the complex, induce maps on cohomology,
    and compare the alternating trace with det(I - A).

    linearization_matrix defaults to the morphism matrix; the nilshadow path
    passes the induced shadow map here.
    """
    if validate_inputs:
        validate(algebra)
        validate_rep(module)
        check_morphism(morphism)
        validate_intertwiner(intertwiner)
    complex_ = build_complex(algebra, module)
    chain_map = induced_chain_map(complex_, morphism, intertwiner)
    cohom = cohomology(complex_)
    maps = induced_cohomology_map(cohom, chain_map)

    cohom_traces = tuple(m.trace() for m in maps)
    cochain_traces = tuple(b.trace() for b in chain_map.blocks)
    lefschetz_number = alternating_trace(maps)
    hopf = alternating_trace(chain_map.blocks)
    if lefschetz_number != hopf:
        first = next((p for p in range(len(cochain_traces))
                      if cochain_traces[p] != cohom_traces[p]), None)
        raise InternalConsistencyFailure(
            "Hopf trace identity failed: cochain-level alternating trace "
            f"{hopf} != cohomology-level {lefschetz_number}; traces first "
            f"differ at degree {first} (cochain {cochain_traces}, "
            f"cohomology {cohom_traces})")

    a = linearization_matrix if linearization_matrix is not None else morphism.matrix
    det_value = linearization(a)
    agree = lefschetz_number == det_value
    note = ""
    if not agree:
        from .liealg import is_nilpotent
        if not is_nilpotent(algebra):
            note = ("disagreement is expected: the algebra is not nilpotent, "
                    "so cohomology at the algebra level need not compute the "
                    "manifold side")
        elif intertwiner.matrix.trace() != 1:
            note = ("disagreement is expected: twisted coefficients with "
                    "intertwiner trace != 1 rescale the cohomological side")
    return LefschetzReport(
        betti=tuple(d.betti for d in cohom),
        dims=complex_.dims,
        cohomology_maps=tuple(maps),
        cohomology_traces=cohom_traces,
        cochain_traces=cochain_traces,
        lefschetz=lefschetz_number,
        hopf=hopf,
        det_i_minus_a=det_value,
        agree=agree,
        note=note,
    )


def hopf_trace_identity_check(complex_: CochainComplex, morphism: LieMorphism,
                              intertwiner: Intertwiner):
    """Return (cochain value, cohomology value, det(I - f) * tr(xi)).

    The first two are asserted equal (exactness of the trace under passage to
    cohomology); the third equals them exactly when the complex is the full
    exterior-power complex with the product chain map, which is the only kind
    built here — but no assertion ties it in, callers compare as they wish.
    """
    chain_map = induced_chain_map(complex_, morphism, intertwiner)
    maps = induced_cohomology_map(cohomology(complex_), chain_map)
    cochain_value = alternating_trace(chain_map.blocks)
    cohomology_value = alternating_trace(maps)
    if cochain_value != cohomology_value:
        raise InternalConsistencyFailure(
            f"Hopf trace identity failed: {cochain_value} != {cohomology_value}")
    det_value = linearization(morphism.matrix) * intertwiner.matrix.trace()
    return cochain_value, cohomology_value, det_value
