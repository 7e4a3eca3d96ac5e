"""Exact Kulshammer-ideal computations for quaternion-type symmetric algebras."""
from .algebra import (
    StructureAlgebra,
    build_quotient,
    cartan_matrix,
    center,
    commutator_subspace,
    from_table,
    loewy_length,
    radical,
    socle,
)
from .expectations import Expectation, Uncovered, expected
from .families import FamilyParams, InvalidParams, arrow_rescaling, build_family
from .field import FieldElement, FieldSpec
from .kulshammer import (
    TraceForm,
    build_trace_form,
    kulshammer_ladder,
    orthogonal,
    quotient_invariants,
    tn_space,
)
from .linalg import Matrix, Subspace, semilinear_kernel, smith_normal_form
from .quiver import QuiverPresentation, parse_quiver_text
from .report import AnalysisReport, analyze, render

__all__ = [
    "AnalysisReport", "Expectation", "FamilyParams", "FieldElement", "FieldSpec", "InvalidParams",
    "Matrix", "QuiverPresentation", "StructureAlgebra", "Subspace", "TraceForm", "Uncovered",
    "analyze", "arrow_rescaling", "build_family", "build_quotient", "build_trace_form",
    "cartan_matrix", "center", "commutator_subspace", "expected", "from_table", "kulshammer_ladder",
    "loewy_length", "orthogonal", "parse_quiver_text", "quotient_invariants", "radical", "render",
    "semilinear_kernel", "smith_normal_form", "socle", "tn_space",
]
