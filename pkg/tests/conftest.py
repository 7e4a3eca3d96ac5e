from __future__ import annotations

import functools
from dataclasses import dataclass

import pytest

from kuelsh.algebra import StructureAlgebra, build_quotient, center, commutator_subspace, socle
from kuelsh.families import FamilyParams, build_family
from kuelsh.field import FieldSpec
from kuelsh.kulshammer import KulshammerLadder, TraceForm, build_trace_form, kulshammer_ladder
from kuelsh.linalg import Subspace
from kuelsh.quiver import parse_quiver_text

ACCEPTANCE_LINES: list[str] = []


@dataclass
class Analysis:
    A: StructureAlgebra
    C: Subspace
    Z: Subspace
    soc: Subspace
    form: TraceForm
    ladder: KulshammerLadder


@functools.lru_cache(maxsize=None)
def analysis(params: FamilyParams, c_coefficient=None) -> Analysis:
    A = build_family(params, c_coefficient)
    C, Z, soc = commutator_subspace(A), center(A), socle(A)
    form = build_trace_form(A, C, soc)
    return Analysis(A, C, Z, soc, form, kulshammer_ladder(A, form, None, C, Z, soc, verify=False))


@functools.lru_cache(maxsize=None)
def family(params: FamilyParams) -> StructureAlgebra:
    return build_family(params)


def q2b(field: str, k: int, s: int, a="1", c="0") -> FamilyParams:
    K = FieldSpec.from_text(field)
    return FamilyParams.q2b(K, k, s, K.parse(a), K.parse(c))


def q3a(field: str, d: str) -> FamilyParams:
    K = FieldSpec.from_text(field)
    return FamilyParams.q3a(K, K.parse(d))


def truncated_poly(field: str, n: int) -> StructureAlgebra:
    """K[x]/(x^n) as a one-loop quiver."""
    return build_quotient(parse_quiver_text(f"field {field}\nvertex 1\narrow x 1 1\nrel x^{n} = 0\nloewy {n}\n"))


@pytest.fixture
def gf2():
    return FieldSpec.gf(2)


@pytest.fixture
def gf4():
    return FieldSpec.gf(4)


@pytest.fixture
def rat2():
    return FieldSpec.rational(2)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
