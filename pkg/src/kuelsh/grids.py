"""Parameter grids swept by ``verify-paper`` and the acceptance tests."""
from __future__ import annotations

from .families import FamilyParams
from .field import FieldSpec

KS_GRID = [(k, s) for k in (1, 2, 3) for s in (3, 4, 5)]


def q2b_char2_grid(ks=KS_GRID, fields=("gf:2", "gf:4", "rat:2")) -> list[FamilyParams]:
    """Field-dependent choices: a in {1, g, t}, c in {0, 1, t}."""
    out = []
    for name in fields:
        K = FieldSpec.from_text(name)
        a_vals = ["1"] + (["g"] if K.kind == "extension" else ["t"] if K.kind == "rational" else [])
        c_vals = ["0", "1"] + (["t"] if K.kind == "rational" else [])
        for k, s in ks:
            for a in a_vals:
                for c in c_vals:
                    out.append(FamilyParams.q2b(K, k, s, K.parse(a), K.parse(c)))
    return out


def q3a_grid(perfect_only: bool = False) -> list[FamilyParams]:
    g4 = FieldSpec.gf(4)
    out = [FamilyParams.q3a(g4, g4.parse(d)) for d in ("g", "g+1")]
    if not perfect_only:
        r2 = FieldSpec.rational(2)
        out += [FamilyParams.q3a(r2, r2.parse(d)) for d in ("t", "t^2")]
    return out


def p3_grid() -> list[FamilyParams]:
    K = FieldSpec.rational(3)
    return [FamilyParams.q2b(K, 1, 3, K.parse(a), K.zero) for a in ("1", "t")]


def grid(name: str) -> list[FamilyParams]:
    if name == "small":
        return q2b_char2_grid([(1, 3), (1, 4), (2, 3), (2, 4)], ("gf:2", "gf:4")) + q3a_grid(perfect_only=True)
    if name == "full":
        return q2b_char2_grid() + q3a_grid() + p3_grid()
    raise ValueError(f"unknown grid {name!r}")
