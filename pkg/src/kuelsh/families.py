"""The two quaternion-type families with two and three simple modules."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

from .algebra import StructureAlgebra, build_quotient
from .field import FieldElement, FieldSpec
from .linalg import Matrix, rank
from .quiver import QuiverPresentation, lincomb


class InvalidParams(ValueError):
    pass


Q2B = "Q2B"
Q3A = "Q3A"


@dataclass(frozen=True)
class FamilyParams:
    family: str
    field: FieldSpec
    k: int = 0
    s: int = 0
    a: Optional[FieldElement] = None
    c: Optional[FieldElement] = None
    d: Optional[FieldElement] = None

    @classmethod
    def q2b(cls, field: FieldSpec, k: int, s: int, a=1, c=0) -> "FamilyParams":
        return cls(Q2B, field, k, s, field(a), field(c))

    @classmethod
    def q3a(cls, field: FieldSpec, d) -> "FamilyParams":
        return cls(Q3A, field, d=field(d))

    def validate(self) -> "FamilyParams":
        if self.family == Q2B:
            if self.k < 1 or self.s < 3:
                raise InvalidParams(f"need k >= 1 and s >= 3, got k={self.k}, s={self.s}")
            if self.a is None or self.a.is_zero():
                raise InvalidParams("parameter a must be nonzero")
            if self.c is None:
                raise InvalidParams("parameter c missing")
        elif self.family == Q3A:
            if self.d is None or self.d.is_zero() or self.d == 1:
                raise InvalidParams("parameter d must lie outside {0, 1}")
        else:
            raise InvalidParams(f"unknown family {self.family!r}")
        return self

    @property
    def loewy_bound(self) -> int:
        if self.family == Q2B:
            return max(3 * self.k, self.s) + 1
        return 4

    def as_dict(self) -> dict:
        if self.family == Q2B:
            return {"family": "2B", "field": self.field.short(), "k": self.k, "s": self.s,
                    "a": str(self.a), "c": str(self.c)}
        return {"family": "3A", "field": self.field.short(), "d": str(self.d)}

    def sort_key(self) -> tuple:
        return (self.family, self.field.short(), self.k, self.s, str(self.a), str(self.c), str(self.d))

    def __str__(self):
        if self.family == Q2B:
            return f"Q2B(k={self.k}, s={self.s}, a={self.a}, c={self.c}) over {self.field.describe()}"
        return f"Q3A(d={self.d}) over {self.field.describe()}"


def q2b_presentation(k: int, s: int, a, c, spec: FieldSpec, c_coefficient=None) -> QuiverPresentation:
    """Quiver 2B with its six relations.

    ``c_coefficient`` overrides the scalar in front of (βγα)^k in the α²
    relation without touching the recorded parameter; used for mutation tests.
    """
    q = QuiverPresentation(
        spec,
        ["1", "2"],
        [("alpha", "1", "1"), ("beta", "1", "2"), ("gamma", "2", "1"), ("eta", "2", "2")],
    )
    P = q.path
    abc = ("alpha", "beta", "gamma")
    bca = ("beta", "gamma", "alpha")
    cab = ("gamma", "alpha", "beta")
    cc = c if c_coefficient is None else c_coefficient
    q.add_relation(lincomb(spec, (1, P(("beta", "eta")))),
                   lincomb(spec, (1, P(abc * (k - 1) + ("alpha", "beta")))))
    q.add_relation(lincomb(spec, (1, P(("eta", "gamma")))),
                   lincomb(spec, (1, P(cab * (k - 1) + ("gamma", "alpha")))))
    q.add_relation(lincomb(spec, (1, P(("alpha", "alpha")))),
                   lincomb(spec, (a, P(bca * (k - 1) + ("beta", "gamma"))), (cc, P(bca * k))))
    q.add_relation(lincomb(spec, (1, P(("gamma", "beta")))),
                   lincomb(spec, (1, P(("eta",) * (s - 1)))))
    q.add_relation(lincomb(spec, (1, P(("alpha", "alpha", "beta")))), {})
    q.add_relation(lincomb(spec, (1, P(("gamma", "alpha", "alpha")))), {})
    q.loewy_bound = max(3 * k, s) + 1
    return q


def q3a_presentation(d, spec: FieldSpec) -> QuiverPresentation:
    q = QuiverPresentation(
        spec,
        ["1", "2", "3"],
        [("beta", "1", "2"), ("gamma", "2", "1"), ("delta", "2", "3"), ("eta", "3", "2")],
    )
    P = q.path
    rels = [
        ((1, ("beta", "delta", "eta")), [(1, ("beta", "gamma", "beta"))]),
        ((1, ("delta", "eta", "gamma")), [(1, ("gamma", "beta", "gamma"))]),
        ((1, ("eta", "gamma", "beta")), [(d, ("eta", "delta", "eta"))]),
        ((1, ("gamma", "beta", "delta")), [(d, ("delta", "eta", "delta"))]),
        ((1, ("beta", "delta", "eta", "delta")), []),
        ((1, ("eta", "gamma", "beta", "gamma")), []),
    ]
    for (lc, lp), rhs in rels:
        q.add_relation(lincomb(spec, (lc, P(lp))), lincomb(spec, *[(c, P(p)) for c, p in rhs]))
    q.loewy_bound = 4
    return q


def presentation(params: FamilyParams, c_coefficient=None) -> QuiverPresentation:
    params.validate()
    if params.family == Q2B:
        return q2b_presentation(params.k, params.s, params.a, params.c, params.field, c_coefficient)
    return q3a_presentation(params.d, params.field)


def build_family(params: FamilyParams, c_coefficient=None) -> StructureAlgebra:
    q = presentation(params, c_coefficient)
    return build_quotient(q, params.loewy_bound)


def is_exceptional(params: FamilyParams) -> bool:
    """(k, s) = (1, 3): no normal form for the parameters is claimed."""
    return params.family == Q2B and (params.k, params.s) == (1, 3)


# --------------------------------------------------------------------------
# diagonal rescaling of arrows


@dataclass(frozen=True)
class IsomorphismWitness:
    scalars: dict  # arrow label -> FieldElement
    images: tuple  # images of the source basis, as target coordinate tuples

    def __str__(self):
        return ", ".join(f"{a} -> [{x}]*{a}" for a, x in sorted(self.scalars.items()))


def _transports(src: QuiverPresentation, B: StructureAlgebra, scal: dict) -> bool:
    for rel in src.relation_vectors():
        acc = B.zero()
        for path, c in rel.items():
            x = c
            for a in path.arrows:
                x = x * scal[a]
            acc = acc + x * B._path_element(path)
        if not acc.is_zero():
            return False
    return True


def verify_witness(A: StructureAlgebra, B: StructureAlgebra, scal: dict) -> Optional[IsomorphismWitness]:
    """Check that arrow -> scal[arrow] * arrow extends to an isomorphism A -> B."""
    if A.dim != B.dim or A.presentation is None:
        return None
    q = A.presentation
    images = []
    for lab in A.labels:
        path = q.parse_lincomb(lab)
        ((p, _),) = path.items()
        x = A.spec.one
        for a in p.arrows:
            x = x * scal[a]
        images.append((x * B._path_element(p)).coords)
    if rank(Matrix(B.spec, images, B.dim)) != A.dim:
        return None
    zero = B.spec.zero
    for i, j in itertools.product(range(A.dim), repeat=2):
        lhs = [zero] * B.dim
        for k, c in A.mult[i][j].items():
            lhs = [u + c * v for u, v in zip(lhs, images[k])]
        if tuple(lhs) != B.mul(images[i], images[j]):
            return None
    return IsomorphismWitness(dict(scal), tuple(images))


def _candidate_scalars(params: FamilyParams):
    spec = params.field
    if spec.kind != "rational":
        units = sorted((x for x in spec.elements() if x), key=lambda x: x != 1)
        for xa, xe in itertools.product(units, repeat=2):
            yield xa, xe
        return
    # infinite field: only the substitution x_alpha = x_eta^(-e/k), tried with x_eta = 1
    yield spec.one, spec.one


def arrow_rescaling(params: FamilyParams, target: FamilyParams) -> Optional[IsomorphismWitness]:
    """Search for a diagonal rescaling of arrows taking ``params`` to ``target``.

    Uses x_beta = 1 and x_gamma = x_eta^(s-1); finite fields are searched
    exhaustively over (x_alpha, x_eta).  Every candidate that transports the
    relations is then checked on all structure constants.
    """
    if params.family != Q2B or target.family != Q2B:
        raise InvalidParams("rescaling is defined for the two-vertex family only")
    if (params.k, params.s, params.field) != (target.k, target.s, target.field):
        raise InvalidParams("source and target must share k, s and the field")
    A = build_family(params)
    B = A if (params.a, params.c) == (target.a, target.c) else build_family(target)
    src = A.presentation
    for xa, xe in _candidate_scalars(params):
        scal = {"alpha": xa, "beta": params.field.one, "gamma": xe ** (params.s - 1), "eta": xe}
        if not _transports(src, B, scal):
            continue
        w = verify_witness(A, B, scal)
        if w is not None:
            return w
    return None


def q3a_center_products(A: StructureAlgebra, d: FieldElement) -> Matrix:
    """Rows x^2, y^2, xy of the two radical center generators, in the socle paths s1, s2, s3."""
    inv = d.inverse()
    x = A.word(f"beta.gamma + gamma.beta + [{inv}]*eta.delta")
    y = A.word("beta.gamma + delta.eta + eta.delta")
    socs = [A.word(w) for w in ("beta.delta.eta.gamma", "eta.gamma.beta.delta", "gamma.beta.delta.eta")]
    rows = []
    for prod in (x * x, y * y, x * y):
        row = []
        for s in socs:
            i = next(i for i, c in enumerate(s.coords) if c)
            row.append(prod.coords[i] / s.coords[i])
        rows.append(row)
    return Matrix(A.spec, rows, 3)
