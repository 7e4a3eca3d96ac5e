"""Symmetrizing forms, T_n spaces and Külshammer ideals of a symmetric algebra."""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Optional, Sequence

from .algebra import StructureAlgebra, center, commutator_subspace, loewy_length, radical, socle
from .field import FieldElement
from .linalg import Matrix, Subspace, kernel, rank, semilinear_kernel


class FormError(ValueError):
    pass


class FormAsymmetric(FormError):
    pass


class Degenerate(FormError):
    pass


class NoConsistentScaling(FormError):
    pass


class NotAnIdeal(ValueError):
    pass


class LadderError(AssertionError):
    pass


@dataclass
class TraceForm:
    """Linear functional psi with <x, y> = psi(x y)."""

    algebra: StructureAlgebra
    psi: tuple
    socle_elements: list = dc_field(default_factory=list)  # (vertex, coords, scaling)
    method: str = "socle-paths"

    def value(self, x: Sequence) -> FieldElement:
        acc = self.algebra.spec.zero
        for a, b in zip(x, self.psi):
            if a and b:
                acc = acc + a * b
        return acc

    def pair(self, x: Sequence, y: Sequence) -> FieldElement:
        return self.value(self.algebra.mul(x, y))

    def _basis_products(self) -> list[list[FieldElement]]:
        A = self.algebra
        zero = A.spec.zero
        out = []
        for i in range(A.dim):
            row = []
            for j in range(A.dim):
                acc = zero
                for k, c in A.mult[i][j].items():
                    if self.psi[k]:
                        acc = acc + c * self.psi[k]
                row.append(acc)
            out.append(row)
        return out

    def gram(self) -> Matrix:
        return Matrix(self.algebra.spec, self._basis_products(), self.algebra.dim)

    def is_symmetric(self) -> bool:
        g = self._basis_products()
        n = len(g)
        return all(g[i][j] == g[j][i] for i in range(n) for j in range(i + 1, n))

    def is_nondegenerate(self) -> bool:
        return rank(self.gram()) == self.algebra.dim

    def describe(self) -> dict:
        A = self.algebra
        return {
            "method": self.method,
            "socle_values": {A.describe_vector(v): str(self.value(v)) for _, v, _ in self.socle_elements},
            "support": {A.labels[i]: str(c) for i, c in enumerate(self.psi) if c},
        }


def build_trace_form(
    A: StructureAlgebra,
    commutators: Optional[Subspace] = None,
    soc: Optional[Subspace] = None,
    rescale: Optional[dict] = None,
) -> TraceForm:
    """Symmetrizing form supported on one socle element per vertex.

    For each vertex v pick the spanning element s_v of soc(A) ∩ e_v A e_v,
    rescale so that all s_v agree modulo [A, A], then let psi be 1 on the
    rescaled s_v and 0 on every other basis path.  ``rescale`` maps vertices
    to extra nonzero factors on the socle values (a different but still
    symmetric form when the factors are equal).
    """
    spec = A.spec
    C = commutators if commutators is not None else commutator_subspace(A)
    soc = soc if soc is not None else socle(A)
    chosen = []
    for v in A.vertices:
        block = [i for i, (s, t) in enumerate(A.vertex_pair) if s == v and t == v]
        coord = Subspace(spec, A.dim, [_unit(spec, A.dim, i) for i in block])
        part = soc & coord
        if part.dim != 1:
            raise FormError(f"soc(A) ∩ e_{v} A e_{v} has dimension {part.dim}, expected 1")
        chosen.append((v, part.basis[0]))

    classes = [C.quotient_coords(s) for _, s in chosen]
    ref = classes[0]
    if not any(ref):
        raise NoConsistentScaling(f"socle element at vertex {chosen[0][0]} lies in [A, A]")
    scalings = []
    for (v, _), w in zip(chosen, classes):
        i = next((i for i, x in enumerate(w) if x), None)
        if i is None:
            raise NoConsistentScaling(f"socle element at vertex {v} lies in [A, A]")
        lam = ref[i] / w[i]
        if [lam * x for x in w] != ref:
            raise NoConsistentScaling(f"socle classes at vertices {chosen[0][0]} and {v} are not proportional")
        scalings.append(lam)

    socle_elements = [(v, s, lam) for (v, s), lam in zip(chosen, scalings)]
    target = spec.one if rescale is None else spec(rescale.get(chosen[0][0], 1))

    # first try: psi(lam_v s_v) = target and psi = 0 on every other basis path
    psi = [spec.zero] * A.dim
    for v, s, lam in socle_elements:
        support = [i for i, x in enumerate(s) if x]
        pi = max(support, key=lambda i: (A.path_length[i], i))
        tv = spec.one if rescale is None else spec(rescale.get(v, 1))
        psi[pi] = tv / (lam * s[pi])
    form = TraceForm(A, tuple(psi), socle_elements, "socle-paths")
    if not form.is_symmetric():
        # the normal-form path basis need not be one for which that recipe is
        # symmetric; define psi on A/[A, A] instead, which forces symmetry
        form = TraceForm(A, _psi_via_commutators(A, C, socle_elements[0], target), socle_elements, "commutator-quotient")
        if not form.is_symmetric():
            raise FormAsymmetric("psi(xy) != psi(yx) for some basis pair")
    if not form.is_nondegenerate():
        raise Degenerate("Gram matrix of psi is singular")
    return form


def _psi_via_commutators(A: StructureAlgebra, C: Subspace, socle_element, target) -> tuple:
    """psi vanishing on [A, A] and on all coset representatives but one."""
    spec = A.spec
    _, s, lam = socle_element
    reps = C.complement_indices()
    w = C.quotient_coords(s)
    j = max((n for n, x in enumerate(w) if x), key=lambda n: (A.path_length[reps[n]], reps[n]))
    # on the representative r_j psi takes the value making psi(lam * s) = target
    values = [spec.zero] * len(reps)
    values[j] = target / (lam * w[j])
    psi = [spec.zero] * A.dim
    for r, val in zip(reps, values):
        psi[r] = val
    # pivot coordinates: psi(b) = psi(b - residue) + psi(residue) = psi(residue)
    for i in C.pivots:
        e = _unit(spec, A.dim, i)
        res = C.reduce(e)
        psi[i] = sum((res[r] * psi[r] for r in reps if res[r]), spec.zero)
    return tuple(psi)


def _unit(spec, n, i):
    v = [spec.zero] * n
    v[i] = spec.one
    return v


def power(A: StructureAlgebra, x: Sequence, e: int) -> tuple:
    result = A.unit
    base = tuple(x)
    while e:
        if e & 1:
            result = A.mul(result, base)
        e >>= 1
        if e:
            base = A.mul(base, base)
    return result


def tn_space(A: StructureAlgebra, form: Optional[TraceForm], n: int, commutators: Optional[Subspace] = None) -> Subspace:
    """T_n(A) = {x : x^(p^n) ∈ [A, A]}.

    Modulo [A, A] the p^n-th power map is semilinear, so T_n/[A, A] is the
    kernel of a semilinear map on coset representatives.
    """
    C = commutators if commutators is not None else commutator_subspace(A)
    if n == 0:
        return C
    spec = A.spec
    reps = C.complement_indices()
    if not reps:
        return C
    q = spec.p ** n
    images = [C.quotient_coords(power(A, _unit(spec, A.dim, r), q)) for r in reps]
    ker = semilinear_kernel(images, n, spec)
    lifted = []
    for lam in ker.basis:
        v = [spec.zero] * A.dim
        for r, c in zip(reps, lam):
            v[r] = c
        lifted.append(v)
    return C + Subspace(spec, A.dim, lifted)


def orthogonal(form: TraceForm, S: Subspace) -> Subspace:
    """{y : psi(x y) = 0 for all x in S}."""
    A = form.algebra
    if not S.dim:
        return Subspace.full(A.spec, A.dim)
    g = form._basis_products()
    rows = []
    for x in S.basis:
        row = [A.spec.zero] * A.dim
        for i, c in enumerate(x):
            if c:
                row = [r + c * gij if gij else r for r, gij in zip(row, g[i])]
        rows.append(row)
    return kernel(Matrix(A.spec, rows, A.dim))


def default_nmax(A: StructureAlgebra) -> int:
    L = loewy_length(A)
    n = 0
    while A.spec.p ** n < L:
        n += 1
    return n


def is_ideal(A: StructureAlgebra, Z: Subspace, I: Subspace) -> bool:
    if not Z.contains(I):
        return False
    return all(A.mul(z, t) in I for z in Z.basis for t in I.basis)


@dataclass
class KulshammerLadder:
    center: Subspace
    T: list
    T_perp: list
    reynolds: Subspace

    @property
    def n_max(self) -> int:
        return len(self.T) - 1


def kulshammer_ladder(
    A: StructureAlgebra,
    form: TraceForm,
    n_max: Optional[int] = None,
    commutators: Optional[Subspace] = None,
    Z: Optional[Subspace] = None,
    soc: Optional[Subspace] = None,
    verify: bool = True,
) -> KulshammerLadder:
    C = commutators if commutators is not None else commutator_subspace(A)
    Z = Z if Z is not None else center(A)
    soc = soc if soc is not None else socle(A)
    if n_max is None:
        n_max = default_nmax(A)
    T, P = [], []
    for n in range(n_max + 1):
        Tn = tn_space(A, form, n, C)
        T.append(Tn)
        P.append(orthogonal(form, Tn))
    ladder = KulshammerLadder(Z, T, P, Z & soc)
    if verify:
        verify_ladder(A, form, ladder)
    return ladder


def verify_ladder(A: StructureAlgebra, form: TraceForm, ladder: KulshammerLadder, stabilized: bool = False):
    Z = ladder.center
    if ladder.T_perp and ladder.T_perp[0] != Z:
        raise LadderError("[A, A]^⊥ differs from Z(A)")
    for n, (Tn, Pn) in enumerate(zip(ladder.T, ladder.T_perp)):
        if Tn.dim + Pn.dim != A.dim:
            raise LadderError(f"dim T_{n} + dim T_{n}^⊥ != dim A")
        if not is_ideal(A, Z, Pn):
            raise LadderError(f"T_{n}^⊥ is not an ideal of Z(A)")
        if not Pn.contains(ladder.reynolds):
            raise LadderError(f"T_{n}^⊥ does not contain R(A)")
        if n and not (Tn.contains(ladder.T[n - 1]) and ladder.T_perp[n - 1].contains(Pn)):
            raise LadderError(f"chain breaks at n={n}")
    if stabilized and ladder.T_perp[-1] != ladder.reynolds:
        raise LadderError("ladder does not stabilize at the Reynolds ideal")


@dataclass(frozen=True)
class QuotientInvariants:
    total_dim: int
    radical_power_dims: tuple  # dim rad^i for i = 0, 1, ... down to 0
    socle_dim: int
    nilpotency_index: int

    def as_dict(self) -> dict:
        return {
            "total_dim": self.total_dim,
            "radical_power_dims": list(self.radical_power_dims),
            "socle_dim": self.socle_dim,
            "nilpotency_index": self.nilpotency_index,
        }


def quotient_invariants(A: StructureAlgebra, Z: Subspace, I: Subspace) -> QuotientInvariants:
    """Fingerprint of the commutative ring Z/I for an ideal I of Z ⊆ A."""
    if not is_ideal(A, Z, I):
        raise NotAnIdeal("I is not an ideal of Z")
    total = Z.dim - I.dim
    radZ = Z & radical(A)
    dims = [total]
    P = radZ
    while dims[-1]:
        dims.append((P + I).dim - I.dim)
        if dims[-1] == dims[-2]:
            raise NotAnIdeal("radical of the quotient is not nilpotent")
        P = A.span(A.mul(x, y) for x in P.basis for y in radZ.basis)
    # socle: classes z + I with z r ∈ I for all r in rad Z
    spec = A.spec
    rows = []
    for r in radZ.basis:
        images = [I.quotient_coords(A.mul(z, r)) for z in Z.basis]
        for coord in range(len(images[0]) if images else 0):
            row = [img[coord] for img in images]
            if any(row):
                rows.append(row)
    if rows:
        ker = kernel(Matrix(spec, rows, Z.dim))
        vecs = []
        for lam in ker.basis:
            v = [spec.zero] * A.dim
            for c, z in zip(lam, Z.basis):
                if c:
                    v = [a + c * b for a, b in zip(v, z)]
            vecs.append(v)
        ann = A.span(vecs) + I
    else:
        ann = Z
    return QuotientInvariants(total, tuple(dims), ann.dim - I.dim, len(dims) - 1)
