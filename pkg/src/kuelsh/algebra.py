"""Finite-dimensional algebras given by structure constants.

:func:`build_quotient` turns a quiver presentation into a
:class:`StructureAlgebra`; the remaining functions compute structural
subspaces (commutators, centre, radical, socle) and Cartan data.
"""
from __future__ import annotations

import heapq
import itertools
from collections import deque
from typing import Iterable, Optional, Sequence

from .field import FieldElement, FieldSpec
from .linalg import IntMatrix, Matrix, Subspace, kernel
from .quiver import NonAdmissible, Path, QuiverPresentation, _ExprParser


class AlgebraError(ValueError):
    pass


class SaturationFailure(AlgebraError):
    pass


class StructureAlgebra:
    """Associative unital algebra with a labelled basis of paths.

    ``mult[i][j]`` is a sparse dict ``{k: c}`` giving ``b_i b_j``.
    """

    def __init__(
        self,
        spec: FieldSpec,
        labels: Sequence[str],
        mult: Sequence[Sequence[dict]],
        idempotents: Sequence[int],
        path_length: Sequence[int],
        vertex_pair: Sequence[tuple],
        vertices: Sequence[str] = (),
        presentation: Optional[QuiverPresentation] = None,
    ):
        self.spec = spec
        self.labels = tuple(labels)
        self.dim = len(self.labels)
        self.mult = [[dict(c) for c in row] for row in mult]
        self.idempotents = tuple(idempotents)
        self.path_length = tuple(path_length)
        self.vertex_pair = tuple(vertex_pair)
        self.vertices = tuple(vertices) or tuple(dict.fromkeys(v for v, _ in self.vertex_pair))
        self.presentation = presentation
        self._index = {lab: i for i, lab in enumerate(self.labels)}
        zero = spec.zero
        unit = [zero] * self.dim
        for i in self.idempotents:
            unit[i] = spec.one
        self.unit = tuple(unit)

    # ---- elements
    def element(self, coords: Sequence) -> "AlgebraElement":
        return AlgebraElement(self, tuple(self.spec(c) for c in coords))

    def basis_element(self, i: int) -> "AlgebraElement":
        v = [self.spec.zero] * self.dim
        v[i] = self.spec.one
        return AlgebraElement(self, tuple(v))

    def zero(self) -> "AlgebraElement":
        return AlgebraElement(self, (self.spec.zero,) * self.dim)

    def one(self) -> "AlgebraElement":
        return AlgebraElement(self, self.unit)

    def index(self, label: str) -> int:
        return self._index[label]

    @property
    def generators(self) -> list[int]:
        """Idempotents and arrows; they generate the algebra."""
        return list(self.idempotents) + [i for i, n in enumerate(self.path_length) if n == 1]

    def __getitem__(self, text: str) -> "AlgebraElement":
        return self.word(text)

    def word(self, text: str) -> "AlgebraElement":
        """Evaluate a linear combination of path words by multiplying arrows.

        This goes through the multiplication table only, so it is independent
        of which paths were chosen as basis representatives.
        """
        if self.presentation is None:
            return self.basis_element(self.index(text))
        lc = _ExprParser(self.presentation, text).lincomb()
        out = self.zero()
        for path, c in lc.items():
            out = out + c * self._path_element(path)
        return out

    def _path_element(self, path: Path) -> "AlgebraElement":
        x = self.basis_element(self.index(f"e{path.source}"))
        for a in path.arrows:
            x = x * self.basis_element(self.index(a))
        return x

    # ---- arithmetic on coordinate tuples
    def mul(self, x: Sequence[FieldElement], y: Sequence[FieldElement]) -> tuple:
        acc: dict = {}
        ynz = [(j, b) for j, b in enumerate(y) if b]
        for i, a in enumerate(x):
            if not a:
                continue
            row = self.mult[i]
            for j, b in ynz:
                prod = row[j]
                if prod:
                    ab = a * b
                    for k, c in prod.items():
                        acc[k] = acc[k] + ab * c if k in acc else ab * c
        zero = self.spec.zero
        return tuple(acc.get(k, zero) for k in range(self.dim))

    def left_matrix(self, x: Sequence) -> Matrix:
        """Matrix of y -> x y acting on coordinate columns."""
        cols = [self.mul(x, self.basis_element(j).coords) for j in range(self.dim)]
        return Matrix(self.spec, [list(r) for r in zip(*cols)], self.dim)

    def right_matrix(self, x: Sequence) -> Matrix:
        cols = [self.mul(self.basis_element(j).coords, x) for j in range(self.dim)]
        return Matrix(self.spec, [list(r) for r in zip(*cols)], self.dim)

    def check_associative(self) -> bool:
        """Exhaustive check of (b_i b_j) b_k == b_i (b_j b_k)."""
        for i, j in itertools.product(range(self.dim), repeat=2):
            ij = self.mult[i][j]
            for k in range(self.dim):
                left: dict = {}
                for m, c in ij.items():
                    for n, d in self.mult[m][k].items():
                        left[n] = left.get(n, self.spec.zero) + c * d
                right: dict = {}
                for m, c in self.mult[j][k].items():
                    for n, d in self.mult[i][m].items():
                        right[n] = right.get(n, self.spec.zero) + c * d
                if {a: b for a, b in left.items() if b} != {a: b for a, b in right.items() if b}:
                    return False
        return True

    def check_idempotents(self) -> bool:
        one = self.one()
        es = [self.basis_element(i) for i in self.idempotents]
        if not es or sum(es[1:], es[0]) != one:
            return False
        for a, b in itertools.product(range(len(es)), repeat=2):
            if es[a] * es[b] != (es[a] if a == b else self.zero()):
                return False
        vidx = {v: self.idempotents[n] for n, v in enumerate(self.vertices)}
        for i, (s, t) in enumerate(self.vertex_pair):
            b = self.basis_element(i)
            if self.basis_element(vidx[s]) * b * self.basis_element(vidx[t]) != b:
                return False
        return True

    def span(self, elements: Iterable) -> Subspace:
        return Subspace(self.spec, self.dim, [e.coords if isinstance(e, AlgebraElement) else e for e in elements])

    def describe_vector(self, v: Sequence) -> str:
        return str(AlgebraElement(self, tuple(v)))

    def __repr__(self):
        return f"StructureAlgebra(dim={self.dim}, field={self.spec.describe()})"


class AlgebraElement:
    __slots__ = ("algebra", "coords")

    def __init__(self, algebra: StructureAlgebra, coords: tuple):
        if len(coords) != algebra.dim:
            raise AlgebraError("coordinate length does not match algebra dimension")
        self.algebra = algebra
        self.coords = coords

    def _scalar(self, c):
        return self.algebra.spec(c)

    def __add__(self, other):
        if not isinstance(other, AlgebraElement):
            return self + self._scalar(other) * self.algebra.one()
        return AlgebraElement(self.algebra, tuple(a + b for a, b in zip(self.coords, other.coords)))

    __radd__ = __add__

    def __neg__(self):
        return AlgebraElement(self.algebra, tuple(-a for a in self.coords))

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return AlgebraElement(self.algebra, self.algebra.mul(self.coords, other.coords))
        c = self._scalar(other)
        return AlgebraElement(self.algebra, tuple(a * c for a in self.coords))

    def __rmul__(self, other):
        c = self._scalar(other)
        return AlgebraElement(self.algebra, tuple(c * a for a in self.coords))

    def __truediv__(self, other):
        return self * self._scalar(other).inverse()

    def __pow__(self, n: int):
        result = self.algebra.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return self.is_zero()
        return isinstance(other, AlgebraElement) and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __str__(self):
        terms = []
        for c, lab in zip(self.coords, self.algebra.labels):
            if c:
                terms.append(lab if c == 1 else f"[{c}]*{lab}")
        return " + ".join(terms) if terms else "0"

    __repr__ = __str__


# --------------------------------------------------------------------------
# construction from a quiver presentation


def build_quotient(q: QuiverPresentation, loewy_bound: Optional[int] = None) -> StructureAlgebra:
    """Compute KQ/I for an admissible ideal I with J^(L0+1) contained in I.

    Works modulo paths of length > L0 + 1: the ideal generated by the
    relations is closed under multiplication by arrows inside that window,
    and every path of length exactly L0 + 1 must reduce to zero.  That
    inclusion J^(L0+1) ⊆ I + J^(L0+2) forces J^(L0+1) ⊆ I, so the truncated
    computation is exact.  Normal forms eliminate the largest path in the
    order (length, arrow sequence), leaving the least surviving paths as basis.
    """
    L0 = loewy_bound if loewy_bound is not None else q.loewy_bound
    if L0 is None or L0 < 1:
        raise AlgebraError("loewy_bound must be a positive integer")
    q.check_admissible()
    spec = q.spec
    window = L0 + 1

    vindex = {v: i for i, v in enumerate(q.vertices)}
    aindex = {a: i for i, (a, _, _) in enumerate(q.arrows)}
    a_src = [vindex[s] for _, s, _ in q.arrows]
    a_tgt = [vindex[t] for _, _, t in q.arrows]
    out_arrows = [[i for i in range(len(q.arrows)) if a_src[i] == v] for v in range(len(q.vertices))]
    in_arrows = [[i for i in range(len(q.arrows)) if a_tgt[i] == v] for v in range(len(q.vertices))]

    # internal path key (length, arrow indices, source, target) sorts in the basis order
    def key(p: Path):
        return (len(p.arrows), tuple(aindex[a] for a in p.arrows), vindex[p.source], vindex[p.target])

    pivots: dict = {}  # leading path -> tail dict (leading coefficient normalised to 1)

    def reduce(v: dict) -> dict:
        v = dict(v)
        heap = [(_neg(k), k) for k in v]
        heapq.heapify(heap)
        out = {}
        while heap:
            _, m = heapq.heappop(heap)
            c = v.pop(m, None)
            if c is None or not c:
                continue
            tail = pivots.get(m)
            if tail is None:
                out[m] = c
                continue
            for k, d in tail.items():
                old = v.get(k)
                if old is None:
                    v[k] = -c * d
                    heapq.heappush(heap, (_neg(k), k))
                else:
                    new = old - c * d
                    if new:
                        v[k] = new
                    else:
                        del v[k]
        return out

    def times_arrow(v: dict, a: int, right: bool) -> dict:
        out = {}
        for (n, arr, s, t), c in v.items():
            if n + 1 > window:
                continue
            if right and t == a_src[a]:
                out[(n + 1, arr + (a,), s, a_tgt[a])] = c
            elif not right and s == a_tgt[a]:
                out[(n + 1, (a,) + arr, a_src[a], t)] = c
        return out

    queue: deque = deque()
    for rel in q.relation_vectors():
        # split into e_s rel e_t components so every vector is endpoint-homogeneous
        parts: dict = {}
        for p, c in rel.items():
            k = key(p)
            if k[0] <= window:
                parts.setdefault((k[2], k[3]), {})[k] = c
        queue.extend(parts.values())

    while queue:
        w = reduce(queue.popleft())
        if not w:
            continue
        lead = max(w)
        inv = w[lead].inverse()
        w = {k: c * inv for k, c in w.items()}
        pivots[lead] = {k: c for k, c in w.items() if k != lead}
        s, t = lead[2], lead[3]
        for a in out_arrows[t]:
            queue.append(times_arrow(w, a, True))
        for a in in_arrows[s]:
            queue.append(times_arrow(w, a, False))

    def paths_of_length(n: int):
        if n == 0:
            for v in range(len(q.vertices)):
                yield (0, (), v, v)
            return
        for p in paths_of_length(n - 1):
            for a in out_arrows[p[3]]:
                yield (n, p[1] + (a,), p[2], a_tgt[a])

    for p in paths_of_length(window):
        if reduce({p: spec.one}):
            raise SaturationFailure(
                f"path {_label(q, p)} of length {window} survives; loewy_bound {L0} is too small"
            )

    basis = []
    for n in range(window):
        basis.extend(p for p in paths_of_length(n) if p not in pivots)
    basis.sort()
    pos = {p: i for i, p in enumerate(basis)}
    mult = []
    for b in basis:
        row = []
        for c in basis:
            if b[3] != c[2] or b[0] + c[0] > L0:
                row.append({})
                continue
            prod = (b[0] + c[0], b[1] + c[1], b[2], c[3])
            nf = reduce({prod: spec.one})
            row.append({pos[k]: v for k, v in nf.items()})
        mult.append(row)
    labels = [_label(q, p) for p in basis]
    idem = [pos[(0, (), v, v)] for v in range(len(q.vertices))]
    return StructureAlgebra(
        spec,
        labels,
        mult,
        idem,
        [p[0] for p in basis],
        [(q.vertices[p[2]], q.vertices[p[3]]) for p in basis],
        q.vertices,
        presentation=q,
    )


class _neg:
    """Heap key reversing tuple order (heapq is a min-heap)."""

    __slots__ = ("k",)

    def __init__(self, k):
        self.k = k

    def __lt__(self, other):
        return self.k > other.k

    def __eq__(self, other):
        return self.k == other.k


def _label(q: QuiverPresentation, p) -> str:
    n, arr, s, _ = p
    return ".".join(q.arrows[a][0] for a in arr) if n else f"e{q.vertices[s]}"


# --------------------------------------------------------------------------
# structural subspaces


def multiply(A: StructureAlgebra, x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    if x.algebra is not A or y.algebra is not A:
        raise AlgebraError("elements belong to a different algebra")
    return x * y


def commutator_subspace(A: StructureAlgebra) -> Subspace:
    """Span of b_i b_j - b_j b_i over all basis pairs."""
    vecs = []
    for i in range(A.dim):
        for j in range(i + 1, A.dim):
            d: dict = dict(A.mult[i][j])
            for k, c in A.mult[j][i].items():
                d[k] = d[k] - c if k in d else -c
            if any(d.values()):
                vecs.append([d.get(k, A.spec.zero) for k in range(A.dim)])
    return Subspace(A.spec, A.dim, vecs)


def _stacked(A: StructureAlgebra, mats: list[Matrix]) -> Matrix:
    rows = [r for m in mats for r in m.entries if any(r)]
    return Matrix(A.spec, rows, A.dim)


def center(A: StructureAlgebra) -> Subspace:
    """{z : z g = g z} for every generator g (idempotents and arrows)."""
    mats = []
    for g in A.generators:
        e = A.basis_element(g).coords
        L, R = A.right_matrix(e), A.left_matrix(e)  # z -> z g, z -> g z
        mats.append(Matrix(A.spec, [[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(L.entries, R.entries)], A.dim))
    return kernel(_stacked(A, mats))


def radical(A: StructureAlgebra) -> Subspace:
    """Span of basis paths of positive length."""
    vecs = []
    for i, n in enumerate(A.path_length):
        if n >= 1:
            v = [A.spec.zero] * A.dim
            v[i] = A.spec.one
            vecs.append(v)
    return Subspace(A.spec, A.dim, vecs)


def socle(A: StructureAlgebra) -> Subspace:
    """Two-sided annihilator of the radical: x a = a x = 0 for every arrow a."""
    arrows = [i for i, n in enumerate(A.path_length) if n == 1]
    mats = []
    for a in arrows:
        e = A.basis_element(a).coords
        mats.append(A.right_matrix(e))
        mats.append(A.left_matrix(e))
    if not mats:
        return Subspace.full(A.spec, A.dim)
    return kernel(_stacked(A, mats))


def radical_power(A: StructureAlgebra, n: int) -> Subspace:
    J = radical(A)
    P = J if n >= 1 else Subspace.full(A.spec, A.dim)
    # J is the left ideal generated by the arrows, so J^n = sum over arrows of J^(n-1) a
    arrows = [A.basis_element(i).coords for i, m in enumerate(A.path_length) if m == 1]
    for _ in range(n - 1):
        if not P.dim:
            break
        P = A.span(A.mul(x, a) for x in P.basis for a in arrows)
    return P


def loewy_length(A: StructureAlgebra) -> int:
    """Smallest n with J^n = 0."""
    if not A.dim:
        return 0
    P = radical(A)
    arrows = [A.basis_element(i).coords for i, m in enumerate(A.path_length) if m == 1]
    n = 1
    while P.dim:
        P = A.span(A.mul(x, a) for x in P.basis for a in arrows)
        n += 1
    return n


def cartan_matrix(A: StructureAlgebra) -> IntMatrix:
    """Entry (i, j) is dim e_i A e_j."""
    r = len(A.vertices)
    counts = [[0] * r for _ in range(r)]
    vi = {v: n for n, v in enumerate(A.vertices)}
    for s, t in A.vertex_pair:
        counts[vi[s]][vi[t]] += 1
    return IntMatrix.of(counts)


def from_table(spec: FieldSpec, labels, table, idempotents=(0,), path_length=None, vertex_pair=None) -> StructureAlgebra:
    """Algebra from a dense table ``table[i][j] = coordinates of b_i b_j``."""
    mult = [[{k: spec(c) for k, c in enumerate(v) if spec(c)} for v in row] for row in table]
    n = len(labels)
    return StructureAlgebra(
        spec,
        labels,
        mult,
        idempotents,
        path_length or [0 if i in idempotents else 1 for i in range(n)],
        vertex_pair or [("1", "1")] * n,
    )


__all__ = [
    "AlgebraElement",
    "AlgebraError",
    "NonAdmissible",
    "SaturationFailure",
    "StructureAlgebra",
    "build_quotient",
    "cartan_matrix",
    "center",
    "commutator_subspace",
    "from_table",
    "loewy_length",
    "multiply",
    "radical",
    "radical_power",
    "socle",
]
