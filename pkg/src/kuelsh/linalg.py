"""Dense exact linear algebra over a FieldSpec, subspaces, and integer Smith form."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .field import FieldElement, FieldSpec

Vector = tuple  # tuple of FieldElement


class LinalgError(ValueError):
    pass


class AmbientMismatch(LinalgError):
    pass


class SpecMismatch(LinalgError):
    pass


class Matrix:
    """Row-major matrix of field elements."""

    __slots__ = ("spec", "rows", "cols", "entries")

    def __init__(self, spec: FieldSpec, rows: Iterable[Sequence], cols: int | None = None):
        self.spec = spec
        self.entries = [[spec(x) for x in r] for r in rows]
        if cols is None:
            if not self.entries:
                raise LinalgError("cols required for an empty matrix")
            cols = len(self.entries[0])
        self.rows, self.cols = len(self.entries), cols
        if any(len(r) != cols for r in self.entries):
            raise LinalgError("ragged matrix")

    @classmethod
    def identity(cls, spec: FieldSpec, n: int) -> "Matrix":
        return cls(spec, [[1 if i == j else 0 for j in range(n)] for i in range(n)], n)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def transpose(self) -> "Matrix":
        return Matrix(self.spec, [list(c) for c in zip(*self.entries)] if self.rows else [], self.rows)

    def apply(self, v: Sequence) -> Vector:
        zero = self.spec.zero
        out = []
        for r in self.entries:
            acc = zero
            for a, b in zip(r, v):
                if a and b:
                    acc = acc + a * b
            out.append(acc)
        return tuple(out)

    def __eq__(self, other):
        return isinstance(other, Matrix) and self.cols == other.cols and self.entries == other.entries

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in r) for r in self.entries)
        return f"Matrix({self.rows}x{self.cols}: {body})"


def _eliminate(rows: list[list[FieldElement]], cols: int) -> tuple[list[list], list[int]]:
    """In-place Gauss-Jordan; returns (nonzero RREF rows, pivot columns)."""
    pivots: list[int] = []
    r = 0
    n = len(rows)
    for c in range(cols):
        if r == n:
            break
        k = next((i for i in range(r, n) if rows[i][c]), None)
        if k is None:
            continue
        rows[r], rows[k] = rows[k], rows[r]
        row = rows[r]
        inv = row[c].inverse()
        if inv != 1:
            row = rows[r] = [x * inv if x else x for x in row]
        for i in range(n):
            if i != r:
                f = rows[i][c]
                if f:
                    other = rows[i]
                    rows[i] = [a - f * b if b else a for a, b in zip(other, row)]
        pivots.append(c)
        r += 1
    return rows[:r], pivots


def rref(m: Matrix) -> tuple[Matrix, int]:
    rows, piv = _eliminate([list(r) for r in m.entries], m.cols)
    return Matrix(m.spec, rows, m.cols), len(piv)


def rank(m: Matrix) -> int:
    return rref(m)[1]


def kernel(m: Matrix) -> "Subspace":
    """Right kernel {x : m x = 0}."""
    rows, piv = _eliminate([list(r) for r in m.entries], m.cols)
    spec = m.spec
    free = [c for c in range(m.cols) if c not in set(piv)]
    basis = []
    for f in free:
        v = [spec.zero] * m.cols
        v[f] = spec.one
        for row, pc in zip(rows, piv):
            if row[f]:
                v[pc] = -row[f]
        basis.append(v)
    return Subspace(spec, m.cols, basis)


class Subspace:
    """Linear subspace of K^n stored as an RREF basis (zero rows dropped)."""

    __slots__ = ("spec", "ambient_dim", "basis", "pivots")

    def __init__(self, spec: FieldSpec, ambient_dim: int, vectors: Iterable[Sequence] = ()):
        self.spec = spec
        self.ambient_dim = ambient_dim
        rows = [[spec(x) for x in v] for v in vectors]
        if any(len(r) != ambient_dim for r in rows):
            raise AmbientMismatch("vector length does not match ambient dimension")
        rows, piv = _eliminate(rows, ambient_dim)
        self.basis = tuple(tuple(r) for r in rows)
        self.pivots = tuple(piv)

    @classmethod
    def zero(cls, spec: FieldSpec, n: int) -> "Subspace":
        return cls(spec, n)

    @classmethod
    def full(cls, spec: FieldSpec, n: int) -> "Subspace":
        return cls(spec, n, Matrix.identity(spec, n).entries)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self):
        return self.dim

    def _check(self, other: "Subspace"):
        if other.ambient_dim != self.ambient_dim:
            raise AmbientMismatch(f"{self.ambient_dim} vs {other.ambient_dim}")
        if other.spec != self.spec:
            raise SpecMismatch("subspaces over different fields")

    def reduce(self, v: Sequence) -> list[FieldElement]:
        """Residue of v after clearing all pivot coordinates."""
        v = [self.spec(x) for x in v]
        for row, c in zip(self.basis, self.pivots):
            f = v[c]
            if f:
                v = [a - f * b if b else a for a, b in zip(v, row)]
        return v

    def __contains__(self, v) -> bool:
        return not any(self.reduce(v))

    def contains(self, other: "Subspace") -> bool:
        self._check(other)
        return all(b in self for b in other.basis)

    def __le__(self, other: "Subspace") -> bool:
        return other.contains(self)

    def __add__(self, other: "Subspace") -> "Subspace":
        self._check(other)
        return Subspace(self.spec, self.ambient_dim, self.basis + other.basis)

    def __and__(self, other: "Subspace") -> "Subspace":
        return self.intersection(other)

    def intersection(self, other: "Subspace") -> "Subspace":
        self._check(other)
        if not self.dim or not other.dim:
            return Subspace.zero(self.spec, self.ambient_dim)
        # columns u_i and -v_j; kernel vectors give the common elements
        cols = list(self.basis) + [tuple(-x for x in v) for v in other.basis]
        m = Matrix(self.spec, [list(r) for r in zip(*cols)], len(cols))
        ker = kernel(m)
        zero = self.spec.zero
        vecs = []
        for k in ker.basis:
            acc = [zero] * self.ambient_dim
            for coef, u in zip(k[: self.dim], self.basis):
                if coef:
                    acc = [a + coef * b for a, b in zip(acc, u)]
            vecs.append(acc)
        return Subspace(self.spec, self.ambient_dim, vecs)

    def quotient_dim(self, other: "Subspace") -> int:
        """dim(self / (self ∩ other)); equals dim self - dim other when other ⊆ self."""
        return (self + other).dim - other.dim

    def complement_indices(self) -> list[int]:
        """Coordinates not used as pivots; they index a basis of K^n / self."""
        piv = set(self.pivots)
        return [i for i in range(self.ambient_dim) if i not in piv]

    def quotient_coords(self, v: Sequence) -> list[FieldElement]:
        r = self.reduce(v)
        return [r[i] for i in self.complement_indices()]

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.ambient_dim == other.ambient_dim
            and self.basis == other.basis
        )

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim})"


def semilinear_kernel(images: Sequence[Sequence[FieldElement]], n: int, spec: FieldSpec | None = None) -> Subspace:
    """Solutions λ of ``sum_i λ_i^(p^n) v_i = 0``.

    Each entry of each v_i is split over the p-basis of K over K^(p^n); the
    equation then holds iff every component of ``sum_i λ_i u_ij`` vanishes,
    which is K-linear in λ.
    """
    m = len(images)
    if spec is None:
        if not m or not images[0]:
            raise LinalgError("spec needed for empty input")
        spec = images[0][0].spec
    if not m:
        return Subspace.zero(spec, 0)
    length = len(images[0])
    if any(len(v) != length for v in images):
        raise SpecMismatch("image vectors have different lengths")
    q = spec.p ** n
    parts = []
    for v in images:
        comps = []
        for x in v:
            x = spec(x)
            comps.append(x.p_power_decompose(n) if x else [spec.zero] * q)
        parts.append(comps)
    width = 1 if spec.is_perfect else q
    rows = []
    for c in range(length):
        for j in range(width):
            row = [parts[i][c][j] for i in range(m)]
            if any(row):
                rows.append(row)
    if not rows:
        return Subspace.full(spec, m)
    return kernel(Matrix(spec, rows, m))


# --------------------------------------------------------------------------
# integer matrices


@dataclass(frozen=True)
class IntMatrix:
    entries: tuple

    @classmethod
    def of(cls, rows) -> "IntMatrix":
        return cls(tuple(tuple(int(x) for x in r) for r in rows))

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.entries]


def smith_normal_form(m: IntMatrix | Sequence[Sequence[int]]) -> list[int]:
    """Nonzero elementary divisors d1 | d2 | ... of an integer matrix."""
    a = [list(r) for r in (m.entries if isinstance(m, IntMatrix) else m)]
    if not a or not a[0]:
        return []
    rows, cols = len(a), len(a[0])
    divisors = []
    t = 0
    while t < min(rows, cols):
        nz = [(abs(a[i][j]), i, j) for i in range(t, rows) for j in range(t, cols) if a[i][j]]
        if not nz:
            break
        _, i, j = min(nz)
        a[t], a[i] = a[i], a[t]
        for r in a:
            r[t], r[j] = r[j], r[t]
        while True:
            changed = False
            for i in range(t + 1, rows):
                if a[i][t]:
                    q = a[i][t] // a[t][t]
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                    if a[i][t]:
                        a[t], a[i] = a[i], a[t]
                        changed = True
            for j in range(t + 1, cols):
                if a[t][j]:
                    q = a[t][j] // a[t][t]
                    for r in a:
                        r[j] -= q * r[t]
                    if a[t][j]:
                        for r in a:
                            r[t], r[j] = r[j], r[t]
                        changed = True
            if changed:
                continue
            # pivot must divide the rest of the block
            bad = next(
                ((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols) if a[i][j] % a[t][t]),
                None,
            )
            if bad is None:
                break
            a[t] = [x + y for x, y in zip(a[t], a[bad[0]])]
        divisors.append(abs(a[t][t]))
        t += 1
    return divisors
