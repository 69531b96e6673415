"""Reduced simplicial homology over Q or F_p via exact boundary-matrix ranks.

No floating point is used anywhere.  Ranks over Q use fraction-free
(Bareiss) elimination on Python integers; ranks over F_2 use XOR on
bitset rows; ranks over odd F_p use modular Gaussian elimination.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

from graphbetti.complex import SimplicialComplex, face_key


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field: characteristic 0 means Q, otherwise F_p."""

    characteristic: int = 0

    def __post_init__(self) -> None:
        p = self.characteristic
        if p != 0 and not _is_prime(p):
            raise ValueError(f"field characteristic must be 0 or a prime, got {p}")
        if p >= 2**31:
            raise ValueError("prime characteristic must be below 2**31")

    @property
    def label(self) -> str:
        p = self.characteristic
        if p == 0:
            return "Q"
        if p == 2:
            return "F2"
        return f"Fp:{p}"

    @classmethod
    def parse(cls, text: str) -> FieldSpec:
        """Accepts ``0``/``Q``, ``2``/``F2``, ``p:<prime>``, ``Fp:<prime>`` or a bare prime."""
        t = text.strip()
        if t in ("Q", "QQ"):
            return cls(0)
        if t == "F2":
            return cls(2)
        for prefix in ("Fp:", "p:", "F"):
            if t.startswith(prefix):
                t = t[len(prefix):]
                break
        try:
            p = int(t)
        except ValueError:
            raise ValueError(f"unrecognised field {text!r}") from None
        return cls(p)

    def __str__(self) -> str:
        return self.label


QQ = FieldSpec(0)
GF2 = FieldSpec(2)
GF3 = FieldSpec(3)


@dataclass(frozen=True)
class ExactMatrix:
    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]
    field: FieldSpec = QQ

    def __post_init__(self) -> None:
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise ValueError("matrix entries do not match the declared shape")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], field: FieldSpec = QQ, cols: int | None = None) -> ExactMatrix:
        entries = tuple(tuple(int(x) for x in r) for r in rows)
        ncols = cols if cols is not None else (len(entries[0]) if entries else 0)
        return cls(len(entries), ncols, entries, field)

    def __matmul__(self, other: ExactMatrix) -> ExactMatrix:
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        p = self.field.characteristic
        out = []
        for r in self.entries:
            row = []
            for j in range(other.cols):
                s = sum(r[k] * other.entries[k][j] for k in range(self.cols))
                row.append(s % p if p else s)
            out.append(row)
        return ExactMatrix.from_rows(out, self.field, other.cols)

    def is_zero(self) -> bool:
        p = self.field.characteristic
        return all((x % p if p else x) == 0 for r in self.entries for x in r)


def _rank_bareiss(rows: list[list[int]]) -> int:
    """Rank over Q of an integer matrix by fraction-free elimination."""
    M = [list(r) for r in rows if any(r)]
    if not M:
        return 0
    nrows, ncols = len(M), len(M[0])
    prev = 1
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if M[i][c]), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        pr = M[r]
        a = pr[c]
        for i in range(r + 1, nrows):
            row = M[i]
            b = row[c]
            if b:
                for j in range(c + 1, ncols):
                    row[j] = (a * row[j] - b * pr[j]) // prev
            else:
                for j in range(c + 1, ncols):
                    row[j] = (a * row[j]) // prev
            row[c] = 0
        prev = a
        r += 1
        if r == nrows:
            break
    return r


def _rank_mod_p(rows: list[list[int]], p: int) -> int:
    M = [[x % p for x in r] for r in rows]
    M = [r for r in M if any(r)]
    if not M:
        return 0
    nrows, ncols = len(M), len(M[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if M[i][c]), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        pr = M[r]
        inv = pow(pr[c], p - 2, p)
        for j in range(c, ncols):
            pr[j] = pr[j] * inv % p
        for i in range(r + 1, nrows):
            row = M[i]
            f = row[c]
            if f:
                for j in range(c, ncols):
                    row[j] = (row[j] - f * pr[j]) % p
        r += 1
        if r == nrows:
            break
    return r


def _rank_gf2_bits(vectors: list[int]) -> int:
    """Rank over F_2 of vectors encoded as integers."""
    basis: dict[int, int] = {}
    for v in vectors:
        while v:
            top = v.bit_length() - 1
            if top in basis:
                v ^= basis[top]
            else:
                basis[top] = v
                break
    return len(basis)


def rank(M: ExactMatrix) -> int:
    p = M.field.characteristic
    if M.rows == 0 or M.cols == 0:
        return 0
    if p == 2:
        vecs = []
        for r in M.entries:
            v = 0
            for j, x in enumerate(r):
                if x & 1:
                    v |= 1 << j
            vecs.append(v)
        return _rank_gf2_bits(vecs)
    if p == 0:
        return _rank_bareiss([list(r) for r in M.entries])
    return _rank_mod_p([list(r) for r in M.entries], p)


# --- boundary maps ------------------------------------------------------------

def _boundary_columns(lower: list[int], upper: list[int]) -> list[list[tuple[int, int]]]:
    """For each face in ``upper``: (row index in ``lower``, sign) pairs."""
    index = {f: k for k, f in enumerate(lower)}
    cols = []
    for f in upper:
        entries = []
        sub = f
        k = 0
        while sub:
            low = sub & -sub
            entries.append((index[f ^ low], -1 if k & 1 else 1))
            sub ^= low
            k += 1
        cols.append(entries)
    return cols


def _faces_in_dim(faces_by_dim: Mapping[int, list[int]], i: int) -> list[int]:
    return faces_by_dim.get(i, [])


def _rank_of_boundary(faces_by_dim: Mapping[int, list[int]], i: int, field: FieldSpec) -> int:
    """Rank of the boundary map from i-faces to (i-1)-faces."""
    if i < 0:
        return 0
    upper = _faces_in_dim(faces_by_dim, i)
    lower = _faces_in_dim(faces_by_dim, i - 1)
    if not upper or not lower:
        return 0
    cols = _boundary_columns(lower, upper)
    p = field.characteristic
    if p == 2:
        vecs = []
        for entries in cols:
            v = 0
            for r, _ in entries:
                v |= 1 << r
            vecs.append(v)
        return _rank_gf2_bits(vecs)
    # transpose is fine: rank(A) = rank(A^T), rows indexed by upper faces
    width = len(lower)
    rows = []
    for entries in cols:
        row = [0] * width
        for r, s in entries:
            row[r] = s
        rows.append(row)
    if p == 0:
        return _rank_bareiss(rows)
    return _rank_mod_p(rows, p)


def boundary_matrix(D: SimplicialComplex, i: int, field: FieldSpec = QQ) -> ExactMatrix:
    """Matrix of the boundary map from i-faces (columns) to (i-1)-faces (rows).

    The 0-th map sends every vertex to the empty face with coefficient 1.
    """
    if i < -1:
        raise ValueError("boundary index must be >= -1")
    fbd = {} if D.void else D.faces_by_dim
    upper = _faces_in_dim(fbd, i)
    lower = _faces_in_dim(fbd, i - 1)
    p = field.characteristic
    grid = [[0] * len(upper) for _ in lower]
    for c, entries in enumerate(_boundary_columns(lower, upper) if lower else []):
        for r, s in entries:
            grid[r][c] = s % p if p else s
    return ExactMatrix.from_rows(grid, field, cols=len(upper))


@dataclass(frozen=True)
class HomologyProfile:
    """Nonzero reduced Betti numbers ``i -> dim H~_i``; anything else is 0."""

    dims: Mapping[int, int] = field(default_factory=dict)

    def __getitem__(self, i: int) -> int:
        return self.dims.get(i, 0)

    @property
    def is_acyclic(self) -> bool:
        return not any(self.dims.values())

    def euler_characteristic(self) -> int:
        return sum((-1) ** i * d for i, d in self.dims.items())

    def __eq__(self, other: object) -> bool:
        if isinstance(other, HomologyProfile):
            return {k: v for k, v in self.dims.items() if v} == {k: v for k, v in other.dims.items() if v}
        if isinstance(other, dict):
            return self == HomologyProfile(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(tuple(sorted((k, v) for k, v in self.dims.items() if v)))


def _homology_from_faces(faces_by_dim: Mapping[int, list[int]], field: FieldSpec) -> dict[int, int]:
    if not faces_by_dim:
        return {}
    top = max(faces_by_dim)
    ranks = {i: _rank_of_boundary(faces_by_dim, i, field) for i in range(0, top + 1)}
    out = {}
    for i in range(-1, top + 1):
        h = len(_faces_in_dim(faces_by_dim, i)) - ranks.get(i, 0) - ranks.get(i + 1, 0)
        if h:
            out[i] = h
    return out


def reduced_homology(D: SimplicialComplex, field: FieldSpec = QQ) -> HomologyProfile:
    if D.void:
        return HomologyProfile({})
    return HomologyProfile(_homology_from_faces(D.faces_by_dim, field))


def reduced_homology_dim(D: SimplicialComplex, j: int, field: FieldSpec = QQ) -> int:
    """``dim H~_j`` alone; only the boundary maps at ``j`` and ``j + 1`` are built."""
    if D.void or j < -1:
        return 0
    fbd = D.faces_by_dim
    return homology_dim_from_faces(fbd, j, field)


def homology_dim_from_faces(faces_by_dim: Mapping[int, list[int]], j: int, field: FieldSpec) -> int:
    n_faces = len(_faces_in_dim(faces_by_dim, j))
    if n_faces == 0:
        return 0
    return n_faces - _rank_of_boundary(faces_by_dim, j, field) - _rank_of_boundary(faces_by_dim, j + 1, field)


def sort_faces(faces: list[int]) -> list[int]:
    return sorted(faces, key=face_key)
