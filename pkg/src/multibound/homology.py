"""Reduced simplicial homology over Q or a prime field, by exact rank.

Boundary matrices carry the usual alternating signs from the sorted-vertex
orientation.  Ranks over Q come from fraction-free (Bareiss) elimination on
integer matrices; ranks over GF(p) from modular elimination, with a bitmask
fast path at p = 2.  No floating point anywhere.

The empty face is part of every chain complex here, so degree -1 is present
in every profile; since a complex always has a vertex, dim H~_{-1} = 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .complexes import SimplicialComplex
from .errors import PreconditionError

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    for q in _SMALL_PRIMES:
        if p == q:
            return True
        if p % q == 0:
            return False
    i = 41
    while i * i <= p:
        if p % i == 0:
            return False
        i += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """The coefficient field: characteristic 0 (Q) or a prime field GF(p)."""

    p: int | None = None

    def __post_init__(self) -> None:
        if self.p is not None and not _is_prime(self.p):
            raise PreconditionError(f"{self.p} is not prime")

    @property
    def is_rational(self) -> bool:
        return self.p is None

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls(None)

    @classmethod
    def gf(cls, p: int) -> "FieldSpec":
        return cls(p)

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        t = text.strip().lower()
        if t == "q":
            return cls(None)
        if t.startswith("gf:"):
            tail = t[3:]
            if tail.isdigit():
                return cls(int(tail))
        raise PreconditionError(f"unknown field {text!r} (expected q or gf:<p>)")

    def __str__(self) -> str:
        return "q" if self.p is None else f"gf:{self.p}"


QQ = FieldSpec(None)
GF2 = FieldSpec(2)
GF3 = FieldSpec(3)


class HomologyProfile:
    """dim H~_i for i = -1 .. top, as a tuple indexed from degree -1."""

    __slots__ = ("_dims",)

    def __init__(self, dims: Iterable[int]):
        self._dims = tuple(dims)
        if not self._dims:
            raise PreconditionError("a profile covers at least degree -1")

    @property
    def top(self) -> int:
        return len(self._dims) - 2

    def betti(self, i: int) -> int:
        if i < -1 or i > self.top:
            return 0
        return self._dims[i + 1]

    @property
    def dims(self) -> tuple[int, ...]:
        return self._dims

    def is_trivial(self) -> bool:
        return all(d == 0 for d in self._dims)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HomologyProfile):
            return NotImplemented
        return self._dims == other._dims

    def __repr__(self) -> str:
        return f"HomologyProfile({self._dims})"


# --- exact rank ----------------------------------------------------------------


def rank_rational(rows: list[list[int]]) -> int:
    """Rank over Q of an integer matrix, by one-step Bareiss elimination."""
    m = [r[:] for r in rows]
    nr = len(m)
    nc = len(m[0]) if nr else 0
    rank = 0
    prev = 1
    r = 0
    for c in range(nc):
        piv = None
        for i in range(r, nr):
            if m[i][c]:
                piv = i
                break
        if piv is None:
            continue
        if piv != r:
            m[r], m[piv] = m[piv], m[r]
        pv = m[r][c]
        mr = m[r]
        for i in range(r + 1, nr):
            mi = m[i]
            f = mi[c]
            for c2 in range(c + 1, nc):
                mi[c2] = (mi[c2] * pv - f * mr[c2]) // prev
            mi[c] = 0
        prev = pv
        rank += 1
        r += 1
        if r == nr:
            break
    return rank


def rank_gf2(vectors: list[int]) -> int:
    """Rank over GF(2) of row vectors packed into ints."""
    pivots: dict[int, int] = {}
    rank = 0
    for v in vectors:
        while v:
            low = v & (-v)
            w = pivots.get(low)
            if w is None:
                pivots[low] = v
                rank += 1
                break
            v ^= w
    return rank


def rank_mod_p(rows: list[list[int]], p: int) -> int:
    """Rank over GF(p) by modular Gaussian elimination."""
    m = [[x % p for x in r] for r in rows]
    nr = len(m)
    nc = len(m[0]) if nr else 0
    rank = 0
    r = 0
    for c in range(nc):
        piv = None
        for i in range(r, nr):
            if m[i][c]:
                piv = i
                break
        if piv is None:
            continue
        if piv != r:
            m[r], m[piv] = m[piv], m[r]
        inv = pow(m[r][c], p - 2, p)
        if inv != 1:
            m[r] = [(x * inv) % p for x in m[r]]
        mr = m[r]
        for i in range(r + 1, nr):
            f = m[i][c]
            if f:
                mi = m[i]
                for c2 in range(c, nc):
                    mi[c2] = (mi[c2] - f * mr[c2]) % p
        rank += 1
        r += 1
        if r == nr:
            break
    return rank


def _rank(rows: list[list[int]], field: FieldSpec) -> int:
    if not rows or not rows[0]:
        return 0
    if field.is_rational:
        return rank_rational(rows)
    return rank_mod_p(rows, field.p)  # type: ignore[arg-type]


# --- boundary matrices -----------------------------------------------------------


def boundary_matrix(complex_: SimplicialComplex, i: int) -> list[list[int]]:
    """The matrix of d_i: C_i -> C_{i-1}, rows indexed by (i-1)-faces.

    Faces are ordered sorted-lexicographically; entries are 0 or (-1)^j for
    the j-th vertex omitted.  d_0 is the all-ones augmentation row onto the
    empty face, and d_{-1} has no rows.
    """
    if i < -1 or i > complex_.dim:
        raise PreconditionError(f"no chain group in degree {i}")
    if i == -1:
        return []
    cols = [tuple(sorted(f)) for f in complex_.faces_of_dim(i)]
    if i == 0:
        return [[1] * len(cols)]
    rows = [tuple(sorted(f)) for f in complex_.faces_of_dim(i - 1)]
    index = {f: r for r, f in enumerate(rows)}
    matrix = [[0] * len(cols) for _ in rows]
    for c, face in enumerate(cols):
        for j in range(len(face)):
            sub = face[:j] + face[j + 1 :]
            matrix[index[sub]][c] = -1 if j % 2 else 1
    return matrix


# --- internal face tables, shared by single-complex and all-subsets paths -------


def _face_tables(complex_: SimplicialComplex) -> tuple[list[int], list[list[tuple[int, tuple[int, ...], list[tuple[int, ...]]]]]]:
    """Per dimension: (vertex-bitmask, index-tuple, signed subface tuples).

    Vertices are mapped to 0-based positions in sorted label order.  Subfaces
    are listed in omission order, so position j carries sign (-1)^j.
    """
    verts = sorted(complex_.vertices)
    pos = {v: k for k, v in enumerate(verts)}
    tables: list[list[tuple[int, tuple[int, ...], list[tuple[int, ...]]]]] = [
        [] for _ in range(complex_.dim + 1)
    ]
    for f in complex_.faces():
        t = tuple(sorted(pos[v] for v in f))
        mask = 0
        for k in t:
            mask |= 1 << k
        subs = [t[:j] + t[j + 1 :] for j in range(len(t))]
        tables[len(t) - 1].append((mask, t, subs))
    for lst in tables:
        lst.sort(key=lambda rec: rec[1])
    return [1 << pos[v] for v in verts], tables


def _restricted_dims(
    tables: list[list[tuple[int, tuple[int, ...], list[tuple[int, ...]]]]],
    wmask: int,
    field: FieldSpec,
) -> tuple[int, ...]:
    """Reduced homology dims (from degree -1) of the induced subcomplex."""
    present: list[list[tuple[int, tuple[int, ...], list[tuple[int, ...]]]]] = []
    for lst in tables:
        sel = [rec for rec in lst if rec[0] & ~wmask == 0]
        if not sel:
            break
        present.append(sel)
    top = len(present) - 1
    counts = [len(lst) for lst in present]
    # rank of d_i for i = 0..top; d_0 has rank 1 (some vertex exists)
    ranks = [0] * (top + 2)
    ranks[0] = 1
    use_gf2 = field.p == 2
    for i in range(1, top + 1):
        index = {rec[1]: k for k, rec in enumerate(present[i - 1])}
        if use_gf2:
            vecs = []
            for _, _, subs in present[i]:
                v = 0
                for s in subs:
                    v |= 1 << index[s]
                vecs.append(v)
            ranks[i] = rank_gf2(vecs)
        else:
            ncols = counts[i - 1]
            rows = []
            for _, _, subs in present[i]:
                row = [0] * ncols
                for j, s in enumerate(subs):
                    row[index[s]] = -1 if j % 2 else 1
                rows.append(row)
            ranks[i] = _rank(rows, field)
    dims = [0] * (top + 2)
    dims[0] = 1 - ranks[0]  # degree -1: one empty face, minus the augmentation rank
    for i in range(top + 1):
        dims[i + 1] = counts[i] - ranks[i] - ranks[i + 1]
    return tuple(dims)


def reduced_homology(complex_: SimplicialComplex, field: FieldSpec = QQ) -> HomologyProfile:
    """All reduced homology dimensions of the complex over the given field."""
    bits, tables = _face_tables(complex_)
    full = 0
    for b in bits:
        full |= b
    return HomologyProfile(_restricted_dims(tables, full, field))


def subcomplex_profiles(
    complex_: SimplicialComplex, field: FieldSpec = QQ
) -> dict[frozenset[int], tuple[int, ...]]:
    """Reduced homology dims of every induced subcomplex K[W], W nonempty.

    Keys are vertex subsets (as frozensets of labels); values are dim tuples
    starting at degree -1.  This is the workhorse behind Hochster's formula
    and the Leray bound checks.
    """
    verts = sorted(complex_.vertices)
    bits, tables = _face_tables(complex_)
    out: dict[frozenset[int], tuple[int, ...]] = {}
    n = len(verts)
    for wmask in range(1, 1 << n):
        w = frozenset(verts[k] for k in range(n) if wmask >> k & 1)
        out[w] = _restricted_dims(tables, wmask, field)
    return out
