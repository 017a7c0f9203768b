"""Simplicial complexes on labeled integer vertices, stored by their facets.

The Stanley-Reisner correspondence lives here: a squarefree monomial ideal is
the ideal of minimal non-faces of a unique complex and vice versa.  Also here:
face/h-vector counts, multiplicity and codimension, the induced/deletion/link
operations, joins and unions, and the structural predicates (flag, cone,
balanced, generalized tree) used by the bound theorems.

A complex always has at least one vertex and every vertex lies in some facet;
isolated vertices are singleton facets.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Iterable, Optional

from .errors import (
    EmptyInputError,
    LabelCollisionError,
    NotAFaceError,
    ParseError,
    PreconditionError,
)
from .monomials import MonomialIdeal, squarefree_monomial


class SimplicialComplex:
    """An abstract simplicial complex given by its facets.

    The constructor normalizes: facets are deduplicated, non-maximal ones are
    dropped, and any declared vertex not covered by a facet becomes a
    singleton facet.  Labels are positive integers and need not be contiguous
    (induced subcomplexes keep their original labels).
    """

    __slots__ = ("_vertices", "_facets", "_faces", "_hash")

    def __init__(
        self,
        facets: Iterable[Iterable[int]],
        vertices: Iterable[int] | None = None,
    ):
        fsets = {frozenset(f) for f in facets}
        fsets.discard(frozenset())
        declared = frozenset(vertices) if vertices is not None else frozenset()
        covered = frozenset().union(*fsets) if fsets else frozenset()
        for v in covered | declared:
            if not isinstance(v, int) or v < 1:
                raise PreconditionError(f"vertex labels must be positive integers, got {v!r}")
        for v in declared - covered:
            fsets.add(frozenset({v}))
        maximal = [f for f in fsets if not any(f < g for g in fsets)]
        if not maximal:
            raise EmptyInputError("a complex needs at least one vertex")
        self._facets: tuple[frozenset[int], ...] = tuple(
            sorted(maximal, key=lambda f: (len(f), sorted(f)))
        )
        self._vertices: frozenset[int] = frozenset().union(*self._facets)
        self._faces: frozenset[frozenset[int]] | None = None
        self._hash: int | None = None

    @property
    def vertices(self) -> frozenset[int]:
        return self._vertices

    @property
    def facets(self) -> tuple[frozenset[int], ...]:
        return self._facets

    @property
    def n(self) -> int:
        return len(self._vertices)

    @property
    def dim(self) -> int:
        return max(len(f) for f in self._facets) - 1

    def faces(self) -> frozenset[frozenset[int]]:
        """All nonempty faces (the empty face is left implicit)."""
        if self._faces is None:
            out: set[frozenset[int]] = set()
            for f in self._facets:
                elems = sorted(f)
                for k in range(1, len(elems) + 1):
                    out.update(frozenset(c) for c in combinations(elems, k))
            self._faces = frozenset(out)
        return self._faces

    def faces_of_dim(self, i: int) -> list[frozenset[int]]:
        """Faces of dimension i, sorted; i = -1 gives the empty face."""
        if i == -1:
            return [frozenset()]
        return sorted(
            (f for f in self.faces() if len(f) == i + 1),
            key=sorted,
        )

    def has_face(self, face: Iterable[int]) -> bool:
        f = frozenset(face)
        return not f or f in self.faces()

    def is_simplex(self) -> bool:
        return len(self._facets) == 1 and len(self._facets[0]) == self.n

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self._facets == other._facets

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._facets)
        return self._hash

    def __repr__(self) -> str:
        inner = ", ".join("{" + " ".join(map(str, sorted(f))) + "}" for f in self._facets)
        return f"SimplicialComplex({inner})"


@dataclass(frozen=True)
class FVector:
    """Face counts (f_-1, f_0, ..., f_{d-1}) with f_-1 = 1 for the empty face."""

    counts: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.counts or self.counts[0] != 1:
            raise PreconditionError("an f-vector starts with f_-1 = 1")

    @property
    def dim(self) -> int:
        return len(self.counts) - 2

    def f(self, i: int) -> int:
        """f_i, with i ranging over -1..dim; zero outside that range."""
        if i < -1 or i > self.dim:
            return 0
        return self.counts[i + 1]


@dataclass(frozen=True)
class BalanceSpec:
    """A witness that a complex is a-balanced: a coloring obeying the caps."""

    a: tuple[int, ...]
    coloring: tuple[tuple[int, int], ...]  # (vertex, color) pairs, color in 1..len(a)

    def color_of(self, v: int) -> int:
        return dict(self.coloring)[v]


# --- Stanley-Reisner correspondence -----------------------------------------


def from_squarefree_ideal(ideal: MonomialIdeal) -> SimplicialComplex:
    """The complex whose minimal non-faces are the generator supports.

    Faces are exactly the subsets of {1..n} containing no generator support;
    facets are found by exact search (complements of minimal hitting sets of
    the support hypergraph).  The zero ideal gives the full simplex.
    """
    if any(not g.is_squarefree() for g in ideal.generators):
        raise PreconditionError("ideal must be squarefree; polarize first")
    n = ideal.ambient_vars
    everything = frozenset(range(1, n + 1))
    supports = [g.support for g in ideal.generators]
    if not supports:
        return SimplicialComplex([everything])
    if any(len(s) == 1 for s in supports):
        # a degree-one generator would delete a vertex outright; the
        # correspondence only covers ideals generated in degrees >= 2
        raise PreconditionError("ideal has a linear generator; not a face ideal")
    transversals: set[frozenset[int]] = set()
    seen: set[frozenset[int]] = set()

    def extend(partial: frozenset[int]) -> None:
        if partial in seen:
            return
        seen.add(partial)
        for sup in supports:
            if not (sup & partial):
                for v in sorted(sup):
                    extend(partial | {v})
                return
        transversals.add(partial)

    extend(frozenset())
    minimal = [t for t in transversals if not any(u < t for u in transversals)]
    return SimplicialComplex([everything - t for t in minimal], vertices=everything)


def minimal_nonfaces(complex_: SimplicialComplex) -> list[frozenset[int]]:
    """Minimal non-faces, sorted by (size, labels).

    A minimal non-face N has every proper subset a face, so 2 <= |N| <= dim+2
    and N = F + {v} for some face F; candidates are generated that way.
    """
    faces = complex_.faces()
    verts = sorted(complex_.vertices)
    by_size: dict[int, set[frozenset[int]]] = {}
    for f in faces:
        by_size.setdefault(len(f), set()).add(f)
    out: list[frozenset[int]] = []
    for s in range(2, complex_.dim + 3):
        smaller = by_size.get(s - 1, set())
        candidates: set[frozenset[int]] = set()
        for f in smaller:
            for v in verts:
                if v not in f:
                    candidates.add(f | {v})
        for c in candidates:
            if c in by_size.get(s, set()):
                continue
            if all(c - {v} in smaller for v in c):
                out.append(c)
    return sorted(out, key=lambda f: (len(f), sorted(f)))


@lru_cache(maxsize=65536)
def nonfaces_ideal(complex_: SimplicialComplex) -> MonomialIdeal:
    """The squarefree ideal generated by the minimal non-faces.

    Variables are indexed by the sorted vertex labels (label k -> x_j where j
    is k's position); for complexes labeled 1..n this is the identity.  A
    simplex yields the zero ideal (empty generator set).
    """
    verts = sorted(complex_.vertices)
    index = {v: i + 1 for i, v in enumerate(verts)}
    n = len(verts)
    gens = [
        squarefree_monomial([index[v] for v in nf], n)
        for nf in minimal_nonfaces(complex_)
    ]
    return MonomialIdeal(n, gens)


# --- numerical data ----------------------------------------------------------


def f_vector(complex_: SimplicialComplex) -> FVector:
    counts = [0] * (complex_.dim + 2)
    counts[0] = 1
    for f in complex_.faces():
        counts[len(f)] += 1
    return FVector(tuple(counts))


def h_vector(complex_: SimplicialComplex) -> tuple[int, ...]:
    """h_i = sum_j (-1)^(i-j) C(d-j, d-i) f_{j-1} for i = 0..d."""
    fv = f_vector(complex_)
    d = complex_.dim + 1
    return tuple(
        sum((-1) ** (i - j) * comb(d - j, d - i) * fv.f(j - 1) for j in range(i + 1))
        for i in range(d + 1)
    )


def multiplicity(complex_: SimplicialComplex) -> int:
    """e(S/I_K) = number of top-dimensional faces."""
    return f_vector(complex_).f(complex_.dim)


def codimension(complex_: SimplicialComplex) -> int:
    """codim I_K = n - dim K - 1."""
    return complex_.n - complex_.dim - 1


# --- subcomplex operations ---------------------------------------------------


def induced(complex_: SimplicialComplex, vertices: Iterable[int]) -> SimplicialComplex:
    """The induced subcomplex on a nonempty subset of the vertices."""
    w = frozenset(vertices)
    if not w:
        raise EmptyInputError("induced subcomplex on the empty set is not representable")
    if not w <= complex_.vertices:
        raise PreconditionError("not a subset of the vertex set")
    return SimplicialComplex(
        (f & w for f in complex_.facets if f & w), vertices=w
    )


def delete_vertex(complex_: SimplicialComplex, v: int) -> SimplicialComplex:
    if v not in complex_.vertices:
        raise PreconditionError(f"vertex {v} not present")
    if complex_.n == 1:
        raise PreconditionError("deleting the only vertex leaves nothing representable")
    return induced(complex_, complex_.vertices - {v})


def link(complex_: SimplicialComplex, face: Iterable[int]) -> SimplicialComplex:
    """lk_K(F) = {G : G disjoint from F, G + F a face}.

    F must be a proper face (not a facet): the link of a facet is the empty
    complex, which has no vertices and is not representable here.
    """
    f = frozenset(face)
    if f and f not in complex_.faces():
        raise NotAFaceError(f"{sorted(f)} is not a face")
    cofacets = [fac - f for fac in complex_.facets if f <= fac]
    if all(not c for c in cofacets):
        raise PreconditionError("link of a facet has no vertices")
    return SimplicialComplex(c for c in cofacets if c)


# --- joins and unions ---------------------------------------------------------


def shift_labels(complex_: SimplicialComplex, offset: int) -> SimplicialComplex:
    return SimplicialComplex(
        ({v + offset for v in f} for f in complex_.facets)
    )


def join(a: SimplicialComplex, b: SimplicialComplex) -> SimplicialComplex:
    """K * K' on disjoint label sets: faces are unions of a face from each."""
    if a.vertices & b.vertices:
        raise LabelCollisionError(
            f"join factors share labels {sorted(a.vertices & b.vertices)}; shift one first"
        )
    return SimplicialComplex(fa | fb for fa in a.facets for fb in b.facets)


def union(a: SimplicialComplex, b: SimplicialComplex) -> SimplicialComplex:
    """Union on a shared label space: faces(K u K') = faces(K) | faces(K')."""
    return SimplicialComplex(list(a.facets) + list(b.facets))


def intersection(a: SimplicialComplex, b: SimplicialComplex) -> Optional[SimplicialComplex]:
    """Common faces of two complexes; None when they share no vertex."""
    common = {fa & fb for fa in a.facets for fb in b.facets}
    common.discard(frozenset())
    if not common:
        return None
    return SimplicialComplex(common)


# --- structural predicates -----------------------------------------------------


def is_flag(complex_: SimplicialComplex) -> bool:
    """True iff every minimal non-face has exactly two vertices."""
    return all(len(nf) == 2 for nf in minimal_nonfaces(complex_))


def one_skeleton_edges(complex_: SimplicialComplex) -> frozenset[frozenset[int]]:
    return frozenset(f for f in complex_.faces() if len(f) == 2)


def is_cone(complex_: SimplicialComplex) -> frozenset[int]:
    """The set of apexes: vertices lying in every facet (empty if not a cone)."""
    apexes = set(complex_.facets[0])
    for f in complex_.facets[1:]:
        apexes &= f
    return frozenset(apexes)


def is_balanced(
    complex_: SimplicialComplex, a: tuple[int, ...]
) -> Optional[BalanceSpec]:
    """Search for an a-balanced coloring: each face meets color i at most a_i times.

    Requires sum(a) = dim + 1.  Returns a witness or None; the search is a
    plain backtracking over vertices with per-facet count pruning.
    """
    d = complex_.dim + 1
    if any(x < 1 for x in a):
        raise PreconditionError("color caps must be positive")
    if sum(a) != d:
        raise PreconditionError(f"caps must sum to dim+1 = {d}")
    verts = sorted(complex_.vertices)
    facets = [f for f in complex_.facets]
    incident = {v: [i for i, f in enumerate(facets) if v in f] for v in verts}
    k = len(a)
    counts = [[0] * k for _ in facets]
    coloring: dict[int, int] = {}

    def assign(pos: int) -> bool:
        if pos == len(verts):
            return True
        v = verts[pos]
        for color in range(k):
            ok = all(counts[i][color] < a[color] for i in incident[v])
            if ok:
                for i in incident[v]:
                    counts[i][color] += 1
                coloring[v] = color + 1
                if assign(pos + 1):
                    return True
                for i in incident[v]:
                    counts[i][color] -= 1
                del coloring[v]
        return False

    if assign(0):
        return BalanceSpec(tuple(a), tuple(sorted(coloring.items())))
    return None


def is_generalized_tree(complex_: SimplicialComplex) -> bool:
    """Pure with f_{d-1} = n-d+1 and a facet order attaching along (d-2)-faces.

    Each facet after the first must meet the union of its predecessors in
    exactly d-1 vertices (a single face of dimension d-2).
    """
    d = complex_.dim + 1
    facets = complex_.facets
    if any(len(f) != d for f in facets):
        return False
    if len(facets) != complex_.n - d + 1:
        return False
    if len(facets) == 1:
        return True
    if d == 1:
        return len(facets) == 1
    dead: set[frozenset[int]] = set()

    def search(used: frozenset[int], cover: frozenset[int]) -> bool:
        if len(used) == len(facets):
            return True
        if used in dead:
            return False
        for i, f in enumerate(facets):
            if i in used:
                continue
            if len(f & cover) == d - 1:
                if search(used | {i}, cover | f):
                    return True
        dead.add(used)
        return False

    for i, f in enumerate(facets):
        if search(frozenset({i}), f):
            return True
    return False


# --- text format ---------------------------------------------------------------
#
# One facet per line as whitespace-separated positive integer labels, with an
# optional header "vertices: <n>" (labels beyond the listed facets become
# isolated vertices).  '#' starts a comment.


def parse_facets(text: str) -> SimplicialComplex:
    declared_n: int | None = None
    facets: list[frozenset[int]] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        if body.lower().startswith("vertices:"):
            if facets or declared_n is not None:
                raise ParseError("vertices: header must precede all facets", lineno)
            value = body.split(":", 1)[1].strip()
            if not value.isdigit() or int(value) < 1:
                raise ParseError(f"bad vertex count {value!r}", lineno)
            declared_n = int(value)
            continue
        labels = []
        for token in body.split():
            if not token.isdigit() or int(token) < 1:
                raise ParseError(f"bad vertex label {token!r}", lineno)
            labels.append(int(token))
        if len(set(labels)) != len(labels):
            raise ParseError("repeated label in facet", lineno)
        facets.append(frozenset(labels))
    if not facets and declared_n is None:
        raise ParseError("no facets found")
    if declared_n is not None:
        high = max((max(f) for f in facets), default=0)
        if high > declared_n:
            raise ParseError(f"facet label exceeds declared vertices: {declared_n}")
        return SimplicialComplex(facets, vertices=range(1, declared_n + 1))
    return SimplicialComplex(facets)


def format_facets(complex_: SimplicialComplex) -> str:
    lines = [f"vertices: {max(complex_.vertices)}"]
    lines.extend(" ".join(map(str, sorted(f))) for f in complex_.facets)
    return "\n".join(lines) + "\n"
