"""Shared oracles, builders, and generators for the test suite.

The oracles here are deliberately independent of the library's fast paths:
Taylor data is recomputed by explicit subset enumeration over the
generators, and isomorphism is decided by trying every vertex permutation.
Tests compare the library's lattice/dynamic-programming answers against
these slow-but-obvious computations.
"""

from __future__ import annotations

import random
from itertools import combinations, permutations

from multibound import (
    Monomial,
    MonomialIdeal,
    SimplicialComplex,
    lcm_of,
    minimalize,
    squarefree_monomial,
)

# --- small named complexes used across the suite -----------------------------------


def four_cycle() -> SimplicialComplex:
    return SimplicialComplex([(1, 2), (2, 3), (3, 4), (1, 4)])


def three_isolated() -> SimplicialComplex:
    return SimplicialComplex([(1,), (2,), (3,)])


def two_isolated() -> SimplicialComplex:
    return SimplicialComplex([(1,), (2,)])


def hollow_triangle() -> SimplicialComplex:
    return SimplicialComplex([(1, 2), (1, 3), (2, 3)])


def strip_complex() -> SimplicialComplex:
    """Four triangles glued along edges into a strip on six vertices."""
    return SimplicialComplex([(1, 2, 3), (2, 3, 4), (3, 4, 5), (4, 5, 6)])


def path_graph(n: int) -> SimplicialComplex:
    return SimplicialComplex([(i, i + 1) for i in range(1, n)])


def rp2_complex() -> SimplicialComplex:
    """The 6-vertex triangulation of the real projective plane."""
    return SimplicialComplex(
        [
            (1, 2, 4),
            (1, 2, 5),
            (1, 3, 4),
            (1, 3, 6),
            (1, 5, 6),
            (2, 3, 5),
            (2, 3, 6),
            (2, 4, 6),
            (3, 4, 5),
            (4, 5, 6),
        ]
    )


def cross_polytope_ideal(k: int) -> MonomialIdeal:
    """(x1 x2, x3 x4, ...): k coprime quadratic generators on 2k variables."""
    return MonomialIdeal(
        2 * k, [squarefree_monomial({2 * i - 1, 2 * i}, 2 * k) for i in range(1, k + 1)]
    )


def cross_polytope_complex(k: int) -> SimplicialComplex:
    """Boundary of the k-dimensional cross polytope: join of k point pairs."""
    return SimplicialComplex(
        [tuple(2 * i - 1 + b for i, b in zip(range(1, k + 1), bits)) for bits in _bits(k)]
    )


def _bits(k: int):
    for w in range(1 << k):
        yield [(w >> i) & 1 for i in range(k)]


def sq_ideal(n: int, *supports) -> MonomialIdeal:
    """Squarefree ideal from 1-based variable supports."""
    return MonomialIdeal(n, [squarefree_monomial(s, n) for s in supports])


# --- brute-force Taylor oracles -----------------------------------------------------


def brute_taylor_betti(ideal: MonomialIdeal) -> dict[tuple[int, int], int]:
    """beta_{i,j} by enumerating every nonempty generator subset."""
    counts: dict[tuple[int, int], int] = {}
    gens = ideal.generators
    for size in range(1, len(gens) + 1):
        for subset in combinations(gens, size):
            j = lcm_of(subset).degree
            counts[(size, j)] = counts.get((size, j), 0) + 1
    return counts


def brute_taylor_shifts(
    ideal: MonomialIdeal, k: int | None = None
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Minimal/maximal lcm degree per subset size, by full enumeration."""
    gens = ideal.generators
    r = len(gens)
    k = r if k is None else k
    mins: list[int] = []
    maxs: list[int] = []
    for size in range(1, k + 1):
        degs = [lcm_of(subset).degree for subset in combinations(gens, size)]
        mins.append(min(degs))
        maxs.append(max(degs))
    return tuple(mins), tuple(maxs)


# --- brute-force isomorphism ---------------------------------------------------------


def brute_isomorphic(a: SimplicialComplex, b: SimplicialComplex) -> bool:
    """Isomorphism by trying all vertex bijections."""
    if a.n != b.n or sorted(len(f) for f in a.facets) != sorted(len(f) for f in b.facets):
        return False
    va, vb = sorted(a.vertices), sorted(b.vertices)
    target = set(b.facets)
    for perm in permutations(vb):
        relabel = dict(zip(va, perm))
        if {frozenset(relabel[v] for v in f) for f in a.facets} == target:
            return True
    return False


# --- random instance generators ------------------------------------------------------


def random_ideal(
    rng: random.Random,
    max_vars: int = 5,
    max_exp: int = 3,
    max_gens: int = 10,
    force_nonsquarefree: bool = False,
) -> MonomialIdeal:
    """A random nonzero monomial ideal, minimalized."""
    while True:
        n = rng.randint(2, max_vars)
        gens = []
        for _ in range(rng.randint(1, max_gens)):
            exps = [rng.randint(0, max_exp) for _ in range(n)]
            if any(exps):
                gens.append(Monomial(tuple(exps)))
        if not gens:
            continue
        if force_nonsquarefree and all(g.is_squarefree() for g in gens):
            g = gens[rng.randrange(len(gens))]
            exps = list(g.exponents)
            exps[max(range(n), key=lambda i: exps[i])] += 1
            gens.append(Monomial(tuple(exps)))
        ideal = minimalize(gens, n)
        if ideal.is_zero():
            continue
        if force_nonsquarefree and all(g.is_squarefree() for g in ideal.generators):
            continue
        return ideal


def random_complex(rng: random.Random, max_vertices: int = 5) -> SimplicialComplex:
    """A random complex on 1..max_vertices vertices (all singletons kept)."""
    n = rng.randint(1, max_vertices)
    facets = []
    for _ in range(rng.randint(1, 2 * n)):
        size = rng.randint(1, n)
        facets.append(tuple(rng.sample(range(1, n + 1), size)))
    return SimplicialComplex(facets, vertices=range(1, n + 1))
