"""Exhaustive generation of small instances and theorem sweep drivers.

Graphs are enumerated up to isomorphism by vertex augmentation with
canonical-form deduplication; simplicial complexes by attaching a new
vertex along every subcomplex of a smaller representative.  Canonical
forms come from an individualization-refinement search that also counts
automorphisms, so generators can double-check themselves by orbit
counting.  Sweep drivers stream these instances through the bound
checks and write one ledger line each; a counterexample to a swept
statement halts the run.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Callable, Iterator

from .complexes import (
    SimplicialComplex,
    codimension,
    delete_vertex,
    from_squarefree_ideal,
    induced,
    is_balanced,
    is_cone,
    join,
    minimal_nonfaces,
    multiplicity,
    nonfaces_ideal,
    shift_labels,
)
from .conjecture import (
    VERDICT_EQUALITY,
    VERDICT_FAILS,
    Report,
    boundary_join_decomposition,
    check_tensor_equality_conditions,
    check_union_inequality,
    classify_lower_equality,
    classify_upper_equality,
    homred_applicable,
    huneke_miller_check,
    is_cohen_macaulay,
    verify_bounds,
)
from .errors import (
    CounterexampleError,
    ParseError,
    PreconditionError,
    ResourceLimitError,
)
from .homology import QQ, FieldSpec
from .monomials import Monomial, MonomialIdeal, minimalize, squarefree_monomial
from .shifts import (
    DEFAULT_MAX_LATTICE,
    DEFAULT_MAX_SUBSETS,
    ShiftSequence,
    check_resolution,
    complex_shifts,
    extremal_shifts,
    hochster_betti,
    is_pure,
    lower_join,
    taylor_betti,
    taylor_shifts,
    upper_join,
)

MAX_GRAPH_VERTICES = 8
MAX_COMPLEX_VERTICES = 6


# --- canonical forms ---------------------------------------------------------------


@dataclass(frozen=True)
class CanonicalForm:
    """Relabel-invariant facet encoding: equal forms iff isomorphic complexes."""

    n: int
    facets: tuple[tuple[int, ...], ...]

    def key(self) -> str:
        body = "|".join(" ".join(str(v) for v in f) for f in self.facets)
        return f"{self.n}:{body}"

    def __str__(self) -> str:
        return self.key()


def _swap_bits(mask: int, i: int, j: int) -> int:
    bi = (mask >> i) & 1
    bj = (mask >> j) & 1
    if bi == bj:
        return mask
    return mask ^ ((1 << i) | (1 << j))


def _refine(n: int, masks: tuple[int, ...], colors: list[int]) -> list[int]:
    """Iterate color refinement by incident-face color content to a fixed point."""
    incident = [[m for m in masks if (m >> v) & 1] for v in range(n)]
    while True:
        palette = max(colors) + 1
        face_sig = {}
        for m in set(masks):
            counts = [0] * palette
            mm = m
            while mm:
                low = mm & -mm
                counts[colors[low.bit_length() - 1]] += 1
                mm ^= low
            face_sig[m] = (m.bit_count(), tuple(counts))
        sigs = [
            (colors[v], tuple(sorted(face_sig[m] for m in incident[v])))
            for v in range(n)
        ]
        ranking = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new_colors = [ranking[s] for s in sigs]
        if new_colors == colors:
            return colors
        colors = new_colors


def _canonicalize_masks(n: int, masks: tuple[int, ...]) -> tuple[tuple[int, ...], int]:
    """Minimal relabeled mask tuple and the automorphism group order.

    Individualization-refinement search; when a whole target cell is
    pairwise interchangeable (every transposition preserves the face set),
    one branch stands in for all of them with its multiplicity recorded.
    The canonical leaf encoding is hit exactly |Aut| times, counted with
    those multiplicities.
    """
    face_set = frozenset(masks)

    def interchangeable(cell: list[int]) -> bool:
        for a in range(len(cell)):
            for b in range(a + 1, len(cell)):
                swapped = frozenset(_swap_bits(m, cell[a], cell[b]) for m in masks)
                if swapped != face_set:
                    return False
        return True

    best: tuple[int, ...] | None = None
    aut = 0

    def descend(colors: list[int], mult: int) -> None:
        nonlocal best, aut
        colors = _refine(n, masks, colors)
        palette = max(colors) + 1
        if palette == n:
            relabeled = tuple(
                sorted(
                    sum(1 << colors[v] for v in range(n) if (m >> v) & 1)
                    for m in masks
                )
            )
            if best is None or relabeled < best:
                best = relabeled
                aut = mult
            elif relabeled == best:
                aut += mult
            return
        cells: dict[int, list[int]] = {}
        for v in range(n):
            cells.setdefault(colors[v], []).append(v)
        target = min(
            (cell for cell in cells.values() if len(cell) > 1),
            key=lambda cell: (len(cell), colors[cell[0]]),
        )
        if interchangeable(target):
            branches = [target[0]]
            mult *= len(target)
        else:
            branches = target
        for v in branches:
            split = [(colors[u], 0 if u == v else 1) for u in range(n)]
            ranking = {s: i for i, s in enumerate(sorted(set(split)))}
            descend([ranking[s] for s in split], mult)

    descend([0] * n, 1)
    assert best is not None
    return best, aut


def _mask_to_vertices(mask: int) -> tuple[int, ...]:
    return tuple(v + 1 for v in range(mask.bit_length()) if (mask >> v) & 1)


def canonical_data(complex_: SimplicialComplex) -> tuple[CanonicalForm, int]:
    """Canonical form plus automorphism group order of a complex."""
    verts = sorted(complex_.vertices)
    pos = {v: i for i, v in enumerate(verts)}
    masks = tuple(sum(1 << pos[v] for v in f) for f in complex_.facets)
    canon, aut = _canonicalize_masks(len(verts), masks)
    facets = tuple(
        sorted((_mask_to_vertices(m) for m in canon), key=lambda f: (len(f), f))
    )
    return CanonicalForm(len(verts), facets), aut


def canonical_form(complex_: SimplicialComplex) -> CanonicalForm:
    return canonical_data(complex_)[0]


def canonical_graph_data(
    n: int, edges: frozenset[frozenset[int]]
) -> tuple[CanonicalForm, int]:
    """Canonical form plus automorphism count for a graph on vertices 1..n."""
    masks = tuple(sum(1 << (v - 1) for v in e) for e in edges)
    canon, aut = _canonicalize_masks(n, masks)
    pairs = tuple(sorted(_mask_to_vertices(m) for m in canon))
    return CanonicalForm(n, pairs), aut


# --- graph enumeration -------------------------------------------------------------

_GRAPH_CLASSES: dict[int, list[tuple[tuple[int, ...], int]]] = {}


def _graph_classes(n: int) -> list[tuple[tuple[int, ...], int]]:
    """Canonical representatives (edge-mask tuples) with automorphism orders."""
    if n in _GRAPH_CLASSES:
        return _GRAPH_CLASSES[n]
    if n == 1:
        reps = [((), 1)]
    else:
        reps_map: dict[tuple[int, ...], int] = {}
        new_bit = 1 << (n - 1)
        for smaller, _ in _graph_classes(n - 1):
            for nbrs in range(1 << (n - 1)):
                candidate = list(smaller)
                m = nbrs
                while m:
                    low = m & -m
                    candidate.append(low | new_bit)
                    m ^= low
                canon, aut = _canonicalize_masks(n, tuple(candidate))
                if canon not in reps_map:
                    reps_map[canon] = aut
        reps = sorted(reps_map.items())
    _GRAPH_CLASSES[n] = reps
    return reps


def enum_graphs(n: int) -> Iterator[frozenset[frozenset[int]]]:
    """All graphs on vertices 1..n up to isomorphism, as edge sets."""
    if n < 1:
        raise PreconditionError("graphs need at least one vertex")
    if n > MAX_GRAPH_VERTICES:
        raise ResourceLimitError(
            "max_graph_vertices",
            MAX_GRAPH_VERTICES,
            f"graph enumeration is capped at {MAX_GRAPH_VERTICES} vertices",
        )
    for masks, _ in _graph_classes(n):
        yield frozenset(frozenset(_mask_to_vertices(m)) for m in masks)


def verify_graph_census(n: int) -> bool:
    """Orbit-count double check: sum of n!/|Aut| over classes = 2^C(n,2)."""
    total = Fraction(0)
    fact = 1
    for i in range(2, n + 1):
        fact *= i
    for _, aut in _graph_classes(n):
        total += Fraction(fact, aut)
    return total == 1 << (n * (n - 1) // 2)


def clique_complex(n: int, edges: frozenset[frozenset[int]]) -> SimplicialComplex:
    """The flag complex of a graph: faces are the cliques."""
    adj = [0] * (n + 1)
    for e in edges:
        a, b = sorted(e)
        adj[a] |= 1 << b
        adj[b] |= 1 << a
    maximal: list[int] = []

    def expand(clique: int, candidates: int, excluded: int) -> None:
        if not candidates and not excluded:
            maximal.append(clique)
            return
        while candidates:
            low = candidates & -candidates
            v = low.bit_length() - 1
            expand(clique | low, candidates & adj[v], excluded & adj[v])
            candidates ^= low
            excluded |= low

    expand(0, sum(1 << v for v in range(1, n + 1)), 0)
    cliques = [
        frozenset(v for v in range(1, n + 1) if (m >> v) & 1) for m in maximal
    ]
    return SimplicialComplex(cliques, vertices=range(1, n + 1))


def flag_complexes(n: int) -> Iterator[SimplicialComplex]:
    """Clique complexes of all graphs on n vertices up to isomorphism."""
    for edges in enum_graphs(n):
        yield clique_complex(n, edges)


# --- complex enumeration -----------------------------------------------------------

_COMPLEX_CLASSES: dict[int, list[tuple[SimplicialComplex, int]]] = {}


def _antichains(faces: list[frozenset[int]]) -> Iterator[tuple[frozenset[int], ...]]:
    """All antichains (including the empty one) of a finite family of sets."""
    faces = sorted(faces, key=lambda f: (-len(f), sorted(f)))

    def extend(start: int, chosen: tuple[frozenset[int], ...]) -> Iterator[
        tuple[frozenset[int], ...]
    ]:
        yield chosen
        for i in range(start, len(faces)):
            f = faces[i]
            if any(f <= g or g <= f for g in chosen):
                continue
            yield from extend(i + 1, chosen + (f,))

    yield from extend(0, ())


def _complex_classes(n: int) -> list[tuple[SimplicialComplex, int]]:
    if n in _COMPLEX_CLASSES:
        return _COMPLEX_CLASSES[n]
    if n == 1:
        reps = [(SimplicialComplex([{1}]), 1)]
    else:
        reps_map: dict[CanonicalForm, tuple[SimplicialComplex, int]] = {}
        for smaller, _ in _complex_classes(n - 1):
            face_list = [f for f in smaller.faces() if f]
            for antichain in _antichains(face_list):
                if antichain:
                    extra = [f | {n} for f in antichain]
                else:
                    extra = [frozenset({n})]
                candidate = SimplicialComplex(list(smaller.facets) + extra)
                form, aut = canonical_data(candidate)
                if form not in reps_map:
                    relabeled = SimplicialComplex(form.facets)
                    reps_map[form] = (relabeled, aut)
        reps = [reps_map[k] for k in sorted(reps_map, key=lambda f: f.key())]
    _COMPLEX_CLASSES[n] = reps
    return reps


def enum_complexes(
    n: int, max_dim: int | None = None
) -> Iterator[SimplicialComplex]:
    """All complexes with vertex set exactly 1..n up to isomorphism."""
    if n < 1:
        raise PreconditionError("complexes need at least one vertex")
    if n > MAX_COMPLEX_VERTICES:
        raise ResourceLimitError(
            "max_complex_vertices",
            MAX_COMPLEX_VERTICES,
            f"complex enumeration is capped at {MAX_COMPLEX_VERTICES} vertices",
        )
    for complex_, _ in _complex_classes(n):
        if max_dim is None or complex_.dim <= max_dim:
            yield complex_


def enum_complex_data(n: int) -> Iterator[tuple[SimplicialComplex, int]]:
    """Enumerated complexes with their automorphism group orders."""
    if n < 1:
        raise PreconditionError("complexes need at least one vertex")
    if n > MAX_COMPLEX_VERTICES:
        raise ResourceLimitError(
            "max_complex_vertices",
            MAX_COMPLEX_VERTICES,
            f"complex enumeration is capped at {MAX_COMPLEX_VERTICES} vertices",
        )
    yield from _complex_classes(n)


# --- sweep configuration -----------------------------------------------------------


@dataclass(frozen=True)
class SweepConfig:
    """What to sweep and with which budgets.

    `samples` and `seed` drive the sampled families (random general ideals,
    the larger almost-quadratic edge sets); exhaustive drivers ignore them.
    """

    theorem: str
    max_vertices: int = MAX_COMPLEX_VERTICES
    fields: tuple[FieldSpec, ...] = (QQ,)
    resolutions: tuple[str, ...] = ("taylor",)
    max_lattice: int = DEFAULT_MAX_LATTICE
    max_subsets: int = DEFAULT_MAX_SUBSETS
    out: str | None = None
    samples: int = 200
    seed: int = 0

    def __post_init__(self) -> None:
        if self.max_vertices < 1:
            raise PreconditionError("max_vertices must be positive")
        if self.max_lattice < 1 or self.max_subsets < 1:
            raise PreconditionError("budgets must be positive")
        if self.samples < 0:
            raise PreconditionError("samples must be nonnegative")
        if not self.fields or not self.resolutions:
            raise PreconditionError("need at least one field and one resolution")
        for kind in self.resolutions:
            check_resolution(kind)


def parse_sweep_config(text: str) -> SweepConfig:
    """Parse key=value lines (# comments allowed) into a SweepConfig."""
    values: dict[str, object] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ParseError("expected key=value", line=lineno)
        key, _, value = line.partition("=")
        key = key.strip()
        value = value.strip()
        try:
            if key == "theorem":
                values[key] = value
            elif key in ("max_vertices", "max_lattice", "max_subsets", "samples", "seed"):
                values[key] = int(value)
            elif key == "fields":
                values[key] = tuple(
                    FieldSpec.parse(part.strip()) for part in value.split(",") if part.strip()
                )
            elif key == "resolutions":
                values[key] = tuple(
                    part.strip() for part in value.split(",") if part.strip()
                )
            elif key == "out":
                values[key] = value
            else:
                raise ParseError(f"unknown key {key!r}", line=lineno)
        except (ValueError, PreconditionError) as exc:
            raise ParseError(f"bad value for {key}: {exc}", line=lineno) from exc
    if "theorem" not in values:
        raise ParseError("config needs a theorem=<id> line")
    try:
        return SweepConfig(**values)  # type: ignore[arg-type]
    except PreconditionError:
        raise
    except TypeError as exc:
        raise ParseError(str(exc)) from exc


@dataclass(frozen=True)
class SweepResult:
    theorem: str
    instances: int
    skipped: int
    complete: bool
    ledger_path: str | None


# --- shared driver helpers ---------------------------------------------------------


def _flag_stream(max_vertices: int) -> Iterator[SimplicialComplex]:
    for n in range(1, max_vertices + 1):
        yield from flag_complexes(n)


def _complex_stream(max_vertices: int) -> Iterator[SimplicialComplex]:
    for n in range(1, max_vertices + 1):
        yield from enum_complexes(n)


def _verdict_ok(verdict: str) -> bool:
    return verdict != VERDICT_FAILS


def _report_record(report: Report) -> dict:
    return report.to_json_dict()


def _not_a_join(complex_: SimplicialComplex) -> bool:
    """No join decomposition: the generator-support graph is connected on all vertices."""
    if complex_.n == 1:
        return True
    nonfaces = minimal_nonfaces(complex_)
    parent = {v: v for v in complex_.vertices}

    def find(v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for nf in nonfaces:
        vs = sorted(nf)
        for other in vs[1:]:
            parent[find(other)] = find(vs[0])
    roots = {find(v) for v in complex_.vertices}
    return len(roots) == 1


Instance = tuple[str, dict, bool]
Driver = Callable[[SweepConfig], Iterator[Instance]]


# --- drivers -----------------------------------------------------------------------


def _drive_quad(config: SweepConfig) -> Iterator[Instance]:
    """Quadratic ideals: upper bound always, lower bound when Cohen-Macaulay."""
    for complex_ in _flag_stream(config.max_vertices):
        form = canonical_form(complex_)
        for field in config.fields:
            report = verify_bounds(complex_, "taylor", field, config.max_lattice)
            ok = _verdict_ok(report.upper) and _verdict_ok(report.lower)
            yield f"{form.key()}|{field}", _report_record(report), ok


def _drive_flag_lb(config: SweepConfig) -> Iterator[Instance]:
    """Cohen-Macaulay flag complexes satisfy the Taylor lower bound.

    Also checks the proof ingredients: a non-join flag complex has
    m_t <= t+1 through the codimension row, and a Cohen-Macaulay complex
    has at least n-d+1 top faces.
    """
    for complex_ in _flag_stream(config.max_vertices):
        form = canonical_form(complex_)
        c = codimension(complex_)
        chain_ok = True
        if c >= 1 and _not_a_join(complex_):
            mins, _ = complex_shifts(complex_, c, "taylor", QQ, config.max_lattice)
            chain_ok = all(mins.at(t) <= t + 1 for t in range(1, c + 1))
        for field in config.fields:
            report = verify_bounds(complex_, "taylor", field, config.max_lattice)
            count_ok = (not report.cm) or report.e >= c + 1
            ok = _verdict_ok(report.lower) and chain_ok and count_ok
            record = _report_record(report)
            record["support-chain-ok"] = chain_ok
            record["top-face-count-ok"] = count_ok
            yield f"{form.key()}|{field}", record, ok


def _drive_flag_ub(config: SweepConfig) -> Iterator[Instance]:
    """Flag complexes satisfy the Taylor upper bound.

    Where the inductive proof's standing hypotheses hold (not a join,
    fewer than 3d vertices, some generator-graph vertex of degree >= 3)
    the shift growth M_t >= 3t/2 through the codimension row is checked
    as well.
    """
    for complex_ in _flag_stream(config.max_vertices):
        form = canonical_form(complex_)
        report = verify_bounds(complex_, "taylor", config.fields[0], config.max_lattice)
        c = report.c
        growth_applies = False
        growth_ok = True
        if c >= 1 and complex_.n < 3 * (complex_.dim + 1) and _not_a_join(complex_):
            degree: dict[int, int] = {}
            for nf in minimal_nonfaces(complex_):
                for v in nf:
                    degree[v] = degree.get(v, 0) + 1
            if degree and max(degree.values()) >= 3:
                growth_applies = True
                _, maxs = complex_shifts(
                    complex_, c, "taylor", QQ, config.max_lattice
                )
                growth_ok = all(2 * maxs.at(t) >= 3 * t for t in range(1, c + 1))
        ok = _verdict_ok(report.upper) and growth_ok
        record = _report_record(report)
        record["growth-applies"] = growth_applies
        record["growth-ok"] = growth_ok
        yield form.key(), record, ok


def _non_simplex_stream(max_vertices: int) -> list[tuple[CanonicalForm, SimplicialComplex]]:
    out = []
    for complex_ in _complex_stream(max_vertices):
        if not complex_.is_simplex():
            out.append((canonical_form(complex_), complex_))
    return out


def _full_shifts(
    complex_: SimplicialComplex,
    resolution: str,
    field: FieldSpec,
    max_lattice: int,
) -> tuple[ShiftSequence, ShiftSequence]:
    """Every shift row: Taylor up to the generator count, minimal up to pd."""
    if resolution == "taylor":
        return taylor_shifts(nonfaces_ideal(complex_), None, max_lattice)
    table = hochster_betti(complex_, field)
    return extremal_shifts(table, table.length)


def _drive_tensor(config: SweepConfig) -> Iterator[Instance]:
    """Join reductions: bound transfer, the equality conditions, shift joins.

    For each unordered pair of non-simplex complexes the join's full shift
    sequences must equal the lower/upper joins of the factors' (subsets and
    Kunneth terms split across the disjoint factors), the join must inherit
    holding bounds, attain a bound exactly under the two stated conditions,
    and—when its minimal resolution is pure—land in the simplex-boundary
    join family.
    """
    factors = _non_simplex_stream(config.max_vertices)
    for i, (form_a, a) in enumerate(factors):
        for form_b, b in factors[i:]:
            joined = join(a, shift_labels(b, a.n))
            for field in config.fields:
                for resolution in config.resolutions:
                    rep_a = verify_bounds(a, resolution, field, config.max_lattice)
                    rep_b = verify_bounds(b, resolution, field, config.max_lattice)
                    rep_j = verify_bounds(joined, resolution, field, config.max_lattice)
                    ca, cb = rep_a.c, rep_b.c
                    full_a = _full_shifts(a, resolution, field, config.max_lattice)
                    full_b = _full_shifts(b, resolution, field, config.max_lattice)
                    full_j = _full_shifts(joined, resolution, field, config.max_lattice)
                    joins_ok = (
                        rep_j.c == ca + cb
                        and full_j[0] == lower_join(full_a[0], full_b[0])
                        and full_j[1] == upper_join(full_a[1], full_b[1])
                    )
                    upper_transfer = (
                        not (_verdict_ok(rep_a.upper) and _verdict_ok(rep_b.upper))
                    ) or _verdict_ok(rep_j.upper)
                    both_cm = rep_a.cm and rep_b.cm
                    lower_transfer = True
                    eq_lower_ok = True
                    eq_upper_ok = True
                    if both_cm:
                        lower_transfer = rep_j.cm and _verdict_ok(rep_j.lower)
                        eq_lower_pred = (
                            rep_a.lower == VERDICT_EQUALITY
                            and rep_b.lower == VERDICT_EQUALITY
                            and check_tensor_equality_conditions(
                                full_a[0], full_b[0], ca, cb
                            )
                        )
                        eq_lower_ok = (rep_j.lower == VERDICT_EQUALITY) == eq_lower_pred
                        eq_upper_pred = (
                            rep_a.upper == VERDICT_EQUALITY
                            and rep_b.upper == VERDICT_EQUALITY
                            and check_tensor_equality_conditions(
                                full_a[1], full_b[1], ca, cb
                            )
                        )
                        eq_upper_ok = (rep_j.upper == VERDICT_EQUALITY) == eq_upper_pred
                    purity_ok = True
                    if resolution == "minimal" and is_pure(
                        hochster_betti(joined, field)
                    ):
                        decomp_a = boundary_join_decomposition(a)
                        decomp_b = boundary_join_decomposition(b)
                        purity_ok = (
                            decomp_a is not None
                            and decomp_b is not None
                            and decomp_a[0] == decomp_b[0]
                        )
                    ok = (
                        joins_ok
                        and upper_transfer
                        and lower_transfer
                        and eq_lower_ok
                        and eq_upper_ok
                        and purity_ok
                    )
                    record = _report_record(rep_j)
                    record["joins-ok"] = joins_ok
                    record["upper-transfer"] = upper_transfer
                    record["lower-transfer"] = lower_transfer
                    record["equality-iff-lower"] = eq_lower_ok
                    record["equality-iff-upper"] = eq_upper_ok
                    record["purity-family-ok"] = purity_ok
                    key = f"{form_a.key()}*{form_b.key()}|{field}|{resolution}"
                    yield key, record, ok


def _balanced_equality_family(complex_: SimplicialComplex) -> bool:
    """The upper-equality family for completely balanced complexes.

    Equality forces the complex to be the join of its color classes with a
    pure resolution; point classes make that a simplex joined with either
    disjoint point pairs (a cross-polytope boundary, possibly one pair) or
    a single class of three isolated points.
    """
    decomp = boundary_join_decomposition(complex_)
    if decomp is not None and decomp[0] in (0, 2):
        return True
    apexes = is_cone(complex_)
    if len(apexes) == complex_.n:
        return True
    core = (
        induced(complex_, complex_.vertices - apexes) if apexes else complex_
    )
    return core.dim == 0 and core.n == 3


def _drive_balanced(config: SweepConfig) -> Iterator[Instance]:
    """Balanced complexes: upper bound for caps <= 4; the lower bound for
    Cohen-Macaulay completely balanced complexes with n >= 3d.

    Only completely balanced instances are swept exhaustively; equality in
    the upper bound must land in the color-class join family.
    """
    limit = min(config.max_vertices, MAX_COMPLEX_VERTICES)
    stream: list[SimplicialComplex] = list(_complex_stream(limit))
    if config.max_vertices >= 7:
        stream.extend(k for k in flag_complexes(7))
    for complex_ in stream:
        d = complex_.dim + 1
        witness = is_balanced(complex_, (1,) * d)
        if witness is None:
            continue
        form = canonical_form(complex_)
        for field in config.fields:
            report = verify_bounds(complex_, "taylor", field, config.max_lattice)
            ok = _verdict_ok(report.upper)
            family_ok = True
            if report.upper == VERDICT_EQUALITY:
                family_ok = _balanced_equality_family(complex_)
            lower_applies = report.cm and complex_.n >= 3 * d
            lower_ok = True
            chain_ok = True
            if lower_applies:
                lower_ok = _verdict_ok(report.lower)
                if report.c >= 1:
                    mins, _ = complex_shifts(
                        complex_, report.c, "taylor", field, config.max_lattice
                    )
                    chain_ok = all(
                        mins.at(r) <= r + 1 for r in range(1, report.c + 1)
                    )
            ok = ok and family_ok and lower_ok and chain_ok
            record = _report_record(report)
            record["equality-family-ok"] = family_ok
            record["balanced-lower-applies"] = lower_applies
            record["balanced-lower-ok"] = lower_ok
            record["support-chain-ok"] = chain_ok
            yield f"{form.key()}|{field}", record, ok


def _drive_union(config: SweepConfig) -> Iterator[Instance]:
    """Sharpened union inequality over every induced decomposition.

    For each enumerated complex and every pair of proper vertex subsets
    that cover it with mutually non-contained induced factors, the branch
    inequality must hold, and plain equality with the upper bound must
    come with all three necessary conditions.
    """
    for n in range(1, min(config.max_vertices, MAX_COMPLEX_VERTICES) + 1):
        for complex_ in enum_complexes(n):
            if complex_.is_simplex():
                continue
            form = canonical_form(complex_)
            verts = sorted(complex_.vertices)
            pos = {v: i for i, v in enumerate(verts)}
            facet_masks = [sum(1 << pos[v] for v in f) for f in complex_.facets]
            full = (1 << n) - 1
            for amask in range(1, full):
                rest = full & ~amask
                sub = amask
                while True:
                    bmask = rest | sub
                    if bmask != full and amask < bmask:
                        if all(
                            fm & ~amask == 0 or fm & ~bmask == 0 for fm in facet_masks
                        ):
                            yield from _union_pair(
                                config, complex_, form, verts, amask, bmask
                            )
                    if sub == 0:
                        break
                    sub = (sub - 1) & amask


def _union_pair(
    config: SweepConfig,
    complex_: SimplicialComplex,
    form: CanonicalForm,
    verts: list[int],
    amask: int,
    bmask: int,
) -> Iterator[Instance]:
    aset = {verts[i] for i in range(len(verts)) if (amask >> i) & 1}
    bset = {verts[i] for i in range(len(verts)) if (bmask >> i) & 1}
    part_a = induced(complex_, aset)
    part_b = induced(complex_, bset)
    for field in config.fields:
        for resolution in config.resolutions:
            try:
                report = check_union_inequality(
                    part_a, part_b, resolution, field, config.max_lattice
                )
            except PreconditionError:
                continue
            if report.union_branch == "equal-dims" and not report.union_hypothesis:
                continue
            conditions_ok = True
            if report.e == report.upper_value:
                conditions_ok = all(report.union_conditions.values())
            ok = _verdict_ok(report.upper) and conditions_ok
            record = _report_record(report)
            record["branch"] = report.union_branch
            record["sharp-bound"] = str(report.union_sharp_bound)
            record["equality-conditions-ok"] = conditions_ok
            key = f"{form.key()}#{amask:x}:{bmask:x}|{field}|{resolution}"
            yield key, record, ok


def _drive_almost_quadratic(config: SweepConfig) -> Iterator[Instance]:
    """One high-degree generator plus quadratic generators: upper bound holds.

    Exhaustive over edge sets for up to 5 variables; deterministic seeded
    samples plus the empty and complete edge sets for 6 and 7 variables.
    """
    rng = random.Random(config.seed)
    seen: set[str] = set()
    limit = min(config.max_vertices, 7)
    for n in range(3, limit + 1):
        for t in range(3, min(5, n) + 1):
            head = squarefree_monomial(range(1, t + 1), n)
            pool = [
                (i, j)
                for i in range(1, n + 1)
                for j in range(i + 1, n + 1)
                if not (j <= t)
            ]
            if n <= 5:
                subsets: Iterator[tuple[tuple[int, int], ...]] = (
                    tuple(p for bit, p in enumerate(pool) if (mask >> bit) & 1)
                    for mask in range(1 << len(pool))
                )
            else:
                chosen = [(), tuple(pool)]
                for _ in range(config.samples):
                    chosen.append(
                        tuple(p for p in pool if rng.random() < 0.5)
                    )
                subsets = iter(chosen)
            for edges in subsets:
                gens = [head] + [squarefree_monomial(pair, n) for pair in edges]
                ideal = minimalize(gens, n)
                form = canonical_form(from_squarefree_ideal(ideal))
                key = f"{form.key()}|t={t}"
                if key in seen:
                    continue
                seen.add(key)
                report = verify_bounds(
                    ideal, "taylor", config.fields[0], config.max_lattice
                )
                yield key, _report_record(report), _verdict_ok(report.upper)


def _increasing_shift_laws(
    ideal: MonomialIdeal, max_lattice: int, squarefree: bool
) -> tuple[bool, bool]:
    """Check the two shift-growth clauses along the full Taylor sequence."""
    length = len(ideal)
    _, maxs = taylor_shifts(ideal, length, max_lattice)
    appearing = set()
    for g in ideal:
        appearing |= g.support
    r = len(appearing)
    clause1 = True
    clause2 = True
    for i in range(1, length):
        if maxs.at(i) < r and not maxs.at(i + 1) > maxs.at(i):
            clause1 = False
        if squarefree and maxs.at(i) == r and maxs.at(i + 1) != r:
            clause2 = False
    return clause1, clause2


def _random_general_ideal(rng: random.Random) -> MonomialIdeal:
    n = rng.randint(2, 5)
    count = rng.randint(1, 8)
    gens = []
    for _ in range(count):
        exps = [0] * n
        while sum(exps) == 0:
            exps = [rng.randint(0, 3) for _ in range(n)]
        gens.append(Monomial(tuple(exps)))
    return minimalize(gens, n)


def _drive_incm(config: SweepConfig) -> Iterator[Instance]:
    """Maximal-shift growth: strict growth below r, absorption at r.

    Exhaustive over squarefree ideals of enumerated complexes (both
    clauses) plus seeded random general ideals (strict-growth clause only:
    lcm degrees can exceed the appearing-variable count without
    squarefreeness).
    """
    for complex_ in _complex_stream(min(config.max_vertices, MAX_COMPLEX_VERTICES)):
        if complex_.is_simplex():
            continue
        form = canonical_form(complex_)
        ideal = nonfaces_ideal(complex_)
        clause1, clause2 = _increasing_shift_laws(ideal, config.max_lattice, True)
        record = {
            "input": form.key(),
            "strict-growth-ok": clause1,
            "absorption-ok": clause2,
        }
        yield form.key(), record, clause1 and clause2
    rng = random.Random(config.seed)
    seen: set[str] = set()
    for index in range(config.samples):
        ideal = _random_general_ideal(rng)
        key = "general:" + ",".join(
            "".join(str(e) for e in g.exponents) for g in ideal
        )
        if key in seen:
            continue
        seen.add(key)
        clause1, _ = _increasing_shift_laws(ideal, config.max_lattice, False)
        record = {"input": key, "strict-growth-ok": clause1, "sample": index}
        yield key, record, clause1


def _drive_homred(config: SweepConfig) -> Iterator[Instance]:
    """Vertex-deletion reduction: averaging identity, premise, and transfer.

    The averaging identity must hold for every non-simplex; non-cones with
    n >= 3d must have top Taylor shift n; when the reduction applies and
    every deletion satisfies the upper bound, the complex must too.
    """
    for complex_ in _complex_stream(min(config.max_vertices, MAX_COMPLEX_VERTICES)):
        if complex_.is_simplex():
            continue
        form = canonical_form(complex_)
        for resolution in config.resolutions:
            cert = homred_applicable(
                complex_, resolution, config.fields[0], config.max_lattice
            )
            n3d_applies = (
                resolution == "taylor"
                and not is_cone(complex_)
                and complex_.n >= 3 * (complex_.dim + 1)
            )
            n3d_ok = cert.top_shift_is_n if n3d_applies else True
            transfer_ok = True
            if cert.applicable:
                report = verify_bounds(
                    complex_, resolution, config.fields[0], config.max_lattice
                )
                if report.upper == VERDICT_FAILS:
                    deletions_hold = all(
                        _verdict_ok(
                            verify_bounds(
                                delete_vertex(complex_, v),
                                resolution,
                                config.fields[0],
                                config.max_lattice,
                            ).upper
                        )
                        for v in sorted(complex_.vertices)
                    )
                    transfer_ok = not deletions_hold
            ok = cert.identity_holds and n3d_ok and transfer_ok
            record = {
                "input": form.key(),
                "resolution": resolution,
                "applicable": cert.applicable,
                "identity-ok": cert.identity_holds,
                "top-shift-is-n": cert.top_shift_is_n,
                "n3d-applies": n3d_applies,
            }
            yield f"{form.key()}|{resolution}", record, ok


def _drive_equality(config: SweepConfig) -> Iterator[Instance]:
    """Attainment families: a bound is attained iff the classifier matches.

    Codimension-0 simplexes are excluded: both bounds degenerate to the
    empty product there and the families are stated for proper ideals.
    """
    for complex_ in _flag_stream(config.max_vertices):
        if complex_.is_simplex():
            continue
        form = canonical_form(complex_)
        for field in config.fields:
            report = verify_bounds(complex_, "taylor", field, config.max_lattice)
            upper_class = classify_upper_equality(complex_)
            upper_ok = (report.upper == VERDICT_EQUALITY) == (not upper_class.is_none)
            lower_ok = True
            lower_tag = None
            if report.cm:
                lower_class = classify_lower_equality(complex_, field)
                lower_tag = lower_class.tag
                lower_ok = (report.lower == VERDICT_EQUALITY) == (
                    not lower_class.is_none
                )
            record = _report_record(report)
            record["upper-family"] = upper_class.tag
            record["lower-family"] = lower_tag
            yield f"{form.key()}|{field}", record, upper_ok and lower_ok


def _drive_turan(config: SweepConfig) -> Iterator[Instance]:
    """Generator-count lower bound 3n'^2/(8d) for flag complexes, n' > 4d."""
    for complex_ in _flag_stream(min(config.max_vertices, MAX_GRAPH_VERTICES)):
        n = complex_.n
        d_values = list(range(complex_.dim + 1, (n - 1) // 4 + 1))
        if not d_values:
            continue
        form = canonical_form(complex_)
        gens = len(minimal_nonfaces(complex_))
        ok = all(gens >= Fraction(3 * n * n, 8 * d) for d in d_values)
        record = {
            "input": form.key(),
            "generators": gens,
            "d-values": d_values,
        }
        yield form.key(), record, ok


def _drive_huneke_miller(config: SweepConfig) -> Iterator[Instance]:
    """Pure minimal resolution + Cohen-Macaulay forces e = product(m_i)/c!."""
    for complex_ in _complex_stream(min(config.max_vertices, MAX_COMPLEX_VERTICES)):
        form = canonical_form(complex_)
        for field in config.fields:
            ok = huneke_miller_check(complex_, field)
            cm = is_cohen_macaulay(complex_, field)
            pure = (
                is_pure(hochster_betti(complex_, field))
                if not complex_.is_simplex()
                else True
            )
            record = {
                "input": form.key(),
                "field": str(field),
                "cm": cm,
                "pure": pure,
                "e": multiplicity(complex_),
            }
            yield f"{form.key()}|{field}", record, ok


def _drive_dominance(config: SweepConfig) -> Iterator[Instance]:
    """Minimal Betti data is dominated by Taylor data, entry by entry."""
    for complex_ in _complex_stream(min(config.max_vertices, MAX_COMPLEX_VERTICES)):
        if complex_.is_simplex():
            continue
        form = canonical_form(complex_)
        ideal = nonfaces_ideal(complex_)
        taylor_table = taylor_betti(ideal, config.max_subsets)
        rows = None
        for field in config.fields:
            minimal_table = hochster_betti(complex_, field)
            betti_ok = taylor_table.dominates(minimal_table)
            rows = minimal_table.length
            mins_min, maxs_min = extremal_shifts(minimal_table, rows)
            mins_tay, maxs_tay = taylor_shifts(ideal, rows, config.max_lattice)
            shifts_ok = all(
                mins_min.at(i) >= mins_tay.at(i) and maxs_min.at(i) <= maxs_tay.at(i)
                for i in range(1, rows + 1)
            )
            record = {
                "input": form.key(),
                "field": str(field),
                "betti-dominated": betti_ok,
                "shifts-dominated": shifts_ok,
                "rows": rows,
            }
            yield f"{form.key()}|{field}", record, betti_ok and shifts_ok


SWEEP_DRIVERS: dict[str, Driver] = {
    "quad": _drive_quad,
    "flag-lb": _drive_flag_lb,
    "flag-ub": _drive_flag_ub,
    "tensor": _drive_tensor,
    "balanced": _drive_balanced,
    "union": _drive_union,
    "almost-quadratic": _drive_almost_quadratic,
    "incm": _drive_incm,
    "homred": _drive_homred,
    "equality": _drive_equality,
    "turan": _drive_turan,
    "huneke-miller": _drive_huneke_miller,
    "dominance": _drive_dominance,
}


# --- the sweep runner --------------------------------------------------------------


def _load_ledger(path: Path, theorem: str) -> dict[str, dict]:
    done: dict[str, dict] = {}
    if not path.exists():
        return done
    for raw in path.read_text().splitlines():
        line = raw.strip()
        if not line:
            continue
        try:
            entry = json.loads(line)
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad ledger line: {exc}") from exc
        if entry.get("incomplete"):
            continue
        if entry.get("theorem") != theorem:
            raise ParseError(
                f"ledger belongs to theorem {entry.get('theorem')!r}, not {theorem!r}"
            )
        if "canonical" in entry:
            done[entry["canonical"]] = entry
    return done


def sweep(config: SweepConfig) -> SweepResult:
    """Run one theorem sweep, appending a ledger line per instance.

    Re-running against an existing ledger skips finished instances and
    finishes with an identical, canonically sorted file.  A recorded or
    fresh counterexample halts with CounterexampleError; a budget error
    leaves the ledger flagged incomplete.
    """
    if config.theorem not in SWEEP_DRIVERS:
        known = ", ".join(sorted(SWEEP_DRIVERS))
        raise PreconditionError(
            f"unknown theorem {config.theorem!r}; known sweeps: {known}"
        )
    driver = SWEEP_DRIVERS[config.theorem]
    path = Path(config.out) if config.out else None
    done = _load_ledger(path, config.theorem) if path else {}
    for key, entry in done.items():
        if entry.get("ok") is False:
            raise CounterexampleError(config.theorem, key, entry)
    lines: dict[str, dict] = dict(done)
    skipped = 0
    handle = path.open("a") if path else None
    complete = True
    try:
        for key, record, ok in driver(config):
            if key in done:
                skipped += 1
                continue
            entry = {
                **record,
                "ok": ok,
                "canonical": key,
                "theorem": config.theorem,
            }
            lines[key] = entry
            if handle:
                handle.write(json.dumps(entry, separators=(",", ":")) + "\n")
                handle.flush()
            if not ok:
                raise CounterexampleError(config.theorem, key, entry)
    except ResourceLimitError as exc:
        complete = False
        if handle:
            handle.write(
                json.dumps(
                    {
                        "incomplete": True,
                        "theorem": config.theorem,
                        "budget": exc.budget,
                        "limit": exc.limit,
                    },
                    separators=(",", ":"),
                )
                + "\n"
            )
    finally:
        if handle:
            handle.close()
    if complete and path:
        ordered = [lines[k] for k in sorted(lines)]
        with path.open("w") as out:
            for entry in ordered:
                out.write(json.dumps(entry, separators=(",", ":")) + "\n")
    return SweepResult(
        theorem=config.theorem,
        instances=len(lines),
        skipped=skipped,
        complete=complete,
        ledger_path=str(path) if path else None,
    )
