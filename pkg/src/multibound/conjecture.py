"""Bound verdicts: multiplicity against the shift-product bounds.

The upper bound says e <= M_1...M_c / c!; the lower bound says
e >= m_1...m_c / c! and is asserted only for Cohen-Macaulay inputs.
This module evaluates both with exact rationals, tests Cohen-Macaulayness
by link homology, classifies the flag complexes attaining either bound,
and implements the reduction checks for joins, unions, and vertex
deletions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from typing import Iterable

from .complexes import (
    SimplicialComplex,
    codimension,
    delete_vertex,
    f_vector,
    from_squarefree_ideal,
    induced,
    intersection,
    is_cone,
    is_flag,
    link,
    minimal_nonfaces,
    multiplicity,
    union,
)
from .errors import PreconditionError, ZeroIdealError
from .homology import QQ, FieldSpec, reduced_homology
from .monomials import MonomialIdeal, is_squarefree, polarize
from .shifts import (
    DEFAULT_MAX_LATTICE,
    ShiftSequence,
    bound_value,
    check_resolution,
    complex_shifts,
    extremal_shifts,
    hochster_betti,
    is_pure,
)

EQUALITY_TAGS = (
    "two-isolated-vertices",
    "three-isolated-vertices",
    "path-length-four",
    "six-vertex-strip",
    "cross-polytope-boundary",
    "none",
)

VERDICT_HOLDS = "holds"
VERDICT_EQUALITY = "equality"
VERDICT_FAILS = "fails"
VERDICT_NOT_APPLICABLE = "not-applicable"


@dataclass(frozen=True)
class EqualityClass:
    """Which bound-attaining family a flag complex belongs to, if any.

    Every family is listed up to joining with a simplex; the stripped apex
    count is reported separately so the tag names the cone-free core.  The
    boundary of the k-fold cross polytope carries its k; at k = 1 it is
    reported as two isolated vertices.
    """

    tag: str
    simplex_vertices: int = 0
    k: int | None = None

    def __post_init__(self) -> None:
        if self.tag not in EQUALITY_TAGS:
            raise PreconditionError(f"unknown equality tag {self.tag!r}")

    @property
    def is_none(self) -> bool:
        return self.tag == "none"

    def __str__(self) -> str:
        body = self.tag
        if self.k is not None:
            body += f"(k={self.k})"
        if self.simplex_vertices and not self.is_none:
            body += f" joined with a simplex on {self.simplex_vertices} vertices"
        return body


@dataclass(frozen=True)
class Report:
    """Verdicts and exact bound data for one input.

    `upper`/`lower` use the literals holds/equality/fails, with
    not-applicable for the lower bound on non-Cohen-Macaulay input.  Union
    checks additionally populate z and the union_* diagnostics; the JSON
    document keeps the fixed schema and omits the diagnostics.
    """

    input: str
    field: FieldSpec
    resolution: str
    c: int
    e: int
    lower_value: Fraction
    upper_value: Fraction
    cm: bool
    upper: str
    lower: str
    t: int | None
    z: int | None = None
    eq_class: EqualityClass | None = None
    union_branch: str | None = None
    union_hypothesis: bool | None = None
    union_sharp_bound: Fraction | None = None
    union_conditions: dict | None = None

    def all_applicable_hold(self) -> bool:
        ok_upper = self.upper in (VERDICT_HOLDS, VERDICT_EQUALITY)
        ok_lower = self.lower != VERDICT_FAILS
        return ok_upper and ok_lower

    def to_json_dict(self) -> dict:
        return {
            "input": self.input,
            "field": str(self.field),
            "resolution": self.resolution,
            "c": self.c,
            "e": self.e,
            "L": str(self.lower_value),
            "U": str(self.upper_value),
            "cm": self.cm,
            "upper": self.upper,
            "lower": self.lower,
            "t": self.t,
            "z": self.z,
            "class": self.eq_class.tag if self.eq_class is not None else "none",
        }


@dataclass(frozen=True)
class HomRedCertificate:
    """Premise checks and the averaging identity for vertex deletion.

    The reduction needs M_{n-d} = n and, for every vertex v, dominated
    maximal shifts of K - v through row n-d-1.  The certificate also
    carries both sides of the unconditional averaging identity
    (1/(n-d)) * sum_v f_{d-1}(K - v) = f_{d-1}(K).
    """

    applicable: bool
    top_shift_is_n: bool
    deletions_dominated: bool
    average: Fraction
    top_faces: int

    @property
    def identity_holds(self) -> bool:
        return self.average == self.top_faces


# --- input echoes ----------------------------------------------------------------


def compact_facets(complex_: SimplicialComplex) -> str:
    return " | ".join(" ".join(str(v) for v in sorted(f)) for f in complex_.facets)


def compact_ideal(ideal: MonomialIdeal) -> str:
    gens = ", ".join(str(g) for g in ideal) or "0"
    return f"vars: {ideal.ambient_vars}; {gens}"


# --- Cohen-Macaulay and codimension ----------------------------------------------


@lru_cache(maxsize=None)
def is_cohen_macaulay(complex_: SimplicialComplex, field: FieldSpec = QQ) -> bool:
    """Reisner's criterion: every face's link has homology only in top degree.

    Field-dependent (the 6-vertex projective plane passes over Q and fails
    over GF(2)).  Impure complexes fail immediately.
    """
    d = complex_.dim + 1
    if any(len(f) != d for f in complex_.facets):
        return False
    if d == 1:
        return True
    # The empty face counts: its link is the whole complex.
    candidates = [frozenset()] + [f for f in complex_.faces() if len(f) <= d - 2]
    for face in candidates:
        lk = link(complex_, face)
        dims = reduced_homology(lk, field).dims
        if any(dims[:-1]):
            return False
    return True


def ideal_codimension(ideal: MonomialIdeal) -> int:
    """Codimension (height) of a monomial ideal: least hitting set of supports.

    The minimal primes of a monomial ideal are generated by variable sets
    meeting every generator's support, so the height is the minimum size of
    such a set; found by exact branch and bound.
    """
    if ideal.is_zero():
        return 0
    supports = sorted({g.support for g in ideal}, key=lambda s: (len(s), sorted(s)))
    chosen: set[int] = set()
    for s in supports:
        if not (s & chosen):
            chosen.add(min(s))
    best = len(chosen)

    def search(cover: frozenset[int]) -> None:
        nonlocal best
        if len(cover) >= best:
            return
        target = None
        for s in supports:
            if not (s & cover):
                target = s
                break
        if target is None:
            best = len(cover)
            return
        for v in sorted(target):
            search(cover | {v})

    search(frozenset())
    return best


# --- bound verdicts --------------------------------------------------------------


def _verdict_upper(e: int, bound: Fraction) -> str:
    if e == bound:
        return VERDICT_EQUALITY
    return VERDICT_HOLDS if e < bound else VERDICT_FAILS


def _verdict_lower(e: int, bound: Fraction, cm: bool) -> str:
    if not cm:
        return VERDICT_NOT_APPLICABLE
    if e == bound:
        return VERDICT_EQUALITY
    return VERDICT_HOLDS if e > bound else VERDICT_FAILS


def verify_bounds(
    obj: "MonomialIdeal | SimplicialComplex",
    resolution: str = "taylor",
    field: FieldSpec = QQ,
    max_lattice: int = DEFAULT_MAX_LATTICE,
) -> Report:
    """Evaluate both multiplicity bounds for an ideal or a complex.

    Non-squarefree ideals are polarized first; multiplicity and codimension
    are read off the polarization, which preserves both along with all
    Betti data.  A full simplex (codimension 0) gets the empty-product
    convention L = U = 1 = e.
    """
    check_resolution(resolution)
    if isinstance(obj, MonomialIdeal):
        if obj.is_zero():
            raise ZeroIdealError("bounds are stated for nonzero proper ideals")
        input_str = compact_ideal(obj)
        square = obj if is_squarefree(obj) else polarize(obj)
        complex_ = from_squarefree_ideal(square)
    else:
        complex_ = obj
        input_str = compact_facets(obj)
    c = codimension(complex_)
    e = multiplicity(complex_)
    cm = is_cohen_macaulay(complex_, field)
    if c == 0:
        low = up = Fraction(1)
        t = None
    else:
        mins, maxs = complex_shifts(complex_, c, resolution, field, max_lattice)
        low = bound_value(mins)
        up = bound_value(maxs)
        t = maxs.at(c) - c - 1
    upper = _verdict_upper(e, up)
    lower = _verdict_lower(e, low, cm)
    eq_class: EqualityClass | None = None
    if is_flag(complex_):
        if upper == VERDICT_EQUALITY:
            eq_class = classify_upper_equality(complex_)
        elif lower == VERDICT_EQUALITY:
            eq_class = classify_lower_equality(complex_, field)
    return Report(
        input=input_str,
        field=field,
        resolution=resolution,
        c=c,
        e=e,
        lower_value=low,
        upper_value=up,
        cm=cm,
        upper=upper,
        lower=lower,
        t=t,
        eq_class=eq_class,
    )


def huneke_miller_check(complex_: SimplicialComplex, field: FieldSpec = QQ) -> bool:
    """e = m_1...m_c / c! whenever the minimal resolution is pure and CM.

    Vacuously true when the premise fails; the codimension-0 simplex uses
    the empty-product convention.
    """
    c = codimension(complex_)
    e = multiplicity(complex_)
    if c == 0:
        return e == 1
    if not is_cohen_macaulay(complex_, field):
        return True
    table = hochster_betti(complex_, field)
    if not is_pure(table):
        return True
    mins, _ = extremal_shifts(table, c)
    return e == bound_value(mins)


# --- equality classification -----------------------------------------------------


def _strip_cone(complex_: SimplicialComplex) -> tuple[int, SimplicialComplex | None]:
    apexes = is_cone(complex_)
    if len(apexes) == complex_.n:
        return complex_.n, None
    if apexes:
        return len(apexes), induced(complex_, complex_.vertices - apexes)
    return 0, complex_


def _matching_k(core: SimplicialComplex) -> int | None:
    """k when the minimal non-faces are a perfect matching on the vertices.

    A flag complex with that non-face pattern is exactly the boundary of
    the k-fold cross polytope (the join of k pairs of points).
    """
    nonfaces = minimal_nonfaces(core)
    if not nonfaces or any(len(p) != 2 for p in nonfaces):
        return None
    seen: set[int] = set()
    for p in nonfaces:
        if seen & p:
            return None
        seen |= p
    if seen != set(core.vertices):
        return None
    return len(nonfaces)


def _is_isolated_points(core: SimplicialComplex, count: int) -> bool:
    return core.n == count and core.dim == 0


def _is_path_on_four(core: SimplicialComplex) -> bool:
    if core.n != 4 or core.dim != 1 or len(core.facets) != 3:
        return False
    if any(len(f) != 2 for f in core.facets):
        return False
    degree: dict[int, int] = {v: 0 for v in core.vertices}
    for f in core.facets:
        for v in f:
            degree[v] += 1
    return sorted(degree.values()) == [1, 1, 2, 2]


_STRIP6 = SimplicialComplex([{1, 2, 3}, {2, 3, 4}, {3, 4, 5}, {4, 5, 6}])


def _isomorphic(a: SimplicialComplex, b: SimplicialComplex) -> bool:
    if a.n != b.n:
        return False
    if sorted(len(f) for f in a.facets) != sorted(len(f) for f in b.facets):
        return False
    src = sorted(a.vertices)
    targets = frozenset(b.facets)
    for perm in permutations(sorted(b.vertices)):
        relabel = dict(zip(src, perm))
        mapped = frozenset(frozenset(relabel[v] for v in f) for f in a.facets)
        if mapped == targets:
            return True
    return False


def classify_upper_equality(complex_: SimplicialComplex) -> EqualityClass:
    """Match against the families attaining the Taylor upper bound.

    After stripping cone apexes: two or three isolated vertices, or the
    boundary of a cross polytope (k >= 2).
    """
    if not is_flag(complex_):
        raise PreconditionError("equality classification assumes a flag complex")
    apex_count, core = _strip_cone(complex_)
    if core is None:
        return EqualityClass("none", simplex_vertices=apex_count)
    k = _matching_k(core)
    if k == 1:
        return EqualityClass("two-isolated-vertices", apex_count)
    if k is not None:
        return EqualityClass("cross-polytope-boundary", apex_count, k=k)
    if _is_isolated_points(core, 3):
        return EqualityClass("three-isolated-vertices", apex_count)
    return EqualityClass("none", apex_count)


def boundary_join_decomposition(
    complex_: SimplicialComplex,
) -> tuple[int, int] | None:
    """(a, k): the complex is a simplex joined with k simplex boundaries.

    A complex equals simplex * k copies of the boundary of a simplex on a
    vertices exactly when its minimal non-faces are k pairwise disjoint
    a-sets (the uncovered vertices form the simplex factor).  A simplex
    itself gives (0, 0); None means no such decomposition.
    """
    nonfaces = minimal_nonfaces(complex_)
    if not nonfaces:
        return (0, 0)
    sizes = {len(nf) for nf in nonfaces}
    if len(sizes) != 1:
        return None
    covered: set[int] = set()
    for nf in nonfaces:
        if covered & nf:
            return None
        covered |= nf
    return (sizes.pop(), len(nonfaces))


def classify_lower_equality(
    complex_: SimplicialComplex, field: FieldSpec = QQ
) -> EqualityClass:
    """Match against the families attaining the Taylor lower bound.

    After stripping cone apexes: two or three isolated vertices, the path
    on four vertices, the six-vertex two-dimensional strip, or the boundary
    of a cross polytope (k >= 2).  Assumes flag and Cohen-Macaulay input.
    """
    if not is_flag(complex_):
        raise PreconditionError("equality classification assumes a flag complex")
    if not is_cohen_macaulay(complex_, field):
        raise PreconditionError(
            "lower-bound classification assumes a Cohen-Macaulay complex"
        )
    apex_count, core = _strip_cone(complex_)
    if core is None:
        return EqualityClass("none", simplex_vertices=apex_count)
    k = _matching_k(core)
    if k == 1:
        return EqualityClass("two-isolated-vertices", apex_count)
    if k is not None:
        return EqualityClass("cross-polytope-boundary", apex_count, k=k)
    if _is_isolated_points(core, 3):
        return EqualityClass("three-isolated-vertices", apex_count)
    if _is_path_on_four(core):
        return EqualityClass("path-length-four", apex_count)
    if _isomorphic(core, _STRIP6):
        return EqualityClass("six-vertex-strip", apex_count)
    return EqualityClass("none", apex_count)


# --- join equality conditions ----------------------------------------------------


def check_tensor_equality_conditions(
    m: "ShiftSequence | Iterable[int]",
    mp: "ShiftSequence | Iterable[int]",
    c: int,
    cp: int,
) -> bool:
    """True iff one integer a has m_i = a*i through c and m'_i = a*i through cp."""
    vals = tuple(m.values if isinstance(m, ShiftSequence) else m)[:c]
    valsp = tuple(mp.values if isinstance(mp, ShiftSequence) else mp)[:cp]
    if len(vals) < c or len(valsp) < cp:
        raise PreconditionError("sequences shorter than the requested prefixes")
    if not vals and not valsp:
        return True
    a = vals[0] if vals else valsp[0]
    return all(v == a * (i + 1) for i, v in enumerate(vals)) and all(
        v == a * (i + 1) for i, v in enumerate(valsp)
    )


# --- union reduction -------------------------------------------------------------


def _is_subcomplex(inner: SimplicialComplex, outer: SimplicialComplex) -> bool:
    return all(outer.has_face(f) for f in inner.facets)


def check_union_inequality(
    a: SimplicialComplex,
    b: SimplicialComplex,
    resolution: str = "taylor",
    field: FieldSpec = QQ,
    max_lattice: int = DEFAULT_MAX_LATTICE,
) -> Report:
    """Sharpened upper bound for a union of induced subcomplexes.

    With d - 1 the union's dimension and t its shift excess at the
    codimension row, z = (t + d - 1) - f_0(A intersect B).  Equal-dimension
    factors give e <= U - z under the hypothesis z >= 0; a lower-dimensional
    factor on n' vertices gives e <= U - n' + f_0 unconditionally.  The
    report's upper verdict grades the applicable sharpened inequality, and
    union_conditions records the necessary conditions for plain equality
    e = U (same dimensions, f_0 = d + t - 1, no top-dimensional face in the
    intersection).
    """
    check_resolution(resolution)
    if _is_subcomplex(a, b) or _is_subcomplex(b, a):
        raise PreconditionError("union factors must not contain one another")
    whole = union(a, b)
    if induced(whole, a.vertices) != a or induced(whole, b.vertices) != b:
        raise PreconditionError("union factors must be induced subcomplexes of the union")
    d = whole.dim + 1
    c = codimension(whole)
    e = multiplicity(whole)
    cm = is_cohen_macaulay(whole, field)
    mins, maxs = complex_shifts(whole, c, resolution, field, max_lattice)
    low = bound_value(mins)
    up = bound_value(maxs)
    t = maxs.at(c) - c - 1

    # Factor maximal shifts, through the factor's own codimension row, never
    # exceed the union's for these resolutions; verify rather than assume.
    for factor in (a, b):
        rows = min(c, codimension(factor))
        if rows == 0:
            continue
        _, fmax = complex_shifts(factor, rows, resolution, field, max_lattice)
        for i in range(1, rows + 1):
            if fmax.at(i) > maxs.at(i):
                raise PreconditionError(
                    f"maximal-shift domination fails at row {i} for a factor"
                )

    inter = intersection(a, b)
    f0 = inter.n if inter is not None else 0
    z = (t + d - 1) - f0
    same_dim = a.dim == b.dim
    if same_dim:
        branch = "equal-dims"
        hypothesis = f0 <= t + d - 1
        sharp = up - z
    else:
        branch = "lower-dim"
        hypothesis = True
        n_low = (b if b.dim < a.dim else a).n
        sharp = up - n_low + f0
    conditions = {
        "same-dimension": same_dim,
        "intersection-vertices-equal-t-plus-d-minus-1": f0 == t + d - 1,
        "no-top-dimensional-intersection-face": inter is None
        or all(len(f) < d for f in inter.facets),
    }
    return Report(
        input=f"{compact_facets(a)} + {compact_facets(b)}",
        field=field,
        resolution=resolution,
        c=c,
        e=e,
        lower_value=low,
        upper_value=up,
        cm=cm,
        upper=_verdict_upper(e, sharp),
        lower=_verdict_lower(e, low, cm),
        t=t,
        z=z,
        union_branch=branch,
        union_hypothesis=hypothesis,
        union_sharp_bound=sharp,
        union_conditions=conditions,
    )


# --- vertex-deletion reduction ---------------------------------------------------


def homred_applicable(
    complex_: SimplicialComplex,
    resolution: str = "taylor",
    field: FieldSpec = QQ,
    max_lattice: int = DEFAULT_MAX_LATTICE,
) -> HomRedCertificate:
    """Premises for reducing the upper bound to all one-vertex deletions."""
    check_resolution(resolution)
    n = complex_.n
    d = complex_.dim + 1
    if n <= d:
        raise PreconditionError("vertex-deletion reduction needs n > d (not a simplex)")
    c = n - d
    _, maxs = complex_shifts(complex_, c, resolution, field, max_lattice)
    top_ok = maxs.at(c) == n
    deletions_ok = True
    rows = c - 1
    total = 0
    for v in sorted(complex_.vertices):
        deleted = delete_vertex(complex_, v)
        total += f_vector(deleted).f(d - 1)
        if rows >= 1 and deletions_ok:
            _, dmax = complex_shifts(deleted, rows, resolution, field, max_lattice)
            if any(dmax.at(i) > maxs.at(i) for i in range(1, rows + 1)):
                deletions_ok = False
    top = multiplicity(complex_)
    return HomRedCertificate(
        applicable=top_ok and deletions_ok,
        top_shift_is_n=top_ok,
        deletions_dominated=deletions_ok,
        average=Fraction(total, c),
        top_faces=top,
    )
