"""Shift sequences and Betti tables for monomial ideals and complexes.

Taylor data comes from generator subsets: beta_{i,j} counts the size-i
subsets whose lcm has degree j, and shift row i holds the min/max lcm degree
over size-i subsets.  Full tables enumerate all 2^r subsets under an
explicit budget; the shift rows alone are computed by a dynamic program on
the lcm lattice, which stays small even when 2^r does not.  Minimal
resolution data comes from Hochster's formula, summing reduced homology of
induced subcomplexes.

All arithmetic is exact: integers and fractions.Fraction throughout.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterable, Iterator, Mapping

from .complexes import SimplicialComplex, codimension, nonfaces_ideal
from .errors import (
    MalformedTableError,
    PreconditionError,
    ResourceLimitError,
    UndefinedCodimensionRowError,
    ZeroIdealError,
)
from .homology import QQ, FieldSpec, subcomplex_profiles
from .monomials import MonomialIdeal, is_squarefree

DEFAULT_MAX_SUBSETS = 1 << 20
DEFAULT_MAX_LATTICE = 1 << 20

RESOLUTIONS = ("taylor", "minimal")


def check_resolution(kind: str) -> str:
    if kind not in RESOLUTIONS:
        raise PreconditionError(
            f"unknown resolution {kind!r} (expected taylor or minimal)"
        )
    return kind


class ShiftSequence:
    """Positive integers indexed by homological position 1..len.

    `at(i)` uses the mathematical 1-based position; `values` is the plain
    tuple.  Monotonicity laws (strict increase for minimal resolutions,
    the saturation law for Taylor maxima) are theorems about particular
    sources of sequences and are tested, not enforced here.
    """

    __slots__ = ("_values",)

    def __init__(self, values: Iterable[int]):
        vals = tuple(values)
        for v in vals:
            if not isinstance(v, int) or v <= 0:
                raise PreconditionError(f"shift values must be positive integers, got {v!r}")
        self._values = vals

    @property
    def values(self) -> tuple[int, ...]:
        return self._values

    def at(self, i: int) -> int:
        """The shift at 1-based position i."""
        if not 1 <= i <= len(self._values):
            raise MalformedTableError(f"no shift at position {i} (length {len(self._values)})")
        return self._values[i - 1]

    def prefix(self, k: int) -> "ShiftSequence":
        if k > len(self._values):
            raise MalformedTableError(f"no prefix of length {k} (length {len(self._values)})")
        return ShiftSequence(self._values[:k])

    def __len__(self) -> int:
        return len(self._values)

    def __iter__(self) -> Iterator[int]:
        return iter(self._values)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, ShiftSequence):
            return self._values == other._values
        if isinstance(other, tuple):
            return self._values == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._values)

    def __repr__(self) -> str:
        return f"ShiftSequence({self._values})"

    def __str__(self) -> str:
        return "(" + ", ".join(str(v) for v in self._values) + ")"


class BettiTable:
    """Map (homological position i, internal degree j) -> multiplicity.

    Only nonzero entries are stored; `length` is the largest i present
    (0 for the empty table of the zero ideal).  Minimal-resolution tables
    satisfy j > i at every entry for the ideals here; Taylor tables need
    not (many small generators can share a low-degree lcm), so no j-vs-i
    relation is enforced at construction.
    """

    __slots__ = ("_entries",)

    def __init__(self, entries: Mapping[tuple[int, int], int]):
        clean: dict[tuple[int, int], int] = {}
        for (i, j), b in entries.items():
            if b == 0:
                continue
            if i < 1 or j < 1 or b < 0:
                raise MalformedTableError(f"bad table entry ({i}, {j}) -> {b}")
            clean[(i, j)] = b
        self._entries = clean

    @property
    def length(self) -> int:
        return max((i for i, _ in self._entries), default=0)

    def betti(self, i: int, j: int) -> int:
        return self._entries.get((i, j), 0)

    def row(self, i: int) -> dict[int, int]:
        return {j: b for (i2, j), b in self._entries.items() if i2 == i}

    def items(self) -> list[tuple[int, int, int]]:
        return sorted((i, j, b) for (i, j), b in self._entries.items())

    def total(self) -> int:
        return sum(self._entries.values())

    def dominates(self, other: "BettiTable") -> bool:
        """Entrywise >= against another table."""
        return all(self.betti(i, j) >= b for (i, j), b in other._entries.items())

    def to_json_dict(self) -> dict:
        return {
            "length": self.length,
            "entries": [[i, j, b] for i, j, b in self.items()],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "BettiTable":
        try:
            entries = {(int(i), int(j)): int(b) for i, j, b in data["entries"]}
            table = cls(entries)
            if table.length != int(data["length"]):
                raise MalformedTableError(
                    f"declared length {data['length']} != actual {table.length}"
                )
        except (KeyError, TypeError, ValueError) as exc:
            raise MalformedTableError(f"bad Betti table document: {exc}") from exc
        return table

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BettiTable):
            return NotImplemented
        return self._entries == other._entries

    def __repr__(self) -> str:
        return f"BettiTable({self._entries!r})"


# --- Taylor data -----------------------------------------------------------------


def _support_masks(ideal: MonomialIdeal) -> list[int]:
    masks = []
    for g in ideal:
        m = 0
        for v in g.support:
            m |= 1 << (v - 1)
        masks.append(m)
    return masks


def _count_squarefree_dp(masks: list[int], counts: dict[tuple[int, int], int]) -> None:
    """Knapsack over generators: per or-mask, count subsets of each size.

    Work is (number of reachable or-masks) x r per generator instead of 2^r,
    which wins whenever the generators live on few variables.
    """
    r = len(masks)
    dp: dict[int, list[int]] = {0: [1] + [0] * r}
    for m in masks:
        for mask, vec in list(dp.items()):
            target = dp.get(mask | m)
            if target is None:
                target = [0] * (r + 1)
                dp[mask | m] = target
            for s in range(r - 1, -1, -1):
                if vec[s]:
                    target[s + 1] += vec[s]
    for mask, vec in dp.items():
        degree = mask.bit_count()
        for s in range(1, r + 1):
            if vec[s]:
                key = (s, degree)
                counts[key] = counts.get(key, 0) + vec[s]


def _count_squarefree(masks: list[int], counts: dict[tuple[int, int], int]) -> None:
    """Tally (subset size, lcm degree) over all nonempty generator subsets.

    Chooses the or-mask knapsack when the variable count makes it cheaper;
    otherwise splits the generators into a head explored by recursion and a
    tail of up to 8 whose subset or-masks are precomputed, so the inner loop
    is flat.
    """
    r = len(masks)
    bits = max((m.bit_length() for m in masks), default=0)
    if r >= 2 and bits <= 16 and (1 << bits) * r * (r + 1) < (1 << r):
        _count_squarefree_dp(masks, counts)
        return
    tail_n = min(8, r)
    head = masks[: r - tail_n]
    tail = masks[r - tail_n :]
    combos = []
    for s in range(1 << tail_n):
        m = 0
        for b in range(tail_n):
            if s >> b & 1:
                m |= tail[b]
        combos.append((s.bit_count(), m))

    def leaf(size: int, orm: int) -> None:
        get = counts.get
        for ts, tm in combos:
            total = size + ts
            if total:
                key = (total, (orm | tm).bit_count())
                counts[key] = get(key, 0) + 1

    def rec(idx: int, size: int, orm: int) -> None:
        if idx == len(head):
            leaf(size, orm)
            return
        rec(idx + 1, size, orm)
        rec(idx + 1, size + 1, orm | head[idx])

    rec(0, 0, 0)


def _count_general(ideal: MonomialIdeal, counts: dict[tuple[int, int], int]) -> None:
    gens = [g.exponents for g in ideal]
    n = ideal.ambient_vars

    def rec(idx: int, size: int, exps: tuple[int, ...]) -> None:
        if idx == len(gens):
            if size:
                key = (size, sum(exps))
                counts[key] = counts.get(key, 0) + 1
            return
        rec(idx + 1, size, exps)
        g = gens[idx]
        rec(idx + 1, size + 1, tuple(max(exps[t], g[t]) for t in range(n)))

    rec(0, 0, (0,) * n)


@lru_cache(maxsize=16384)
def taylor_betti(ideal: MonomialIdeal, max_subsets: int = DEFAULT_MAX_SUBSETS) -> BettiTable:
    """beta_{i,j} = number of size-i generator subsets with lcm degree j.

    Enumerates all 2^r subsets, so the row sums are the binomial
    coefficients C(r, i); refuses to start if 2^r exceeds the budget.
    """
    if ideal.is_zero():
        raise ZeroIdealError("the zero ideal has no Taylor data")
    r = len(ideal)
    if 1 << r > max_subsets:
        raise ResourceLimitError(
            "max_subsets", max_subsets, f"2^{r} subsets exceed max_subsets={max_subsets}"
        )
    counts: dict[tuple[int, int], int] = {}
    if is_squarefree(ideal):
        _count_squarefree(_support_masks(ideal), counts)
    else:
        _count_general(ideal, counts)
    return BettiTable(counts)


def _lattice_squarefree(masks: list[int], max_lattice: int) -> dict[int, int]:
    """Or-mask lcm lattice with g(L) = least subset size whose lcm is L."""
    g: dict[int, int] = {}
    frontier: list[int] = []
    for m in masks:
        if m not in g:
            g[m] = 1
            frontier.append(m)
    while frontier:
        nxt: list[int] = []
        for L in frontier:
            gl = g[L] + 1
            for m in masks:
                L2 = L | m
                if L2 not in g:
                    g[L2] = gl
                    nxt.append(L2)
        if len(g) > max_lattice:
            raise ResourceLimitError("max_lattice", max_lattice)
        frontier = nxt
    return g


def _lattice_general(
    gens: list[tuple[int, ...]], max_lattice: int
) -> dict[tuple[int, ...], int]:
    g: dict[tuple[int, ...], int] = {}
    frontier: list[tuple[int, ...]] = []
    for m in gens:
        if m not in g:
            g[m] = 1
            frontier.append(m)
    while frontier:
        nxt: list[tuple[int, ...]] = []
        for L in frontier:
            gl = g[L] + 1
            for m in gens:
                L2 = tuple(a if a >= b else b for a, b in zip(L, m))
                if L2 not in g:
                    g[L2] = gl
                    nxt.append(L2)
        if len(g) > max_lattice:
            raise ResourceLimitError("max_lattice", max_lattice)
        frontier = nxt
    return g


@lru_cache(maxsize=65536)
def taylor_shifts(
    ideal: MonomialIdeal,
    k: int | None = None,
    max_lattice: int = DEFAULT_MAX_LATTICE,
) -> tuple[ShiftSequence, ShiftSequence]:
    """First k minimal and maximal Taylor shifts, by lcm-lattice DP.

    The lattice is the closure of the generators under lcm.  Breadth-first
    relaxation gives g(L), the least subset size with lcm exactly L (a
    minimal witness grows one generator at a time); c(L) counts generators
    dividing L (a witness can be padded with any of them without moving the
    lcm).  Then row i draws from {L : g(L) <= i <= c(L)}.  Agrees with
    direct subset enumeration; never enumerates 2^r subsets.
    """
    r = len(ideal)
    if r == 0:
        raise ZeroIdealError("Taylor shifts are defined for nonzero ideals")
    if k is None:
        k = r
    if k > r:
        raise PreconditionError(f"requested {k} shift rows from {r} generators")
    if k < 0:
        raise PreconditionError("row count must be nonnegative")
    if k == 0:
        return ShiftSequence(()), ShiftSequence(())
    mins = [None] * (k + 1)
    maxs = [None] * (k + 1)
    if is_squarefree(ideal):
        masks = _support_masks(ideal)
        lattice = _lattice_squarefree(masks, max_lattice)
        for L, gl in lattice.items():
            if gl > k:
                continue
            c = sum(1 for m in masks if m & L == m)
            deg = L.bit_count()
            hi = c if c < k else k
            for i in range(gl, hi + 1):
                if mins[i] is None or deg < mins[i]:
                    mins[i] = deg
                if maxs[i] is None or deg > maxs[i]:
                    maxs[i] = deg
    else:
        gens = [g.exponents for g in ideal]
        lattice = _lattice_general(gens, max_lattice)
        for L, gl in lattice.items():
            if gl > k:
                continue
            c = sum(1 for m in gens if all(a <= b for a, b in zip(m, L)))
            deg = sum(L)
            hi = c if c < k else k
            for i in range(gl, hi + 1):
                if mins[i] is None or deg < mins[i]:
                    mins[i] = deg
                if maxs[i] is None or deg > maxs[i]:
                    maxs[i] = deg
    return ShiftSequence(mins[1:]), ShiftSequence(maxs[1:])


# --- Hochster data ---------------------------------------------------------------


@lru_cache(maxsize=65536)
def hochster_betti(complex_: SimplicialComplex, field: FieldSpec = QQ) -> BettiTable:
    """Minimal-resolution Betti table of the face ring, by Hochster's formula.

    beta_{i,j} = sum over j-subsets W of dim H~_{j-i-1}(K[W]).  The full
    simplex yields the empty table (zero ideal, nothing to resolve).
    """
    entries: dict[tuple[int, int], int] = {}
    if complex_.is_simplex():
        return BettiTable(entries)
    profiles = subcomplex_profiles(complex_, field)
    for w, dims in profiles.items():
        j = len(w)
        for p in range(-1, len(dims) - 1):
            d = dims[p + 1]
            if d:
                i = j - p - 1
                if i >= 1:
                    key = (i, j)
                    entries[key] = entries.get(key, 0) + d
    return BettiTable(entries)


def extremal_shifts(table: BettiTable, k: int) -> tuple[ShiftSequence, ShiftSequence]:
    """Per-row min and max degrees for rows 1..k."""
    if k < 0:
        raise PreconditionError("row count must be nonnegative")
    rows: dict[int, list[int]] = {}
    for i, j, _ in table.items():
        rows.setdefault(i, []).append(j)
    mins = []
    maxs = []
    for i in range(1, k + 1):
        js = rows.get(i)
        if not js:
            raise MalformedTableError(f"row {i} of the Betti table is empty")
        mins.append(min(js))
        maxs.append(max(js))
    return ShiftSequence(mins), ShiftSequence(maxs)


def complex_shifts(
    complex_: SimplicialComplex,
    k: int,
    resolution: str = "taylor",
    field: FieldSpec = QQ,
    max_lattice: int = DEFAULT_MAX_LATTICE,
) -> tuple[ShiftSequence, ShiftSequence]:
    """First k shift rows of the face ring under the chosen resolution."""
    check_resolution(resolution)
    if resolution == "taylor":
        return taylor_shifts(nonfaces_ideal(complex_), k, max_lattice)
    return extremal_shifts(hochster_betti(complex_, field), k)


# --- join operators and the bound functional ------------------------------------


def _coerce_values(seq: "ShiftSequence | Iterable[int]") -> tuple[int, ...]:
    if isinstance(seq, ShiftSequence):
        return seq.values
    return ShiftSequence(seq).values


def _join(m: tuple[int, ...], mp: tuple[int, ...], pick) -> ShiftSequence:
    # Convention m_0 = m'_0 = 0, so a split may take all of r from one side.
    a, b = len(m), len(mp)
    ext_m = (0,) + m
    ext_p = (0,) + mp
    out = []
    for r in range(1, a + b + 1):
        lo = max(0, r - b)
        hi = min(r, a)
        out.append(pick(ext_m[i] + ext_p[r - i] for i in range(lo, hi + 1)))
    return ShiftSequence(out)


def lower_join(
    m: "ShiftSequence | Iterable[int]", mp: "ShiftSequence | Iterable[int]"
) -> ShiftSequence:
    """(m * m')_r = min over i+j = r of m_i + m'_j, with m_0 = m'_0 = 0."""
    return _join(_coerce_values(m), _coerce_values(mp), min)


def upper_join(
    m: "ShiftSequence | Iterable[int]", mp: "ShiftSequence | Iterable[int]"
) -> ShiftSequence:
    """The max-convolution companion of lower_join."""
    return _join(_coerce_values(m), _coerce_values(mp), max)


def bound_value(seq: "ShiftSequence | Iterable[int]") -> Fraction:
    """F(m_1,...,m_k) = (m_1 ... m_k) / k!, exactly; F of the empty sequence is 1."""
    vals = _coerce_values(seq)
    prod = 1
    for v in vals:
        prod *= v
    return Fraction(prod, factorial(len(vals)))


# --- derived quantities ----------------------------------------------------------


def leray_t(
    complex_: SimplicialComplex,
    resolution: str = "minimal",
    field: FieldSpec = QQ,
    max_lattice: int = DEFAULT_MAX_LATTICE,
) -> int:
    """t >= 0 with M_c = c + t + 1 at the codimension row c = n - d.

    For the minimal resolution this is reg(S/I_K) - 1, i.e. the complex is
    (t+1)-Leray over the field but not t-Leray.  A simplex has c = 0 and no
    such row.
    """
    check_resolution(resolution)
    c = codimension(complex_)
    if c == 0:
        raise UndefinedCodimensionRowError("a simplex has codimension 0, so t is undefined")
    _, maxs = complex_shifts(complex_, c, resolution, field, max_lattice)
    return maxs.at(c) - c - 1


def is_pure(table: BettiTable) -> bool:
    """True iff every row of the table holds exactly one degree."""
    degrees: dict[int, set[int]] = {}
    for i, j, _ in table.items():
        degrees.setdefault(i, set()).add(j)
    return all(len(js) == 1 for js in degrees.values())
