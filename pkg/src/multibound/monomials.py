"""Monomials and monomial ideals with exact integer exponents.

A monomial lives in a fixed ambient polynomial ring k[x_1..x_n] and is stored
as its exponent vector.  Ideals are stored by their unique minimal generating
set.  Polarization turns an arbitrary monomial ideal into a squarefree one
over sum(d_i) variables (d_i = max exponent of x_i among the generators)
while preserving Taylor Betti data and codimension.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import (
    DimensionMismatchError,
    EmptyInputError,
    ParseError,
    UnitIdealError,
)


@dataclass(frozen=True, order=True)
class Monomial:
    """A monomial given by its exponent vector over a fixed ambient ring.

    Exponents are nonnegative ints; the constant monomial (all zeros) is a
    legal value here but is rejected as an ideal generator.
    """

    exponents: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.exponents:
            raise EmptyInputError("monomial needs at least one ambient variable")
        if any(e < 0 for e in self.exponents):
            raise ValueError("exponents must be nonnegative")

    @property
    def n(self) -> int:
        return len(self.exponents)

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    @property
    def support(self) -> frozenset[int]:
        """1-based indices of variables with positive exponent."""
        return frozenset(i + 1 for i, e in enumerate(self.exponents) if e > 0)

    def is_constant(self) -> bool:
        return all(e == 0 for e in self.exponents)

    def is_squarefree(self) -> bool:
        return all(e <= 1 for e in self.exponents)

    def divides(self, other: "Monomial") -> bool:
        if self.n != other.n:
            raise DimensionMismatchError("monomials from different ambient rings")
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def __str__(self) -> str:
        parts = []
        for i, e in enumerate(self.exponents):
            if e == 1:
                parts.append(f"x{i + 1}")
            elif e > 1:
                parts.append(f"x{i + 1}^{e}")
        return " ".join(parts) if parts else "1"


def squarefree_monomial(support: Iterable[int], n: int) -> Monomial:
    """The squarefree monomial with the given 1-based support in k[x_1..x_n]."""
    exps = [0] * n
    for i in support:
        if not 1 <= i <= n:
            raise DimensionMismatchError(f"variable index {i} outside 1..{n}")
        exps[i - 1] = 1
    return Monomial(tuple(exps))


def lcm_of(monomials: Iterable[Monomial]) -> Monomial:
    """Least common multiple: componentwise max of exponent vectors."""
    it = iter(monomials)
    try:
        first = next(it)
    except StopIteration:
        raise EmptyInputError("lcm of an empty collection is undefined") from None
    exps = list(first.exponents)
    for m in it:
        if m.n != len(exps):
            raise DimensionMismatchError("monomials from different ambient rings")
        for i, e in enumerate(m.exponents):
            if e > exps[i]:
                exps[i] = e
    return Monomial(tuple(exps))


class MonomialIdeal:
    """A monomial ideal, stored by its minimal generating set.

    Invariants enforced at construction: all generators share the ambient
    variable count, none is constant (that would be the unit ideal), and no
    generator divides another.  The empty generator set (zero ideal) is a
    legal value; operations that need a nonzero ideal reject it themselves.
    """

    __slots__ = ("_n", "_gens")

    def __init__(self, ambient_vars: int, generators: Iterable[Monomial]):
        if ambient_vars < 1:
            raise EmptyInputError("ambient ring needs at least one variable")
        gens = sorted(set(generators), key=lambda m: (m.degree, m.exponents))
        for g in gens:
            if g.n != ambient_vars:
                raise DimensionMismatchError(
                    f"generator over {g.n} variables in a {ambient_vars}-variable ring"
                )
            if g.is_constant():
                raise UnitIdealError("constant generator: the unit ideal is not admitted")
        for i, g in enumerate(gens):
            for h in gens[i + 1 :]:
                if g.divides(h) or h.divides(g):
                    raise ValueError(
                        f"generating set is not minimal: {g} and {h} are comparable"
                    )
        self._n = ambient_vars
        self._gens = tuple(gens)

    @property
    def ambient_vars(self) -> int:
        return self._n

    @property
    def generators(self) -> tuple[Monomial, ...]:
        return self._gens

    def is_zero(self) -> bool:
        return not self._gens

    def __len__(self) -> int:
        return len(self._gens)

    def __iter__(self) -> Iterator[Monomial]:
        return iter(self._gens)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self._n == other._n and self._gens == other._gens

    def __hash__(self) -> int:
        return hash((self._n, self._gens))

    def __repr__(self) -> str:
        inner = ", ".join(str(g) for g in self._gens) or "0"
        return f"MonomialIdeal(n={self._n}, ({inner}))"


def minimalize(generators: Iterable[Monomial], ambient_vars: int) -> MonomialIdeal:
    """Drop generators divisible by another and return the minimal ideal.

    Duplicates are collapsed; a constant generator raises (unit ideal).
    """
    gens = sorted(set(generators), key=lambda m: (m.degree, m.exponents))
    kept: list[Monomial] = []
    for g in gens:
        if g.n != ambient_vars:
            raise DimensionMismatchError(
                f"generator over {g.n} variables in a {ambient_vars}-variable ring"
            )
        if g.is_constant():
            raise UnitIdealError("constant generator: the unit ideal is not admitted")
        # gens is sorted by degree, so only earlier entries can divide g
        if not any(h.divides(g) for h in kept):
            kept.append(g)
    return MonomialIdeal(ambient_vars, kept)


def is_squarefree(ideal: MonomialIdeal) -> bool:
    return all(g.is_squarefree() for g in ideal.generators)


def polarize(ideal: MonomialIdeal) -> MonomialIdeal:
    """Polarization: split x_i^e into e distinct squarefree variables.

    The split of x_i occupies d_i fresh variables (d_i = max exponent of x_i
    over the generators), laid out flat in row-major order: all splits of x_1
    first, then x_2, and so on.  Variables absent from every generator get no
    slot, so the ambient count of the output is sum(d_i).  The zero ideal is
    returned unchanged.  Taylor Betti numbers and codimension are preserved;
    a squarefree input comes back identical up to this renaming.
    """
    if ideal.is_zero():
        return ideal
    n = ideal.ambient_vars
    depth = [0] * n
    for g in ideal.generators:
        for i, e in enumerate(g.exponents):
            if e > depth[i]:
                depth[i] = e
    offset = [0] * n
    total = 0
    for i in range(n):
        offset[i] = total
        total += depth[i]
    gens = []
    for g in ideal.generators:
        exps = [0] * total
        for i, e in enumerate(g.exponents):
            for k in range(e):
                exps[offset[i] + k] = 1
        gens.append(Monomial(tuple(exps)))
    return MonomialIdeal(total, gens)


# --- text format ------------------------------------------------------------
#
# One generator per line as whitespace-separated tokens "x<i>" or "x<i>^<e>".
# '#' starts a comment, blank lines are skipped, and an optional header line
# "vars: <n>" fixes the ambient variable count (default: max index used).


def parse_ideal(text: str) -> MonomialIdeal:
    declared_n: int | None = None
    raw: list[tuple[int, dict[int, int]]] = []
    max_index = 0
    for lineno, line in enumerate(text.splitlines(), start=1):
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        if body.lower().startswith("vars:"):
            if raw or declared_n is not None:
                raise ParseError("vars: header must precede all generators", lineno)
            value = body.split(":", 1)[1].strip()
            if not value.isdigit() or int(value) < 1:
                raise ParseError(f"bad variable count {value!r}", lineno)
            declared_n = int(value)
            continue
        exps: dict[int, int] = {}
        for token in body.split():
            base, _, power = token.partition("^")
            if not base.startswith("x") or not base[1:].isdigit():
                raise ParseError(f"bad token {token!r}", lineno)
            idx = int(base[1:])
            if idx < 1:
                raise ParseError(f"variable index must be positive in {token!r}", lineno)
            if power:
                if not power.isdigit() or int(power) < 1:
                    raise ParseError(f"bad exponent in {token!r}", lineno)
                e = int(power)
            else:
                e = 1
            exps[idx] = exps.get(idx, 0) + e
            max_index = max(max_index, idx)
        raw.append((lineno, exps))
    if not raw:
        raise ParseError("no generators found")
    n = declared_n if declared_n is not None else max_index
    if max_index > n:
        bad = next(ln for ln, exps in raw if any(i > n for i in exps))
        raise ParseError(f"variable index exceeds declared vars: {n}", bad)
    gens = []
    for _, exps in raw:
        vec = [0] * n
        for idx, e in exps.items():
            vec[idx - 1] = e
        gens.append(Monomial(tuple(vec)))
    return minimalize(gens, n)


def format_ideal(ideal: MonomialIdeal) -> str:
    lines = [f"vars: {ideal.ambient_vars}"]
    lines.extend(str(g) for g in ideal.generators)
    return "\n".join(lines) + "\n"
