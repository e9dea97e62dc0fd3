"""Exact vectors of the lexicographic power over an index set.

A vector is a finite list of (index, coordinate) entries, an optional
constant rational tail on a trailing OMEGA atom (so supports stay
well-ordered while infinite supports remain expressible), and at most one
coordinate at a formal added index.  Everything is kept in a canonical form:

* no stored zero coordinates, entries sorted by the index order;
* the tail starts strictly after every stored entry of its atom, and cannot
  be extended downward (the entry just before the tail never equals the tail
  value);
* the added coordinate, when present, is nonzero.

Comparison is lexicographic: the sign of a difference is the sign of its
coordinate at the least element of its support, with added indices
interleaved per the extended order.  Two vectors with coordinates at
*different* added indices can still be compared (the extended order is
total), but they cannot be added, since the sum would leave the single
added-coordinate space.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Optional, Union

from .coords import Coordinate, Rat, ZERO_COORD, coord
from .errors import ValidationError
from .orders import (
    INFINITY,
    AddedIndex,
    AtomKind,
    ExtIndex,
    Index,
    IndexSet,
    InitialSegment,
    cmp_extended,
    cmp_index,
    seg_cmp,
    seg_contains,
    seg_is_full,
    validate_index,
    validate_segment,
)

Entry = tuple[Index, Coordinate]


@dataclass(frozen=True)
class Tail:
    """Constant rational value on every index >= start of the final OMEGA atom."""

    value: Fraction
    start: Index


@dataclass(frozen=True)
class RealVector:
    space: IndexSet
    entries: tuple[Entry, ...] = ()
    tail: Optional[Tail] = None
    added: Optional[tuple[InitialSegment, Coordinate]] = None

    def __post_init__(self):
        space = self.space
        prev = None
        for idx, c in self.entries:
            validate_index(idx, space)
            if c.sign() == 0:
                raise ValidationError("stored zero coordinate")
            if prev is not None and cmp_index(prev, idx, space) >= 0:
                raise ValidationError("entries out of order")
            prev = idx
        if self.tail is not None:
            t = self.tail
            if t.value == 0:
                raise ValidationError("zero tail")
            if not space.atoms or space.atoms[-1].kind is not AtomKind.OMEGA:
                raise ValidationError("tail requires a trailing omega atom")
            if t.start.atom != space.natoms or t.start.inner < 1:
                raise ValidationError("tail start must lie in the final atom")
            for idx, c in self.entries:
                if idx.atom == t.start.atom and idx.inner >= t.start.inner:
                    raise ValidationError("entry overlaps the tail")
                if (
                    idx.atom == t.start.atom
                    and idx.inner == t.start.inner - 1
                    and c == coord(t.value)
                ):
                    raise ValidationError("tail start is not minimal")
        if self.added is not None:
            seg, c = self.added
            validate_segment(seg, space)
            if c.sign() == 0:
                raise ValidationError("zero added coordinate")

    def __lt__(self, other):
        return cmp_lex(self, other) < 0

    def __le__(self, other):
        return cmp_lex(self, other) <= 0

    def __gt__(self, other):
        return cmp_lex(self, other) > 0

    def __ge__(self, other):
        return cmp_lex(self, other) >= 0

    def __str__(self):
        parts = [f"({c})@({i.atom},{i.inner})" for i, c in self.entries]
        if self.tail:
            parts.append(f"tail({self.tail.value} from ({self.tail.start.atom},{self.tail.start.inner}))")
        if self.added:
            seg, c = self.added
            parts.append(f"({c})@added[{seg.cut_atom},{seg.upto}]")
        return " + ".join(parts) if parts else "0"


def _sort_key(space: IndexSet):
    kinds = tuple(a.kind for a in space.atoms)

    def key(idx: Index):
        if kinds[idx.atom - 1] is AtomKind.OMEGA_OPP:
            return (idx.atom, -idx.inner)
        return (idx.atom, idx.inner)

    return key


def build_vector(
    space: IndexSet,
    entries: Iterable[tuple[Index, Union[Coordinate, Rat]]] = (),
    tail: Optional[Tail] = None,
    added: Optional[tuple[InitialSegment, Union[Coordinate, Rat]]] = None,
) -> RealVector:
    """Normalize arbitrary (entry, tail, added) data into the canonical form.

    The vector denotes the *sum* of its pieces, so entries overlapping the
    tail region are merged into it (the tail start moves up past them and the
    skipped positions become explicit entries).
    """
    acc: dict[Index, Coordinate] = {}
    for idx, value in entries:
        validate_index(idx, space)
        c = value if isinstance(value, Coordinate) else coord(value)
        acc[idx] = acc.get(idx, ZERO_COORD) + c

    if tail is not None:
        if tail.value == 0:
            tail = None
    if tail is not None:
        if not space.atoms or space.atoms[-1].kind is not AtomKind.OMEGA:
            raise ValidationError("tail requires a trailing omega atom")
        if tail.start.atom != space.natoms:
            raise ValidationError("tail start must lie in the final atom")
        atom_pos = tail.start.atom
        start = tail.start.inner
        overlap = [i for i in acc if i.atom == atom_pos and i.inner >= start]
        if overlap:
            top = max(i.inner for i in overlap)
            for inner in range(start, top + 1):
                idx = Index(atom_pos, inner)
                acc[idx] = acc.get(idx, ZERO_COORD) + coord(tail.value)
            start = top + 1
        # pull the start down over entries that already equal the tail value
        while start > 1:
            below = Index(atom_pos, start - 1)
            if acc.get(below) == coord(tail.value):
                del acc[below]
                start -= 1
            else:
                break
        tail = Tail(tail.value, Index(atom_pos, start))

    items = [(i, c) for i, c in acc.items() if c.sign() != 0]
    items.sort(key=lambda e: _sort_key(space)(e[0]))

    if added is not None:
        seg, c = added
        c = c if isinstance(c, Coordinate) else coord(c)
        validate_segment(seg, space)
        added = None if c.sign() == 0 else (seg, c)

    return RealVector(space, tuple(items), tail, added)


def zero(space: IndexSet) -> RealVector:
    return RealVector(space)


def unit(space: IndexSet, idx: Index, value: Union[Coordinate, Rat] = 1) -> RealVector:
    return build_vector(space, [(idx, value)])


def added_unit(space: IndexSet, seg: InitialSegment, value: Union[Coordinate, Rat] = 1) -> RealVector:
    return build_vector(space, [], added=(seg, value))


def tail_vector(space: IndexSet, value: Rat, start: Index,
                entries: Iterable[tuple[Index, Union[Coordinate, Rat]]] = ()) -> RealVector:
    return build_vector(space, entries, tail=Tail(Fraction(value), start))


def _check_space(x: RealVector, y: RealVector) -> None:
    if x.space != y.space:
        raise ValidationError("vectors live over different index sets")


def add(x: RealVector, y: RealVector) -> RealVector:
    _check_space(x, y)
    added = None
    if x.added and y.added:
        if x.added[0] != y.added[0]:
            raise ValidationError(
                "sum would carry two added coordinates (outside the single-extension space)"
            )
        added = (x.added[0], x.added[1] + y.added[1])
    else:
        added = x.added or y.added

    ents = list(x.entries) + list(y.entries)
    tail = None
    if x.tail and y.tail:
        atom_pos = x.tail.start.atom
        merge_from = max(x.tail.start.inner, y.tail.start.inner)
        for t in (x.tail, y.tail):
            for inner in range(t.start.inner, merge_from):
                ents.append((Index(atom_pos, inner), coord(t.value)))
        tail = Tail(x.tail.value + y.tail.value, Index(atom_pos, merge_from))
    else:
        tail = x.tail or y.tail
    return build_vector(x.space, ents, tail=tail, added=added)


def scale(q: Rat, x: RealVector) -> RealVector:
    q = Fraction(q)
    if q == 0:
        return zero(x.space)
    ents = [(i, c.scaled(q)) for i, c in x.entries]
    tail = Tail(x.tail.value * q, x.tail.start) if x.tail else None
    added = (x.added[0], x.added[1].scaled(q)) if x.added else None
    return build_vector(x.space, ents, tail=tail, added=added)


def negate(x: RealVector) -> RealVector:
    return scale(-1, x)


def sub(x: RealVector, y: RealVector) -> RealVector:
    return add(x, negate(y))


def coordinate_at(x: RealVector, u: ExtIndex) -> Coordinate:
    if isinstance(u, AddedIndex):
        if x.added and x.added[0] == u.segment:
            return x.added[1]
        return ZERO_COORD
    for i, c in x.entries:
        if i == u:
            return c
    if x.tail and u.atom == x.tail.start.atom and u.inner >= x.tail.start.inner:
        return coord(x.tail.value)
    return ZERO_COORD


def _base_divergence(x: RealVector, y: RealVector) -> Optional[tuple[Index, int]]:
    """First base index where the two vectors differ, with the sign of x - y there."""
    space = x.space
    key = _sort_key(space)
    points = {i for i, _ in x.entries} | {i for i, _ in y.entries}
    tails = [t for t in (x.tail, y.tail) if t]
    if tails:
        atom_pos = space.natoms
        labels = [t.start.inner for t in tails]
        labels += [i.inner for i in points if i.atom == atom_pos]
        points.update(Index(atom_pos, t.start.inner) for t in tails)
        points.add(Index(atom_pos, max(labels) + 1))
    for p in sorted(points, key=key):
        cx = coordinate_at(x, p)
        cy = coordinate_at(y, p)
        s = (cx - cy).sign()
        if s:
            return p, s
    return None


def first_divergence(x: RealVector, y: RealVector) -> Optional[tuple[ExtIndex, int]]:
    """Least extended index in the support of x - y, with the sign of x - y there.

    Works even when x and y carry coordinates at different added indices; the
    result then reports whichever divergence comes first in the extended
    order.
    """
    _check_space(x, y)
    space = x.space
    cands: list[tuple[ExtIndex, int]] = []
    base = _base_divergence(x, y)
    if base:
        cands.append(base)
    if x.added and y.added and x.added[0] == y.added[0]:
        s = (x.added[1] - y.added[1]).sign()
        if s:
            cands.append((AddedIndex(x.added[0]), s))
    else:
        if x.added:
            cands.append((AddedIndex(x.added[0]), x.added[1].sign()))
        if y.added:
            cands.append((AddedIndex(y.added[0]), -y.added[1].sign()))
    if not cands:
        return None
    best = cands[0]
    for c in cands[1:]:
        if cmp_extended(c[0], best[0], space) < 0:
            best = c
    return best


def cmp_lex(x: RealVector, y: RealVector) -> int:
    fd = first_divergence(x, y)
    return 0 if fd is None else fd[1]


def natural_valuation(x: RealVector):
    """Least support index (the archimedean class), INFINITY for the zero vector."""
    best: Optional[ExtIndex] = None
    if x.entries:
        best = x.entries[0][0]
    if x.tail is not None:
        if best is None or cmp_index(x.tail.start, best, x.space) < 0:
            best = x.tail.start
    if x.added is not None:
        ai = AddedIndex(x.added[0])
        if best is None or cmp_extended(ai, best, x.space) < 0:
            best = ai
    return INFINITY if best is None else best


def truncate(x: RealVector, seg: InitialSegment) -> RealVector:
    """Zero out every coordinate outside the segment.

    The added coordinate at segment T survives exactly when T is strictly
    included in seg, since that is when its formal index falls inside the
    extended span of seg.
    """
    space = x.space
    validate_segment(seg, space)
    ents = [(i, c) for i, c in x.entries if seg_contains(seg, i, space)]
    tail = None
    if x.tail is not None:
        if seg_is_full(seg, space):
            tail = x.tail
        elif seg.cut_atom == x.tail.start.atom and seg.upto is not None:
            for inner in range(x.tail.start.inner, seg.upto + 1):
                ents.append((Index(seg.cut_atom, inner), coord(x.tail.value)))
    added = None
    if x.added is not None and seg_cmp(x.added[0], seg, space) < 0:
        added = x.added
    return build_vector(space, ents, tail=tail, added=added)


class Membership(Enum):
    IN_GAMMA = "in_gamma"
    HAHN_ONLY = "hahn_product_only"
    OUTSIDE = "outside_hahn_product"


def classify_membership(x: RealVector) -> Membership:
    """Locate a base vector: finite rational support, rational infinite support, or irrational."""
    if x.added is not None:
        raise ValidationError("membership test applies to base vectors only")
    if any(not c.is_rational for _, c in x.entries):
        return Membership.OUTSIDE
    if x.tail is not None:
        return Membership.HAHN_ONLY
    return Membership.IN_GAMMA


def in_group(x: RealVector) -> bool:
    """Whether x lies in the base group (finite rational support, no added part)."""
    return x.added is None and classify_membership(x) is Membership.IN_GAMMA


def support_indices(x: RealVector, count: int) -> list[Index]:
    """The first `count` base support indices of x, in order."""
    out = [i for i, _ in x.entries]
    if x.tail is not None:
        k = x.tail.start.inner
        while len(out) < count:
            out.append(Index(x.tail.start.atom, k))
            k += 1
    return out[:count]
