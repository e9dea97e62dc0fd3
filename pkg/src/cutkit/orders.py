"""Totally ordered index sets built from finite chains and copies of the naturals.

An index set is a finite concatenation of atoms.  Each atom is a finite chain
``fin(n)``, an increasing copy of the naturals (``OMEGA``), or a decreasing
one (``OMEGA_OPP``, whose positive integer labels compare in reverse, so
label 1 is the largest element of the atom).  Indices are addressed as
``(atom position, inner label)``, both 1-based.

Initial segments are the downward-closed subsets.  They are stored in a
canonical form: every atom before ``cut_atom`` is wholly included, atoms after
it are excluded, and ``upto`` describes the included part of atom ``cut_atom``
(for ``fin``/``OMEGA`` the labels ``<= upto``; for ``OMEGA_OPP`` the labels
``>= upto``, which form the early part of the reversed order).  A part that
covers its whole atom is always folded into ``cut_atom + 1``.

On top of the base order sits an extension that inserts, for every initial
segment ``S``, one formal index lying strictly between ``S`` and its
complement.  Two rules pin the total order of that extension: the formal
index of ``S`` sits between ``S`` and ``S^c``, and the formal indices of two
segments compare by strict inclusion of the segments.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Optional, Union

from .errors import ValidationError


class AtomKind(Enum):
    FIN = "fin"
    OMEGA = "omega"
    OMEGA_OPP = "omega_opp"


@dataclass(frozen=True)
class Atom:
    kind: AtomKind
    size: Optional[int] = None

    def __post_init__(self):
        if self.kind is AtomKind.FIN:
            if self.size is None or self.size < 1:
                raise ValidationError("fin atom needs size >= 1")
        elif self.size is not None:
            raise ValidationError(f"{self.kind.value} atom carries no size")

    def __str__(self):
        if self.kind is AtomKind.FIN:
            return f"fin({self.size})"
        return "w" if self.kind is AtomKind.OMEGA else "w*"


def fin(n: int) -> Atom:
    return Atom(AtomKind.FIN, n)


OMEGA = Atom(AtomKind.OMEGA)
OMEGA_OPP = Atom(AtomKind.OMEGA_OPP)


@dataclass(frozen=True)
class Index:
    """Position inside an index set: 1-based atom slot and inner label."""

    atom: int
    inner: int


@dataclass(frozen=True)
class IndexSet:
    atoms: tuple[Atom, ...]

    def __post_init__(self):
        for a in self.atoms:
            if not isinstance(a, Atom):
                raise ValidationError("index set atoms must be Atom values")

    @classmethod
    def of(cls, *atoms: Atom) -> "IndexSet":
        return cls(tuple(atoms))

    @property
    def natoms(self) -> int:
        return len(self.atoms)

    def atom_at(self, pos: int) -> Atom:
        if not 1 <= pos <= len(self.atoms):
            raise ValidationError(f"atom position {pos} out of range")
        return self.atoms[pos - 1]

    @property
    def is_trivial(self) -> bool:
        return not self.atoms

    def __str__(self):
        return "+".join(str(a) for a in self.atoms) if self.atoms else "(empty)"


def validate_index(i: Index, space: IndexSet) -> None:
    atom = space.atom_at(i.atom)
    if i.inner < 1:
        raise ValidationError(f"inner label {i.inner} must be >= 1")
    if atom.kind is AtomKind.FIN and i.inner > atom.size:
        raise ValidationError(f"inner label {i.inner} exceeds fin({atom.size})")


def _key(i: Index, space: IndexSet) -> tuple[int, int]:
    # total-order key; OMEGA_OPP labels compare reversed
    if space.atoms[i.atom - 1].kind is AtomKind.OMEGA_OPP:
        return (i.atom, -i.inner)
    return (i.atom, i.inner)


def cmp_index(i: Index, j: Index, space: IndexSet) -> int:
    validate_index(i, space)
    validate_index(j, space)
    a, b = _key(i, space), _key(j, space)
    return -1 if a < b else (0 if a == b else 1)


@dataclass(frozen=True)
class InitialSegment:
    """Canonical downward-closed subset; see the module docstring for fields."""

    cut_atom: int
    upto: Optional[int] = None


def empty_segment() -> InitialSegment:
    return InitialSegment(1, None)


def full_segment(space: IndexSet) -> InitialSegment:
    return InitialSegment(space.natoms + 1, None)


def make_segment(space: IndexSet, cut_atom: int, upto: Optional[int]) -> InitialSegment:
    """Build a segment, folding a part that covers its whole atom."""
    n = space.natoms
    if upto is None:
        if not 1 <= cut_atom <= n + 1:
            raise ValidationError(f"cut_atom {cut_atom} out of range")
        return InitialSegment(cut_atom, None)
    if not 1 <= cut_atom <= n:
        raise ValidationError(f"cut_atom {cut_atom} has no atom to cut")
    atom = space.atom_at(cut_atom)
    if upto < 1:
        raise ValidationError("segment part label must be >= 1")
    if atom.kind is AtomKind.FIN:
        if upto > atom.size:
            raise ValidationError(f"part label {upto} exceeds fin({atom.size})")
        if upto == atom.size:
            return InitialSegment(cut_atom + 1, None)
    elif atom.kind is AtomKind.OMEGA_OPP and upto == 1:
        # labels >= 1 are the whole reversed atom
        return InitialSegment(cut_atom + 1, None)
    return InitialSegment(cut_atom, upto)


def validate_segment(seg: InitialSegment, space: IndexSet) -> None:
    make_segment(space, seg.cut_atom, seg.upto)
    if seg.upto is not None:
        atom = space.atom_at(seg.cut_atom)
        if atom.kind is AtomKind.FIN and seg.upto == atom.size:
            raise ValidationError("non-canonical segment: part covers its atom")
        if atom.kind is AtomKind.OMEGA_OPP and seg.upto == 1:
            raise ValidationError("non-canonical segment: part covers its atom")


def seg_is_empty(seg: InitialSegment) -> bool:
    return seg.cut_atom == 1 and seg.upto is None


def seg_is_full(seg: InitialSegment, space: IndexSet) -> bool:
    return seg.cut_atom == space.natoms + 1 and seg.upto is None


def seg_contains(seg: InitialSegment, i: Index, space: IndexSet) -> bool:
    if i.atom < seg.cut_atom:
        return True
    if i.atom > seg.cut_atom or seg.upto is None:
        return False
    if space.atom_at(i.atom).kind is AtomKind.OMEGA_OPP:
        return i.inner >= seg.upto
    return i.inner <= seg.upto


def seg_cmp(s: InitialSegment, t: InitialSegment, space: IndexSet) -> int:
    """Compare two segments by inclusion (a total order on canonical segments)."""
    if s == t:
        return 0
    if s.cut_atom != t.cut_atom:
        return -1 if s.cut_atom < t.cut_atom else 1
    if s.upto is None:
        return -1
    if t.upto is None:
        return 1
    if space.atom_at(s.cut_atom).kind is AtomKind.OMEGA_OPP:
        return -1 if s.upto > t.upto else 1
    return -1 if s.upto < t.upto else 1


def seg_has_max(seg: InitialSegment, space: IndexSet) -> Optional[Index]:
    """Greatest element of the segment, when one exists."""
    if seg_is_empty(seg):
        return None
    if seg.upto is not None:
        # partial atom: for fin/omega the top label is upto; for a reversed
        # atom the part {labels >= upto} peaks at label upto itself
        return Index(seg.cut_atom, seg.upto)
    last = space.atom_at(seg.cut_atom - 1)
    if last.kind is AtomKind.FIN:
        return Index(seg.cut_atom - 1, last.size)
    if last.kind is AtomKind.OMEGA_OPP:
        return Index(seg.cut_atom - 1, 1)
    return None


def comp_has_min(seg: InitialSegment, space: IndexSet) -> Optional[Index]:
    """Least element of the complementary final segment, when one exists."""
    if seg_is_full(seg, space):
        return None
    if seg.upto is not None:
        atom = space.atom_at(seg.cut_atom)
        if atom.kind is AtomKind.OMEGA_OPP:
            # complement within the atom is {labels < upto}, whose least
            # element under the reversed order is the largest label
            return Index(seg.cut_atom, seg.upto - 1)
        return Index(seg.cut_atom, seg.upto + 1)
    first = space.atom_at(seg.cut_atom)
    if first.kind is AtomKind.OMEGA_OPP:
        return None
    return Index(seg.cut_atom, 1)


class Card(Enum):
    """Evaluated cardinal sizes arising at desk scale."""

    ZERO = 0
    ONE = 1
    ALEPH0 = "aleph0"


def boundary_cardinals(seg: InitialSegment, space: IndexSet) -> tuple[Card, Card]:
    """Cofinality of the segment and coinitiality of its complement.

    The complement side reports ONE when the complement is empty; the group
    cut this segment encodes then has a greatest element below it.
    """
    if seg_is_empty(seg):
        kappa = Card.ZERO
    elif seg_has_max(seg, space) is not None:
        kappa = Card.ONE
    else:
        kappa = Card.ALEPH0
    if seg_is_full(seg, space):
        lam = Card.ONE
    elif comp_has_min(seg, space) is not None:
        lam = Card.ONE
    else:
        lam = Card.ALEPH0
    return kappa, lam


@dataclass(frozen=True)
class AddedIndex:
    """The formal index sitting between a segment and its complement."""

    segment: InitialSegment


ExtIndex = Union[Index, AddedIndex]


def cmp_extended(u: ExtIndex, v: ExtIndex, space: IndexSet) -> int:
    if isinstance(u, Index) and isinstance(v, Index):
        return cmp_index(u, v, space)
    if isinstance(u, Index):
        validate_index(u, space)
        validate_segment(v.segment, space)
        return -1 if seg_contains(v.segment, u, space) else 1
    if isinstance(v, Index):
        return -cmp_extended(v, u, space)
    validate_segment(u.segment, space)
    validate_segment(v.segment, space)
    return seg_cmp(u.segment, v.segment, space)


class _Infinity:
    """Valuation of the zero vector; larger than every extended index."""

    __slots__ = ()

    def __repr__(self):
        return "INFINITY"


INFINITY = _Infinity()


def cmp_valuation(u, v, space: IndexSet) -> int:
    """cmp_extended lifted to values that may be INFINITY."""
    ui, vi = isinstance(u, _Infinity), isinstance(v, _Infinity)
    if ui and vi:
        return 0
    if ui:
        return 1
    if vi:
        return -1
    return cmp_extended(u, v, space)


def iter_indices(space: IndexSet, max_label: int) -> list[Index]:
    """Indices with labels <= max_label, in ascending order."""
    out: list[Index] = []
    for pos, atom in enumerate(space.atoms, start=1):
        if atom.kind is AtomKind.FIN:
            out.extend(Index(pos, k) for k in range(1, atom.size + 1))
        elif atom.kind is AtomKind.OMEGA:
            out.extend(Index(pos, k) for k in range(1, max_label + 1))
        else:
            out.extend(Index(pos, k) for k in range(max_label, 0, -1))
    return out


def iter_segments(space: IndexSet, max_label: int) -> list[InitialSegment]:
    """Canonical segments whose boundary labels are <= max_label, ascending."""
    out = [empty_segment()]
    for pos, atom in enumerate(space.atoms, start=1):
        if atom.kind is AtomKind.FIN:
            out.extend(InitialSegment(pos, k) for k in range(1, atom.size))
        elif atom.kind is AtomKind.OMEGA:
            out.extend(InitialSegment(pos, k) for k in range(1, max_label + 1))
        else:
            out.extend(InitialSegment(pos, k) for k in range(max_label, 1, -1))
        out.append(InitialSegment(pos + 1, None))
    return out


def segment_upto(space: IndexSet, i: Index) -> InitialSegment:
    """The segment of all indices <= i."""
    validate_index(i, space)
    return make_segment(space, i.atom, i.inner)


def segment_below(space: IndexSet, i: Index) -> InitialSegment:
    """The segment of all indices strictly below i."""
    validate_index(i, space)
    atom = space.atom_at(i.atom)
    if atom.kind is AtomKind.OMEGA_OPP:
        return make_segment(space, i.atom, i.inner + 1)
    if i.inner == 1:
        return InitialSegment(i.atom, None)
    return make_segment(space, i.atom, i.inner - 1)


def element_of_difference(big: InitialSegment, small: InitialSegment, space: IndexSet) -> Index:
    """A deterministic base index in big minus small (big must strictly include small)."""
    if seg_cmp(small, big, space) >= 0:
        raise ValidationError("difference is empty")
    for pos in range(small.cut_atom, space.natoms + 1):
        atom = space.atom_at(pos)
        s_part = small.upto if pos == small.cut_atom else None
        if pos < big.cut_atom:
            b_part = "all"
        elif pos == big.cut_atom and big.upto is not None:
            b_part = big.upto
        else:
            b_part = None
        if b_part is None:
            continue
        if atom.kind is AtomKind.OMEGA_OPP:
            if s_part is None:
                return Index(pos, 1 if b_part == "all" else b_part)
            # small has {labels >= s_part}; the difference starts at s_part - 1
            return Index(pos, s_part - 1)
        if s_part is None:
            return Index(pos, 1)
        return Index(pos, s_part + 1)
    raise ValidationError("difference is empty")


def segment_str(seg: InitialSegment, space: IndexSet) -> str:
    if seg_is_empty(seg):
        return "empty"
    if seg_is_full(seg, space):
        return "full"
    if seg.upto is None:
        return f"atoms(1..{seg.cut_atom - 1})"
    atom = space.atom_at(seg.cut_atom)
    rel = ">=" if atom.kind is AtomKind.OMEGA_OPP else "<="
    prefix = f"atoms(1..{seg.cut_atom - 1})+" if seg.cut_atom > 1 else ""
    return f"{prefix}atom{seg.cut_atom}[{rel}{seg.upto}]"
