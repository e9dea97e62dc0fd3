"""Canonical cut descriptors over the rational lexicographic group, and their
classification.

A cut either becomes principal modulo its invariance group (a *ball* cut,
written ``(b...)`` below) or it does not (*non-ball*, ``nb``).  Ball cuts are
stored as a coset descriptor: a center truncated to the invariance segment
``S``, the segment, and a side.  ``S = full`` with side +/- encodes the
principal cuts ``a^+/a^-``; ``S = empty`` encodes the two improper cuts.
Non-ball cuts are stored by their unique canonical realization vector: the
truncation of any realizing vector to the least segment whose truncation
leaves the rational group.

Classification follows two tables.  The six-type table keyed by
(ball?, side, does S have a maximum?):

    type       S has max   V_f            V_i
    (b+G)+     yes         H   stable     H'  stable
    (b+NG)+    no          H   stable     H   unstable
    (b+G)-     yes         H'  stable     H   stable
    (b+NG)-    no          H   unstable   H   stable
    nb+G       yes         H'  stable     H'  stable
    nb+NG      no          H   unstable   H   unstable

where H is the invariance group (segment ``S``) and H' its candidate
immediate successor (segment ``S`` minus its maximum when that exists,
otherwise ``S`` itself).  The eight-subtype table for proper ball cuts keyed
by (side, max(S) exists?, min(S^c) exists?) gives the cofinality/coinitiality
pair; see ``kappa_lambda``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .coords import Coordinate
from .errors import PreconditionError, ValidationError
from .orders import (
    Card,
    Index,
    IndexSet,
    InitialSegment,
    boundary_cardinals,
    seg_has_max,
    seg_is_empty,
    segment_below,
    segment_upto,
    full_segment,
)
from .vectors import (
    Membership,
    RealVector,
    add,
    added_unit,
    classify_membership,
    cmp_lex,
    in_group,
    negate,
    scale,
    sub,
    truncate,
    zero,
)

PLUS = 1
MINUS = -1

LEFT = "left"
RIGHT = "right"


@dataclass(frozen=True)
class BallCut:
    """The cut (center + H_S)^side."""

    center: RealVector
    segment: InitialSegment
    side: int

    def __post_init__(self):
        if self.side not in (PLUS, MINUS):
            raise ValidationError("side must be +1 or -1")
        if not in_group(self.center):
            raise ValidationError("ball center must lie in the rational group")
        if truncate(self.center, self.segment) != self.center:
            raise ValidationError("ball center must be truncated to its segment")


@dataclass(frozen=True)
class NonBallCut:
    """The cut of all rational vectors below `realization`."""

    realization: RealVector
    segment: InitialSegment

    def __post_init__(self):
        x = self.realization
        if x.added is not None:
            raise ValidationError("non-ball realization carries no added coordinate")
        if classify_membership(x) is Membership.IN_GAMMA:
            raise ValidationError("not a cut realization: vector lies in the rational group")
        if truncate(x, self.segment) != x:
            raise ValidationError("realization support must lie inside the segment")
        if _minimal_segment(x) != self.segment:
            raise ValidationError("segment is not the least one whose truncation leaves the group")


CutDescriptor = Union[BallCut, NonBallCut]


def _minimal_segment(x: RealVector) -> InitialSegment:
    """Least initial segment S with truncate(x, S) outside the rational group."""
    for idx, c in x.entries:
        if not c.is_rational:
            return segment_upto(x.space, idx)
    if x.tail is not None:
        return full_segment(x.space)
    raise ValidationError("vector lies in the rational group")


def cut_from_vector(x: RealVector) -> NonBallCut:
    """Canonical descriptor of the cut realized by a base vector outside the group."""
    if x.added is not None:
        raise ValidationError("expected a base vector")
    if classify_membership(x) is Membership.IN_GAMMA:
        raise ValidationError("not a cut realization: vector lies in the rational group")
    seg = _minimal_segment(x)
    return NonBallCut(truncate(x, seg), seg)


def ball(center: RealVector, segment: InitialSegment, side: int) -> BallCut:
    return BallCut(truncate(center, segment), segment, side)


def improper_cut(space: IndexSet, side: int) -> BallCut:
    """side=+1 is the cut with everything on the left; side=-1 its mirror."""
    from .orders import empty_segment

    return BallCut(zero(space), empty_segment(), side)


def space_of(cut: CutDescriptor) -> IndexSet:
    if isinstance(cut, BallCut):
        return cut.center.space
    return cut.realization.space


def is_improper(cut: CutDescriptor) -> bool:
    return isinstance(cut, BallCut) and seg_is_empty(cut.segment)


def realize(cut: CutDescriptor) -> RealVector:
    """The canonical vector realizing the cut in the extended space.

    Ball cuts get the center plus a unit (with the side's sign) at the added
    index of their segment; that point sits strictly between the coset and
    the rest of the group, on the requested side.  Non-ball cuts are realized
    by their stored vector.
    """
    if isinstance(cut, NonBallCut):
        return cut.realization
    return add(cut.center, added_unit(cut.center.space, cut.segment, cut.side))


def invariance_segment(cut: CutDescriptor) -> InitialSegment:
    return cut.segment


def h_prime_segment(cut: CutDescriptor) -> InitialSegment:
    """Segment of the candidate immediate successor of the invariance group."""
    space = space_of(cut)
    m = seg_has_max(cut.segment, space)
    if m is None:
        return cut.segment
    return segment_below(space, m)


TYPE_BALL_GAP_PLUS = "(b+G)+"
TYPE_BALL_NOGAP_PLUS = "(b+NG)+"
TYPE_BALL_GAP_MINUS = "(b+G)-"
TYPE_BALL_NOGAP_MINUS = "(b+NG)-"
TYPE_NONBALL_GAP = "nb+G"
TYPE_NONBALL_NOGAP = "nb+NG"

BALL_TYPES = {TYPE_BALL_GAP_PLUS, TYPE_BALL_NOGAP_PLUS, TYPE_BALL_GAP_MINUS, TYPE_BALL_NOGAP_MINUS}

SYM_ALEPH0 = "aleph0"
SYM_KAPPA_S = "kappa(S)"
SYM_LAMBDA_S = "lambda(S)"
SYM_COFIN_S = "cofin(S)"
SYM_ZERO = "zero"
SYM_ONE = "one"

CardReport = tuple[str, Card]


@dataclass(frozen=True)
class ClassificationReport:
    type6: str
    subtype: Optional[tuple[str, str, str]]
    invariance: InitialSegment
    h_prime: InitialSegment
    vf: InitialSegment
    vf_stable: bool
    vi: InitialSegment
    vi_stable: bool
    kappa: CardReport
    lambda_: CardReport
    rank_increases: bool


def kappa_lambda(cut: CutDescriptor) -> tuple[CardReport, CardReport]:
    """Cofinality of the left side and coinitiality of the right side.

    Proper ball cuts follow the eight-subtype table; non-ball cuts have
    kappa = lambda (aleph_0 in the gap case, the cofinality of S otherwise).
    Improper cuts fall outside the tables: the full side has the cofinality
    of the group itself, the empty side reports zero.
    """
    space = space_of(cut)
    seg = cut.segment
    if is_improper(cut):
        whole = (SYM_ONE, Card.ONE) if space.is_trivial else (SYM_ALEPH0, Card.ALEPH0)
        nothing = (SYM_ZERO, Card.ZERO)
        return (whole, nothing) if cut.side == PLUS else (nothing, whole)

    gap = seg_has_max(seg, space) is not None
    k_s, l_s = boundary_cardinals(seg, space)
    if isinstance(cut, NonBallCut):
        if gap:
            return (SYM_ALEPH0, Card.ALEPH0), (SYM_ALEPH0, Card.ALEPH0)
        return (SYM_COFIN_S, k_s), (SYM_COFIN_S, k_s)

    from .orders import comp_has_min

    has_min = comp_has_min(seg, space) is not None
    al = (SYM_ALEPH0, Card.ALEPH0)
    ks = (SYM_KAPPA_S, k_s)
    ls = (SYM_LAMBDA_S, l_s)
    table = {
        (PLUS, True, True): (al, al),
        (PLUS, True, False): (ls, al),
        (PLUS, False, True): (al, ks),
        (PLUS, False, False): (ls, ks),
        (MINUS, True, True): (al, al),
        (MINUS, True, False): (al, ls),
        (MINUS, False, True): (ks, al),
        (MINUS, False, False): (ks, ls),
    }
    return table[(cut.side, gap, has_min)]


def classify(cut: CutDescriptor) -> ClassificationReport:
    space = space_of(cut)
    seg = cut.segment
    gap = seg_has_max(seg, space) is not None
    hp = h_prime_segment(cut)

    if isinstance(cut, BallCut):
        if cut.side == PLUS:
            type6 = TYPE_BALL_GAP_PLUS if gap else TYPE_BALL_NOGAP_PLUS
            vf, vf_stable = seg, True
            vi, vi_stable = (hp, True) if gap else (seg, False)
        else:
            type6 = TYPE_BALL_GAP_MINUS if gap else TYPE_BALL_NOGAP_MINUS
            vf, vf_stable = (hp, True) if gap else (seg, False)
            vi, vi_stable = seg, True
    else:
        if gap:
            type6 = TYPE_NONBALL_GAP
            vf, vf_stable = hp, True
            vi, vi_stable = hp, True
        else:
            type6 = TYPE_NONBALL_NOGAP
            vf, vf_stable = seg, False
            vi, vi_stable = seg, False

    subtype = None
    if isinstance(cut, BallCut) and not is_improper(cut):
        from .orders import comp_has_min

        subtype = (
            "+" if cut.side == PLUS else "-",
            "+" if gap else "-",
            "+" if comp_has_min(seg, space) is not None else "-",
        )

    kappa, lam = kappa_lambda(cut)
    return ClassificationReport(
        type6=type6,
        subtype=subtype,
        invariance=seg,
        h_prime=hp,
        vf=vf,
        vf_stable=vf_stable,
        vi=vi,
        vi_stable=vi_stable,
        kappa=kappa,
        lambda_=lam,
        rank_increases=type6 in BALL_TYPES,
    )


def shift_cut(cut: CutDescriptor, a: RealVector) -> CutDescriptor:
    """Translate the cut by a group element; the invariance segment is unchanged."""
    if not in_group(a):
        raise ValidationError("shift by an element outside the rational group")
    if isinstance(cut, BallCut):
        return ball(add(cut.center, a), cut.segment, cut.side)
    shifted = cut_from_vector(add(cut.realization, a))
    assert shifted.segment == cut.segment
    return shifted


def negate_cut(cut: CutDescriptor) -> CutDescriptor:
    if isinstance(cut, BallCut):
        return ball(negate(cut.center), cut.segment, -cut.side)
    return cut_from_vector(negate(cut.realization))


def side_of(a: RealVector, cut: CutDescriptor) -> str:
    """Which side of the cut a group element falls on.

    The realization of a plus-sided ball cut sits above its whole coset, so
    coset members land on the left, matching the convention that (a+H)^+
    keeps the coset in the lower set.
    """
    if not in_group(a):
        raise ValidationError("side test applies to rational group elements")
    return LEFT if cmp_lex(a, realize(cut)) < 0 else RIGHT


def orbit_equivalent(
    c1: CutDescriptor, c2: CutDescriptor
) -> Optional[tuple[int, RealVector]]:
    """A witness (eps, a) with c2 = eps*c1 + a under negation/translation, if any.

    Ball cuts are equivalent exactly when their segments agree (the side then
    fixes eps and any center difference supplies a).  Non-ball cuts with the
    same segment are equivalent when one of x2 -+ x1 lies in the rational
    group; both signs cannot work at once, so the witness is unique in eps.
    """
    if space_of(c1) != space_of(c2):
        raise ValidationError("cuts live over different index sets")
    if c1.segment != c2.segment:
        return None
    if isinstance(c1, BallCut) and isinstance(c2, BallCut):
        eps = PLUS if c1.side == c2.side else MINUS
        a = sub(c2.center, scale(eps, c1.center))
        return (eps, a)
    if isinstance(c1, NonBallCut) and isinstance(c2, NonBallCut):
        for eps in (PLUS, MINUS):
            w = sub(c2.realization, scale(eps, c1.realization))
            if in_group(w):
                return (eps, w)
        return None
    return None


def apply_orbit(cut: CutDescriptor, eps: int, a: RealVector) -> CutDescriptor:
    """The cut eps*cut + a."""
    if eps not in (PLUS, MINUS):
        raise ValidationError("eps must be +1 or -1")
    base = cut if eps == PLUS else negate_cut(cut)
    return shift_cut(base, a)
