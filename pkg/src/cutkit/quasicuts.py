"""The total order on group elements together with cut points, and exact
density witnesses.

A quasi-cut point is either an interior point (an element of the rational
group) or a cut point (a canonical cut descriptor).  Comparing points
compares their realizations in the extended space; the map from interior
points is an order embedding, and between any two distinct points there is a
rational group element, produced deterministically by a Stern-Brocot search
at the first coordinate where the realizations diverge.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .coords import coord, simplest_between
from .cuts import CutDescriptor, ball, cut_from_vector, realize
from .errors import PreconditionError, ValidationError
from .orders import (
    AddedIndex,
    Index,
    element_of_difference,
    segment_below,
)
from .vectors import (
    RealVector,
    add,
    classify_membership,
    cmp_lex,
    coordinate_at,
    first_divergence,
    in_group,
    negate,
    sub,
    truncate,
    unit,
    zero,
    Membership,
)


@dataclass(frozen=True)
class Interior:
    vector: RealVector

    def __post_init__(self):
        if not in_group(self.vector):
            raise ValidationError("interior point must lie in the rational group")


@dataclass(frozen=True)
class CutPoint:
    cut: CutDescriptor


QuasiCutPoint = Union[Interior, CutPoint]


def point_value(p: QuasiCutPoint) -> RealVector:
    if isinstance(p, Interior):
        return p.vector
    return realize(p.cut)


def qcut_compare(p: QuasiCutPoint, q: QuasiCutPoint) -> int:
    return cmp_lex(point_value(p), point_value(q))


def induced_cut(x: RealVector) -> Optional[CutDescriptor]:
    """Canonical cut induced by an extended vector; None when x is interior.

    A vector with an added coordinate induces the ball cut of its truncated
    base part when that part is rational; the magnitude of the added
    coordinate is irrelevant, only its sign matters.  When the base part is
    itself irrational, the added coordinate is invisible to rational
    comparisons and the vector induces that non-ball cut instead.
    """
    if x.added is not None:
        seg, c = x.added
        base = RealVector(x.space, x.entries, x.tail, None)
        b = truncate(base, seg)
        if in_group(b):
            return ball(b, seg, 1 if c.sign() > 0 else -1)
        return cut_from_vector(b)
    if in_group(x):
        return None
    return cut_from_vector(x)


def same_quasicut(x: RealVector, y: RealVector) -> bool:
    """Whether two extended vectors induce the same quasi-cut point."""
    if x.space != y.space:
        raise ValidationError("vectors live over different index sets")
    cx, cy = induced_cut(x), induced_cut(y)
    if cx is None and cy is None:
        return x == y
    return cx == cy


def to_point(x: RealVector) -> QuasiCutPoint:
    c = induced_cut(x)
    return Interior(x) if c is None else CutPoint(c)


def between(p: QuasiCutPoint, q: QuasiCutPoint) -> RealVector:
    """A rational group element a with p <= a <= q, for p < q.

    When p is interior its own vector is the witness.  Otherwise the witness
    copies the realizations' common prefix and resolves the first divergence:
    at a base index by the simplest rational strictly between the two
    coordinate values, at an added index by the coset point itself or, when
    one side continues past the added index, by descending one more level.
    """
    if qcut_compare(p, q) >= 0:
        raise PreconditionError("between() needs p < q")
    if isinstance(p, Interior):
        return p.vector
    return _between_vectors(point_value(p), point_value(q))


def _between_vectors(rp: RealVector, rq: RealVector) -> RealVector:
    space = rp.space
    idx, _sign = first_divergence(rp, rq)
    lo = coordinate_at(rp, idx)
    hi = coordinate_at(rq, idx)

    if isinstance(idx, Index):
        prefix = truncate(rp, segment_below(space, idx))
        if not in_group(prefix):
            raise ValidationError("realizations share an irrational prefix")
        t = simplest_between(lo, hi)
        return add(prefix, unit(space, idx, t))

    seg = idx.segment
    prefix = truncate(rp, seg)
    if not in_group(prefix):
        raise ValidationError("realizations share an irrational prefix")
    los, his = lo.sign(), hi.sign()
    if (los, his) == (-1, 1):
        return prefix
    if (los, his) == (0, 1):
        return negate(_between_vectors(negate(rq), negate(rp)))
    assert (los, his) == (-1, 0)
    w = sub(rq, prefix)
    if cmp_lex(w, zero(space)) == 0:
        return prefix
    if w.added is None and classify_membership(w) is Membership.IN_GAMMA:
        return rq
    if cmp_lex(w, zero(space)) > 0:
        return prefix
    # rq sits below the prefix; step under its leading term
    lead, _s = first_divergence(w, zero(space))
    if isinstance(lead, Index):
        v = coordinate_at(w, lead)
        t = simplest_between(v - coord(1), v)
        return add(prefix, unit(space, lead, t))
    j = element_of_difference(lead.segment, seg, space)
    return add(prefix, unit(space, j, Fraction(-1)))
