"""The ordered extension generated by a cut: integer multiples of one new
element plus the rational group.

The new element realizes its defining cut, so ordering and valuation of
``m*x + b`` reduce to exact vector arithmetic on ``m * realize(cut) + b`` in
the extended space.  The extension adds a new archimedean class exactly for
ball cuts.
"""
from __future__ import annotations

from dataclasses import dataclass

from .cuts import CutDescriptor, realize, space_of
from .errors import ValidationError
from .vectors import RealVector, add, cmp_lex, in_group, natural_valuation, scale


@dataclass(frozen=True)
class ExtensionElement:
    """m*x + b, where x is the adjoined element of the cut's extension."""

    cut: CutDescriptor
    m: int
    b: RealVector

    def __post_init__(self):
        if not isinstance(self.m, int):
            raise ValidationError("coefficient m must be an integer")
        if not in_group(self.b):
            raise ValidationError("offset b must lie in the rational group")
        if self.b.space != space_of(self.cut):
            raise ValidationError("offset lives over a different index set")

    def __lt__(self, other):
        return ext_compare(self, other) < 0

    def __le__(self, other):
        return ext_compare(self, other) <= 0


def element_value(u: ExtensionElement) -> RealVector:
    return add(scale(u.m, realize(u.cut)), u.b)


def ext_compare(u: ExtensionElement, v: ExtensionElement) -> int:
    """Order of the extension, evaluated through the realization."""
    if u.cut != v.cut:
        raise ValidationError("elements belong to different extensions")
    return cmp_lex(element_value(u), element_value(v))


def ext_valuation(u: ExtensionElement):
    """Archimedean class of m*x + b; the added index appears only for ball cuts."""
    return natural_valuation(element_value(u))


def rank_increases(cut: CutDescriptor) -> bool:
    """Whether the extension adds a new archimedean class.

    Decided structurally from the realization: a new class exists exactly
    when the realizing vector carries an added coordinate.
    """
    return realize(cut).added is not None
