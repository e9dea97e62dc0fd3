"""Definition-level verifiers: seeded sampling, separator witnesses, cofinal
sequences, and sampled consistency checks between the classification tables
and the defining properties of invariance and covariance groups.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .coords import Coordinate, coord, rising_rationals, simplest_between
from .cuts import (
    LEFT,
    MINUS,
    PLUS,
    RIGHT,
    BallCut,
    ClassificationReport,
    CutDescriptor,
    NonBallCut,
    TYPE_NONBALL_GAP,
    TYPE_NONBALL_NOGAP,
    ball,
    classify,
    cut_from_vector,
    negate_cut,
    realize,
    side_of,
    space_of,
)
from .errors import PreconditionError, ValidationError
from .orders import (
    AddedIndex,
    AtomKind,
    Card,
    Index,
    IndexSet,
    InitialSegment,
    cmp_valuation,
    comp_has_min,
    iter_indices,
    iter_segments,
    seg_contains,
    seg_is_empty,
    segment_below,
    segment_upto,
    seg_has_max,
)
from .vectors import (
    RealVector,
    Tail,
    add,
    build_vector,
    cmp_lex,
    coordinate_at,
    natural_valuation,
    sub,
    support_indices,
    truncate,
    unit,
    zero,
)


@dataclass(frozen=True)
class SampleConfig:
    max_denominator: int = 8
    max_support: int = 4
    max_label: int = 6
    count: int = 200
    seed: int = 0

    def __post_init__(self):
        for name in ("max_denominator", "max_support", "max_label", "count"):
            if getattr(self, name) < 1:
                raise ValidationError(f"{name} must be >= 1")


def rational_pool(bound: int) -> list[Fraction]:
    """All p/q in lowest terms with |p| <= bound and 1 <= q <= bound, plus 0."""
    vals = {Fraction(0)}
    for q in range(1, bound + 1):
        for p in range(-bound, bound + 1):
            vals.add(Fraction(p, q))
    return sorted(vals)


def sample_elements(space: IndexSet, cfg: SampleConfig) -> list[RealVector]:
    """Deterministic rational vectors within the config bounds.

    The zero vector comes first, then the unit vectors with labels up to the
    bound, then seeded pseudo-random vectors until `count` is reached.
    """
    rng = random.Random(cfg.seed)
    indices = iter_indices(space, cfg.max_label)
    out = [zero(space)]
    out.extend(unit(space, i) for i in indices)
    pool = [q for q in rational_pool(cfg.max_denominator) if q != 0]
    while len(out) < cfg.count:
        if indices:
            k = rng.randint(0, min(cfg.max_support, len(indices)))
            supp = rng.sample(indices, k)
            out.append(build_vector(space, [(i, rng.choice(pool)) for i in supp]))
        else:
            out.append(zero(space))
    return out[: cfg.count]


def sample_cuts(space: IndexSet, cfg: SampleConfig, include_improper: bool = False) -> list[CutDescriptor]:
    """Seeded mix of ball and non-ball descriptors over the space."""
    rng = random.Random(cfg.seed + 0x5EED)
    elements = sample_elements(space, cfg)
    segments = iter_segments(space, cfg.max_label)
    proper_segments = [s for s in segments if not seg_is_empty(s)]
    indices = iter_indices(space, cfg.max_label)
    pool = [q for q in rational_pool(cfg.max_denominator) if q != 0]
    has_tail_atom = bool(space.atoms) and space.atoms[-1].kind is AtomKind.OMEGA

    out: list[CutDescriptor] = []
    while len(out) < cfg.count:
        roll = rng.random()
        if roll < 0.5 or not indices:
            segs = segments if include_improper else proper_segments
            if not segs:
                segs = segments
            s = rng.choice(segs)
            c = rng.choice(elements)
            out.append(ball(c, s, rng.choice((PLUS, MINUS))))
        elif roll < 0.8 or not has_tail_atom:
            i = rng.choice(indices)
            prefix = truncate(rng.choice(elements), segment_below(space, i))
            xi = Coordinate(rng.choice(pool + [Fraction(0)]), rng.choice(pool))
            out.append(cut_from_vector(add(prefix, unit(space, i, xi))))
        else:
            start = Index(space.natoms, rng.randint(1, cfg.max_label))
            prefix = truncate(rng.choice(elements), segment_below(space, start))
            v = rng.choice(pool)
            out.append(
                cut_from_vector(
                    build_vector(space, prefix.entries, tail=Tail(v, start))
                )
            )
    return out[: cfg.count]


def witness_separator(cut: CutDescriptor, h: RealVector) -> RealVector:
    """An element d with d on the left of the cut and d + h on the right.

    Defined for positive h outside the invariance group; d copies the
    realization below the leading index of h and undercuts the realization
    coordinate there by a Stern-Brocot rational from (x_i - h_i, x_i).  For a
    plus-sided ball cut whose center vanishes past that index inside the
    segment, the coset value x_i itself is admissible and may win as the
    simpler witness.
    """
    space = space_of(cut)
    if h.space != space:
        raise ValidationError("witness argument lives over a different index set")
    if h.added is not None or cmp_lex(h, zero(space)) <= 0:
        raise PreconditionError("h must be a positive group element")
    i = natural_valuation(h)
    if not seg_contains(cut.segment, i, space):
        raise PreconditionError("h lies in the invariance group; no separator exists")
    x = realize(cut)
    x_i = coordinate_at(x, i)
    h_i = coordinate_at(h, i)
    prefix = truncate(x, segment_below(space, i))
    include_hi = False
    if isinstance(cut, BallCut) and cut.side == PLUS and x_i.is_rational:
        rest = sub(cut.center, truncate(cut.center, segment_upto(space, i)))
        include_hi = cmp_lex(rest, zero(space)) >= 0
    q = simplest_between(x_i - h_i, x_i, include_hi=include_hi)
    return add(prefix, unit(space, i, q))


def cofinal_sequence(cut: CutDescriptor, n: int) -> list[RealVector]:
    """Strictly increasing left elements undercutting the first n support
    indices of a non-ball, no-gap realization; their image is cofinal in the
    lower set."""
    if n < 1:
        raise PreconditionError("need n >= 1")
    if classify(cut).type6 != TYPE_NONBALL_NOGAP:
        raise PreconditionError("cofinal_sequence applies to nb+NG cuts")
    space = space_of(cut)
    x = cut.realization
    out = []
    for s in support_indices(x, n):
        prefix = truncate(x, segment_below(space, s))
        q = coordinate_at(x, s) - coord(Fraction(1, 2))
        out.append(add(prefix, unit(space, s, q)))
    return out


def gap_approach_sequence(cut: CutDescriptor, n: int) -> list[RealVector]:
    """Strictly increasing left elements converging to an nb+G cut.

    Replaces the single irrational coordinate at the top of the segment by a
    rising run of mediant-tree rationals.
    """
    if n < 1:
        raise PreconditionError("need n >= 1")
    if classify(cut).type6 != TYPE_NONBALL_GAP:
        raise PreconditionError("gap_approach_sequence applies to nb+G cuts")
    space = space_of(cut)
    x = cut.realization
    top = seg_has_max(cut.segment, space)
    prefix = truncate(x, segment_below(space, top))
    xi = coordinate_at(x, top)
    return [add(prefix, unit(space, top, q)) for q in rising_rationals(xi, n)]


@dataclass
class OracleReport:
    violations: list[str] = field(default_factory=list)
    checked: int = 0
    seed: int = 0

    @property
    def ok(self) -> bool:
        return not self.violations

    def merge(self, other: "OracleReport") -> "OracleReport":
        return OracleReport(self.violations + other.violations, self.checked + other.checked, self.seed)


def check_invariance(
    cut: CutDescriptor, cfg: SampleConfig, claimed_segment: Optional[InitialSegment] = None
) -> OracleReport:
    """Sampled definitional test of the invariance group against its segment.

    Claimed members (valuation outside the segment) must leave every sampled
    element on its side of the cut; claimed non-members must admit an exact
    separator witness.  Membership is certified only on samples,
    non-membership exactly.
    """
    space = space_of(cut)
    seg = claimed_segment if claimed_segment is not None else cut.segment
    elements = sample_elements(space, cfg)
    positives = [h for h in elements if cmp_lex(h, zero(space)) > 0]
    rep = OracleReport(seed=cfg.seed)
    r = realize(cut)
    sides = {}
    for a in elements:
        sides[a] = LEFT if cmp_lex(a, r) < 0 else RIGHT
    for h in positives:
        i = natural_valuation(h)
        if seg_contains(seg, i, space):
            rep.checked += 1
            try:
                d = witness_separator(cut, h)
            except (PreconditionError, ValidationError) as exc:
                rep.violations.append(f"separator failed for h={h}: {exc}")
                continue
            if side_of(d, cut) != LEFT or side_of(add(d, h), cut) != RIGHT:
                rep.violations.append(f"separator contract failed for h={h}: d={d}")
        else:
            for a in elements:
                rep.checked += 1
                moved = add(a, h)
                m_side = LEFT if cmp_lex(moved, r) < 0 else RIGHT
                if m_side != sides[a]:
                    rep.violations.append(
                        f"claimed invariant h={h} moved a={a} across the cut"
                    )
                    break
    return rep


def _left_candidates(cut: CutDescriptor, cfg: SampleConfig) -> list[tuple[RealVector, object]]:
    """Left elements paired with the valuation of (realization - element).

    Includes constructed elements matching the realization up to each probe
    depth inside the segment, plus the plus-sided ball center, plus sampled
    left elements.
    """
    space = space_of(cut)
    r = realize(cut)
    base = RealVector(space, r.entries, r.tail, None)
    cands: list[RealVector] = []
    for j in iter_indices(space, cfg.max_label):
        if not seg_contains(cut.segment, j, space):
            continue
        prefix = truncate(base, segment_below(space, j))
        rj = coordinate_at(r, j)
        if rj.is_rational:
            q: object = rj.a - Fraction(1, 2)
        else:
            q = simplest_between(rj - coord(1), rj)
        cands.append(add(prefix, unit(space, j, q)))
    if isinstance(cut, BallCut) and cut.side == PLUS:
        cands.append(cut.center)
    for a in sample_elements(space, cfg)[: max(40, cfg.max_label * 4)]:
        if cmp_lex(a, r) < 0:
            cands.append(a)
    out = []
    for d in cands:
        if cmp_lex(d, r) >= 0:
            continue
        out.append((d, natural_valuation(sub(r, d))))
    return out


def _check_covariance_side(
    cut: CutDescriptor, claimed_seg: InitialSegment, claimed_stable: bool,
    cfg: SampleConfig, label: str,
) -> OracleReport:
    space = space_of(cut)
    rep = OracleReport(seed=cfg.seed)
    cands = _left_candidates(cut, cfg)
    if not cands:
        return rep
    for i in iter_indices(space, cfg.max_label):
        claimed_member = not seg_contains(claimed_seg, i, space)
        rep.checked += 1
        if claimed_member:
            for d, v in cands:
                if cmp_valuation(v, i, space) > 0:
                    rep.violations.append(
                        f"{label}: unit at {i} claimed inside the covariance group, "
                        f"but d={d} separates it"
                    )
                    break
        else:
            if not any(cmp_valuation(v, i, space) > 0 for _, v in cands):
                rep.violations.append(
                    f"{label}: unit at {i} claimed outside the covariance group, "
                    f"no witness found"
                )
    targets: list[object] = [AddedIndex(claimed_seg)]
    m = comp_has_min(claimed_seg, space)
    if m is not None:
        targets.append(m)
    rep.checked += 1
    attained = any(
        any(cmp_valuation(v, t, space) == 0 for t in targets) for _, v in cands
    )
    if claimed_stable and not attained:
        rep.violations.append(f"{label}: claimed stable but no element attains the group")
    if not claimed_stable and attained:
        rep.violations.append(f"{label}: claimed unstable but the group is attained")
    return rep


def check_covariance(
    cut: CutDescriptor, cfg: SampleConfig, claims: Optional[ClassificationReport] = None
) -> OracleReport:
    """Sampled definitional test of the covariance rows of a classification.

    The final covariance group of the cut, and of its negation (which equals
    the initial covariance group), are probed through valuations of
    realization differences; stability means the group is attained at a
    single left element.
    """
    report = claims if claims is not None else classify(cut)
    rep = _check_covariance_side(cut, report.vf, report.vf_stable, cfg, "vf")
    rep = rep.merge(
        _check_covariance_side(negate_cut(cut), report.vi, report.vi_stable, cfg, "vi")
    )
    rep.seed = cfg.seed
    return rep
