"""cutkit: exact computation with cuts in lexicographically ordered rational
vector groups.

The package represents divisible ordered groups as finite-support rational
vectors over a finitely described index set, classifies every cut of such a
group into six types (with eight ball subtypes), computes invariance and
covariance groups, cofinalities and coinitialities, builds the ordered
extension a cut generates, and totally orders group elements together with
all cut points.  Everything is exact: rationals, the quadratic irrational
sqrt(2) for coordinates, and decidable comparisons throughout.
"""
from .coords import Coordinate, SQRT2, coord, simplest_between
from .cuts import (
    BallCut,
    ClassificationReport,
    CutDescriptor,
    LEFT,
    MINUS,
    NonBallCut,
    PLUS,
    RIGHT,
    apply_orbit,
    ball,
    classify,
    cut_from_vector,
    h_prime_segment,
    improper_cut,
    invariance_segment,
    is_improper,
    kappa_lambda,
    negate_cut,
    orbit_equivalent,
    realize,
    shift_cut,
    side_of,
    space_of,
)
from .errors import ParseError, PreconditionError, ValidationError
from .extension import ExtensionElement, element_value, ext_compare, ext_valuation, rank_increases
from .oracle import (
    OracleReport,
    SampleConfig,
    check_covariance,
    check_invariance,
    cofinal_sequence,
    gap_approach_sequence,
    sample_cuts,
    sample_elements,
    witness_separator,
)
from .orders import (
    INFINITY,
    AddedIndex,
    Atom,
    AtomKind,
    Card,
    Index,
    IndexSet,
    InitialSegment,
    OMEGA,
    OMEGA_OPP,
    boundary_cardinals,
    cmp_extended,
    cmp_index,
    cmp_valuation,
    comp_has_min,
    empty_segment,
    fin,
    full_segment,
    iter_indices,
    iter_segments,
    make_segment,
    seg_contains,
    seg_has_max,
    segment_below,
    segment_upto,
)
from .quasicuts import (
    CutPoint,
    Interior,
    QuasiCutPoint,
    between,
    induced_cut,
    point_value,
    qcut_compare,
    same_quasicut,
    to_point,
)
from .vectors import (
    Membership,
    RealVector,
    Tail,
    add,
    added_unit,
    build_vector,
    classify_membership,
    cmp_lex,
    in_group,
    natural_valuation,
    negate,
    scale,
    sub,
    tail_vector,
    truncate,
    unit,
    zero,
)

__version__ = "0.1.0"
