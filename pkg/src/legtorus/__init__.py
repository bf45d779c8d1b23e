"""Legendrian torus knots: invariants, front diagrams, atlases, isotopy oracles."""

from .invariants import (
    Ambient,
    ContactMap,
    LegendrianClass,
    PeakSet,
    TorusKnotType,
    UnknotOutOfScope,
    act,
    act_type,
    change_ambient,
    destabilizations,
    is_realizable,
    legendrian_isotopic,
    mountain_range,
    normalize_type,
    peaks,
    stabilize_class,
    topologically_isotopic,
    twist_defined,
)
from .front import (
    Analysis,
    FrontError,
    FrontInvariants,
    FrontWord,
    analyze,
    cross,
    front_invariants,
    generate,
    left_cusp,
    mirror_z,
    negative_peak,
    positive_braid,
    reverse_orientation,
    right_cusp,
    stabilize_front,
    to_class,
    unknot_front,
    zero_section,
)
from .moves import (
    DISTINCT,
    EQUIVALENT,
    INCONCLUSIVE,
    CertifyResult,
    IllegalMove,
    MoveInstance,
    apply_move,
    canonical_key,
    certify_isotopic,
    legal_moves,
    parse_move,
    replay_path,
    rotate_front,
)
from .textio import Atlas, LfrontError, parse_lfront, print_lfront, render

__version__ = "0.1.0"
