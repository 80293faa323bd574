"""Left-right pairs of SL2(N0) Moebius transformations and their forests.

All arithmetic is exact. The main entry points:

>>> from moebius_forest import Matrix, is_left_right_pair, CALKIN_WILF, find_root
>>> is_left_right_pair(Matrix(1, 1, 0, 1), Matrix(1, 0, 1, 1))
True
>>> find_root(CALKIN_WILF, ExtendedRational(3, 5)).word
'RLR'
"""

from .errors import (
    DomainError,
    GuardExhaustedError,
    InfiniteDiameterError,
    InvalidMatrixError,
    MoebiusError,
    NotAPairError,
    ParseError,
    PoleError,
    WitnessSearchError,
)
from .exact import INF, ONE, ZERO, ExtendedRational, GaussianRational, compare, gaussian_div
from .forest import (
    CALKIN_WILF,
    Classification,
    ForestConfig,
    Mode,
    RootResult,
    classify_vertex,
    contraction_trace,
    descend,
    enumerate_tree,
    find_root,
)
from .moebius import (
    IDENTITY,
    Matrix,
    PathWord,
    Slice,
    apply_boundary,
    apply_interior,
    compose,
    contains_interior,
    contraction_bound,
    diam,
    evaluate_word,
    inverse_apply,
    mk_matrix,
    power,
    slice_of,
)
from .pairs import PairVerdict, disjointness_oracle, enumerate_sl2n, is_left_right_pair, verify_pairs
from .render import RenderSpec, render_svg

__version__ = "0.1.0"
