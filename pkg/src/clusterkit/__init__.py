"""clusterkit: cluster algebra seeds over exact Laurent polynomials,
triangulations of (punctured) discs, and translation quivers built from
polygon diagonals, with the m-th power construction tying them together."""

from .laurent import (
    DivisionByZero,
    LaurentPoly,
    NotDivisible,
    VarCountMismatch,
    compare,
)
from .mutation import (
    BUDGET_EXHAUSTED,
    FINITE,
    Budget,
    ExchangeMatrix,
    IndexOutOfRange,
    MutationClassReport,
    NotSignSymmetric,
    Seed,
    canonical_seed,
    enumerate_class,
    mutate_matrix,
    mutate_seed,
)
from .quiver import (
    NotSkewSymmetric,
    OpposedArrows,
    Quiver,
    TranslationQuiver,
    components,
    is_stable_translation,
    matrix_from_quiver,
    power,
    quiver_from_matrix,
    tq_isomorphic,
)
from .disc import (
    Arc,
    ArcNotInTriangulation,
    Boundary,
    Disc,
    InvalidArc,
    InvalidDisc,
    InvalidTriangleData,
    NotFlippable,
    SurfaceSignature,
    Triangle,
    Triangulation,
    all_arcs,
    b_matrix,
    b_matrix_from_triangles,
    compatible,
    crossing,
    flip,
    rank,
    seed_of,
    triangulations,
)
from .geom import (
    GeomParams,
    gamma_A,
    gamma_D,
    is_m_arc,
    is_m_diagonal,
    m_diagonals,
    m_move,
    max_noncrossing,
)

__version__ = "0.1.0"
