"""Exact simulation and classification of billiard orbits on square and rectangular tables."""
from .catalog import CatalogEntry, ClassCatalog, enumerate_classes, representative_orbit
from .errors import BilliardError, ConsistencyError, OddPeriodError
from .exact import (
    Rational,
    gcd,
    parse_rational,
    totatives,
    totient_bruteforce,
    totient_dft,
    totient_product,
)
from .kernel import BACKEND
from .render import render_folded, render_unfolded
from .simulator import simulate, simulate_reversed, step
from .table import (
    SQUARE,
    ClosedAfter,
    CollisionPoint,
    Generator,
    HitVertex,
    Side,
    Slope,
    TableSpec,
    Trajectory,
    Truncated,
    Vertex,
    normalize_generator,
    physical_coordinates,
)
from .unfolding import (
    GeneralizedDiagonal,
    NonPeriodic,
    Periodic,
    Singular,
    TileOrientation,
    canonical_representative,
    classify,
    fundamental_domain,
    generalized_diagonal,
    singular_starts,
    tile_orientation,
    unfold,
)

__version__ = "0.1.0"
