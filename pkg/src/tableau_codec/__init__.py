"""Rank and RSK encodings of i.i.d. uniform sequences, with limit-shape tools."""

from .errors import *  # noqa: F401,F403
from .limit_shape import (
    PolarPoint,
    ScaledPoint,
    arch,
    omega,
    phi_eval,
    profile_distance,
    psi_eval,
    r_theta,
    to_rotated,
)
from .rsk import (
    RskPair,
    dual_knuth_equivalent,
    inverse_rsk,
    knuth_equivalent,
    knuth_neighbors,
    row_insert,
    rsk,
)
from .schuetzenberger import Nerve, decode_first_nerve, nerve, nerve_endpoint, q_tableau_stream, sch_shift
from .tableau_core import (
    Cell,
    RealTableau,
    StandardTableau,
    YoungDiagram,
    cell_count,
    transpose,
    validate_real,
    validate_standard,
)
from .weyl import d_stat, decode_first_weyl, encode_weyl, ranking_from_z, shift_w

__version__ = "0.1.0"
