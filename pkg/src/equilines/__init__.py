"""Equiangular line sets: constructions, certification, and SIC search."""

from .linesets import (
    COMPLEX,
    REAL,
    Certificate,
    LineSet,
    certify_equiangular,
    gerzon_bound,
    gram,
    psd_rank,
    saturating_alpha,
)
from .constructions import (
    FanoPlane,
    fano_28_lines,
    fano_incidence,
    hexagon_lines,
    icosahedron_lines,
    octonion_multiply,
    restrict_to_hyperplane,
)
from .golay import GolayCode, golay_codewords
from .leech import (
    default_type3,
    is_leech_vector,
    leech_176_lines,
    leech_276_lines,
    leech_type,
    leech_type_vectors,
)
from .seidel import (
    Graph,
    graph_from_seidel,
    is_strongly_regular,
    lines_from_seidel,
    negate_line_vector,
    seidel_from_gram,
    seidel_from_graph,
    switch,
    switching_equivalent,
)
from .whsic import (
    Fiducial,
    SicCertificate,
    born_probabilities,
    certify_sic,
    clock_z,
    displacement,
    frame_potential,
    frame_potential_gradient,
    frame_potential_minimum,
    overlap_phases,
    reconstruct_state,
    search_fiducial,
    shift_x,
    three_qubit_orbit,
    wh_orbit,
)

__version__ = "0.1.0"
