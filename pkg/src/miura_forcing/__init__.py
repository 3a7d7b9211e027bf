"""Forcing sets for Miura-ori crease patterns via 3-colorings of grid graphs."""
from .coloring import (
    GridColoring,
    PreconditionError,
    coloring_to_mv,
    diagonal_coloring,
    edge_weight,
    is_valid_coloring,
    mv_to_coloring,
    standard_coloring,
)
from .completion import Infeasible, complete_partial
from .constructions import DominoTiling, canonical_tiling, domino_forcing_standard, greedy_forcing
from .controlling import comb_spanning_tree, is_controlling
from .core import (
    MOUNTAIN,
    VALLEY,
    CreaseId,
    GridSize,
    MVAssignment,
    NodeId,
    PartialMVAssignment,
    all_creases,
    is_locally_flat_foldable,
    node_star,
    standard_assignment,
)
from .digraph import AuxDigraph, build_aux_digraph, build_partial_digraph, check_eulerian, is_forcing
from .instance import InstanceDocument, InstanceError, parse_instance, serialize_instance
from .min_forcing import min_feedback_arc_set, min_forcing_set
from .render import RenderConfig, render_ascii, render_svg
from .sampling import count_colorings, random_coloring

__version__ = "0.1.0"
