"""Graph and lattice constructors."""
from .embed import face_census, trace_faces, trace_faces_sphere
from .euclidean import (
    FAMILIES,
    FiniteLattice,
    PeriodicLattice,
    euclidean_lattice,
    family_lattice,
    finite_lattice,
    graphene_lattice,
    heptagon_pentagon_graphene_lattice,
    heptagon_pentagon_kagome_lattice,
    kagome_lattice,
    lieb_lattice,
    medial_lattice,
    octagon_square_kagome_lattice,
    octagon_square_lattice,
    square_lattice,
)
from .named import (
    c60_graph,
    c60_graph_with_positions,
    complete_graph,
    cycle_graph,
    path_graph,
    petersen_graph,
    tree_ball,
)
from .tessellation import TessellationBall, tessellation_ball
from .transforms import hoffman_layout, line_graph, subdivision_graph

__all__ = [
    "FAMILIES",
    "FiniteLattice",
    "PeriodicLattice",
    "TessellationBall",
    "c60_graph",
    "c60_graph_with_positions",
    "complete_graph",
    "cycle_graph",
    "euclidean_lattice",
    "face_census",
    "family_lattice",
    "finite_lattice",
    "graphene_lattice",
    "heptagon_pentagon_graphene_lattice",
    "heptagon_pentagon_kagome_lattice",
    "hoffman_layout",
    "kagome_lattice",
    "lieb_lattice",
    "line_graph",
    "medial_lattice",
    "octagon_square_kagome_lattice",
    "octagon_square_lattice",
    "path_graph",
    "petersen_graph",
    "square_lattice",
    "subdivision_graph",
    "tessellation_ball",
    "trace_faces",
    "trace_faces_sphere",
    "tree_ball",
]
