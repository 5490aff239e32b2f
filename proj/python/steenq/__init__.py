"""Cup-i products and Steenrod squares on finite simplicial complexes over F2."""

from steenq._core import (
    Cochain,
    ParseError,
    SimplicialComplex,
    bench,
    betti_numbers,
    coboundary,
    cup,
    delta_i,
    dump_complex,
    from_maximal_simplices,
    is_coboundary,
    is_cocycle,
    load_complex,
    space,
    space_names,
    sq,
    sq_matrix,
    sq_rank,
    suspension,
    wedge,
    __version__,
)

__all__ = [
    "Cochain",
    "ParseError",
    "SimplicialComplex",
    "bench",
    "betti_numbers",
    "coboundary",
    "cup",
    "delta_i",
    "dump_complex",
    "from_maximal_simplices",
    "is_coboundary",
    "is_cocycle",
    "load_complex",
    "space",
    "space_names",
    "sq",
    "sq_matrix",
    "sq_rank",
    "suspension",
    "wedge",
    "__version__",
]
