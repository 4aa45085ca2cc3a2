"""Exact computations with tuples of subspaces and their Minkowski matroids."""
from .errors import GuardError, VerificationError
from .field import RATIONALS, FieldSpec, Subspace, gf
from .tuples import SubspaceTuple, TupleClass, classify, defect, quotient_tuple, span_dim
from .matroid import Contraction, DegenerateCaseWarning, MinkowskiMatroid
from .poset import LatticeOfSets, Poset, birkhoff_poset, poset_iso_classes
from .bk import (
    BkDecomposition,
    Filtration,
    NotBKError,
    bk_decomposition,
    bk_sublattice,
    coordinate_basis,
    maximal_bk_filtration,
    realize_poset,
)
from .polymatroid import (
    FlatLattice,
    closure,
    distributive_decomposition,
    dual_partition,
    dual_realization,
    flats,
    forbidden_sublattice,
    poly_rank,
)
from .formats import ParseError, dump_poset, dump_tuple, parse_poset, parse_tuple
from .suite import GenConfig, SuiteReport, random_tuple, run_suite

__version__ = "0.1.0"
