"""Exact computation on finite hyperrings.

Validate the axioms, generate the strongly regular relations built from sums
of products, compute the fundamental equivalences by congruence closure, and
study the resulting quotient rings.
"""
from .catalog import catalog, parse_catalog_spec, standard_catalog
from .closure import Partition, QuotientAxioms, smallest_regular, starred
from .core import (
    HyperOp,
    Hyperring,
    HyperstructureError,
    PreconditionError,
    StructureError,
    elements,
    extend,
    mask_of,
    validate,
)
from .document import DocumentError, parse, serialize
from .expr import Bounds, SumOfProducts, evaluate, parse_expression
from .oracle import cross_validate, minimal_partition
from .quotient import build_quotient, check_fiber_identities, kernel_fibers
from .relations import (
    Relation,
    generate,
    is_strongly_regular,
    saturated_generate,
    transitive_closure,
)

__version__ = "0.1.0"

__all__ = [
    "Bounds", "DocumentError", "HyperOp", "Hyperring", "HyperstructureError",
    "Partition", "PreconditionError", "QuotientAxioms", "Relation", "StructureError",
    "SumOfProducts", "build_quotient", "catalog", "check_fiber_identities",
    "cross_validate", "elements", "evaluate", "extend", "generate", "is_strongly_regular",
    "kernel_fibers", "mask_of", "minimal_partition", "parse", "parse_catalog_spec",
    "parse_expression", "saturated_generate", "serialize", "smallest_regular",
    "standard_catalog", "starred", "transitive_closure", "validate",
]
