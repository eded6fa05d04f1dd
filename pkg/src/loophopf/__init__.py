"""Exact computations with Hopf structures on truncated loop path coalgebras.

The loop quiver has one path ``α_n`` of each length.  Its path coalgebra,
truncated to lengths below ``N``, is k↻_N; this package builds candidate
multiplications on it over GF(p^k), verifies the Hopf axioms exactly, and
classifies the commutative ones through the Frobenius map.
"""

from .endo import LambdaSeq
from .errors import (
    ClassificationError,
    ExtensionRequiredError,
    IncompatibleFieldError,
    InvalidInputError,
    LoopHopfError,
    NotHopfError,
    NotInvertibleError,
    TableFormatError,
    VerificationError,
)
from .families import (
    FamilyParams,
    build_dual_cyclic,
    build_graded,
    build_Lnd,
    build_nc2,
    relation_suite,
)
from .hopf import MultTable, classify, multiply, verify
from .loop_coalgebra import LoopElement, basis, comult, counit
from .scalars import GF, FieldElement, field, lucas_binom

__version__ = "0.1.0"

__all__ = [
    "GF",
    "ClassificationError",
    "ExtensionRequiredError",
    "FamilyParams",
    "FieldElement",
    "IncompatibleFieldError",
    "InvalidInputError",
    "LambdaSeq",
    "LoopElement",
    "LoopHopfError",
    "MultTable",
    "NotHopfError",
    "NotInvertibleError",
    "TableFormatError",
    "VerificationError",
    "basis",
    "build_Lnd",
    "build_dual_cyclic",
    "build_graded",
    "build_nc2",
    "classify",
    "comult",
    "counit",
    "field",
    "lucas_binom",
    "multiply",
    "relation_suite",
    "verify",
]
