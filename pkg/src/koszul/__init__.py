"""Exact bar and cobar constructions, group homology, Chevalley-Eilenberg and
Harrison complexes, and Hopf invariants from bar cocycles."""

from .barcobar import (
    BarComplex,
    CobarComplex,
    HarrisonComplex,
    TensorWord,
    bar,
    cobar,
    counit_and_check,
    group_bar,
    group_ring,
    harrison_complex,
    shuffle_product,
)
from .dg import (
    CONVENTION,
    Complex,
    DgAlgebra,
    DgCoalgebra,
    GradedModule,
    HomologyReport,
    algebra_from_tables,
    dualize,
    homology,
    verify_complex,
    verify_dga,
    verify_dgc,
)
from .errors import (
    InvariantBreach,
    KoszulError,
    ParseError,
    PreconditionError,
    VerificationError,
    WindowTooSmall,
)
from .hopf import (
    AlgebraMap,
    BarCocycle,
    QuadraticData,
    SphereModel,
    hopf_invariant,
    integrate,
    parametrized_formula,
    weight_reduce,
)
from .lie import (
    GradedLieAlgebra,
    HopfAlgebraData,
    chevalley_eilenberg,
    free_lie,
    lie_quotient,
    primitives,
    tensor_hopf_algebra,
)
from .linalg import SmithForm, SparseMatrix, kernel_basis, rank, smith_normal_form, solve_particular
from .simplicial import (
    CollapsePair,
    GroupTable,
    SimplicialComplex,
    chains_with_coproduct,
    classifying_complex,
    collapse_quotient,
)

__version__ = "0.1.0"
