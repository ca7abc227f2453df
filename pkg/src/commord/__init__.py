"""commord: exact tools for matrix commutators of finite multiplicative order.

Decide when the k-th power of an n x n commutator can be the identity,
construct explicit witness pairs over cyclotomic fields and over arbitrary
unital coefficient rings, and turn a commutator of finite order inside a ring
into an explicit isomorphism with a full matrix ring.
"""

from .errors import (
    AlgebraError,
    DomainError,
    HypothesisNotSatisfied,
    InternalCheckFailed,
    NotACyclicConjugator,
    NotAUnit,
    NotInWeightSet,
    OracleTooLarge,
    RingMismatch,
    ShapeMismatch,
)
from .exact import (
    CycloScalar,
    Rational,
    ZmodScalar,
    cyclo_root,
    cyclotomic_polynomial,
    embed_order,
    scalar_inverse,
    scalar_is_unit,
)
from .rings import (
    CornerRing,
    CyclotomicField,
    DenseMatrix,
    FiniteAlgebra,
    IntegersMod,
    MatrixRing,
    QQ,
    RationalField,
    Ring,
    algebra_inverse,
    commutator,
    diagonal,
    identity,
    mat_inverse,
    mat_mul,
    mat_power,
    matrix,
    quantum_plane,
    ring_from_spec,
    ring_of,
    subring_corner,
    trace,
    zeros,
)
from .structure import (
    CyclicEquivalenceData,
    IdempotentSystem,
    MatrixUnitSystem,
    anticommutator_equiv_check,
    build_matrix_units,
    conjugator_to_cyclic,
    cyclic_to_conjugator,
    lagrange_projector,
    make_idempotents,
    phi,
    phi_inverse,
    quantum_plane_demo,
    structure_theorem,
)
from .weightset import (
    RootMultiset,
    WeightCertificate,
    build_root_multiset,
    decide,
    decompose,
    enumerate_zero_sums,
)
from .witness import (
    CentralUnitDecomposition,
    CommutatorWitness,
    build_C,
    build_DP,
    build_theorem32,
    commutator_pair,
    corollary_units,
    has_central_unit_decomposition,
    lemma_pd_check,
    realize_commutator,
    zero_diagonal_similarity,
)

__version__ = "0.1.0"
