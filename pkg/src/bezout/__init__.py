"""Exact arithmetic over commutative Bezout rings: gcd with certified
cofactors, diagonal matrix reduction with explicit unimodular transforms,
element-structure classification, and brute-force verification of the
element/quotient-ring equivalences on finite quotients."""

__version__ = "0.1.0"

from .errors import (
    BezoutError,
    FactorizationBudgetExceeded,
    InternalCheckFailed,
    MalformedInput,
    NoNontrivialIdempotent,
    NotComaximal,
    NotDivisible,
    NotRegular,
    PreconditionFailed,
    RingMismatch,
    SearchExhausted,
    TooLarge,
    TraceInvariantViolation,
    UnitModulus,
    UnitOrZeroInput,
    UnsupportedRing,
    ZeroInput,
    ZeroModulus,
)
from .rings import ExtendedGcd, Ring, RingElement
from .instances import (
    IntegerRing,
    PolynomialRing,
    PrincipalIdeal,
    QuotientRing,
    annihilator_generator,
    make_quotient,
    parse_element,
    parse_ring,
)
from .analysis import StructureReport, Verdict, analyze_ring, jacobson_radical
from .structure import (
    ComaximalFactorization,
    InRadical,
    SplitWitness,
    adequate_split,
    avoidable_decompose,
    comaximal_refinement,
    gelfand_decompose,
    is_atom,
    is_inpseudo_irreducible,
    is_pseudo_irreducible,
    is_regular,
    semipotent_witness,
)
from .matrices import (
    DiagonalReduction,
    MatrixOverRing,
    Theorem21Trace,
    diagonal_reduce,
    gelfand_range_1_witness,
    hermite_reduce_pair,
    matrix_from_json,
    reduce_2x2_theorem21,
    snf_oracle_integers,
    verify_reduction,
)

__all__ = [
    "BezoutError",
    "ComaximalFactorization",
    "DiagonalReduction",
    "ExtendedGcd",
    "FactorizationBudgetExceeded",
    "InRadical",
    "IntegerRing",
    "InternalCheckFailed",
    "MalformedInput",
    "MatrixOverRing",
    "NoNontrivialIdempotent",
    "NotComaximal",
    "NotDivisible",
    "NotRegular",
    "PolynomialRing",
    "PreconditionFailed",
    "PrincipalIdeal",
    "QuotientRing",
    "Ring",
    "RingElement",
    "RingMismatch",
    "SearchExhausted",
    "SplitWitness",
    "StructureReport",
    "Theorem21Trace",
    "TooLarge",
    "TraceInvariantViolation",
    "UnitModulus",
    "UnitOrZeroInput",
    "UnsupportedRing",
    "Verdict",
    "ZeroInput",
    "ZeroModulus",
    "adequate_split",
    "analyze_ring",
    "annihilator_generator",
    "avoidable_decompose",
    "comaximal_refinement",
    "diagonal_reduce",
    "gelfand_decompose",
    "gelfand_range_1_witness",
    "hermite_reduce_pair",
    "is_atom",
    "is_inpseudo_irreducible",
    "is_pseudo_irreducible",
    "is_regular",
    "jacobson_radical",
    "make_quotient",
    "matrix_from_json",
    "parse_element",
    "parse_ring",
    "reduce_2x2_theorem21",
    "semipotent_witness",
    "snf_oracle_integers",
    "verify_reduction",
]
