//! Multiplications on the tangent sheaf of an affine base, the structure
//! identity, and the spectral cover they define.

mod families;
mod field;
mod models;
mod multiplication;
mod spectral;

use thiserror::Error;

pub use families::{family1, family2, family2_rho, ExampleFamily};
pub use field::{lie_bracket, VectorField};
pub use models::{cyclic_model, semisimple_model};
pub use multiplication::{
    check_structure_identity, is_f_manifold, multiply_fields, structure_defect, structure_identity_defect,
    unit_compatibility_defect, DefectLocation, DefectWitness, FMultiplication, FVerdict, IdentityCheck, Route,
};
pub use spectral::{
    fiber_quotient, multiplication_from_ideal, radical_matches, sample_points, spectral_cover_ideal, spectral_cover_rank_check,
    spectral_radical, RankCheck, RankFailure, RankFailureKind,
};

use crate::groebner::GroebnerError;
use crate::poisson::PoissonError;
use crate::poly::{ParseError, PolyError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FError {
    #[error("expected {expected} entries, got {got}")]
    Dimension { expected: usize, got: usize },
    #[error("coefficient {0} is not a function of the base variables")]
    NotBaseCoefficient(String),
    #[error("{0} is not fiber-linear, so it is not the symbol of a vector field")]
    NotASymbol(String),
    #[error("operands live over different variable sets")]
    VariableSetMismatch,
    #[error("multiplication is not commutative: e{a}*e{b} != e{b}*e{a}")]
    NotCommutative { a: usize, b: usize },
    #[error("multiplication is not associative on (e{a}, e{b}, e{c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("identity field fails on e{b}")]
    IdentityFails { b: usize },
    #[error("index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("routes disagree: identity says {identity}, spectral says {spectral}")]
    RouteDisagreement { identity: bool, spectral: bool },
    #[error("the auxiliary variable z may not appear here")]
    AuxVariable,
    #[error("the ideal is the unit ideal")]
    UnitIdeal,
    #[error("y1 is not congruent to 1 modulo the ideal")]
    UnitNotFirstCoordinate,
    #[error("y{index} is not a standard monomial, so y1..yn are not a fiber basis")]
    FiberBasis { index: usize },
    #[error("normal form of y{a}*y{b} is not linear in the fiber variables: {normal_form}")]
    NotLinear { a: usize, b: usize, normal_form: String },
    #[error("fibers are not single points (failed at y{index})")]
    NotLocal { index: usize },
    #[error("invalid rho: {0}")]
    InvalidRho(String),
    #[error("family needs n >= {min}, got {n}")]
    FamilyDimension { n: usize, min: usize },
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
    #[error(transparent)]
    Poisson(#[from] PoissonError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Parse(#[from] ParseError),
}
