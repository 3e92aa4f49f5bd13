//! Finite-dimensional algebras at a point: tangent algebras, semisimplicity,
//! nilradicals, idempotents, Euler fields and super Frobenius algebras.

mod algebra;
mod euler;
mod idempotents;
mod superalg;
mod univariate;

use thiserror::Error;

pub use algebra::{
    fiber_algebra, fiber_algebra_from_ideal, is_semisimple, local_factor_count, nilpotency_profile, nilradical,
    trace_form, PointAlgebra,
};
pub use euler::{affine_bracket, euler_fields, EulerField, EulerPair, GradingData};
pub use idempotents::{minimal_polynomial, orthogonal_idempotents, IdempotentReport, SplittingSearch};
pub use superalg::{frobenius_invariance_check, odd_nilpotent_witness, OddWitness, Parity, SuperFrobeniusAlgebra};

use crate::fstructure::FError;
use crate::poly::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PointError {
    #[error("table shape does not match dimension {dim}")]
    Shape { dim: usize },
    #[error("b{a}*b{b} != b{b}*b{a}", a = a + 1, b = b + 1)]
    NotCommutative { a: usize, b: usize },
    #[error("product is not associative on basis elements ({}, {}, {})", a + 1, b + 1, c + 1)]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("unit fails on basis element {}", b + 1)]
    UnitFails { b: usize },
    #[error("fiber at {point:?} has dimension {found:?}, expected {expected}")]
    Rank { point: Vec<Rational>, expected: usize, found: Option<usize> },
    #[error("trace-form kernel vector {index} is not nilpotent")]
    NotNilpotent { index: usize },
    #[error("invalid grading: {0}")]
    Grading(String),
    #[error("supercommutativity fails on basis elements ({}, {})", a + 1, b + 1)]
    NotSupercommutative { a: usize, b: usize },
    #[error("product of basis elements {} and {} has a component on {} of the wrong parity", a + 1, b + 1, c + 1)]
    ParityNotAdditive { a: usize, b: usize, c: usize },
    #[error("pairing is degenerate")]
    DegeneratePairing,
    #[error("element is not a nonzero odd element")]
    NotOdd,
    #[error("odd element squares to a nonzero element")]
    OddSquareNonzero,
    #[error("no odd element pairs nontrivially with the given one")]
    NoDualElement,
    #[error("nilpotent witness failed verification")]
    WitnessCheck,
    #[error(transparent)]
    Structure(#[from] FError),
}

impl From<crate::groebner::GroebnerError> for PointError {
    fn from(e: crate::groebner::GroebnerError) -> Self {
        PointError::Structure(e.into())
    }
}
