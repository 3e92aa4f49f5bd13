//! Exact symbolic checks for commutative associative multiplications on the
//! tangent sheaf of an affine space over the rationals.
//!
//! Polynomials live in `K[y_1..y_n, t_1..t_n, z]`, where `t` are base
//! coordinates, `y` the dual fiber coordinates of the cotangent space, and
//! `z` an auxiliary variable reserved for radical membership tests.

pub mod fstructure;
pub mod groebner;
pub mod linalg;
pub mod point_algebra;
pub mod poisson;
pub mod poly;

pub use fstructure::{FError, FMultiplication, Route, VectorField};
pub use groebner::{GroebnerBasis, GroebnerConfig, GroebnerError, IdealPresentation, MonomialOrder};
pub use point_algebra::{PointAlgebra, PointError};
pub use poisson::{PoissonError, Stability};
pub use poly::{parse_poly, rat, ParseError, Polynomial, Rational, VariableSet};
