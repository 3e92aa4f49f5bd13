//! Exact multivariate polynomials over the rationals: arithmetic, parsing and
//! canonical printing.

mod monomial;
mod parse;
mod polynomial;
mod vars;

use num_bigint::BigInt;
use thiserror::Error;

pub use monomial::Monomial;
pub(crate) use monomial::degrevlex_cmp;
pub use parse::{parse_poly, parse_with};
pub use polynomial::Polynomial;
pub use vars::{VarKind, VariableSet};

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

/// `num / den` as a [`Rational`]. Panics on a zero denominator.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("variable sets differ (n = {left} vs n = {right})")]
    VariableSetMismatch { left: usize, right: usize },
    #[error("variable index {index} out of range for {len} variables")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("point has {got} coordinates, expected {expected}")]
    PointLength { expected: usize, got: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{kind} at position {position}")]
pub struct ParseError {
    /// Byte offset into the source.
    pub position: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error("unknown variable '{0}'")]
    UnknownVariable(String),
    #[error("negative exponent")]
    NegativeExponent,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(src: &str, n: usize) -> Polynomial {
        parse_poly(src, VariableSet::new(n)).unwrap()
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(&p("y1 - 1", 3) + &p("1", 3), p("y1", 3));
        assert_eq!(&p("y2 - t3", 3) * &p("y3", 3), p("y2*y3 - t3*y3", 3));
        assert_eq!(&p("y1 - 1", 3) * &p("y1 + 1", 3), p("y1^2 - 1", 3));
    }

    #[test]
    fn mismatched_variable_sets_are_rejected() {
        let a = p("y1", 2);
        let b = p("y1", 3);
        assert_eq!(a.checked_add(&b), Err(PolyError::VariableSetMismatch { left: 2, right: 3 }));
        assert!(a.checked_mul(&b).is_err());
    }

    #[test]
    fn derivative_examples() {
        let vars = VariableSet::new(3);
        assert_eq!(p("y2 - t3*y1", 3).partial_derivative(vars.t(3)).unwrap(), p("-y1", 3));
        let vars4 = VariableSet::new(4);
        assert_eq!(p("y3^3", 4).partial_derivative(vars4.y(3)).unwrap(), p("3*y3^2", 4));
        assert_eq!(p("t2*y1", 3).d_y(1), p("t2", 3));
        assert!(p("y1", 3).partial_derivative(7).is_err());
    }

    #[test]
    fn evaluate_base_examples() {
        let t0 = [rat(0, 1), rat(0, 1), rat(5, 1)];
        assert_eq!(p("y2 - t3*y1", 3).evaluate_base(&t0).unwrap(), p("y2 - 5*y1", 3));
        let t0 = [rat(2, 1), rat(9, 1), rat(-1, 1)];
        assert_eq!(p("t1^2 + y1", 3).evaluate_base(&t0).unwrap(), p("4 + y1", 3));
        assert_eq!(p("7", 3).evaluate_base(&t0).unwrap(), p("7", 3));
        assert_eq!(
            p("y1", 3).evaluate_base(&t0[..2]),
            Err(PolyError::PointLength { expected: 3, got: 2 })
        );
    }

    #[test]
    fn y_degree_and_linear_parts() {
        let f = p("t1*y1*y2 + y3 - 2", 3);
        assert_eq!(f.y_degree(), Some(2));
        assert!(f.linear_y_parts().is_none());
        let g = p("t1*y2 + 3*y3 - t2", 3);
        let parts = g.linear_y_parts().unwrap();
        assert_eq!(parts[0], p("-t2", 3));
        assert_eq!(parts[1], p("0", 3));
        assert_eq!(parts[2], p("t1", 3));
        assert_eq!(parts[3], p("3", 3));
    }

    #[test]
    fn primitive_part_clears_denominators() {
        assert_eq!(p("-1/2*y1 + 1/3", 2).primitive_part(), p("3*y1 - 2", 2));
    }
}
