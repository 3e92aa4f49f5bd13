use std::fmt;

use super::FError;
use crate::poly::{Polynomial, Rational, VariableSet};

/// A vector field `Σ a_i(t) ∂_i` with polynomial coefficients in the base
/// variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VectorField {
    vars: VariableSet,
    coeffs: Vec<Polynomial>,
}

impl VectorField {
    pub fn zero(vars: VariableSet) -> Self {
        VectorField { vars, coeffs: vec![Polynomial::zero(vars); vars.n()] }
    }

    /// The coordinate field `∂_a`, 1-based.
    pub fn basis(vars: VariableSet, a: usize) -> Self {
        let mut f = Self::zero(vars);
        f.coeffs[a - 1] = Polynomial::one(vars);
        f
    }

    pub fn from_coeffs(vars: VariableSet, coeffs: Vec<Polynomial>) -> Result<Self, FError> {
        if coeffs.len() != vars.n() {
            return Err(FError::Dimension { expected: vars.n(), got: coeffs.len() });
        }
        if let Some(bad) = coeffs.iter().find(|c| c.vars() != vars || !c.is_base_only()) {
            return Err(FError::NotBaseCoefficient(bad.to_string()));
        }
        Ok(VectorField { vars, coeffs })
    }

    /// Inverse of [`VectorField::symbol`]: reads `Σ a_i(t) y_i`.
    pub fn from_symbol(symbol: &Polynomial) -> Result<Self, FError> {
        let vars = symbol.vars();
        let parts = symbol.linear_y_parts().ok_or_else(|| FError::NotASymbol(symbol.to_string()))?;
        if !parts[0].is_zero() {
            return Err(FError::NotASymbol(symbol.to_string()));
        }
        Self::from_coeffs(vars, parts.into_iter().skip(1).collect())
    }

    pub fn vars(&self) -> VariableSet {
        self.vars
    }

    pub fn coeffs(&self) -> &[Polynomial] {
        &self.coeffs
    }

    /// Coefficient of `∂_a`, 1-based.
    pub fn coeff(&self, a: usize) -> &Polynomial {
        &self.coeffs[a - 1]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Polynomial::is_zero)
    }

    /// The fiber-linear function `Σ a_i(t) y_i`.
    pub fn symbol(&self) -> Polynomial {
        let mut acc = Polynomial::zero(self.vars);
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                acc = &acc + &(c * &Polynomial::y(self.vars, i + 1));
            }
        }
        acc
    }

    /// `f · X` for a function `f` of the base variables.
    pub fn scale(&self, f: &Polynomial) -> VectorField {
        VectorField { vars: self.vars, coeffs: self.coeffs.iter().map(|c| c * f).collect() }
    }

    pub fn scale_rational(&self, c: &Rational) -> VectorField {
        VectorField { vars: self.vars, coeffs: self.coeffs.iter().map(|p| p.scale(c)).collect() }
    }

    /// `X(f) = Σ a_i ∂f/∂t_i`.
    pub fn apply(&self, f: &Polynomial) -> Polynomial {
        let mut acc = Polynomial::zero(self.vars);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let d = f.d_t(i + 1);
            if !d.is_zero() {
                acc = &acc + &(a * &d);
            }
        }
        acc
    }

    pub fn evaluate(&self, t0: &[Rational]) -> Result<Vec<Rational>, FError> {
        self.coeffs
            .iter()
            .map(|c| {
                let v = c.evaluate_base(t0)?;
                Ok(v.as_constant().expect("base-only coefficient"))
            })
            .collect()
    }
}

impl std::ops::Add for &VectorField {
    type Output = VectorField;
    fn add(self, rhs: &VectorField) -> VectorField {
        VectorField {
            vars: self.vars,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl std::ops::Sub for &VectorField {
    type Output = VectorField;
    fn sub(self, rhs: &VectorField) -> VectorField {
        VectorField {
            vars: self.vars,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect(),
        }
    }
}

/// `[X, Y]^k = Σ_i (X^i ∂_i Y^k − Y^i ∂_i X^k)`.
pub fn lie_bracket(x: &VectorField, y: &VectorField) -> VectorField {
    let coeffs = (0..x.vars.n()).map(|k| &x.apply(&y.coeffs[k]) - &y.apply(&x.coeffs[k])).collect();
    VectorField { vars: x.vars, coeffs }
}

/// Written as the symbol with `e_i` standing for `∂_i`, e.g. `t3*e2 + e1`.
impl fmt::Display for VectorField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.symbol().to_string().replace('y', "e"))
    }
}
