use rayon::prelude::*;

use super::{lie_bracket, spectral_cover_ideal, FError, VectorField};
use crate::groebner::GroebnerConfig;
use crate::poisson::{ideal_poisson_stable, StabilityReport};
use crate::poly::VariableSet;

/// A commutative associative `O_M`-bilinear multiplication on vector fields,
/// given by structure constants `∂_a ∘ ∂_b = Σ_c C_ab^c ∂_c`, with a unit
/// field `e`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FMultiplication {
    vars: VariableSet,
    /// `table[a][b] = ∂_{a+1} ∘ ∂_{b+1}`.
    table: Vec<Vec<VectorField>>,
    identity: VectorField,
}

impl FMultiplication {
    /// Validates commutativity, associativity and the unit axiom on basis
    /// fields before accepting the table.
    pub fn new(vars: VariableSet, table: Vec<Vec<VectorField>>, identity: VectorField) -> Result<Self, FError> {
        let n = vars.n();
        if table.len() != n || table.iter().any(|row| row.len() != n) {
            return Err(FError::Dimension { expected: n, got: table.len() });
        }
        if table.iter().flatten().chain(std::iter::once(&identity)).any(|f| f.vars() != vars) {
            return Err(FError::VariableSetMismatch);
        }
        FMultiplication { vars, table, identity }.validated()
    }

    /// Accepts a table of the right shape without checking the axioms; call
    /// [`FMultiplication::validated`] before relying on it.
    pub fn new_unvalidated(vars: VariableSet, table: Vec<Vec<VectorField>>, identity: VectorField) -> Self {
        let n = vars.n();
        assert!(table.len() == n && table.iter().all(|row| row.len() == n), "table must be n by n");
        FMultiplication { vars, table, identity }
    }

    /// Re-checks the axioms, e.g. after [`FMultiplication::with_constant_unchecked`].
    pub fn validated(self) -> Result<Self, FError> {
        let m = self;
        let n = m.dim();
        for a in 0..n {
            for b in a + 1..n {
                if m.table[a][b] != m.table[b][a] {
                    return Err(FError::NotCommutative { a: a + 1, b: b + 1 });
                }
            }
        }
        for a in 1..=n {
            for b in 1..=n {
                for c in 1..=n {
                    let left = m.multiply(&m.product(a, b), &m.basis(c));
                    let right = m.multiply(&m.basis(a), &m.product(b, c));
                    if left != right {
                        return Err(FError::NotAssociative { a, b, c });
                    }
                }
            }
        }
        for b in 1..=n {
            if m.multiply(&m.identity, &m.basis(b)) != m.basis(b) {
                return Err(FError::IdentityFails { b });
            }
        }
        Ok(m)
    }

    /// Builds from structure constants `constants[a][b][c] = C_ab^c` (0-based).
    pub fn from_constants(
        vars: VariableSet,
        constants: Vec<Vec<Vec<crate::poly::Polynomial>>>,
        identity: VectorField,
    ) -> Result<Self, FError> {
        let table = constants
            .into_iter()
            .map(|row| row.into_iter().map(|c| VectorField::from_coeffs(vars, c)).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(vars, table, identity)
    }

    pub fn vars(&self) -> VariableSet {
        self.vars
    }

    pub fn dim(&self) -> usize {
        self.vars.n()
    }

    pub fn identity(&self) -> &VectorField {
        &self.identity
    }

    pub fn basis(&self, a: usize) -> VectorField {
        VectorField::basis(self.vars, a)
    }

    /// `∂_a ∘ ∂_b`, 1-based.
    pub fn product(&self, a: usize, b: usize) -> VectorField {
        self.table[a - 1][b - 1].clone()
    }

    /// Structure constant `C_ab^c`, 1-based.
    pub fn constant(&self, a: usize, b: usize, c: usize) -> &crate::poly::Polynomial {
        self.table[a - 1][b - 1].coeff(c)
    }

    /// `X ∘ Y` extended bilinearly over the base ring.
    pub fn multiply(&self, x: &VectorField, y: &VectorField) -> VectorField {
        let mut acc = VectorField::zero(self.vars);
        for (a, xa) in x.coeffs().iter().enumerate() {
            if xa.is_zero() {
                continue;
            }
            for (b, yb) in y.coeffs().iter().enumerate() {
                if yb.is_zero() {
                    continue;
                }
                acc = &acc + &self.table[a][b].scale(&(xa * yb));
            }
        }
        acc
    }

    /// Returns a copy with `C_ab^c` (and `C_ba^c`) replaced, without
    /// re-validating the axioms.
    pub fn with_constant_unchecked(&self, a: usize, b: usize, c: usize, value: crate::poly::Polynomial) -> FMultiplication {
        let mut out = self.clone();
        let mut coeffs = out.table[a - 1][b - 1].coeffs().to_vec();
        coeffs[c - 1] = value;
        let f = VectorField::from_coeffs(self.vars, coeffs).expect("base-only value");
        out.table[a - 1][b - 1] = f.clone();
        out.table[b - 1][a - 1] = f;
        out
    }
}

/// `X ∘ Y` for `m`.
pub fn multiply_fields(m: &FMultiplication, x: &VectorField, y: &VectorField) -> VectorField {
    m.multiply(x, y)
}

/// Nine-term expansion of `P_{X∘Y}(Z,W) − X∘P_Y(Z,W) − Y∘P_X(Z,W)` for
/// arbitrary fields.
pub fn structure_defect(m: &FMultiplication, x: &VectorField, y: &VectorField, z: &VectorField, w: &VectorField) -> VectorField {
    let mul = |a: &VectorField, b: &VectorField| m.multiply(a, b);
    let xy = mul(x, y);
    let zw = mul(z, w);
    let terms_plus = [
        lie_bracket(&xy, &zw),
        mul(&mul(x, &lie_bracket(y, z)), w),
        mul(&mul(x, z), &lie_bracket(y, w)),
        mul(&mul(y, &lie_bracket(x, z)), w),
        mul(&mul(y, z), &lie_bracket(x, w)),
    ];
    let terms_minus = [
        mul(&lie_bracket(&xy, z), w),
        mul(z, &lie_bracket(&xy, w)),
        mul(x, &lie_bracket(y, &zw)),
        mul(y, &lie_bracket(x, &zw)),
    ];
    let mut acc = VectorField::zero(m.vars);
    for t in &terms_plus {
        acc = &acc + t;
    }
    for t in &terms_minus {
        acc = &acc - t;
    }
    acc
}

/// The structure-identity defect on coordinate fields `(∂_a, ∂_b, ∂_c, ∂_d)`.
pub fn structure_identity_defect(m: &FMultiplication, a: usize, b: usize, c: usize, d: usize) -> Result<VectorField, FError> {
    let n = m.dim();
    if [a, b, c, d].iter().any(|&i| i == 0 || i > n) {
        return Err(FError::IndexOutOfRange { index: [a, b, c, d].into_iter().find(|&i| i == 0 || i > n).unwrap_or(0), n });
    }
    Ok(structure_defect(m, &m.basis(a), &m.basis(b), &m.basis(c), &m.basis(d)))
}

/// `[e, X∘Y] − X∘[e, Y] − [e, X]∘Y` on `(∂_a, ∂_b)`.
pub fn unit_compatibility_defect(m: &FMultiplication, a: usize, b: usize) -> VectorField {
    let e = m.identity();
    let (x, y) = (m.basis(a), m.basis(b));
    let lhs = lie_bracket(e, &m.multiply(&x, &y));
    let r1 = m.multiply(&x, &lie_bracket(e, &y));
    let r2 = m.multiply(&lie_bracket(e, &x), &y);
    &(&lhs - &r1) - &r2
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Route {
    Identity,
    Spectral,
    Both,
}

impl std::str::FromStr for Route {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "identity" => Ok(Route::Identity),
            "spectral" => Ok(Route::Spectral),
            "both" => Ok(Route::Both),
            other => Err(format!("unknown route '{other}'")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DefectLocation {
    Quadruple { a: usize, b: usize, c: usize, d: usize },
    UnitCompatibility { a: usize, b: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DefectWitness {
    pub location: DefectLocation,
    pub value: VectorField,
}

/// Result of the direct identity check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheck {
    pub quadruples_checked: usize,
    pub witness: Option<DefectWitness>,
}

impl IdentityCheck {
    pub fn holds(&self) -> bool {
        self.witness.is_none()
    }
}

/// Evaluates the defect on all coordinate quadruples (up to the symmetries
/// `X ↔ Y`, `Z ↔ W`) and the unit compatibility on all pairs.
pub fn check_structure_identity(m: &FMultiplication) -> IdentityCheck {
    let n = m.dim();
    let pairs: Vec<(usize, usize)> = (1..=n).flat_map(|a| (a..=n).map(move |b| (a, b))).collect();
    let quads: Vec<(usize, usize, usize, usize)> =
        pairs.iter().flat_map(|&(a, b)| pairs.iter().map(move |&(c, d)| (a, b, c, d))).collect();
    let witness = quads
        .par_iter()
        .find_map_first(|&(a, b, c, d)| {
            let value = structure_defect(m, &m.basis(a), &m.basis(b), &m.basis(c), &m.basis(d));
            (!value.is_zero()).then_some(DefectWitness { location: DefectLocation::Quadruple { a, b, c, d }, value })
        })
        .or_else(|| {
            pairs.iter().find_map(|&(a, b)| {
                let value = unit_compatibility_defect(m, a, b);
                (!value.is_zero()).then_some(DefectWitness { location: DefectLocation::UnitCompatibility { a, b }, value })
            })
        });
    IdentityCheck { quadruples_checked: quads.len(), witness }
}

/// Verdicts from whichever routes were run.
#[derive(Debug, Clone)]
pub struct FVerdict {
    pub identity: Option<IdentityCheck>,
    pub spectral: Option<StabilityReport>,
}

impl FVerdict {
    pub fn is_f_manifold(&self) -> bool {
        match (&self.identity, &self.spectral) {
            (Some(i), _) => i.holds(),
            (None, Some(s)) => s.verdict.is_stable(),
            (None, None) => unreachable!("at least one route runs"),
        }
    }
}

/// Decides whether `m` is an F-manifold structure.
///
/// The identity route checks the structure identity directly; the spectral
/// route checks Poisson stability of the spectral cover ideal. With
/// [`Route::Both`] a disagreement is reported as [`FError::RouteDisagreement`].
pub fn is_f_manifold(m: &FMultiplication, route: Route, config: &GroebnerConfig) -> Result<FVerdict, FError> {
    let identity = matches!(route, Route::Identity | Route::Both).then(|| check_structure_identity(m));
    let spectral = match route {
        Route::Spectral | Route::Both => Some(ideal_poisson_stable(&spectral_cover_ideal(m), config)?),
        Route::Identity => None,
    };
    if let (Some(i), Some(s)) = (&identity, &spectral) {
        if i.holds() != s.verdict.is_stable() {
            return Err(FError::RouteDisagreement { identity: i.holds(), spectral: s.verdict.is_stable() });
        }
    }
    Ok(FVerdict { identity, spectral })
}
