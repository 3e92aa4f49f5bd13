//! The canonical Poisson bracket on the cotangent space and Poisson
//! stability of ideals.
//!
//! Convention: `{f, g} = Σ_i (∂f/∂y_i · ∂g/∂t_i − ∂f/∂t_i · ∂g/∂y_i)`. Under
//! this sign the bracket of two fiber-linear functions is the symbol of the
//! Lie bracket of the corresponding vector fields.

use rayon::prelude::*;
use thiserror::Error;

use crate::groebner::{buchberger, GbStats, GroebnerBasis, GroebnerConfig, GroebnerError, IdealPresentation};
use crate::poly::Polynomial;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PoissonError {
    #[error("the auxiliary variable z may not appear in a Poisson bracket")]
    AuxVariable,
    #[error("bracket arguments live over different variable sets")]
    VariableSetMismatch,
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
}

/// Canonical Poisson bracket of two `z`-free polynomials.
pub fn poisson_bracket(f: &Polynomial, g: &Polynomial) -> Result<Polynomial, PoissonError> {
    if f.vars() != g.vars() {
        return Err(PoissonError::VariableSetMismatch);
    }
    if f.contains_z() || g.contains_z() {
        return Err(PoissonError::AuxVariable);
    }
    Ok(bracket(f, g))
}

pub(crate) fn bracket(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let vars = f.vars();
    let mut acc = Polynomial::zero(vars);
    for i in 1..=vars.n() {
        let fy = f.d_y(i);
        let gt = g.d_t(i);
        if !fy.is_zero() && !gt.is_zero() {
            acc = &acc + &(&fy * &gt);
        }
        let ft = f.d_t(i);
        let gy = g.d_y(i);
        if !ft.is_zero() && !gy.is_zero() {
            acc = &acc - &(&ft * &gy);
        }
    }
    acc
}

/// Leibniz defect `P_a(b, c) = {a, bc} − {a, b}c − b{a, c}`; identically zero.
pub fn poisson_tensor(a: &Polynomial, b: &Polynomial, c: &Polynomial) -> Result<Polynomial, PoissonError> {
    let abc = poisson_bracket(a, &(b * c))?;
    let ab = poisson_bracket(a, b)?;
    let ac = poisson_bracket(a, c)?;
    Ok(&(&abc - &(&ab * c)) - &(b * &ac))
}

/// A pair of generators whose bracket leaves the ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BracketWitness {
    /// 0-based generator indices, `i < j`.
    pub i: usize,
    pub j: usize,
    pub left: Polynomial,
    pub right: Polynomial,
    pub bracket: Polynomial,
    /// Normal form of the bracket modulo the ideal (nonzero).
    pub remainder: Polynomial,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Stability {
    Stable,
    Unstable(BracketWitness),
}

impl Stability {
    pub fn is_stable(&self) -> bool {
        matches!(self, Stability::Stable)
    }

    pub fn witness(&self) -> Option<&BracketWitness> {
        match self {
            Stability::Stable => None,
            Stability::Unstable(w) => Some(w),
        }
    }
}

/// Outcome of a stability check, with the basis that decided it.
#[derive(Debug, Clone)]
pub struct StabilityReport {
    pub verdict: Stability,
    pub basis: GroebnerBasis,
    pub stats: GbStats,
}

/// Tests `{J, J} ⊆ J` on the given generators.
///
/// Brackets are computed for every pair `i < j` and reduced modulo a Gröbner
/// basis of the ideal. The reported witness is the first failing pair in
/// lexicographic `(i, j)` order, independent of scheduling.
pub fn ideal_poisson_stable(gens: &IdealPresentation, config: &GroebnerConfig) -> Result<StabilityReport, PoissonError> {
    if gens.contains_z() {
        return Err(PoissonError::AuxVariable);
    }
    let gb = buchberger(gens, config)?;
    let g = gens.generators();
    let pairs: Vec<(usize, usize)> = (0..g.len()).flat_map(|i| (i + 1..g.len()).map(move |j| (i, j))).collect();
    let witness = pairs.par_iter().find_map_first(|&(i, j)| {
        let b = bracket(&g[i], &g[j]);
        let r = gb.normal_form(&b);
        (!r.is_zero()).then(|| BracketWitness {
            i,
            j,
            left: g[i].clone(),
            right: g[j].clone(),
            bracket: b,
            remainder: r,
        })
    });
    let stats = gb.stats();
    Ok(StabilityReport {
        verdict: witness.map_or(Stability::Stable, Stability::Unstable),
        basis: gb,
        stats,
    })
}
