use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::univariate;
use super::{local_factor_count, PointAlgebra, PointError};
use crate::linalg;
use crate::poly::Rational;

/// Search parameters for a splitting element.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SplittingSearch {
    pub random_trials: usize,
    pub seed: u64,
}

impl Default for SplittingSearch {
    fn default() -> Self {
        SplittingSearch { random_trials: 20, seed: 0 }
    }
}

/// Either a complete set of orthogonal idempotents, or the local factor
/// count alone when none is found over the rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdempotentReport {
    pub local_factor_count: usize,
    /// Pairwise orthogonal, summing to 1, one per local factor.
    pub idempotents: Option<Vec<Vec<Rational>>>,
}

/// Monic minimal polynomial of `u`, from the first linear dependence among
/// `1, u, u², …`.
pub fn minimal_polynomial(a: &PointAlgebra, u: &[Rational]) -> Vec<Rational> {
    let mut powers = vec![a.unit().to_vec()];
    loop {
        let next = a.multiply(powers.last().expect("nonempty"), u);
        // Columns are the powers so far; solve Σ c_k u^k = u^{k+1}.
        let d = a.dim();
        let m: Vec<Vec<Rational>> = (0..d).map(|r| powers.iter().map(|p| p[r].clone()).collect()).collect();
        if let Some(c) = linalg::solve(&m, &next) {
            let mut poly: Vec<Rational> = c.into_iter().map(|x| -x).collect();
            poly.push(Rational::one());
            return poly;
        }
        powers.push(next);
    }
}

fn eval_in(a: &PointAlgebra, p: &[Rational], u: &[Rational]) -> Vec<Rational> {
    let mut acc = vec![Rational::zero(); a.dim()];
    for c in p.iter().rev() {
        acc = a.multiply(&acc, u);
        for (x, e) in acc.iter_mut().zip(a.unit()) {
            *x += c * e;
        }
    }
    acc
}

/// Idempotents from `u` when its minimal polynomial has `count` distinct
/// rational roots.
fn split_by(a: &PointAlgebra, u: &[Rational], count: usize) -> Option<Vec<Vec<Rational>>> {
    let mu = minimal_polynomial(a, u);
    let reduced = univariate::squarefree_part(&mu);
    if univariate::degree(&reduced) != Some(count) {
        return None;
    }
    let roots = univariate::rational_roots(&reduced)?;
    if roots.len() != count {
        return None;
    }
    let mut out = Vec::with_capacity(count);
    for (i, ri) in roots.iter().enumerate() {
        // Lagrange basis polynomial for root i: idempotent modulo the nilradical.
        let mut lagrange = vec![Rational::one()];
        for (_, rj) in roots.iter().enumerate().filter(|&(j, _)| j != i) {
            let scale = (ri - rj).recip();
            let factor = [-rj * &scale, scale];
            let mut next = vec![Rational::zero(); lagrange.len() + 1];
            for (k, c) in lagrange.iter().enumerate() {
                next[k] += c * &factor[0];
                next[k + 1] += c * &factor[1];
            }
            lagrange = next;
        }
        out.push(lift_idempotent(a, eval_in(a, &lagrange, u)));
    }
    Some(out)
}

/// Iterates `e ↦ 3e² − 2e³`, which converges in finitely many steps when
/// `e² − e` is nilpotent.
fn lift_idempotent(a: &PointAlgebra, mut e: Vec<Rational>) -> Vec<Rational> {
    loop {
        let e2 = a.multiply(&e, &e);
        if e2 == e {
            return e;
        }
        let e3 = a.multiply(&e2, &e);
        e = e2.iter().zip(&e3).map(|(x, y)| Rational::from_integer(3.into()) * x - Rational::from_integer(2.into()) * y).collect();
    }
}

/// Orthogonal idempotents found by a splitting element among the basis
/// elements and a seeded set of small random combinations.
pub fn orthogonal_idempotents(a: &PointAlgebra, search: SplittingSearch) -> Result<IdempotentReport, PointError> {
    let count = local_factor_count(a)?;
    if count <= 1 {
        let idempotents = (count == 1).then(|| vec![a.unit().to_vec()]);
        return Ok(IdempotentReport { local_factor_count: count, idempotents });
    }
    let d = a.dim();
    let mut rng = ChaCha8Rng::seed_from_u64(search.seed);
    let candidates = (0..d)
        .map(|k| a.basis(k))
        .chain((0..search.random_trials).map(|_| (0..d).map(|_| Rational::from_integer(rng.random_range(-3i64..=3).into())).collect()));
    for u in candidates {
        if let Some(ids) = split_by(a, &u, count) {
            return Ok(IdempotentReport { local_factor_count: count, idempotents: Some(ids) });
        }
    }
    Ok(IdempotentReport { local_factor_count: count, idempotents: None })
}
