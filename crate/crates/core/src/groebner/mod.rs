//! Buchberger-style Gröbner bases over the rationals: normal forms, ideal
//! membership, ideal equality and radical membership.

mod order;
mod quotient;
mod sorted;

use std::collections::BTreeSet;

use num_traits::One;
use thiserror::Error;

pub use order::MonomialOrder;
pub use quotient::StandardBasis;
use sorted::{reduce, SortedPoly};

use crate::poly::{Monomial, Polynomial, VariableSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroebnerError {
    #[error("Gröbner basis budget exceeded after {pairs} critical pairs")]
    BudgetExceeded { pairs: usize },
    #[error("S-polynomial of a zero polynomial")]
    ZeroInput,
    #[error("ideal presentation has no generators")]
    NoGenerators,
    #[error("generator {index} is zero")]
    ZeroGenerator { index: usize },
    #[error("generators live over different variable sets")]
    VariableSetMismatch,
    #[error("the auxiliary variable z is reserved for radical queries")]
    AuxVariableInInput,
}

/// Resource limits for [`buchberger`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GroebnerConfig {
    /// Maximum number of critical pairs examined before giving up.
    pub max_pairs: usize,
}

impl Default for GroebnerConfig {
    fn default() -> Self {
        GroebnerConfig { max_pairs: 50_000 }
    }
}

/// Counters collected while computing a basis.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct GbStats {
    pub pairs_examined: usize,
    pub coprime_skips: usize,
    pub chain_skips: usize,
    pub zero_reductions: usize,
    pub peak_basis_len: usize,
}

impl std::ops::AddAssign for GbStats {
    fn add_assign(&mut self, o: GbStats) {
        self.pairs_examined += o.pairs_examined;
        self.coprime_skips += o.coprime_skips;
        self.chain_skips += o.chain_skips;
        self.zero_reductions += o.zero_reductions;
        self.peak_basis_len = self.peak_basis_len.max(o.peak_basis_len);
    }
}

/// A list of generators together with the order used to compute with them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealPresentation {
    generators: Vec<Polynomial>,
    order: MonomialOrder,
}

impl IdealPresentation {
    pub fn new(generators: Vec<Polynomial>, order: MonomialOrder) -> Result<Self, GroebnerError> {
        let first = generators.first().ok_or(GroebnerError::NoGenerators)?;
        let vars = first.vars();
        for (index, g) in generators.iter().enumerate() {
            if g.vars() != vars {
                return Err(GroebnerError::VariableSetMismatch);
            }
            if g.is_zero() {
                return Err(GroebnerError::ZeroGenerator { index });
            }
        }
        Ok(IdealPresentation { generators, order })
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn vars(&self) -> VariableSet {
        self.generators[0].vars()
    }

    pub fn with_order(&self, order: MonomialOrder) -> Self {
        IdealPresentation { generators: self.generators.clone(), order }
    }

    /// The same ideal with an extra generator appended.
    pub fn with_generator(&self, g: Polynomial) -> Result<Self, GroebnerError> {
        let mut gens = self.generators.clone();
        gens.push(g);
        IdealPresentation::new(gens, self.order)
    }

    pub fn contains_z(&self) -> bool {
        self.generators.iter().any(Polynomial::contains_z)
    }
}

/// A reduced Gröbner basis: monic, no term of any element divisible by the
/// leading monomial of another, sorted by descending leading monomial.
#[derive(Debug, Clone)]
pub struct GroebnerBasis {
    vars: VariableSet,
    order: MonomialOrder,
    sorted: Vec<SortedPoly>,
    basis: Vec<Polynomial>,
    stats: GbStats,
}

impl PartialEq for GroebnerBasis {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.basis == other.basis
    }
}

impl GroebnerBasis {
    pub fn basis(&self) -> &[Polynomial] {
        &self.basis
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn vars(&self) -> VariableSet {
        self.vars
    }

    pub fn stats(&self) -> GbStats {
        self.stats
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn leading_monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.sorted.iter().map(SortedPoly::lm)
    }

    /// True if the ideal is the whole ring.
    pub fn is_unit_ideal(&self) -> bool {
        self.basis.len() == 1 && self.basis[0].is_one()
    }

    /// Remainder of multivariate division by the basis; no term of the result
    /// is divisible by a leading monomial of the basis.
    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        let r = reduce(SortedPoly::from_poly(f, self.order), &self.sorted, self.order);
        r.to_poly(self.vars)
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.normal_form(f).is_zero()
    }

    /// Checks every pairwise S-polynomial reduces to zero.
    pub fn verify_s_pairs(&self) -> bool {
        for i in 0..self.sorted.len() {
            for j in i + 1..self.sorted.len() {
                let s = spoly(&self.sorted[i], &self.sorted[j], self.order);
                if !reduce(s, &self.sorted, self.order).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// Checks the basis is reduced: monic, and no term of any element is
    /// divisible by the leading monomial of another.
    pub fn verify_reduced(&self) -> bool {
        self.sorted.iter().enumerate().all(|(i, g)| {
            g.lead().is_some_and(|(_, c)| c.is_one())
                && g.terms.iter().all(|(m, _)| {
                    self.sorted.iter().enumerate().all(|(j, h)| i == j || !h.lm().divides(m))
                })
        })
    }
}

fn spoly(f: &SortedPoly, g: &SortedPoly, order: MonomialOrder) -> SortedPoly {
    let (fm, fc) = f.lead().expect("nonzero");
    let (gm, gc) = g.lead().expect("nonzero");
    let lcm = fm.lcm(gm);
    let qf = fm.quotient_of(&lcm).expect("lcm");
    let qg = gm.quotient_of(&lcm).expect("lcm");
    let scaled_f = SortedPoly { terms: Vec::new() }.sub_scaled(&-fc.recip(), &qf, f, order);
    scaled_f.sub_scaled(&gc.recip(), &qg, g, order)
}

/// S-polynomial `(L/lt(f))·f − (L/lt(g))·g` with `L` the lcm of leading monomials.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial, order: MonomialOrder) -> Result<Polynomial, GroebnerError> {
    if f.is_zero() || g.is_zero() {
        return Err(GroebnerError::ZeroInput);
    }
    let s = spoly(&SortedPoly::from_poly(f, order), &SortedPoly::from_poly(g, order), order);
    Ok(s.to_poly(f.vars()))
}

/// Computes the reduced Gröbner basis of `ideal` under its order.
///
/// Uses Buchberger's coprime and chain criteria and the normal selection
/// strategy. Fails with [`GroebnerError::BudgetExceeded`] once more than
/// `config.max_pairs` critical pairs have been examined.
pub fn buchberger(ideal: &IdealPresentation, config: &GroebnerConfig) -> Result<GroebnerBasis, GroebnerError> {
    let order = ideal.order;
    let vars = ideal.vars();
    let mut stats = GbStats::default();

    let mut basis: Vec<SortedPoly> = Vec::new();
    let mut pending: BTreeSet<(usize, usize)> = BTreeSet::new();
    for g in &ideal.generators {
        let mut r = reduce(SortedPoly::from_poly(g, order), &basis, order);
        if r.is_zero() {
            continue;
        }
        r.make_monic();
        let k = basis.len();
        basis.push(r);
        pending.extend((0..k).map(|i| (i, k)));
    }

    while let Some(pair) = select_pair(&pending, &basis, order) {
        pending.remove(&pair);
        if stats.pairs_examined >= config.max_pairs {
            return Err(GroebnerError::BudgetExceeded { pairs: stats.pairs_examined });
        }
        stats.pairs_examined += 1;
        let (i, j) = pair;
        let (lmi, lmj) = (basis[i].lm(), basis[j].lm());
        if lmi.is_coprime(lmj) {
            stats.coprime_skips += 1;
            continue;
        }
        let lcm = lmi.lcm(lmj);
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].lm().divides(&lcm)
                && !pending.contains(&ordered(i, k))
                && !pending.contains(&ordered(j, k))
        });
        if chain {
            stats.chain_skips += 1;
            continue;
        }
        let s = spoly(&basis[i], &basis[j], order);
        let mut r = reduce(s, &basis, order);
        if r.is_zero() {
            stats.zero_reductions += 1;
            continue;
        }
        r.make_monic();
        let k = basis.len();
        basis.push(r);
        stats.peak_basis_len = stats.peak_basis_len.max(basis.len());
        pending.extend((0..k).map(|i| (i, k)));
    }
    stats.peak_basis_len = stats.peak_basis_len.max(basis.len());

    let sorted = interreduce(basis, order);
    let polys = sorted.iter().map(|p| p.to_poly(vars)).collect();
    Ok(GroebnerBasis { vars, order, sorted, basis: polys, stats })
}

fn ordered(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Normal strategy: the pending pair with the smallest lcm, ties by index.
fn select_pair(pending: &BTreeSet<(usize, usize)>, basis: &[SortedPoly], order: MonomialOrder) -> Option<(usize, usize)> {
    let mut best: Option<((usize, usize), Monomial)> = None;
    for &(i, j) in pending {
        let lcm = basis[i].lm().lcm(basis[j].lm());
        let better = match &best {
            None => true,
            Some((_, m)) => order.cmp(&lcm, m).is_lt(),
        };
        if better {
            best = Some(((i, j), lcm));
        }
    }
    best.map(|(p, _)| p)
}

fn interreduce(basis: Vec<SortedPoly>, order: MonomialOrder) -> Vec<SortedPoly> {
    // Minimal basis: drop elements whose leading monomial is divisible by
    // another surviving leading monomial.
    let mut keep: Vec<SortedPoly> = Vec::new();
    for (i, g) in basis.iter().enumerate() {
        let redundant = basis.iter().enumerate().any(|(j, h)| {
            j != i && h.lm().divides(g.lm()) && (h.lm() != g.lm() || j < i)
        });
        if !redundant {
            keep.push(g.clone());
        }
    }
    let mut out = Vec::with_capacity(keep.len());
    for i in 0..keep.len() {
        let others: Vec<SortedPoly> =
            keep.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, g)| g.clone()).collect();
        let mut r = reduce(keep[i].clone(), &others, order);
        r.make_monic();
        out.push(r);
    }
    out.sort_by(|a, b| order.cmp(b.lm(), a.lm()));
    out
}

/// True iff `f` reduces to zero against `gb`.
pub fn ideal_contains(f: &Polynomial, gb: &GroebnerBasis) -> bool {
    gb.contains(f)
}

/// Rabinowitsch test: `f ∈ √I` iff `1 ∈ I + (1 − z·f)`.
pub fn radical_contains(f: &Polynomial, gens: &IdealPresentation, config: &GroebnerConfig) -> Result<bool, GroebnerError> {
    if f.contains_z() || gens.contains_z() {
        return Err(GroebnerError::AuxVariableInInput);
    }
    if f.is_zero() {
        return Ok(true);
    }
    let vars = f.vars();
    let one = Polynomial::one(vars);
    let aux = &one - &(&Polynomial::z(vars) * f);
    let extended = gens.with_generator(aux)?;
    Ok(buchberger(&extended, config)?.is_unit_ideal())
}

/// True iff both presentations generate the same ideal.
pub fn ideal_equals(a: &IdealPresentation, b: &IdealPresentation, config: &GroebnerConfig) -> Result<bool, GroebnerError> {
    if a.vars() != b.vars() {
        return Err(GroebnerError::VariableSetMismatch);
    }
    let ga = buchberger(a, config)?;
    let gb = buchberger(&b.with_order(a.order), config)?;
    Ok(ga.basis == gb.basis)
}

/// True iff every generator of `a` lies in the ideal generated by `b`.
pub fn ideal_subset(a: &IdealPresentation, b: &IdealPresentation, config: &GroebnerConfig) -> Result<bool, GroebnerError> {
    let gb = buchberger(b, config)?;
    Ok(a.generators.iter().all(|g| gb.contains(g)))
}
