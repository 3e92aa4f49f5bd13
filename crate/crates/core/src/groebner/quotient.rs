use std::collections::{BTreeSet, VecDeque};

use num_traits::Zero;

use super::GroebnerBasis;
use crate::poly::{Monomial, Polynomial, Rational};

/// The standard monomials of a zero-dimensional ideal in the fiber variables,
/// i.e. a vector-space basis of `K[y]/I`.
#[derive(Debug, Clone)]
pub struct StandardBasis {
    gb: GroebnerBasis,
    monomials: Vec<Monomial>,
}

impl StandardBasis {
    /// Returns `None` when the quotient is infinite dimensional or the basis
    /// still involves base or auxiliary variables.
    pub fn new(gb: GroebnerBasis) -> Option<Self> {
        let vars = gb.vars();
        let n = vars.n();
        let len = vars.len();
        if gb.basis().iter().any(|g| !g.terms().all(|(m, _)| m.partial_degree(n..len) == 0)) {
            return None;
        }
        let leads: Vec<Monomial> = gb.leading_monomials().cloned().collect();
        // Zero-dimensional iff every fiber variable has a pure power among the leads.
        let pure_power = |i: usize| leads.iter().any(|m| m.exponent(i) > 0 && m.partial_degree(0..n) == m.exponent(i));
        if !gb.is_unit_ideal() && !(0..n).all(pure_power) {
            return None;
        }
        let standard = |m: &Monomial| !leads.iter().any(|l| l.divides(m));
        let mut seen = BTreeSet::new();
        let mut queue = VecDeque::new();
        let one = Monomial::one(len);
        if standard(&one) {
            seen.insert(one.clone());
            queue.push_back(one);
        }
        while let Some(m) = queue.pop_front() {
            for i in 0..n {
                let next = m.mul(&Monomial::var(len, i));
                if standard(&next) && seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
        let order = gb.order();
        let mut monomials: Vec<Monomial> = seen.into_iter().collect();
        monomials.sort_by(|a, b| order.cmp(a, b));
        Some(StandardBasis { gb, monomials })
    }

    pub fn dim(&self) -> usize {
        self.monomials.len()
    }

    /// Ascending in the basis order; the constant monomial comes first.
    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn groebner_basis(&self) -> &GroebnerBasis {
        &self.gb
    }

    /// Coordinates of the class of `f` in the standard basis.
    pub fn coordinates(&self, f: &Polynomial) -> Vec<Rational> {
        let r = self.gb.normal_form(f);
        let mut out = vec![Rational::zero(); self.monomials.len()];
        for (m, c) in r.terms() {
            let k = self.monomials.iter().position(|s| s == m).expect("normal form is spanned by standard monomials");
            out[k] = c.clone();
        }
        out
    }

    pub fn element(&self, k: usize) -> Polynomial {
        Polynomial::monomial(self.gb.vars(), self.monomials[k].clone(), num_traits::One::one())
    }
}
