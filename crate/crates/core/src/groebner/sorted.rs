//! Term lists sorted ascending under a fixed monomial order, so the leading
//! term is the last element.

use std::cmp::Ordering;

use num_traits::{One, Zero};

use super::MonomialOrder;
use crate::poly::{Monomial, Polynomial, Rational, VariableSet};

#[derive(Debug, Clone)]
pub(crate) struct SortedPoly {
    pub terms: Vec<(Monomial, Rational)>,
}

impl SortedPoly {
    pub fn from_poly(p: &Polynomial, order: MonomialOrder) -> Self {
        let mut terms: Vec<_> = p.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
        terms.sort_by(|a, b| order.cmp(&a.0, &b.0));
        SortedPoly { terms }
    }

    pub fn to_poly(&self, vars: VariableSet) -> Polynomial {
        Polynomial::from_terms(vars, self.terms.iter().cloned())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<&(Monomial, Rational)> {
        self.terms.last()
    }

    pub fn lm(&self) -> &Monomial {
        &self.terms.last().expect("nonzero polynomial").0
    }

    pub fn make_monic(&mut self) {
        if let Some((_, lc)) = self.terms.last() {
            if lc.is_one() {
                return;
            }
            let inv = lc.recip();
            for (_, c) in &mut self.terms {
                *c *= &inv;
            }
        }
    }

    /// `self - c * m * g`.
    pub fn sub_scaled(&self, c: &Rational, m: &Monomial, g: &SortedPoly, order: MonomialOrder) -> SortedPoly {
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = g.terms.iter().map(|(gm, gc)| (gm.mul(m), gc * c)).peekable();
        loop {
            let ord = match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => Ordering::Less,
                (None, Some(_)) => Ordering::Greater,
                (Some(x), Some(y)) => order.cmp(&x.0, &y.0),
            };
            match ord {
                Ordering::Less => out.push(a.next().expect("peeked").clone()),
                Ordering::Greater => {
                    let (m, c) = b.next().expect("peeked");
                    out.push((m, -c));
                }
                Ordering::Equal => {
                    let (m, x) = a.next().expect("peeked");
                    let (_, y) = b.next().expect("peeked");
                    let d = x - y;
                    if !d.is_zero() {
                        out.push((m.clone(), d));
                    }
                }
            }
        }
        SortedPoly { terms: out }
    }
}

/// Fully reduces `f` against `basis` (every basis element must be nonzero).
pub(crate) fn reduce(f: SortedPoly, basis: &[SortedPoly], order: MonomialOrder) -> SortedPoly {
    let mut p = f;
    // Irreducible terms are collected in descending order.
    let mut rest: Vec<(Monomial, Rational)> = Vec::new();
    while let Some((lm, lc)) = p.lead().cloned() {
        let divisor = basis.iter().find(|g| g.lm().divides(&lm));
        match divisor {
            Some(g) => {
                let (glm, glc) = g.lead().expect("nonzero basis element");
                let q = glm.quotient_of(&lm).expect("divides");
                let c = &lc / glc;
                p = p.sub_scaled(&c, &q, g, order);
            }
            None => {
                p.terms.pop();
                rest.push((lm, lc));
            }
        }
    }
    rest.reverse();
    SortedPoly { terms: rest }
}
