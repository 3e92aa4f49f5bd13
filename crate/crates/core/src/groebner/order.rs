use std::cmp::Ordering;

use crate::poly::{degrevlex_cmp, Monomial};

/// Monomial orders over the ranking `y1 > .. > yn > t1 > .. > tn > z`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    /// Graded reverse lexicographic over all variables.
    #[default]
    Degrevlex,
    /// Pure lexicographic.
    Lex,
    /// Elimination order: degrevlex on the `y` block first, ties broken by
    /// degrevlex on `(t, z)`.
    Block,
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (ea, eb) = (a.exponents(), b.exponents());
        match self {
            MonomialOrder::Degrevlex => degrevlex_cmp(ea, eb),
            MonomialOrder::Lex => ea.cmp(eb),
            MonomialOrder::Block => {
                let n = (ea.len() - 1) / 2;
                degrevlex_cmp(&ea[..n], &eb[..n]).then_with(|| degrevlex_cmp(&ea[n..], &eb[n..]))
            }
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            MonomialOrder::Degrevlex => "degrevlex",
            MonomialOrder::Lex => "lex",
            MonomialOrder::Block => "block",
        }
    }
}
