use num_traits::{One, Zero};

use super::PointError;
use crate::fstructure::{fiber_quotient, FMultiplication};
use crate::groebner::{GroebnerConfig, IdealPresentation};
use crate::linalg;
use crate::poly::{Polynomial, Rational};

/// A finite-dimensional commutative associative unital algebra over the
/// rationals, given by structure constants in a fixed basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointAlgebra {
    /// `table[a][b][c]`: coefficient of `b_c` in `b_a ∘ b_b`.
    table: Vec<Vec<Vec<Rational>>>,
    unit: Vec<Rational>,
}

fn zeros(d: usize) -> Vec<Rational> {
    vec![Rational::zero(); d]
}

impl PointAlgebra {
    /// Checks commutativity, associativity and the unit on all basis triples.
    pub fn new(table: Vec<Vec<Vec<Rational>>>, unit: Vec<Rational>) -> Result<Self, PointError> {
        let d = unit.len();
        if table.len() != d || table.iter().flatten().any(|v| v.len() != d) || table.iter().any(|r| r.len() != d) {
            return Err(PointError::Shape { dim: d });
        }
        let alg = PointAlgebra { table, unit };
        for a in 0..d {
            for b in a + 1..d {
                if alg.table[a][b] != alg.table[b][a] {
                    return Err(PointError::NotCommutative { a, b });
                }
            }
        }
        for a in 0..d {
            for b in 0..d {
                let ab = &alg.table[a][b];
                for c in 0..d {
                    if alg.multiply(ab, &alg.basis(c)) != alg.multiply(&alg.basis(a), &alg.table[b][c]) {
                        return Err(PointError::NotAssociative { a, b, c });
                    }
                }
            }
        }
        for b in 0..d {
            if alg.multiply(&alg.unit, &alg.basis(b)) != alg.basis(b) {
                return Err(PointError::UnitFails { b });
            }
        }
        Ok(alg)
    }

    /// `K[x]/(x^d − Σ_k c_k x^k)` in the basis `1, x, …, x^{d−1}`.
    pub fn cyclic(coeffs: &[Rational]) -> Self {
        let d = coeffs.len();
        let mut powers: Vec<Vec<Rational>> = (0..d)
            .map(|k| {
                let mut v = zeros(d);
                v[k] = Rational::one();
                v
            })
            .collect();
        while powers.len() < 2 * d.max(1) - 1 {
            let prev = powers.last().expect("nonempty");
            let mut next = zeros(d);
            next[1..d].clone_from_slice(&prev[..d - 1]);
            for (j, c) in coeffs.iter().enumerate() {
                next[j] += &prev[d - 1] * c;
            }
            powers.push(next);
        }
        let table = (0..d).map(|a| (0..d).map(|b| powers[a + b].clone()).collect()).collect();
        PointAlgebra::new(table, powers[0].clone()).expect("cyclic algebras are commutative and associative")
    }

    /// The product of `d` copies of the rationals.
    pub fn split(d: usize) -> Self {
        let table = (0..d)
            .map(|a| (0..d).map(|b| if a == b { unit_vector(d, a) } else { zeros(d) }).collect())
            .collect();
        PointAlgebra::new(table, vec![Rational::one(); d]).expect("split algebra is valid")
    }

    pub fn dim(&self) -> usize {
        self.unit.len()
    }

    pub fn table(&self) -> &[Vec<Vec<Rational>>] {
        &self.table
    }

    pub fn unit(&self) -> &[Rational] {
        &self.unit
    }

    pub fn basis(&self, a: usize) -> Vec<Rational> {
        unit_vector(self.dim(), a)
    }

    pub fn multiply(&self, u: &[Rational], v: &[Rational]) -> Vec<Rational> {
        let d = self.dim();
        let mut out = zeros(d);
        for (a, ua) in u.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (b, vb) in v.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
                let s = ua * vb;
                for (o, c) in out.iter_mut().zip(&self.table[a][b]) {
                    if !c.is_zero() {
                        *o += &s * c;
                    }
                }
            }
        }
        out
    }

    pub fn power(&self, u: &[Rational], k: u32) -> Vec<Rational> {
        (0..k).fold(self.unit.clone(), |acc, _| self.multiply(&acc, u))
    }

    /// Matrix of `v ↦ u ∘ v`, columns indexed by basis elements.
    pub fn multiplication_operator(&self, u: &[Rational]) -> Vec<Vec<Rational>> {
        let d = self.dim();
        let cols: Vec<Vec<Rational>> = (0..d).map(|b| self.multiply(u, &self.basis(b))).collect();
        (0..d).map(|r| (0..d).map(|c| cols[c][r].clone()).collect()).collect()
    }

    pub fn trace(&self, u: &[Rational]) -> Rational {
        let d = self.dim();
        (0..d).map(|b| self.multiply(u, &self.basis(b))[b].clone()).sum()
    }

    pub fn is_nilpotent(&self, u: &[Rational]) -> bool {
        let steps = ceil_log2(self.dim()) + 1;
        let mut x = u.to_vec();
        for _ in 0..=steps {
            if x.iter().all(Zero::is_zero) {
                return true;
            }
            x = self.multiply(&x, &x);
        }
        false
    }
}

fn ceil_log2(d: usize) -> u32 {
    d.max(1).next_power_of_two().trailing_zeros()
}

pub(crate) fn unit_vector(d: usize, a: usize) -> Vec<Rational> {
    let mut v = zeros(d);
    v[a] = Rational::one();
    v
}

/// The algebra on `T_{t0}M` in the basis `∂_1, …, ∂_n`.
pub fn fiber_algebra(m: &FMultiplication, t0: &[Rational]) -> Result<PointAlgebra, PointError> {
    let n = m.dim();
    let mut table = vec![vec![Vec::new(); n]; n];
    for (a, row) in table.iter_mut().enumerate() {
        for (b, cell) in row.iter_mut().enumerate() {
            *cell = m.product(a + 1, b + 1).evaluate(t0)?;
        }
    }
    PointAlgebra::new(table, m.identity().evaluate(t0)?)
}

/// `K[y]/J(t0)` in its standard monomial basis; fails unless the fiber has
/// dimension `n`.
pub fn fiber_algebra_from_ideal(
    gens: &IdealPresentation,
    t0: &[Rational],
    config: &GroebnerConfig,
) -> Result<PointAlgebra, PointError> {
    let n = gens.vars().n();
    let quotient = fiber_quotient(gens, t0, config)?;
    let q = match quotient {
        Some(q) if q.dim() == n => q,
        other => return Err(PointError::Rank { point: t0.to_vec(), expected: n, found: other.map(|q| q.dim()) }),
    };
    let vars = gens.vars();
    let elems: Vec<Polynomial> = (0..n).map(|k| q.element(k)).collect();
    let table = elems.iter().map(|u| elems.iter().map(|v| q.coordinates(&(u * v))).collect()).collect();
    PointAlgebra::new(table, q.coordinates(&Polynomial::one(vars)))
}

/// `G_ab = tr(L_{b_a ∘ b_b})`.
pub fn trace_form(a: &PointAlgebra) -> Vec<Vec<Rational>> {
    let d = a.dim();
    let traces: Vec<Rational> = (0..d).map(|c| a.trace(&a.basis(c))).collect();
    (0..d)
        .map(|i| (0..d).map(|j| a.table[i][j].iter().zip(&traces).map(|(x, t)| x * t).sum()).collect())
        .collect()
}

/// Nondegeneracy of the trace form.
pub fn is_semisimple(a: &PointAlgebra) -> bool {
    !linalg::determinant(&trace_form(a)).is_zero()
}

/// A basis of the nilradical: the kernel of the trace form, with every
/// element checked to be nilpotent.
pub fn nilradical(a: &PointAlgebra) -> Result<Vec<Vec<Rational>>, PointError> {
    let d = a.dim();
    let basis = linalg::nullspace(&trace_form(a), d);
    if let Some(bad) = basis.iter().position(|v| !a.is_nilpotent(v)) {
        return Err(PointError::NotNilpotent { index: bad });
    }
    Ok(basis)
}

/// Number of points in the fiber over an algebraic closure.
pub fn local_factor_count(a: &PointAlgebra) -> Result<usize, PointError> {
    Ok(a.dim() - nilradical(a)?.len())
}

/// `dim N, dim N², …` up to and including the first zero.
pub fn nilpotency_profile(a: &PointAlgebra) -> Result<Vec<usize>, PointError> {
    let n = nilradical(a)?;
    let mut power = n.clone();
    let mut dims = vec![power.len()];
    while !power.is_empty() {
        let products: Vec<Vec<Rational>> = power.iter().flat_map(|u| n.iter().map(|v| a.multiply(u, v))).collect();
        power = span_basis(products);
        dims.push(power.len());
    }
    Ok(dims)
}

/// Linearly independent subset spanning the same space.
fn span_basis(vectors: Vec<Vec<Rational>>) -> Vec<Vec<Rational>> {
    let mut work = vectors;
    let pivots = linalg::row_reduce(&mut work);
    work.truncate(pivots.len());
    work
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    #[test]
    fn trace_forms() {
        let a = PointAlgebra::cyclic(&[rat(1, 1), rat(0, 1)]);
        assert_eq!(trace_form(&a), vec![vec![rat(2, 1), rat(0, 1)], vec![rat(0, 1), rat(2, 1)]]);
        assert!(is_semisimple(&a));
        assert_eq!(trace_form(&PointAlgebra::split(1)), vec![vec![rat(1, 1)]]);
        let dual = PointAlgebra::cyclic(&[rat(0, 1), rat(0, 1)]);
        assert!(!is_semisimple(&dual));
        assert_eq!(nilradical(&dual).unwrap().len(), 1);
    }

    #[test]
    fn validation() {
        let mut table = PointAlgebra::cyclic(&[rat(1, 1), rat(0, 1)]).table().to_vec();
        table[0][1][0] = rat(5, 1);
        assert!(matches!(PointAlgebra::new(table, vec![rat(1, 1), rat(0, 1)]), Err(PointError::NotCommutative { .. })));
        let a = PointAlgebra::split(2);
        assert!(matches!(
            PointAlgebra::new(a.table().to_vec(), vec![rat(1, 1), rat(0, 1)]),
            Err(PointError::UnitFails { b: 1 })
        ));
    }

    #[test]
    fn profiles() {
        // K[x]/(x^3): N = (x, x²), N² = (x²), N³ = 0.
        let a = PointAlgebra::cyclic(&[rat(0, 1), rat(0, 1), rat(0, 1)]);
        assert_eq!(nilpotency_profile(&a).unwrap(), vec![2, 1, 0]);
        assert_eq!(local_factor_count(&a).unwrap(), 1);
        assert_eq!(nilpotency_profile(&PointAlgebra::split(3)).unwrap(), vec![0]);
    }
}
