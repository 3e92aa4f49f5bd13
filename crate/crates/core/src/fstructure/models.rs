//! Standard multiplications used as test models.

use super::{FError, FMultiplication, VectorField};
use crate::poly::{Polynomial, VariableSet};

/// `∂_a ∘ ∂_b = δ_ab ∂_a` with unit `Σ ∂_a`: the product of `n` copies of
/// the base field, an F-manifold for every `n`.
pub fn semisimple_model(vars: VariableSet) -> FMultiplication {
    let n = vars.n();
    let table = (1..=n)
        .map(|a| (1..=n).map(|b| if a == b { VectorField::basis(vars, a) } else { VectorField::zero(vars) }).collect())
        .collect();
    let mut unit = VectorField::zero(vars);
    for a in 1..=n {
        unit = &unit + &VectorField::basis(vars, a);
    }
    FMultiplication::new(vars, table, unit).expect("semisimple model satisfies the axioms")
}

/// The cyclic algebra `K[x]/(x^n − Σ_k p_k x^k)` with `∂_a ↔ x^{a−1}`,
/// where `coeffs[k] = p_k` are functions of the base.
pub fn cyclic_model(vars: VariableSet, coeffs: &[Polynomial]) -> Result<FMultiplication, FError> {
    let n = vars.n();
    if coeffs.len() != n {
        return Err(FError::Dimension { expected: n, got: coeffs.len() });
    }
    // powers[k] = coordinates of x^k in the basis 1, x, …, x^{n−1}, for k < 2n − 1.
    let mut powers: Vec<Vec<Polynomial>> = Vec::with_capacity(2 * n);
    for k in 0..n {
        let mut v = vec![Polynomial::zero(vars); n];
        v[k] = Polynomial::one(vars);
        powers.push(v);
    }
    while powers.len() < 2 * n.max(1) - 1 {
        // x^{k+1} = x·x^k, with x^n replaced by Σ p_j x^j.
        let prev = powers.last().expect("nonempty");
        let top = prev[n - 1].clone();
        let mut next = vec![Polynomial::zero(vars); n];
        next[1..n].clone_from_slice(&prev[..n - 1]);
        for (j, p) in coeffs.iter().enumerate() {
            next[j] = &next[j] + &(&top * p);
        }
        powers.push(next);
    }
    let table = (0..n)
        .map(|a| (0..n).map(|b| VectorField::from_coeffs(vars, powers[a + b].clone())).collect::<Result<Vec<_>, _>>())
        .collect::<Result<Vec<_>, _>>()?;
    FMultiplication::new(vars, table, VectorField::basis(vars, 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fstructure::check_structure_identity;
    use crate::poly::parse_poly;

    #[test]
    fn semisimple_is_f_manifold() {
        let m = semisimple_model(VariableSet::new(3));
        assert!(check_structure_identity(&m).holds());
        assert_eq!(m.product(2, 2), VectorField::basis(m.vars(), 2));
    }

    #[test]
    fn cyclic_products() {
        let vars = VariableSet::new(3);
        let p = |s: &str| parse_poly(s, vars).unwrap();
        let m = cyclic_model(vars, &[p("1"), p("0"), p("2")]).unwrap();
        // x^2 ↔ ∂3, x^3 = 1 + 2x^2, x^4 = x + 2x^3 = 2 + x + 4x^2.
        assert_eq!(m.product(2, 2), VectorField::basis(vars, 3));
        assert_eq!(m.product(2, 3).symbol(), p("y1 + 2*y3"));
        assert_eq!(m.product(3, 3).symbol(), p("2*y1 + y2 + 4*y3"));
        assert!(check_structure_identity(&m).holds());
    }
}
