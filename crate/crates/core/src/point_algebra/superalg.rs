use num_traits::{One, Zero};

use super::PointError;
use crate::linalg;
use crate::poly::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    fn add(self, other: Parity) -> Parity {
        if self == other {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// A supercommutative algebra with unit and a nondegenerate pairing.
///
/// Invariance of the pairing is not a construction requirement; it is
/// checked by [`frobenius_invariance_check`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuperFrobeniusAlgebra {
    parity: Vec<Parity>,
    table: Vec<Vec<Vec<Rational>>>,
    pairing: Vec<Vec<Rational>>,
    unit: Vec<Rational>,
}

impl SuperFrobeniusAlgebra {
    /// Checks supercommutativity, additivity of parity under the product,
    /// associativity, the unit, and nondegeneracy of the pairing.
    pub fn new(
        parity: Vec<Parity>,
        table: Vec<Vec<Vec<Rational>>>,
        pairing: Vec<Vec<Rational>>,
        unit: Vec<Rational>,
    ) -> Result<Self, PointError> {
        let d = parity.len();
        let square = |m: &Vec<Vec<Rational>>| m.len() == d && m.iter().all(|r| r.len() == d);
        if unit.len() != d || table.len() != d || table.iter().any(|r| !square(r)) || !square(&pairing) {
            return Err(PointError::Shape { dim: d });
        }
        let alg = SuperFrobeniusAlgebra { parity, table, pairing, unit };
        for a in 0..d {
            for b in 0..d {
                let sign = alg.sign(a, b);
                let swapped: Vec<Rational> = alg.table[b][a].iter().map(|x| x * &sign).collect();
                if alg.table[a][b] != swapped {
                    return Err(PointError::NotSupercommutative { a, b });
                }
                let expected = alg.parity[a].add(alg.parity[b]);
                if let Some(c) = (0..d).find(|&c| !alg.table[a][b][c].is_zero() && alg.parity[c] != expected) {
                    return Err(PointError::ParityNotAdditive { a, b, c });
                }
            }
        }
        for a in 0..d {
            for b in 0..d {
                for c in 0..d {
                    let left = alg.multiply(&alg.table[a][b], &alg.basis(c));
                    let right = alg.multiply(&alg.basis(a), &alg.table[b][c]);
                    if left != right {
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
        if linalg::determinant(&alg.pairing).is_zero() {
            return Err(PointError::DegeneratePairing);
        }
        Ok(alg)
    }

    /// The exterior algebra on two odd generators, basis `1, θ1, θ2, θ1θ2`,
    /// with `g(1, θ1θ2) = g(θ1, θ2) = 1`.
    pub fn exterior_two() -> Self {
        let z = || Rational::zero();
        let o = || Rational::one();
        let v = |k: usize, c: Rational| {
            let mut out = vec![z(), z(), z(), z()];
            out[k] = c;
            out
        };
        let zero = vec![z(), z(), z(), z()];
        let table = vec![
            vec![v(0, o()), v(1, o()), v(2, o()), v(3, o())],
            vec![v(1, o()), zero.clone(), v(3, o()), zero.clone()],
            vec![v(2, o()), v(3, -o()), zero.clone(), zero.clone()],
            vec![v(3, o()), zero.clone(), zero.clone(), zero.clone()],
        ];
        let pairing = vec![
            vec![z(), z(), z(), o()],
            vec![z(), z(), o(), z()],
            vec![z(), -o(), z(), z()],
            vec![o(), z(), z(), z()],
        ];
        let parity = vec![Parity::Even, Parity::Odd, Parity::Odd, Parity::Even];
        SuperFrobeniusAlgebra::new(parity, table, pairing, v(0, o())).expect("exterior algebra is valid")
    }

    pub fn dim(&self) -> usize {
        self.parity.len()
    }

    pub fn parity(&self) -> &[Parity] {
        &self.parity
    }

    pub fn table(&self) -> &[Vec<Vec<Rational>>] {
        &self.table
    }

    pub fn pairing(&self) -> &[Vec<Rational>] {
        &self.pairing
    }

    pub fn unit(&self) -> &[Rational] {
        &self.unit
    }

    pub fn basis(&self, a: usize) -> Vec<Rational> {
        super::algebra::unit_vector(self.dim(), a)
    }

    /// `(−1)^{|a||b|}`.
    fn sign(&self, a: usize, b: usize) -> Rational {
        if self.parity[a] == Parity::Odd && self.parity[b] == Parity::Odd {
            -Rational::one()
        } else {
            Rational::one()
        }
    }

    pub fn multiply(&self, u: &[Rational], v: &[Rational]) -> Vec<Rational> {
        let d = self.dim();
        let mut out = vec![Rational::zero(); d];
        for (a, ua) in u.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (b, vb) in v.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
                let s = ua * vb;
                for (o, c) in out.iter_mut().zip(&self.table[a][b]) {
                    *o += &s * c;
                }
            }
        }
        out
    }

    pub fn pair(&self, u: &[Rational], v: &[Rational]) -> Rational {
        let gv = linalg::mat_vec(&self.pairing, v);
        u.iter().zip(&gv).map(|(x, y)| x * y).sum()
    }

    /// `Some(parity)` if `u` is nonzero and homogeneous.
    pub fn homogeneous_parity(&self, u: &[Rational]) -> Option<Parity> {
        let mut found = None;
        for (k, x) in u.iter().enumerate() {
            if !x.is_zero() {
                match found {
                    None => found = Some(self.parity[k]),
                    Some(p) if p != self.parity[k] => return None,
                    _ => {}
                }
            }
        }
        found
    }
}

/// `Δ'` with `g(Δ, Δ') = 1` and `N = Δ∘Δ'`, a nonzero even element with
/// `N∘N = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OddWitness {
    pub delta_prime: Vec<Rational>,
    pub n: Vec<Rational>,
}

/// Shows that an odd element forces a nilpotent in the even part: `Δ∘Δ = 0`,
/// an odd `Δ'` pairs to 1 with `Δ`, and `N = Δ∘Δ'` satisfies `g(N, e) = 1`
/// and `N∘N = 0`. Every claim is verified before returning.
pub fn odd_nilpotent_witness(alg: &SuperFrobeniusAlgebra, delta: &[Rational]) -> Result<OddWitness, PointError> {
    let d = alg.dim();
    if delta.len() != d {
        return Err(PointError::Shape { dim: d });
    }
    if alg.homogeneous_parity(delta) != Some(Parity::Odd) {
        return Err(PointError::NotOdd);
    }
    let zero = vec![Rational::zero(); d];
    if alg.multiply(delta, delta) != zero {
        return Err(PointError::OddSquareNonzero);
    }
    // g(Δ, x) for odd x is linear in x; take the first odd coordinate with a
    // nonzero coefficient.
    let coeffs = linalg::mat_vec(&transpose(alg.pairing()), delta);
    let j = (0..d).find(|&j| alg.parity[j] == Parity::Odd && !coeffs[j].is_zero()).ok_or(PointError::NoDualElement)?;
    let mut delta_prime = zero.clone();
    delta_prime[j] = coeffs[j].recip();
    let n = alg.multiply(delta, &delta_prime);
    let checks = alg.pair(delta, &delta_prime).is_one()
        && alg.homogeneous_parity(&n) == Some(Parity::Even)
        && alg.pair(&n, alg.unit()).is_one()
        && alg.multiply(&n, &n) == zero;
    if !checks {
        return Err(PointError::WitnessCheck);
    }
    Ok(OddWitness { delta_prime, n })
}

fn transpose(m: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let d = m.first().map_or(0, Vec::len);
    (0..d).map(|j| m.iter().map(|r| r[j].clone()).collect()).collect()
}

/// First basis triple with `g(a∘b, c) ≠ g(a, b∘c)`, if any.
pub fn frobenius_invariance_check(alg: &SuperFrobeniusAlgebra) -> Option<(usize, usize, usize)> {
    let d = alg.dim();
    for a in 0..d {
        for b in 0..d {
            for c in 0..d {
                let left = alg.pair(&alg.table[a][b], &alg.basis(c));
                let right = alg.pair(&alg.basis(a), &alg.table[b][c]);
                if left != right {
                    return Some((a, b, c));
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    fn vec4(v: [i64; 4]) -> Vec<Rational> {
        v.iter().map(|&x| rat(x, 1)).collect()
    }

    #[test]
    fn exterior_witnesses() {
        let alg = SuperFrobeniusAlgebra::exterior_two();
        assert_eq!(frobenius_invariance_check(&alg), None);
        let w = odd_nilpotent_witness(&alg, &vec4([0, 1, 0, 0])).unwrap();
        assert_eq!(w.delta_prime, vec4([0, 0, 1, 0]));
        assert_eq!(w.n, vec4([0, 0, 0, 1]));
        let w = odd_nilpotent_witness(&alg, &vec4([0, 1, 1, 0])).unwrap();
        assert_eq!(w.delta_prime, vec4([0, -1, 0, 0]));
        assert_eq!(w.n, vec4([0, 0, 0, 1]));
    }

    #[test]
    fn even_input_is_rejected() {
        let alg = SuperFrobeniusAlgebra::exterior_two();
        assert_eq!(odd_nilpotent_witness(&alg, &vec4([1, 0, 0, 0])), Err(PointError::NotOdd));
        assert_eq!(odd_nilpotent_witness(&alg, &vec4([0, 1, 0, 1])), Err(PointError::NotOdd));
        let even = SuperFrobeniusAlgebra::new(vec![Parity::Even], vec![vec![vec![rat(1, 1)]]], vec![vec![rat(1, 1)]], vec![rat(1, 1)]).unwrap();
        assert_eq!(frobenius_invariance_check(&even), None);
        assert_eq!(odd_nilpotent_witness(&even, &[rat(1, 1)]), Err(PointError::NotOdd));
    }

    #[test]
    fn perturbed_table_breaks_invariance() {
        let alg = SuperFrobeniusAlgebra::exterior_two();
        let mut table = alg.table().to_vec();
        table[1][2] = vec4([0, 0, 0, 2]);
        table[2][1] = vec4([0, 0, 0, -2]);
        let bad = SuperFrobeniusAlgebra::new(alg.parity().to_vec(), table, alg.pairing().to_vec(), alg.unit().to_vec()).unwrap();
        assert_eq!(frobenius_invariance_check(&bad), Some((0, 1, 2)));
    }

    #[test]
    fn constructor_checks() {
        let alg = SuperFrobeniusAlgebra::exterior_two();
        let mut table = alg.table().to_vec();
        table[2][1] = vec4([0, 0, 0, 1]);
        let r = SuperFrobeniusAlgebra::new(alg.parity().to_vec(), table, alg.pairing().to_vec(), alg.unit().to_vec());
        assert_eq!(r, Err(PointError::NotSupercommutative { a: 1, b: 2 }));
        let mut pairing = alg.pairing().to_vec();
        pairing[0][3] = rat(0, 1);
        let r = SuperFrobeniusAlgebra::new(alg.parity().to_vec(), alg.table().to_vec(), pairing, alg.unit().to_vec());
        assert_eq!(r, Err(PointError::DegeneratePairing));
    }
}
