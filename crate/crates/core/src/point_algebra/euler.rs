use num_traits::{One, Zero};

use super::PointError;
use crate::linalg;
use crate::poly::Rational;

/// Hodge bidegrees of a bihomogeneous basis together with the coefficients
/// of the anticanonical class, which live on the `(1,1)` basis elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradingData {
    bidegrees: Vec<(u32, u32)>,
    r: Vec<Rational>,
}

impl GradingData {
    /// `r[b]` must vanish unless `b` has bidegree `(1,1)`. The basis must
    /// contain a `(0,0)` element (the unit class).
    pub fn new(bidegrees: Vec<(u32, u32)>, r: Vec<Rational>) -> Result<Self, PointError> {
        if r.len() != bidegrees.len() {
            return Err(PointError::Shape { dim: bidegrees.len() });
        }
        if let Some(b) = (0..r.len()).find(|&b| !r[b].is_zero() && bidegrees[b] != (1, 1)) {
            return Err(PointError::Grading(format!("r{} is nonzero but the bidegree is {:?}", b + 1, bidegrees[b])));
        }
        if !bidegrees.contains(&(0, 0)) {
            return Err(PointError::Grading("no basis element of bidegree (0,0)".into()));
        }
        Ok(GradingData { bidegrees, r })
    }

    pub fn dim(&self) -> usize {
        self.bidegrees.len()
    }

    pub fn bidegrees(&self) -> &[(u32, u32)] {
        &self.bidegrees
    }

    pub fn r(&self) -> &[Rational] {
        &self.r
    }
}

/// An affine vector field `Σ_k (Σ_j A_kj x_j + u_k) ∂_k` in flat coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EulerField {
    pub linear: Vec<Vec<Rational>>,
    pub constant: Vec<Rational>,
    pub weight: Rational,
}

impl EulerField {
    pub fn is_zero(&self) -> bool {
        self.linear.iter().flatten().chain(&self.constant).all(Zero::is_zero)
    }

    fn flat(&self) -> Vec<Rational> {
        self.linear.iter().flatten().chain(&self.constant).cloned().collect()
    }
}

fn mat_mul(a: &[Vec<Rational>], b: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let d = b.first().map_or(0, Vec::len);
    a.iter().map(|row| (0..d).map(|j| row.iter().zip(b).map(|(x, br)| x * &br[j]).sum()).collect()).collect()
}

/// `[Ax + u, Bx + v] = (BA − AB)x + (Bu − Av)`. The result carries weight 0.
pub fn affine_bracket(x: &EulerField, y: &EulerField) -> EulerField {
    let ba = mat_mul(&y.linear, &x.linear);
    let ab = mat_mul(&x.linear, &y.linear);
    let linear = ba.iter().zip(&ab).map(|(r, s)| r.iter().zip(s).map(|(p, q)| p - q).collect()).collect();
    let bu = linalg::mat_vec(&y.linear, &x.constant);
    let av = linalg::mat_vec(&x.linear, &y.constant);
    EulerField { linear, constant: bu.iter().zip(&av).map(|(p, q)| p - q).collect(), weight: Rational::zero() }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EulerPair {
    pub e1: EulerField,
    pub e2: EulerField,
    pub commutator: EulerField,
    pub proportional: bool,
}

fn diagonal_field(g: &GradingData, degree: impl Fn((u32, u32)) -> u32) -> EulerField {
    let d = g.dim();
    let linear = (0..d)
        .map(|k| {
            (0..d)
                .map(|j| if j == k { Rational::one() - Rational::from_integer(degree(g.bidegrees[k]).into()) } else { Rational::zero() })
                .collect()
        })
        .collect();
    EulerField { linear, constant: g.r.clone(), weight: Rational::one() }
}

/// `E_1 = Σ (1 − p_a) x_a ∂_a + Σ r_b ∂_b` and the same with `q_a`, their
/// bracket, and whether they are proportional.
pub fn euler_fields(g: &GradingData) -> EulerPair {
    let e1 = diagonal_field(g, |(p, _)| p);
    let e2 = diagonal_field(g, |(_, q)| q);
    let commutator = affine_bracket(&e1, &e2);
    let proportional = linalg::rank(&[e1.flat(), e2.flat()]) <= 1;
    EulerPair { e1, e2, commutator, proportional }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    #[test]
    fn balanced_grading_gives_equal_fields() {
        let g = GradingData::new(vec![(0, 0), (1, 1), (2, 2)], vec![rat(0, 1), rat(3, 1), rat(0, 1)]).unwrap();
        let pair = euler_fields(&g);
        assert_eq!(pair.e1, pair.e2);
        assert!(pair.proportional);
        assert!(pair.commutator.is_zero());
    }

    #[test]
    fn unbalanced_grading_is_not_proportional() {
        let g = GradingData::new(vec![(0, 0), (1, 0), (0, 1), (1, 1)], vec![rat(0, 1), rat(0, 1), rat(0, 1), rat(2, 1)]).unwrap();
        let pair = euler_fields(&g);
        assert!(!pair.proportional);
        assert!(pair.commutator.is_zero());
        assert_eq!(pair.e1.linear[1][1], rat(0, 1));
        assert_eq!(pair.e2.linear[1][1], rat(1, 1));
    }

    #[test]
    fn bracket_of_noncommuting_affine_fields() {
        // X = x2 ∂1, Y = ∂2: [X, Y] = −∂1.
        let x = EulerField {
            linear: vec![vec![rat(0, 1), rat(1, 1)], vec![rat(0, 1), rat(0, 1)]],
            constant: vec![rat(0, 1), rat(0, 1)],
            weight: rat(0, 1),
        };
        let y = EulerField { linear: vec![vec![rat(0, 1); 2]; 2], constant: vec![rat(0, 1), rat(1, 1)], weight: rat(0, 1) };
        let c = affine_bracket(&x, &y);
        assert_eq!(c.constant, vec![rat(-1, 1), rat(0, 1)]);
    }

    #[test]
    fn validation() {
        assert!(GradingData::new(vec![(0, 0), (1, 0)], vec![rat(0, 1), rat(1, 1)]).is_err());
        assert!(GradingData::new(vec![(1, 1)], vec![rat(1, 1)]).is_err());
    }
}
