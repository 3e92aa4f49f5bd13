//! Dense univariate polynomials over the rationals, lowest degree first.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::poly::Rational;

fn trim(mut p: Vec<Rational>) -> Vec<Rational> {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

pub(crate) fn degree(p: &[Rational]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

pub(crate) fn derivative(p: &[Rational]) -> Vec<Rational> {
    trim(p.iter().enumerate().skip(1).map(|(k, c)| c * Rational::from_integer(BigInt::from(k))).collect())
}

pub(crate) fn evaluate(p: &[Rational], x: &Rational) -> Rational {
    p.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
}

/// Quotient and remainder of `a` by nonzero `b`.
pub(crate) fn div_rem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let db = degree(b).expect("nonzero divisor");
    let mut r = trim(a.to_vec());
    let mut q = vec![Rational::zero(); r.len().saturating_sub(db).max(1)];
    while let Some(dr) = degree(&r).filter(|&d| d >= db) {
        let c = &r[dr] / &b[db];
        for (k, bk) in b.iter().enumerate().take(db + 1) {
            r[dr - db + k] -= &c * bk;
        }
        q[dr - db] = c;
        r = trim(r);
    }
    (trim(q), r)
}

pub(crate) fn monic(p: &[Rational]) -> Vec<Rational> {
    let p = trim(p.to_vec());
    let lead = p.last().cloned().unwrap_or_else(Rational::one);
    p.into_iter().map(|c| c / &lead).collect()
}

pub(crate) fn gcd(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
    while degree(&b).is_some() {
        let (_, r) = div_rem(&a, &b);
        a = b;
        b = r;
    }
    monic(&a)
}

/// `p / gcd(p, p')`, monic.
pub(crate) fn squarefree_part(p: &[Rational]) -> Vec<Rational> {
    let g = gcd(p, &derivative(p));
    monic(&div_rem(p, &g).0)
}

/// Positive divisors of `n`, or `None` when `n` is too large to trial-divide.
fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    const LIMIT: u64 = 1 << 40;
    let n = n.abs();
    if n > BigInt::from(LIMIT) {
        return None;
    }
    let mut out = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if n.is_multiple_of(&d) {
            out.push(d.clone());
            let other = &n / &d;
            if other != d {
                out.push(other);
            }
        }
        d += 1;
    }
    Some(out)
}

/// The distinct rational roots of `p`, ascending, or `None` if the
/// coefficients are too large to search.
pub(crate) fn rational_roots(p: &[Rational]) -> Option<Vec<Rational>> {
    let p = trim(p.to_vec());
    let Some(deg) = degree(&p) else {
        return Some(Vec::new());
    };
    // Clear denominators, then strip the factor x^k.
    let lcm = p.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = p.iter().map(|c| (c * Rational::from_integer(lcm.clone())).to_integer()).collect();
    let shift = ints.iter().position(|c| !c.is_zero()).expect("nonzero polynomial");
    let mut roots = Vec::new();
    if shift > 0 {
        roots.push(Rational::zero());
    }
    if shift < deg {
        let nums = divisors(&ints[shift])?;
        let dens = divisors(&ints[deg])?;
        for a in &nums {
            for b in &dens {
                for s in [a.clone(), -a.clone()] {
                    let x = Rational::new(s, b.clone());
                    if !roots.contains(&x) && evaluate(&p, &x).is_zero() {
                        roots.push(x);
                    }
                }
            }
        }
    }
    roots.sort();
    Some(roots)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    fn poly(c: &[i64]) -> Vec<Rational> {
        c.iter().map(|&x| rat(x, 1)).collect()
    }

    #[test]
    fn roots_and_squarefree() {
        // (x − 1)²(2x + 3) = 2x³ − x² − 4x + 3
        let p = poly(&[3, -4, -1, 2]);
        assert_eq!(rational_roots(&p).unwrap(), vec![rat(-3, 2), rat(1, 1)]);
        assert_eq!(squarefree_part(&p), vec![rat(-3, 2), rat(1, 2), rat(1, 1)]);
        assert!(rational_roots(&poly(&[-2, 0, 1])).unwrap().is_empty());
        assert_eq!(rational_roots(&poly(&[0, 0, 1])).unwrap(), vec![rat(0, 1)]);
    }

    #[test]
    fn division() {
        let (q, r) = div_rem(&poly(&[-1, 0, 1]), &poly(&[-1, 1]));
        assert_eq!(q, poly(&[1, 1]));
        assert!(r.is_empty());
        assert_eq!(gcd(&poly(&[-1, 0, 1]), &poly(&[1, 1])), poly(&[1, 1]));
    }
}
