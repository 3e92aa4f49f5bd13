//! Seeded generators shared by the integration tests and the acceptance run.
#![allow(dead_code)]

use fmcheck_core::fstructure::{
    cyclic_model, family1, family2, multiplication_from_ideal, semisimple_model, FMultiplication, VectorField,
};
use fmcheck_core::groebner::{IdealPresentation, MonomialOrder};
use fmcheck_core::point_algebra::{GradingData, Parity, SuperFrobeniusAlgebra};
use fmcheck_core::poly::Monomial;
use fmcheck_core::{linalg, rat, GroebnerConfig, Polynomial, Rational, VariableSet};
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn small(rng: &mut ChaCha8Rng) -> Rational {
    let mut c = rat(rng.random_range(-4..=4), rng.random_range(1..=2));
    if c.is_zero() {
        c = Rational::one();
    }
    c
}

/// Up to `terms` random terms of degree ≤ `max_deg` in the variables whose
/// indices are listed.
pub fn random_poly_in(rng: &mut ChaCha8Rng, vars: VariableSet, indices: &[usize], terms: usize, max_deg: u32) -> Polynomial {
    let mut out = Polynomial::zero(vars);
    for _ in 0..rng.random_range(0..=terms) {
        let mut exps = vec![0u32; vars.len()];
        let deg = rng.random_range(0..=max_deg);
        for _ in 0..deg {
            exps[indices[rng.random_range(0..indices.len())]] += 1;
        }
        out = &out + &Polynomial::monomial(vars, Monomial::from_exponents(exps), small(rng));
    }
    out
}

pub fn base_indices(vars: VariableSet) -> Vec<usize> {
    (1..=vars.n()).map(|i| vars.t(i)).collect()
}

pub fn all_indices(vars: VariableSet) -> Vec<usize> {
    (1..=vars.n()).flat_map(|i| [vars.t(i), vars.y(i)]).collect()
}

pub fn random_base_poly(rng: &mut ChaCha8Rng, vars: VariableSet, terms: usize, max_deg: u32) -> Polynomial {
    random_poly_in(rng, vars, &base_indices(vars), terms, max_deg)
}

pub fn random_poly(rng: &mut ChaCha8Rng, vars: VariableSet, terms: usize, max_deg: u32) -> Polynomial {
    random_poly_in(rng, vars, &all_indices(vars), terms, max_deg)
}

pub fn random_field(rng: &mut ChaCha8Rng, vars: VariableSet) -> VectorField {
    let coeffs = (0..vars.n()).map(|_| random_base_poly(rng, vars, 2, 2)).collect();
    VectorField::from_coeffs(vars, coeffs).unwrap()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Source {
    Semisimple,
    ConstantCyclic,
    Family1,
    Family1WithT1,
    Family2,
    RandomCyclic,
    PerturbedFamily1,
}

pub struct Instance {
    pub label: String,
    pub source: Source,
    pub m: FMultiplication,
}

/// `(y_i − ρ_i)(y_j − ρ_j)` ideal without the `∂_1 ρ = 0` restriction.
fn family1_ideal_unchecked(vars: VariableSet, rho: &[Polynomial]) -> IdealPresentation {
    let n = vars.n();
    let shifted = |i: usize| &Polynomial::y(vars, i) - &rho[i - 1];
    let mut gens = vec![&Polynomial::y(vars, 1) - &Polynomial::one(vars)];
    for i in 2..=n {
        for j in i..=n {
            gens.push(&shifted(i) * &shifted(j));
        }
    }
    IdealPresentation::new(gens, MonomialOrder::Block).unwrap()
}

/// The family-1 algebra with `x_2 ∘ x_2 = c·x_3` instead of 0, where
/// `x_1 = ∂_1` and `x_i = ∂_i − ρ_i ∂_1`.
fn perturbed_family1(vars: VariableSet, rho: &[Polynomial], c: &Polynomial) -> FMultiplication {
    let n = vars.n();
    let d = |a| VectorField::basis(vars, a);
    let x = |a: usize| if a == 1 { d(1) } else { &d(a) - &d(1).scale(&rho[a - 1]) };
    let xx = |a: usize, b: usize| -> VectorField {
        match (a, b) {
            (1, b) => x(b),
            (a, 1) => x(a),
            (2, 2) => x(3).scale(c),
            _ => VectorField::zero(vars),
        }
    };
    // ∂_a = x_a + ρ_a x_1 for a ≥ 2.
    let expand = |a: usize| -> Vec<(usize, Polynomial)> {
        if a == 1 {
            vec![(1, Polynomial::one(vars))]
        } else {
            vec![(a, Polynomial::one(vars)), (1, rho[a - 1].clone())]
        }
    };
    let table = (1..=n)
        .map(|a| {
            (1..=n)
                .map(|b| {
                    let mut acc = VectorField::zero(vars);
                    for (i, ci) in expand(a) {
                        for (j, cj) in expand(b) {
                            acc = &acc + &xx(i, j).scale(&(&ci * &cj));
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect();
    FMultiplication::new(vars, table, d(1)).unwrap()
}

fn rho_without_t1(rng: &mut ChaCha8Rng, vars: VariableSet) -> Vec<Polynomial> {
    let indices: Vec<usize> = (2..=vars.n()).map(|i| vars.t(i)).collect();
    std::iter::once(Polynomial::one(vars))
        .chain((2..=vars.n()).map(|_| random_poly_in(rng, vars, &indices, 2, 2)))
        .collect()
}

/// Seeded corpus of multiplications at `n = 2, 3` mixing F-manifolds and
/// non-F-manifolds.
pub fn corpus(seed: u64) -> Vec<Instance> {
    let mut rng = rng(seed);
    let cfg = GroebnerConfig::default();
    let mut out = Vec::new();
    let mut push = |label: String, source: Source, m: FMultiplication| out.push(Instance { label, source, m });
    for n in [2, 3] {
        let vars = VariableSet::new(n);
        push(format!("semisimple n={n}"), Source::Semisimple, semisimple_model(vars));
        for k in 0..4 {
            let coeffs: Vec<Polynomial> =
                (0..n).map(|_| Polynomial::constant(vars, rat(rng.random_range(-3..=3), 1))).collect();
            push(format!("constant cyclic n={n} #{k}"), Source::ConstantCyclic, cyclic_model(vars, &coeffs).unwrap());
        }
        for k in 0..5 {
            let rho = rho_without_t1(&mut rng, vars);
            let fam = family1(n, &rho).unwrap();
            let m = multiplication_from_ideal(fam.ideal(), n, &cfg).unwrap();
            push(format!("family1 n={n} #{k}"), Source::Family1, m);
        }
        for k in 0..4 {
            let mut rho = rho_without_t1(&mut rng, vars);
            let t1 = Polynomial::t(vars, 1);
            rho[1] = &rho[1] + &(&t1 * &Polynomial::constant(vars, small(&mut rng)));
            let m = multiplication_from_ideal(&family1_ideal_unchecked(vars, &rho), n, &cfg).unwrap();
            push(format!("family1 with t1 n={n} #{k}"), Source::Family1WithT1, m);
        }
        for k in 0..8 {
            let coeffs: Vec<Polynomial> = (0..n).map(|_| random_base_poly(&mut rng, vars, 2, 2)).collect();
            push(format!("random cyclic n={n} #{k}"), Source::RandomCyclic, cyclic_model(vars, &coeffs).unwrap());
        }
    }
    let vars = VariableSet::new(3);
    let fam = family2(3).unwrap();
    push("family2 n=3".into(), Source::Family2, multiplication_from_ideal(fam.ideal(), 3, &cfg).unwrap());
    for k in 0..10 {
        let rho = rho_without_t1(&mut rng, vars);
        let c = random_base_poly(&mut rng, vars, 2, 2);
        push(format!("perturbed family1 #{k}"), Source::PerturbedFamily1, perturbed_family1(vars, &rho, &c));
    }
    out
}

/// Random bidegrees in `[0, 2]²` with a `(0,0)` class first and random
/// anticanonical coefficients on the `(1,1)` classes.
pub fn random_grading(rng: &mut ChaCha8Rng) -> GradingData {
    let d = rng.random_range(1..=6);
    let mut bidegrees = vec![(0, 0)];
    for _ in 1..d {
        bidegrees.push((rng.random_range(0..=2), rng.random_range(0..=2)));
    }
    let r = bidegrees.iter().map(|&b| if b == (1, 1) { small(rng) } else { Rational::zero() }).collect();
    GradingData::new(bidegrees, r).unwrap()
}

/// `Λ(θ_1..θ_k) ⊗ E` with `E` an even cyclic algebra, in a random
/// parity-preserving basis, with pairing `g(a, b) = ε(a∘b)` for a random even
/// functional `ε` that is nonzero on the socle. `k` is 0 or 2 so that the
/// pairing is even. Total dimension ≤ 6.
pub fn random_super_frobenius(rng: &mut ChaCha8Rng) -> SuperFrobeniusAlgebra {
    loop {
        let k = if rng.random_bool(0.5) { 2 } else { 0 };
        let m = if k == 2 { 1 } else { rng.random_range(1..=4) };
        if let Some(alg) = try_super_frobenius(rng, k, m) {
            return alg;
        }
    }
}

fn try_super_frobenius(rng: &mut ChaCha8Rng, k: usize, m: usize) -> Option<SuperFrobeniusAlgebra> {
    // Even factor K[x]/(x^m − Σ c_j x^j).
    let c: Vec<Rational> = (0..m).map(|_| rat(rng.random_range(-2..=2), 1)).collect();
    let even = fmcheck_core::PointAlgebra::cyclic(&c);
    // Exterior monomials as bitmasks over k generators.
    let ext = 1usize << k;
    let d = ext * m;
    let idx = |mask: usize, e: usize| mask * m + e;
    let parity: Vec<Parity> =
        (0..d).map(|i| if (i / m).count_ones() % 2 == 1 { Parity::Odd } else { Parity::Even }).collect();
    let mut table = vec![vec![vec![Rational::zero(); d]; d]; d];
    for ma in 0..ext {
        for mb in 0..ext {
            if ma & mb != 0 {
                continue;
            }
            // Sign of reordering θ_A θ_B into increasing order.
            let swaps: u32 = (0..k).filter(|&i| mb >> i & 1 == 1).map(|i| (ma >> (i + 1)).count_ones()).sum();
            let sign = if swaps.is_multiple_of(2) { Rational::one() } else { -Rational::one() };
            for ea in 0..m {
                for eb in 0..m {
                    for (ec, v) in even.table()[ea][eb].iter().enumerate() {
                        table[idx(ma, ea)][idx(mb, eb)][idx(ma | mb, ec)] = &sign * v;
                    }
                }
            }
        }
    }
    let mut unit = vec![Rational::zero(); d];
    unit[idx(0, 0)] = Rational::one();
    // Random parity-preserving change of basis P (columns are new basis vectors).
    let p = random_block_matrix(rng, &parity)?;
    let p_inv = invert(&p)?;
    let transform = |v: &[Rational]| linalg::mat_vec(&p_inv, v);
    let col = |j: usize| -> Vec<Rational> { p.iter().map(|r| r[j].clone()).collect() };
    let mul = |u: &[Rational], v: &[Rational]| -> Vec<Rational> {
        let mut out = vec![Rational::zero(); d];
        for a in 0..d {
            for b in 0..d {
                if u[a].is_zero() || v[b].is_zero() {
                    continue;
                }
                for c in 0..d {
                    out[c] += &u[a] * &v[b] * &table[a][b][c];
                }
            }
        }
        out
    };
    let new_table: Vec<Vec<Vec<Rational>>> =
        (0..d).map(|a| (0..d).map(|b| transform(&mul(&col(a), &col(b)))).collect()).collect();
    let new_unit = transform(&unit);
    // ε: top exterior monomial times top even power, plus random lower terms.
    let mut eps: Vec<Rational> =
        (0..d).map(|i| if parity[i] == Parity::Even { rat(rng.random_range(-1..=1), 1) } else { Rational::zero() }).collect();
    eps[idx(ext - 1, m - 1)] = rat(rng.random_range(1..=3), 1);
    let pairing: Vec<Vec<Rational>> = (0..d)
        .map(|a| {
            (0..d)
                .map(|b| {
                    let prod = mul(&col(a), &col(b));
                    prod.iter().zip(&eps).map(|(x, e)| x * e).sum()
                })
                .collect()
        })
        .collect();
    SuperFrobeniusAlgebra::new(parity, new_table, pairing, new_unit).ok()
}

fn random_block_matrix(rng: &mut ChaCha8Rng, parity: &[Parity]) -> Option<Vec<Vec<Rational>>> {
    let d = parity.len();
    let m: Vec<Vec<Rational>> = (0..d)
        .map(|i| {
            (0..d)
                .map(|j| {
                    if parity[i] != parity[j] {
                        Rational::zero()
                    } else if i == j {
                        rat(rng.random_range(1..=2), 1)
                    } else {
                        rat(rng.random_range(-1..=1), 1)
                    }
                })
                .collect()
        })
        .collect();
    (!linalg::determinant(&m).is_zero()).then_some(m)
}

fn invert(m: &[Vec<Rational>]) -> Option<Vec<Vec<Rational>>> {
    let d = m.len();
    let cols: Vec<Vec<Rational>> = (0..d)
        .map(|j| {
            let mut e = vec![Rational::zero(); d];
            e[j] = Rational::one();
            linalg::solve(m, &e)
        })
        .collect::<Option<_>>()?;
    Some((0..d).map(|i| (0..d).map(|j| cols[j][i].clone()).collect()).collect())
}
