use super::{FError, FMultiplication, VectorField};
use crate::groebner::{
    buchberger, ideal_subset, radical_contains, GroebnerConfig, IdealPresentation, MonomialOrder, StandardBasis,
};
use crate::linalg;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::poly::{rat, Polynomial, Rational};

/// Generators of the spectral cover ideal: `e − 1` and
/// `∂_a∘∂_b − y_a·y_b` for `a ≤ b`, with fields read as their symbols.
///
/// The presentation uses the block order, under which every quadratic
/// generator has leading monomial `y_a·y_b`.
pub fn spectral_cover_ideal(m: &FMultiplication) -> IdealPresentation {
    let vars = m.vars();
    let n = m.dim();
    let mut gens = vec![&m.identity().symbol() - &Polynomial::one(vars)];
    for a in 1..=n {
        for b in a..=n {
            let yy = &Polynomial::y(vars, a) * &Polynomial::y(vars, b);
            gens.push(&m.product(a, b).symbol() - &yy);
        }
    }
    IdealPresentation::new(gens, MonomialOrder::Block).expect("generators have a nonzero quadratic part")
}

/// Reads the multiplication off an ideal presented with `y_1 ≡ 1` and
/// `y_2, …, y_n` independent modulo the ideal: `C_ab^c` are the coefficients
/// of the block-order normal form of `y_a·y_b`, which must be linear in `y`.
pub fn multiplication_from_ideal(gens: &IdealPresentation, n: usize, config: &GroebnerConfig) -> Result<FMultiplication, FError> {
    let vars = gens.vars();
    if vars.n() != n {
        return Err(FError::Dimension { expected: n, got: vars.n() });
    }
    if gens.contains_z() {
        return Err(FError::AuxVariable);
    }
    let gb = buchberger(&gens.with_order(MonomialOrder::Block), config)?;
    if gb.is_unit_ideal() {
        return Err(FError::UnitIdeal);
    }
    if !gb.normal_form(&Polynomial::y(vars, 1)).is_one() {
        return Err(FError::UnitNotFirstCoordinate);
    }
    for i in 2..=n {
        let y = Polynomial::y(vars, i);
        if gb.normal_form(&y) != y {
            return Err(FError::FiberBasis { index: i });
        }
    }
    let mut table = vec![vec![VectorField::zero(vars); n]; n];
    for a in 1..=n {
        for b in a..=n {
            let nf = gb.normal_form(&(&Polynomial::y(vars, a) * &Polynomial::y(vars, b)));
            let parts = nf.linear_y_parts().ok_or(FError::NotLinear { a, b, normal_form: nf.to_string() })?;
            // The y-free part is a multiple of 1 ≡ y_1.
            let mut coeffs: Vec<Polynomial> = parts[1..].to_vec();
            coeffs[0] = &coeffs[0] + &parts[0];
            let field = VectorField::from_coeffs(vars, coeffs)?;
            table[a - 1][b - 1] = field.clone();
            table[b - 1][a - 1] = field;
        }
    }
    FMultiplication::new(vars, table, VectorField::basis(vars, 1))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RankFailureKind {
    /// Fiber dimension differs from `n`; `None` for an infinite fiber.
    Dimension { found: Option<usize> },
    /// `y_1` is not congruent to 1 at the point.
    UnitNotFirstCoordinate,
    /// The classes of `y_1, …, y_n` are linearly dependent.
    NotAFiberBasis,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankFailure {
    pub point: Vec<Rational>,
    pub kind: RankFailureKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankCheck {
    /// Fiber dimension at each examined point, in sample order.
    pub dims: Vec<(Vec<Rational>, Option<usize>)>,
    pub failure: Option<RankFailure>,
}

impl RankCheck {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

/// `K[y]/J(t0)` at a point of the base, or `None` if it is infinite dimensional.
pub fn fiber_quotient(gens: &IdealPresentation, t0: &[Rational], config: &GroebnerConfig) -> Result<Option<StandardBasis>, FError> {
    let mut evaluated = Vec::with_capacity(gens.generators().len());
    for g in gens.generators() {
        let v = g.evaluate_base(t0)?;
        if !v.is_zero() {
            evaluated.push(v);
        }
    }
    if evaluated.is_empty() {
        return Ok(None);
    }
    let ideal = IdealPresentation::new(evaluated, MonomialOrder::Degrevlex)?;
    Ok(StandardBasis::new(buchberger(&ideal, config)?))
}

/// `count` seeded points of the base with coordinates `a/b`,
/// `a ∈ [−5, 5]`, `b ∈ [1, 3]`.
pub fn sample_points(n: usize, count: usize, seed: u64) -> Vec<Vec<Rational>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| (0..n).map(|_| rat(rng.random_range(-5..=5), rng.random_range(1..=3))).collect())
        .collect()
}

/// Sampled flatness check: at each point the fiber algebra has dimension `n`
/// and is spanned by the classes of `y_1 ≡ 1, y_2, …, y_n`. Stops at the
/// first failing point.
pub fn spectral_cover_rank_check(
    gens: &IdealPresentation,
    n: usize,
    samples: &[Vec<Rational>],
    config: &GroebnerConfig,
) -> Result<RankCheck, FError> {
    let vars = gens.vars();
    if vars.n() != n {
        return Err(FError::Dimension { expected: n, got: vars.n() });
    }
    let mut dims = Vec::with_capacity(samples.len());
    for point in samples {
        let quotient = fiber_quotient(gens, point, config)?;
        let found = quotient.as_ref().map(StandardBasis::dim);
        dims.push((point.clone(), found));
        let fail = |kind| Ok(RankCheck { dims: dims.clone(), failure: Some(RankFailure { point: point.clone(), kind }) });
        let Some(q) = quotient.filter(|q| q.dim() == n) else {
            return fail(RankFailureKind::Dimension { found });
        };
        let one = q.coordinates(&Polynomial::one(vars));
        let rows: Vec<Vec<Rational>> = (1..=n).map(|i| q.coordinates(&Polynomial::y(vars, i))).collect();
        if rows[0] != one {
            return fail(RankFailureKind::UnitNotFirstCoordinate);
        }
        if linalg::rank(&rows) != n {
            return fail(RankFailureKind::NotAFiberBasis);
        }
    }
    Ok(RankCheck { dims, failure: None })
}

/// The radical of the spectral cover ideal when every fiber is a single
/// point: `(y_i − tr(∂_i∘)/n)`.
///
/// Each generator is confirmed to lie in `√J` by the Rabinowitsch test and
/// `J` is confirmed to lie in the candidate. Since the candidate is the ideal
/// of a section of `T*M → M`, it is prime, which pins it down as `√J`.
/// Fails with [`FError::NotLocal`] when the fibers have several points.
pub fn spectral_radical(m: &FMultiplication, config: &GroebnerConfig) -> Result<IdealPresentation, FError> {
    let vars = m.vars();
    let n = m.dim();
    let j = spectral_cover_ideal(m);
    let inv_n = Rational::from_integer(n.into()).recip();
    let mut gens = Vec::with_capacity(n);
    for i in 1..=n {
        let mut trace = Polynomial::zero(vars);
        for c in 1..=n {
            trace = &trace + m.constant(i, c, c);
        }
        let g = &Polynomial::y(vars, i) - &trace.scale(&inv_n);
        if !radical_contains(&g, &j, config)? {
            return Err(FError::NotLocal { index: i });
        }
        gens.push(g);
    }
    let candidate = IdealPresentation::new(gens, MonomialOrder::Block)?;
    if !ideal_subset(&j, &candidate, config)? {
        return Err(FError::NotLocal { index: 0 });
    }
    Ok(candidate)
}

/// Whether `stated` is the radical of the ideal behind `m`: equal, as
/// ideals, to [`spectral_radical`].
pub fn radical_matches(m: &FMultiplication, stated: &IdealPresentation, config: &GroebnerConfig) -> Result<bool, FError> {
    let computed = spectral_radical(m, config)?;
    Ok(crate::groebner::ideal_equals(&computed, &stated.with_order(MonomialOrder::Block), config)?)
}
