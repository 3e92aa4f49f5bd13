use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{Monomial, PolyError, Rational, VariableSet};

/// Exact multivariate polynomial over the rationals in the variables of a
/// [`VariableSet`].
///
/// Zero coefficients are never stored, so structural equality is equality
/// of polynomials.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    vars: VariableSet,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(vars: VariableSet) -> Self {
        Polynomial { vars, terms: BTreeMap::new() }
    }

    pub fn one(vars: VariableSet) -> Self {
        Self::constant(vars, Rational::one())
    }

    pub fn constant(vars: VariableSet, c: Rational) -> Self {
        Self::monomial(vars, Monomial::one(vars.len()), c)
    }

    pub fn from_int(vars: VariableSet, c: i64) -> Self {
        Self::constant(vars, Rational::from_integer(BigInt::from(c)))
    }

    pub fn monomial(vars: VariableSet, m: Monomial, c: Rational) -> Self {
        debug_assert_eq!(m.len(), vars.len());
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { vars, terms }
    }

    pub fn var(vars: VariableSet, idx: usize) -> Self {
        Self::monomial(vars, Monomial::var(vars.len(), idx), Rational::one())
    }

    /// `t_i`, 1-based.
    pub fn t(vars: VariableSet, i: usize) -> Self {
        Self::var(vars, vars.t(i))
    }

    /// `y_i`, 1-based.
    pub fn y(vars: VariableSet, i: usize) -> Self {
        Self::var(vars, vars.y(i))
    }

    pub fn z(vars: VariableSet) -> Self {
        Self::var(vars, vars.z())
    }

    /// Builds a polynomial from arbitrary terms, merging duplicates.
    pub fn from_terms(vars: VariableSet, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = Polynomial::zero(vars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn vars(&self) -> VariableSet {
        self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.iter().all(|(m, c)| m.is_one() && c.is_one())
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    /// The constant value, if the polynomial is constant.
    pub fn as_constant(&self) -> Option<Rational> {
        if !self.is_constant() {
            return None;
        }
        Some(self.terms.values().next().cloned().unwrap_or_else(Rational::zero))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending canonical order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl DoubleEndedIterator<Item = (Monomial, Rational)> {
        self.terms.into_iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_vars(&self, other: &Polynomial) -> Result<(), PolyError> {
        if self.vars != other.vars {
            return Err(PolyError::VariableSetMismatch { left: self.vars.n(), right: other.vars.n() });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_vars(other)?;
        let mut out = Polynomial::zero(self.vars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.vars);
        }
        Polynomial {
            vars: self.vars,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.vars);
        }
        Polynomial {
            vars: self.vars,
            terms: self.terms.iter().map(|(k, a)| (k.mul(m), a * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut acc = Polynomial::one(self.vars);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Formal partial derivative with respect to variable index `idx`.
    pub fn partial_derivative(&self, idx: usize) -> Result<Polynomial, PolyError> {
        if idx >= self.vars.len() {
            return Err(PolyError::IndexOutOfRange { index: idx, len: self.vars.len() });
        }
        let mut out = Polynomial::zero(self.vars);
        for (m, c) in &self.terms {
            if let Some((e, dm)) = m.derive(idx) {
                out.add_term(dm, c * Rational::from_integer(BigInt::from(e)));
            }
        }
        Ok(out)
    }

    /// `∂/∂t_i`, 1-based. Panics if `i` is out of range.
    pub fn d_t(&self, i: usize) -> Polynomial {
        self.partial_derivative(self.vars.t(i)).expect("base index in range")
    }

    /// `∂/∂y_i`, 1-based. Panics if `i` is out of range.
    pub fn d_y(&self, i: usize) -> Polynomial {
        self.partial_derivative(self.vars.y(i)).expect("fiber index in range")
    }

    /// Substitutes `t_i ↦ t0[i-1]`, leaving fiber variables and `z` symbolic.
    pub fn evaluate_base(&self, t0: &[Rational]) -> Result<Polynomial, PolyError> {
        let n = self.vars.n();
        if t0.len() != n {
            return Err(PolyError::PointLength { expected: n, got: t0.len() });
        }
        let mut out = Polynomial::zero(self.vars);
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut rest = m.clone();
            for (i, value) in t0.iter().enumerate() {
                let idx = self.vars.t(i + 1);
                let e = m.exponent(idx);
                if e > 0 {
                    coeff *= num_traits::pow(value.clone(), e as usize);
                    rest = rest.with_exponent(idx, 0);
                }
            }
            out.add_term(rest, coeff);
        }
        Ok(out)
    }

    /// Substitutes every variable; `point` is indexed by variable index.
    pub fn evaluate(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.vars.len());
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (idx, e) in m.exponents().iter().enumerate() {
                if *e > 0 {
                    v *= num_traits::pow(point[idx].clone(), *e as usize);
                }
            }
            acc += v;
        }
        acc
    }

    /// Maximum total exponent over the fiber variables; `None` for zero.
    pub fn y_degree(&self) -> Option<u32> {
        let n = self.vars.n();
        self.terms.keys().map(|m| m.partial_degree(0..n)).max()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn depends_on(&self, idx: usize) -> bool {
        self.terms.keys().any(|m| m.exponent(idx) > 0)
    }

    pub fn contains_z(&self) -> bool {
        self.depends_on(self.vars.z())
    }

    /// True if only base variables `t_i` occur.
    pub fn is_base_only(&self) -> bool {
        let n = self.vars.n();
        self.terms.keys().all(|m| m.partial_degree(0..n) == 0 && m.exponent(2 * n) == 0)
    }

    /// Coefficient of `y_i` in a polynomial that is at most linear in `y`,
    /// as a polynomial in the remaining variables. Index 0 is the `y`-free part.
    pub fn linear_y_parts(&self) -> Option<Vec<Polynomial>> {
        let n = self.vars.n();
        let mut parts = vec![Polynomial::zero(self.vars); n + 1];
        for (m, c) in &self.terms {
            match m.partial_degree(0..n) {
                0 => parts[0].add_term(m.clone(), c.clone()),
                1 => {
                    let i = (0..n).find(|&i| m.exponent(i) == 1).expect("degree one");
                    parts[i + 1].add_term(m.with_exponent(i, 0), c.clone());
                }
                _ => return None,
            }
        }
        Some(parts)
    }

    /// Multiplies every coefficient by the lcm of denominators and divides by
    /// the content, leaving a primitive integer polynomial with positive
    /// leading coefficient.
    pub fn primitive_part(&self) -> Polynomial {
        use num_integer::Integer;
        if self.is_zero() {
            return self.clone();
        }
        let mut lcm = BigInt::one();
        for c in self.terms.values() {
            lcm = lcm.lcm(c.denom());
        }
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            let v = c.numer() * (&lcm / c.denom());
            g = g.gcd(&v);
        }
        let lead_negative = self.terms.values().next_back().is_some_and(|c| c.is_negative());
        let mut factor = Rational::new(lcm, g);
        if lead_negative {
            factor = -factor;
        }
        self.scale(&factor)
    }
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &'a Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("polynomials over different variable sets")
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &'a Polynomial) -> Polynomial {
        self.checked_sub(rhs).expect("polynomials over different variable sets")
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &'a Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("polynomials over different variable sets")
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            vars: self.vars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

fn write_rational(f: &mut fmt::Formatter<'_>, c: &Rational) -> fmt::Result {
    if c.is_integer() {
        write!(f, "{}", c.numer())
    } else {
        write!(f, "{}/{}", c.numer(), c.denom())
    }
}

/// Canonical text: terms in descending degrevlex order, reduced fractions,
/// explicit `*` and `^`, factors written `t.. y.. z`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            match (k, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            let mut first = true;
            if !abs.is_one() || m.is_one() {
                write_rational(f, &abs)?;
                first = false;
            }
            for idx in self.vars.print_order() {
                let e = m.exponent(idx);
                if e == 0 {
                    continue;
                }
                if !first {
                    f.write_str("*")?;
                }
                first = false;
                f.write_str(&self.vars.name(idx))?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}
