//! Two explicit families of spectral cover ideals whose radicals are not
//! Poisson stable, even though the ideals themselves are.

use num_traits::Signed;

use super::FError;
use crate::groebner::{IdealPresentation, MonomialOrder};
use crate::poly::{Polynomial, VariableSet};

/// An example ideal with its expected radical and the source text of both,
/// written in factored form.
#[derive(Debug, Clone)]
pub struct ExampleFamily {
    n: usize,
    ideal: IdealPresentation,
    stated_radical: IdealPresentation,
    sources: Vec<String>,
    radical_sources: Vec<String>,
}

impl ExampleFamily {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ideal(&self) -> &IdealPresentation {
        &self.ideal
    }

    /// The radical as stated for the family, for cross-validation.
    pub fn stated_radical(&self) -> &IdealPresentation {
        &self.stated_radical
    }

    /// Generators of the ideal as parseable text, in factored form.
    pub fn sources(&self) -> &[String] {
        &self.sources
    }

    pub fn radical_sources(&self) -> &[String] {
        &self.radical_sources
    }
}

/// `y_i - ρ` as text; bare `y_i` when `ρ = 0`.
fn shifted(i: usize, rho: &Polynomial) -> String {
    if rho.is_zero() {
        return format!("y{i}");
    }
    let single_positive = rho.num_terms() == 1 && rho.terms().all(|(_, c)| c.is_positive());
    if single_positive {
        format!("y{i} - {rho}")
    } else {
        format!("y{i} - ({rho})")
    }
}

fn factor(s: &str) -> String {
    if s.contains(' ') {
        format!("({s})")
    } else {
        s.to_string()
    }
}

fn build(
    n: usize,
    vars: VariableSet,
    sources: Vec<String>,
    radical_sources: Vec<String>,
) -> Result<ExampleFamily, FError> {
    let parse = |v: &[String]| -> Result<IdealPresentation, FError> {
        let gens = v.iter().map(|s| crate::poly::parse_poly(s, vars)).collect::<Result<Vec<_>, _>>()?;
        Ok(IdealPresentation::new(gens, MonomialOrder::Block)?)
    };
    Ok(ExampleFamily { n, ideal: parse(&sources)?, stated_radical: parse(&radical_sources)?, sources, radical_sources })
}

/// `J = (y_1 − 1, (y_i − ρ_i)(y_j − ρ_j))` for all `2 ≤ i ≤ j ≤ n`.
///
/// `rho` has length `n`, `ρ_1 = 1`, and the remaining entries are functions
/// of `t_2, …, t_n` only. The stated radical is `(y_1 − 1, y_i − ρ_i)`.
pub fn family1(n: usize, rho: &[Polynomial]) -> Result<ExampleFamily, FError> {
    if n == 0 {
        return Err(FError::FamilyDimension { n, min: 1 });
    }
    if rho.len() != n {
        return Err(FError::InvalidRho(format!("expected {n} entries, got {}", rho.len())));
    }
    let vars = VariableSet::new(n);
    if rho.iter().any(|r| r.vars() != vars) {
        return Err(FError::VariableSetMismatch);
    }
    if !rho[0].is_one() {
        return Err(FError::InvalidRho(format!("rho1 must be 1, got {}", rho[0])));
    }
    for (k, r) in rho.iter().enumerate().skip(1) {
        if !r.is_base_only() {
            return Err(FError::InvalidRho(format!("rho{} = {r} involves fiber or auxiliary variables", k + 1)));
        }
        if r.depends_on(vars.t(1)) {
            return Err(FError::InvalidRho(format!("rho{} = {r} depends on t1", k + 1)));
        }
    }
    let mut sources = vec!["y1 - 1".to_string()];
    for i in 2..=n {
        for j in i..=n {
            let (a, b) = (shifted(i, &rho[i - 1]), shifted(j, &rho[j - 1]));
            sources.push(if i == j { format!("{}^2", factor(&a)) } else { format!("{}*{}", factor(&a), factor(&b)) });
        }
    }
    let radical: Vec<String> = std::iter::once("y1 - 1".to_string())
        .chain((2..=n).map(|i| shifted(i, &rho[i - 1])))
        .collect();
    build(n, vars, sources, radical)
}

/// `ρ_2 = t_3·y_1 + Σ_{k=3}^{n−1} (k−1)·t_{k+1}·y_k`.
pub fn family2_rho(n: usize) -> Polynomial {
    let vars = VariableSet::new(n);
    let mut rho = &Polynomial::t(vars, 3) * &Polynomial::y(vars, 1);
    for k in 3..n {
        let term = &Polynomial::t(vars, k + 1) * &Polynomial::y(vars, k);
        rho = &rho + &term.scale(&crate::poly::rat(k as i64 - 1, 1));
    }
    rho
}

/// `J = (y_1 − 1, (y_2 − ρ_2)², (y_2 − ρ_2)·y_3, y_3^{n−1}, y_4 − y_3², …, y_n − y_3^{n−2})`
/// for `n ≥ 3`, with stated radical `(y_1 − 1, y_2 − t_3·y_1, y_3, …, y_n)`.
pub fn family2(n: usize) -> Result<ExampleFamily, FError> {
    if n < 3 {
        return Err(FError::FamilyDimension { n, min: 3 });
    }
    let vars = VariableSet::new(n);
    let shift = factor(&shifted(2, &family2_rho(n)));
    let mut sources = vec![
        "y1 - 1".to_string(),
        format!("{shift}^2"),
        format!("{shift}*y3"),
        format!("y3^{}", n - 1),
    ];
    sources.extend((4..=n).map(|k| if k == 4 { "y4 - y3^2".to_string() } else { format!("y{k} - y3^{}", k - 2) }));
    let mut radical = vec!["y1 - 1".to_string(), "y2 - t3*y1".to_string()];
    radical.extend((3..=n).map(|k| format!("y{k}")));
    build(n, vars, sources, radical)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::{radical_contains, GroebnerConfig};
    use crate::poly::parse_poly;

    #[test]
    fn family1_generators() {
        let vars = VariableSet::new(3);
        let rho = vec![Polynomial::one(vars), Polynomial::t(vars, 3), Polynomial::zero(vars)];
        let fam = family1(3, &rho).unwrap();
        assert_eq!(fam.sources(), ["y1 - 1", "(y2 - t3)^2", "(y2 - t3)*y3", "y3^2"]);
        assert_eq!(fam.ideal().generators().len(), 4);
        assert_eq!(fam.radical_sources(), ["y1 - 1", "y2 - t3", "y3"]);
        let cfg = GroebnerConfig::default();
        for g in fam.stated_radical().generators().iter().skip(1) {
            assert!(radical_contains(g, fam.ideal(), &cfg).unwrap());
        }
    }

    #[test]
    fn family1_rejects_bad_rho() {
        let vars = VariableSet::new(3);
        let p = |s: &str| parse_poly(s, vars).unwrap();
        assert!(family1(3, &[p("2"), p("t3"), p("0")]).is_err());
        assert!(family1(3, &[p("1"), p("t1 + t3"), p("0")]).is_err());
        assert!(family1(3, &[p("1"), p("y3"), p("0")]).is_err());
        assert!(family1(3, &[p("1"), p("t3")]).is_err());
    }

    #[test]
    fn family2_generators() {
        let f3 = family2(3).unwrap();
        assert_eq!(f3.sources(), ["y1 - 1", "(y2 - t3*y1)^2", "(y2 - t3*y1)*y3", "y3^2"]);
        let f4 = family2(4).unwrap();
        assert_eq!(f4.ideal().generators().len(), 5);
        assert_eq!(f4.sources()[4], "y4 - y3^2");
        let vars = VariableSet::new(4);
        assert_eq!(family2_rho(4), parse_poly("t3*y1 + 2*t4*y3", vars).unwrap());
        assert!(matches!(family2(2), Err(FError::FamilyDimension { n: 2, min: 3 })));
    }
}
