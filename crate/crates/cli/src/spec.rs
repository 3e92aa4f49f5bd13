//! The manifold-spec JSON format and its translation into library types.

use std::collections::BTreeMap;
use std::str::FromStr;

use fmcheck_core::fstructure::{FMultiplication, VectorField};
use fmcheck_core::groebner::{IdealPresentation, MonomialOrder};
use fmcheck_core::point_algebra::{GradingData, Parity, PointAlgebra, SuperFrobeniusAlgebra};
use fmcheck_core::poly::parse_with;
use fmcheck_core::{parse_poly, Polynomial, Rational, VariableSet};
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    StructureConstants,
    Ideal,
}

/// A basis index (1-based) or a field written in `e1..en`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum IdentitySpec {
    Index(usize),
    Expr(String),
}

/// An integer, or a string such as `"-2/3"`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RationalSpec {
    Int(i64),
    Str(String),
}

impl RationalSpec {
    pub fn value(&self) -> Result<Rational, CliError> {
        match self {
            RationalSpec::Int(k) => Ok(Rational::from_integer((*k).into())),
            RationalSpec::Str(s) => {
                let t = s.trim();
                let r = Rational::from_str(t);
                r.map_err(|_| CliError::Spec(format!("invalid rational '{s}'")))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GradingSpec {
    /// `[p, q]` per basis element.
    pub bidegrees: Vec<[u32; 2]>,
    /// Anticanonical coefficients, one per basis element; zero when omitted.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<Vec<RationalSpec>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraSpec {
    pub dim: usize,
    /// `"even"` or `"odd"` per basis element; all even when omitted.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub parity: Option<Vec<String>>,
    /// `"(a,b)"` to `b_a ∘ b_b` written in `e1..ed`; missing pairs are 0.
    pub table: BTreeMap<String, String>,
    pub unit: IdentitySpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pairing: Option<Vec<Vec<RationalSpec>>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ManifoldSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mode: Option<Mode>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub structure_constants: Option<BTreeMap<String, String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub identity: Option<IdentitySpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ideal: Option<Vec<String>>,
    /// Expected radical of the ideal, checked when present.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub radical: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gradings: Option<GradingSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub algebra: Option<AlgebraSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sample_points: Option<Vec<Vec<RationalSpec>>>,
    #[serde(default)]
    pub seed: u64,
}

/// The manifold part of a spec after parsing.
pub enum Manifold {
    Constants(FMultiplication),
    Ideal { gens: IdealPresentation },
}

pub struct Loaded {
    pub vars: VariableSet,
    pub manifold: Manifold,
    pub radical: Option<IdealPresentation>,
    pub sample_points: Option<Vec<Vec<Rational>>>,
}

impl ManifoldSpec {
    pub fn from_json(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Spec(format!("invalid spec: {e}")))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("spec serializes") + "\n"
    }

    /// Parses the manifold part; `None` when the spec has no `mode`.
    pub fn load_manifold(&self) -> Result<Option<Loaded>, CliError> {
        let Some(mode) = self.mode else {
            return Ok(None);
        };
        let n = self.n.filter(|&n| n > 0).ok_or_else(|| CliError::Spec("'n' must be a positive integer".into()))?;
        let vars = VariableSet::new(n);
        let manifold = match mode {
            Mode::StructureConstants => {
                if self.ideal.is_some() {
                    return Err(CliError::Spec("mode 'structure_constants' does not take 'ideal'".into()));
                }
                let sc = self.structure_constants.as_ref().ok_or_else(|| CliError::Spec("missing 'structure_constants'".into()))?;
                let identity = self.identity.as_ref().ok_or_else(|| CliError::Spec("missing 'identity'".into()))?;
                let table = field_table(sc, vars)?;
                let e = identity_field(identity, vars)?;
                Manifold::Constants(FMultiplication::new_unvalidated(vars, table, e))
            }
            Mode::Ideal => {
                if self.structure_constants.is_some() || self.identity.is_some() {
                    return Err(CliError::Spec("mode 'ideal' does not take 'structure_constants' or 'identity'".into()));
                }
                let gens = self.ideal.as_ref().ok_or_else(|| CliError::Spec("missing 'ideal'".into()))?;
                Manifold::Ideal { gens: presentation(gens, vars)? }
            }
        };
        let radical = self.radical.as_ref().map(|r| presentation(r, vars)).transpose()?;
        let sample_points = match &self.sample_points {
            None => None,
            Some(points) => Some(
                points
                    .iter()
                    .map(|p| {
                        if p.len() != n {
                            return Err(CliError::Spec(format!("sample point has {} coordinates, expected {n}", p.len())));
                        }
                        p.iter().map(RationalSpec::value).collect()
                    })
                    .collect::<Result<_, _>>()?,
            ),
        };
        Ok(Some(Loaded { vars, manifold, radical, sample_points }))
    }

    pub fn load_gradings(&self) -> Result<Option<GradingData>, CliError> {
        let Some(g) = &self.gradings else {
            return Ok(None);
        };
        if g.bidegrees.is_empty() {
            return Err(CliError::Spec("empty grading list".into()));
        }
        let bidegrees: Vec<(u32, u32)> = g.bidegrees.iter().map(|[p, q]| (*p, *q)).collect();
        let r = match &g.r {
            Some(r) => r.iter().map(RationalSpec::value).collect::<Result<Vec<_>, _>>()?,
            None => vec![Rational::from_integer(0.into()); bidegrees.len()],
        };
        GradingData::new(bidegrees, r).map(Some).map_err(|e| CliError::Spec(e.to_string()))
    }
}

/// Parses `e`-expressions over `vars`: `e_i` stands for `∂_i`, `t_i` for base
/// coordinates.
fn field(src: &str, vars: VariableSet) -> Result<VectorField, CliError> {
    let resolve = |name: &str| -> Option<usize> {
        if let Some(rest) = name.strip_prefix('e') {
            let i: usize = rest.parse().ok()?;
            (1..=vars.n()).contains(&i).then(|| vars.y(i))
        } else if name.starts_with('t') {
            vars.lookup(name)
        } else {
            None
        }
    };
    let p = parse_with(src, vars, resolve).map_err(|e| CliError::Spec(format!("cannot parse '{src}': {e}")))?;
    VectorField::from_symbol(&p).map_err(|e| CliError::Spec(format!("'{src}': {e}")))
}

fn identity_field(spec: &IdentitySpec, vars: VariableSet) -> Result<VectorField, CliError> {
    match spec {
        IdentitySpec::Index(i) if (1..=vars.n()).contains(i) => Ok(VectorField::basis(vars, *i)),
        IdentitySpec::Index(i) => Err(CliError::Spec(format!("identity index {i} out of range"))),
        IdentitySpec::Expr(s) => field(s, vars),
    }
}

/// `"(a,b)"` to 0-based `(a, b)`.
fn pair_key(key: &str, n: usize) -> Result<(usize, usize), CliError> {
    let bad = || CliError::Spec(format!("invalid pair key '{key}', expected \"(a,b)\" with 1 <= a, b <= {n}"));
    let inner = key.trim().strip_prefix('(').and_then(|k| k.strip_suffix(')')).ok_or_else(bad)?;
    let (a, b) = inner.split_once(',').ok_or_else(bad)?;
    let a: usize = a.trim().parse().map_err(|_| bad())?;
    let b: usize = b.trim().parse().map_err(|_| bad())?;
    if !(1..=n).contains(&a) || !(1..=n).contains(&b) {
        return Err(bad());
    }
    Ok((a - 1, b - 1))
}

/// Fills a symmetric table from the listed pairs. A pair listed in both
/// orders keeps both entries so that the axiom check can compare them.
fn field_table(entries: &BTreeMap<String, String>, vars: VariableSet) -> Result<Vec<Vec<VectorField>>, CliError> {
    let n = vars.n();
    let mut table: Vec<Vec<Option<VectorField>>> = vec![vec![None; n]; n];
    for (key, src) in entries {
        let (a, b) = pair_key(key, n)?;
        table[a][b] = Some(field(src, vars)?);
    }
    let mut out = vec![vec![VectorField::zero(vars); n]; n];
    for a in 0..n {
        for b in 0..n {
            out[a][b] = table[a][b].clone().or_else(|| table[b][a].clone()).unwrap_or_else(|| VectorField::zero(vars));
        }
    }
    Ok(out)
}

fn presentation(src: &[String], vars: VariableSet) -> Result<IdealPresentation, CliError> {
    let gens = src
        .iter()
        .map(|s| parse_poly(s, vars).map_err(|e| CliError::Spec(format!("cannot parse '{s}': {e}"))))
        .collect::<Result<Vec<Polynomial>, _>>()?;
    IdealPresentation::new(gens, MonomialOrder::Block).map_err(|e| CliError::Spec(e.to_string()))
}

/// A finite-dimensional algebra from the spec, with or without a pairing.
pub enum AlgebraInput {
    Plain(PointAlgebra),
    Super(SuperFrobeniusAlgebra),
}

fn coordinates(src: &str, d: usize) -> Result<Vec<Rational>, CliError> {
    let vars = VariableSet::new(d);
    let f = field(src, vars)?;
    f.coeffs()
        .iter()
        .map(|c| c.as_constant().ok_or_else(|| CliError::Spec(format!("'{src}' must have constant coefficients"))))
        .collect()
}

impl AlgebraSpec {
    /// Builds the algebra; axiom violations are reported as `Err(Ok(message))`
    /// so that callers can treat them as failed checks rather than bad input.
    pub fn load(&self) -> Result<Result<AlgebraInput, String>, CliError> {
        let d = self.dim;
        if d == 0 {
            return Err(CliError::Spec("algebra 'dim' must be positive".into()));
        }
        let mut table = vec![vec![vec![Rational::from_integer(0.into()); d]; d]; d];
        let mut given = vec![vec![false; d]; d];
        for (key, src) in &self.table {
            let (a, b) = pair_key(key, d)?;
            table[a][b] = coordinates(src, d)?;
            given[a][b] = true;
        }
        let parity: Vec<Parity> = match &self.parity {
            None => vec![Parity::Even; d],
            Some(p) if p.len() == d => p
                .iter()
                .map(|s| match s.as_str() {
                    "even" => Ok(Parity::Even),
                    "odd" => Ok(Parity::Odd),
                    other => Err(CliError::Spec(format!("unknown parity '{other}'"))),
                })
                .collect::<Result<_, _>>()?,
            Some(p) => return Err(CliError::Spec(format!("{} parities for dimension {d}", p.len()))),
        };
        // Fill unlisted mirrored entries using the Koszul sign.
        for a in 0..d {
            for b in 0..d {
                if !given[a][b] && given[b][a] {
                    let odd = parity[a] == Parity::Odd && parity[b] == Parity::Odd;
                    table[a][b] = table[b][a].iter().map(|x| if odd { -x.clone() } else { x.clone() }).collect();
                }
            }
        }
        let unit = match &self.unit {
            IdentitySpec::Index(i) if (1..=d).contains(i) => {
                let mut v = vec![Rational::from_integer(0.into()); d];
                v[i - 1] = Rational::from_integer(1.into());
                v
            }
            IdentitySpec::Index(i) => return Err(CliError::Spec(format!("unit index {i} out of range"))),
            IdentitySpec::Expr(s) => coordinates(s, d)?,
        };
        let is_super = self.pairing.is_some() || parity.contains(&Parity::Odd);
        if !is_super {
            return Ok(PointAlgebra::new(table, unit).map(AlgebraInput::Plain).map_err(|e| e.to_string()));
        }
        let pairing_spec = self.pairing.as_ref().ok_or_else(|| CliError::Spec("an algebra with odd elements needs a 'pairing'".into()))?;
        let pairing = pairing_spec
            .iter()
            .map(|row| row.iter().map(RationalSpec::value).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        Ok(SuperFrobeniusAlgebra::new(parity, table, pairing, unit).map(AlgebraInput::Super).map_err(|e| e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pair_keys() {
        assert_eq!(pair_key("(1,2)", 3).unwrap(), (0, 1));
        assert_eq!(pair_key(" ( 3 , 3 ) ", 3).unwrap(), (2, 2));
        assert!(pair_key("(0,1)", 3).is_err());
        assert!(pair_key("1,2", 3).is_err());
    }

    #[test]
    fn rationals() {
        assert_eq!(RationalSpec::Str("-2/4".into()).value().unwrap(), fmcheck_core::rat(-1, 2));
        assert_eq!(RationalSpec::Int(3).value().unwrap(), fmcheck_core::rat(3, 1));
        assert!(RationalSpec::Str("x".into()).value().is_err());
    }

    #[test]
    fn fields_use_e_names() {
        let vars = VariableSet::new(3);
        let f = field("2*t3*e2 - t3^2*e1", vars).unwrap();
        assert_eq!(f.to_string(), "-t3^2*e1 + 2*t3*e2");
        assert!(field("y1", vars).is_err());
        assert!(field("e1*e2", vars).is_err());
    }
}
