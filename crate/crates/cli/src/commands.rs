//! Subcommand implementations. Each builds a [`Report`]; hard errors are
//! returned as [`CliError`].

use fmcheck_core::fstructure::{
    family1, family2, is_f_manifold, multiplication_from_ideal, radical_matches, sample_points,
    spectral_cover_ideal, spectral_cover_rank_check, spectral_radical, DefectLocation, FError, FMultiplication,
    RankFailureKind, Route,
};
use fmcheck_core::groebner::{ideal_equals, GroebnerConfig, GroebnerError, IdealPresentation};
use fmcheck_core::point_algebra::{
    euler_fields, fiber_algebra, fiber_algebra_from_ideal, frobenius_invariance_check, is_semisimple,
    nilpotency_profile, nilradical, odd_nilpotent_witness, orthogonal_idempotents, EulerField,
    Parity, PointAlgebra, PointError, SplittingSearch, SuperFrobeniusAlgebra,
};
use fmcheck_core::poisson::{ideal_poisson_stable, PoissonError, Stability, StabilityReport};
use fmcheck_core::{linalg, parse_poly, Polynomial, Rational, VariableSet};

use crate::report::{Report, Status};
use crate::spec::{AlgebraInput, Loaded, Manifold, ManifoldSpec, Mode};
use crate::CliError;

pub struct Options {
    pub route: Route,
    pub samples: usize,
    pub seed: Option<u64>,
    pub budget: usize,
    pub timings: bool,
}

impl Options {
    fn config(&self) -> GroebnerConfig {
        GroebnerConfig { max_pairs: self.budget }
    }
}

fn groebner_budget(e: &GroebnerError) -> Option<usize> {
    match e {
        GroebnerError::BudgetExceeded { pairs } => Some(*pairs),
        _ => None,
    }
}

fn poisson_budget(e: &PoissonError) -> Option<usize> {
    match e {
        PoissonError::Groebner(g) => groebner_budget(g),
        _ => None,
    }
}

fn f_budget(e: &FError) -> Option<usize> {
    match e {
        FError::Groebner(g) => groebner_budget(g),
        FError::Poisson(p) => poisson_budget(p),
        _ => None,
    }
}

/// Budget exhaustion aborts the command; anything else becomes a message
/// for a failed check.
fn soft_f(e: FError) -> Result<String, CliError> {
    match f_budget(&e) {
        Some(pairs) => Err(CliError::Budget(pairs)),
        None => Ok(e.to_string()),
    }
}

fn soft_point(e: PointError) -> Result<String, CliError> {
    match e {
        PointError::Structure(f) => soft_f(f),
        other => Ok(other.to_string()),
    }
}

fn hard_poisson(e: PoissonError) -> CliError {
    match poisson_budget(&e) {
        Some(pairs) => CliError::Budget(pairs),
        None => CliError::Internal(e.to_string()),
    }
}

fn hard_groebner(e: GroebnerError) -> CliError {
    match groebner_budget(&e) {
        Some(pairs) => CliError::Budget(pairs),
        None => CliError::Internal(e.to_string()),
    }
}

pub fn point_text(p: &[Rational]) -> String {
    let parts: Vec<String> = p.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(", "))
}

/// `Σ c_k b_k` written with `prefix1..prefixd` for the basis.
fn element_text(v: &[Rational], prefix: &str) -> String {
    let vars = VariableSet::new(v.len());
    let mut p = Polynomial::zero(vars);
    for (k, c) in v.iter().enumerate() {
        p = &p + &Polynomial::y(vars, k + 1).scale(c);
    }
    p.to_string().replace('y', prefix)
}

fn sample_set(loaded: &Loaded, spec: &ManifoldSpec, opts: &Options) -> Vec<Vec<Rational>> {
    loaded
        .sample_points
        .clone()
        .unwrap_or_else(|| sample_points(loaded.vars.n(), opts.samples, opts.seed.unwrap_or(spec.seed)))
}

fn stability_detail(report: &mut Report, name: &str, what: &str, result: &StabilityReport, pass_when_stable: bool) {
    report.groebner.add(&result.stats);
    match &result.verdict {
        Stability::Stable => {
            let status = if pass_when_stable { Status::Pass } else { Status::Info };
            report.push(name, status, format!("{what} is Poisson stable"));
        }
        Stability::Unstable(w) => {
            let status = if pass_when_stable { Status::Fail } else { Status::Info };
            report
                .push(name, status, format!("{what} NOT Poisson stable, witness {{{}, {}}} = {}", w.left, w.right, w.bracket))
                .with("generators", format!("{}, {}", w.i + 1, w.j + 1))
                .with("remainder", w.remainder.to_string());
        }
    }
}

/// Reads the multiplication of a manifold spec, recording the checks that
/// lead to it. `None` when a check failed and nothing further can run.
fn obtain_multiplication(
    report: &mut Report,
    loaded: &Loaded,
    points: &[Vec<Rational>],
    opts: &Options,
) -> Result<Option<FMultiplication>, CliError> {
    let cfg = opts.config();
    let n = loaded.vars.n();
    match &loaded.manifold {
        Manifold::Constants(m) => match m.clone().validated() {
            Ok(m) => {
                report.push("axioms", Status::Pass, format!("commutative, associative, unit {}", m.identity()));
                Ok(Some(m))
            }
            Err(e) => {
                report.push("axioms", Status::Fail, soft_f(e)?);
                Ok(None)
            }
        },
        Manifold::Ideal { gens } => {
            if !rank_check(report, gens, n, points, &cfg)? {
                return Ok(None);
            }
            let m = match multiplication_from_ideal(gens, n, &cfg) {
                Ok(m) => m,
                Err(e) => {
                    report.push("reconstruction", Status::Fail, soft_f(e)?);
                    return Ok(None);
                }
            };
            report.push("reconstruction", Status::Pass, "structure constants read from normal forms, identity e1");
            let equal = ideal_equals(&spectral_cover_ideal(&m), gens, &cfg).map_err(hard_groebner)?;
            let status = if equal { Status::Pass } else { Status::Fail };
            let detail = if equal {
                "ideal equals the spectral cover ideal of the multiplication"
            } else {
                "ideal differs from the spectral cover ideal of the multiplication"
            };
            report.push("spectral cover", status, detail);
            Ok(Some(m))
        }
    }
}

fn rank_check(
    report: &mut Report,
    gens: &IdealPresentation,
    n: usize,
    points: &[Vec<Rational>],
    cfg: &GroebnerConfig,
) -> Result<bool, CliError> {
    let rank = match spectral_cover_rank_check(gens, n, points, cfg) {
        Ok(r) => r,
        Err(e) => {
            report.push("rank", Status::Fail, soft_f(e)?);
            return Ok(false);
        }
    };
    match &rank.failure {
        None => {
            report.push("rank", Status::Pass, format!("fiber dimension {n} at {} sample points", points.len()));
            Ok(true)
        }
        Some(f) => {
            let what = match &f.kind {
                RankFailureKind::Dimension { found: Some(d) } => format!("fiber dimension {d} != {n}"),
                RankFailureKind::Dimension { found: None } => "fiber is infinite dimensional".to_string(),
                RankFailureKind::UnitNotFirstCoordinate => "y1 is not 1 in the fiber".to_string(),
                RankFailureKind::NotAFiberBasis => "y1..yn are not a basis of the fiber".to_string(),
            };
            report.push("rank", Status::Fail, what).with("point", point_text(&f.point));
            Ok(false)
        }
    }
}

fn f_manifold_checks(report: &mut Report, m: &FMultiplication, opts: &Options) -> Result<(), CliError> {
    let verdict = match is_f_manifold(m, opts.route, &opts.config()) {
        Ok(v) => v,
        Err(FError::RouteDisagreement { identity, spectral }) => {
            return Err(CliError::Internal(format!("routes disagree: identity {identity}, spectral {spectral}")));
        }
        Err(e) => {
            report.push("f-manifold", Status::Fail, soft_f(e)?);
            return Ok(());
        }
    };
    if let Some(id) = &verdict.identity {
        let n = m.dim();
        let pairs = n * (n + 1) / 2;
        match &id.witness {
            None => {
                report.push(
                    "f-manifold (identity)",
                    Status::Pass,
                    format!("defect vanishes on {} quadruples and {pairs} unit pairs", id.quadruples_checked),
                );
            }
            Some(w) => {
                let at = match w.location {
                    DefectLocation::Quadruple { a, b, c, d } => format!("quadruple (e{a}, e{b}, e{c}, e{d})"),
                    DefectLocation::UnitCompatibility { a, b } => format!("unit compatibility on (e{a}, e{b})"),
                };
                report.push("f-manifold (identity)", Status::Fail, format!("nonzero defect at {at}")).with("defect", w.value.to_string());
            }
        }
    }
    if let Some(s) = &verdict.spectral {
        stability_detail(report, "f-manifold (spectral)", "spectral cover ideal", s, true);
    }
    Ok(())
}

fn radical_checks(report: &mut Report, m: &FMultiplication, stated: Option<&IdealPresentation>, opts: &Options) -> Result<(), CliError> {
    let cfg = opts.config();
    let computed = match spectral_radical(m, &cfg) {
        Ok(r) => r,
        Err(FError::NotLocal { .. }) => {
            let status = if stated.is_some() { Status::Fail } else { Status::Skip };
            report.push("radical", status, "fibers are not single points; radical not computed");
            return Ok(());
        }
        Err(e) => {
            report.push("radical", Status::Fail, soft_f(e)?);
            return Ok(());
        }
    };
    let gens: Vec<String> = computed.generators().iter().map(ToString::to_string).collect();
    report.push("radical", Status::Info, format!("({})", gens.join(", ")));
    let target = match stated {
        Some(s) => {
            let ok = radical_matches(m, s, &cfg).map_err(|e| soft_f(e).err().unwrap_or_else(|| CliError::Internal("radical comparison failed".into())))?;
            let status = if ok { Status::Pass } else { Status::Fail };
            let detail = if ok { "stated radical equals the computed radical" } else { "stated radical differs from the computed radical" };
            report.push("radical matches", status, detail);
            s
        }
        None => &computed,
    };
    let result = ideal_poisson_stable(target, &cfg).map_err(hard_poisson)?;
    stability_detail(report, "radical stability", "radical", &result, false);
    Ok(())
}

fn algebra_summary(a: &PointAlgebra, prefix: &str) -> Result<Result<String, String>, CliError> {
    let nil = match nilradical(a) {
        Ok(n) => n,
        Err(e) => return Ok(Err(soft_point(e)?)),
    };
    let profile = nilpotency_profile(a).map_err(|e| CliError::Internal(e.to_string()))?;
    let semisimple = is_semisimple(a);
    let mut s = format!(
        "dim {}, nilradical {}, powers {:?}, local factors {}, semisimple {}",
        a.dim(),
        nil.len(),
        profile,
        a.dim() - nil.len(),
        if semisimple { "yes" } else { "no" }
    );
    let report = orthogonal_idempotents(a, SplittingSearch::default()).map_err(|e| CliError::Internal(e.to_string()))?;
    match &report.idempotents {
        Some(ids) if ids.len() > 1 => {
            let texts: Vec<String> = ids.iter().map(|e| element_text(e, prefix)).collect();
            s.push_str(&format!(", idempotents [{}]", texts.join("; ")));
        }
        Some(_) => {}
        None => s.push_str(", idempotents not rational"),
    }
    Ok(Ok(s))
}

fn fiber_checks(report: &mut Report, m: Option<&FMultiplication>, loaded: &Loaded, points: &[Vec<Rational>], opts: &Options) -> Result<(), CliError> {
    for t0 in points {
        let name = format!("fiber at {}", point_text(t0));
        let (alg, prefix) = match (m, &loaded.manifold) {
            (Some(m), _) => (fiber_algebra(m, t0), "e"),
            (None, Manifold::Ideal { gens }) => (fiber_algebra_from_ideal(gens, t0, &opts.config()), "b"),
            (None, Manifold::Constants(_)) => return Ok(()),
        };
        match alg {
            Ok(a) => match algebra_summary(&a, prefix)? {
                Ok(s) => {
                    report.push(&name, Status::Info, s);
                }
                Err(e) => {
                    report.push(&name, Status::Fail, e);
                }
            },
            Err(e) => {
                report.push(&name, Status::Fail, soft_point(e)?);
            }
        }
    }
    Ok(())
}

fn super_checks(report: &mut Report, alg: &SuperFrobeniusAlgebra) {
    match frobenius_invariance_check(alg) {
        None => {
            report.push("pairing invariance", Status::Pass, "g(a*b, c) = g(a, b*c) on all basis triples");
        }
        Some((a, b, c)) => {
            report.push("pairing invariance", Status::Fail, format!("fails on (e{}, e{}, e{})", a + 1, b + 1, c + 1));
        }
    }
    for j in (0..alg.dim()).filter(|&j| alg.parity()[j] == Parity::Odd) {
        let name = format!("odd witness e{}", j + 1);
        match odd_nilpotent_witness(alg, &alg.basis(j)) {
            Ok(w) => {
                report
                    .push(&name, Status::Pass, format!("e{}*e{} = 0; N = {} is even with g(N, 1) = 1 and N*N = 0", j + 1, j + 1, element_text(&w.n, "e")))
                    .with("dual", element_text(&w.delta_prime, "e"));
            }
            Err(e) => {
                report.push(&name, Status::Fail, e.to_string());
            }
        }
    }
}

fn algebra_checks(report: &mut Report, spec: &ManifoldSpec) -> Result<(), CliError> {
    let Some(a) = &spec.algebra else {
        return Ok(());
    };
    match a.load()? {
        Err(msg) => {
            report.push("algebra axioms", Status::Fail, msg);
        }
        Ok(AlgebraInput::Plain(alg)) => {
            report.push("algebra axioms", Status::Pass, "commutative, associative, unital");
            let det = linalg::determinant(&fmcheck_core::point_algebra::trace_form(&alg));
            report.push("trace form", Status::Info, format!("determinant {det}"));
            match algebra_summary(&alg, "e")? {
                Ok(s) => report.push("algebra", Status::Info, s),
                Err(e) => report.push("algebra", Status::Fail, e),
            };
        }
        Ok(AlgebraInput::Super(alg)) => {
            report.push("algebra axioms", Status::Pass, "supercommutative, parity additive, unital, pairing nondegenerate");
            super_checks(report, &alg);
        }
    }
    Ok(())
}

fn euler_field_text(e: &EulerField) -> String {
    let d = e.constant.len();
    let vars = VariableSet::new(d);
    let mut p = Polynomial::zero(vars);
    for k in 0..d {
        let mut comp = Polynomial::constant(vars, e.constant[k].clone());
        for j in 0..d {
            comp = &comp + &Polynomial::t(vars, j + 1).scale(&e.linear[k][j]);
        }
        p = &p + &(&comp * &Polynomial::y(vars, k + 1));
    }
    p.to_string().replace('t', "x").replace('y', "e")
}

fn euler_checks(report: &mut Report, spec: &ManifoldSpec) -> Result<bool, CliError> {
    let Some(g) = spec.load_gradings()? else {
        return Ok(false);
    };
    let pair = euler_fields(&g);
    report.push("E1", Status::Info, euler_field_text(&pair.e1));
    report.push("E2", Status::Info, euler_field_text(&pair.e2));
    let status = if pair.commutator.is_zero() { Status::Pass } else { Status::Fail };
    report.push("commutator", status, euler_field_text(&pair.commutator));
    report.push("proportional", Status::Info, pair.proportional.to_string());
    Ok(true)
}

fn load(spec: &ManifoldSpec) -> Result<Loaded, CliError> {
    spec.load_manifold()?.ok_or_else(|| CliError::Spec("spec has no manifold ('mode' is missing)".into()))
}

pub fn check(spec: &ManifoldSpec, opts: &Options) -> Result<Report, CliError> {
    let mut report = Report::new("check", opts.timings);
    if let Some(loaded) = spec.load_manifold()? {
        let points = sample_set(&loaded, spec, opts);
        if let Some(m) = obtain_multiplication(&mut report, &loaded, &points, opts)? {
            if let Manifold::Constants(_) = loaded.manifold {
                if m.identity() == &m.basis(1) {
                    rank_check(&mut report, &spectral_cover_ideal(&m), m.dim(), &points, &opts.config())?;
                } else {
                    report.push("rank", Status::Skip, "identity is not e1");
                }
            }
            f_manifold_checks(&mut report, &m, opts)?;
            radical_checks(&mut report, &m, loaded.radical.as_ref(), opts)?;
            fiber_checks(&mut report, Some(&m), &loaded, &points, opts)?;
        }
    }
    euler_checks(&mut report, spec)?;
    algebra_checks(&mut report, spec)?;
    if report.checks.is_empty() {
        return Err(CliError::Spec("spec contains nothing to check".into()));
    }
    Ok(report)
}

pub fn euler(spec: &ManifoldSpec, opts: &Options) -> Result<Report, CliError> {
    let mut report = Report::new("euler", opts.timings);
    if !euler_checks(&mut report, spec)? {
        return Err(CliError::Spec("spec has no 'gradings' block".into()));
    }
    Ok(report)
}

pub fn fiber(spec: &ManifoldSpec, opts: &Options) -> Result<Report, CliError> {
    let mut report = Report::new("fiber", opts.timings);
    if let Some(loaded) = spec.load_manifold()? {
        let points = sample_set(&loaded, spec, opts);
        let m = match &loaded.manifold {
            Manifold::Constants(m) => m.clone().validated().map_err(|e| CliError::Spec(e.to_string()))?,
            Manifold::Ideal { gens } => match multiplication_from_ideal(gens, loaded.vars.n(), &opts.config()) {
                Ok(m) => m,
                Err(e) => {
                    soft_f(e)?;
                    fiber_checks(&mut report, None, &loaded, &points, opts)?;
                    return Ok(report);
                }
            },
        };
        fiber_checks(&mut report, Some(&m), &loaded, &points, opts)?;
    }
    algebra_checks(&mut report, spec)?;
    if report.checks.is_empty() {
        return Err(CliError::Spec("spec has neither a manifold nor an 'algebra' block".into()));
    }
    Ok(report)
}

pub fn poisson_stable(spec: &ManifoldSpec, opts: &Options) -> Result<Report, CliError> {
    let mut report = Report::new("poisson-stable", opts.timings);
    let loaded = load(spec)?;
    let gens = match &loaded.manifold {
        Manifold::Ideal { gens } => gens.clone(),
        Manifold::Constants(m) => spectral_cover_ideal(m),
    };
    let result = ideal_poisson_stable(&gens, &opts.config()).map_err(hard_poisson)?;
    stability_detail(&mut report, "stability", "ideal", &result, true);
    Ok(report)
}

pub fn radical_stable(spec: &ManifoldSpec, opts: &Options) -> Result<Report, CliError> {
    let mut report = Report::new("radical-stable", opts.timings);
    let loaded = load(spec)?;
    let cfg = opts.config();
    let target = match &loaded.radical {
        Some(r) => r.clone(),
        None => {
            let points = sample_set(&loaded, spec, opts);
            let Some(m) = obtain_multiplication(&mut report, &loaded, &points, opts)? else {
                return Ok(report);
            };
            match spectral_radical(&m, &cfg) {
                Ok(r) => r,
                Err(e) => {
                    report.push("radical", Status::Fail, soft_f(e)?);
                    return Ok(report);
                }
            }
        }
    };
    let gens: Vec<String> = target.generators().iter().map(ToString::to_string).collect();
    report.push("radical", Status::Info, format!("({})", gens.join(", ")));
    let result = ideal_poisson_stable(&target, &cfg).map_err(hard_poisson)?;
    stability_detail(&mut report, "stability", "radical", &result, true);
    Ok(report)
}

/// The manifold spec of one of the two example families.
pub fn example(family: u8, n: usize, rho: &[String], seed: u64) -> Result<ManifoldSpec, CliError> {
    let fam = match family {
        1 => {
            if n == 0 {
                return Err(CliError::Spec("n must be positive".into()));
            }
            let vars = VariableSet::new(n);
            let mut values = vec![Polynomial::one(vars)];
            match rho.len() {
                0 => values.extend((2..=n).map(|_| Polynomial::zero(vars))),
                k if k == n - 1 => {
                    for s in rho {
                        values.push(parse_poly(s, vars).map_err(|e| CliError::Spec(format!("cannot parse rho '{s}': {e}")))?);
                    }
                }
                k => return Err(CliError::Spec(format!("family 1 with n={n} takes {} rho values (rho2..rho{n}), got {k}", n - 1))),
            }
            family1(n, &values).map_err(|e| CliError::Spec(e.to_string()))?
        }
        2 => {
            if !rho.is_empty() {
                return Err(CliError::Spec("family 2 takes no rho values".into()));
            }
            family2(n).map_err(|e| CliError::Spec(e.to_string()))?
        }
        other => return Err(CliError::Spec(format!("unknown family {other}; expected 1 or 2"))),
    };
    Ok(ManifoldSpec {
        n: Some(n),
        mode: Some(Mode::Ideal),
        structure_constants: None,
        identity: None,
        ideal: Some(fam.sources().to_vec()),
        radical: Some(fam.radical_sources().to_vec()),
        gradings: None,
        algebra: None,
        sample_points: None,
        seed,
    })
}
