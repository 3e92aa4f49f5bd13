mod common;

use common::Source;
use fmcheck_core::fstructure::{
    is_f_manifold, multiplication_from_ideal, spectral_cover_ideal, spectral_cover_rank_check, sample_points, Route,
};
use fmcheck_core::GroebnerConfig;

#[test]
fn routes_agree_and_sources_land_where_expected() {
    let cfg = GroebnerConfig::default();
    for inst in common::corpus(11) {
        let verdict = is_f_manifold(&inst.m, Route::Both, &cfg).unwrap_or_else(|e| panic!("{}: {e}", inst.label));
        let expected = match inst.source {
            Source::Semisimple | Source::ConstantCyclic | Source::Family1 | Source::Family2 => Some(true),
            Source::Family1WithT1 => Some(false),
            Source::RandomCyclic | Source::PerturbedFamily1 => None,
        };
        if let Some(e) = expected {
            assert_eq!(verdict.is_f_manifold(), e, "{}", inst.label);
        }
    }
}

#[test]
fn reconstruction_round_trip() {
    let cfg = GroebnerConfig::default();
    for inst in common::corpus(12) {
        if inst.m.identity() != &inst.m.basis(1) {
            continue;
        }
        let ideal = spectral_cover_ideal(&inst.m);
        let n = inst.m.dim();
        assert!(spectral_cover_rank_check(&ideal, n, &sample_points(n, 3, 1), &cfg).unwrap().passed(), "{}", inst.label);
        assert_eq!(multiplication_from_ideal(&ideal, n, &cfg).unwrap(), inst.m, "{}", inst.label);
    }
}
