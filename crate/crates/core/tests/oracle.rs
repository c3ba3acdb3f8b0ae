//! Krylov kernels against the dense eigendecomposition and exact series.

mod common;

use common::{corpus, rel_err};
use netcomm::centrality::{resolve_alpha, AlphaChoice};
use netcomm::krylov::{
    cg_solve_resolvent, dominant_eigs, expm_multiply, quadrature_diag, DenseSpectrum, KrylovConfig,
    MatrixFunction,
};
use netcomm::reference::{truncated_exp_series, truncated_resolvent_series};

fn inf_norm(v: &[f64]) -> f64 {
    v.iter().fold(0.0, |m, x| m.max(x.abs()))
}

fn inf_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).fold(0.0, |m, (x, y)| m.max((x - y).abs()))
}

#[test]
fn expm_row_sums_match_dense() {
    let cfg = KrylovConfig::default();
    for (name, g) in corpus().into_iter().filter(|(_, g)| g.num_nodes() <= 500) {
        let n = g.num_nodes();
        let ones = vec![1.0; n];
        let dense = DenseSpectrum::new(&g, 500)
            .unwrap()
            .apply(MatrixFunction::Exp { beta: 1.0 }, &ones)
            .unwrap();
        let krylov = expm_multiply(&g, &ones, 1.0, &cfg).unwrap();
        let err = inf_diff(&krylov, &dense) / inf_norm(&dense);
        assert!(err <= 1e-8, "{name}: relative error {err:e}");
    }
}

#[test]
fn cg_matches_dense_resolvent() {
    let cfg = KrylovConfig::default();
    for (name, g) in corpus().into_iter().filter(|(_, g)| g.num_nodes() <= 500) {
        let n = g.num_nodes();
        let spec = DenseSpectrum::new(&g, 500).unwrap();
        let lambda1 = spec.lambda_max();
        let alpha = resolve_alpha(AlphaChoice::Fraction(0.85), lambda1)
            .unwrap()
            .alpha;
        let b: Vec<f64> = (0..n).map(|i| 1.0 + (i % 3) as f64).collect();
        let dense = spec.apply(MatrixFunction::Resolvent { alpha }, &b).unwrap();
        let x = cg_solve_resolvent(&g, alpha, &b, cfg.tolerance).unwrap();
        let err = inf_diff(&x, &dense) / inf_norm(&dense);
        assert!(err <= 1e-8, "{name}: relative error {err:e}");
    }
}

#[test]
fn quadrature_close_to_dense_and_exact_at_full_dimension() {
    for (name, g) in corpus().into_iter().filter(|(_, g)| g.num_nodes() <= 40) {
        let n = g.num_nodes();
        let spec = DenseSpectrum::new(&g, 500).unwrap();
        let lambda1 = spec.lambda_max();
        let alpha = resolve_alpha(AlphaChoice::Fraction(0.5), lambda1)
            .unwrap()
            .alpha;
        for f in [
            MatrixFunction::Exp { beta: 1.0 },
            MatrixFunction::Resolvent { alpha },
        ] {
            let exact = spec.diag(f).unwrap();
            // k >= n: the Krylov space is invariant, so the rule is exact.
            let cfg = KrylovConfig {
                quadrature_steps: n,
                ..KrylovConfig::default()
            };
            for i in 0..n {
                let q = quadrature_diag(&g, i, f, &cfg).unwrap();
                assert!(
                    rel_err(q, exact[i]) <= 1e-10,
                    "{name} node {i}: {q} vs {}",
                    exact[i]
                );
            }
        }
    }
}

#[test]
fn default_quadrature_accuracy_on_karate() {
    let g = common::karate();
    let exact = DenseSpectrum::new(&g, 100)
        .unwrap()
        .diag(MatrixFunction::Exp { beta: 1.0 })
        .unwrap();
    let cfg = KrylovConfig::default();
    for (i, e) in exact.iter().enumerate() {
        let q = quadrature_diag(&g, i, MatrixFunction::Exp { beta: 1.0 }, &cfg).unwrap();
        assert!(q <= e * (1.0 + 1e-12));
        assert!(rel_err(q, *e) < 5e-3, "node {i}: {q} vs {e}");
    }
}

#[test]
fn dominant_eigs_match_dense() {
    for (name, g) in corpus().into_iter().filter(|(_, g)| g.num_nodes() >= 2) {
        let ev = DenseSpectrum::new(&g, 500).unwrap().eigenvalues_desc();
        let s = dominant_eigs(&g, 1e-10).unwrap();
        let scale = ev[0].abs().max(1.0);
        assert!(
            (s.lambda1 - ev[0]).abs() <= 1e-8 * scale,
            "{name}: {} vs {}",
            s.lambda1,
            ev[0]
        );
        assert!(
            (s.lambda2.unwrap() - ev[1]).abs() <= 1e-6 * scale,
            "{name}: {:?} vs {}",
            s.lambda2,
            ev[1]
        );
    }
}

#[test]
fn truncated_series_match_dense() {
    for (name, g) in corpus().into_iter().filter(|(_, g)| g.num_nodes() <= 100) {
        let spec = DenseSpectrum::new(&g, 500).unwrap();
        let exp = spec.matrix(MatrixFunction::Exp { beta: 1.0 }).unwrap();
        let series = truncated_exp_series(&g, 1.0, 60).unwrap();
        let err = (&series - &exp).amax() / exp.amax();
        assert!(err <= 1e-10, "{name}: exp series {err:e}");

        let lambda1 = spec.lambda_max();
        let alpha = if lambda1 > 0.0 { 0.9 / lambda1 } else { 0.5 };
        let res = spec.matrix(MatrixFunction::Resolvent { alpha }).unwrap();
        // (alpha lambda_1)^k decays like 0.9^k; 400 terms leave < 1e-17.
        let series = truncated_resolvent_series(&g, alpha, 400).unwrap();
        let err = (&series - &res).amax() / res.amax();
        assert!(err <= 1e-8, "{name}: resolvent series {err:e}");
    }
}
