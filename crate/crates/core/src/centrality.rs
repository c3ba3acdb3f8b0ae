//! Node rankings and network-level indices built on `exp(beta*A)` and the
//! resolvent `(I - alpha*A)^{-1}`.
//!
//! For a matrix function `f` the crate computes:
//!
//! * subgraph centrality `f(A)_ii` (diagonal; closed walks at `i`),
//! * total communicability `(f(A) 1)_i` (row sums; all walks from `i`),
//! * the network totals `C = 1' f(A) 1` and `EE = trace f(A)`.
//!
//! `C` is always obtained from the row-sum vector; no individual off-diagonal
//! entries are ever formed. Diagonals come from the dense eigendecomposition
//! for graphs up to `exact_below` nodes and from per-node Gauss quadrature
//! above that.
//!
//! For any symmetric adjacency matrix `EE <= C <= n exp(beta*lambda_1)`. The
//! resolvent analogue is `EE_r <= C_r <= n / (1 - alpha*lambda_1)`.
//!
//! # Normalized total communicability
//!
//! [`log_normalized_c`] evaluates `(C - n) / (n^2 e^{n-1} - 2n)` in the log
//! domain; the direct quotient underflows for all but tiny graphs. The
//! denominator assumes `C(K_n) = n^2 e^{n-1} - n`. By the eigendecomposition
//! of `K_n`, though, `C(K_n) = n e^{n-1}`, so the ratio on `K_n` is close to
//! `1/n` rather than 1 (exactly 1/2 on `K_2`). The published form is kept.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::krylov::{
    cg_solve_resolvent, dominant_eigs, expm_multiply, quadrature_diag_all, DenseSpectrum,
    KrylovConfig, MatrixFunction, SpectralEstimate, DEFAULT_DENSE_CAP,
};

/// Graphs with at most this many nodes get exact diagonals by default.
pub const DEFAULT_EXACT_BELOW: usize = DEFAULT_DENSE_CAP;

/// Relative tolerance of the `lambda_1` estimate used by rankings/reports.
pub const SPECTRAL_TOL: f64 = 1e-10;

/// Safety margin on `alpha * lambda_1 < 1` for literal `alpha` values.
const ALPHA_MARGIN: f64 = 1e-10;

/// Two scores closer than this (relative) are treated as tied.
pub const DEFAULT_TIE_TOLERANCE: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    ExpSubgraph,
    ExpTotal,
    ResSubgraph,
    ResTotal,
    /// Scores supplied by the caller.
    Custom,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::ExpSubgraph => "exp-subgraph",
            Method::ExpTotal => "exp-total",
            Method::ResSubgraph => "res-subgraph",
            Method::ResTotal => "res-total",
            Method::Custom => "custom",
        }
    }

    pub fn is_resolvent(&self) -> bool {
        matches!(self, Method::ResSubgraph | Method::ResTotal)
    }
}

impl std::str::FromStr for Method {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exp-subgraph" => Ok(Method::ExpSubgraph),
            "exp-total" => Ok(Method::ExpTotal),
            "res-subgraph" => Ok(Method::ResSubgraph),
            "res-total" => Ok(Method::ResTotal),
            other => Err(Error::invalid(format!(
                "unknown method '{other}' (expected exp-total, exp-subgraph, res-total or res-subgraph)"
            ))),
        }
    }
}

/// Parameters a score vector was computed with.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct MethodParams {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub beta: Option<f64>,
    /// Realized `alpha`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha_fraction: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda1: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScoreVector {
    pub scores: Vec<f64>,
    pub method: Method,
    pub params: MethodParams,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub graph_id: Option<String>,
}

impl ScoreVector {
    pub fn new(scores: Vec<f64>, method: Method, params: MethodParams) -> Self {
        ScoreVector {
            scores,
            method,
            params,
            graph_id: None,
        }
    }

    pub fn custom(scores: Vec<f64>) -> Self {
        Self::new(scores, Method::Custom, MethodParams::default())
    }

    pub fn with_graph_id(mut self, id: impl Into<String>) -> Self {
        self.graph_id = Some(id.into());
        self
    }

    pub fn len(&self) -> usize {
        self.scores.len()
    }

    pub fn is_empty(&self) -> bool {
        self.scores.is_empty()
    }

    pub fn sum(&self) -> f64 {
        self.scores.iter().sum()
    }
}

/// How the resolvent parameter is chosen.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AlphaChoice {
    /// `alpha = fraction / lambda_1`, fraction in (0, 1).
    Fraction(f64),
    /// Literal `alpha`, checked against `0 < alpha < 1/lambda_1`.
    Literal(f64),
}

impl Default for AlphaChoice {
    fn default() -> Self {
        AlphaChoice::Fraction(0.85)
    }
}

/// Realized resolvent parameter together with the `lambda_1` it was
/// validated against.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ResolvedAlpha {
    pub alpha: f64,
    pub fraction: Option<f64>,
    pub lambda1: f64,
}

impl ResolvedAlpha {
    fn params(&self) -> MethodParams {
        MethodParams {
            beta: None,
            alpha: Some(self.alpha),
            alpha_fraction: self.fraction,
            lambda1: Some(self.lambda1),
        }
    }
}

/// Turns an [`AlphaChoice`] into a concrete `alpha`.
///
/// On a graph without edges `lambda_1 = 0`, the resolvent is the identity
/// for every `alpha`, and a fraction resolves to `alpha = 0`.
pub fn resolve_alpha(choice: AlphaChoice, lambda1: f64) -> Result<ResolvedAlpha> {
    match choice {
        AlphaChoice::Fraction(fr) => {
            if !(fr > 0.0 && fr < 1.0) {
                return Err(Error::invalid(format!(
                    "alpha fraction must lie in (0, 1), got {fr}"
                )));
            }
            let alpha = if lambda1 > 0.0 { fr / lambda1 } else { 0.0 };
            Ok(ResolvedAlpha {
                alpha,
                fraction: Some(fr),
                lambda1,
            })
        }
        AlphaChoice::Literal(alpha) => {
            if !(alpha > 0.0) || alpha * lambda1 >= 1.0 - ALPHA_MARGIN {
                return Err(Error::AlphaOutOfRange {
                    alpha,
                    lambda1: Some(lambda1),
                });
            }
            Ok(ResolvedAlpha {
                alpha,
                fraction: None,
                lambda1,
            })
        }
    }
}

fn check_beta(beta: f64) -> Result<()> {
    if beta > 0.0 && beta.is_finite() {
        Ok(())
    } else {
        Err(Error::invalid(format!(
            "beta must be positive and finite, got {beta}"
        )))
    }
}

fn exp_params(beta: f64) -> MethodParams {
    MethodParams {
        beta: Some(beta),
        ..Default::default()
    }
}

fn diagonal(
    g: &Graph,
    f: MatrixFunction,
    cfg: &KrylovConfig,
    exact_below: usize,
) -> Result<Vec<f64>> {
    if g.num_nodes() <= exact_below {
        DenseSpectrum::new(g, exact_below)?.diag(f)
    } else {
        cfg.validate()?;
        quadrature_diag_all(g, f, cfg)
    }
}

/// `exp(beta*A) 1`.
pub fn total_communicability(g: &Graph, beta: f64, cfg: &KrylovConfig) -> Result<ScoreVector> {
    check_beta(beta)?;
    let scores = if g.num_nodes() == 0 {
        Vec::new()
    } else {
        expm_multiply(g, &vec![1.0; g.num_nodes()], beta, cfg)?
    };
    Ok(ScoreVector::new(scores, Method::ExpTotal, exp_params(beta)))
}

/// `diag(exp(beta*A))`.
pub fn subgraph_centrality(
    g: &Graph,
    beta: f64,
    cfg: &KrylovConfig,
    exact_below: usize,
) -> Result<ScoreVector> {
    check_beta(beta)?;
    let scores = diagonal(g, MatrixFunction::Exp { beta }, cfg, exact_below)?;
    Ok(ScoreVector::new(
        scores,
        Method::ExpSubgraph,
        exp_params(beta),
    ))
}

fn lambda1_of(g: &Graph) -> Result<f64> {
    if g.num_nodes() == 0 {
        return Ok(0.0);
    }
    Ok(dominant_eigs(g, SPECTRAL_TOL)?.lambda1)
}

/// `(I - alpha*A)^{-1} 1` via conjugate gradients.
pub fn katz_total(g: &Graph, alpha: AlphaChoice, cfg: &KrylovConfig) -> Result<ScoreVector> {
    let resolved = resolve_alpha(alpha, lambda1_of(g)?)?;
    katz_total_resolved(g, resolved, cfg)
}

pub fn katz_total_resolved(
    g: &Graph,
    alpha: ResolvedAlpha,
    cfg: &KrylovConfig,
) -> Result<ScoreVector> {
    cfg.validate()?;
    let b = vec![1.0; g.num_nodes()];
    let scores = cg_solve_resolvent(g, alpha.alpha, &b, cfg.tolerance)
        .map_err(|e| attach_lambda(e, alpha.lambda1))?;
    Ok(ScoreVector::new(scores, Method::ResTotal, alpha.params()))
}

/// `diag((I - alpha*A)^{-1})`.
pub fn katz_subgraph(
    g: &Graph,
    alpha: AlphaChoice,
    cfg: &KrylovConfig,
    exact_below: usize,
) -> Result<ScoreVector> {
    let resolved = resolve_alpha(alpha, lambda1_of(g)?)?;
    katz_subgraph_resolved(g, resolved, cfg, exact_below)
}

pub fn katz_subgraph_resolved(
    g: &Graph,
    alpha: ResolvedAlpha,
    cfg: &KrylovConfig,
    exact_below: usize,
) -> Result<ScoreVector> {
    let f = MatrixFunction::Resolvent { alpha: alpha.alpha };
    let scores = diagonal(g, f, cfg, exact_below).map_err(|e| attach_lambda(e, alpha.lambda1))?;
    Ok(ScoreVector::new(
        scores,
        Method::ResSubgraph,
        alpha.params(),
    ))
}

fn attach_lambda(e: Error, lambda1: f64) -> Error {
    match e {
        Error::AlphaOutOfRange { alpha, .. } => Error::AlphaOutOfRange {
            alpha,
            lambda1: Some(lambda1),
        },
        other => other,
    }
}

/// Computes one method's scores, resolving `alpha` if needed.
pub fn compute_scores(
    g: &Graph,
    method: Method,
    beta: f64,
    alpha: AlphaChoice,
    cfg: &KrylovConfig,
    exact_below: usize,
) -> Result<ScoreVector> {
    match method {
        Method::ExpTotal => total_communicability(g, beta, cfg),
        Method::ExpSubgraph => subgraph_centrality(g, beta, cfg, exact_below),
        Method::ResTotal => katz_total(g, alpha, cfg),
        Method::ResSubgraph => katz_subgraph(g, alpha, cfg, exact_below),
        Method::Custom => Err(Error::invalid("custom scores cannot be computed")),
    }
}

/// Which function a [`NetworkReport`] is built on.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ReportFunction {
    Exp { beta: f64 },
    Resolvent { alpha: AlphaChoice },
}

/// Network-level summary of one graph under one matrix function.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NetworkReport {
    pub function: MatrixFunction,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha_fraction: Option<f64>,
    pub n: usize,
    pub m: usize,
    /// `1' f(A) 1`.
    pub total_communicability: f64,
    /// `trace f(A)`.
    pub ee_total: f64,
    pub c_over_n: f64,
    /// `None` for graphs without edges.
    pub c_over_m: Option<f64>,
    pub ee_over_n: f64,
    pub lambda1: f64,
    pub lambda2: Option<f64>,
    pub spectral_converged: bool,
    /// `n e^{beta lambda_1}` or `n / (1 - alpha lambda_1)`.
    pub upper_bound: f64,
    pub upper_bound_over_n: f64,
    pub bounds_ok: bool,
    /// Whether `EE` came from the dense path (exact) or from quadrature.
    pub ee_exact: bool,
    /// `log` of the normalized total communicability (exponential with
    /// `beta = 1` only, `None` when undefined).
    pub log_normalized_c: Option<f64>,
}

/// Score vectors and report from a single pass.
#[derive(Debug, Clone)]
pub struct NetworkAnalysis {
    pub total: ScoreVector,
    pub subgraph: ScoreVector,
    pub spectral: Option<SpectralEstimate>,
    pub report: NetworkReport,
}

/// Relative slack allowed on bound checks for rounding noise.
pub const BOUND_SLACK: f64 = 1e-8;

/// Computes both score vectors, the two top eigenvalues and the report.
pub fn analyze(
    g: &Graph,
    function: ReportFunction,
    cfg: &KrylovConfig,
    exact_below: usize,
) -> Result<NetworkAnalysis> {
    cfg.validate()?;
    let n = g.num_nodes();
    if n == 0 {
        return Err(Error::invalid("network report of a graph with no nodes"));
    }
    let spectral = dominant_eigs(g, SPECTRAL_TOL)?;
    let lambda1 = spectral.lambda1;

    let (total, subgraph, f, fraction) = match function {
        ReportFunction::Exp { beta } => {
            let total = total_communicability(g, beta, cfg)?;
            let sub = subgraph_centrality(g, beta, cfg, exact_below)?;
            (total, sub, MatrixFunction::Exp { beta }, None)
        }
        ReportFunction::Resolvent { alpha } => {
            let resolved = resolve_alpha(alpha, lambda1)?;
            let total = katz_total_resolved(g, resolved, cfg)?;
            let sub = katz_subgraph_resolved(g, resolved, cfg, exact_below)?;
            (
                total,
                sub,
                MatrixFunction::Resolvent {
                    alpha: resolved.alpha,
                },
                resolved.fraction,
            )
        }
    };

    let c = total.sum();
    let ee = subgraph.sum();
    let nf = n as f64;
    let upper_bound = match f {
        MatrixFunction::Exp { beta } => nf * (beta * lambda1).exp(),
        MatrixFunction::Resolvent { alpha } => nf / (1.0 - alpha * lambda1),
    };
    let bounds_ok = upper_bound.is_finite()
        && upper_bound > 0.0
        && ee <= c + BOUND_SLACK * c.abs()
        && c <= upper_bound * (1.0 + BOUND_SLACK);
    let log_normalized_c = match f {
        MatrixFunction::Exp { beta: 1.0 } => log_normalized_c(c, n).ok(),
        _ => None,
    };

    let report = NetworkReport {
        function: f,
        alpha_fraction: fraction,
        n,
        m: g.num_edges(),
        total_communicability: c,
        ee_total: ee,
        c_over_n: c / nf,
        c_over_m: (g.num_edges() > 0).then(|| c / g.num_edges() as f64),
        ee_over_n: ee / nf,
        lambda1,
        lambda2: spectral.lambda2,
        spectral_converged: spectral.converged,
        upper_bound,
        upper_bound_over_n: upper_bound / nf,
        bounds_ok,
        ee_exact: n <= exact_below,
        log_normalized_c,
    };
    Ok(NetworkAnalysis {
        total,
        subgraph,
        spectral: Some(spectral),
        report,
    })
}

pub fn network_report(
    g: &Graph,
    function: ReportFunction,
    cfg: &KrylovConfig,
    exact_below: usize,
) -> Result<NetworkReport> {
    Ok(analyze(g, function, cfg, exact_below)?.report)
}

/// `log((C - n) / (n^2 e^{n-1} - 2n))` without forming the denominator.
pub fn log_normalized_c(c: f64, n: usize) -> Result<f64> {
    if n < 2 {
        return Err(Error::invalid(
            "normalized communicability needs at least two nodes",
        ));
    }
    let nf = n as f64;
    if !(c > nf) {
        return Err(Error::invalid(format!(
            "normalized communicability is undefined for C = {c} <= n = {n}"
        )));
    }
    // log(n^2 e^{n-1} - 2n) = 2 log n + (n - 1) + log(1 - 2 e^{-(n-1)} / n)
    let log_den = 2.0 * nf.ln() + (nf - 1.0) + (-2.0 * (-(nf - 1.0)).exp() / nf).ln_1p();
    Ok((c - nf).ln() - log_den)
}

/// The same ratio evaluated directly; underflows (or overflows to `0`) for
/// all but tiny graphs.
pub fn direct_normalized_c(c: f64, n: usize) -> f64 {
    let nf = n as f64;
    (c - nf) / (nf * nf * (nf - 1.0).exp() - 2.0 * nf)
}

/// Tie-breaking rule for equal scores.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TieBreak {
    #[default]
    LowerIdFirst,
    /// Equivalent to reversing an ascending stable sort.
    HigherIdFirst,
}

/// Nodes ordered best first.
#[derive(Debug, Clone, PartialEq)]
pub struct Ranking {
    /// `order[0]` is the top node.
    pub order: Vec<usize>,
    pub scores: ScoreVector,
}

impl Ranking {
    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// `position[node]` = 0-based rank of `node`.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.order.len()];
        for (r, &node) in self.order.iter().enumerate() {
            pos[node] = r;
        }
        pos
    }

    pub fn top(&self, k: usize) -> &[usize] {
        &self.order[..k.min(self.order.len())]
    }

    /// Ranking of a plain permutation (best first), e.g. for metric tests.
    pub fn from_order(order: Vec<usize>) -> Result<Self> {
        let n = order.len();
        let mut seen = vec![false; n];
        for &v in &order {
            if v >= n || std::mem::replace(&mut seen[v], true) {
                return Err(Error::invalid("order is not a permutation of 0..n"));
            }
        }
        let mut scores = vec![0.0; n];
        for (r, &v) in order.iter().enumerate() {
            scores[v] = (n - r) as f64;
        }
        Ok(Ranking {
            order,
            scores: ScoreVector::custom(scores),
        })
    }
}

/// Descending order with ties broken by ascending node id.
pub fn rank(scores: &ScoreVector) -> Ranking {
    rank_with(scores, TieBreak::LowerIdFirst, DEFAULT_TIE_TOLERANCE)
}

/// Descending order; runs of scores whose neighbours differ by at most
/// `tie_tol` (relative) are tied and ordered by `ties`.
pub fn rank_with(scores: &ScoreVector, ties: TieBreak, tie_tol: f64) -> Ranking {
    let s = &scores.scores;
    let mut order: Vec<usize> = (0..s.len()).collect();
    order.sort_by(|&a, &b| s[b].total_cmp(&s[a]).then(a.cmp(&b)));

    let mut start = 0;
    while start < order.len() {
        let mut end = start + 1;
        while end < order.len() {
            let (prev, cur) = (s[order[end - 1]], s[order[end]]);
            if (prev - cur).abs() <= tie_tol * prev.abs().max(cur.abs()) {
                end += 1;
            } else {
                break;
            }
        }
        let group = &mut order[start..end];
        match ties {
            TieBreak::LowerIdFirst => group.sort_unstable(),
            TieBreak::HigherIdFirst => group.sort_unstable_by(|a, b| b.cmp(a)),
        }
        start = end;
    }
    Ranking {
        order,
        scores: scores.clone(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate_reference, ReferenceKind};

    fn cfg() -> KrylovConfig {
        KrylovConfig::default()
    }

    #[test]
    fn ring_total_communicability() {
        let ring = generate_reference(ReferenceKind::RingLattice, 200, Some(1)).unwrap();
        let s = total_communicability(&ring, 1.0, &cfg()).unwrap();
        assert!(s.scores.iter().all(|&x| (x - 2f64.exp()).abs() < 1e-10));
        assert_eq!(s.method, Method::ExpTotal);
    }

    #[test]
    fn star_hub_first_leaves_tied() {
        let star = generate_reference(ReferenceKind::Star, 9, None).unwrap();
        for s in [
            total_communicability(&star, 1.0, &cfg()).unwrap(),
            subgraph_centrality(&star, 1.0, &cfg(), 100).unwrap(),
        ] {
            let r = rank(&s);
            assert_eq!(r.order[0], 0);
            assert_eq!(&r.order[1..], &[1, 2, 3, 4, 5, 6, 7, 8]);
            let leaf = s.scores[1];
            assert!(s.scores[1..]
                .iter()
                .all(|&x| (x - leaf).abs() < 1e-12 * leaf));
            assert!(s.scores[0] > leaf);
        }
    }

    #[test]
    fn empty_graph_scores_are_one() {
        let g = Graph::empty(4);
        let s = subgraph_centrality(&g, 1.0, &cfg(), 100).unwrap();
        assert_eq!(s.scores, vec![1.0; 4]);
        let k = katz_subgraph(&g, AlphaChoice::Fraction(0.85), &cfg(), 100).unwrap();
        assert_eq!(k.scores, vec![1.0; 4]);
        let k = katz_total(&g, AlphaChoice::Fraction(0.85), &cfg()).unwrap();
        assert_eq!(k.scores, vec![1.0; 4]);
    }

    #[test]
    fn katz_ring() {
        let ring = generate_reference(ReferenceKind::RingLattice, 300, Some(1)).unwrap();
        let k = katz_total(&ring, AlphaChoice::Fraction(0.85), &cfg()).unwrap();
        assert!((k.params.alpha.unwrap() - 0.425).abs() < 1e-9);
        assert!(k.scores.iter().all(|&x| (x - 1.0 / 0.15).abs() < 1e-7));
    }

    #[test]
    fn katz_literal_alpha() {
        let p3 = generate_reference(ReferenceKind::Path, 3, None).unwrap();
        let k = katz_total(&p3, AlphaChoice::Literal(0.1), &cfg()).unwrap();
        assert!((k.scores[0] - 1.122449).abs() < 1e-6);
        assert!((k.scores[1] - 1.224490).abs() < 1e-6);
        assert!(katz_total(&p3, AlphaChoice::Literal(0.8), &cfg()).is_err());
        assert!(katz_total(&p3, AlphaChoice::Fraction(1.0), &cfg()).is_err());
        assert!(katz_total(&p3, AlphaChoice::Fraction(0.0), &cfg()).is_err());
    }

    #[test]
    fn katz_subgraph_complete_graph_uniform() {
        let k4 = generate_reference(ReferenceKind::Complete, 4, None).unwrap();
        let s = katz_subgraph(&k4, AlphaChoice::Literal(0.1), &cfg(), 100).unwrap();
        let d = DenseSpectrum::new(&k4, 10)
            .unwrap()
            .diag(MatrixFunction::Resolvent { alpha: 0.1 })
            .unwrap();
        for (a, b) in s.scores.iter().zip(&d) {
            assert!((a - b).abs() < 1e-14);
            assert!((a - s.scores[0]).abs() < 1e-12);
        }
    }

    #[test]
    fn quadrature_branch_used_above_threshold() {
        let g = generate_reference(ReferenceKind::Cycle, 40, None).unwrap();
        let exact = subgraph_centrality(&g, 1.0, &cfg(), 100).unwrap();
        let approx = subgraph_centrality(&g, 1.0, &cfg(), 10).unwrap();
        for (a, b) in exact.scores.iter().zip(&approx.scores) {
            assert!(b <= a && (a - b) / a < 1e-3);
        }
    }

    #[test]
    fn empty_graph_report() {
        let g = Graph::empty(6);
        let r = network_report(&g, ReportFunction::Exp { beta: 1.0 }, &cfg(), 100).unwrap();
        assert!((r.total_communicability - 6.0).abs() < 1e-12);
        assert!((r.ee_total - 6.0).abs() < 1e-12);
        assert_eq!(r.c_over_m, None);
        assert!(r.bounds_ok);
        assert_eq!(r.log_normalized_c, None);
    }

    #[test]
    fn normalized_c_log_domain() {
        // K_2: C = 2e, so (C - 2) / (4e - 4) = 1/2.
        let v = log_normalized_c(2.0 * 1f64.exp(), 2).unwrap();
        assert!((v - 0.5f64.ln()).abs() < 1e-14);
        assert!((direct_normalized_c(2.0 * 1f64.exp(), 2) - 0.5).abs() < 1e-14);
        assert!(log_normalized_c(6.0, 6).is_err());
        assert!(log_normalized_c(2.0, 1).is_err());
        // Ring with n = 5000: finite in the log domain, zero when evaluated
        // directly.
        let c = 5000.0 * 2f64.exp();
        let lv = log_normalized_c(c, 5000).unwrap();
        assert!(lv.is_finite() && lv < -4000.0);
        assert_eq!(direct_normalized_c(c, 5000), 0.0);
    }

    #[test]
    fn ranking_ties() {
        let s = ScoreVector::custom(vec![1.0, 0.5, 3.0, 2.0, 0.0, 2.0]);
        assert_eq!(rank(&s).order, vec![2, 3, 5, 0, 1, 4]);
        assert_eq!(
            rank_with(&s, TieBreak::HigherIdFirst, 0.0).order,
            vec![2, 5, 3, 0, 1, 4]
        );
        let uniform = ScoreVector::custom(vec![7.0; 5]);
        assert_eq!(rank(&uniform).order, vec![0, 1, 2, 3, 4]);
        // near-equal values inside the tolerance are tied
        let noisy = ScoreVector::custom(vec![1.0, 1.0 + 1e-14, 0.5]);
        assert_eq!(rank(&noisy).order, vec![0, 1, 2]);
        assert_eq!(rank(&noisy).positions(), vec![0, 1, 2]);
    }

    #[test]
    fn from_order_checks_permutation() {
        assert!(Ranking::from_order(vec![0, 0, 1]).is_err());
        let r = Ranking::from_order(vec![2, 0, 1]).unwrap();
        assert_eq!(rank(&r.scores).order, vec![2, 0, 1]);
    }
}
