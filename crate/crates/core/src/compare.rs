//! Similarity of two rankings of the same node set.
//!
//! Two measures are provided:
//!
//! * **Correlation** `cc`: Pearson correlation between the two node lists
//!   in rank order, i.e. between `x.order` and `y.order` read as sequences
//!   of node ids. On the top-`k` prefix it is only defined when both
//!   prefixes hold the same node set; otherwise the result is `None`,
//!   printed as "--".
//! * **Intersection distance** `isim_k(x, y) = (1/k) sum_{i=1..k} |X_i Δ Y_i| / (2i)`,
//!   where `X_i` and `Y_i` are the top-`i` prefix sets. It is 0 for identical
//!   prefixes and 1 when the top-`k` prefixes are disjoint.
//!
//! Percent cutoffs use `k = round(p n / 100)`, clamped to `1..=n`.

use serde::{Deserialize, Serialize};

use crate::centrality::Ranking;
use crate::error::{Error, Result};

/// Number of nodes covered by the top `percent` of `n`.
pub fn cutoff_count(percent: f64, n: usize) -> usize {
    let k = (percent * n as f64 / 100.0).round() as usize;
    k.clamp(1, n.max(1))
}

fn check_pair(x: &Ranking, y: &Ranking) -> Result<usize> {
    if x.len() != y.len() {
        return Err(Error::invalid(format!(
            "rankings cover different node sets ({} vs {} nodes)",
            x.len(),
            y.len()
        )));
    }
    Ok(x.len())
}

fn check_k(k: usize, n: usize) -> Result<()> {
    if k == 0 || k > n {
        return Err(Error::invalid(format!("cutoff k = {k} outside 1..={n}")));
    }
    Ok(())
}

/// `|X_i Δ Y_i|` for every prefix length `i = 1..=k`.
fn prefix_differences(x: &[usize], y: &[usize], n: usize, k: usize) -> Vec<usize> {
    let mut in_x = vec![false; n];
    let mut in_y = vec![false; n];
    let mut diff: usize = 0;
    let mut out = Vec::with_capacity(k);
    for i in 0..k {
        let (a, b) = (x[i], y[i]);
        in_x[a] = true;
        if in_y[a] {
            diff -= 1;
        } else {
            diff += 1;
        }
        in_y[b] = true;
        if in_x[b] {
            diff -= 1;
        } else {
            diff += 1;
        }
        out.push(diff);
    }
    out
}

/// `isim_k` evaluated exactly.
pub fn intersection_distance(x: &Ranking, y: &Ranking, k: usize) -> Result<f64> {
    let n = check_pair(x, y)?;
    check_k(k, n)?;
    let diffs = prefix_differences(&x.order, &y.order, n, k);
    let sum: f64 = diffs
        .iter()
        .enumerate()
        .map(|(i, &d)| d as f64 / (2.0 * (i + 1) as f64))
        .sum();
    Ok(sum / k as f64)
}

/// `isim_k` for every `k = 1..=n` in one pass.
pub fn isim_curve(x: &Ranking, y: &Ranking) -> Result<Vec<f64>> {
    let n = check_pair(x, y)?;
    let diffs = prefix_differences(&x.order, &y.order, n, n);
    let mut running = 0.0;
    Ok(diffs
        .iter()
        .enumerate()
        .map(|(i, &d)| {
            running += d as f64 / (2.0 * (i + 1) as f64);
            running / (i + 1) as f64
        })
        .collect())
}

fn pearson(a: &[usize], b: &[usize]) -> f64 {
    let len = a.len() as f64;
    let ma = a.iter().sum::<usize>() as f64 / len;
    let mb = b.iter().sum::<usize>() as f64 / len;
    let (mut sab, mut saa, mut sbb) = (0.0, 0.0, 0.0);
    for (&u, &v) in a.iter().zip(b) {
        let (du, dv) = (u as f64 - ma, v as f64 - mb);
        sab += du * dv;
        saa += du * du;
        sbb += dv * dv;
    }
    sab / (saa * sbb).sqrt()
}

/// Pearson correlation between the rank-ordered node lists.
pub fn rank_correlation(x: &Ranking, y: &Ranking) -> Result<f64> {
    let n = check_pair(x, y)?;
    if n < 2 {
        return Err(Error::invalid("rank correlation needs at least two nodes"));
    }
    Ok(pearson(&x.order, &y.order))
}

/// Correlation of the top-`k` lists, `None` when the top-`k` sets differ.
/// A shared single top node counts as perfect agreement.
pub fn top_k_correlation(x: &Ranking, y: &Ranking, k: usize) -> Result<Option<f64>> {
    let n = check_pair(x, y)?;
    check_k(k, n)?;
    let (tx, ty) = (x.top(k), y.top(k));
    let mut sx = tx.to_vec();
    let mut sy = ty.to_vec();
    sx.sort_unstable();
    sy.sort_unstable();
    if sx != sy {
        return Ok(None);
    }
    if k == 1 {
        return Ok(Some(1.0));
    }
    Ok(Some(pearson(tx, ty)))
}

pub fn top_percent_correlation(x: &Ranking, y: &Ranking, percent: f64) -> Result<Option<f64>> {
    if !(percent > 0.0 && percent <= 100.0) {
        return Err(Error::invalid(format!(
            "percent must lie in (0, 100], got {percent}"
        )));
    }
    top_k_correlation(x, y, cutoff_count(percent, x.len()))
}

/// A top-of-list cutoff, by percentage or explicit node count.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Cutoff {
    Percent(f64),
    Count(usize),
}

impl Cutoff {
    pub fn resolve(&self, n: usize) -> Result<usize> {
        match *self {
            Cutoff::Percent(p) if p > 0.0 && p <= 100.0 => Ok(cutoff_count(p, n)),
            Cutoff::Percent(p) => Err(Error::invalid(format!(
                "percent must lie in (0, 100], got {p}"
            ))),
            Cutoff::Count(k) => {
                check_k(k, n)?;
                Ok(k)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TopComparison {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub percent: Option<f64>,
    pub k: usize,
    /// `None` when the top-`k` sets differ.
    pub cc: Option<f64>,
    pub isim: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RankComparison {
    pub n: usize,
    pub cc_full: f64,
    /// `isim_n`.
    pub isim_full: f64,
    pub top: Vec<TopComparison>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub isim_curve: Option<Vec<f64>>,
}

impl RankComparison {
    pub fn top_for(&self, cutoff: Cutoff) -> Option<&TopComparison> {
        self.top.iter().find(|t| match cutoff {
            Cutoff::Percent(p) => t.percent == Some(p),
            Cutoff::Count(k) => t.percent.is_none() && t.k == k,
        })
    }
}

/// All metrics for one pair of rankings.
pub fn compare_rankings(
    x: &Ranking,
    y: &Ranking,
    cutoffs: &[Cutoff],
    with_curve: bool,
) -> Result<RankComparison> {
    let n = check_pair(x, y)?;
    let cc_full = rank_correlation(x, y)?;
    let curve = isim_curve(x, y)?;
    let mut top = Vec::with_capacity(cutoffs.len());
    for c in cutoffs {
        let k = c.resolve(n)?;
        top.push(TopComparison {
            percent: match c {
                Cutoff::Percent(p) => Some(*p),
                Cutoff::Count(_) => None,
            },
            k,
            cc: top_k_correlation(x, y, k)?,
            isim: curve[k - 1],
        });
    }
    Ok(RankComparison {
        n,
        cc_full,
        isim_full: curve[n - 1],
        top,
        isim_curve: with_curve.then_some(curve),
    })
}
