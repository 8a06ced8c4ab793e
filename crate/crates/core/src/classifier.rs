//! The decision procedure: normalize under the outer automorphism, compare with
//! the exceptional list, and otherwise certify that the quotient is not smooth.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::certificate::{search_certificate, Certificate, SearchStage, DEFAULT_BUDGET};
use crate::duality::{delta, dual_weight};
use crate::error::{Error, Result};
use crate::orbit::{dimension, orbit_size};
use crate::props::dominant_by_height;
use crate::weights::{corank2_connected_subsets, pi_lambda, SimpleSubset, Weight};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    /// On the exceptional list: the quotient may be smooth; nothing is certified.
    CandidateSmooth,
    NotSmooth,
    NotManifold,
    Unresolved,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::CandidateSmooth => "CANDIDATE_SMOOTH",
            Verdict::NotSmooth => "NOT_SMOOTH",
            Verdict::NotManifold => "NOT_MANIFOLD",
            Verdict::Unresolved => "UNRESOLVED",
        })
    }
}

fn unit(r: usize, entries: &[(usize, i64)]) -> Vec<i64> {
    let mut a = vec![0i64; r];
    for &(j, v) in entries {
        a[j - 1] += v;
    }
    a
}

/// Picks the representative of `{lambda, dual(lambda)}`: `phi_j` with `j <= n/2`,
/// `phi_2 + phi_r` rather than `phi_1 + phi_{r-1}`, and otherwise the
/// lexicographically larger fundamental-coordinate vector.
pub fn normalize_outer(lambda: &Weight) -> Result<Weight> {
    let a = lambda.fundamental_coords()?;
    let r = a.len();
    let n = r + 1;
    if a.iter().all(|&x| x == 0) {
        return Err(Error::InvalidWeight(
            "the zero weight has no orbit to normalize".into(),
        ));
    }
    if a.iter().sum::<i64>() == 1 {
        let j = a.iter().position(|&x| x == 1).expect("one unit entry") + 1;
        return Ok(Weight::fundamental(n, j.min(n - j)));
    }
    if r >= 3 && a == unit(r, &[(1, 1), (r - 1, 1)]) {
        return Ok(Weight::from_fundamental(&unit(r, &[(2, 1), (r, 1)])));
    }
    if r >= 3 && a == unit(r, &[(2, 1), (r, 1)]) {
        return Ok(lambda.clone());
    }
    let dual = dual_weight(lambda);
    let b = dual.fundamental_coords()?;
    Ok(if a >= b { lambda.clone() } else { dual })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExceptionalStatus {
    pub theorem1_member: bool,
    pub theorem2_annotation: String,
}

/// Membership in the exceptional list, for an already normalized weight.
pub fn exceptional_status(r: usize, lambda: &Weight) -> ExceptionalStatus {
    let a = lambda.fundamental_coords().unwrap_or_default();
    let is = |entries: &[(usize, i64)]| a.len() == r && a == unit(r, entries);
    let annotation = if is(&[(1, 1), (r, 1)]) {
        Some("polar (adjoint)")
    } else if is(&[(1, 1)]) {
        Some("polar (φ₁⊕dual)")
    } else if r == 3 && (is(&[(2, 1)]) || is(&[(2, 2)])) {
        Some("polar (SO₆ cases r=3)")
    } else if r == 7 && is(&[(4, 1)]) {
        Some("polar (φ₄, r=7)")
    } else if r == 5 && is(&[(3, 1)]) {
        Some("slice (φ₃, r=5)")
    } else if is(&[(1, 2)]) || (r > 3 && is(&[(2, 1)])) {
        Some("slice (2φ₁/φ₂ symmetric-space)")
    } else {
        None
    };
    ExceptionalStatus {
        theorem1_member: annotation.is_some(),
        theorem2_annotation: annotation.unwrap_or("—").to_string(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionCheck {
    pub subset: SimpleSubset,
    pub con1: bool,
    pub con2: bool,
}

/// Syntactic evaluation of the two case conditions for `lambda` and `Pi'`.
pub fn condition_check(lambda: &Weight, sub: &SimpleSubset) -> Result<ConditionCheck> {
    let a = lambda.fundamental_coords()?;
    let r = a.len();
    let fundamental_j = (a.iter().sum::<i64>() == 1)
        .then(|| a.iter().position(|&x| x == 1).map(|p| p + 1))
        .flatten();
    let middle = fundamental_j.is_some_and(|j| j >= 3 && j + 2 <= r);
    let first = r >= 2 && *sub == SimpleSubset::interval(1, r.saturating_sub(2));
    let con1 = middle && (!first || r < 8);
    let meet = pi_lambda(lambda)?.intersection(sub);
    let con2 = r > 2
        && meet.len() == 1
        && sub.is_connected()
        && sub.boundary().contains(meet.indices()[0])
        && a[meet.indices()[0] - 1] == 1;
    Ok(ConditionCheck {
        subset: sub.clone(),
        con1,
        con2,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchSummary {
    pub stage: Option<String>,
    pub nodes: u64,
    pub hyperplanes_tried: usize,
    pub budget_exhausted: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub rank: usize,
    pub input: Vec<i64>,
    pub normalized: Vec<i64>,
    pub delta: u8,
    pub verdict: Verdict,
    pub certificate: Option<Certificate>,
    pub mechanism: String,
    pub theorem1_member: bool,
    pub theorem2_annotation: String,
    pub orbit_size: u128,
    pub dim: u128,
    pub conditions: Vec<ConditionCheck>,
    pub search: Option<SearchSummary>,
}

impl Report {
    pub fn margin(&self) -> Option<i128> {
        self.certificate.as_ref().map(|c| c.margin)
    }

    /// Recomputes the verdict from the stored data alone.
    pub fn reverify(&self) -> Result<Verdict> {
        let normalized = Weight::from_fundamental(&self.normalized);
        if let Some(c) = &self.certificate {
            c.verify()?;
            if c.lambda != normalized {
                return Err(Error::Verification(
                    "certificate is for another weight".into(),
                ));
            }
            return Ok(match c.kind {
                crate::certificate::CertificateKind::Nosm => Verdict::NotSmooth,
                crate::certificate::CertificateKind::Nom => Verdict::NotManifold,
            });
        }
        if exceptional_status(self.rank, &normalized).theorem1_member {
            Ok(Verdict::CandidateSmooth)
        } else {
            Ok(Verdict::Unresolved)
        }
    }
}

fn fmt_coords(a: &[i64]) -> String {
    a.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// Classifies the representation with highest weight `lambda` at rank `r`.
pub fn classify_with_budget(r: usize, lambda: &Weight, budget: u64) -> Result<Report> {
    if r < 2 {
        return Err(Error::InvalidRank(r));
    }
    if lambda.n() != r + 1 || !lambda.is_lattice() || !lambda.is_dominant() || lambda.is_zero() {
        return Err(Error::InvalidWeight(format!(
            "{:?} is not a nonzero dominant weight of rank {r}",
            lambda.coords()
        )));
    }
    let input = lambda.fundamental_coords()?;
    let norm = normalize_outer(lambda)?;
    let normalized = norm.fundamental_coords()?;
    let status = exceptional_status(r, &norm);
    let conditions = corank2_connected_subsets(r)
        .iter()
        .map(|sub| condition_check(&norm, sub))
        .collect::<Result<Vec<_>>>()?;
    let mut report = Report {
        rank: r,
        input,
        normalized,
        delta: delta(&norm),
        verdict: Verdict::Unresolved,
        certificate: None,
        mechanism: String::new(),
        theorem1_member: status.theorem1_member,
        theorem2_annotation: status.theorem2_annotation.clone(),
        orbit_size: orbit_size(&norm),
        dim: dimension(&norm)?,
        conditions,
        search: None,
    };
    if status.theorem1_member {
        report.verdict = Verdict::CandidateSmooth;
        report.mechanism = format!(
            "exceptional list; quotient not a manifold by the cited {} argument, not machine-checked",
            status.theorem2_annotation
        );
        return Ok(report);
    }
    let outcome = search_certificate(&norm, budget)?;
    report.search = Some(SearchSummary {
        stage: outcome.stage.as_ref().map(SearchStage::to_string),
        nodes: outcome.nodes,
        hyperplanes_tried: outcome.hyperplanes_tried,
        budget_exhausted: outcome.budget_exhausted,
    });
    match (outcome.certificate, outcome.stage) {
        (Some(cert), Some(stage)) => {
            report.verdict = Verdict::NotSmooth;
            report.mechanism = format!("nosm via {stage}");
            report.certificate = Some(cert);
        }
        _ => {
            report.mechanism = if outcome.budget_exhausted {
                format!("search budget of {budget} nodes exhausted")
            } else {
                "no certificate among the candidate hyperplanes".into()
            };
        }
    }
    Ok(report)
}

pub fn classify(r: usize, lambda: &Weight) -> Result<Report> {
    classify_with_budget(r, lambda, DEFAULT_BUDGET)
}

/// Parses `a1,...,ar` and classifies.
pub fn classify_text(r: usize, text: &str, budget: u64) -> Result<Report> {
    let lambda = crate::weights::parse_dominant(r, text)?;
    if lambda.is_zero() {
        return Err(Error::InvalidWeight("the zero weight is excluded".into()));
    }
    classify_with_budget(r, &lambda, budget)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepSummary {
    pub rows: usize,
    pub candidate_smooth: usize,
    pub not_smooth: usize,
    pub not_manifold: usize,
    pub unresolved: usize,
    /// Distinct normalized weights with verdict CANDIDATE_SMOOTH, as `r:a1,...,ar`.
    pub candidates: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sweep {
    pub reports: Vec<Report>,
    pub summary: SweepSummary,
}

/// The weights a sweep visits: every nonzero dominant weight of height at most
/// `height_max` for each rank, then `extra` entries not already listed.
pub fn sweep_items(
    r_min: usize,
    r_max: usize,
    height_max: i64,
    extra: &[(usize, Vec<i64>)],
) -> Vec<(usize, Weight)> {
    let mut items: Vec<(usize, Weight)> = (r_min..=r_max)
        .flat_map(|r| {
            dominant_by_height(r, height_max)
                .into_iter()
                .map(move |w| (r, w))
        })
        .collect();
    for (r, a) in extra {
        let w = Weight::from_fundamental(a);
        if !items.iter().any(|(r2, w2)| r2 == r && *w2 == w) {
            items.push((*r, w));
        }
    }
    items
}

/// Classifies every item of [`sweep_items`] in parallel; rows keep item order.
pub fn sweep(
    r_min: usize,
    r_max: usize,
    height_max: i64,
    extra: &[(usize, Vec<i64>)],
    budget: u64,
) -> Result<Sweep> {
    if r_min < 2 {
        return Err(Error::InvalidRank(r_min));
    }
    for (r, a) in extra {
        if *r < 2 || a.len() != *r || a.iter().any(|&x| x < 0) || a.iter().all(|&x| x == 0) {
            return Err(Error::InvalidWeight(format!(
                "extra weight {a:?} at rank {r}"
            )));
        }
    }
    let items = sweep_items(r_min, r_max, height_max, extra);
    let reports = items
        .into_par_iter()
        .map(|(r, w)| classify_with_budget(r, &w, budget))
        .collect::<Result<Vec<_>>>()?;
    let count = |v: Verdict| reports.iter().filter(|rep| rep.verdict == v).count();
    let mut candidates: Vec<String> = reports
        .iter()
        .filter(|rep| rep.verdict == Verdict::CandidateSmooth)
        .map(|rep| format!("{}:{}", rep.rank, fmt_coords(&rep.normalized)))
        .collect();
    candidates.dedup();
    let mut seen = std::collections::HashSet::new();
    candidates.retain(|c| seen.insert(c.clone()));
    let summary = SweepSummary {
        rows: reports.len(),
        candidate_smooth: count(Verdict::CandidateSmooth),
        not_smooth: count(Verdict::NotSmooth),
        not_manifold: count(Verdict::NotManifold),
        unresolved: count(Verdict::Unresolved),
        candidates,
    };
    Ok(Sweep { reports, summary })
}
