//! Non-smoothness and non-manifold certificates: a subset `Omega` of the extreme
//! orbit spanning a hyperplane `H` together with the counting inequality.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::duality::{delta, two_lambda_outside};
use crate::error::{Error, Result};
use crate::hyperplane::{roots_outside, weighted_count_outside, Hyperplane};
use crate::linalg::{rank, EchelonBasis};
use crate::orbit::{orbit, orbit_size, weight_system, WeightSystem};
use crate::weights::{corank2_connected_subsets, root_datum, Root, Weight};

pub const DEFAULT_BUDGET: u64 = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum CertificateKind {
    Nosm,
    Nom,
}

/// Per-condition outcome for a candidate `Omega`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionReport {
    pub subset_of_orbit: bool,
    pub codim1_span: bool,
    pub span_dimension: usize,
    pub diff_free: bool,
    pub sum_free: bool,
    pub two_lambda_ok: bool,
    pub delta: u8,
}

impl ConditionReport {
    /// All conditions demanded for the given realness index hold.
    pub fn passes(&self) -> bool {
        self.subset_of_orbit
            && self.codim1_span
            && self.diff_free
            && (self.delta == 2 || (self.sum_free && self.two_lambda_ok))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counts {
    pub orbit_size: u128,
    pub lambda_on: u128,
    pub lambda_outside: u128,
    pub inn_outside_weighted: u128,
    pub roots_outside: usize,
}

impl Counts {
    pub fn compute(ws: &WeightSystem, h: &Hyperplane) -> Self {
        let lambda = ws.highest();
        let orbit_size = orbit_size(lambda);
        let lambda_on = h.orbit_count_on(lambda);
        Self {
            orbit_size,
            lambda_on,
            lambda_outside: orbit_size - lambda_on,
            inn_outside_weighted: weighted_count_outside(ws, h),
            roots_outside: roots_outside(h),
        }
    }

    /// `delta * ||Inn(L) \ H|| - (|Delta \ H| + 6)`.
    pub fn nosm_margin(&self, delta: u8) -> i128 {
        i128::from(delta) * self.inn_outside_weighted as i128 - (self.roots_outside as i128 + 6)
    }

    /// `delta * |L \ H| - (|Delta \ H| + 2)`; zero in the equality case.
    pub fn nom_gap(&self, delta: u8) -> i128 {
        i128::from(delta) * self.lambda_outside as i128 - (self.roots_outside as i128 + 2)
    }
}

/// The first condition a candidate fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "reason", rename_all = "snake_case")]
pub enum Rejection {
    NotInOrbit { weight: Weight },
    DifferenceIsRoot { a: Weight, b: Weight },
    SumIsRoot { a: Weight, b: Weight },
    TwoLambdaInRootSums,
    CountTooSmall { margin: i128 },
    InnNotOrbit,
    RootNormal,
    EqualityFails { gap: i128 },
}

impl fmt::Display for Rejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rejection::NotInOrbit { weight } => write!(f, "{weight:?} is not in the orbit"),
            Rejection::DifferenceIsRoot { a, b } => write!(f, "{a:?} - {b:?} is a root"),
            Rejection::SumIsRoot { a, b } => write!(f, "{a:?} + {b:?} is a root"),
            Rejection::TwoLambdaInRootSums => write!(f, "2 lambda lies in Delta + Delta"),
            Rejection::CountTooSmall { margin } => {
                write!(f, "counting margin {margin} is not positive")
            }
            Rejection::InnNotOrbit => write!(f, "Inn(L) is larger than L"),
            Rejection::RootNormal => write!(f, "H^perp contains a root"),
            Rejection::EqualityFails { gap } => write!(f, "equality fails by {gap}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub lambda: Weight,
    pub delta: u8,
    pub omega: Vec<Weight>,
    pub hyperplane: Hyperplane,
    pub counts: Counts,
    pub kind: CertificateKind,
    pub margin: i128,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Evaluation {
    Certified(Box<Certificate>),
    Rejected(Rejection),
}

impl Evaluation {
    pub fn certificate(self) -> Option<Certificate> {
        match self {
            Evaluation::Certified(c) => Some(*c),
            Evaluation::Rejected(_) => None,
        }
    }
}

fn check_highest(lambda: &Weight) -> Result<()> {
    if !lambda.is_lattice() || !lambda.is_dominant() || lambda.is_zero() {
        return Err(Error::InvalidWeight(format!(
            "{:?} must be a nonzero dominant lattice point",
            lambda.coords()
        )));
    }
    Ok(())
}

fn first_pair(
    omega: &[Weight],
    diagonal: bool,
    hit: impl Fn(&Weight, &Weight) -> bool,
) -> Option<(Weight, Weight)> {
    for (i, a) in omega.iter().enumerate() {
        let rest = if diagonal {
            &omega[i..]
        } else {
            &omega[i + 1..]
        };
        for b in rest {
            if hit(a, b) {
                return Some((a.clone(), b.clone()));
            }
        }
    }
    None
}

fn first_difference_root(omega: &[Weight]) -> Option<(Weight, Weight)> {
    first_pair(omega, false, |a, b| (a - b).is_root())
}

fn first_sum_root(omega: &[Weight]) -> Option<(Weight, Weight)> {
    first_pair(omega, true, |a, b| (a + b).is_root())
}

pub fn omega_conditions(lambda: &Weight, omega: &[Weight]) -> Result<ConditionReport> {
    check_highest(lambda)?;
    let dom = lambda.dominant();
    let subset_of_orbit = omega
        .iter()
        .all(|w| w.n() == lambda.n() && w.dominant() == dom);
    let rows: Vec<Vec<i64>> = omega.iter().map(|w| w.coords().to_vec()).collect();
    let span_dimension = if subset_of_orbit { rank(&rows) } else { 0 };
    Ok(ConditionReport {
        subset_of_orbit,
        codim1_span: subset_of_orbit && span_dimension == lambda.n() - 2,
        span_dimension,
        diff_free: first_difference_root(omega).is_none(),
        sum_free: first_sum_root(omega).is_none(),
        two_lambda_ok: two_lambda_outside(lambda)?,
        delta: delta(lambda),
    })
}

/// Shared checks of both corollaries; returns the hyperplane or the first failure.
fn common_checks(
    lambda: &Weight,
    omega: &[Weight],
    d: u8,
) -> Result<std::result::Result<Hyperplane, Rejection>> {
    check_highest(lambda)?;
    let dom = lambda.dominant();
    if let Some(w) = omega
        .iter()
        .find(|w| w.n() != lambda.n() || w.dominant() != dom)
    {
        return Ok(Err(Rejection::NotInOrbit { weight: w.clone() }));
    }
    let h = Hyperplane::from_span(omega)?;
    if let Some((a, b)) = first_difference_root(omega) {
        return Ok(Err(Rejection::DifferenceIsRoot { a, b }));
    }
    if d == 1 {
        if let Some((a, b)) = first_sum_root(omega) {
            return Ok(Err(Rejection::SumIsRoot { a, b }));
        }
        if !two_lambda_outside(lambda)? {
            return Ok(Err(Rejection::TwoLambdaInRootSums));
        }
    }
    Ok(Ok(h))
}

/// Checks the non-smoothness criterion `delta ||Inn(L) \ H|| > |Delta \ H| + 6`.
pub fn evaluate_nosm(lambda: &Weight, omega: &[Weight]) -> Result<Evaluation> {
    let d = delta(lambda);
    let h = match common_checks(lambda, omega, d)? {
        Ok(h) => h,
        Err(rej) => return Ok(Evaluation::Rejected(rej)),
    };
    let ws = weight_system(lambda)?;
    let counts = Counts::compute(&ws, &h);
    let margin = counts.nosm_margin(d);
    if margin <= 0 {
        return Ok(Evaluation::Rejected(Rejection::CountTooSmall { margin }));
    }
    Ok(Evaluation::Certified(Box::new(Certificate {
        lambda: lambda.clone(),
        delta: d,
        omega: omega.to_vec(),
        hyperplane: h,
        counts,
        kind: CertificateKind::Nosm,
        margin,
    })))
}

/// Checks the non-manifold criterion: minuscule `lambda`, no root orthogonal to `H`,
/// and `delta |L \ H| = |Delta \ H| + 2`.
pub fn evaluate_nom(lambda: &Weight, omega: &[Weight]) -> Result<Evaluation> {
    let d = delta(lambda);
    let h = match common_checks(lambda, omega, d)? {
        Ok(h) => h,
        Err(rej) => return Ok(Evaluation::Rejected(rej)),
    };
    let ws = weight_system(lambda)?;
    if !ws.is_minuscule() {
        return Ok(Evaluation::Rejected(Rejection::InnNotOrbit));
    }
    if h.orthogonal_root().is_some() {
        return Ok(Evaluation::Rejected(Rejection::RootNormal));
    }
    let counts = Counts::compute(&ws, &h);
    let gap = counts.nom_gap(d);
    if gap != 0 {
        return Ok(Evaluation::Rejected(Rejection::EqualityFails { gap }));
    }
    Ok(Evaluation::Certified(Box::new(Certificate {
        lambda: lambda.clone(),
        delta: d,
        omega: omega.to_vec(),
        hyperplane: h,
        counts,
        kind: CertificateKind::Nom,
        margin: 0,
    })))
}

impl Certificate {
    /// Re-derives every claim from scratch by explicit enumeration.
    pub fn verify(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::Verification(msg));
        check_highest(&self.lambda)?;
        let n = self.lambda.n();
        let d = root_datum(n - 1)?;
        let elements: HashSet<Weight> = orbit(&self.lambda).elements.into_iter().collect();
        if let Some(w) = self.omega.iter().find(|w| !elements.contains(w)) {
            return fail(format!("{w:?} is not in the orbit"));
        }
        if Hyperplane::from_span(&self.omega)? != self.hyperplane {
            return fail("omega does not span the recorded hyperplane".into());
        }
        if delta(&self.lambda) != self.delta {
            return fail("realness index mismatch".into());
        }
        let roots: HashSet<Weight> = d.roots().iter().map(|r| r.to_weight(n)).collect();
        for (i, a) in self.omega.iter().enumerate() {
            for (j, b) in self.omega.iter().enumerate() {
                if i != j && roots.contains(&(a - b)) {
                    return fail(format!("{a:?} - {b:?} is a root"));
                }
                if self.delta == 1 && roots.contains(&(a + b)) {
                    return fail(format!("{a:?} + {b:?} is a root"));
                }
            }
        }
        if self.delta == 1 {
            let twice = self.lambda.scaled_by(2);
            let hit = roots.contains(&twice) || roots.iter().any(|a| roots.contains(&(&twice - a)));
            if hit {
                return fail("2 lambda lies in Delta or Delta + Delta".into());
            }
        }
        let h = &self.hyperplane;
        let lambda_outside = elements.iter().filter(|w| !h.contains(w)).count() as u128;
        let ws = weight_system(&self.lambda)?;
        let inn_outside: u128 = ws
            .weights()
            .iter()
            .filter(|(w, _)| !h.contains(w))
            .map(|(_, m)| u128::from(*m))
            .sum();
        let roots_off = roots.iter().filter(|a| !h.contains(a)).count();
        let recount = Counts {
            orbit_size: elements.len() as u128,
            lambda_on: elements.len() as u128 - lambda_outside,
            lambda_outside,
            inn_outside_weighted: inn_outside,
            roots_outside: roots_off,
        };
        if recount != self.counts {
            return fail(format!(
                "recount {recount:?} differs from {:?}",
                self.counts
            ));
        }
        match self.kind {
            CertificateKind::Nosm => {
                let margin = recount.nosm_margin(self.delta);
                if margin != self.margin || margin <= 0 {
                    return fail(format!("margin {margin} (recorded {})", self.margin));
                }
            }
            CertificateKind::Nom => {
                if ws.weights().len() != elements.len() {
                    return fail("Inn(L) is larger than L".into());
                }
                let normal = h.normal().to_vec();
                if roots
                    .iter()
                    .any(|a| rank(&[a.coords().to_vec(), normal.clone()]) == 1)
                {
                    return fail("a root is orthogonal to H".into());
                }
                if recount.nom_gap(self.delta) != 0 || self.margin != 0 {
                    return fail("equality case fails".into());
                }
            }
        }
        Ok(())
    }
}

/// The four explicit constructions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Construction {
    Alg,
    All,
    Thi,
    Ths,
}

impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Construction::Alg => "alg",
            Construction::All => "all",
            Construction::Thi => "thi",
            Construction::Ths => "ths",
        })
    }
}

impl FromStr for Construction {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "alg" => Ok(Construction::Alg),
            "all" => Ok(Construction::All),
            "thi" => Ok(Construction::Thi),
            "ths" => Ok(Construction::Ths),
            other => Err(Error::Parse(format!("unknown construction {other:?}"))),
        }
    }
}

impl Construction {
    /// The highest weight the construction is built for.
    pub fn highest_weight(self, r: usize) -> Result<Weight> {
        self.check_rank(r)?;
        let mut a = vec![0i64; r];
        match self {
            Construction::Alg => {
                a[1] += 1;
                a[r - 1] += 1;
            }
            Construction::All => a = vec![1, 1, 1],
            Construction::Thi | Construction::Ths => a[2] = 1,
        }
        Ok(Weight::from_fundamental(&a))
    }

    fn check_rank(self, r: usize) -> Result<()> {
        let ok = match self {
            Construction::Alg => r >= 3,
            Construction::All => r == 3,
            Construction::Thi => r == 6,
            Construction::Ths => r == 7,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::NotApplicable(format!(
                "construction {self} at rank {r}"
            )))
        }
    }

    /// The construction matching `lambda`, if any.
    pub fn for_weight(lambda: &Weight) -> Option<Self> {
        let r = lambda.n() - 1;
        [
            Construction::Alg,
            Construction::All,
            Construction::Thi,
            Construction::Ths,
        ]
        .into_iter()
        .find(|k| k.highest_weight(r).is_ok_and(|w| w == *lambda))
    }
}

/// The explicit `Omega` of each construction, in scaled coordinates.
pub fn paper_omega(kind: Construction, r: usize) -> Result<Vec<Weight>> {
    kind.check_rank(r)?;
    let n = r + 1;
    Ok(match kind {
        Construction::Alg => (2..=r)
            .map(|i| Weight::pair_minus_one(n, i - 1, i, i + 1))
            .collect(),
        Construction::All => vec![
            Weight::from_scaled(vec![6, 2, -2, -6])?,
            Weight::from_scaled(vec![6, -6, -2, 2])?,
        ],
        Construction::Thi => [[1, 2, 5], [3, 4, 5], [1, 4, 6], [2, 3, 6], [5, 6, 7]]
            .iter()
            .map(|s| Weight::subset_sum(n, s))
            .collect(),
        Construction::Ths => [
            [1, 2, 7],
            [3, 4, 7],
            [5, 6, 7],
            [4, 5, 8],
            [1, 6, 8],
            [2, 3, 8],
        ]
        .iter()
        .map(|s| Weight::subset_sum(n, s))
        .collect(),
    })
}

/// Where in the fixed search order a hyperplane came from.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "stage", rename_all = "snake_case")]
pub enum SearchStage {
    Explicit { construction: Construction },
    Corank2 { subset: String },
    Ratio { c: String },
    Normal,
}

impl fmt::Display for SearchStage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SearchStage::Explicit { construction } => write!(f, "explicit:{construction}"),
            SearchStage::Corank2 { subset } => write!(f, "span:{subset}"),
            SearchStage::Ratio { c } => write!(f, "ratio:{c}"),
            SearchStage::Normal => f.write_str("normal"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchOutcome {
    pub certificate: Option<Certificate>,
    pub stage: Option<SearchStage>,
    pub nodes: u64,
    pub hyperplanes_tried: usize,
    pub budget_exhausted: bool,
}

/// Sorted zero-sum primitive vectors with entries in `-bound..=bound`, one per
/// hyperplane class under permutations and `v -> -reverse(v)`.
fn small_normals(n: usize, bound: i64) -> Vec<Vec<i64>> {
    fn rec(n: usize, hi: i64, bound: i64, prefix: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if prefix.len() == n {
            if prefix.iter().sum::<i64>() == 0 {
                out.push(prefix.clone());
            }
            return;
        }
        let left = (n - prefix.len()) as i64;
        let sum: i64 = prefix.iter().sum();
        for v in (-bound..=hi).rev() {
            // remaining entries are at most v and at least -bound
            if sum + v * left < 0 {
                break;
            }
            if sum + v + (left - 1) * (-bound) > 0 {
                continue;
            }
            prefix.push(v);
            rec(n, v, bound, prefix, out);
            prefix.pop();
        }
    }
    let mut all = Vec::new();
    rec(n, bound, bound, &mut Vec::new(), &mut all);
    all.retain(|v| {
        use num_integer::Integer;
        let g = v.iter().fold(0i64, |g, x| g.gcd(x));
        let mirror: Vec<i64> = v.iter().rev().map(|x| -x).collect();
        g == 1 && *v >= mirror
    });
    all
}

/// Candidate hyperplanes in the fixed search order, without repetitions.
pub fn candidate_hyperplanes(lambda: &Weight) -> Vec<(Hyperplane, SearchStage)> {
    let n = lambda.n();
    let r = n - 1;
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let mut push = |h: Hyperplane, stage: SearchStage| {
        if seen.insert(h.clone()) {
            out.push((h, stage));
        }
    };
    for sub in corank2_connected_subsets(r) {
        let mut vecs = vec![lambda.clone()];
        vecs.extend(sub.indices().iter().map(|&i| Root::simple(i).to_weight(n)));
        if let Ok(h) = Hyperplane::from_span(&vecs) {
            push(
                h,
                SearchStage::Corank2 {
                    subset: sub.to_string(),
                },
            );
        }
    }
    let values: Vec<i64> = lambda
        .value_multiplicities()
        .iter()
        .map(|&(v, _)| v)
        .collect();
    for &a in values.iter().filter(|&&a| a != 0) {
        for &b in &values {
            let c = Ratio::new(b, a);
            if let Ok(h) = Hyperplane::from_pq(n, 1, 2, c) {
                push(h, SearchStage::Ratio { c: c.to_string() });
            }
        }
    }
    for bound in [2, 3] {
        for v in small_normals(n, bound) {
            if let Ok(h) = Hyperplane::from_normal(&v) {
                push(h, SearchStage::Normal);
            }
        }
    }
    out
}

enum Dfs {
    Found(Vec<usize>),
    NotFound,
    Exhausted,
}

/// Searches for `need` linearly independent, pairwise compatible candidates.
struct CliqueSearch<'a> {
    cands: &'a [Weight],
    compat: Vec<Vec<u64>>,
    need: usize,
    nodes: u64,
    budget: u64,
}

impl<'a> CliqueSearch<'a> {
    fn new(cands: &'a [Weight], need: usize, sum_free: bool, nodes: u64, budget: u64) -> Self {
        let words = cands.len().div_ceil(64);
        let mut compat = vec![vec![0u64; words]; cands.len()];
        for i in 0..cands.len() {
            for j in i + 1..cands.len() {
                let ok = !(&cands[i] - &cands[j]).is_root()
                    && !(sum_free && (&cands[i] + &cands[j]).is_root());
                if ok {
                    compat[i][j / 64] |= 1 << (j % 64);
                    compat[j][i / 64] |= 1 << (i % 64);
                }
            }
        }
        Self {
            cands,
            compat,
            need,
            nodes,
            budget,
        }
    }

    fn run(&mut self, allowed: Vec<u64>) -> Dfs {
        let mut chosen = Vec::new();
        self.dfs(&mut chosen, &EchelonBasis::new(), &allowed)
    }

    fn dfs(&mut self, chosen: &mut Vec<usize>, basis: &EchelonBasis, allowed: &[u64]) -> Dfs {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Dfs::Exhausted;
        }
        if chosen.len() == self.need {
            return Dfs::Found(chosen.clone());
        }
        let members: Vec<usize> = (0..self.cands.len())
            .filter(|&i| allowed[i / 64] >> (i % 64) & 1 == 1)
            .collect();
        for (pos, &i) in members.iter().enumerate() {
            if members.len() - pos < self.need - chosen.len() {
                break;
            }
            if !basis.is_independent(self.cands[i].coords()) {
                continue;
            }
            let mut next_basis = basis.clone();
            next_basis.insert(self.cands[i].coords());
            let mut next: Vec<u64> = allowed
                .iter()
                .zip(&self.compat[i])
                .map(|(a, b)| a & b)
                .collect();
            // only later candidates, so each set is visited once
            for j in 0..=i {
                next[j / 64] &= !(1 << (j % 64));
            }
            chosen.push(i);
            match self.dfs(chosen, &next_basis, &next) {
                Dfs::NotFound => {}
                other => return other,
            }
            chosen.pop();
        }
        Dfs::NotFound
    }
}

/// Deterministic certificate search: the explicit construction when it applies,
/// then every hyperplane of [`candidate_hyperplanes`] with backtracking over
/// `Omega ⊆ L ∩ H`. `budget` bounds the number of backtracking nodes.
pub fn search_certificate(lambda: &Weight, budget: u64) -> Result<SearchOutcome> {
    check_highest(lambda)?;
    let n = lambda.n();
    let r = n - 1;
    let mut outcome = SearchOutcome {
        certificate: None,
        stage: None,
        nodes: 0,
        hyperplanes_tried: 0,
        budget_exhausted: false,
    };
    if let Some(kind) = Construction::for_weight(lambda) {
        outcome.hyperplanes_tried += 1;
        if let Evaluation::Certified(c) = evaluate_nosm(lambda, &paper_omega(kind, r)?)? {
            outcome.certificate = Some(*c);
            outcome.stage = Some(SearchStage::Explicit { construction: kind });
            return Ok(outcome);
        }
    }
    let d = delta(lambda);
    if d == 1 && !two_lambda_outside(lambda)? {
        return Ok(outcome);
    }
    let ws = weight_system(lambda)?;
    let elements = orbit(lambda).elements;
    let need = r - 1;
    for (h, stage) in candidate_hyperplanes(lambda) {
        outcome.hyperplanes_tried += 1;
        if Counts::compute(&ws, &h).nosm_margin(d) <= 0 {
            continue;
        }
        let on: Vec<Weight> = elements
            .iter()
            .filter(|w| h.contains(w) && !(d == 1 && w.scaled_by(2).is_root()))
            .cloned()
            .collect();
        if on.len() < need {
            continue;
        }
        let mut search = CliqueSearch::new(&on, need, d == 1, outcome.nodes, budget);
        let mut allowed = vec![0u64; on.len().div_ceil(64)];
        for i in 0..on.len() {
            allowed[i / 64] |= 1 << (i % 64);
        }
        let result = search.run(allowed);
        outcome.nodes = search.nodes;
        match result {
            Dfs::Found(idx) => {
                let omega: Vec<Weight> = idx.iter().map(|&i| on[i].clone()).collect();
                if let Evaluation::Certified(c) = evaluate_nosm(lambda, &omega)? {
                    outcome.certificate = Some(*c);
                    outcome.stage = Some(stage);
                    return Ok(outcome);
                }
            }
            Dfs::NotFound => {}
            Dfs::Exhausted => {
                outcome.budget_exhausted = true;
                return Ok(outcome);
            }
        }
    }
    Ok(outcome)
}

/// One equality instance of the non-manifold criterion.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NomFinding {
    pub rank: usize,
    pub lambda: Vec<i64>,
    pub certificate: Certificate,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct NomSweep {
    pub weights_examined: usize,
    pub minuscule_weights: usize,
    pub omegas_examined: usize,
    pub findings: Vec<NomFinding>,
}

fn combinations(len: usize, k: usize, f: &mut impl FnMut(&[usize])) {
    fn rec(start: usize, len: usize, k: usize, acc: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if acc.len() == k {
            f(acc);
            return;
        }
        for i in start..len {
            acc.push(i);
            rec(i + 1, len, k, acc, f);
            acc.pop();
        }
    }
    rec(0, len, k, &mut Vec::new(), f);
}

/// Exhaustive search for the equality case over all dominant weights with
/// fundamental coordinates in `0..=coord_bound` and every independent
/// `(r-1)`-subset of the orbit.
pub fn nom_sweep(ranks: std::ops::RangeInclusive<usize>, coord_bound: i64) -> Result<NomSweep> {
    let mut sweep = NomSweep::default();
    for r in ranks {
        let total = (coord_bound + 1).pow(r as u32);
        for code in 1..total {
            let mut a = vec![0i64; r];
            let mut c = code;
            for slot in a.iter_mut() {
                *slot = c % (coord_bound + 1);
                c /= coord_bound + 1;
            }
            let lambda = Weight::from_fundamental(&a);
            sweep.weights_examined += 1;
            if !weight_system(&lambda)?.is_minuscule() {
                continue;
            }
            sweep.minuscule_weights += 1;
            let elements = orbit(&lambda).elements;
            let mut error = None;
            combinations(elements.len(), r - 1, &mut |idx| {
                if error.is_some() {
                    return;
                }
                let omega: Vec<Weight> = idx.iter().map(|&i| elements[i].clone()).collect();
                let rows: Vec<Vec<i64>> = omega.iter().map(|w| w.coords().to_vec()).collect();
                if rank(&rows) != r - 1 {
                    return;
                }
                sweep.omegas_examined += 1;
                match evaluate_nom(&lambda, &omega) {
                    Ok(Evaluation::Certified(c)) => sweep.findings.push(NomFinding {
                        rank: r,
                        lambda: a.clone(),
                        certificate: *c,
                    }),
                    Ok(Evaluation::Rejected(_)) => {}
                    Err(e) => error = Some(e),
                }
            });
            if let Some(e) = error {
                return Err(e);
            }
        }
    }
    Ok(sweep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weights::RootDatum;

    fn certify(kind: Construction, r: usize) -> Certificate {
        let lambda = kind.highest_weight(r).unwrap();
        let omega = paper_omega(kind, r).unwrap();
        evaluate_nosm(&lambda, &omega)
            .unwrap()
            .certificate()
            .unwrap()
    }

    #[test]
    fn thi_numbers() {
        let c = certify(Construction::Thi, 6);
        assert_eq!(c.counts.orbit_size, 35);
        assert_eq!(c.counts.lambda_on, 13);
        assert_eq!(c.counts.lambda_outside, 22);
        assert_eq!(c.counts.roots_outside, 32);
        assert_eq!(c.margin, 6);
        assert_eq!(
            c.hyperplane,
            Hyperplane::from_normal(&[1, -1, 1, -1, 0, 0, 0]).unwrap()
        );
        c.verify().unwrap();
    }

    #[test]
    fn ths_numbers() {
        let c = certify(Construction::Ths, 7);
        assert_eq!(c.counts.orbit_size, 56);
        assert_eq!(c.counts.lambda_on, 18);
        assert_eq!(c.counts.lambda_outside, 38);
        assert!(76 > c.counts.roots_outside + 6);
        c.verify().unwrap();
    }

    #[test]
    fn all_numbers() {
        let c = certify(Construction::All, 3);
        assert_eq!(c.delta, 1);
        assert_eq!(c.counts.orbit_size, 24);
        assert_eq!(c.counts.lambda_on, 4);
        assert_eq!(c.counts.lambda_outside, 20);
        assert_eq!(
            c.hyperplane,
            Hyperplane::from_normal(&[1, 0, 3, 0]).unwrap()
        );
        assert!(c.margin >= 2);
        c.verify().unwrap();
    }

    #[test]
    fn alg_for_all_ranks() {
        for r in 3..=8 {
            let c = certify(Construction::Alg, r);
            assert_eq!(c.delta, 2);
            c.verify().unwrap();
        }
    }

    #[test]
    fn condition_reports() {
        let lambda = Weight::fundamental(7, 3);
        let rep = omega_conditions(&lambda, &paper_omega(Construction::Thi, 6).unwrap()).unwrap();
        assert!(rep.passes());
        let bad = [
            Weight::subset_sum(7, &[1, 2, 3]),
            Weight::subset_sum(7, &[1, 2, 4]),
        ];
        let rep = omega_conditions(&lambda, &bad).unwrap();
        assert!(!rep.diff_free);
        assert!(!rep.codim1_span);
        let rep = omega_conditions(
            &Weight::from_fundamental(&[1, 1, 1]),
            &paper_omega(Construction::All, 3).unwrap(),
        )
        .unwrap();
        assert!(rep.diff_free && rep.sum_free && rep.two_lambda_ok);
    }

    #[test]
    fn rejections() {
        let lambda = Weight::fundamental(7, 3);
        let omega = [Weight::subset_sum(7, &[1, 2, 3]), Weight::fundamental(7, 1)];
        assert!(matches!(
            evaluate_nosm(&lambda, &omega).unwrap(),
            Evaluation::Rejected(Rejection::NotInOrbit { .. })
        ));
        let short = [Weight::subset_sum(7, &[1, 2, 3])];
        assert!(matches!(
            evaluate_nosm(&lambda, &short),
            Err(Error::WrongCodimension {
                expected: 5,
                actual: 1
            })
        ));
        let ad = RootDatum::new(3).unwrap().adjoint();
        let omega = [Root::new(0, 1).to_weight(4), Root::new(2, 3).to_weight(4)];
        assert!(matches!(
            evaluate_nom(&ad, &omega).unwrap(),
            Evaluation::Rejected(Rejection::TwoLambdaInRootSums)
        ));
        let two_phi1 = Weight::from_fundamental(&[2, 0, 0]);
        let omega = [
            Weight::subset_sum(4, &[1]).scaled_by(2),
            Weight::subset_sum(4, &[2]).scaled_by(2),
        ];
        assert!(matches!(
            evaluate_nom(&two_phi1, &omega).unwrap(),
            Evaluation::Rejected(Rejection::InnNotOrbit)
        ));
        let phi2 = Weight::fundamental(3, 2);
        let omega = [Weight::subset_sum(3, &[1, 2])];
        assert!(matches!(
            evaluate_nom(&phi2, &omega).unwrap(),
            Evaluation::Rejected(Rejection::RootNormal)
        ));
    }

    #[test]
    fn explicit_omega_rank_checks() {
        assert!(matches!(
            paper_omega(Construction::Thi, 7),
            Err(Error::NotApplicable(_))
        ));
        assert!(paper_omega(Construction::Alg, 2).is_err());
        assert_eq!(paper_omega(Construction::Thi, 6).unwrap().len(), 5);
        assert_eq!(paper_omega(Construction::Ths, 7).unwrap().len(), 6);
        assert_eq!(paper_omega(Construction::All, 3).unwrap().len(), 2);
    }

    #[test]
    fn search_examples() {
        let lambda = Weight::from_fundamental(&[0, 1, 0, 1]);
        let out = search_certificate(&lambda, DEFAULT_BUDGET).unwrap();
        assert_eq!(
            out.stage,
            Some(SearchStage::Explicit {
                construction: Construction::Alg
            })
        );
        out.certificate.unwrap().verify().unwrap();

        let out = search_certificate(&Weight::fundamental(3, 1), DEFAULT_BUDGET).unwrap();
        assert!(out.certificate.is_none());
        assert!(!out.budget_exhausted);

        let out = search_certificate(&Weight::fundamental(9, 4), DEFAULT_BUDGET).unwrap();
        let c = out.certificate.unwrap();
        assert_eq!(
            c.hyperplane,
            Hyperplane::from_normal(&[0, 0, 0, 0, 0, 0, 0, 1, -1]).unwrap()
        );
        assert_eq!(c.counts.lambda_outside, 70);
        c.verify().unwrap();
    }

    #[test]
    fn search_is_deterministic() {
        let lambda = Weight::from_fundamental(&[1, 1, 0, 0]);
        let a = search_certificate(&lambda, DEFAULT_BUDGET).unwrap();
        let b = search_certificate(&lambda, DEFAULT_BUDGET).unwrap();
        assert_eq!(a, b);
        assert!(a.certificate.is_some());
    }

    #[test]
    fn tampered_certificates_fail() {
        let mut c = certify(Construction::Thi, 6);
        c.margin += 1;
        assert!(c.verify().is_err());
        let mut c = certify(Construction::Thi, 6);
        c.counts.lambda_outside -= 1;
        assert!(c.verify().is_err());
    }

    #[test]
    fn small_normal_family() {
        let v = small_normals(3, 2);
        assert!(v.contains(&vec![1, 0, -1]));
        assert!(v.contains(&vec![2, -1, -1]));
        assert!(!v.contains(&vec![1, 1, -2]));
        assert!(v.iter().all(|x| x.iter().sum::<i64>() == 0));
    }

    #[test]
    fn nom_sweep_small_ranks() {
        let sweep = nom_sweep(2..=3, 2).unwrap();
        assert_eq!(sweep.weights_examined, 8 + 26);
        assert_eq!(sweep.minuscule_weights, 2 + 3);
        for f in &sweep.findings {
            f.certificate.verify().unwrap();
        }
    }
}
