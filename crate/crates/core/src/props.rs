//! Exhaustive checks of the orbit-counting inequalities over bounded ranges.
//!
//! Every quantity below is W-invariant, so it suffices to enumerate dominant
//! vectors `x`. The hyperplanes are `H_c = {y : y_q = c y_p}`; the count
//! `|W mu ∩ H_c|` does not depend on the pair `(p, q)`, and it changes with `c`
//! only when `c` becomes a ratio of two coordinate values of some `mu` in play.
//! Checking every such ratio together with one generic `c` therefore covers
//! all real `c`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::duality::is_self_dual;
use crate::error::{Error, Result};
use crate::hyperplane::{inn_count_outside, Hyperplane};
use crate::multinomial::{verify_cmb1_with, verify_cmb2_with};
use crate::orbit::{dominant_inn, orbit_size};
use crate::weights::{corank2_connected_subsets, Root, SimpleSubset, Weight};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Prop {
    Cmb1,
    Cmb2,
    Est,
    La2,
    Elst,
    Esn,
    Es2n,
    Ampl,
    Eson,
    Lah,
    Lah1,
}

impl Prop {
    pub const ALL: [Prop; 11] = [
        Prop::Cmb1,
        Prop::Cmb2,
        Prop::Est,
        Prop::La2,
        Prop::Elst,
        Prop::Esn,
        Prop::Es2n,
        Prop::Ampl,
        Prop::Eson,
        Prop::Lah,
        Prop::Lah1,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Prop::Cmb1 => "cmb1",
            Prop::Cmb2 => "cmb2",
            Prop::Est => "est",
            Prop::La2 => "la2",
            Prop::Elst => "elst",
            Prop::Esn => "esn",
            Prop::Es2n => "es2n",
            Prop::Ampl => "ampl",
            Prop::Eson => "eson",
            Prop::Lah => "lah",
            Prop::Lah1 => "lah1",
        }
    }
}

impl fmt::Display for Prop {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Prop {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Prop::ALL
            .into_iter()
            .find(|p| p.name() == s.trim())
            .ok_or_else(|| Error::Parse(format!("unknown proposition {s:?}")))
    }
}

/// Enumeration bounds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bounds {
    /// Largest ambient dimension `n`.
    pub max_n: usize,
    /// Largest fundamental coordinate of an enumerated `x`.
    pub coord_bound: i64,
    /// Largest height `sum a_i` of a highest weight in the rank-by-rank scans.
    pub height_bound: i64,
}

impl Default for Bounds {
    fn default() -> Self {
        Self {
            max_n: 7,
            coord_bound: 3,
            height_bound: 4,
        }
    }
}

/// A violated claim.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CounterexampleRecord {
    pub prop: Prop,
    pub n: usize,
    /// Fundamental coordinates of `x` (or of the highest weight).
    pub fundamental: Vec<i64>,
    /// n-scaled coordinates.
    pub scaled: Vec<i64>,
    /// Hyperplane parameters, e.g. `c=1/2`, `c=generic` or `span(1,2,3)`.
    pub hyperplane: String,
    pub observed: u128,
    pub claim: String,
    /// Equality patterns that `x` matches.
    pub cases: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropResult {
    pub prop: Prop,
    /// Instances where the hypotheses held and the claim was tested.
    pub checked: u64,
    pub counterexamples: Vec<CounterexampleRecord>,
}

/// Nonzero dominant weights of `A_{n-1}` with fundamental coordinates in `0..=bound`,
/// in lexicographic order of the coordinate vectors.
pub fn dominant_box(n: usize, bound: i64) -> Vec<Weight> {
    let r = n - 1;
    let base = bound + 1;
    let total = base.pow(r as u32);
    (1..total)
        .map(|code| {
            let mut a = vec![0i64; r];
            let mut c = code;
            for slot in a.iter_mut().rev() {
                *slot = c % base;
                c /= base;
            }
            Weight::from_fundamental(&a)
        })
        .collect()
}

/// Dominant weights of rank `r` with `sum a_i <= height`, nonzero, lexicographic in `a`.
pub fn dominant_by_height(r: usize, height: i64) -> Vec<Weight> {
    fn rec(r: usize, left: i64, prefix: &mut Vec<i64>, out: &mut Vec<Weight>) {
        if prefix.len() == r {
            if prefix.iter().any(|&a| a != 0) {
                out.push(Weight::from_fundamental(prefix));
            }
            return;
        }
        for a in 0..=left {
            prefix.push(a);
            rec(r, left - a, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(r, height, &mut Vec::new(), &mut out);
    out
}

/// Every ratio `b / a` of values with `a != 0`, sorted, then `None` for a generic `c`.
#[cfg(test)]
fn ratio_family(values: &std::collections::BTreeSet<i64>) -> Vec<Option<Ratio<i64>>> {
    let mut set = std::collections::BTreeSet::new();
    for &a in values.iter().filter(|&&a| a != 0) {
        for &b in values {
            set.insert(Ratio::new(b, a));
        }
    }
    set.into_iter()
        .map(Some)
        .chain(std::iter::once(None))
        .collect()
}

fn c_label(c: Option<Ratio<i64>>) -> String {
    match c {
        Some(c) => format!("c={c}"),
        None => "c=generic".into(),
    }
}

/// Coordinate facts about a dominant `x`, all in unscaled units.
struct Shape<'a> {
    s: &'a [i64],
    n: i64,
}

impl Shape<'_> {
    fn x(&self, i: usize) -> i64 {
        self.s[i - 1]
    }
    /// `x_i - x_j = d`.
    fn gap(&self, i: usize, j: usize, d: i64) -> bool {
        self.x(i) - self.x(j) == d * self.n
    }
    /// `x_lo = ... = x_hi` (vacuous for empty ranges).
    fn flat(&self, lo: usize, hi: usize) -> bool {
        lo >= hi || (lo..hi).all(|i| self.x(i) == self.x(i + 1))
    }
    fn len(&self) -> usize {
        self.s.len()
    }
}

fn la2_cases(sh: &Shape) -> Vec<String> {
    let n = sh.len();
    let mut cases = Vec::new();
    if sh.flat(2, n) {
        cases.push("(1)".into());
    }
    if sh.flat(1, n - 1) {
        cases.push("(2)".into());
    }
    if n == 4 && sh.x(1) == sh.x(2) && sh.x(3) == sh.x(4) {
        cases.push("(3)".into());
    }
    cases
}

fn elst_cases(sh: &Shape) -> Vec<String> {
    let n = sh.len();
    let mut cases = Vec::new();
    if sh.gap(1, 2, 1) && sh.flat(2, n) {
        cases.push("(1)".into());
    }
    if sh.flat(1, n - 1) && sh.gap(n - 1, n, 1) {
        cases.push("(2)".into());
    }
    if n == 4 && sh.x(1) == sh.x(2) && sh.gap(2, 3, 1) && sh.x(3) == sh.x(4) {
        cases.push("(3)".into());
    }
    cases
}

fn esn_cases(sh: &Shape) -> Vec<String> {
    let n = sh.len();
    let mut cases = Vec::new();
    if n >= 3 && sh.x(1) == sh.x(2) && sh.flat(3, n - 1) && sh.gap(2, 3, 1) && sh.gap(n - 1, n, 1) {
        cases.push("(1)".into());
    }
    if n >= 3
        && sh.flat(2, n - 2)
        && sh.x(n - 1) == sh.x(n)
        && sh.gap(1, 2, 1)
        && sh.gap(n - 2, n - 1, 1)
    {
        cases.push("(2)".into());
    }
    cases
}

fn es2n_cases(sh: &Shape) -> Vec<String> {
    let n = sh.len();
    let mut cases = Vec::new();
    if sh.gap(1, 2, 2) && sh.flat(2, n) {
        cases.push("(1)".into());
    }
    if sh.flat(1, n - 1) && sh.gap(n - 1, n, 2) {
        cases.push("(2)".into());
    }
    if is_square_pattern(sh) {
        cases.push("(3)".into());
    }
    cases
}

/// `n = 4` and `x = (1, 1, -1, -1)`.
fn is_square_pattern(sh: &Shape) -> bool {
    sh.len() == 4 && sh.s == [4, 4, -4, -4]
}

/// `|W mu \ H_c|` summed over a set of dominant `mu`, tabulated by `c`.
///
/// The weights of `W mu` with prescribed `(y_p, y_q) = (a, b)` number
/// `|W mu| m(a) (m(b) - [a = b]) / (n (n - 1))`; such a pair lies on `H_c` iff
/// `b = c a`, which for `a != 0` singles out `c = b / a` and for `a = b = 0`
/// holds for every `c`.
struct Profile {
    total: u128,
    everywhere: u128,
    by_c: BTreeMap<Ratio<i64>, u128>,
}

impl Profile {
    fn new(mus: &[Weight]) -> Self {
        let mut total = 0;
        let mut everywhere = 0;
        let mut by_c: BTreeMap<Ratio<i64>, u128> = BTreeMap::new();
        for mu in mus {
            let n = mu.n() as u128;
            let size = orbit_size(mu);
            total += size;
            let vm = mu.value_multiplicities();
            for &(a, ma) in &vm {
                for &(b, mb) in &vm {
                    let mb = mb as u128 - u128::from(a == b);
                    let hits = size * ma as u128 * mb / (n * (n - 1));
                    if hits == 0 {
                        continue;
                    }
                    if a == 0 {
                        if b == 0 {
                            everywhere += hits;
                        }
                    } else {
                        *by_c.entry(Ratio::new(b, a)).or_insert(0) += hits;
                    }
                }
            }
        }
        Self {
            total,
            everywhere,
            by_c,
        }
    }

    /// Every `c` at which the count can differ from the generic value, then `None`.
    fn family(&self) -> Vec<Option<Ratio<i64>>> {
        self.by_c
            .keys()
            .copied()
            .map(Some)
            .chain(std::iter::once(None))
            .collect()
    }

    fn outside(&self, c: Option<Ratio<i64>>) -> u128 {
        let special = c.and_then(|c| self.by_c.get(&c)).copied().unwrap_or(0);
        self.total - self.everywhere - special
    }
}

struct Instance {
    x: Weight,
    k: usize,
    m0: usize,
    orbit: Profile,
    inn: Profile,
}

impl Instance {
    fn new(x: Weight, with_inn: bool) -> Self {
        let vm = x.value_multiplicities();
        let k = vm.len();
        let m0 = vm.iter().map(|&(_, m)| m).max().unwrap_or(0);
        let orbit = Profile::new(std::slice::from_ref(&x));
        let inn = Profile::new(&if with_inn {
            dominant_inn(&x)
        } else {
            Vec::new()
        });
        Self {
            x,
            k,
            m0,
            orbit,
            inn,
        }
    }

    fn orbit_outside(&self, c: Option<Ratio<i64>>) -> u128 {
        self.orbit.outside(c)
    }

    fn inn_outside(&self, c: Option<Ratio<i64>>) -> u128 {
        self.inn.outside(c)
    }

    fn record(
        &self,
        prop: Prop,
        c: Option<Ratio<i64>>,
        observed: u128,
        claim: String,
        cases: Vec<String>,
    ) -> CounterexampleRecord {
        CounterexampleRecord {
            prop,
            n: self.x.n(),
            fundamental: self.x.fundamental_coords().expect("x is a lattice point"),
            scaled: self.x.coords().to_vec(),
            hyperplane: c_label(c),
            observed,
            claim,
            cases,
        }
    }
}

type Outcome = (u64, Vec<CounterexampleRecord>);

fn check_x(prop: Prop, inst: &Instance, slack: i64) -> Outcome {
    let n = inst.x.n() as i128;
    let s = slack as i128;
    let sh = Shape {
        s: inst.x.coords(),
        n: n as i64,
    };
    let mut checked = 0u64;
    let mut out = Vec::new();
    // `observed >= bound` with `slack` added to the bound
    let below = |observed: u128, bound: i128| (observed as i128) < bound + s;
    // for inequalities whose equality cases are listed
    let bad_equality = |observed: u128, bound: i128, cases: &[String]| {
        below(observed, bound) || (observed as i128 == bound && cases.is_empty())
    };
    match prop {
        Prop::Est => {
            if inst.k < 3 {
                return (0, out);
            }
            for c in inst.orbit.family() {
                checked += 1;
                let a = inst.orbit_outside(c);
                if below(a, 2 * n - 2) {
                    out.push(inst.record(
                        prop,
                        c,
                        a,
                        format!(">= 2n-2 = {}", 2 * n - 2 + s),
                        vec![],
                    ));
                }
                if inst.m0 as i128 != n - 2 && below(a, 5 * (n - 2)) {
                    out.push(inst.record(
                        prop,
                        c,
                        a,
                        format!(">= 5(n-2) = {}", 5 * (n - 2) + s),
                        vec![],
                    ));
                }
                if inst.k >= 4 && below(a, 4 * n) {
                    out.push(inst.record(prop, c, a, format!(">= 4n = {}", 4 * n + s), vec![]));
                }
            }
        }
        Prop::La2 => {
            let cases = la2_cases(&sh);
            for c in inst.orbit.family() {
                checked += 1;
                let a = inst.orbit_outside(c);
                if bad_equality(a, 2, &cases) {
                    out.push(inst.record(
                        prop,
                        c,
                        a,
                        format!(">= {}, equality only in listed cases", 2 + s),
                        cases.clone(),
                    ));
                }
            }
        }
        Prop::Elst => {
            let cases = elst_cases(&sh);
            for c in inst.inn.family() {
                checked += 1;
                let i = inst.inn_outside(c);
                if bad_equality(i, 2, &cases) {
                    out.push(inst.record(
                        prop,
                        c,
                        i,
                        format!(">= {}, equality only in listed cases", 2 + s),
                        cases.clone(),
                    ));
                }
            }
        }
        Prop::Esn => {
            if inst.x.is_root() || inst.k < 3 {
                return (0, out);
            }
            let cases = esn_cases(&sh);
            for c in inst.inn.family() {
                checked += 1;
                let i = inst.inn_outside(c);
                if bad_equality(i, 2 * n, &cases) {
                    out.push(inst.record(
                        prop,
                        c,
                        i,
                        format!(">= 2n = {}, equality only in listed cases", 2 * n + s),
                        cases.clone(),
                    ));
                }
            }
        }
        Prop::Es2n => {
            if inst.k != 2 || sh.x(1) - sh.x(sh.len()) <= n as i64 {
                return (0, out);
            }
            let cases = es2n_cases(&sh);
            for c in inst.inn.family() {
                let i = inst.inn_outside(c);
                if i as i128 <= 2 * n + s {
                    checked += 1;
                    if cases.is_empty() {
                        out.push(inst.record(
                            prop,
                            c,
                            i,
                            format!("<= {} only in listed cases", 2 * n + s),
                            cases.clone(),
                        ));
                    }
                }
            }
        }
        Prop::Ampl => {
            if sh.x(1) - sh.x(sh.len()) <= 2 * n as i64 {
                return (0, out);
            }
            for c in inst.inn.family() {
                checked += 1;
                let i = inst.inn_outside(c);
                let a = inst.orbit_outside(c);
                if i as i128 <= 2 * n + s {
                    out.push(inst.record(prop, c, i, format!("Inn count > {}", 2 * n + s), vec![]));
                }
                if below(a, 2) {
                    out.push(inst.record(prop, c, a, format!("orbit count >= {}", 2 + s), vec![]));
                }
            }
        }
        Prop::Eson => {
            if inst.x.is_root() || sh.x(1) - sh.x(sh.len()) <= n as i64 || !is_self_dual(&inst.x) {
                return (0, out);
            }
            let square = is_square_pattern(&sh);
            for c in inst.inn.family() {
                let i = inst.inn_outside(c);
                if i as i128 <= 4 * n + s {
                    checked += 1;
                    if !square {
                        let cases = vec![];
                        out.push(inst.record(
                            prop,
                            c,
                            i,
                            format!("<= {} only for (1,1,-1,-1)", 4 * n + s),
                            cases,
                        ));
                    }
                }
            }
        }
        _ => unreachable!("not an orbit proposition"),
    }
    (checked, out)
}

fn needs_inn(prop: Prop) -> bool {
    !matches!(prop, Prop::Est | Prop::La2)
}

fn scan_x(prop: Prop, bounds: &Bounds, slack: i64) -> Outcome {
    let xs: Vec<Weight> = (3..=bounds.max_n)
        .flat_map(|n| dominant_box(n, bounds.coord_bound))
        .collect();
    let parts: Vec<Outcome> = xs
        .into_par_iter()
        .map(|x| check_x(prop, &Instance::new(x, needs_inn(prop)), slack))
        .collect();
    merge(parts)
}

fn merge(parts: Vec<Outcome>) -> Outcome {
    let mut checked = 0;
    let mut out = Vec::new();
    for (c, recs) in parts {
        checked += c;
        out.extend(recs);
    }
    (checked, out)
}

/// The highest weights allowed at rank `r` by the small-count classification.
fn lah_allowed(r: usize) -> Vec<Vec<i64>> {
    let unit = |entries: &[(usize, i64)]| {
        let mut a = vec![0i64; r];
        for &(j, v) in entries {
            a[j - 1] += v;
        }
        a
    };
    let mut allowed = vec![
        unit(&[(1, 2)]),
        unit(&[(r, 2)]),
        unit(&[(1, 1), (r - 1, 1)]),
        unit(&[(2, 1), (r, 1)]),
    ];
    if r == 3 {
        allowed.push(unit(&[(2, 2)]));
    }
    allowed
}

fn span_hyperplane(lambda: &Weight, sub: &SimpleSubset) -> Result<Hyperplane> {
    let n = lambda.n();
    let mut vecs = vec![lambda.clone()];
    vecs.extend(sub.indices().iter().map(|&i| Root::simple(i).to_weight(n)));
    Hyperplane::from_span(&vecs)
}

fn lah_record(
    prop: Prop,
    lambda: &Weight,
    sub: &SimpleSubset,
    observed: u128,
    claim: String,
) -> CounterexampleRecord {
    CounterexampleRecord {
        prop,
        n: lambda.n(),
        fundamental: lambda.fundamental_coords().expect("lattice point"),
        scaled: lambda.coords().to_vec(),
        hyperplane: format!("span{sub}"),
        observed,
        claim,
        cases: vec![],
    }
}

/// Contrapositive scan: any `lambda` meeting the count hypotheses must be in the allowed list.
pub fn verify_lah_with(ranks: &[usize], height_bound: i64, slack: i64) -> Result<PropResult> {
    let items: Vec<(usize, Weight)> = ranks
        .iter()
        .filter(|&&r| r >= 3)
        .flat_map(|&r| {
            dominant_by_height(r, height_bound)
                .into_iter()
                .map(move |w| (r, w))
        })
        .collect();
    let parts: Vec<Result<Outcome>> = items
        .into_par_iter()
        .map(|(r, lambda)| {
            let n = lambda.n() as i128;
            let a = lambda.fundamental_coords()?;
            let fundamental = a.iter().sum::<i64>() == 1 && a.iter().all(|&x| x <= 1);
            if lambda.is_root() || fundamental {
                return Ok((0, vec![]));
            }
            let allowed = lah_allowed(r).contains(&a);
            let symmetric = is_self_dual(&lambda);
            let inn = dominant_inn(&lambda);
            let mut checked = 0;
            let mut out = vec![];
            for sub in corank2_connected_subsets(r) {
                let h = span_hyperplane(&lambda, &sub)?;
                let m = inn_count_outside(&inn, &h) as i128;
                let hyp = m <= 4 * n + slack as i128 && (symmetric || m <= 2 * n + slack as i128);
                if hyp {
                    checked += 1;
                    if !allowed {
                        out.push(lah_record(
                            Prop::Lah,
                            &lambda,
                            &sub,
                            m as u128,
                            format!("hypotheses hold (bounds +{slack}) only for the allowed list"),
                        ));
                    }
                }
            }
            Ok((checked, out))
        })
        .collect();
    let (checked, counterexamples) = merge(parts.into_iter().collect::<Result<Vec<_>>>()?);
    Ok(PropResult {
        prop: Prop::Lah,
        checked,
        counterexamples,
    })
}

pub fn verify_lah(ranks: &[usize], height_bound: i64) -> Result<PropResult> {
    verify_lah_with(ranks, height_bound, 0)
}

/// `|Inn(L) \ H| > 4n` for `lambda = phi_j`, `3 <= j <= r-2`, `Pi' = (1..r-2)`.
pub fn verify_lah1_with(ranks: &[usize], slack: i64) -> Result<PropResult> {
    let mut checked = 0;
    let mut counterexamples = Vec::new();
    for &r in ranks.iter().filter(|&&r| r >= 8) {
        let n = r + 1;
        let sub = SimpleSubset::interval(1, r - 2);
        for j in 3..=r - 2 {
            let lambda = Weight::fundamental(n, j);
            let h = span_hyperplane(&lambda, &sub)?;
            let m = inn_count_outside(&dominant_inn(&lambda), &h) as i128;
            checked += 1;
            if m <= 4 * n as i128 + slack as i128 {
                counterexamples.push(lah_record(
                    Prop::Lah1,
                    &lambda,
                    &sub,
                    m as u128,
                    format!("> 4n = {}", 4 * n as i128 + slack as i128),
                ));
            }
        }
    }
    Ok(PropResult {
        prop: Prop::Lah1,
        checked,
        counterexamples,
    })
}

pub fn verify_lah1(ranks: &[usize]) -> Result<PropResult> {
    verify_lah1_with(ranks, 0)
}

/// Ranks scanned by the two classification checks for the given bounds.
pub fn scan_ranks(bounds: &Bounds) -> (Vec<usize>, Vec<usize>) {
    let lah = (3..bounds.max_n).collect();
    let top = bounds.max_n.saturating_sub(1).max(12);
    (lah, (8..=top).collect())
}

/// Runs one verifier, with every claimed bound tightened by `slack`.
pub fn verify_with(prop: Prop, bounds: &Bounds, slack: i64) -> Result<PropResult> {
    let to_records = |prop, v: Vec<crate::multinomial::CompositionViolation>| {
        v.into_iter()
            .map(|c| CounterexampleRecord {
                prop,
                n: c.n as usize,
                fundamental: vec![],
                scaled: c.parts.iter().map(|&p| p as i64).collect(),
                hyperplane: String::new(),
                observed: c.value,
                claim: match prop {
                    Prop::Cmb1 => "< n only for a single part".into(),
                    _ => "<= 2(n-1) only for {1, n-1} or (2, 2)".into(),
                },
                cases: vec![],
            })
            .collect::<Vec<_>>()
    };
    let n_max = bounds.max_n as u64;
    let slack_u = slack.max(0) as u64;
    Ok(match prop {
        Prop::Cmb1 => PropResult {
            prop,
            checked: (1..=n_max).map(|n| 1u64 << (n - 1)).sum(),
            counterexamples: to_records(prop, verify_cmb1_with(n_max, slack_u)),
        },
        Prop::Cmb2 => PropResult {
            prop,
            checked: (1..=n_max).map(|n| (1u64 << (n - 1)) - 1).sum(),
            counterexamples: to_records(prop, verify_cmb2_with(n_max, slack_u)),
        },
        Prop::Lah => verify_lah_with(&scan_ranks(bounds).0, bounds.height_bound, slack)?,
        Prop::Lah1 => verify_lah1_with(&scan_ranks(bounds).1, slack)?,
        _ => {
            let (checked, counterexamples) = scan_x(prop, bounds, slack);
            PropResult {
                prop,
                checked,
                counterexamples,
            }
        }
    })
}

pub fn verify(prop: Prop, bounds: &Bounds) -> Result<PropResult> {
    verify_with(prop, bounds, 0)
}

pub fn verify_all(props: &[Prop], bounds: &Bounds) -> Result<Vec<PropResult>> {
    props.iter().map(|&p| verify(p, bounds)).collect()
}

pub fn verify_est(n_max: usize, coord_bound: i64) -> Vec<CounterexampleRecord> {
    let bounds = Bounds {
        max_n: n_max,
        coord_bound,
        ..Bounds::default()
    };
    scan_x(Prop::Est, &bounds, 0).1
}

pub fn verify_la2_elst(n_max: usize, coord_bound: i64) -> Vec<CounterexampleRecord> {
    let bounds = Bounds {
        max_n: n_max,
        coord_bound,
        ..Bounds::default()
    };
    [Prop::La2, Prop::Elst]
        .into_iter()
        .flat_map(|p| scan_x(p, &bounds, 0).1)
        .collect()
}

pub fn verify_esn_es2n_ampl_eson(n_max: usize, coord_bound: i64) -> Vec<CounterexampleRecord> {
    let bounds = Bounds {
        max_n: n_max,
        coord_bound,
        ..Bounds::default()
    };
    [Prop::Esn, Prop::Es2n, Prop::Ampl, Prop::Eson]
        .into_iter()
        .flat_map(|p| scan_x(p, &bounds, 0).1)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> Bounds {
        Bounds {
            max_n: 5,
            coord_bound: 2,
            height_bound: 3,
        }
    }

    #[test]
    fn parse_props() {
        for p in Prop::ALL {
            assert_eq!(p.name().parse::<Prop>().unwrap(), p);
        }
        assert!("nope".parse::<Prop>().is_err());
    }

    #[test]
    fn enumerations() {
        assert_eq!(dominant_box(4, 2).len(), 26);
        assert_eq!(dominant_by_height(3, 2).len(), 9);
        assert!(dominant_box(5, 3).iter().all(|w| w.is_dominant()));
    }

    #[test]
    fn ratio_family_includes_generic() {
        let fam = ratio_family(&[-2, 0, 4].into_iter().collect());
        assert_eq!(fam.last(), Some(&None));
        assert!(fam.contains(&Some(Ratio::new(-1, 2))));
        assert!(fam.contains(&Some(Ratio::new(0, 1))));
    }

    #[test]
    fn all_props_hold_on_small_range() {
        for prop in Prop::ALL {
            let res = verify(prop, &small()).unwrap();
            assert!(
                res.counterexamples.is_empty(),
                "{prop}: {:?}",
                res.counterexamples
            );
        }
    }

    #[test]
    fn profile_matches_direct_counts() {
        use crate::hyperplane::pq_orbit_count_on;
        for x in dominant_box(5, 2).into_iter().step_by(7) {
            let inn = dominant_inn(&x);
            let prof = Profile::new(&inn);
            let values: std::collections::BTreeSet<i64> = inn
                .iter()
                .flat_map(|m| m.coords().iter().copied())
                .collect();
            for c in ratio_family(&values) {
                let direct: u128 = inn
                    .iter()
                    .map(|m| orbit_size(m) - pq_orbit_count_on(m, c))
                    .sum();
                assert_eq!(prof.outside(c), direct);
            }
        }
    }

    #[test]
    fn est_tight_for_root() {
        let inst = Instance::new(Root::new(0, 4).to_weight(5), false);
        let a = inst.orbit_outside(Some(Ratio::from_integer(0)));
        assert_eq!(a, 2 * 5 - 2);
    }

    #[test]
    fn la2_equality_patterns() {
        let phi1 = Weight::fundamental(5, 1);
        let sh = Shape {
            s: phi1.coords(),
            n: 5,
        };
        assert_eq!(la2_cases(&sh), vec!["(1)".to_string()]);
        let sq = Weight::fundamental(4, 2);
        let sh = Shape {
            s: sq.coords(),
            n: 4,
        };
        assert!(la2_cases(&sh).contains(&"(3)".to_string()));
        let w = Weight::from_scaled(vec![4, 4, -4, -4]).unwrap();
        assert!(is_square_pattern(&Shape {
            s: w.coords(),
            n: 4
        }));
    }

    #[test]
    fn lah1_example() {
        let lambda = Weight::fundamental(9, 4);
        let h = span_hyperplane(&lambda, &SimpleSubset::interval(1, 6)).unwrap();
        assert_eq!(h.orbit_count_outside(&lambda), 70);
        assert!(verify_lah1(&[8, 9, 10]).unwrap().counterexamples.is_empty());
    }

    #[test]
    fn lah_allowed_list() {
        assert!(lah_allowed(4).contains(&vec![2, 0, 0, 0]));
        assert!(lah_allowed(3).contains(&vec![0, 2, 0]));
        assert!(!lah_allowed(4).contains(&vec![0, 2, 0, 0]));
    }
}
