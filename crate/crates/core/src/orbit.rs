//! Weyl orbits, saturated weight sets and weight multiplicities.
//!
//! The Weyl group of A_r is the symmetric group acting by coordinate
//! permutations, so an orbit is the set of distinct rearrangements of a
//! coordinate multiset. The saturation `Inn(L) = conv(L) ∩ (L + Q)` of the
//! orbit of a dominant weight is described through majorization: a weight
//! belongs to it iff it lies in the same P/Q coset and its sorted coordinates
//! are dominated by those of the highest weight.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::multinomial::multinomial_counts;
use crate::weights::{Root, Weight};

/// A Weyl orbit with its dominant representative.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Orbit {
    pub dominant: Weight,
    /// All distinct coordinate permutations, lexicographically ascending.
    pub elements: Vec<Weight>,
}

/// Rearranges `v` into the next lexicographic permutation; false after the last one.
fn next_permutation(v: &mut [i64]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let Some(i) = (0..v.len() - 1).rev().find(|&i| v[i] < v[i + 1]) else {
        return false;
    };
    let j = (i + 1..v.len())
        .rev()
        .find(|&j| v[j] > v[i])
        .expect("pivot exists");
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

/// Calls `f` on every distinct rearrangement of the coordinates of `lambda`.
pub fn for_each_in_orbit(lambda: &Weight, mut f: impl FnMut(&[i64])) {
    let mut v = lambda.coords().to_vec();
    v.sort_unstable();
    loop {
        f(&v);
        if !next_permutation(&mut v) {
            break;
        }
    }
}

pub fn orbit(lambda: &Weight) -> Orbit {
    let mut elements = Vec::new();
    for_each_in_orbit(lambda, |c| {
        elements.push(Weight::from_scaled_unchecked(c.to_vec()))
    });
    Orbit {
        dominant: lambda.dominant(),
        elements,
    }
}

/// `|W lambda|` as the multinomial of the coordinate value multiplicities.
pub fn orbit_size(lambda: &Weight) -> u128 {
    multinomial_counts(lambda.value_multiplicities().into_iter().map(|(_, m)| m))
}

/// True iff the sorted coordinates of `mu` are majorized by those of the dominant `lambda`.
/// Both vectors have zero sum, so only the prefix inequalities need checking.
pub fn majorized_by(mu: &Weight, lambda: &Weight) -> bool {
    let mu = mu.dominant();
    let mut a = 0i64;
    let mut b = 0i64;
    for (x, y) in mu.coords().iter().zip(lambda.coords()) {
        a += x;
        b += y;
        if a > b {
            return false;
        }
    }
    true
}

/// Membership of `mu` in `Inn(W lambda)` for dominant `lambda`.
pub fn inn_contains(lambda: &Weight, mu: &Weight) -> Result<bool> {
    if mu.n() != lambda.n() {
        return Err(Error::InvalidWeight(format!(
            "dimension mismatch: {} vs {}",
            mu.n(),
            lambda.n()
        )));
    }
    if !mu.is_lattice() {
        return Err(Error::InvalidWeight(format!(
            "{:?} is not in the weight lattice",
            mu.coords()
        )));
    }
    Ok(mu.coset() == lambda.coset() && majorized_by(mu, lambda))
}

/// Dominant weights of `Inn(W lambda)`, lexicographically descending (so `lambda`
/// comes first): non-increasing vectors in the coset of `lambda` whose prefix
/// sums stay below those of `lambda`.
pub fn dominant_inn(lambda: &Weight) -> Vec<Weight> {
    struct Walk<'a> {
        bound: Vec<i64>,
        lo: i64,
        step: i64,
        prefix: Vec<i64>,
        out: &'a mut Vec<Weight>,
    }
    impl Walk<'_> {
        fn go(&mut self, sum: i64, hi: i64) {
            let n = self.bound.len();
            let i = self.prefix.len();
            if i == n {
                if sum == 0 {
                    self.out
                        .push(Weight::from_scaled_unchecked(self.prefix.clone()));
                }
                return;
            }
            let left = (n - i) as i64;
            let mut v = hi.min(self.bound[i] - sum);
            // align to the coset, rounding down
            v -= (v - self.lo).rem_euclid(self.step);
            while v >= self.lo {
                if sum + left * v < 0 {
                    break;
                }
                if sum + v + (left - 1) * self.lo <= 0 {
                    self.prefix.push(v);
                    self.go(sum + v, v);
                    self.prefix.pop();
                }
                v -= self.step;
            }
        }
    }
    let lambda = lambda.dominant();
    let s = lambda.coords();
    let mut bound = Vec::with_capacity(s.len());
    let mut acc = 0;
    for &x in s {
        acc += x;
        bound.push(acc);
    }
    let mut out = Vec::new();
    let mut walk = Walk {
        bound,
        lo: s[s.len() - 1],
        step: s.len() as i64,
        prefix: Vec::with_capacity(s.len()),
        out: &mut out,
    };
    walk.go(0, s[0]);
    out
}

/// All of `Inn(W lambda)`, lexicographically ascending.
pub fn inn_enumerate(lambda: &Weight) -> Vec<Weight> {
    let mut out: Vec<Weight> = dominant_inn(lambda)
        .iter()
        .flat_map(|mu| orbit(mu).elements)
        .collect();
    out.sort_unstable();
    out
}

/// Number of simple-root steps from `mu` up to `lambda` (both in the same coset).
fn level(lambda: &Weight, mu: &Weight) -> i64 {
    let n = lambda.n() as i64;
    let mut prefix = 0i64;
    let mut total = 0i64;
    for (a, b) in lambda.coords().iter().zip(mu.coords()).take(lambda.n() - 1) {
        prefix += a - b;
        total += prefix;
    }
    total / n
}

/// Weight diagram of an irreducible representation: `Inn(W lambda)` with multiplicities.
#[derive(Debug)]
pub struct WeightSystem {
    highest: Weight,
    /// Dominant weights with multiplicities, lexicographically descending.
    dominant: Vec<(Weight, u64)>,
    lookup: HashMap<Weight, u64>,
    expanded: OnceLock<Vec<(Weight, u64)>>,
}

impl WeightSystem {
    /// Freudenthal's recursion over the dominant weights, processed by increasing
    /// depth below the highest weight. Everything is done on n-scaled vectors, where
    /// the recursion reads
    /// `m(mu) * (|L+R|^2 - |M+R|^2) = 2 * sum_{a>0} sum_{k>=1} (M + kA, A) m(mu + k a)`.
    pub fn new(highest: &Weight) -> Result<Self> {
        if !highest.is_lattice() || !highest.is_dominant() || highest.is_zero() {
            return Err(Error::InvalidWeight(format!(
                "highest weight {:?} must be a nonzero dominant lattice point",
                highest.coords()
            )));
        }
        let n = highest.n();
        let rho = rho_scaled(n);
        let lr = &highest.clone() + &rho;
        let top = lr.dot_scaled(&lr);

        let mut dominant: Vec<Weight> = dominant_inn(highest);
        dominant.sort_by_key(|mu| level(highest, mu));

        let positive: Vec<Weight> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| Root::new(i, j).to_weight(n)))
            .collect();
        let mut lookup: HashMap<Weight, u64> = HashMap::with_capacity(dominant.len());
        for mu in &dominant {
            if mu == highest {
                lookup.insert(mu.clone(), 1);
                continue;
            }
            let mut rhs: i128 = 0;
            for alpha in &positive {
                let mut shifted = mu + alpha;
                while let Some(&m) = lookup.get(&shifted.dominant()) {
                    rhs += i128::from(shifted.dot_scaled(alpha)) * i128::from(m);
                    shifted = &shifted + alpha;
                }
            }
            rhs *= 2;
            let mr = mu + &rho;
            let den = i128::from(top - mr.dot_scaled(&mr));
            assert!(
                den > 0,
                "Freudenthal denominator must be positive below the top"
            );
            assert_eq!(rhs % den, 0, "Freudenthal quotient must be exact");
            let m = u64::try_from(rhs / den).expect("multiplicity is non-negative");
            lookup.insert(mu.clone(), m);
        }
        let mut dominant: Vec<(Weight, u64)> = dominant
            .into_iter()
            .map(|w| {
                let m = lookup[&w];
                (w, m)
            })
            .collect();
        dominant.sort_by(|a, b| b.0.cmp(&a.0));
        Ok(Self {
            highest: highest.clone(),
            dominant,
            lookup,
            expanded: OnceLock::new(),
        })
    }

    pub fn highest(&self) -> &Weight {
        &self.highest
    }

    pub fn n(&self) -> usize {
        self.highest.n()
    }

    /// Dominant weights and multiplicities, lexicographically descending.
    pub fn dominant(&self) -> &[(Weight, u64)] {
        &self.dominant
    }

    /// Multiplicity of an arbitrary weight (zero outside the support).
    pub fn multiplicity(&self, mu: &Weight) -> u64 {
        if mu.n() != self.n() {
            return 0;
        }
        self.lookup.get(&mu.dominant()).copied().unwrap_or(0)
    }

    /// All weights with multiplicities, lexicographically ascending.
    pub fn weights(&self) -> &[(Weight, u64)] {
        self.expanded.get_or_init(|| {
            let mut all: Vec<(Weight, u64)> = self
                .dominant
                .iter()
                .flat_map(|(mu, m)| orbit(mu).elements.into_iter().map(move |w| (w, *m)))
                .collect();
            all.sort_unstable_by(|a, b| a.0.cmp(&b.0));
            all
        })
    }

    /// Number of distinct weights, without expanding the orbits.
    pub fn support_size(&self) -> u128 {
        self.dominant.iter().map(|(mu, _)| orbit_size(mu)).sum()
    }

    /// Sum of all multiplicities.
    pub fn total_multiplicity(&self) -> u128 {
        self.dominant
            .iter()
            .map(|(mu, m)| orbit_size(mu) * u128::from(*m))
            .sum()
    }

    /// True iff the support is a single orbit.
    pub fn is_minuscule(&self) -> bool {
        self.dominant.len() == 1
    }
}

/// `n * rho` as an integer vector.
fn rho_scaled(n: usize) -> Weight {
    let n = n as i64;
    Weight::from_scaled_unchecked((1..=n).map(|i| n * (n + 1) / 2 - n * i).collect())
}

/// Shared, lazily built weight systems.
pub fn weight_system(highest: &Weight) -> Result<Arc<WeightSystem>> {
    static CACHE: OnceLock<Mutex<HashMap<Weight, Arc<WeightSystem>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(ws) = cache.lock().unwrap_or_else(|e| e.into_inner()).get(highest) {
        return Ok(Arc::clone(ws));
    }
    let ws = Arc::new(WeightSystem::new(highest)?);
    cache
        .lock()
        .unwrap_or_else(|e| e.into_inner())
        .insert(highest.clone(), Arc::clone(&ws));
    Ok(ws)
}

/// Multiplicity of `mu` in the irreducible representation with highest weight `lambda`.
pub fn multiplicity(lambda: &Weight, mu: &Weight) -> Result<u64> {
    Ok(weight_system(lambda)?.multiplicity(mu))
}

/// Weyl's dimension formula `prod_{a>0} (lambda + rho, a) / (rho, a)`.
pub fn dimension(lambda: &Weight) -> Result<u128> {
    if !lambda.is_lattice() || !lambda.is_dominant() {
        return Err(Error::InvalidWeight(format!(
            "{:?} is not a dominant lattice point",
            lambda.coords()
        )));
    }
    let n = lambda.n();
    let s = lambda.coords();
    let mut num = BigUint::from(1u32);
    let mut den = BigUint::from(1u32);
    for i in 0..n {
        for j in i + 1..n {
            let gap = ((s[i] - s[j]) / n as i64) as u64 + (j - i) as u64;
            num *= gap;
            den *= (j - i) as u64;
        }
    }
    let q = num / den;
    u128::try_from(q).map_err(|_| Error::InvalidWeight("dimension overflows u128".into()))
}
