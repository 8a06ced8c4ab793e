//! Hyperplanes of the root space and the counts of weights and roots lying off them.

use std::collections::HashMap;

use num_integer::Integer;
use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::nullspace;
use crate::multinomial::multinomial_counts;
use crate::orbit::{orbit_size, WeightSystem};
use crate::weights::{Root, Weight};

/// A codimension-one subspace `{x : (x, v) = 0}` of the trace-zero space.
///
/// The normal `v` is kept in canonical form: zero coordinate sum, primitive,
/// first nonzero entry positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Hyperplane {
    normal: Vec<i64>,
}

fn canonical(v: &[i128]) -> Result<Vec<i64>> {
    let n = v.len() as i128;
    let sum: i128 = v.iter().sum();
    let mut w: Vec<i128> = v.iter().map(|x| n * x - sum).collect();
    let g = w.iter().fold(0i128, |g, x| g.gcd(x));
    if g == 0 {
        return Err(Error::InvalidWeight(
            "normal vector is parallel to the trace direction".into(),
        ));
    }
    for x in &mut w {
        *x /= g;
    }
    if w.iter().find(|&&x| x != 0).is_some_and(|&x| x < 0) {
        for x in &mut w {
            *x = -*x;
        }
    }
    w.into_iter()
        .map(|x| i64::try_from(x).map_err(|_| Error::InvalidWeight("normal overflows".into())))
        .collect()
}

impl Hyperplane {
    /// Hyperplane with the given (not necessarily reduced) normal.
    pub fn from_normal(normal: &[i64]) -> Result<Self> {
        if normal.len() < 2 {
            return Err(Error::InvalidWeight(
                "normal needs at least 2 entries".into(),
            ));
        }
        let wide: Vec<i128> = normal.iter().map(|&x| i128::from(x)).collect();
        Ok(Self {
            normal: canonical(&wide)?,
        })
    }

    /// The hyperplane spanned by `vectors`, which must span exactly `r - 1` dimensions.
    pub fn from_span(vectors: &[Weight]) -> Result<Self> {
        let Some(first) = vectors.first() else {
            return Err(Error::WrongCodimension {
                expected: 0,
                actual: 0,
            });
        };
        let n = first.n();
        if vectors.iter().any(|v| v.n() != n) {
            return Err(Error::InvalidWeight(
                "vectors of different dimensions".into(),
            ));
        }
        let mut rows: Vec<Vec<i64>> = vectors.iter().map(|v| v.coords().to_vec()).collect();
        rows.push(vec![1; n]);
        let ns = nullspace(&rows, n);
        // nullspace dimension = n - rank(vectors) - 1
        let actual = n - 1 - ns.len();
        if ns.len() != 1 {
            return Err(Error::WrongCodimension {
                expected: n - 2,
                actual,
            });
        }
        Ok(Self {
            normal: canonical(&ns[0])?,
        })
    }

    /// `{x : x_q = c x_p}` with `c = lambda_q / lambda_p`; indices 1-based.
    pub fn from_pq_ratio(lambda: &Weight, p: usize, q: usize) -> Result<Self> {
        let n = lambda.n();
        if p == 0 || q == 0 || p > n || q > n {
            return Err(Error::InvalidWeight(format!(
                "coordinate pair ({p}, {q}) out of range 1..={n}"
            )));
        }
        if p == q {
            return Err(Error::DegeneratePair(p));
        }
        let lp = lambda.coords()[p - 1];
        if lp == 0 {
            return Err(Error::UndefinedRatio(p));
        }
        Self::from_pq(n, p, q, Ratio::new(lambda.coords()[q - 1], lp))
    }

    /// `{x : x_q = c x_p}` for an explicit rational `c`; indices 1-based.
    pub fn from_pq(n: usize, p: usize, q: usize, c: Ratio<i64>) -> Result<Self> {
        if p == q {
            return Err(Error::DegeneratePair(p));
        }
        let mut v = vec![0i64; n];
        v[q - 1] += *c.denom();
        v[p - 1] -= *c.numer();
        Self::from_normal(&v)
    }

    /// Canonical normal vector (zero sum, primitive, first nonzero entry positive).
    pub fn normal(&self) -> &[i64] {
        &self.normal
    }

    pub fn n(&self) -> usize {
        self.normal.len()
    }

    pub fn contains(&self, w: &Weight) -> bool {
        self.pairing(w) == 0
    }

    fn pairing(&self, w: &Weight) -> i64 {
        self.normal.iter().zip(w.coords()).map(|(a, b)| a * b).sum()
    }

    /// The root spanning `H^perp`, if the orthogonal complement contains one.
    pub fn orthogonal_root(&self) -> Option<Root> {
        let nz: Vec<usize> = (0..self.n()).filter(|&i| self.normal[i] != 0).collect();
        match nz.as_slice() {
            [i, j] if self.normal[*i] == 1 && self.normal[*j] == -1 => Some(Root::new(*i, *j)),
            _ => None,
        }
    }

    /// Human-readable equation in unscaled coordinates, e.g. `x1 - x2 + x3 - x4 = 0`.
    pub fn equation(&self) -> String {
        let mut out = String::new();
        for (i, &c) in self.normal.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else { "+" };
            if out.is_empty() {
                if c < 0 {
                    out.push('-');
                }
            } else {
                out.push_str(&format!(" {sign} "));
            }
            if c.abs() != 1 {
                out.push_str(&c.abs().to_string());
            }
            out.push_str(&format!("x{}", i + 1));
        }
        out.push_str(" = 0");
        out
    }

    /// Number of weights of the orbit `W mu` lying on the hyperplane.
    ///
    /// Positions sharing a normal entry are filled together: a group of size `k`
    /// takes `c_t` copies of each value `t` in `multinomial(k; c)` ways.
    pub fn orbit_count_on(&self, mu: &Weight) -> u128 {
        let values = mu.value_multiplicities();
        let key: Vec<usize> = values.iter().map(|&(_, m)| m).collect();
        let groups = Weight::from_scaled_unchecked(self.normal.clone()).value_multiplicities();
        let mut states: HashMap<(Vec<usize>, i64), u128> = HashMap::new();
        states.insert((key, 0), 1);
        for &(w, k) in &groups {
            let mut next: HashMap<(Vec<usize>, i64), u128> = HashMap::with_capacity(states.len());
            for ((rest, dot), count) in states {
                let mut take = vec![0usize; rest.len()];
                distribute(&rest, k, 0, &mut take, &mut |take| {
                    let r: Vec<usize> = rest.iter().zip(take).map(|(a, b)| a - b).collect();
                    let partial: i64 = values
                        .iter()
                        .zip(take)
                        .map(|(&(v, _), &c)| v * c as i64)
                        .sum();
                    let ways = multinomial_counts(take.iter().copied());
                    *next.entry((r, dot + w * partial)).or_insert(0) += count * ways;
                });
            }
            states = next;
        }
        states
            .into_iter()
            .filter(|((_, dot), _)| *dot == 0)
            .map(|(_, c)| c)
            .sum()
    }

    /// `|W mu \ H|`.
    pub fn orbit_count_outside(&self, mu: &Weight) -> u128 {
        orbit_size(mu) - self.orbit_count_on(mu)
    }
}

/// Calls `f` on every `take <= rest` (componentwise) with `sum(take) = k`.
fn distribute(
    rest: &[usize],
    k: usize,
    t: usize,
    take: &mut Vec<usize>,
    f: &mut impl FnMut(&[usize]),
) {
    if t == rest.len() {
        if k == 0 {
            f(take);
        }
        return;
    }
    let tail: usize = rest[t + 1..].iter().sum();
    let lo = k.saturating_sub(tail);
    for c in lo..=rest[t].min(k) {
        take[t] = c;
        distribute(rest, k - c, t + 1, take, f);
    }
    take[t] = 0;
}

/// Number of elements of `set` off the hyperplane.
pub fn count_outside(set: &[Weight], h: &Hyperplane) -> usize {
    set.iter().filter(|w| !h.contains(w)).count()
}

/// `||Inn(L) \ H||`: weights off the hyperplane counted with multiplicity.
pub fn weighted_count_outside(ws: &WeightSystem, h: &Hyperplane) -> u128 {
    ws.dominant()
        .iter()
        .map(|(mu, m)| u128::from(*m) * h.orbit_count_outside(mu))
        .sum()
}

/// `|Inn(L) \ H|` without multiplicities.
pub fn inn_count_outside(dominant_inn: &[Weight], h: &Hyperplane) -> u128 {
    dominant_inn
        .iter()
        .map(|mu| h.orbit_count_outside(mu))
        .sum()
}

/// `|Delta \ H|`: ordered pairs `i != j` with different normal entries.
pub fn roots_outside(h: &Hyperplane) -> usize {
    let v = h.normal();
    let mut count = 0;
    for i in 0..v.len() {
        for j in 0..v.len() {
            if i != j && v[i] != v[j] {
                count += 1;
            }
        }
    }
    count
}

/// `|W mu ∩ {y_q = c y_p}|` for fixed `p != q`. `None` stands for a generic `c`
/// (no ratio of two coordinate values), which leaves only `y_p = y_q = 0`.
pub fn pq_orbit_count_on(mu: &Weight, c: Option<Ratio<i64>>) -> u128 {
    let n = mu.n() as u128;
    let values = mu.value_multiplicities();
    let size = orbit_size(mu);
    let mut pairs: u128 = 0;
    for &(a, ma) in &values {
        for &(b, mb) in &values {
            let hit = match c {
                Some(c) => Ratio::from_integer(b) == c * Ratio::from_integer(a),
                None => a == 0 && b == 0,
            };
            if hit {
                let ma = ma as u128;
                let mb = mb as u128 - u128::from(a == b);
                pairs += ma * mb;
            }
        }
    }
    size * pairs / (n * (n - 1))
}
