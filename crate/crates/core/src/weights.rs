//! Weights, roots and simple-root subsets of the root system A_r.
//!
//! A weight of A_r lives in the trace-zero hyperplane of R^n (n = r + 1).
//! Every weight is stored through its n-scaled coordinates `s = n * x`,
//! which are integers for all points of the weight lattice P. Pairings,
//! inner products and membership tests therefore never leave the integers.

use std::collections::HashSet;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A point of the trace-zero hyperplane, stored as n-scaled integer coordinates.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight {
    coords: Vec<i64>,
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Weight{:?}", self.coords)
    }
}

impl Weight {
    /// Builds a weight from n-scaled coordinates. The coordinates must sum to zero.
    pub fn from_scaled(coords: Vec<i64>) -> Result<Self> {
        if coords.len() < 2 {
            return Err(Error::InvalidWeight(format!(
                "need at least 2 coordinates, got {}",
                coords.len()
            )));
        }
        if coords.iter().sum::<i64>() != 0 {
            return Err(Error::InvalidWeight(format!(
                "scaled coordinates {coords:?} do not sum to zero"
            )));
        }
        Ok(Self { coords })
    }

    /// Like [`Weight::from_scaled`] but additionally requires membership in P.
    pub fn lattice_from_scaled(coords: Vec<i64>) -> Result<Self> {
        let w = Self::from_scaled(coords)?;
        if !w.is_lattice() {
            return Err(Error::InvalidWeight(format!(
                "{:?} is not in the weight lattice",
                w.coords
            )));
        }
        Ok(w)
    }

    pub(crate) fn from_scaled_unchecked(coords: Vec<i64>) -> Self {
        debug_assert_eq!(coords.iter().sum::<i64>(), 0);
        Self { coords }
    }

    pub fn zero(n: usize) -> Self {
        Self { coords: vec![0; n] }
    }

    /// Ambient dimension n = r + 1.
    pub fn n(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<i64> {
        self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    /// True iff all scaled coordinates are congruent modulo n.
    pub fn is_lattice(&self) -> bool {
        let n = self.n() as i64;
        let t = self.coords[0].rem_euclid(n);
        self.coords.iter().all(|c| c.rem_euclid(n) == t)
    }

    /// The P/Q coset class: `s_1 mod n`. Zero iff the weight lies in Q.
    pub fn coset(&self) -> i64 {
        self.coords[0].rem_euclid(self.n() as i64)
    }

    /// Pairing with the root `e_plus - e_minus` (0-based indices).
    pub fn pairing(&self, root: Root) -> Result<i64> {
        let diff = self.coords[root.plus] - self.coords[root.minus];
        let n = self.n() as i64;
        if diff % n != 0 {
            return Err(Error::NonIntegralPairing {
                coords: self.coords.clone(),
                plus: root.plus + 1,
                minus: root.minus + 1,
            });
        }
        Ok(diff / n)
    }

    /// Pairing with the simple root alpha_i, `i` in 1..=r.
    pub fn simple_pairing(&self, i: usize) -> Result<i64> {
        self.pairing(Root::simple(i))
    }

    /// Integer dot product of the scaled vectors, i.e. n^2 times the inner product.
    pub fn dot_scaled(&self, other: &Weight) -> i64 {
        self.coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a * b)
            .sum()
    }

    /// The unique W-conjugate in the closed camera (coordinates non-increasing).
    pub fn dominant(&self) -> Weight {
        let mut coords = self.coords.clone();
        coords.sort_unstable_by(|a, b| b.cmp(a));
        Weight { coords }
    }

    pub fn is_dominant(&self) -> bool {
        self.coords.windows(2).all(|w| w[0] >= w[1])
    }

    /// Coordinates `a_i = <x | alpha_i>` in the basis of fundamental weights.
    pub fn fundamental_coords(&self) -> Result<Vec<i64>> {
        (1..self.n()).map(|i| self.simple_pairing(i)).collect()
    }

    /// Inverse of [`Weight::fundamental_coords`]; the rank is `a.len()`.
    pub fn from_fundamental(a: &[i64]) -> Weight {
        let n = a.len() + 1;
        let mut coords = vec![0i64; n];
        for (idx, &aj) in a.iter().enumerate() {
            let j = idx + 1;
            for (i, c) in coords.iter_mut().enumerate() {
                let top = if i < j { n as i64 } else { 0 };
                *c += aj * (top - j as i64);
            }
        }
        Weight { coords }
    }

    /// The fundamental weight phi_j of A_{n-1}.
    pub fn fundamental(n: usize, j: usize) -> Weight {
        assert!(j >= 1 && j < n, "fundamental weight index {j} out of range");
        let mut a = vec![0; n - 1];
        a[j - 1] = 1;
        Weight::from_fundamental(&a)
    }

    /// `lambda_(i_1..i_k) = (e_{i_1} + ... + e_{i_k}) - (k/n)(e_1 + ... + e_n)`,
    /// indices 1-based and pairwise distinct.
    pub fn subset_sum(n: usize, indices: &[usize]) -> Weight {
        let k = indices.len() as i64;
        let mut coords = vec![-k; n];
        for &i in indices {
            coords[i - 1] += n as i64;
        }
        Weight::from_scaled_unchecked(coords)
    }

    /// `lambda^(i)_(i_1,i_2) = (e_{i_1} + e_{i_2} - e_i) - (1/n)(e_1 + ... + e_n)`.
    pub fn pair_minus_one(n: usize, i1: usize, i2: usize, i: usize) -> Weight {
        let mut coords = vec![-1i64; n];
        coords[i1 - 1] += n as i64;
        coords[i2 - 1] += n as i64;
        coords[i - 1] -= n as i64;
        Weight::from_scaled_unchecked(coords)
    }

    /// True iff the weight is a root `e_i - e_j`.
    pub fn is_root(&self) -> bool {
        let n = self.n() as i64;
        let mut plus = 0;
        let mut minus = 0;
        for &c in &self.coords {
            match c {
                0 => {}
                c if c == n => plus += 1,
                c if c == -n => minus += 1,
                _ => return false,
            }
        }
        plus == 1 && minus == 1
    }

    /// Permutes coordinates: result_i = self_{perm[i]}.
    pub fn permuted(&self, perm: &[usize]) -> Weight {
        Weight {
            coords: perm.iter().map(|&p| self.coords[p]).collect(),
        }
    }

    pub fn scaled_by(&self, k: i64) -> Weight {
        Weight {
            coords: self.coords.iter().map(|c| c * k).collect(),
        }
    }

    /// Distinct coordinate values in decreasing order, with their multiplicities.
    pub fn value_multiplicities(&self) -> Vec<(i64, usize)> {
        let mut sorted = self.coords.clone();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        let mut out: Vec<(i64, usize)> = Vec::new();
        for v in sorted {
            match out.last_mut() {
                Some((last, m)) if *last == v => *m += 1,
                _ => out.push((v, 1)),
            }
        }
        out
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        Weight {
            coords: self
                .coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        Weight {
            coords: self
                .coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight {
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }
}

/// The root `e_plus - e_minus`, 0-based coordinate indices.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Root {
    pub plus: usize,
    pub minus: usize,
}

impl Root {
    pub fn new(plus: usize, minus: usize) -> Self {
        assert_ne!(plus, minus, "a root needs two distinct indices");
        Self { plus, minus }
    }

    /// The simple root alpha_i = e_i - e_{i+1}, `i` 1-based.
    pub fn simple(i: usize) -> Self {
        assert!(i >= 1, "simple roots are numbered from 1");
        Self {
            plus: i - 1,
            minus: i,
        }
    }

    pub fn is_positive(&self) -> bool {
        self.plus < self.minus
    }

    pub fn to_weight(self, n: usize) -> Weight {
        let mut coords = vec![0; n];
        coords[self.plus] = n as i64;
        coords[self.minus] = -(n as i64);
        Weight::from_scaled_unchecked(coords)
    }
}

/// Root datum of A_r.
#[derive(Debug)]
pub struct RootDatum {
    rank: usize,
    roots: Vec<Root>,
    fundamental: Vec<Weight>,
    rho: Weight,
    root_sums: OnceLock<HashSet<Weight>>,
}

/// Shared root data per rank, built once.
pub fn root_datum(r: usize) -> Result<&'static RootDatum> {
    use std::collections::HashMap;
    use std::sync::Mutex;
    static CACHE: OnceLock<Mutex<HashMap<usize, &'static RootDatum>>> = OnceLock::new();
    if r < 2 {
        return Err(Error::InvalidRank(r));
    }
    let mut cache = CACHE
        .get_or_init(|| Mutex::new(HashMap::new()))
        .lock()
        .unwrap_or_else(|e| e.into_inner());
    if let Some(d) = cache.get(&r) {
        return Ok(d);
    }
    let d: &'static RootDatum = Box::leak(Box::new(RootDatum::new(r)?));
    cache.insert(r, d);
    Ok(d)
}

impl RootDatum {
    pub fn new(r: usize) -> Result<Self> {
        if r < 2 {
            return Err(Error::InvalidRank(r));
        }
        let n = r + 1;
        let mut roots = Vec::with_capacity(n * (n - 1));
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    roots.push(Root::new(i, j));
                }
            }
        }
        let fundamental = (1..=r).map(|j| Weight::fundamental(n, j)).collect();
        // n * rho_i = n(n+1)/2 - n*i for i in 1..=n
        let rho = Weight::from_scaled_unchecked(
            (1..=n as i64)
                .map(|i| (n as i64) * (n as i64 + 1) / 2 - (n as i64) * i)
                .collect(),
        );
        Ok(Self {
            rank: r,
            roots,
            fundamental,
            rho,
            root_sums: OnceLock::new(),
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn n(&self) -> usize {
        self.rank + 1
    }

    /// All n(n-1) roots.
    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn positive_roots(&self) -> impl Iterator<Item = Root> + '_ {
        self.roots.iter().copied().filter(Root::is_positive)
    }

    pub fn simple_roots(&self) -> Vec<Root> {
        (1..=self.rank).map(Root::simple).collect()
    }

    /// phi_j, `j` 1-based.
    pub fn fundamental_weight(&self, j: usize) -> &Weight {
        &self.fundamental[j - 1]
    }

    pub fn fundamental_weights(&self) -> &[Weight] {
        &self.fundamental
    }

    /// Half-sum of positive roots.
    pub fn rho(&self) -> &Weight {
        &self.rho
    }

    /// The adjoint highest weight phi_1 + phi_r.
    pub fn adjoint(&self) -> Weight {
        Root::new(0, self.rank).to_weight(self.n())
    }

    /// The set Delta + Delta, materialized on first use.
    pub fn root_sums(&self) -> &HashSet<Weight> {
        self.root_sums.get_or_init(|| {
            let n = self.n();
            let vecs: Vec<Weight> = self.roots.iter().map(|r| r.to_weight(n)).collect();
            let mut set = HashSet::with_capacity(vecs.len() * vecs.len() / 2);
            for a in &vecs {
                for b in &vecs {
                    set.insert(a + b);
                }
            }
            set
        })
    }
}

/// A subset of simple roots, stored by their 1-based indices on the Dynkin path 1..r.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SimpleSubset {
    indices: Vec<usize>,
}

impl fmt::Debug for SimpleSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for SimpleSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.indices.iter().map(|i| i.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl SimpleSubset {
    pub fn new(mut indices: Vec<usize>) -> Self {
        indices.sort_unstable();
        indices.dedup();
        Self { indices }
    }

    /// The interval `lo..=hi`.
    pub fn interval(lo: usize, hi: usize) -> Self {
        Self {
            indices: (lo..=hi).collect(),
        }
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.indices.binary_search(&i).is_ok()
    }

    /// Connected on the path graph iff the indices form an interval.
    pub fn is_connected(&self) -> bool {
        self.indices.windows(2).all(|w| w[1] == w[0] + 1)
    }

    pub fn intersection(&self, other: &SimpleSubset) -> SimpleSubset {
        SimpleSubset {
            indices: self
                .indices
                .iter()
                .copied()
                .filter(|&i| other.contains(i))
                .collect(),
        }
    }

    pub fn union(&self, other: &SimpleSubset) -> SimpleSubset {
        let mut all = self.indices.clone();
        all.extend_from_slice(&other.indices);
        SimpleSubset::new(all)
    }

    pub fn difference(&self, other: &SimpleSubset) -> SimpleSubset {
        SimpleSubset {
            indices: self
                .indices
                .iter()
                .copied()
                .filter(|&i| !other.contains(i))
                .collect(),
        }
    }

    /// The distinguished boundary of a connected subset, transported from its own
    /// numbering `1..len` back into the ambient numbering.
    pub fn boundary(&self) -> SimpleSubset {
        assert!(
            self.is_connected(),
            "boundary is defined for connected subsets"
        );
        if self.is_empty() {
            return self.clone();
        }
        let offset = self.indices[0] - 1;
        let local = boundary_subset(self.len());
        SimpleSubset {
            indices: local.indices.iter().map(|i| i + offset).collect(),
        }
    }
}

/// The boundary subset of A_r: `{1, 2, r-1, r}` for r >= 6, all of `1..=r` otherwise.
pub fn boundary_subset(r: usize) -> SimpleSubset {
    if r >= 6 {
        SimpleSubset::new(vec![1, 2, r - 1, r])
    } else {
        SimpleSubset::interval(1, r)
    }
}

/// All connected subsets of order r-2: `(1..r-2)`, `(2..r-1)`, `(3..r)`, in that order.
pub fn corank2_connected_subsets(r: usize) -> Vec<SimpleSubset> {
    if r < 3 {
        return Vec::new();
    }
    (1..=3)
        .map(|s| SimpleSubset::interval(s, s + r - 3))
        .collect()
}

/// Indices of simple roots with nonzero pairing.
pub fn pi_lambda(lambda: &Weight) -> Result<SimpleSubset> {
    let mut indices = Vec::new();
    for i in 1..lambda.n() {
        if lambda.simple_pairing(i)? != 0 {
            indices.push(i);
        }
    }
    Ok(SimpleSubset { indices })
}

/// Parses the `a1,...,ar` text format into fundamental coordinates.
pub fn parse_fundamental(text: &str) -> Result<Vec<i64>> {
    text.split(',')
        .map(|part| {
            part.trim()
                .parse::<i64>()
                .map_err(|e| Error::Parse(format!("bad coordinate {part:?}: {e}")))
        })
        .collect()
}

/// Parses a dominant weight of rank `r` given as `a1,...,ar` with non-negative entries.
pub fn parse_dominant(r: usize, text: &str) -> Result<Weight> {
    let a = parse_fundamental(text)?;
    if a.len() != r {
        return Err(Error::Parse(format!(
            "expected {r} fundamental coordinates, got {}",
            a.len()
        )));
    }
    if let Some(bad) = a.iter().find(|&&x| x < 0) {
        return Err(Error::Parse(format!(
            "dominant weights need non-negative coordinates, got {bad}"
        )));
    }
    Ok(Weight::from_fundamental(&a))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn root_datum_sizes() {
        let d = RootDatum::new(2).unwrap();
        assert_eq!(d.roots().len(), 6);
        assert_eq!(d.fundamental_weight(1).coords(), &[2, -1, -1]);
        let d = RootDatum::new(3).unwrap();
        assert_eq!(d.fundamental_weight(2).coords(), &[2, 2, -2, -2]);
        assert_eq!(RootDatum::new(6).unwrap().roots().len(), 42);
        assert_eq!(RootDatum::new(1).unwrap_err(), Error::InvalidRank(1));
        assert_eq!(d.simple_roots().len(), 3);
    }

    #[test]
    fn fundamental_duality() {
        for r in 2..=8 {
            let d = RootDatum::new(r).unwrap();
            for i in 1..=r {
                for j in 1..=r {
                    let p = d.fundamental_weight(i).simple_pairing(j).unwrap();
                    assert_eq!(p, i64::from(i == j));
                }
            }
        }
    }

    #[test]
    fn rho_pairs_to_one_with_simple_roots() {
        let d = RootDatum::new(5).unwrap();
        for i in 1..=5 {
            assert_eq!(d.rho().simple_pairing(i).unwrap(), 1);
        }
    }

    #[test]
    fn pairings() {
        let phi2 = Weight::fundamental(4, 2);
        assert_eq!(phi2.simple_pairing(2).unwrap(), 1);
        assert_eq!(phi2.simple_pairing(1).unwrap(), 0);
        let two_phi1 = Weight::fundamental(6, 1).scaled_by(2);
        assert_eq!(two_phi1.simple_pairing(1).unwrap(), 2);
        let half = Weight::from_scaled(vec![1, -1, 0]).unwrap();
        assert!(matches!(
            half.pairing(Root::new(0, 1)),
            Err(Error::NonIntegralPairing { .. })
        ));
    }

    #[test]
    fn dominant_representative() {
        let w = Weight::from_scaled(vec![-1, 2, -1]).unwrap();
        assert_eq!(w.dominant().coords(), &[2, -1, -1]);
        let phi1 = Weight::fundamental(3, 1);
        assert_eq!(phi1.dominant(), phi1);
        assert_eq!(
            Weight::subset_sum(4, &[2, 3]).dominant(),
            Weight::subset_sum(4, &[1, 2])
        );
    }

    #[test]
    fn fundamental_coordinates() {
        let ad = RootDatum::new(3).unwrap().adjoint();
        assert_eq!(ad.fundamental_coords().unwrap(), vec![1, 0, 1]);
        let w = Weight::from_fundamental(&[0, 1, 0, 0, 0, 0]);
        assert_eq!(w, Weight::subset_sum(7, &[1, 2]));
        assert!(Weight::from_fundamental(&[0, 0, 0]).is_zero());
        let w = Weight::fundamental(7, 3);
        assert_eq!(w, Weight::subset_sum(7, &[1, 2, 3]));
    }

    #[test]
    fn boundary_subsets() {
        assert_eq!(boundary_subset(7).indices(), &[1, 2, 6, 7]);
        assert_eq!(boundary_subset(5).indices(), &[1, 2, 3, 4, 5]);
        assert_eq!(boundary_subset(6).indices(), &[1, 2, 5, 6]);
        let p = SimpleSubset::interval(1, 6);
        assert_eq!(p.boundary().indices(), &[1, 2, 5, 6]);
        let p = SimpleSubset::interval(3, 8);
        assert_eq!(p.boundary().indices(), &[3, 4, 7, 8]);
    }

    #[test]
    fn corank_two_family() {
        let f = corank2_connected_subsets(5);
        assert_eq!(
            f,
            vec![
                SimpleSubset::interval(1, 3),
                SimpleSubset::interval(2, 4),
                SimpleSubset::interval(3, 5)
            ]
        );
        let f = corank2_connected_subsets(3);
        assert_eq!(
            f.iter().map(|s| s.indices().to_vec()).collect::<Vec<_>>(),
            vec![vec![1], vec![2], vec![3]]
        );
        assert!(corank2_connected_subsets(2).is_empty());
        let union = f
            .iter()
            .fold(SimpleSubset::new(vec![]), |acc, s| acc.union(s));
        assert_eq!(union, SimpleSubset::interval(1, 3));
        assert!(f.iter().all(SimpleSubset::is_connected));
    }

    #[test]
    fn pi_lambda_examples() {
        assert_eq!(
            pi_lambda(&Weight::fundamental(9, 4)).unwrap().indices(),
            &[4]
        );
        let w = Weight::from_fundamental(&[0, 1, 0, 0, 1]);
        assert_eq!(pi_lambda(&w).unwrap().indices(), &[2, 5]);
        assert!(pi_lambda(&Weight::zero(6)).unwrap().is_empty());
    }

    #[test]
    fn parse_weights() {
        assert_eq!(
            parse_dominant(3, "1, 0,1").unwrap(),
            RootDatum::new(3).unwrap().adjoint()
        );
        assert!(matches!(parse_dominant(6, "0,0"), Err(Error::Parse(_))));
        assert!(matches!(parse_dominant(2, "1,-1"), Err(Error::Parse(_))));
        assert!(matches!(parse_dominant(2, "1,x"), Err(Error::Parse(_))));
    }

    #[test]
    fn root_sums_contain_roots_and_zero() {
        let d = RootDatum::new(3).unwrap();
        let sums = d.root_sums();
        assert!(sums.contains(&Weight::zero(4)));
        for r in d.roots() {
            assert!(sums.contains(&r.to_weight(4)));
        }
    }

    #[test]
    fn lattice_membership_and_coset() {
        let phi1 = Weight::fundamental(4, 1);
        assert!(phi1.is_lattice());
        assert_eq!(phi1.coset(), 3);
        assert_eq!(Weight::subset_sum(4, &[1, 2]).coset(), 2);
        assert_eq!(Root::new(0, 2).to_weight(4).coset(), 0);
        assert!(Weight::lattice_from_scaled(vec![1, -1, 0]).is_err());
        assert!(Weight::from_scaled(vec![1, 1, 0]).is_err());
    }
}
