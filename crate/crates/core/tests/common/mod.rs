#![allow(dead_code)]

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use suq_core::orbit::{orbit, WeightSystem};
use suq_core::weights::Weight;

pub fn f(a: &[i64]) -> Weight {
    Weight::from_fundamental(a)
}

/// All permutations of `0..n` with their signs.
pub fn signed_permutations(n: usize) -> Vec<(Vec<usize>, i64)> {
    fn rec(left: &mut Vec<usize>, cur: &mut Vec<usize>, out: &mut Vec<(Vec<usize>, i64)>) {
        if left.is_empty() {
            let mut inversions = 0;
            for i in 0..cur.len() {
                for j in i + 1..cur.len() {
                    if cur[i] > cur[j] {
                        inversions += 1;
                    }
                }
            }
            out.push((cur.clone(), if inversions % 2 == 0 { 1 } else { -1 }));
            return;
        }
        for k in 0..left.len() {
            let x = left.remove(k);
            cur.push(x);
            rec(left, cur, out);
            cur.pop();
            left.insert(k, x);
        }
    }
    let mut out = Vec::new();
    rec(&mut (0..n).collect(), &mut Vec::new(), &mut out);
    out
}

fn rho(n: usize) -> Vec<i64> {
    let n = n as i64;
    (1..=n).map(|i| n * (n + 1) / 2 - n * i).collect()
}

/// Coordinates in the simple-root basis of a scaled vector, if it lies in the root lattice.
fn simple_root_coords(v: &[i64]) -> Option<Vec<i64>> {
    let n = v.len() as i64;
    let mut acc = 0;
    let mut out = Vec::with_capacity(v.len() - 1);
    for x in &v[..v.len() - 1] {
        acc += x;
        if acc % n != 0 {
            return None;
        }
        out.push(acc / n);
    }
    Some(out)
}

/// Number of ways to write `c` (simple-root coordinates) as a sum of positive roots.
pub fn kostant_partition(c: &[i64], memo: &mut HashMap<Vec<i64>, u64>) -> u64 {
    if c.iter().any(|&x| x < 0) {
        return 0;
    }
    let Some(i) = c.iter().position(|&x| x != 0) else {
        return 1;
    };
    if let Some(&v) = memo.get(c) {
        return v;
    }
    // roots alpha_i + ... + alpha_j for j >= i must absorb all of c[i]
    fn spread(
        i: usize,
        j: usize,
        left: i64,
        c: &mut Vec<i64>,
        memo: &mut HashMap<Vec<i64>, u64>,
    ) -> u64 {
        let r = c.len();
        if j == r - 1 {
            for x in &mut c[i..=j] {
                *x -= left;
            }
            let v = kostant_partition(c, memo);
            for x in &mut c[i..=j] {
                *x += left;
            }
            return v;
        }
        let mut total = 0;
        for take in 0..=left {
            for x in &mut c[i..=j] {
                *x -= take;
            }
            total += spread(i, j + 1, left - take, c, memo);
            for x in &mut c[i..=j] {
                *x += take;
            }
        }
        total
    }
    let mut work = c.to_vec();
    let v = spread(i, i, c[i], &mut work, memo);
    memo.insert(c.to_vec(), v);
    v
}

/// Kostant's multiplicity formula.
pub fn kostant_multiplicity(lambda: &Weight, mu: &Weight) -> i64 {
    let n = lambda.n();
    let rho = rho(n);
    let lr: Vec<i64> = lambda
        .coords()
        .iter()
        .zip(&rho)
        .map(|(a, b)| a + b)
        .collect();
    let mr: Vec<i64> = mu.coords().iter().zip(&rho).map(|(a, b)| a + b).collect();
    let mut memo = HashMap::new();
    let mut total = 0i64;
    for (perm, sign) in signed_permutations(n) {
        let diff: Vec<i64> = (0..n).map(|i| lr[perm[i]] - mr[i]).collect();
        if let Some(c) = simple_root_coords(&diff) {
            total += sign * kostant_partition(&c, &mut memo) as i64;
        }
    }
    total
}

/// Exact phase-one simplex: is there `t >= 0` with `a t = b`?
pub fn lp_feasible(a: &[Vec<BigRational>], b: &[BigRational]) -> bool {
    let rows = a.len();
    let cols = a[0].len();
    let width = cols + rows + 1;
    let mut t: Vec<Vec<BigRational>> = Vec::with_capacity(rows + 1);
    for i in 0..rows {
        let flip = b[i].is_negative();
        let mut row: Vec<BigRational> = vec![BigRational::zero(); width];
        for j in 0..cols {
            row[j] = if flip {
                -a[i][j].clone()
            } else {
                a[i][j].clone()
            };
        }
        row[cols + i] = BigRational::one();
        row[width - 1] = b[i].abs();
        t.push(row);
    }
    let mut obj = vec![BigRational::zero(); width];
    for row in &t {
        for j in 0..cols {
            obj[j] -= &row[j];
        }
        obj[width - 1] -= &row[width - 1];
    }
    t.push(obj);
    let mut basis: Vec<usize> = (cols..cols + rows).collect();
    while let Some(enter) = (0..width - 1).find(|&j| t[rows][j].is_negative()) {
        let mut leave: Option<(usize, BigRational)> = None;
        for i in 0..rows {
            if t[i][enter].is_positive() {
                let ratio = &t[i][width - 1] / &t[i][enter];
                let better = match &leave {
                    None => true,
                    Some((k, best)) => ratio < *best || (ratio == *best && basis[i] < basis[*k]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        let Some((p, _)) = leave else { break };
        let pivot = t[p][enter].clone();
        for x in t[p].iter_mut() {
            *x /= &pivot;
        }
        for i in 0..=rows {
            if i != p && !t[i][enter].is_zero() {
                let factor = t[i][enter].clone();
                let pivot_row = t[p].clone();
                for (x, y) in t[i].iter_mut().zip(&pivot_row) {
                    *x -= &factor * y;
                }
            }
        }
        basis[p] = enter;
    }
    t[rows][width - 1].is_zero()
}

/// `mu` in the convex hull of `W lambda` and congruent to `lambda` modulo the root lattice.
pub fn hull_oracle(lambda: &Weight, mu: &Weight) -> bool {
    if lambda.coset() != mu.coset() {
        return false;
    }
    let n = lambda.n();
    let verts = orbit(lambda).elements;
    let q = |x: i64| BigRational::from_integer(BigInt::from(x));
    let mut a: Vec<Vec<BigRational>> = (0..n - 1)
        .map(|i| verts.iter().map(|v| q(v.coords()[i])).collect())
        .collect();
    a.push(vec![BigRational::one(); verts.len()]);
    let mut b: Vec<BigRational> = mu.coords()[..n - 1].iter().map(|&x| q(x)).collect();
    b.push(BigRational::one());
    lp_feasible(&a, &b)
}

/// Frobenius-Schur indicator from the trivial summand of `Sym^2` or `Lambda^2`.
pub fn fs_oracle(ws: &WeightSystem) -> i8 {
    let n = ws.n();
    let rho = rho(n);
    let m = |v: &[i64]| -> i64 {
        Weight::from_scaled(v.to_vec())
            .map(|w| ws.multiplicity(&w) as i64)
            .unwrap_or(0)
    };
    let weights = ws.weights();
    let coefficient = |nu: &[i64]| -> (i64, i64) {
        let mut square = 0i64;
        for (mu, k) in weights {
            let rest: Vec<i64> = nu.iter().zip(mu.coords()).map(|(a, b)| a - b).collect();
            square += *k as i64 * m(&rest);
        }
        let adams = if nu.iter().all(|x| x % 2 == 0) {
            let half: Vec<i64> = nu.iter().map(|x| x / 2).collect();
            m(&half)
        } else {
            0
        };
        ((square + adams) / 2, (square - adams) / 2)
    };
    let (mut sym, mut alt) = (0i64, 0i64);
    for (perm, sign) in signed_permutations(n) {
        let nu: Vec<i64> = (0..n).map(|i| rho[perm[i]] - rho[i]).collect();
        let (s, a) = coefficient(&nu);
        sym += sign * s;
        alt += sign * a;
    }
    match (sym, alt) {
        (1, 0) => 1,
        (0, 1) => -1,
        other => panic!("self-dual representation must have one invariant form, got {other:?}"),
    }
}

/// Nonzero dominant weights with every fundamental coordinate at most `bound`.
pub fn fundamental_box(r: usize, bound: i64) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..r {
        out = out
            .into_iter()
            .flat_map(|p| {
                (0..=bound).map(move |x| {
                    let mut q = p.clone();
                    q.push(x);
                    q
                })
            })
            .collect();
    }
    out.retain(|a| a.iter().any(|&x| x != 0));
    out
}
