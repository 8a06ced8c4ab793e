//! Fraction-free integer elimination: rank, nullspace and incremental independence.

use num_integer::Integer;

fn normalize_row(row: &mut [i128]) {
    let g = row.iter().fold(0i128, |g, &x| g.gcd(&x));
    if g > 1 {
        for x in row.iter_mut() {
            *x /= g;
        }
    }
}

/// Reduced row echelon form over the integers: every pivot row is primitive and
/// every pivot column is zero outside its pivot row. Returns the rows and pivot columns.
pub fn integer_rref(rows: &[Vec<i64>]) -> (Vec<Vec<i128>>, Vec<usize>) {
    let cols = rows.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| i128::from(x)).collect())
        .collect();
    let mut pivots = Vec::new();
    let mut top = 0;
    for c in 0..cols {
        let Some(p) = (top..m.len()).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(top, p);
        normalize_row(&mut m[top]);
        if m[top][c] < 0 {
            for x in m[top].iter_mut() {
                *x = -*x;
            }
        }
        let pivot_row = m[top].clone();
        let pv = pivot_row[c];
        for (i, row) in m.iter_mut().enumerate() {
            if i == top || row[c] == 0 {
                continue;
            }
            let f = row[c];
            for (x, &p) in row.iter_mut().zip(&pivot_row) {
                *x = *x * pv - f * p;
            }
            normalize_row(row);
        }
        pivots.push(c);
        top += 1;
        if top == m.len() {
            break;
        }
    }
    m.truncate(top);
    (m, pivots)
}

pub fn rank(rows: &[Vec<i64>]) -> usize {
    integer_rref(rows).1.len()
}

/// Integer basis of the right nullspace `{x : rows * x = 0}`.
pub fn nullspace(rows: &[Vec<i64>], cols: usize) -> Vec<Vec<i128>> {
    if rows.is_empty() {
        return (0..cols)
            .map(|c| (0..cols).map(|i| i128::from(i == c)).collect())
            .collect();
    }
    let (m, pivots) = integer_rref(rows);
    let lcm = m
        .iter()
        .zip(&pivots)
        .fold(1i128, |l, (row, &c)| l.lcm(&row[c]));
    let mut basis = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut x = vec![0i128; cols];
        x[free] = lcm;
        for (row, &c) in m.iter().zip(&pivots) {
            x[c] = -row[free] * (lcm / row[c]);
        }
        normalize_row(&mut x);
        basis.push(x);
    }
    basis
}

/// Incrementally maintained echelon basis for independence tests.
#[derive(Clone, Debug, Default)]
pub struct EchelonBasis {
    rows: Vec<(usize, Vec<i128>)>,
}

impl EchelonBasis {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &[i64]) -> Vec<i128> {
        let mut x: Vec<i128> = v.iter().map(|&a| i128::from(a)).collect();
        for (c, row) in &self.rows {
            if x[*c] == 0 {
                continue;
            }
            let f = x[*c];
            let pv = row[*c];
            for (xi, &ri) in x.iter_mut().zip(row) {
                *xi = *xi * pv - f * ri;
            }
            normalize_row(&mut x);
        }
        x
    }

    pub fn is_independent(&self, v: &[i64]) -> bool {
        self.reduce(v).iter().any(|&x| x != 0)
    }

    /// Adds `v`; returns false (leaving the basis unchanged) if it is dependent.
    pub fn insert(&mut self, v: &[i64]) -> bool {
        let x = self.reduce(v);
        match x.iter().position(|&a| a != 0) {
            Some(c) => {
                self.rows.push((c, x));
                true
            }
            None => false,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_of_small_matrices() {
        assert_eq!(rank(&[vec![1, 2, 3], vec![2, 4, 6]]), 1);
        assert_eq!(rank(&[vec![1, 0, 0], vec![0, 1, 0], vec![1, 1, 0]]), 2);
        assert_eq!(rank(&[vec![0, 0], vec![0, 0]]), 0);
        assert_eq!(rank(&[vec![3, 1], vec![1, 3]]), 2);
    }

    #[test]
    fn nullspace_is_orthogonal() {
        let rows = vec![vec![1, 1, 1, 1], vec![2, -1, 0, 3]];
        let ns = nullspace(&rows, 4);
        assert_eq!(ns.len(), 2);
        for x in &ns {
            for r in &rows {
                let dot: i128 = r.iter().zip(x).map(|(&a, &b)| i128::from(a) * b).sum();
                assert_eq!(dot, 0);
            }
        }
    }

    #[test]
    fn echelon_incremental() {
        let mut b = EchelonBasis::new();
        assert!(b.insert(&[1, 2, 0]));
        assert!(!b.insert(&[2, 4, 0]));
        assert!(b.is_independent(&[0, 0, 1]));
        assert!(b.insert(&[1, 0, 1]));
        assert!(!b.is_independent(&[2, 2, 1]));
        assert_eq!(b.rank(), 2);
    }
}
