//! Duality under the outer automorphism, Frobenius-Schur indicators and the realness index.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::weights::{root_datum, Weight};

/// Summary of how a highest weight behaves under duality.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualityInfo {
    pub dual: Weight,
    pub self_dual: bool,
    /// `Some(+1)` orthogonal, `Some(-1)` symplectic, `None` when not self-dual.
    pub fs_indicator: Option<i8>,
    pub delta: u8,
}

/// `-w_0 lambda`: negate and reverse the coordinates.
pub fn dual_weight(lambda: &Weight) -> Weight {
    let coords: Vec<i64> = lambda.coords().iter().rev().map(|c| -c).collect();
    Weight::from_scaled(coords).expect("negation preserves the trace")
}

pub fn is_self_dual(lambda: &Weight) -> bool {
    dual_weight(lambda) == *lambda
}

/// `(-1)^{sum_i a_i i (n-i)}` for self-dual `lambda`.
pub fn frobenius_schur(lambda: &Weight) -> Result<i8> {
    if !is_self_dual(lambda) {
        return Err(Error::NotApplicable(format!(
            "{:?} is not self-dual",
            lambda.coords()
        )));
    }
    let n = lambda.n() as i64;
    let a = lambda.fundamental_coords()?;
    let exponent: i64 = a
        .iter()
        .enumerate()
        .map(|(idx, ai)| {
            let i = idx as i64 + 1;
            ai * i * (n - i)
        })
        .sum();
    Ok(if exponent.rem_euclid(2) == 0 { 1 } else { -1 })
}

/// 1 for orthogonal representations, 2 otherwise.
pub fn delta(lambda: &Weight) -> u8 {
    match frobenius_schur(lambda) {
        Ok(1) => 1,
        _ => 2,
    }
}

pub fn duality_info(lambda: &Weight) -> DualityInfo {
    let dual = dual_weight(lambda);
    let self_dual = dual == *lambda;
    let fs_indicator = frobenius_schur(lambda).ok();
    DualityInfo {
        dual,
        self_dual,
        fs_indicator,
        delta: delta(lambda),
    }
}

/// True iff `2 lambda` is neither a root nor a sum of two roots.
pub fn two_lambda_outside(lambda: &Weight) -> Result<bool> {
    let d = root_datum(lambda.n() - 1)?;
    let twice = lambda.scaled_by(2);
    Ok(!twice.is_root() && !d.root_sums().contains(&twice))
}
