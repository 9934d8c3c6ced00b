//! Closed forms for linear phenylenes `PH_n` (`n` hexagons in a row).
//!
//! The edge-Wiener polynomials come from the four quotient trees: `T_1` is
//! a single edge, `T_2` and `T_3` are paths on `n + 1` nodes, and `T_4` is
//! the path of hexagons. The hyper-Wiener pair sum is the total of the
//! thirteen families of cut pairs (long cut, slanted cuts on each side,
//! square cuts), which collapses to
//!
//! `WWe*(PH_n) = 24n⁴ − 55n³ + 48n² − 16n + 2`.

use serde::Serialize;

use crate::{Error, Result};

/// `(W(T, w), Ŵe(T, w'), Wve(T, w, w'))` for one tree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TreeValues {
    pub w_v: u64,
    pub w_e_hat: u64,
    pub w_ve: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LinearFormulaReport {
    pub n: u64,
    pub w_e_hat: u64,
    pub w_e: u64,
    pub wwe_star: u64,
    pub ww_e: u64,
    /// `T_1`, `T_2` (equal to `T_3`), `T_4`.
    pub long_cut_tree: TreeValues,
    pub slanted_tree: TreeValues,
    pub square_tree: TreeValues,
}

/// Evaluates `Σ coefficients[k] · n^k / divisor`, checking the division is
/// exact and the value fits.
fn poly(n: i128, coefficients: &[i128], divisor: i128) -> Result<u64> {
    let overflow = || Error::Overflow("closed-form polynomial");
    let mut value: i128 = 0;
    for &c in coefficients.iter().rev() {
        value = value
            .checked_mul(n)
            .and_then(|v| v.checked_add(c))
            .ok_or_else(overflow)?;
    }
    assert_eq!(
        value % divisor,
        0,
        "closed form not divisible by {divisor} at n = {n}"
    );
    u64::try_from(value / divisor).map_err(|_| overflow())
}

pub fn linear_formulas(n: u64) -> Result<LinearFormulaReport> {
    assert!(n >= 1, "PH_n needs at least one hexagon");
    let x = i128::from(n);
    // coefficients from the constant term up
    let report = LinearFormulaReport {
        n,
        w_e_hat: poly(x, &[-3, 22, -39, 32], 1)?,
        w_e: poly(x, &[0, 2, -7, 32], 1)?,
        wwe_star: poly(x, &[2, -16, 48, -55, 24], 1)?,
        ww_e: poly(x, &[-1, 8, 2, 9, 24], 1)?,
        long_cut_tree: TreeValues {
            w_v: poly(x, &[1, -6, 9], 1)?,
            w_e_hat: 0,
            w_ve: 0,
        },
        slanted_tree: TreeValues {
            w_v: poly(x, &[0, 4, -6, 6], 1)?,
            w_e_hat: poly(x, &[0, 4, -6, 2], 3)?,
            w_ve: poly(x, &[0, 4, -8, 4], 1)?,
        },
        square_tree: TreeValues {
            w_v: poly(x, &[0, -6, 0, 6], 1)?,
            w_e_hat: poly(x, &[-12, 22, -12, 2], 3)?,
            w_ve: poly(x, &[0, 8, -12, 4], 1)?,
        },
    };
    debug_assert!(report.is_consistent());
    Ok(report)
}

impl LinearFormulaReport {
    /// The relations tying the closed forms together: `We − Ŵe = C(|E|, 2)`,
    /// the hyper-Wiener identity, and the tree decomposition of `Ŵe`.
    pub fn is_consistent(&self) -> bool {
        let edges = 8 * u128::from(self.n) - 2;
        let pairs = edges * (edges - 1) / 2;
        let trees = [
            self.long_cut_tree,
            self.slanted_tree,
            self.slanted_tree,
            self.square_tree,
        ];
        let tree_sum: u128 = trees
            .iter()
            .map(|t| u128::from(t.w_v) + u128::from(t.w_e_hat) + u128::from(t.w_ve))
            .sum();
        u128::from(self.w_e) == u128::from(self.w_e_hat) + pairs
            && u128::from(self.ww_e) + pairs == 2 * u128::from(self.w_e) + u128::from(self.wwe_star)
            && tree_sum == u128::from(self.w_e_hat)
    }
}
