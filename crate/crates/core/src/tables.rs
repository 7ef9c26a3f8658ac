//! Parameter grids and printed precision of the five benchmark tables.

use crate::Real;

/// Padé orders `[N, M]` listed in the Padé tables.
pub const PADE_ORDERS: [(usize, usize); 6] = [(2, 2), (2, 3), (3, 3), (3, 4), (4, 4), (4, 5)];

/// Number of partial sums shown in the convergence tables.
pub const TERMS: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Column {
    pub label: &'static str,
    pub alpha: Real,
    pub l: u32,
    /// Decimal places printed for the expansion values.
    pub decimals: usize,
    /// Decimal places printed for the numerical-integration value, if shown.
    pub oracle_decimals: Option<usize>,
}

const fn col(label: &'static str, alpha: Real, l: u32, decimals: usize, oracle: Option<usize>) -> Column {
    Column { label, alpha, l, decimals, oracle_decimals: oracle }
}

/// Ground-state partial sums `K = 1 … 10` versus α.
pub const TABLE1: [Column; 8] = [
    col("1/100", 0.01, 0, 13, None),
    col("1/20", 0.05, 0, 11, Some(11)),
    col("1/10", 0.1, 0, 9, Some(9)),
    col("1/5", 0.2, 0, 8, Some(8)),
    col("1/4", 0.25, 0, 8, Some(8)),
    col("1/3", 1.0 / 3.0, 0, 6, Some(6)),
    col("1/2", 0.5, 0, 5, Some(6)),
    col("2", 2.0, 0, 4, Some(6)),
];

/// Partial sums versus `l` at α = 1/2.
pub const TABLE2: [Column; 4] = [
    col("l=1", 0.5, 1, 6, None),
    col("l=5", 0.5, 5, 7, None),
    col("l=10", 0.5, 10, 9, None),
    col("l=20", 0.5, 20, 12, None),
];

/// Ground-state Padé approximants versus α.
pub const TABLE3: [Column; 4] = [
    col("1/100", 0.01, 0, 13, None),
    col("1/10", 0.1, 0, 8, None),
    col("1/3", 1.0 / 3.0, 0, 5, None),
    col("2", 2.0, 0, 4, None),
];

/// Padé approximants versus `l` at α = 1/2.
pub const TABLE4: [Column; 6] = [
    col("l=0", 0.5, 0, 6, None),
    col("l=1", 0.5, 1, 6, None),
    col("l=3", 0.5, 3, 6, None),
    col("l=5", 0.5, 5, 9, None),
    col("l=10", 0.5, 10, 9, None),
    col("l=20", 0.5, 20, 12, None),
];

/// Rows of the K = 6 / [3,3] / numerical-integration comparison.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComparisonRow {
    pub label: &'static str,
    pub alpha: Real,
    pub partial_decimals: usize,
    pub pade_decimals: usize,
    pub oracle_decimals: Option<usize>,
}

const fn row(label: &'static str, alpha: Real, k6: usize, p33: usize, dni: Option<usize>) -> ComparisonRow {
    ComparisonRow {
        label,
        alpha,
        partial_decimals: k6,
        pade_decimals: p33,
        oracle_decimals: dni,
    }
}

pub const TABLE5: [ComparisonRow; 8] = [
    row("1/100", 0.01, 13, 13, None),
    row("1/20", 0.05, 11, 11, Some(11)),
    row("1/10", 0.1, 11, 11, Some(11)),
    row("1/5", 0.2, 9, 9, Some(11)),
    row("1/4", 0.25, 9, 9, Some(11)),
    row("1/3", 1.0 / 3.0, 9, 9, Some(11)),
    row("1/2", 0.5, 8, 9, Some(11)),
    row("2", 2.0, 6, 6, Some(11)),
];

/// Partial-sum count and Padé order compared in the last table.
pub const TABLE5_TERMS: usize = 6;
pub const TABLE5_PADE: (usize, usize) = (3, 3);

/// Fixed-point rendering with `decimals` places.
pub fn format_fixed(value: Real, decimals: usize) -> String {
    format!("{value:.decimals$}")
}
