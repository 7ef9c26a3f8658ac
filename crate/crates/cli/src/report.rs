//! Serialisable run reports.
//!
//! Field order is the declaration order and every float is rounded to
//! fifteen significant digits on output, so a document that is parsed and
//! written again reproduces the same bytes.

use serde::{Deserialize, Serialize, Serializer};

pub const SCHEMA_VERSION: u32 = 1;

/// Significant digits written for every float.
pub const SIGNIFICANT_DIGITS: usize = 15;

/// `x` rounded to `digits` significant decimal digits.
pub fn round_significant(x: f64, digits: usize) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    format!("{:.*e}", digits - 1, x).parse().expect("formatted float parses")
}

/// A float written with [`SIGNIFICANT_DIGITS`] significant digits.
#[derive(Debug, Clone, Copy, PartialEq, Deserialize)]
#[serde(transparent)]
pub struct Num(pub f64);

impl Serialize for Num {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_f64(round_significant(self.0, SIGNIFICANT_DIGITS))
    }
}

impl From<f64> for Num {
    fn from(x: f64) -> Self {
        Num(x)
    }
}

pub fn nums(xs: &[f64]) -> Vec<Num> {
    xs.iter().copied().map(Num).collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Document {
    pub schema_version: u32,
    pub command: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub points: Option<Vec<PointReport>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub table: Option<TableReport>,
}

/// Everything computed for one `(α, l)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PointReport {
    pub alpha: Num,
    pub l: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub context: Option<ContextReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub series: Option<SeriesReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub energy: Option<EnergyReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pade: Option<PadeReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleReport>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ContextReport {
    pub q0: Num,
    pub omega: Num,
    pub beta: Num,
    pub lbar: Num,
    pub q_scale: Num,
    pub q0_residual: Num,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SeriesReport {
    pub normalization_factor: Num,
    pub eps_m2: Num,
    pub eps_m1: Num,
    /// `ε⁽⁰⁾ … ε⁽ᴺ⁾`.
    pub eps: Vec<Num>,
    /// `K = 1 …`.
    pub partial_sums: Vec<Num>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EnergyReport {
    pub terms: usize,
    pub value: Num,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle_defect: Option<Num>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PadeReport {
    pub n: usize,
    pub m: usize,
    pub value: Num,
    pub numerator: Vec<Num>,
    pub denominator: Vec<Num>,
    pub condition: Num,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle_defect: Option<Num>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OracleReport {
    pub energy: Num,
    pub nodes: usize,
    pub iterations: usize,
    pub residual: Num,
    pub q_max: Num,
    pub matching_point: Num,
    pub mesh_n: usize,
}

/// One reference table; `columns[j].values[i]` is the cell in row
/// `row_labels[i]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TableReport {
    pub id: u8,
    pub title: String,
    pub row_labels: Vec<String>,
    pub columns: Vec<TableColumn>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TableColumn {
    pub label: String,
    pub alpha: Num,
    pub l: u32,
    /// Decimals shown in text output, per row.
    pub decimals: Vec<usize>,
    pub values: Vec<Num>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<Num>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle_decimals: Option<usize>,
    /// `|value − oracle|` per row.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub defects: Option<Vec<Num>>,
}

pub fn to_json(doc: &Document) -> serde_json::Result<String> {
    let mut s = serde_json::to_string_pretty(doc)?;
    s.push('\n');
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rounding_is_idempotent() {
        for x in [std::f64::consts::PI, 2.997_662_446_439_16, 1e-17 / 3.0, -123_456.789_012_345_67] {
            let r = round_significant(x, 15);
            assert_eq!(round_significant(r, 15), r);
            let text = serde_json::to_string(&Num(x)).unwrap();
            let back: Num = serde_json::from_str(&text).unwrap();
            assert_eq!(serde_json::to_string(&back).unwrap(), text);
        }
        assert_eq!(round_significant(0.0, 15), 0.0);
    }
}
