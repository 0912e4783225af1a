//! Cross-checks of the formulas against exact counts, and the reports
//! they produce.

mod random;
mod report;

pub use random::{random_graph, random_polynomial_specs, random_toeplitz_specs};
pub use report::{
    bound_report, reports_to_csv, BoundEntry, BoundReport, Check, Quantity, Relation,
};

use std::ops::RangeInclusive;

use num_bigint::BigUint;
use serde::Serialize;
use thiserror::Error;

use crate::counting::{count_is, count_is_banded, BigCount, CountError, BANDED_MAX_WIDTH};
use crate::formulas::FormulaError;
use crate::graphs::{
    build_riordan, decompose, is_io_decomposable, is_proper, predict_bell_cross_block,
    predict_blocks, BitGraph, BitMatrix, Family, GraphError, GraphSpec, RiordanSpec,
};

pub const DEFAULT_MAX_N: usize = 40;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Formula(#[from] FormulaError),
    #[error(transparent)]
    Count(#[from] CountError),
    #[error("n={n} exceeds the guard {max}")]
    Guard { n: usize, max: usize },
    #[error("max n must be in 1..=12, got {0}")]
    Table1Range(usize),
    #[error("family template `{0}` has no `{{n}}` placeholder")]
    BadTemplate(String),
}

/// `i(G)` by the banded sweep for Toeplitz specs of small bandwidth and by
/// branch and reduce otherwise.
pub fn exact_count(spec: &GraphSpec, graph: &BitGraph) -> BigCount {
    if let GraphSpec::Toeplitz { distances, .. } = spec {
        let width = distances.iter().copied().max().unwrap_or(1);
        if width <= BANDED_MAX_WIDTH {
            return count_is_banded(graph, width).expect("toeplitz band");
        }
    }
    count_is(graph)
}

const TABLE1: [(&str, [u64; 12]); 3] = [
    ("pascal", [2, 3, 4, 6, 7, 12, 15, 23, 24, 46, 60, 98]),
    ("motzkin", [2, 3, 4, 7, 9, 13, 17, 26, 29, 48, 55, 95]),
    ("catalan", [2, 3, 4, 7, 8, 14, 21, 35, 36, 60, 81, 134]),
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Table1Cell {
    pub family: &'static str,
    pub n: usize,
    pub expected: u64,
    #[serde(serialize_with = "report::as_number")]
    pub actual: BigCount,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Table1Report {
    pub cells: Vec<Table1Cell>,
    pub passed: usize,
    pub failed: usize,
}

impl Table1Report {
    pub fn all_pass(&self) -> bool {
        self.failed == 0
    }
}

/// Counts the Pascal, Motzkin and Catalan graphs for `n = 1..=max_n` and
/// compares them with the published table.
pub fn verify_table1(max_n: usize) -> Result<Table1Report, VerifyError> {
    if !(1..=12).contains(&max_n) {
        return Err(VerifyError::Table1Range(max_n));
    }
    let mut cells = Vec::new();
    for (family, row) in TABLE1 {
        for n in 1..=max_n {
            let spec = match family {
                "pascal" => RiordanSpec::pascal(n),
                "motzkin" => RiordanSpec::motzkin(n),
                _ => RiordanSpec::catalan(n),
            };
            let actual = count_is(&build_riordan(&spec)?);
            let expected = row[n - 1];
            cells.push(Table1Cell {
                family,
                n,
                expected,
                pass: actual == BigUint::from(expected),
                actual,
            });
        }
    }
    let passed = cells.iter().filter(|c| c.pass).count();
    let failed = cells.len() - passed;
    Ok(Table1Report {
        cells,
        passed,
        failed,
    })
}

/// Reports for `template` with `{n}` replaced by each value in `range`,
/// in increasing `n`.
pub fn sweep_bounds(
    template: &str,
    range: RangeInclusive<usize>,
    max_n: usize,
) -> Result<Vec<BoundReport>, VerifyError> {
    if !template.contains("{n}") {
        return Err(VerifyError::BadTemplate(template.to_string()));
    }
    if *range.end() > max_n {
        return Err(VerifyError::Guard {
            n: *range.end(),
            max: max_n,
        });
    }
    range
        .map(|n| {
            let spec: GraphSpec = template.replace("{n}", &n.to_string()).parse()?;
            bound_report(&spec)
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CellMismatch {
    pub block: &'static str,
    pub row: usize,
    pub col: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DecompositionCheck {
    pub spec: String,
    pub n: usize,
    pub passed: bool,
    /// First differing cell between predicted and observed blocks, 0-based
    /// within the block.
    pub first_mismatch: Option<CellMismatch>,
    /// For io-decomposable Bell specs, whether `B` also has the
    /// `(zg, zg) + ((zg)'(sqrt z), zg)^T` form.
    pub bell_form: Option<bool>,
    pub y_is_zero: bool,
}

fn first_mismatch(block: &'static str, a: &BitMatrix, b: &BitMatrix) -> Option<CellMismatch> {
    if a.rows() != b.rows() || a.cols() != b.cols() {
        return Some(CellMismatch {
            block,
            row: 0,
            col: 0,
        });
    }
    a.first_difference(b)
        .map(|(row, col)| CellMismatch { block, row, col })
}

/// Compares the blocks predicted from `(g, f)` with the odd/even blocks
/// of the built graph.
pub fn verify_decomposition(spec: &RiordanSpec) -> Result<DecompositionCheck, VerifyError> {
    if !is_proper(spec)? {
        return Err(GraphError::Improper.into());
    }
    let observed = decompose(&build_riordan(spec)?)?;
    let predicted = predict_blocks(spec)?;
    let mut mismatch = first_mismatch("X", &predicted.x, &observed.x)
        .or_else(|| first_mismatch("Y", &predicted.y, &observed.y))
        .or_else(|| first_mismatch("B", &predicted.b, &observed.b));
    let bell_form = if spec.family() == Family::Bell && is_io_decomposable(spec)? {
        let bell = predict_bell_cross_block(spec)?;
        let diff = first_mismatch("B (Bell form)", &bell, &observed.b);
        mismatch = mismatch.or(diff);
        Some(diff.is_none())
    } else {
        None
    };
    Ok(DecompositionCheck {
        spec: GraphSpec::Riordan {
            g: spec.g.clone(),
            f: spec.f.clone(),
            n: spec.n,
        }
        .to_string(),
        n: spec.n,
        passed: mismatch.is_none(),
        first_mismatch: mismatch,
        bell_form,
        y_is_zero: observed.y.is_zero(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table1_small() {
        let r = verify_table1(4).unwrap();
        assert_eq!(r.cells.len(), 12);
        assert!(r.all_pass());
        assert!(r
            .cells
            .iter()
            .any(|c| c.family == "catalan" && c.n == 4 && c.actual == BigUint::from(7u32)));
        let one = verify_table1(1).unwrap();
        assert!(one.cells.iter().all(|c| c.actual == BigUint::from(2u32)));
        assert!(verify_table1(13).is_err());
        assert!(verify_table1(0).is_err());
    }

    #[test]
    fn decomposition_examples() {
        let r = verify_decomposition(&RiordanSpec::pascal(16)).unwrap();
        assert!(r.passed && r.bell_form == Some(true));
        let r = verify_decomposition(&RiordanSpec::catalan(16)).unwrap();
        assert!(r.passed && r.y_is_zero);
        let r = verify_decomposition(&RiordanSpec::motzkin(8)).unwrap();
        assert!(r.passed && r.bell_form.is_none());
    }

    #[test]
    fn sweep_rejects_bad_input() {
        assert!(matches!(
            sweep_bounds("pascal:n=4", 4..=5, 40),
            Err(VerifyError::BadTemplate(_))
        ));
        assert_eq!(
            sweep_bounds("pascal:n={n}", 4..=41, 40).unwrap_err(),
            VerifyError::Guard { n: 41, max: 40 }
        );
        assert_eq!(sweep_bounds("pascal:n={n}", 5..=7, 40).unwrap().len(), 3);
    }
}
