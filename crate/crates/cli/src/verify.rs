//! The `verify` subcommand: recompute every reference row and compare.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::Result;
use crate::format::number;
use crate::reference::ReferenceRow;
use crate::tables::{compute_row, TableId};

pub const DEFAULT_TOLERANCE: f64 = 1e-10;

#[derive(Clone, Debug, Default, PartialEq)]
pub struct TableSummary {
    pub rows: usize,
    pub max_abs: f64,
    pub max_rel: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Failure {
    pub row: ReferenceRow,
    pub computed: f64,
    pub tolerance: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Verification {
    pub tolerance_abs: f64,
    pub tables: BTreeMap<TableId, TableSummary>,
    pub failures: Vec<Failure>,
    pub skipped: usize,
}

impl Verification {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn verify(rows: &[ReferenceRow], tolerance_abs: f64) -> Result<Verification> {
    let mut tables: BTreeMap<TableId, TableSummary> = BTreeMap::new();
    let mut failures = Vec::new();
    let mut skipped = 0;
    for row in rows {
        let Some(column) = row.column_index() else {
            skipped += 1;
            continue;
        };
        let computed = compute_row(row.table, row.category, row.t, row.q)?[column];
        let deviation = (computed - row.value).abs();
        let summary = tables.entry(row.table).or_default();
        summary.rows += 1;
        summary.max_abs = summary.max_abs.max(deviation);
        if row.value != 0.0 {
            summary.max_rel = summary.max_rel.max(deviation / row.value.abs());
        }
        let tolerance = row.tolerance(tolerance_abs);
        // written so that a NaN deviation fails
        if !(deviation <= tolerance) {
            failures.push(Failure { row: row.clone(), computed, tolerance });
        }
    }
    Ok(Verification { tolerance_abs, tables, failures, skipped })
}

impl fmt::Display for Verification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (id, s) in &self.tables {
            writeln!(
                f,
                "{}: {} rows, max abs deviation {:.3e}, max rel deviation {:.3e}",
                id.name(),
                s.rows,
                s.max_abs,
                s.max_rel
            )?;
        }
        if self.skipped > 0 {
            writeln!(f, "{} literature comparison rows not checked", self.skipped)?;
        }
        for fail in &self.failures {
            writeln!(
                f,
                "FAIL line {}: {} reference {} computed {} deviation {:.3e} > {:.3e}",
                fail.row.line,
                fail.row,
                number(fail.row.value),
                number(fail.computed),
                (fail.computed - fail.row.value).abs(),
                fail.tolerance
            )?;
        }
        let checked: usize = self.tables.values().map(|s| s.rows).sum();
        if self.passed() {
            write!(f, "all {checked} rows within tolerance (abs {:e})", self.tolerance_abs)
        } else {
            write!(f, "{} of {checked} rows outside tolerance", self.failures.len())
        }
    }
}
