//! Published reference values, one row per line:
//! `table,kf,t,q,column,value,digits`, where `digits` counts the significant
//! digits as printed. Lines starting with `#` are comments.

use clap::ValueEnum;
use mathieu::Category;

use crate::error::{CliError, Result};
use crate::tables::TableId;

/// The reference data compiled into the binary.
pub const EMBEDDED: &str = include_str!("../data/reference_tables.csv");

const HEADER: &str = "table,kf,t,q,column,value,digits";

/// Column holding the shorter literature comparison values of the radial
/// tables; carried along but never verified.
pub const LITERATURE: &str = "lit";

#[derive(Clone, Debug, PartialEq)]
pub struct ReferenceRow {
    pub line: usize,
    pub table: TableId,
    pub category: Category,
    pub t: usize,
    pub q: f64,
    pub column: String,
    pub value: f64,
    pub digits: u32,
}

impl ReferenceRow {
    pub fn is_literature(&self) -> bool {
        self.column == LITERATURE
    }

    /// Accepted deviation: `max(tolerance_abs, 10^(1 - digits)·|value|)`.
    pub fn tolerance(&self, tolerance_abs: f64) -> f64 {
        tolerance_abs.max(10f64.powi(1 - self.digits as i32) * self.value.abs())
    }

    /// Position of this row's column among the computed table columns.
    pub fn column_index(&self) -> Option<usize> {
        self.table
            .columns(self.category)
            .iter()
            .position(|c| *c == self.column)
    }
}

impl std::fmt::Display for ReferenceRow {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{} kf={} t={} q={} {}",
            self.table.name(),
            self.category.code(),
            self.t,
            self.q,
            self.column
        )
    }
}

pub fn parse(text: &str) -> Result<Vec<ReferenceRow>> {
    let mut rows = Vec::new();
    let mut seen_header = false;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        if !seen_header {
            if content != HEADER {
                return Err(CliError::Data { line, message: format!("expected header {HEADER:?}") });
            }
            seen_header = true;
            continue;
        }
        rows.push(parse_row(line, content)?);
    }
    if rows.is_empty() {
        return Err(CliError::Data { line: 0, message: "no reference rows".into() });
    }
    Ok(rows)
}

fn parse_row(line: usize, content: &str) -> Result<ReferenceRow> {
    let err = |message: String| CliError::Data { line, message };
    let f: Vec<&str> = content.split(',').map(str::trim).collect();
    if f.len() != 7 {
        return Err(err(format!("expected 7 fields, found {}", f.len())));
    }
    let table = TableId::from_str(f[0], false).map_err(|_| err(format!("unknown table {:?}", f[0])))?;
    let category = f[1]
        .parse::<u8>()
        .ok()
        .and_then(|k| Category::from_code(k).ok())
        .ok_or_else(|| err(format!("bad function code {:?}", f[1])))?;
    let t: usize = f[2].parse().map_err(|_| err(format!("bad order {:?}", f[2])))?;
    if category.order_index(t).is_none() {
        return Err(err(format!("order {t} does not occur in category {category}")));
    }
    let q: f64 = f[3].parse().map_err(|_| err(format!("bad q {:?}", f[3])))?;
    let value: f64 = f[5].parse().map_err(|_| err(format!("bad value {:?}", f[5])))?;
    let digits: u32 = f[6].parse().map_err(|_| err(format!("bad digit count {:?}", f[6])))?;
    let row = ReferenceRow {
        line,
        table,
        category,
        t,
        q,
        column: f[4].to_string(),
        value,
        digits,
    };
    let known = row.column_index().is_some() || (table.is_radial() && row.is_literature());
    if !known {
        return Err(err(format!("column {:?} not in table {}", row.column, table.name())));
    }
    if !table.sections().iter().any(|(c, _, _)| *c == category) {
        return Err(err(format!("category {category} not in table {}", table.name())));
    }
    Ok(row)
}
