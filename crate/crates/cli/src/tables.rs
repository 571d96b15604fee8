//! Live regeneration of the published value tables.
//!
//! Every entry comes from [`evaluate`] with the same inputs an `eval` call
//! would use, then scaled by `γ = sqrt(π/N)`. The radial tables hold the
//! `u = 0.5` values of `sqrt(2π)·g·J`, i.e. the angular series at imaginary
//! argument obtained from the first kind radial function.

use std::f64::consts::{FRAC_PI_2, PI, TAU};
use std::fmt::Write as _;

use clap::ValueEnum;
use mathieu::Category;

use crate::error::{CliError, Result};
use crate::eval::{evaluate, Function, Request};
use crate::format::{number, Value};

/// Radial coordinate of the radial tables.
pub const RADIAL_U: f64 = 0.5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, ValueEnum)]
pub enum TableId {
    #[value(name = "T2")]
    T2,
    #[value(name = "T3")]
    T3,
    #[value(name = "T4")]
    T4,
    #[value(name = "T5")]
    T5,
    #[value(name = "T6")]
    T6,
}

impl TableId {
    pub const ALL: [TableId; 5] = [TableId::T2, TableId::T3, TableId::T4, TableId::T5, TableId::T6];

    pub fn name(self) -> &'static str {
        match self {
            TableId::T2 => "T2",
            TableId::T3 => "T3",
            TableId::T4 => "T4",
            TableId::T5 => "T5",
            TableId::T6 => "T6",
        }
    }

    pub fn is_radial(self) -> bool {
        matches!(self, TableId::T5 | TableId::T6)
    }

    /// Sections of the table: category, true orders, q values.
    pub fn sections(self) -> Vec<(Category, &'static [usize], &'static [f64])> {
        const ANGULAR_Q: &[f64] = &[0.0, 5.0, 10.0, 15.0, 20.0, 25.0];
        const RADIAL_Q: &[f64] = &[5.0, 10.0, 20.0];
        use Category::*;
        match self {
            TableId::T2 => vec![(EvenEven, &[0, 2, 10], ANGULAR_Q)],
            TableId::T3 => vec![(EvenOdd, &[1, 5, 15], ANGULAR_Q)],
            TableId::T4 => vec![(OddEven, &[2, 10], ANGULAR_Q), (OddOdd, &[1, 5, 15], ANGULAR_Q)],
            TableId::T5 => vec![(EvenEven, &[0, 2, 4], RADIAL_Q), (EvenOdd, &[1, 3, 5], RADIAL_Q)],
            TableId::T6 => vec![(OddEven, &[2, 4, 6], RADIAL_Q), (OddOdd, &[1, 3, 5], RADIAL_Q)],
        }
    }

    /// Value columns for one section.
    pub fn columns(self, category: Category) -> &'static [&'static str] {
        use Category::*;
        match (self, category) {
            (TableId::T5 | TableId::T6, _) => &["Siu"],
            (_, EvenEven) => &["a", "S0", "Spi2"],
            (_, EvenOdd) => &["a", "S0", "dSpi2"],
            (_, OddEven) => &["a", "dS0", "dSpi2"],
            (_, OddOdd) => &["a", "dS0", "Spi2"],
        }
    }
}

/// `sqrt(π/N)`, the factor that rescales to unit normalization `N = π`.
pub fn gamma(normalization: f64) -> f64 {
    (PI / normalization).sqrt()
}

fn real_at(req: &Request, n: usize) -> Result<f64> {
    match evaluate(req)?.orders[n].value {
        Value::Real(x) => Ok(x),
        Value::Complex { .. } => unreachable!("table functions are real"),
    }
}

/// All value columns of one table row, in [`TableId::columns`] order.
pub fn compute_row(id: TableId, category: Category, t: usize, q: f64) -> Result<Vec<f64>> {
    let n = category.order_index(t).ok_or_else(|| {
        CliError::Usage(format!("true order {t} does not occur in category {category}"))
    })?;
    let req = |function| Request {
        nmax: n + 1,
        ..Request::new(function, category, q)
    };
    let scale = gamma(real_at(&req(Function::N), n)?);

    if id.is_radial() {
        let g = real_at(&req(Function::G), n)?;
        let j = real_at(&Request { u: Some(RADIAL_U), ..req(Function::J) }, n)?;
        return Ok(vec![scale * (TAU.sqrt() * g * j)]);
    }
    id.columns(category)
        .iter()
        .map(|&column| {
            let angular = |function, v| real_at(&Request { v: Some(v), ..req(function) }, n);
            Ok(match column {
                "a" => real_at(&req(Function::Eig), n)?,
                "S0" => scale * angular(Function::S, 0.0)?,
                "Spi2" => scale * angular(Function::S, FRAC_PI_2)?,
                "dS0" => scale * angular(Function::DS, 0.0)?,
                "dSpi2" => scale * angular(Function::DS, FRAC_PI_2)?,
                other => unreachable!("unknown column {other}"),
            })
        })
        .collect()
}

/// CSV rendering, one header line per section.
pub fn render(id: TableId) -> Result<String> {
    let mut out = String::new();
    for (category, orders, qs) in id.sections() {
        writeln!(out, "kf,t,q,{}", id.columns(category).join(",")).unwrap();
        for &t in orders {
            for &q in qs {
                let values: Vec<String> =
                    compute_row(id, category, t, q)?.into_iter().map(number).collect();
                writeln!(out, "{},{t},{},{}", category.code(), number(q), values.join(",")).unwrap();
            }
        }
    }
    Ok(out)
}
