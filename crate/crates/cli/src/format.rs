//! Fixed-precision number formatting and the CSV/JSON record layouts.
//!
//! Numbers carry 15 significant digits in the style of C's `%.15g`: trailing
//! zeros dropped, exponent form below `1e-4` and from `1e15` up. Fifteen digits
//! survive a decimal to `f64` to decimal round trip unchanged, so parsing an
//! emitted record and printing it again reproduces the same bytes.

use std::fmt::Write as _;

use serde::Deserialize;

use crate::error::{CliError, Result};

pub const SIGNIFICANT_DIGITS: usize = 15;

/// `x` with 15 significant digits, round-half-even on the exact binary value.
pub fn number(x: f64) -> String {
    assert!(x.is_finite(), "non-finite values are rejected before formatting");
    if x == 0.0 {
        return "0".to_string();
    }
    let sci = format!("{:.*e}", SIGNIFICANT_DIGITS - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent form");
    let exp: i32 = exp.parse().expect("integer exponent");
    let negative = mantissa.starts_with('-');
    let digits: String = mantissa.chars().filter(char::is_ascii_digit).collect();
    let sign = if negative { "-" } else { "" };

    if exp < -4 || exp >= SIGNIFICANT_DIGITS as i32 {
        let (lead, rest) = digits.split_at(1);
        let rest = rest.trim_end_matches('0');
        let point = if rest.is_empty() { "" } else { "." };
        let exp_sign = if exp < 0 { '-' } else { '+' };
        return format!("{sign}{lead}{point}{rest}e{exp_sign}{:02}", exp.abs());
    }
    let (int, frac) = if exp >= 0 {
        let split = exp as usize + 1;
        (digits[..split].to_string(), digits[split..].to_string())
    } else {
        let zeros = "0".repeat((-exp - 1) as usize);
        ("0".to_string(), format!("{zeros}{digits}"))
    };
    let frac = frac.trim_end_matches('0');
    if frac.is_empty() {
        format!("{sign}{int}")
    } else {
        format!("{sign}{int}.{frac}")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Deserialize)]
#[serde(untagged)]
pub enum Value {
    Real(f64),
    Complex { re: f64, im: f64 },
}

impl Value {
    fn check(&self, t: usize) -> Result<()> {
        let bad = match *self {
            Value::Real(x) => (!x.is_finite()).then_some(x),
            Value::Complex { re, im } => [re, im].into_iter().find(|x| !x.is_finite()),
        };
        match bad {
            Some(value) => Err(CliError::NonFinite { t, value }),
            None => Ok(()),
        }
    }

    fn json(&self) -> String {
        match *self {
            Value::Real(x) => number(x),
            Value::Complex { re, im } => {
                format!(r#"{{"re":{},"im":{}}}"#, number(re), number(im))
            }
        }
    }

    fn csv_fields(&self) -> Vec<String> {
        match *self {
            Value::Real(x) => vec![number(x)],
            Value::Complex { re, im } => vec![number(re), number(im)],
        }
    }
}

#[derive(Clone, Debug, PartialEq, Deserialize)]
pub struct OrderRecord {
    pub t: usize,
    pub value: Value,
    #[serde(default)]
    pub derivative: Option<Value>,
}

/// Output of one `eval` invocation.
#[derive(Clone, Debug, PartialEq, Deserialize)]
pub struct Report {
    #[serde(rename = "fn")]
    pub function: String,
    pub kf: u8,
    pub q: f64,
    pub arg: Option<f64>,
    pub orders: Vec<OrderRecord>,
}

impl Report {
    pub fn is_complex(&self) -> bool {
        matches!(self.orders.first(), Some(r) if matches!(r.value, Value::Complex { .. }))
    }

    fn has_derivative(&self) -> bool {
        self.orders.iter().any(|r| r.derivative.is_some())
    }

    /// Rejects NaN and infinities, which neither format can carry.
    pub fn check_finite(&self) -> Result<()> {
        for r in &self.orders {
            r.value.check(r.t)?;
            if let Some(d) = &r.derivative {
                d.check(r.t)?;
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> Result<String> {
        self.check_finite()?;
        let arg = self.arg.map_or_else(|| "null".to_string(), number);
        let mut out = format!(
            r#"{{"fn":{},"kf":{},"q":{},"arg":{},"orders":["#,
            serde_json::to_string(&self.function).expect("string serializes"),
            self.kf,
            number(self.q),
            arg
        );
        for (i, r) in self.orders.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            write!(out, r#"{{"t":{},"value":{}"#, r.t, r.value.json()).unwrap();
            if let Some(d) = &r.derivative {
                write!(out, r#","derivative":{}"#, d.json()).unwrap();
            }
            out.push('}');
        }
        out.push_str("]}\n");
        Ok(out)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))
    }

    fn csv_header(&self) -> String {
        let mut cols = vec!["fn", "kf", "q", "arg", "t"];
        let complex = self.is_complex();
        if complex {
            cols.extend(["value_re", "value_im"]);
        } else {
            cols.push("value");
        }
        if self.has_derivative() {
            if complex {
                cols.extend(["derivative_re", "derivative_im"]);
            } else {
                cols.push("derivative");
            }
        }
        cols.join(",")
    }

    pub fn to_csv(&self) -> Result<String> {
        self.check_finite()?;
        let mut out = self.csv_header();
        out.push('\n');
        let arg = self.arg.map(number).unwrap_or_default();
        for r in &self.orders {
            let mut fields = vec![
                self.function.clone(),
                self.kf.to_string(),
                number(self.q),
                arg.clone(),
                r.t.to_string(),
            ];
            fields.extend(r.value.csv_fields());
            if let Some(d) = &r.derivative {
                fields.extend(d.csv_fields());
            }
            out.push_str(&fields.join(","));
            out.push('\n');
        }
        Ok(out)
    }

    pub fn from_csv(text: &str) -> Result<Self> {
        let bad = |msg: &str| CliError::Parse(msg.to_string());
        let mut lines = text.lines();
        let header: Vec<&str> = lines.next().ok_or_else(|| bad("empty input"))?.split(',').collect();
        if header.len() < 6 || header[..5] != ["fn", "kf", "q", "arg", "t"] {
            return Err(bad("unexpected header"));
        }
        let complex = header[5] == "value_re";
        let width = if complex { 2 } else { 1 };
        let derivative = header.len() > 5 + width;
        if header.len() != 5 + width * (1 + usize::from(derivative)) {
            return Err(bad("unexpected header"));
        }

        let float = |s: &str| s.parse::<f64>().map_err(|_| bad(&format!("bad number {s:?}")));
        let value = |f: &[&str]| -> Result<Value> {
            Ok(if complex {
                Value::Complex { re: float(f[0])?, im: float(f[1])? }
            } else {
                Value::Real(float(f[0])?)
            })
        };

        let mut report: Option<Report> = None;
        for line in lines {
            let f: Vec<&str> = line.split(',').collect();
            if f.len() != header.len() {
                return Err(bad(&format!("expected {} fields in {line:?}", header.len())));
            }
            let t = f[4].parse().map_err(|_| bad("bad order"))?;
            let record = OrderRecord {
                t,
                value: value(&f[5..5 + width])?,
                derivative: if derivative { Some(value(&f[5 + width..])?) } else { None },
            };
            let report = report.get_or_insert(Report {
                function: f[0].to_string(),
                kf: f[1].parse().map_err(|_| bad("bad kf"))?,
                q: float(f[2])?,
                arg: if f[3].is_empty() { None } else { Some(float(f[3])?) },
                orders: Vec::new(),
            });
            report.orders.push(record);
        }
        report.ok_or_else(|| bad("no records"))
    }
}
