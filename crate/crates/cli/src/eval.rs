//! The `eval` subcommand: any toolbox function for the first `nmax` orders.

use clap::ValueEnum;
use mathieu::angular::{cpm, dim_for_orders, dspm, eig_spm, npm, spm};
use mathieu::radial::{gpm, spm_hyperbolic, RadialEvaluator};
use mathieu::{Category, Complex64, HankelKind, RadialEval, SpectralData64};

use crate::error::{CliError, Result};
use crate::format::{OrderRecord, Report, Value};

pub const MAX_ORDERS: usize = 25;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, ValueEnum)]
pub enum Function {
    /// characteristic values a
    #[value(name = "eig")]
    Eig,
    /// angular function S(v) with its derivative
    #[value(name = "S")]
    S,
    #[value(name = "dS")]
    DS,
    /// normalization factor
    #[value(name = "N")]
    N,
    /// correlation factor between q and q'
    #[value(name = "C")]
    C,
    /// joining factor
    #[value(name = "g")]
    G,
    /// radial function of the first kind with its derivative
    #[value(name = "J")]
    J,
    #[value(name = "dJ")]
    DJ,
    /// radial function of the second kind with its derivative
    #[value(name = "Y")]
    Y,
    #[value(name = "dY")]
    DY,
    /// J + iY with its derivative
    #[value(name = "H1")]
    H1,
    #[value(name = "dH1")]
    DH1,
    /// J - iY with its derivative
    #[value(name = "H2")]
    H2,
    #[value(name = "dH2")]
    DH2,
    /// angular series at imaginary argument, S(iu) or -iS(iu)
    #[value(name = "Shyp")]
    Shyp,
}

/// The one extra input a function takes besides `q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Argument {
    None,
    V,
    U,
    QPrime,
}

impl Function {
    pub fn name(self) -> &'static str {
        use Function::*;
        match self {
            Eig => "eig",
            S => "S",
            DS => "dS",
            N => "N",
            C => "C",
            G => "g",
            J => "J",
            DJ => "dJ",
            Y => "Y",
            DY => "dY",
            H1 => "H1",
            DH1 => "dH1",
            H2 => "H2",
            DH2 => "dH2",
            Shyp => "Shyp",
        }
    }

    fn argument(self) -> Argument {
        use Function::*;
        match self {
            Eig | N | G => Argument::None,
            S | DS => Argument::V,
            C => Argument::QPrime,
            J | DJ | Y | DY | H1 | DH1 | H2 | DH2 | Shyp => Argument::U,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Request {
    pub function: Function,
    pub category: Category,
    pub q: f64,
    pub u: Option<f64>,
    pub v: Option<f64>,
    pub qprime: Option<f64>,
    pub nmax: usize,
}

impl Request {
    pub fn new(function: Function, category: Category, q: f64) -> Self {
        Self {
            function,
            category,
            q,
            u: None,
            v: None,
            qprime: None,
            nmax: MAX_ORDERS,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let usage = |msg: String| Err(CliError::Usage(msg));
        let name = self.function.name();
        if !(1..=MAX_ORDERS).contains(&self.nmax) {
            return usage(format!("--nmax must be between 1 and {MAX_ORDERS}, got {}", self.nmax));
        }
        if !self.q.is_finite() {
            return usage(format!("--q must be finite, got {}", self.q));
        }
        let wanted = self.function.argument();
        for (flag, given, kind) in [
            ("--v", self.v, Argument::V),
            ("--u", self.u, Argument::U),
            ("--qprime", self.qprime, Argument::QPrime),
        ] {
            match (given, wanted == kind) {
                (None, true) => return usage(format!("--fn {name} requires {flag}")),
                (Some(_), false) => return usage(format!("--fn {name} does not take {flag}")),
                (Some(x), true) if !x.is_finite() => {
                    return usage(format!("{flag} must be finite, got {x}"))
                }
                _ => {}
            }
        }
        Ok(())
    }

    /// The extra input echoed in the output record.
    pub fn arg(&self) -> Option<f64> {
        self.v.or(self.u).or(self.qprime)
    }
}

fn reals(values: &[f64]) -> Vec<(Value, Option<Value>)> {
    values.iter().map(|&x| (Value::Real(x), None)).collect()
}

fn real_pairs(values: &[RadialEval<f64>], with_derivative: bool) -> Vec<(Value, Option<Value>)> {
    values
        .iter()
        .map(|r| {
            if with_derivative {
                (Value::Real(r.value), Some(Value::Real(r.derivative)))
            } else {
                (Value::Real(r.derivative), None)
            }
        })
        .collect()
}

fn complex(z: Complex64) -> Value {
    Value::Complex { re: z.re, im: z.im }
}

fn complex_pairs(
    values: &[RadialEval<Complex64>],
    with_derivative: bool,
) -> Vec<(Value, Option<Value>)> {
    values
        .iter()
        .map(|r| {
            if with_derivative {
                (complex(r.value), Some(complex(r.derivative)))
            } else {
                (complex(r.derivative), None)
            }
        })
        .collect()
}

pub fn evaluate(req: &Request) -> Result<Report> {
    req.validate()?;
    let nmax = req.nmax;
    let dim = dim_for_orders(nmax);
    let spec: SpectralData64 = eig_spm(req.category, req.q, dim)?;
    let radial = || RadialEvaluator::new(req.u.expect("validated"), req.q, dim);

    use Function::*;
    let values = match req.function {
        Eig => reals(&spec.char_values()[..nmax]),
        S | DS => {
            let v = req.v.expect("validated");
            let d = dspm(v, &spec, nmax)?;
            if req.function == S {
                spm(v, &spec, nmax)?
                    .into_iter()
                    .zip(d)
                    .map(|(s, d)| (Value::Real(s), Some(Value::Real(d))))
                    .collect()
            } else {
                reals(&d)
            }
        }
        N => reals(&npm(&spec, nmax)?),
        C => {
            let other = eig_spm(req.category, req.qprime.expect("validated"), dim)?;
            reals(&cpm(&spec, &other, nmax)?)
        }
        G => reals(&gpm(&spec, nmax)?),
        J | DJ => real_pairs(&radial()?.first_kind(&spec, nmax)?, req.function == J),
        Y | DY => real_pairs(&radial()?.second_kind(&spec, nmax)?, req.function == Y),
        H1 | DH1 => complex_pairs(
            &radial()?.hankel(HankelKind::Third, &spec, nmax)?,
            req.function == H1,
        ),
        H2 | DH2 => complex_pairs(
            &radial()?.hankel(HankelKind::Fourth, &spec, nmax)?,
            req.function == H2,
        ),
        Shyp => reals(&spm_hyperbolic(req.u.expect("validated"), &spec, nmax)?),
    };

    let orders = values
        .into_iter()
        .zip(spec.true_orders())
        .map(|((value, derivative), &t)| OrderRecord { t, value, derivative })
        .collect();
    Ok(Report {
        function: req.function.name().to_string(),
        kf: req.category.code(),
        q: req.q,
        arg: req.arg(),
        orders,
    })
}
