//! Integer-order Bessel functions of the first and second kind.
//!
//! `J_n` comes from Miller's backward recurrence run on the ratios
//! `J_k / J_{k-1}`, normalized with `J_0 + 2 Σ J_{2k} = 1`. The same sweep
//! feeds the Neumann series for `Y_0` and `Y_1`, after which `Y_n` follows by
//! forward recurrence (stable for the dominant solution).

use crate::error::{MathieuError, Result};
use crate::scalar::{csum, CompensatedSum, Real};

/// Values `Z_0(x) … Z_{order_max}(x)` of one Bessel kind at a fixed argument.
#[derive(Clone, Debug, PartialEq)]
pub struct BesselSequence<T> {
    order_max: usize,
    argument: T,
    values: Vec<T>,
}

impl<T: Real> BesselSequence<T> {
    pub fn order_max(&self) -> usize {
        self.order_max
    }

    pub fn argument(&self) -> T {
        self.argument
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    /// `Z_n(x)`; panics if `n > order_max`.
    pub fn get(&self, n: usize) -> T {
        self.values[n]
    }

    /// Largest `|Z_{n-1} + Z_{n+1} − (2n/x) Z_n|` over interior orders,
    /// relative to the largest stored magnitude.
    pub fn recurrence_residual(&self) -> T {
        let x = self.argument;
        let scale = self
            .values
            .iter()
            .map(|v| v.abs())
            .fold(T::zero(), T::max);
        if scale == T::zero() || self.values.len() < 3 {
            return T::zero();
        }
        (1..self.values.len() - 1)
            .map(|n| {
                let two_n = T::from_usize_lossy(2 * n);
                (self.values[n - 1] + self.values[n + 1] - two_n / x * self.values[n]).abs()
            })
            .fold(T::zero(), T::max)
            / scale
    }
}

/// First order of the backward sweep. Must sit comfortably above both the
/// requested order and the argument.
fn miller_start<T: Real>(x: T, order_max: usize) -> usize {
    let xf = x.to_f64().unwrap_or(0.0);
    let top = (order_max as f64).max(xf).max(1.0);
    let start = top.ceil() as usize + (2.0 * (40.0 * top).sqrt()).ceil() as usize + 12;
    // even start keeps the normalization sum symmetric
    start + (start & 1)
}

/// `J_0 … J_N` for `x > 0` with `N ≥ order_max` chosen by [`miller_start`].
fn miller_j<T: Real>(x: T, order_max: usize) -> Vec<T> {
    let top = miller_start(x, order_max);
    let two = T::lit(2.0);
    let tiny = T::min_positive_value().sqrt();
    let big = if T::lit(1e250).is_finite() {
        T::lit(1e250)
    } else {
        T::max_value().sqrt()
    };

    // ratio[k] = J_k / J_{k-1}, k = 1..=top, seeded with J_{top+1} = 0
    let mut ratio = vec![T::zero(); top + 1];
    let mut next = T::zero();
    for k in (1..=top).rev() {
        let mut den = two * T::from_usize_lossy(k) / x - next;
        if den == T::zero() {
            den = tiny;
        }
        next = T::one() / den;
        ratio[k] = next;
    }

    let mut f = vec![T::zero(); top + 1];
    f[0] = T::one();
    for k in 1..=top {
        f[k] = f[k - 1] * ratio[k];
        if f[k].abs() > big {
            let shrink = T::one() / big;
            for v in &mut f[..=k] {
                *v = *v * shrink;
            }
        }
    }
    let norm = f[0] + two * csum(f.iter().skip(2).step_by(2).copied());
    for v in &mut f {
        *v = *v / norm;
    }
    f
}

/// `J_0(x) … J_{order_max}(x)` for `x ≥ 0`.
pub fn bessel_j_sequence<T: Real>(x: T, order_max: usize) -> Result<BesselSequence<T>> {
    if !(x >= T::zero()) || !x.is_finite() {
        return Err(MathieuError::Domain(format!(
            "Bessel J needs a finite x >= 0, got {x}"
        )));
    }
    let values = if x == T::zero() {
        let mut v = vec![T::zero(); order_max + 1];
        v[0] = T::one();
        v
    } else {
        let mut v = miller_j(x, order_max);
        v.truncate(order_max + 1);
        v
    };
    Ok(BesselSequence {
        order_max,
        argument: x,
        values,
    })
}

/// `Y_0(x) … Y_{order_max}(x)` for `x > 0`.
pub fn bessel_y_sequence<T: Real>(x: T, order_max: usize) -> Result<BesselSequence<T>> {
    bessel_jy_sequences(x, order_max).map(|(_, y)| y)
}

/// Both kinds at once, sharing the backward sweep.
pub fn bessel_jy_sequences<T: Real>(
    x: T,
    order_max: usize,
) -> Result<(BesselSequence<T>, BesselSequence<T>)> {
    if !(x > T::zero()) || !x.is_finite() {
        return Err(MathieuError::Domain(format!(
            "Bessel Y needs a finite x > 0, got {x}"
        )));
    }
    let mut j = miller_j(x, order_max.max(1));
    let (y0, y1) = neumann_y01(x, &j);

    let mut y = Vec::with_capacity(order_max + 1);
    y.push(y0);
    if order_max >= 1 {
        y.push(y1);
    }
    let two = T::lit(2.0);
    for n in 1..order_max {
        let yn = two * T::from_usize_lossy(n) / x * y[n] - y[n - 1];
        y.push(yn);
    }
    j.truncate(order_max + 1);
    Ok((
        BesselSequence {
            order_max,
            argument: x,
            values: j,
        },
        BesselSequence {
            order_max,
            argument: x,
            values: y,
        },
    ))
}

/// Neumann expansions
/// `(π/2) Y_0 = L J_0 − 2 Σ (−1)^k J_{2k}/k` and
/// `(π/2) Y_1 = −J_0/x + L J_1 + Σ (−1)^k (J_{2k−1} − J_{2k+1})/k`,
/// with `L = ln(x/2) + γ`.
fn neumann_y01<T: Real>(x: T, j: &[T]) -> (T, T) {
    let two = T::lit(2.0);
    let log_term = (x / two).ln() + T::euler_gamma();
    let mut s0 = CompensatedSum::new();
    let mut s1 = CompensatedSum::new();
    let mut k = 1;
    while 2 * k < j.len() {
        let sign = if k.is_multiple_of(2) { T::one() } else { -T::one() };
        let kk = T::from_usize_lossy(k);
        s0.add(sign * j[2 * k] / kk);
        let above = j.get(2 * k + 1).copied().unwrap_or(T::zero());
        s1.add(sign * (j[2 * k - 1] - above) / kk);
        k += 1;
    }
    let scale = two / T::PI();
    let y0 = scale * (log_term * j[0] - two * s0.value());
    let y1 = scale * (-j[0] / x + log_term * j[1] + s1.value());
    (y0, y1)
}
