//! Characteristic values, expansion coefficients and angular Mathieu
//! functions.
//!
//! Each category expands its periodic solution in one trigonometric family:
//!
//! | category  | series                      | harmonic of row `i` |
//! |-----------|-----------------------------|---------------------|
//! | even-even | `Σ A cos(2j v)`, j ≥ 0      | `2i`                |
//! | even-odd  | `Σ A cos((2j+1) v)`, j ≥ 0  | `2i + 1`            |
//! | odd-even  | `Σ A sin(2j v)`, j ≥ 1      | `2i + 2`            |
//! | odd-odd   | `Σ A sin((2j+1) v)`, j ≥ 0  | `2i + 1`            |
//!
//! Coefficient columns are scaled so that even functions equal one at
//! `v = 0` and odd functions have unit slope there. Orders close to the
//! truncation dimension are computed but lose accuracy; keep
//! `nmax <= dim - 10` for trustworthy values.

use std::fmt;

use crate::error::{MathieuError, Result};
use crate::scalar::{csum, Real};
use crate::tridiag::{self, TridiagonalSystem};

/// Number of expansion coefficients kept per order unless asked otherwise.
pub const DEFAULT_DIM: usize = 25;

/// Normalization sums below this magnitude are treated as degenerate.
const DEGENERATE_SUM: f64 = 1e-13;

/// Truncation dimension that leaves ten spare rows above `nmax`.
pub fn dim_for_orders(nmax: usize) -> usize {
    DEFAULT_DIM.max(nmax + 10)
}

/// Parity class of a periodic Mathieu function. The discriminant is the
/// conventional function code 1–4.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Category {
    EvenEven = 1,
    EvenOdd = 2,
    OddEven = 3,
    OddOdd = 4,
}

impl Category {
    pub const ALL: [Category; 4] = [
        Category::EvenEven,
        Category::EvenOdd,
        Category::OddEven,
        Category::OddOdd,
    ];

    pub fn code(self) -> u8 {
        self as u8
    }

    pub fn from_code(code: u8) -> Result<Self> {
        match code {
            1 => Ok(Category::EvenEven),
            2 => Ok(Category::EvenOdd),
            3 => Ok(Category::OddEven),
            4 => Ok(Category::OddOdd),
            _ => Err(MathieuError::Domain(format!(
                "function code must be 1..=4, got {code}"
            ))),
        }
    }

    /// Cosine series (even in `v`).
    pub fn is_even(self) -> bool {
        matches!(self, Category::EvenEven | Category::EvenOdd)
    }

    /// Harmonic multiplying `v` in row `i` of the coefficient vector.
    pub fn harmonic(self, i: usize) -> usize {
        match self {
            Category::EvenEven => 2 * i,
            Category::EvenOdd | Category::OddOdd => 2 * i + 1,
            Category::OddEven => 2 * i + 2,
        }
    }

    /// True order `t` of the order with index `n` in the ascending sequence.
    pub fn true_order(self, n: usize) -> usize {
        self.harmonic(n)
    }

    /// Inverse of [`Category::true_order`].
    pub fn order_index(self, t: usize) -> Option<usize> {
        match self {
            Category::EvenEven if t.is_multiple_of(2) => Some(t / 2),
            Category::OddEven if t.is_multiple_of(2) && t >= 2 => Some(t / 2 - 1),
            Category::EvenOdd | Category::OddOdd if !t.is_multiple_of(2) => Some((t - 1) / 2),
            _ => None,
        }
    }

    /// Exponent `r` of the `(−1)^r` parity factor: `t/2` or `(t−1)/2`.
    pub fn parity_exponent(self, t: usize) -> usize {
        t / 2
    }

    pub fn short_name(self) -> &'static str {
        match self {
            Category::EvenEven => "ee",
            Category::EvenOdd => "eo",
            Category::OddEven => "oe",
            Category::OddOdd => "oo",
        }
    }
}

impl fmt::Display for Category {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Category::EvenEven => "even-even",
            Category::EvenOdd => "even-odd",
            Category::OddEven => "odd-even",
            Category::OddOdd => "odd-odd",
        };
        f.write_str(name)
    }
}

impl TryFrom<u8> for Category {
    type Error = MathieuError;

    fn try_from(code: u8) -> Result<Self> {
        Category::from_code(code)
    }
}

/// Characteristic values and normalized coefficients of one category at one
/// `q`. Immutable once built.
#[derive(Clone, Debug, PartialEq)]
pub struct SpectralData<T> {
    category: Category,
    q: T,
    char_values: Vec<T>,
    // column-major dim × dim
    coeffs: Vec<T>,
    true_orders: Vec<usize>,
    dim: usize,
}

impl<T: Real> SpectralData<T> {
    pub fn category(&self) -> Category {
        self.category
    }

    pub fn q(&self) -> T {
        self.q
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Characteristic values `a`, ascending.
    pub fn char_values(&self) -> &[T] {
        &self.char_values
    }

    pub fn true_orders(&self) -> &[usize] {
        &self.true_orders
    }

    /// Expansion coefficients of order index `n`.
    pub fn coefficients(&self, n: usize) -> &[T] {
        &self.coeffs[n * self.dim..(n + 1) * self.dim]
    }

    fn check_nmax(&self, nmax: usize) -> Result<()> {
        if nmax > self.dim {
            Err(MathieuError::Range {
                requested: nmax,
                available: self.dim,
            })
        } else {
            Ok(())
        }
    }

    fn weights(&self) -> impl Iterator<Item = T> + '_ {
        let category = self.category;
        (0..self.dim).map(move |i| T::from_usize_lossy(category.harmonic(i)))
    }

    /// The normalization sum `Σ A` (even) or `Σ h·A` (odd) of order `n`;
    /// equals one after construction.
    pub fn normalization_sum(&self, n: usize) -> T {
        let col = self.coefficients(n);
        if self.category.is_even() {
            csum(col.iter().copied())
        } else {
            csum(self.weights().zip(col).map(|(w, &a)| w * a))
        }
    }

    /// `max |(B − a) A| / max |A|` for order `n`, where `B` is the
    /// category's recurrence matrix.
    pub fn recurrence_residual(&self, n: usize) -> T {
        let system = build_matrix(self.category, self.q, self.dim)
            .expect("stored q is a valid parameter");
        let col = self.coefficients(n);
        let a = self.char_values[n];
        let scale = col.iter().map(|c| c.abs()).fold(T::zero(), T::max);
        system
            .apply(col)
            .iter()
            .zip(col)
            .map(|(&b, &c)| (b - a * c).abs())
            .fold(T::zero(), T::max)
            / scale
    }
}

/// Recurrence matrix `B` with `B A = a A`.
pub fn build_matrix<T: Real>(category: Category, q: T, dim: usize) -> Result<TridiagonalSystem<T>> {
    if !(q >= T::zero()) || !q.is_finite() {
        return Err(MathieuError::Domain(format!(
            "elliptical parameter q must be finite and >= 0, got {q}"
        )));
    }
    if dim < 2 {
        return Err(MathieuError::Domain(format!(
            "matrix dimension must be at least 2, got {dim}"
        )));
    }
    let mut diag: Vec<T> = (0..dim)
        .map(|i| {
            let h = T::from_usize_lossy(category.harmonic(i));
            h * h
        })
        .collect();
    match category {
        Category::EvenOdd => diag[0] = diag[0] + q,
        Category::OddOdd => diag[0] = diag[0] - q,
        _ => {}
    }
    let upper = vec![q; dim - 1];
    let mut lower = upper.clone();
    if category == Category::EvenEven {
        lower[0] = T::lit(2.0) * q;
    }
    TridiagonalSystem::new(diag, upper, lower)
}

/// Solves the category eigenproblem and normalizes every coefficient column.
pub fn eig_spm<T: Real>(category: Category, q: T, dim: usize) -> Result<SpectralData<T>> {
    let system = build_matrix(category, q, dim)?;
    let eig = tridiag::solve(&system)?;
    let (char_values, mut coeffs, dim) = eig.into_parts();

    for n in 0..dim {
        let col = &mut coeffs[n * dim..(n + 1) * dim];
        let sum = if category.is_even() {
            csum(col.iter().copied())
        } else {
            csum(
                col.iter()
                    .enumerate()
                    .map(|(i, &a)| T::from_usize_lossy(category.harmonic(i)) * a),
            )
        };
        if !(sum.abs() >= T::lit(DEGENERATE_SUM)) {
            return Err(MathieuError::DegenerateNormalization {
                index: n,
                magnitude: sum.abs().to_f64().unwrap_or(0.0),
            });
        }
        for c in col.iter_mut() {
            *c = *c / sum;
        }
    }

    Ok(SpectralData {
        category,
        q,
        char_values,
        coeffs,
        true_orders: (0..dim).map(|n| category.true_order(n)).collect(),
        dim,
    })
}

/// Angular functions `S(v)` for the first `nmax` orders.
pub fn spm<T: Real>(v: T, spectral: &SpectralData<T>, nmax: usize) -> Result<Vec<T>> {
    spectral.check_nmax(nmax)?;
    let category = spectral.category;
    let trig: Vec<T> = (0..spectral.dim)
        .map(|i| {
            let arg = T::from_usize_lossy(category.harmonic(i)) * v;
            if category.is_even() {
                arg.cos()
            } else {
                arg.sin()
            }
        })
        .collect();
    Ok((0..nmax)
        .map(|n| csum(spectral.coefficients(n).iter().zip(&trig).map(|(&a, &t)| a * t)))
        .collect())
}

/// `dS/dv` for the first `nmax` orders.
pub fn dspm<T: Real>(v: T, spectral: &SpectralData<T>, nmax: usize) -> Result<Vec<T>> {
    spectral.check_nmax(nmax)?;
    let category = spectral.category;
    let trig: Vec<T> = (0..spectral.dim)
        .map(|i| {
            let h = T::from_usize_lossy(category.harmonic(i));
            let arg = h * v;
            if category.is_even() {
                -h * arg.sin()
            } else {
                h * arg.cos()
            }
        })
        .collect();
    Ok((0..nmax)
        .map(|n| csum(spectral.coefficients(n).iter().zip(&trig).map(|(&a, &t)| a * t)))
        .collect())
}

/// Normalization factors `N = ∫₀^{2π} S² dv`.
pub fn npm<T: Real>(spectral: &SpectralData<T>, nmax: usize) -> Result<Vec<T>> {
    cpm(spectral, spectral, nmax)
}

/// Correlation factors `C = ∫₀^{2π} S(v; q) S(v; q′) dv` between two
/// coefficient sets of the same category, paired by order index.
pub fn cpm<T: Real>(
    spectral: &SpectralData<T>,
    other: &SpectralData<T>,
    nmax: usize,
) -> Result<Vec<T>> {
    if spectral.category != other.category {
        return Err(MathieuError::CategoryMismatch {
            left: spectral.category.code(),
            right: other.category.code(),
        });
    }
    spectral.check_nmax(nmax)?;
    other.check_nmax(nmax)?;
    let pi = T::PI();
    Ok((0..nmax)
        .map(|n| {
            let a = spectral.coefficients(n);
            let b = other.coefficients(n);
            let mut c = pi * csum(a.iter().zip(b).map(|(&x, &y)| x * y));
            if spectral.category == Category::EvenEven {
                // cos(0·v) integrates to 2π, not π
                c = c + pi * a[0] * b[0];
            }
            c
        })
        .collect())
}

/// `√(π/N)` per order: the factor that rescales to unit mean-square norm
/// over a period of length π.
pub fn unit_norm_scale<T: Real>(spectral: &SpectralData<T>, nmax: usize) -> Result<Vec<T>> {
    Ok(npm(spectral, nmax)?
        .into_iter()
        .map(|n| (T::PI() / n).sqrt())
        .collect())
}

/// Characteristic value and coefficients of the order whose true order is `t`.
pub fn order_lookup<T: Real>(spectral: &SpectralData<T>, t: usize) -> Result<(T, &[T])> {
    let n = spectral
        .category
        .order_index(t)
        .filter(|&n| n < spectral.dim)
        .ok_or(MathieuError::Lookup {
            category: spectral.category.code(),
            t,
        })?;
    Ok((spectral.char_values[n], spectral.coefficients(n)))
}

/// Picks the entry of a per-order vector belonging to true order `t`.
pub fn extract_one_value<T: Copy>(category: Category, t: usize, values: &[T]) -> Result<T> {
    category
        .order_index(t)
        .and_then(|n| values.get(n).copied())
        .ok_or(MathieuError::Lookup {
            category: category.code(),
            t,
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn true_orders_per_category() {
        let t = |c: Category| (0..3).map(|n| c.true_order(n)).collect::<Vec<_>>();
        assert_eq!(t(Category::EvenEven), [0, 2, 4]);
        assert_eq!(t(Category::EvenOdd), [1, 3, 5]);
        assert_eq!(t(Category::OddEven), [2, 4, 6]);
        assert_eq!(t(Category::OddOdd), [1, 3, 5]);
        for c in Category::ALL {
            for n in 0..10 {
                assert_eq!(c.order_index(c.true_order(n)), Some(n));
            }
        }
        assert_eq!(Category::OddEven.order_index(0), None);
        assert_eq!(Category::EvenOdd.order_index(4), None);
    }

    #[test]
    fn function_codes() {
        for c in Category::ALL {
            assert_eq!(Category::from_code(c.code()).unwrap(), c);
        }
        assert!(Category::try_from(0u8).is_err());
        assert!(Category::try_from(5u8).is_err());
    }

    #[test]
    fn matrix_at_q_zero() {
        let m = build_matrix(Category::EvenEven, 0.0f64, 4).unwrap();
        assert_eq!(m.diag(), &[0.0, 4.0, 16.0, 36.0]);
        assert!(m.upper().iter().chain(m.lower()).all(|&x| x == 0.0));
    }

    #[test]
    fn odd_odd_matrix_read_off() {
        let m = build_matrix(Category::OddOdd, 3.0f64, 3).unwrap();
        assert_eq!(m.diag(), &[-2.0, 9.0, 25.0]);
        assert_eq!(m.upper(), &[3.0, 3.0]);
        assert_eq!(m.lower(), &[3.0, 3.0]);
        let m = build_matrix(Category::EvenOdd, 3.0f64, 3).unwrap();
        assert_eq!(m.diag(), &[4.0, 9.0, 25.0]);
        let m = build_matrix(Category::EvenEven, 3.0f64, 3).unwrap();
        assert_eq!(m.lower()[0], 6.0);
        assert_eq!(m.upper()[0], 3.0);
    }

    #[test]
    fn negative_q_rejected() {
        assert!(build_matrix(Category::EvenEven, -1.0f64, 5).is_err());
        assert!(eig_spm(Category::OddOdd, -0.5f64, 25).is_err());
        assert!(eig_spm(Category::OddOdd, f64::NAN, 25).is_err());
    }

    #[test]
    fn unperturbed_spectrum() {
        let s = eig_spm(Category::EvenEven, 0.0f64, 25).unwrap();
        for n in 0..25 {
            let t = s.true_orders()[n] as f64;
            assert_eq!(s.char_values()[n], t * t);
            let col = s.coefficients(n);
            for (i, &c) in col.iter().enumerate() {
                assert_eq!(c, if i == n { 1.0 } else { 0.0 });
            }
        }
        let n = npm(&s, 1).unwrap();
        assert!((n[0] - 2.0 * PI).abs() < 1e-15);

        let s = eig_spm(Category::OddEven, 0.0f64, 25).unwrap();
        let n = npm(&s, 1).unwrap();
        assert!((n[0] - PI / 4.0).abs() < 1e-15);
    }

    #[test]
    fn tabulated_characteristic_values() {
        let s = eig_spm(Category::OddOdd, 25.0f64, 25).unwrap();
        assert!((order_lookup(&s, 1).unwrap().0 + 40.2567789846842).abs() < 1e-11);
        let s = eig_spm(Category::EvenOdd, 25.0f64, 25).unwrap();
        assert!((order_lookup(&s, 15).unwrap().0 - 226.4007200447481).abs() < 1e-10);
        let s = eig_spm(Category::EvenOdd, 5.0f64, 25).unwrap();
        assert!((order_lookup(&s, 1).unwrap().0 - 1.8581875415478).abs() < 1e-12);
        let s = eig_spm(Category::OddEven, 10.0f64, 25).unwrap();
        assert!((order_lookup(&s, 10).unwrap().0 - 100.5067694628784).abs() < 1e-10);
    }

    #[test]
    fn lookup_errors() {
        let s = eig_spm(Category::EvenEven, 0.0f64, 25).unwrap();
        let (a, col) = order_lookup(&s, 4).unwrap();
        assert_eq!(a, 16.0);
        assert_eq!(col[2], 1.0);
        assert!(matches!(order_lookup(&s, 3), Err(MathieuError::Lookup { .. })));
        assert!(order_lookup(&s, 50).is_err());
        let s = eig_spm(Category::OddEven, 1.0f64, 25).unwrap();
        assert!(order_lookup(&s, 0).is_err());
        assert_eq!(extract_one_value(Category::OddEven, 4, &[7, 8, 9]).unwrap(), 8);
        assert!(extract_one_value(Category::OddEven, 8, &[7, 8, 9]).is_err());
    }

    #[test]
    fn endpoint_normalization() {
        for c in Category::ALL {
            let s = eig_spm(c, 12.5f64, 25).unwrap();
            let (vals, ders) = (spm(0.0, &s, 15).unwrap(), dspm(0.0, &s, 15).unwrap());
            for n in 0..15 {
                if c.is_even() {
                    assert!((vals[n] - 1.0).abs() < 1e-13);
                    assert!(ders[n].abs() < 1e-13);
                } else {
                    assert!(vals[n].abs() < 1e-13);
                    assert!((ders[n] - 1.0).abs() < 1e-13);
                }
                assert!((s.normalization_sum(n) - 1.0).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn scaled_table_entries() {
        let s = eig_spm(Category::EvenEven, 5.0f64, 25).unwrap();
        let g = unit_norm_scale(&s, 1).unwrap()[0];
        let v = spm(PI / 2.0, &s, 1).unwrap()[0];
        assert!((g * v - 1.3348486746980).abs() < 1e-12);
        assert!((g - 0.0448001816519).abs() < 1e-12);

        let s = eig_spm(Category::EvenEven, 10.0f64, 25).unwrap();
        let g = unit_norm_scale(&s, 2).unwrap()[1];
        assert!((g * spm(0.0, &s, 2).unwrap()[1] - 0.2458883492913).abs() < 1e-12);

        let s = eig_spm(Category::EvenOdd, 20.0f64, 25).unwrap();
        let g = unit_norm_scale(&s, 3).unwrap()[2];
        let d = dspm(PI / 2.0, &s, 3).unwrap()[2];
        assert!((g * d + 5.7786752500644).abs() < 1e-11);
    }

    #[test]
    fn range_and_mismatch_errors() {
        let s = eig_spm(Category::EvenEven, 1.0f64, 25).unwrap();
        let o = eig_spm(Category::EvenOdd, 1.0f64, 25).unwrap();
        assert!(matches!(spm(0.3, &s, 26), Err(MathieuError::Range { .. })));
        assert!(dspm(0.3, &s, 26).is_err());
        assert!(npm(&s, 26).is_err());
        assert!(matches!(
            cpm(&s, &o, 3),
            Err(MathieuError::CategoryMismatch { left: 1, right: 2 })
        ));
    }

    #[test]
    fn correlation_reduces_to_normalization() {
        for c in Category::ALL {
            let s = eig_spm(c, 7.0f64, 25).unwrap();
            assert_eq!(cpm(&s, &s, 25).unwrap(), npm(&s, 25).unwrap());
        }
    }

    #[test]
    fn larger_dimension_agrees() {
        let small = eig_spm(Category::EvenOdd, 15.0f64, 25).unwrap();
        let big = eig_spm(Category::EvenOdd, 15.0f64, dim_for_orders(30)).unwrap();
        assert_eq!(big.dim(), 40);
        for n in 0..10 {
            let d = (small.char_values()[n] - big.char_values()[n]).abs();
            assert!(d < 1e-11 * small.char_values()[n].abs().max(1.0));
        }
    }
}
