//! Radial Mathieu functions of the four kinds and the joining factors that
//! tie them to the angular functions.
//!
//! All radial series are sums of Bessel products `J_a(v₁) Z_b(v₂)` with
//! `v₁ = √q e^{−u}` and `v₂ = √q e^{u}`, weighted by the same coefficients
//! the angular functions use. `Z = J` gives the first kind, `Z = Y` the
//! second, and the third and fourth kinds are `J ± iY`.

use num_complex::Complex;

use crate::angular::{dspm, spm, Category, SpectralData};
use crate::bessel::{bessel_j_sequence, bessel_jy_sequences};
use crate::error::{MathieuError, Result};
use crate::scalar::{csum, Real};

/// Radial coordinate together with the two Bessel arguments.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RadialArgs<T> {
    u: T,
    q: T,
    v1: T,
    v2: T,
}

impl<T: Real> RadialArgs<T> {
    pub fn new(u: T, q: T) -> Result<Self> {
        if !(q > T::zero()) || !q.is_finite() {
            return Err(MathieuError::Domain(format!(
                "radial functions need q > 0, got {q}"
            )));
        }
        if !(u >= T::zero()) || !u.is_finite() {
            return Err(MathieuError::Domain(format!(
                "radial coordinate u must be finite and >= 0, got {u}"
            )));
        }
        let root = q.sqrt();
        Ok(Self {
            u,
            q,
            v1: root * (-u).exp(),
            v2: root * u.exp(),
        })
    }

    pub fn u(&self) -> T {
        self.u
    }

    pub fn q(&self) -> T {
        self.q
    }

    /// `√q e^{−u}`
    pub fn v1(&self) -> T {
        self.v1
    }

    /// `√q e^{u}`
    pub fn v2(&self) -> T {
        self.v2
    }
}

/// Value and `u`-derivative of one radial function of one order.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RadialEval<V> {
    pub value: V,
    pub derivative: V,
}

impl<T: Real> RadialEval<Complex<T>> {
    pub fn conj(&self) -> Self {
        Self {
            value: self.value.conj(),
            derivative: self.derivative.conj(),
        }
    }
}

/// Selects `J + iY` or `J − iY`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HankelKind {
    Third,
    Fourth,
}

#[derive(Clone, Copy)]
enum SecondFactor {
    J,
    Y,
}

/// Bessel values at `v₁` and `v₂` for one `(u, q)`, shared by every order and
/// category evaluated there.
#[derive(Clone, Debug)]
pub struct RadialEvaluator<T> {
    args: RadialArgs<T>,
    j1: Vec<T>,
    j2: Vec<T>,
    y2: Vec<T>,
}

impl<T: Real> RadialEvaluator<T> {
    /// Prepares Bessel orders `0..=dim + 1`, enough for a coefficient
    /// column of length `dim`.
    pub fn new(u: T, q: T, dim: usize) -> Result<Self> {
        let args = RadialArgs::new(u, q)?;
        let order_max = dim + 1;
        let j1 = bessel_j_sequence(args.v1, order_max)?.values().to_vec();
        let (j2, y2) = bessel_jy_sequences(args.v2, order_max)?;
        Ok(Self {
            args,
            j1,
            j2: j2.values().to_vec(),
            y2: y2.values().to_vec(),
        })
    }

    pub fn args(&self) -> &RadialArgs<T> {
        &self.args
    }

    fn check(&self, spectral: &SpectralData<T>, nmax: usize) -> Result<()> {
        if nmax > spectral.dim() {
            return Err(MathieuError::Range {
                requested: nmax,
                available: spectral.dim(),
            });
        }
        if spectral.dim() + 2 > self.j1.len() {
            return Err(MathieuError::Range {
                requested: spectral.dim() + 2,
                available: self.j1.len(),
            });
        }
        if spectral.q() != self.args.q {
            return Err(MathieuError::Domain(format!(
                "coefficients were computed for q = {} but evaluator uses q = {}",
                spectral.q(),
                self.args.q
            )));
        }
        Ok(())
    }

    fn second(&self, factor: SecondFactor) -> &[T] {
        match factor {
            SecondFactor::J => &self.j2,
            SecondFactor::Y => &self.y2,
        }
    }

    fn prefactor(spectral: &SpectralData<T>, n: usize) -> Result<T> {
        let lead = spectral.coefficients(n)[0];
        if lead.abs() < T::lit(1e-300) || lead == T::zero() {
            return Err(MathieuError::DegenerateLeadingCoefficient { index: n });
        }
        let t = spectral.true_orders()[n];
        let sign = parity_sign::<T>(spectral.category().parity_exponent(t));
        Ok((T::FRAC_PI_2()).sqrt() * sign / lead)
    }

    fn series_value(&self, spectral: &SpectralData<T>, n: usize, factor: SecondFactor) -> Result<T> {
        let pre = Self::prefactor(spectral, n)?;
        let a = spectral.coefficients(n);
        let (j1, z2) = (&self.j1, self.second(factor));
        let terms = a.iter().enumerate().map(|(j, &c)| {
            let s = parity_sign::<T>(j) * c;
            let bracket = match spectral.category() {
                Category::EvenEven => j1[j] * z2[j],
                Category::EvenOdd => j1[j] * z2[j + 1] + z2[j] * j1[j + 1],
                // row j carries A^{(2j+2)}, summation index j+1
                Category::OddEven => -(j1[j] * z2[j + 2] - z2[j] * j1[j + 2]),
                Category::OddOdd => j1[j] * z2[j + 1] - z2[j] * j1[j + 1],
            };
            s * bracket
        });
        Ok(pre * csum(terms))
    }

    fn series_derivative(
        &self,
        spectral: &SpectralData<T>,
        n: usize,
        factor: SecondFactor,
    ) -> Result<T> {
        let pre = Self::prefactor(spectral, n)?;
        let a = spectral.coefficients(n);
        let (j1, z2) = (&self.j1, self.second(factor));
        let (v1, v2) = (self.args.v1, self.args.v2);
        let cosh2u = (T::lit(2.0) * self.args.u).cosh();
        let terms = a.iter().enumerate().map(|(j, &c)| {
            let s = parity_sign::<T>(j) * c;
            let jj = T::from_usize_lossy(j);
            let odd = T::from_usize_lossy(2 * j + 1);
            let bracket = match spectral.category() {
                Category::EvenEven => v1 * (j1[j + 1] * z2[j]) - v2 * (j1[j] * z2[j + 1]),
                Category::EvenOdd => {
                    (v2 - v1) * (j1[j] * z2[j] - j1[j + 1] * z2[j + 1])
                        + odd * (j1[j + 1] * z2[j] - j1[j] * z2[j + 1])
                }
                Category::OddEven => {
                    let m = jj + T::one();
                    -(T::lit(4.0) * m)
                        * (j1[j] * z2[j] + cosh2u * j1[j + 1] * z2[j + 1]
                            - m * (j1[j + 1] * z2[j] / v1 + j1[j] * z2[j + 1] / v2))
                }
                Category::OddOdd => {
                    (v1 + v2) * (j1[j] * z2[j] + j1[j + 1] * z2[j + 1])
                        - odd * (j1[j + 1] * z2[j] + j1[j] * z2[j + 1])
                }
            };
            s * bracket
        });
        Ok(pre * csum(terms))
    }

    fn collect<F>(&self, spectral: &SpectralData<T>, nmax: usize, f: F) -> Result<Vec<T>>
    where
        F: Fn(usize) -> Result<T>,
    {
        self.check(spectral, nmax)?;
        (0..nmax).map(f).collect()
    }

    pub fn jpm(&self, spectral: &SpectralData<T>, nmax: usize) -> Result<Vec<T>> {
        self.collect(spectral, nmax, |n| self.series_value(spectral, n, SecondFactor::J))
    }

    pub fn djpm(&self, spectral: &SpectralData<T>, nmax: usize) -> Result<Vec<T>> {
        self.collect(spectral, nmax, |n| {
            self.series_derivative(spectral, n, SecondFactor::J)
        })
    }

    pub fn ypm(&self, spectral: &SpectralData<T>, nmax: usize) -> Result<Vec<T>> {
        self.collect(spectral, nmax, |n| self.series_value(spectral, n, SecondFactor::Y))
    }

    pub fn dypm(&self, spectral: &SpectralData<T>, nmax: usize) -> Result<Vec<T>> {
        self.collect(spectral, nmax, |n| {
            self.series_derivative(spectral, n, SecondFactor::Y)
        })
    }

    pub fn first_kind(&self, spectral: &SpectralData<T>, nmax: usize) -> Result<Vec<RadialEval<T>>> {
        pair(self.jpm(spectral, nmax)?, self.djpm(spectral, nmax)?)
    }

    pub fn second_kind(&self, spectral: &SpectralData<T>, nmax: usize) -> Result<Vec<RadialEval<T>>> {
        pair(self.ypm(spectral, nmax)?, self.dypm(spectral, nmax)?)
    }

    /// Third (`J + iY`) or fourth (`J − iY`) kind with derivative.
    pub fn hankel(
        &self,
        kind: HankelKind,
        spectral: &SpectralData<T>,
        nmax: usize,
    ) -> Result<Vec<RadialEval<Complex<T>>>> {
        let first = self.first_kind(spectral, nmax)?;
        let second = self.second_kind(spectral, nmax)?;
        let sign = match kind {
            HankelKind::Third => T::one(),
            HankelKind::Fourth => -T::one(),
        };
        Ok(first
            .iter()
            .zip(&second)
            .map(|(f, s)| RadialEval {
                value: Complex::new(f.value, sign * s.value),
                derivative: Complex::new(f.derivative, sign * s.derivative),
            })
            .collect())
    }
}

fn pair<T: Copy>(values: Vec<T>, derivatives: Vec<T>) -> Result<Vec<RadialEval<T>>> {
    Ok(values
        .into_iter()
        .zip(derivatives)
        .map(|(value, derivative)| RadialEval { value, derivative })
        .collect())
}

fn parity_sign<T: Real>(r: usize) -> T {
    if r.is_multiple_of(2) {
        T::one()
    } else {
        -T::one()
    }
}

fn evaluator<T: Real>(u: T, spectral: &SpectralData<T>) -> Result<RadialEvaluator<T>> {
    RadialEvaluator::new(u, spectral.q(), spectral.dim())
}

/// Radial functions of the first kind.
pub fn jpm<T: Real>(u: T, spectral: &SpectralData<T>, nmax: usize) -> Result<Vec<T>> {
    evaluator(u, spectral)?.jpm(spectral, nmax)
}

pub fn djpm<T: Real>(u: T, spectral: &SpectralData<T>, nmax: usize) -> Result<Vec<T>> {
    evaluator(u, spectral)?.djpm(spectral, nmax)
}

/// Radial functions of the second kind.
pub fn ypm<T: Real>(u: T, spectral: &SpectralData<T>, nmax: usize) -> Result<Vec<T>> {
    evaluator(u, spectral)?.ypm(spectral, nmax)
}

pub fn dypm<T: Real>(u: T, spectral: &SpectralData<T>, nmax: usize) -> Result<Vec<T>> {
    evaluator(u, spectral)?.dypm(spectral, nmax)
}

/// Radial functions of the third or fourth kind.
pub fn hpm<T: Real>(
    kind: HankelKind,
    u: T,
    spectral: &SpectralData<T>,
    nmax: usize,
) -> Result<Vec<Complex<T>>> {
    let ev = evaluator(u, spectral)?;
    let j = ev.jpm(spectral, nmax)?;
    let y = ev.ypm(spectral, nmax)?;
    Ok(combine(kind, &j, &y))
}

/// `u`-derivatives of the third or fourth kind.
pub fn dhpm<T: Real>(
    kind: HankelKind,
    u: T,
    spectral: &SpectralData<T>,
    nmax: usize,
) -> Result<Vec<Complex<T>>> {
    let ev = evaluator(u, spectral)?;
    let dj = ev.djpm(spectral, nmax)?;
    let dy = ev.dypm(spectral, nmax)?;
    Ok(combine(kind, &dj, &dy))
}

fn combine<T: Real>(kind: HankelKind, re: &[T], im: &[T]) -> Vec<Complex<T>> {
    let sign = match kind {
        HankelKind::Third => T::one(),
        HankelKind::Fourth => -T::one(),
    };
    re.iter()
        .zip(im)
        .map(|(&r, &i)| Complex::new(r, sign * i))
        .collect()
}

/// Joining factors `g` linking `S(iu)` (even) or `−iS(iu)` (odd) to
/// `√(2π) g J(u)`.
pub fn gpm<T: Real>(spectral: &SpectralData<T>, nmax: usize) -> Result<Vec<T>> {
    let q = spectral.q();
    if !(q > T::zero()) {
        return Err(MathieuError::Domain(format!(
            "joining factors need q > 0, got {q}"
        )));
    }
    let half_pi = T::FRAC_PI_2();
    let category = spectral.category();
    let at_half_pi = match category {
        Category::EvenEven | Category::OddOdd => spm(half_pi, spectral, nmax)?,
        Category::EvenOdd | Category::OddEven => dspm(half_pi, spectral, nmax)?,
    };
    let pi = T::PI();
    at_half_pi
        .into_iter()
        .enumerate()
        .map(|(n, s)| {
            let lead = spectral.coefficients(n)[0];
            if lead.abs() < T::lit(1e-300) || lead == T::zero() {
                return Err(MathieuError::DegenerateLeadingCoefficient { index: n });
            }
            let t = spectral.true_orders()[n];
            let sign = parity_sign::<T>(category.parity_exponent(t));
            let den = match category {
                Category::EvenEven => pi * lead,
                Category::EvenOdd => -(pi * q.sqrt() * lead),
                Category::OddEven => pi * q * lead,
                Category::OddOdd => pi * q.sqrt() * lead,
            };
            Ok(sign * s / den)
        })
        .collect()
}

/// Angular series continued to imaginary argument: `S(iu) = Σ A cosh(h u)`
/// for even categories and `−i S(iu) = Σ A sinh(h u)` for odd ones.
/// Converges slowly once `|u|` grows past a few units.
pub fn spm_hyperbolic<T: Real>(u: T, spectral: &SpectralData<T>, nmax: usize) -> Result<Vec<T>> {
    if nmax > spectral.dim() {
        return Err(MathieuError::Range {
            requested: nmax,
            available: spectral.dim(),
        });
    }
    let category = spectral.category();
    let basis: Vec<T> = (0..spectral.dim())
        .map(|i| {
            let arg = T::from_usize_lossy(category.harmonic(i)) * u;
            if category.is_even() {
                arg.cosh()
            } else {
                arg.sinh()
            }
        })
        .collect();
    Ok((0..nmax)
        .map(|n| csum(spectral.coefficients(n).iter().zip(&basis).map(|(&a, &b)| a * b)))
        .collect())
}
