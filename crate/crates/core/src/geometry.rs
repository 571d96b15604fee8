//! Elliptic cylinder coordinates and the separation parameter `q`.
//!
//! `x = f cosh u cos v`, `y = f sinh u sin v`, `z = z`, with `u ≥ 0`.
//! Separating the scalar wave equation gives an axial factor `exp(i k_z z)`
//! and the angular and radial Mathieu equations with `q = k_τ² f² / 4`,
//! `k_τ² = k² − k_z²`.

use crate::error::{MathieuError, Result};
use crate::scalar::Real;

/// Confocal family with semifocal distance `f`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EllipticGeometry<T> {
    f: T,
    semiaxes: Option<(T, T)>,
}

impl<T: Real> EllipticGeometry<T> {
    pub fn from_focal_distance(f: T) -> Result<Self> {
        if !(f > T::zero()) || !f.is_finite() {
            return Err(MathieuError::Domain(format!(
                "semifocal distance must be positive, got {f}"
            )));
        }
        Ok(Self { f, semiaxes: None })
    }

    /// From the semiaxes of one member ellipse, `x0 > y0 > 0`.
    pub fn from_semiaxes(x0: T, y0: T) -> Result<Self> {
        if !(y0 > T::zero() && x0 > y0) || !x0.is_finite() {
            return Err(MathieuError::Domain(format!(
                "semiaxes must satisfy x0 > y0 > 0, got x0 = {x0}, y0 = {y0}"
            )));
        }
        Ok(Self {
            f: (x0 * x0 - y0 * y0).sqrt(),
            semiaxes: Some((x0, y0)),
        })
    }

    pub fn focal_distance(&self) -> T {
        self.f
    }

    pub fn semiaxes(&self) -> Option<(T, T)> {
        self.semiaxes
    }

    /// `f / x0`, when built from semiaxes.
    pub fn eccentricity(&self) -> Option<T> {
        self.semiaxes.map(|(x0, _)| self.f / x0)
    }

    /// Semiaxes `(f cosh u, f sinh u)` of the ellipse `u = const`.
    pub fn ellipse_at(&self, u: T) -> (T, T) {
        (self.f * u.cosh(), self.f * u.sinh())
    }
}

/// Wavenumbers and the resulting elliptical parameter.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct WaveParams<T> {
    pub k: T,
    pub k_z: T,
    pub k_tau: T,
    pub q: T,
}

pub fn elliptic_to_cartesian<T: Real>(geom: &EllipticGeometry<T>, u: T, v: T) -> Result<(T, T)> {
    if !(u >= T::zero()) {
        return Err(MathieuError::Domain(format!(
            "radial coordinate u must be >= 0, got {u}"
        )));
    }
    Ok((geom.f * u.cosh() * v.cos(), geom.f * u.sinh() * v.sin()))
}

/// Cartesian point from `ξ = cosh u`, `η = cos v`; `y` takes the
/// non-negative root, i.e. the `v ∈ [0, π]` half plane.
pub fn xi_eta_to_cartesian<T: Real>(geom: &EllipticGeometry<T>, xi: T, eta: T) -> Result<(T, T)> {
    check_xi_eta(xi, eta)?;
    let y = ((xi * xi - T::one()) * (T::one() - eta * eta)).sqrt();
    Ok((geom.f * xi * eta, geom.f * y))
}

fn check_xi_eta<T: Real>(xi: T, eta: T) -> Result<()> {
    if !(xi >= T::one()) || !(eta.abs() <= T::one()) {
        return Err(MathieuError::Domain(format!(
            "need xi >= 1 and |eta| <= 1, got xi = {xi}, eta = {eta}"
        )));
    }
    Ok(())
}

/// Scale factors `(h_ξ, h_η, h_z)`.
pub fn scale_factors<T: Real>(geom: &EllipticGeometry<T>, xi: T, eta: T) -> Result<(T, T, T)> {
    check_xi_eta(xi, eta)?;
    if xi == T::one() || eta.abs() == T::one() {
        return Err(MathieuError::SingularCoordinate(format!(
            "scale factors diverge at xi = {xi}, eta = {eta}"
        )));
    }
    let common = (xi * xi - eta * eta).sqrt();
    let h_xi = geom.f * common / (xi * xi - T::one()).sqrt();
    let h_eta = geom.f * common / (T::one() - eta * eta).sqrt();
    Ok((h_xi, h_eta, T::one()))
}

pub fn separation_parameters<T: Real>(
    geom: &EllipticGeometry<T>,
    k: T,
    k_z: T,
) -> Result<WaveParams<T>> {
    if !(k > T::zero()) || !k.is_finite() {
        return Err(MathieuError::Domain(format!(
            "wavenumber must be positive, got {k}"
        )));
    }
    if k_z.abs() > k {
        return Err(MathieuError::Evanescent {
            k: k.to_f64().unwrap_or(f64::NAN),
            k_z: k_z.to_f64().unwrap_or(f64::NAN),
        });
    }
    let k_tau = (k * k - k_z * k_z).max(T::zero()).sqrt();
    let f = geom.f;
    Ok(WaveParams {
        k,
        k_z,
        k_tau,
        q: k_tau * k_tau * f * f / T::lit(4.0),
    })
}
