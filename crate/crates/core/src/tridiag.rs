//! Real tridiagonal eigenproblems.
//!
//! The Mathieu recurrences produce tridiagonal matrices that are symmetric
//! except for the even-even case, whose first sub-diagonal entry is `2q`
//! against `q` above the diagonal. [`symmetrize`] removes that asymmetry with
//! a diagonal similarity, and [`eigen_decompose`] runs implicit-shift QL on
//! the symmetric result.

use crate::error::{MathieuError, Result};
use crate::scalar::Real;

/// Implicit-shift iterations allowed per eigenvalue.
pub const MAX_SWEEPS: usize = 50;

/// Tridiagonal matrix stored by bands.
///
/// `upper[i]` is entry `(i, i+1)` and `lower[i]` is entry `(i+1, i)`.
#[derive(Clone, Debug, PartialEq)]
pub struct TridiagonalSystem<T> {
    diag: Vec<T>,
    upper: Vec<T>,
    lower: Vec<T>,
}

impl<T: Real> TridiagonalSystem<T> {
    /// Builds a system, checking band lengths and that only the first pair
    /// of off-diagonal entries may differ.
    pub fn new(diag: Vec<T>, upper: Vec<T>, lower: Vec<T>) -> Result<Self> {
        let m = diag.len();
        if m < 2 {
            return Err(MathieuError::InvalidSystem(format!(
                "dimension {m} is below 2"
            )));
        }
        if upper.len() != m - 1 || lower.len() != m - 1 {
            return Err(MathieuError::InvalidSystem(format!(
                "off-diagonal bands must have length {}, got {} and {}",
                m - 1,
                upper.len(),
                lower.len()
            )));
        }
        if let Some(i) = (1..m - 1).find(|&i| upper[i] != lower[i]) {
            return Err(MathieuError::InvalidSystem(format!(
                "off-diagonal entries differ at index {i}"
            )));
        }
        Ok(Self { diag, upper, lower })
    }

    pub fn symmetric(diag: Vec<T>, off: Vec<T>) -> Result<Self> {
        let lower = off.clone();
        Self::new(diag, off, lower)
    }

    pub fn dim(&self) -> usize {
        self.diag.len()
    }

    pub fn diag(&self) -> &[T] {
        &self.diag
    }

    pub fn upper(&self) -> &[T] {
        &self.upper
    }

    pub fn lower(&self) -> &[T] {
        &self.lower
    }

    pub fn is_symmetric(&self) -> bool {
        self.upper[0] == self.lower[0]
    }

    /// Matrix-vector product `B x`.
    pub fn apply(&self, x: &[T]) -> Vec<T> {
        let m = self.dim();
        assert_eq!(x.len(), m, "vector length must match system dimension");
        (0..m)
            .map(|i| {
                let mut y = self.diag[i] * x[i];
                if i > 0 {
                    y = y + self.lower[i - 1] * x[i - 1];
                }
                if i + 1 < m {
                    y = y + self.upper[i] * x[i + 1];
                }
                y
            })
            .collect()
    }

    /// Infinity norm (maximum absolute row sum).
    pub fn norm_inf(&self) -> T {
        let m = self.dim();
        (0..m)
            .map(|i| {
                let mut s = self.diag[i].abs();
                if i > 0 {
                    s = s + self.lower[i - 1].abs();
                }
                if i + 1 < m {
                    s = s + self.upper[i].abs();
                }
                s
            })
            .fold(T::zero(), T::max)
    }
}

/// Eigenpairs of a tridiagonal system, eigenvalues ascending.
#[derive(Clone, Debug, PartialEq)]
pub struct EigenDecomposition<T> {
    eigenvalues: Vec<T>,
    // column-major, column k pairs with eigenvalue k
    vectors: Vec<T>,
    dim: usize,
}

impl<T: Real> EigenDecomposition<T> {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn eigenvalues(&self) -> &[T] {
        &self.eigenvalues
    }

    pub fn eigenvector(&self, k: usize) -> &[T] {
        &self.vectors[k * self.dim..(k + 1) * self.dim]
    }

    pub fn eigenvector_mut(&mut self, k: usize) -> &mut [T] {
        &mut self.vectors[k * self.dim..(k + 1) * self.dim]
    }

    pub(crate) fn into_parts(self) -> (Vec<T>, Vec<T>, usize) {
        (self.eigenvalues, self.vectors, self.dim)
    }

    /// Largest scaled residual `‖B x − a x‖∞ / (‖B‖∞ ‖x‖∞)` over all pairs.
    pub fn max_residual(&self, system: &TridiagonalSystem<T>) -> T {
        let norm = system.norm_inf();
        (0..self.dim)
            .map(|k| {
                let x = self.eigenvector(k);
                let a = self.eigenvalues[k];
                let bx = system.apply(x);
                let r = bx
                    .iter()
                    .zip(x)
                    .map(|(&b, &xi)| (b - a * xi).abs())
                    .fold(T::zero(), T::max);
                let xn = x.iter().map(|v| v.abs()).fold(T::zero(), T::max);
                r / (norm * xn)
            })
            .fold(T::zero(), T::max)
    }
}

/// Removes the asymmetry of the leading off-diagonal pair by the similarity
/// `D B D⁻¹` with `D = diag(d₀, 1, …, 1)` and `d₀ = √(lower[0] / upper[0])`.
///
/// Returns the symmetric system and the diagonal of `D`. An eigenvector `y`
/// of the symmetric system maps back to `x = D⁻¹ y`, i.e. `x[0] = y[0] / d₀`.
pub fn symmetrize<T: Real>(
    system: &TridiagonalSystem<T>,
) -> Result<(TridiagonalSystem<T>, Vec<T>)> {
    let m = system.dim();
    let mut scaling = vec![T::one(); m];
    if system.is_symmetric() {
        return Ok((system.clone(), scaling));
    }
    let (up, lo) = (system.upper[0], system.lower[0]);
    let prod = up * lo;
    if prod < T::zero() {
        return Err(MathieuError::InvalidSystem(
            "leading off-diagonal pair has opposite signs".into(),
        ));
    }
    if prod == T::zero() {
        return Err(MathieuError::InvalidSystem(
            "exactly one leading off-diagonal entry is zero".into(),
        ));
    }
    scaling[0] = (lo / up).sqrt();
    let off = prod.sqrt().copysign(up);
    let mut upper = system.upper.clone();
    let mut lower = system.lower.clone();
    upper[0] = off;
    lower[0] = off;
    Ok((
        TridiagonalSystem {
            diag: system.diag.clone(),
            upper,
            lower,
        },
        scaling,
    ))
}

/// Eigenvalues and orthonormal eigenvectors of a symmetric tridiagonal system
/// by the implicit-shift QL algorithm.
pub fn eigen_decompose<T: Real>(system: &TridiagonalSystem<T>) -> Result<EigenDecomposition<T>> {
    if !system.is_symmetric() {
        return Err(MathieuError::InvalidSystem(
            "eigen_decompose requires a symmetric system".into(),
        ));
    }
    let n = system.dim();
    let mut d = system.diag.clone();
    // e[i] couples rows i and i+1; e[n-1] is a zero sentinel
    let mut e = system.upper.clone();
    e.push(T::zero());
    // row-major accumulation of rotations, v[k * n + i]
    let mut v = vec![T::zero(); n * n];
    for i in 0..n {
        v[i * n + i] = T::one();
    }

    let eps = T::epsilon();
    let two = T::lit(2.0);
    let mut shift = T::zero();
    let mut tst1 = T::zero();
    for l in 0..n {
        tst1 = tst1.max(d[l].abs() + e[l].abs());
        let mut m = l;
        while m < n && e[m].abs() > eps * tst1 {
            m += 1;
        }
        if m > l {
            let mut iter = 0;
            loop {
                iter += 1;
                if iter > MAX_SWEEPS {
                    return Err(MathieuError::NoConvergence {
                        index: l,
                        iterations: MAX_SWEEPS,
                    });
                }
                let g = d[l];
                let mut p = (d[l + 1] - g) / (two * e[l]);
                let mut r = p.hypot(T::one());
                if p < T::zero() {
                    r = -r;
                }
                d[l] = e[l] / (p + r);
                d[l + 1] = e[l] * (p + r);
                let dl1 = d[l + 1];
                let mut h = g - d[l];
                for di in d.iter_mut().skip(l + 2) {
                    *di = *di - h;
                }
                shift = shift + h;

                p = d[m];
                let mut c = T::one();
                let mut c2 = c;
                let mut c3 = c;
                let el1 = e[l + 1];
                let mut s = T::zero();
                let mut s2 = T::zero();
                for i in (l..m).rev() {
                    c3 = c2;
                    c2 = c;
                    s2 = s;
                    let g = c * e[i];
                    h = c * p;
                    r = p.hypot(e[i]);
                    e[i + 1] = s * r;
                    s = e[i] / r;
                    c = p / r;
                    p = c * d[i] - s * g;
                    d[i + 1] = h + s * (c * g + s * d[i]);
                    for k in 0..n {
                        let row = k * n;
                        let vh = v[row + i + 1];
                        v[row + i + 1] = s * v[row + i] + c * vh;
                        v[row + i] = c * v[row + i] - s * vh;
                    }
                }
                p = -s * s2 * c3 * el1 * e[l] / dl1;
                e[l] = s * p;
                d[l] = c * p;
                if e[l].abs() <= eps * tst1 {
                    break;
                }
            }
        }
        d[l] = d[l] + shift;
        e[l] = T::zero();
    }

    // Stable ascending order: ties keep solver output order.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| d[a].partial_cmp(&d[b]).unwrap_or(std::cmp::Ordering::Equal));
    let eigenvalues = order.iter().map(|&k| d[k]).collect();
    let mut vectors = Vec::with_capacity(n * n);
    for &k in &order {
        vectors.extend((0..n).map(|row| v[row * n + k]));
    }
    Ok(EigenDecomposition {
        eigenvalues,
        vectors,
        dim: n,
    })
}

/// Eigenpairs of a possibly non-symmetric system with the structure accepted
/// by [`TridiagonalSystem::new`]. Eigenvectors are returned in the original
/// basis and are no longer unit-normalized when a scaling was applied.
pub fn solve<T: Real>(system: &TridiagonalSystem<T>) -> Result<EigenDecomposition<T>> {
    let (sym, scaling) = symmetrize(system)?;
    let mut eig = eigen_decompose(&sym)?;
    if scaling.iter().any(|&d| d != T::one()) {
        for k in 0..eig.dim {
            for (x, &d) in eig.eigenvector_mut(k).iter_mut().zip(&scaling) {
                *x = *x / d;
            }
        }
    }
    Ok(eig)
}
