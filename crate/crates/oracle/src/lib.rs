//! Reference routines for the test suites.
//!
//! Nothing here shares code with the `mathieu` crate: Bessel functions come
//! from their ascending series evaluated in big-integer fixed point, matrix
//! eigenvalues from dense determinants and bisection, integrals from the
//! periodic trapezoid rule.

mod fixed;

pub use fixed::{bessel_j, bessel_y};

/// `∫₀^{2π} f dv` by the trapezoid rule on `points` equispaced nodes; spectrally
/// accurate for smooth periodic integrands.
pub fn periodic_trapezoid<F: Fn(f64) -> f64>(f: F, points: usize) -> f64 {
    let h = 2.0 * std::f64::consts::PI / points as f64;
    (0..points).map(|k| f(k as f64 * h)).sum::<f64>() * h
}

/// `(f(x+h) − f(x−h)) / 2h`
pub fn central_difference<F: Fn(f64) -> f64>(f: F, x: f64, h: f64) -> f64 {
    (f(x + h) - f(x - h)) / (2.0 * h)
}

/// Fourth-order five-point second derivative.
pub fn second_difference5<F: Fn(f64) -> f64>(f: F, x: f64, h: f64) -> f64 {
    (-f(x + 2.0 * h) + 16.0 * f(x + h) - 30.0 * f(x) + 16.0 * f(x - h) - f(x - 2.0 * h))
        / (12.0 * h * h)
}

/// Determinant of a dense square matrix by Gaussian elimination with
/// partial pivoting.
pub fn determinant(mut m: Vec<Vec<f64>>) -> f64 {
    let n = m.len();
    let mut det = 1.0;
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&a, &b| m[a][col].abs().partial_cmp(&m[b][col].abs()).unwrap())
            .unwrap();
        if m[pivot][col] == 0.0 {
            return 0.0;
        }
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        det *= m[col][col];
        for row in col + 1..n {
            let factor = m[row][col] / m[col][col];
            for k in col..n {
                m[row][k] -= factor * m[col][k];
            }
        }
    }
    det
}

/// Real eigenvalues of a dense matrix whose spectrum is real and simple,
/// found as sign changes of `det(B − aI)` on a fine grid inside the
/// Gershgorin bound, refined by bisection. Ascending.
pub fn dense_eigenvalues(matrix: &[Vec<f64>], grid_step: f64) -> Vec<f64> {
    let n = matrix.len();
    let radius = matrix
        .iter()
        .map(|row| row.iter().map(|x| x.abs()).sum::<f64>())
        .fold(0.0, f64::max)
        + 1.0;
    let char_poly = |a: f64| {
        let shifted = matrix
            .iter()
            .enumerate()
            .map(|(i, row)| {
                row.iter()
                    .enumerate()
                    .map(|(j, &x)| if i == j { x - a } else { x })
                    .collect()
            })
            .collect();
        determinant(shifted)
    };
    let mut roots = Vec::with_capacity(n);
    let mut lo = -radius;
    let mut f_lo = char_poly(lo);
    while lo < radius && roots.len() < n {
        let hi = lo + grid_step;
        let f_hi = char_poly(hi);
        if f_hi == 0.0 {
            roots.push(hi);
        } else if f_lo.signum() != f_hi.signum() && f_lo != 0.0 {
            let (mut a, mut b, mut fa) = (lo, hi, f_lo);
            for _ in 0..200 {
                let mid = 0.5 * (a + b);
                if mid == a || mid == b {
                    break;
                }
                let fm = char_poly(mid);
                if fm.signum() == fa.signum() {
                    a = mid;
                    fa = fm;
                } else {
                    b = mid;
                }
            }
            roots.push(0.5 * (a + b));
        }
        lo = hi;
        f_lo = f_hi;
    }
    roots
}
