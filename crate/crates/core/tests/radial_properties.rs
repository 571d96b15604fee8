use std::f64::consts::PI;

use mathieu::angular::eig_spm;
use mathieu::radial::{
    dhpm, djpm, dypm, gpm, hpm, jpm, spm_hyperbolic, ypm, HankelKind, RadialEvaluator,
};
use mathieu::{Category, SpectralData64};
use mathieu::bessel::{bessel_j_sequence, bessel_jy_sequences};
use mathieu_oracle::{bessel_j, bessel_y, central_difference, second_difference5};
use proptest::prelude::*;

/// Orders with true order `t <= 9`.
fn low_orders(c: Category) -> usize {
    (0..25).take_while(|&n| c.true_order(n) <= 9).count()
}

fn spectral(c: Category, q: f64) -> SpectralData64 {
    eig_spm(c, q, 25).unwrap()
}

#[test]
fn first_and_second_kind_derivatives_match_differences() {
    let (u, q, h) = (0.7, 10.0, 1e-5);
    for c in Category::ALL {
        let s = spectral(c, q);
        let nmax = low_orders(c);
        let dj = djpm(u, &s, nmax).unwrap();
        let dy = dypm(u, &s, nmax).unwrap();
        for n in 0..nmax {
            let fj = central_difference(|x| jpm(x, &s, nmax).unwrap()[n], u, h);
            let fy = central_difference(|x| ypm(x, &s, nmax).unwrap()[n], u, h);
            assert!((dj[n] - fj).abs() <= 1e-7 * dj[n].abs().max(1.0), "{c} n={n}: dJ {} vs {fj}", dj[n]);
            assert!((dy[n] - fy).abs() <= 1e-7 * dy[n].abs().max(1.0), "{c} n={n}: dY {} vs {fy}", dy[n]);
        }
    }
}

#[test]
fn hankel_derivatives_match_differences() {
    let (u, q, h) = (0.7, 10.0, 1e-5);
    for c in Category::ALL {
        let s = spectral(c, q);
        let nmax = low_orders(c);
        for kind in [HankelKind::Third, HankelKind::Fourth] {
            let d = dhpm(kind, u, &s, nmax).unwrap();
            for n in 0..nmax {
                let re = central_difference(|x| hpm(kind, x, &s, nmax).unwrap()[n].re, u, h);
                let im = central_difference(|x| hpm(kind, x, &s, nmax).unwrap()[n].im, u, h);
                let scale = d[n].norm().max(1.0);
                assert!((d[n].re - re).abs() <= 1e-7 * scale);
                assert!((d[n].im - im).abs() <= 1e-7 * scale);
            }
        }
    }
}

#[test]
fn radial_equation_residuals() {
    let h = 1e-3;
    for c in Category::ALL {
        for &q in &[5.0f64, 25.0] {
            let s = spectral(c, q);
            let nmax = low_orders(c);
            for &u in &[0.5f64, 1.0, 2.0] {
                let potential = |n: usize| s.char_values()[n] - 2.0 * q * (2.0 * u).cosh();
                let check = |name: &str, n: usize, f: &dyn Fn(f64) -> f64| {
                    let r2 = second_difference5(f, u, h);
                    let resid = (r2 - potential(n) * f(u)).abs();
                    assert!(resid <= 1e-6 * (1.0 + r2.abs()), "{name} {c} q={q} u={u} n={n}: {resid:e}");
                };
                for n in 0..nmax {
                    check("J", n, &|x| jpm(x, &s, nmax).unwrap()[n]);
                    check("Y", n, &|x| ypm(x, &s, nmax).unwrap()[n]);
                    check("H1.re", n, &|x| hpm(HankelKind::Third, x, &s, nmax).unwrap()[n].re);
                    check("H2.im", n, &|x| hpm(HankelKind::Fourth, x, &s, nmax).unwrap()[n].im);
                }
            }
        }
    }
}

#[test]
fn wronskian_is_constant() {
    for c in Category::ALL {
        for &q in &[5.0, 10.0, 25.0] {
            let s = spectral(c, q);
            let nmax = low_orders(c);
            let wronskian = |u: f64| {
                let ev = RadialEvaluator::new(u, q, 25).unwrap();
                let j = ev.first_kind(&s, nmax).unwrap();
                let y = ev.second_kind(&s, nmax).unwrap();
                j.iter()
                    .zip(&y)
                    .map(|(j, y)| j.value * y.derivative - y.value * j.derivative)
                    .collect::<Vec<_>>()
            };
            let reference = wronskian(1.0);
            for &u in &[0.2, 0.5, 1.0, 2.0] {
                for (n, (w, w0)) in wronskian(u).iter().zip(&reference).enumerate() {
                    assert!(((w - w0) / w0).abs() <= 1e-9, "{c} q={q} n={n} u={u}: {w} vs {w0}");
                }
            }
        }
    }
}

#[test]
fn wronskian_values_recorded() {
    // Not asserted against published numbers; printed for the record.
    for c in Category::ALL {
        let s = spectral(c, 5.0);
        let ev = RadialEvaluator::new(1.0, 5.0, 25).unwrap();
        let j = ev.first_kind(&s, 3).unwrap();
        let y = ev.second_kind(&s, 3).unwrap();
        for n in 0..3 {
            let w = j[n].value * y[n].derivative - y[n].value * j[n].derivative;
            assert!(w.is_finite() && w != 0.0);
            println!("{c} t={} W={w:.15e}", s.true_orders()[n]);
        }
    }
}

#[test]
fn hyperbolic_series_agrees_with_bessel_products() {
    let u = 0.5;
    let mut worst: f64 = 0.0;
    for c in Category::ALL {
        for &q in &[5.0, 10.0, 20.0] {
            let s = spectral(c, q);
            let nmax = 4;
            let g = gpm(&s, nmax).unwrap();
            let j = jpm(u, &s, nmax).unwrap();
            let hyp = spm_hyperbolic(u, &s, nmax).unwrap();
            for n in 0..nmax {
                let joined = (2.0 * PI).sqrt() * g[n] * j[n];
                worst = worst.max((hyp[n] - joined).abs());
            }
        }
    }
    println!("max |S(iu) - sqrt(2pi) g J| = {worst:e}");
    assert!(worst < 7.5e-12);
}

#[test]
fn endpoint_identities() {
    // Beyond t = 9 the u = 0 sums cancel against 1/A0 and the identities
    // degrade by roughly a decade per two orders.
    for c in Category::ALL {
        for &q in &[0.5, 1.0, 5.0, 8.0, 25.0] {
            let s = spectral(c, q);
            let nmax = low_orders(c);
            let g = gpm(&s, nmax).unwrap();
            let j = jpm(0.0, &s, nmax).unwrap();
            let dj = djpm(0.0, &s, nmax).unwrap();
            for n in 0..nmax {
                let expect = 1.0 / ((2.0 * PI).sqrt() * g[n]);
                let tol = 1e-12 * expect.abs().max(1.0);
                if c.is_even() {
                    assert!((j[n] - expect).abs() <= tol, "{c} q={q} n={n}: {} vs {expect}", j[n]);
                    assert!(dj[n].abs() <= tol);
                } else {
                    assert!(j[n].abs() <= tol);
                    assert!((dj[n] - expect).abs() <= tol, "{c} q={q} n={n}: {} vs {expect}", dj[n]);
                }
            }
        }
    }
}

/// `J_k(v1)`, `J_k(v2)`, `Y_k(v2)` for `k < len`.
struct Tables {
    j1: Vec<f64>,
    j2: Vec<f64>,
    y2: Vec<f64>,
}

impl Tables {
    fn oracle(u: f64, q: f64, len: usize) -> Self {
        let (v1, v2) = (q.sqrt() * (-u).exp(), q.sqrt() * u.exp());
        Self {
            j1: (0..len as u64).map(|k| bessel_j(k, v1)).collect(),
            j2: (0..len as u64).map(|k| bessel_j(k, v2)).collect(),
            y2: (0..len as u64).map(|k| bessel_y(k, v2)).collect(),
        }
    }

    fn library(u: f64, q: f64, len: usize) -> Self {
        let (v1, v2) = (q.sqrt() * (-u).exp(), q.sqrt() * u.exp());
        let (j2, y2) = bessel_jy_sequences(v2, len - 1).unwrap();
        Self {
            j1: bessel_j_sequence(v1, len - 1).unwrap().values().to_vec(),
            j2: j2.values().to_vec(),
            y2: y2.values().to_vec(),
        }
    }
}

/// Signed terms of the radial series written out per category from the
/// printed formulas, prefactor included.
fn reference_terms(s: &SpectralData64, n: usize, b: &Tables, second: bool) -> Vec<f64> {
    let a = s.coefficients(n);
    let jv1 = |k: usize| b.j1[k];
    let zv2 = |k: usize| if second { b.y2[k] } else { b.j2[k] };
    let t = s.true_orders()[n];
    let sign_r = if (t / 2).is_multiple_of(2) { 1.0 } else { -1.0 };
    let pre = (PI / 2.0).sqrt() * sign_r / a[0];
    a.iter()
        .enumerate()
        .map(|(i, &coef)| {
            let (j, product) = match s.category() {
                Category::EvenEven => (i, jv1(i) * zv2(i)),
                Category::EvenOdd => (i, jv1(i) * zv2(i + 1) + zv2(i) * jv1(i + 1)),
                Category::OddEven => (i + 1, jv1(i) * zv2(i + 2) - zv2(i) * jv1(i + 2)),
                Category::OddOdd => (i, jv1(i) * zv2(i + 1) - zv2(i) * jv1(i + 1)),
            };
            let sgn = if j.is_multiple_of(2) { 1.0 } else { -1.0 };
            pre * sgn * coef * product
        })
        .collect()
}

#[test]
fn long_series_oracle() {
    let (u, q) = (0.5, 5.0);
    let oracle = Tables::oracle(u, q, 53);
    for c in Category::ALL {
        let short = spectral(c, q);
        let long = eig_spm(c, q, 50).unwrap();
        let nmax = low_orders(c);
        let j = jpm(u, &short, nmax).unwrap();
        let y = ypm(u, &short, nmax).unwrap();
        for n in 0..nmax {
            for (name, value, second) in [("J", j[n], false), ("Y", y[n], true)] {
                let terms = reference_terms(&long, n, &oracle, second);
                let reference: f64 = terms.iter().sum();
                // cancellation between terms bounds what any summation can resolve
                let scale = terms.iter().map(|x| x.abs()).sum::<f64>();
                assert!(
                    (value - reference).abs() <= 1e-11 * scale,
                    "{c} n={n}: {name} {value} vs {reference}"
                );
            }
        }
    }
    let s = spectral(Category::EvenEven, q);
    let reference: f64 = reference_terms(&eig_spm(Category::EvenEven, q, 50).unwrap(), 0, &oracle, true)
        .iter()
        .sum();
    let y = ypm(u, &s, 1).unwrap()[0];
    assert!(((y - reference) / reference).abs() <= 1e-11, "{y} vs {reference}");
}

#[test]
fn truncated_series_tail_is_negligible() {
    let mut worst: f64 = 0.0;
    for c in Category::ALL {
        for &q in &[1.0, 5.0, 15.0, 25.0] {
            let s = spectral(c, q);
            for &u in &[0.0, 0.5, 1.0, 2.0] {
                let tables = Tables::library(u, q, 28);
                for n in 0..15 {
                    for second in [false, true] {
                        let terms = reference_terms(&s, n, &tables, second);
                        let sum: f64 = terms.iter().sum();
                        if sum == 0.0 {
                            continue;
                        }
                        worst = worst.max((terms[24] / sum).abs());
                    }
                }
            }
        }
    }
    println!("largest last-term ratio {worst:e}");
    assert!(worst <= 1e-13);
}

#[test]
fn finite_over_certified_domain() {
    for c in Category::ALL {
        for &q in &[0.01, 1.0, 10.0, 50.0, 100.0] {
            let s = spectral(c, q);
            let nmax = (0..25).take_while(|&n| c.true_order(n) <= 15).count();
            for &u in &[0.0, 0.3, 1.0, 2.5, 5.0] {
                let ev = RadialEvaluator::new(u, q, 25).unwrap();
                for kind in [HankelKind::Third, HankelKind::Fourth] {
                    for r in ev.hankel(kind, &s, nmax).unwrap() {
                        assert!(r.value.re.is_finite() && r.value.im.is_finite(), "{c} q={q} u={u}");
                        assert!(r.derivative.re.is_finite() && r.derivative.im.is_finite());
                    }
                }
            }
        }
    }
}

#[test]
fn hankel_combinations() {
    for c in Category::ALL {
        let s = spectral(c, 7.0);
        let ev = RadialEvaluator::new(0.8, 7.0, 25).unwrap();
        let j = ev.first_kind(&s, 10).unwrap();
        let y = ev.second_kind(&s, 10).unwrap();
        let h1 = ev.hankel(HankelKind::Third, &s, 10).unwrap();
        let h2 = ev.hankel(HankelKind::Fourth, &s, 10).unwrap();
        for n in 0..10 {
            assert_eq!(h1[n].conj(), h2[n]);
            assert_eq!((h1[n].value + h2[n].value).re, 2.0 * j[n].value);
            assert_eq!((h1[n].value - h2[n].value).im, 2.0 * y[n].value);
            assert_eq!(h1[n].derivative.re, j[n].derivative);
            assert_eq!(h1[n].derivative.im, y[n].derivative);
        }
    }
}

#[test]
fn rejects_invalid_arguments() {
    let s = spectral(Category::EvenEven, 5.0);
    assert!(jpm(-0.1, &s, 3).is_err());
    assert!(jpm(0.5, &s, 30).is_err());
    let s0 = spectral(Category::EvenEven, 0.0);
    assert!(jpm(0.5, &s0, 3).is_err());
    assert!(gpm(&s0, 3).is_err());
    assert!(RadialEvaluator::new(0.5, 6.0, 25).unwrap().jpm(&s, 3).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn random_radial_invariants(code in 1u8..=4, q in 1.0f64..30.0, u in 0.2f64..2.5) {
        let c = Category::from_code(code).unwrap();
        let s = spectral(c, q);
        let ev = RadialEvaluator::new(u, q, 25).unwrap();
        let args = ev.args();
        prop_assert!(((args.v1() * args.v2() - q) / q).abs() <= 1e-14);
        prop_assert!(args.v1() <= q.sqrt() && q.sqrt() <= args.v2());
        let nmax = low_orders(c);
        let j = ev.first_kind(&s, nmax).unwrap();
        let y = ev.second_kind(&s, nmax).unwrap();
        for (n, h) in ev.hankel(HankelKind::Third, &s, nmax).unwrap().iter().enumerate() {
            prop_assert!(h.value.re.is_finite() && h.value.im.is_finite());
            prop_assert!(h.derivative.re.is_finite() && h.derivative.im.is_finite());
            // Wronskian of the pair is unity under this normalization
            let w = j[n].value * y[n].derivative - y[n].value * j[n].derivative;
            prop_assert!((w - 1.0).abs() <= 1e-8, "{} n={} W={}", c, n, w);
        }
    }
}
