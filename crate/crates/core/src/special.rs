//! Special functions and quadrature helpers.
//!
//! Hermite and Laguerre evaluation uses three-term recurrences on
//! normalized/plain values (no factorial ratios) so indices of several
//! hundred stay stable. Airy Ai is computed from its Maclaurin series for
//! |z| < 6 and the standard asymptotic expansions beyond (DLMF §9.7), with
//! the switch point covered by tests on both branches.

use std::f64::consts::PI;

/// Γ(5/4), used by the closed-form quartic partition integrals.
pub const GAMMA_5_4: f64 = 0.906_402_477_055_477_1;

/// Normalized harmonic-oscillator eigenfunction ψ_n(x) for mass `m`,
/// frequency `omega`, action scale `epsilon`.
///
/// ψ_n(x) = (π ξ0²)^(-1/4) (2ⁿ n!)^(-1/2) H_n(x/ξ0) exp(-x²/(2ξ0²)),
/// ξ0² = ε/(mω), evaluated with the normalized Hermite recurrence
/// h_{n+1} = u·√(2/(n+1))·h_n − √(n/(n+1))·h_{n-1}.
pub fn ho_state(n: usize, m: f64, omega: f64, epsilon: f64, x: f64) -> f64 {
    let xi0 = (epsilon / (m * omega)).sqrt();
    let u = x / xi0;
    let h0 = PI.powf(-0.25) * (-0.5 * u * u).exp();
    if n == 0 {
        return h0 / xi0.sqrt();
    }
    let mut prev = h0;
    let mut cur = (2.0f64).sqrt() * u * h0;
    for k in 1..n {
        let next = u * (2.0 / (k as f64 + 1.0)).sqrt() * cur
            - (k as f64 / (k as f64 + 1.0)).sqrt() * prev;
        prev = cur;
        cur = next;
    }
    cur / xi0.sqrt()
}

/// Laguerre polynomial L_n(x) by the three-term recurrence.
pub fn laguerre(n: usize, x: f64) -> f64 {
    if n == 0 {
        return 1.0;
    }
    let mut prev = 1.0;
    let mut cur = 1.0 - x;
    for k in 1..n {
        let kf = k as f64;
        let next = ((2.0 * kf + 1.0 - x) * cur - kf * prev) / (kf + 1.0);
        prev = cur;
        cur = next;
    }
    cur
}

/// Bessel function of the first kind J0.
pub fn bessel_j0(x: f64) -> f64 {
    libm::j0(x)
}

// Coefficients of the Airy asymptotic series, u_{k+1}/u_k =
// (3k+1/2)(3k+3/2)(3k+5/2) / (54 (k+1)(k+1/2)).
fn airy_u(kmax: usize) -> Vec<f64> {
    let mut u = vec![1.0];
    for k in 0..kmax {
        let kf = k as f64;
        let num = (3.0 * kf + 0.5) * (3.0 * kf + 1.5) * (3.0 * kf + 2.5);
        let den = 54.0 * (kf + 1.0) * (kf + 0.5);
        u.push(u[k] * num / den);
    }
    u
}

const AIRY_SWITCH: f64 = 6.0;

/// Airy function Ai(z) for real argument.
pub fn airy_ai(z: f64) -> f64 {
    if z.abs() < AIRY_SWITCH {
        airy_series(z)
    } else if z > 0.0 {
        airy_asymptotic_pos(z)
    } else {
        airy_asymptotic_neg(-z)
    }
}

fn airy_series(z: f64) -> f64 {
    // Ai(z) = c1 f(z) - c2 g(z) with c1 = Ai(0), c2 = -Ai'(0).
    const C1: f64 = 0.355_028_053_887_817_2;
    const C2: f64 = 0.258_819_403_792_806_8;
    let z3 = z * z * z;
    let mut f_term = 1.0;
    let mut g_term = z;
    let mut f = f_term;
    let mut g = g_term;
    for k in 0..60 {
        let kf = k as f64;
        f_term *= z3 / ((3.0 * kf + 2.0) * (3.0 * kf + 3.0));
        g_term *= z3 / ((3.0 * kf + 3.0) * (3.0 * kf + 4.0));
        f += f_term;
        g += g_term;
        if f_term.abs() < 1e-18 * f.abs().max(1.0) && g_term.abs() < 1e-18 * g.abs().max(1.0) {
            break;
        }
    }
    C1 * f - C2 * g
}

fn airy_asymptotic_pos(z: f64) -> f64 {
    let zeta = 2.0 / 3.0 * z.powf(1.5);
    let u = airy_u(10);
    let mut sum = 0.0;
    let mut sign = 1.0;
    let mut zp = 1.0;
    for uk in &u {
        sum += sign * uk / zp;
        sign = -sign;
        zp *= zeta;
    }
    (-zeta).exp() / (2.0 * PI.sqrt() * z.powf(0.25)) * sum
}

fn airy_asymptotic_neg(x: f64) -> f64 {
    // Ai(-x) ~ (cos(ζ-π/4) Σ (-1)^k u_{2k} ζ^{-2k}
    //           + sin(ζ-π/4) Σ (-1)^k u_{2k+1} ζ^{-2k-1}) / (√π x^{1/4})
    let zeta = 2.0 / 3.0 * x.powf(1.5);
    let u = airy_u(11);
    let z2 = zeta * zeta;
    let mut p = 0.0;
    let mut q = 0.0;
    let mut sign = 1.0;
    let mut zp_even = 1.0;
    let mut zp_odd = zeta;
    for k in 0..5 {
        p += sign * u[2 * k] / zp_even;
        q += sign * u[2 * k + 1] / zp_odd;
        sign = -sign;
        zp_even *= z2;
        zp_odd *= z2;
    }
    let phase = zeta - PI / 4.0;
    (phase.cos() * p + phase.sin() * q) / (PI.sqrt() * x.powf(0.25))
}

/// Composite Simpson integration of `f` on [a, b] with `n` subintervals
/// (rounded up to even).
pub fn simpson(a: f64, b: f64, n: usize, f: impl Fn(f64) -> f64) -> f64 {
    let n = if n % 2 == 0 { n } else { n + 1 };
    let h = (b - a) / n as f64;
    let mut acc = f(a) + f(b);
    for k in 1..n {
        let w = if k % 2 == 1 { 4.0 } else { 2.0 };
        acc += w * f(a + h * k as f64);
    }
    acc * h / 3.0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::make_grid_1d;

    // Reference values computed with an independent special-function
    // library (double precision).
    const AIRY_REF: &[(f64, f64)] = &[
        (-12.0, -6.6555175054372639e-02),
        (-6.1, -3.5351167612096479e-01),
        (-6.0, -3.2914517362982310e-01),
        (-5.9, -2.8512277955518012e-01),
        (-5.5, 1.7781541276575247e-02),
        (-2.0, 2.2740742820168564e-01),
        (-1.0, 5.3556088329235219e-01),
        (0.0, 3.5502805388781722e-01),
        (0.5, 2.3169360648083343e-01),
        (1.0, 1.3529241631288147e-01),
        (2.0, 3.4924130423274358e-02),
        (5.9, 1.2747094509184485e-05),
        (6.0, 9.9476943602528973e-06),
        (6.1, 7.7477310324484348e-06),
        (8.0, 4.6922076160992236e-08),
        (12.0, 1.3931846888753630e-13),
    ];

    #[test]
    fn airy_matches_reference() {
        for &(z, want) in AIRY_REF {
            let got = airy_ai(z);
            let tol = 1e-10 * want.abs().max(1e-6);
            assert!((got - want).abs() < tol, "Ai({z}) = {got:e}, want {want:e}");
        }
    }

    #[test]
    fn airy_continuous_at_switch() {
        // Series and asymptotic branches agree where they hand over.
        for &z in &[6.0, -6.0] {
            let series = airy_series(z);
            let asym = if z > 0.0 {
                airy_asymptotic_pos(z)
            } else {
                airy_asymptotic_neg(-z)
            };
            assert!(
                (series - asym).abs() < 1e-9 * series.abs().max(1e-9),
                "branch mismatch at {z}: {series:e} vs {asym:e}"
            );
        }
    }

    #[test]
    fn airy_right_tail_integral() {
        // ∫_0^∞ Ai = 1/3 exactly.
        let i = simpson(0.0, 14.0, 4000, airy_ai);
        assert!((i - 1.0 / 3.0).abs() < 1e-9, "got {i}");
    }

    #[test]
    fn laguerre_small_orders() {
        assert_eq!(laguerre(0, 3.7), 1.0);
        assert!((laguerre(1, 2.0) - (-1.0)).abs() < 1e-15);
        // L2(x) = (x² - 4x + 2)/2 at x = 3: (9 - 12 + 2)/2 = -0.5
        assert!((laguerre(2, 3.0) + 0.5).abs() < 1e-14);
        // L_n(0) = 1 for all n
        for n in 0..200 {
            assert!((laguerre(n, 0.0) - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn bessel_j0_reference() {
        assert_eq!(bessel_j0(0.0), 1.0);
        assert!((bessel_j0(1.0) - 7.6519768655796649e-01).abs() < 1e-14);
        assert!((bessel_j0(2.5) - (-4.8383776468198039e-02)).abs() < 1e-14);
        assert!((bessel_j0(10.0) - (-2.4593576445134832e-01)).abs() < 1e-14);
    }

    #[test]
    fn ho_state_values_and_norm() {
        // ψ0(0) = (π ξ0²)^(-1/4) with ξ0² = ε/(mω)
        let v = ho_state(0, 1.0, 1.0, 1.0, 0.0);
        assert!((v - PI.powf(-0.25)).abs() < 1e-14);
        // odd states vanish at the origin
        assert_eq!(ho_state(1, 1.0, 1.0, 1.0, 0.0), 0.0);
        assert!(ho_state(7, 2.0, 0.5, 1.0, 0.0).abs() < 1e-14);
        // quadrature norm of ψ3 is 1
        let g = make_grid_1d(-10.0, 10.0, 801).unwrap();
        let dx = g.spacing(0);
        let s: f64 = (0..g.len())
            .map(|i| ho_state(3, 1.0, 1.0, 1.0, g.coord(0, i)).powi(2) * dx)
            .sum();
        assert!((s - 1.0).abs() < 1e-8, "norm² = {s}");
    }

    #[test]
    fn ho_state_stable_at_high_order() {
        // n = 300 on its classical support; finite and normalized
        let g = make_grid_1d(-30.0, 30.0, 4001).unwrap();
        let dx = g.spacing(0);
        let s: f64 = (0..g.len())
            .map(|i| ho_state(300, 1.0, 1.0, 1.0, g.coord(0, i)).powi(2) * dx)
            .sum();
        assert!((s - 1.0).abs() < 1e-6, "norm² = {s}");
    }

    #[test]
    fn simpson_exact_on_cubics() {
        let i = simpson(0.0, 2.0, 16, |x| x * x * x - x);
        assert!((i - (4.0 - 2.0)).abs() < 1e-13);
    }
}
