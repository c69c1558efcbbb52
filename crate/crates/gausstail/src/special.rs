//! Shared special-function kernel: Gaussian tail/density and the Gamma
//! function.

use std::f64::consts::PI;

/// Standard normal upper tail and density, `(1 - Phi(u), phi(u))`.
///
/// The tail goes through erfc rather than `1 - Phi` so large levels do not
/// cancel: `1 - Phi(u) = erfc(u / sqrt(2)) / 2`.
pub fn gaussian_kernels(u: f64) -> (f64, f64) {
    let tail = 0.5 * libm::erfc(u / std::f64::consts::SQRT_2);
    let density = (-0.5 * u * u).exp() / (2.0 * PI).sqrt();
    (tail, density)
}

/// Standard normal CDF.
pub fn normal_cdf(u: f64) -> f64 {
    0.5 * libm::erfc(-u / std::f64::consts::SQRT_2)
}

// Lanczos approximation, g = 7, 9 coefficients; relative error well below
// 1e-12 on the positive axis.
const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

/// Gamma function for x > 0.
pub fn gamma_function(x: f64) -> Result<f64, GammaDomainError> {
    if !(x > 0.0) {
        return Err(GammaDomainError(x));
    }
    if x < 0.5 {
        // Reflection keeps the Lanczos argument above 0.5.
        return Ok(PI / ((PI * x).sin() * gamma_function(1.0 - x)?));
    }
    let x = x - 1.0;
    let mut a = LANCZOS[0];
    for (i, c) in LANCZOS.iter().enumerate().skip(1) {
        a += c / (x + i as f64);
    }
    let t = x + LANCZOS_G + 0.5;
    Ok((2.0 * PI).sqrt() * t.powf(x + 0.5) * (-t).exp() * a)
}

#[derive(Debug, thiserror::Error)]
#[error("gamma function requires x > 0, got {0}")]
pub struct GammaDomainError(pub f64);
