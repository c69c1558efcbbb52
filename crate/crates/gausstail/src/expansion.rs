//! Closed-form tail expansions and densities built on the shared
//! special-function kernel.

use std::f64::consts::PI;

use thiserror::Error;

use crate::geometry2d::SteinerCoeffs2D;
use crate::geometry3d::SteinerCoeffs3D;
use crate::special::{gamma_function, gaussian_kernels, normal_cdf};

#[derive(Debug, Error)]
pub enum ExpansionError {
    #[error("level u = {0} outside the valid range {1}")]
    LevelOutOfRange(f64, &'static str),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

/// One named term of an expansion: `product = coefficient * basis_value`.
#[derive(Debug, Clone, serde::Serialize)]
pub struct Term {
    pub name: &'static str,
    /// Basis function of u this term multiplies, for display.
    pub basis: &'static str,
    pub coefficient: f64,
    pub basis_value: f64,
    pub product: f64,
}

impl Term {
    fn new(name: &'static str, basis: &'static str, coefficient: f64, basis_value: f64) -> Term {
        Term {
            name,
            basis,
            coefficient,
            basis_value,
            product: coefficient * basis_value,
        }
    }
}

/// Per-term breakdown of an expansion at one level.
#[derive(Debug, Clone, serde::Serialize)]
pub struct ExpansionResult {
    pub u: f64,
    pub terms: Vec<Term>,
    pub total: f64,
}

impl ExpansionResult {
    fn from_terms(u: f64, terms: Vec<Term>) -> ExpansionResult {
        let total = terms.iter().map(|t| t.product).sum();
        ExpansionResult { u, terms, total }
    }

    pub fn term(&self, name: &str) -> Option<&Term> {
        self.terms.iter().find(|t| t.name == name)
    }
}

/// 2D tail expansion `L0 * (1-Phi)(u) + L1 * phi(u)/(2 sqrt(2 pi))
/// + sigma2 * u phi(u)/(2 pi)`.
pub fn sfh_expansion_2d(c: &SteinerCoeffs2D, u: f64) -> ExpansionResult {
    let (tail, phi) = gaussian_kernels(u);
    ExpansionResult::from_terms(
        u,
        vec![
            Term::new("L0", "tail(u)", c.l0, tail),
            Term::new("L1", "phi(u)", c.l1 / (2.0 * (2.0 * PI).sqrt()), phi),
            Term::new("sigma2", "u*phi(u)", c.sigma2 / (2.0 * PI), u * phi),
        ],
    )
}

/// 3D expansion without a tail term (its coefficient is undetermined for
/// non-locally-convex solids): `L1 phi/(2 sqrt(2 pi)) + L2 u phi/(2 pi)
/// + L3 (u^2-1) phi/(2 pi)^{3/2}`.
pub fn expansion_3d(c: &SteinerCoeffs3D, u: f64) -> Result<ExpansionResult, ExpansionError> {
    if !(u > 1.0) {
        return Err(ExpansionError::LevelOutOfRange(u, "(1, inf)"));
    }
    let (_, phi) = gaussian_kernels(u);
    Ok(ExpansionResult::from_terms(
        u,
        vec![
            Term::new("L1", "phi(u)", c.l1 / (2.0 * (2.0 * PI).sqrt()), phi),
            Term::new("L2", "u*phi(u)", c.l2 / (2.0 * PI), u * phi),
            Term::new(
                "L3",
                "(u^2-1)*phi(u)",
                c.l3 / (2.0 * PI).powf(1.5),
                (u * u - 1.0) * phi,
            ),
        ],
    ))
}

/// Leading term of the joint exceedance of m sets whose intersection tube
/// scales like `C eps^{n-d}`:
/// `u^{d-1} phi(u) * C * Gamma(1 + (n-d)/2) / (2^{d/2} pi^{n/2})`.
pub fn joint_exceedance_asymptotic(
    c: f64,
    d: f64,
    n: f64,
    u: f64,
) -> Result<f64, ExpansionError> {
    if !(c > 0.0) {
        return Err(ExpansionError::InvalidParameter(format!(
            "tube constant C = {c} must be > 0"
        )));
    }
    if !(d >= 0.0 && d < n) {
        return Err(ExpansionError::InvalidParameter(format!(
            "need 0 <= d < n, got d = {d}, n = {n}"
        )));
    }
    let (_, phi) = gaussian_kernels(u);
    let gamma = gamma_function(1.0 + (n - d) / 2.0).expect("argument > 1");
    Ok(u.powf(d - 1.0) * phi * c * gamma / (2f64.powf(d / 2.0) * PI.powf(n / 2.0)))
}

/// Tail expansion for a segment tangent to a circle of radius R (arm
/// lengths len1, len2): `(3/2) tail(u)
/// - (8 sqrt(R) Gamma(7/4) / (2^{1/4} 3 pi)) u^{-1/2} phi(u)
/// + ((len1+len2)/sqrt(2 pi)) phi(u)`.
pub fn tangent_pair_expansion(
    r: f64,
    len1: f64,
    len2: f64,
    u: f64,
) -> Result<ExpansionResult, ExpansionError> {
    if !(r > 0.0) {
        return Err(ExpansionError::InvalidParameter(format!(
            "radius R = {r} must be > 0"
        )));
    }
    if !(u > 0.0) {
        return Err(ExpansionError::LevelOutOfRange(u, "(0, inf)"));
    }
    let (tail, phi) = gaussian_kernels(u);
    let gamma = gamma_function(1.75).expect("in range");
    let joint = 8.0 * r.sqrt() * gamma / (2f64.powf(0.25) * 3.0 * PI);
    Ok(ExpansionResult::from_terms(
        u,
        vec![
            Term::new("tail", "tail(u)", 1.5, tail),
            Term::new("joint", "u^{-1/2}*phi(u)", -joint, phi / u.sqrt()),
            Term::new(
                "length",
                "phi(u)",
                (len1 + len2) / (2.0 * PI).sqrt(),
                phi,
            ),
        ],
    ))
}

/// Euler-characteristic density `chi phi(x) + sigma1 x phi(x)/(2 sqrt(2 pi))
/// + sigma2 (x^2 - 1) phi(x)/(2 pi)`.
pub fn euler_density_2d(chi: f64, sigma1: f64, sigma2: f64, x: f64) -> f64 {
    let (_, phi) = gaussian_kernels(x);
    chi * phi + sigma1 * x * phi / (2.0 * (2.0 * PI).sqrt()) + sigma2 * (x * x - 1.0) * phi / (2.0 * PI)
}

/// Upper bound for convex polygons:
/// `tail(u) + sigma1 phi(u)/(2 sqrt(2 pi))
/// + sigma2 [c phi(u/c) + u Phi(u/c)] phi(u)/(2 pi)`.
pub fn polygon_upper_bound(
    sigma1: f64,
    sigma2: f64,
    c: f64,
    u: f64,
) -> Result<f64, ExpansionError> {
    if !(c > 0.0) {
        return Err(ExpansionError::InvalidParameter(format!(
            "c = {c} must be > 0"
        )));
    }
    if !(u > 0.0) {
        return Err(ExpansionError::LevelOutOfRange(u, "(0, inf)"));
    }
    let (tail, phi) = gaussian_kernels(u);
    let (_, phi_scaled) = gaussian_kernels(u / c);
    let bracket = c * phi_scaled + u * normal_cdf(u / c);
    Ok(tail + sigma1 * phi / (2.0 * (2.0 * PI).sqrt()) + sigma2 * bracket * phi / (2.0 * PI))
}

/// Expansion for two flat sheets joined along a shared edge of length ell
/// at dihedral angle alpha: the shared edge is subtracted from the summed
/// perimeters with weight `((pi + alpha)/2 + cot(alpha/2)) / pi`.
#[allow(clippy::too_many_arguments)]
pub fn dihedral_expansion(
    sigma2_1: f64,
    sigma2_2: f64,
    sigma1_1: f64,
    sigma1_2: f64,
    shared_edge: f64,
    alpha: f64,
    u: f64,
) -> Result<ExpansionResult, ExpansionError> {
    let sub = crate::geometry3d::dihedral_subtraction_constant(alpha)
        .map_err(|e| ExpansionError::InvalidParameter(e.to_string()))?;
    let (_, phi) = gaussian_kernels(u);
    Ok(ExpansionResult::from_terms(
        u,
        vec![
            Term::new(
                "sigma1",
                "phi(u)",
                (sigma1_1 + sigma1_2 - shared_edge * sub) / (2.0 * (2.0 * PI).sqrt()),
                phi,
            ),
            Term::new(
                "sigma2",
                "u*phi(u)",
                (sigma2_1 + sigma2_2) / (2.0 * PI),
                u * phi,
            ),
        ],
    ))
}

#[cfg(test)]
mod tests;
