//! Exactly Gaussian, stationary, smooth random-wave field on the plane:
//! `X(t) = (1/sqrt(K)) sum_k [xi_k cos(l_k . t) + eta_k sin(l_k . t)]` with
//! deterministic equally spaced wave vectors `l_k = sqrt(2) (cos(2 pi k/K),
//! sin(2 pi k/K))` and independent standard normal coefficients.
//!
//! Any linear functional of the field is Gaussian (the coefficients are),
//! and the moment identities hold exactly: `Var X = 1`, `Var grad X = I`
//! (K >= 3), `Var d^2X/dt1^2 = 3/2` (K >= 5, K not a multiple of 4).

use std::f64::consts::TAU;

use rand::SeedableRng;
use rand_distr::{Distribution, StandardNormal};
use thiserror::Error;

use crate::point::Point;

pub const DEFAULT_K: usize = 66;

#[derive(Debug, Error)]
pub enum FieldError {
    #[error("need at least K = 5 wave directions, got {0}")]
    TooFewDirections(usize),
}

#[derive(Debug, Clone)]
pub struct RandomWaveField {
    xi: Vec<f64>,
    eta: Vec<f64>,
    /// Wave vectors, sqrt(2) times the K-th roots of unity.
    waves: Vec<(f64, f64)>,
}

fn wave_vectors(k: usize) -> Vec<(f64, f64)> {
    (0..k)
        .map(|i| {
            let a = TAU * i as f64 / k as f64;
            (2f64.sqrt() * a.cos(), 2f64.sqrt() * a.sin())
        })
        .collect()
}

/// Deterministic field construction: the coefficient draws depend only on
/// `(seed, replicate)` through a counter-based RNG stream, never on thread
/// scheduling.
pub fn make_field(seed: u64, replicate: u64, k: usize) -> Result<RandomWaveField, FieldError> {
    if k < 5 {
        return Err(FieldError::TooFewDirections(k));
    }
    let mut rng = rand_chacha::ChaCha12Rng::seed_from_u64(seed);
    rng.set_stream(replicate);
    let mut draw = || StandardNormal.sample(&mut rng);
    let xi: Vec<f64> = (0..k).map(|_| draw()).collect();
    let eta: Vec<f64> = (0..k).map(|_| draw()).collect();
    Ok(RandomWaveField {
        xi,
        eta,
        waves: wave_vectors(k),
    })
}

/// Field from explicit coefficients (for symmetry audits and tests).
pub fn from_coefficients(
    xi: Vec<f64>,
    eta: Vec<f64>,
) -> Result<RandomWaveField, FieldError> {
    let k = xi.len();
    if k < 5 || eta.len() != k {
        return Err(FieldError::TooFewDirections(k.min(eta.len())));
    }
    Ok(RandomWaveField {
        xi,
        eta,
        waves: wave_vectors(k),
    })
}

/// Exact covariance `E[X(t) X(t+h)] = (1/K) sum_k cos(l_k . h)`; tends to
/// the isotropic Bessel limit J0(sqrt(2) |h|) as K grows.
pub fn covariance(h: (f64, f64), k: usize) -> f64 {
    wave_vectors(k)
        .iter()
        .map(|&(lx, ly)| (lx * h.0 + ly * h.1).cos())
        .sum::<f64>()
        / k as f64
}

impl RandomWaveField {
    pub fn k(&self) -> usize {
        self.waves.len()
    }

    /// Field value at `t`.
    pub fn value(&self, t: Point) -> f64 {
        let mut s = 0.0;
        for i in 0..self.waves.len() {
            let (lx, ly) = self.waves[i];
            let phase = lx * t.x + ly * t.y;
            s += self.xi[i] * phase.cos() + self.eta[i] * phase.sin();
        }
        s / (self.waves.len() as f64).sqrt()
    }

    /// Analytic value, gradient and Hessian at `t`.
    pub fn evaluate(&self, t: Point) -> (f64, [f64; 2], [[f64; 2]; 2]) {
        let mut v = 0.0;
        let mut g = [0.0; 2];
        let mut hm = [[0.0; 2]; 2];
        for i in 0..self.waves.len() {
            let (lx, ly) = self.waves[i];
            let phase = lx * t.x + ly * t.y;
            let (sin, cos) = phase.sin_cos();
            let a = self.xi[i] * cos + self.eta[i] * sin;
            let b = -self.xi[i] * sin + self.eta[i] * cos;
            v += a;
            g[0] += lx * b;
            g[1] += ly * b;
            hm[0][0] -= lx * lx * a;
            hm[0][1] -= lx * ly * a;
            hm[1][1] -= ly * ly * a;
        }
        let norm = (self.waves.len() as f64).sqrt();
        hm[1][0] = hm[0][1];
        (
            v / norm,
            [g[0] / norm, g[1] / norm],
            [
                [hm[0][0] / norm, hm[0][1] / norm],
                [hm[1][0] / norm, hm[1][1] / norm],
            ],
        )
    }

    /// Values at many points; identical to calling `value` pointwise.
    pub fn values(&self, points: &[Point], out: &mut Vec<f64>) {
        out.clear();
        out.extend(points.iter().map(|&p| self.value(p)));
    }
}

/// Cached cos/sin basis for evaluating many replicates on a fixed point
/// cloud: the per-replicate work reduces to two dot products per point.
pub struct BasisCache {
    k: usize,
    /// Row-major `points.len() x K` matrices.
    cos: Vec<f64>,
    sin: Vec<f64>,
    pub len: usize,
}

impl BasisCache {
    pub fn new(points: &[Point], k: usize) -> BasisCache {
        let waves = wave_vectors(k);
        let mut cos = Vec::with_capacity(points.len() * k);
        let mut sin = Vec::with_capacity(points.len() * k);
        for p in points {
            for &(lx, ly) in &waves {
                let phase = lx * p.x + ly * p.y;
                let (s, c) = phase.sin_cos();
                cos.push(c);
                sin.push(s);
            }
        }
        BasisCache {
            k,
            cos,
            sin,
            len: points.len(),
        }
    }

    /// Maximum of the field over the cached points.
    pub fn max_value(&self, field: &RandomWaveField) -> f64 {
        assert_eq!(field.k(), self.k);
        let norm = (self.k as f64).sqrt();
        let mut best = f64::NEG_INFINITY;
        for row in 0..self.len {
            let base = row * self.k;
            let mut s = 0.0;
            for i in 0..self.k {
                s += field.xi[i] * self.cos[base + i] + field.eta[i] * self.sin[base + i];
            }
            best = best.max(s / norm);
        }
        best
    }
}

/// Series evaluation of the Bessel function J0 (oracle for the K -> inf
/// covariance limit; adequate for |x| <= 10).
pub fn bessel_j0(x: f64) -> f64 {
    let q = x * x / 4.0;
    let mut term = 1.0;
    let mut sum = 1.0;
    for m in 1..60 {
        term *= -q / ((m * m) as f64);
        sum += term;
        if term.abs() < 1e-18 {
            break;
        }
    }
    sum
}
