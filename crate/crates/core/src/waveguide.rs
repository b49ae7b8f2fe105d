//! Waveguide feed network: the propagation matrix from RF-chain feeds to
//! antennas, with the wave travelling clockwise along the ring.

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::TAU;

use crate::error::ModelError;
use crate::geometry::CircularArray;

/// `N x N_RF` matrix with entry `(m, n) = exp(-gamma * l) * exp(j beta * l)`
/// where `l` is the clockwise arc length from feed `n` to antenna `m`.
///
/// The paper's `e^{(gamma + j beta) l}` with `gamma = 5` would grow with
/// distance; the magnitude here uses the physical decay convention.
#[derive(Debug, Clone, PartialEq)]
pub struct PropagationMatrix {
    pub matrix: DMatrix<Complex64>,
    pub gamma: f64,
    pub beta: f64,
    pub feed_angles: Vec<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WaveguideConfig {
    /// attenuation, nepers per meter
    pub gamma: f64,
    /// wavenumber override; `None` uses free space `2 pi / lambda`
    pub beta: Option<f64>,
}

impl Default for WaveguideConfig {
    fn default() -> Self {
        Self { gamma: 5.0, beta: None }
    }
}

/// Build the propagation matrix for `n_rf` feeds spaced uniformly on the
/// antenna ring at angles `2 pi (k-1) / N_RF`.
pub fn propagation_matrix(
    array: &CircularArray,
    n_rf: usize,
    config: &WaveguideConfig,
) -> Result<PropagationMatrix, ModelError> {
    let n = array.n_antennas();
    if n_rf == 0 || n_rf > n {
        return Err(ModelError::IndexOutOfRange { index: n_rf, len: n });
    }
    if config.gamma < 0.0 {
        return Err(ModelError::Invalid("gamma must be non-negative".into()));
    }
    let beta = config.beta.unwrap_or(TAU / array.wavelength());
    let feed_angles: Vec<f64> = (0..n_rf).map(|k| TAU * k as f64 / n_rf as f64).collect();
    let r = array.radius();
    let matrix = DMatrix::from_fn(n, n_rf, |m, k| {
        let l = r * (array.antenna_angle(m + 1) - feed_angles[k]).rem_euclid(TAU);
        Complex64::from_polar((-config.gamma * l).exp(), beta * l)
    });
    Ok(PropagationMatrix { matrix, gamma: config.gamma, beta, feed_angles })
}
