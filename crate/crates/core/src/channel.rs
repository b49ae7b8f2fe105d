//! Multipath near-field channels: one line-of-sight path plus `I` scattered
//! paths, each a spherical-wave steering vector weighted by a complex gain.

use nalgebra::DVector;
use num_complex::Complex64;
use rand::Rng;
use serde::{Deserialize, Serialize};
use std::f64::consts::{PI, TAU};

use crate::geometry::{CircularArray, PolarPoint};
use crate::units::dbi_to_linear;

/// One propagation path: complex gain and the point the spherical wavefront
/// is anchored at (the user for LoS, a scatterer for NLoS).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PathComponent {
    pub gain: Complex64,
    pub anchor: PolarPoint,
}

/// Near-field channel vector, reconstructible from its path list:
/// `h = sqrt(N) a0 a_t(p0) + sqrt(N/I) sum_i a_i a_t(p_i)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Channel {
    pub vector: DVector<Complex64>,
    pub los: PathComponent,
    pub nlos: Vec<PathComponent>,
}

impl Channel {
    /// Assemble the channel vector from explicit path components.
    pub fn from_paths(array: &CircularArray, los: PathComponent, nlos: Vec<PathComponent>) -> Self {
        let n = array.n_antennas() as f64;
        let mut vector = array.steering_vector(&los.anchor) * (los.gain * n.sqrt());
        if !nlos.is_empty() {
            let w = (n / nlos.len() as f64).sqrt();
            for p in &nlos {
                vector += array.steering_vector(&p.anchor) * (p.gain * w);
            }
        }
        Self { vector, los, nlos }
    }

    pub fn n_antennas(&self) -> usize {
        self.vector.len()
    }

    /// `||h||^2`.
    pub fn norm_sq(&self) -> f64 {
        self.vector.norm_squared()
    }
}

/// Knobs of the statistical path-gain model.
///
/// The LoS amplitude follows the Friis form `sqrt(G) * lambda / (4 pi r)`
/// with `G` the product of the endpoint antenna gains; each NLoS gain is
/// circularly-symmetric complex Gaussian with standard deviation
/// `nlos_amplitude_ratio * |a0|`, anchored uniformly in an annulus between
/// `scatter_min_range` and the user range.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ChannelGenConfig {
    pub tx_gain_dbi: f64,
    pub rx_gain_dbi: f64,
    pub nlos_amplitude_ratio: f64,
    pub scatter_min_range: f64,
}

impl Default for ChannelGenConfig {
    fn default() -> Self {
        Self {
            tx_gain_dbi: 10.0,
            rx_gain_dbi: 10.0,
            nlos_amplitude_ratio: 0.1,
            scatter_min_range: 1.0,
        }
    }
}

impl ChannelGenConfig {
    /// Friis LoS amplitude at range `r` for wavelength `lambda`.
    pub fn los_amplitude(&self, wavelength: f64, r: f64) -> f64 {
        dbi_to_linear(self.tx_gain_dbi + self.rx_gain_dbi).sqrt() * wavelength / (4.0 * PI * r)
    }
}

/// Draw a channel for a user at `user` with `n_paths` NLoS components.
/// Deterministic for a fixed generator state.
pub fn generate_channel<R: Rng>(
    array: &CircularArray,
    user: &PolarPoint,
    n_paths: usize,
    config: &ChannelGenConfig,
    rng: &mut R,
) -> Channel {
    let amp = config.los_amplitude(array.wavelength(), user.r);
    let los = PathComponent {
        gain: Complex64::from_polar(amp, rng.gen_range(0.0..TAU)),
        anchor: *user,
    };
    let sigma = config.nlos_amplitude_ratio * amp;
    let nlos = (0..n_paths)
        .map(|_| {
            // CN(0, sigma^2): each quadrature with std sigma/sqrt(2)
            let re: f64 = standard_normal(rng) * sigma / 2f64.sqrt();
            let im: f64 = standard_normal(rng) * sigma / 2f64.sqrt();
            let r_min = config.scatter_min_range.min(user.r);
            let anchor = PolarPoint {
                r: rng.gen_range(r_min..=user.r.max(r_min + f64::EPSILON)),
                theta: rng.gen_range(0.0..PI),
                phi: rng.gen_range(0.0..TAU),
            };
            PathComponent { gain: Complex64::new(re, im), anchor }
        })
        .collect();
    Channel::from_paths(array, los, nlos)
}

fn standard_normal<R: Rng>(rng: &mut R) -> f64 {
    // Box-Muller; two uniforms per draw keeps the stream layout obvious
    let u1: f64 = rng.gen_range(f64::MIN_POSITIVE..1.0);
    let u2: f64 = rng.gen_range(0.0..TAU);
    (-2.0 * u1.ln()).sqrt() * u2.cos()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::rng_for;
    use approx::{assert_abs_diff_eq, assert_relative_eq};

    fn array800() -> CircularArray {
        CircularArray::new(800, 0.01).unwrap()
    }

    #[test]
    fn los_only_channel_norm() {
        let a = array800();
        let user = PolarPoint::new(3.0, 1.0, 0.5).unwrap();
        let cfg = ChannelGenConfig::default();
        let mut rng = rng_for(1, &[0]);
        let ch = generate_channel(&a, &user, 0, &cfg, &mut rng);
        let expect = (800f64).sqrt() * ch.los.gain.norm();
        assert_relative_eq!(ch.vector.norm(), expect, max_relative = 1e-12);
    }

    #[test]
    fn friis_amplitude_example() {
        // G = 10 dBi single-ended, lambda = 0.01, r = 3 -> sqrt(10)*0.01/(4 pi 3)
        let cfg = ChannelGenConfig { rx_gain_dbi: 0.0, ..ChannelGenConfig::default() };
        let amp = cfg.los_amplitude(0.01, 3.0);
        assert_relative_eq!(amp, 10f64.sqrt() * 0.01 / (4.0 * PI * 3.0), max_relative = 1e-12);
        assert_abs_diff_eq!(amp, 8.39e-4, epsilon = 5e-6);
    }

    #[test]
    fn same_seed_same_channel() {
        let a = array800();
        let user = PolarPoint::new(20.0, std::f64::consts::FRAC_PI_2, 1.3).unwrap();
        let cfg = ChannelGenConfig::default();
        let c1 = generate_channel(&a, &user, 6, &cfg, &mut rng_for(42, &[3]));
        let c2 = generate_channel(&a, &user, 6, &cfg, &mut rng_for(42, &[3]));
        assert_eq!(c1.vector, c2.vector);
        let c3 = generate_channel(&a, &user, 6, &cfg, &mut rng_for(42, &[4]));
        assert_ne!(c1.vector, c3.vector);
    }

    #[test]
    fn vector_reconstructible_from_paths() {
        let a = array800();
        let user = PolarPoint::new(10.0, 1.1, 2.2).unwrap();
        let cfg = ChannelGenConfig::default();
        let ch = generate_channel(&a, &user, 6, &cfg, &mut rng_for(9, &[7]));
        let rebuilt = Channel::from_paths(&a, ch.los, ch.nlos.clone());
        assert_eq!(ch.vector, rebuilt.vector);
    }
}
