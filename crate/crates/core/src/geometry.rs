//! Circular-array geometry, spherical user positions and polar-domain
//! steering vectors under the exact spherical-wave model.

use nalgebra::DVector;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::{PI, TAU};

use crate::error::ModelError;

/// A ring of `N` antennas in the `z = 0` plane, centred at the origin.
///
/// Antenna `n` (1-based) sits at azimuth `psi_n = 2*pi*(n-1)/N` on a circle
/// of the given radius. The default radius keeps the arc spacing between
/// neighbouring antennas at half a wavelength, so `2*pi*R/lambda = N/2`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CircularArray {
    n_antennas: usize,
    wavelength: f64,
    radius: f64,
}

impl CircularArray {
    /// Array with the default half-wavelength arc spacing, `R = N*lambda/(4*pi)`.
    pub fn new(n_antennas: usize, wavelength: f64) -> Result<Self, ModelError> {
        let radius = n_antennas as f64 * wavelength / (4.0 * PI);
        Self::with_radius(n_antennas, wavelength, radius)
    }

    pub fn with_radius(n_antennas: usize, wavelength: f64, radius: f64) -> Result<Self, ModelError> {
        if n_antennas == 0 {
            return Err(ModelError::Invalid("n_antennas must be positive".into()));
        }
        if !(wavelength > 0.0) || !(radius > 0.0) {
            return Err(ModelError::Invalid("wavelength and radius must be positive".into()));
        }
        Ok(Self { n_antennas, wavelength, radius })
    }

    pub fn n_antennas(&self) -> usize {
        self.n_antennas
    }

    pub fn wavelength(&self) -> f64 {
        self.wavelength
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    /// Azimuth of the n-th antenna (1-based), `2*pi*(n-1)/N`.
    pub fn antenna_angle(&self, n: usize) -> f64 {
        TAU * (n - 1) as f64 / self.n_antennas as f64
    }

    /// All antenna azimuths, strictly increasing in `[0, 2*pi)`.
    pub fn antenna_angles(&self) -> Vec<f64> {
        (1..=self.n_antennas).map(|n| self.antenna_angle(n)).collect()
    }

    /// Euclidean distance from a point to the n-th antenna (1-based).
    ///
    /// `sqrt(r^2 + R^2 - 2 r R sin(theta) cos(phi - psi_n))`, always within
    /// `[|r - R|, r + R]`.
    pub fn exact_distance(&self, p: &PolarPoint, n: usize) -> Result<f64, ModelError> {
        if n < 1 || n > self.n_antennas {
            return Err(ModelError::IndexOutOfRange { index: n, len: self.n_antennas });
        }
        Ok(self.distance_at_azimuth(p, self.antenna_angle(n)))
    }

    fn distance_at_azimuth(&self, p: &PolarPoint, psi: f64) -> f64 {
        let r = p.r;
        let rr = self.radius;
        (r * r + rr * rr - 2.0 * r * rr * p.theta.sin() * (p.phi - psi).cos()).sqrt()
    }

    /// Fresnel-style series approximation of [`Self::exact_distance`], valid
    /// for `r > R`. Expands `sqrt(1+u)` to fourth order in `R/r`:
    ///
    /// `r - R s c + R^2/(2r) (1 - s^2 c^2) + R^3/(2r^2) (s c - s^3 c^3)
    ///  - R^4/(8r^3) + 3 R^4 s^2 c^2/(4 r^3) - 5 R^4 s^4 c^4/(8 r^3)`
    ///
    /// with `s = sin(theta)`, `c = cos(phi - psi_n)`. The third- and
    /// fourth-order terms carry the complete binomial coefficients, which
    /// keeps the relative error below 1e-6 down to the Fresnel lower bound
    /// `0.5*sqrt((2R)^3/lambda)`.
    pub fn fresnel_distance(&self, p: &PolarPoint, n: usize) -> Result<f64, ModelError> {
        if n < 1 || n > self.n_antennas {
            return Err(ModelError::IndexOutOfRange { index: n, len: self.n_antennas });
        }
        if p.r <= self.radius {
            return Err(ModelError::OutOfValidity {
                what: "fresnel_distance requires r > R".into(),
            });
        }
        let r = p.r;
        let rr = self.radius;
        let sc = p.theta.sin() * (p.phi - self.antenna_angle(n)).cos();
        let sc2 = sc * sc;
        let r2 = rr * rr;
        let r3 = r2 * rr;
        let r4 = r2 * r2;
        Ok(r - rr * sc + r2 / (2.0 * r) * (1.0 - sc2) + r3 / (2.0 * r * r) * (sc - sc * sc2)
            - r4 / (8.0 * r * r * r)
            + 0.75 * r4 * sc2 / (r * r * r)
            - 0.625 * r4 * sc2 * sc2 / (r * r * r))
    }

    /// Half the Fresnel-region lower bound `0.5*sqrt(D^3/lambda)` for the
    /// array aperture `D = 2R`.
    pub fn fresnel_lower_bound(&self) -> f64 {
        0.5 * ((2.0 * self.radius).powi(3) / self.wavelength).sqrt()
    }

    /// Polar-domain channel response vector. Element `n` is
    /// `(1/sqrt(N)) * exp(j (2*pi/lambda) (r - r^(n)))` with the exact
    /// antenna distance, so the vector has unit Euclidean norm.
    pub fn steering_vector(&self, p: &PolarPoint) -> DVector<Complex64> {
        let scale = 1.0 / (self.n_antennas as f64).sqrt();
        let k = TAU / self.wavelength;
        DVector::from_iterator(
            self.n_antennas,
            (1..=self.n_antennas).map(|n| {
                let d = self.distance_at_azimuth(p, self.antenna_angle(n));
                Complex64::from_polar(scale, k * (p.r - d))
            }),
        )
    }
}

/// A position `(r, theta, phi)` in the array-centred spherical frame, with
/// `theta` measured from the `+z` axis.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PolarPoint {
    pub r: f64,
    pub theta: f64,
    pub phi: f64,
}

impl PolarPoint {
    pub fn new(r: f64, theta: f64, phi: f64) -> Result<Self, ModelError> {
        if !(r > 0.0) {
            return Err(ModelError::Invalid("range r must be positive".into()));
        }
        Ok(Self { r, theta, phi })
    }

    /// Convert a Cartesian position to the spherical frame.
    pub fn from_cartesian(x: f64, y: f64, z: f64) -> Result<Self, ModelError> {
        let r = (x * x + y * y + z * z).sqrt();
        if !(r > 0.0) {
            return Err(ModelError::Invalid("point coincides with the array centre".into()));
        }
        let theta = (z / r).clamp(-1.0, 1.0).acos();
        let phi = y.atan2(x).rem_euclid(TAU);
        Ok(Self { r, theta, phi })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::{assert_abs_diff_eq, assert_relative_eq};

    fn array800() -> CircularArray {
        CircularArray::new(800, 0.01).unwrap()
    }

    #[test]
    fn default_radius_is_half_wavelength_arc_spacing() {
        let a = array800();
        assert_relative_eq!(a.radius(), 800.0 * 0.01 / (4.0 * PI));
        assert_relative_eq!(TAU * a.radius() / a.wavelength(), 400.0, max_relative = 1e-12);
        let angles = a.antenna_angles();
        assert_eq!(angles.len(), 800);
        assert!(angles.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(angles[0], 0.0);
        assert!(*angles.last().unwrap() < TAU);
    }

    #[test]
    fn exact_distance_boresight_and_apex() {
        let a = array800();
        let psi3 = a.antenna_angle(3);
        let p = PolarPoint::new(10.0, std::f64::consts::FRAC_PI_2, psi3).unwrap();
        assert_relative_eq!(a.exact_distance(&p, 3).unwrap(), 10.0 - a.radius(), max_relative = 1e-12);

        let apex = PolarPoint::new(5.0, 0.0, 1.234).unwrap();
        let expect = (25.0 + a.radius() * a.radius()).sqrt();
        for n in [1, 200, 800] {
            assert_relative_eq!(a.exact_distance(&apex, n).unwrap(), expect, max_relative = 1e-12);
        }
    }

    #[test]
    fn exact_distance_frozen_value() {
        // direct evaluation of the radical at N=800, lambda=0.01, p=(10, pi/2, 0), n=1
        let a = array800();
        let p = PolarPoint::new(10.0, std::f64::consts::FRAC_PI_2, 0.0).unwrap();
        assert_relative_eq!(a.exact_distance(&p, 1).unwrap(), 9.363380227632419, max_relative = 1e-14);
    }

    #[test]
    fn exact_distance_index_bounds() {
        let a = array800();
        let p = PolarPoint::new(10.0, 1.0, 1.0).unwrap();
        assert!(a.exact_distance(&p, 0).is_err());
        assert!(a.exact_distance(&p, 801).is_err());
    }

    #[test]
    fn fresnel_apex_reduces_to_radial_terms() {
        let a = array800();
        let p = PolarPoint::new(9.0, 0.0, 0.3).unwrap();
        let rr = a.radius();
        let expect = 9.0 + rr * rr / 18.0 - rr.powi(4) / (8.0 * 9.0f64.powi(3));
        assert_relative_eq!(a.fresnel_distance(&p, 17).unwrap(), expect, max_relative = 1e-14);
    }

    #[test]
    fn fresnel_accuracy_inside_validity_region() {
        let a = array800();
        let r_min = a.fresnel_lower_bound();
        for i in 0..20 {
            let r = r_min + i as f64 * 2.0;
            for j in 0..10 {
                let theta = PI * (j as f64 + 0.5) / 10.0;
                let p = PolarPoint::new(r, theta, 2.1).unwrap();
                for n in (1..800).step_by(61) {
                    let ex = a.exact_distance(&p, n).unwrap();
                    let fr = a.fresnel_distance(&p, n).unwrap();
                    assert!(((fr - ex) / ex).abs() < 1e-6, "r={r} theta={theta} n={n}");
                }
            }
        }
    }

    #[test]
    fn fresnel_far_field_limit() {
        let a = array800();
        let p = PolarPoint::new(1e6 * a.radius(), 1.0, 0.5).unwrap();
        let ex = a.exact_distance(&p, 5).unwrap();
        let fr = a.fresnel_distance(&p, 5).unwrap();
        assert!(((fr - ex) / ex).abs() < 1e-12);
    }

    #[test]
    fn fresnel_rejects_interior_points() {
        let a = array800();
        let p = PolarPoint::new(0.5 * a.radius(), 1.0, 0.0).unwrap();
        assert!(a.fresnel_distance(&p, 1).is_err());
    }

    #[test]
    fn steering_vector_unit_norm() {
        let a = array800();
        for p in [
            PolarPoint::new(3.0, 1.2, 0.4).unwrap(),
            PolarPoint::new(15.0, std::f64::consts::FRAC_PI_2, 0.0).unwrap(),
            PolarPoint::new(200.0, 0.1, 5.9).unwrap(),
        ] {
            let v = a.steering_vector(&p);
            assert_abs_diff_eq!(v.norm(), 1.0, epsilon = 1e-12);
            let self_ip = v.dotc(&v);
            assert_abs_diff_eq!(self_ip.re, 1.0, epsilon = 1e-12);
            assert_abs_diff_eq!(self_ip.im, 0.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn distance_triangle_bounds() {
        let a = array800();
        for &(r, th, ph) in &[(1.0, 0.7, 0.0), (3.0, 1.5, 2.0), (50.0, 3.0, 4.0)] {
            let p = PolarPoint::new(r, th, ph).unwrap();
            for n in (1..=800).step_by(97) {
                let d = a.exact_distance(&p, n).unwrap();
                assert!(d >= (r - a.radius()).abs() - 1e-12);
                assert!(d <= r + a.radius() + 1e-12);
            }
        }
    }

    #[test]
    fn cartesian_round_trip() {
        let p = PolarPoint::from_cartesian(3.0, -4.0, 1.0).unwrap();
        let (s, c) = (p.theta.sin(), p.theta.cos());
        assert_relative_eq!(p.r * s * p.phi.cos(), 3.0, max_relative = 1e-12);
        assert_relative_eq!(p.r * s * p.phi.sin(), -4.0, max_relative = 1e-12);
        assert_relative_eq!(p.r * c, 1.0, max_relative = 1e-12);
    }
}
