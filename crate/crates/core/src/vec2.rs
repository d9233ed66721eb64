//! Planar vectors and the normalization operators used by every force term.

use std::f64::consts::PI;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};

use serde::{Deserialize, Serialize};

/// A point or displacement in the plane, in arena units.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
pub struct Vec2 {
    pub x: f64,
    pub y: f64,
}

impl Vec2 {
    pub const ZERO: Vec2 = Vec2 { x: 0.0, y: 0.0 };

    #[inline]
    pub const fn new(x: f64, y: f64) -> Self {
        Vec2 { x, y }
    }

    #[inline]
    pub fn norm(self) -> f64 {
        (self.x * self.x + self.y * self.y).sqrt()
    }

    #[inline]
    pub fn dot(self, other: Vec2) -> f64 {
        self.x * other.x + self.y * other.y
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.x == 0.0 && self.y == 0.0
    }

    #[inline]
    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    /// Full-plane heading in radians, in (-π, π].
    #[inline]
    pub fn heading(self) -> f64 {
        self.y.atan2(self.x)
    }

    /// Counter-clockwise rotation about the origin.
    pub fn rotated(self, angle: f64) -> Vec2 {
        let (s, c) = angle.sin_cos();
        Vec2::new(c * self.x - s * self.y, s * self.x + c * self.y)
    }
}

impl Add for Vec2 {
    type Output = Vec2;
    #[inline]
    fn add(self, rhs: Vec2) -> Vec2 {
        Vec2::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl AddAssign for Vec2 {
    #[inline]
    fn add_assign(&mut self, rhs: Vec2) {
        self.x += rhs.x;
        self.y += rhs.y;
    }
}

impl Sub for Vec2 {
    type Output = Vec2;
    #[inline]
    fn sub(self, rhs: Vec2) -> Vec2 {
        Vec2::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl SubAssign for Vec2 {
    #[inline]
    fn sub_assign(&mut self, rhs: Vec2) {
        self.x -= rhs.x;
        self.y -= rhs.y;
    }
}

impl Neg for Vec2 {
    type Output = Vec2;
    #[inline]
    fn neg(self) -> Vec2 {
        Vec2::new(-self.x, -self.y)
    }
}

impl Mul<f64> for Vec2 {
    type Output = Vec2;
    #[inline]
    fn mul(self, k: f64) -> Vec2 {
        Vec2::new(self.x * k, self.y * k)
    }
}

impl Mul<Vec2> for f64 {
    type Output = Vec2;
    #[inline]
    fn mul(self, v: Vec2) -> Vec2 {
        v * self
    }
}

impl Div<f64> for Vec2 {
    type Output = Vec2;
    #[inline]
    fn div(self, k: f64) -> Vec2 {
        Vec2::new(self.x / k, self.y / k)
    }
}

/// Unit vector in the direction of `x`; the zero vector maps to zero.
#[inline]
pub fn phi(x: Vec2) -> Vec2 {
    if x.is_zero() {
        return Vec2::ZERO;
    }
    x / x.norm()
}

/// Inverse-square potential direction `x / |x|^3`, zero at the origin.
///
/// Unbounded near the origin; the simulator uses [`psi_stab`].
#[inline]
pub fn psi_exact(x: Vec2) -> Vec2 {
    if x.is_zero() {
        return Vec2::ZERO;
    }
    let n = x.norm();
    x / (n * n * n)
}

/// [`psi_exact`] with the magnitude clamped to `1 / r_under^2` inside the
/// radius `r_under`.
///
/// Outside the radius the result is bit-identical to [`psi_exact`].
#[inline]
pub fn psi_stab(x: Vec2, r_under: f64) -> Vec2 {
    if x.is_zero() {
        return Vec2::ZERO;
    }
    let n = x.norm();
    if n >= r_under {
        x / (n * n * n)
    } else {
        x / (n * r_under * r_under)
    }
}

/// Absolute difference of two angles after wrapping into (-π, π].
pub fn wrapped_angle_diff(a: f64, b: f64) -> f64 {
    let mut d = (a - b) % (2.0 * PI);
    if d > PI {
        d -= 2.0 * PI;
    } else if d <= -PI {
        d += 2.0 * PI;
    }
    d.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: Vec2, b: Vec2, tol: f64) -> bool {
        (a.x - b.x).abs() <= tol && (a.y - b.y).abs() <= tol
    }

    #[test]
    fn phi_examples() {
        assert_eq!(phi(Vec2::ZERO), Vec2::ZERO);
        assert!(close(phi(Vec2::new(3.0, 4.0)), Vec2::new(0.6, 0.8), 1e-15));
        assert_eq!(phi(Vec2::new(-5.0, 0.0)), Vec2::new(-1.0, 0.0));
    }

    #[test]
    fn psi_exact_examples() {
        assert_eq!(psi_exact(Vec2::ZERO), Vec2::ZERO);
        assert!(close(
            psi_exact(Vec2::new(3.0, 4.0)),
            Vec2::new(0.024, 0.032),
            1e-15
        ));
        // |x| = 0.5: x / |x|^3 = (0, 0.5) / 0.125
        assert!(close(
            psi_exact(Vec2::new(0.0, 0.5)),
            Vec2::new(0.0, 4.0),
            1e-15
        ));
    }

    #[test]
    fn psi_stab_examples() {
        assert!(close(
            psi_stab(Vec2::new(3.0, 4.0), 3.0),
            Vec2::new(0.024, 0.032),
            1e-15
        ));
        assert!(close(
            psi_stab(Vec2::new(1.0, 0.0), 3.0),
            Vec2::new(1.0 / 9.0, 0.0),
            1e-15
        ));
        let at_boundary = psi_stab(Vec2::new(3.0, 0.0), 3.0);
        let inner_formula = Vec2::new(3.0, 0.0) / (3.0 * 9.0);
        assert!(close(at_boundary, Vec2::new(1.0 / 9.0, 0.0), 1e-15));
        assert!(close(at_boundary, inner_formula, 1e-15));
        assert_eq!(psi_stab(Vec2::ZERO, 3.0), Vec2::ZERO);
    }

    #[test]
    fn angle_diff_examples() {
        assert!((wrapped_angle_diff(0.03, 0.0) - 0.03).abs() < 1e-15);
        assert!((wrapped_angle_diff(PI - 0.01, -PI + 0.01) - 0.02).abs() < 1e-12);
        assert_eq!(wrapped_angle_diff(1.7, 1.7), 0.0);
        assert!((wrapped_angle_diff(-PI + 0.01, PI - 0.01) - 0.02).abs() < 1e-12);
        assert!((wrapped_angle_diff(0.0, PI) - PI).abs() < 1e-15);
    }
}
