//! Small fixed-size 2D geometry helpers used throughout the crate.

use serde::{Deserialize, Serialize};
use std::ops::{Add, Div, Mul, Neg, Sub};

/// A point or vector in the plane.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Vec2 {
    pub x: f64,
    pub y: f64,
}

pub const fn v2(x: f64, y: f64) -> Vec2 {
    Vec2 { x, y }
}

impl Vec2 {
    pub fn dot(self, o: Vec2) -> f64 {
        self.x * o.x + self.y * o.y
    }

    /// z-component of the cross product `self x o`.
    pub fn cross(self, o: Vec2) -> f64 {
        self.x * o.y - self.y * o.x
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn normalize(self) -> Vec2 {
        let n = self.norm();
        v2(self.x / n, self.y / n)
    }

    /// 90-degree counterclockwise rotation.
    pub fn perp(self) -> Vec2 {
        v2(-self.y, self.x)
    }

    pub fn angle(self) -> f64 {
        self.y.atan2(self.x)
    }
}

impl Add for Vec2 {
    type Output = Vec2;
    fn add(self, o: Vec2) -> Vec2 {
        v2(self.x + o.x, self.y + o.y)
    }
}

impl Sub for Vec2 {
    type Output = Vec2;
    fn sub(self, o: Vec2) -> Vec2 {
        v2(self.x - o.x, self.y - o.y)
    }
}

impl Mul<f64> for Vec2 {
    type Output = Vec2;
    fn mul(self, s: f64) -> Vec2 {
        v2(self.x * s, self.y * s)
    }
}

impl Div<f64> for Vec2 {
    type Output = Vec2;
    fn div(self, s: f64) -> Vec2 {
        v2(self.x / s, self.y / s)
    }
}

impl Neg for Vec2 {
    type Output = Vec2;
    fn neg(self) -> Vec2 {
        v2(-self.x, -self.y)
    }
}

/// Twice the signed area of the triangle `(a, b, c)`; positive when
/// counterclockwise.
pub fn signed_area2(a: Vec2, b: Vec2, c: Vec2) -> f64 {
    (b - a).cross(c - a)
}

/// Interior angle at `apex` formed by the rays toward `p` and `q`, in (0, pi).
pub fn angle_at(apex: Vec2, p: Vec2, q: Vec2) -> f64 {
    let u = p - apex;
    let v = q - apex;
    u.cross(v).abs().atan2(u.dot(v))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn perp_rotates_ccw() {
        let e = v2(1.0, 0.0);
        assert_eq!(e.perp(), v2(0.0, 1.0));
        assert_eq!(e.perp().perp(), v2(-1.0, 0.0));
    }

    #[test]
    fn angle_at_right_angle() {
        let a = angle_at(v2(0.0, 0.0), v2(1.0, 0.0), v2(0.0, 1.0));
        assert!((a - std::f64::consts::FRAC_PI_2).abs() < 1e-15);
    }

    #[test]
    fn signed_area_orientation() {
        assert!(signed_area2(v2(0.0, 0.0), v2(1.0, 0.0), v2(0.0, 1.0)) > 0.0);
        assert!(signed_area2(v2(0.0, 0.0), v2(0.0, 1.0), v2(1.0, 0.0)) < 0.0);
    }
}
