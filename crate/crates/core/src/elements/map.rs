//! Affine map between the reference triangle and a physical triangle.

use crate::geom::{v2, Vec2};

/// F(x̂) = J x̂ + b mapping the reference triangle (0,0), (1,0), (0,1)
/// onto a physical triangle.
#[derive(Debug, Clone, Copy)]
pub struct AffineMap {
    pub jac: [[f64; 2]; 2],
    pub trans: Vec2,
    pub det: f64,
    pub inv_t: [[f64; 2]; 2],
}

impl AffineMap {
    pub fn from_triangle(verts: &[Vec2; 3]) -> Self {
        let e1 = verts[1] - verts[0];
        let e2 = verts[2] - verts[0];
        let jac = [[e1.x, e2.x], [e1.y, e2.y]];
        let det = e1.cross(e2);
        // inverse transpose of J, used to push reference gradients forward
        let inv_t = [[jac[1][1] / det, -jac[1][0] / det], [-jac[0][1] / det, jac[0][0] / det]];
        AffineMap { jac, trans: verts[0], det, inv_t }
    }

    pub fn apply(&self, xhat: Vec2) -> Vec2 {
        v2(
            self.jac[0][0] * xhat.x + self.jac[0][1] * xhat.y + self.trans.x,
            self.jac[1][0] * xhat.x + self.jac[1][1] * xhat.y + self.trans.y,
        )
    }

    pub fn apply_inverse(&self, x: Vec2) -> Vec2 {
        let d = x - self.trans;
        v2(
            (self.jac[1][1] * d.x - self.jac[0][1] * d.y) / self.det,
            (-self.jac[1][0] * d.x + self.jac[0][0] * d.y) / self.det,
        )
    }

    /// Push a reference gradient to the physical gradient: J^{-T} ghat.
    pub fn push_gradient(&self, ghat: Vec2) -> Vec2 {
        v2(
            self.inv_t[0][0] * ghat.x + self.inv_t[0][1] * ghat.y,
            self.inv_t[1][0] * ghat.x + self.inv_t[1][1] * ghat.y,
        )
    }

    /// Barycentric coordinates of a physical point.
    pub fn barycentric(&self, x: Vec2) -> [f64; 3] {
        let r = self.apply_inverse(x);
        [1.0 - r.x - r.y, r.x, r.y]
    }

    pub fn area(&self) -> f64 {
        0.5 * self.det.abs()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_is_identity() {
        let tri = [v2(0.3, 0.7), v2(2.1, 0.9), v2(0.8, 3.0)];
        let map = AffineMap::from_triangle(&tri);
        assert!(map.det > 0.0);
        for p in [v2(0.1, 0.2), v2(0.5, 0.4), v2(0.0, 0.0)] {
            let q = map.apply_inverse(map.apply(p));
            assert!((q - p).norm() < 1e-13);
        }
        let b = map.barycentric(tri[2]);
        assert!((b[2] - 1.0).abs() < 1e-13 && b[0].abs() < 1e-13);
    }
}
