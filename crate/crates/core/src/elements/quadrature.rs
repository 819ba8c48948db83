//! Quadrature rules on triangles.
//!
//! Two rules cover every integral in the crate: the 16-point Lyness rule,
//! exact for total degree up to 6, integrates every bilinear-form integrand
//! of the P4/P3 pair exactly; a 49-point conical-product Gauss rule, exact
//! through total degree 13, handles non-polynomial data (load vectors and
//! error norms).

use crate::geom::Vec2;

/// Quadrature rule over the reference triangle, stored in barycentric form
/// so mapping to a physical triangle is a convex combination of vertices.
#[derive(Debug, Clone)]
pub struct TriangleRule {
    /// Barycentric coordinates (b0, b1, b2) of each node.
    pub points: Vec<[f64; 3]>,
    /// Weights scaled so they sum to 1; physical integrals multiply by |K|.
    pub weights: Vec<f64>,
}

impl TriangleRule {
    /// The 16-point Lyness rule, exact for polynomials of degree <= 6.
    pub fn lyness16() -> Self {
        let a = (3.0 - 6.0f64.sqrt()) / 6.0;
        let b = 1.0 - a;
        // Reference coordinates (x, y) with vertices (0,0), (1,0), (0,1).
        let xy: [((f64, f64), f64); 16] = [
            ((0.0, 0.0), -5.0 / 252.0),
            ((1.0, 0.0), -5.0 / 252.0),
            ((0.0, 1.0), -5.0 / 252.0),
            ((0.0, a), 3.0 / 70.0),
            ((0.0, b), 3.0 / 70.0),
            ((a, 0.0), 3.0 / 70.0),
            ((b, 0.0), 3.0 / 70.0),
            ((a, b), 3.0 / 70.0),
            ((b, a), 3.0 / 70.0),
            ((0.0, 0.5), 17.0 / 315.0),
            ((0.5, 0.0), 17.0 / 315.0),
            ((0.5, 0.5), 17.0 / 315.0),
            ((0.25, 0.25), 128.0 / 315.0),
            ((0.25, 0.5), 128.0 / 315.0),
            ((0.5, 0.25), 128.0 / 315.0),
            ((1.0 / 3.0, 1.0 / 3.0), -81.0 / 140.0),
        ];
        let points = xy.iter().map(|((x, y), _)| [1.0 - x - y, *x, *y]).collect();
        let weights = xy.iter().map(|(_, w)| *w).collect();
        TriangleRule { points, weights }
    }

    /// Conical-product rule from a 7x7 Gauss-Legendre tensor grid under the
    /// Duffy substitution x = u(1-v), y = v. Exact for total degree <= 13.
    pub fn conical13() -> Self {
        let (u, wu) = gauss_legendre_unit_7();
        let mut points = Vec::with_capacity(49);
        let mut weights = Vec::with_capacity(49);
        for j in 0..7 {
            for i in 0..7 {
                let x = u[i] * (1.0 - u[j]);
                let y = u[j];
                points.push([1.0 - x - y, x, y]);
                // Jacobian of the substitution is (1-v); the reference
                // triangle has area 1/2, and weights here are normalized to
                // sum to 1 over it.
                weights.push(2.0 * wu[i] * wu[j] * (1.0 - u[j]));
            }
        }
        TriangleRule { points, weights }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Map node `i` onto the physical triangle with the given vertices.
    pub fn point_on(&self, i: usize, verts: &[Vec2; 3]) -> Vec2 {
        let b = self.points[i];
        verts[0] * b[0] + verts[1] * b[1] + verts[2] * b[2]
    }

    /// Integrate a pointwise function over a physical triangle.
    pub fn integrate(&self, verts: &[Vec2; 3], mut f: impl FnMut(Vec2) -> f64) -> f64 {
        let area = crate::geom::signed_area2(verts[0], verts[1], verts[2]).abs() * 0.5;
        let mut acc = 0.0;
        for i in 0..self.len() {
            acc += self.weights[i] * f(self.point_on(i, verts));
        }
        area * acc
    }
}

/// 7-point Gauss-Legendre nodes and weights on [0, 1] (degree 13).
pub fn gauss_legendre_unit_7() -> ([f64; 7], [f64; 7]) {
    const X: [f64; 7] = [
        -0.9491079123427585,
        -0.7415311855993945,
        -0.4058451513773972,
        0.0,
        0.4058451513773972,
        0.7415311855993945,
        0.9491079123427585,
    ];
    const W: [f64; 7] = [
        0.1294849661688697,
        0.2797053914892766,
        0.3818300505051189,
        0.4179591836734694,
        0.3818300505051189,
        0.2797053914892766,
        0.1294849661688697,
    ];
    let mut x = [0.0; 7];
    let mut w = [0.0; 7];
    for i in 0..7 {
        x[i] = 0.5 * (X[i] + 1.0);
        w[i] = 0.5 * W[i];
    }
    (x, w)
}

/// Integrate a function on [0, 1] with the 7-point Gauss rule.
pub fn gauss7_unit(mut f: impl FnMut(f64) -> f64) -> f64 {
    let (x, w) = gauss_legendre_unit_7();
    (0..7).map(|i| w[i] * f(x[i])).sum()
}

/// Exact integral of x^m y^n over the reference triangle: m! n! / (m+n+2)!.
pub fn reference_monomial_integral(m: u32, n: u32) -> f64 {
    let mut val = 1.0;
    // m! n! / (m+n+2)! computed as a product of ratios to avoid overflow.
    for k in 1..=(m + n + 2) {
        val /= k as f64;
        if k <= m {
            val *= k as f64;
        }
        if k <= n {
            val *= k as f64;
        }
    }
    val
}
