//! Sting functions, interior bubble pairs, and the alternative P3 basis
//! built from them.
//!
//! The sting attached to an edge E and its opposite vertex V is the cubic
//! e(lambda/H) with e(t) = (56 t^3 - 63 t^2 + 18 t - 1) / 10; it is 1 at V,
//! -1/10 on E, and its moment against any cubic collapses to a point
//! evaluation at V. Alternating combinations of stings at singular vertices
//! are exactly the spurious pressure modes this crate removes.

use super::lagrange::LatticeBasis;
use super::map::AffineMap;
use super::quadrature::TriangleRule;
use crate::error::{Error, Result};
use crate::geom::{v2, Vec2};
use nalgebra::DMatrix;

/// The sting profile e(t) = (56 t^3 - 63 t^2 + 18 t - 1) / 10.
pub fn sting_profile(t: f64) -> f64 {
    (((56.0 * t - 63.0) * t + 18.0) * t - 1.0) / 10.0
}

/// Derivative of [`sting_profile`].
pub fn sting_profile_deriv(t: f64) -> f64 {
    ((168.0 * t - 126.0) * t + 18.0) / 10.0
}

/// Nodal values of a sting on the P3 principal lattice are mesh independent:
/// they only depend on the barycentric coordinate of the node with respect
/// to the opposite vertex, which is a multiple of 1/3.
pub fn sting_nodal_values(basis: &LatticeBasis, opposite: usize) -> Vec<f64> {
    debug_assert_eq!(basis.degree, 3);
    (0..basis.len())
        .map(|n| sting_profile(basis.node_barycentric(n)[opposite]))
        .collect()
}

/// A sting function on one triangle, identified by the pair (edge E,
/// opposite vertex V). `opposite` is the local index of V.
#[derive(Debug, Clone)]
pub struct StingFunction {
    pub verts: [Vec2; 3],
    pub opposite: usize,
    /// Distance from V to the line through E.
    pub height: f64,
    /// Unit outward normal of the triangle on E.
    pub normal: Vec2,
    /// Midpoint of E.
    pub midpoint: Vec2,
    map: AffineMap,
}

impl StingFunction {
    pub fn new(verts: [Vec2; 3], opposite: usize) -> Self {
        let v = verts[opposite];
        let a = verts[(opposite + 1) % 3];
        let b = verts[(opposite + 2) % 3];
        let edge = b - a;
        // outward normal: away from the opposite vertex
        let mut normal = edge.perp().normalize();
        if normal.dot(v - a) > 0.0 {
            normal = -normal;
        }
        let midpoint = (a + b) * 0.5;
        let height = (-normal).dot(v - midpoint);
        StingFunction {
            verts,
            opposite,
            height,
            normal,
            midpoint,
            map: AffineMap::from_triangle(&verts),
        }
    }

    /// The linear form lambda(x) = (-n) . (x - M).
    pub fn lambda(&self, x: Vec2) -> f64 {
        (-self.normal).dot(x - self.midpoint)
    }

    pub fn eval(&self, x: Vec2) -> f64 {
        sting_profile(self.lambda(x) / self.height)
    }

    pub fn grad(&self, x: Vec2) -> Vec2 {
        -self.normal * (sting_profile_deriv(self.lambda(x) / self.height) / self.height)
    }

    /// Moment against a cubic given by its Lagrange nodal values: the closed
    /// form |K| / 100 * q(V).
    pub fn moment(&self, basis: &LatticeBasis, q_nodal: &[f64]) -> f64 {
        debug_assert_eq!(basis.degree, 3);
        let q_at_v = q_nodal[self.opposite];
        self.map.area() / 100.0 * q_at_v
    }

    /// The same moment by brute-force quadrature, for cross-checking.
    pub fn moment_quadrature(&self, basis: &LatticeBasis, q_nodal: &[f64]) -> f64 {
        let rule = TriangleRule::lyness16();
        rule.integrate(&self.verts, |x| {
            let vals = basis.eval(self.map.barycentric(x));
            let q: f64 = vals.iter().zip(q_nodal).map(|(v, c)| v * c).sum();
            self.eval(x) * q
        })
    }

    /// Closed form of the pairing (s, div v)_K for a P4 vector field `v`
    /// given by its 15 nodal values per component:
    ///
    /// |E1||E2|/200 * (dv/dtau2(V) . tau1_perp - dv/dtau1(V) . tau2_perp)
    ///
    /// with tau1, tau2 the counterclockwise-numbered unit vectors from V
    /// toward the other two vertices.
    pub fn div_pairing(&self, p4: &LatticeBasis, vx: &[f64], vy: &[f64]) -> f64 {
        debug_assert_eq!(p4.degree, 4);
        let v = self.verts[self.opposite];
        let p1 = self.verts[(self.opposite + 1) % 3];
        let p2 = self.verts[(self.opposite + 2) % 3];
        let e1 = (p1 - v).norm();
        let e2 = (p2 - v).norm();
        let tau1 = (p1 - v).normalize();
        let tau2 = (p2 - v).normalize();

        // gradient of both velocity components at V
        let grads = p4.grad_ref(self.map.barycentric(v));
        let mut gx = v2(0.0, 0.0);
        let mut gy = v2(0.0, 0.0);
        for n in 0..p4.len() {
            let g = self.map.push_gradient(v2(grads[n][0], grads[n][1]));
            gx = gx + g * vx[n];
            gy = gy + g * vy[n];
        }
        let dv_tau1 = v2(gx.dot(tau1), gy.dot(tau1));
        let dv_tau2 = v2(gx.dot(tau2), gy.dot(tau2));
        e1 * e2 / 200.0 * (dv_tau2.dot(tau1.perp()) - dv_tau1.dot(tau2.perp()))
    }

    /// (s, div v)_K by quadrature; the integrand has degree 6 so the Lyness
    /// rule is exact and the comparison against [`Self::div_pairing`] is an
    /// identity up to roundoff.
    pub fn div_pairing_quadrature(&self, p4: &LatticeBasis, vx: &[f64], vy: &[f64]) -> f64 {
        let rule = TriangleRule::lyness16();
        rule.integrate(&self.verts, |x| {
            let grads = p4.grad_ref(self.map.barycentric(x));
            let mut div = 0.0;
            for n in 0..p4.len() {
                let g = self.map.push_gradient(v2(grads[n][0], grads[n][1]));
                div += vx[n] * g.x + vy[n] * g.y;
            }
            self.eval(x) * div
        })
    }
}

/// The pair of interior cubic bubbles attached to a vertex V of a triangle,
/// g+ = iota+(mu/d) and g- = iota-(mu/d) with iota+-(t) = 8 t^3 +- 3 t^2.
#[derive(Debug, Clone)]
pub struct BubblePair {
    pub verts: [Vec2; 3],
    pub vertex: usize,
    /// Unit vector from V toward the centroid.
    pub i_v: Vec2,
    /// Distance from either other vertex to the median line through V, G.
    pub d: f64,
    centroid: Vec2,
}

impl BubblePair {
    pub fn new(verts: [Vec2; 3], vertex: usize) -> Self {
        let g = (verts[0] + verts[1] + verts[2]) / 3.0;
        let v = verts[vertex];
        let i_v = (g - v).normalize();
        let other = verts[(vertex + 1) % 3];
        let d = i_v.perp().dot(other - g).abs();
        BubblePair { verts, vertex, i_v, d, centroid: g }
    }

    /// mu(x) = i_V_perp . (x - G), vanishing on the median line.
    pub fn mu(&self, x: Vec2) -> f64 {
        self.i_v.perp().dot(x - self.centroid)
    }

    pub fn eval_plus(&self, x: Vec2) -> f64 {
        let t = self.mu(x) / self.d;
        8.0 * t * t * t + 3.0 * t * t
    }

    pub fn eval_minus(&self, x: Vec2) -> f64 {
        let t = self.mu(x) / self.d;
        8.0 * t * t * t - 3.0 * t * t
    }

    pub fn grad_plus(&self, x: Vec2) -> Vec2 {
        let t = self.mu(x) / self.d;
        self.i_v.perp() * ((24.0 * t * t + 6.0 * t) / self.d)
    }

    pub fn grad_minus(&self, x: Vec2) -> Vec2 {
        let t = self.mu(x) / self.d;
        self.i_v.perp() * ((24.0 * t * t - 6.0 * t) / self.d)
    }
}

/// Deviations of the bubble gradients at the four interior Lyness points
/// from their stated values: (3/d) i_V_perp on the side where mu has the
/// bubble's sign, zero at the other three points.
#[derive(Debug, Clone, Copy)]
pub struct BubbleGradientReport {
    pub max_deviation_plus: f64,
    pub max_deviation_minus: f64,
}

pub fn bubble_gradient_check(verts: [Vec2; 3], vertex: usize) -> BubbleGradientReport {
    let bubble = BubblePair::new(verts, vertex);
    let rule = TriangleRule::lyness16();
    let mut dev_p: f64 = 0.0;
    let mut dev_m: f64 = 0.0;
    for (i, b) in rule.points.iter().enumerate() {
        if b.iter().any(|&c| c <= 1e-12) {
            continue; // only the 4 interior points
        }
        let x = rule.point_on(i, &verts);
        let mu = bubble.mu(x);
        let spike = bubble.i_v.perp() * (3.0 / bubble.d);
        let want_p = if mu > 1e-12 * bubble.d { spike } else { v2(0.0, 0.0) };
        let want_m = if mu < -1e-12 * bubble.d { spike } else { v2(0.0, 0.0) };
        dev_p = dev_p.max((bubble.grad_plus(x) - want_p).norm());
        dev_m = dev_m.max((bubble.grad_minus(x) - want_m).norm());
    }
    BubbleGradientReport { max_deviation_plus: dev_p, max_deviation_minus: dev_m }
}

/// Columns of the alternative P3 basis <1, g+_{V0}, g-_{V0}, ..., s_{E2 V2}>
/// expressed as nodal values on the P3 lattice. Column order: the constant,
/// then (g+, g-) per vertex, then the three stings.
pub fn alternative_basis_columns(basis: &LatticeBasis, verts: &[Vec2; 3]) -> DMatrix<f64> {
    debug_assert_eq!(basis.degree, 3);
    let map = AffineMap::from_triangle(verts);
    let n = basis.len();
    let mut m = DMatrix::zeros(n, 10);
    let nodes: Vec<Vec2> = (0..n)
        .map(|i| {
            let b = basis.node_barycentric(i);
            map.apply(v2(b[1], b[2]))
        })
        .collect();
    for row in 0..n {
        m[(row, 0)] = 1.0;
    }
    for v in 0..3 {
        let bubble = BubblePair::new(*verts, v);
        for (row, &x) in nodes.iter().enumerate() {
            m[(row, 1 + 2 * v)] = bubble.eval_plus(x);
            m[(row, 2 + 2 * v)] = bubble.eval_minus(x);
        }
    }
    for v in 0..3 {
        let vals = sting_nodal_values(basis, v);
        for (row, val) in vals.iter().enumerate() {
            m[(row, 7 + v)] = *val;
        }
    }
    m
}

/// Matrix converting P3 Lagrange nodal values into coefficients of the
/// alternative basis of [`alternative_basis_columns`].
pub fn p3_change_of_basis(basis: &LatticeBasis, verts: &[Vec2; 3]) -> Result<DMatrix<f64>> {
    let m = alternative_basis_columns(basis, verts);
    let svd = m.clone().svd(false, false);
    let smax = svd.singular_values.max();
    let smin = svd.singular_values.min();
    if !(smin > 0.0) || smax / smin > 1e12 {
        return Err(Error::SingularBasis(smax / smin.max(f64::MIN_POSITIVE)));
    }
    let inv = m
        .lu()
        .try_inverse()
        .ok_or(Error::SingularBasis(f64::INFINITY))?;
    Ok(inv)
}

#[cfg(test)]
mod tests {
    use super::*;

    const REF: [Vec2; 3] = [v2(0.0, 0.0), v2(1.0, 0.0), v2(0.0, 1.0)];

    #[test]
    fn profile_anchors() {
        assert!((sting_profile(1.0) - 1.0).abs() < 1e-15);
        assert!((sting_profile(0.0) + 0.1).abs() < 1e-15);
    }

    #[test]
    fn reference_sting_matches_explicit_cubic() {
        // E on the x-axis, V = (0,1): s(x,y) = (56 y^3 - 63 y^2 + 18 y - 1)/10
        let sting = StingFunction::new(REF, 2);
        for &(x, y) in &[(0.1, 0.2), (0.0, 0.0), (0.3, 0.5), (0.0, 1.0)] {
            let want = (56.0 * y * y * y - 63.0 * y * y + 18.0 * y - 1.0) / 10.0;
            assert!((sting.eval(v2(x, y)) - want).abs() < 1e-14);
        }
        assert!((sting.eval(v2(0.0, 1.0)) - 1.0).abs() < 1e-14);
        assert!((sting.eval(v2(0.4, 0.0)) + 0.1).abs() < 1e-14);
    }

    #[test]
    fn moment_of_constant_on_reference() {
        let basis = LatticeBasis::new(3);
        let sting = StingFunction::new(REF, 2);
        let ones = vec![1.0; 10];
        assert!((sting.moment(&basis, &ones) - 1.0 / 200.0).abs() < 1e-15);
        assert!((sting.moment_quadrature(&basis, &ones) - 1.0 / 200.0).abs() < 1e-14);
    }

    #[test]
    fn moment_of_x_and_y_on_reference() {
        let basis = LatticeBasis::new(3);
        let sting = StingFunction::new(REF, 2);
        let coeff = |f: &dyn Fn(f64, f64) -> f64| -> Vec<f64> {
            (0..10)
                .map(|n| {
                    let b = basis.node_barycentric(n);
                    f(b[1], b[2])
                })
                .collect()
        };
        let qx = coeff(&|x, _| x);
        let qy = coeff(&|_, y| y);
        // q(V) with V = (0,1): x vanishes, y equals one
        assert!(sting.moment(&basis, &qx).abs() < 1e-16);
        assert!(sting.moment_quadrature(&basis, &qx).abs() < 1e-15);
        assert!((sting.moment(&basis, &qy) - 1.0 / 200.0).abs() < 1e-16);
        assert!((sting.moment_quadrature(&basis, &qy) - 1.0 / 200.0).abs() < 1e-15);
    }

    #[test]
    fn div_pairing_zero_for_constant_field() {
        let p4 = LatticeBasis::new(4);
        let tri = [v2(0.1, 0.0), v2(1.2, 0.3), v2(0.4, 1.1)];
        for opp in 0..3 {
            let sting = StingFunction::new(tri, opp);
            let ones = vec![2.5; 15];
            assert!(sting.div_pairing(&p4, &ones, &ones).abs() < 1e-14);
            assert!(sting.div_pairing_quadrature(&p4, &ones, &ones).abs() < 1e-13);
        }
    }

    #[test]
    fn bubble_gradients_at_interior_lyness_points() {
        for tri in [
            REF,
            [v2(0.0, 0.0), v2(2.0, 0.2), v2(0.5, 1.7)],
            [v2(-1.0, -1.0), v2(1.0, -0.8), v2(0.3, 1.4)],
        ] {
            for v in 0..3 {
                let report = bubble_gradient_check(tri, v);
                assert!(report.max_deviation_plus < 1e-12, "{report:?}");
                assert!(report.max_deviation_minus < 1e-12, "{report:?}");
            }
        }
    }

    #[test]
    fn equilateral_bubble_spike_magnitude() {
        let tri = [v2(0.0, 0.0), v2(1.0, 0.0), v2(0.5, 3.0f64.sqrt() / 2.0)];
        let bubble = BubblePair::new(tri, 0);
        // d computed geometrically: distance from vertex 1 to the median line
        let g = (tri[0] + tri[1] + tri[2]) / 3.0;
        let dir = (g - tri[0]).normalize();
        let d_geo = dir.perp().dot(tri[1] - g).abs();
        assert!((bubble.d - d_geo).abs() < 1e-15);
        let rule = TriangleRule::lyness16();
        for (i, b) in rule.points.iter().enumerate() {
            if b.iter().any(|&c| c <= 1e-12) {
                continue;
            }
            let x = rule.point_on(i, &tri);
            if bubble.mu(x) > 1e-12 {
                assert!((bubble.grad_plus(x).norm() - 3.0 / bubble.d).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn change_of_basis_round_trips() {
        let basis = LatticeBasis::new(3);
        let tri = [v2(0.0, 0.1), v2(1.4, 0.2), v2(0.3, 1.2)];
        let m = alternative_basis_columns(&basis, &tri);
        let inv = p3_change_of_basis(&basis, &tri).unwrap();

        // constant field maps to the pure constant coefficient
        let ones = nalgebra::DVector::from_element(10, 1.0);
        let c = &inv * &ones;
        assert!((c[0] - 1.0).abs() < 1e-12);
        for i in 1..10 {
            assert!(c[i].abs() < 1e-12, "coefficient {i} = {}", c[i]);
        }

        // a single sting maps to a unit coefficient on its own column
        let sting_vals = nalgebra::DVector::from_vec(sting_nodal_values(&basis, 1));
        let c = &inv * &sting_vals;
        for i in 0..10 {
            let want = if i == 8 { 1.0 } else { 0.0 };
            assert!((c[i] - want).abs() < 1e-11, "coefficient {i} = {}", c[i]);
        }

        // random cubic round-trip
        let y = nalgebra::DVector::from_fn(10, |i, _| ((i * 7 + 3) % 11) as f64 / 11.0 - 0.4);
        let back = &m * (&inv * &y);
        assert!((back - &y).norm() < 1e-10);
    }
}
