//! Lagrange bases of degree 3 and 4 on the principal lattice of the
//! reference triangle.
//!
//! Node ordering is vertices, then edge nodes walked along each edge
//! (v0->v1, v1->v2, v2->v0), then interior nodes; this matches the
//! degree-of-freedom layout in [`crate::stokes`].

/// Where a lattice node of the reference triangle lives.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NodeSite {
    /// Local vertex 0..3.
    Vertex(usize),
    /// (local edge 0..3, position along the edge 0..degree-1).
    Edge(usize, usize),
    /// Running index of the interior node.
    Interior(usize),
}

/// Degree-k Lagrange basis on the principal lattice, k = 3 or 4.
#[derive(Debug, Clone)]
pub struct LatticeBasis {
    pub degree: usize,
    /// Barycentric numerators (i, j, l) with i + j + l = degree.
    pub nodes: Vec<[usize; 3]>,
    pub sites: Vec<NodeSite>,
}

impl LatticeBasis {
    pub fn new(degree: usize) -> Self {
        assert!(degree >= 1);
        let k = degree;
        let mut nodes = Vec::new();
        let mut sites = Vec::new();
        // vertices: barycentric e_i * k
        let vert = [[k, 0, 0], [0, k, 0], [0, 0, k]];
        for (i, v) in vert.iter().enumerate() {
            nodes.push(*v);
            sites.push(NodeSite::Vertex(i));
        }
        // edges 0: v0->v1, 1: v1->v2, 2: v2->v0
        let ends = [(0usize, 1usize), (1, 2), (2, 0)];
        for (e, (a, b)) in ends.iter().enumerate() {
            for s in 1..k {
                let mut n = [0usize; 3];
                n[*a] = k - s;
                n[*b] = s;
                nodes.push(n);
                sites.push(NodeSite::Edge(e, s - 1));
            }
        }
        let mut interior = 0;
        for i in (1..k).rev() {
            for j in 1..k {
                let l = k as isize - i as isize - j as isize;
                if l >= 1 {
                    nodes.push([i, j, l as usize]);
                    sites.push(NodeSite::Interior(interior));
                    interior += 1;
                }
            }
        }
        debug_assert_eq!(nodes.len(), (k + 1) * (k + 2) / 2);
        LatticeBasis { degree, nodes, sites }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Barycentric coordinates of node `n`.
    pub fn node_barycentric(&self, n: usize) -> [f64; 3] {
        let k = self.degree as f64;
        let m = self.nodes[n];
        [m[0] as f64 / k, m[1] as f64 / k, m[2] as f64 / k]
    }

    /// Values of all shape functions at a barycentric point.
    pub fn eval(&self, b: [f64; 3]) -> Vec<f64> {
        let mut out = vec![0.0; self.len()];
        self.eval_into(b, &mut out);
        out
    }

    pub fn eval_into(&self, b: [f64; 3], out: &mut [f64]) {
        for (n, node) in self.nodes.iter().enumerate() {
            let mut val = 1.0;
            for c in 0..3 {
                val *= lattice_factor(self.degree, node[c], b[c]).0;
            }
            out[n] = val;
        }
    }

    /// Gradients with respect to the barycentric coordinates; convert with
    /// [`Self::grad_ref`] or an [`super::map::AffineMap`] as needed.
    pub fn grad_barycentric(&self, b: [f64; 3]) -> Vec<[f64; 3]> {
        let mut out = vec![[0.0; 3]; self.len()];
        for (n, node) in self.nodes.iter().enumerate() {
            let f: Vec<(f64, f64)> =
                (0..3).map(|c| lattice_factor(self.degree, node[c], b[c])).collect();
            for c in 0..3 {
                let mut d = f[c].1;
                for o in 0..3 {
                    if o != c {
                        d *= f[o].0;
                    }
                }
                out[n][c] = d;
            }
        }
        out
    }

    /// Gradients with respect to the reference coordinates (x, y), where
    /// lambda = (1 - x - y, x, y).
    pub fn grad_ref(&self, b: [f64; 3]) -> Vec<[f64; 2]> {
        self.grad_barycentric(b)
            .into_iter()
            .map(|g| [g[1] - g[0], g[2] - g[0]])
            .collect()
    }
}

/// One-dimensional lattice factor prod_{r<m} (k*t - r) / (m - r) and its
/// derivative with respect to t.
fn lattice_factor(k: usize, m: usize, t: f64) -> (f64, f64) {
    let kf = k as f64;
    let mut val = 1.0;
    let mut der = 0.0;
    for r in 0..m {
        let denom = (m - r) as f64;
        let f = (kf * t - r as f64) / denom;
        let fd = kf / denom;
        der = der * f + val * fd;
        val *= f;
    }
    (val, der)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_basis(degree: usize) {
        let basis = LatticeBasis::new(degree);
        let n = basis.len();
        // Kronecker delta at the lattice nodes
        for i in 0..n {
            let vals = basis.eval(basis.node_barycentric(i));
            for j in 0..n {
                let want = if i == j { 1.0 } else { 0.0 };
                assert!(
                    (vals[j] - want).abs() < 1e-13,
                    "deg {degree}: phi_{j} at node {i} = {}",
                    vals[j]
                );
            }
        }
        // partition of unity and zero gradient sum at interior points
        for &(x, y) in &[(0.21, 0.33), (0.05, 0.9), (0.4, 0.1)] {
            let b = [1.0 - x - y, x, y];
            let s: f64 = basis.eval(b).iter().sum();
            assert!((s - 1.0).abs() < 1e-13);
            let g = basis.grad_ref(b);
            let gx: f64 = g.iter().map(|v| v[0]).sum();
            let gy: f64 = g.iter().map(|v| v[1]).sum();
            assert!(gx.abs() < 1e-12 && gy.abs() < 1e-12);
        }
    }

    #[test]
    fn p3_basis_properties() {
        check_basis(3);
        assert_eq!(LatticeBasis::new(3).len(), 10);
    }

    #[test]
    fn p4_basis_properties() {
        check_basis(4);
        assert_eq!(LatticeBasis::new(4).len(), 15);
    }

    #[test]
    fn reproduces_cubic_exactly() {
        let basis = LatticeBasis::new(3);
        let f = |x: f64, y: f64| 1.0 + 2.0 * x - y + x * x * y - 3.0 * y * y * y;
        let coeffs: Vec<f64> = (0..basis.len())
            .map(|n| {
                let b = basis.node_barycentric(n);
                f(b[1], b[2])
            })
            .collect();
        let (x, y) = (0.27, 0.31);
        let vals = basis.eval([1.0 - x - y, x, y]);
        let interp: f64 = coeffs.iter().zip(&vals).map(|(c, v)| c * v).sum();
        assert!((interp - f(x, y)).abs() < 1e-13);
    }

    #[test]
    fn gradient_matches_finite_differences() {
        let basis = LatticeBasis::new(4);
        let (x, y) = (0.3, 0.4);
        let h = 1e-6;
        let g = basis.grad_ref([1.0 - x - y, x, y]);
        let fxp = basis.eval([1.0 - (x + h) - y, x + h, y]);
        let fxm = basis.eval([1.0 - (x - h) - y, x - h, y]);
        let fyp = basis.eval([1.0 - x - (y + h), x, y + h]);
        let fym = basis.eval([1.0 - x - (y - h), x, y - h]);
        for n in 0..basis.len() {
            let dx = (fxp[n] - fxm[n]) / (2.0 * h);
            let dy = (fyp[n] - fym[n]) / (2.0 * h);
            assert!((g[n][0] - dx).abs() < 1e-8, "node {n}");
            assert!((g[n][1] - dy).abs() < 1e-8, "node {n}");
        }
    }
}
