//! Product quadrature on the 3-sphere and 4-ball inside a quaternionic
//! slice: Gauss-Legendre × Gauss-Legendre × trapezoid in hyperspherical
//! angles for surfaces, with a Gauss-Jacobi (weight `r³`) radial factor for
//! volumes. Node sums use Kahan compensation in a fixed order so reports are
//! reproducible.

use crate::octonion::{Octonion, OrthoUnitPair};
use std::f64::consts::{PI, TAU};

/// Nodes and weights on `[-1, 1]` for the weight `(1+x)^beta` with integer
/// `beta` (0 = Legendre, 3 = the radial factor of the 4-ball measure).
/// Roots are bracketed on a fine grid and bisected; the weights come from
/// the Christoffel function of the orthonormalised Jacobi basis.
fn gauss_jacobi(n: usize, beta: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 1);
    let b = beta as f64;

    // Jacobi recurrence with alpha = 0 evaluated at x for all degrees <= n.
    let evaluate = |x: f64, upto: usize| -> Vec<f64> {
        let mut p = Vec::with_capacity(upto + 1);
        p.push(1.0);
        if upto >= 1 {
            p.push((b + 2.0) / 2.0 * x - b / 2.0);
        }
        for k in 2..=upto {
            let kf = k as f64;
            let a1 = 2.0 * kf * (kf + b) * (2.0 * kf + b - 2.0);
            let a2 = (2.0 * kf + b - 1.0) * (2.0 * kf + b) * (2.0 * kf + b - 2.0);
            let a3 = (2.0 * kf + b - 1.0) * (-(b * b));
            let a4 = 2.0 * (kf - 1.0) * (kf + b - 1.0) * (2.0 * kf + b);
            p.push(((a2 * x + a3) * p[k - 1] - a4 * p[k - 2]) / a1);
        }
        p
    };
    let pn = |x: f64| -> f64 { *evaluate(x, n).last().unwrap() };

    // Bracket the n simple roots in (-1, 1).
    let samples = (40 * n).max(400);
    let mut roots = Vec::with_capacity(n);
    let mut prev_x = -1.0 + 1e-12;
    let mut prev_v = pn(prev_x);
    for s in 1..=samples {
        let x = -1.0 + 2.0 * s as f64 / samples as f64 - 1e-12;
        let v = pn(x);
        if prev_v == 0.0 {
            roots.push(prev_x);
        } else if prev_v * v < 0.0 {
            let (mut lo, mut hi) = (prev_x, x);
            let mut flo = prev_v;
            for _ in 0..90 {
                let mid = 0.5 * (lo + hi);
                let fmid = pn(mid);
                if flo * fmid <= 0.0 {
                    hi = mid;
                } else {
                    lo = mid;
                    flo = fmid;
                }
            }
            roots.push(0.5 * (lo + hi));
        }
        prev_x = x;
        prev_v = v;
    }
    assert_eq!(roots.len(), n, "root bracketing lost a node");

    // Squared norms: ||P_k||² = 2^(b+1) / (2k + b + 1) for alpha = 0.
    let weights: Vec<f64> = roots
        .iter()
        .map(|&x| {
            let p = evaluate(x, n - 1);
            let mut christoffel = 0.0;
            for (k, pk) in p.iter().enumerate() {
                let hk = 2f64.powf(b + 1.0) / (2.0 * k as f64 + b + 1.0);
                christoffel += pk * pk / hk;
            }
            1.0 / christoffel
        })
        .collect();
    (roots, weights)
}

pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    gauss_jacobi(n, 0)
}

pub fn gauss_radial_r3(n: usize) -> (Vec<f64>, Vec<f64>) {
    gauss_jacobi(n, 3)
}

/// Kahan-compensated octonion accumulator.
#[derive(Clone, Copy, Default)]
pub struct KahanSum {
    s: [f64; 8],
    c: [f64; 8],
}

impl KahanSum {
    pub fn add(&mut self, v: Octonion) {
        for h in 0..8 {
            let y = v.c[h] - self.c[h];
            let t = self.s[h] + y;
            self.c[h] = (t - self.s[h]) - y;
            self.s[h] = t;
        }
    }

    pub fn value(&self) -> Octonion {
        Octonion::new(self.s)
    }
}

/// Quadrature orders for the angular product rule on the 3-sphere.
#[derive(Clone, Copy, Debug, serde::Serialize, serde::Deserialize, PartialEq, Eq)]
pub struct SurfaceOrders {
    pub n_chi: usize,
    pub n_theta: usize,
    pub n_phi: usize,
}

impl Default for SurfaceOrders {
    fn default() -> Self {
        SurfaceOrders {
            n_chi: 24,
            n_theta: 24,
            n_phi: 48,
        }
    }
}

/// A quadrature rule over a sphere `{|ξ - c| = r} ∩ H_I`, with outward (or
/// inward, for inner annulus boundaries) unit normals at the nodes.
#[derive(Clone)]
pub struct SurfaceQuadrature {
    pub nodes: Vec<Octonion>,
    pub weights: Vec<f64>,
    pub normals: Vec<Octonion>,
}

impl SurfaceQuadrature {
    /// Sphere of radius `r` about the real point `center` inside the slice
    /// of `pair`. `outward = false` flips the normals (inner boundary of an
    /// annulus).
    pub fn sphere(
        pair: &OrthoUnitPair,
        center: f64,
        r: f64,
        orders: SurfaceOrders,
        outward: bool,
    ) -> SurfaceQuadrature {
        let basis = pair.basis();
        let (chi_x, chi_w) = gauss_legendre(orders.n_chi);
        let (th_x, th_w) = gauss_legendre(orders.n_theta);
        let sign = if outward { 1.0 } else { -1.0 };
        let mut nodes = Vec::new();
        let mut weights = Vec::new();
        let mut normals = Vec::new();
        for (xc, wc) in chi_x.iter().zip(chi_w.iter()) {
            let chi = PI * (xc + 1.0) / 2.0;
            let (schi, cchi) = chi.sin_cos();
            for (xt, wt) in th_x.iter().zip(th_w.iter()) {
                let theta = PI * (xt + 1.0) / 2.0;
                let (sth, cth) = theta.sin_cos();
                for k in 0..orders.n_phi {
                    let phi = TAU * k as f64 / orders.n_phi as f64;
                    let dir = [cchi, schi * cth, schi * sth * phi.cos(), schi * sth * phi.sin()];
                    let unit = basis[0] * dir[0]
                        + basis[1] * dir[1]
                        + basis[2] * dir[2]
                        + basis[3] * dir[3];
                    nodes.push(Octonion::real(center) + unit * r);
                    normals.push(unit * sign);
                    // ds = r³ sin²χ sinθ dχ dθ dφ, with dχ = (π/2)dx etc.
                    weights.push(
                        r.powi(3) * schi * schi * sth * wc * wt * (PI / 2.0) * (PI / 2.0)
                            * (TAU / orders.n_phi as f64),
                    );
                }
            }
        }
        SurfaceQuadrature {
            nodes,
            weights,
            normals,
        }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn total_measure(&self) -> f64 {
        self.weights.iter().sum()
    }

    /// `Σ w_i f(ξ_i, n_i)` with compensated summation.
    pub fn integrate<F: FnMut(Octonion, Octonion) -> Octonion>(&self, mut f: F) -> Octonion {
        let mut acc = KahanSum::default();
        for ((&xi, &w), &n) in self.nodes.iter().zip(&self.weights).zip(&self.normals) {
            acc.add(f(xi, n) * w);
        }
        acc.value()
    }
}

/// A quadrature rule over a 4-ball or 4-annulus inside a slice.
#[derive(Clone)]
pub struct VolumeQuadrature {
    pub nodes: Vec<Octonion>,
    pub weights: Vec<f64>,
}

impl VolumeQuadrature {
    /// Ball `{|ξ - c| < r}`: Gauss-Jacobi radial factor (weight `r³`) times
    /// the unit-sphere angular rule.
    pub fn ball(
        pair: &OrthoUnitPair,
        center: f64,
        r: f64,
        n_radial: usize,
        orders: SurfaceOrders,
    ) -> VolumeQuadrature {
        let unit_sphere = SurfaceQuadrature::sphere(pair, 0.0, 1.0, orders, true);
        let (rx, rw) = gauss_radial_r3(n_radial);
        let mut nodes = Vec::new();
        let mut weights = Vec::new();
        for (xr, wr) in rx.iter().zip(rw.iter()) {
            let rad = r * (xr + 1.0) / 2.0;
            let radial_weight = r.powi(4) / 16.0 * wr;
            for (dir, w_ang) in unit_sphere.nodes.iter().zip(&unit_sphere.weights) {
                nodes.push(Octonion::real(center) + *dir * rad);
                weights.push(radial_weight * w_ang);
            }
        }
        VolumeQuadrature { nodes, weights }
    }

    /// Annulus `{r1 < |ξ - c| < r2}`: plain Gauss-Legendre radially with the
    /// smooth factor `r³` folded into the weights.
    pub fn annulus(
        pair: &OrthoUnitPair,
        center: f64,
        r1: f64,
        r2: f64,
        n_radial: usize,
        orders: SurfaceOrders,
    ) -> VolumeQuadrature {
        let unit_sphere = SurfaceQuadrature::sphere(pair, 0.0, 1.0, orders, true);
        let (rx, rw) = gauss_legendre(n_radial);
        let mut nodes = Vec::new();
        let mut weights = Vec::new();
        for (xr, wr) in rx.iter().zip(rw.iter()) {
            let rad = 0.5 * (r1 + r2) + 0.5 * (r2 - r1) * xr;
            let radial_weight = wr * 0.5 * (r2 - r1) * rad.powi(3);
            for (dir, w_ang) in unit_sphere.nodes.iter().zip(&unit_sphere.weights) {
                nodes.push(Octonion::real(center) + *dir * rad);
                weights.push(radial_weight * w_ang);
            }
        }
        VolumeQuadrature { nodes, weights }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn total_measure(&self) -> f64 {
        self.weights.iter().sum()
    }

    pub fn integrate<F: FnMut(Octonion) -> Octonion>(&self, mut f: F) -> Octonion {
        let mut acc = KahanSum::default();
        for (&xi, &w) in self.nodes.iter().zip(&self.weights) {
            acc.add(f(xi) * w);
        }
        acc.value()
    }
}
