//! O(3)-stem functions on rotation-invariant subsets of R⁴, the induced
//! functions on quaternionic slices, and the correspondence with ordinary
//! stem functions: restriction to the plane in one direction, radial
//! extension `F_0(v) = F_1(x_0, r)`, `F_h(v) = (x_h/r) F_2(x_0, r)` in the
//! other.

use crate::domain::PlaneDomain;
use crate::octonion::{Octonion, OrthoUnitPair};
use crate::slice::{PlaneField, StemFunction};
use rand::Rng;
use std::sync::Arc;

type O3EvalFn = dyn Fn([f64; 4]) -> [Octonion; 4] + Send + Sync;

/// A 3x3 orthogonal matrix; acts on R⁴ and O⁴ fixing the first coordinate.
#[derive(Clone, Copy, Debug)]
pub struct Rotation3(pub [[f64; 3]; 3]);

impl Rotation3 {
    pub fn identity() -> Rotation3 {
        Rotation3([[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]])
    }

    /// Random element of O(3): Gram-Schmidt on Gaussian columns, with a
    /// random reflection so both components of the group are sampled.
    pub fn random<R: Rng>(rng: &mut R) -> Rotation3 {
        loop {
            let mut cols = [[0.0f64; 3]; 3];
            for col in cols.iter_mut() {
                for v in col.iter_mut() {
                    let u1: f64 = rng.gen_range(f64::MIN_POSITIVE..1.0);
                    let u2: f64 = rng.gen();
                    *v = (-2.0 * u1.ln()).sqrt() * (std::f64::consts::TAU * u2).cos();
                }
            }
            if let Some(q) = gram_schmidt(cols) {
                let mut m = q;
                if rng.gen::<bool>() {
                    for row in m.iter_mut() {
                        row[0] = -row[0];
                    }
                }
                return Rotation3(m);
            }
        }
    }

    pub fn apply_vec(&self, v: [f64; 4]) -> [f64; 4] {
        let mut out = [v[0], 0.0, 0.0, 0.0];
        for r in 0..3 {
            for c in 0..3 {
                out[r + 1] += self.0[r][c] * v[c + 1];
            }
        }
        out
    }

    pub fn apply_oct(&self, v: [Octonion; 4]) -> [Octonion; 4] {
        let mut out = [v[0], Octonion::ZERO, Octonion::ZERO, Octonion::ZERO];
        for r in 0..3 {
            for c in 0..3 {
                out[r + 1] += v[c + 1] * self.0[r][c];
            }
        }
        out
    }
}

fn gram_schmidt(cols: [[f64; 3]; 3]) -> Option<[[f64; 3]; 3]> {
    let mut q = cols;
    for c in 0..3 {
        for prev in 0..c {
            let dot: f64 = (0..3).map(|r| q[r][c] * q[r][prev]).sum();
            for r in 0..3 {
                q[r][c] -= dot * q[r][prev];
            }
        }
        let norm: f64 = (0..3).map(|r| q[r][c] * q[r][c]).sum::<f64>().sqrt();
        if norm < 1e-6 {
            return None;
        }
        for r in 0..3 {
            q[r][c] /= norm;
        }
    }
    Some(q)
}

/// An O(3)-stem function `F : E → O⁴` with `F(Av) = A F(v)`; `E` is the
/// O(3)-saturation of the plane domain `D`.
#[derive(Clone)]
pub struct O3StemFunction {
    eval: Arc<O3EvalFn>,
    domain: PlaneDomain,
}

impl O3StemFunction {
    pub fn from_fn<F>(eval: F, domain: PlaneDomain) -> O3StemFunction
    where
        F: Fn([f64; 4]) -> [Octonion; 4] + Send + Sync + 'static,
    {
        O3StemFunction {
            eval: Arc::new(eval),
            domain,
        }
    }

    pub fn domain(&self) -> &PlaneDomain {
        &self.domain
    }

    pub fn eval(&self, v: [f64; 4]) -> [Octonion; 4] {
        (self.eval)(v)
    }

    /// Membership of `v` in `E`, via the orbit representative `(x_0, r)`.
    pub fn contains(&self, v: [f64; 4]) -> bool {
        self.domain.contains_plane(v[0], radial(v))
    }

    /// Value of the induced function at `x = x_0 + x_1 I + x_2 J + x_3 IJ`.
    pub fn induced_value(&self, pair: &OrthoUnitPair, v: [f64; 4]) -> Octonion {
        let f = self.eval(v);
        let b = pair.basis();
        f[0] + b[1] * f[1] + b[2] * f[2] + b[3] * f[3]
    }

    /// Max defect of O(3)-intrinsicity over samples and rotations.
    pub fn intrinsic_residual(&self, samples: &[[f64; 4]], rotations: &[Rotation3]) -> f64 {
        let mut worst = 0.0f64;
        for &v in samples {
            if !self.contains(v) {
                continue;
            }
            let fv = self.eval(v);
            for rot in rotations {
                let lhs = self.eval(rot.apply_vec(v));
                let rhs = rot.apply_oct(fv);
                let mut res = 0.0f64;
                for h in 0..4 {
                    res = res.max((lhs[h] - rhs[h]).norm());
                }
                worst = worst.max(res);
            }
        }
        worst
    }
}

pub fn radial(v: [f64; 4]) -> f64 {
    (v[1] * v[1] + v[2] * v[2] + v[3] * v[3]).sqrt()
}

/// Restriction map: `F_1(x_0, x_1) = F_0(x_0, x_1, 0, 0)`,
/// `F_2(x_0, x_1) = F_1(x_0, x_1, 0, 0)`.
pub fn phi(o3: &O3StemFunction) -> StemFunction {
    let e1 = o3.eval.clone();
    let e2 = o3.eval.clone();
    StemFunction::from_fields(
        PlaneField::from_fn(move |a, b| e1([a, b, 0.0, 0.0])[0]),
        PlaneField::from_fn(move |a, b| e2([a, b, 0.0, 0.0])[1]),
        *o3.domain(),
    )
}

/// Radial extension, the inverse of [`phi`]: away from `r = 0`
/// `F_0(v) = F_1(x_0, r)` and `F_h(v) = (x_h/r) F_2(x_0, r)`; on the real
/// axis `(F_1(x_0, 0), 0, 0, 0)`.
pub fn phi_inverse(stem: &StemFunction) -> O3StemFunction {
    let stem = stem.clone();
    let domain = *stem.domain();
    O3StemFunction::from_fn(
        move |v| {
            let r = radial(v);
            if r == 0.0 {
                let (f1, _) = stem.eval(v[0], 0.0);
                return [f1, Octonion::ZERO, Octonion::ZERO, Octonion::ZERO];
            }
            let (f1, f2) = stem.eval(v[0], r);
            [f1, f2 * (v[1] / r), f2 * (v[2] / r), f2 * (v[3] / r)]
        },
        domain,
    )
}
