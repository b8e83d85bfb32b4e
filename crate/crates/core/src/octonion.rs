//! Octonion arithmetic via the Cayley-Dickson doubling of the quaternions,
//! the 6-sphere of imaginary units, orthogonal unit pairs and the induced
//! quaternionic-slice embeddings.
//!
//! The real basis is `(1, i, j, k, l, li, lj, lk)`, stored as components
//! `c0..c7`. Multiplication is performed as two quaternion-level
//! Cayley-Dickson products,
//! `(a + l b)(c + l d) = (ac - d b̄) + l(ā d + c b)`,
//! rather than through a sign table, so the code stays auditable against the
//! defining formula.

use crate::{Error, Result};
use rand::Rng;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};

type Quat = [f64; 4];

fn qconj(a: Quat) -> Quat {
    [a[0], -a[1], -a[2], -a[3]]
}

fn qadd(a: Quat, b: Quat) -> Quat {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]]
}

fn qsub(a: Quat, b: Quat) -> Quat {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]]
}

pub(crate) fn qmul(a: Quat, b: Quat) -> Quat {
    [
        a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
        a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
        a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
        a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0],
    ]
}

/// An octonion with real components w.r.t. the basis `(1, i, j, k, l, li, lj, lk)`.
#[derive(Clone, Copy, PartialEq, Default)]
pub struct Octonion {
    pub c: [f64; 8],
}

impl Octonion {
    pub const ZERO: Octonion = Octonion { c: [0.0; 8] };
    pub const ONE: Octonion = Octonion::unit(0);
    pub const I: Octonion = Octonion::unit(1);
    pub const J: Octonion = Octonion::unit(2);
    pub const K: Octonion = Octonion::unit(3);
    pub const L: Octonion = Octonion::unit(4);
    pub const LI: Octonion = Octonion::unit(5);
    pub const LJ: Octonion = Octonion::unit(6);
    pub const LK: Octonion = Octonion::unit(7);

    /// Basis element `e_h` (`e_0 = 1`).
    pub const fn unit(h: usize) -> Octonion {
        let mut c = [0.0; 8];
        c[h] = 1.0;
        Octonion { c }
    }

    pub const fn new(c: [f64; 8]) -> Octonion {
        Octonion { c }
    }

    pub const fn real(t: f64) -> Octonion {
        let mut c = [0.0; 8];
        c[0] = t;
        Octonion { c }
    }

    /// Builds `a + l b` from two quaternion halves.
    pub fn from_quaternions(a: Quat, b: Quat) -> Octonion {
        Octonion {
            c: [a[0], a[1], a[2], a[3], b[0], b[1], b[2], b[3]],
        }
    }

    pub fn quaternion_parts(self) -> (Quat, Quat) {
        let c = self.c;
        ([c[0], c[1], c[2], c[3]], [c[4], c[5], c[6], c[7]])
    }

    pub fn re(self) -> f64 {
        self.c[0]
    }

    /// Imaginary part `x - Re(x)` as an octonion.
    pub fn im(self) -> Octonion {
        let mut c = self.c;
        c[0] = 0.0;
        Octonion { c }
    }

    pub fn conj(self) -> Octonion {
        let mut c = self.c;
        for v in c.iter_mut().skip(1) {
            *v = -*v;
        }
        Octonion { c }
    }

    pub fn norm_sq(self) -> f64 {
        self.c.iter().map(|v| v * v).sum()
    }

    pub fn norm(self) -> f64 {
        self.norm_sq().sqrt()
    }

    /// Euclidean inner product of the underlying 8-vectors.
    pub fn dot(self, other: Octonion) -> f64 {
        self.c.iter().zip(other.c.iter()).map(|(a, b)| a * b).sum()
    }

    pub fn inverse(self) -> Result<Octonion> {
        let n = self.norm_sq();
        if n == 0.0 {
            return Err(Error::ZeroDivisor);
        }
        Ok(self.conj() / n)
    }

    pub fn is_finite(self) -> bool {
        self.c.iter().all(|v| v.is_finite())
    }

    pub fn scale(self, t: f64) -> Octonion {
        let mut c = self.c;
        for v in c.iter_mut() {
            *v *= t;
        }
        Octonion { c }
    }
}

impl Add for Octonion {
    type Output = Octonion;
    fn add(self, rhs: Octonion) -> Octonion {
        let mut c = self.c;
        for (v, w) in c.iter_mut().zip(rhs.c.iter()) {
            *v += w;
        }
        Octonion { c }
    }
}

impl AddAssign for Octonion {
    fn add_assign(&mut self, rhs: Octonion) {
        for (v, w) in self.c.iter_mut().zip(rhs.c.iter()) {
            *v += w;
        }
    }
}

impl Sub for Octonion {
    type Output = Octonion;
    fn sub(self, rhs: Octonion) -> Octonion {
        let mut c = self.c;
        for (v, w) in c.iter_mut().zip(rhs.c.iter()) {
            *v -= w;
        }
        Octonion { c }
    }
}

impl SubAssign for Octonion {
    fn sub_assign(&mut self, rhs: Octonion) {
        for (v, w) in self.c.iter_mut().zip(rhs.c.iter()) {
            *v -= w;
        }
    }
}

impl Neg for Octonion {
    type Output = Octonion;
    fn neg(self) -> Octonion {
        self.scale(-1.0)
    }
}

impl Mul for Octonion {
    type Output = Octonion;
    fn mul(self, rhs: Octonion) -> Octonion {
        let (a, b) = self.quaternion_parts();
        let (c, d) = rhs.quaternion_parts();
        let low = qsub(qmul(a, c), qmul(d, qconj(b)));
        let high = qadd(qmul(qconj(a), d), qmul(c, b));
        Octonion::from_quaternions(low, high)
    }
}

impl Mul<f64> for Octonion {
    type Output = Octonion;
    fn mul(self, rhs: f64) -> Octonion {
        self.scale(rhs)
    }
}

impl Mul<Octonion> for f64 {
    type Output = Octonion;
    fn mul(self, rhs: Octonion) -> Octonion {
        rhs.scale(self)
    }
}

impl Div<f64> for Octonion {
    type Output = Octonion;
    fn div(self, rhs: f64) -> Octonion {
        self.scale(1.0 / rhs)
    }
}

impl fmt::Debug for Octonion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const NAMES: [&str; 8] = ["", "i", "j", "k", "l", "li", "lj", "lk"];
        let mut first = true;
        for (h, &v) in self.c.iter().enumerate() {
            if v == 0.0 {
                continue;
            }
            if first {
                write!(f, "{v}{}", NAMES[h])?;
                first = false;
            } else if v < 0.0 {
                write!(f, " - {}{}", -v, NAMES[h])?;
            } else {
                write!(f, " + {v}{}", NAMES[h])?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Associator `(xy)z - x(yz)`; vanishes iff the triple associates.
pub fn associator(x: Octonion, y: Octonion, z: Octonion) -> Octonion {
    (x * y) * z - x * (y * z)
}

/// Defect of the first Moufang identity, `|x(y(xz)) - ((xy)x)z|`.
pub fn moufang_residual(x: Octonion, y: Octonion, z: Octonion) -> f64 {
    (x * (y * (x * z)) - ((x * y) * x) * z).norm()
}

/// Characteristic polynomial `Δ_ξ(x) = x² - 2x·Re(ξ) + |ξ|²` of the
/// conjugation sphere of `ξ`; vanishes exactly on `S_ξ`.
pub fn delta_poly(xi: Octonion, x: Octonion) -> Octonion {
    x * x - x * (2.0 * xi.re()) + Octonion::real(xi.norm_sq())
}

/// The point `Re(ξ) + I·|Im(ξ)|` of the conjugation sphere `S_ξ`.
pub fn sphere_point(xi: Octonion, i: ImaginaryUnit) -> Octonion {
    Octonion::real(xi.re()) + i.as_octonion() * xi.im().norm()
}

/// The product `⟨I; a, b⟩ = -I((Ia)b)`.
pub fn i_product(i: ImaginaryUnit, a: Octonion, b: Octonion) -> Octonion {
    let iu = i.as_octonion();
    -(iu * ((iu * a) * b))
}

/// A unit octonion with vanishing real part; a point of the 6-sphere of
/// imaginary units, so `I² = -1`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ImaginaryUnit(Octonion);

impl ImaginaryUnit {
    /// Validates and normalises; fails on (numerically) real input.
    pub fn new(v: Octonion) -> Result<ImaginaryUnit> {
        let im = v.im();
        let n = im.norm();
        if n < 1e-14 {
            return Err(Error::ZeroDivisor);
        }
        Ok(ImaginaryUnit(im / n))
    }

    pub fn as_octonion(self) -> Octonion {
        self.0
    }

    /// A seeded draw from the 6-sphere (normalised Gaussian direction).
    pub fn random<R: Rng>(rng: &mut R) -> ImaginaryUnit {
        for _ in 0..64 {
            let mut c = [0.0; 8];
            for v in c.iter_mut().skip(1) {
                *v = gaussian(rng);
            }
            if let Ok(u) = ImaginaryUnit::new(Octonion::new(c)) {
                return u;
            }
        }
        unreachable!("Gaussian draws cannot all be degenerate");
    }
}

fn gaussian<R: Rng>(rng: &mut R) -> f64 {
    // Box-Muller; a plain uniform would bias sphere directions to the cube corners.
    let u1: f64 = rng.gen_range(f64::MIN_POSITIVE..1.0);
    let u2: f64 = rng.gen();
    (-2.0 * u1.ln()).sqrt() * (std::f64::consts::TAU * u2).cos()
}

/// A pair `(I, J)` of orthogonal imaginary units. Spans the quaternionic
/// slice `H_I = span(1, I, J, IJ)`.
#[derive(Clone, Copy, Debug)]
pub struct OrthoUnitPair {
    i: ImaginaryUnit,
    j: ImaginaryUnit,
    ij: Octonion,
}

impl OrthoUnitPair {
    pub fn new(i: ImaginaryUnit, j: ImaginaryUnit) -> Result<OrthoUnitPair> {
        if i.as_octonion().dot(j.as_octonion()).abs() > 1e-10 {
            return Err(Error::Config("units are not orthogonal".into()));
        }
        Ok(OrthoUnitPair {
            i,
            j,
            ij: i.as_octonion() * j.as_octonion(),
        })
    }

    /// Completes `I` to an orthogonal pair using a supplied candidate
    /// direction: Gram-Schmidt against `span(1, I)`.
    pub fn complete_with(i: ImaginaryUnit, candidate: Octonion) -> Result<OrthoUnitPair> {
        let iu = i.as_octonion();
        let v = candidate.im();
        let u = v - iu * v.dot(iu);
        if u.norm() < 1e-8 * (1.0 + candidate.norm()) {
            return Err(Error::DegenerateDraw(1));
        }
        let j = ImaginaryUnit::new(u)?;
        OrthoUnitPair::new(i, j)
    }

    /// Completes `I` to an orthogonal pair with a random second unit.
    pub fn complete<R: Rng>(i: ImaginaryUnit, rng: &mut R) -> Result<OrthoUnitPair> {
        const ATTEMPTS: usize = 32;
        for _ in 0..ATTEMPTS {
            let candidate = ImaginaryUnit::random(rng).as_octonion();
            if let Ok(pair) = OrthoUnitPair::complete_with(i, candidate) {
                return Ok(pair);
            }
        }
        Err(Error::DegenerateDraw(ATTEMPTS))
    }

    pub fn random<R: Rng>(rng: &mut R) -> OrthoUnitPair {
        loop {
            let i = ImaginaryUnit::random(rng);
            if let Ok(pair) = OrthoUnitPair::complete(i, rng) {
                return pair;
            }
        }
    }

    pub fn i(&self) -> ImaginaryUnit {
        self.i
    }

    pub fn j(&self) -> ImaginaryUnit {
        self.j
    }

    pub fn ij(&self) -> Octonion {
        self.ij
    }

    /// Orthonormal basis `(1, I, J, IJ)` of the slice.
    pub fn basis(&self) -> [Octonion; 4] {
        [
            Octonion::ONE,
            self.i.as_octonion(),
            self.j.as_octonion(),
            self.ij,
        ]
    }

    pub fn embedding(&self) -> QuaternionEmbedding {
        QuaternionEmbedding { pair: *self }
    }
}

/// The real algebra embedding `ψ_I : H → O` with `ψ(1)=1, ψ(i)=I, ψ(j)=J,
/// ψ(k)=IJ`; an isometry onto the quaternionic slice.
#[derive(Clone, Copy, Debug)]
pub struct QuaternionEmbedding {
    pair: OrthoUnitPair,
}

impl QuaternionEmbedding {
    pub fn pair(&self) -> &OrthoUnitPair {
        &self.pair
    }

    pub fn apply(&self, q: Quat) -> Octonion {
        let b = self.pair.basis();
        b[0] * q[0] + b[1] * q[1] + b[2] * q[2] + b[3] * q[3]
    }

    /// Coordinates of `x` w.r.t. `(1, I, J, IJ)` together with the distance
    /// from `x` to the slice.
    pub fn coords(&self, x: Octonion) -> (Quat, f64) {
        let b = self.pair.basis();
        let q = [x.dot(b[0]), x.dot(b[1]), x.dot(b[2]), x.dot(b[3])];
        let proj = self.apply(q);
        (q, (x - proj).norm())
    }

    /// Inverse of `ψ_I`; fails when `x` does not lie in the slice.
    pub fn invert(&self, x: Octonion) -> Result<Quat> {
        let (q, dist) = self.coords(x);
        if dist > 1e-10 * (1.0 + x.norm()) {
            return Err(Error::OutsideSlice);
        }
        Ok(q)
    }
}
