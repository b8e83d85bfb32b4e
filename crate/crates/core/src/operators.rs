//! Differential operators on octonion-valued functions: the stem/slice
//! ∂̄ operator, spherical tangential operators `L_mn`, the spherical Dirac
//! operator `Γ`, the Euler operator, the slice Fueter operator, the
//! restricted Cauchy-Riemann-Fueter operator on a quaternionic slice and its
//! closed form on stems, and the second-order differential sliceness
//! criterion.

use crate::fd;
use crate::octonion::{Octonion, OrthoUnitPair};
use crate::slice::{SliceFunction, StemFunction};
use crate::{Error, Result};
use std::sync::Arc;

/// Guard radius around the real axis for `Im(x)^{-1}` prefactors.
pub const IM_GUARD: f64 = 1e-8;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DerivativeMode {
    Analytic,
    FiniteDifference,
}

/// Differentiation settings: fourth-order central stencils with a relative
/// step. Applying the stencil to a cubic reproduces the analytic derivative
/// up to rounding.
#[derive(Clone, Copy, Debug)]
pub struct DerivativeEngine {
    pub mode: DerivativeMode,
    pub fd_step: f64,
}

impl Default for DerivativeEngine {
    fn default() -> Self {
        DerivativeEngine {
            mode: DerivativeMode::Analytic,
            fd_step: fd::BASE_STEP,
        }
    }
}

impl DerivativeEngine {
    pub fn finite_difference() -> DerivativeEngine {
        DerivativeEngine {
            mode: DerivativeMode::FiniteDifference,
            fd_step: fd::BASE_STEP,
        }
    }

    pub fn step(&self, scale: f64) -> f64 {
        self.fd_step * (1.0 + scale.abs())
    }
}

type RawFn = dyn Fn(Octonion) -> Octonion + Send + Sync;

/// An octonion-to-octonion function together with a way to differentiate it.
/// Built from a raw closure (finite differences) or from a slice function
/// with analytic stem partials (chain rule through the radial form).
#[derive(Clone)]
pub struct Field {
    f: Arc<RawFn>,
    analytic: Option<SliceFunction>,
    pub engine: DerivativeEngine,
}

impl Field {
    pub fn from_fn<F>(f: F) -> Field
    where
        F: Fn(Octonion) -> Octonion + Send + Sync + 'static,
    {
        Field {
            f: Arc::new(f),
            analytic: None,
            engine: DerivativeEngine::finite_difference(),
        }
    }

    /// Wraps a slice function; uses analytic stem partials when present.
    pub fn from_slice_fn(f: &SliceFunction) -> Field {
        let raw = f.raw();
        let analytic = f.stem().has_analytic_d1().then(|| f.clone());
        Field {
            f: Arc::new(raw),
            analytic,
            engine: DerivativeEngine::default(),
        }
    }

    pub fn with_engine(mut self, engine: DerivativeEngine) -> Field {
        self.engine = engine;
        self
    }

    pub fn value(&self, x: Octonion) -> Octonion {
        (self.f)(x)
    }

    /// `∂f/∂x_h` for `h = 0..7`.
    pub fn partial(&self, x: Octonion, h: usize) -> Octonion {
        if self.engine.mode == DerivativeMode::Analytic {
            if let Some(f) = &self.analytic {
                let beta = x.im().norm();
                if beta > IM_GUARD {
                    return slice_partial(f.stem(), x, h);
                }
            }
        }
        let f = self.f.clone();
        let step = self.engine.step(x.norm());
        fd::d1(
            move |t| {
                let mut y = x;
                y.c[h] = t;
                f(y)
            },
            x.c[h],
            step,
        )
    }

    /// Directional derivative along a unit direction `u`.
    pub fn directional(&self, x: Octonion, u: Octonion) -> Octonion {
        if self.engine.mode == DerivativeMode::Analytic && self.analytic.is_some() {
            let mut acc = Octonion::ZERO;
            for h in 0..8 {
                if u.c[h] != 0.0 {
                    acc += self.partial(x, h) * u.c[h];
                }
            }
            return acc;
        }
        let f = self.f.clone();
        let step = self.engine.step(x.norm());
        fd::d1(move |t| f(x + u * t), 0.0, step)
    }
}

/// Coordinate partial of a slice function with analytic stem partials, via
/// `f(x) = F_1(x_0, r) + (Im x / r) F_2(x_0, r)`.
fn slice_partial(stem: &StemFunction, x: Octonion, h: usize) -> Octonion {
    let alpha = x.re();
    let im = x.im();
    let r = im.norm();
    let d = stem.d1(alpha, r);
    if h == 0 {
        return d.f1_a + im * d.f2_a * (1.0 / r);
    }
    let (_, f2) = stem.eval(alpha, r);
    let xm = x.c[h];
    let e_m = Octonion::unit(h);
    d.f1_b * (xm / r) + e_m * f2 * (1.0 / r) + im * (d.f2_b * r - f2) * (xm / (r * r * r))
}

/// ∂̄ on stems: `(∂F/∂z̄) = ((F1_α - F2_β)/2, (F1_β + F2_α)/2)`.
pub fn dbar_stem(stem: &StemFunction, alpha: f64, beta: f64) -> (Octonion, Octonion) {
    let d = stem.d1(alpha, beta);
    ((d.f1_a - d.f2_b) * 0.5, (d.f1_b + d.f2_a) * 0.5)
}

/// ∂̄ on slice functions: the slice function induced by [`dbar_stem`].
pub fn dbar_slice(f: &SliceFunction, x: Octonion) -> Octonion {
    let (alpha, beta) = SliceFunction::plane_point(x);
    let (g1, g2) = dbar_stem(f.stem(), alpha, beta);
    if beta == 0.0 {
        return g1;
    }
    g1 + (x.im() / beta) * g2
}

/// Spherical tangential operator `L_mn = x_m ∂/∂x_n - x_n ∂/∂x_m`.
pub fn l_mn(field: &Field, m: usize, n: usize, x: Octonion) -> Result<Octonion> {
    if !(1..=7).contains(&m) || !(1..=7).contains(&n) || m >= n {
        return Err(Error::IndexOrder(m, n));
    }
    Ok(field.partial(x, n) * x.c[m] - field.partial(x, m) * x.c[n])
}

/// Spherical Dirac operator `Γ = -Σ_{m<n} e_m (e_n L_mn)`.
pub fn gamma(field: &Field, x: Octonion) -> Octonion {
    let partials: Vec<Octonion> = (1..8).map(|h| field.partial(x, h)).collect();
    gamma_from_partials(&partials, x)
}

fn gamma_from_partials(partials: &[Octonion], x: Octonion) -> Octonion {
    let mut acc = Octonion::ZERO;
    for m in 1..8 {
        for n in (m + 1)..8 {
            let lmn = partials[n - 1] * x.c[m] - partials[m - 1] * x.c[n];
            acc -= Octonion::unit(m) * (Octonion::unit(n) * lmn);
        }
    }
    acc
}

/// Euler operator `E = Σ_{h=1}^{7} x_h ∂/∂x_h`.
pub fn euler(field: &Field, x: Octonion) -> Octonion {
    (1..8).map(|h| field.partial(x, h) * x.c[h]).fold(
        Octonion::ZERO,
        |acc, v| acc + v,
    )
}

/// Slice Fueter operator `ϑ̄_F = ϑ̄ - (1/6) Im^{-1} Γ`, defined off the real
/// axis, where `ϑ̄ = (∂/∂x_0 - Im^{-1} E)/2` is the global operator computing
/// `∂̄f` on slice functions. On slice functions `ϑ̄_F(f) = ∂̄f - f'_s`, and
/// slice Fueter-regular functions are exactly its slice kernel.
pub fn slice_fueter_op(field: &Field, x: Octonion) -> Result<Octonion> {
    let im = x.im();
    if im.norm() <= IM_GUARD {
        return Err(Error::RealAxis);
    }
    let im_inv = im.inverse()?;
    let partials: Vec<Octonion> = (1..8).map(|h| field.partial(x, h)).collect();
    let e_val = (1..8).fold(Octonion::ZERO, |acc, h| {
        acc + partials[h - 1] * x.c[h]
    });
    let g_val = gamma_from_partials(&partials, x);
    Ok((field.partial(x, 0) - im_inv * e_val) * 0.5 - im_inv * g_val * (1.0 / 6.0))
}

/// Restricted Cauchy-Riemann-Fueter operator on the slice `H_I`:
/// `D̄_I f = ∂_1 f + I ∂_I f + J ∂_J f + (IJ) ∂_IJ f` (directional
/// derivatives along the slice basis). `x` must lie in `H_I`.
pub fn crf_restricted(field: &Field, pair: &OrthoUnitPair, x: Octonion) -> Result<Octonion> {
    let emb = pair.embedding();
    let (_, dist) = emb.coords(x);
    if dist > 1e-10 * (1.0 + x.norm()) {
        return Err(Error::OutsideSlice);
    }
    let basis = pair.basis();
    let mut acc = field.directional(x, basis[0]);
    for b in &basis[1..] {
        acc += *b * field.directional(x, *b);
    }
    Ok(acc)
}

/// Closed form of `D̄_I f` on stems, valid off the real axis:
/// `(F1_α - F2_β - 2F2/r) + (Im x / r)(F1_β + F2_α)` at `(Re x, |Im x|)`.
pub fn crf_closed_form(stem: &StemFunction, pair: &OrthoUnitPair, x: Octonion) -> Result<Octonion> {
    let emb = pair.embedding();
    let (_, dist) = emb.coords(x);
    if dist > 1e-10 * (1.0 + x.norm()) {
        return Err(Error::OutsideSlice);
    }
    crf_closed_form_at(stem, x)
}

/// [`crf_closed_form`] without the slice-membership check; the value only
/// depends on `x` through `(Re x, |Im x|)` and the direction of `Im x`.
pub fn crf_closed_form_at(stem: &StemFunction, x: Octonion) -> Result<Octonion> {
    let im = x.im();
    let r = im.norm();
    if r <= IM_GUARD {
        return Err(Error::RealAxis);
    }
    let alpha = x.re();
    let d = stem.d1(alpha, r);
    let (_, f2) = stem.eval(alpha, r);
    Ok(d.f1_a - d.f2_b - f2 * (2.0 / r) + (im / r) * (d.f1_b + d.f2_a))
}

/// Max residual of the differential sliceness criterion at `x`:
/// `L_mn(Im^{-1} Γ f) = 0` and `L_mn(f - Γ f / 6) = 0` for all `m < n`.
/// The outer tangential derivatives are finite differences over the inner
/// operator with a √h-balanced step.
pub fn dsc_residuals(field: &Field, x: Octonion) -> Result<f64> {
    if x.im().norm() <= IM_GUARD {
        return Err(Error::RealAxis);
    }
    let inner = {
        let field = field.clone();
        move |y: Octonion| gamma(&field, y)
    };
    let spherical = {
        let inner = inner.clone();
        move |y: Octonion| match y.im().inverse() {
            Ok(inv) => inv * inner(y),
            Err(_) => Octonion::ZERO,
        }
    };
    let complement = {
        let field = field.clone();
        move |y: Octonion| field.value(y) - inner(y) * (1.0 / 6.0)
    };

    let h_outer = field.engine.fd_step.sqrt() * (1.0 + x.norm());
    let mut worst = 0.0f64;
    for g in [&spherical as &(dyn Fn(Octonion) -> Octonion), &complement] {
        let mut partials = Vec::with_capacity(7);
        for h in 1..8 {
            partials.push(fd::d1(
                |t| {
                    let mut y = x;
                    y.c[h] = t;
                    g(y)
                },
                x.c[h],
                h_outer,
            ));
        }
        for m in 1..8 {
            for n in (m + 1)..8 {
                let lmn = partials[n - 1] * x.c[m] - partials[m - 1] * x.c[n];
                worst = worst.max(lmn.norm());
            }
        }
    }
    Ok(worst)
}
