//! Stem functions, the slice functions they induce, and the slice algebra:
//! slice product, conjugate, normal function, slice reciprocal, spherical
//! value and derivative, the representation formula and the sliceness
//! criterion, plus the closed-form family of slice Fueter-regular examples.

use crate::domain::PlaneDomain;
use crate::fd;
use crate::octonion::{ImaginaryUnit, Octonion};
use crate::poly::BivarPoly;
use crate::{Error, Result};
use std::sync::Arc;

type EvalFn = dyn Fn(f64, f64) -> Octonion + Send + Sync;
type D1Fn = dyn Fn(f64, f64) -> (Octonion, Octonion) + Send + Sync;
type D2Fn = dyn Fn(f64, f64) -> (Octonion, Octonion, Octonion) + Send + Sync;
type GuardFn = dyn Fn(f64, f64) -> Result<()> + Send + Sync;

/// An octonion-valued function of two real variables with optional analytic
/// partial derivatives. Higher modules prefer the analytic partials and fall
/// back to fourth-order finite differences.
#[derive(Clone)]
pub struct PlaneField {
    eval: Arc<EvalFn>,
    d1: Option<Arc<D1Fn>>,
    d2: Option<Arc<D2Fn>>,
}

impl PlaneField {
    pub fn from_fn<F>(eval: F) -> PlaneField
    where
        F: Fn(f64, f64) -> Octonion + Send + Sync + 'static,
    {
        PlaneField {
            eval: Arc::new(eval),
            d1: None,
            d2: None,
        }
    }

    pub fn with_d1<F>(mut self, d1: F) -> PlaneField
    where
        F: Fn(f64, f64) -> (Octonion, Octonion) + Send + Sync + 'static,
    {
        self.d1 = Some(Arc::new(d1));
        self
    }

    pub fn with_d2<F>(mut self, d2: F) -> PlaneField
    where
        F: Fn(f64, f64) -> (Octonion, Octonion, Octonion) + Send + Sync + 'static,
    {
        self.d2 = Some(Arc::new(d2));
        self
    }

    pub fn constant(c: Octonion) -> PlaneField {
        PlaneField::from_fn(move |_, _| c)
            .with_d1(|_, _| (Octonion::ZERO, Octonion::ZERO))
            .with_d2(|_, _| (Octonion::ZERO, Octonion::ZERO, Octonion::ZERO))
    }

    pub fn from_poly(p: BivarPoly) -> PlaneField {
        let ds = p.d_s();
        let dt = p.d_t();
        let dss = ds.d_s();
        let dst = ds.d_t();
        let dtt = dt.d_t();
        let pe = p.clone();
        let (d1s, d1t) = (ds.clone(), dt.clone());
        PlaneField::from_fn(move |a, b| pe.eval(a, b))
            .with_d1(move |a, b| (d1s.eval(a, b), d1t.eval(a, b)))
            .with_d2(move |a, b| (dss.eval(a, b), dst.eval(a, b), dtt.eval(a, b)))
    }

    pub fn value(&self, alpha: f64, beta: f64) -> Octonion {
        (self.eval)(alpha, beta)
    }

    pub fn has_analytic_d1(&self) -> bool {
        self.d1.is_some()
    }

    pub fn has_analytic_d2(&self) -> bool {
        self.d2.is_some()
    }

    /// `(∂/∂α, ∂/∂β)` at a point.
    pub fn d1(&self, alpha: f64, beta: f64) -> (Octonion, Octonion) {
        if let Some(d1) = &self.d1 {
            return d1(alpha, beta);
        }
        let e = &self.eval;
        let ha = fd::step(alpha);
        let hb = fd::step(beta);
        (
            fd::d1(|a| e(a, beta), alpha, ha),
            fd::d1(|b| e(alpha, b), beta, hb),
        )
    }

    /// `(∂²/∂α², ∂²/∂α∂β, ∂²/∂β²)` at a point.
    pub fn d2(&self, alpha: f64, beta: f64) -> (Octonion, Octonion, Octonion) {
        if let Some(d2) = &self.d2 {
            return d2(alpha, beta);
        }
        let ha = fd::step(alpha);
        let hb = fd::step(beta);
        if let Some(d1) = &self.d1 {
            // Differentiate the analytic gradient once.
            let daa = fd::d1(|a| d1(a, beta).0, alpha, ha);
            let dab = fd::d1(|b| d1(alpha, b).0, beta, hb);
            let dbb = fd::d1(|b| d1(alpha, b).1, beta, hb);
            return (daa, dab, dbb);
        }
        let e = &self.eval;
        let daa = fd::d2(|a| e(a, beta), alpha, ha);
        let dbb = fd::d2(|b| e(alpha, b), beta, hb);
        // Cross derivative: difference the β-stencil of the α-stencil.
        let dab = fd::d1(|b| fd::d1(|a| e(a, b), alpha, ha), beta, hb);
        (daa, dab, dbb)
    }

    fn map(&self, op: impl Fn(Octonion) -> Octonion + Send + Sync + Copy + 'static) -> PlaneField {
        let e = self.eval.clone();
        let mut out = PlaneField::from_fn(move |a, b| op(e(a, b)));
        if let Some(d1) = self.d1.clone() {
            out = out.with_d1(move |a, b| {
                let (da, db) = d1(a, b);
                (op(da), op(db))
            });
        }
        if let Some(d2) = self.d2.clone() {
            out = out.with_d2(move |a, b| {
                let (daa, dab, dbb) = d2(a, b);
                (op(daa), op(dab), op(dbb))
            });
        }
        out
    }
}

/// First partials of a stem function at a plane point.
#[derive(Clone, Copy, Debug)]
pub struct StemD1 {
    pub f1_a: Octonion,
    pub f1_b: Octonion,
    pub f2_a: Octonion,
    pub f2_b: Octonion,
}

/// A stem function `F = (F_1, F_2) : D → O²`, conjugation-intrinsic:
/// `F_1(α,-β) = F_1(α,β)` and `F_2(α,-β) = -F_2(α,β)`.
#[derive(Clone)]
pub struct StemFunction {
    f1: PlaneField,
    f2: PlaneField,
    domain: PlaneDomain,
    guard: Option<Arc<GuardFn>>,
    polys: Option<(BivarPoly, BivarPoly)>,
}

impl StemFunction {
    pub fn from_fields(f1: PlaneField, f2: PlaneField, domain: PlaneDomain) -> StemFunction {
        StemFunction {
            f1,
            f2,
            domain,
            guard: None,
            polys: None,
        }
    }

    pub fn from_fn<F>(eval: F, domain: PlaneDomain) -> StemFunction
    where
        F: Fn(f64, f64) -> (Octonion, Octonion) + Send + Sync + 'static,
    {
        let eval = Arc::new(eval);
        let e1 = eval.clone();
        let e2 = eval;
        StemFunction::from_fields(
            PlaneField::from_fn(move |a, b| e1(a, b).0),
            PlaneField::from_fn(move |a, b| e2(a, b).1),
            domain,
        )
    }

    /// Builds a stem from two polynomials in `(α, β)`; partials are exact.
    pub fn from_polys(p1: BivarPoly, p2: BivarPoly, domain: PlaneDomain) -> StemFunction {
        let mut stem = StemFunction::from_fields(
            PlaneField::from_poly(p1.clone()),
            PlaneField::from_poly(p2.clone()),
            domain,
        );
        stem.polys = Some((p1, p2));
        stem
    }

    pub fn constant(c: Octonion, domain: PlaneDomain) -> StemFunction {
        StemFunction::from_polys(BivarPoly::constant(c), BivarPoly::zero(), domain)
    }

    pub fn identity(domain: PlaneDomain) -> StemFunction {
        StemFunction::from_polys(
            BivarPoly::from_terms(&[(1, 0, Octonion::ONE)]),
            BivarPoly::from_terms(&[(0, 1, Octonion::ONE)]),
            domain,
        )
    }

    pub fn with_guard<G>(mut self, guard: G) -> StemFunction
    where
        G: Fn(f64, f64) -> Result<()> + Send + Sync + 'static,
    {
        self.guard = Some(Arc::new(guard));
        self
    }

    pub fn domain(&self) -> &PlaneDomain {
        &self.domain
    }

    pub fn f1(&self) -> &PlaneField {
        &self.f1
    }

    pub fn f2(&self) -> &PlaneField {
        &self.f2
    }

    /// Underlying polynomials when the stem was built from them.
    pub fn polys(&self) -> Option<(&BivarPoly, &BivarPoly)> {
        self.polys.as_ref().map(|(p, q)| (p, q))
    }

    pub fn eval(&self, alpha: f64, beta: f64) -> (Octonion, Octonion) {
        (self.f1.value(alpha, beta), self.f2.value(alpha, beta))
    }

    pub fn d1(&self, alpha: f64, beta: f64) -> StemD1 {
        let (f1_a, f1_b) = self.f1.d1(alpha, beta);
        let (f2_a, f2_b) = self.f2.d1(alpha, beta);
        StemD1 {
            f1_a,
            f1_b,
            f2_a,
            f2_b,
        }
    }

    pub fn has_analytic_d1(&self) -> bool {
        self.f1.has_analytic_d1() && self.f2.has_analytic_d1()
    }

    pub fn check_guard(&self, alpha: f64, beta: f64) -> Result<()> {
        match &self.guard {
            Some(g) => g(alpha, beta),
            None => Ok(()),
        }
    }

    /// Max defect of the conjugation-intrinsic symmetry on a grid.
    pub fn symmetry_residual(&self, n_alpha: usize, n_beta: usize) -> f64 {
        let mut worst = 0.0f64;
        for (a, b) in self.domain.grid(n_alpha, n_beta) {
            if b == 0.0 || self.check_guard(a, b).is_err() || self.check_guard(a, -b).is_err() {
                continue;
            }
            let (p1, p2) = self.eval(a, b);
            let (m1, m2) = self.eval(a, -b);
            worst = worst.max((m1 - p1).norm()).max((m2 + p2).norm());
        }
        worst
    }

    pub fn induce(self) -> SliceFunction {
        SliceFunction { stem: self }
    }

    /// The conjugate stem `F^c = (conj F_1, conj F_2)`.
    pub fn conjugate(&self) -> StemFunction {
        let mut out = StemFunction::from_fields(
            self.f1.map(Octonion::conj),
            self.f2.map(Octonion::conj),
            self.domain,
        );
        out.guard = self.guard.clone();
        out.polys = self.polys.as_ref().map(|(p, q)| {
            let conj_poly = |p: &BivarPoly| {
                let mut out = BivarPoly::zero();
                for (m, n, c) in p.terms() {
                    out.add_term(m, n, c.conj());
                }
                out
            };
            (conj_poly(p), conj_poly(q))
        });
        out
    }

    /// Tensor-product stem `(F_1 G_1 - F_2 G_2, F_1 G_2 + F_2 G_1)`.
    pub fn product(&self, rhs: &StemFunction) -> StemFunction {
        let (a1, a2) = (self.f1.clone(), self.f2.clone());
        let (b1, b2) = (rhs.f1.clone(), rhs.f2.clone());

        let combine = move |a: &PlaneField,
                            b: &PlaneField,
                            c: &PlaneField,
                            d: &PlaneField,
                            sign: f64|
              -> PlaneField {
            // a*b + sign * c*d with product-rule partials when available.
            let (ae, be, ce, de) = (a.clone(), b.clone(), c.clone(), d.clone());
            let mut field = PlaneField::from_fn(move |s, t| {
                ae.value(s, t) * be.value(s, t) + (ce.value(s, t) * de.value(s, t)) * sign
            });
            if a.has_analytic_d1() && b.has_analytic_d1() && c.has_analytic_d1()
                && d.has_analytic_d1()
            {
                let (ad, bd, cd, dd) = (a.clone(), b.clone(), c.clone(), d.clone());
                field = field.with_d1(move |s, t| {
                    let (av, bv, cv, dv) =
                        (ad.value(s, t), bd.value(s, t), cd.value(s, t), dd.value(s, t));
                    let (a1, a2) = ad.d1(s, t);
                    let (b1, b2) = bd.d1(s, t);
                    let (c1, c2) = cd.d1(s, t);
                    let (d1v, d2v) = dd.d1(s, t);
                    (
                        a1 * bv + av * b1 + (c1 * dv + cv * d1v) * sign,
                        a2 * bv + av * b2 + (c2 * dv + cv * d2v) * sign,
                    )
                });
            }
            field
        };

        let g1 = combine(&a1, &b1, &a2, &b2, -1.0);
        let g2 = combine(&a1, &b2, &a2, &b1, 1.0);
        let mut out = StemFunction::from_fields(g1, g2, self.domain);
        out.guard = match (&self.guard, &rhs.guard) {
            (None, None) => None,
            (Some(g), None) | (None, Some(g)) => Some(g.clone()),
            (Some(g), Some(h)) => {
                let (g, h) = (g.clone(), h.clone());
                Some(Arc::new(move |a, b| {
                    g(a, b)?;
                    h(a, b)
                }))
            }
        };
        // Polynomial stems stay polynomial under the tensor product only
        // when coefficient products associate; octonion coefficients do not
        // in general, so the closure form is kept.
        out
    }
}

/// A slice function `f = I(F)`, evaluated as `f(α + βI) = F_1 + I F_2`.
#[derive(Clone)]
pub struct SliceFunction {
    stem: StemFunction,
}

impl SliceFunction {
    pub fn stem(&self) -> &StemFunction {
        &self.stem
    }

    pub fn domain(&self) -> &PlaneDomain {
        self.stem.domain()
    }

    /// Plane coordinates `(α, β)` with `β = |Im x| >= 0`.
    pub fn plane_point(x: Octonion) -> (f64, f64) {
        (x.re(), x.im().norm())
    }

    pub fn evaluate(&self, x: Octonion) -> Result<Octonion> {
        let (alpha, beta) = Self::plane_point(x);
        if !self.stem.domain.contains_plane(alpha, beta) {
            return Err(Error::OutOfDomain);
        }
        self.stem.check_guard(alpha, beta)?;
        Ok(self.evaluate_unchecked(x))
    }

    /// Evaluation without the domain/guard checks.
    pub fn evaluate_unchecked(&self, x: Octonion) -> Octonion {
        let (alpha, beta) = Self::plane_point(x);
        let (f1, f2) = self.stem.eval(alpha, beta);
        if beta == 0.0 {
            return f1;
        }
        let unit = x.im() / beta;
        f1 + unit * f2
    }

    /// The function as a plain octonion-to-octonion closure.
    pub fn raw(&self) -> impl Fn(Octonion) -> Octonion + Send + Sync + Clone + 'static {
        let stem = self.stem.clone();
        move |x| SliceFunction { stem: stem.clone() }.evaluate_unchecked(x)
    }

    pub fn conjugate(&self) -> SliceFunction {
        self.stem.conjugate().induce()
    }

    /// Slice product `f · g`, induced by the tensor product of the stems.
    pub fn product(&self, rhs: &SliceFunction) -> Result<SliceFunction> {
        if self.stem.domain != rhs.stem.domain {
            return Err(Error::Config("slice product needs equal domains".into()));
        }
        Ok(self.stem.product(&rhs.stem).induce())
    }

    /// Normal function `N(f) = f · f^c`; slice preserving.
    pub fn normal(&self) -> SliceFunction {
        self.stem.product(&self.stem.conjugate()).induce()
    }

    /// Slice reciprocal `f^{-•} = N(f)^{-1} f^c`. Evaluation signals a
    /// singular point where `|N(f)| < 1e-12`.
    pub fn slice_reciprocal(&self) -> SliceFunction {
        let normal = self.normal().stem;
        let conj = self.stem.conjugate();
        let (n1f, n2f) = (normal.f1.clone(), normal.f2.clone());
        let (c1f, c2f) = (conj.f1.clone(), conj.f2.clone());
        // N is slice preserving: its stem is (numerically) real-valued, so
        // the reciprocal stem is the complex reciprocal times F^c.
        let eval = move |a: f64, b: f64| -> (Octonion, Octonion) {
            let n1 = n1f.value(a, b).re();
            let n2 = n2f.value(a, b).re();
            let den = n1 * n1 + n2 * n2;
            let (r1, r2) = (n1 / den, -n2 / den);
            let (c1, c2) = (c1f.value(a, b), c2f.value(a, b));
            (c1 * r1 - c2 * r2, c2 * r1 + c1 * r2)
        };
        let (ng1, ng2) = (normal.f1.clone(), normal.f2.clone());
        StemFunction::from_fn(eval, *self.domain())
            .with_guard(move |a, b| {
                let n1 = ng1.value(a, b).re();
                let n2 = ng2.value(a, b).re();
                if (n1 * n1 + n2 * n2).sqrt() < 1e-12 {
                    Err(Error::SingularPoint)
                } else {
                    Ok(())
                }
            })
            .induce()
    }

    /// Spherical value `f°_s = I((F_1, 0))`.
    pub fn spherical_value(&self) -> SliceFunction {
        StemFunction::from_fields(
            self.stem.f1.clone(),
            PlaneField::constant(Octonion::ZERO),
            self.stem.domain,
        )
        .induce()
    }

    /// Spherical derivative `f'_s = I((F_2/β, 0))`. On the real axis the
    /// continuous extension `∂F_2/∂β(α, 0)` is used when analytic partials
    /// exist; otherwise evaluation there is an error.
    pub fn spherical_derivative(&self) -> SliceFunction {
        let f2 = self.stem.f2.clone();
        let analytic = f2.has_analytic_d1();
        let f2v = f2.clone();
        let eval = move |a: f64, b: f64| -> Octonion {
            if b == 0.0 {
                f2v.d1(a, 0.0).1
            } else {
                f2v.value(a, b) / b
            }
        };
        let field = PlaneField::from_fn(eval);
        let mut stem = StemFunction::from_fields(
            field,
            PlaneField::constant(Octonion::ZERO),
            self.stem.domain,
        );
        stem.guard = self.stem.guard.clone();
        if !analytic {
            let prev = stem.guard.clone();
            stem = stem.with_guard(move |a, b| {
                if let Some(g) = &prev {
                    g(a, b)?;
                }
                if b == 0.0 {
                    Err(Error::RealAxis)
                } else {
                    Ok(())
                }
            });
        }
        stem.induce()
    }
}

/// Recovers the stem of a slice function from point evaluations on the
/// slice `C_J`: `F_1 = (f(α+βJ) + f(α-βJ))/2`, `F_2 = -J(f(α+βJ) - f(α-βJ))/2`.
pub fn stem_of<F>(raw: F, j: ImaginaryUnit, domain: PlaneDomain) -> StemFunction
where
    F: Fn(Octonion) -> Octonion + Send + Sync + 'static,
{
    let raw = Arc::new(raw);
    let ju = j.as_octonion();
    let r1 = raw.clone();
    let r2 = raw;
    let f1 = PlaneField::from_fn(move |a, b| {
        let y = Octonion::real(a) + ju * b;
        (r1(y) + r1(y.conj())) * 0.5
    });
    let f2 = PlaneField::from_fn(move |a, b| {
        let y = Octonion::real(a) + ju * b;
        (ju * (r2(y) - r2(y.conj()))) * -0.5
    });
    StemFunction::from_fields(f1, f2, domain)
}

/// Representation formula: reconstructs `f(α + Kβ)` from the values on two
/// slices, `(K-J)((I-J)^{-1} f(α+Iβ)) - (K-I)((I-J)^{-1} f(α+Jβ))`.
pub fn representation(
    f: &SliceFunction,
    i: ImaginaryUnit,
    j: ImaginaryUnit,
    k: ImaginaryUnit,
    alpha: f64,
    beta: f64,
) -> Result<Octonion> {
    let (iu, ju, ku) = (i.as_octonion(), j.as_octonion(), k.as_octonion());
    if (iu - ju).norm() < 1e-10 {
        return Err(Error::CoincidentUnits);
    }
    let inv = (iu - ju).inverse()?;
    let fi = f.evaluate(Octonion::real(alpha) + iu * beta)?;
    let fj = f.evaluate(Octonion::real(alpha) + ju * beta)?;
    Ok((ku - ju) * (inv * fi) - (ku - iu) * (inv * fj))
}

/// Result of a sliceness sweep.
#[derive(Clone, Debug)]
pub struct SlicenessReport {
    pub max_residual: f64,
    pub pass: bool,
    pub worst_point: (f64, f64),
}

/// Checks the pointwise sliceness criterion
/// `f(α+βI) = (f(y) + f(ȳ))/2 - (I/2)(J(f(y) - f(ȳ)))`, `y = α + βJ`,
/// over a grid crossed with unit samples.
pub fn sliceness_check<F>(
    raw: F,
    domain: &PlaneDomain,
    n_alpha: usize,
    n_beta: usize,
    units: &[ImaginaryUnit],
    tol: f64,
) -> SlicenessReport
where
    F: Fn(Octonion) -> Octonion,
{
    let mut max_residual = 0.0f64;
    let mut worst_point = (f64::NAN, f64::NAN);
    for (a, b) in domain.grid(n_alpha, n_beta) {
        for (pi, i) in units.iter().enumerate() {
            // Pair each I with a shifted J so distinct slices get compared.
            let j = units[(pi + units.len() / 2 + 1) % units.len()];
            let iu = i.as_octonion();
            let ju = j.as_octonion();
            let x = Octonion::real(a) + iu * b;
            let y = Octonion::real(a) + ju * b;
            let rhs = (raw(y) + raw(y.conj())) * 0.5
                - iu * (ju * (raw(y) - raw(y.conj()))) * 0.5;
            let res = (raw(x) - rhs).norm();
            if res > max_residual {
                max_residual = res;
                worst_point = (a, b);
            }
        }
    }
    SlicenessReport {
        max_residual,
        pass: max_residual <= tol,
        worst_point,
    }
}

const FAMILY_EXTENT: f64 = 1e9;

/// The closed-form slice Fueter-regular family
/// `F_1 = (3α² - β²)a + 3αb + c`, `F_2 = β(2αa + b) + (β/|β|³)d`
/// on the given plane domain. For `d ≠ 0` the domain must exclude the real
/// axis.
pub fn example_family_on(
    a: Octonion,
    b: Octonion,
    c: Octonion,
    d: Octonion,
    domain: PlaneDomain,
) -> SliceFunction {
    if d.norm_sq() == 0.0 {
        let p1 = BivarPoly::from_terms(&[
            (2, 0, a * 3.0),
            (0, 2, -a),
            (1, 0, b * 3.0),
            (0, 0, c),
        ]);
        let p2 = BivarPoly::from_terms(&[(1, 1, a * 2.0), (0, 1, b)]);
        return StemFunction::from_polys(p1, p2, domain).induce();
    }
    let f1 = PlaneField::from_fn(move |al, be| a * (3.0 * al * al - be * be) + b * (3.0 * al) + c)
        .with_d1(move |al, be| (a * (6.0 * al) + b * 3.0, a * (-2.0 * be)))
        .with_d2(move |_, _| (a * 6.0, Octonion::ZERO, a * -2.0));
    let f2 = PlaneField::from_fn(move |al, be| {
        a * (2.0 * al * be) + b * be + d * (be / be.abs().powi(3))
    })
    .with_d1(move |al, be| {
        (
            a * (2.0 * be),
            a * (2.0 * al) + b - d * (2.0 / be.abs().powi(3)),
        )
    })
    .with_d2(move |_, be| {
        (
            Octonion::ZERO,
            a * 2.0,
            d * (6.0 * be.signum() / be.powi(4)),
        )
    });
    StemFunction::from_fields(f1, f2, domain.without_real_axis())
        .with_guard(|_, beta| if beta == 0.0 { Err(Error::RealAxis) } else { Ok(()) })
        .induce()
}

/// [`example_family_on`] over (effectively) the whole algebra.
pub fn example_family(a: Octonion, b: Octonion, c: Octonion, d: Octonion) -> SliceFunction {
    example_family_on(
        a,
        b,
        c,
        d,
        PlaneDomain::rectangle(-FAMILY_EXTENT, FAMILY_EXTENT, FAMILY_EXTENT),
    )
}

/// The identity slice function on a domain.
pub fn identity(domain: PlaneDomain) -> SliceFunction {
    StemFunction::identity(domain).induce()
}

/// The constant slice function on a domain.
pub fn constant(c: Octonion, domain: PlaneDomain) -> SliceFunction {
    StemFunction::constant(c, domain).induce()
}

/// `x ↦ Σ_h x^h a_h` as a slice function with a polynomial stem.
pub fn polynomial(coeffs: &[Octonion], domain: PlaneDomain) -> SliceFunction {
    // (α + iβ)^h = c_h(α,β) + i s_h(α,β) with real polynomials c_h, s_h.
    let mut cos_part = BivarPoly::constant(Octonion::ONE);
    let mut sin_part = BivarPoly::zero();
    let mut p1 = BivarPoly::zero();
    let mut p2 = BivarPoly::zero();
    let alpha = BivarPoly::from_terms(&[(1, 0, Octonion::ONE)]);
    let beta = BivarPoly::from_terms(&[(0, 1, Octonion::ONE)]);
    for (h, &a) in coeffs.iter().enumerate() {
        if h > 0 {
            let c_new = cos_part.mul(&alpha).add(&sin_part.mul(&beta).neg());
            let s_new = cos_part.mul(&beta).add(&sin_part.mul(&alpha));
            cos_part = c_new;
            sin_part = s_new;
        }
        p1 = p1.add(&cos_part.mul_coeff_right(a));
        p2 = p2.add(&sin_part.mul_coeff_right(a));
    }
    StemFunction::from_polys(p1, p2, domain).induce()
}
