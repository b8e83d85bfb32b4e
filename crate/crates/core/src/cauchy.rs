//! Slice Cauchy kernels and integral formulas: the kernel `g_{I,ξ}` and its
//! normal function, the pointwise `Q_I/M_I/N_I` forms of the surface and
//! volume integrands, and the Borel-Pompeiu / Cauchy reconstruction engine
//! over ball and shell geometries inside a quaternionic slice.
//!
//! The integrands are genuinely `(x, ξ)`-pair functions: because of
//! non-associativity there is no ξ-independent slice Cauchy kernel to factor
//! out, and the API never pretends otherwise.

use crate::domain::PlaneDomain;
use crate::octonion::{ImaginaryUnit, Octonion, OrthoUnitPair};
use crate::operators::crf_closed_form_at;
use crate::quadrature::{KahanSum, SurfaceOrders, SurfaceQuadrature, VolumeQuadrature};
use crate::slice::SliceFunction;
use crate::{Error, Result};
use serde::Serialize;
use std::f64::consts::PI;

/// Orthogonal projection of `ξ` onto the complex slice `C_I = span(1, I)`.
pub fn project_to_slice(i: ImaginaryUnit, xi: Octonion) -> Octonion {
    let iu = i.as_octonion();
    Octonion::real(xi.re()) + iu * xi.dot(iu)
}

/// The slice kernel `g_{I,ξ}(x) = |x|² - x ξ̄_I - x̄ ξ_I + |ξ|²`.
pub fn g_kernel(i: ImaginaryUnit, xi: Octonion, x: Octonion) -> Octonion {
    let xi_i = project_to_slice(i, xi);
    Octonion::real(x.norm_sq() + xi.norm_sq()) - x * xi_i.conj() - x.conj() * xi_i
}

/// The normal function `N(g_{I,ξ})(x)`, a nonnegative real whose zero set is
/// the conjugation sphere of `ξ` when `ξ ∈ C_I` and empty otherwise.
pub fn g_normal(i: ImaginaryUnit, xi: Octonion, x: Octonion) -> f64 {
    let xi_i = project_to_slice(i, xi);
    let perp_sq = (xi - xi_i).norm_sq();
    let delta = crate::octonion::delta_poly(xi_i, x);
    delta.norm_sq()
        + 2.0 * perp_sq * (x.norm_sq() - 2.0 * x.re() * xi_i.re() + xi_i.norm_sq())
        + perp_sq * perp_sq
}

/// The pointwise kernel triple `(Q_I, M_I, N_I)` of the slice Cauchy
/// integrands.
pub fn kernel_qmn(
    i: ImaginaryUnit,
    x: Octonion,
    xi: Octonion,
    a: Octonion,
) -> (Octonion, Octonion, f64) {
    let q = kernel_q(i, x, xi, a);
    let q_bar = kernel_q(i, x, xi, xi.conj() * a);
    let m = q_bar - x.conj() * q;
    (q, m, g_normal(i, xi, x))
}

fn kernel_q(i: ImaginaryUnit, x: Octonion, xi: Octonion, a: Octonion) -> Octonion {
    let xi_i = project_to_slice(i, xi);
    let s = x.norm_sq() + xi.norm_sq();
    let x_conj = x.conj();
    a * (s * s) - (x * (xi_i * a) + x_conj * (xi_i.conj() * a)) * (2.0 * s)
        + (x * x) * ((xi_i * xi_i) * a)
        + (x_conj * x_conj) * ((xi_i.conj() * xi_i.conj()) * a)
        + a * (2.0 * x.norm_sq() * xi_i.norm_sq())
}

/// `M_I(x, ξ, a) / (2π² N_I(x, ξ)²)`, the common form of both integrands.
pub fn cauchy_kernel_value(
    i: ImaginaryUnit,
    x: Octonion,
    xi: Octonion,
    a: Octonion,
) -> Result<Octonion> {
    let (_, m, n) = kernel_qmn(i, x, xi, a);
    if n < 1e-14 {
        return Err(Error::SingularPair);
    }
    Ok(m / (2.0 * PI * PI * n * n))
}

/// Ball or concentric-shell geometry inside the slice of `pair`, centred at
/// a real point so the boundary normals and measures stay closed-form.
#[derive(Clone)]
pub struct SliceBallGeometry {
    pub pair: OrthoUnitPair,
    pub center: f64,
    pub kind: GeometryKind,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum GeometryKind {
    Ball { radius: f64 },
    Shell { r_inner: f64, r_outer: f64 },
}

impl SliceBallGeometry {
    pub fn ball(pair: OrthoUnitPair, center: f64, radius: f64) -> SliceBallGeometry {
        SliceBallGeometry {
            pair,
            center,
            kind: GeometryKind::Ball { radius },
        }
    }

    pub fn shell(
        pair: OrthoUnitPair,
        center: f64,
        r_inner: f64,
        r_outer: f64,
    ) -> SliceBallGeometry {
        SliceBallGeometry {
            pair,
            center,
            kind: GeometryKind::Shell { r_inner, r_outer },
        }
    }

    /// The plane domain whose circularisation this geometry bounds.
    pub fn domain(&self) -> PlaneDomain {
        match self.kind {
            GeometryKind::Ball { radius } => PlaneDomain::disc_at(self.center, radius),
            GeometryKind::Shell { r_inner, r_outer } => PlaneDomain {
                kind: crate::domain::DomainKind::Annulus {
                    center: self.center,
                    r_inner,
                    r_outer,
                },
                exclude_real_axis: false,
            },
        }
    }

    pub fn outer_radius(&self) -> f64 {
        match self.kind {
            GeometryKind::Ball { radius } => radius,
            GeometryKind::Shell { r_outer, .. } => r_outer,
        }
    }

    /// Boundary rule: the outer sphere, plus the inner sphere with inward
    /// normals for shells.
    pub fn surface_rule(&self, orders: SurfaceOrders) -> SurfaceQuadrature {
        match self.kind {
            GeometryKind::Ball { radius } => {
                SurfaceQuadrature::sphere(&self.pair, self.center, radius, orders, true)
            }
            GeometryKind::Shell { r_inner, r_outer } => {
                let mut outer =
                    SurfaceQuadrature::sphere(&self.pair, self.center, r_outer, orders, true);
                let inner =
                    SurfaceQuadrature::sphere(&self.pair, self.center, r_inner, orders, false);
                outer.nodes.extend(inner.nodes);
                outer.weights.extend(inner.weights);
                outer.normals.extend(inner.normals);
                outer
            }
        }
    }

    pub fn volume_rule(&self, n_radial: usize, orders: SurfaceOrders) -> VolumeQuadrature {
        match self.kind {
            GeometryKind::Ball { radius } => {
                VolumeQuadrature::ball(&self.pair, self.center, radius, n_radial, orders)
            }
            GeometryKind::Shell { r_inner, r_outer } => VolumeQuadrature::annulus(
                &self.pair,
                self.center,
                r_inner,
                r_outer,
                n_radial,
                orders,
            ),
        }
    }
}

/// Surface integrand `S_{f,I}(x, ξ) = M_I(x, ξ, n(ξ) f(ξ)) / (2π² N_I²)`
/// with an explicit boundary normal.
pub fn surface_integrand(
    f: &SliceFunction,
    pair: &OrthoUnitPair,
    x: Octonion,
    xi: Octonion,
    normal: Octonion,
) -> Result<Octonion> {
    let value = f.evaluate_unchecked(xi);
    cauchy_kernel_value(pair.i(), x, xi, normal * value)
}

/// Volume integrand `V_{f,I}(x, ξ) = M_I(x, ξ, D̄_I f(ξ)) / (2π² N_I²)`.
pub fn volume_integrand(
    f: &SliceFunction,
    pair: &OrthoUnitPair,
    x: Octonion,
    xi: Octonion,
) -> Result<Octonion> {
    let dbar = crf_closed_form_at(f.stem(), xi)?;
    cauchy_kernel_value(pair.i(), x, xi, dbar)
}

/// Distance proxy from the pair `(x, ξ)` to the singular set: distance of
/// `ξ` to `C_I` combined with the distance of `x` to the conjugation sphere
/// of the projection of `ξ`.
fn singular_distance(i: ImaginaryUnit, x: Octonion, xi: Octonion) -> f64 {
    let xi_i = project_to_slice(i, xi);
    let perp = (xi - xi_i).norm();
    let da = x.re() - xi_i.re();
    let db = x.im().norm() - xi_i.im().norm();
    (perp * perp + da * da + db * db).sqrt()
}

/// Precomputed Borel-Pompeiu data for one function on one geometry: nodes,
/// weights and the ξ-side factors `n(ξ) f(ξ)` and `D̄_I f(ξ)`.
pub struct BorelPompeiu {
    pair: OrthoUnitPair,
    outer_radius: f64,
    surface: Vec<(Octonion, f64, Octonion)>,
    volume: Vec<(Octonion, f64, Octonion)>,
}

impl BorelPompeiu {
    /// Evaluates the ξ-side data. The volume term uses the closed form of
    /// `D̄_I f` on the stem, so the rule nodes must avoid the real axis
    /// (interior Gauss nodes do).
    pub fn prepare(
        f: &SliceFunction,
        geometry: &SliceBallGeometry,
        orders: SurfaceOrders,
        n_radial: usize,
    ) -> Result<BorelPompeiu> {
        let surf_rule = geometry.surface_rule(orders);
        let mut surface = Vec::with_capacity(surf_rule.len());
        for ((&xi, &w), &n) in surf_rule
            .nodes
            .iter()
            .zip(&surf_rule.weights)
            .zip(&surf_rule.normals)
        {
            surface.push((xi, w, n * f.evaluate_unchecked(xi)));
        }
        let vol_rule = geometry.volume_rule(n_radial, orders);
        let mut volume = Vec::with_capacity(vol_rule.len());
        for (&xi, &w) in vol_rule.nodes.iter().zip(&vol_rule.weights) {
            volume.push((xi, w, crf_closed_form_at(f.stem(), xi)?));
        }
        Ok(BorelPompeiu {
            pair: geometry.pair,
            outer_radius: geometry.outer_radius(),
            surface,
            volume,
        })
    }

    fn guard(&self, x: Octonion, xi: Octonion) -> Result<()> {
        if singular_distance(self.pair.i(), x, xi) <= 0.05 * self.outer_radius {
            return Err(Error::SingularPair);
        }
        Ok(())
    }

    /// The boundary integral `∫ S_{f,I}(x, ξ) ds(ξ)`.
    pub fn surface_integral(&self, x: Octonion) -> Result<Octonion> {
        let i = self.pair.i();
        let mut acc = KahanSum::default();
        for &(xi, w, a) in &self.surface {
            self.guard(x, xi)?;
            acc.add(cauchy_kernel_value(i, x, xi, a)? * w);
        }
        Ok(acc.value())
    }

    /// The volume integral `∫ V_{f,I}(x, ξ) dv(ξ)`.
    pub fn volume_integral(&self, x: Octonion) -> Result<Octonion> {
        let i = self.pair.i();
        let mut acc = KahanSum::default();
        for &(xi, w, b) in &self.volume {
            self.guard(x, xi)?;
            acc.add(cauchy_kernel_value(i, x, xi, b)? * w);
        }
        Ok(acc.value())
    }

    /// Full reconstruction `f(x) ≈ ∫ S ds - ∫ V dv`.
    pub fn reconstruct(&self, x: Octonion) -> Result<Octonion> {
        Ok(self.surface_integral(x)? - self.volume_integral(x)?)
    }
}

/// Per-point entry of a reconstruction error table.
#[derive(Clone, Debug, Serialize)]
pub struct ReconstructionSample {
    pub x: [f64; 8],
    pub error: f64,
}

/// A JSON-serialisable reconstruction report.
#[derive(Clone, Debug, Serialize)]
pub struct ReconstructionReport {
    pub orders: SurfaceOrders,
    pub n_radial: usize,
    pub radius: f64,
    pub samples: Vec<ReconstructionSample>,
    pub max_error: f64,
}

impl ReconstructionReport {
    pub fn new(
        orders: SurfaceOrders,
        n_radial: usize,
        radius: f64,
        samples: Vec<ReconstructionSample>,
    ) -> ReconstructionReport {
        let max_error = samples.iter().map(|s| s.error).fold(0.0, f64::max);
        ReconstructionReport {
            orders,
            n_radial,
            radius,
            samples,
            max_error,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domain::PlaneDomain;
    use crate::poly::BivarPoly;
    use crate::slice::{example_family_on, identity, polynomial, StemFunction};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_oct<R: Rng>(rng: &mut R) -> Octonion {
        let mut c = [0.0; 8];
        for v in c.iter_mut() {
            *v = rng.gen_range(-1.0..1.0);
        }
        Octonion::new(c)
    }

    fn dom() -> PlaneDomain {
        PlaneDomain::rectangle(-4.0, 4.0, 4.0)
    }

    #[test]
    fn g_normal_zero_set() {
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        let i = ImaginaryUnit::random(&mut rng);
        // ξ on the slice, x on the conjugation sphere: zero.
        let xi = Octonion::real(0.7) + i.as_octonion() * 1.2;
        let k = ImaginaryUnit::random(&mut rng);
        let x = crate::octonion::sphere_point(xi, k);
        assert!(g_normal(i, xi, x) < 1e-10);
        // ξ off the slice: bounded below by |ξ_I^⊥|⁴.
        for _ in 0..50 {
            let xi = random_oct(&mut rng);
            let x = random_oct(&mut rng);
            let perp = (xi - project_to_slice(i, xi)).norm();
            assert!(g_normal(i, xi, x) >= perp.powi(4) - 1e-12);
        }
    }

    #[test]
    fn g_kernel_on_slice_is_squared_distance() {
        let mut rng = ChaCha8Rng::seed_from_u64(43);
        let i = ImaginaryUnit::random(&mut rng);
        for _ in 0..50 {
            let xi = random_oct(&mut rng);
            let y = Octonion::real(rng.gen_range(-1.0..1.0))
                + i.as_octonion() * rng.gen_range(-1.0..1.0);
            let got = g_kernel(i, xi, y);
            let want = (xi - y).norm_sq();
            assert!((got - Octonion::real(want)).norm() < 1e-12 * (1.0 + want));
        }
    }

    #[test]
    fn kernel_q_special_values() {
        let mut rng = ChaCha8Rng::seed_from_u64(45);
        let i = ImaginaryUnit::random(&mut rng);
        for _ in 0..30 {
            let xi = random_oct(&mut rng);
            let a = random_oct(&mut rng);
            // x = 0: Q = |ξ|⁴ a.
            let (q, _, _) = kernel_qmn(i, Octonion::ZERO, xi, a);
            assert!((q - a * xi.norm_sq().powi(2)).norm() < 1e-10 * (1.0 + a.norm()));
            // y ∈ C_I: Q(y, ξ, 1) = |y - ξ̄|⁴ and N = |y-ξ|²|y-ξ̄|².
            let y = Octonion::real(rng.gen_range(-1.0..1.0))
                + i.as_octonion() * rng.gen_range(-1.0..1.0);
            let (q, _, n) = kernel_qmn(i, y, xi, Octonion::ONE);
            let want_q = (y - xi.conj()).norm_sq().powi(2);
            assert!((q - Octonion::real(want_q)).norm() < 1e-10 * (1.0 + want_q));
            let want_n = (y - xi).norm_sq() * (y - xi.conj()).norm_sq();
            assert!((n - want_n).abs() < 1e-10 * (1.0 + want_n));
        }
    }

    #[test]
    fn integrand_restriction_to_slice_is_fueter_kernel() {
        // On C_I the integrand collapses to conj(ξ-y)/(2π²|ξ-y|⁴) (n f(ξ)).
        let mut rng = ChaCha8Rng::seed_from_u64(47);
        let pair = OrthoUnitPair::random(&mut rng);
        let i = pair.i();
        let f = polynomial(&[random_oct(&mut rng), random_oct(&mut rng)], dom());
        for _ in 0..40 {
            let xi = random_oct(&mut rng) * 1.3;
            let normal = ImaginaryUnit::random(&mut rng).as_octonion();
            let y = Octonion::real(rng.gen_range(-1.0..1.0))
                + i.as_octonion() * rng.gen_range(-1.0..1.0);
            if g_normal(i, xi, y) < 1e-3 {
                continue;
            }
            let got = surface_integrand(&f, &pair, y, xi, normal).unwrap();
            let a = normal * f.evaluate_unchecked(xi);
            let want = ((xi - y).conj() * a) / (2.0 * PI * PI * (xi - y).norm_sq().powi(2));
            assert!(
                (got - want).norm() < 1e-11 * (1.0 + want.norm()),
                "residual {}",
                (got - want).norm()
            );
        }
    }

    #[test]
    fn integrand_matches_slice_product_route() {
        // The M/N² form equals the slice-product definition
        // N(g)^{-2} · (g^c)^{•2} · ((ξ̄ - x̄) a) evaluated with stem algebra.
        let mut rng = ChaCha8Rng::seed_from_u64(49);
        let pair = OrthoUnitPair::random(&mut rng);
        let i = pair.i();
        for _ in 0..25 {
            let xi = random_oct(&mut rng) * 1.2;
            let a = random_oct(&mut rng);
            let xi_i = project_to_slice(i, xi);
            let perp_sq = (xi - xi_i).norm_sq();
            // g as a slice function of x: (ξ_I - x)·(ξ̄_I - x̄) + |ξ_I^⊥|².
            let lin1 = StemFunction::from_polys(
                BivarPoly::from_terms(&[(0, 0, xi_i), (1, 0, -Octonion::ONE)]),
                BivarPoly::from_terms(&[(0, 1, -Octonion::ONE)]),
                dom(),
            )
            .induce();
            let lin2 = StemFunction::from_polys(
                BivarPoly::from_terms(&[(0, 0, xi_i.conj()), (1, 0, -Octonion::ONE)]),
                BivarPoly::from_terms(&[(0, 1, Octonion::ONE)]),
                dom(),
            )
            .induce();
            let g = lin1.product(&lin2).unwrap();
            // add the constant |ξ_I^⊥|²
            let g = StemFunction::from_fields(
                {
                    let base = g.stem().f1().clone();
                    crate::slice::PlaneField::from_fn(move |s, t| {
                        base.value(s, t) + Octonion::real(perp_sq)
                    })
                },
                g.stem().f2().clone(),
                dom(),
            )
            .induce();
            // tail factor (ξ̄ - x̄)·a as a slice function of x.
            let tail = StemFunction::from_polys(
                BivarPoly::from_terms(&[(0, 0, xi.conj() * a), (1, 0, -a)]),
                BivarPoly::from_terms(&[(0, 1, a)]),
                dom(),
            )
            .induce();
            let gc = g.conjugate();
            let gc2 = gc.product(&gc).unwrap();
            let n = g.normal();
            let x = random_oct(&mut rng) * 1.1;
            if g_normal(i, xi, x) < 1e-2 {
                continue;
            }
            let n_val = n.evaluate_unchecked(x).re();
            let prod = gc2.product(&tail).unwrap().evaluate_unchecked(x);
            let want = prod / (2.0 * PI * PI * n_val * n_val);
            let got = cauchy_kernel_value(i, x, xi, a).unwrap();
            assert!(
                (got - want).norm() < 1e-9 * (1.0 + want.norm()),
                "residual {}",
                (got - want).norm()
            );
        }
    }

    #[test]
    fn integrand_is_slice_in_x() {
        let mut rng = ChaCha8Rng::seed_from_u64(51);
        let pair = OrthoUnitPair::random(&mut rng);
        let i = pair.i();
        let units = crate::domain::sphere_units(10);
        let f = polynomial(&[random_oct(&mut rng), random_oct(&mut rng)], dom());
        for _ in 0..10 {
            let xi = random_oct(&mut rng) + Octonion::real(3.0);
            let normal = ImaginaryUnit::random(&mut rng).as_octonion();
            let a = normal * f.evaluate_unchecked(xi);
            let small = PlaneDomain::disc(0.8);
            let report = crate::slice::sliceness_check(
                move |x| cauchy_kernel_value(i, x, xi, a).unwrap_or(Octonion::ZERO),
                &small,
                6,
                6,
                &units,
                1e-8,
            );
            assert!(report.pass, "residual {}", report.max_residual);
        }
    }

    #[test]
    fn volume_integrand_vanishes_for_regular_functions() {
        let mut rng = ChaCha8Rng::seed_from_u64(53);
        let pair = OrthoUnitPair::random(&mut rng);
        let f = example_family_on(
            random_oct(&mut rng),
            random_oct(&mut rng),
            random_oct(&mut rng),
            Octonion::ZERO,
            dom(),
        );
        for _ in 0..20 {
            let xi = pair.embedding().apply([
                rng.gen_range(-1.0..1.0),
                rng.gen_range(0.2..1.0),
                rng.gen_range(0.2..1.0),
                rng.gen_range(-1.0..1.0),
            ]);
            let x = random_oct(&mut rng) * 2.5;
            if g_normal(pair.i(), xi, x) < 1e-2 {
                continue;
            }
            let v = volume_integrand(&f, &pair, x, xi).unwrap();
            assert!(v.norm() < 1e-10);
        }
    }

    #[test]
    fn borel_pompeiu_reconstructs_interior_values() {
        let mut rng = ChaCha8Rng::seed_from_u64(55);
        let pair = OrthoUnitPair::random(&mut rng);
        let geom = SliceBallGeometry::ball(pair, 0.0, 1.0);
        let orders = SurfaceOrders {
            n_chi: 16,
            n_theta: 16,
            n_phi: 32,
        };
        // Constant: surface integral alone gives c back.
        let c = crate::slice::constant(Octonion::J + Octonion::L * 0.5, dom());
        let bp = BorelPompeiu::prepare(&c, &geom, orders, 8).unwrap();
        let x = Octonion::real(0.3) + Octonion::L * 0.2;
        let got = bp.reconstruct(x).unwrap();
        let want = c.evaluate_unchecked(x);
        assert!((got - want).norm() < 1e-6, "residual {}", (got - want).norm());

        // Example family at the spec point.
        let f = example_family_on(
            random_oct(&mut rng),
            random_oct(&mut rng),
            random_oct(&mut rng),
            Octonion::ZERO,
            dom(),
        );
        let bp = BorelPompeiu::prepare(&f, &geom, orders, 8).unwrap();
        let want = f.evaluate_unchecked(x);
        let got = bp.reconstruct(x).unwrap();
        assert!(
            (got - want).norm() < 1e-4 * (1.0 + want.norm()),
            "residual {}",
            (got - want).norm()
        );
        // Surface alone also suffices for the regular f.
        let got = bp.surface_integral(x).unwrap();
        assert!((got - want).norm() < 1e-4 * (1.0 + want.norm()));

        // Identity needs the volume correction.
        let id = identity(dom());
        let bp = BorelPompeiu::prepare(&id, &geom, orders, 8).unwrap();
        let got_full = bp.reconstruct(x).unwrap();
        let got_surface = bp.surface_integral(x).unwrap();
        assert!((got_full - x).norm() < 1e-4);
        assert!((got_surface - x).norm() > 1e-2);
    }

    #[test]
    fn exterior_surface_integral_vanishes() {
        let mut rng = ChaCha8Rng::seed_from_u64(57);
        let pair = OrthoUnitPair::random(&mut rng);
        let geom = SliceBallGeometry::ball(pair, 0.0, 1.0);
        let orders = SurfaceOrders {
            n_chi: 16,
            n_theta: 16,
            n_phi: 32,
        };
        let f = example_family_on(
            random_oct(&mut rng),
            random_oct(&mut rng),
            random_oct(&mut rng),
            Octonion::ZERO,
            dom(),
        );
        let bp = BorelPompeiu::prepare(&f, &geom, orders, 8).unwrap();
        for _ in 0..5 {
            let mut x = random_oct(&mut rng);
            x = x * (1.8 / x.norm());
            let got = bp.surface_integral(x).unwrap();
            assert!(got.norm() < 5e-4, "exterior residual {}", got.norm());
        }
    }

    #[test]
    fn singular_guard_refuses_near_nodes() {
        let mut rng = ChaCha8Rng::seed_from_u64(59);
        let pair = OrthoUnitPair::random(&mut rng);
        let geom = SliceBallGeometry::ball(pair, 0.0, 1.0);
        let f = identity(dom());
        let bp = BorelPompeiu::prepare(
            &f,
            &geom,
            SurfaceOrders {
                n_chi: 8,
                n_theta: 8,
                n_phi: 16,
            },
            4,
        )
        .unwrap();
        // A quadrature node itself sits on the singular set.
        let x = bp.surface[0].0;
        assert!(matches!(bp.surface_integral(x), Err(Error::SingularPair)));
    }
}
