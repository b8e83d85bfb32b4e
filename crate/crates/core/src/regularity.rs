//! Residual checkers for the systems characterising slice Fueter-regularity:
//! the Vekua system on stems, the four-equation system on O(3)-stems, the
//! substituted G- and H-forms, the generalised Vekua system, and the
//! Laplacian identities, plus a grid classifier producing JSON-serialisable
//! reports.

use crate::domain::PlaneDomain;
use crate::o3::O3StemFunction;
use crate::octonion::Octonion;
use crate::operators::dbar_stem;
use crate::slice::{PlaneField, SliceFunction, StemFunction};
use crate::{fd, Error, Result};
use serde::Serialize;

/// First residual of the Vekua system: `F1_α - F2_β - 2F2/β`; second:
/// `F1_β + F2_α`. Both vanish on stems of slice Fueter-regular functions.
pub fn vekua_residual(stem: &StemFunction, alpha: f64, beta: f64) -> Result<(Octonion, Octonion)> {
    if beta == 0.0 {
        return Err(Error::RealAxis);
    }
    let d = stem.d1(alpha, beta);
    let (_, f2) = stem.eval(alpha, beta);
    Ok((d.f1_a - d.f2_b - f2 * (2.0 / beta), d.f1_b + d.f2_a))
}

/// The four residuals of the first-order system on an O(3)-stem, evaluated
/// with fourth-order finite differences in the four coordinates.
pub fn o3_system_residual(o3: &O3StemFunction, v: [f64; 4]) -> [Octonion; 4] {
    // partials[h][k] = ∂F_k/∂x_h
    let mut partials = [[Octonion::ZERO; 4]; 4];
    for h in 0..4 {
        let step = fd::step(v[h]);
        for k in 0..4 {
            partials[h][k] = fd::d1(
                |t| {
                    let mut w = v;
                    w[h] = t;
                    o3.eval(w)[k]
                },
                v[h],
                step,
            );
        }
    }
    [
        partials[0][0] - partials[1][1] - partials[2][2] - partials[3][3],
        partials[1][0] + partials[0][1] - partials[3][2] + partials[2][3],
        partials[2][0] + partials[3][1] + partials[0][2] - partials[1][3],
        partials[3][0] - partials[2][1] + partials[1][2] + partials[0][3],
    ]
}

/// Residuals of the substituted form with `F_2 = x_1 G_2`:
/// `(F1_α - x_1 ∂G2/∂x_1 - 3G2, F1_β + x_1 ∂G2/∂x_0)`.
pub fn vekua_g2_residual(
    f1: &PlaneField,
    g2: &PlaneField,
    alpha: f64,
    beta: f64,
) -> (Octonion, Octonion) {
    let (f1_a, f1_b) = f1.d1(alpha, beta);
    let (g2_a, g2_b) = g2.d1(alpha, beta);
    let g2_v = g2.value(alpha, beta);
    (f1_a - g2_b * beta - g2_v * 3.0, f1_b + g2_a * beta)
}

/// Residuals of the even-variable form with `F_1 = H_1(x_0, x_1²)`,
/// `F_2 = x_1 H_2(x_0, x_1²)` on `D* = {x_1 >= 0 : (x_0, √x_1) ∈ D}`:
/// `(H1_α - 2 x_1 ∂H2/∂x_1 - 3H2, 2 ∂H1/∂x_1 + ∂H2/∂x_0)`.
pub fn vekua_h_residual(
    h1: &PlaneField,
    h2: &PlaneField,
    domain: &PlaneDomain,
    alpha: f64,
    beta: f64,
) -> Result<(Octonion, Octonion)> {
    if beta < 0.0 || !domain.contains_plane(alpha, beta.sqrt()) {
        return Err(Error::OutOfDomain);
    }
    let (h1_a, h1_b) = h1.d1(alpha, beta);
    let (h2_a, h2_b) = h2.d1(alpha, beta);
    let h2_v = h2.value(alpha, beta);
    Ok((
        h1_a - h2_b * (2.0 * beta) - h2_v * 3.0,
        h1_b * 2.0 + h2_a,
    ))
}

/// Coefficients `(a, b, c, d)` of a generalised Vekua system; must be
/// even-odd-odd-even in the second variable.
#[derive(Clone)]
pub struct VekuaData {
    pub a: PlaneField,
    pub b: PlaneField,
    pub c: PlaneField,
    pub d: PlaneField,
}

impl VekuaData {
    pub fn zero() -> VekuaData {
        VekuaData {
            a: PlaneField::constant(Octonion::ZERO),
            b: PlaneField::constant(Octonion::ZERO),
            c: PlaneField::constant(Octonion::ZERO),
            d: PlaneField::constant(Octonion::ZERO),
        }
    }

    /// The coefficient vector `(0, -2/x_1, 0, 0)` whose system reproduces
    /// the Fueter-regularity Vekua system (the `2F_2/x_1` term moved to the
    /// left-hand side).
    pub fn fueter() -> VekuaData {
        VekuaData {
            b: PlaneField::from_fn(|_, beta| Octonion::real(-2.0 / beta)),
            ..VekuaData::zero()
        }
    }

    /// Max defect of the even-odd-odd-even parity on a symmetric grid.
    pub fn parity_residual(&self, domain: &PlaneDomain, n_alpha: usize, n_beta: usize) -> f64 {
        let mut worst = 0.0f64;
        for (alpha, beta) in domain.grid_off_axis(n_alpha, n_beta) {
            let pairs = [
                (&self.a, 1.0),
                (&self.b, -1.0),
                (&self.c, -1.0),
                (&self.d, 1.0),
            ];
            for (field, sign) in pairs {
                let plus = field.value(alpha, beta);
                let minus = field.value(alpha, -beta);
                worst = worst.max((minus - plus * sign).norm());
            }
        }
        worst
    }
}

/// Residuals of the generalised Vekua system
/// `(F1_α - F2_β + aF1 + bF2, F1_β + F2_α + cF1 + dF2)`.
pub fn generalized_vekua_residual(
    stem: &StemFunction,
    v: &VekuaData,
    alpha: f64,
    beta: f64,
) -> Result<(Octonion, Octonion)> {
    if beta == 0.0 {
        return Err(Error::RealAxis);
    }
    let d = stem.d1(alpha, beta);
    let (f1, f2) = stem.eval(alpha, beta);
    let r1 = d.f1_a - d.f2_b + v.a.value(alpha, beta) * f1 + v.b.value(alpha, beta) * f2;
    let r2 = d.f1_b + d.f2_a + v.c.value(alpha, beta) * f1 + v.d.value(alpha, beta) * f2;
    Ok((r1, r2))
}

/// Residuals of the Laplacian identities
/// `ΔF_1 = -(2/x_1) ∂F_1/∂x_1` and `ΔF_2 = (2/x_1²)F_2 - (2/x_1) ∂F_2/∂x_1`,
/// which hold on stems of slice Fueter-regular functions.
pub fn laplacian_identity_residual(
    stem: &StemFunction,
    alpha: f64,
    beta: f64,
) -> Result<(f64, f64)> {
    if beta == 0.0 {
        return Err(Error::RealAxis);
    }
    let (f1_aa, _, f1_bb) = stem.f1().d2(alpha, beta);
    let (f2_aa, _, f2_bb) = stem.f2().d2(alpha, beta);
    let (_, f1_b) = stem.f1().d1(alpha, beta);
    let (_, f2_b) = stem.f2().d1(alpha, beta);
    let (_, f2) = stem.eval(alpha, beta);
    let r1 = f1_aa + f1_bb + f1_b * (2.0 / beta);
    let r2 = f2_aa + f2_bb - f2 * (2.0 / (beta * beta)) + f2_b * (2.0 / beta);
    Ok((r1.norm(), r2.norm()))
}

/// Grid specification echoed in the reports.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct GridSpec {
    pub n_alpha: usize,
    pub n_beta: usize,
}

/// Sweep result for one predicate over a grid.
#[derive(Clone, Debug, Serialize)]
pub struct RegularityReport {
    pub predicate: String,
    pub grid: GridSpec,
    pub tol: f64,
    pub max_residual: f64,
    pub argmax_point: [f64; 2],
    pub pass: bool,
}

impl RegularityReport {
    pub fn from_sweep(
        predicate: impl Into<String>,
        grid: GridSpec,
        tol: f64,
        points: impl IntoIterator<Item = ((f64, f64), f64)>,
    ) -> RegularityReport {
        let mut max_residual = 0.0f64;
        let mut argmax = [f64::NAN, f64::NAN];
        for ((alpha, beta), res) in points {
            if res > max_residual {
                max_residual = res;
                argmax = [alpha, beta];
            }
        }
        RegularityReport {
            predicate: predicate.into(),
            grid,
            tol,
            max_residual,
            argmax_point: argmax,
            pass: max_residual <= tol,
        }
    }
}

/// Sweeps the Vekua residual of a stem over the off-axis grid.
pub fn vekua_sweep(stem: &StemFunction, grid: GridSpec, tol: f64) -> RegularityReport {
    let pts = stem.domain().grid_off_axis(grid.n_alpha, grid.n_beta);
    RegularityReport::from_sweep(
        "vekua",
        grid,
        tol,
        pts.into_iter().filter_map(|(a, b)| {
            if stem.check_guard(a, b).is_err() {
                return None;
            }
            let (r1, r2) = vekua_residual(stem, a, b).ok()?;
            Some(((a, b), r1.norm().max(r2.norm())))
        }),
    )
}

/// Classification flags for a slice function on a grid.
#[derive(Clone, Debug, Serialize)]
pub struct Classification {
    pub slice_regular: RegularityReport,
    pub fueter_regular: RegularityReport,
    pub constant: RegularityReport,
}

impl Classification {
    pub fn flags(&self) -> (bool, bool, bool) {
        (
            self.slice_regular.pass,
            self.fueter_regular.pass,
            self.constant.pass,
        )
    }
}

/// Classifies a slice function: slice regular (`∂̄F = 0`), slice
/// Fueter-regular (Vekua residual), constant.
pub fn classify(f: &SliceFunction, grid: GridSpec, tol: f64) -> Classification {
    let stem = f.stem();
    let pts = stem.domain().grid_off_axis(grid.n_alpha, grid.n_beta);
    let usable: Vec<(f64, f64)> = pts
        .into_iter()
        .filter(|&(a, b)| stem.check_guard(a, b).is_ok())
        .collect();

    let slice_regular = RegularityReport::from_sweep(
        "slice-regular",
        grid,
        tol,
        usable.iter().map(|&(a, b)| {
            let (g1, g2) = dbar_stem(stem, a, b);
            ((a, b), g1.norm().max(g2.norm()))
        }),
    );
    let fueter_regular = vekua_sweep(stem, grid, tol);
    let reference = usable
        .first()
        .map(|&(a, b)| {
            let (f1, f2) = stem.eval(a, b);
            f1 + Octonion::I * f2
        })
        .unwrap_or(Octonion::ZERO);
    let constant = RegularityReport::from_sweep(
        "constant",
        grid,
        tol,
        usable.iter().map(|&(a, b)| {
            let (f1, f2) = stem.eval(a, b);
            ((a, b), (f1 + Octonion::I * f2 - reference).norm())
        }),
    );
    Classification {
        slice_regular,
        fueter_regular,
        constant,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::o3::phi_inverse;
    use crate::poly::BivarPoly;
    use crate::slice::{example_family, identity, polynomial};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn dom() -> PlaneDomain {
        PlaneDomain::rectangle(-3.0, 3.0, 3.0)
    }

    fn random_oct<R: Rng>(rng: &mut R) -> Octonion {
        let mut c = [0.0; 8];
        for v in c.iter_mut() {
            *v = rng.gen_range(-1.0..1.0);
        }
        Octonion::new(c)
    }

    #[test]
    fn vekua_on_worked_stems() {
        // F1 = 3 x0 b, F2 = x1 b.
        let b = Octonion::LI + Octonion::J * 0.5;
        let stem = StemFunction::from_polys(
            BivarPoly::from_terms(&[(1, 0, b * 3.0)]),
            BivarPoly::from_terms(&[(0, 1, b)]),
            dom(),
        );
        let (r1, r2) = vekua_residual(&stem, 0.7, 0.4).unwrap();
        assert!(r1.norm() < 1e-12 && r2.norm() < 1e-12);

        // F1 = 3 x0² a - x1² a, F2 = 2 x0 x1 a.
        let a = Octonion::K - Octonion::L * 2.0;
        let stem = StemFunction::from_polys(
            BivarPoly::from_terms(&[(2, 0, a * 3.0), (0, 2, -a)]),
            BivarPoly::from_terms(&[(1, 1, a * 2.0)]),
            dom(),
        );
        let (r1, r2) = vekua_residual(&stem, -0.9, 1.1).unwrap();
        assert!(r1.norm() < 1e-12 && r2.norm() < 1e-12);

        // Identity stem: R1 = 1 - 1 - 2 = -2, R2 = 0.
        let stem = StemFunction::identity(dom());
        let (r1, r2) = vekua_residual(&stem, 0.2, 0.5).unwrap();
        assert!((r1 + Octonion::real(2.0)).norm() < 1e-12);
        assert!(r2.norm() < 1e-12);

        assert!(matches!(
            vekua_residual(&stem, 0.2, 0.0),
            Err(Error::RealAxis)
        ));
    }

    #[test]
    fn o3_system_on_extensions() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        // Radial extension of a Fueter-regular stem solves the system.
        let f = example_family(
            random_oct(&mut rng),
            random_oct(&mut rng),
            random_oct(&mut rng),
            Octonion::ZERO,
        );
        let o3 = phi_inverse(f.stem());
        for _ in 0..10 {
            let v = [
                rng.gen_range(-1.0..1.0),
                rng.gen_range(0.3..1.0),
                rng.gen_range(0.3..1.0),
                rng.gen_range(0.3..1.0),
            ];
            let res = o3_system_residual(&o3, v);
            for r in res {
                assert!(r.norm() < 1e-8, "residual {}", r.norm());
            }
        }
        // Identity components (x0, x1, x2, x3): first equation 1-1-1-1 = -2.
        let id = O3StemFunction::from_fn(
            |v| {
                [
                    Octonion::real(v[0]),
                    Octonion::real(v[1]),
                    Octonion::real(v[2]),
                    Octonion::real(v[3]),
                ]
            },
            dom(),
        );
        let res = o3_system_residual(&id, [0.3, 0.4, -0.2, 0.6]);
        assert!((res[0] + Octonion::real(2.0)).norm() < 1e-9);
        for r in &res[1..] {
            assert!(r.norm() < 1e-9);
        }
        // Constant (c, 0, 0, 0): all zero.
        let c = O3StemFunction::from_fn(|_| [Octonion::LK, Octonion::ZERO, Octonion::ZERO, Octonion::ZERO], dom());
        let res = o3_system_residual(&c, [0.3, 0.4, -0.2, 0.6]);
        for r in res {
            assert!(r.norm() < 1e-10);
        }
    }

    #[test]
    fn substituted_forms() {
        let b = Octonion::I - Octonion::LJ;
        // F1 = 3 x0 b, G2 = b: (0, 0).
        let f1 = PlaneField::from_poly(BivarPoly::from_terms(&[(1, 0, b * 3.0)]));
        let g2 = PlaneField::constant(b);
        let (r1, r2) = vekua_g2_residual(&f1, &g2, 0.4, 0.8);
        assert!(r1.norm() < 1e-12 && r2.norm() < 1e-12);

        // H1 = 3 x0 b, H2 = b: (0, 0) on D*.
        let h1 = PlaneField::from_poly(BivarPoly::from_terms(&[(1, 0, b * 3.0)]));
        let h2 = PlaneField::constant(b);
        let (r1, r2) = vekua_h_residual(&h1, &h2, &dom(), 0.4, 0.49).unwrap();
        assert!(r1.norm() < 1e-12 && r2.norm() < 1e-12);

        // H1 = x1 (second coordinate), H2 = 0: second residual 2.
        let h1 = PlaneField::from_poly(BivarPoly::from_terms(&[(0, 1, Octonion::ONE)]));
        let h2 = PlaneField::constant(Octonion::ZERO);
        let (_, r2) = vekua_h_residual(&h1, &h2, &dom(), 0.4, 0.25).unwrap();
        assert!((r2 - Octonion::real(2.0)).norm() < 1e-12);

        // Outside D*.
        assert!(vekua_h_residual(&h1, &h2, &dom(), 0.4, -0.1).is_err());
    }

    #[test]
    fn generalized_vekua() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        // V = 0 with a holomorphic stem reduces to Cauchy-Riemann.
        let f = polynomial(&[random_oct(&mut rng), random_oct(&mut rng), random_oct(&mut rng)], dom());
        let v0 = VekuaData::zero();
        let (r1, r2) = generalized_vekua_residual(f.stem(), &v0, 0.3, 0.6).unwrap();
        assert!(r1.norm() < 1e-12 && r2.norm() < 1e-12);

        // V = (0, -2/x1, 0, 0) annihilates Fueter-regular stems and matches
        // the plain Vekua residual on any stem.
        let vf = VekuaData::fueter();
        let fam = example_family(
            random_oct(&mut rng),
            random_oct(&mut rng),
            random_oct(&mut rng),
            random_oct(&mut rng),
        );
        let (r1, r2) = generalized_vekua_residual(fam.stem(), &vf, 0.3, 0.6).unwrap();
        assert!(r1.norm() < 1e-10 && r2.norm() < 1e-10);
        let (p1, p2) = generalized_vekua_residual(f.stem(), &vf, -0.4, 0.9).unwrap();
        let (q1, q2) = vekua_residual(f.stem(), -0.4, 0.9).unwrap();
        assert!((p1 - q1).norm() < 1e-12 && (p2 - q2).norm() < 1e-12);

        // Parity of the residual functions: R1 even, R2 odd in x1.
        let stem = f.stem();
        for _ in 0..20 {
            let a = rng.gen_range(-1.0..1.0);
            let b = rng.gen_range(0.1..1.0);
            let (r1p, r2p) = generalized_vekua_residual(stem, &vf, a, b).unwrap();
            let (r1m, r2m) = generalized_vekua_residual(stem, &vf, a, -b).unwrap();
            assert!((r1p - r1m).norm() < 1e-12 * (1.0 + r1p.norm()));
            assert!((r2p + r2m).norm() < 1e-12 * (1.0 + r2p.norm()));
        }

        // Coefficient parity checker.
        assert!(vf.parity_residual(&dom(), 8, 8) < 1e-12);
    }

    #[test]
    fn laplacian_identities() {
        let mut rng = ChaCha8Rng::seed_from_u64(25);
        let fam = example_family(
            random_oct(&mut rng),
            random_oct(&mut rng),
            random_oct(&mut rng),
            Octonion::ZERO,
        );
        for _ in 0..10 {
            let a = rng.gen_range(-1.0..1.0);
            let b = rng.gen_range(0.2..1.0);
            let (r1, r2) = laplacian_identity_residual(fam.stem(), a, b).unwrap();
            assert!(r1 < 1e-6 && r2 < 1e-6, "({r1}, {r2})");
        }
        // Constant stem: identically zero.
        let c = StemFunction::constant(Octonion::LK, dom());
        let (r1, r2) = laplacian_identity_residual(&c, 0.3, 0.5).unwrap();
        assert!(r1 < 1e-12 && r2 < 1e-12);
        // The identities are necessary, not sufficient: the identity stem
        // fails the Vekua system yet satisfies both (brute substitution
        // gives ΔF2 - 2F2/β² + (2/β)F2_β = -2/β + 2/β = 0).
        let id = StemFunction::identity(dom());
        let (r1, r2) = laplacian_identity_residual(&id, 0.3, 0.5).unwrap();
        assert!(r1 < 1e-12 && r2 < 1e-10);
        // A stem violating them: F1 = β².
        let quad = StemFunction::from_polys(
            BivarPoly::from_terms(&[(0, 2, Octonion::ONE)]),
            BivarPoly::zero(),
            dom(),
        );
        let (r1, _) = laplacian_identity_residual(&quad, 0.3, 0.5).unwrap();
        assert!(r1 > 1.0);
    }

    #[test]
    fn classify_corpus_members() {
        let grid = GridSpec {
            n_alpha: 12,
            n_beta: 12,
        };
        let mut rng = ChaCha8Rng::seed_from_u64(27);
        // Constant: all three flags.
        let c = crate::slice::constant(Octonion::J, dom());
        let flags = classify(&c, grid, 1e-8).flags();
        assert_eq!(flags, (true, true, true));
        // Identity: slice regular only.
        let id = identity(dom());
        let flags = classify(&id, grid, 1e-8).flags();
        assert_eq!(flags, (true, false, false));
        // Family with (a,b) ≠ 0: Fueter-regular only.
        let fam = crate::slice::example_family_on(
            random_oct(&mut rng),
            random_oct(&mut rng),
            Octonion::ZERO,
            Octonion::ZERO,
            dom(),
        );
        let flags = classify(&fam, grid, 1e-8).flags();
        assert_eq!(flags, (false, true, false));
        // slice-regular ∧ Fueter-regular ⇒ constant on this corpus.
        for f in [&c, &id, &fam] {
            let (sr, fr, ct) = classify(f, grid, 1e-8).flags();
            if sr && fr {
                assert!(ct);
            }
        }
    }

    #[test]
    fn report_serialises() {
        let id = identity(dom());
        let rep = vekua_sweep(
            id.stem(),
            GridSpec {
                n_alpha: 6,
                n_beta: 6,
            },
            1e-8,
        );
        assert!(!rep.pass);
        let json = serde_json::to_string(&rep).unwrap();
        for key in ["predicate", "grid", "tol", "max_residual", "argmax_point", "pass"] {
            assert!(json.contains(key), "missing {key} in {json}");
        }
    }
}
