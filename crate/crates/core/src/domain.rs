//! Conjugation-symmetric plane domains and their circularisations, plus the
//! sampling grids used by the residual sweeps.

use crate::octonion::{ImaginaryUnit, Octonion};
use serde::{Deserialize, Serialize};

/// An open subset `D` of the plane, invariant under `(α, β) ↦ (α, -β)`.
/// The circularisation `Ω_D = {α + βI : (α, β) ∈ D, I ∈ S}` is the domain of
/// the induced slice functions.
#[derive(Clone, Copy, Debug, Serialize, Deserialize, PartialEq)]
pub enum DomainKind {
    /// `(α - center)² + β² < radius²`, centred on the real axis.
    Disc { center: f64, radius: f64 },
    /// `r_inner < ((α - center)² + β²)^(1/2) < r_outer`.
    Annulus {
        center: f64,
        r_inner: f64,
        r_outer: f64,
    },
    /// `α ∈ (alpha_min, alpha_max)`, `|β| < beta_max`.
    Rectangle {
        alpha_min: f64,
        alpha_max: f64,
        beta_max: f64,
    },
}

#[derive(Clone, Copy, Debug, Serialize, Deserialize, PartialEq)]
pub struct PlaneDomain {
    pub kind: DomainKind,
    /// When set, the real axis `β = 0` is removed from the domain
    /// (needed for stems with a singular part along `R`).
    pub exclude_real_axis: bool,
}

impl PlaneDomain {
    pub fn disc(radius: f64) -> PlaneDomain {
        PlaneDomain {
            kind: DomainKind::Disc {
                center: 0.0,
                radius,
            },
            exclude_real_axis: false,
        }
    }

    pub fn disc_at(center: f64, radius: f64) -> PlaneDomain {
        PlaneDomain {
            kind: DomainKind::Disc { center, radius },
            exclude_real_axis: false,
        }
    }

    pub fn annulus(r_inner: f64, r_outer: f64) -> PlaneDomain {
        PlaneDomain {
            kind: DomainKind::Annulus {
                center: 0.0,
                r_inner,
                r_outer,
            },
            exclude_real_axis: false,
        }
    }

    pub fn rectangle(alpha_min: f64, alpha_max: f64, beta_max: f64) -> PlaneDomain {
        PlaneDomain {
            kind: DomainKind::Rectangle {
                alpha_min,
                alpha_max,
                beta_max,
            },
            exclude_real_axis: false,
        }
    }

    pub fn without_real_axis(mut self) -> PlaneDomain {
        self.exclude_real_axis = true;
        self
    }

    pub fn contains_plane(&self, alpha: f64, beta: f64) -> bool {
        if self.exclude_real_axis && beta == 0.0 {
            return false;
        }
        match self.kind {
            DomainKind::Disc { center, radius } => {
                (alpha - center).powi(2) + beta * beta < radius * radius
            }
            DomainKind::Annulus {
                center,
                r_inner,
                r_outer,
            } => {
                let d2 = (alpha - center).powi(2) + beta * beta;
                d2 > r_inner * r_inner && d2 < r_outer * r_outer
            }
            DomainKind::Rectangle {
                alpha_min,
                alpha_max,
                beta_max,
            } => alpha > alpha_min && alpha < alpha_max && beta.abs() < beta_max,
        }
    }

    /// Membership of `x` in the circularisation, via `(Re x, |Im x|) ∈ D`.
    pub fn contains(&self, x: Octonion) -> bool {
        self.contains_plane(x.re(), x.im().norm())
    }

    /// Bounding box `(alpha_min, alpha_max, beta_max)` of the upper half of `D`.
    pub fn bounding_box(&self) -> (f64, f64, f64) {
        match self.kind {
            DomainKind::Disc { center, radius } => (center - radius, center + radius, radius),
            DomainKind::Annulus {
                center, r_outer, ..
            } => (center - r_outer, center + r_outer, r_outer),
            DomainKind::Rectangle {
                alpha_min,
                alpha_max,
                beta_max,
            } => (alpha_min, alpha_max, beta_max),
        }
    }

    /// Distance from a plane point to the boundary of `D` (ignoring the
    /// removed real axis), used to flag boundary-layer grid points.
    pub fn boundary_distance(&self, alpha: f64, beta: f64) -> f64 {
        match self.kind {
            DomainKind::Disc { center, radius } => {
                let r = ((alpha - center).powi(2) + beta * beta).sqrt();
                radius - r
            }
            DomainKind::Annulus {
                center,
                r_inner,
                r_outer,
            } => {
                let r = ((alpha - center).powi(2) + beta * beta).sqrt();
                (r_outer - r).min(r - r_inner)
            }
            DomainKind::Rectangle {
                alpha_min,
                alpha_max,
                beta_max,
            } => (alpha - alpha_min)
                .min(alpha_max - alpha)
                .min(beta_max - beta.abs()),
        }
    }

    /// Interior tensor grid over the upper half `β >= 0` of `D`. Points on
    /// the real axis are kept unless the domain excludes them.
    pub fn grid(&self, n_alpha: usize, n_beta: usize) -> Vec<(f64, f64)> {
        let (a0, a1, bmax) = self.bounding_box();
        let mut pts = Vec::new();
        for ia in 0..n_alpha {
            let alpha = a0 + (a1 - a0) * (ia as f64 + 0.5) / n_alpha as f64;
            for ib in 0..n_beta {
                let beta = bmax * (ib as f64 + 0.5) / n_beta as f64;
                if self.contains_plane(alpha, beta) {
                    pts.push((alpha, beta));
                }
            }
        }
        pts
    }

    /// Like [`grid`](Self::grid) but guaranteed off the real axis.
    pub fn grid_off_axis(&self, n_alpha: usize, n_beta: usize) -> Vec<(f64, f64)> {
        self.grid(n_alpha, n_beta)
            .into_iter()
            .filter(|&(_, beta)| beta > 1e-6)
            .collect()
    }
}

/// Deterministic low-discrepancy point set on the 6-sphere of imaginary
/// units: a Weyl lattice in the unit cube pushed through Box-Muller pairs.
pub fn sphere_units(n: usize) -> Vec<ImaginaryUnit> {
    // sqrt of the first eight primes, fractional parts: a Kronecker sequence.
    const ALPHAS: [f64; 8] = [
        1.4142135623730951,
        1.7320508075688772,
        2.23606797749979,
        2.6457513110645907,
        3.3166247903554,
        3.605551275463989,
        4.123105625617661,
        4.358898943540674,
    ];
    let mut out = Vec::with_capacity(n);
    let mut k = 1usize;
    while out.len() < n {
        let u: Vec<f64> = ALPHAS
            .iter()
            .map(|a| {
                let v = (k as f64 * a).fract();
                v.clamp(1e-12, 1.0 - 1e-12)
            })
            .collect();
        let mut g = [0.0f64; 8];
        for p in 0..4 {
            let r = (-2.0 * u[2 * p].ln()).sqrt();
            let th = std::f64::consts::TAU * u[2 * p + 1];
            g[2 * p] = r * th.cos();
            g[2 * p + 1] = r * th.sin();
        }
        // Drop the real component; normalise the remaining 7.
        let mut c = [0.0f64; 8];
        c[1..].copy_from_slice(&g[1..]);
        if let Ok(unit) = ImaginaryUnit::new(Octonion::new(c)) {
            out.push(unit);
        }
        k += 1;
    }
    out
}
