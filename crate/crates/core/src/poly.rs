//! Polynomial helpers: dense bivariate polynomials with octonion
//! coefficients (stem functions, Fueter polynomials restricted to a slice),
//! sparse four-variable polynomials with quaternion coefficients (rational
//! kernel differentiation), and a small dense linear solver.

use crate::octonion::Octonion;
use std::collections::HashMap;

/// `Σ c[m][n] s^m t^n` with octonion coefficients and real variables.
#[derive(Clone, Debug, Default)]
pub struct BivarPoly {
    // coeffs[m][n] multiplies s^m t^n; rows may have different lengths.
    coeffs: Vec<Vec<Octonion>>,
}

impl BivarPoly {
    pub fn zero() -> BivarPoly {
        BivarPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Octonion) -> BivarPoly {
        BivarPoly {
            coeffs: vec![vec![c]],
        }
    }

    pub fn from_terms(terms: &[(usize, usize, Octonion)]) -> BivarPoly {
        let mut p = BivarPoly::zero();
        for &(m, n, c) in terms {
            p.add_term(m, n, c);
        }
        p
    }

    pub fn add_term(&mut self, m: usize, n: usize, c: Octonion) {
        while self.coeffs.len() <= m {
            self.coeffs.push(Vec::new());
        }
        while self.coeffs[m].len() <= n {
            self.coeffs[m].push(Octonion::ZERO);
        }
        self.coeffs[m][n] += c;
    }

    pub fn coeff(&self, m: usize, n: usize) -> Octonion {
        self.coeffs
            .get(m)
            .and_then(|row| row.get(n))
            .copied()
            .unwrap_or(Octonion::ZERO)
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, Octonion)> + '_ {
        self.coeffs.iter().enumerate().flat_map(|(m, row)| {
            row.iter()
                .enumerate()
                .filter(|(_, c)| c.norm_sq() != 0.0)
                .map(move |(n, &c)| (m, n, c))
        })
    }

    pub fn eval(&self, s: f64, t: f64) -> Octonion {
        // Horner in s, inner Horner in t.
        let mut acc = Octonion::ZERO;
        for row in self.coeffs.iter().rev() {
            let mut inner = Octonion::ZERO;
            for c in row.iter().rev() {
                inner = inner * t + *c;
            }
            acc = acc * s + inner;
        }
        acc
    }

    pub fn d_s(&self) -> BivarPoly {
        let mut p = BivarPoly::zero();
        for (m, n, c) in self.terms() {
            if m > 0 {
                p.add_term(m - 1, n, c * m as f64);
            }
        }
        p
    }

    pub fn d_t(&self) -> BivarPoly {
        let mut p = BivarPoly::zero();
        for (m, n, c) in self.terms() {
            if n > 0 {
                p.add_term(m, n - 1, c * n as f64);
            }
        }
        p
    }

    pub fn add(&self, rhs: &BivarPoly) -> BivarPoly {
        let mut p = self.clone();
        for (m, n, c) in rhs.terms() {
            p.add_term(m, n, c);
        }
        p
    }

    pub fn neg(&self) -> BivarPoly {
        self.scale(-1.0)
    }

    pub fn scale(&self, t: f64) -> BivarPoly {
        let mut p = self.clone();
        for row in p.coeffs.iter_mut() {
            for c in row.iter_mut() {
                *c = *c * t;
            }
        }
        p
    }

    /// Coefficient-wise product in the given order. Safe for coefficients in
    /// an associative subalgebra; general octonion coefficients multiply as
    /// `c_lhs * c_rhs` term by term.
    pub fn mul(&self, rhs: &BivarPoly) -> BivarPoly {
        let mut p = BivarPoly::zero();
        for (m1, n1, c1) in self.terms() {
            for (m2, n2, c2) in rhs.terms() {
                p.add_term(m1 + m2, n1 + n2, c1 * c2);
            }
        }
        p
    }

    /// Right-multiplies every coefficient by a constant.
    pub fn mul_coeff_right(&self, c: Octonion) -> BivarPoly {
        let mut p = BivarPoly::zero();
        for (m, n, a) in self.terms() {
            p.add_term(m, n, a * c);
        }
        p
    }

    /// Left-multiplies every coefficient by a constant.
    pub fn mul_coeff_left(&self, c: Octonion) -> BivarPoly {
        let mut p = BivarPoly::zero();
        for (m, n, a) in self.terms() {
            p.add_term(m, n, c * a);
        }
        p
    }

    /// Re-expands `p(s + y, t)` as a polynomial in `(s, t)`.
    pub fn shift_s(&self, y: f64) -> BivarPoly {
        let mut p = BivarPoly::zero();
        for (m, n, c) in self.terms() {
            // (s + y)^m = Σ_r binom(m, r) y^(m-r) s^r
            let mut binom = 1.0f64;
            for r in 0..=m {
                // binom holds C(m, r) here.
                p.add_term(r, n, c * (binom * y.powi((m - r) as i32)));
                binom = binom * (m - r) as f64 / (r + 1) as f64;
            }
        }
        p
    }

    pub fn total_degree(&self) -> usize {
        self.terms().map(|(m, n, _)| m + n).max().unwrap_or(0)
    }

    pub fn max_coeff_norm(&self) -> f64 {
        self.terms().map(|(_, _, c)| c.norm()).fold(0.0, f64::max)
    }
}

/// Sparse polynomial in four real variables with quaternion coefficients,
/// kept homogeneous by the kernel-differentiation recursion.
#[derive(Clone, Debug, Default)]
pub struct Poly4 {
    terms: HashMap<[u8; 4], [f64; 4]>,
}

impl Poly4 {
    pub fn zero() -> Poly4 {
        Poly4::default()
    }

    pub fn add_term(&mut self, exp: [u8; 4], coeff: [f64; 4]) {
        let slot = self.terms.entry(exp).or_insert([0.0; 4]);
        for (s, c) in slot.iter_mut().zip(coeff.iter()) {
            *s += c;
        }
    }

    pub fn eval(&self, v: [f64; 4]) -> [f64; 4] {
        let mut acc = [0.0; 4];
        for (exp, coeff) in &self.terms {
            let mut mono = 1.0;
            for h in 0..4 {
                mono *= v[h].powi(exp[h] as i32);
            }
            for (a, c) in acc.iter_mut().zip(coeff.iter()) {
                *a += mono * c;
            }
        }
        acc
    }

    /// Partial derivative w.r.t. variable `h`.
    pub fn deriv(&self, h: usize) -> Poly4 {
        let mut out = Poly4::zero();
        for (exp, coeff) in &self.terms {
            if exp[h] == 0 {
                continue;
            }
            let mut e = *exp;
            e[h] -= 1;
            let k = exp[h] as f64;
            out.add_term(e, [coeff[0] * k, coeff[1] * k, coeff[2] * k, coeff[3] * k]);
        }
        out
    }

    /// Multiplies by `|v|² = v0² + v1² + v2² + v3²`.
    pub fn mul_norm_sq(&self) -> Poly4 {
        let mut out = Poly4::zero();
        for (exp, coeff) in &self.terms {
            for h in 0..4 {
                let mut e = *exp;
                e[h] += 2;
                out.add_term(e, *coeff);
            }
        }
        out
    }

    /// Multiplies by the variable `v_h` scaled by `t`.
    pub fn mul_var(&self, h: usize, t: f64) -> Poly4 {
        let mut out = Poly4::zero();
        for (exp, coeff) in &self.terms {
            let mut e = *exp;
            e[h] += 1;
            out.add_term(e, [coeff[0] * t, coeff[1] * t, coeff[2] * t, coeff[3] * t]);
        }
        out
    }

    pub fn add(&self, rhs: &Poly4) -> Poly4 {
        let mut out = self.clone();
        for (exp, coeff) in &rhs.terms {
            out.add_term(*exp, *coeff);
        }
        out
    }

    /// Coefficient of the monomial `x0^m x1^n` of the restriction to the
    /// plane `x2 = x3 = 0`.
    pub fn slice_coeff(&self, m: u8, n: u8) -> [f64; 4] {
        self.terms
            .get(&[m, n, 0, 0])
            .copied()
            .unwrap_or([0.0; 4])
    }
}

/// Solves `A x = b` for several right-hand sides by Gaussian elimination
/// with partial pivoting. Returns `None` on (numerical) singularity.
pub fn solve_dense(a: &[Vec<f64>], rhs: &[Vec<f64>]) -> Option<Vec<Vec<f64>>> {
    let n = a.len();
    let m = rhs.len();
    debug_assert!(a.iter().all(|row| row.len() == n));
    debug_assert!(rhs.iter().all(|col| col.len() == n));

    // Augmented working copy: columns of A then the rhs columns.
    let mut w = vec![vec![0.0; n + m]; n];
    for r in 0..n {
        w[r][..n].copy_from_slice(&a[r]);
        for c in 0..m {
            w[r][n + c] = rhs[c][r];
        }
    }

    for col in 0..n {
        let (pivot_row, pivot) = (col..n)
            .map(|r| (r, w[r][col].abs()))
            .max_by(|x, y| x.1.total_cmp(&y.1))?;
        if pivot < 1e-300 {
            return None;
        }
        w.swap(col, pivot_row);
        let inv = 1.0 / w[col][col];
        for r in 0..n {
            if r == col {
                continue;
            }
            let factor = w[r][col] * inv;
            if factor == 0.0 {
                continue;
            }
            for c in col..n + m {
                let delta = factor * w[col][c];
                w[r][c] -= delta;
            }
        }
    }

    let mut out = vec![vec![0.0; n]; m];
    for c in 0..m {
        for r in 0..n {
            out[c][r] = w[r][n + c] / w[r][r];
        }
    }
    Some(out)
}

/// Numerical rank of a set of column vectors via modified Gram-Schmidt with
/// column pivoting.
pub fn numerical_rank(columns: &[Vec<f64>], rel_tol: f64) -> usize {
    let mut cols: Vec<Vec<f64>> = columns.to_vec();
    let max_norm = cols
        .iter()
        .map(|c| c.iter().map(|v| v * v).sum::<f64>().sqrt())
        .fold(0.0, f64::max);
    if max_norm == 0.0 {
        return 0;
    }
    let threshold = rel_tol * max_norm;
    let mut rank = 0;
    for _ in 0..cols.len() {
        // Pick the remaining column with the largest norm.
        let (best, norm) = cols
            .iter()
            .enumerate()
            .skip(rank)
            .map(|(idx, c)| (idx, c.iter().map(|v| v * v).sum::<f64>().sqrt()))
            .max_by(|x, y| x.1.total_cmp(&y.1))
            .unwrap_or((rank, 0.0));
        if norm <= threshold {
            break;
        }
        cols.swap(rank, best);
        let q: Vec<f64> = cols[rank].iter().map(|v| v / norm).collect();
        for c in cols.iter_mut().skip(rank + 1) {
            let proj: f64 = c.iter().zip(q.iter()).map(|(a, b)| a * b).sum();
            for (v, qv) in c.iter_mut().zip(q.iter()) {
                *v -= proj * qv;
            }
        }
        rank += 1;
        if rank == cols.len() {
            break;
        }
    }
    rank
}
