//! Fourth-order central finite-difference stencils shared by the stem-field
//! and operator modules. Error model: O(h⁴) truncation per application; the
//! stencils are exact on polynomials of degree <= 4 up to rounding.

use crate::octonion::Octonion;

/// Default relative step; the effective step is `BASE_STEP * (1 + scale)`.
pub const BASE_STEP: f64 = 1e-4;

pub fn step(scale: f64) -> f64 {
    BASE_STEP * (1.0 + scale.abs())
}

/// First derivative, 5-point stencil.
pub fn d1<F: Fn(f64) -> Octonion>(f: F, x: f64, h: f64) -> Octonion {
    (f(x - 2.0 * h) - f(x + 2.0 * h) + (f(x + h) - f(x - h)) * 8.0) / (12.0 * h)
}

/// Second derivative, 5-point stencil.
pub fn d2<F: Fn(f64) -> Octonion>(f: F, x: f64, h: f64) -> Octonion {
    (-f(x + 2.0 * h) - f(x - 2.0 * h) + (f(x + h) + f(x - h)) * 16.0 - f(x) * 30.0)
        / (12.0 * h * h)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_on_cubics() {
        let f = |t: f64| Octonion::real(1.0 - 2.0 * t + 0.5 * t * t + 3.0 * t * t * t);
        let x = 0.7;
        let h = step(x);
        let want = -2.0 + x + 9.0 * x * x;
        assert!((d1(f, x, h).re() - want).abs() < 1e-8 * (1.0 + want.abs()));
        let want2 = 1.0 + 18.0 * x;
        assert!((d2(f, x, h).re() - want2).abs() < 1e-6 * (1.0 + want2.abs()));
    }
}
