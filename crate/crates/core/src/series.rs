//! Truncated power-series algebra over complex coefficients.
//!
//! A [`PowerSeries`] holds the coefficients of `z^0 .. z^order` densely. All
//! arithmetic stays at a fixed order: products, reciprocals, square roots and
//! logarithms truncate consistently, so compositions agree coefficient-wise
//! regardless of association order.

use num_complex::Complex64;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum SeriesError {
    #[error("series order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },
    #[error("reciprocal of a series with zero constant term")]
    ZeroConstantTerm,
    #[error("constant term must be 1, got {0}")]
    ConstantTermNotOne(Complex64),
    #[error("series order {got} is below the required {needed}")]
    InsufficientOrder { needed: usize, got: usize },
}

/// Dense truncated power series: `coeffs[k]` is the coefficient of `z^k`.
#[derive(Debug, Clone, PartialEq)]
pub struct PowerSeries {
    coeffs: Vec<Complex64>,
}

const ONE_TOL: f64 = 1e-12;

impl PowerSeries {
    pub fn new(coeffs: Vec<Complex64>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least the constant term");
        Self { coeffs }
    }

    pub fn from_real(coeffs: &[f64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect())
    }

    pub fn zero(order: usize) -> Self {
        Self::new(vec![Complex64::ZERO; order + 1])
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = Complex64::ONE;
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Complex64 {
        self.coeffs.get(k).copied().unwrap_or(Complex64::ZERO)
    }

    pub fn truncate(&self, order: usize) -> Self {
        let mut c = self.coeffs.clone();
        c.resize(order + 1, Complex64::ZERO);
        Self::new(c)
    }

    fn check_orders(&self, other: &Self) -> Result<(), SeriesError> {
        if self.order() != other.order() {
            return Err(SeriesError::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_orders(other)?;
        Ok(Self::new(
            self.coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        ))
    }

    pub fn sub(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_orders(other)?;
        Ok(Self::new(
            self.coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        ))
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * factor).collect())
    }

    /// Cauchy product truncated to the common order.
    pub fn mul(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_orders(other)?;
        let n = self.order();
        let mut out = vec![Complex64::ZERO; n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.norm_sqr() == 0.0 {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(n + 1 - i).enumerate() {
                out[i + j] += a * b;
            }
        }
        Ok(Self::new(out))
    }

    /// Multiplicative inverse: `self.mul(&r) == 1` up to the order.
    pub fn recip(&self) -> Result<Self, SeriesError> {
        let a0 = self.coeffs[0];
        if a0 == Complex64::ZERO {
            return Err(SeriesError::ZeroConstantTerm);
        }
        let n = self.order();
        let inv0 = a0.finv();
        let mut r = vec![Complex64::ZERO; n + 1];
        r[0] = inv0;
        for k in 1..=n {
            let mut acc = Complex64::ZERO;
            for j in 1..=k {
                acc += self.coeffs[j] * r[k - j];
            }
            r[k] = -inv0 * acc;
        }
        Ok(Self::new(r))
    }

    /// Square root with the branch fixed by `sqrt(1) = 1`; requires unit
    /// constant term.
    pub fn sqrt(&self) -> Result<Self, SeriesError> {
        let a0 = self.coeffs[0];
        if (a0 - Complex64::ONE).norm() > ONE_TOL {
            return Err(SeriesError::ConstantTermNotOne(a0));
        }
        let n = self.order();
        let mut s = vec![Complex64::ZERO; n + 1];
        s[0] = a0.sqrt();
        let half = Complex64::new(0.5, 0.0);
        for k in 1..=n {
            let mut acc = Complex64::ZERO;
            for j in 1..k {
                acc += s[j] * s[k - j];
            }
            s[k] = half * (self.coeffs[k] - acc) / s[0];
        }
        Ok(Self::new(s))
    }

    /// Logarithm via the defining recurrence `a' = l' a`; requires unit
    /// constant term.
    pub fn log(&self) -> Result<Self, SeriesError> {
        let a0 = self.coeffs[0];
        if (a0 - Complex64::ONE).norm() > ONE_TOL {
            return Err(SeriesError::ConstantTermNotOne(a0));
        }
        let n = self.order();
        let mut l = vec![Complex64::ZERO; n + 1];
        l[0] = a0.ln();
        for k in 1..=n {
            let mut acc = Complex64::ZERO;
            for j in 1..k {
                acc += Complex64::new(j as f64, 0.0) * l[j] * self.coeffs[k - j];
            }
            l[k] = (self.coeffs[k] - acc / Complex64::new(k as f64, 0.0)) / a0;
        }
        Ok(Self::new(l))
    }

    /// Exponential via the same recurrence, inverse to [`PowerSeries::log`];
    /// requires zero constant term.
    pub fn exp(&self) -> Result<Self, SeriesError> {
        if self.coeffs[0].norm() > ONE_TOL {
            return Err(SeriesError::ConstantTermNotOne(self.coeffs[0]));
        }
        let n = self.order();
        let mut e = vec![Complex64::ZERO; n + 1];
        e[0] = self.coeffs[0].exp();
        for k in 1..=n {
            let mut acc = Complex64::ZERO;
            for j in 1..=k {
                acc += Complex64::new(j as f64, 0.0) * self.coeffs[j] * e[k - j];
            }
            e[k] = acc / Complex64::new(k as f64, 0.0);
        }
        Ok(Self::new(e))
    }

    pub fn derivative(&self) -> Self {
        if self.order() == 0 {
            return Self::zero(0);
        }
        Self::new(
            (1..=self.order())
                .map(|k| Complex64::new(k as f64, 0.0) * self.coeffs[k])
                .collect(),
        )
    }

    /// Horner evaluation at a complex point.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::ZERO;
        for &c in self.coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc
    }

    /// Substitutes `z -> z^2`, doubling the order.
    pub fn stretch2(&self) -> Self {
        let mut out = vec![Complex64::ZERO; 2 * self.order() + 1];
        for (k, &c) in self.coeffs.iter().enumerate() {
            out[2 * k] = c;
        }
        Self::new(out)
    }

    /// Divides by `z^k`, requiring the low coefficients to vanish.
    pub fn shift_down(&self, k: usize) -> Result<Self, SeriesError> {
        if self.order() < k {
            return Err(SeriesError::InsufficientOrder {
                needed: k,
                got: self.order(),
            });
        }
        for j in 0..k {
            if self.coeffs[j].norm() > ONE_TOL {
                return Err(SeriesError::ZeroConstantTerm);
            }
        }
        Ok(Self::new(self.coeffs[k..].to_vec()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn assert_close(a: &PowerSeries, b: &PowerSeries, tol: f64) {
        assert_eq!(a.order(), b.order());
        for k in 0..=a.order() {
            assert!(
                (a.coeff(k) - b.coeff(k)).norm() <= tol,
                "coefficient {k} differs: {} vs {}",
                a.coeff(k),
                b.coeff(k)
            );
        }
    }

    #[test]
    fn mul_difference_of_squares() {
        let a = PowerSeries::from_real(&[1.0, 1.0, 0.0]);
        let b = PowerSeries::from_real(&[1.0, -1.0, 0.0]);
        let p = a.mul(&b).unwrap();
        assert_close(&p, &PowerSeries::from_real(&[1.0, 0.0, -1.0]), 0.0);
    }

    #[test]
    fn mul_identity_element() {
        let a = PowerSeries::from_real(&[1.0, 1.0, 1.0]);
        let p = a.mul(&PowerSeries::one(2)).unwrap();
        assert_close(&p, &a, 0.0);
    }

    #[test]
    fn mul_binomial_square_truncates() {
        let a = PowerSeries::from_real(&[1.0, 1.0, 0.0, 0.0]);
        let p = a.mul(&a).unwrap();
        assert_close(&p, &PowerSeries::from_real(&[1.0, 2.0, 1.0, 0.0]), 0.0);
    }

    #[test]
    fn mul_order_mismatch_rejected() {
        let a = PowerSeries::one(2);
        let b = PowerSeries::one(3);
        assert_eq!(
            a.mul(&b),
            Err(SeriesError::OrderMismatch { left: 2, right: 3 })
        );
    }

    #[test]
    fn recip_geometric() {
        let a = PowerSeries::from_real(&[1.0, -1.0, 0.0, 0.0]);
        let r = a.recip().unwrap();
        assert_close(&r, &PowerSeries::from_real(&[1.0, 1.0, 1.0, 1.0]), 1e-15);
    }

    #[test]
    fn recip_of_one() {
        assert_close(&PowerSeries::one(4).recip().unwrap(), &PowerSeries::one(4), 0.0);
    }

    #[test]
    fn recip_squared_geometric() {
        let a = PowerSeries::from_real(&[1.0, -2.0, 1.0, 0.0]);
        let r = a.recip().unwrap();
        assert_close(&r, &PowerSeries::from_real(&[1.0, 2.0, 3.0, 4.0]), 1e-15);
    }

    #[test]
    fn recip_zero_constant_rejected() {
        let a = PowerSeries::from_real(&[0.0, 1.0]);
        assert_eq!(a.recip(), Err(SeriesError::ZeroConstantTerm));
    }

    #[test]
    fn sqrt_perfect_square() {
        let a = PowerSeries::from_real(&[1.0, 2.0, 1.0]);
        assert_close(&a.sqrt().unwrap(), &PowerSeries::from_real(&[1.0, 1.0, 0.0]), 1e-15);
    }

    #[test]
    fn sqrt_of_one() {
        assert_close(&PowerSeries::one(3).sqrt().unwrap(), &PowerSeries::one(3), 0.0);
    }

    #[test]
    fn sqrt_binomial_series() {
        let a = PowerSeries::from_real(&[1.0, 1.0, 0.0]);
        let s = a.sqrt().unwrap();
        assert_close(&s, &PowerSeries::from_real(&[1.0, 0.5, -0.125]), 1e-15);
    }

    #[test]
    fn sqrt_requires_unit_constant() {
        let a = PowerSeries::from_real(&[4.0, 1.0]);
        assert!(matches!(a.sqrt(), Err(SeriesError::ConstantTermNotOne(_))));
    }

    #[test]
    fn log_mercator() {
        let a = PowerSeries::from_real(&[1.0, -1.0, 0.0, 0.0]).recip().unwrap();
        let l = a.log().unwrap();
        assert_close(
            &l,
            &PowerSeries::from_real(&[0.0, 1.0, 0.5, 1.0 / 3.0]),
            1e-15,
        );
    }

    #[test]
    fn log_of_one_is_zero() {
        assert_close(&PowerSeries::one(5).log().unwrap(), &PowerSeries::zero(5), 0.0);
    }

    #[test]
    fn exp_log_round_trip() {
        let a = PowerSeries::from_real(&[1.0, 0.5, 0.0, 0.0]);
        let back = a.log().unwrap().exp().unwrap();
        assert_close(&back, &a, 1e-12);
    }

    #[test]
    fn eval_horner() {
        let a = PowerSeries::from_real(&[1.0, 2.0, 3.0]);
        let z = Complex64::new(0.5, 0.25);
        let expected = c(1.0) + c(2.0) * z + c(3.0) * z * z;
        assert!((a.eval(z) - expected).norm() < 1e-15);
    }

    proptest! {
        // random unit-constant series: recip is an involution
        #[test]
        fn recip_round_trip(coeffs in proptest::collection::vec(-1.0f64..1.0, 1..16)) {
            let mut v = vec![1.0];
            v.extend(coeffs);
            let a = PowerSeries::from_real(&v);
            let back = a.recip().unwrap().recip().unwrap();
            for k in 0..=a.order() {
                prop_assert!((a.coeff(k) - back.coeff(k)).norm() < 1e-12);
            }
        }

        // log . exp = identity at order <= 16
        #[test]
        fn log_exp_round_trip(coeffs in proptest::collection::vec(-0.5f64..0.5, 1..17)) {
            let mut v = vec![0.0];
            v.extend(coeffs);
            let l = PowerSeries::from_real(&v);
            let back = l.exp().unwrap().log().unwrap();
            for k in 0..=l.order() {
                prop_assert!((l.coeff(k) - back.coeff(k)).norm() < 1e-12);
            }
        }

        // mul is associative at fixed order
        #[test]
        fn mul_associative(
            a in proptest::collection::vec(-2.0f64..2.0, 5),
            b in proptest::collection::vec(-2.0f64..2.0, 5),
            cc in proptest::collection::vec(-2.0f64..2.0, 5),
        ) {
            let (a, b, cc) = (
                PowerSeries::from_real(&a),
                PowerSeries::from_real(&b),
                PowerSeries::from_real(&cc),
            );
            let l = a.mul(&b).unwrap().mul(&cc).unwrap();
            let r = a.mul(&b.mul(&cc).unwrap()).unwrap();
            for k in 0..=l.order() {
                prop_assert!((l.coeff(k) - r.coeff(k)).norm() < 1e-10);
            }
        }

        #[test]
        fn sqrt_squares_back(coeffs in proptest::collection::vec(-0.8f64..0.8, 1..12)) {
            let mut v = vec![1.0];
            v.extend(coeffs);
            let a = PowerSeries::from_real(&v);
            let s = a.sqrt().unwrap();
            let sq = s.mul(&s).unwrap();
            for k in 0..=a.order() {
                prop_assert!((a.coeff(k) - sq.coeff(k)).norm() < 1e-11);
            }
        }
    }
}
