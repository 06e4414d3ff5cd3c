//! Candidate functions `f` with `z/f(z) = 1 - a_2 z - z w(z)`, parametrized
//! by the second coefficient `a_2` and the Schwarz coefficients of
//! `w(z) = c_1 z + c_2 z^2 + ...`.
//!
//! Construction enforces the necessary coefficient bounds
//! `|c_1| <= 1`, `|c_2| <= (1 - |c_1|^2)/2`,
//! `|c_3| <= (1 - |c_1|^2 - 4|c_2|^2/(1 + |c_1|))/3`,
//! `|c_4| <= (1 - |c_1|^2 - 4|c_2|^2)/4` and `|a_2| <= 2`. These bounds are
//! necessary but not sufficient; [`u_membership_check`] is the final arbiter.

use num_complex::Complex64;
use serde::Serialize;
use thiserror::Error;

use crate::series::PowerSeries;

/// Slack for boundary cases of the construction bounds (sharp functions sit
/// exactly on them).
const BOUND_TOL: f64 = 1e-12;

#[derive(Debug, Error, PartialEq)]
pub enum SpecError {
    #[error("at least 4 Schwarz coefficients are required, got {0}")]
    TooFewCoefficients(usize),
    #[error("|a_2| = {0} exceeds 2")]
    SecondCoefficientTooLarge(f64),
    #[error("|c_{index}| = {actual} exceeds its bound {bound}")]
    CoefficientBound {
        index: usize,
        actual: f64,
        bound: f64,
    },
}

/// Bound on `|c_2|` given `|c_1|`.
pub fn c2_bound(c1: f64) -> f64 {
    0.5 * (1.0 - c1 * c1)
}

/// Bound on `|c_3|` given `|c_1|`, `|c_2|`.
pub fn c3_bound(c1: f64, c2: f64) -> f64 {
    ((1.0 - c1 * c1 - 4.0 * c2 * c2 / (1.0 + c1)) / 3.0).max(0.0)
}

/// Bound on `|c_4|` given `|c_1|`, `|c_2|`.
pub fn c4_bound(c1: f64, c2: f64) -> f64 {
    (0.25 * (1.0 - c1 * c1 - 4.0 * c2 * c2)).max(0.0)
}

/// A candidate member of the class, `z/f(z) = 1 - a_2 z - z w(z)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct UFunctionSpec {
    a2: Complex64,
    c: Vec<Complex64>,
}

impl UFunctionSpec {
    pub fn new(a2: Complex64, c: Vec<Complex64>) -> Result<Self, SpecError> {
        if c.len() < 4 {
            return Err(SpecError::TooFewCoefficients(c.len()));
        }
        if a2.norm() > 2.0 + BOUND_TOL {
            return Err(SpecError::SecondCoefficientTooLarge(a2.norm()));
        }
        let (m1, m2, m3, m4) = (c[0].norm(), c[1].norm(), c[2].norm(), c[3].norm());
        let checks = [
            (1, m1, 1.0),
            (2, m2, c2_bound(m1)),
            (3, m3, c3_bound(m1, m2)),
            (4, m4, c4_bound(m1, m2)),
        ];
        for (index, actual, bound) in checks {
            if actual > bound + BOUND_TOL {
                return Err(SpecError::CoefficientBound {
                    index,
                    actual,
                    bound,
                });
            }
        }
        Ok(Self { a2, c })
    }

    pub fn a2(&self) -> Complex64 {
        self.a2
    }

    pub fn schwarz_coeffs(&self) -> &[Complex64] {
        &self.c
    }

    /// The polynomial `B(z) = z/f(z) = 1 - a_2 z - c_1 z^2 - ... - c_K z^(K+1)`
    /// as a series of the given order.
    pub fn denominator(&self, order: usize) -> PowerSeries {
        let mut coeffs = vec![Complex64::ZERO; order + 1];
        coeffs[0] = Complex64::ONE;
        if order >= 1 {
            coeffs[1] = -self.a2;
        }
        for (i, &ci) in self.c.iter().enumerate() {
            if i + 2 <= order {
                coeffs[i + 2] = -ci;
            }
        }
        PowerSeries::new(coeffs)
    }

    /// Coefficients `a_1 .. a_n_max` through the series route: `f = z / B(z)`
    /// expanded by series reciprocal.
    pub fn coeffs_via_series(&self, n_max: usize) -> Vec<Complex64> {
        assert!(n_max >= 1);
        let r = self
            .denominator(n_max - 1)
            .recip()
            .expect("denominator has unit constant term");
        r.coeffs().to_vec()
    }

    /// Coefficients `a_1 .. a_n_max` (`n_max <= 6`) from the closed formulas.
    pub fn coeffs_closed_form(&self, n_max: usize) -> Vec<Complex64> {
        assert!((1..=6).contains(&n_max), "closed formulas cover a_1..a_6");
        let a2 = self.a2;
        let c1 = self.c[0];
        let c2 = self.c[1];
        let c3 = self.c[2];
        let c4 = self.c[3];
        let a3 = c1 + a2 * a2;
        let a4 = c2 + 2.0 * a2 * c1 + a2.powu(3);
        let a5 = c3 + 2.0 * a2 * c2 + c1 * c1 + 3.0 * a2 * a2 * c1 + a2.powu(4);
        let a6 = c4 + 2.0 * a2 * c3 + 2.0 * c1 * c2 + 3.0 * a2 * a2 * c2
            + 3.0 * a2 * c1 * c1
            + 4.0 * a2.powu(3) * c1
            + a2.powu(5);
        let all = [Complex64::ONE, a2, a3, a4, a5, a6];
        all[..n_max].to_vec()
    }

    /// The full truncated series of `f` itself (`coeff(k)` is `a_k`, `a_0 = 0`).
    pub fn function_series(&self, order: usize) -> PowerSeries {
        let a = self.coeffs_via_series(order.max(1));
        let mut coeffs = vec![Complex64::ZERO; order + 1];
        coeffs[1..=order].copy_from_slice(&a[..order]);
        PowerSeries::new(coeffs)
    }
}

/// Coefficients `a_1 .. a_n_max`: closed formulas up to `a_6`, series
/// reciprocal beyond. Both routes are polynomial identities in `(a_2, c)` and
/// agree to rounding.
pub fn coeffs_from_schwarz(spec: &UFunctionSpec, n_max: usize) -> Vec<Complex64> {
    if n_max <= 6 {
        spec.coeffs_closed_form(n_max)
    } else {
        spec.coeffs_via_series(n_max)
    }
}

/// Why a spec failed the membership check beyond simply exceeding the
/// deviation bound.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum MembershipDiagnostic {
    /// `z/f` vanishes (numerically) at a sample point: `f` blows up on the
    /// circle and is not analytic on the closed disk of that radius.
    PoleOnCircle { min_denominator: f64 },
    /// `z/f` winds around zero: `f` has a pole strictly inside the circle.
    PoleInsideDisk { winding: i64 },
}

/// Result of the numerical class-membership test.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MembershipCheck {
    pub is_member: bool,
    /// Maximum of `|(z/f)^2 f' - 1|` over the sampled circle.
    pub max_deviation: f64,
    pub diagnostic: Option<MembershipDiagnostic>,
}

pub const DEFAULT_RADIUS: f64 = 0.999;
pub const DEFAULT_CIRCLE_SAMPLES: usize = 4096;

/// Samples `|(z/f)^2 f'(z) - 1|` on the circle `|z| = radius`. The quantity is
/// analytic on the disk, so by the maximum principle the circle maximum
/// dominates the interior; membership holds when it stays below 1.
///
/// With `B = z/f` one has `(z/f)^2 f' = B - z B'`, which sidesteps the
/// division by `f` entirely; poles of `f` (zeros of `B`) are detected
/// separately by a minimum-modulus threshold on the circle and a winding
/// count for the interior.
pub fn u_membership_check(spec: &UFunctionSpec, radius: f64, samples: usize) -> MembershipCheck {
    assert!(radius > 0.0 && radius < 1.0, "radius must lie in (0, 1)");
    assert!(samples >= 8, "too few circle samples");

    let b = spec.denominator(spec.schwarz_coeffs().len() + 1);
    let db = b.derivative();

    let mut max_dev: f64 = 0.0;
    let mut min_b = f64::INFINITY;
    let mut winding_turns: f64 = 0.0;
    let mut prev_arg = 0.0f64;
    let step = std::f64::consts::TAU / samples as f64;
    for j in 0..=samples {
        let theta = j as f64 * step;
        let z = Complex64::from_polar(radius, theta);
        let bz = b.eval(z);
        let dev = (bz - z * db.eval(z) - Complex64::ONE).norm();
        max_dev = max_dev.max(dev);
        min_b = min_b.min(bz.norm());
        let arg = bz.arg();
        if j > 0 {
            let mut d = arg - prev_arg;
            if d > std::f64::consts::PI {
                d -= std::f64::consts::TAU;
            } else if d < -std::f64::consts::PI {
                d += std::f64::consts::TAU;
            }
            winding_turns += d;
        }
        prev_arg = arg;
    }

    if min_b < 1e-8 {
        return MembershipCheck {
            is_member: false,
            max_deviation: max_dev,
            diagnostic: Some(MembershipDiagnostic::PoleOnCircle {
                min_denominator: min_b,
            }),
        };
    }
    let winding = (winding_turns / std::f64::consts::TAU).round() as i64;
    if winding != 0 {
        return MembershipCheck {
            is_member: false,
            max_deviation: max_dev,
            diagnostic: Some(MembershipDiagnostic::PoleInsideDisk { winding }),
        };
    }
    MembershipCheck {
        is_member: max_dev < 1.0,
        max_deviation: max_dev,
        diagnostic: None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn zeros() -> Vec<Complex64> {
        vec![Complex64::ZERO; 4]
    }

    fn twoslit() -> UFunctionSpec {
        UFunctionSpec::new(Complex64::ZERO, vec![c(1.0), c(0.0), c(0.0), c(0.0)]).unwrap()
    }

    fn koebe() -> UFunctionSpec {
        UFunctionSpec::new(c(2.0), vec![c(-1.0), c(0.0), c(0.0), c(0.0)]).unwrap()
    }

    #[test]
    fn twoslit_coefficients() {
        let a = coeffs_from_schwarz(&twoslit(), 6);
        let expected = [1.0, 0.0, 1.0, 0.0, 1.0, 0.0];
        for (got, want) in a.iter().zip(expected) {
            assert!((got - c(want)).norm() < 1e-15);
        }
    }

    #[test]
    fn geometric_coefficients() {
        let spec = UFunctionSpec::new(c(1.0), zeros()).unwrap();
        let a = coeffs_from_schwarz(&spec, 6);
        for got in &a {
            assert!((got - c(1.0)).norm() < 1e-15);
        }
    }

    #[test]
    fn koebe_coefficients() {
        let a = coeffs_from_schwarz(&koebe(), 6);
        for (k, got) in a.iter().enumerate() {
            assert!((got - c((k + 1) as f64)).norm() < 1e-12);
        }
    }

    #[test]
    fn closed_form_matches_series_route() {
        let spec = UFunctionSpec::new(
            Complex64::new(0.3, 0.2),
            vec![
                Complex64::new(0.2, -0.1),
                Complex64::new(0.05, 0.03),
                c(0.01),
                c(0.002),
            ],
        )
        .unwrap();
        let closed = spec.coeffs_closed_form(6);
        let series = spec.coeffs_via_series(6);
        for (a, b) in closed.iter().zip(&series) {
            assert!((a - b).norm() < 1e-12);
        }
    }

    #[test]
    fn series_route_extends_past_six() {
        let a = coeffs_from_schwarz(&koebe(), 9);
        for (k, got) in a.iter().enumerate() {
            assert!((got - c((k + 1) as f64)).norm() < 1e-12, "a_{}", k + 1);
        }
    }

    #[test]
    fn twoslit_is_member() {
        let m = u_membership_check(&twoslit(), 0.99, 1024);
        assert!(m.is_member);
        // deviation is |z^2 w'(z)| = r^2 for w(z) = z
        assert!((m.max_deviation - 0.99f64.powi(2)).abs() < 1e-12);
    }

    #[test]
    fn koebe_is_member() {
        let m = u_membership_check(&koebe(), 0.99, 2048);
        assert!(m.is_member, "{m:?}");
        assert!((m.max_deviation - 0.99f64.powi(2)).abs() < 1e-12);
    }

    #[test]
    fn invariant_violation_rejected_before_evaluation() {
        let err = UFunctionSpec::new(Complex64::ZERO, vec![c(2.0), c(0.0), c(0.0), c(0.0)]);
        assert!(matches!(
            err,
            Err(SpecError::CoefficientBound { index: 1, .. })
        ));
    }

    #[test]
    fn c2_bound_enforced() {
        let err = UFunctionSpec::new(Complex64::ZERO, vec![c(0.5), c(0.6), c(0.0), c(0.0)]);
        assert!(matches!(
            err,
            Err(SpecError::CoefficientBound { index: 2, .. })
        ));
    }

    #[test]
    fn a2_bound_enforced() {
        let err = UFunctionSpec::new(c(2.5), zeros());
        assert!(matches!(err, Err(SpecError::SecondCoefficientTooLarge(_))));
    }

    #[test]
    fn pole_on_circle_detected() {
        // B = 1 - 2z vanishes at z = 1/2; sampling the circle through it
        let spec = UFunctionSpec::new(c(2.0), zeros()).unwrap();
        let m = u_membership_check(&spec, 0.5, 4096);
        assert!(!m.is_member);
        assert!(matches!(
            m.diagnostic,
            Some(MembershipDiagnostic::PoleOnCircle { .. })
        ));
    }

    #[test]
    fn pole_inside_disk_detected() {
        // B = 1 - 2z vanishes at z = 1/2, inside |z| = 0.9
        let spec = UFunctionSpec::new(c(2.0), zeros()).unwrap();
        let m = u_membership_check(&spec, 0.9, 4096);
        assert!(!m.is_member);
        assert!(matches!(
            m.diagnostic,
            Some(MembershipDiagnostic::PoleInsideDisk { winding: 1 })
        ));
    }

    #[test]
    fn contraction_shrinks_deviation() {
        let spec = twoslit();
        let half = UFunctionSpec::new(
            spec.a2(),
            spec.schwarz_coeffs().iter().map(|ci| ci * 0.5).collect(),
        )
        .unwrap();
        let full = u_membership_check(&spec, 0.999, 512);
        let shrunk = u_membership_check(&half, 0.999, 512);
        assert!(shrunk.max_deviation < full.max_deviation);
        assert!(shrunk.is_member);
    }
}
