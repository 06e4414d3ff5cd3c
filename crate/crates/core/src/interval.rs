//! Closed real intervals with outward-padded arithmetic.
//!
//! Every operation pads the naively rounded endpoints outward by
//! [`PAD_ULPS`] ulps instead of switching the FPU rounding mode, so the
//! computed interval always encloses the true range of the operation over
//! its operands. The padding is part of the certificate: bounds reported by
//! the optimizer are valid up to this (recorded) slack.

use serde::Serialize;

/// Ulps of outward padding applied to every arithmetic result.
pub const PAD_ULPS: u32 = 4;

/// A closed interval `[lo, hi]` with `lo <= hi`, both finite.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
}

fn step_down(x: f64, n: u32) -> f64 {
    let mut v = x;
    for _ in 0..n {
        v = v.next_down();
    }
    v
}

fn step_up(x: f64, n: u32) -> f64 {
    let mut v = x;
    for _ in 0..n {
        v = v.next_up();
    }
    v
}

fn padded(lo: f64, hi: f64) -> Interval {
    Interval {
        lo: step_down(lo, PAD_ULPS),
        hi: step_up(hi, PAD_ULPS),
    }
}

impl Interval {
    pub fn new(lo: f64, hi: f64) -> Self {
        assert!(lo <= hi, "interval endpoints out of order: [{lo}, {hi}]");
        Self { lo, hi }
    }

    /// Degenerate interval holding a single exactly-known value.
    pub fn point(x: f64) -> Self {
        Self { lo: x, hi: x }
    }

    /// Enclosure of a constant that itself carries rounding error
    /// (e.g. `4.0 / 7f64.sqrt()`).
    pub fn constant(x: f64) -> Self {
        padded(x, x)
    }

    pub fn width(self) -> f64 {
        self.hi - self.lo
    }

    pub fn mid(self) -> f64 {
        let m = 0.5 * (self.lo + self.hi);
        if m.is_finite() {
            m.clamp(self.lo, self.hi)
        } else {
            0.5 * self.lo + 0.5 * self.hi
        }
    }

    pub fn contains(self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }

    pub fn contains_interval(self, other: Interval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub fn intersects(self, other: Interval) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    /// Splits at the midpoint. The halves share the split point, so no value
    /// is lost.
    pub fn split(self) -> (Interval, Interval) {
        let m = self.mid();
        (Interval::new(self.lo, m), Interval::new(m, self.hi))
    }

    pub fn square(self) -> Interval {
        let (a, b) = (self.lo, self.hi);
        if a >= 0.0 {
            padded(a * a, b * b)
        } else if b <= 0.0 {
            padded(b * b, a * a)
        } else {
            padded(0.0, (a * a).max(b * b))
        }
    }

    /// Integer power built from padded primitives only.
    pub fn powi(self, n: u32) -> Interval {
        match n {
            0 => Interval::point(1.0),
            1 => self,
            _ if n % 2 == 0 => self.square().powi(n / 2),
            _ => self * self.square().powi((n - 1) / 2),
        }
    }

    /// Square root. `None` when the whole interval lies below zero (no real
    /// value exists anywhere on it); a partially negative interval is clamped
    /// at zero, matching the evaluators' boundary clamp.
    pub fn sqrt(self) -> Option<Interval> {
        if self.hi < 0.0 {
            return None;
        }
        let lo = self.lo.max(0.0).sqrt();
        let hi = self.hi.sqrt();
        let p = padded(lo, hi);
        Some(Interval {
            lo: p.lo.max(0.0),
            hi: p.hi,
        })
    }
}

impl std::ops::Add for Interval {
    type Output = Interval;
    fn add(self, rhs: Interval) -> Interval {
        padded(self.lo + rhs.lo, self.hi + rhs.hi)
    }
}

impl std::ops::Sub for Interval {
    type Output = Interval;
    fn sub(self, rhs: Interval) -> Interval {
        padded(self.lo - rhs.hi, self.hi - rhs.lo)
    }
}

impl std::ops::Neg for Interval {
    type Output = Interval;
    fn neg(self) -> Interval {
        Interval {
            lo: -self.hi,
            hi: -self.lo,
        }
    }
}

impl std::ops::Mul for Interval {
    type Output = Interval;
    fn mul(self, rhs: Interval) -> Interval {
        let p = [
            self.lo * rhs.lo,
            self.lo * rhs.hi,
            self.hi * rhs.lo,
            self.hi * rhs.hi,
        ];
        let lo = p.iter().copied().fold(f64::INFINITY, f64::min);
        let hi = p.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        padded(lo, hi)
    }
}

impl std::ops::Div for Interval {
    type Output = Interval;
    fn div(self, rhs: Interval) -> Interval {
        assert!(
            !(rhs.lo <= 0.0 && rhs.hi >= 0.0),
            "interval division by an interval containing zero: [{}, {}]",
            rhs.lo,
            rhs.hi
        );
        let p = [
            self.lo / rhs.lo,
            self.lo / rhs.hi,
            self.hi / rhs.lo,
            self.hi / rhs.hi,
        ];
        let lo = p.iter().copied().fold(f64::INFINITY, f64::min);
        let hi = p.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        padded(lo, hi)
    }
}
