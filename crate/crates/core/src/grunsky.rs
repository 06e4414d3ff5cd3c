//! Grunsky coefficients of the square-root transform.
//!
//! For a normalized series `f(z) = z + a_2 z^2 + ...` the transform
//! `g(z) = sqrt(f(z^2))` is odd, and the expansion
//! `log[(g(t) - g(z)) / (t - z)] = sum w_{p,q} t^p z^q` carries only
//! odd-indexed coefficients `w_{2p-1,2q-1}`. For univalent `f` these satisfy
//! the weighted quadratic inequality implemented by [`grunsky_functional`];
//! for every normalized `f` they satisfy the six polynomial identities
//! checked by [`verify_grunsky_identities`], which tie them to `a_2 .. a_5`.

use std::collections::BTreeMap;

use num_complex::Complex64;
use thiserror::Error;

use crate::series::{PowerSeries, SeriesError};

#[derive(Debug, Error, PartialEq)]
pub enum GrunskyError {
    #[error("series order {got} is insufficient for cutoff {cutoff} (need >= {needed})")]
    InsufficientOrder {
        cutoff: u32,
        needed: usize,
        got: usize,
    },
    #[error("series is not normalized (a_0 = 0, a_1 = 1)")]
    NotNormalized,
    #[error("table is missing entry ({0}, {1})")]
    MissingEntry(u32, u32),
    #[error(transparent)]
    Series(#[from] SeriesError),
}

/// Odd-indexed Grunsky coefficients up to `cutoff` in both indices.
#[derive(Debug, Clone, PartialEq)]
pub struct GrunskyTable {
    omega: BTreeMap<(u32, u32), Complex64>,
    cutoff: u32,
}

impl GrunskyTable {
    pub fn cutoff(&self) -> u32 {
        self.cutoff
    }

    pub fn get(&self, p: u32, q: u32) -> Result<Complex64, GrunskyError> {
        self.omega
            .get(&(p, q))
            .copied()
            .ok_or(GrunskyError::MissingEntry(p, q))
    }

    /// All stored entries in index order.
    pub fn entries(&self) -> impl Iterator<Item = ((u32, u32), Complex64)> + '_ {
        self.omega.iter().map(|(&k, &v)| (k, v))
    }

    /// Largest `|w_{p,q} - w_{q,p}|` over the stored pairs. Both orientations
    /// are extracted independently from the bivariate expansion, so this is a
    /// real consistency measure, not zero by construction.
    pub fn symmetry_error(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for (&(p, q), &v) in &self.omega {
            if p < q {
                if let Some(&w) = self.omega.get(&(q, p)) {
                    worst = worst.max((v - w).norm());
                }
            }
        }
        worst
    }

    /// The weighted first-row sum `|w_11|^2 + 3|w_13|^2 + 5|w_15|^2 + 7|w_17|^2`
    /// (the functional at the first unit vector); at most 1 for univalent
    /// inputs.
    pub fn first_row_weighted_sum(&self) -> Result<f64, GrunskyError> {
        let mut x = vec![Complex64::ZERO; (self.cutoff as usize + 1) / 2];
        x[0] = Complex64::ONE;
        let (lhs, _) = grunsky_functional(self, &x)?;
        Ok(lhs)
    }

    /// Test hook: returns a copy with one entry replaced.
    pub fn with_entry(&self, p: u32, q: u32, value: Complex64) -> Self {
        let mut omega = self.omega.clone();
        omega.insert((p, q), value);
        Self {
            omega,
            cutoff: self.cutoff,
        }
    }
}

/// Extracts the odd Grunsky table of `sqrt(f(z^2))` for a normalized series
/// `f` (zero constant term, unit linear term) with order at least
/// `2 * cutoff + 2`.
///
/// The divided difference `(g(t) - g(z)) / (t - z)` is expanded as a
/// polynomial in `t` whose coefficients are truncated series in `z`:
/// `h_k(z) = sum_m c_{k+m+1} z^m` with `c` the coefficients of `g`. Its
/// bivariate logarithm follows from the same `D' = L' D` recurrence used for
/// univariate logs, taken coefficient-wise over the ring of truncated series.
pub fn grunsky_table(f: &PowerSeries, cutoff: u32) -> Result<GrunskyTable, GrunskyError> {
    let needed = 2 * cutoff as usize + 2;
    if f.order() < needed {
        return Err(GrunskyError::InsufficientOrder {
            cutoff,
            needed,
            got: f.order(),
        });
    }
    if f.coeff(0).norm() > 1e-12 || (f.coeff(1) - Complex64::ONE).norm() > 1e-12 {
        return Err(GrunskyError::NotNormalized);
    }
    let m = cutoff as usize;

    // g = z * sqrt(u(z^2)) with u = f/z; need coefficients of g up to 2m+1,
    // i.e. sqrt(u(z^2)) up to order 2m.
    let u = f.shift_down(1)?;
    let v = u.stretch2().truncate(2 * m);
    let s = v.sqrt()?;
    let g_coeff = |j: usize| -> Complex64 {
        // coefficient of z^j in g = z * s(z)
        if j == 0 {
            Complex64::ZERO
        } else {
            s.coeff(j - 1)
        }
    };

    // h_k(z) = sum_m c_{k+m+1} z^m, truncated at z-order m
    let h: Vec<PowerSeries> = (0..=m)
        .map(|k| {
            PowerSeries::new((0..=m).map(|j| g_coeff(k + j + 1)).collect())
        })
        .collect();

    // L_0 = log h_0; L_n = (h_n - (1/n) sum_{j=1}^{n-1} j L_j h_{n-j}) / h_0
    let h0_inv = h[0].recip()?;
    let mut l: Vec<PowerSeries> = Vec::with_capacity(m + 1);
    l.push(h[0].log()?);
    for n in 1..=m {
        let mut acc = PowerSeries::zero(m);
        for j in 1..n {
            let term = l[j].mul(&h[n - j])?.scale(Complex64::new(j as f64, 0.0));
            acc = acc.add(&term)?;
        }
        let rhs = h[n].sub(&acc.scale(Complex64::new(1.0 / n as f64, 0.0)))?;
        l.push(rhs.mul(&h0_inv)?);
    }

    let mut omega = BTreeMap::new();
    for p in (1..=cutoff).step_by(2) {
        for q in (1..=cutoff).step_by(2) {
            omega.insert((p, q), l[p as usize].coeff(q as usize));
        }
    }
    Ok(GrunskyTable { omega, cutoff })
}

/// Residuals of the six coefficient identities tying the odd table to
/// `a_2 .. a_5` (`a` is the full sequence with `a[0] = a_1`). The last two
/// rows are the homogeneous identities; all six vanish for tables extracted
/// from a genuine normalized series.
pub fn verify_grunsky_identities(
    table: &GrunskyTable,
    a: &[Complex64],
) -> Result<[Complex64; 6], GrunskyError> {
    if a.len() < 5 {
        return Err(GrunskyError::InsufficientOrder {
            cutoff: table.cutoff,
            needed: 5,
            got: a.len(),
        });
    }
    let (a2, a3, a4, a5) = (a[1], a[2], a[3], a[4]);
    let w11 = table.get(1, 1)?;
    let w13 = table.get(1, 3)?;
    let w33 = table.get(3, 3)?;
    let w15 = table.get(1, 5)?;
    let w35 = table.get(3, 5)?;
    let w17 = table.get(1, 7)?;
    let third = Complex64::new(1.0 / 3.0, 0.0);
    Ok([
        a2 - 2.0 * w11,
        a3 - (2.0 * w13 + 3.0 * w11.powu(2)),
        a4 - (2.0 * w33 + 8.0 * w11 * w13 + 10.0 * third * w11.powu(3)),
        a5 - (2.0 * w35 + 8.0 * w11 * w33 + 5.0 * w13.powu(2) + 18.0 * w11.powu(2) * w13
            + 7.0 * third * w11.powu(4)),
        3.0 * w15 - 3.0 * w11 * w13 + w11.powu(3) - 3.0 * w33,
        w17 - w35 - w11 * w33 - w13.powu(2) + third * w11.powu(4),
    ])
}

/// Both sides of the weighted quadratic inequality
/// `sum_q (2q-1) |sum_p w_{2p-1,2q-1} x_{2p-1}|^2 <= sum_p |x_{2p-1}|^2/(2p-1)`
/// truncated at the table cutoff; `x[i]` is `x_{2i+1}`.
pub fn grunsky_functional(
    table: &GrunskyTable,
    x: &[Complex64],
) -> Result<(f64, f64), GrunskyError> {
    let terms = (table.cutoff as usize + 1) / 2;
    if x.len() > terms {
        return Err(GrunskyError::MissingEntry(
            2 * x.len() as u32 - 1,
            2 * x.len() as u32 - 1,
        ));
    }
    let mut lhs = 0.0;
    for qi in 0..terms {
        let q = 2 * qi as u32 + 1;
        let mut inner = Complex64::ZERO;
        for (pi, &xp) in x.iter().enumerate() {
            if xp != Complex64::ZERO {
                inner += table.get(2 * pi as u32 + 1, q)? * xp;
            }
        }
        lhs += q as f64 * inner.norm_sqr();
    }
    let rhs = x
        .iter()
        .enumerate()
        .map(|(pi, xp)| xp.norm_sqr() / (2 * pi + 1) as f64)
        .sum();
    Ok((lhs, rhs))
}
