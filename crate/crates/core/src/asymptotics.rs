//! The continuous limit density on the main Weyl chamber and its
//! normalisation checks.
//!
//! In rescaled coordinates `x_i = a_i / sqrt(N)` the density is
//!
//! ```text
//!   φ(x) = c_n · ∏_{i<j} (x_i² - x_j²)² · ∏_l x_l² · exp(-½ Σ x_k²),
//!   c_n  = 2^{2n} n! / ((2π)^{n/2} (2n)!(2n-2)!…2!)
//! ```
//!
//! Integrating φ over ℝⁿ gives the Weyl order `2ⁿ n!` (a Mehta-type integral
//! in Macdonald's closed form), so the integral over the open chamber
//! `x_1 > … > x_n > 0` is exactly 1.  φ is also proportional to the radial
//! eigenvalue density of the invariant measure on `so(2n+1)` times a
//! Gaussian; both proportionality and normalisation are verified here by
//! Gauss–Hermite quadrature, which is exact for these polynomial-times-
//! Gaussian integrands.

use crate::lattice::Rank;
use crate::quadrature::{for_each_multi_index, gauss_hermite, KahanSum};
use crate::{Error, Result};
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{BigUint, One};

/// Largest rank served by the default-budget quadrature entry points.
pub const DEFAULT_MAX_QUADRATURE_RANK: usize = 4;

fn factorial_f64(k: usize) -> f64 {
    (1..=k).map(|v| v as f64).product()
}

/// The limit probability density φ on ℝⁿ with its normalisation constant.
#[derive(Debug, Clone, Copy)]
pub struct LimitDensity {
    n: Rank,
    norm_const: f64,
}

impl LimitDensity {
    pub fn new(n: Rank) -> Self {
        let nn = n.get();
        let mut denom = (2.0 * std::f64::consts::PI).powf(nn as f64 / 2.0);
        for j in 1..=nn {
            denom *= factorial_f64(2 * j);
        }
        let norm_const = 2f64.powi(2 * nn as i32) * factorial_f64(nn) / denom;
        LimitDensity { n, norm_const }
    }

    #[inline]
    pub fn rank(&self) -> Rank {
        self.n
    }

    #[inline]
    pub fn norm_const(&self) -> f64 {
        self.norm_const
    }

    /// φ(x); symmetric under permutations and sign flips, zero on the
    /// chamber walls (`x_i = 0` or `|x_i| = |x_j|`).
    pub fn pdf(&self, x: &[f64]) -> f64 {
        let nn = self.n.get();
        assert_eq!(x.len(), nn, "rank mismatch");
        let mut value = self.norm_const;
        let mut sq = 0.0;
        for i in 0..nn {
            value *= x[i] * x[i];
            sq += x[i] * x[i];
            for j in i + 1..nn {
                let d = x[i] * x[i] - x[j] * x[j];
                value *= d * d;
            }
        }
        value * (-0.5 * sq).exp()
    }

    /// The polynomial factor of φ (everything except the Gaussian):
    /// `c_n · ∏_{i<j}(x_i²-x_j²)² · ∏_l x_l²`.  This is what Gauss–Hermite
    /// rules integrate, their weight already being the Gaussian.
    pub fn polynomial_part(&self, x: &[f64]) -> f64 {
        let nn = self.n.get();
        assert_eq!(x.len(), nn, "rank mismatch");
        let mut value = self.norm_const;
        for i in 0..nn {
            value *= x[i] * x[i];
            for j in i + 1..nn {
                let d = x[i] * x[i] - x[j] * x[j];
                value *= d * d;
            }
        }
        value
    }

    /// `ln φ(x)`; `-∞` at chamber walls.  Used by the local-error scans
    /// where the pmf side is also evaluated in log space.
    pub fn ln_pdf(&self, x: &[f64]) -> f64 {
        let nn = self.n.get();
        assert_eq!(x.len(), nn, "rank mismatch");
        let mut acc = KahanSum::new();
        acc.add(self.norm_const.ln());
        let mut sq = 0.0;
        for i in 0..nn {
            if x[i] == 0.0 {
                return f64::NEG_INFINITY;
            }
            acc.add(2.0 * x[i].abs().ln());
            sq += x[i] * x[i];
            for j in i + 1..nn {
                let d = x[i] * x[i] - x[j] * x[j];
                if d == 0.0 {
                    return f64::NEG_INFINITY;
                }
                acc.add(2.0 * d.abs().ln());
            }
        }
        acc.add(-0.5 * sq);
        acc.value()
    }
}

/// ∫ φ over the main Weyl chamber, computed as the ℝⁿ integral divided by
/// the Weyl order `2ⁿ n!`.  Gauss–Hermite with `2n+3` nodes per axis is
/// already exact for the integrand; the result differs from 1 only by
/// rounding.
pub fn chamber_norm(n: Rank) -> Result<f64> {
    if n.get() > DEFAULT_MAX_QUADRATURE_RANK {
        return Err(Error::RankTooLarge {
            rank: n.get(),
            max: DEFAULT_MAX_QUADRATURE_RANK,
        });
    }
    chamber_norm_with_nodes(n, 2 * n.get() + 3)
}

/// Same as [`chamber_norm`] with an explicit per-axis node count
/// (must be at least `2n+1` for exactness).
pub fn chamber_norm_with_nodes(n: Rank, nodes: usize) -> Result<f64> {
    let nn = n.get();
    let min = 2 * nn + 1;
    if nodes < min {
        return Err(Error::InsufficientNodes {
            rank: nn,
            nodes,
            min,
        });
    }
    let density = LimitDensity::new(n);
    let (t, w) = gauss_hermite(nodes);
    let sqrt2 = std::f64::consts::SQRT_2;
    let mut acc = KahanSum::new();
    let mut x = vec![0.0; nn];
    for_each_multi_index(nn, nodes, |idx| {
        let mut weight = 1.0;
        for (axis, &i) in idx.iter().enumerate() {
            weight *= w[i];
            x[axis] = sqrt2 * t[i];
        }
        acc.add(weight * density.polynomial_part(&x));
    });
    let weyl_order = n.weyl_order() as f64;
    Ok(acc.value() * sqrt2.powi(nn as i32) / weyl_order)
}

/// Right-hand side of the Macdonald (Mehta-type) integral for `B_n`:
/// `∏_{j=1}^{n} Γ(1+2jγ)/Γ(1+γ)`, exact for integer `γ`.
pub fn macdonald_rhs(n: Rank, gamma: u32) -> BigRational {
    let mut num = BigUint::one();
    for j in 1..=n.get() as u64 {
        for k in 1..=2 * j * gamma as u64 {
            num *= BigUint::from(k);
        }
    }
    let mut gamma_fact = BigUint::one();
    for k in 1..=gamma as u64 {
        gamma_fact *= BigUint::from(k);
    }
    let mut den = BigUint::one();
    for _ in 0..n.get() {
        den *= &gamma_fact;
    }
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Left-hand side of the Macdonald integral by Gauss–Hermite quadrature:
/// `(2π)^{-n/2} ∫ ∏ (2x_i²)^γ ∏_{i<j} |x_i²-x_j²|^{2γ} e^{-|x|²/2} dx`.
pub fn macdonald_lhs_quadrature(n: Rank, gamma: u32, nodes: Option<usize>) -> Result<f64> {
    let nn = n.get();
    let min = gamma as usize * (2 * nn - 1) + 1;
    let m = nodes.unwrap_or_else(|| min.max(2 * nn + 3));
    if m < min {
        return Err(Error::InsufficientNodes {
            rank: nn,
            nodes: m,
            min,
        });
    }
    let (t, w) = gauss_hermite(m);
    let sqrt2 = std::f64::consts::SQRT_2;
    let mut acc = KahanSum::new();
    let mut x = vec![0.0; nn];
    for_each_multi_index(nn, m, |idx| {
        let mut term = 1.0;
        for (axis, &i) in idx.iter().enumerate() {
            term *= w[i];
            x[axis] = sqrt2 * t[i];
        }
        for i in 0..nn {
            term *= (2.0 * x[i] * x[i]).powi(gamma as i32);
            for j in i + 1..nn {
                let d = (x[i] * x[i] - x[j] * x[j]).abs();
                term *= d.powi(2 * gamma as i32);
            }
        }
        acc.add(term);
    });
    let front = sqrt2.powi(nn as i32) / (2.0 * std::f64::consts::PI).powf(nn as f64 / 2.0);
    Ok(acc.value() * front)
}

/// Radial part of the invariant measure on `so(2n+1)`:
/// `2^{n²}/(πⁿ n!) · ∏_{i<j}(x_i²-x_j²)² ∏_k x_k²` (no Gaussian factor).
#[derive(Debug, Clone, Copy)]
pub struct RadialDensity {
    n: Rank,
    norm_const: f64,
}

impl RadialDensity {
    pub fn new(n: Rank) -> Self {
        let nn = n.get();
        let norm_const = 2f64.powi((nn * nn) as i32)
            / (std::f64::consts::PI.powi(nn as i32) * factorial_f64(nn));
        RadialDensity { n, norm_const }
    }

    #[inline]
    pub fn norm_const(&self) -> f64 {
        self.norm_const
    }

    pub fn pdf(&self, x: &[f64]) -> f64 {
        let nn = self.n.get();
        assert_eq!(x.len(), nn, "rank mismatch");
        let mut value = self.norm_const;
        for i in 0..nn {
            value *= x[i] * x[i];
            for j in i + 1..nn {
                let d = x[i] * x[i] - x[j] * x[j];
                value *= d * d;
            }
        }
        value
    }
}
