//! Two multiplicity oracles that are independent of the closed form in
//! [`crate::exact`], used to certify it before anything else trusts it.
//!
//! * Reflected free walks: the spinor weight diagram is the `2^n` vectors
//!   `(±1, …, ±1)` in doubled coordinates, so unconstrained `N`-step counts
//!   factor into binomials, and the true multiplicity is the Weyl-group
//!   alternating sum of free counts (reflection principle).
//! * Convolution recurrence: the extended multiplicity field of power `N` is
//!   the field of power `N-1` convolved with the spinor weight diagram; with
//!   Dirichlet zeroing on the shifted chamber walls the dynamic programme
//!   stays on canonical dominant points and reproduces the multiplicities.

use crate::exact;
use crate::lattice::{self, APoint, Rank};
use crate::Result;
use num::bigint::BigInt;
use num::{BigUint, One, Zero};
use std::collections::BTreeMap;

/// Unconstrained walk count (arbitrary precision, nonnegative).
pub type WalkCount = BigUint;

/// `C(n, k)` as an exact big integer.
fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= BigUint::from(n - i);
        acc /= BigUint::from(i + 1);
    }
    acc
}

/// Number of unconstrained `N`-step spinor walks from the origin to the
/// doubled-coordinate lattice point `c`: `∏_i C(N, (N+c_i)/2)`.
/// Zero on parity mismatch or when some `|c_i| > N`.
pub fn walk_count(n: Rank, power: u64, c: &[i64]) -> WalkCount {
    assert_eq!(c.len(), n.get(), "rank mismatch");
    let mut acc = BigUint::one();
    for &ci in c {
        if ci.abs() > power as i64 || (power as i64 + ci) % 2 != 0 {
            return BigUint::zero();
        }
        acc *= binomial(power, ((power as i64 + ci) / 2) as u64);
    }
    acc
}

/// Reflection-principle multiplicity:
/// `M(a) = Σ_{w ∈ W} ε(w) · K_N(w·a − ρ̃)`.
pub fn multiplicity_reflected(n: Rank, power: u64, a: &APoint) -> Result<BigUint> {
    lattice::check_parity(a.coords(), power)?;
    let rho = n.rho_doubled();
    let mut acc = BigInt::zero();
    for w in lattice::weyl_group_iter(n) {
        let image = w.apply(a.coords());
        let c: Vec<i64> = image.iter().zip(&rho).map(|(&x, &r)| x - r).collect();
        let count = BigInt::from(walk_count(n, power, &c));
        if w.sign() > 0 {
            acc += count;
        } else {
            acc -= count;
        }
    }
    Ok(acc
        .to_biguint()
        .expect("reflected multiplicity is nonnegative"))
}

/// Extended multiplicity field restricted to canonical dominant points,
/// keyed by a-coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct MultiplicityField {
    n: Rank,
    power: u64,
    grid: BTreeMap<Vec<i64>, BigUint>,
}

impl MultiplicityField {
    /// Power-zero field: value 1 at the Weyl vector `ρ̃`, zero elsewhere.
    pub fn initial(n: Rank) -> Self {
        let mut grid = BTreeMap::new();
        grid.insert(n.rho_doubled(), BigUint::one());
        MultiplicityField { n, power: 0, grid }
    }

    #[inline]
    pub fn power(&self) -> u64 {
        self.power
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.grid.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.grid.is_empty()
    }

    /// Field value at a canonical point (zero off the retained support).
    pub fn value(&self, a: &APoint) -> BigUint {
        self.grid.get(a.coords()).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<i64>, &BigUint)> {
        self.grid.iter()
    }

    /// One convolution step with the spinor weight diagram: scatter each
    /// value to its `2^n` sign-shift neighbours, dropping anything on a
    /// chamber wall (a zero coordinate or a repeated coordinate).
    pub fn step(&self) -> Self {
        let nn = self.n.get();
        let mut grid: BTreeMap<Vec<i64>, BigUint> = BTreeMap::new();
        for (point, value) in &self.grid {
            for mask in 0u32..(1 << nn) {
                let target: Vec<i64> = point
                    .iter()
                    .enumerate()
                    .map(|(i, &c)| c + if mask & (1 << i) != 0 { -1 } else { 1 })
                    .collect();
                if strictly_inside(&target) {
                    *grid.entry(target).or_default() += value;
                }
            }
        }
        MultiplicityField {
            n: self.n,
            power: self.power + 1,
            grid,
        }
    }
}

fn strictly_inside(coords: &[i64]) -> bool {
    coords.windows(2).all(|w| w[0] > w[1]) && *coords.last().unwrap() > 0
}

/// Run the convolution recurrence for `N` steps.
pub fn multiplicity_recurrence(n: Rank, power: u64) -> MultiplicityField {
    let mut field = MultiplicityField::initial(n);
    for _ in 0..power {
        field = field.step();
    }
    field
}

/// One support point on which the three multiplicity routes disagree.
#[derive(Debug, Clone, PartialEq)]
pub struct Divergence {
    pub a: APoint,
    pub closed: BigInt,
    pub reflected: BigUint,
    pub recurrence: BigUint,
}

/// Result of cross-checking the closed form against both oracles on the full
/// support of `(n, N)`.  Failures are data, not panics.
#[derive(Debug, Clone, PartialEq)]
pub struct EquivalenceReport {
    pub n: Rank,
    pub power: u64,
    pub points: usize,
    pub first_divergence: Option<Divergence>,
}

impl EquivalenceReport {
    pub fn passed(&self) -> bool {
        self.first_divergence.is_none()
    }

    /// Compare pre-computed triples; the first mismatch (in the given order)
    /// is recorded.  Exposed so harnesses can inject perturbed values.
    pub fn from_values(
        n: Rank,
        power: u64,
        rows: impl IntoIterator<Item = (APoint, BigInt, BigUint, BigUint)>,
    ) -> Self {
        let mut points = 0;
        let mut first_divergence = None;
        for (a, closed, reflected, recurrence) in rows {
            points += 1;
            if first_divergence.is_none() {
                let closed_unsigned = closed.to_biguint();
                let agree = closed_unsigned.as_ref() == Some(&reflected)
                    && reflected == recurrence;
                if !agree {
                    first_divergence = Some(Divergence {
                        a,
                        closed,
                        reflected,
                        recurrence,
                    });
                }
            }
        }
        EquivalenceReport {
            n,
            power,
            points,
            first_divergence,
        }
    }
}

/// Certify closed form = reflected walk = recurrence on every support point
/// of `(n, N)`.
pub fn check_equivalence(n: Rank, power: u64) -> Result<EquivalenceReport> {
    let eval = exact::Evaluator::new(n, power);
    let field = multiplicity_recurrence(n, power);
    let mut rows = Vec::new();
    for a in lattice::enumerate_support(n, power) {
        let closed = eval.multiplicity_signed(a.coords())?;
        let reflected = multiplicity_reflected(n, power, &a)?;
        let recurrence = field.value(&a);
        rows.push((a, closed, reflected, recurrence));
    }
    Ok(EquivalenceReport::from_values(n, power, rows))
}
