//! Exact arithmetic core: closed-form multiplicities, Weyl dimensions, the
//! exact rational probability mass function and full decomposition tables.
//!
//! The extended multiplicity of the lattice point `a` in `(L^{ω_n})^{⊗N}` is
//!
//! ```text
//!          n-1            (N + 2k)!
//!   M̃(a) =  ∏  ─────────────────────────────────────── · ∏ a_l · ∏ (a_i² - a_j²)
//!          k=0  2^{2k} ((N+a_{k+1}+2n-1)/2)! ((N-a_{k+1}+2n-1)/2)!   l     i<j
//! ```
//!
//! evaluated over exact rationals and asserted integral.  It is antisymmetric
//! under signed permutations of `a`; its restriction to canonical
//! dominant-regular points is the tensor-product multiplicity certified
//! against the two independent oracles in [`crate::oracle`].
//!
//! All factorial quotients stay exact; the floating path ([`LogPmf`]) exists
//! separately so callers choose explicitly, and is tested against the exact
//! one wherever the latter is computable.

use crate::lattice::{self, APoint, Rank};
use crate::quadrature::KahanSum;
use crate::Result;
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{BigUint, Integer, One, Signed, Zero};

/// Tensor-product multiplicity (arbitrary precision, nonnegative).
pub type Multiplicity = BigUint;
/// Exact probability in `[0, 1]`.
pub type ExactProb = BigRational;

/// Cumulative factorial table `0! … max!`.
struct FactorialTable {
    facts: Vec<BigInt>,
}

impl FactorialTable {
    fn up_to(max: usize) -> Self {
        let mut facts = Vec::with_capacity(max + 1);
        facts.push(BigInt::one());
        for k in 1..=max {
            let next = facts.last().unwrap() * BigInt::from(k);
            facts.push(next);
        }
        FactorialTable { facts }
    }

    #[inline]
    fn get(&self, k: i64) -> &BigInt {
        &self.facts[k as usize]
    }
}

fn exact_div(num: BigInt, den: &BigInt, what: &str) -> BigInt {
    let (q, r) = num.div_rem(den);
    assert!(r.is_zero(), "{what} must be an exact integer ratio");
    q
}

/// Reusable evaluator for a fixed `(n, N)`: holds the factorial table and the
/// constant parts of the multiplicity formula so that scans over many lattice
/// points amortise them.
pub struct Evaluator {
    n: Rank,
    power: u64,
    facts: FactorialTable,
    /// ∏_{k=0}^{n-1} (N+2k)!
    numerator_const: BigInt,
    /// 2^{n(n-1)}
    two_pow: BigInt,
}

impl Evaluator {
    pub fn new(n: Rank, power: u64) -> Self {
        let nn = n.get();
        let facts = FactorialTable::up_to(power as usize + 2 * nn);
        let mut numerator_const = BigInt::one();
        for k in 0..nn {
            numerator_const *= facts.get(power as i64 + 2 * k as i64);
        }
        let two_pow = BigInt::one() << (nn * (nn - 1));
        Evaluator {
            n,
            power,
            facts,
            numerator_const,
            two_pow,
        }
    }

    #[inline]
    pub fn rank(&self) -> Rank {
        self.n
    }

    #[inline]
    pub fn power(&self) -> u64 {
        self.power
    }

    /// Extended multiplicity `M̃` at an arbitrary lattice point of the right
    /// congruence class.  Zero whenever some `|a_i| > N + 2n - 1` (a factorial
    /// argument would go negative), signed in general, and antisymmetric
    /// under coordinate transpositions and sign flips.
    pub fn multiplicity_signed(&self, coords: &[i64]) -> Result<BigInt> {
        let nn = self.n.get();
        if coords.len() != nn {
            return Err(crate::Error::LengthMismatch {
                expected: nn,
                found: coords.len(),
            });
        }
        lattice::check_parity(coords, self.power)?;
        let bound = self.power as i64 + 2 * nn as i64 - 1;
        if coords.iter().any(|&a| a.abs() > bound) {
            return Ok(BigInt::zero());
        }
        // ∏ a_l · ∏_{i<j} (a_i² - a_j²)
        let mut poly = BigInt::one();
        for &a in coords {
            poly *= BigInt::from(a);
        }
        for i in 0..nn {
            for j in i + 1..nn {
                poly *= BigInt::from(coords[i] * coords[i] - coords[j] * coords[j]);
            }
        }
        if poly.is_zero() {
            return Ok(poly);
        }
        let mut den = self.two_pow.clone();
        let shift = 2 * nn as i64 - 1;
        for &a in coords {
            den *= self.facts.get((self.power as i64 + a + shift) / 2);
            den *= self.facts.get((self.power as i64 - a + shift) / 2);
        }
        Ok(exact_div(&self.numerator_const * poly, &den, "multiplicity"))
    }

    /// Multiplicity of the irreducible component at a canonical point.
    pub fn multiplicity(&self, a: &APoint) -> Result<Multiplicity> {
        let signed = self.multiplicity_signed(a.coords())?;
        debug_assert!(!signed.is_negative());
        Ok(signed.to_biguint().expect("dominant multiplicity is nonnegative"))
    }

    /// Exact probability `μ_N(a) = M̃(a) · dim(a) / 2^{nN}`.
    pub fn pmf(&self, a: &APoint) -> Result<ExactProb> {
        let mult = self.multiplicity(a)?;
        if mult.is_zero() {
            return Ok(BigRational::zero());
        }
        let weight = BigInt::from(mult * dim_irrep(self.n, a));
        Ok(BigRational::new(weight, self.total_dim()))
    }

    /// `2^{nN}`, the dimension of the full tensor power.
    pub fn total_dim(&self) -> BigInt {
        BigInt::one() << (self.n.get() as u64 * self.power) as usize
    }
}

/// One-shot wrapper around [`Evaluator::multiplicity_signed`].
pub fn multiplicity_closed(n: Rank, power: u64, coords: &[i64]) -> Result<BigInt> {
    Evaluator::new(n, power).multiplicity_signed(coords)
}

/// Dimension of the irreducible `B_n` module with highest weight at `a`,
/// specialised closed form
/// `dim = ∏_{i<j}(a_i²-a_j²) ∏_l a_l · 2^{2n-n²} n! / ((2n)!(2n-2)!…2!)`.
pub fn dim_irrep(n: Rank, a: &APoint) -> BigUint {
    assert_eq!(a.rank(), n.get(), "rank mismatch");
    let nn = n.get();
    let mut num = BigUint::one();
    for &c in a.coords() {
        num *= BigUint::from(c as u64);
    }
    for i in 0..nn {
        for j in i + 1..nn {
            let d = a.coords()[i] * a.coords()[i] - a.coords()[j] * a.coords()[j];
            num *= BigUint::from(d as u64);
        }
    }
    for k in 1..=nn as u64 {
        num *= BigUint::from(k); // n!
    }
    num <<= 2 * nn; // 2^{2n}
    let mut den = BigUint::one() << (nn * nn); // 2^{n²}
    for j in 1..=nn as u64 {
        for k in 1..=2 * j {
            den *= BigUint::from(k); // (2j)!
        }
    }
    let (q, r) = num.div_rem(&den);
    assert!(r.is_zero(), "Weyl dimension must be integral");
    q
}

/// Independent dimension path: the Weyl dimension formula as a product over
/// the positive roots `{e_i} ∪ {e_i ± e_j}` evaluated in doubled coordinates
/// (`(a, α) / (ρ̃, α)`, the doubling cancels).
pub fn dim_irrep_by_roots(n: Rank, a: &APoint) -> BigUint {
    assert_eq!(a.rank(), n.get(), "rank mismatch");
    let nn = n.get();
    let rho = n.rho_doubled();
    let c = a.coords();
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..nn {
        num *= BigInt::from(c[i]);
        den *= BigInt::from(rho[i]);
        for j in i + 1..nn {
            num *= BigInt::from(c[i] - c[j]);
            num *= BigInt::from(c[i] + c[j]);
            den *= BigInt::from(rho[i] - rho[j]);
            den *= BigInt::from(rho[i] + rho[j]);
        }
    }
    exact_div(num, &den, "Weyl dimension (root product)")
        .to_biguint()
        .expect("dimension is positive")
}

/// One-shot exact pmf; builds a fresh factorial table, so prefer
/// [`Evaluator`] for scans.
pub fn pmf(n: Rank, power: u64, a: &APoint) -> Result<ExactProb> {
    Evaluator::new(n, power).pmf(a)
}

/// One decomposition row: point, multiplicity, dimension, exact probability.
#[derive(Debug, Clone, PartialEq)]
pub struct TableRow {
    pub a: APoint,
    pub multiplicity: Multiplicity,
    pub dim: BigUint,
    pub prob: ExactProb,
}

/// Full decomposition of `(L^{ω_n})^{⊗N}` over its dominant support, rows in
/// descending lexicographic order of `a`.
#[derive(Debug, Clone)]
pub struct DecompositionTable {
    pub n: Rank,
    pub power: u64,
    pub rows: Vec<TableRow>,
}

impl DecompositionTable {
    /// Compute the table and check both sum rules
    /// (`Σ mult·dim = 2^{nN}`, `Σ prob = 1`) exactly.
    pub fn compute(n: Rank, power: u64) -> Result<Self> {
        let eval = Evaluator::new(n, power);
        let mut rows = Vec::new();
        for a in lattice::enumerate_support(n, power) {
            let multiplicity = eval.multiplicity(&a)?;
            let dim = dim_irrep(n, &a);
            let weight = BigInt::from(&multiplicity * &dim);
            let prob = BigRational::new(weight, eval.total_dim());
            rows.push(TableRow {
                a,
                multiplicity,
                dim,
                prob,
            });
        }
        let table = DecompositionTable { n, power, rows };
        let check = check_sum_rules(&table);
        assert!(
            check.passed(),
            "decomposition table violates its sum rules: {check:?}"
        );
        Ok(table)
    }
}

/// Outcome of the two exact sum rules for a set of rows.
#[derive(Debug, Clone, PartialEq)]
pub struct SumRuleCheck {
    pub mult_dim_sum: BigInt,
    pub expected_mult_dim_sum: BigInt,
    pub prob_sum: BigRational,
}

impl SumRuleCheck {
    pub fn mult_dim_ok(&self) -> bool {
        self.mult_dim_sum == self.expected_mult_dim_sum
    }

    pub fn prob_ok(&self) -> bool {
        self.prob_sum == BigRational::one()
    }

    pub fn passed(&self) -> bool {
        self.mult_dim_ok() && self.prob_ok()
    }
}

/// Verify `Σ mult·dim = 2^{nN}` and `Σ prob = 1` on the given rows.  Kept
/// separate from table construction so harnesses can feed perturbed rows.
pub fn check_sum_rules(table: &DecompositionTable) -> SumRuleCheck {
    check_sum_rules_rows(table.n, table.power, &table.rows)
}

pub fn check_sum_rules_rows(n: Rank, power: u64, rows: &[TableRow]) -> SumRuleCheck {
    let mut mult_dim_sum = BigInt::zero();
    let mut prob_sum = BigRational::zero();
    for row in rows {
        mult_dim_sum += BigInt::from(&row.multiplicity * &row.dim);
        prob_sum += &row.prob;
    }
    SumRuleCheck {
        mult_dim_sum,
        expected_mult_dim_sum: BigInt::one() << (n.get() as u64 * power) as usize,
        prob_sum,
    }
}

/// Log-space pmf evaluator for a fixed `(n, N)`.
///
/// Holds a compensated prefix table of `ln k!`, so per-point evaluation is
/// `O(n²)`.  Agrees with `ln` of the exact pmf to better than `1e-10`
/// wherever the exact path is practical; out-of-support points map to `-∞`.
pub struct LogPmf {
    n: Rank,
    power: u64,
    ln_fact: Vec<f64>,
    constant: f64,
}

impl LogPmf {
    pub fn new(n: Rank, power: u64) -> Self {
        let nn = n.get();
        let max = power as usize + 2 * nn;
        let mut ln_fact = Vec::with_capacity(max + 1);
        let mut acc = KahanSum::new();
        ln_fact.push(0.0);
        for k in 1..=max {
            acc.add((k as f64).ln());
            ln_fact.push(acc.value());
        }
        let ln2 = std::f64::consts::LN_2;
        let mut constant = KahanSum::new();
        for k in 0..nn {
            constant.add(ln_fact[power as usize + 2 * k]);
            constant.add(-(2 * k as i64) as f64 * ln2);
        }
        let n_i = nn as i64;
        constant.add((-n_i * n_i + 2 * n_i - n_i * power as i64) as f64 * ln2);
        constant.add(ln_fact[nn]);
        for j in 1..=nn {
            constant.add(-ln_fact[2 * j]);
        }
        LogPmf {
            n,
            power,
            ln_fact,
            constant: constant.value(),
        }
    }

    /// `ln μ_N(a)`; `-∞` for points outside the support (wrong congruence
    /// class or beyond the reachability bound `a_1 ≤ N + 2n - 1`).
    pub fn ln_pmf(&self, a: &APoint) -> f64 {
        let nn = self.n.get();
        assert_eq!(a.rank(), nn, "rank mismatch");
        if lattice::check_parity(a.coords(), self.power).is_err() {
            return f64::NEG_INFINITY;
        }
        let bound = self.power as i64 + 2 * nn as i64 - 1;
        if a.coords()[0] > bound {
            return f64::NEG_INFINITY;
        }
        let mut acc = KahanSum::new();
        acc.add(self.constant);
        let c = a.coords();
        for &ai in c {
            acc.add(-self.ln_fact[((self.power as i64 + ai + 2 * nn as i64 - 1) / 2) as usize]);
            acc.add(-self.ln_fact[((self.power as i64 - ai + 2 * nn as i64 - 1) / 2) as usize]);
            acc.add(2.0 * (ai as f64).ln());
        }
        for i in 0..nn {
            for j in i + 1..nn {
                acc.add(2.0 * ((c[i] * c[i] - c[j] * c[j]) as f64).ln());
            }
        }
        acc.value()
    }
}

/// One-shot wrapper around [`LogPmf`]; builds the `O(N)` table each call.
pub fn log_pmf(n: Rank, power: u64, a: &APoint) -> f64 {
    LogPmf::new(n, power).ln_pmf(a)
}
