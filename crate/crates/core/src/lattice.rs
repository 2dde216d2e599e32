//! Weight-lattice geometry of `B_n = so(2n+1)`.
//!
//! Everything is expressed in the shifted integer coordinates
//! `a_i = (λ + ρ, doubled e-basis)`: the basis vectors are `ẽ_i = e_i / 2`,
//! so the coordinates of `λ + ρ` are `2λ_i + (2n - 2i + 1)` and the Weyl
//! vector itself sits at `(2n-1, 2n-3, …, 1)`.  Dominant regular weights are
//! exactly the strictly decreasing positive integer vectors of uniform
//! parity; the parity class is fixed by the tensor power (`a_i ≡ N+1 mod 2`).

use crate::error::Error;
use crate::Result;
use itertools::Itertools;

/// Algebra rank `n ≥ 1`, fixed per computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rank(usize);

impl Rank {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidRank(n));
        }
        Ok(Rank(n))
    }

    #[inline]
    pub fn get(self) -> usize {
        self.0
    }

    /// a-coordinates of the Weyl vector: `(2n-1, 2n-3, …, 1)`.
    pub fn rho_doubled(self) -> Vec<i64> {
        (0..self.0).map(|i| (2 * (self.0 - i) - 1) as i64).collect()
    }

    /// Order of the Weyl group, `2^n n!`.
    pub fn weyl_order(self) -> u128 {
        let fact: u128 = (1..=self.0 as u128).product();
        (1u128 << self.0) * fact
    }
}

impl std::fmt::Display for Rank {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Canonical dominant-regular lattice point: `a_1 > a_2 > … > a_n > 0`,
/// all entries of one parity.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct APoint {
    coords: Vec<i64>,
}

impl APoint {
    pub fn new(coords: Vec<i64>) -> Result<Self> {
        if !is_dominant_regular(&coords) {
            return Err(Error::NotDominantRegular(coords));
        }
        if !uniform_parity(&coords) {
            return Err(Error::MixedParity(coords));
        }
        Ok(APoint { coords })
    }

    #[inline]
    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    #[inline]
    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    /// Parity class of the entries (0 = even, 1 = odd).
    #[inline]
    pub fn parity(&self) -> u8 {
        self.coords[0].rem_euclid(2) as u8
    }

    /// Rescaled coordinates `x_i = a_i / sqrt(N)`.
    pub fn rescaled(&self, power: u64) -> Vec<f64> {
        let s = (power as f64).sqrt();
        self.coords.iter().map(|&a| a as f64 / s).collect()
    }
}

impl std::fmt::Display for APoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({})", self.coords.iter().join(","))
    }
}

/// Dominant integral weight `λ = Σ m_i ω_i` in the fundamental-weight basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DominantWeight {
    coeffs: Vec<u64>,
}

impl DominantWeight {
    pub fn new(coeffs: Vec<u64>) -> Self {
        DominantWeight { coeffs }
    }

    pub fn zero(n: Rank) -> Self {
        DominantWeight {
            coeffs: vec![0; n.get()],
        }
    }

    /// The `i`-th fundamental weight `ω_i`, `1 ≤ i ≤ n`.
    pub fn fundamental(n: Rank, i: usize) -> Self {
        assert!(
            i >= 1 && i <= n.get(),
            "fundamental weight index out of range"
        );
        let mut coeffs = vec![0; n.get()];
        coeffs[i - 1] = 1;
        DominantWeight { coeffs }
    }

    #[inline]
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    #[inline]
    pub fn rank(&self) -> usize {
        self.coeffs.len()
    }
}

/// Shifted coordinates of `λ + ρ`: `a_i = 2(m_i + … + m_{n-1}) + m_n + (2n - 2i + 1)`.
///
/// The doubled basis keeps everything in integer arithmetic even though the
/// spinor fundamental weight has half-integer Euclidean coordinates.
pub fn a_from_weight(n: Rank, weight: &DominantWeight) -> Result<APoint> {
    if weight.rank() != n.get() {
        return Err(Error::LengthMismatch {
            expected: n.get(),
            found: weight.rank(),
        });
    }
    let m = weight.coeffs();
    let nn = n.get();
    let spin = m[nn - 1] as i64;
    let mut coords = Vec::with_capacity(nn);
    for i in 0..nn {
        let body: i64 = m[i..nn - 1].iter().map(|&v| v as i64).sum();
        let rho_i = (2 * (nn - i) - 1) as i64;
        coords.push(2 * body + spin + rho_i);
    }
    APoint::new(coords)
}

/// Inverse of [`a_from_weight`]: `m_i = (a_i - a_{i+1} - 2) / 2` for `i < n`,
/// `m_n = a_n - 1`.
pub fn weight_from_a(n: Rank, a: &APoint) -> Result<DominantWeight> {
    if a.rank() != n.get() {
        return Err(Error::LengthMismatch {
            expected: n.get(),
            found: a.rank(),
        });
    }
    let c = a.coords();
    let nn = n.get();
    let mut coeffs = Vec::with_capacity(nn);
    for i in 0..nn - 1 {
        coeffs.push(((c[i] - c[i + 1] - 2) / 2) as u64);
    }
    coeffs.push((c[nn - 1] - 1) as u64);
    Ok(DominantWeight { coeffs })
}

/// All canonical support points of `(L^{ω_n})^{⊗N}`:
/// `a_i ≡ N+1 (mod 2)`, `a_1 ≤ N + 2n - 1`, `a_1 > … > a_n > 0`,
/// in descending lexicographic order.
pub fn enumerate_support(n: Rank, power: u64) -> Vec<APoint> {
    let top = power as i64 + 2 * n.get() as i64 - 1;
    enumerate_support_bounded(n, power, &vec![top; n.get()])
}

/// Support points whose coordinates additionally satisfy `a_i ≤ upper_i`;
/// same descending lexicographic order as [`enumerate_support`].
pub fn enumerate_support_bounded(n: Rank, power: u64, upper: &[i64]) -> Vec<APoint> {
    assert_eq!(upper.len(), n.get());
    let parity = ((power + 1) % 2) as i64;
    let top = power as i64 + 2 * n.get() as i64 - 1;
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(n.get());
    descend(n.get(), parity, top, upper, &mut current, &mut out);
    out
}

fn descend(
    n: usize,
    parity: i64,
    top: i64,
    upper: &[i64],
    current: &mut Vec<i64>,
    out: &mut Vec<APoint>,
) {
    let depth = current.len();
    if depth == n {
        out.push(APoint {
            coords: current.clone(),
        });
        return;
    }
    let cap = top.min(upper[depth]).min(match current.last() {
        Some(&prev) => prev - 2,
        None => i64::MAX,
    });
    if cap < 1 {
        return;
    }
    let mut a = cap;
    if a.rem_euclid(2) != parity {
        a -= 1;
    }
    while a >= 1 {
        current.push(a);
        descend(n, parity, top, upper, current, out);
        current.pop();
        a -= 2;
    }
}

/// Number of support points of `(n, N)` without enumerating them:
/// strictly decreasing `n`-subsets of the admissible coordinate values.
pub fn support_size(n: Rank, power: u64) -> u128 {
    // admissible values: positive, ≤ N + 2n - 1, parity N+1 mod 2
    let top = power as u128 + 2 * n.get() as u128 - 1;
    let values = if (power + 1) % 2 == 1 {
        top.div_ceil(2) // odd values 1,3,…
    } else {
        top / 2 // even values 2,4,…
    };
    binomial_u128(values, n.get() as u128)
}

fn binomial_u128(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// A Weyl group element of `B_n`: a permutation composed with sign flips.
///
/// Acting on a-coordinates: `(w · a)_i = flips[i] * a[perm[i]]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedPermutation {
    perm: Vec<usize>,
    flips: Vec<i8>,
    sign: i8,
}

impl SignedPermutation {
    #[inline]
    pub fn sign(&self) -> i8 {
        self.sign
    }

    #[inline]
    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    #[inline]
    pub fn flips(&self) -> &[i8] {
        &self.flips
    }

    /// Image of a lattice point under this element.
    pub fn apply(&self, a: &[i64]) -> Vec<i64> {
        self.perm
            .iter()
            .zip(&self.flips)
            .map(|(&p, &f)| f as i64 * a[p])
            .collect()
    }
}

fn permutation_sign(perm: &[usize]) -> i8 {
    let mut inversions = 0usize;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// All `2^n n!` signed permutations with their signs
/// `ε(w) = sgn(perm) · (-1)^{#flips}`.
///
/// Order: permutations lexicographically, flip bitmasks ascending within each
/// permutation, so test baselines are stable.
pub fn weyl_group_iter(n: Rank) -> impl Iterator<Item = SignedPermutation> {
    let nn = n.get();
    (0..nn).permutations(nn).flat_map(move |perm| {
        let perm_sign = permutation_sign(&perm);
        (0u32..(1u32 << nn)).map(move |mask| {
            let flips: Vec<i8> = (0..nn)
                .map(|i| if mask & (1 << i) != 0 { -1 } else { 1 })
                .collect();
            let flip_sign = if mask.count_ones() % 2 == 0 { 1 } else { -1 };
            SignedPermutation {
                perm: perm.clone(),
                flips,
                sign: perm_sign * flip_sign,
            }
        })
    })
}

/// Required parity of a-coordinates for tensor power `N` (`a_i ≡ N+1 mod 2`).
#[inline]
pub fn required_parity(power: u64) -> u8 {
    ((power + 1) % 2) as u8
}

/// Check parity of a raw lattice point against the congruence class of `N`.
pub fn check_parity(coords: &[i64], power: u64) -> Result<()> {
    if !uniform_parity(coords) {
        return Err(Error::MixedParity(coords.to_vec()));
    }
    let required = required_parity(power);
    let found = coords[0].rem_euclid(2) as u8;
    if found != required {
        return Err(Error::ParityMismatch {
            coords: coords.to_vec(),
            power,
            found,
            required,
        });
    }
    Ok(())
}

fn is_dominant_regular(coords: &[i64]) -> bool {
    !coords.is_empty()
        && coords.windows(2).all(|w| w[0] > w[1])
        && *coords.last().unwrap() > 0
}

fn uniform_parity(coords: &[i64]) -> bool {
    match coords.first() {
        None => true,
        Some(&c0) => coords.iter().all(|&c| (c - c0) % 2 == 0),
    }
}
