//! Exponential sums `S(t, G) = sum_{g in G} e_p(t g)` over a subgroup, the
//! number `A(P_1..P_s)` of solutions of `a_1 m_1 + ... + a_s m_s = 0 (mod p)`
//! with `a_i in G`, `1 <= m_i <= P_i`, and the constant-free forms of the
//! Konyagin and Garaev bounds.
//!
//! Implied constants are taken to be 1. The bound values are for reporting
//! and are never used as pass/fail thresholds.

use alloc::vec::Vec;
use core::f64::consts::TAU;

use num_complex::Complex64;

use crate::modp::{mul_mod, ResidueSet, Subgroup};
use crate::thresholds::{find_branch_for_size, Branch};
use crate::{Budget, Error, Result};

/// Two `|S|` values closer than this (relative to `#G`) are treated as tied.
const TIE_TOLERANCE: f64 = 1e-9;

/// `e_p(r)` for `r = 0..p`.
fn roots_of_unity(p: u64) -> Vec<Complex64> {
    (0..p)
        .map(|r| {
            let theta = TAU * r as f64 / p as f64;
            Complex64::new(libm::cos(theta), libm::sin(theta))
        })
        .collect()
}

fn sum_with(roots: &[Complex64], t: u64, g: &Subgroup) -> Complex64 {
    let p = g.modulus().get();
    g.elements().iter().map(|&x| roots[mul_mod(t, x, p) as usize]).sum()
}

pub fn character_sum(t: u64, g: &Subgroup) -> Complex64 {
    sum_with(&roots_of_unity(g.modulus().get()), t, g)
}

#[derive(Debug, Clone, PartialEq)]
pub struct SumProfile {
    pub p: u64,
    pub order: u64,
    /// `S(G) = max_{t != 0} |S(t, G)|`.
    pub s_max: f64,
    /// Smallest maximizing `t`.
    pub argmax_t: u64,
}

fn scan(g: &Subgroup, ts: impl Iterator<Item = u64>, budget: &Budget) -> Result<SumProfile> {
    let p = g.modulus().get();
    Budget::check(p as u128 * g.order() as u128, budget.expsum)?;
    let roots = roots_of_unity(p);
    let tol = TIE_TOLERANCE * g.order() as f64;
    let mut best = SumProfile { p, order: g.order(), s_max: -1.0, argmax_t: 0 };
    for t in ts {
        let v = sum_with(&roots, t, g).norm();
        if v > best.s_max + tol {
            best.s_max = v;
            best.argmax_t = t;
        }
    }
    Ok(best)
}

/// Direct scan over every `t in [1, p-1]`.
pub fn max_character_sum(g: &Subgroup, budget: &Budget) -> Result<SumProfile> {
    scan(g, 1..g.modulus().get(), budget)
}

/// Same maximum, scanning one `t` per coset `tG`: `|S(t, G)|` is constant on cosets.
pub fn max_character_sum_by_cosets(g: &Subgroup, budget: &Budget) -> Result<SumProfile> {
    scan(g, g.coset_representatives().into_iter(), budget)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CountBackend {
    /// Exact integer counting: residue histograms of `a m` per coordinate,
    /// combined by cyclic convolution.
    Direct,
    /// `A = (1/p) sum_{n=1}^{p} prod_i sum_{m <= P_i} sum_{a in G} e_p(n a m)`
    /// in double precision, rounded.
    Spectral,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolutionCount {
    pub count: u128,
    /// Distance of the spectral value from the nearest integer; 0 for `Direct`.
    pub rounding_error: f64,
}

/// Exact solution counts in the spectral backend are guaranteed while the
/// deviation stays below this.
pub const SPECTRAL_TOLERANCE: f64 = 1e-3;

fn validate_box(boxes: &[u64]) -> Result<()> {
    if boxes.is_empty() {
        return Err(Error::ZeroDimension);
    }
    if boxes.contains(&0) {
        return Err(Error::EmptyBox);
    }
    Ok(())
}

pub fn count_solutions(g: &Subgroup, boxes: &[u64], backend: CountBackend, budget: &Budget) -> Result<SolutionCount> {
    validate_box(boxes)?;
    match backend {
        CountBackend::Direct => count_direct(g, boxes, budget),
        CountBackend::Spectral => count_spectral(g, boxes, budget),
    }
}

fn count_direct(g: &Subgroup, boxes: &[u64], budget: &Budget) -> Result<SolutionCount> {
    let p = g.modulus().get();
    let pu = p as usize;
    let work: u128 = boxes.iter().map(|&b| g.order() as u128 * b as u128 + (p as u128).pow(2)).sum();
    Budget::check(work, budget.expsum)?;
    // dist[r] = number of partial tuples with a_1 m_1 + ... = r
    let mut dist = alloc::vec![0u128; pu];
    dist[0] = 1;
    for &bound in boxes {
        let mut hist = alloc::vec![0u128; pu];
        for &a in g.elements() {
            for m in 1..=bound {
                hist[mul_mod(a, m, p) as usize] += 1;
            }
        }
        let mut next = alloc::vec![0u128; pu];
        for (r, &x) in dist.iter().enumerate().filter(|(_, x)| **x != 0) {
            for (q, &y) in hist.iter().enumerate().filter(|(_, y)| **y != 0) {
                next[(r + q) % pu] += x * y;
            }
        }
        dist = next;
    }
    Ok(SolutionCount { count: dist[0], rounding_error: 0.0 })
}

fn count_spectral(g: &Subgroup, boxes: &[u64], budget: &Budget) -> Result<SolutionCount> {
    let p = g.modulus().get();
    let work: u128 = boxes.iter().map(|&b| p as u128 * g.order() as u128 * b as u128).sum();
    Budget::check(work, budget.expsum)?;
    let roots = roots_of_unity(p);
    let mut total = Complex64::new(0.0, 0.0);
    for n in 1..=p {
        let mut prod = Complex64::new(1.0, 0.0);
        for &bound in boxes {
            let mut inner = Complex64::new(0.0, 0.0);
            for m in 1..=bound {
                let nm = mul_mod(n, m, p);
                for &a in g.elements() {
                    inner += roots[mul_mod(nm, a, p) as usize];
                }
            }
            prod *= inner;
        }
        total += prod;
    }
    let value = total.re / p as f64;
    let rounded = libm::round(value);
    let rounding_error = (value - rounded).abs().max((total.im / p as f64).abs());
    if rounding_error > SPECTRAL_TOLERANCE || rounded < 0.0 {
        return Err(Error::SpectralMismatch { deviation: rounding_error });
    }
    Ok(SolutionCount { count: rounded as u128, rounding_error })
}

/// `A p / (#G^s prod P_i)`, the quantity expected to stay bounded.
pub fn lemma1_ratio(g: &Subgroup, boxes: &[u64], budget: &Budget) -> Result<f64> {
    let a = count_solutions(g, boxes, CountBackend::Direct, budget)?.count;
    let p = g.modulus().get() as f64;
    let denom = boxes.iter().fold(1.0, |acc, &b| acc * b as f64 * g.order() as f64);
    Ok(a as f64 * p / denom)
}

#[derive(Debug, Clone, PartialEq)]
pub struct KonyaginBound {
    pub m: u32,
    pub branch: Branch,
    /// `ln #G / ln p`.
    pub delta: f64,
    pub exponent_on_order: f64,
    pub exponent_on_p: f64,
    /// Constant-free bound on `S(G)`.
    pub bound: f64,
    /// `min(#G, bound)`, since `|S(t,G)| <= #G` always.
    pub effective: f64,
}

/// Exponents `(on #G, on p)` of the bound for branch `(m, branch)`.
pub fn konyagin_exponents(m: u32, branch: Branch) -> (f64, f64) {
    let m = m as f64;
    let two_pow = libm::pow(2.0, m);
    match branch {
        Branch::Case1 => (1.0 - 2.0 / (m * m) + 2.0 / (two_pow * m * m), 1.0 / (2.0 * m * m)),
        Branch::Case2 => {
            let mm1 = m * (m + 1.0);
            (1.0 - 2.0 / mm1 + 3.0 / (2.0 * two_pow * mm1), 1.0 / (2.0 * mm1))
        }
    }
}

/// Konyagin's bound for the branch selected by the actual size of `G`.
pub fn konyagin_bound(g: &Subgroup) -> Result<KonyaginBound> {
    let p = g.modulus().get();
    let d = g.order();
    let (m, branch) = find_branch_for_size(p, d)?;
    let (eg, ep) = konyagin_exponents(m, branch);
    let bound = libm::pow(d as f64, eg) * libm::pow(p as f64, ep);
    Ok(KonyaginBound {
        m,
        branch,
        delta: libm::log(d as f64) / libm::log(p as f64),
        exponent_on_order: eg,
        exponent_on_p: ep,
        bound,
        effective: bound.min(d as f64),
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GaraevBound {
    /// `#X_1 #X_2 (#X_3 ... #X_n)^(1/81) > p^(1+c)`.
    pub admissible: bool,
    /// `p^(-0.45 c / 2^n)`.
    pub factor: f64,
    /// `n <= 1.44 ln ln p`; at desk scale this rarely holds.
    pub n_in_range: bool,
}

pub fn garaev_bound(p: u64, n: u32, c: f64, sizes: &[u64]) -> Result<GaraevBound> {
    if sizes.len() != n as usize {
        return Err(Error::BadArity { expected: n as usize, found: sizes.len() });
    }
    if n < 3 || c.is_nan() || c <= 0.0 {
        return Err(Error::BadGaraevParameters);
    }
    let ln = |x: u64| libm::log(x as f64);
    let lhs = ln(sizes[0]) + ln(sizes[1]) + sizes[2..].iter().map(|&x| ln(x)).sum::<f64>() / 81.0;
    let lp = ln(p);
    Ok(GaraevBound {
        admissible: lhs > (1.0 + c) * lp,
        factor: libm::exp(-0.45 * c / libm::pow(2.0, n as f64) * lp),
        n_in_range: (n as f64) <= 1.44 * libm::log(lp),
    })
}
