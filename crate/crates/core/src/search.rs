//! Searching `G^s` for generating vectors with a small Bykovskii sum.
//!
//! Candidates are produced up front in a fixed order, each one is scored
//! independently, and the winner is the smallest sum with ties broken by the
//! lexicographically smallest vector. The reduction is associative, so any
//! parallel evaluation that uses [`Candidate::better_than`] gives the same
//! result as [`find_good_vector`].

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::discrepancy::{discrepancy_of_korobov, DiscrepancyResult};
use crate::lattice::{bykovskii_sum, q_min, BykovskiiSum, GeneratingVector};
use crate::modp::{inv_mod, mul_mod, PrimeModulus, ResidueSet, Subgroup};
use crate::thresholds::{s_min, DimensionBound};
use crate::{Budget, Error, Result};

/// `Q = p / (2 (ln p)^(s+1))`.
pub fn threshold_q(p: PrimeModulus, s: usize) -> f64 {
    let lp = libm::log(p.get() as f64);
    p.get() as f64 / (2.0 * libm::pow(lp, (s + 1) as f64))
}

/// `(ln p)^(s-1) ln ln p`.
pub fn reference_value(p: u64, s: usize) -> f64 {
    let lp = libm::log(p as f64);
    libm::pow(lp, (s as f64) - 1.0) * libm::log(lp)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OmegaClass {
    /// `q(a) > Q`
    Omega,
    /// `q(a) <= Q`
    Omega1,
}

impl core::fmt::Display for OmegaClass {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(match self {
            OmegaClass::Omega => "OMEGA",
            OmegaClass::Omega1 => "OMEGA1",
        })
    }
}

fn class_of(q: u64, threshold: f64) -> OmegaClass {
    if (q as f64) <= threshold {
        OmegaClass::Omega1
    } else {
        OmegaClass::Omega
    }
}

pub fn classify(a: &GeneratingVector, threshold: f64, budget: &Budget) -> Result<OmegaClass> {
    Ok(class_of(q_min(a, budget.lattice)?.value, threshold))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    /// Every vector of `G^s` in lexicographic order.
    Exhaustive,
    /// Vectors with `a_1 = 1`: one per orbit `{lambda a : lambda in G}`, which
    /// share their lattice.
    Orbits,
    /// Components drawn independently and uniformly from `G` with ChaCha8.
    Random { samples: u64, seed: u64 },
}

#[derive(Debug, Clone)]
pub struct SearchConfig {
    pub subgroup: Subgroup,
    pub dim: usize,
    pub strategy: Strategy,
    pub q_override: Option<f64>,
    pub exact_discrepancy: bool,
    pub budget: Budget,
}

impl SearchConfig {
    pub fn new(subgroup: Subgroup, dim: usize, strategy: Strategy) -> Self {
        SearchConfig { subgroup, dim, strategy, q_override: None, exact_discrepancy: false, budget: Budget::DEFAULT }
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.subgroup.modulus()
    }

    pub fn q_threshold(&self) -> f64 {
        self.q_override.unwrap_or_else(|| threshold_q(self.modulus(), self.dim))
    }
}

fn lexicographic_tuples(elements: &[u64], dim: usize, fixed_first: Option<u64>) -> Vec<Vec<u64>> {
    let free = dim - fixed_first.is_some() as usize;
    let total = elements.len().pow(free as u32);
    let mut out = Vec::with_capacity(total);
    let mut idx = alloc::vec![0usize; free];
    for _ in 0..total {
        let mut v = Vec::with_capacity(dim);
        v.extend(fixed_first);
        v.extend(idx.iter().map(|&i| elements[i]));
        out.push(v);
        for i in (0..free).rev() {
            idx[i] += 1;
            if idx[i] < elements.len() {
                break;
            }
            idx[i] = 0;
        }
    }
    out
}

/// The candidate list for a configuration, in evaluation order.
pub fn candidates(config: &SearchConfig) -> Result<Vec<GeneratingVector>> {
    if config.dim == 0 {
        return Err(Error::ZeroDimension);
    }
    let p = config.modulus().get();
    let elements = config.subgroup.elements();
    let d = elements.len() as u128;
    let raw = match config.strategy {
        Strategy::Exhaustive => {
            Budget::check(d.saturating_pow(config.dim as u32), config.budget.search)?;
            lexicographic_tuples(elements, config.dim, None)
        }
        Strategy::Orbits => {
            Budget::check(d.saturating_pow(config.dim as u32 - 1), config.budget.search)?;
            lexicographic_tuples(elements, config.dim, Some(1))
        }
        Strategy::Random { samples, seed } => {
            if samples == 0 {
                return Err(Error::EmptySample);
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..samples)
                .map(|_| (0..config.dim).map(|_| elements[rng.random_range(0..elements.len())]).collect())
                .collect()
        }
    };
    raw.into_iter().map(|v| GeneratingVector::new(p, v)).collect()
}

/// A scored candidate.
#[derive(Debug, Clone, PartialEq)]
pub struct Candidate {
    pub vector: GeneratingVector,
    pub bykovskii: BykovskiiSum,
}

impl Candidate {
    pub fn evaluate(vector: GeneratingVector, budget: &Budget) -> Result<Candidate> {
        let bykovskii = bykovskii_sum(&vector, budget.lattice)?;
        Ok(Candidate { vector, bykovskii })
    }

    /// Smaller sum wins; ties go to the lexicographically smaller vector.
    pub fn cmp_rank(&self, other: &Candidate) -> Ordering {
        self.bykovskii.cmp_value(&other.bykovskii).then_with(|| self.vector.components().cmp(other.vector.components()))
    }

    pub fn better_than(&self, other: &Candidate) -> bool {
        self.cmp_rank(other) == Ordering::Less
    }

    /// The associative reduction used by every search driver.
    pub fn pick(a: Candidate, b: Candidate) -> Candidate {
        if b.better_than(&a) {
            b
        } else {
            a
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SearchResult {
    pub best: GeneratingVector,
    pub bykovskii: f64,
    pub bykovskii_exact: BigRational,
    pub q: u64,
    pub q_threshold: f64,
    pub omega_class: OmegaClass,
    pub exact_discrepancy: Option<DiscrepancyResult>,
    pub candidates_evaluated: u64,
    /// `(ln p)^(s-1) ln ln p`.
    pub reference: f64,
}

/// Fills in the report for the winning candidate.
pub fn finish(config: &SearchConfig, best: Candidate, evaluated: u64) -> Result<SearchResult> {
    let q = q_min(&best.vector, config.budget.lattice)?.value;
    let q_threshold = config.q_threshold();
    let exact_discrepancy = if config.exact_discrepancy {
        match discrepancy_of_korobov(&best.vector, &config.budget) {
            Ok(d) => Some(d),
            Err(Error::BudgetExceeded { .. }) | Err(Error::Overflow) => None,
            Err(e) => return Err(e),
        }
    } else {
        None
    };
    Ok(SearchResult {
        bykovskii: best.bykovskii.to_f64(),
        bykovskii_exact: best.bykovskii.exact(),
        q,
        q_threshold,
        omega_class: class_of(q, q_threshold),
        exact_discrepancy,
        candidates_evaluated: evaluated,
        reference: reference_value(config.modulus().get(), config.dim),
        best: best.vector,
    })
}

/// Sequential search.
pub fn find_good_vector(config: &SearchConfig) -> Result<SearchResult> {
    let cands = candidates(config)?;
    let evaluated = cands.len() as u64;
    let mut best: Option<Candidate> = None;
    for v in cands {
        let c = Candidate::evaluate(v, &config.budget)?;
        best = Some(match best {
            None => c,
            Some(b) => Candidate::pick(b, c),
        });
    }
    finish(config, best.ok_or(Error::EmptySample)?, evaluated)
}

/// Fraction of the candidates with `q(a) <= Q`.
pub fn omega1_fraction(config: &SearchConfig) -> Result<f64> {
    let threshold = config.q_threshold();
    let cands = candidates(config)?;
    let mut hits = 0u64;
    for a in &cands {
        if classify(a, threshold, &config.budget)? == OmegaClass::Omega1 {
            hits += 1;
        }
    }
    Ok(hits as f64 / cands.len() as f64)
}

/// `lambda . a` normalized so that the first component is 1, or `None` when
/// it is not invertible.
pub fn orbit_representative(a: &GeneratingVector) -> Option<GeneratingVector> {
    let n = a.modulus();
    let inv = inv_mod(a.components()[0], n)?;
    let comps: Vec<u64> = a.components().iter().map(|&c| mul_mod(c, inv, n)).collect();
    GeneratingVector::new(n, comps).ok()
}

#[derive(Debug, Clone, PartialEq)]
pub struct GrowthMeasurement {
    pub order: u64,
    pub best: GeneratingVector,
    pub bykovskii: f64,
    pub exact_discrepancy: Option<f64>,
    pub reference: f64,
    pub ratio: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct GrowthRow {
    pub p: u64,
    pub outcome: core::result::Result<GrowthMeasurement, String>,
}

/// Checks `s >= max(3, s_min(delta))`; `Ok(false)` means the dimension is
/// below the threshold.
pub fn dimension_meets_threshold(delta: &BigRational, s: usize) -> Result<bool> {
    let profile = s_min(delta)?;
    Ok(match profile.s_min {
        DimensionBound::Finite(v) => s >= 3 && num_bigint::BigUint::from(s) >= v,
        DimensionBound::Overflow => false,
    })
}

#[derive(Debug, Clone)]
pub struct GrowthConfig {
    pub primes: Vec<u64>,
    pub delta: BigRational,
    pub dim: usize,
    pub strategy: Strategy,
    pub exact_discrepancy: bool,
    /// Run even when `s < max(3, s_min(delta))`.
    pub allow_below_threshold: bool,
    pub budget: Budget,
}

/// Configuration for one prime of a growth experiment.
pub fn growth_search_config(config: &GrowthConfig, p: u64) -> Result<SearchConfig> {
    let modulus = PrimeModulus::new(p)?;
    let subgroup = Subgroup::smallest_meeting(modulus, &config.delta)?;
    Ok(SearchConfig {
        subgroup,
        dim: config.dim,
        strategy: config.strategy,
        q_override: None,
        exact_discrepancy: config.exact_discrepancy,
        budget: config.budget,
    })
}

pub fn growth_row(p: u64, result: Result<(u64, SearchResult)>) -> GrowthRow {
    let outcome = result
        .map(|(order, r)| GrowthMeasurement {
            order,
            ratio: r.bykovskii / r.reference,
            exact_discrepancy: r.exact_discrepancy.as_ref().map(DiscrepancyResult::to_f64),
            reference: r.reference,
            bykovskii: r.bykovskii,
            best: r.best,
        })
        .map_err(|e| e.to_string());
    GrowthRow { p, outcome }
}

/// Rejects a dimension below the threshold unless explicitly allowed.
pub fn check_growth_config(config: &GrowthConfig) -> Result<bool> {
    dimension_meets_threshold(&config.delta, config.dim)
}

/// Runs the search at each prime; failures are recorded per row.
pub fn growth_experiment(config: &GrowthConfig) -> Result<Vec<GrowthRow>> {
    let meets = check_growth_config(config)?;
    if !meets && !config.allow_below_threshold {
        return Err(Error::OutOfDomain);
    }
    Ok(config
        .primes
        .iter()
        .map(|&p| {
            let run =
                growth_search_config(config, p).and_then(|sc| find_good_vector(&sc).map(|r| (sc.subgroup.order(), r)));
            growth_row(p, run)
        })
        .collect())
}
