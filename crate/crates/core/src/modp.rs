//! Arithmetic modulo a prime, primitive roots, and the multiplicative
//! subgroups of `Z_p*` together with their cosets.

use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};

use crate::{Error, Result};

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

#[inline]
pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    match a.checked_mul(b) {
        Some(prod) => prod % m,
        None => ((a as u128 * b as u128) % m as u128) as u64,
    }
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Inverse of `a` modulo `m`, if `gcd(a, m) = 1`.
pub fn inv_mod(a: u64, m: u64) -> Option<u64> {
    let (mut old_r, mut r) = (a as i128 % m as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 {
        return if m == 1 { Some(0) } else { None };
    }
    Some(old_s.rem_euclid(m as i128) as u64)
}

/// Deterministic Miller-Rabin; the witness set is exact for all `n < 2^64`.
pub fn is_prime(n: u64) -> bool {
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &w in &WITNESSES {
        if n.is_multiple_of(w) {
            return n == w;
        }
    }
    let mut d = n - 1;
    let mut r = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        r += 1;
    }
    'witness: for &w in &WITNESSES {
        let mut x = pow_mod(w, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..r {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Prime factorization by trial division, as `(prime, exponent)` pairs.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut f = 2u64;
    while f.saturating_mul(f) <= n {
        if n.is_multiple_of(f) {
            let mut e = 0;
            while n.is_multiple_of(f) {
                n /= f;
                e += 1;
            }
            out.push((f, e));
        }
        f += if f == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// All positive divisors of `n`, ascending.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut divs = alloc::vec![1u64];
    for (p, e) in factorize(n) {
        let len = divs.len();
        let mut pk = 1;
        for _ in 0..e {
            pk *= p;
            for i in 0..len {
                divs.push(divs[i] * pk);
            }
        }
    }
    divs.sort_unstable();
    divs
}

pub fn euler_phi(n: u64) -> u64 {
    assert!(n >= 1, "euler_phi is defined for n >= 1");
    factorize(n).into_iter().fold(n, |acc, (p, _)| acc / p * (p - 1))
}

/// `base >= target^exponent` for a nonnegative rational exponent.
///
/// Decided in floating point unless the two sides are within a relative
/// `1e-9`, in which case the integer powers are compared exactly.
pub fn at_least_power(base: u64, target: u64, exponent: &BigRational) -> bool {
    let e = crate::rational::to_f64(exponent);
    let lhs = libm::log(base as f64);
    let rhs = e * libm::log(target as f64);
    let scale = lhs.abs().max(rhs.abs()).max(1e-300);
    if (lhs - rhs).abs() > 1e-9 * scale {
        return lhs > rhs;
    }
    let (num, den) = (exponent.numer(), exponent.denom());
    match (num.abs().to_u32(), den.to_u32()) {
        (Some(n), Some(d)) if n <= 1 << 22 && d <= 1 << 22 => {
            if num < &BigInt::from(0) {
                return true;
            }
            BigUint::from(base).pow(d) >= BigUint::from(target).pow(n)
        }
        _ => lhs >= rhs,
    }
}

/// A prime `p >= 3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeModulus(u64);

impl PrimeModulus {
    pub fn new(p: u64) -> Result<Self> {
        if p >= 3 && is_prime(p) {
            Ok(PrimeModulus(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    #[inline]
    pub fn get(self) -> u64 {
        self.0
    }

    /// Smallest `g` in `[2, p-1]` of multiplicative order `p - 1`.
    pub fn primitive_root(self) -> u64 {
        let p = self.0;
        let primes: Vec<u64> = factorize(p - 1).into_iter().map(|(q, _)| q).collect();
        (2..p)
            .find(|&g| primes.iter().all(|&q| pow_mod(g, (p - 1) / q, p) != 1))
            .expect("a prime modulus always has a primitive root")
    }

    /// Multiplicative order of a nonzero residue.
    pub fn order_of(self, x: u64) -> u64 {
        let p = self.0;
        let mut order = p - 1;
        for (q, _) in factorize(p - 1) {
            while order.is_multiple_of(q) && pow_mod(x, order / q, p) == 1 {
                order /= q;
            }
        }
        order
    }
}

pub fn primitive_root(p: PrimeModulus) -> u64 {
    p.primitive_root()
}

/// Anything that is a set of nonzero residues modulo a prime.
pub trait ResidueSet {
    fn modulus(&self) -> PrimeModulus;
    /// Sorted ascending.
    fn elements(&self) -> &[u64];
}

/// The unique subgroup of `Z_p*` of a given order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgroup {
    modulus: PrimeModulus,
    generator: u64,
    elements: Vec<u64>,
}

impl Subgroup {
    /// Subgroup of order `d`, generated by `g^((p-1)/d)` for the smallest
    /// primitive root `g`.
    pub fn of_order(p: PrimeModulus, d: u64) -> Result<Self> {
        let n = p.get() - 1;
        if d == 0 || !n.is_multiple_of(d) {
            return Err(Error::NonDivisorOrder { order: d, group_order: n });
        }
        let generator = pow_mod(p.primitive_root(), n / d, p.get());
        let mut elements = Vec::with_capacity(d as usize);
        let mut x = 1;
        for _ in 0..d {
            elements.push(x);
            x = mul_mod(x, generator, p.get());
        }
        debug_assert_eq!(x, 1);
        elements.sort_unstable();
        Ok(Subgroup { modulus: p, generator, elements })
    }

    /// The whole of `Z_p*`.
    pub fn full(p: PrimeModulus) -> Self {
        Self::of_order(p, p.get() - 1).expect("p - 1 divides itself")
    }

    /// Smallest subgroup with `#G >= p^delta`, for `0 < delta < 1`.
    pub fn smallest_meeting(p: PrimeModulus, delta: &BigRational) -> Result<Self> {
        let zero = BigRational::from_integer(0.into());
        let one = BigRational::from_integer(1.into());
        if delta <= &zero || delta >= &one {
            return Err(Error::OutOfDomain);
        }
        let d = divisors(p.get() - 1)
            .into_iter()
            .find(|&d| at_least_power(d, p.get(), delta))
            .expect("p - 1 >= p^delta whenever delta < 1 and p >= 3");
        Self::of_order(p, d)
    }

    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    pub fn generator(&self) -> u64 {
        self.generator
    }

    pub fn contains(&self, x: u64) -> bool {
        self.elements.binary_search(&(x % self.modulus.get())).is_ok()
    }

    pub fn coset(&self, v: u64) -> Result<Coset> {
        let p = self.modulus.get();
        let v = v % p;
        if v == 0 {
            return Err(Error::ZeroRepresentative);
        }
        let mut elements: Vec<u64> = self.elements.iter().map(|&u| mul_mod(v, u, p)).collect();
        elements.sort_unstable();
        Ok(Coset { representative: v, base: self.clone(), elements })
    }

    /// Smallest element of each coset `tG` in `Z_p*`, ascending.
    pub fn coset_representatives(&self) -> Vec<u64> {
        let p = self.modulus.get();
        let mut seen = alloc::vec![false; p as usize];
        let mut reps = Vec::new();
        for t in 1..p {
            if seen[t as usize] {
                continue;
            }
            reps.push(t);
            for &g in &self.elements {
                seen[mul_mod(t, g, p) as usize] = true;
            }
        }
        reps
    }
}

impl ResidueSet for Subgroup {
    fn modulus(&self) -> PrimeModulus {
        self.modulus
    }
    fn elements(&self) -> &[u64] {
        &self.elements
    }
}

/// `v . G` for a nonzero residue `v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coset {
    representative: u64,
    base: Subgroup,
    elements: Vec<u64>,
}

impl Coset {
    pub fn representative(&self) -> u64 {
        self.representative
    }

    pub fn base(&self) -> &Subgroup {
        &self.base
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

impl ResidueSet for Coset {
    fn modulus(&self) -> PrimeModulus {
        self.base.modulus
    }
    fn elements(&self) -> &[u64] {
        &self.elements
    }
}
