//! Brute-force reference implementations, deliberately naive and independent
//! of the library's algorithms.
#![allow(dead_code)]

use std::collections::BTreeSet;

/// Canonical sign: first nonzero coordinate positive.
pub fn canon(v: &[i64]) -> Vec<i64> {
    match v.iter().find(|&&x| x != 0) {
        Some(&x) if x < 0 => v.iter().map(|y| -y).collect(),
        _ => v.to_vec(),
    }
}

/// Relative minima by scanning the whole box `[-N, N]^s` and filtering.
pub fn minima_full_box(a: &[u64], n: u64) -> BTreeSet<Vec<i64>> {
    let s = a.len();
    let ni = n as i64;
    let mut pts = BTreeSet::new();
    let mut m = vec![-ni; s];
    loop {
        let dot: i128 = a.iter().zip(&m).map(|(&x, &y)| x as i128 * y as i128).sum();
        if m.iter().any(|&x| x != 0) && dot.rem_euclid(n as i128) == 0 {
            pts.insert(canon(&m));
        }
        let mut i = s;
        loop {
            if i == 0 {
                let pts: Vec<Vec<i64>> = pts.into_iter().collect();
                return pts
                    .iter()
                    .filter(|g| {
                        !pts.iter().any(|h| {
                            h != *g
                                && h.iter().zip(g.iter()).all(|(x, y)| x.abs() <= y.abs())
                                && h.iter().zip(g.iter()).any(|(x, y)| x.abs() < y.abs())
                        })
                    })
                    .cloned()
                    .collect();
            }
            i -= 1;
            m[i] += 1;
            if m[i] <= ni {
                break;
            }
            m[i] = -ni;
        }
    }
}

pub fn height(m: &[i64]) -> u64 {
    m.iter().map(|x| x.unsigned_abs().max(1)).product()
}

/// Continued fraction by repeated subtraction.
pub fn cf_by_subtraction(x: u64, n: u64) -> Vec<u64> {
    let (mut num, mut den) = (x, n);
    let mut out = Vec::new();
    while num != 0 {
        let mut q = 0;
        while den >= num {
            den -= num;
            q += 1;
        }
        out.push(q);
        std::mem::swap(&mut num, &mut den);
    }
    out
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Discrepancy of points with coordinates `c/den`, checking every corner of
/// the full grid `{0, 1/den, ..., 1}^s` with naive counting. Open boxes use
/// `x_i < gamma_i`; the closed variant `x_i <= gamma_i` stands for the limit
/// from above. Returns the value as `numerator / den^s`.
pub fn discrepancy_full_grid(points: &[Vec<u64>], den: u64) -> (u128, u128) {
    let s = points[0].len();
    let n = points.len() as u128;
    let scale = (den as u128).pow(s as u32);
    let mut best = 0u128;
    let mut g = vec![0u64; s];
    loop {
        let vol: u128 = g.iter().map(|&x| x as u128).product();
        let open = points.iter().filter(|p| p.iter().zip(&g).all(|(x, y)| x < y)).count() as u128;
        let closed = points.iter().filter(|p| p.iter().zip(&g).all(|(x, y)| x <= y)).count() as u128;
        let expect = n * vol;
        best = best.max(expect.abs_diff(open * scale));
        if g.iter().all(|&x| x < den) {
            best = best.max((closed * scale).saturating_sub(expect));
        }
        let mut i = s;
        loop {
            if i == 0 {
                return (best, scale);
            }
            i -= 1;
            g[i] += 1;
            if g[i] <= den {
                break;
            }
            g[i] = 0;
        }
    }
}

/// Lower bound: `|count - N vol|` sampled at `gamma_i = k / (den * refine)`.
pub fn discrepancy_sampled(points: &[Vec<u64>], den: u64, refine: u64) -> f64 {
    let s = points[0].len();
    let fine = den * refine;
    let mut best = 0f64;
    let mut g = vec![0u64; s];
    loop {
        let vol: f64 = g.iter().map(|&x| x as f64 / fine as f64).product();
        // x/den < k/fine  <=>  x*refine < k
        let count = points.iter().filter(|p| p.iter().zip(&g).all(|(x, k)| x * refine < *k)).count() as f64;
        best = best.max((count - points.len() as f64 * vol).abs());
        let mut i = s;
        loop {
            if i == 0 {
                return best;
            }
            i -= 1;
            g[i] += 1;
            if g[i] <= fine {
                break;
            }
            g[i] = 0;
        }
    }
}

/// Solutions of `a.m = 0 mod p` with `a_i in G`, `1 <= m_i <= P_i`, by listing every tuple.
pub fn count_by_listing(p: u64, g: &[u64], boxes: &[u64]) -> u64 {
    fn rec(p: u64, g: &[u64], boxes: &[u64], acc: u64) -> u64 {
        match boxes.split_first() {
            None => acc.is_multiple_of(p) as u64,
            Some((&b, rest)) => {
                let mut total = 0;
                for &a in g {
                    for m in 1..=b {
                        total += rec(p, g, rest, (acc + a * m) % p);
                    }
                }
                total
            }
        }
    }
    rec(p, g, boxes, 0)
}
