//! Dense polynomials over GF(p), little-endian coefficient vectors.
//!
//! Only what the field constructor needs: multiplication and remainder for
//! table building, and gcd / modular powering for the irreducibility test.

use alloc::vec;
use alloc::vec::Vec;

pub(crate) fn trim(mut a: Vec<u32>) -> Vec<u32> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn inv_mod(a: u32, p: u32) -> u32 {
    pow_mod(a, p - 2, p)
}

pub(crate) fn pow_mod(base: u32, mut exp: u32, p: u32) -> u32 {
    let p = p as u64;
    let mut acc = 1u64;
    let mut b = base as u64 % p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        exp >>= 1;
    }
    acc as u32
}

pub(crate) fn sub(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let len = a.len().max(b.len());
    let out = (0..len)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            (x + p - y) % p
        })
        .collect();
    trim(out)
}

pub(crate) fn mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x as u64 * y as u64) % p as u64;
        }
    }
    trim(out.into_iter().map(|c| c as u32).collect())
}

/// Remainder of `a` modulo a nonzero `m`.
pub(crate) fn rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut r = trim(a.to_vec());
    let m = trim(m.to_vec());
    let dm = m.len() - 1;
    let lead_inv = inv_mod(*m.last().expect("nonzero modulus"), p);
    while r.len() > dm {
        let shift = r.len() - 1 - dm;
        let factor = (*r.last().unwrap() as u64 * lead_inv as u64 % p as u64) as u32;
        for (i, &c) in m.iter().enumerate() {
            let idx = i + shift;
            let t = (factor as u64 * c as u64 % p as u64) as u32;
            r[idx] = (r[idx] + p - t) % p;
        }
        r = trim(r);
    }
    r
}

/// Monic gcd.
pub(crate) fn gcd(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut x = trim(a.to_vec());
    let mut y = trim(b.to_vec());
    while !y.is_empty() {
        let r = rem(&x, &y, p);
        x = y;
        y = r;
    }
    // normalize to monic
    if let Some(&lead) = x.last() {
        let li = inv_mod(lead, p) as u64;
        for c in x.iter_mut() {
            *c = (*c as u64 * li % p as u64) as u32;
        }
    }
    x
}

/// `base^(p^k)` reduced modulo `m`.
fn frobenius_power_mod(base: &[u32], k: u32, m: &[u32], p: u32) -> Vec<u32> {
    let mut acc = rem(base, m, p);
    for _ in 0..k {
        acc = pow_poly_mod(&acc, p as u64, m, p);
    }
    acc
}

pub(crate) fn pow_poly_mod(base: &[u32], mut exp: u64, m: &[u32], p: u32) -> Vec<u32> {
    let mut acc = vec![1u32];
    let mut b = rem(base, m, p);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = rem(&mul(&acc, &b, p), m, p);
        }
        b = rem(&mul(&b, &b, p), m, p);
        exp >>= 1;
    }
    acc
}

/// A monic `f` of degree `d` is irreducible iff it shares no factor with
/// `x^(p^i) - x` for `1 <= i <= d/2`.
pub(crate) fn is_irreducible(f: &[u32], p: u32) -> bool {
    let f = trim(f.to_vec());
    let degree = f.len().saturating_sub(1);
    if degree == 0 {
        return false;
    }
    let x = [0u32, 1];
    for i in 1..=(degree / 2) as u32 {
        let xp = frobenius_power_mod(&x, i, &f, p);
        let g = gcd(&f, &sub(&xp, &x, p), p);
        if g.len() != 1 {
            return false;
        }
    }
    true
}

pub(crate) fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn irreducibility_small_cases() {
        // x^2 + 1 over GF(3) is irreducible, over GF(5) it splits.
        assert!(is_irreducible(&[1, 0, 1], 3));
        assert!(!is_irreducible(&[1, 0, 1], 5));
        // (x+1)(x^2+1) over GF(3)
        let f = mul(&[1, 1], &[1, 0, 1], 3);
        assert!(!is_irreducible(&f, 3));
        // Degree 4 with two quadratic factors and no roots.
        let f = mul(&[1, 0, 1], &[2, 1, 1], 3);
        assert!(!is_irreducible(&f, 3));
    }

    #[test]
    fn remainder_and_gcd() {
        // x^2 mod (x^2 + 2x + 2) over GF(3) is x + 1
        assert_eq!(rem(&[0, 0, 1], &[2, 2, 1], 3), vec![1, 1]);
        let g = gcd(&mul(&[1, 1], &[2, 1], 5), &mul(&[1, 1], &[3, 1], 5), 5);
        assert_eq!(g, vec![1, 1]);
    }
}
