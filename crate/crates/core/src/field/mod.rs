//! Exact arithmetic in GF(p^m) for odd p.
//!
//! Elements are stored as their coefficient vector packed into an integer,
//! `c_0 + c_1 p + ... + c_{m-1} p^{m-1}`, so the canonical element order is
//! the integer order: the prime subfield comes first and polynomials of lower
//! degree precede higher ones. All arithmetic goes through dense tables built
//! once per field.

mod poly;

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Largest field the dense tables are built for.
pub const MAX_FIELD_ORDER: u32 = 1024;

/// Conway polynomials (little-endian, monic) for the non-prime orders we ship.
const CONWAY: &[(u32, &[u32])] = &[
    (3, &[2, 2, 1]),       // 9
    (3, &[1, 2, 0, 1]),    // 27
    (3, &[2, 0, 0, 2, 1]), // 81
    (5, &[2, 4, 1]),       // 25
    (5, &[3, 3, 0, 1]),    // 125
    (7, &[3, 6, 1]),       // 49
    (11, &[2, 7, 1]),      // 121
    (13, &[2, 12, 1]),     // 169
];

/// Parameters of GF(p^m): the characteristic and a monic irreducible modulus.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldSpec {
    p: u32,
    m: u32,
    modulus: Vec<u32>,
}

impl FieldSpec {
    /// Validates `p` and the modulus (monic, irreducible) and the order bounds.
    pub fn new(p: u32, modulus: Vec<u32>) -> Result<Self> {
        if p == 2 || !poly::is_prime(p) {
            return Err(Error::BadCharacteristic(p));
        }
        if modulus.len() < 2 {
            return Err(Error::BadModulusShape { expected: 2, got: modulus.len() });
        }
        let m = (modulus.len() - 1) as u32;
        if modulus.iter().any(|&c| c >= p) || *modulus.last().unwrap() != 1 {
            return Err(Error::BadModulusShape { expected: modulus.len(), got: modulus.len() });
        }
        let q = (p as u64).checked_pow(m).unwrap_or(u64::MAX);
        if q < 5 || q > MAX_FIELD_ORDER as u64 {
            return Err(Error::BadOrder(q));
        }
        if !poly::is_irreducible(&modulus, p) {
            return Err(Error::ReducibleModulus { p });
        }
        Ok(Self { p, m, modulus })
    }

    /// The prime field GF(p), represented with modulus `x`.
    pub fn prime(p: u32) -> Result<Self> {
        Self::new(p, vec![0, 1])
    }

    /// Prime fields directly, Conway polynomials for the shipped extension orders.
    pub fn builtin(q: u64) -> Result<Self> {
        let (p, m) = prime_power(q).ok_or(Error::BadOrder(q))?;
        if p == 2 || q < 5 {
            return Err(Error::BadOrder(q));
        }
        if m == 1 {
            return Self::prime(p);
        }
        CONWAY
            .iter()
            .find(|(cp, poly)| *cp == p && poly.len() as u32 == m + 1)
            .map(|(_, poly)| Self::new(p, poly.to_vec()))
            .unwrap_or(Err(Error::NoBuiltinModulus(q)))
    }

    /// Uses `modulus` when given, the built-in table otherwise.
    pub fn with_override(q: u64, modulus: Option<&[u32]>) -> Result<Self> {
        match modulus {
            None => Self::builtin(q),
            Some(coeffs) => {
                let (p, m) = prime_power(q).ok_or(Error::BadOrder(q))?;
                if coeffs.len() as u32 != m + 1 {
                    return Err(Error::BadModulusShape { expected: m as usize + 1, got: coeffs.len() });
                }
                Self::new(p, coeffs.to_vec())
            }
        }
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn q(&self) -> u32 {
        self.p.pow(self.m)
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }
}

/// Splits `q` as `p^m` when it is a prime power.
pub fn prime_power(q: u64) -> Option<(u32, u32)> {
    if q < 2 || q > u32::MAX as u64 {
        return None;
    }
    let q = q as u32;
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut rest = q;
    let mut m = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        m += 1;
    }
    (rest == 1).then_some((p, m))
}

/// An element of a [`Field`]. Meaningless without the field that produced it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Fe(u16);

impl Fe {
    pub const ZERO: Fe = Fe(0);
    pub const ONE: Fe = Fe(1);

    /// The element at position `i` of the canonical order; `i < q` is the
    /// caller's responsibility.
    #[inline]
    pub fn from_index(i: usize) -> Fe {
        Fe(i as u16)
    }

    /// Position in the canonical element order.
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// GF(p^m) with precomputed operation tables.
#[derive(Debug, Clone)]
pub struct Field {
    spec: FieldSpec,
    q: u32,
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
    inv: Vec<u16>,
    /// `frob[j][x] = x^(p^j)`
    frob: Vec<Vec<u16>>,
    /// Discrete log to the primitive element; entry 0 unused.
    log: Vec<u32>,
    primitive: Fe,
}

impl Field {
    pub fn new(spec: FieldSpec) -> Self {
        let p = spec.p;
        let m = spec.m as usize;
        let q = spec.q();
        let n = q as usize;

        let digits: Vec<Vec<u32>> = (0..q)
            .map(|v| {
                let mut rest = v;
                (0..m)
                    .map(|_| {
                        let d = rest % p;
                        rest /= p;
                        d
                    })
                    .collect()
            })
            .collect();
        let pack = |c: &[u32]| -> u16 { c.iter().rev().fold(0u32, |acc, &d| acc * p + d) as u16 };

        let mut add = vec![0u16; n * n];
        let mut mul = vec![0u16; n * n];
        let mut sum = vec![0u32; m];
        for x in 0..n {
            for y in x..n {
                for i in 0..m {
                    sum[i] = (digits[x][i] + digits[y][i]) % p;
                }
                let s = pack(&sum);
                add[x * n + y] = s;
                add[y * n + x] = s;

                let mut prod = poly::rem(&poly::mul(&digits[x], &digits[y], p), &spec.modulus, p);
                prod.resize(m, 0);
                let t = pack(&prod);
                mul[x * n + y] = t;
                mul[y * n + x] = t;
            }
        }

        let mut neg = vec![0u16; n];
        let mut inv = vec![0u16; n];
        for x in 0..n {
            neg[x] = (0..n).find(|&y| add[x * n + y] == 0).unwrap() as u16;
            if x != 0 {
                inv[x] = (1..n).find(|&y| mul[x * n + y] == 1).unwrap() as u16;
            }
        }

        let mut frob = Vec::with_capacity(m);
        frob.push((0..n as u16).collect::<Vec<_>>());
        let power_p: Vec<u16> = (0..n)
            .map(|x| {
                let mut acc = 1u16;
                for _ in 0..p {
                    acc = mul[acc as usize * n + x];
                }
                if x == 0 {
                    0
                } else {
                    acc
                }
            })
            .collect();
        for j in 1..m {
            let prev: &Vec<u16> = &frob[j - 1];
            let next = prev.iter().map(|&y| power_p[y as usize]).collect();
            frob.push(next);
        }

        let order = q - 1;
        let factors = prime_factors(order);
        let primitive = (1..n)
            .find(|&g| {
                factors.iter().all(|&l| {
                    let mut acc = 1usize;
                    for _ in 0..order / l {
                        acc = mul[acc * n + g] as usize;
                    }
                    acc != 1
                })
            })
            .expect("multiplicative group is cyclic");

        let mut log = vec![0u32; n];
        let mut acc = 1usize;
        for k in 0..order {
            log[acc] = k;
            acc = mul[acc * n + primitive] as usize;
        }

        Self { spec, q, add, mul, neg, inv, frob, log, primitive: Fe(primitive as u16) }
    }

    /// Field for `q` from the built-in modulus table.
    pub fn of_order(q: u64) -> Result<Self> {
        FieldSpec::builtin(q).map(Self::new)
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn p(&self) -> u32 {
        self.spec.p
    }

    pub fn m(&self) -> u32 {
        self.spec.m
    }

    /// All elements in canonical order.
    pub fn elements(&self) -> impl Iterator<Item = Fe> + Clone {
        (0..self.q as u16).map(Fe)
    }

    pub fn nonzero(&self) -> impl Iterator<Item = Fe> + Clone {
        (1..self.q as u16).map(Fe)
    }

    /// Element with the given little-endian coefficients (missing ones are 0).
    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<Fe> {
        let p = self.spec.p;
        if coeffs.len() > self.spec.m as usize || coeffs.iter().any(|&c| c >= p) {
            return Err(Error::SpecMismatch { q: self.q });
        }
        Ok(Fe(coeffs.iter().rev().fold(0u32, |acc, &d| acc * p + d) as u16))
    }

    pub fn coeffs(&self, x: Fe) -> Vec<u32> {
        let p = self.spec.p;
        let mut rest = x.0 as u32;
        (0..self.spec.m)
            .map(|_| {
                let d = rest % p;
                rest /= p;
                d
            })
            .collect()
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, k: i64) -> Fe {
        Fe(k.rem_euclid(self.spec.p as i64) as u16)
    }

    /// Checks that `x` was produced by a field of this order.
    pub fn check(&self, x: Fe) -> Result<Fe> {
        if (x.0 as u32) < self.q {
            Ok(x)
        } else {
            Err(Error::SpecMismatch { q: self.q })
        }
    }

    #[inline]
    pub fn add(&self, x: Fe, y: Fe) -> Fe {
        Fe(self.add[x.index() * self.q as usize + y.index()])
    }

    #[inline]
    pub fn sub(&self, x: Fe, y: Fe) -> Fe {
        self.add(x, self.neg(y))
    }

    #[inline]
    pub fn neg(&self, x: Fe) -> Fe {
        Fe(self.neg[x.index()])
    }

    #[inline]
    pub fn mul(&self, x: Fe, y: Fe) -> Fe {
        Fe(self.mul[x.index() * self.q as usize + y.index()])
    }

    pub fn checked_add(&self, x: Fe, y: Fe) -> Result<Fe> {
        Ok(self.add(self.check(x)?, self.check(y)?))
    }

    pub fn checked_mul(&self, x: Fe, y: Fe) -> Result<Fe> {
        Ok(self.mul(self.check(x)?, self.check(y)?))
    }

    pub fn inv(&self, x: Fe) -> Result<Fe> {
        if x.is_zero() {
            Err(Error::DivisionByZero)
        } else {
            Ok(Fe(self.inv[x.index()]))
        }
    }

    /// Inverse for callers that have already excluded zero.
    #[inline]
    pub(crate) fn inv_nz(&self, x: Fe) -> Fe {
        debug_assert!(!x.is_zero());
        Fe(self.inv[x.index()])
    }

    pub fn div(&self, x: Fe, y: Fe) -> Result<Fe> {
        Ok(self.mul(x, self.inv(y)?))
    }

    /// `x^n`; negative exponents go through the inverse.
    pub fn pow(&self, x: Fe, n: i64) -> Result<Fe> {
        let base = if n < 0 { self.inv(x)? } else { x };
        let mut e = n.unsigned_abs();
        let mut acc = Fe::ONE;
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, b);
            }
            b = self.mul(b, b);
            e >>= 1;
        }
        Ok(acc)
    }

    /// `x^(p^j)`, with `j` read modulo `m`.
    #[inline]
    pub fn frobenius(&self, x: Fe, j: u32) -> Fe {
        Fe(self.frob[(j % self.spec.m) as usize][x.index()])
    }

    /// Exponent `j` of the involutory automorphism `x -> x^(p^j)`, if there is one.
    pub fn involution_exponent(&self) -> Result<u32> {
        if self.spec.m.is_multiple_of(2) {
            Ok(self.spec.m / 2)
        } else {
            Err(Error::NoInvolution { q: self.q })
        }
    }

    /// The unique involutory automorphism (`m` even only).
    pub fn sigma(&self, x: Fe) -> Result<Fe> {
        Ok(self.frobenius(x, self.involution_exponent()?))
    }

    /// +1 for nonzero squares, -1 for non-squares, 0 for zero.
    #[inline]
    pub fn quadratic_character(&self, x: Fe) -> i8 {
        if x.is_zero() {
            0
        } else if self.log[x.index()].is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn is_square(&self, x: Fe) -> Result<bool> {
        match self.quadratic_character(x) {
            0 => Err(Error::ZeroSquareClass),
            c => Ok(c == 1),
        }
    }

    /// Least generator of the multiplicative group in canonical order.
    pub fn primitive_element(&self) -> Fe {
        self.primitive
    }

    /// The fixed non-square: the primitive element, which has even order `q - 1`.
    pub fn fixed_nonsquare(&self) -> Fe {
        self.primitive
    }

    /// Discrete logarithm to the primitive element.
    pub fn log(&self, x: Fe) -> Option<u32> {
        (!x.is_zero()).then(|| self.log[x.index()])
    }

    /// Multiplicative order of a nonzero element.
    pub fn order(&self, x: Fe) -> Option<u32> {
        let k = self.log(x)?;
        let n = self.q - 1;
        Some(n / gcd(k, n))
    }

    pub fn two(&self) -> Fe {
        self.from_int(2)
    }

    pub fn half(&self) -> Fe {
        self.inv_nz(self.two())
    }

    /// Human-readable form: integers in prime fields, powers of `g` otherwise.
    pub fn display(&self, x: Fe) -> String {
        if self.spec.m == 1 {
            return format!("{}", x.0);
        }
        match self.log(x) {
            None => String::from("0"),
            Some(0) => String::from("1"),
            Some(1) => String::from("g"),
            Some(k) => format!("g^{k}"),
        }
    }
}

fn gcd(mut a: u32, mut b: u32) -> u32 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

fn prime_factors(mut n: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

#[cfg(test)]
mod tests;
