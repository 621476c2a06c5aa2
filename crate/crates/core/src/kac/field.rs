//! Small finite fields `F_q`, `q = p^k`, as lookup tables.
//!
//! Elements are `0..q`; the integer `a_0 + a_1 p + ...` stands for the
//! polynomial `a_0 + a_1 x + ...` modulo a fixed monic irreducible of degree `k`.

use crate::error::{Error, Result};

/// Largest field order supported.
pub const MAX_ORDER: u64 = 64;

#[derive(Debug, Clone)]
pub struct Field {
    q: usize,
    p: usize,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>,
}

fn prime_power(q: u64) -> Option<(usize, usize)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut rest = q;
    let mut k = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        k += 1;
    }
    (rest == 1).then_some((p as usize, k))
}

fn digits(mut x: usize, p: usize, k: usize) -> Vec<usize> {
    let mut v = vec![0; k];
    for d in v.iter_mut() {
        *d = x % p;
        x /= p;
    }
    v
}

fn undigits(v: &[usize], p: usize) -> usize {
    v.iter().rev().fold(0, |acc, &d| acc * p + d)
}

/// Product of two residues modulo the monic `modulus` (lowest degree first,
/// leading 1 omitted).
fn mul_mod(a: &[usize], b: &[usize], modulus: &[usize], p: usize) -> Vec<usize> {
    let k = modulus.len();
    let mut prod = vec![0usize; 2 * k];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    for deg in (k..2 * k).rev() {
        let c = prod[deg];
        if c == 0 {
            continue;
        }
        prod[deg] = 0;
        // x^k = -modulus
        for (i, &m) in modulus.iter().enumerate() {
            let idx = deg - k + i;
            prod[idx] = (prod[idx] + (p - c) * m) % p;
        }
    }
    prod.truncate(k);
    prod
}

impl Field {
    pub fn new(q: u64) -> Result<Self> {
        if q > MAX_ORDER {
            return Err(Error::UnsupportedField(q));
        }
        let (p, k) = prime_power(q).ok_or(Error::UnsupportedField(q))?;
        let q = q as usize;
        let mut add = vec![0u8; q * q];
        let mut neg = vec![0u8; q];
        for a in 0..q {
            let da = digits(a, p, k);
            neg[a] = undigits(&da.iter().map(|&x| (p - x) % p).collect::<Vec<_>>(), p) as u8;
            for b in 0..q {
                let db = digits(b, p, k);
                let s: Vec<usize> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[a * q + b] = undigits(&s, p) as u8;
            }
        }
        // first monic modulus for which every nonzero residue is invertible
        for cand in 0..q {
            let modulus = digits(cand, p, k);
            let mut mul = vec![0u8; q * q];
            for a in 0..q {
                let da = digits(a, p, k);
                for b in 0..q {
                    mul[a * q + b] = undigits(&mul_mod(&da, &digits(b, p, k), &modulus, p), p) as u8;
                }
            }
            let mut inv = vec![0u8; q];
            let is_field = (1..q).all(|a| match (1..q).find(|&b| mul[a * q + b] == 1) {
                Some(b) => {
                    inv[a] = b as u8;
                    true
                }
                None => false,
            });
            if is_field {
                return Ok(Field { q, p, add, mul, neg, inv });
            }
        }
        Err(Error::Invariant(format!("no irreducible polynomial found for q = {q}")))
    }

    pub fn order(&self) -> usize {
        self.q
    }

    pub fn characteristic(&self) -> usize {
        self.p
    }

    #[inline]
    pub fn add(&self, a: u8, b: u8) -> u8 {
        self.add[a as usize * self.q + b as usize]
    }

    #[inline]
    pub fn sub(&self, a: u8, b: u8) -> u8 {
        self.add(a, self.neg[b as usize])
    }

    #[inline]
    pub fn mul(&self, a: u8, b: u8) -> u8 {
        self.mul[a as usize * self.q + b as usize]
    }

    #[inline]
    pub fn neg(&self, a: u8) -> u8 {
        self.neg[a as usize]
    }

    /// Multiplicative inverse; `a` must be nonzero.
    #[inline]
    pub fn inv(&self, a: u8) -> u8 {
        debug_assert!(a != 0);
        self.inv[a as usize]
    }

    pub fn elements(&self) -> impl Iterator<Item = u8> {
        0..self.q as u8
    }
}
