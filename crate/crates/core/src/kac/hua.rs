//! `A_{g,r}(q)` from the generating identity
//!
//! `Σ_λ q^{(g-1)⟨λ,λ⟩} / b_λ(q⁻¹) X^{|λ|} = Exp(Σ_n A_{g,n}(q) X^n / (q - 1))`,
//!
//! where `⟨λ,λ⟩ = Σ_i (λ'_i)²` and `b_λ(t) = Π_i (1-t)...(1-t^{m_i(λ)})`.
//! Both sides are evaluated exactly at integer `q`, the plethystic logarithm
//! is taken coefficientwise, and the polynomial is recovered by interpolation.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{interpolate_integer, KacPolynomial};
use crate::error::{Error, Result};
use crate::partition::{conjugate, multiplicities, partitions};

/// Largest polynomial degree `1 + (g-1) r²` computed.
pub const DEGREE_BUDGET: i64 = 160;

fn mobius(n: usize) -> i64 {
    let mut m = n;
    let mut res = 1;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            m /= p;
            if m.is_multiple_of(p) {
                return 0;
            }
            res = -res;
        }
        p += 1;
    }
    if m > 1 {
        res = -res;
    }
    res
}

/// Coefficient of `X^n` on the left-hand side at `q = qv`.
fn lhs_coefficient(g: i64, n: usize, qv: &BigInt) -> BigRational {
    let qr = BigRational::from_integer(qv.clone());
    let t = qr.recip();
    let mut total = BigRational::zero();
    for lambda in partitions(n) {
        let conj = conjugate(&lambda);
        let pairing: i64 = conj.iter().map(|&c| (c * c) as i64).sum();
        let mut b = BigRational::one();
        for &m in multiplicities(&lambda).iter().filter(|&&m| m > 0) {
            let mut tp = BigRational::one();
            for _ in 0..m {
                tp *= &t;
                b *= BigRational::one() - &tp;
            }
        }
        let power = (g - 1) * pairing;
        let num = if power >= 0 { num_traits::pow(qr.clone(), power as usize) } else { num_traits::pow(t.clone(), (-power) as usize) };
        total += num / b;
    }
    total
}

/// Coefficients `c_1..c_n` of `log(1 + Σ h_k X^k)`.
fn log_coefficients(h: &[BigRational]) -> Vec<BigRational> {
    let n = h.len() - 1;
    let mut c = vec![BigRational::zero(); n + 1];
    for m in 1..=n {
        let mut acc = h[m].clone();
        for k in 1..m {
            acc -= BigRational::new(BigInt::from(k), BigInt::from(m)) * &c[k] * &h[m - k];
        }
        c[m] = acc;
    }
    c
}

/// `A_{g,r}` evaluated at an integer `q >= 2`.
pub fn evaluate(g: i64, r: usize, qv: &BigInt) -> BigRational {
    let mut total = BigRational::zero();
    for k in (1..=r).filter(|k| r.is_multiple_of(*k)) {
        let mu = mobius(k);
        if mu == 0 {
            continue;
        }
        let m = r / k;
        let qk = num_traits::pow(qv.clone(), k);
        let mut h = vec![BigRational::one()];
        h.extend((1..=m).map(|i| lhs_coefficient(g, i, &qk)));
        let c = log_coefficients(&h);
        total += BigRational::new(BigInt::from(mu), BigInt::from(k as i64)) * &c[m];
    }
    total * BigRational::from_integer(qv - BigInt::one())
}

pub fn kac_polynomial(g: i64, r: i64) -> Result<KacPolynomial> {
    if g < 1 {
        return Err(Error::GenusTooSmall(g, 1));
    }
    if r < 1 {
        return Err(Error::InvalidPartition(format!("rank {r} must be positive")));
    }
    let degree = 1 + (g - 1) * r * r;
    if degree > DEGREE_BUDGET || r > 12 {
        return Err(Error::SizeTooLarge { g, r });
    }
    // one point beyond the degree bound, so the top coefficient is checked
    let points: Vec<(BigInt, BigRational)> = (2..=degree + 3)
        .map(|x| {
            let x = BigInt::from(x);
            let y = evaluate(g, r as usize, &x);
            (x, y)
        })
        .collect();
    let coeffs = interpolate_integer(&points)?;
    KacPolynomial::new(g, r, coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mobius_values() {
        let v: Vec<i64> = (1..=10).map(mobius).collect();
        assert_eq!(v, vec![1, -1, -1, 0, -1, 1, -1, 0, 0, 1]);
    }

    #[test]
    fn rank_one_is_monomial() {
        for g in 1..=5 {
            let a = kac_polynomial(g, 1).unwrap();
            let mut expect = vec![0; g as usize + 1];
            expect[g as usize] = 1;
            assert_eq!(a.coeffs(), expect.as_slice());
        }
    }

    #[test]
    fn small_values() {
        assert_eq!(kac_polynomial(1, 2).unwrap().coeffs(), &[0, 1]);
        assert_eq!(kac_polynomial(2, 2).unwrap().coeffs(), &[0, 0, 0, 1, 0, 1]);
        assert_eq!(kac_polynomial(3, 2).unwrap().coeffs(), &[0, 0, 0, 0, 0, 1, 0, 1, 0, 1]);
        assert_eq!(kac_polynomial(2, 3).unwrap().at_one(), 6);
        assert_eq!(kac_polynomial(2, 4).unwrap().at_one(), 22);
        assert_eq!(kac_polynomial(3, 3).unwrap().at_one(), 15);
    }

    #[test]
    fn budget() {
        assert_eq!(kac_polynomial(10, 5).unwrap_err(), Error::SizeTooLarge { g: 10, r: 5 });
        assert!(kac_polynomial(0, 1).is_err());
        assert!(kac_polynomial(2, 0).is_err());
    }
}
