//! Kac polynomials `A_{g,r}(q)` of the quiver with one vertex and `g` loops,
//! and the comparison of `A_{g,r}(1)` with the census of semistable Jordan types.

pub mod field;
pub mod hua;
pub mod oracle;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::class::GenusContext;
use crate::error::{Error, Result};
use crate::polytope::{census, PartitionCount};

pub use hua::kac_polynomial;
pub use oracle::count_abs_indec;

/// Coefficients are listed from `q^0` upward; the last one is nonzero.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KacPolynomial {
    pub g: i64,
    pub r: i64,
    coeffs: Vec<i64>,
}

impl KacPolynomial {
    pub(crate) fn new(g: i64, r: i64, coeffs: Vec<BigInt>) -> Result<Self> {
        let coeffs = coeffs
            .into_iter()
            .map(|c| c.to_i64().ok_or(Error::SizeTooLarge { g, r }))
            .collect::<Result<Vec<i64>>>()?;
        Ok(KacPolynomial { g, r, coeffs })
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        (!self.coeffs.is_empty()).then(|| self.coeffs.len() - 1)
    }

    pub fn eval(&self, q: i64) -> BigInt {
        let q = BigInt::from(q);
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, &c| acc * &q + c)
    }

    pub fn at_one(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.coeffs.iter().all(|&c| c >= 0)
    }
}

impl fmt::Display for KacPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| {
                let coef = if c == 1 && i > 0 { String::new() } else { c.to_string() };
                match i {
                    0 => c.to_string(),
                    1 => format!("{coef}q"),
                    _ => format!("{coef}q^{i}"),
                }
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

/// Monomial coefficients of the polynomial through `points`; errors if the
/// result is not an integer polynomial.
pub(crate) fn interpolate_integer(points: &[(BigInt, BigRational)]) -> Result<Vec<BigInt>> {
    let n = points.len();
    // Newton divided differences
    let xs: Vec<BigRational> = points.iter().map(|(x, _)| BigRational::from_integer(x.clone())).collect();
    let mut dd: Vec<BigRational> = points.iter().map(|(_, y)| y.clone()).collect();
    for level in 1..n {
        for i in (level..n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (&xs[i] - &xs[i - level]);
        }
    }
    let mut poly = vec![BigRational::zero(); n];
    for i in (0..n).rev() {
        // poly = poly * (x - xs[i]) + dd[i]
        let mut next = vec![BigRational::zero(); n];
        for (k, c) in poly.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if k + 1 < n {
                next[k + 1] += c;
            }
            next[k] -= c * &xs[i];
        }
        next[0] += &dd[i];
        poly = next;
    }
    while poly.last().is_some_and(Zero::is_zero) {
        poly.pop();
    }
    poly.into_iter()
        .map(|c| {
            if c.is_integer() {
                Ok(c.to_integer())
            } else {
                Err(Error::Invariant(format!("interpolated coefficient {c} is not an integer")))
            }
        })
        .collect()
}

/// Prime powers accepted by the oracle, in increasing order.
fn oracle_fields() -> impl Iterator<Item = u64> {
    (2..=field::MAX_ORDER).filter(|&q| field::Field::new(q).is_ok())
}

/// `A_{g,r}` interpolated from oracle counts at the smallest prime powers.
pub fn kac_polynomial_from_oracle(g: i64, r: i64) -> Result<KacPolynomial> {
    if g < 1 {
        return Err(Error::GenusTooSmall(g, 1));
    }
    let degree = (1 + (g - 1) * r * r) as usize;
    let mut points = Vec::with_capacity(degree + 2);
    for q in oracle_fields().take(degree + 2) {
        let count = count_abs_indec(g, r, q)?;
        points.push((BigInt::from(q), BigRational::from_integer(BigInt::from(count))));
    }
    KacPolynomial::new(g, r, interpolate_integer(&points)?)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Crosscheck {
    pub g: i64,
    pub r: i64,
    pub d: i64,
    pub census_total: usize,
    pub kac_at_one: i64,
    pub polynomial: String,
    pub equal: bool,
    pub partitions: Vec<PartitionCount>,
}

/// Census total of semistable Jordan types against `A_{g,r}(1)`, with the
/// per-partition counts alongside.
pub fn crosscheck(ctx: GenusContext, r: i64, d: i64) -> Result<Crosscheck> {
    ctx.require_census()?;
    if r < 1 {
        return Err(Error::InvalidPartition(format!("rank {r} must be positive")));
    }
    if !r.gcd(&d).is_one() {
        return Err(Error::NotCoprime { r, d });
    }
    let c = census(ctx, r, d, false)?;
    let a = kac_polynomial(ctx.g(), r)?;
    let kac_at_one = a.at_one();
    Ok(Crosscheck {
        g: ctx.g(),
        r,
        d,
        census_total: c.total,
        kac_at_one,
        polynomial: a.to_string(),
        equal: kac_at_one.is_positive() && c.total as i64 == kac_at_one,
        partitions: c.partitions,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interpolation_recovers_integer_polynomials() {
        let pts: Vec<(BigInt, BigRational)> = (0..5)
            .map(|x: i64| (BigInt::from(x), BigRational::from_integer(BigInt::from(3 * x * x * x - x + 7))))
            .collect();
        let c = interpolate_integer(&pts).unwrap();
        assert_eq!(c, vec![7.into(), (-1).into(), 0.into(), 3.into()]);
        let half = vec![(BigInt::from(0), BigRational::zero()), (BigInt::from(2), BigRational::one())];
        assert!(interpolate_integer(&half).is_err());
    }

    #[test]
    fn display_and_eval() {
        let a = kac_polynomial(2, 2).unwrap();
        assert_eq!(a.to_string(), "q^5 + q^3");
        assert_eq!(a.eval(2), BigInt::from(40));
        assert_eq!(a.degree(), Some(5));
    }

    #[test]
    fn oracle_route_small() {
        assert_eq!(kac_polynomial_from_oracle(1, 2).unwrap(), kac_polynomial(1, 2).unwrap());
        for g in 1..=3 {
            assert_eq!(kac_polynomial_from_oracle(g, 1).unwrap(), kac_polynomial(g, 1).unwrap());
        }
    }

    #[test]
    fn crosscheck_examples() {
        let ctx = GenusContext::new(2).unwrap();
        let c = crosscheck(ctx, 1, 0).unwrap();
        assert_eq!((c.census_total, c.kac_at_one, c.equal), (1, 1, true));
        assert!(crosscheck(ctx, 2, 1).unwrap().equal);
        assert!(crosscheck(GenusContext::new(3).unwrap(), 2, 1).unwrap().equal);
        assert_eq!(crosscheck(ctx, 2, 2).unwrap_err(), Error::NotCoprime { r: 2, d: 2 });
    }
}
