//! Numerical classes of coherent sheaves on a curve: the monoid of
//! `(rank, degree)` pairs, twists, slopes and the Euler form.

use std::cmp::Ordering;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Genus of the curve together with the canonical degree `l = 2g - 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GenusContext {
    g: i64,
    l: i64,
}

impl GenusContext {
    /// Accepts any `g >= 1`; census-level operations call [`GenusContext::require_census`].
    pub fn new(g: i64) -> Result<Self> {
        if g < 1 {
            return Err(Error::GenusTooSmall(g, 1));
        }
        Ok(GenusContext { g, l: 2 * g - 2 })
    }

    pub fn g(&self) -> i64 {
        self.g
    }

    /// Degree of the canonical divisor.
    pub fn l(&self) -> i64 {
        self.l
    }

    pub fn require_census(&self) -> Result<()> {
        if self.g < 2 {
            Err(Error::GenusTooSmall(self.g, 2))
        } else {
            Ok(())
        }
    }

    pub fn euler_form(&self, a: ClassH, b: ClassH) -> i64 {
        euler_form(*self, a, b)
    }
}

/// A class `(rank, degree)`. Arithmetic is unchecked; use [`ClassH::new`] or
/// [`ClassH::is_in_h`] where membership in the monoid matters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
pub struct ClassH {
    pub rank: i64,
    pub degree: i64,
}

impl ClassH {
    pub const ZERO: ClassH = ClassH { rank: 0, degree: 0 };

    pub fn new(rank: i64, degree: i64) -> Result<Self> {
        let c = ClassH { rank, degree };
        if c.is_in_h() {
            Ok(c)
        } else {
            Err(Error::InvalidClass { rank, degree })
        }
    }

    pub fn is_in_h(&self) -> bool {
        self.rank > 0 || (self.rank == 0 && self.degree >= 0)
    }

    pub fn is_zero(&self) -> bool {
        self.rank == 0 && self.degree == 0
    }

    pub fn twist(self, p: i64) -> ClassH {
        twist(self, p)
    }

    pub fn slope(self) -> Result<Slope> {
        slope(self)
    }

    /// Scalar multiple.
    pub fn times(self, m: i64) -> ClassH {
        ClassH { rank: m * self.rank, degree: m * self.degree }
    }
}

impl Add for ClassH {
    type Output = ClassH;
    fn add(self, o: ClassH) -> ClassH {
        ClassH { rank: self.rank + o.rank, degree: self.degree + o.degree }
    }
}

impl Sub for ClassH {
    type Output = ClassH;
    fn sub(self, o: ClassH) -> ClassH {
        ClassH { rank: self.rank - o.rank, degree: self.degree - o.degree }
    }
}

impl Sum for ClassH {
    fn sum<I: Iterator<Item = ClassH>>(iter: I) -> ClassH {
        iter.fold(ClassH::ZERO, Add::add)
    }
}

impl fmt::Display for ClassH {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.rank, self.degree)
    }
}

/// `α(p) = (r, d + p r)`: tensoring by a divisor of degree `p`.
pub fn twist(a: ClassH, p: i64) -> ClassH {
    ClassH { rank: a.rank, degree: a.degree + p * a.rank }
}

/// `<(r,d),(r',d')> = (1-g) r r' + r d' - r' d`.
pub fn euler_form(ctx: GenusContext, a: ClassH, b: ClassH) -> i64 {
    (1 - ctx.g) * a.rank * b.rank + a.rank * b.degree - b.rank * a.degree
}

/// Slope in `Q ∪ {+∞}`. `+∞` sorts above every finite value and equals itself.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Slope {
    Finite(BigRational),
    Infinite,
}

impl Slope {
    pub fn finite(num: i64, den: i64) -> Slope {
        Slope::Finite(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, Slope::Infinite)
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Slope::Finite(q) => Some(q),
            Slope::Infinite => None,
        }
    }

    pub fn cmp_rational(&self, q: &BigRational) -> Ordering {
        match self {
            Slope::Finite(x) => x.cmp(q),
            Slope::Infinite => Ordering::Greater,
        }
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Slope::Finite(q) => write!(f, "{}", fmt_rational(q)),
            Slope::Infinite => write!(f, "+inf"),
        }
    }
}

impl Serialize for Slope {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// `7/2`, `-1`, `0`: integers print without denominator.
pub fn fmt_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn rational(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn slope(a: ClassH) -> Result<Slope> {
    match a.rank.cmp(&0) {
        Ordering::Greater => Ok(Slope::Finite(rational(a.degree, a.rank))),
        Ordering::Equal if a.degree > 0 => Ok(Slope::Infinite),
        Ordering::Equal if a.degree == 0 => Err(Error::ZeroClass),
        _ => Err(Error::InvalidClass { rank: a.rank, degree: a.degree }),
    }
}

/// Compares `μ(a)` with `num/den` (`den > 0`) by cross-multiplication.
/// Rank-zero classes with positive degree compare as `+∞`; the zero class
/// compares as equal to nothing and is reported as `None`.
pub fn compare_slope_to(a: ClassH, num: i64, den: i64) -> Option<Ordering> {
    debug_assert!(den > 0);
    if a.is_zero() {
        return None;
    }
    if a.rank == 0 {
        return Some(Ordering::Greater);
    }
    let lhs = a.degree as i128 * den as i128;
    let rhs = num as i128 * a.rank as i128;
    Some(lhs.cmp(&rhs))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(r: i64, d: i64) -> ClassH {
        ClassH::new(r, d).unwrap()
    }

    #[test]
    fn twist_examples() {
        assert_eq!(twist(c(1, 1), -2), c(1, -1));
        assert_eq!(twist(c(0, 3), 5), c(0, 3));
        assert_eq!(twist(c(2, 1), 2), c(2, 5));
    }

    #[test]
    fn euler_form_examples() {
        let g2 = GenusContext::new(2).unwrap();
        assert_eq!(euler_form(g2, c(1, 0), c(0, 1)), 1);
        assert_eq!(euler_form(g2, c(2, 1), c(1, 3)), 3);
        for g in 1..6 {
            let ctx = GenusContext::new(g).unwrap();
            for (r, d) in [(0, 4), (3, -7), (2, 2)] {
                assert_eq!(euler_form(ctx, c(r, d), c(r, d)), (1 - g) * r * r);
            }
        }
    }

    #[test]
    fn slope_examples() {
        assert_eq!(slope(c(2, 1)).unwrap(), Slope::finite(1, 2));
        assert_eq!(slope(c(0, 4)).unwrap(), Slope::Infinite);
        assert_eq!(slope(c(3, -2)).unwrap(), Slope::finite(-2, 3));
        assert_eq!(slope(ClassH::ZERO), Err(Error::ZeroClass));
    }

    #[test]
    fn infinity_sorts_last() {
        assert!(Slope::Infinite > Slope::finite(1_000_000, 1));
        assert_eq!(Slope::Infinite, Slope::Infinite);
        assert_eq!(Slope::Infinite.to_string(), "+inf");
        assert_eq!(Slope::finite(-4, 6).to_string(), "-2/3");
    }

    #[test]
    fn membership() {
        assert!(ClassH::new(0, -1).is_err());
        assert!(ClassH::new(-1, 3).is_err());
        assert!(ClassH::new(0, 0).is_ok());
        assert!(GenusContext::new(0).is_err());
        assert_eq!(GenusContext::new(1).unwrap().require_census(), Err(Error::GenusTooSmall(1, 2)));
        assert_eq!(GenusContext::new(4).unwrap().l(), 6);
    }

    #[test]
    fn cross_multiplied_comparison() {
        assert_eq!(compare_slope_to(c(2, 1), 1, 2), Some(Ordering::Equal));
        assert_eq!(compare_slope_to(c(0, 1), -5, 1), Some(Ordering::Greater));
        assert_eq!(compare_slope_to(ClassH::ZERO, 0, 1), None);
        assert_eq!(compare_slope_to(c(3, -1), 0, 1), Some(Ordering::Less));
    }
}
