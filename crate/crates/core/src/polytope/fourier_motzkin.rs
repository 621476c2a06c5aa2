//! Exact Fourier–Motzkin elimination over `BigRational` and the projection
//! tower used to walk the integer points of a bounded polyhedron.
//!
//! Each derived row remembers which input rows it was combined from. After
//! `k` eliminations a row built from more than `k + 1` inputs is implied by
//! the others (Chernikov's rule) and is dropped, which keeps the row count
//! from growing doubly exponentially.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// `a · x <= b`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Halfspace {
    pub a: Vec<BigRational>,
    pub b: BigRational,
}

impl Halfspace {
    pub fn new(a: Vec<BigRational>, b: BigRational) -> Self {
        Halfspace { a, b }
    }
}

/// Set of input row indices.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
struct History(Vec<u64>);

impl History {
    fn single(i: usize) -> Self {
        let mut words = vec![0u64; i / 64 + 1];
        words[i / 64] |= 1 << (i % 64);
        History(words)
    }

    fn union(&self, other: &History) -> History {
        let (long, short) = if self.0.len() >= other.0.len() { (self, other) } else { (other, self) };
        let mut words = long.0.clone();
        for (w, o) in words.iter_mut().zip(&short.0) {
            *w |= o;
        }
        History(words)
    }

    fn len(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }
}

/// A row together with its history.
#[derive(Debug, Clone)]
struct Row {
    a: Vec<BigRational>,
    b: BigRational,
    from: History,
}

impl Row {

    fn is_constant(&self) -> bool {
        self.a.iter().all(Zero::is_zero)
    }

    /// Positive rescaling so the first nonzero coefficient is `±1`.
    fn normalized(mut self) -> Self {
        if let Some(pivot) = self.a.iter().find(|c| !c.is_zero()).map(|c| c.abs()) {
            for c in &mut self.a {
                *c /= &pivot;
            }
            self.b /= &pivot;
        }
        self
    }
}

/// Deduplicates rows with equal left-hand sides, keeping the tightest, and
/// drops rows whose history exceeds `max_history`.
/// Returns `Infeasible` on a constant row `0 <= b` with `b < 0`.
fn reduce(rows: impl IntoIterator<Item = Row>, max_history: usize) -> Result<Vec<Row>> {
    let mut best: BTreeMap<Vec<BigRational>, (BigRational, History)> = BTreeMap::new();
    for row in rows {
        if row.is_constant() {
            if row.b.is_negative() {
                return Err(Error::Infeasible);
            }
            continue;
        }
        if row.from.len() > max_history {
            continue;
        }
        let row = row.normalized();
        best.entry(row.a)
            .and_modify(|(b, from)| {
                if row.b < *b || (row.b == *b && row.from.len() < from.len()) {
                    *b = row.b.clone();
                    *from = row.from.clone();
                }
            })
            .or_insert((row.b, row.from));
    }
    Ok(best.into_iter().map(|(a, (b, from))| Row { a, b, from }).collect())
}

fn initial(rows: &[Halfspace]) -> Result<Vec<Row>> {
    let tagged = rows.iter().enumerate().map(|(i, h)| Row { a: h.a.clone(), b: h.b.clone(), from: History::single(i) });
    reduce(tagged, 1)
}

/// Eliminates variable `var`; the result no longer depends on it. `done` is
/// the number of variables eliminated before this one.
fn eliminate_rows(rows: &[Row], var: usize, done: usize) -> Result<Vec<Row>> {
    let mut pos = Vec::new();
    let mut neg = Vec::new();
    let mut out = Vec::new();
    for row in rows {
        let c = &row.a[var];
        if c.is_positive() {
            pos.push(row);
        } else if c.is_negative() {
            neg.push(row);
        } else {
            out.push(row.clone());
        }
    }
    for p in &pos {
        let cp = p.a[var].clone();
        for n in &neg {
            let cn = -n.a[var].clone();
            let from = p.from.union(&n.from);
            if from.len() > done + 2 {
                continue;
            }
            let a = p.a.iter().zip(&n.a).map(|(x, y)| x / &cp + y / &cn).collect();
            let b = &p.b / &cp + &n.b / &cn;
            out.push(Row { a, b, from });
        }
    }
    reduce(out, done + 2)
}

/// Eliminates variable `var` from plain halfspaces.
pub fn eliminate(rows: &[Halfspace], var: usize) -> Result<Vec<Halfspace>> {
    Ok(eliminate_rows(&initial(rows)?, var, 0)?.into_iter().map(|r| Halfspace { a: r.a, b: r.b }).collect())
}

/// Interval `[lo, hi]` for `var` implied by rows in which every other
/// variable has already been fixed to `prefix` (missing entries count as 0).
fn bounds_for(rows: &[Row], var: usize, prefix: &[BigRational]) -> Result<(Option<BigRational>, Option<BigRational>)> {
    let mut lo: Option<BigRational> = None;
    let mut hi: Option<BigRational> = None;
    for row in rows {
        let mut rhs = row.b.clone();
        for (j, x) in prefix.iter().enumerate() {
            if j != var && !row.a[j].is_zero() {
                rhs -= &row.a[j] * x;
            }
        }
        let c = &row.a[var];
        if c.is_zero() {
            if rhs.is_negative() {
                return Err(Error::Infeasible);
            }
            continue;
        }
        let v = rhs / c;
        if c.is_positive() {
            if hi.as_ref().is_none_or(|h| v < *h) {
                hi = Some(v);
            }
        } else if lo.as_ref().is_none_or(|l| v > *l) {
            lo = Some(v);
        }
    }
    Ok((lo, hi))
}

/// Exact bounding interval of each variable of `{x : rows}`.
pub fn bounding_box(rows: &[Halfspace], nvars: usize) -> Result<Vec<(BigRational, BigRational)>> {
    let rows = initial(rows)?;
    let mut out = Vec::with_capacity(nvars);
    for var in 0..nvars {
        let mut projected = rows.clone();
        for (done, other) in (0..nvars).filter(|&o| o != var).enumerate() {
            projected = eliminate_rows(&projected, other, done)?;
        }
        let (lo, hi) = bounds_for(&projected, var, &[])?;
        let lo = lo.ok_or(Error::UnboundedPolytope(var))?;
        let hi = hi.ok_or(Error::UnboundedPolytope(var))?;
        if lo > hi {
            return Err(Error::Infeasible);
        }
        out.push((lo, hi));
    }
    Ok(out)
}

pub fn ceil(q: &BigRational) -> BigInt {
    q.numer().div_ceil(q.denom())
}

pub fn floor(q: &BigRational) -> BigInt {
    q.numer().div_floor(q.denom())
}

/// All integer points of a bounded polyhedron, in lexicographic order.
/// `Err(UnboundedPolytope)` if some variable lacks a bound; an empty
/// polyhedron yields no points.
pub fn integer_points(rows: &[Halfspace], nvars: usize) -> Result<Vec<Vec<BigInt>>> {
    let full = match initial(rows) {
        Ok(rows) => rows,
        Err(Error::Infeasible) => return Ok(Vec::new()),
        Err(e) => return Err(e),
    };
    // tower[i] constrains variables 0..i only
    let mut tower = vec![Vec::new(); nvars + 1];
    tower[nvars] = full;
    for i in (0..nvars).rev() {
        tower[i] = match eliminate_rows(&tower[i + 1], i, nvars - 1 - i) {
            Ok(rows) => rows,
            Err(Error::Infeasible) => return Ok(Vec::new()),
            Err(e) => return Err(e),
        };
    }
    let mut out = Vec::new();
    let mut prefix: Vec<BigRational> = Vec::with_capacity(nvars);
    walk(&tower, 0, nvars, &mut prefix, &mut out)?;
    Ok(out)
}

fn walk(tower: &[Vec<Row>], var: usize, nvars: usize, prefix: &mut Vec<BigRational>, out: &mut Vec<Vec<BigInt>>) -> Result<()> {
    if var == nvars {
        out.push(prefix.iter().map(|x| x.numer().clone()).collect());
        return Ok(());
    }
    let (lo, hi) = match bounds_for(&tower[var + 1], var, prefix) {
        Ok(b) => b,
        Err(Error::Infeasible) => return Ok(()),
        Err(e) => return Err(e),
    };
    let lo = ceil(&lo.ok_or(Error::UnboundedPolytope(var))?);
    let hi = floor(&hi.ok_or(Error::UnboundedPolytope(var))?);
    let mut x = lo;
    while x <= hi {
        prefix.push(BigRational::from_integer(x.clone()));
        walk(tower, var + 1, nvars, prefix, out)?;
        prefix.pop();
        x += BigInt::one();
    }
    Ok(())
}
