//! The polytope of semistable degree vectors for a fixed rank partition.
//!
//! `d_1` is eliminated through `Σ k d_k = d + l Σ k(k-1)/2 r_k`, so the
//! system lives in `d_2..d_s`. Each region with `R_1 = 0` contributes a
//! two-sided inequality; torsion columns add `d_k >= 0`, which for `k = 1`
//! becomes a bound on `Σ_{k>=2} k d_k`.

pub mod fourier_motzkin;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::Serialize;

use crate::class::{fmt_rational, rational, GenusContext};
use crate::error::{Error, Result};
use crate::partition::{label, rank_vectors};
use crate::semistability::{is_semistable_regions, lower_offset, ser_rational, upper_offset, Side};
use crate::tableau::{enumerate_canonical_regions, CanonicalRegion, JordanType};

use fourier_motzkin::Halfspace;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Relation {
    #[serde(rename = "<=")]
    Le,
    #[serde(rename = ">=")]
    Ge,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Origin {
    Region { region: CanonicalRegion, side: Side },
    /// `d_k >= 0` for a column with `r_k = 0`, `k >= 2`.
    TorsionColumn { k: usize },
    /// `d_1 >= 0` when `r_1 = 0`, rewritten through the degree identity.
    FirstColumnFacet,
}

/// `coeffs · (d_2, ..., d_s)  relation  rhs`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Constraint {
    #[serde(serialize_with = "ser_rationals")]
    pub coeffs: Vec<BigRational>,
    pub relation: Relation,
    #[serde(serialize_with = "ser_rational")]
    pub rhs: BigRational,
    pub origin: Origin,
}

fn ser_rationals<S: serde::Serializer>(v: &[BigRational], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(fmt_rational))
}

impl Constraint {
    fn as_halfspace(&self) -> Halfspace {
        match self.relation {
            Relation::Le => Halfspace::new(self.coeffs.clone(), self.rhs.clone()),
            Relation::Ge => Halfspace::new(self.coeffs.iter().map(|c| -c).collect(), -self.rhs.clone()),
        }
    }

    pub fn holds(&self, x: &[i64]) -> bool {
        let lhs: BigRational = self.coeffs.iter().zip(x).map(|(c, &v)| c * BigRational::from_integer(v.into())).sum();
        match self.relation {
            Relation::Le => lhs <= self.rhs,
            Relation::Ge => lhs >= self.rhs,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InequalitySystem {
    #[serde(skip)]
    ctx: GenusContext,
    pub r_seq: Vec<i64>,
    pub d: i64,
    pub constraints: Vec<Constraint>,
}

fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn check_partition(r_seq: &[i64]) -> Result<i64> {
    let s = r_seq.len();
    if s == 0 {
        return Err(Error::InvalidPartition("empty rank vector".into()));
    }
    if r_seq.iter().any(|&x| x < 0) {
        return Err(Error::InvalidPartition(format!("negative multiplicity in {r_seq:?}")));
    }
    if r_seq[s - 1] == 0 {
        return Err(Error::InvalidPartition(format!("r_s = 0 in {r_seq:?}")));
    }
    Ok(r_seq.iter().enumerate().map(|(i, &m)| (i as i64 + 1) * m).sum())
}

/// `l Σ k(k-1)/2 r_k`.
fn twist_correction(l: i64, r_seq: &[i64]) -> i64 {
    r_seq.iter().enumerate().map(|(i, &m)| l * ((i as i64 + 1) * i as i64 / 2) * m).sum()
}

/// `d_1 = d - Σ_{k>=2} k d_k + l Σ k(k-1)/2 r_k`.
pub fn first_degree(ctx: GenusContext, r_seq: &[i64], d: i64, tail: &[i64]) -> i64 {
    let weighted: i64 = tail.iter().enumerate().map(|(i, &x)| (i as i64 + 2) * x).sum();
    d - weighted + twist_correction(ctx.l(), r_seq)
}

pub fn build_system(ctx: GenusContext, r_seq: &[i64], d: i64) -> Result<InequalitySystem> {
    ctx.require_census()?;
    let r = check_partition(r_seq)?;
    let s = r_seq.len();
    let l = ctx.l();
    let mut constraints = Vec::new();
    for region in enumerate_canonical_regions(s) {
        if !region.starts_above_one() {
            continue;
        }
        let coeffs: Vec<BigRational> = region.heights()[1..].iter().map(|&h| q(h as i64)).collect();
        let centre = rational(region.weighted_rank(r_seq) * d, r);
        constraints.push(Constraint {
            coeffs: coeffs.clone(),
            relation: Relation::Ge,
            rhs: &centre + q(lower_offset(l, r_seq, &region)),
            origin: Origin::Region { region: region.clone(), side: Side::Lower },
        });
        constraints.push(Constraint {
            coeffs,
            relation: Relation::Le,
            rhs: centre + q(upper_offset(l, r_seq, &region)),
            origin: Origin::Region { region, side: Side::Upper },
        });
    }
    if s >= 2 && r_seq[0] == 0 {
        constraints.push(Constraint {
            coeffs: (2..=s).map(|k| q(k as i64)).collect(),
            relation: Relation::Le,
            rhs: q(d + twist_correction(l, r_seq)),
            origin: Origin::FirstColumnFacet,
        });
    }
    for k in 2..=s {
        if r_seq[k - 1] == 0 {
            let mut coeffs = vec![q(0); s - 1];
            coeffs[k - 2] = q(1);
            constraints.push(Constraint { coeffs, relation: Relation::Ge, rhs: q(0), origin: Origin::TorsionColumn { k } });
        }
    }
    Ok(InequalitySystem { ctx, r_seq: r_seq.to_vec(), d, constraints })
}

impl InequalitySystem {
    pub fn ctx(&self) -> GenusContext {
        self.ctx
    }

    pub fn s(&self) -> usize {
        self.r_seq.len()
    }

    /// Number of free variables `d_2..d_s`.
    pub fn nvars(&self) -> usize {
        self.s() - 1
    }

    pub fn total_rank(&self) -> i64 {
        self.r_seq.iter().enumerate().map(|(i, &m)| (i as i64 + 1) * m).sum()
    }

    fn halfspaces(&self) -> Vec<Halfspace> {
        self.constraints.iter().map(Constraint::as_halfspace).collect()
    }

    pub fn holds(&self, tail: &[i64]) -> bool {
        self.constraints.iter().all(|c| c.holds(tail))
    }

    /// Full degree vector `(d_1, ..., d_s)` from `(d_2, ..., d_s)`.
    pub fn complete(&self, tail: &[i64]) -> Vec<i64> {
        let mut v = Vec::with_capacity(self.s());
        v.push(first_degree(self.ctx, &self.r_seq, self.d, tail));
        v.extend_from_slice(tail);
        v
    }

    /// The same system in the shifted variables `e_k = d_k - (d/r) r_k`.
    /// It does not depend on `d`.
    pub fn normalized(&self) -> Vec<Constraint> {
        let r = self.total_rank();
        let shift: Vec<BigRational> = self.r_seq[1..].iter().map(|&m| rational(self.d * m, r)).collect();
        self.constraints
            .iter()
            .map(|c| {
                let moved: BigRational = c.coeffs.iter().zip(&shift).map(|(a, t)| a * t).sum();
                Constraint { coeffs: c.coeffs.clone(), relation: c.relation, rhs: &c.rhs - moved, origin: c.origin.clone() }
            })
            .collect()
    }
}

/// Exact interval of each of `d_2..d_s` over the real polytope.
pub fn variable_bounds(sys: &InequalitySystem) -> Result<Vec<(BigRational, BigRational)>> {
    fourier_motzkin::bounding_box(&sys.halfspaces(), sys.nvars())
}

/// All semistable degree vectors `(d_1, ..., d_s)` for the system, lexicographic in `d_2..d_s`.
pub fn enumerate_lattice_points(sys: &InequalitySystem) -> Result<Vec<Vec<i64>>> {
    let raw = fourier_motzkin::integer_points(&sys.halfspaces(), sys.nvars())?;
    let mut out = Vec::with_capacity(raw.len());
    for p in raw {
        let tail: Vec<i64> = p
            .iter()
            .map(|x| x.to_i64().ok_or_else(|| Error::Invariant(format!("degree {x} overflows i64"))))
            .collect::<Result<_>>()?;
        let full = sys.complete(&tail);
        let jt = JordanType::new(sys.ctx, sys.r_seq.clone(), full.clone())
            .map_err(|e| Error::Invariant(format!("lattice point {full:?} is not a Jordan type: {e}")))?;
        let total = jt.total_class();
        if total.rank != sys.total_rank() || total.degree != sys.d {
            return Err(Error::Invariant(format!("lattice point {full:?} has total class {total}")));
        }
        if !is_semistable_regions(&jt)?.semistable {
            return Err(Error::Invariant(format!("lattice point {full:?} fails the region test")));
        }
        out.push(full);
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PartitionCount {
    pub partition: Vec<i64>,
    pub label: String,
    pub count: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub points: Option<Vec<Vec<i64>>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LatticeCensus {
    pub g: i64,
    pub r: i64,
    pub d: i64,
    pub partitions: Vec<PartitionCount>,
    pub total: usize,
}

impl LatticeCensus {
    pub fn count_for(&self, r_seq: &[i64]) -> Option<usize> {
        self.partitions.iter().find(|p| p.partition == r_seq).map(|p| p.count)
    }

    /// Every semistable Jordan type in the census.
    pub fn jordan_types(&self, ctx: GenusContext) -> Result<Vec<JordanType>> {
        let mut out = Vec::new();
        for p in &self.partitions {
            let pts = match &p.points {
                Some(pts) => pts.clone(),
                None => enumerate_lattice_points(&build_system(ctx, &p.partition, self.d)?)?,
            };
            for d_seq in pts {
                out.push(JordanType::new(ctx, p.partition.clone(), d_seq)?);
            }
        }
        Ok(out)
    }
}

/// Lattice-point counts for every partition of `r`, in parallel.
pub fn census(ctx: GenusContext, r: i64, d: i64, keep_points: bool) -> Result<LatticeCensus> {
    ctx.require_census()?;
    if r < 1 {
        return Err(Error::InvalidPartition(format!("rank {r} must be positive")));
    }
    let partitions: Vec<PartitionCount> = rank_vectors(r as usize)
        .into_par_iter()
        .map(|r_seq| {
            let pts = enumerate_lattice_points(&build_system(ctx, &r_seq, d)?)?;
            Ok(PartitionCount {
                label: label(&r_seq),
                partition: r_seq,
                count: pts.len(),
                points: keep_points.then_some(pts),
            })
        })
        .collect::<Result<_>>()?;
    let total = partitions.iter().map(|p| p.count).sum();
    Ok(LatticeCensus { g: ctx.g(), r, d, partitions, total })
}

/// Whether the normalized systems for `d` and `d'` agree coefficient by
/// coefficient, which makes `τ = (d' - d) r / r` a bijection of the real polytopes.
pub fn translation_check(ctx: GenusContext, r_seq: &[i64], d: i64, d_prime: i64) -> Result<bool> {
    let a = build_system(ctx, r_seq, d)?.normalized();
    let b = build_system(ctx, r_seq, d_prime)?.normalized();
    Ok(a == b)
}

/// `τ = (d' - d) r_• / r` when it is integral in every coordinate.
pub fn integral_translation(r_seq: &[i64], d: i64, d_prime: i64) -> Option<Vec<i64>> {
    let r: i64 = r_seq.iter().enumerate().map(|(i, &m)| (i as i64 + 1) * m).sum();
    let delta = d_prime - d;
    r_seq
        .iter()
        .map(|&m| {
            let num = delta * m;
            (num % r == 0).then_some(num / r)
        })
        .collect()
}

/// Integer box around the real polytope widened by `margin` in each of
/// `d_2..d_s`; falls back to a box around the centre `(d/r) r_k` when the
/// polytope is empty.
pub fn search_box(sys: &InequalitySystem, margin: i64) -> Result<Vec<(i64, i64)>> {
    let to_i64 = |x: BigInt| x.to_i64().ok_or_else(|| Error::Invariant("bound overflows i64".into()));
    match variable_bounds(sys) {
        Ok(bounds) => bounds
            .iter()
            .map(|(lo, hi)| {
                Ok((to_i64(fourier_motzkin::floor(lo))? - margin, to_i64(fourier_motzkin::ceil(hi))? + margin))
            })
            .collect(),
        Err(Error::Infeasible) => {
            let r = sys.total_rank();
            sys.r_seq[1..]
                .iter()
                .map(|&m| {
                    let c = rational(sys.d * m, r);
                    Ok((to_i64(fourier_motzkin::floor(&c))? - margin, to_i64(fourier_motzkin::ceil(&c))? + margin))
                })
                .collect()
        }
        Err(e) => Err(e),
    }
}

/// Independent oracle: every integer `(d_2..d_s)` in `bounds` whose completed
/// vector is a Jordan type passing the region test.
pub fn brute_force_points(ctx: GenusContext, r_seq: &[i64], d: i64, bounds: &[(i64, i64)]) -> Result<Vec<Vec<i64>>> {
    check_partition(r_seq)?;
    let mut out = Vec::new();
    let mut tail = vec![0i64; bounds.len()];
    scan(ctx, r_seq, d, bounds, 0, &mut tail, &mut out)?;
    Ok(out)
}

fn scan(ctx: GenusContext, r_seq: &[i64], d: i64, bounds: &[(i64, i64)], i: usize, tail: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) -> Result<()> {
    if i == bounds.len() {
        let mut full = vec![first_degree(ctx, r_seq, d, tail)];
        full.extend_from_slice(tail);
        if let Ok(jt) = JordanType::new(ctx, r_seq.to_vec(), full.clone()) {
            if is_semistable_regions(&jt)?.semistable {
                out.push(full);
            }
        }
        return Ok(());
    }
    for x in bounds[i].0..=bounds[i].1 {
        tail[i] = x;
        scan(ctx, r_seq, d, bounds, i + 1, tail, out)?;
    }
    Ok(())
}
