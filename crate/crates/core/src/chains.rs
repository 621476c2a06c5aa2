//! 1-flags on the tableau, their chain types, the stability conditions on a
//! flag, and the map `κ` from semistable Jordan types to chain types.
//!
//! A 1-flag is recorded by the permutation `σ` of strip sizes: strip `k`
//! has `σ(k)` boxes, one in each of the columns `t >= s + 1 - σ(k)`, sitting
//! on top of the strips before it. Boxes are valued at those stacked heights.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_rational::BigRational;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::class::{compare_slope_to, fmt_rational, rational, ClassH, GenusContext, Slope};
use crate::error::{Error, Result};
use crate::polytope::census;
use crate::semistability::is_semistable_regions;
use crate::tableau::{BoxSet, CanonicalRegion, JordanRecord, JordanType};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct OneFlag {
    sigma: Vec<usize>,
}

impl OneFlag {
    pub fn new(sigma: Vec<usize>) -> Result<Self> {
        let s = sigma.len();
        if s == 0 {
            return Err(Error::InvalidFlag("empty permutation".into()));
        }
        let mut seen = vec![false; s + 1];
        for &m in &sigma {
            if m == 0 || m > s || seen[m] {
                return Err(Error::InvalidFlag(format!("{sigma:?} is not a permutation of 1..={s}")));
            }
            seen[m] = true;
        }
        Ok(OneFlag { sigma })
    }

    pub fn s(&self) -> usize {
        self.sigma.len()
    }

    pub fn sigma(&self) -> &[usize] {
        &self.sigma
    }

    /// `σ(k)`, the number of boxes of strip `k`.
    pub fn size(&self, k: usize) -> usize {
        self.sigma[k - 1]
    }

    /// `h(k, t) = #{i <= k : σ(i) >= s + 1 - t}`.
    pub fn height(&self, k: usize, t: usize) -> usize {
        let s = self.s();
        self.sigma[..k].iter().filter(|&&m| m + t > s).count()
    }

    /// Boxes of strip `k`, leftmost (column `s`) first.
    pub fn strip_boxes(&self, k: usize) -> Vec<(usize, usize)> {
        let s = self.s();
        (s + 1 - self.size(k)..=s).rev().map(|t| (t, self.height(k, t))).collect()
    }

    /// The union of the first `k` strips.
    pub fn prefix_region(&self, k: usize) -> CanonicalRegion {
        let heights = (1..=self.s()).map(|t| self.height(k, t)).collect();
        CanonicalRegion::new(heights).expect("prefix regions of a 1-flag are canonical")
    }

    /// `ρ_k^j`: strip `k` moves to position `j`, strips `k+1..j` move down one.
    pub fn mutate(&self, k: usize, j: usize) -> Result<OneFlag> {
        let s = self.s();
        if k == 0 || k >= s {
            return Err(Error::IndexOutOfRange { index: k, lo: 1, hi: s.saturating_sub(1) });
        }
        if j <= k || j > s {
            return Err(Error::IndexOutOfRange { index: j, lo: k + 1, hi: s });
        }
        let mut sigma = self.sigma.clone();
        sigma[k - 1..j].rotate_left(1);
        Ok(OneFlag { sigma })
    }
}

impl fmt::Display for OneFlag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.sigma.iter().map(|m| m.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ChainType {
    pub n: Vec<i64>,
    pub p: Vec<i64>,
}

impl ChainType {
    /// `Σ_k (n_k, p_k + (k-1) l n_k)`.
    pub fn higgs_class(&self, ctx: GenusContext) -> ClassH {
        let l = ctx.l();
        let rank = self.n.iter().sum();
        let degree = self.n.iter().zip(&self.p).enumerate().map(|(i, (&n, &p))| p + i as i64 * l * n).sum();
        ClassH { rank, degree }
    }
}

impl fmt::Display for ChainType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={:?} p={:?}", self.n, self.p)
    }
}

/// Slope of `Σ_k (p_k + (k-1) l n_k) / Σ_k n_k`.
pub fn higgs_slope(ctx: GenusContext, ct: &ChainType) -> Result<Slope> {
    let c = ct.higgs_class(ctx);
    if c.rank == 0 {
        return Err(Error::ZeroRank);
    }
    Ok(Slope::Finite(rational(c.degree, c.rank)))
}

fn check_lengths(jt: &JordanType, flag: &OneFlag) -> Result<()> {
    if jt.s() != flag.s() {
        return Err(Error::InvalidFlag(format!("flag of length {} for a Jordan type of length {}", flag.s(), jt.s())));
    }
    Ok(())
}

fn class_of(jt: &JordanType, boxes: &[(usize, usize)]) -> ClassH {
    boxes.iter().map(|&(t, h)| jt.box_unchecked(t, h)).sum()
}

/// `(n_k, p_k)` for strip `k`.
pub fn strip_class(jt: &JordanType, flag: &OneFlag, k: usize) -> Result<(i64, i64)> {
    check_lengths(jt, flag)?;
    if k == 0 || k > flag.s() {
        return Err(Error::IndexOutOfRange { index: k, lo: 1, hi: flag.s() });
    }
    let c = class_of(jt, &flag.strip_boxes(k));
    Ok((c.rank, c.degree - (k as i64 - 1) * jt.ctx().l() * c.rank))
}

pub fn chain_type(jt: &JordanType, flag: &OneFlag) -> Result<ChainType> {
    let mut ct = ChainType { n: Vec::new(), p: Vec::new() };
    for k in 1..=flag.s() {
        let (n, p) = strip_class(jt, flag, k)?;
        ct.n.push(n);
        ct.p.push(p);
    }
    Ok(ct)
}

fn strip_rank(jt: &JordanType, flag: &OneFlag, k: usize) -> i64 {
    let s = flag.s();
    (s + 1 - flag.size(k)..=s).map(|t| jt.ranks()[t - 1]).sum()
}

/// Boxes of strips `k..=j`, each with its `cut` leftmost boxes removed.
fn trimmed_strips(flag: &OneFlag, k: usize, j: usize, cut: usize) -> Vec<(usize, usize)> {
    (k..=j).flat_map(|t| flag.strip_boxes(t).into_iter().skip(cut)).collect()
}

fn check_pair(flag: &OneFlag, k: usize, j: usize) -> Result<()> {
    let s = flag.s();
    if k == 0 || k >= s {
        return Err(Error::IndexOutOfRange { index: k, lo: 1, hi: s.saturating_sub(1) });
    }
    if j <= k || j > s {
        return Err(Error::IndexOutOfRange { index: j, lo: k + 1, hi: s });
    }
    Ok(())
}

fn guard_r(jt: &JordanType, flag: &OneFlag, k: usize, j: usize) -> bool {
    let nj = strip_rank(jt, flag, j);
    (k..j).all(|t| nj < strip_rank(jt, flag, t))
}

fn guard_r_check(jt: &JordanType, flag: &OneFlag, k: usize, j: usize) -> bool {
    let nk = strip_rank(jt, flag, k);
    (k + 1..=j).all(|t| nk < strip_rank(jt, flag, t))
}

/// `R_k^j`: strips `k..=j` without their `#S_j` leftmost boxes.
pub fn region_rkj(jt: &JordanType, flag: &OneFlag, k: usize, j: usize) -> Result<BoxSet> {
    check_lengths(jt, flag)?;
    check_pair(flag, k, j)?;
    if !guard_r(jt, flag, k, j) {
        return Err(Error::GuardNotMet { k, j });
    }
    BoxSet::new(flag.s(), trimmed_strips(flag, k, j, flag.size(j)))
}

/// `Ř_k^j`: strips `k..=j` without their `#S_k` leftmost boxes.
pub fn region_rkj_check(jt: &JordanType, flag: &OneFlag, k: usize, j: usize) -> Result<BoxSet> {
    check_lengths(jt, flag)?;
    check_pair(flag, k, j)?;
    if !guard_r_check(jt, flag, k, j) {
        return Err(Error::GuardNotMet { k, j });
    }
    BoxSet::new(flag.s(), trimmed_strips(flag, k, j, flag.size(k)))
}

fn stacked_slope(jt: &JordanType, flag: &OneFlag, boxes: &BoxSet) -> Result<Slope> {
    if boxes.is_empty() {
        return Err(Error::EmptyRegion);
    }
    let cells: Vec<(usize, usize)> = boxes.iter().collect();
    debug_assert!(cells.iter().all(|&(t, h)| h <= flag.height(flag.s(), t)));
    class_of(jt, &cells).slope()
}

pub fn region_slope_rkj(jt: &JordanType, flag: &OneFlag, k: usize, j: usize) -> Result<Slope> {
    stacked_slope(jt, flag, &region_rkj(jt, flag, k, j)?)
}

pub fn region_slope_rkj_check(jt: &JordanType, flag: &OneFlag, k: usize, j: usize) -> Result<Slope> {
    stacked_slope(jt, flag, &region_rkj_check(jt, flag, k, j)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum ConditionKind {
    #[serde(rename = "C0")]
    C0,
    #[serde(rename = "C")]
    Prefix,
    #[serde(rename = "Ckj")]
    Upper,
    #[serde(rename = "Ckj_check")]
    Lower,
}

/// Slope of a box set in condition reports; the zero class reads as `-inf`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ReportSlope {
    NegInfinity,
    Value(Slope),
}

impl Serialize for ReportSlope {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            ReportSlope::NegInfinity => s.serialize_str("-inf"),
            ReportSlope::Value(v) => v.serialize(s),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConditionInstance {
    pub kind: ConditionKind,
    pub k: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub j: Option<usize>,
    pub guard: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub slope: Option<ReportSlope>,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConditionReport {
    #[serde(serialize_with = "ser_q")]
    pub mu: BigRational,
    pub all_pass: bool,
    pub instances: Vec<ConditionInstance>,
}

fn ser_q<S: Serializer>(q: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(&fmt_rational(q))
}

impl ConditionReport {
    pub fn failures(&self) -> impl Iterator<Item = &ConditionInstance> {
        self.instances.iter().filter(|c| !c.holds)
    }

    fn statuses_without_c0(&self) -> BTreeMap<(ConditionKind, usize, Option<usize>), bool> {
        self.instances
            .iter()
            .filter(|c| c.kind != ConditionKind::C0)
            .map(|c| ((c.kind, c.k, c.j), c.holds))
            .collect()
    }
}

fn report_slope(c: ClassH) -> ReportSlope {
    match c.slope() {
        Ok(v) => ReportSlope::Value(v),
        Err(_) => ReportSlope::NegInfinity,
    }
}

/// `μ(c) > d/r`, with the zero class counting as `-∞`.
fn exceeds(c: ClassH, d: i64, r: i64) -> bool {
    compare_slope_to(c, d, r) == Some(Ordering::Greater)
}

pub fn check_conditions(jt: &JordanType, flag: &OneFlag) -> Result<ConditionReport> {
    check_lengths(jt, flag)?;
    let total = jt.total_class();
    if total.rank == 0 {
        return Err(Error::TorsionTotal);
    }
    let (r, d) = (total.rank, total.degree);
    let s = flag.s();
    let ct = chain_type(jt, flag)?;
    let mut instances = Vec::new();
    for i in 2..=s {
        let guard = ct.n[i - 2] == ct.n[i - 1];
        instances.push(ConditionInstance {
            kind: ConditionKind::C0,
            k: i,
            j: None,
            guard,
            slope: None,
            holds: !guard || ct.p[i - 1] <= ct.p[i - 2],
        });
    }
    for k in 1..s {
        let c = jt.region_class(&flag.prefix_region(k));
        instances.push(ConditionInstance {
            kind: ConditionKind::Prefix,
            k,
            j: None,
            guard: true,
            slope: Some(report_slope(c)),
            holds: !exceeds(c, d, r),
        });
    }
    for k in 1..s {
        for j in k + 1..=s {
            for (kind, guard) in [
                (ConditionKind::Upper, guard_r(jt, flag, k, j)),
                (ConditionKind::Lower, guard_r_check(jt, flag, k, j)),
            ] {
                let (slope, holds) = if guard {
                    let cut = if kind == ConditionKind::Upper { flag.size(j) } else { flag.size(k) };
                    let c = class_of(jt, &trimmed_strips(flag, k, j, cut));
                    let above = exceeds(c, d, r);
                    (Some(report_slope(c)), if kind == ConditionKind::Upper { above } else { !above })
                } else {
                    (None, true)
                };
                instances.push(ConditionInstance { kind, k, j: Some(j), guard, slope, holds });
            }
        }
    }
    let all_pass = instances.iter().all(|c| c.holds);
    Ok(ConditionReport { mu: rational(d, r), all_pass, instances })
}

fn require_semistable(jt: &JordanType) -> Result<(i64, i64)> {
    if !is_semistable_regions(jt)?.semistable {
        return Err(Error::NotSemistable);
    }
    let total = jt.total_class();
    Ok((total.rank, total.degree))
}

/// Builds the flag strip by strip: the next strip is the shortest unused
/// size whose uncovered remainder of the available row is empty or has
/// slope at most `d/r`.
pub fn greedy_flag(jt: &JordanType) -> Result<OneFlag> {
    let (r, d) = require_semistable(jt)?;
    let s = jt.s();
    let mut sigma: Vec<usize> = Vec::with_capacity(s);
    let mut heights = vec![0usize; s + 1];
    for _ in 0..s {
        let m = (1..=s)
            .filter(|m| !sigma.contains(m))
            .find(|&m| {
                let rest: Vec<(usize, usize)> =
                    (1..s + 1 - m).filter(|&t| heights[t] < t).map(|t| (t, heights[t] + 1)).collect();
                !exceeds(class_of(jt, &rest), d, r)
            })
            .ok_or_else(|| Error::Invariant("greedy construction found no admissible strip".into()))?;
        for h in heights.iter_mut().skip(s + 1 - m) {
            *h += 1;
        }
        sigma.push(m);
    }
    let flag = OneFlag::new(sigma)?;
    let report = check_conditions(jt, &flag)?;
    if let Some(bad) = report.failures().find(|c| matches!(c.kind, ConditionKind::Prefix | ConditionKind::Upper)) {
        return Err(Error::Invariant(format!("greedy flag {flag} violates {:?} at k={} j={:?}", bad.kind, bad.k, bad.j)));
    }
    Ok(flag)
}

/// What a (C0) transposition is allowed to change.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum C0Policy {
    /// No other condition may change status.
    #[default]
    Strict,
    /// `(C_k)` and `(C_k^j)` may not change; `(Č_k^j)` may, since the
    /// mutation loop revisits them. The final flag is still checked in full.
    KeepEstablished,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KappaOutcome {
    pub flag: OneFlag,
    #[serde(flatten)]
    pub chain: ChainType,
    pub conditions: ConditionReport,
    pub mutations: usize,
    pub swaps: usize,
    /// `(Č_k^j)` instances whose status a (C0) transposition changed.
    pub c0_side_effects: usize,
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

struct Counters {
    mutations: usize,
    swaps: usize,
    side_effects: usize,
    cap: usize,
}

/// Applies adjacent transpositions on equal-rank strips until (C0) holds,
/// checking what else changed against `policy`.
fn repair_c0(jt: &JordanType, flag: &mut OneFlag, policy: C0Policy, n: &mut Counters) -> Result<()> {
    loop {
        let ct = chain_type(jt, flag)?;
        let Some(i) = (2..=flag.s()).find(|&i| ct.n[i - 2] == ct.n[i - 1] && ct.p[i - 2] < ct.p[i - 1]) else {
            return Ok(());
        };
        let before = check_conditions(jt, flag)?.statuses_without_c0();
        flag.sigma.swap(i - 2, i - 1);
        let after = check_conditions(jt, flag)?.statuses_without_c0();
        for (key, was) in &before {
            if after[key] == *was {
                continue;
            }
            if policy == C0Policy::KeepEstablished && key.0 == ConditionKind::Lower {
                n.side_effects += 1;
                continue;
            }
            return Err(Error::Invariant(format!(
                "C0 transposition at {i} changed {:?} k={} j={:?} for {jt}",
                key.0, key.1, key.2
            )));
        }
        n.swaps += 1;
        if n.swaps > n.cap {
            return Err(Error::IterationCapExceeded(n.cap));
        }
    }
}

/// `κ` with the strict (C0) policy.
pub fn kappa(jt: &JordanType) -> Result<KappaOutcome> {
    kappa_with(jt, C0Policy::Strict)
}

/// Greedy flag, then `ρ_k^j` mutations on the longest strip with an
/// unfulfilled `Č_k^j` (minimal `j`), interleaved with (C0) repair.
pub fn kappa_with(jt: &JordanType, policy: C0Policy) -> Result<KappaOutcome> {
    let (r, d) = require_semistable(jt)?;
    let s = jt.s();
    let cap = s * s * factorial(s);
    let mut flag = greedy_flag(jt)?;
    let mut n = Counters { mutations: 0, swaps: 0, side_effects: 0, cap };
    loop {
        repair_c0(jt, &mut flag, policy, &mut n)?;
        let report = check_conditions(jt, &flag)?;
        let pending = report
            .failures()
            .filter(|c| c.kind == ConditionKind::Lower)
            .map(|c| (c.k, c.j.expect("pair condition")))
            .max_by(|a, b| flag.size(a.0).cmp(&flag.size(b.0)).then(b.1.cmp(&a.1)));
        let Some((k, j)) = pending else {
            if !report.all_pass {
                let bad = report.failures().next().expect("a failing instance");
                return Err(Error::Invariant(format!(
                    "kappa stopped on {flag} with {:?} failing at k={} j={:?}",
                    bad.kind, bad.k, bad.j
                )));
            }
            let chain = chain_type(jt, &flag)?;
            if chain.higgs_class(jt.ctx()) != (ClassH { rank: r, degree: d }) {
                return Err(Error::Invariant(format!("chain {chain} does not add up to ({r}, {d})")));
            }
            if higgs_slope(jt.ctx(), &chain)? != Slope::Finite(rational(d, r)) {
                return Err(Error::Invariant(format!("chain {chain} has the wrong Higgs slope")));
            }
            return Ok(KappaOutcome {
                flag,
                chain,
                conditions: report,
                mutations: n.mutations,
                swaps: n.swaps,
                c0_side_effects: n.side_effects,
            });
        };
        if let Some(t) = (k + 1..=j).find(|&t| flag.size(t) <= flag.size(k)) {
            return Err(Error::Invariant(format!("rho_{k}^{j} would move strip {k} past the shorter strip {t} in {flag}")));
        }
        flag = flag.mutate(k, j)?;
        n.mutations += 1;
        if n.mutations > cap {
            return Err(Error::IterationCapExceeded(cap));
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KappaEntry {
    pub jordan: JordanRecord,
    pub flag: OneFlag,
    #[serde(flatten)]
    pub chain: ChainType,
    pub mutations: usize,
    pub swaps: usize,
    pub c0_side_effects: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KappaCensus {
    pub g: i64,
    pub r: i64,
    pub d: i64,
    pub policy: C0Policy,
    pub entries: Vec<KappaEntry>,
    pub distinct: usize,
}

/// `κ` on every semistable Jordan type of class `(r, d)`; fails unless the
/// resulting chain types are pairwise distinct.
pub fn kappa_census(ctx: GenusContext, r: i64, d: i64) -> Result<KappaCensus> {
    kappa_census_with(ctx, r, d, C0Policy::Strict)
}

pub fn kappa_census_with(ctx: GenusContext, r: i64, d: i64, policy: C0Policy) -> Result<KappaCensus> {
    let types = census(ctx, r, d, true)?.jordan_types(ctx)?;
    let entries: Vec<KappaEntry> = types
        .par_iter()
        .map(|jt| {
            let out = kappa_with(jt, policy)?;
            Ok(KappaEntry {
                jordan: jt.to_record(),
                flag: out.flag,
                chain: out.chain,
                mutations: out.mutations,
                swaps: out.swaps,
                c0_side_effects: out.c0_side_effects,
            })
        })
        .collect::<Result<_>>()?;
    let mut seen: HashMap<&ChainType, &JordanRecord> = HashMap::new();
    for e in &entries {
        if let Some(prev) = seen.insert(&e.chain, &e.jordan) {
            return Err(Error::InjectivityViolation(format!(
                "r={:?} d={:?} and r={:?} d={:?} both map to {}",
                prev.r, prev.d, e.jordan.r, e.jordan.d, e.chain
            )));
        }
    }
    let distinct = seen.len();
    Ok(KappaCensus { g: ctx.g(), r, d, policy, entries, distinct })
}
