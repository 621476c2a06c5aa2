//! Jordan types and the triangular tableau `T_s`.
//!
//! Columns are indexed `k = 1..=s` from the right (column `k` holds `k`
//! boxes) and heights `h = 1..=k` from the bottom. The box `(t, h)` carries
//! the class `α_t(-(t-h) l)`, so the top box of every column is the
//! untwisted `α_t` and the bottom row reads `α_k(-(k-1) l)`.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::class::{slope, twist, ClassH, GenusContext, Slope};
use crate::error::{Error, Result};
use crate::partition::{conjugate, dominates, parts_of};

/// A Jordan type `(r_•, d_•)` of length `s`. Vectors are indexed by `k - 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct JordanType {
    ctx: GenusContext,
    r: Vec<i64>,
    d: Vec<i64>,
}

/// Wire form: `{"g": 2, "r": [0, 1], "d": [1, 1]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JordanRecord {
    pub g: i64,
    pub r: Vec<i64>,
    pub d: Vec<i64>,
}

impl JordanType {
    pub fn new(ctx: GenusContext, r: Vec<i64>, d: Vec<i64>) -> Result<Self> {
        if r.is_empty() {
            return Err(Error::InvalidJordanType("length must be at least 1".into()));
        }
        if r.len() != d.len() {
            return Err(Error::InvalidJordanType(format!(
                "rank and degree sequences differ in length ({} vs {})",
                r.len(),
                d.len()
            )));
        }
        for (i, (&rk, &dk)) in r.iter().zip(&d).enumerate() {
            if ClassH::new(rk, dk).is_err() {
                return Err(Error::InvalidJordanType(format!(
                    "alpha_{} = ({rk}, {dk}) is not a sheaf class",
                    i + 1
                )));
            }
        }
        let s = r.len();
        if r[s - 1] == 0 && d[s - 1] == 0 {
            return Err(Error::InvalidJordanType("top class alpha_s is zero".into()));
        }
        Ok(JordanType { ctx, r, d })
    }

    pub fn from_record(rec: &JordanRecord) -> Result<Self> {
        JordanType::new(GenusContext::new(rec.g)?, rec.r.clone(), rec.d.clone())
    }

    pub fn to_record(&self) -> JordanRecord {
        JordanRecord { g: self.ctx.g(), r: self.r.clone(), d: self.d.clone() }
    }

    pub fn ctx(&self) -> GenusContext {
        self.ctx
    }

    pub fn s(&self) -> usize {
        self.r.len()
    }

    pub fn ranks(&self) -> &[i64] {
        &self.r
    }

    pub fn degrees(&self) -> &[i64] {
        &self.d
    }

    /// `α_k` for `1 <= k <= s`.
    pub fn alpha(&self, k: usize) -> ClassH {
        ClassH { rank: self.r[k - 1], degree: self.d[k - 1] }
    }

    /// `(Σ k r_k, Σ k d_k - l Σ k(k-1)/2 r_k)`.
    pub fn total_class(&self) -> ClassH {
        let l = self.ctx.l();
        let mut rank = 0;
        let mut degree = 0;
        for k in 1..=self.s() as i64 {
            let (rk, dk) = (self.r[k as usize - 1], self.d[k as usize - 1]);
            rank += k * rk;
            degree += k * dk - l * k * (k - 1) / 2 * rk;
        }
        ClassH { rank, degree }
    }

    pub fn box_class(&self, t: usize, h: usize) -> Result<ClassH> {
        let s = self.s();
        if t == 0 || h == 0 || t > s || h > t {
            return Err(Error::OutOfTableau { t, h, s });
        }
        Ok(self.box_unchecked(t, h))
    }

    pub(crate) fn box_unchecked(&self, t: usize, h: usize) -> ClassH {
        twist(self.alpha(t), -((t - h) as i64) * self.ctx.l())
    }

    /// Closed form `(Σ R_k r_k, Σ R_k d_k - l Σ R_k(2k - R_k - 1)/2 r_k)`.
    pub fn region_class(&self, region: &CanonicalRegion) -> ClassH {
        assert_eq!(region.s(), self.s(), "region and Jordan type lengths differ");
        let l = self.ctx.l();
        let mut rank = 0;
        let mut degree = 0;
        for (i, &h) in region.heights.iter().enumerate() {
            let (k, h) = (i as i64 + 1, h as i64);
            rank += h * self.r[i];
            degree += h * self.d[i] - l * (h * (2 * k - h - 1) / 2) * self.r[i];
        }
        ClassH { rank, degree }
    }

    pub fn region_slope(&self, region: &CanonicalRegion) -> Result<Slope> {
        if region.is_empty() {
            return Err(Error::EmptyRegion);
        }
        slope(self.region_class(region))
    }

    /// Class of `ker θ^k`: the bottom `k` rows.
    pub fn kernel_class(&self, k: usize) -> Result<ClassH> {
        let s = self.s();
        if k > s {
            return Err(Error::IndexOutOfRange { index: k, lo: 0, hi: s });
        }
        let l = self.ctx.l();
        let mut c = ClassH::ZERO;
        for i in 1..=k {
            for j in i..=s {
                c = c + twist(self.alpha(j), (i as i64 - j as i64) * l);
            }
        }
        Ok(c)
    }

    /// Class of `F_k = Im θ^k(-kΩ)`: the boxes below the `k`-th subdiagonal.
    pub fn image_class(&self, k: usize) -> Result<ClassH> {
        let s = self.s();
        if k > s {
            return Err(Error::IndexOutOfRange { index: k, lo: 0, hi: s });
        }
        Ok((k..=s).map(|i| self.subdiagonal_class(i)).sum())
    }

    /// `[F''_k] = Σ_{i>k} α_i(-k l)`.
    pub fn subdiagonal_class(&self, k: usize) -> ClassH {
        let l = self.ctx.l();
        ((k + 1)..=self.s()).map(|i| twist(self.alpha(i), -(k as i64) * l)).sum()
    }

    /// `[F'_k] = Σ_{j>k} α_j((1-j) l)`.
    pub fn kernel_quotient_class(&self, k: usize) -> ClassH {
        let l = self.ctx.l();
        ((k + 1)..=self.s()).map(|j| twist(self.alpha(j), (1 - j as i64) * l)).sum()
    }

    /// `d_χ + d_ρ - Σ <α_k, α_k>` evaluated with the Euler form.
    pub fn stratum_dimension(&self) -> i64 {
        let ctx = self.ctx;
        let s = self.s();
        let d_chi: i64 = -(0..=s)
            .map(|k| ctx.euler_form(self.subdiagonal_class(k), self.kernel_quotient_class(k + 1)))
            .sum::<i64>();
        let mut d_rho = 0;
        for i in 1..=s {
            for j in (i + 1)..=s {
                d_rho -= ctx.euler_form(self.alpha(j), self.alpha(i));
            }
        }
        let diag: i64 = (1..=s).map(|k| ctx.euler_form(self.alpha(k), self.alpha(k))).sum();
        d_chi + d_rho - diag
    }

    /// `Σ_t min(k, t) r_t`, the rank of `ker θ^k`.
    pub fn kernel_rank(&self, k: usize) -> i64 {
        self.r.iter().enumerate().map(|(i, &rt)| (k.min(i + 1)) as i64 * rt).sum()
    }
}

impl fmt::Display for JordanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "g={} r={:?} d={:?}", self.ctx.g(), self.r, self.d)
    }
}

impl Serialize for JordanType {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_record().serialize(s)
    }
}

impl<'de> Deserialize<'de> for JordanType {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let rec = JordanRecord::deserialize(de)?;
        JordanType::from_record(&rec).map_err(serde::de::Error::custom)
    }
}

/// A canonical region, stored as bottom-justified column heights `R_1..R_s`
/// (column 1 is the rightmost).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct CanonicalRegion {
    heights: Vec<usize>,
}

impl CanonicalRegion {
    /// Validates `R_1 ∈ {0,1}` and `R_{k+1} ∈ {R_k, R_k + 1}`.
    pub fn new(heights: Vec<usize>) -> Result<Self> {
        if heights.is_empty() {
            return Err(Error::InvalidRegion("length must be at least 1".into()));
        }
        if heights[0] > 1 {
            return Err(Error::InvalidRegion(format!("R_1 = {} exceeds 1", heights[0])));
        }
        for k in 1..heights.len() {
            let (prev, cur) = (heights[k - 1], heights[k]);
            if cur != prev && cur != prev + 1 {
                return Err(Error::InvalidRegion(format!(
                    "R_{} = {cur} is not R_{} or R_{} + 1 (= {prev})",
                    k + 1,
                    k,
                    k
                )));
            }
        }
        Ok(CanonicalRegion { heights })
    }

    pub fn empty(s: usize) -> Self {
        CanonicalRegion { heights: vec![0; s] }
    }

    pub fn full(s: usize) -> Self {
        CanonicalRegion { heights: (1..=s).collect() }
    }

    pub fn s(&self) -> usize {
        self.heights.len()
    }

    pub fn heights(&self) -> &[usize] {
        &self.heights
    }

    /// `R_k` for `1 <= k <= s`.
    pub fn height(&self, k: usize) -> usize {
        self.heights[k - 1]
    }

    pub fn is_empty(&self) -> bool {
        self.heights.iter().all(|&h| h == 0)
    }

    pub fn is_full(&self) -> bool {
        self.heights.iter().enumerate().all(|(i, &h)| h == i + 1)
    }

    /// Neither empty nor the whole tableau.
    pub fn is_nontrivial(&self) -> bool {
        !self.is_empty() && !self.is_full()
    }

    /// Membership in `R_{>1}`: nonempty with `R_1 = 0`.
    pub fn starts_above_one(&self) -> bool {
        self.heights[0] == 0 && !self.is_empty()
    }

    /// `R̄_k = k - R_k`.
    pub fn bar(&self) -> CanonicalRegion {
        CanonicalRegion { heights: self.heights.iter().enumerate().map(|(i, &h)| i + 1 - h).collect() }
    }

    pub fn box_count(&self) -> usize {
        self.heights.iter().sum()
    }

    /// `Σ R_k r_k`.
    pub fn weighted_rank(&self, r: &[i64]) -> i64 {
        self.heights.iter().zip(r).map(|(&h, &rk)| h as i64 * rk).sum()
    }

    pub fn to_box_set(&self) -> BoxSet {
        let boxes = self
            .heights
            .iter()
            .enumerate()
            .flat_map(|(i, &h)| (1..=h).map(move |hh| (i + 1, hh)))
            .collect();
        BoxSet { s: self.s(), boxes }
    }
}

impl fmt::Display for CanonicalRegion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let hs: Vec<String> = self.heights.iter().map(|h| h.to_string()).collect();
        write!(f, "({})", hs.join(","))
    }
}

/// All `2^s` canonical regions of `T_s`, lexicographic in `(R_1, ..., R_s)`.
pub fn enumerate_canonical_regions(s: usize) -> Vec<CanonicalRegion> {
    assert!(s >= 1, "tableau size must be positive");
    let mut out = Vec::with_capacity(1 << s);
    for bits in 0u64..(1u64 << s) {
        // bit s-1-i is the step taken at column i+1; MSB first gives lex order.
        let mut heights = Vec::with_capacity(s);
        let mut h = 0usize;
        for i in 0..s {
            if bits >> (s - 1 - i) & 1 == 1 {
                h += 1;
            }
            heights.push(h);
        }
        out.push(CanonicalRegion { heights });
    }
    out
}

/// An arbitrary set of boxes `(t, h)` of `T_s`, not necessarily canonical.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct BoxSet {
    s: usize,
    boxes: BTreeSet<(usize, usize)>,
}

impl BoxSet {
    pub fn new(s: usize, boxes: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (t, h) in boxes {
            if t == 0 || h == 0 || t > s || h > t {
                return Err(Error::OutOfTableau { t, h, s });
            }
            if !set.insert((t, h)) {
                return Err(Error::InvalidRegion(format!("box ({t}, {h}) listed twice")));
            }
        }
        Ok(BoxSet { s, boxes: set })
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn len(&self) -> usize {
        self.boxes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.boxes.is_empty()
    }

    pub fn contains(&self, t: usize, h: usize) -> bool {
        self.boxes.contains(&(t, h))
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.boxes.iter().copied()
    }

    pub fn class(&self, jt: &JordanType) -> ClassH {
        self.boxes.iter().map(|&(t, h)| jt.box_unchecked(t, h)).sum()
    }

    pub fn slope(&self, jt: &JordanType) -> Result<Slope> {
        if self.is_empty() {
            return Err(Error::EmptyRegion);
        }
        slope(self.class(jt))
    }

    /// Closed under moving west (column `t+1`), south (`h-1`) and
    /// south-east (column `t-1`, `h-1`).
    pub fn is_saturated(&self) -> bool {
        self.boxes.iter().all(|&(t, h)| {
            let west = t == self.s || self.contains(t + 1, h);
            let south = h == 1 || self.contains(t, h - 1);
            let south_east = h == 1 || t == 1 || self.contains(t - 1, h - 1);
            west && south && south_east
        })
    }

    /// Column heights, if the set is bottom-justified in every column.
    pub fn column_heights(&self) -> Option<Vec<usize>> {
        let mut heights = vec![0usize; self.s];
        for t in 1..=self.s {
            let h = self.boxes.iter().filter(|&&(c, _)| c == t).count();
            if (1..=h).any(|hh| !self.contains(t, hh)) {
                return None;
            }
            heights[t - 1] = h;
        }
        Some(heights)
    }
}

/// Literal scan of all `2^{s(s+1)/2}` box subsets of `T_s`, keeping those
/// saturated west, south and south-east. Independent of the height-vector
/// characterisation; intended for `s <= 6`.
pub fn saturated_regions_brute_force(s: usize) -> Vec<Vec<usize>> {
    let n = s * (s + 1) / 2;
    assert!(n <= 28, "brute-force scan is limited to s <= 7");
    let idx = |t: usize, h: usize| (t - 1) * t / 2 + (h - 1);
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << n) {
        let has = |t: usize, h: usize| mask >> idx(t, h) & 1 == 1;
        let mut ok = true;
        'scan: for t in 1..=s {
            for h in 1..=t {
                if !has(t, h) {
                    continue;
                }
                if (t < s && !has(t + 1, h)) || (h > 1 && !has(t, h - 1)) || (h > 1 && t > 1 && !has(t - 1, h - 1)) {
                    ok = false;
                    break 'scan;
                }
            }
        }
        if ok {
            let heights = (1..=s).map(|t| (1..=t).filter(|&h| has(t, h)).count()).collect();
            out.push(heights);
        }
    }
    out.sort();
    out
}

/// `a ≤ b` in the order on Jordan strata: the kernels of `θ^k` for `b` are
/// no larger than those for `a`, i.e. `Σ_t min(k,t) r_t(b) <= Σ_t min(k,t) r_t(a)`
/// for every `k`. The stratum with `θ = 0` is the minimum.
pub fn stratum_leq(a: &JordanType, b: &JordanType) -> Result<bool> {
    let (ra, rb) = (a.total_class().rank, b.total_class().rank);
    if ra != rb {
        return Err(Error::RankMismatch(ra, rb));
    }
    let kmax = a.s().max(b.s());
    Ok((1..=kmax).all(|k| b.kernel_rank(k) <= a.kernel_rank(k)))
}

/// The same order via conjugate partitions: `a ≤ b` iff `conj(b)` is
/// dominated by `conj(a)`.
pub fn stratum_leq_by_dominance(a: &JordanType, b: &JordanType) -> Result<bool> {
    let (ra, rb) = (a.total_class().rank, b.total_class().rank);
    if ra != rb {
        return Err(Error::RankMismatch(ra, rb));
    }
    let ca = conjugate(&parts_of(a.ranks()));
    let cb = conjugate(&parts_of(b.ranks()));
    Ok(dominates(&ca, &cb))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn jt(g: i64, r: &[i64], d: &[i64]) -> JordanType {
        JordanType::new(GenusContext::new(g).unwrap(), r.to_vec(), d.to_vec()).unwrap()
    }

    fn reg(h: &[usize]) -> CanonicalRegion {
        CanonicalRegion::new(h.to_vec()).unwrap()
    }

    #[test]
    fn validation() {
        let ctx = GenusContext::new(2).unwrap();
        assert!(JordanType::new(ctx, vec![], vec![]).is_err());
        assert!(JordanType::new(ctx, vec![1, 0], vec![0, 0]).is_err());
        assert!(JordanType::new(ctx, vec![0, 1], vec![-1, 0]).is_err());
        assert!(JordanType::new(ctx, vec![1], vec![0, 1]).is_err());
        // torsion top class is allowed at this level
        assert!(JordanType::new(ctx, vec![1, 0], vec![0, 2]).is_ok());
    }

    #[test]
    fn total_class_examples() {
        assert_eq!(jt(2, &[0, 1], &[1, 1]).total_class(), ClassH { rank: 2, degree: 1 });
        assert_eq!(jt(2, &[3], &[-4]).total_class(), ClassH { rank: 3, degree: -4 });
        assert_eq!(jt(3, &[1, 1], &[0, 0]).total_class(), ClassH { rank: 3, degree: -4 });
    }

    #[test]
    fn total_class_is_sum_of_boxes() {
        let a = jt(3, &[1, 0, 2], &[-2, 5, 1]);
        let by_boxes: ClassH = (1..=3).flat_map(|t| (1..=t).map(move |h| (t, h))).map(|(t, h)| a.box_class(t, h).unwrap()).sum();
        assert_eq!(by_boxes, a.total_class());
    }

    #[test]
    fn box_class_examples() {
        assert_eq!(jt(2, &[0, 1], &[1, 1]).box_class(2, 1).unwrap(), ClassH { rank: 1, degree: -1 });
        assert_eq!(jt(2, &[1, 1], &[-1, 2]).box_class(2, 1).unwrap(), ClassH { rank: 1, degree: 0 });
        let a = jt(4, &[1, 2, 3], &[4, 5, 6]);
        for t in 1..=3 {
            assert_eq!(a.box_class(t, t).unwrap(), a.alpha(t));
        }
        assert_eq!(a.box_class(2, 3), Err(Error::OutOfTableau { t: 2, h: 3, s: 3 }));
        assert_eq!(a.box_class(4, 1), Err(Error::OutOfTableau { t: 4, h: 1, s: 3 }));
    }

    #[test]
    fn region_enumeration_small() {
        let hs = |s| enumerate_canonical_regions(s).into_iter().map(|r| r.heights).collect::<Vec<_>>();
        assert_eq!(hs(1), vec![vec![0], vec![1]]);
        assert_eq!(hs(2), vec![vec![0, 0], vec![0, 1], vec![1, 1], vec![1, 2]]);
        assert_eq!(hs(3).len(), 8);
        for s in 1..=5 {
            assert_eq!(hs(s), saturated_regions_brute_force(s));
        }
    }

    #[test]
    fn region_class_worked_display() {
        // (R_1..R_5) = (0,1,1,2,2); compare against the symbolic expression.
        let a = jt(2, &[1, 2, 1, 3, 2], &[7, -3, 4, 1, -2]);
        let l = 2;
        let (r, d) = (a.ranks(), a.degrees());
        let expected = ClassH {
            rank: 2 * r[4] + 2 * r[3] + r[2] + r[1],
            degree: 2 * d[4] + 2 * d[3] + d[2] + d[1] - 7 * l * r[4] - 5 * l * r[3] - 2 * l * r[2] - l * r[1],
        };
        assert_eq!(a.region_class(&reg(&[0, 1, 1, 2, 2])), expected);
    }

    #[test]
    fn region_class_examples() {
        let a = jt(2, &[0, 1], &[1, 1]);
        assert_eq!(a.region_class(&reg(&[0, 1])), ClassH { rank: 1, degree: -1 });
        assert_eq!(a.region_class(&CanonicalRegion::full(2)), a.total_class());
        assert_eq!(a.region_class(&CanonicalRegion::empty(2)), ClassH::ZERO);
    }

    #[test]
    fn region_slope_examples() {
        let a = jt(2, &[0, 1], &[1, 1]);
        assert_eq!(a.region_slope(&reg(&[0, 1])).unwrap(), Slope::finite(-1, 1));
        assert_eq!(a.region_slope(&reg(&[1, 1])).unwrap(), Slope::finite(0, 1));
        assert_eq!(a.region_slope(&CanonicalRegion::full(2)).unwrap(), Slope::finite(1, 2));
        assert_eq!(a.region_slope(&CanonicalRegion::empty(2)), Err(Error::EmptyRegion));
        let torsion = jt(2, &[0, 1], &[3, 0]);
        assert_eq!(torsion.region_slope(&reg(&[1, 1])).unwrap(), Slope::finite(1, 1));
        let zero = jt(2, &[0, 1], &[0, 0]);
        assert_eq!(zero.region_slope(&reg(&[1, 1])).unwrap(), Slope::finite(-2, 1));
    }

    #[test]
    fn bar_examples() {
        assert_eq!(reg(&[0, 1, 1, 2, 2]).bar(), reg(&[1, 1, 2, 2, 3]));
        assert_eq!(CanonicalRegion::full(4).bar(), CanonicalRegion::empty(4));
        assert_eq!(reg(&[0, 1]).bar(), reg(&[1, 1]));
        for s in 1..=6 {
            for r in enumerate_canonical_regions(s) {
                let b = r.bar();
                assert!(CanonicalRegion::new(b.heights().to_vec()).is_ok());
                assert_eq!(b.bar(), r);
                assert_ne!(r.height(1), b.height(1));
            }
        }
    }

    #[test]
    fn kernel_and_image_examples() {
        let a = jt(2, &[1, 1], &[-1, 2]);
        assert_eq!(a.kernel_class(1).unwrap(), ClassH { rank: 2, degree: -1 });
        assert_eq!(a.kernel_class(0).unwrap(), ClassH::ZERO);
        assert_eq!(a.kernel_class(2).unwrap(), a.total_class());
        assert!(a.kernel_class(3).is_err());
        let b = jt(2, &[0, 1], &[1, 1]);
        assert_eq!(b.image_class(1).unwrap(), ClassH { rank: 1, degree: -1 });
        assert_eq!(b.image_class(0).unwrap(), b.total_class());
        assert_eq!(b.image_class(2).unwrap(), ClassH::ZERO);
        assert!(b.image_class(3).is_err());
    }

    #[test]
    fn kernel_and_image_are_regions() {
        let a = jt(3, &[2, 0, 1, 1], &[-3, 4, 2, 0]);
        let s = a.s();
        for k in 0..=s {
            let ker = CanonicalRegion::new((1..=s).map(|t| t.min(k)).collect()).unwrap();
            assert_eq!(a.kernel_class(k).unwrap(), a.region_class(&ker));
            let img = CanonicalRegion::new((1..=s).map(|t| t.saturating_sub(k)).collect()).unwrap();
            assert_eq!(a.image_class(k).unwrap(), a.region_class(&img));
        }
    }

    #[test]
    fn dimension_examples() {
        assert_eq!(jt(2, &[1, 1], &[-1, 2]).stratum_dimension(), 9);
        assert_eq!(jt(3, &[0, 1], &[0, 1]).stratum_dimension(), 8);
        for g in 2..5 {
            assert_eq!(jt(g, &[3], &[5]).stratum_dimension(), (g - 1) * 9);
        }
    }

    #[test]
    fn stratum_order_examples() {
        let two = jt(2, &[0, 1], &[0, 1]);
        let one_one = jt(2, &[2], &[1]);
        // θ = 0 lies below the regular nilpotent stratum
        assert!(stratum_leq(&one_one, &two).unwrap());
        assert!(!stratum_leq(&two, &one_one).unwrap());
        assert!(stratum_leq(&two, &two).unwrap());
        let a = jt(2, &[2, 0, 0, 1], &[0, 0, 0, 1]); // parts {4,1,1}
        let b = jt(2, &[0, 0, 2], &[0, 0, 1]); // parts {3,3}
        assert!(!stratum_leq(&a, &b).unwrap());
        assert!(!stratum_leq(&b, &a).unwrap());
        assert_eq!(stratum_leq(&two, &jt(2, &[1], &[0])), Err(Error::RankMismatch(2, 1)));
    }

    #[test]
    fn record_round_trip() {
        let text = r#"{"g":2,"r":[0,1],"d":[1,1]}"#;
        let a: JordanType = serde_json::from_str(text).unwrap();
        assert_eq!(serde_json::to_string(&a).unwrap(), text);
        assert!(serde_json::from_str::<JordanType>(r#"{"g":2,"r":[1,0],"d":[1,0]}"#).is_err());
        assert!(serde_json::from_str::<JordanType>(r#"{"g":2,"r":[1],"d":[1],"x":1}"#).is_err());
    }
}
