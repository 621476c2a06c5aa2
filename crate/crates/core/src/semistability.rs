//! Semistability of Jordan types, decided two ways: by the slopes of all
//! nontrivial canonical regions, and by the two-sided inequalities over the
//! regions with `R_1 = 0`.

use std::cmp::Ordering;

use num_rational::BigRational;
use serde::Serialize;

use crate::class::{compare_slope_to, rational, Slope};
use crate::error::{Error, Result};
use crate::tableau::{enumerate_canonical_regions, CanonicalRegion, JordanType};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Upper,
    Lower,
}

/// Violating region. For a lower-side violation the region whose slope
/// exceeds `d/r` is `bar(region)`, and `slope` is that region's slope.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub region: CanonicalRegion,
    pub side: Side,
    pub slope: Slope,
    #[serde(serialize_with = "ser_rational")]
    pub total_slope: BigRational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SemistabilityVerdict {
    pub semistable: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl SemistabilityVerdict {
    fn pass() -> Self {
        SemistabilityVerdict { semistable: true, witness: None }
    }

    fn fail(w: Witness) -> Self {
        SemistabilityVerdict { semistable: false, witness: Some(w) }
    }
}

pub(crate) fn ser_rational<S: serde::Serializer>(q: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(&crate::class::fmt_rational(q))
}

fn total_rank_degree(jt: &JordanType) -> Result<(i64, i64)> {
    jt.ctx().require_census()?;
    let total = jt.total_class();
    if total.rank == 0 {
        return Err(Error::TorsionTotal);
    }
    Ok((total.rank, total.degree))
}

/// Checks `μ(R) <= d/r` for every canonical `R ∉ {∅, T_s}`; the witness is
/// the lexicographically first violator.
pub fn is_semistable_regions(jt: &JordanType) -> Result<SemistabilityVerdict> {
    let (r, d) = total_rank_degree(jt)?;
    for region in enumerate_canonical_regions(jt.s()) {
        if !region.is_nontrivial() {
            continue;
        }
        let class = jt.region_class(&region);
        if compare_slope_to(class, d, r) == Some(Ordering::Greater) {
            let slope = jt.region_slope(&region)?;
            return Ok(SemistabilityVerdict::fail(Witness {
                region,
                side: Side::Upper,
                slope,
                total_slope: rational(d, r),
            }));
        }
    }
    Ok(SemistabilityVerdict::pass())
}

/// `b⁻_R = l Σ R_k (R_k - 1)/2 r_k`.
pub fn lower_offset(l: i64, r_seq: &[i64], region: &CanonicalRegion) -> i64 {
    region
        .heights()
        .iter()
        .zip(r_seq)
        .map(|(&h, &rk)| {
            let h = h as i64;
            l * (h * (h - 1) / 2) * rk
        })
        .sum()
}

/// `b⁺_R = l Σ R_k (R̄_k + k - 1)/2 r_k`.
pub fn upper_offset(l: i64, r_seq: &[i64], region: &CanonicalRegion) -> i64 {
    region
        .heights()
        .iter()
        .zip(r_seq)
        .enumerate()
        .map(|(i, (&h, &rk))| {
            let (k, h) = (i as i64 + 1, h as i64);
            l * (h * (2 * k - h - 1) / 2) * rk
        })
        .sum()
}

/// For every `R ∈ R_{>1}`:
/// `p_R d + b⁻_R <= Σ R_k d_k <= p_R d + b⁺_R` with `p_R = Σ R_k r_k / r`.
/// Compared after multiplying through by `r`.
pub fn is_semistable_inequalities(jt: &JordanType) -> Result<SemistabilityVerdict> {
    let (r, d) = total_rank_degree(jt)?;
    let l = jt.ctx().l();
    let (r_seq, d_seq) = (jt.ranks(), jt.degrees());
    for region in enumerate_canonical_regions(jt.s()) {
        if !region.starts_above_one() {
            continue;
        }
        let central: i128 = region.heights().iter().zip(d_seq).map(|(&h, &dk)| h as i128 * dk as i128).sum();
        let centre = region.weighted_rank(r_seq) as i128 * d as i128;
        let (r, central) = (r as i128, central * r as i128);
        let upper = centre + r * upper_offset(l, r_seq, &region) as i128;
        let lower = centre + r * lower_offset(l, r_seq, &region) as i128;
        let side = if central > upper {
            Side::Upper
        } else if central < lower {
            Side::Lower
        } else {
            continue;
        };
        let slope = match side {
            Side::Upper => jt.region_slope(&region)?,
            Side::Lower => jt.region_slope(&region.bar())?,
        };
        return Ok(SemistabilityVerdict::fail(Witness { region, side, slope, total_slope: rational(d, r as i64) }));
    }
    Ok(SemistabilityVerdict::pass())
}
