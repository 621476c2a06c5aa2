//! Self-check suites. Each suite recomputes a family of identities and
//! compares against an independent route (brute force, closed form or a
//! second algorithm). With `corrupt` set, every suite perturbs the value
//! under test before comparing, which must make it fail.

use std::collections::BTreeMap;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;
use serde_json::{json, Value};

use crate::chains::{kappa_census, region_rkj, region_rkj_check, OneFlag};
use crate::class::{ClassH, GenusContext};
use crate::error::Result;
use crate::kac::{count_abs_indec, crosscheck, kac_polynomial, kac_polynomial_from_oracle};
use crate::partition::rank_vectors;
use crate::polytope::{
    brute_force_points, build_system, census, enumerate_lattice_points, integral_translation, search_box,
    translation_check,
};
use crate::semistability::{is_semistable_inequalities, is_semistable_regions};
use crate::tableau::{enumerate_canonical_regions, saturated_regions_brute_force, JordanType};

pub const SUITES: [&str; 11] = [
    "regions",
    "dimension",
    "dual",
    "census",
    "independence",
    "translation",
    "kappa",
    "worked",
    "kac",
    "oracle",
    "crosscheck",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    pub seed: u64,
    pub corrupt: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { seed: 0x5eed, corrupt: false }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub passed: bool,
    pub checks: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure: Option<String>,
    pub summary: Value,
}

struct Tally {
    checks: usize,
    failure: Option<String>,
}

impl Tally {
    fn new() -> Self {
        Tally { checks: 0, failure: None }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(what());
        }
    }

    fn finish(self, suite: &str, summary: Value) -> SuiteReport {
        SuiteReport { suite: suite.into(), passed: self.failure.is_none(), checks: self.checks, failure: self.failure, summary }
    }
}

fn ctx(g: i64) -> GenusContext {
    GenusContext::new(g).expect("genus is positive")
}

fn bump(corrupt: bool) -> i64 {
    i64::from(corrupt)
}

/// Runs one suite by name; `None` for an unknown name.
pub fn run_suite(name: &str, opts: VerifyOptions) -> Option<SuiteReport> {
    let result = match name {
        "regions" => regions(opts),
        "dimension" => dimension(opts),
        "dual" => dual(opts),
        "census" => census_values(opts),
        "independence" => independence(opts),
        "translation" => translation(opts),
        "kappa" => kappa_suite(opts),
        "worked" => worked(opts),
        "kac" => kac_suite(opts),
        "oracle" => oracle(opts),
        "crosscheck" => crosscheck_suite(opts),
        _ => return None,
    };
    Some(result.unwrap_or_else(|e| SuiteReport {
        suite: name.into(),
        passed: false,
        checks: 0,
        failure: Some(format!("error: {e}")),
        summary: Value::Null,
    }))
}

/// All suites in order, or the single named one (`"all"` runs everything).
pub fn run(name: &str, opts: VerifyOptions) -> Option<Vec<SuiteReport>> {
    if name == "all" {
        Some(SUITES.iter().map(|s| run_suite(s, opts).expect("known suite")).collect())
    } else {
        run_suite(name, opts).map(|r| vec![r])
    }
}

fn regions(opts: VerifyOptions) -> Result<SuiteReport> {
    let mut t = Tally::new();
    let mut counts = BTreeMap::new();
    for s in 1..=6usize {
        let mut fast: Vec<Vec<usize>> = enumerate_canonical_regions(s).iter().map(|r| r.heights().to_vec()).collect();
        if opts.corrupt {
            fast.pop();
        }
        fast.sort();
        let slow = saturated_regions_brute_force(s);
        t.check(fast == slow, || format!("s={s}: height vectors differ from the saturation scan"));
        t.check(fast.len() == 1 << s, || format!("s={s}: {} regions, expected {}", fast.len(), 1 << s));
        counts.insert(s.to_string(), fast.len());
    }
    Ok(t.finish("regions", json!({ "counts": counts })))
}

/// Random Jordan type with `s <= max_s` and genus `g`.
pub fn random_jordan_type(rng: &mut StdRng, g: i64, max_s: usize) -> JordanType {
    let s = rng.gen_range(1..=max_s);
    let mut r: Vec<i64> = (0..s).map(|_| rng.gen_range(0..=3)).collect();
    if r[s - 1] == 0 {
        r[s - 1] = rng.gen_range(1..=3);
    }
    let d: Vec<i64> = r.iter().map(|&rk| if rk == 0 { rng.gen_range(0..=8) } else { rng.gen_range(-12..=12) }).collect();
    JordanType::new(ctx(g), r, d).expect("valid random type")
}

fn dimension(opts: VerifyOptions) -> Result<SuiteReport> {
    let mut t = Tally::new();
    let mut rng = StdRng::seed_from_u64(opts.seed);
    for _ in 0..1000 {
        let g = rng.gen_range(2..=4);
        let jt = random_jordan_type(&mut rng, g, 6);
        let r = jt.total_class().rank;
        let dim = jt.stratum_dimension() + bump(opts.corrupt);
        t.check(dim == (g - 1) * r * r, || format!("{jt}: dimension {dim} vs (g-1)r^2 = {}", (g - 1) * r * r));
    }
    Ok(t.finish("dimension", json!({ "samples": 1000 })))
}

fn dual(opts: VerifyOptions) -> Result<SuiteReport> {
    let mut t = Tally::new();
    let mut semistable = 0usize;
    for g in [2, 3] {
        for r in 1..=4 {
            for r_seq in rank_vectors(r) {
                for d in -3..=3 {
                    let sys = build_system(ctx(g), &r_seq, d)?;
                    let bx = search_box(&sys, 3)?;
                    let mut tail: Vec<i64> = bx.iter().map(|b| b.0).collect();
                    loop {
                        let full = sys.complete(&tail);
                        if let Ok(jt) = JordanType::new(ctx(g), r_seq.clone(), full.clone()) {
                            let a = is_semistable_regions(&jt)?.semistable;
                            let b = is_semistable_inequalities(&jt)?.semistable ^ opts.corrupt;
                            semistable += usize::from(a);
                            t.check(a == b, || format!("g={g} r={r_seq:?} d={full:?}: region test {a}, inequalities {b}"));
                        }
                        if !advance(&mut tail, &bx) {
                            break;
                        }
                    }
                }
            }
        }
    }
    Ok(t.finish("dual", json!({ "semistable_seen": semistable })))
}

/// Odometer over an integer box; `false` once it wraps.
fn advance(x: &mut [i64], bx: &[(i64, i64)]) -> bool {
    for i in (0..x.len()).rev() {
        if x[i] < bx[i].1 {
            x[i] += 1;
            return true;
        }
        x[i] = bx[i].0;
    }
    false
}

fn census_values(opts: VerifyOptions) -> Result<SuiteReport> {
    let mut t = Tally::new();
    let b = bump(opts.corrupt) as usize;
    let c = census(ctx(2), 2, 1, false)?;
    t.check(c.total + b == 2, || format!("(2,2,1): total {}", c.total + b));
    t.check(c.count_for(&[2]) == Some(1) && c.count_for(&[0, 1]) == Some(1), || "(2,2,1): breakdown".into());
    let c3 = census(ctx(3), 2, 1, false)?;
    t.check(c3.total == 3, || format!("(3,2,1): total {}", c3.total));
    for g in 2..=4 {
        for d in -6..=6 {
            let c = census(ctx(g), 1, d, false)?;
            t.check(c.total == 1, || format!("({g},1,{d}): total {}", c.total));
        }
    }
    // enumerator against the brute-force box scan
    for g in [2, 3] {
        for r in 1..=4 {
            for r_seq in rank_vectors(r) {
                for d in [-1, 0, 1, 2] {
                    let sys = build_system(ctx(g), &r_seq, d)?;
                    let fast = enumerate_lattice_points(&sys)?;
                    let slow = brute_force_points(ctx(g), &r_seq, d, &search_box(&sys, 2)?)?;
                    t.check(fast == slow, || format!("g={g} r={r_seq:?} d={d}: enumerator {fast:?} vs scan {slow:?}"));
                }
            }
        }
    }
    Ok(t.finish("census", json!({ "g2_r2_d1": c.total, "g3_r2_d1": c3.total })))
}

fn independence(opts: VerifyOptions) -> Result<SuiteReport> {
    let mut t = Tally::new();
    let mut totals = BTreeMap::new();
    for (r, ds) in [(2, vec![1, 3, 5, 7]), (3, vec![1, 2, 4, 5])] {
        let mut seen = Vec::new();
        for (i, &d) in ds.iter().enumerate() {
            let total = census(ctx(2), r, d, false)?.total + usize::from(opts.corrupt && i == 1);
            seen.push(total);
        }
        t.check(seen.iter().all(|&x| x == seen[0]), || format!("g=2 r={r}: totals {seen:?} over d={ds:?}"));
        totals.insert(format!("g2_r{r}"), seen);
    }
    Ok(t.finish("independence", json!(totals)))
}

fn translation(opts: VerifyOptions) -> Result<SuiteReport> {
    let mut t = Tally::new();
    let mut bijections = 0usize;
    for g in [2, 3] {
        for r in 1..=6 {
            for r_seq in rank_vectors(r).into_iter().filter(|v| v.len() <= 5) {
                for d2 in -4..=6 {
                    let same = translation_check(ctx(g), &r_seq, 0, d2)? ^ (opts.corrupt && d2 == 3);
                    t.check(same, || format!("g={g} r={r_seq:?}: normalized systems differ for d=0 and d={d2}"));
                }
                if r > 4 {
                    continue;
                }
                for (d, d2) in [(-1, 1), (0, 2), (1, 3), (1, 5), (-3, 1)] {
                    let Some(tau) = integral_translation(&r_seq, d, d2) else { continue };
                    let a = enumerate_lattice_points(&build_system(ctx(g), &r_seq, d)?)?;
                    let b = enumerate_lattice_points(&build_system(ctx(g), &r_seq, d2)?)?;
                    let moved: Vec<Vec<i64>> =
                        a.iter().map(|p| p.iter().zip(&tau).map(|(x, y)| x + y).collect()).collect();
                    t.check(moved == b, || format!("g={g} r={r_seq:?}: tau does not map d={d} points to d={d2}"));
                    bijections += 1;
                }
            }
        }
    }
    Ok(t.finish("translation", json!({ "integral_translations": bijections })))
}

fn kappa_suite(opts: VerifyOptions) -> Result<SuiteReport> {
    let mut t = Tally::new();
    let cases = [(2, 2, 1), (3, 2, 1), (2, 1, 0), (2, 1, 3), (3, 1, -2), (2, 2, 3), (2, 2, 5), (2, 2, 7), (2, 3, 1), (2, 3, 2), (2, 3, 4), (2, 3, 5)];
    let mut sizes = BTreeMap::new();
    for (g, r, d) in cases {
        let kc = kappa_census(ctx(g), r, d)?;
        let expected = census(ctx(g), r, d, false)?.total;
        let distinct = kc.distinct + usize::from(opts.corrupt);
        t.check(distinct == expected, || format!("({g},{r},{d}): {distinct} chain types for {expected} Jordan types"));
        sizes.insert(format!("{g},{r},{d}"), kc.distinct);
    }
    let anchors = [
        (vec![0, 1], vec![1, 1], vec![1, 1], vec![0, -1]),
        (vec![1, 1], vec![-1, 2], vec![1, 2], vec![0, -3]),
    ];
    for (r, d, n, p) in anchors {
        let jt = JordanType::new(ctx(2), r.clone(), d.clone())?;
        let out = crate::chains::kappa(&jt)?;
        t.check(out.chain.n == n && out.chain.p == p, || format!("kappa({r:?},{d:?}) = {}", out.chain));
    }
    Ok(t.finish("kappa", json!({ "distinct": sizes })))
}

fn worked(opts: VerifyOptions) -> Result<SuiteReport> {
    let mut t = Tally::new();
    let mut rng = StdRng::seed_from_u64(opts.seed ^ 0x77);
    let flag = OneFlag::new(vec![3, 2, 5, 4, 1, 6])?;
    let mut samples = 0;
    while samples < 200 {
        let g = rng.gen_range(2..=4);
        let r: Vec<i64> = (0..6).map(|_| rng.gen_range(0..=3)).collect();
        let d: Vec<i64> = r.iter().map(|&x| if x == 0 { rng.gen_range(0..=5) } else { rng.gen_range(-9..=9) }).collect();
        let Ok(jt) = JordanType::new(ctx(g), r, d) else { continue };
        let (Ok(a), Ok(b)) = (region_rkj(&jt, &flag, 3, 4), region_rkj_check(&jt, &flag, 5, 6)) else { continue };
        samples += 1;
        let l = jt.ctx().l();
        let expect_a = jt.alpha(2).twist(-l) + ClassH { rank: 0, degree: bump(opts.corrupt) };
        t.check(a.class(&jt) == expect_a, || format!("{jt}: R_3^4 has class {}", a.class(&jt)));
        let expect_b: ClassH = (1..=5).map(|k| jt.alpha(k)).sum();
        t.check(b.class(&jt) == expect_b, || format!("{jt}: check region (5,6) has class {}", b.class(&jt)));
    }
    Ok(t.finish("worked", json!({ "samples": samples })))
}

fn kac_suite(opts: VerifyOptions) -> Result<SuiteReport> {
    let mut t = Tally::new();
    let mut table = BTreeMap::new();
    for g in 1..=5 {
        let a = kac_polynomial(g, 1)?;
        let mut mono = vec![0; g as usize + 1];
        mono[g as usize] = 1 + bump(opts.corrupt);
        t.check(a.coeffs() == mono, || format!("A_({g},1) = {a}"));
    }
    for g in 1..=3 {
        for r in 1..=3 {
            let a = kac_polynomial(g, r)?;
            let deg = (1 + (g - 1) * r * r) as usize;
            t.check(a.degree() == Some(deg), || format!("A_({g},{r}) = {a} has degree {:?}, expected {deg}", a.degree()));
            t.check(a.has_nonnegative_coefficients(), || format!("A_({g},{r}) = {a} has a negative coefficient"));
            table.insert(format!("{g},{r}"), a.to_string());
        }
    }
    Ok(t.finish("kac", json!(table)))
}

fn oracle(opts: VerifyOptions) -> Result<SuiteReport> {
    let mut t = Tally::new();
    let mut counts = BTreeMap::new();
    for (g, r, q) in [(1, 2, 2), (2, 2, 2), (2, 2, 3), (2, 1, 2), (1, 1, 3), (3, 1, 4)] {
        let brute = count_abs_indec(g, r, q)? + u64::from(opts.corrupt);
        let hua = kac_polynomial(g, r)?.eval(q as i64);
        t.check(hua == brute.into(), || format!("(g,r,q)=({g},{r},{q}): formula {hua}, oracle {brute}"));
        counts.insert(format!("{g},{r},{q}"), brute);
    }
    for (g, r) in [(1, 1), (2, 1), (3, 1), (1, 2)] {
        let a = kac_polynomial_from_oracle(g, r)?;
        let b = kac_polynomial(g, r)?;
        t.check(a == b, || format!("({g},{r}): interpolated {a}, formula {b}"));
    }
    Ok(t.finish("oracle", json!(counts)))
}

fn crosscheck_suite(opts: VerifyOptions) -> Result<SuiteReport> {
    let mut t = Tally::new();
    let mut rows = Vec::new();
    for (g, r, d) in [(2, 2, 1), (3, 2, 1), (2, 3, 1)] {
        let c = crosscheck(ctx(g), r, d)?;
        let total = c.census_total as i64 + bump(opts.corrupt);
        t.check(total == c.kac_at_one, || format!("({g},{r},{d}): census {total}, A(1) = {}", c.kac_at_one));
        rows.push(json!({ "g": g, "r": r, "d": d, "census": c.census_total, "kac_at_one": c.kac_at_one }));
    }
    Ok(t.finish("crosscheck", Value::Array(rows)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fast_suites_pass_and_detect_corruption() {
        for name in ["regions", "dimension", "census", "worked", "kac"] {
            let ok = run_suite(name, VerifyOptions::default()).unwrap();
            assert!(ok.passed, "{name}: {:?}", ok.failure);
            assert!(ok.checks > 0);
            let bad = run_suite(name, VerifyOptions { corrupt: true, ..Default::default() }).unwrap();
            assert!(!bad.passed, "{name} missed the corruption");
        }
        assert!(run_suite("nope", VerifyOptions::default()).is_none());
    }

    #[test]
    fn odometer() {
        let bx = [(0, 1), (5, 6)];
        let mut x = vec![0, 5];
        let mut n = 1;
        while advance(&mut x, &bx) {
            n += 1;
        }
        assert_eq!(n, 4);
    }
}
