//! Acceptance criteria, one line per criterion. Exits nonzero if any fails.

use std::collections::HashSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use nilcone::chains::{check_conditions, higgs_slope, kappa, kappa_census, region_rkj_check, region_slope_rkj, OneFlag};
use nilcone::kac::{count_abs_indec, kac_polynomial};
use nilcone::partition::rank_vectors;
use nilcone::polytope::{build_system, census, enumerate_lattice_points, integral_translation, search_box};
use nilcone::tableau::saturated_regions_brute_force;
use nilcone::verify::random_jordan_type;
use nilcone::{
    enumerate_canonical_regions, is_semistable_inequalities, is_semistable_regions, ClassH, GenusContext, JordanType,
    Slope,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome, u64);

fn ctx(g: i64) -> GenusContext {
    GenusContext::new(g).unwrap()
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e(err: nilcone::Error) -> String {
    err.to_string()
}

fn canonical_regions() -> Outcome {
    for s in 1..=6 {
        let mut fast: Vec<Vec<usize>> = enumerate_canonical_regions(s).iter().map(|r| r.heights().to_vec()).collect();
        fast.sort();
        let slow = saturated_regions_brute_force(s);
        ensure(fast == slow, || format!("s={s}: enumeration and saturation scan differ"))?;
        ensure(slow.len() == 1 << s, || format!("s={s}: {} regions", slow.len()))?;
    }
    Ok("s = 1..6 give 2, 4, 8, 16, 32, 64".into())
}

fn dimension_identity() -> Outcome {
    let mut rng = StdRng::seed_from_u64(20261016);
    for _ in 0..1000 {
        let g = rng.gen_range(2..=4);
        let jt = random_jordan_type(&mut rng, g, 6);
        let r = jt.total_class().rank;
        ensure(jt.stratum_dimension() == (g - 1) * r * r, || format!("{jt}: {}", jt.stratum_dimension()))?;
    }
    Ok("1000 random types".into())
}

fn dual_agreement() -> Outcome {
    let mut n = 0;
    for g in [2, 3] {
        for r in 1..=4 {
            for r_seq in rank_vectors(r) {
                for d in -3..=3 {
                    let sys = build_system(ctx(g), &r_seq, d).map_err(e)?;
                    let bx = search_box(&sys, 3).map_err(e)?;
                    let mut tail: Vec<i64> = bx.iter().map(|b| b.0).collect();
                    'odometer: loop {
                        if let Ok(jt) = JordanType::new(ctx(g), r_seq.clone(), sys.complete(&tail)) {
                            let a = is_semistable_regions(&jt).map_err(e)?.semistable;
                            let b = is_semistable_inequalities(&jt).map_err(e)?.semistable;
                            ensure(a == b, || format!("{jt}: regions {a}, inequalities {b}"))?;
                            n += 1;
                        }
                        for i in (0..tail.len()).rev() {
                            if tail[i] < bx[i].1 {
                                tail[i] += 1;
                                continue 'odometer;
                            }
                            tail[i] = bx[i].0;
                        }
                        break;
                    }
                }
            }
        }
    }
    Ok(format!("{n} degree vectors"))
}

/// Every degree vector in `[-w, w]^s` with total class `(r, d)` passing the region test.
fn scan_count(g: i64, r_seq: &[i64], d: i64, w: i64) -> usize {
    let s = r_seq.len();
    let mut v = vec![-w; s];
    let mut count = 0;
    loop {
        if let Ok(jt) = JordanType::new(ctx(g), r_seq.to_vec(), v.clone()) {
            let t = jt.total_class();
            if t.degree == d && is_semistable_regions(&jt).unwrap().semistable {
                count += 1;
            }
        }
        let mut i = 0;
        loop {
            if i == s {
                return count;
            }
            if v[i] < w {
                v[i] += 1;
                break;
            }
            v[i] = -w;
            i += 1;
        }
    }
}

fn census_values() -> Outcome {
    let c = census(ctx(2), 2, 1, false).map_err(e)?;
    ensure(c.total == 2, || format!("(2,2,1) total {}", c.total))?;
    ensure(c.count_for(&[2]) == Some(1) && c.count_for(&[0, 1]) == Some(1), || "(2,2,1) breakdown".into())?;
    let c3 = census(ctx(3), 2, 1, false).map_err(e)?;
    ensure(c3.total == 3, || format!("(3,2,1) total {}", c3.total))?;
    for g in 2..=5 {
        for d in -9..=9 {
            let t = census(ctx(g), 1, d, false).map_err(e)?.total;
            ensure(t == 1, || format!("({g},1,{d}) total {t}"))?;
        }
    }
    for (g, r) in [(2, 2), (3, 2), (2, 3)] {
        for r_seq in rank_vectors(r) {
            let fast = enumerate_lattice_points(&build_system(ctx(g), &r_seq, 1).map_err(e)?).map_err(e)?.len();
            let slow = scan_count(g, &r_seq, 1, 14);
            ensure(fast == slow, || format!("g={g} r={r_seq:?}: enumerator {fast}, scan {slow}"))?;
        }
    }
    Ok("(2,2,1) = 2 as (1^2):1 + (2):1, (3,2,1) = 3, rank 1 = 1".into())
}

fn degree_independence() -> Outcome {
    let mut shown = Vec::new();
    for (r, ds) in [(2, [1, 3, 5, 7]), (3, [1, 2, 4, 5])] {
        let totals: Vec<usize> = ds.iter().map(|&d| census(ctx(2), r, d, false).map(|c| c.total)).collect::<Result<_, _>>().map_err(e)?;
        ensure(totals.iter().all(|&t| t == totals[0]), || format!("r={r}: {totals:?}"))?;
        shown.push(format!("r={r}: {}", totals[0]));
    }
    Ok(shown.join(", "))
}

fn translation() -> Outcome {
    let mut maps = 0;
    for g in [2, 3] {
        for r in 1..=6 {
            for r_seq in rank_vectors(r).into_iter().filter(|v| v.len() <= 5) {
                let base = build_system(ctx(g), &r_seq, 0).map_err(e)?.normalized();
                for d in -7..=7 {
                    let other = build_system(ctx(g), &r_seq, d).map_err(e)?.normalized();
                    ensure(other == base, || format!("g={g} r={r_seq:?} d={d}: normalized system differs"))?;
                }
                if r > 4 {
                    continue;
                }
                for d in -3..=3 {
                    for d2 in d + 1..=d + 4 {
                        let Some(tau) = integral_translation(&r_seq, d, d2) else { continue };
                        let a = enumerate_lattice_points(&build_system(ctx(g), &r_seq, d).map_err(e)?).map_err(e)?;
                        let b = enumerate_lattice_points(&build_system(ctx(g), &r_seq, d2).map_err(e)?).map_err(e)?;
                        let moved: Vec<Vec<i64>> =
                            a.iter().map(|p| p.iter().zip(&tau).map(|(x, t)| x + t).collect()).collect();
                        ensure(moved == b, || format!("g={g} r={r_seq:?}: tau fails from d={d} to d={d2}"))?;
                        maps += 1;
                    }
                }
            }
        }
    }
    Ok(format!("{maps} integral translations"))
}

fn kappa_correct() -> Outcome {
    let mut cases: Vec<(i64, i64, i64)> = vec![(2, 2, 1), (3, 2, 1)];
    cases.extend([3, 5, 7].map(|d| (2, 2, d)));
    cases.extend([1, 2, 4, 5].map(|d| (2, 3, d)));
    cases.extend((-3..=3).flat_map(|d| [(2, 1, d), (3, 1, d)]));
    let mut total = 0;
    for (g, r, d) in cases {
        let types = census(ctx(g), r, d, true).map_err(e)?.jordan_types(ctx(g)).map_err(e)?;
        let mut seen = HashSet::new();
        for jt in &types {
            let out = kappa(jt).map_err(e)?;
            let report = check_conditions(jt, &out.flag).map_err(e)?;
            ensure(report.all_pass, || format!("{jt}: flag {} fails a condition", out.flag))?;
            ensure(out.chain.higgs_class(ctx(g)) == ClassH { rank: r, degree: d }, || format!("{jt}: class of {}", out.chain))?;
            let mu = higgs_slope(ctx(g), &out.chain).map_err(e)?;
            ensure(mu == Slope::finite(d, r), || format!("{jt}: Higgs slope {mu}"))?;
            ensure(seen.insert(out.chain.clone()), || format!("({g},{r},{d}): {} repeats", out.chain))?;
        }
        let kc = kappa_census(ctx(g), r, d).map_err(e)?;
        ensure(kc.distinct == types.len(), || format!("({g},{r},{d}): census injectivity"))?;
        total += types.len();
    }
    let a = kappa(&JordanType::new(ctx(2), vec![0, 1], vec![1, 1]).map_err(e)?).map_err(e)?;
    ensure(a.chain.n == [1, 1] && a.chain.p == [0, -1], || format!("anchor 1: {}", a.chain))?;
    let b = kappa(&JordanType::new(ctx(2), vec![1, 1], vec![-1, 2]).map_err(e)?).map_err(e)?;
    ensure(b.chain.n == [1, 2] && b.chain.p == [0, -3], || format!("anchor 2: {}", b.chain))?;
    Ok(format!("{total} semistable types, injective, anchors match"))
}

fn worked_anchors() -> Outcome {
    let flag = OneFlag::new(vec![3, 2, 5, 4, 1, 6]).map_err(e)?;
    let mut rng = StdRng::seed_from_u64(6);
    let mut n = 0;
    while n < 300 {
        let g = rng.gen_range(2..=5);
        let r: Vec<i64> = (0..6).map(|_| rng.gen_range(0..=4)).collect();
        let d: Vec<i64> = r.iter().map(|&x| if x == 0 { rng.gen_range(0..=6) } else { rng.gen_range(-20..=20) }).collect();
        let Ok(jt) = JordanType::new(ctx(g), r, d) else { continue };
        let (Ok(slope), Ok(check)) = (region_slope_rkj(&jt, &flag, 3, 4), region_rkj_check(&jt, &flag, 5, 6)) else {
            continue;
        };
        let l = jt.ctx().l();
        let expect = jt.alpha(2).twist(-l).slope().map_err(e)?;
        ensure(slope == expect, || format!("{jt}: slope {slope} vs {expect}"))?;
        let sum: ClassH = (1..=5).map(|t| jt.alpha(t)).sum();
        ensure(check.class(&jt) == sum, || format!("{jt}: class {} vs {sum}", check.class(&jt)))?;
        n += 1;
    }
    Ok(format!("{n} random fillings"))
}

fn kac_module() -> Outcome {
    for g in 1..=5 {
        let a = kac_polynomial(g, 1).map_err(e)?;
        let mut mono = vec![0; g as usize + 1];
        mono[g as usize] = 1;
        ensure(a.coeffs() == mono, || format!("A_({g},1) = {a}"))?;
    }
    for (g, r, q) in [(1, 2, 2), (2, 2, 2), (2, 2, 3)] {
        let brute = count_abs_indec(g, r, q).map_err(e)?;
        let hua = kac_polynomial(g, r).map_err(e)?.eval(q as i64);
        ensure(hua == BigInt::from(brute), || format!("({g},{r},{q}): formula {hua}, oracle {brute}"))?;
    }
    for g in 1..=3 {
        for r in 1..=3 {
            let a = kac_polynomial(g, r).map_err(e)?;
            ensure(a.degree() == Some((1 + (g - 1) * r * r) as usize), || format!("degree of A_({g},{r}) = {a}"))?;
            ensure(a.has_nonnegative_coefficients(), || format!("A_({g},{r}) = {a}"))?;
        }
    }
    Ok("q^g for g <= 5, oracle agrees at (1,2,2), (2,2,2), (2,2,3)".into())
}

fn kac_crosscheck() -> Outcome {
    let mut shown = Vec::new();
    for (g, r, d) in [(2, 2, 1), (3, 2, 1), (2, 3, 1)] {
        let total = census(ctx(g), r, d, false).map_err(e)?.total;
        let a1 = kac_polynomial(g, r).map_err(e)?.at_one();
        ensure(total as i64 == a1, || format!("({g},{r},{d}): census {total}, A(1) = {a1}"))?;
        shown.push(format!("({g},{r},{d}): {total}"));
    }
    Ok(shown.join(", "))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("canonical regions match the saturation scan", canonical_regions, 10),
        ("stratum dimension equals (g-1)r^2", dimension_identity, 5),
        ("region test agrees with inequality test", dual_agreement, 60),
        ("census values", census_values, 60),
        ("census independent of degree", degree_independence, 60),
        ("translation of inequality systems", translation, 60),
        ("kappa correctness and injectivity", kappa_correct, 60),
        ("worked strip-region anchors", worked_anchors, 60),
        ("Kac polynomials and finite-field oracle", kac_module, 120),
        ("census total equals A(1)", kac_crosscheck, 300),
    ];
    let mut failed = 0;
    for (i, (name, f, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = f();
        let took = start.elapsed();
        let outcome = match outcome {
            Ok(_) if took > Duration::from_secs(*limit) => Err(format!("took {took:.2?}, limit {limit}s")),
            other => other,
        };
        match outcome {
            Ok(detail) => println!("PASS  {:>2}  {name}: {detail} ({took:.2?})", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL  {:>2}  {name}: {why} ({took:.2?})", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
