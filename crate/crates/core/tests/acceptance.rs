//! Acceptance criteria. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any fails. Every comparison is exact; the time limits are
//! wall-clock bounds on each criterion.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use charvar::algebra::{Matrix, Polynomial, Rational};
use charvar::compact::random::{random_configuration, random_eigen};
use charvar::compact::EigenvalueData;
use charvar::complex::{
    certify_sphere, homology, boundary_complex, random_complex, table_consistency, BoundaryCase, HomologyProfile,
    TableCase,
};
use charvar::invariants::{
    dim2_list, dimension, fit_sl3_relation, fk_coordinates, fk_cubic, fk_polynomial, leading_form_at_infinity,
    sl3_invariants, PartitionTuple, Sl3Boundary,
};
use charvar::sampling::{par_samples, random_gl2, random_unimodular, sample_rng};
use charvar::stability::identities::{
    identities, verify_cayley_hamilton, verify_n4_section_relation, verify_n5_factorization, verify_p1p1_closure,
};
use charvar::stability::suite::{n4_lemma_cases, random_boundary_configuration, run_shape_suite, sample_double_nilpotent};
use charvar::stability::{
    chart_generators, classify_stability, one_ps_limit, s1, s_orbit, stability_oracle, Chart, ChartPoint, Verdict,
};

type Outcome = Result<String, String>;

fn check(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn ac1() -> Outcome {
    for mu in dim2_list() {
        check(dimension(0, &mu) == 2, format!("dimension({mu}) = {}", dimension(0, &mu)))?;
    }
    for n in 4..=12 {
        let d = dimension(0, &PartitionTuple::all_ones_rank2(n));
        check(d == 2 * n as i64 - 6, format!("n = {n}: got {d}"))?;
    }
    Ok("4 dim-2 tuples, n = 4..12 all-(1,1)".into())
}

fn ac2() -> Outcome {
    let failures: Vec<usize> = par_samples(0, 1000, |i, rng| {
        let (m1, m2, m3) = (random_unimodular(rng), random_unimodular(rng), random_unimodular(rng));
        let t = fk_coordinates(&m1, &m2, &m3).expect("2x2 unimodular");
        (!fk_cubic(&t.x(), &t.a()).is_zero()).then_some(i)
    })
    .into_iter()
    .flatten()
    .collect();
    check(failures.is_empty(), format!("nonzero at samples {failures:?}"))?;
    Ok("1000/1000 exact zeros".into())
}

fn xyz() -> Polynomial {
    &(&Polynomial::var("X") * &Polynomial::var("Y")) * &Polynomial::var("Z")
}

fn sl3_samples(seed: u64, count: usize) -> Vec<charvar::invariants::Sl3Invariants> {
    let mut rng = sample_rng(seed, 0);
    let b = Sl3Boundary::random(&mut rng);
    (0..count)
        .map(|_| {
            let (m1, m2) = b.sample(&mut rng);
            sl3_invariants(&m1, &m2).expect("3x3")
        })
        .collect()
}

fn ac3() -> Outcome {
    let mut rng = sample_rng(3, 0);
    for _ in 0..20 {
        let a: [Rational; 4] = std::array::from_fn(|_| charvar::sampling::random_rational(&mut rng, 9, 4));
        let lead = leading_form_at_infinity(&fk_polynomial(&a)).map_err(|e| e.to_string())?;
        check(lead == xyz(), format!("leading form {lead} for a = {a:?}"))?;
    }
    let rel = fit_sl3_relation(&sl3_samples(3, 24)).map_err(|e| e.to_string())?;
    let lead = leading_form_at_infinity(&rel.polynomial()).map_err(|e| e.to_string())?;
    let expected = &(&Polynomial::var("X").pow(3) + &Polynomial::var("Y").pow(3)) - &xyz();
    check(lead == expected, format!("SL3 leading form {lead}"))?;
    Ok("XYZ for 20 cubics; X^3 + Y^3 - XYZ for the SL3 relation".into())
}

fn ac4() -> Outcome {
    let mut boundaries = BTreeSet::new();
    for seed in [41, 42, 43] {
        let samples = sl3_samples(seed, 60);
        let s = &samples[0];
        boundaries.insert(s.boundary().map(|r| r.to_string()));
        let rel = fit_sl3_relation(&samples).map_err(|e| e.to_string())?;
        let one = Rational::one();
        check(rel.f.coefficient(&[("x1", 1), ("x2", 1)]) == one, "x1*x2 in f")?;
        check(rel.g.coefficient(&[("x1", 3)]) == one, "x1^3 in g")?;
        check(rel.g.coefficient(&[("x2", 3)]) == one, "x2^3 in g")?;
        check(rel.f.coefficient(&[("x1", 1)]) == -(&s.a2 * &s.b1), "x1 in f")?;
    }
    check(boundaries.len() == 3, "boundary settings are not distinct")?;
    Ok("60 samples at each of 3 boundary settings".into())
}

fn ac5() -> Outcome {
    let mut coverage = Vec::new();
    for alphas in [&[2, 3, 5, 7][..], &[2, 3, 5, 7, 11][..]] {
        let eigen = EigenvalueData::from_ints(alphas).expect("valid");
        let report = run_shape_suite(&eigen, 5);
        check(
            report.disagreements == 0,
            format!("n = {}: {} disagreements", report.n, report.disagreements),
        )?;
        coverage.push(format!(
            "n={}: {} shapes realized, (m1,m2) in {:?}",
            report.n,
            report.realized,
            report.coverage.keys().collect::<Vec<_>>()
        ));
    }
    let bad: Vec<usize> = par_samples(5, 500, |i, rng| {
        let n = 4 + i % 3;
        let eigen = random_eigen(n, true, rng);
        let cfg = random_configuration(&eigen, rng);
        (classify_stability(&cfg).verdict != stability_oracle(&cfg).verdict).then_some(i)
    })
    .into_iter()
    .flatten()
    .collect();
    check(bad.is_empty(), format!("random disagreements at {bad:?}"))?;
    Ok(format!("{}; 500 random agree", coverage.join("; ")))
}

fn ac6() -> Outcome {
    for case in n4_lemma_cases() {
        check(
            case.violates_trace_condition(),
            format!("shape {} order {:?}: trace {}", case.shape, case.order, case.trace),
        )?;
    }
    let found: Vec<usize> = par_samples(6, 10_000, |i, rng| {
        let eigen = random_eigen(4, true, rng);
        let cfg = random_boundary_configuration(&eigen, rng);
        let semistable = classify_stability(&cfg).verdict == Verdict::StrictlySemistable
            || stability_oracle(&cfg).verdict == Verdict::StrictlySemistable;
        semistable.then_some(i)
    })
    .into_iter()
    .flatten()
    .collect();
    check(found.is_empty(), format!("strictly semistable at {found:?}"))?;
    Ok("12 normalized cases violate the trace condition; 0/10000 random boundary points".into())
}

fn ac7() -> Outcome {
    let expected = ["s1", "s2", "s1"];
    let results = par_samples(7, 100, |i, rng| -> Result<(), String> {
        let first = i % 3;
        let eigen = random_eigen(5, true, rng);
        let cfg = sample_double_nilpotent(&eigen, first, rng).ok_or(format!("sample {i}: not realized"))?;
        let limit = one_ps_limit(&cfg, 1).map_err(|e| format!("sample {i}: {e}"))?;
        match s_orbit(&limit) {
            Some((name, _)) if name == expected[first] => Ok(()),
            other => Err(format!("sample {i}: limit {:?} gave {:?}", limit.matrices(), other.map(|o| o.0))),
        }
    });
    results.into_iter().collect::<Result<Vec<_>, _>>()?;
    Ok("100/100 limits in the orbit of s1 or s2".into())
}

/// Exponent `w` with `after = 2^w · before`, if any.
fn power_of_two(before: &Rational, after: &Rational) -> Option<i32> {
    let r = after.checked_div(before).ok()?;
    (-8..=8).find(|&w| {
        let p = if w >= 0 { Rational::from(1i64 << w) } else { Rational::frac(1, 1i64 << -w) };
        p == r
    })
}

fn ac8() -> Outcome {
    let eigen = EigenvalueData::from_ints(&[2, 3, 5, 7, 11]).expect("valid");
    let base = s1(&eigen).map_err(|e| e.to_string())?;
    let mut rng = sample_rng(8, 0);
    let mut points = 0;
    while points < 50 {
        let g = random_gl2(&mut rng);
        if g.entries().iter().any(Rational::is_zero) {
            continue;
        }
        let cfg = base.conjugate(&g).map_err(|e| e.to_string())?;
        for chart in [Chart::U1, Chart::U2] {
            let p = ChartPoint::from_configuration(&cfg, chart).map_err(|e| e.to_string())?;
            let (vals, _) = chart_generators(&p, &eigen).map_err(|e| e.to_string())?;
            check(vals.iter().all(Rational::is_zero), format!("{chart:?} generators {vals:?} at g = {g}"))?;
        }
        points += 1;
    }
    // weights: conjugate off-orbit chart points by diag(2, 1/2)
    let t = Matrix::new(2, 2, vec![Rational::from(2), Rational::zero(), Rational::zero(), Rational::frac(1, 2)])
        .expect("2x2");
    for chart in [Chart::U1, Chart::U2] {
        let mut seen = [None; 6];
        let mut tries = 0;
        while seen.iter().any(Option::is_none) && tries < 500 {
            tries += 1;
            let cfg = random_configuration(&eigen, &mut rng);
            let (Ok(p), Ok(q)) = (
                ChartPoint::from_configuration(&cfg, chart),
                ChartPoint::from_configuration(&cfg.conjugate(&t).map_err(|e| e.to_string())?, chart),
            ) else {
                continue;
            };
            let (before, weights) = chart_generators(&p, &eigen).map_err(|e| e.to_string())?;
            let (after, _) = chart_generators(&q, &eigen).map_err(|e| e.to_string())?;
            for i in 0..6 {
                if before[i].is_zero() {
                    continue;
                }
                let w = power_of_two(&before[i], &after[i]);
                check(w == Some(weights[i]), format!("{chart:?} generator {i}: observed {w:?}, stated {}", weights[i]))?;
                seen[i] = w;
            }
        }
        check(seen.iter().all(Option::is_some), format!("{chart:?}: some weights never observed"))?;
        let observed: Vec<i32> = seen.iter().map(|w| w.expect("checked")).collect();
        check(observed == chart.weights(), format!("{chart:?} weights {observed:?}"))?;
    }
    Ok("12 generators vanish at 50 orbit points; weights (-2,-2,2,2,-2,2) / (2,2,-2,-2,2,-2) observed".into())
}

fn ac9() -> Outcome {
    check(verify_n4_section_relation(), "n4 section relation")?;
    check(verify_n5_factorization(), "n5 factorization")?;
    check(verify_p1p1_closure(), "p1p1 closure membership")?;
    check(verify_cayley_hamilton(), "Cayley-Hamilton")?;
    let all = identities();
    let held = all.iter().filter(|i| (i.check)()).count();
    check(held == all.len(), format!("{held}/{} identities hold", all.len()))?;
    Ok(format!("{held}/{} identities hold", all.len()))
}

fn ac10() -> Outcome {
    let n4 = boundary_complex(BoundaryCase::N4);
    check(certify_sphere(&n4, 1), "n4 is not certified as S^1")?;
    check(homology(&n4) == HomologyProfile::sphere(1), "n4 homology")?;
    let eq = boundary_complex(BoundaryCase::N5Equator);
    check(certify_sphere(&eq, 2), "n5 equator is not certified as S^2")?;
    check(eq.euler_characteristic() == 2, format!("chi = {}", eq.euler_characteristic()))?;
    check(homology(&eq) == HomologyProfile::sphere(2), "equator homology")?;
    let full = boundary_complex(BoundaryCase::N5Full);
    check(certify_sphere(&full, 3), "n5 full is not certified as S^3")?;
    check(homology(&full).reduced_betti == vec![0, 0, 0, 1], "full homology")?;
    check(homology(&full).torsion.iter().all(Vec::is_empty), "full torsion")?;
    for v in 0..full.vertices().len() {
        check(certify_sphere(&full.link(&[v]), 2), format!("link of {} is not S^2", full.vertices()[v]))?;
    }
    for case in [TableCase::N4, TableCase::N5] {
        let problems = table_consistency(case);
        check(problems.is_empty(), format!("{case:?} table: {problems:?}"))?;
    }
    Ok(format!("S^1, S^2 (chi = 2), S^3 with {} certified vertex links", full.vertices().len()))
}

fn ac11() -> Outcome {
    let mut rng = sample_rng(11, 0);
    let fixtures = BoundaryCase::ALL.map(boundary_complex);
    let randoms: Vec<_> = (0..50).map(|_| random_complex(&mut rng, 7, 2)).collect();
    for (i, c) in fixtures.iter().chain(&randoms).enumerate() {
        let h = homology(c);
        let hs = homology(&c.suspension("apex_n", "apex_s").map_err(|e| e.to_string())?);
        check(hs.reduced_betti[0] == 0 && hs.torsion[0].is_empty(), format!("complex {i}: H0 of suspension"))?;
        check(hs.reduced_betti[1..] == h.reduced_betti[..], format!("complex {i}: betti {:?} vs {:?}", h.reduced_betti, hs.reduced_betti))?;
        check(hs.torsion[1..] == h.torsion[..], format!("complex {i}: torsion"))?;
    }
    Ok("3 fixtures and 50 random complexes".into())
}

fn main() -> ExitCode {
    let criteria: [(&str, &str, u64, fn() -> Outcome); 11] = [
        ("AC1", "dimension table", 1, ac1),
        ("AC2", "Fricke-Klein identity", 10, ac2),
        ("AC3", "leading forms at infinity", 1, ac3),
        ("AC4", "SL3 relation shape", 30, ac4),
        ("AC5", "stability criterion vs Hilbert-Mumford oracle", 60, ac5),
        ("AC6", "no strictly semistable points for n = 4", 60, ac6),
        ("AC7", "limits of the (2,0) family", 30, ac7),
        ("AC8", "chart ideals and torus weights", 30, ac8),
        ("AC9", "symbolic identities", 1, ac9),
        ("AC10", "sphere certification", 5, ac10),
        ("AC11", "suspension shifts homology", 30, ac11),
    ];
    let mut failed = 0;
    for (id, name, limit, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let over = elapsed > Duration::from_secs(limit);
        let (status, detail) = match (&outcome, over) {
            (Ok(d), false) => ("PASS", d.clone()),
            (Ok(d), true) => ("FAIL", format!("{d}; exceeded time limit")),
            (Err(e), _) => ("FAIL", e.clone()),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!(
            "{id:<5} {status}  {name} [{:.3}s, limit {limit}s, exact]  {detail}",
            elapsed.as_secs_f64()
        );
    }
    println!("{}/11 criteria passed", 11 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
