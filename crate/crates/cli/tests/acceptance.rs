//! Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any
//! criterion fails.

use std::process::Command;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use umbra_core::algebra::{factorial_rat, int, rat, Rational};
use umbra_core::barnes::{
    bb_number_multinomial, bb_number_umbral, bb_series, dual_transform, p_sequence, BarnesContext,
    DualSequence,
};
use umbra_core::identities::{check_main_identity, run_suite, Ranges, Verifier};
use umbra_core::umbral::{bernoulli_number, PerturbedMoments, StandardMoments, SymbolKind};
use umbra_core::{MultiPoly, TruncatedSeries};

type Verdict = Result<String, String>;

fn bernoulli_oracle() -> Verdict {
    let g = TruncatedSeries::exp_difference_unit(&MultiPoly::one(), 20)
        .inv()
        .map_err(|e| e.to_string())?;
    for k in 0..=20 {
        let from_series = g.coeff(k).scale(&factorial_rat(k));
        if from_series != MultiPoly::constant(bernoulli_number(k)) {
            return Err(format!("k={k}: {} vs {from_series}", bernoulli_number(k)));
        }
    }
    if bernoulli_number(10) != rat(5, 66) || bernoulli_number(12) != rat(-691, 2730) {
        return Err("B_10 or B_12 wrong".into());
    }
    Ok("k = 0..20 exact, B_10 = 5/66, B_12 = -691/2730".into())
}

fn three_way() -> Verdict {
    let mut count = 0;
    for n in 1..=3 {
        let ctx = BarnesContext::symbolic(n).map_err(|e| e.to_string())?;
        let series = bb_series(&ctx, 10);
        for k in 0..=10u32 {
            let u = bb_number_umbral(k, &ctx);
            let m = bb_number_multinomial(k, &ctx);
            let s = series.coeff(k as usize).scale(&factorial_rat(k as usize));
            if u != m || u != s {
                return Err(format!(
                    "n={n} k={k}: umbral {u} | multinomial {m} | series {s}"
                ));
            }
            count += 1;
        }
    }
    Ok(format!("{count} cleared polynomials agree"))
}

fn main_identity() -> Verdict {
    let mut checked = 0;
    for m in (1..=7).step_by(2) {
        for n in 3..=5 {
            let r = check_main_identity(m, n).map_err(|e| e.to_string())?;
            let expected = if (m, n) == (3, 3) { rat(1, 2) } else { int(0) };
            if !r.all_passed() || r.value != Some(MultiPoly::constant(expected.clone())) {
                return Err(format!(
                    "m={m} n={n}: value {:?}, expected {expected}",
                    r.value
                ));
            }
            checked += 1;
        }
    }
    Ok(format!(
        "1/2 at (3,3), 0 at the other {} instances",
        checked - 1
    ))
}

fn full_suite() -> Verdict {
    let v = Verifier::new(&StandardMoments).seed(7);
    let reports = run_suite(&Ranges::default(), &v, 1);
    let failed: Vec<String> = reports
        .iter()
        .filter(|r| !r.all_passed())
        .map(|r| r.label())
        .collect();
    let ids: std::collections::BTreeSet<&str> = reports.iter().map(|r| r.id.as_str()).collect();
    if !failed.is_empty() {
        return Err(format!(
            "{} of {} failed, first {}",
            failed.len(),
            reports.len(),
            failed[0]
        ));
    }
    Ok(format!(
        "{} reports over {} identities, single-threaded",
        reports.len(),
        ids.len()
    ))
}

fn self_dual_instance() -> Verdict {
    let ctx = BarnesContext::numeric(vec![int(1), int(2), int(3)]).map_err(|e| e.to_string())?;
    let p = p_sequence(&ctx, 8).map_err(|e| e.to_string())?;
    if dual_transform(&p) != p {
        return Err("dual differs".into());
    }
    Ok(format!("p_0..p_8 fixed; p_8 = {}", p.entries[8]))
}

fn involution() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for trial in 0..100 {
        let values: Vec<Rational> = (0..12)
            .map(|_| rat(rng.random_range(-50..=50), rng.random_range(1..=30)))
            .collect();
        let s = DualSequence::from_rationals(values);
        if dual_transform(&dual_transform(&s)) != s {
            return Err(format!("trial {trial}"));
        }
    }
    Ok("100 sequences of length 12".into())
}

fn mutation() -> Verdict {
    let corrupted = PerturbedMoments {
        base: StandardMoments,
        kind: SymbolKind::Bernoulli,
        power: 4,
        delta: int(1),
    };
    let v = Verifier::new(&corrupted).seed(7);
    let reports = run_suite(&Ranges::default(), &v, 1);
    let failed: Vec<_> = reports.iter().filter(|r| !r.passed).collect();
    let Some(first) = failed.first() else {
        return Err("no checker noticed the corrupted moment".into());
    };
    if failed.iter().any(|r| r.witness.is_none()) {
        return Err("a failed report has no witness".into());
    }
    let w = first.witness.as_ref().expect("checked above");
    if w.lhs == w.rhs {
        return Err("witness coefficients agree".into());
    }
    Ok(format!(
        "{} failures, e.g. {} at {:?}: {} vs {}",
        failed.len(),
        first.label(),
        w.monomial,
        w.lhs,
        w.rhs
    ))
}

fn cli_determinism() -> Verdict {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_umbra"))
            .args([
                "verify",
                "all",
                "--default-ranges",
                "--format",
                "json",
                "--seed",
                "7",
            ])
            .output()
            .map_err(|e| e.to_string())
    };
    let first = run()?;
    let second = run()?;
    if first.status.code() != Some(0) || second.status.code() != Some(0) {
        return Err(format!(
            "exit statuses {:?} / {:?}",
            first.status, second.status
        ));
    }
    if first.stdout != second.stdout {
        return Err("outputs differ".into());
    }
    let lines = first.stdout.iter().filter(|&&b| b == b'\n').count();
    Ok(format!("{lines} identical JSON lines, exit 0"))
}

fn main() {
    let criteria: [(&str, fn() -> Verdict, Option<Duration>); 8] = [
        (
            "bernoulli oracle agreement",
            bernoulli_oracle,
            Some(Duration::from_secs(1)),
        ),
        (
            "three-way Bernoulli-Barnes equivalence",
            three_way,
            Some(Duration::from_secs(30)),
        ),
        ("subset-sum identity values", main_identity, None),
        (
            "full identity suite",
            full_suite,
            Some(Duration::from_secs(300)),
        ),
        ("self-duality at a=(1,2,3), N=8", self_dual_instance, None),
        ("dual transform involution", involution, None),
        ("mutation sensitivity (B_4 + 1)", mutation, None),
        ("CLI determinism", cli_determinism, None),
    ];
    let mut failures = 0;
    for (name, check, budget) in criteria {
        let start = Instant::now();
        let verdict = check();
        let elapsed = start.elapsed();
        let verdict = match (verdict, budget) {
            (Ok(_), Some(b)) if elapsed > b => Err(format!("took {elapsed:.2?}, budget {b:?}")),
            (v, _) => v,
        };
        match verdict {
            Ok(detail) => println!("PASS  {name}: {detail} [{elapsed:.2?}]"),
            Err(detail) => {
                failures += 1;
                println!("FAIL  {name}: {detail} [{elapsed:.2?}]");
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failures,
        criteria.len()
    );
    if failures > 0 {
        std::process::exit(1);
    }
}
