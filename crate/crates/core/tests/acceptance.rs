//! Acceptance suite: one line per criterion, nonzero exit if any fails.
//!
//! Every dimension here is computed exactly over Q(q); the threshold is
//! raised to cover the largest grid case (d = 81).

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::Instant;

use rayon::prelude::*;
use swdual::centralizer::{analyse, verify_commutation, Analysis};
use swdual::combinatorics::{hook_partitions, partitions, Partition};
use swdual::hecke::{build_t, check_hecke_relations, reduced_words, t_element, HeckeParams};
use swdual::linalg::{ExactPolicy, Mat};
use swdual::qfield::BigRat;
use swdual::qsuper::{check_qsuper_relations, check_rho2_table};
use swdual::superspace::SuperDims;

const PAIRS: [(usize, usize); 8] = [(1, 0), (0, 1), (2, 0), (0, 2), (1, 1), (2, 1), (1, 2), (2, 2)];

/// `(m, n, r)` with `2 <= r <= 4` and `(m+n)^r <= 81`.
fn grid() -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for (m, n) in PAIRS {
        for r in 2..=4 {
            if (m + n).pow(r as u32) <= 81 {
                out.push((m, n, r));
            }
        }
    }
    out
}

fn dims(m: usize, n: usize) -> SuperDims {
    SuperDims::new(m, n).unwrap()
}

fn rat(p: i64, q: i64) -> BigRat {
    BigRat::new(p.into(), q.into())
}

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        passed,
        detail: detail.into(),
    }
}

/// Standard tableaux of shape `lambda` by recursive removal of corners.
fn count_standard(parts: &[usize]) -> u128 {
    if parts.iter().all(|&p| p == 0) {
        return 1;
    }
    let mut total = 0;
    for i in 0..parts.len() {
        let corner = parts[i] > 0 && parts.get(i + 1).map_or(true, |&next| next < parts[i]);
        if corner {
            let mut smaller = parts.to_vec();
            smaller[i] -= 1;
            total += count_standard(&smaller);
        }
    }
    total
}

/// `(m,n)`-semistandard fillings by testing every map cells -> letters.
fn count_hook_fillings(lambda: &Partition, m: usize, n: usize) -> u128 {
    let cells = lambda.cells();
    let letters = m + n;
    let at: BTreeMap<(usize, usize), usize> = cells.iter().enumerate().map(|(k, &c)| (c, k)).collect();
    let mut count = 0;
    for code in 0..letters.pow(cells.len() as u32) {
        let mut x = code;
        let fill: Vec<usize> = cells
            .iter()
            .map(|_| {
                let a = x % letters + 1;
                x /= letters;
                a
            })
            .collect();
        let ok = cells.iter().enumerate().all(|(k, &(i, j))| {
            let a = fill[k];
            let right = at.get(&(i, j + 1)).map_or(true, |&o| {
                let b = fill[o];
                if b <= m { a <= b } else { a < b }
            });
            let below = at.get(&(i + 1, j)).map_or(true, |&o| {
                let b = fill[o];
                if b <= m { a < b } else { a <= b }
            });
            right && below
        });
        if ok {
            count += 1;
        }
    }
    count
}

/// `(sum f^2, sum d^2, sum f d)` over all partitions of `r`; shapes outside
/// the hook contribute nothing because they admit no filling.
fn oracle_sums(m: usize, n: usize, r: usize) -> (u128, u128, u128) {
    let mut s = (0, 0, 0);
    for lambda in partitions(r) {
        let d = count_hook_fillings(&lambda, m, n);
        if d == 0 {
            continue;
        }
        let f = count_standard(lambda.parts());
        s.0 += f * f;
        s.1 += d * d;
        s.2 += f * d;
    }
    s
}

fn hecke_relations() -> Outcome {
    let cases = grid();
    let failed: Vec<_> = cases
        .par_iter()
        .filter(|&&(m, n, r)| {
            let p = HeckeParams::new(dims(m, n), r).unwrap();
            !check_hecke_relations(&p).unwrap().passed()
        })
        .collect();
    outcome(failed.is_empty(), format!("{} cases, failing {:?}", cases.len(), failed))
}

fn qsuper_relations() -> Outcome {
    let cases = grid();
    let failed: Vec<_> = cases
        .par_iter()
        .filter(|&&(m, n, r)| !check_qsuper_relations(dims(m, n), r).unwrap().passed())
        .collect();
    let bad_tables: Vec<_> = PAIRS
        .iter()
        .filter(|&&(m, n)| !check_rho2_table(dims(m, n)).unwrap().passed())
        .collect();
    outcome(
        failed.is_empty() && bad_tables.is_empty(),
        format!(
            "{} cases, failing {:?}; two-site tables for {} (m,n), failing {:?}",
            cases.len(),
            failed,
            PAIRS.len(),
            bad_tables
        ),
    )
}

fn commutation() -> Outcome {
    let cases = grid();
    let failed: Vec<_> = cases
        .par_iter()
        .filter(|&&(m, n, r)| !verify_commutation(dims(m, n), r).unwrap().passed())
        .collect();
    outcome(failed.is_empty(), format!("{} cases, failing {:?}", cases.len(), failed))
}

fn double_centralizer(all: &BTreeMap<(usize, usize, usize), Analysis>) -> Outcome {
    let expected = [
        ((1, 1, 2), (2, 8, 2, 8)),
        ((1, 1, 3), (6, 12, 6, 12)),
        ((1, 1, 4), (20, 16, 20, 16)),
        ((2, 1, 3), (6, 129, 6, 129)),
    ];
    let mut ok = true;
    let mut parts = Vec::new();
    for ((m, n, r), want) in expected {
        let (f2, d2, _) = oracle_sums(m, n, r);
        let oracle = (f2 as usize, d2 as usize, f2 as usize, d2 as usize);
        let rep = &all[&(m, n, r)].report;
        let got = (
            rep.dim_hecke_image,
            rep.dim_super_image,
            rep.dim_commutant_of_super,
            rep.dim_commutant_of_hecke,
        );
        ok &= got == want && oracle == want && rep.containment && !rep.probabilistic;
        parts.push(format!("({m},{n},{r}) -> {got:?}"));
    }
    let failed: Vec<_> = all.iter().filter(|(_, a)| !a.report.passed()).map(|(k, _)| *k).collect();
    ok &= failed.is_empty();
    parts.push(format!("verdict on all {} cases, failing {:?}", all.len(), failed));
    outcome(ok, parts.join(", "))
}

fn hook_decomposition(all: &BTreeMap<(usize, usize, usize), Analysis>) -> Outcome {
    let mut failed = Vec::new();
    for (&(m, n, r), a) in all {
        let (f2, _, fd) = oracle_sums(m, n, r);
        let rep = a.hook_report();
        let good = fd == (m + n).pow(r as u32) as u128
            && rep.tensor_dim_matches
            && a.report.dim_hecke_image as u128 == f2
            && rep.hecke_image_matches;
        if !good {
            failed.push((m, n, r));
        }
    }
    outcome(failed.is_empty(), format!("{} cases, failing {:?}", all.len(), failed))
}

fn degenerations(all: &BTreeMap<(usize, usize, usize), Analysis>) -> Outcome {
    let one = rat(1, 1);
    let mut swap_ok = true;
    let mut even_signs_ok = true;
    for (m, n) in PAIRS {
        let ds = dims(m, n);
        let d = m + n;
        let t1 = build_t(ds).specialize(&one).unwrap();
        let swap = Mat::from_fn(d * d, d * d, |src, dst| {
            let (k, l) = (src / d, src % d);
            let sign = if k >= m && l >= m { -1 } else { 1 };
            rat(if dst == l * d + k { sign } else { 0 }, 1)
        });
        swap_ok &= t1 == swap;
        if n == 0 {
            let t = build_t(ds);
            for src in 0..d * d {
                for dst in 0..d * d {
                    if src != dst && !t.get(src, dst).is_zero() {
                        even_signs_ok &= t.get(src, dst).is_one();
                    }
                }
            }
        }
    }
    let mut rows_ok = true;
    for m in 1..=2 {
        for r in 0..=4 {
            let fits: Vec<_> = partitions(r).into_iter().filter(|l| l.len() <= m).collect();
            rows_ok &= hook_partitions(m, 0, r) == fits;
        }
    }
    let classical = all[&(2, 0, 3)].report.dim_hecke_image;
    outcome(
        swap_ok && even_signs_ok && rows_ok && classical == 5,
        format!(
            "signed swap at q=1 {swap_ok}, positive signs at n=0 {even_signs_ok}, \
             (m,0)-hooks are <= m rows {rows_ok}, dim S(2,0,3) = {classical}"
        ),
    )
}

fn specialization(all: &BTreeMap<(usize, usize, usize), Analysis>) -> Outcome {
    let points = [rat(1, 1), rat(2, 1), rat(3, 2)];
    let results: Vec<_> = all
        .par_iter()
        .flat_map(|(&case, a)| {
            points
                .par_iter()
                .map(move |t| (case, t.to_string(), a.probe(t).unwrap()))
        })
        .collect();
    let mut ok = true;
    let mut drops = Vec::new();
    for (case, t, rep) in &results {
        let full = rep.specialized.commutant_of_hecke.is_some();
        ok &= rep.bounded && full;
        if t != "1" {
            ok &= rep.generic;
        }
        if !rep.generic {
            drops.push(format!("{case:?}@t={t}"));
        }
    }
    outcome(
        ok,
        format!(
            "{} probes, all bounded, generic at t=2 and t=3/2; non-generic: {}",
            results.len(),
            if drops.is_empty() { "none".to_string() } else { drops.join(" ") }
        ),
    )
}

fn reduced_word_invariance() -> Outcome {
    let cases: Vec<(usize, usize, usize)> = PAIRS
        .iter()
        .flat_map(|&(m, n)| (1..=4).map(move |r| (m, n, r)))
        .filter(|&(m, n, r)| (m + n).pow(r as u32) <= 81)
        .collect();
    let failed: Vec<_> = cases
        .par_iter()
        .filter(|&&(m, n, r)| {
            let p = HeckeParams::new(dims(m, n), r).unwrap();
            reduced_words(r).iter().any(|(_, words)| {
                let first = t_element(&words[0], &p).unwrap();
                words[1..].iter().any(|w| t_element(w, &p).unwrap() != first)
            })
        })
        .collect();
    outcome(failed.is_empty(), format!("{} cases up to r=4, failing {:?}", cases.len(), failed))
}

fn main() -> ExitCode {
    let start = Instant::now();
    let policy = ExactPolicy {
        exact_threshold: 81,
        allow_fallback: false,
        ..ExactPolicy::default()
    };
    let analyses: BTreeMap<_, _> = grid()
        .into_par_iter()
        .map(|(m, n, r)| ((m, n, r), analyse(dims(m, n), r, &policy).unwrap()))
        .collect();

    let criteria: Vec<(&str, Outcome)> = vec![
        ("hecke relations", hecke_relations()),
        ("superalgebra relations", qsuper_relations()),
        ("commutation of the actions", commutation()),
        ("double centralizer", double_centralizer(&analyses)),
        ("hook decomposition", hook_decomposition(&analyses)),
        ("degenerations", degenerations(&analyses)),
        ("specialization coherence", specialization(&analyses)),
        ("reduced-word invariance", reduced_word_invariance()),
    ];
    let mut all_passed = true;
    for (k, (name, o)) in criteria.iter().enumerate() {
        all_passed &= o.passed;
        let tag = if o.passed { "PASS" } else { "FAIL" };
        println!("criterion {} {tag} {name}: {}", k + 1, o.detail);
    }
    println!(
        "acceptance {} in {:.1}s",
        if all_passed { "PASS" } else { "FAIL" },
        start.elapsed().as_secs_f64()
    );
    if all_passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
