mod common;

use rand::Rng;
use rnmatrix::algebra::check_valuation;
use rnmatrix::formula::{complexity, parse};
use rnmatrix::tableau::{self, prove, prove_with, ProveOptions};
use rnmatrix::truthtable::{entails, naive_valuations};
use rnmatrix::{get_logic, Formula};

const WITH_CALCULUS: [&str; 13] = [
    "C1", "C2", "C3", "CPL", "CPLup", "bI", "bIminus", "nbI", "nbIciw", "nbIci", "nbIcl", "mbCcl",
    "Cila",
];

/// Every formula of complexity ≤ 2 over two variables, as a theorem
/// candidate: the tableau and the table must agree.
#[test]
fn agrees_with_tables_exhaustively_on_small_theorems() {
    for name in WITH_CALCULUS {
        let spec = get_logic(name, None).unwrap();
        for f in common::all_formulas(&spec.sig, &["p", "q"], 2) {
            let t = entails(&spec, &[], &f).unwrap();
            let p = prove(&spec, &[], &f).unwrap();
            assert_eq!(t.valid, p.verdict.valid, "{name}: {}", rnmatrix::render(&f));
        }
    }
}

#[test]
fn agrees_with_tables_on_random_entailments() {
    let mut r = common::rng(7);
    for name in WITH_CALCULUS.iter().filter(|n| **n != "C3") {
        let spec = get_logic(name, None).unwrap();
        for _ in 0..60 {
            let k = r.gen_range(0..=2);
            let premises: Vec<Formula> = (0..k)
                .map(|_| common::random_formula(&mut r, &spec.sig, &["p", "q"], 2))
                .collect();
            let c = common::random_formula(&mut r, &spec.sig, &["p", "q", "r"], 3);
            let t = entails(&spec, &premises, &c).unwrap_or_else(|e| {
                panic!(
                    "{name} {e:?} {:?} {}",
                    premises.iter().map(rnmatrix::render).collect::<Vec<_>>(),
                    rnmatrix::render(&c)
                )
            });
            let p = prove(&spec, &premises, &c).unwrap();
            assert_eq!(t.valid, p.verdict.valid, "{name}");
            if let Some(cm) = &p.verdict.countermodel {
                check_valuation(&spec.matrix, cm).unwrap();
                for g in &premises {
                    assert!(spec.designated().contains(cm.get(g).unwrap()));
                }
                assert!(!spec.designated().contains(cm.get(&c).unwrap()));
            }
        }
    }
}

#[test]
fn derived_rules_change_no_verdict() {
    let mut r = common::rng(11);
    for n in 1..=3 {
        let spec = get_logic(&format!("C{n}"), None).unwrap();
        let p = parse("p", &spec.sig).unwrap();
        let q = parse("q", &spec.sig).unwrap();
        let mut cases: Vec<(Vec<Formula>, Formula)> = Vec::new();
        let top = if n < 3 { n + 1 } else { 2 };
        for m in 1..=top {
            let pw = rnmatrix::formula::pow(&p, m, &spec.sig).unwrap();
            let pc = rnmatrix::formula::pow_conj(&p, m, &spec.sig).unwrap();
            cases.push((vec![], pw.clone()));
            cases.push((vec![], Formula::neg(pw.clone())));
            cases.push((vec![pc.clone()], q.clone()));
            cases.push((vec![pw.clone()], Formula::neg(pc.clone())));
            cases.push((vec![Formula::neg(pw)], p.clone()));
        }
        for _ in 0..40 {
            let k = r.gen_range(0..=1);
            let prem = (0..k)
                .map(|_| common::random_formula(&mut r, &spec.sig, &["p", "q"], 2))
                .collect();
            cases.push((
                prem,
                common::random_formula(&mut r, &spec.sig, &["p", "q"], 3),
            ));
        }
        for (premises, c) in &cases {
            let start = std::time::Instant::now();
            let plain = prove(&spec, premises, c).unwrap();
            let opts = ProveOptions {
                derived_rules: true,
                ..Default::default()
            };
            let fast = prove_with(&spec, premises, c, opts).unwrap();
            assert_eq!(
                plain.verdict.valid,
                fast.verdict.valid,
                "C{n}: {}",
                rnmatrix::render(c)
            );
            if start.elapsed().as_millis() > 200 {
                eprintln!(
                    "slow C{n} {:?} {}",
                    premises.iter().map(rnmatrix::render).collect::<Vec<_>>(),
                    rnmatrix::render(c)
                );
            }
        }
    }
}

#[test]
fn branch_count_bound() {
    let mut r = common::rng(3);
    for n in 1..=2 {
        let spec = get_logic(&format!("C{n}"), None).unwrap();
        for _ in 0..100 {
            let f = common::random_formula(&mut r, &spec.sig, &["p", "q"], 3);
            let m = complexity(&f) as u32;
            let opts = ProveOptions {
                exhaustive: true,
                ..Default::default()
            };
            let p = prove_with(&spec, &[], &f, opts).unwrap();
            assert!(p.branches as u64 <= ((n + 1) as u64).pow(2 * m).max(1));
        }
    }
}

#[test]
fn extracted_countermodel_is_a_naive_row() {
    let spec = get_logic("C2", None).unwrap();
    let a = |s: &str| parse(s, &spec.sig).unwrap();
    let p = prove(&spec, &[a("a"), a("!a"), a("!(a & !a)")], &a("b")).unwrap();
    assert!(!p.verdict.valid);
    let cm = p.verdict.countermodel.unwrap();
    let naive = naive_valuations(&spec, &cm.domain).unwrap();
    let hit = naive.rows.iter().any(|row| {
        naive
            .domain
            .iter()
            .zip(row)
            .all(|(f, &v)| cm.get(f).map_or(true, |w| w == v))
    });
    assert!(hit);
    let err = tableau::extract_countermodel(
        &spec,
        &tableau::Branch {
            entries: vec![],
            complete: false,
            closed: None,
        },
    );
    assert!(matches!(err, Err(rnmatrix::Error::BranchNotComplete)));
}
