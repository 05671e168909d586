mod common;

use std::collections::{BTreeSet, HashMap};

use rand::Rng;
use rnmatrix::formula::{subformula_closure, Closure};
use rnmatrix::truthtable::entails;
use rnmatrix::{get_logic, list_logics, parse, render, Conn, Formula, LogicSpec};

fn cell(spec: &LogicSpec, c: Conn, args: &[&str]) -> BTreeSet<String> {
    let alg = spec.alg();
    let vs: Vec<usize> = args.iter().map(|a| alg.value(a).unwrap()).collect();
    alg.set_names(alg.op(c, &vs))
        .into_iter()
        .map(String::from)
        .collect()
}

fn set(names: &[&str]) -> BTreeSet<String> {
    names.iter().map(|s| s.to_string()).collect()
}

#[test]
fn golden_cells() {
    let ciw = get_logic("mbCciw", None).unwrap();
    assert_eq!(cell(&ciw, Conn::Circ, &["t"]), set(&["F"]));
    assert_eq!(cell(&ciw, Conn::Circ, &["T"]), set(&["t", "T"]));
    assert_eq!(cell(&ciw, Conn::Neg, &["t"]), set(&["t", "T"]));
    let cila = get_logic("Cila", None).unwrap();
    assert_eq!(cell(&cila, Conn::Or, &["T", "F"]), set(&["T"]));
    let nbi = get_logic("nbI", None).unwrap();
    assert_eq!(cell(&nbi, Conn::Neg, &["1"]), set(&["0", "1"]));
    assert_eq!(cell(&nbi, Conn::Neg, &["0"]), set(&["1"]));
    let bi = get_logic("bI", None).unwrap();
    assert_eq!(cell(&bi, Conn::Up, &["1", "1"]), set(&["0"]));
    let up = get_logic("CPLup", None).unwrap();
    assert_eq!(cell(&up, Conn::Up, &["1", "0"]), set(&["1"]));
}

#[test]
fn catalog_and_lookup() {
    let names = list_logics();
    for n in [
        "CPL", "CPLup", "Cn", "mbCciw", "mbCcl", "Ci", "Cila", "bI", "bIminus", "bIpr",
    ] {
        assert!(names.contains(&n), "{n}");
    }
    for n in names.iter().filter(|n| **n != "Cn") {
        assert!(get_logic(n, None).is_ok(), "{n}");
    }
    assert_eq!(
        get_logic("cila", None).unwrap().id,
        get_logic("Cila", None).unwrap().id
    );
    assert_eq!(get_logic("Cn", Some(2)).unwrap().alg().size(), 4);
    assert!(get_logic("Cn", None).is_err());
    assert!(get_logic("C0", None).is_err());
    assert!(get_logic("C2", Some(3)).is_err());
    assert!(get_logic("bI", Some(1)).is_err());
    assert!(get_logic("nope", None).is_err());
}

#[test]
fn augmentation_is_idempotent_and_adds_what_the_clauses_need() {
    let mbc = get_logic("mbC", None).unwrap();
    let f = parse("*p & *!q", &mbc.sig).unwrap();
    let once = mbc.augment_closure(&Closure::from_formulas(&[f]));
    for g in ["!p", "!!q"] {
        assert!(once.contains(&parse(g, &mbc.sig).unwrap()), "{g}");
    }
    let twice = mbc.augment_closure(&once);
    assert_eq!(once.formulas(), twice.formulas());

    let pr = get_logic("bIpr", None).unwrap();
    let f = parse("((p | q) ^ r) -> r", &pr.sig).unwrap();
    let once = pr.augment_closure(&Closure::from_formulas(&[f]));
    for g in ["p ^ r", "q ^ r"] {
        assert!(once.contains(&parse(g, &pr.sig).unwrap()), "{g}");
    }
    assert_eq!(pr.augment_closure(&once).formulas(), once.formulas());
}

#[derive(Clone, Copy, Debug, PartialEq)]
enum L {
    MbCciw,
    MbC,
    MbCci,
    BI,
    BIpr,
    NbI,
    NbIciw,
    NbIci,
    NbIcl,
}

impl L {
    fn name(self) -> &'static str {
        match self {
            L::MbCciw => "mbCciw",
            L::MbC => "mbC",
            L::MbCci => "mbCci",
            L::BI => "bI",
            L::BIpr => "bIpr",
            L::NbI => "nbI",
            L::NbIciw => "nbIciw",
            L::NbIci => "nbIci",
            L::NbIcl => "nbIcl",
        }
    }
    fn lfi(self) -> bool {
        matches!(self, L::MbCciw | L::MbC | L::MbCci)
    }
    fn paraconsistent(self) -> bool {
        !matches!(self, L::BI | L::BIpr)
    }
    fn ciw(self) -> bool {
        matches!(self, L::NbIciw | L::NbIci | L::NbIcl)
    }
}

fn neg_of<'a>(f: &'a Formula, a: &Formula) -> bool {
    f.unary(Conn::Neg) == Some(a)
}

/// Formulas the clauses mention when `f` is present.
fn extras(l: L, f: &Formula) -> Vec<Formula> {
    let mut out = Vec::new();
    if l.lfi() {
        if let Some(a) = f.unary(Conn::Circ) {
            out.push(Formula::neg(a.clone()));
        }
    }
    if let Some((a, b)) = f.binary(Conn::Up) {
        out.push(Formula::up(b.clone(), a.clone()));
        if l == L::BIpr {
            for c in [Conn::Or, Conn::And] {
                if let Some((x, y)) = a.binary(c) {
                    out.push(Formula::up(x.clone(), b.clone()));
                    out.push(Formula::up(y.clone(), b.clone()));
                }
            }
        }
    }
    if l == L::NbIcl {
        if let Some((a, na)) = f.unary(Conn::Neg).and_then(|g| g.binary(Conn::And)) {
            if neg_of(na, a) {
                out.push(Formula::up(a.clone(), na.clone()));
            }
        }
    }
    out
}

fn oracle_domain(l: L, fs: &[Formula]) -> Vec<Formula> {
    let mut dom: BTreeSet<Formula> = subformula_closure(fs).into_iter().collect();
    loop {
        let add: Vec<Formula> = dom
            .iter()
            .flat_map(|f| extras(l, f))
            .filter(|g| !dom.contains(g))
            .collect();
        if add.is_empty() {
            break;
        }
        dom.extend(subformula_closure(&add));
    }
    let mut v: Vec<Formula> = dom.into_iter().collect();
    v.sort_by_key(|f| (f.complexity(), f.clone()));
    v
}

struct Clause {
    idx: Vec<usize>,
    holds: Box<dyn Fn(&[bool]) -> bool>,
}

fn clause(idx: Vec<usize>, holds: impl Fn(&[bool]) -> bool + 'static) -> Clause {
    Clause {
        idx,
        holds: Box::new(holds),
    }
}

fn clauses(l: L, dom: &[Formula]) -> Vec<Clause> {
    let at: HashMap<&Formula, usize> = dom.iter().enumerate().map(|(i, f)| (f, i)).collect();
    let ix = |f: &Formula| at.get(f).copied();
    let mut out = Vec::new();
    for (i, f) in dom.iter().enumerate() {
        match f {
            Formula::App(Conn::And, a) => out.push(clause(
                vec![i, ix(&a[0]).unwrap(), ix(&a[1]).unwrap()],
                |v| v[0] == (v[1] && v[2]),
            )),
            Formula::App(Conn::Or, a) => out.push(clause(
                vec![i, ix(&a[0]).unwrap(), ix(&a[1]).unwrap()],
                |v| v[0] == (v[1] || v[2]),
            )),
            Formula::App(Conn::Imp, a) => out.push(clause(
                vec![i, ix(&a[0]).unwrap(), ix(&a[1]).unwrap()],
                |v| v[0] == (!v[1] || v[2]),
            )),
            Formula::App(Conn::Neg, a) => {
                if l.paraconsistent() {
                    out.push(clause(vec![i, ix(&a[0]).unwrap()], |v| v[0] || v[1]));
                }
                let inner = &a[0];
                if l == L::MbCci {
                    if let Some(b) = inner.unary(Conn::Circ) {
                        let nb = ix(&Formula::neg(b.clone())).unwrap();
                        out.push(clause(vec![i, ix(b).unwrap(), nb], |v| {
                            !v[0] || (v[1] && v[2])
                        }));
                    }
                }
                if l == L::NbIci {
                    if let Some((b, nb)) = inner.binary(Conn::Up) {
                        if neg_of(nb, b) {
                            out.push(clause(vec![i, ix(b).unwrap(), ix(nb).unwrap()], |v| {
                                !v[0] || (v[1] && v[2])
                            }));
                        }
                    }
                }
                if l == L::NbIcl {
                    if let Some((b, nb)) = inner.binary(Conn::And) {
                        if neg_of(nb, b) {
                            let up = ix(&Formula::up(b.clone(), nb.clone())).unwrap();
                            out.push(clause(vec![i, up], |v| !v[0] || v[1]));
                        }
                    }
                }
            }
            Formula::App(Conn::Circ, a) => {
                let (x, nx) = (ix(&a[0]).unwrap(), ix(&Formula::neg(a[0].clone())).unwrap());
                match l {
                    L::MbCciw => out.push(clause(vec![i, x, nx], |v| v[0] == (v[1] != v[2]))),
                    L::MbCci => out.push(clause(vec![i, x, nx], |v| v[0] == (!v[1] || !v[2]))),
                    _ => out.push(clause(vec![i, x, nx], |v| !v[0] || !v[1] || !v[2])),
                }
            }
            Formula::App(Conn::Up, a) => {
                let (x, y) = (ix(&a[0]).unwrap(), ix(&a[1]).unwrap());
                out.push(clause(vec![i, x, y], |v| !(v[0] && v[1] && v[2])));
                let sw = ix(&Formula::up(a[1].clone(), a[0].clone())).unwrap();
                out.push(clause(vec![i, sw], |v| v[0] == v[1]));
                if l.ciw() && neg_of(&a[1], &a[0]) {
                    out.push(clause(vec![i, x, y], |v| v[0] == (!v[1] || !v[2])));
                }
                if l == L::BIpr {
                    let g = &a[1];
                    if let Some((p, q)) = a[0].binary(Conn::Or) {
                        let pg = ix(&Formula::up(p.clone(), g.clone())).unwrap();
                        let qg = ix(&Formula::up(q.clone(), g.clone())).unwrap();
                        out.push(clause(vec![i, pg, qg], |v| !(v[1] && v[2]) || v[0]));
                    }
                    if let Some((p, q)) = a[0].binary(Conn::And) {
                        let pg = ix(&Formula::up(p.clone(), g.clone())).unwrap();
                        let qg = ix(&Formula::up(q.clone(), g.clone())).unwrap();
                        out.push(clause(vec![i, pg, qg], |v| !(v[1] || v[2]) || v[0]));
                    }
                }
            }
            _ => {}
        }
    }
    out
}

/// Entailment by direct search over bivaluations of the clause-closed domain.
fn bivaluation_entails(l: L, premises: &[Formula], conclusion: &Formula) -> bool {
    let mut all = premises.to_vec();
    all.push(conclusion.clone());
    let dom = oracle_domain(l, &all);
    let cs = clauses(l, &dom);
    let mut anchored: Vec<Vec<usize>> = vec![Vec::new(); dom.len()];
    for (k, c) in cs.iter().enumerate() {
        anchored[*c.idx.iter().max().unwrap()].push(k);
    }
    let mut forced: Vec<Option<bool>> = vec![None; dom.len()];
    for p in premises {
        forced[dom.iter().position(|f| f == p).unwrap()] = Some(true);
    }
    let ci = dom.iter().position(|f| f == conclusion).unwrap();
    if forced[ci] == Some(true) {
        return true;
    }
    forced[ci] = Some(false);

    fn dfs(
        i: usize,
        v: &mut Vec<bool>,
        forced: &[Option<bool>],
        anchored: &[Vec<usize>],
        cs: &[Clause],
    ) -> bool {
        if i == forced.len() {
            return true;
        }
        for b in [true, false] {
            if forced[i].is_some_and(|f| f != b) {
                continue;
            }
            v.push(b);
            let ok = anchored[i].iter().all(|&k| {
                let vals: Vec<bool> = cs[k].idx.iter().map(|&j| v[j]).collect();
                (cs[k].holds)(&vals)
            });
            if ok && dfs(i + 1, v, forced, anchored, cs) {
                return true;
            }
            v.pop();
        }
        false
    }
    !dfs(0, &mut Vec::new(), &forced, &anchored, &cs)
}

const ALL_LOGICS: [L; 9] = [
    L::MbCciw,
    L::MbC,
    L::MbCci,
    L::BI,
    L::BIpr,
    L::NbI,
    L::NbIciw,
    L::NbIci,
    L::NbIcl,
];

fn agree(l: L, spec: &LogicSpec, premises: &[Formula], conclusion: &Formula) {
    let engine = entails(spec, premises, conclusion).unwrap().valid;
    let oracle = bivaluation_entails(l, premises, conclusion);
    let shown: Vec<String> = premises.iter().map(render).collect();
    assert_eq!(
        engine,
        oracle,
        "{}: {:?} |- {}",
        l.name(),
        shown,
        render(conclusion)
    );
}

/// Every formula of complexity at most two over two variables, as a thesis,
/// plus random single-premise entailments among them.
#[test]
fn matrices_agree_with_bivaluations_up_to_complexity_two() {
    let mut r = common::rng(7);
    for l in ALL_LOGICS {
        let spec = get_logic(l.name(), None).unwrap();
        let forms = common::all_formulas(&spec.sig, &["p", "q"], 2);
        for f in &forms {
            agree(l, &spec, &[], f);
        }
        for _ in 0..300 {
            let a = &forms[r.gen_range(0..forms.len())];
            let b = &forms[r.gen_range(0..forms.len())];
            agree(l, &spec, &[a.clone()], b);
        }
    }
}

#[test]
fn matrices_agree_with_bivaluations_on_sampled_complexity_three() {
    let mut r = common::rng(8);
    for l in ALL_LOGICS {
        let spec = get_logic(l.name(), None).unwrap();
        for _ in 0..150 {
            let g = common::random_formula(&mut r, &spec.sig, &["p", "q"], 3);
            let prem: Vec<Formula> = (0..r.gen_range(0..2))
                .map(|_| common::random_formula(&mut r, &spec.sig, &["p", "q"], 3))
                .collect();
            agree(l, &spec, &prem, &g);
        }
    }
}

#[test]
fn oracle_spot_checks() {
    let f = |l: L, s: &str| {
        let spec = get_logic(l.name(), None).unwrap();
        bivaluation_entails(l, &[], &parse(s, &spec.sig).unwrap())
    };
    assert!(f(L::NbI, "p | !p"));
    assert!(!f(L::NbI, "!!p -> p"));
    assert!(f(L::BI, "(p ^ q) -> (q ^ p)"));
    assert!(f(L::MbC, "*p -> ((p & !p) -> q)"));
    assert!(!f(L::MbC, "!*p -> (p & !p)"));
    assert!(f(L::MbCci, "!*p -> (p & !p)"));
    assert!(f(L::NbIci, "!(p ^ !p) -> (p & !p)"));
    assert!(!f(L::NbIciw, "!(p ^ !p) -> (p & !p)"));
}
