//! Labeled tableau calculi.
//!
//! A node is a labeled formula `L(φ)` where `L` is a carrier value. A rule
//! has a labeled head pattern and a list of alternatives; each alternative
//! lists `(label set, pattern)` pairs and expands to one branch per choice of
//! a label from every set. A rule with no alternatives closes any branch its
//! head appears on.
//!
//! Strategy: repeatedly pick the lowest-complexity labeled formula (ties by
//! insertion order) that still has an undischarged matching rule, where a
//! rule is discharged once one of its expanded branches is fully present.
//! Closure is checked after every insertion; labeled formulas already on the
//! branch are not inserted twice.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::algebra::{match_pattern, mv, Binding, Valuation, Value, ValueSet};
use crate::error::{Error, Result};
use crate::formula::{conjoin, pow_raw, render, substitute_unchecked, Conn, Formula};
use crate::logics::{Calculus, LogicSpec, ONE, ZERO};
use crate::snapshots::CnValues;
use crate::truthtable::{find_valuation, Method, Verdict};

/// A label paired with a formula.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Labeled {
    pub label: Value,
    pub formula: Formula,
}

/// One expansion rule.
#[derive(Clone, Debug)]
pub struct TableauRule {
    pub name: String,
    pub head_label: Value,
    pub head: Formula,
    pub branches: Vec<Vec<(ValueSet, Formula)>>,
}

/// Conditions under which a branch closes, besides the rules with no
/// alternatives.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClosureCondition {
    /// `L(φ)` and `L*(φ)` with `L ≠ L*`.
    Clash,
    /// The two extra `C_n` conditions: `t0(φ)` with `t_i(φ∧¬φ)`, and
    /// `t_k(φ)` for `k ≥ 1` with `T(φ∧¬φ)` or `L(φ¹)` for `L ≠ t_{k-1}`.
    CnConsistency(usize),
    /// Any formula matching the pattern with the given label.
    Forbidden { label: Value, pattern: Formula },
    /// `L(φ↑ψ)` and `L*(ψ↑φ)` with `L ≠ L*`.
    Comm,
}

/// A full calculus.
#[derive(Clone, Debug)]
pub struct CalculusDef {
    pub rules: Vec<TableauRule>,
    pub closure: Vec<ClosureCondition>,
}

fn rule(
    name: &str,
    label: Value,
    head: Formula,
    branches: Vec<Vec<(ValueSet, Formula)>>,
) -> TableauRule {
    TableauRule {
        name: name.to_string(),
        head_label: label,
        head,
        branches,
    }
}

fn a() -> Formula {
    mv("a")
}
fn b() -> Formula {
    mv("b")
}
fn s(v: Value) -> ValueSet {
    ValueSet::single(v)
}

/// The compact `C_n` rules: `n + 2` heads for each of `¬, ∧, ∨, →`.
fn cn_rules(n: usize) -> Vec<TableauRule> {
    let cv = CnValues { n };
    let (t, f, i, d) = (CnValues::TOP, cv.f(), cv.middle(), cv.designated());
    let neg = Formula::neg(a());
    let and = Formula::and(a(), b());
    let or = Formula::or(a(), b());
    let imp = Formula::imp(a(), b());
    let mut out = vec![
        rule(
            "E¬T",
            t,
            neg.clone(),
            vec![vec![(i, a())], vec![(s(f), a())]],
        ),
        rule("E¬F", f, neg.clone(), vec![vec![(s(t), a())]]),
        rule("E∧T", t, and.clone(), vec![vec![(d, a()), (d, b())]]),
        rule(
            "E∧F",
            f,
            and.clone(),
            vec![vec![(s(f), a())], vec![(s(f), b())]],
        ),
        rule("E∨T", t, or.clone(), vec![vec![(d, a())], vec![(d, b())]]),
        rule("E∨F", f, or.clone(), vec![vec![(s(f), a()), (s(f), b())]]),
        rule(
            "E→T",
            t,
            imp.clone(),
            vec![vec![(s(f), a())], vec![(d, b())]],
        ),
        rule("E→F", f, imp.clone(), vec![vec![(s(f), b()), (d, a())]]),
    ];
    for k in 0..n {
        let tk = cv.t(k);
        out.push(rule(
            &format!("E¬t{k}"),
            tk,
            neg.clone(),
            vec![vec![(i, a())]],
        ));
        out.push(rule(
            &format!("E∧t{k}"),
            tk,
            and.clone(),
            vec![
                vec![(s(t), a()), (i, b())],
                vec![(i, a()), (i, b())],
                vec![(s(t), b()), (i, a())],
            ],
        ));
        out.push(rule(
            &format!("E∨t{k}"),
            tk,
            or.clone(),
            vec![vec![(i, a())], vec![(i, b())]],
        ));
        out.push(rule(
            &format!("E→t{k}"),
            tk,
            imp.clone(),
            vec![vec![(s(t), b()), (i, a())], vec![(i, b())]],
        ));
    }
    out
}

/// Classical two-valued rules for `∨, ∧, →` and `↑` on label `1`.
fn bi_rules() -> Vec<TableauRule> {
    let (one, zero) = (s(ONE), s(ZERO));
    vec![
        rule(
            "0∨",
            ZERO,
            Formula::or(a(), b()),
            vec![vec![(zero, a()), (zero, b())]],
        ),
        rule(
            "0∧",
            ZERO,
            Formula::and(a(), b()),
            vec![vec![(zero, a())], vec![(zero, b())]],
        ),
        rule(
            "0→",
            ZERO,
            Formula::imp(a(), b()),
            vec![vec![(one, a()), (zero, b())]],
        ),
        rule(
            "1∨",
            ONE,
            Formula::or(a(), b()),
            vec![vec![(one, a())], vec![(one, b())]],
        ),
        rule(
            "1∧",
            ONE,
            Formula::and(a(), b()),
            vec![vec![(one, a()), (one, b())]],
        ),
        rule(
            "1→",
            ONE,
            Formula::imp(a(), b()),
            vec![vec![(zero, a())], vec![(one, b())]],
        ),
    ]
}

fn up_true_rule() -> TableauRule {
    rule(
        "1↑",
        ONE,
        Formula::up(a(), b()),
        vec![vec![(s(ZERO), a())], vec![(s(ZERO), b())]],
    )
}

fn neg_false_rule() -> TableauRule {
    rule("0¬", ZERO, Formula::neg(a()), vec![vec![(s(ONE), a())]])
}

fn ciw_rules() -> Vec<TableauRule> {
    let na = Formula::neg(a());
    let both = vec![vec![(s(ONE), a()), (s(ONE), na.clone())]];
    vec![
        rule("0(φ↑¬φ)", ZERO, Formula::up(a(), na.clone()), both.clone()),
        rule("0(¬φ↑φ)", ZERO, Formula::up(na, a()), both),
    ]
}

const T3: Value = 0;
const M3: Value = 1;
const F3: Value = 2;

fn mbccl_rules() -> Vec<TableauRule> {
    let d = ValueSet::from_values([T3, M3]);
    let f = s(F3);
    let mut out = Vec::new();
    for (lname, l) in [("T", T3), ("t", M3)] {
        out.push(rule(
            &format!("E∨{lname}"),
            l,
            Formula::or(a(), b()),
            vec![vec![(d, a())], vec![(d, b())]],
        ));
        out.push(rule(
            &format!("E∧{lname}"),
            l,
            Formula::and(a(), b()),
            vec![vec![(d, a()), (d, b())]],
        ));
        out.push(rule(
            &format!("E→{lname}"),
            l,
            Formula::imp(a(), b()),
            vec![vec![(f, a())], vec![(d, b())]],
        ));
        out.push(rule(
            &format!("E¬{lname}"),
            l,
            Formula::neg(a()),
            vec![vec![(s(M3), a())], vec![(f, a())]],
        ));
        out.push(rule(
            &format!("E∘{lname}"),
            l,
            Formula::circ(a()),
            vec![vec![(s(T3), a())], vec![(f, a())]],
        ));
    }
    out.push(rule(
        "E∨F",
        F3,
        Formula::or(a(), b()),
        vec![vec![(f, a()), (f, b())]],
    ));
    out.push(rule(
        "E∧F",
        F3,
        Formula::and(a(), b()),
        vec![vec![(f, a())], vec![(f, b())]],
    ));
    out.push(rule(
        "E→F",
        F3,
        Formula::imp(a(), b()),
        vec![vec![(d, a()), (f, b())]],
    ));
    out.push(rule("E¬F", F3, Formula::neg(a()), vec![vec![(s(T3), a())]]));
    out.push(rule(
        "E∘F",
        F3,
        Formula::circ(a()),
        vec![vec![(s(M3), a())]],
    ));
    out
}

fn a_and_not_a() -> Formula {
    Formula::and(a(), Formula::neg(a()))
}

/// The calculus attached to a logic.
pub fn rules_for(spec: &LogicSpec) -> Result<CalculusDef> {
    use ClosureCondition::*;
    let calc = spec
        .calculus
        .ok_or_else(|| Error::NoTableauCalculus(spec.id.clone()))?;
    Ok(match calc {
        Calculus::Cn(n) => CalculusDef {
            rules: cn_rules(n),
            closure: vec![Clash, CnConsistency(n)],
        },
        Calculus::Cpl | Calculus::CplUp => {
            let mut rules = bi_rules();
            rules.push(rule(
                "1¬",
                ONE,
                Formula::neg(a()),
                vec![vec![(s(ZERO), a())]],
            ));
            rules.push(neg_false_rule());
            if calc == Calculus::CplUp {
                rules.push(up_true_rule());
                rules.push(rule(
                    "0↑",
                    ZERO,
                    Formula::up(a(), b()),
                    vec![vec![(s(ONE), a()), (s(ONE), b())]],
                ));
            }
            CalculusDef {
                rules,
                closure: vec![Clash],
            }
        }
        Calculus::BI | Calculus::BIminus => {
            let mut rules = bi_rules();
            rules.push(up_true_rule());
            let closure = if calc == Calculus::BI {
                vec![Clash, Comm]
            } else {
                vec![Clash]
            };
            CalculusDef { rules, closure }
        }
        Calculus::NbI | Calculus::NbIciw | Calculus::NbIci | Calculus::NbIcl => {
            let mut rules = bi_rules();
            rules.push(up_true_rule());
            rules.push(neg_false_rule());
            if calc != Calculus::NbI {
                rules.extend(ciw_rules());
            }
            let pair = vec![(s(ONE), a()), (s(ONE), Formula::neg(a()))];
            if calc == Calculus::NbIci {
                rules.push(rule(
                    "1¬(φ↑¬φ)",
                    ONE,
                    Formula::neg(Formula::up(a(), Formula::neg(a()))),
                    vec![pair],
                ));
            }
            if calc == Calculus::NbIcl {
                rules.push(rule(
                    "1¬(φ∧¬φ)",
                    ONE,
                    Formula::neg(a_and_not_a()),
                    vec![vec![(s(ZERO), a())], vec![(s(ZERO), Formula::neg(a()))]],
                ));
            }
            CalculusDef {
                rules,
                closure: vec![Clash, Comm],
            }
        }
        Calculus::MbCcl => CalculusDef {
            rules: mbccl_rules(),
            closure: vec![
                Clash,
                Forbidden {
                    label: M3,
                    pattern: a_and_not_a(),
                },
            ],
        },
        Calculus::Cila => {
            let mut rules = cn_rules(1);
            rules.push(rule(
                "E∘T",
                T3,
                Formula::circ(a()),
                vec![vec![(s(T3), a())], vec![(s(F3), a())]],
            ));
            rules.push(rule(
                "E∘F",
                F3,
                Formula::circ(a()),
                vec![vec![(s(M3), a())]],
            ));
            CalculusDef {
                rules,
                closure: vec![
                    Clash,
                    CnConsistency(1),
                    Forbidden {
                        label: M3,
                        pattern: a_and_not_a(),
                    },
                    Forbidden {
                        label: M3,
                        pattern: Formula::circ(a()),
                    },
                ],
            }
        }
    })
}

/// Largest power used by [`derived_rules_cn`] for the closing rules.
pub fn derived_power_cap(n: usize) -> usize {
    n + 3
}

/// Admissible shortcut rules for `C_n` about `φ^m ∧ ¬φ^m`, `φ^m` and `¬φ^m`.
pub fn derived_rules_cn(n: usize) -> Vec<TableauRule> {
    let cv = CnValues { n };
    let (t, f) = (CnValues::TOP, cv.f());
    // {t_x, …, t_{n-1}}
    let at_least = |x: usize| -> ValueSet { (x..n).map(|k| cv.t(k)).collect() };
    // {T, t_0, …, t_x}; x = -1 gives {T}
    let at_most = |x: isize| -> ValueSet {
        std::iter::once(t)
            .chain(
                (0..=x.max(-1))
                    .filter(|&k| k >= 0)
                    .map(|k| cv.t(k as usize)),
            )
            .collect()
    };
    let pw = |m: usize| pow_raw(&a(), m);
    let conj = |m: usize| Formula::and(pw(m), Formula::neg(pw(m)));
    let cap = derived_power_cap(n);
    let mut out = Vec::new();
    for i in 0..n {
        out.push(rule(
            &format!("DR T(φ^{i}∧¬φ^{i})"),
            t,
            conj(i),
            vec![vec![(s(cv.t(i)), a())]],
        ));
        out.push(rule(
            &format!("DR F(φ^{i}∧¬φ^{i})"),
            f,
            conj(i),
            vec![vec![(at_most(i as isize - 1), a())], vec![(s(f), a())]],
        ));
    }
    for i in 0..n {
        for j in 0..n.saturating_sub(1) {
            out.push(rule(
                &format!("DR t{i}(φ^{j}∧¬φ^{j})"),
                cv.t(i),
                conj(j),
                vec![vec![(at_least(j + 1), a())]],
            ));
        }
        for l in n - 1..=cap {
            out.push(rule(
                &format!("DR t{i}(φ^{l}∧¬φ^{l}) ⊗"),
                cv.t(i),
                conj(l),
                vec![],
            ));
        }
    }
    for k in n..=cap {
        out.push(rule(&format!("DR T(φ^{k}∧¬φ^{k}) ⊗"), t, conj(k), vec![]));
    }
    for r in 1..=n {
        out.push(rule(
            &format!("DR T(φ^{r})"),
            t,
            pw(r),
            vec![vec![(at_most(r as isize - 2), a())], vec![(s(f), a())]],
        ));
        out.push(rule(
            &format!("DR F(φ^{r})"),
            f,
            pw(r),
            vec![vec![(s(cv.t(r - 1)), a())]],
        ));
        out.push(rule(
            &format!("DR T(¬φ^{r})"),
            t,
            Formula::neg(pw(r)),
            vec![vec![(at_least(r - 1), a())]],
        ));
        out.push(rule(
            &format!("DR F(¬φ^{r})"),
            f,
            Formula::neg(pw(r)),
            vec![vec![(at_most(r as isize - 2), a())], vec![(s(f), a())]],
        ));
    }
    for sx in 1..n {
        for tx in 0..n - sx {
            out.push(rule(
                &format!("DR t{tx}(φ^{sx})"),
                cv.t(tx),
                pw(sx),
                vec![vec![(s(cv.t(sx + tx)), a())]],
            ));
        }
        for u in n - sx..n {
            out.push(rule(&format!("DR t{u}(φ^{sx}) ⊗"), cv.t(u), pw(sx), vec![]));
        }
        for i in 0..n {
            out.push(rule(
                &format!("DR t{i}(¬φ^{sx})"),
                cv.t(i),
                Formula::neg(pw(sx)),
                vec![vec![(at_least(sx), a())]],
            ));
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Proof search

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Status {
    Open,
    Closed(String),
}

/// A node of the proof tree: the labeled formulas added at this point, then
/// either children or a terminal status.
#[derive(Clone, Debug)]
pub struct TreeNode {
    pub entries: Vec<Labeled>,
    pub children: Vec<TreeNode>,
    pub status: Option<Status>,
}

/// A root-to-leaf path.
#[derive(Clone, Debug)]
pub struct Branch {
    pub entries: Vec<Labeled>,
    pub complete: bool,
    pub closed: Option<String>,
}

#[derive(Clone, Copy, Debug)]
pub struct ProveOptions {
    pub derived_rules: bool,
    pub max_branches: usize,
    /// Keep expanding after the first complete open branch, so the tree and
    /// the branch count cover the whole tableau.
    pub exhaustive: bool,
}

impl Default for ProveOptions {
    fn default() -> Self {
        ProveOptions {
            derived_rules: false,
            max_branches: 2_000_000,
            exhaustive: false,
        }
    }
}

/// Result of a tableau proof attempt.
#[derive(Clone, Debug)]
pub struct Proof {
    pub verdict: Verdict,
    pub tree: TreeNode,
    pub open_branches: Vec<Branch>,
    pub branches: usize,
}

#[derive(Clone)]
struct Pending {
    entry: usize,
    alts: Vec<Vec<Labeled>>,
}

#[derive(Clone)]
struct State {
    entries: Vec<Labeled>,
    labels: HashMap<Formula, Value>,
    pending: Vec<Pending>,
}

struct Engine<'a> {
    rules: Vec<TableauRule>,
    closure: &'a [ClosureCondition],
    max_branches: usize,
    exhaustive: bool,
    leaves: usize,
    open: Vec<Branch>,
}

fn expand(alt: &[(ValueSet, Formula)], b: &Binding) -> Vec<Vec<Labeled>> {
    let mut out = vec![Vec::new()];
    for (set, pat) in alt {
        let f = substitute_unchecked(pat, b);
        let mut next = Vec::new();
        for partial in &out {
            for l in set.iter() {
                let mut p: Vec<Labeled> = partial.clone();
                p.push(Labeled {
                    label: l,
                    formula: f.clone(),
                });
                next.push(p);
            }
        }
        out = next;
    }
    out
}

impl Engine<'_> {
    /// Inserts `lf`; returns a closure reason if the branch closes.
    fn insert(&self, st: &mut State, lf: &Labeled) -> Option<String> {
        if let Some(&old) = st.labels.get(&lf.formula) {
            if old == lf.label {
                return None;
            }
            return Some(format!("clash on {}", render(&lf.formula)));
        }
        st.labels.insert(lf.formula.clone(), lf.label);
        st.entries.push(lf.clone());
        let idx = st.entries.len() - 1;
        for r in &self.rules {
            if r.head_label != lf.label {
                continue;
            }
            let mut b = Binding::new();
            if !match_pattern(&r.head, &lf.formula, &mut b) {
                continue;
            }
            if r.branches.is_empty() {
                return Some(format!("⊗ {}", r.name));
            }
            if lf.formula.is_var() {
                continue;
            }
            let alts = r.branches.iter().flat_map(|alt| expand(alt, &b)).collect();
            st.pending.push(Pending { entry: idx, alts });
        }
        self.closed_by_condition(st, lf)
    }

    fn closed_by_condition(&self, st: &State, lf: &Labeled) -> Option<String> {
        let label_of = |f: &Formula| st.labels.get(f).copied();
        for cond in self.closure {
            match cond {
                ClosureCondition::Clash => {}
                ClosureCondition::Forbidden { label, pattern } => {
                    if lf.label == *label
                        && match_pattern(pattern, &lf.formula, &mut Binding::new())
                    {
                        return Some(format!("forbidden {}", render(&lf.formula)));
                    }
                }
                ClosureCondition::Comm => {
                    if let Some((x, y)) = lf.formula.binary(Conn::Up) {
                        let swapped = Formula::up(y.clone(), x.clone());
                        if matches!(label_of(&swapped), Some(l) if l != lf.label) {
                            return Some(format!("comm on {}", render(&lf.formula)));
                        }
                    }
                }
                ClosureCondition::CnConsistency(n) => {
                    if let Some(r) = cn_condition(*n, lf, &label_of) {
                        return Some(r);
                    }
                }
            }
        }
        None
    }

    fn grow(&mut self, st: &mut State, node: &mut TreeNode) -> Result<()> {
        loop {
            if self.leaves > self.max_branches {
                return Err(Error::Invalid(format!(
                    "tableau exceeds {} branches",
                    self.max_branches
                )));
            }
            st.pending.retain(|p| {
                !p.alts.iter().any(|alt| {
                    alt.iter()
                        .all(|l| st.labels.get(&l.formula) == Some(&l.label))
                })
            });
            let pick = st
                .pending
                .iter()
                .enumerate()
                .min_by_key(|(_, p)| (st.entries[p.entry].formula.complexity(), p.entry))
                .map(|(i, _)| i);
            let Some(pi) = pick else {
                node.status = Some(Status::Open);
                self.leaves += 1;
                self.open.push(Branch {
                    entries: st.entries.clone(),
                    complete: true,
                    closed: None,
                });
                return Ok(());
            };
            let alts = st.pending[pi].alts.clone();
            if alts.len() == 1 {
                for lf in &alts[0] {
                    let fresh = !st.labels.contains_key(&lf.formula);
                    let closed = self.insert(st, lf);
                    if fresh || closed.is_some() {
                        node.entries.push(lf.clone());
                    }
                    if let Some(reason) = closed {
                        node.status = Some(Status::Closed(reason));
                        self.leaves += 1;
                        return Ok(());
                    }
                }
                continue;
            }
            for alt in &alts {
                if !self.exhaustive && !self.open.is_empty() {
                    break;
                }
                let mut child_state = st.clone();
                let mut child = TreeNode {
                    entries: Vec::new(),
                    children: Vec::new(),
                    status: None,
                };
                let mut closed = None;
                for lf in alt {
                    let fresh = !child_state.labels.contains_key(&lf.formula);
                    closed = self.insert(&mut child_state, lf);
                    if fresh || closed.is_some() {
                        child.entries.push(lf.clone());
                    }
                    if closed.is_some() {
                        break;
                    }
                }
                match closed {
                    Some(reason) => {
                        child.status = Some(Status::Closed(reason));
                        self.leaves += 1;
                    }
                    None => self.grow(&mut child_state, &mut child)?,
                }
                node.children.push(child);
            }
            return Ok(());
        }
    }
}

fn cn_condition(
    n: usize,
    lf: &Labeled,
    label_of: &dyn Fn(&Formula) -> Option<Value>,
) -> Option<String> {
    let cv = CnValues { n };
    let conj = |f: &Formula| Formula::and(f.clone(), Formula::neg(f.clone()));
    let t0 = cv.t(0);
    let middle = cv.middle();
    let reason = |what: &str| Some(format!("{what} on {}", render(&lf.formula)));
    // t0(φ) with t_i(φ∧¬φ)
    if lf.label == t0 && matches!(label_of(&conj(&lf.formula)), Some(l) if middle.contains(l)) {
        return reason("t0 consistency");
    }
    if let Some((x, y)) = lf.formula.binary(Conn::And) {
        if y.unary(Conn::Neg) == Some(x) {
            if middle.contains(lf.label) && label_of(x) == Some(t0) {
                return reason("t0 consistency");
            }
            if lf.label == CnValues::TOP
                && matches!(label_of(x).and_then(|l| cv.t_index(l)), Some(k) if k >= 1)
            {
                return reason("t_k consistency");
            }
        }
    }
    // t_k(φ), k ≥ 1, with T(φ∧¬φ) or L(φ¹), L ≠ t_{k-1}
    if let Some(k) = cv.t_index(lf.label).filter(|&k| k >= 1) {
        if label_of(&conj(&lf.formula)) == Some(CnValues::TOP) {
            return reason("t_k consistency");
        }
        if matches!(label_of(&Formula::neg(conj(&lf.formula))), Some(l) if l != cv.t(k - 1)) {
            return reason("t_k consistency");
        }
    }
    if let Some(inner) = lf.formula.unary(Conn::Neg) {
        if let Some((x, y)) = inner.binary(Conn::And) {
            if y.unary(Conn::Neg) == Some(x) {
                if let Some(k) = label_of(x).and_then(|l| cv.t_index(l)).filter(|&k| k >= 1) {
                    if lf.label != cv.t(k - 1) {
                        return reason("t_k consistency");
                    }
                }
            }
        }
    }
    None
}

/// The labeled formula a proof of `premises ⊢ conclusion` starts from.
pub fn start_node(spec: &LogicSpec, premises: &[Formula], conclusion: &Formula) -> Result<Labeled> {
    let label = spec
        .undesignated()
        .first()
        .ok_or_else(|| Error::Invalid("no undesignated value".into()))?;
    let formula = match conjoin(premises) {
        Some(c) => {
            spec.sig.require(Conn::Imp)?;
            spec.sig.require(Conn::And)?;
            Formula::imp(c, conclusion.clone())
        }
        None => conclusion.clone(),
    };
    Ok(Labeled { label, formula })
}

pub fn prove(spec: &LogicSpec, premises: &[Formula], conclusion: &Formula) -> Result<Proof> {
    prove_with(spec, premises, conclusion, ProveOptions::default())
}

pub fn prove_with(
    spec: &LogicSpec,
    premises: &[Formula],
    conclusion: &Formula,
    opts: ProveOptions,
) -> Result<Proof> {
    for f in premises.iter().chain([conclusion]) {
        spec.sig.admits(f)?;
    }
    let calc = rules_for(spec)?;
    let mut rules = calc.rules.clone();
    if opts.derived_rules {
        if let Some(Calculus::Cn(n)) = spec.calculus {
            rules.extend(derived_rules_cn(n));
        }
    }
    let mut engine = Engine {
        rules,
        closure: &calc.closure,
        max_branches: opts.max_branches,
        exhaustive: opts.exhaustive,
        leaves: 0,
        open: Vec::new(),
    };
    let start = start_node(spec, premises, conclusion)?;
    let mut st = State {
        entries: Vec::new(),
        labels: HashMap::new(),
        pending: Vec::new(),
    };
    let mut root = TreeNode {
        entries: vec![start.clone()],
        children: Vec::new(),
        status: None,
    };
    match engine.insert(&mut st, &start) {
        Some(reason) => {
            root.status = Some(Status::Closed(reason));
            engine.leaves += 1;
        }
        None => engine.grow(&mut st, &mut root)?,
    }
    let valid = engine.open.is_empty();
    let countermodel = match engine.open.first() {
        Some(b) => Some(extract_countermodel(spec, b)?),
        None => None,
    };
    Ok(Proof {
        verdict: Verdict {
            valid,
            countermodel,
            method: Method::Tableau,
            rows_examined: 0,
            branches: Some(engine.leaves),
        },
        tree: root,
        open_branches: engine.open,
        branches: engine.leaves,
    })
}

/// A restricted valuation agreeing with every label on an open complete
/// branch, extended to the closure of its formulas.
pub fn extract_countermodel(spec: &LogicSpec, branch: &Branch) -> Result<Valuation> {
    if !branch.complete || branch.closed.is_some() {
        return Err(Error::BranchNotComplete);
    }
    let pins: Vec<(Formula, ValueSet)> = branch
        .entries
        .iter()
        .map(|l| (l.formula.clone(), ValueSet::single(l.label)))
        .collect();
    find_valuation(spec, &[], &pins)?.ok_or(Error::NoExtension)
}

/// Indented `LABEL(formula)` lines with `CLOSED(reason)` or `OPEN` leaves.
pub fn dump_tree(spec: &LogicSpec, tree: &TreeNode) -> String {
    let mut out = String::new();
    dump_into(spec, tree, 0, &mut out);
    out
}

fn dump_into(spec: &LogicSpec, node: &TreeNode, depth: usize, out: &mut String) {
    let pad = "  ".repeat(depth);
    for e in &node.entries {
        let _ = writeln!(
            out,
            "{pad}{}({})",
            spec.alg().name(e.label),
            render(&e.formula)
        );
    }
    match &node.status {
        Some(Status::Open) => {
            let _ = writeln!(out, "{pad}OPEN");
        }
        Some(Status::Closed(r)) => {
            let _ = writeln!(out, "{pad}CLOSED({r})");
        }
        None => {}
    }
    for c in &node.children {
        dump_into(spec, c, depth + 1, out);
    }
}
