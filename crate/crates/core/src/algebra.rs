//! Finite multialgebras, restricted non-deterministic matrices and their
//! restriction rules.
//!
//! Carrier values are indices into an ordered list of names. Value sets are
//! bitmasks, which caps carriers at 128 elements.
//!
//! A restriction rule is a schematic constraint. Its patterns are formulas
//! whose variables are metavariables (names starting with `$`, which the
//! parser can never produce). An instance of a rule constraint is in force
//! for a valuation exactly when every pattern formula of that constraint
//! (guards and target) lies in the valuation's domain.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::formula::{complexity, substitute_unchecked, Closure, Conn, Formula, Signature};

/// Index of a carrier element.
pub type Value = usize;

/// A subset of a carrier of at most 128 values.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct ValueSet(pub u128);

impl ValueSet {
    pub const EMPTY: ValueSet = ValueSet(0);

    pub fn single(v: Value) -> Self {
        ValueSet(1u128 << v)
    }

    /// `{0, …, k-1}`.
    pub fn full(k: usize) -> Self {
        if k >= 128 {
            ValueSet(u128::MAX)
        } else {
            ValueSet((1u128 << k) - 1)
        }
    }

    pub fn from_values<I: IntoIterator<Item = Value>>(it: I) -> Self {
        it.into_iter().fold(ValueSet::EMPTY, |s, v| s.with(v))
    }

    pub fn with(self, v: Value) -> Self {
        ValueSet(self.0 | (1u128 << v))
    }

    pub fn contains(self, v: Value) -> bool {
        v < 128 && self.0 >> v & 1 == 1
    }

    pub fn union(self, o: ValueSet) -> Self {
        ValueSet(self.0 | o.0)
    }

    pub fn intersect(self, o: ValueSet) -> Self {
        ValueSet(self.0 & o.0)
    }

    pub fn minus(self, o: ValueSet) -> Self {
        ValueSet(self.0 & !o.0)
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_subset(self, o: ValueSet) -> bool {
        self.0 & !o.0 == 0
    }

    pub fn first(self) -> Option<Value> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    pub fn iter(self) -> impl Iterator<Item = Value> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }
}

impl fmt::Debug for ValueSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<Value> for ValueSet {
    fn from_iter<I: IntoIterator<Item = Value>>(iter: I) -> Self {
        ValueSet::from_values(iter)
    }
}

// ---------------------------------------------------------------------------
// Multialgebras

#[derive(Clone, Debug, PartialEq, Eq)]
struct Tables {
    sig: Signature,
    carrier: Vec<String>,
    ops: HashMap<Conn, Vec<ValueSet>>,
}

impl Tables {
    fn build(
        sig: Signature,
        carrier: Vec<String>,
        tables: HashMap<Conn, HashMap<Vec<Value>, ValueSet>>,
        allow_empty: bool,
    ) -> Result<Self> {
        let k = carrier.len();
        if k == 0 {
            return Err(Error::Invalid("empty carrier".into()));
        }
        if k > 128 {
            return Err(Error::CarrierTooLarge(k));
        }
        for (i, name) in carrier.iter().enumerate() {
            if carrier[..i].contains(name) {
                return Err(Error::Invalid(format!("carrier lists {name} twice")));
            }
        }
        let full = ValueSet::full(k);
        let mut ops = HashMap::new();
        for &c in &sig.connectives {
            let cells = tables.get(&c);
            let arity = c.arity();
            let mut flat = vec![ValueSet::EMPTY; k.pow(arity as u32)];
            for (idx, slot) in flat.iter_mut().enumerate() {
                let tuple = unflatten(idx, arity, k);
                let tuple_text = || {
                    let names: Vec<&str> = tuple.iter().map(|&v| carrier[v].as_str()).collect();
                    format!("({})", names.join(","))
                };
                let set = cells.and_then(|m| m.get(&tuple)).copied().ok_or_else(|| {
                    Error::MissingTuple {
                        connective: c.symbol().to_string(),
                        tuple: tuple_text(),
                    }
                })?;
                if !set.is_subset(full) {
                    return Err(Error::Invalid(format!(
                        "table for {} at {} leaves the carrier",
                        c.symbol(),
                        tuple_text()
                    )));
                }
                if set.is_empty() && !allow_empty {
                    return Err(Error::EmptyResult {
                        connective: c.symbol().to_string(),
                        tuple: tuple_text(),
                    });
                }
                *slot = set;
            }
            ops.insert(c, flat);
        }
        if let Some(c) = tables.keys().find(|c| !sig.contains(**c)) {
            return Err(Error::SignatureMismatch {
                symbol: c.symbol().to_string(),
                signature: sig.name.clone(),
            });
        }
        Ok(Tables { sig, carrier, ops })
    }

    fn from_fn(
        sig: Signature,
        carrier: Vec<String>,
        f: impl Fn(Conn, &[Value]) -> ValueSet,
        allow_empty: bool,
    ) -> Result<Self> {
        let k = carrier.len();
        let mut tables = HashMap::new();
        for &c in &sig.connectives {
            let mut cells = HashMap::new();
            for idx in 0..k.pow(c.arity() as u32) {
                let t = unflatten(idx, c.arity(), k);
                let s = f(c, &t);
                cells.insert(t, s);
            }
            tables.insert(c, cells);
        }
        Tables::build(sig, carrier, tables, allow_empty)
    }
}

fn unflatten(mut idx: usize, arity: usize, k: usize) -> Vec<Value> {
    let mut t = vec![0; arity];
    for slot in t.iter_mut().rev() {
        *slot = idx % k;
        idx /= k;
    }
    t
}

fn flatten(args: &[Value], k: usize) -> usize {
    args.iter().fold(0, |acc, &a| acc * k + a)
}

/// A finite multialgebra: every table cell is a non-empty set of values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multialgebra {
    t: Tables,
}

/// Like [`Multialgebra`] but cells may be empty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialMultialgebra {
    t: Tables,
}

/// Validates and builds a multialgebra from explicit tables.
pub fn make_multialgebra(
    sig: Signature,
    carrier: Vec<String>,
    tables: HashMap<Conn, HashMap<Vec<Value>, ValueSet>>,
) -> Result<Multialgebra> {
    Ok(Multialgebra {
        t: Tables::build(sig, carrier, tables, false)?,
    })
}

/// The stored value set for `c` at `args`.
pub fn eval_connective(m: &Multialgebra, c: Conn, args: &[Value]) -> Result<ValueSet> {
    let table =
        m.t.ops
            .get(&c)
            .ok_or_else(|| Error::UnknownConnective(c.symbol().to_string()))?;
    if args.len() != c.arity() {
        return Err(Error::Arity {
            expected: c.arity(),
            got: args.len(),
        });
    }
    if let Some(&v) = args.iter().find(|&&v| v >= m.size()) {
        return Err(Error::UnknownValue(v.to_string()));
    }
    Ok(table[flatten(args, m.size())])
}

impl Multialgebra {
    /// Builds tables by calling `f` on every tuple, then validates.
    pub fn from_fn(
        sig: Signature,
        carrier: Vec<String>,
        f: impl Fn(Conn, &[Value]) -> ValueSet,
    ) -> Result<Self> {
        Ok(Multialgebra {
            t: Tables::from_fn(sig, carrier, f, false)?,
        })
    }

    pub fn sig(&self) -> &Signature {
        &self.t.sig
    }

    pub fn carrier(&self) -> &[String] {
        &self.t.carrier
    }

    pub fn size(&self) -> usize {
        self.t.carrier.len()
    }

    pub fn full(&self) -> ValueSet {
        ValueSet::full(self.size())
    }

    pub fn value(&self, name: &str) -> Result<Value> {
        self.t
            .carrier
            .iter()
            .position(|c| c == name)
            .ok_or_else(|| Error::UnknownValue(name.to_string()))
    }

    pub fn name(&self, v: Value) -> &str {
        &self.t.carrier[v]
    }

    /// Unchecked lookup; `c` must be in the signature.
    pub fn op(&self, c: Conn, args: &[Value]) -> ValueSet {
        self.t.ops[&c][flatten(args, self.size())]
    }

    /// Flat table for `c`, indexed by the base-`size` encoding of the tuple.
    pub fn table(&self, c: Conn) -> Option<&[ValueSet]> {
        self.t.ops.get(&c).map(Vec::as_slice)
    }

    pub fn is_deterministic(&self) -> bool {
        self.t.ops.values().all(|t| t.iter().all(|s| s.len() == 1))
    }

    pub fn set_names(&self, s: ValueSet) -> Vec<&str> {
        s.iter().map(|v| self.name(v)).collect()
    }

    /// Text grid of one table: rows are the first argument, columns the
    /// second.
    pub fn dump(&self, c: Conn) -> String {
        let fmt_set = |s: ValueSet| {
            let n = self.set_names(s);
            if n.len() == 1 {
                n[0].to_string()
            } else {
                format!("{{{}}}", n.join(","))
            }
        };
        let k = self.size();
        let mut rows: Vec<Vec<String>> = Vec::new();
        if c.arity() == 1 {
            rows.push(vec![c.symbol().to_string(), String::new()]);
            for a in 0..k {
                rows.push(vec![self.name(a).to_string(), fmt_set(self.op(c, &[a]))]);
            }
        } else {
            let mut head = vec![c.symbol().to_string()];
            head.extend(self.carrier().iter().cloned());
            rows.push(head);
            for a in 0..k {
                let mut r = vec![self.name(a).to_string()];
                r.extend((0..k).map(|b| fmt_set(self.op(c, &[a, b]))));
                rows.push(r);
            }
        }
        grid(&rows)
    }
}

pub(crate) fn grid(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|j| {
            rows.iter()
                .filter_map(|r| r.get(j))
                .map(|s| s.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for r in rows {
        let cells: Vec<String> = r
            .iter()
            .enumerate()
            .map(|(j, s)| format!("{s}{}", " ".repeat(widths[j] - s.chars().count())))
            .collect();
        out.push_str(cells.join(" | ").trim_end());
        out.push('\n');
    }
    out
}

impl PartialMultialgebra {
    pub fn new(
        sig: Signature,
        carrier: Vec<String>,
        tables: HashMap<Conn, HashMap<Vec<Value>, ValueSet>>,
    ) -> Result<Self> {
        Ok(PartialMultialgebra {
            t: Tables::build(sig, carrier, tables, true)?,
        })
    }

    pub fn from_fn(
        sig: Signature,
        carrier: Vec<String>,
        f: impl Fn(Conn, &[Value]) -> ValueSet,
    ) -> Result<Self> {
        Ok(PartialMultialgebra {
            t: Tables::from_fn(sig, carrier, f, true)?,
        })
    }

    pub fn sig(&self) -> &Signature {
        &self.t.sig
    }

    pub fn carrier(&self) -> &[String] {
        &self.t.carrier
    }

    pub fn op(&self, c: Conn, args: &[Value]) -> ValueSet {
        self.t.ops[&c][flatten(args, self.t.carrier.len())]
    }
}

// ---------------------------------------------------------------------------
// Restriction rules

/// Allowed values of a constraint target, as a function of the guard values.
pub type AllowedFn = Arc<dyn Fn(&[Value]) -> ValueSet + Send + Sync>;

/// Metavariable pattern variable `$name`.
pub fn mv(name: &str) -> Formula {
    Formula::Var(format!("${name}"))
}

pub fn is_metavar(f: &Formula) -> bool {
    matches!(f, Formula::Var(v) if v.starts_with('$'))
}

/// One constrained pattern of a rule.
#[derive(Clone)]
pub struct Constraint {
    pub target: Formula,
    pub allowed: AllowedFn,
}

/// A schematic restriction on valuations.
#[derive(Clone)]
pub struct RestrictionRule {
    pub name: String,
    pub guards: Vec<Formula>,
    pub constraints: Vec<Constraint>,
    /// Closure augmentation pairs: every closure formula matching the first
    /// pattern pulls in the instance of the second.
    pub aux: Vec<(Formula, Formula)>,
}

impl fmt::Debug for RestrictionRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RestrictionRule")
            .field("name", &self.name)
            .field("guards", &self.guards)
            .field(
                "targets",
                &self
                    .constraints
                    .iter()
                    .map(|c| &c.target)
                    .collect::<Vec<_>>(),
            )
            .field("aux", &self.aux)
            .finish()
    }
}

impl RestrictionRule {
    pub fn new(name: &str, guards: Vec<Formula>) -> Self {
        RestrictionRule {
            name: name.to_string(),
            guards,
            constraints: Vec::new(),
            aux: Vec::new(),
        }
    }

    pub fn constrain(
        mut self,
        target: Formula,
        allowed: impl Fn(&[Value]) -> ValueSet + Send + Sync + 'static,
    ) -> Self {
        self.constraints.push(Constraint {
            target,
            allowed: Arc::new(allowed),
        });
        self
    }

    pub fn with_aux(mut self, trigger: Formula, added: Formula) -> Self {
        self.aux.push((trigger, added));
        self
    }
}

/// Binding of metavariable names to formulas.
pub type Binding = HashMap<String, Formula>;

/// Structural match of `pat` against `f`, extending `b`.
pub fn match_pattern(pat: &Formula, f: &Formula, b: &mut Binding) -> bool {
    match pat {
        Formula::Var(name) if name.starts_with('$') => match b.get(name) {
            Some(bound) => bound == f,
            None => {
                b.insert(name.clone(), f.clone());
                true
            }
        },
        Formula::Var(_) => pat == f,
        Formula::App(c, pargs) => match f {
            Formula::App(d, fargs) if c == d => {
                let snapshot = b.clone();
                for (p, a) in pargs.iter().zip(fargs) {
                    if !match_pattern(p, a, b) {
                        *b = snapshot;
                        return false;
                    }
                }
                true
            }
            _ => false,
        },
    }
}

fn metavars(f: &Formula, out: &mut Vec<String>) {
    match f {
        Formula::Var(v) if v.starts_with('$') => {
            if !out.contains(v) {
                out.push(v.clone());
            }
        }
        Formula::Var(_) => {}
        Formula::App(_, args) => args.iter().for_each(|a| metavars(a, out)),
    }
}

fn fully_bound(f: &Formula, b: &Binding) -> bool {
    let mut vs = Vec::new();
    metavars(f, &mut vs);
    vs.iter().all(|v| b.contains_key(v))
}

/// All bindings under which every pattern is a member of `closure`.
pub fn match_all(patterns: &[Formula], closure: &Closure) -> Vec<Binding> {
    let mut order: Vec<usize> = (0..patterns.len()).collect();
    order.sort_by_key(|&i| {
        (
            is_metavar(&patterns[i]),
            std::cmp::Reverse(complexity(&patterns[i])),
        )
    });
    let mut out = Vec::new();
    let mut b = Binding::new();
    search_bindings(patterns, &order, 0, closure, &mut b, &mut out);
    out
}

fn search_bindings(
    patterns: &[Formula],
    order: &[usize],
    at: usize,
    closure: &Closure,
    b: &mut Binding,
    out: &mut Vec<Binding>,
) {
    if at == order.len() {
        out.push(b.clone());
        return;
    }
    let pat = &patterns[order[at]];
    if fully_bound(pat, b) {
        if closure.contains(&substitute_unchecked(pat, b)) {
            search_bindings(patterns, order, at + 1, closure, b, out);
        }
        return;
    }
    for f in closure.formulas() {
        let mut nb = b.clone();
        if match_pattern(pat, f, &mut nb) {
            search_bindings(patterns, order, at + 1, closure, &mut nb, out);
        }
    }
}

/// A rule constraint instantiated over a concrete closure.
#[derive(Clone)]
pub struct Check {
    pub rule: String,
    pub guards: Vec<usize>,
    pub target: usize,
    pub allowed: AllowedFn,
    /// Largest closure position involved; the check can run once this
    /// position has a value.
    pub at: usize,
}

impl fmt::Debug for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Check({} {:?} -> {} @{})",
            self.rule, self.guards, self.target, self.at
        )
    }
}

impl Check {
    pub fn holds(&self, vals: &[Value]) -> bool {
        self.allowed_for(vals).contains(vals[self.target])
    }

    /// The allowed set for the target given the guard values in `vals`.
    pub fn allowed_for(&self, vals: &[Value]) -> ValueSet {
        let mut buf = [0; 8];
        if self.guards.len() <= buf.len() {
            for (slot, &g) in buf.iter_mut().zip(&self.guards) {
                *slot = vals[g];
            }
            (self.allowed)(&buf[..self.guards.len()])
        } else {
            let gv: Vec<Value> = self.guards.iter().map(|&g| vals[g]).collect();
            (self.allowed)(&gv)
        }
    }
}

/// Every in-force constraint instance of `rules` over `closure`, deduplicated.
pub fn compile_checks(rules: &[RestrictionRule], closure: &Closure) -> Vec<Check> {
    let mut out = Vec::new();
    for rule in rules {
        for (ci, c) in rule.constraints.iter().enumerate() {
            let mut pats = rule.guards.clone();
            pats.push(c.target.clone());
            let mut seen = HashSet::new();
            for b in match_all(&pats, closure) {
                let pos = |p: &Formula| {
                    closure
                        .position(&substitute_unchecked(p, &b))
                        .expect("matched pattern")
                };
                let guards: Vec<usize> = rule.guards.iter().map(pos).collect();
                let target = pos(&c.target);
                if !seen.insert((ci, guards.clone(), target)) {
                    continue;
                }
                let at = guards
                    .iter()
                    .copied()
                    .chain([target])
                    .max()
                    .unwrap_or(target);
                out.push(Check {
                    rule: rule.name.clone(),
                    guards,
                    target,
                    allowed: c.allowed.clone(),
                    at,
                });
            }
        }
    }
    out
}

/// Closes `closure` under every rule's augmentation pairs, then under
/// subformulas, until nothing changes.
pub fn augment(rules: &[RestrictionRule], closure: &Closure) -> Closure {
    let pairs: Vec<&(Formula, Formula)> = rules.iter().flat_map(|r| r.aux.iter()).collect();
    if pairs.is_empty() {
        return closure.clone();
    }
    let mut cur = closure.clone();
    loop {
        let mut extra = Vec::new();
        for (trigger, added) in &pairs {
            for f in cur.formulas() {
                let mut b = Binding::new();
                if match_pattern(trigger, f, &mut b) && fully_bound(added, &b) {
                    let g = substitute_unchecked(added, &b);
                    if !cur.contains(&g) && !extra.contains(&g) {
                        extra.push(g);
                    }
                }
            }
        }
        if extra.is_empty() {
            return cur;
        }
        cur = cur.extend(&extra);
    }
}

// ---------------------------------------------------------------------------
// RNmatrices

/// A multialgebra with designated values and restriction rules.
#[derive(Clone, Debug)]
pub struct RNmatrix {
    pub alg: Multialgebra,
    pub designated: ValueSet,
    pub rules: Vec<RestrictionRule>,
}

impl RNmatrix {
    pub fn undesignated(&self) -> ValueSet {
        self.alg.full().minus(self.designated)
    }

    pub fn is_nmatrix(&self) -> bool {
        self.rules.is_empty()
    }
}

/// Validates `designated` against the carrier.
pub fn make_rnmatrix(
    alg: Multialgebra,
    designated: &[&str],
    rules: Vec<RestrictionRule>,
) -> Result<RNmatrix> {
    let mut d = ValueSet::EMPTY;
    for name in designated {
        let v = alg
            .value(name)
            .map_err(|_| Error::DesignatedOutOfCarrier(name.to_string()))?;
        d = d.with(v);
    }
    Ok(RNmatrix {
        alg,
        designated: d,
        rules,
    })
}

/// Name of the fresh value added by [`pnmatrix_embed`].
pub const FRESH: &str = "o";

/// Turns a partial multialgebra into a total one with a fresh absorbing
/// value, and forbids that value in every valuation.
pub fn pnmatrix_embed(p: &PartialMultialgebra, designated: &[&str]) -> Result<RNmatrix> {
    let k = p.carrier().len();
    if p.carrier().iter().any(|c| c == FRESH) {
        return Err(Error::Invalid(format!("carrier already contains {FRESH}")));
    }
    let mut carrier = p.carrier().to_vec();
    carrier.push(FRESH.to_string());
    let o = k;
    let alg = Multialgebra::from_fn(p.sig().clone(), carrier, |c, args| {
        if args.contains(&o) {
            return ValueSet::single(o);
        }
        let s = p.op(c, args);
        if s.is_empty() {
            ValueSet::single(o)
        } else {
            s
        }
    })?;
    let ordinary = ValueSet::full(k);
    let rule = RestrictionRule::new("no-fresh-value", vec![]).constrain(mv("a"), move |_| ordinary);
    make_rnmatrix(alg, designated, vec![rule])
}

/// Rules forcing equal results for a connective applied to arguments with
/// equal values.
pub fn static_restriction(m: &Multialgebra) -> Vec<RestrictionRule> {
    let full = m.full();
    m.sig()
        .connectives
        .iter()
        .map(|&c| {
            let k = c.arity();
            let a: Vec<Formula> = (0..k).map(|i| mv(&format!("a{i}"))).collect();
            let b: Vec<Formula> = (0..k).map(|i| mv(&format!("b{i}"))).collect();
            let mut guards = a.clone();
            guards.extend(b.iter().cloned());
            guards.push(Formula::app(c, a));
            RestrictionRule::new(&format!("static-{}", c.symbol()), guards).constrain(
                Formula::app(c, b),
                move |g| {
                    if g[..k] == g[k..2 * k] {
                        ValueSet::single(g[2 * k])
                    } else {
                        full
                    }
                },
            )
        })
        .collect()
}

// ---------------------------------------------------------------------------
// Valuations

/// A map from a subformula-closed domain to carrier values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Valuation {
    pub domain: Vec<Formula>,
    pub values: Vec<Value>,
}

impl Valuation {
    pub fn get(&self, f: &Formula) -> Option<Value> {
        self.domain
            .iter()
            .position(|g| g == f)
            .map(|i| self.values[i])
    }

    /// `(formula, value name)` pairs in domain order.
    pub fn named<'a>(&'a self, m: &'a Multialgebra) -> Vec<(&'a Formula, &'a str)> {
        self.domain
            .iter()
            .zip(&self.values)
            .map(|(f, &v)| (f, m.name(v)))
            .collect()
    }
}

/// Re-checks the homomorphism condition and every in-force rule instance.
/// Returns a description of the first violation.
pub fn check_valuation(m: &RNmatrix, v: &Valuation) -> std::result::Result<(), String> {
    if v.domain.len() != v.values.len() {
        return Err("domain and values differ in length".into());
    }
    if let Some(&bad) = v.values.iter().find(|&&x| x >= m.alg.size()) {
        return Err(format!("value index {bad} outside the carrier"));
    }
    let closure = Closure::from_formulas(&v.domain);
    if closure.len() != v.domain.len() {
        return Err("domain is not subformula closed or has duplicates".into());
    }
    let mut vals = vec![0; closure.len()];
    for (f, &x) in v.domain.iter().zip(&v.values) {
        vals[closure.position(f).unwrap()] = x;
    }
    for (i, f) in closure.formulas().iter().enumerate() {
        if let Formula::App(c, args) = f {
            if !m.alg.sig().contains(*c) {
                return Err(format!("{f} uses a connective outside the signature"));
            }
            let av: Vec<Value> = args
                .iter()
                .map(|a| vals[closure.position(a).unwrap()])
                .collect();
            if !m.alg.op(*c, &av).contains(vals[i]) {
                return Err(format!(
                    "{f} = {} is not produced by its arguments",
                    m.alg.name(vals[i])
                ));
            }
        }
    }
    for chk in compile_checks(&m.rules, &closure) {
        if !chk.holds(&vals) {
            return Err(format!(
                "rule {} violated at {}",
                chk.rule,
                closure.formulas()[chk.target]
            ));
        }
    }
    Ok(())
}
