//! Row-branching, row-eliminating truth tables and the entailment checker.
//!
//! The domain is the subformula closure of the input, augmented by the
//! logic's auxiliary formulas, in complexity order. Rows are built by a
//! depth-first walk over that order: a variable branches over the carrier, a
//! compound formula branches over the table cell of its arguments' values,
//! and each rule instance is checked as soon as the last formula it mentions
//! has a value.
//!
//! [`naive_valuations`] is an independent oracle that enumerates every map
//! from the domain to the carrier.

use serde::Serialize;

use crate::algebra::{compile_checks, Check, Multialgebra, Valuation, Value, ValueSet};
use crate::error::{Error, Result};
use crate::formula::{render, Closure, Formula};
use crate::logics::LogicSpec;

/// Default cap on candidate assignments examined by one search.
pub const DEFAULT_ROW_LIMIT: u64 = 2_000_000;

/// Environment variable overriding [`DEFAULT_ROW_LIMIT`].
pub const ROW_LIMIT_ENV: &str = "RNMATRIX_ROW_LIMIT";

/// The active row limit.
pub fn row_limit() -> u64 {
    std::env::var(ROW_LIMIT_ENV)
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_ROW_LIMIT)
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Stats {
    /// Candidate values tried at some position.
    pub examined: u64,
    /// Candidates rejected by a restriction rule.
    pub eliminated: u64,
}

/// A complete table.
#[derive(Clone, Debug)]
pub struct Table {
    pub logic: String,
    pub domain: Vec<Formula>,
    pub rows: Vec<Vec<Value>>,
    pub stats: Stats,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Table,
    Tableau,
}

/// Outcome of an entailment check.
#[derive(Clone, Debug)]
pub struct Verdict {
    pub valid: bool,
    pub countermodel: Option<Valuation>,
    pub method: Method,
    pub rows_examined: u64,
    pub branches: Option<usize>,
}

#[derive(Clone, Debug)]
enum Node {
    Var,
    App {
        table: Vec<ValueSet>,
        args: Vec<usize>,
    },
}

/// A domain ready for searching.
pub(crate) struct Compiled {
    pub closure: Closure,
    nodes: Vec<Node>,
    checks_at: Vec<Vec<Check>>,
    size: usize,
}

pub(crate) fn compile(spec: &LogicSpec, fs: &[Formula]) -> Result<Compiled> {
    for f in fs {
        spec.sig.admits(f)?;
    }
    let closure = spec.augment_closure(&Closure::from_formulas(fs));
    Ok(compile_closure(spec, closure))
}

fn compile_closure(spec: &LogicSpec, closure: Closure) -> Compiled {
    let alg: &Multialgebra = spec.alg();
    let nodes = closure
        .formulas()
        .iter()
        .map(|f| match f {
            Formula::Var(_) => Node::Var,
            Formula::App(c, args) => Node::App {
                table: alg.table(*c).expect("signature checked").to_vec(),
                args: args
                    .iter()
                    .map(|a| closure.position(a).expect("closed"))
                    .collect(),
            },
        })
        .collect();
    let mut checks_at = vec![Vec::new(); closure.len()];
    for c in compile_checks(&spec.matrix.rules, &closure) {
        checks_at[c.at].push(c);
    }
    Compiled {
        closure,
        nodes,
        checks_at,
        size: alg.size(),
    }
}

impl Compiled {
    pub fn len(&self) -> usize {
        self.closure.len()
    }

    fn candidates(&self, i: usize, vals: &[Value]) -> ValueSet {
        match &self.nodes[i] {
            Node::Var => ValueSet::full(self.size),
            Node::App { table, args } => {
                let idx = args.iter().fold(0, |acc, &a| acc * self.size + vals[a]);
                table[idx]
            }
        }
    }

    /// Depth-first search; `visit` returns `false` to stop.
    fn search(
        &self,
        masks: &[ValueSet],
        limit: u64,
        stats: &mut Stats,
        visit: &mut dyn FnMut(&[Value]) -> bool,
    ) -> Result<()> {
        let mut vals = vec![0; self.len()];
        self.walk(0, masks, limit, stats, &mut vals, visit)
            .map(|_| ())
    }

    fn walk(
        &self,
        i: usize,
        masks: &[ValueSet],
        limit: u64,
        stats: &mut Stats,
        vals: &mut [Value],
        visit: &mut dyn FnMut(&[Value]) -> bool,
    ) -> Result<bool> {
        if i == self.len() {
            return Ok(visit(vals));
        }
        for v in self.candidates(i, vals).intersect(masks[i]).iter() {
            stats.examined += 1;
            if stats.examined > limit {
                return Err(Error::RowLimit { limit });
            }
            vals[i] = v;
            if self.checks_at[i].iter().all(|c| c.holds(vals)) {
                if !self.walk(i + 1, masks, limit, stats, vals, visit)? {
                    return Ok(false);
                }
            } else {
                stats.eliminated += 1;
            }
        }
        Ok(true)
    }

    /// Narrows `masks` to values that occur in some homomorphic assignment
    /// respecting every mask; restriction rules are ignored, so no row is
    /// lost. Returns `false` when some mask becomes empty.
    fn propagate(&self, masks: &mut [ValueSet]) -> bool {
        let mut changed = true;
        while changed {
            changed = false;
            for (i, node) in self.nodes.iter().enumerate() {
                let Node::App { table, args } = node else {
                    continue;
                };
                let mut support = vec![ValueSet::default(); args.len()];
                let mut reach = ValueSet::default();
                let mut combo = vec![0; args.len()];
                self.supports(
                    table,
                    args,
                    masks,
                    masks[i],
                    0,
                    &mut combo,
                    &mut support,
                    &mut reach,
                );
                for (a, s) in args.iter().zip(&support) {
                    let narrowed = masks[*a].intersect(*s);
                    changed |= narrowed != masks[*a];
                    masks[*a] = narrowed;
                }
                let narrowed = masks[i].intersect(reach);
                changed |= narrowed != masks[i];
                masks[i] = narrowed;
                if masks[i].is_empty() {
                    return false;
                }
            }
        }
        masks.iter().all(|m| !m.is_empty())
    }

    #[allow(clippy::too_many_arguments)]
    fn supports(
        &self,
        table: &[ValueSet],
        args: &[usize],
        masks: &[ValueSet],
        target: ValueSet,
        k: usize,
        combo: &mut [Value],
        support: &mut [ValueSet],
        reach: &mut ValueSet,
    ) {
        if k == args.len() {
            let idx = combo.iter().fold(0, |acc, &v| acc * self.size + v);
            let hit = table[idx].intersect(target);
            if !hit.is_empty() {
                *reach = reach.union(hit);
                for (s, &v) in support.iter_mut().zip(combo.iter()) {
                    *s = s.with(v);
                }
            }
            return;
        }
        for v in masks[args[k]].iter() {
            // repeated arguments take one value
            if (0..k).any(|j| args[j] == args[k] && combo[j] != v) {
                continue;
            }
            combo[k] = v;
            self.supports(table, args, masks, target, k + 1, combo, support, reach);
        }
    }

    /// Like [`Compiled::search`], re-narrowing the masks after every
    /// assignment.
    fn search_propagating(
        &self,
        masks: &[ValueSet],
        limit: u64,
        stats: &mut Stats,
        visit: &mut dyn FnMut(&[Value]) -> bool,
    ) -> Result<()> {
        let mut masks = masks.to_vec();
        if !self.propagate(&mut masks) {
            return Ok(());
        }
        let mut vals = vec![0; self.len()];
        self.walk_propagating(0, &masks, limit, stats, &mut vals, visit)
            .map(|_| ())
    }

    fn walk_propagating(
        &self,
        i: usize,
        masks: &[ValueSet],
        limit: u64,
        stats: &mut Stats,
        vals: &mut [Value],
        visit: &mut dyn FnMut(&[Value]) -> bool,
    ) -> Result<bool> {
        if i == self.len() {
            return Ok(visit(vals));
        }
        for v in self.candidates(i, vals).intersect(masks[i]).iter() {
            stats.examined += 1;
            if stats.examined > limit {
                return Err(Error::RowLimit { limit });
            }
            vals[i] = v;
            if !self.checks_at[i].iter().all(|c| c.holds(vals)) {
                stats.eliminated += 1;
                continue;
            }
            let mut next = masks.to_vec();
            next[i] = ValueSet::single(v);
            if !self.propagate(&mut next) {
                stats.eliminated += 1;
                continue;
            }
            if !self.walk_propagating(i + 1, &next, limit, stats, vals, visit)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn valuation(&self, vals: &[Value]) -> Valuation {
        Valuation {
            domain: self.closure.formulas().to_vec(),
            values: vals.to_vec(),
        }
    }

    fn all_checks(&self) -> impl Iterator<Item = &Check> {
        self.checks_at.iter().flatten()
    }
}

/// All restricted valuations over the augmented closure of `fs`.
pub fn build_table(spec: &LogicSpec, fs: &[Formula]) -> Result<Table> {
    build_table_with_limit(spec, fs, row_limit())
}

pub fn build_table_with_limit(spec: &LogicSpec, fs: &[Formula], limit: u64) -> Result<Table> {
    let c = compile(spec, fs)?;
    let masks = vec![spec.alg().full(); c.len()];
    let mut rows = Vec::new();
    let mut stats = Stats::default();
    c.search(&masks, limit, &mut stats, &mut |v| {
        rows.push(v.to_vec());
        true
    })?;
    Ok(Table {
        logic: spec.id.clone(),
        domain: c.closure.formulas().to_vec(),
        rows,
        stats,
    })
}

/// Merged-table entailment: valid iff no row designates every premise and
/// leaves the conclusion undesignated.
pub fn entails(spec: &LogicSpec, premises: &[Formula], conclusion: &Formula) -> Result<Verdict> {
    entails_with_limit(spec, premises, conclusion, row_limit())
}

pub fn entails_with_limit(
    spec: &LogicSpec,
    premises: &[Formula],
    conclusion: &Formula,
    limit: u64,
) -> Result<Verdict> {
    let mut all = premises.to_vec();
    all.push(conclusion.clone());
    let c = compile(spec, &all)?;
    let mut masks = vec![spec.alg().full(); c.len()];
    for p in premises {
        let i = c.closure.position(p).expect("in closure");
        masks[i] = masks[i].intersect(spec.designated());
    }
    let ci = c.closure.position(conclusion).expect("in closure");
    masks[ci] = masks[ci].intersect(spec.undesignated());
    let mut found = None;
    let mut stats = Stats::default();
    c.search_propagating(&masks, limit, &mut stats, &mut |v| {
        found = Some(v.to_vec());
        false
    })?;
    Ok(Verdict {
        valid: found.is_none(),
        countermodel: found.map(|v| c.valuation(&v)),
        method: Method::Table,
        rows_examined: stats.examined,
        branches: None,
    })
}

/// A restricted valuation over the augmented closure of `fs` and the pinned
/// formulas, with each pinned formula taking a value from its set.
pub fn find_valuation(
    spec: &LogicSpec,
    fs: &[Formula],
    pins: &[(Formula, ValueSet)],
) -> Result<Option<Valuation>> {
    let mut all = fs.to_vec();
    all.extend(pins.iter().map(|(f, _)| f.clone()));
    let c = compile(spec, &all)?;
    let mut masks = vec![spec.alg().full(); c.len()];
    for (f, s) in pins {
        let i = c.closure.position(f).expect("in closure");
        masks[i] = masks[i].intersect(*s);
    }
    let mut found = None;
    let mut stats = Stats::default();
    c.search_propagating(&masks, row_limit(), &mut stats, &mut |v| {
        found = Some(v.to_vec());
        false
    })?;
    Ok(found.map(|v| c.valuation(&v)))
}

/// Output of the exhaustive oracle.
#[derive(Clone, Debug)]
pub struct NaiveResult {
    pub domain: Vec<Formula>,
    pub rows: Vec<Vec<Value>>,
    pub examined: u64,
}

/// Cap on `|carrier|^|domain|` for [`naive_valuations`].
pub const NAIVE_LIMIT: u64 = 20_000_000;

/// Every total map from the augmented closure to the carrier, filtered by
/// the homomorphism condition and every rule instance. No pruning.
pub fn naive_valuations(spec: &LogicSpec, fs: &[Formula]) -> Result<NaiveResult> {
    let c = compile(spec, fs)?;
    let k = spec.alg().size() as u64;
    let d = c.len() as u32;
    let total = k
        .checked_pow(d)
        .filter(|&t| t <= NAIVE_LIMIT)
        .ok_or(Error::RowLimit { limit: NAIVE_LIMIT })?;
    let alg = spec.alg();
    let formulas = c.closure.formulas();
    let args: Vec<Vec<usize>> = formulas
        .iter()
        .map(|f| {
            f.args()
                .iter()
                .map(|a| c.closure.position(a).unwrap())
                .collect()
        })
        .collect();
    let checks: Vec<&Check> = c.all_checks().collect();
    let mut rows = Vec::new();
    let mut vals = vec![0usize; c.len()];
    for _ in 0..total {
        let homomorphic = formulas.iter().enumerate().all(|(i, f)| match f {
            Formula::Var(_) => true,
            Formula::App(conn, _) => {
                let av: Vec<Value> = args[i].iter().map(|&a| vals[a]).collect();
                alg.op(*conn, &av).contains(vals[i])
            }
        });
        if homomorphic && checks.iter().all(|ch| ch.holds(&vals)) {
            rows.push(vals.clone());
        }
        for slot in vals.iter_mut().rev() {
            *slot += 1;
            if (*slot as u64) < k {
                break;
            }
            *slot = 0;
        }
    }
    Ok(NaiveResult {
        domain: formulas.to_vec(),
        rows,
        examined: total,
    })
}

impl Table {
    pub fn column(&self, f: &Formula) -> Option<usize> {
        self.domain.iter().position(|g| g == f)
    }

    /// Header of rendered formulas, one line per row, columns aligned.
    pub fn dump(&self, alg: &Multialgebra) -> String {
        let mut grid = vec![self.domain.iter().map(render).collect::<Vec<_>>()];
        for r in &self.rows {
            grid.push(r.iter().map(|&v| alg.name(v).to_string()).collect());
        }
        crate::algebra::grid(&grid)
    }

    /// One JSON record per row: an array of `{formula, value}` objects.
    pub fn records(&self, alg: &Multialgebra) -> Vec<String> {
        self.rows
            .iter()
            .map(|r| {
                let cells: Vec<serde_json::Value> = self
                    .domain
                    .iter()
                    .zip(r)
                    .map(|(f, &v)| serde_json::json!({"formula": render(f), "value": alg.name(v)}))
                    .collect();
                serde_json::Value::Array(cells).to_string()
            })
            .collect()
    }

    /// Rows restricted to the given columns, as value names.
    pub fn project(&self, alg: &Multialgebra, cols: &[Formula]) -> Vec<Vec<String>> {
        let idx: Vec<usize> = cols
            .iter()
            .map(|f| self.column(f).expect("column present"))
            .collect();
        self.rows
            .iter()
            .map(|r| idx.iter().map(|&i| alg.name(r[i]).to_string()).collect())
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::parse;
    use crate::logics::get_logic;

    #[test]
    fn first_stage_and_oracle() {
        let c1 = get_logic("C1", None).unwrap();
        let p = parse("p", &c1.sig).unwrap();
        let t = build_table(&c1, &[p.clone()]).unwrap();
        assert_eq!(t.rows, vec![vec![0], vec![1], vec![2]]);
        let n = naive_valuations(&c1, &[p]).unwrap();
        assert_eq!(n.rows, t.rows);
        assert_eq!(n.examined, 3);
    }

    #[test]
    fn row_limit_errors() {
        let c1 = get_logic("C1", None).unwrap();
        let f = parse("(p -> q) | (q -> r)", &c1.sig).unwrap();
        assert!(matches!(
            build_table_with_limit(&c1, &[f], 5),
            Err(Error::RowLimit { limit: 5 })
        ));
    }

    #[test]
    fn premise_equal_to_conclusion() {
        let c1 = get_logic("C1", None).unwrap();
        let p = parse("p", &c1.sig).unwrap();
        assert!(entails(&c1, &[p.clone()], &p).unwrap().valid);
    }
}
