//! Finite metatheory witnesses.
//!
//! The five-element Lewin–Mikenberg–Schwarze algebra `𝔏` over `{u,1,a,b,0}`
//! with designated set `{u,1}`, schema checking, filter tests, congruence
//! enumeration, the Leibniz congruence, and the `Γ_n` incompatibility
//! families.

use std::fmt;

use crate::algebra::{Multialgebra, Value, ValueSet};
use crate::error::{Error, Result};
use crate::formula::{bottom_raw, parse, strong_neg_raw, Conn, Formula, Signature};
use crate::logics::{get_logic, ONE, ZERO};
use crate::truthtable::{entails, find_valuation};

/// Which signature the Lewin matrix is built over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variant {
    BI,
    NbI,
}

/// A deterministic finite matrix.
#[derive(Clone, Debug)]
pub struct FiniteMatrix {
    pub alg: Multialgebra,
    pub designated: ValueSet,
    pub variant: Variant,
}

const U: Value = 0;
const L1: Value = 1;
const A: Value = 2;
const B: Value = 3;
const L0: Value = 4;

const OR: [[Value; 5]; 5] = [
    [U, U, U, U, U],
    [U, L1, L1, L1, L1],
    [U, L1, A, L1, A],
    [U, L1, L1, B, B],
    [U, L1, A, B, L0],
];
const AND: [[Value; 5]; 5] = [
    [U, L1, A, B, L0],
    [L1, L1, A, B, L0],
    [A, A, A, L0, L0],
    [B, B, L0, B, L0],
    [L0, L0, L0, L0, L0],
];
const IMP: [[Value; 5]; 5] = [
    [U, U, A, B, L0],
    [U, L1, A, B, L0],
    [U, L1, L1, B, B],
    [U, L1, A, L1, A],
    [U, L1, L1, L1, L1],
];
const UP: [[Value; 5]; 5] = [
    [L0, L0, L0, L0, L1],
    [L0, L0, B, A, L1],
    [L0, B, B, L1, L1],
    [L0, A, L1, A, L1],
    [L1, L1, L1, L1, L1],
];
const NEG: [Value; 5] = [L1, L0, B, A, L1];

/// `𝔏` (over `Σ_bI`) or `𝔏_nbI` (adding `¬`), designated `{u,1}`.
pub fn lewin_matrix(variant: Variant) -> FiniteMatrix {
    let sig = match variant {
        Variant::BI => Signature::bi(),
        Variant::NbI => Signature::nbi(),
    };
    let carrier = ["u", "1", "a", "b", "0"].map(String::from).to_vec();
    let alg = Multialgebra::from_fn(sig, carrier, |c, x| {
        ValueSet::single(match c {
            Conn::Or => OR[x[0]][x[1]],
            Conn::And => AND[x[0]][x[1]],
            Conn::Imp => IMP[x[0]][x[1]],
            Conn::Up => UP[x[0]][x[1]],
            Conn::Neg => NEG[x[0]],
            Conn::Circ => unreachable!("not in the signature"),
        })
    })
    .expect("static tables are total");
    FiniteMatrix {
        alg,
        designated: ValueSet::from_values([U, L1]),
        variant,
    }
}

impl FiniteMatrix {
    pub fn size(&self) -> usize {
        self.alg.size()
    }

    /// The single value of a deterministic operation.
    pub fn apply(&self, c: Conn, args: &[Value]) -> Value {
        self.alg.op(c, args).first().expect("deterministic")
    }

    /// Evaluates `f` under an assignment to its variables, given in the
    /// order of `vars`.
    pub fn eval(&self, f: &Formula, vars: &[String], assignment: &[Value]) -> Value {
        match f {
            Formula::Var(v) => assignment[vars.iter().position(|w| w == v).expect("assigned")],
            Formula::App(c, args) => {
                let vals: Vec<Value> = args
                    .iter()
                    .map(|a| self.eval(a, vars, assignment))
                    .collect();
                self.apply(*c, &vals)
            }
        }
    }

    fn assignments(&self, k: usize) -> impl Iterator<Item = Vec<Value>> + '_ {
        let size = self.size();
        (0..size.pow(k as u32)).map(move |mut idx| {
            let mut out = vec![0; k];
            for slot in out.iter_mut().rev() {
                *slot = idx % size;
                idx /= size;
            }
            out
        })
    }

    /// Does every assignment of schema letters send `schema` into `set`?
    pub fn lands_in(&self, schema: &Formula, set: ValueSet) -> Result<bool> {
        self.alg.sig().admits(schema)?;
        let vars = schema.variables();
        Ok(self
            .assignments(vars.len())
            .all(|asg| set.contains(self.eval(schema, &vars, &asg))))
    }
}

/// True iff `schema` is designated under every assignment.
pub fn models_schema(m: &FiniteMatrix, schema: &Formula) -> Result<bool> {
    m.lands_in(schema, m.designated)
}

/// A named axiom schema; variables act as schema letters.
#[derive(Clone, Debug)]
pub struct Schema {
    pub name: &'static str,
    pub formula: Formula,
}

fn schema(name: &'static str, text: &str) -> Schema {
    Schema {
        name,
        formula: parse(text, &Signature::nbi()).expect("static schema parses"),
    }
}

/// Positive axioms plus `Ax9*`, `Ip` and `Comm`.
pub fn bi_schemata() -> Vec<Schema> {
    vec![
        schema("Ax1", "a -> (b -> a)"),
        schema("Ax2", "(a -> (b -> c)) -> ((a -> b) -> (a -> c))"),
        schema("Ax3", "a -> (b -> (a & b))"),
        schema("Ax4", "(a & b) -> a"),
        schema("Ax5", "(a & b) -> b"),
        schema("Ax6", "a -> (a | b)"),
        schema("Ax7", "b -> (a | b)"),
        schema("Ax8", "(a -> c) -> ((b -> c) -> ((a | b) -> c))"),
        schema("Ax9*", "(a -> b) | a"),
        schema("Ip", "(a ^ b) -> (a -> (b -> c))"),
        schema("Comm", "(a ^ b) -> (b ^ a)"),
    ]
}

pub fn ax11() -> Schema {
    schema("Ax11*", "a | !a")
}
pub fn ciw_star() -> Schema {
    schema("ciw*", "(a ^ !a) | (a & !a)")
}
pub fn ci_star() -> Schema {
    schema("ci*", "!(a ^ !a) -> (a & !a)")
}
pub fn cl_star() -> Schema {
    schema("cl*", "!(a & !a) -> (a ^ !a)")
}

/// `((α∧β) → ⊥_{αβ}) → (α↑β)`.
pub fn ex_schema() -> Schema {
    let (a, b) = (Formula::var("a"), Formula::var("b"));
    let f = Formula::imp(
        Formula::imp(Formula::and(a.clone(), b.clone()), bottom_raw(&a, &b)),
        Formula::up(a, b),
    );
    Schema {
        name: "Ex",
        formula: f,
    }
}

/// `Ip`, `Comm`, `Ex` and the `↑` forms of `ciw`, `ci`, `cl`.
pub fn up_schemata() -> Vec<Schema> {
    let bi = bi_schemata();
    vec![
        bi[9].clone(),
        bi[10].clone(),
        ex_schema(),
        schema("ciw↑", "(a ^ b) | (a & b)"),
        schema("ci↑", "!(a ^ b) -> (a & b)"),
        schema("cl↑", "!(a & b) -> (a ^ b)"),
    ]
}

/// The axiom list of a logic of the `bI` family.
pub fn axioms_for(logic_id: &str) -> Result<Vec<Schema>> {
    let mut out = bi_schemata();
    let extra: Vec<Schema> = match logic_id.to_ascii_lowercase().as_str() {
        "bi" => vec![],
        "nbi" => vec![ax11()],
        "nbiciw" => vec![ax11(), ciw_star()],
        "nbici" => vec![ax11(), ci_star()],
        "nbicl" => vec![ax11(), cl_star()],
        _ => return Err(Error::UnknownLogic(logic_id.to_string())),
    };
    out.extend(extra);
    Ok(out)
}

/// Every axiom instance lands in `f`, and `f` is closed under detachment.
pub fn is_logic_filter(m: &FiniteMatrix, logic_id: &str, f: ValueSet) -> Result<bool> {
    for ax in axioms_for(logic_id)? {
        if !m.lands_in(&ax.formula, f)? {
            return Ok(false);
        }
    }
    for x in f.iter() {
        for y in 0..m.size() {
            if f.contains(m.apply(Conn::Imp, &[x, y])) && !f.contains(y) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// A partition of the carrier as canonical block labels (first occurrence
/// order).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Congruence {
    pub blocks: Vec<usize>,
}

impl Congruence {
    pub fn identity(k: usize) -> Self {
        Congruence {
            blocks: (0..k).collect(),
        }
    }

    pub fn total(k: usize) -> Self {
        Congruence { blocks: vec![0; k] }
    }

    pub fn related(&self, x: Value, y: Value) -> bool {
        self.blocks[x] == self.blocks[y]
    }

    pub fn block_count(&self) -> usize {
        self.blocks.iter().max().map_or(0, |m| m + 1)
    }

    /// Is every pair related by `self` also related by `other`?
    pub fn refines(&self, other: &Congruence) -> bool {
        let k = self.blocks.len();
        (0..k).all(|x| (0..k).all(|y| !self.related(x, y) || other.related(x, y)))
    }

    /// Blocks as value-name lists, e.g. `{u,1}{a}{b}{0}`.
    pub fn format(&self, m: &Multialgebra) -> String {
        let mut out = String::new();
        for b in 0..self.block_count() {
            let names: Vec<&str> = (0..self.blocks.len())
                .filter(|&v| self.blocks[v] == b)
                .map(|v| m.name(v))
                .collect();
            out.push_str(&format!("{{{}}}", names.join(",")));
        }
        out
    }
}

impl fmt::Display for Congruence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.blocks)
    }
}

/// Largest carrier [`enumerate_congruences`] accepts.
pub const MAX_CONGRUENCE_CARRIER: usize = 8;

fn set_partitions(k: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, max: usize, k: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == k {
            out.push(prefix.clone());
            return;
        }
        let next = if prefix.is_empty() { 0 } else { max + 1 };
        for b in 0..=next {
            prefix.push(b);
            go(prefix, max.max(b), k, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if k == 0 {
        out.push(Vec::new());
    } else {
        go(&mut Vec::new(), 0, k, &mut out);
    }
    out
}

fn compatible(m: &FiniteMatrix, theta: &Congruence) -> bool {
    let k = m.size();
    for &c in &Conn::ALL {
        if !m.alg.sig().contains(c) {
            continue;
        }
        if c.arity() == 1 {
            for x in 0..k {
                for y in 0..k {
                    if theta.related(x, y) && !theta.related(m.apply(c, &[x]), m.apply(c, &[y])) {
                        return false;
                    }
                }
            }
        } else {
            for x1 in 0..k {
                for y1 in (0..k).filter(|&y1| theta.related(x1, y1)) {
                    for x2 in 0..k {
                        for y2 in (0..k).filter(|&y2| theta.related(x2, y2)) {
                            if !theta.related(m.apply(c, &[x1, x2]), m.apply(c, &[y1, y2])) {
                                return false;
                            }
                        }
                    }
                }
            }
        }
    }
    true
}

/// All partitions of the carrier compatible with every operation.
pub fn enumerate_congruences(m: &FiniteMatrix) -> Result<Vec<Congruence>> {
    if m.size() > MAX_CONGRUENCE_CARRIER {
        return Err(Error::CarrierTooLarge(m.size()));
    }
    Ok(set_partitions(m.size())
        .into_iter()
        .map(|blocks| Congruence { blocks })
        .filter(|t| compatible(m, t))
        .collect())
}

/// The largest congruence `θ` such that `xθy` and `x ∈ f` imply `y ∈ f`.
pub fn leibniz_congruence(m: &FiniteMatrix, f: ValueSet) -> Result<Congruence> {
    let fits: Vec<Congruence> = enumerate_congruences(m)?
        .into_iter()
        .filter(|t| {
            (0..m.size())
                .all(|x| (0..m.size()).all(|y| !t.related(x, y) || f.contains(x) == f.contains(y)))
        })
        .collect();
    fits.iter()
        .find(|t| fits.iter().all(|o| o.refines(t)))
        .cloned()
        .ok_or_else(|| Error::Invalid("no largest compatible congruence".into()))
}

fn p(i: usize) -> Formula {
    Formula::var(&format!("p{i}"))
}
fn q(j: usize) -> Formula {
    Formula::var(&format!("q{j}"))
}

/// `Γ_n`: `p_i↑q_j` for `i < j`, and its strong negation otherwise.
pub fn gamma_family(n: usize) -> Vec<Formula> {
    let mut out = Vec::with_capacity((n + 1) * (n + 1));
    for i in 0..=n {
        for j in 0..=n {
            let up = Formula::up(p(i), q(j));
            out.push(if i < j { up } else { strong_neg_raw(&up) });
        }
    }
    out
}

/// Is there an admissible `bI` valuation designating all of `Γ_n`, refuting
/// `p0`, and giving `p_i↑q_j` the value `1` exactly when `i < j`?
pub fn gamma_pattern_admissible(n: usize) -> Result<bool> {
    let spec = get_logic("bI", None)?;
    let mut pins: Vec<(Formula, ValueSet)> = gamma_family(n)
        .into_iter()
        .map(|g| (g, spec.designated()))
        .collect();
    pins.push((p(0), ValueSet::single(ZERO)));
    for i in 0..=n {
        for j in 0..=n {
            pins.push((
                Formula::up(p(i), q(j)),
                ValueSet::single(if i < j { ONE } else { ZERO }),
            ));
        }
    }
    Ok(find_valuation(&spec, &[], &pins)?.is_some())
}

/// One line of the metatheory report.
#[derive(Clone, Debug)]
pub struct Claim {
    pub name: String,
    pub pass: bool,
}

/// Runs every check and reports each claim.
pub fn report() -> Result<Vec<Claim>> {
    let mut out = Vec::new();
    let mut claim = |name: String, pass: bool| out.push(Claim { name, pass });
    let l = lewin_matrix(Variant::BI);
    let ln = lewin_matrix(Variant::NbI);
    for s in bi_schemata() {
        claim(
            format!("L validates {}", s.name),
            models_schema(&l, &s.formula)?,
        );
    }
    claim(
        "L is closed under detachment into D".into(),
        is_logic_filter(&l, "bI", l.designated)?,
    );
    for s in [ax11(), ciw_star(), ci_star(), cl_star()] {
        claim(
            format!("L_nbI validates {}", s.name),
            models_schema(&ln, &s.formula)?,
        );
    }
    let k = l.size();
    for (m, label) in [(&l, "L"), (&ln, "L_nbI")] {
        let cs = enumerate_congruences(m)?;
        claim(
            format!("congruences of {label} are exactly identity and total"),
            cs.len() == 2
                && cs.contains(&Congruence::identity(k))
                && cs.contains(&Congruence::total(k)),
        );
    }
    let fa = ValueSet::from_values([U, L1, A]);
    let fb = ValueSet::from_values([U, L1, B]);
    claim("F_a is a bI-filter".into(), is_logic_filter(&l, "bI", fa)?);
    claim("F_b is a bI-filter".into(), is_logic_filter(&l, "bI", fb)?);
    let (oa, ob) = (leibniz_congruence(&l, fa)?, leibniz_congruence(&l, fb)?);
    claim(
        "Leibniz congruences of F_a and F_b are both the identity".into(),
        oa == Congruence::identity(k) && ob == Congruence::identity(k),
    );
    let bi = get_logic("bI", None)?;
    for n in 0..=2 {
        let v = entails(&bi, &gamma_family(n), &p(0))?;
        claim(format!("Gamma_{n} does not entail p0 in bI"), !v.valid);
        claim(
            format!("Gamma_{n} countermodel pattern is admissible"),
            gamma_pattern_admissible(n)?,
        );
    }
    Ok(out)
}


#[cfg(test)]
mod report_tests {
    #[test]
    fn every_claim_passes() {
        let r = super::report().unwrap();
        let failed: Vec<_> = r
            .iter()
            .filter(|c| !c.pass)
            .map(|c| c.name.clone())
            .collect();
        assert!(failed.is_empty(), "{failed:?}");
    }
}
