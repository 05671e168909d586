//! The catalog of built-in logics as ready-made restricted matrices.
//!
//! Two-valued logics use the carrier `1, 0` (in that order, so `1` is value
//! index 0). Three-valued LFIs use `T, t, F`. `C_n` uses the snapshot names.

use crate::algebra::{
    augment, make_rnmatrix, mv, Multialgebra, RNmatrix, RestrictionRule, Value, ValueSet,
};
use crate::error::{Error, Result};
use crate::formula::{Closure, Conn, Formula, Signature};
use crate::snapshots::{restriction_cn, swap_structure, CnValues};

/// Value index of `1` in two-valued carriers.
pub const ONE: Value = 0;
/// Value index of `0` in two-valued carriers.
pub const ZERO: Value = 1;

fn bit(b: bool) -> Value {
    if b {
        ONE
    } else {
        ZERO
    }
}

fn two() -> Vec<String> {
    vec!["1".into(), "0".into()]
}

const T3: Value = 0;
const M3: Value = 1;
const F3: Value = 2;

fn three() -> Vec<String> {
    vec!["T".into(), "t".into(), "F".into()]
}

/// Which tableau calculus a logic uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Calculus {
    Cn(usize),
    Cpl,
    CplUp,
    BI,
    BIminus,
    NbI,
    NbIciw,
    NbIci,
    NbIcl,
    MbCcl,
    Cila,
}

/// A built-in logic.
#[derive(Clone, Debug)]
pub struct LogicSpec {
    pub id: String,
    pub level: Option<usize>,
    pub sig: Signature,
    pub matrix: RNmatrix,
    pub calculus: Option<Calculus>,
}

impl LogicSpec {
    /// Adds the auxiliary formulas this logic's rules need to be checked
    /// locally.
    pub fn augment_closure(&self, closure: &Closure) -> Closure {
        augment(&self.matrix.rules, closure)
    }

    pub fn alg(&self) -> &Multialgebra {
        &self.matrix.alg
    }

    pub fn designated(&self) -> ValueSet {
        self.matrix.designated
    }

    pub fn undesignated(&self) -> ValueSet {
        self.matrix.undesignated()
    }
}

/// Logic identifiers accepted by [`get_logic`]. `Cn` stands for the whole
/// hierarchy and takes a level.
pub fn list_logics() -> Vec<&'static str> {
    vec![
        "CPL", "CPLup", "Cn", "C1", "C2", "C3", "mbC", "mbCciw", "mbCci", "mbCcl", "Ci", "Cila",
        "bI", "bIminus", "bIpr", "nbI", "nbIciw", "nbIci", "nbIcl",
    ]
}

/// Builds a logic by name (case-insensitive). `Cn` needs `level`; `C3` style
/// names carry it as a suffix.
pub fn get_logic(name: &str, level: Option<usize>) -> Result<LogicSpec> {
    let lower = name.to_ascii_lowercase();
    if lower == "cn" {
        let n = level.ok_or_else(|| Error::InvalidLevel("Cn needs a level".into()))?;
        return cn(n);
    }
    if let Some(rest) = lower.strip_prefix('c') {
        if !rest.is_empty() && rest.chars().all(|c| c.is_ascii_digit()) {
            let n: usize = rest
                .parse()
                .map_err(|_| Error::InvalidLevel(rest.to_string()))?;
            if let Some(l) = level {
                if l != n {
                    return Err(Error::InvalidLevel(format!(
                        "{name} conflicts with level {l}"
                    )));
                }
            }
            return cn(n);
        }
    }
    if level.is_some() {
        return Err(Error::InvalidLevel(format!("{name} takes no level")));
    }
    match lower.as_str() {
        "cpl" => cpl(),
        "cplup" => cpl_up(),
        "mbc" => mbc(false),
        "mbcci" => mbc(true),
        "mbcciw" => lfi3("mbCciw", false, false),
        "mbccl" => lfi3("mbCcl", false, true),
        "ci" => lfi3("Ci", true, false),
        "cila" => cila(),
        "bi" => bi_family("bI"),
        "biminus" => bi_family("bIminus"),
        "bipr" => bi_family("bIpr"),
        "nbi" => bi_family("nbI"),
        "nbiciw" => bi_family("nbIciw"),
        "nbici" => bi_family("nbIci"),
        "nbicl" => bi_family("nbIcl"),
        _ => Err(Error::UnknownLogic(name.to_string())),
    }
}

fn cn(n: usize) -> Result<LogicSpec> {
    if n == 0 {
        return Err(Error::InvalidLevel("n must be at least 1".into()));
    }
    let alg = swap_structure(n)?;
    let names = CnValues { n }.names();
    let d: Vec<&str> = names[..=n].iter().map(String::as_str).collect();
    let matrix = make_rnmatrix(alg, &d, restriction_cn(n)?)?;
    Ok(LogicSpec {
        id: format!("C{n}"),
        level: Some(n),
        sig: Signature::c(),
        matrix,
        calculus: Some(Calculus::Cn(n)),
    })
}

fn classical(c: Conn, a: &[Value]) -> ValueSet {
    let t = |v: Value| v == ONE;
    ValueSet::single(bit(match c {
        Conn::Neg => !t(a[0]),
        Conn::And => t(a[0]) && t(a[1]),
        Conn::Or => t(a[0]) || t(a[1]),
        Conn::Imp => !t(a[0]) || t(a[1]),
        Conn::Up => !(t(a[0]) && t(a[1])),
        Conn::Circ => true,
    }))
}

fn cpl() -> Result<LogicSpec> {
    let alg = Multialgebra::from_fn(Signature::c(), two(), classical)?;
    let matrix = make_rnmatrix(alg, &["1"], vec![])?;
    Ok(LogicSpec {
        id: "CPL".into(),
        level: None,
        sig: Signature::c(),
        matrix,
        calculus: Some(Calculus::Cpl),
    })
}

fn cpl_up() -> Result<LogicSpec> {
    let alg = Multialgebra::from_fn(Signature::nbi(), two(), classical)?;
    let matrix = make_rnmatrix(alg, &["1"], vec![])?;
    Ok(LogicSpec {
        id: "CPLup".into(),
        level: None,
        sig: Signature::nbi(),
        matrix,
        calculus: Some(Calculus::CplUp),
    })
}

fn a_and_not_a() -> Formula {
    Formula::and(mv("a"), Formula::neg(mv("a")))
}

/// `ν(α) = t` forces `ν(α∧¬α) = T`.
fn cl_rule() -> RestrictionRule {
    let full = ValueSet::full(3);
    RestrictionRule::new("cl", vec![mv("a")]).constrain(a_and_not_a(), move |g| {
        if g[0] == M3 {
            ValueSet::single(T3)
        } else {
            full
        }
    })
}

/// mbCciw, mbCcl and Ci share one shape of three-valued table.
fn lfi3(id: &str, ci: bool, with_cl: bool) -> Result<LogicSpec> {
    let d = ValueSet::from_values([T3, M3]);
    let one = ValueSet::single;
    let alg = Multialgebra::from_fn(Signature::lfi(), three(), move |c, a| match c {
        Conn::Or => {
            if a[0] == F3 && a[1] == F3 {
                one(F3)
            } else {
                d
            }
        }
        Conn::And => {
            if a[0] == F3 || a[1] == F3 {
                one(F3)
            } else {
                d
            }
        }
        Conn::Imp => {
            if a[0] != F3 && a[1] == F3 {
                one(F3)
            } else {
                d
            }
        }
        Conn::Neg => match a[0] {
            T3 => one(F3),
            F3 if ci => one(T3),
            _ => d,
        },
        Conn::Circ => match a[0] {
            M3 => one(F3),
            _ if ci => one(T3),
            _ => d,
        },
        Conn::Up => unreachable!(),
    })?;
    let rules = if with_cl { vec![cl_rule()] } else { vec![] };
    let matrix = make_rnmatrix(alg, &["T", "t"], rules)?;
    let calculus = if with_cl { Some(Calculus::MbCcl) } else { None };
    Ok(LogicSpec {
        id: id.into(),
        level: None,
        sig: Signature::lfi(),
        matrix,
        calculus,
    })
}

fn cila() -> Result<LogicSpec> {
    let c1 = swap_structure(1)?;
    let alg = Multialgebra::from_fn(Signature::lfi(), three(), move |c, a| match c {
        Conn::Circ => ValueSet::single(if a[0] == M3 { F3 } else { T3 }),
        _ => c1.op(c, a),
    })?;
    let matrix = make_rnmatrix(alg, &["T", "t"], vec![cl_rule()])?;
    Ok(LogicSpec {
        id: "Cila".into(),
        level: None,
        sig: Signature::lfi(),
        matrix,
        calculus: Some(Calculus::Cila),
    })
}

fn mbc(ci: bool) -> Result<LogicSpec> {
    let alg = Multialgebra::from_fn(Signature::lfi(), two(), |c, a| match c {
        Conn::Neg if a[0] == ONE => ValueSet::full(2),
        Conn::Circ => ValueSet::full(2),
        _ => classical(c, a),
    })?;
    let full = ValueSet::full(2);
    let circ = Formula::circ(mv("a"));
    let guards = vec![mv("a"), Formula::neg(mv("a"))];
    let mut rules = Vec::new();
    if ci {
        rules.push(
            RestrictionRule::new("circ-iff", guards.clone())
                .constrain(circ.clone(), |g| {
                    ValueSet::single(bit(g[0] == ZERO || g[1] == ZERO))
                })
                .with_aux(circ.clone(), Formula::neg(mv("a"))),
        );
        rules.push(RestrictionRule::new("neg-circ", guards).constrain(
            Formula::neg(circ),
            move |g| {
                if g[0] == ONE && g[1] == ONE {
                    full
                } else {
                    ValueSet::single(ZERO)
                }
            },
        ));
    } else {
        rules.push(
            RestrictionRule::new("circ", guards)
                .constrain(circ.clone(), move |g| {
                    if g[0] == ZERO || g[1] == ZERO {
                        full
                    } else {
                        ValueSet::single(ZERO)
                    }
                })
                .with_aux(circ, Formula::neg(mv("a"))),
        );
    }
    let matrix = make_rnmatrix(alg, &["1"], rules)?;
    let id = if ci { "mbCci" } else { "mbC" };
    Ok(LogicSpec {
        id: id.into(),
        level: None,
        sig: Signature::lfi(),
        matrix,
        calculus: None,
    })
}

fn up(a: Formula, b: Formula) -> Formula {
    Formula::up(a, b)
}

fn comm_rule(with_aux: bool) -> RestrictionRule {
    let r = RestrictionRule::new("comm", vec![up(mv("a"), mv("b"))])
        .constrain(up(mv("b"), mv("a")), |g| ValueSet::single(g[0]));
    if with_aux {
        r.with_aux(up(mv("a"), mv("b")), up(mv("b"), mv("a")))
    } else {
        r
    }
}

fn bi_family(id: &str) -> Result<LogicSpec> {
    let negated = id.starts_with('n');
    let sig = if negated {
        Signature::nbi()
    } else {
        Signature::bi()
    };
    let alg = Multialgebra::from_fn(sig.clone(), two(), |c, a| match c {
        Conn::Up if a == [ONE, ONE] => ValueSet::single(ZERO),
        Conn::Up => ValueSet::full(2),
        Conn::Neg if a[0] == ONE => ValueSet::full(2),
        _ => classical(c, a),
    })?;
    let na = || Formula::neg(mv("a"));
    let a_up_na = || up(mv("a"), na());
    let mut rules = Vec::new();
    let calculus = match id {
        "bI" => {
            rules.push(comm_rule(false));
            Some(Calculus::BI)
        }
        "bIminus" => Some(Calculus::BIminus),
        "bIpr" => {
            rules.push(comm_rule(true));
            let c = mv("c");
            for conn in [Conn::Or, Conn::And] {
                let parent = up(Formula::app(conn, vec![mv("a"), mv("b")]), c.clone());
                let left = up(mv("a"), c.clone());
                let right = up(mv("b"), c.clone());
                let aux = |r: RestrictionRule| {
                    r.with_aux(parent.clone(), left.clone())
                        .with_aux(parent.clone(), right.clone())
                };
                if conn == Conn::Or {
                    rules.push(aux(RestrictionRule::new(
                        "pr-or",
                        vec![left.clone(), right.clone()],
                    )
                    .constrain(parent.clone(), |g| {
                        if g[0] == ONE && g[1] == ONE {
                            ValueSet::single(ONE)
                        } else {
                            ValueSet::full(2)
                        }
                    })));
                } else {
                    for (name, side) in [
                        ("pr-and-left", left.clone()),
                        ("pr-and-right", right.clone()),
                    ] {
                        rules.push(aux(RestrictionRule::new(name, vec![side]).constrain(
                            parent.clone(),
                            |g| {
                                if g[0] == ONE {
                                    ValueSet::single(ONE)
                                } else {
                                    ValueSet::full(2)
                                }
                            },
                        )));
                    }
                }
            }
            None
        }
        "nbI" => {
            rules.push(comm_rule(false));
            Some(Calculus::NbI)
        }
        "nbIciw" | "nbIci" | "nbIcl" => {
            rules.push(comm_rule(true));
            rules.push(
                RestrictionRule::new("ciw", vec![mv("a"), na()]).constrain(a_up_na(), |g| {
                    ValueSet::single(bit(!(g[0] == ONE && g[1] == ONE)))
                }),
            );
            if id == "nbIci" {
                rules.push(
                    RestrictionRule::new("ci", vec![mv("a"), na()])
                        .constrain(Formula::neg(a_up_na()), |g| {
                            ValueSet::single(bit(g[0] == ONE && g[1] == ONE))
                        }),
                );
            }
            if id == "nbIcl" {
                let target = Formula::neg(Formula::and(mv("a"), na()));
                rules.push(
                    RestrictionRule::new("cl", vec![a_up_na()])
                        .constrain(target.clone(), |g| ValueSet::single(g[0]))
                        .with_aux(target, a_up_na()),
                );
            }
            Some(match id {
                "nbIciw" => Calculus::NbIciw,
                "nbIci" => Calculus::NbIci,
                _ => Calculus::NbIcl,
            })
        }
        _ => unreachable!(),
    };
    let matrix = make_rnmatrix(alg, &["1"], rules)?;
    Ok(LogicSpec {
        id: id.into(),
        level: None,
        sig,
        matrix,
        calculus,
    })
}
