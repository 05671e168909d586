//! Signatures, formula trees, the ASCII concrete syntax, and the derived
//! formula schemes (iterated consistency powers, defined bottom, strong
//! negation).
//!
//! Concrete syntax, tightest binding first:
//!
//! | token | connective | arity | associativity |
//! |-------|------------|-------|---------------|
//! | `!`   | ¬          | 1     | prefix        |
//! | `*`   | ∘          | 1     | prefix        |
//! | `^`   | ↑          | 2     | left          |
//! | `&`   | ∧          | 2     | left          |
//! | `\|`  | ∨          | 2     | left          |
//! | `->`  | →          | 2     | right         |

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

/// A primitive connective.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Conn {
    Neg,
    Circ,
    And,
    Or,
    Imp,
    Up,
}

impl Conn {
    pub const ALL: [Conn; 6] = [
        Conn::Neg,
        Conn::Circ,
        Conn::And,
        Conn::Or,
        Conn::Imp,
        Conn::Up,
    ];

    pub fn arity(self) -> usize {
        match self {
            Conn::Neg | Conn::Circ => 1,
            _ => 2,
        }
    }

    /// ASCII token used by the parser and printer.
    pub fn token(self) -> &'static str {
        match self {
            Conn::Neg => "!",
            Conn::Circ => "*",
            Conn::And => "&",
            Conn::Or => "|",
            Conn::Imp => "->",
            Conn::Up => "^",
        }
    }

    /// Mathematical symbol, used in error messages and table dumps.
    pub fn symbol(self) -> &'static str {
        match self {
            Conn::Neg => "¬",
            Conn::Circ => "∘",
            Conn::And => "∧",
            Conn::Or => "∨",
            Conn::Imp => "→",
            Conn::Up => "↑",
        }
    }

    fn precedence(self) -> u8 {
        match self {
            Conn::Imp => 1,
            Conn::Or => 2,
            Conn::And => 3,
            Conn::Up => 4,
            Conn::Neg | Conn::Circ => 5,
        }
    }
}

impl fmt::Display for Conn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// A named set of connectives.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Signature {
    pub name: String,
    pub connectives: Vec<Conn>,
}

impl Signature {
    pub fn new(name: &str, connectives: &[Conn]) -> Result<Self> {
        for (i, c) in connectives.iter().enumerate() {
            if connectives[..i].contains(c) {
                return Err(Error::Invalid(format!(
                    "signature {name} lists connective {c} twice"
                )));
            }
        }
        Ok(Signature {
            name: name.to_string(),
            connectives: connectives.to_vec(),
        })
    }

    /// {¬, ∨, ∧, →}
    pub fn c() -> Self {
        Signature {
            name: "SigC".into(),
            connectives: vec![Conn::Neg, Conn::Or, Conn::And, Conn::Imp],
        }
    }

    /// {∨, ∧, →, ↑}
    pub fn bi() -> Self {
        Signature {
            name: "SigBI".into(),
            connectives: vec![Conn::Or, Conn::And, Conn::Imp, Conn::Up],
        }
    }

    /// {¬, ∨, ∧, →, ↑}
    pub fn nbi() -> Self {
        Signature {
            name: "SigNBI".into(),
            connectives: vec![Conn::Neg, Conn::Or, Conn::And, Conn::Imp, Conn::Up],
        }
    }

    /// {¬, ∘, ∨, ∧, →}
    pub fn lfi() -> Self {
        Signature {
            name: "SigLFI".into(),
            connectives: vec![Conn::Neg, Conn::Circ, Conn::Or, Conn::And, Conn::Imp],
        }
    }

    pub fn contains(&self, c: Conn) -> bool {
        self.connectives.contains(&c)
    }

    /// `(symbol, arity)` pairs.
    pub fn arities(&self) -> Vec<(&'static str, usize)> {
        self.connectives
            .iter()
            .map(|c| (c.symbol(), c.arity()))
            .collect()
    }

    pub fn require(&self, c: Conn) -> Result<()> {
        if self.contains(c) {
            Ok(())
        } else {
            Err(Error::MissingConnective {
                symbol: c.symbol().to_string(),
                signature: self.name.clone(),
            })
        }
    }

    /// Checks every connective of `f` against this signature.
    pub fn admits(&self, f: &Formula) -> Result<()> {
        match f {
            Formula::Var(_) => Ok(()),
            Formula::App(c, args) => {
                if !self.contains(*c) {
                    return Err(Error::SignatureMismatch {
                        symbol: c.symbol().to_string(),
                        signature: self.name.clone(),
                    });
                }
                args.iter().try_for_each(|a| self.admits(a))
            }
        }
    }
}

/// A propositional formula.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    Var(String),
    App(Conn, Vec<Formula>),
}

impl Formula {
    pub fn var(name: &str) -> Self {
        Formula::Var(name.to_string())
    }
    pub fn neg(a: Formula) -> Self {
        Formula::App(Conn::Neg, vec![a])
    }
    pub fn circ(a: Formula) -> Self {
        Formula::App(Conn::Circ, vec![a])
    }
    pub fn and(a: Formula, b: Formula) -> Self {
        Formula::App(Conn::And, vec![a, b])
    }
    pub fn or(a: Formula, b: Formula) -> Self {
        Formula::App(Conn::Or, vec![a, b])
    }
    pub fn imp(a: Formula, b: Formula) -> Self {
        Formula::App(Conn::Imp, vec![a, b])
    }
    pub fn up(a: Formula, b: Formula) -> Self {
        Formula::App(Conn::Up, vec![a, b])
    }
    pub fn app(c: Conn, args: Vec<Formula>) -> Self {
        debug_assert_eq!(c.arity(), args.len());
        Formula::App(c, args)
    }

    pub fn is_var(&self) -> bool {
        matches!(self, Formula::Var(_))
    }

    pub fn conn(&self) -> Option<Conn> {
        match self {
            Formula::Var(_) => None,
            Formula::App(c, _) => Some(*c),
        }
    }

    pub fn args(&self) -> &[Formula] {
        match self {
            Formula::Var(_) => &[],
            Formula::App(_, a) => a,
        }
    }

    /// Argument of a unary application with connective `c`.
    pub fn unary(&self, c: Conn) -> Option<&Formula> {
        match self {
            Formula::App(d, a) if *d == c && a.len() == 1 => Some(&a[0]),
            _ => None,
        }
    }

    /// Arguments of a binary application with connective `c`.
    pub fn binary(&self, c: Conn) -> Option<(&Formula, &Formula)> {
        match self {
            Formula::App(d, a) if *d == c && a.len() == 2 => Some((&a[0], &a[1])),
            _ => None,
        }
    }

    pub fn complexity(&self) -> usize {
        complexity(self)
    }

    /// Variables in order of first occurrence.
    pub fn variables(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut Vec<String>) {
        match self {
            Formula::Var(v) => {
                if !out.contains(v) {
                    out.push(v.clone());
                }
            }
            Formula::App(_, args) => args.iter().for_each(|a| a.collect_vars(out)),
        }
    }

    /// Number of nodes in the tree.
    pub fn size(&self) -> usize {
        1 + self.args().iter().map(Formula::size).sum::<usize>()
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(self))
    }
}

impl fmt::Debug for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "`{}`", render(self))
    }
}

/// 0 on variables, one more than the deepest argument otherwise.
pub fn complexity(f: &Formula) -> usize {
    match f {
        Formula::Var(_) => 0,
        Formula::App(_, args) => 1 + args.iter().map(complexity).max().unwrap_or(0),
    }
}

// ---------------------------------------------------------------------------
// Parsing

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Ident(String),
    Op(Conn),
    LParen,
    RParen,
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>> {
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let (pos, ch) = chars[i];
        match ch {
            c if c.is_whitespace() => i += 1,
            '(' => {
                out.push((Tok::LParen, pos));
                i += 1;
            }
            ')' => {
                out.push((Tok::RParen, pos));
                i += 1;
            }
            '!' => {
                out.push((Tok::Op(Conn::Neg), pos));
                i += 1;
            }
            '*' => {
                out.push((Tok::Op(Conn::Circ), pos));
                i += 1;
            }
            '&' => {
                out.push((Tok::Op(Conn::And), pos));
                i += 1;
            }
            '|' => {
                out.push((Tok::Op(Conn::Or), pos));
                i += 1;
            }
            '^' => {
                out.push((Tok::Op(Conn::Up), pos));
                i += 1;
            }
            '-' => {
                if i + 1 < chars.len() && chars[i + 1].1 == '>' {
                    out.push((Tok::Op(Conn::Imp), pos));
                    i += 2;
                } else {
                    return Err(Error::Parse {
                        pos,
                        msg: "expected '->'".into(),
                    });
                }
            }
            c if c.is_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len()
                    && (chars[i].1.is_alphanumeric() || chars[i].1 == '_' || chars[i].1 == '\'')
                {
                    i += 1;
                }
                let name: String = chars[start..i].iter().map(|(_, c)| *c).collect();
                out.push((Tok::Ident(name), pos));
            }
            other => {
                return Err(Error::Parse {
                    pos,
                    msg: format!("unexpected character '{other}'"),
                });
            }
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    at: usize,
    end: usize,
    sig: &'a Signature,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(t, _)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map(|(_, p)| *p).unwrap_or(self.end)
    }

    fn check(&self, c: Conn) -> Result<()> {
        if self.sig.contains(c) {
            Ok(())
        } else {
            Err(Error::NotInSignature {
                symbol: c.symbol().to_string(),
                signature: self.sig.name.clone(),
                pos: self.pos(),
            })
        }
    }

    fn binary_level(&mut self, level: u8) -> Result<Formula> {
        if level == Conn::Imp.precedence() {
            let lhs = self.binary_level(level + 1)?;
            if self.peek() == Some(&Tok::Op(Conn::Imp)) {
                self.check(Conn::Imp)?;
                self.at += 1;
                let rhs = self.binary_level(level)?;
                return Ok(Formula::imp(lhs, rhs));
            }
            return Ok(lhs);
        }
        if level >= Conn::Neg.precedence() {
            return self.unary();
        }
        let mut lhs = self.binary_level(level + 1)?;
        while let Some(Tok::Op(c)) = self.peek() {
            let c = *c;
            if c.arity() != 2 || c.precedence() != level {
                break;
            }
            self.check(c)?;
            self.at += 1;
            let rhs = self.binary_level(level + 1)?;
            lhs = Formula::app(c, vec![lhs, rhs]);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Formula> {
        match self.peek().cloned() {
            Some(Tok::Op(c)) if c.arity() == 1 => {
                self.check(c)?;
                self.at += 1;
                let a = self.unary()?;
                Ok(Formula::app(c, vec![a]))
            }
            Some(Tok::Ident(name)) => {
                self.at += 1;
                Ok(Formula::Var(name))
            }
            Some(Tok::LParen) => {
                self.at += 1;
                let f = self.binary_level(1)?;
                if self.peek() != Some(&Tok::RParen) {
                    return Err(Error::Parse {
                        pos: self.pos(),
                        msg: "expected ')'".into(),
                    });
                }
                self.at += 1;
                Ok(f)
            }
            Some(Tok::RParen) => Err(Error::Parse {
                pos: self.pos(),
                msg: "unexpected ')'".into(),
            }),
            Some(Tok::Op(c)) => Err(Error::Parse {
                pos: self.pos(),
                msg: format!("unexpected binary operator '{}'", c.token()),
            }),
            None => Err(Error::Parse {
                pos: self.pos(),
                msg: "unexpected end of input".into(),
            }),
        }
    }
}

/// Parses `text` over `sig`.
pub fn parse(text: &str, sig: &Signature) -> Result<Formula> {
    let toks = lex(text)?;
    let mut p = Parser {
        toks,
        at: 0,
        end: text.len(),
        sig,
    };
    let f = p.binary_level(1)?;
    if p.at != p.toks.len() {
        return Err(Error::Parse {
            pos: p.pos(),
            msg: "trailing input".into(),
        });
    }
    Ok(f)
}

// ---------------------------------------------------------------------------
// Printing

fn prec_of(f: &Formula) -> u8 {
    match f {
        Formula::Var(_) => 6,
        Formula::App(c, _) => c.precedence(),
    }
}

fn render_into(f: &Formula, min_prec: u8, out: &mut String) {
    let paren = prec_of(f) < min_prec;
    if paren {
        out.push('(');
    }
    match f {
        Formula::Var(v) => out.push_str(v),
        Formula::App(c, args) if args.len() == 1 => {
            out.push_str(c.token());
            render_into(&args[0], c.precedence(), out);
        }
        Formula::App(c, args) => {
            let p = c.precedence();
            let (lp, rp) = if *c == Conn::Imp {
                (p + 1, p)
            } else {
                (p, p + 1)
            };
            render_into(&args[0], lp, out);
            out.push(' ');
            out.push_str(c.token());
            out.push(' ');
            render_into(&args[1], rp, out);
        }
    }
    if paren {
        out.push(')');
    }
}

/// ASCII rendering with the fewest parentheses that still reparse to `f`.
pub fn render(f: &Formula) -> String {
    let mut s = String::new();
    render_into(f, 0, &mut s);
    s
}

// ---------------------------------------------------------------------------
// Closures

/// A subformula-closed list ordered by complexity, with O(1) lookup.
#[derive(Clone, Debug, Default)]
pub struct Closure {
    formulas: Vec<Formula>,
    index: HashMap<Formula, usize>,
}

impl Closure {
    pub fn from_formulas(fs: &[Formula]) -> Self {
        let list = subformula_closure(fs);
        Self::from_sorted(list)
    }

    fn from_sorted(formulas: Vec<Formula>) -> Self {
        let index = formulas
            .iter()
            .enumerate()
            .map(|(i, f)| (f.clone(), i))
            .collect();
        Closure { formulas, index }
    }

    pub fn formulas(&self) -> &[Formula] {
        &self.formulas
    }

    pub fn len(&self) -> usize {
        self.formulas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.formulas.is_empty()
    }

    pub fn position(&self, f: &Formula) -> Option<usize> {
        self.index.get(f).copied()
    }

    pub fn contains(&self, f: &Formula) -> bool {
        self.index.contains_key(f)
    }

    /// Adds formulas (and their subformulas), keeping the existing order for
    /// ties.
    pub fn extend(&self, extra: &[Formula]) -> Self {
        let mut all = self.formulas.clone();
        all.extend(extra.iter().cloned());
        Self::from_sorted(subformula_closure(&all))
    }
}

fn post_order<'a>(f: &'a Formula, out: &mut Vec<&'a Formula>) {
    for a in f.args() {
        post_order(a, out);
    }
    out.push(f);
}

/// Every subformula of every input, once, sorted by complexity; ties keep the
/// order of first appearance in a left-to-right post-order walk.
pub fn subformula_closure(fs: &[Formula]) -> Vec<Formula> {
    let mut walk = Vec::new();
    for f in fs {
        post_order(f, &mut walk);
    }
    let mut seen = std::collections::HashSet::new();
    let mut out: Vec<(usize, Formula)> = Vec::new();
    for f in walk {
        if seen.insert(f) {
            out.push((complexity(f), f.clone()));
        }
    }
    out.sort_by_key(|(c, _)| *c);
    out.into_iter().map(|(_, f)| f).collect()
}

// ---------------------------------------------------------------------------
// Substitution

/// Homomorphic replacement of variables; variables outside `s` stay put.
pub fn substitute(f: &Formula, s: &HashMap<String, Formula>, sig: &Signature) -> Result<Formula> {
    for img in s.values() {
        sig.admits(img)?;
    }
    sig.admits(f)?;
    Ok(substitute_unchecked(f, s))
}

pub(crate) fn substitute_unchecked(f: &Formula, s: &HashMap<String, Formula>) -> Formula {
    match f {
        Formula::Var(v) => s.get(v).cloned().unwrap_or_else(|| f.clone()),
        Formula::App(c, args) => Formula::App(
            *c,
            args.iter().map(|a| substitute_unchecked(a, s)).collect(),
        ),
    }
}

// ---------------------------------------------------------------------------
// Derived schemes

/// `a⁰ = a`, `aⁿ⁺¹ = ¬(aⁿ ∧ ¬aⁿ)`.
pub fn pow(a: &Formula, n: usize, sig: &Signature) -> Result<Formula> {
    sig.require(Conn::Neg)?;
    sig.require(Conn::And)?;
    Ok(pow_raw(a, n))
}

pub(crate) fn pow_raw(a: &Formula, n: usize) -> Formula {
    let mut f = a.clone();
    for _ in 0..n {
        f = Formula::neg(Formula::and(f.clone(), Formula::neg(f)));
    }
    f
}

/// `a⁽¹⁾ = a¹`, `a⁽ⁿ⁺¹⁾ = a⁽ⁿ⁾ ∧ aⁿ⁺¹`.
pub fn pow_conj(a: &Formula, n: usize, sig: &Signature) -> Result<Formula> {
    sig.require(Conn::Neg)?;
    sig.require(Conn::And)?;
    if n == 0 {
        return Err(Error::Invalid("pow_conj needs n >= 1".into()));
    }
    Ok(pow_conj_raw(a, n))
}

pub(crate) fn pow_conj_raw(a: &Formula, n: usize) -> Formula {
    let mut f = pow_raw(a, 1);
    for k in 2..=n {
        f = Formula::and(f, pow_raw(a, k));
    }
    f
}

/// `a ∧ (b ∧ (a ↑ b))`.
pub fn defined_bottom(a: &Formula, b: &Formula, sig: &Signature) -> Result<Formula> {
    sig.require(Conn::And)?;
    sig.require(Conn::Up)?;
    Ok(bottom_raw(a, b))
}

pub(crate) fn bottom_raw(a: &Formula, b: &Formula) -> Formula {
    Formula::and(
        a.clone(),
        Formula::and(b.clone(), Formula::up(a.clone(), b.clone())),
    )
}

/// `a → (a ∧ (a ∧ (a ↑ a)))`.
pub fn strong_negation(a: &Formula, sig: &Signature) -> Result<Formula> {
    sig.require(Conn::Imp)?;
    sig.require(Conn::And)?;
    sig.require(Conn::Up)?;
    Ok(strong_neg_raw(a))
}

pub(crate) fn strong_neg_raw(a: &Formula) -> Formula {
    Formula::imp(a.clone(), bottom_raw(a, a))
}

/// Left-associated conjunction of a non-empty list.
pub fn conjoin(fs: &[Formula]) -> Option<Formula> {
    let mut it = fs.iter().cloned();
    let first = it.next()?;
    Some(it.fold(first, Formula::and))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Formula {
        parse(s, &Signature::nbi()).unwrap()
    }

    #[test]
    fn grammar_shapes() {
        let c = Signature::c();
        assert_eq!(
            parse("p1 -> (p2 -> p1)", &c).unwrap(),
            Formula::imp(
                Formula::var("p1"),
                Formula::imp(Formula::var("p2"), Formula::var("p1"))
            )
        );
        assert_eq!(
            parse("!(p & !p)", &c).unwrap(),
            Formula::neg(Formula::and(
                Formula::var("p"),
                Formula::neg(Formula::var("p"))
            ))
        );
        match parse("p ^ q", &c) {
            Err(Error::NotInSignature { symbol, pos, .. }) => {
                assert_eq!(symbol, "↑");
                assert_eq!(pos, 2);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn precedence_and_associativity() {
        assert_eq!(
            p("a | b & c"),
            Formula::or(
                Formula::var("a"),
                Formula::and(Formula::var("b"), Formula::var("c"))
            )
        );
        assert_eq!(
            p("a & b ^ c"),
            Formula::and(
                Formula::var("a"),
                Formula::up(Formula::var("b"), Formula::var("c"))
            )
        );
        assert_eq!(
            p("a & b & c"),
            Formula::and(
                Formula::and(Formula::var("a"), Formula::var("b")),
                Formula::var("c")
            )
        );
        assert_eq!(
            p("a -> b -> c"),
            Formula::imp(
                Formula::var("a"),
                Formula::imp(Formula::var("b"), Formula::var("c"))
            )
        );
        assert_eq!(
            p("!a ^ b"),
            Formula::up(Formula::neg(Formula::var("a")), Formula::var("b"))
        );
    }

    #[test]
    fn parse_errors_have_positions() {
        let s = Signature::nbi();
        assert!(matches!(parse("p &", &s), Err(Error::Parse { pos: 3, .. })));
        assert!(matches!(parse("(p", &s), Err(Error::Parse { pos: 2, .. })));
        assert!(matches!(
            parse("p $ q", &s),
            Err(Error::Parse { pos: 2, .. })
        ));
        assert!(matches!(
            parse("p - q", &s),
            Err(Error::Parse { pos: 2, .. })
        ));
        assert!(matches!(parse("p q", &s), Err(Error::Parse { pos: 2, .. })));
    }

    #[test]
    fn minimal_rendering() {
        assert_eq!(render(&p("p -> (q -> p)")), "p -> q -> p");
        assert_eq!(render(&p("(p -> q) -> p")), "(p -> q) -> p");
        assert_eq!(render(&p("p & !p")), "p & !p");
        assert_eq!(render(&p("p ^ !p")), "p ^ !p");
        assert_eq!(render(&p("(a & b) & c")), "a & b & c");
        assert_eq!(render(&p("a & (b & c)")), "a & (b & c)");
        assert_eq!(render(&p("!(a ^ b)")), "!(a ^ b)");
    }

    #[test]
    fn complexity_values() {
        assert_eq!(complexity(&p("p")), 0);
        assert_eq!(complexity(&p("!p")), 1);
        assert_eq!(complexity(&p("p & !p")), 2);
    }

    #[test]
    fn closure_ordering() {
        let names = |fs: Vec<Formula>| fs.iter().map(render).collect::<Vec<_>>();
        assert_eq!(
            names(subformula_closure(&[p("p & q")])),
            ["p", "q", "p & q"]
        );
        assert_eq!(names(subformula_closure(&[p("!!p")])), ["p", "!p", "!!p"]);
        assert_eq!(
            names(subformula_closure(&[p("!!p"), p("!(p & !p)")])),
            ["p", "!p", "!!p", "p & !p", "!(p & !p)"]
        );
    }

    #[test]
    fn substitution() {
        let s = Signature::nbi();
        let mut m = HashMap::new();
        m.insert("p".to_string(), p("q & r"));
        assert_eq!(substitute(&p("p"), &m, &s).unwrap(), p("q & r"));
        let mut m2 = HashMap::new();
        m2.insert("a".to_string(), p("x -> y"));
        assert_eq!(
            substitute(&p("a & !a"), &m2, &s).unwrap(),
            p("(x -> y) & !(x -> y)")
        );
        assert_eq!(
            substitute(&p("a ^ b"), &HashMap::new(), &s).unwrap(),
            p("a ^ b")
        );
        let mut bad = HashMap::new();
        bad.insert("p".to_string(), p("q ^ r"));
        assert!(matches!(
            substitute(&p("!p"), &bad, &Signature::c()),
            Err(Error::SignatureMismatch { .. })
        ));
    }

    #[test]
    fn derived_schemes() {
        let s = Signature::nbi();
        let a = Formula::var("a");
        assert_eq!(pow(&a, 0, &s).unwrap(), a);
        assert_eq!(pow(&a, 1, &s).unwrap(), p("!(a & !a)"));
        assert_eq!(pow(&a, 2, &s).unwrap(), p("!(!(a & !a) & !!(a & !a))"));
        assert_eq!(pow_conj(&a, 1, &s).unwrap(), p("!(a & !a)"));
        assert_eq!(
            pow_conj(&a, 2, &s).unwrap(),
            Formula::and(pow_raw(&a, 1), pow_raw(&a, 2))
        );
        assert_eq!(
            pow_conj(&a, 3, &s).unwrap(),
            Formula::and(Formula::and(pow_raw(&a, 1), pow_raw(&a, 2)), pow_raw(&a, 3))
        );
        assert_eq!(
            defined_bottom(&p("p"), &p("q"), &s).unwrap(),
            p("p & (q & (p ^ q))")
        );
        assert_eq!(
            defined_bottom(&p("p"), &p("p"), &s).unwrap(),
            p("p & (p & (p ^ p))")
        );
        let sn = strong_negation(&p("p"), &s).unwrap();
        assert_eq!(sn, p("p -> p & (p & (p ^ p))"));
        assert_eq!(complexity(&sn), 4);
        assert!(matches!(
            strong_negation(&p("p"), &Signature::c()),
            Err(Error::MissingConnective { .. })
        ));
        assert!(matches!(
            pow(&a, 1, &Signature::bi()),
            Err(Error::MissingConnective { .. })
        ));
    }
}
