//! Finite Boolean algebras presented as powersets of `{a, b, c, …}`.
//!
//! Elements are characteristic bitmasks: bit `i` stands for the `i`-th atom.

use crate::error::{Error, Result};

/// An element of a powerset algebra.
pub type Elem = u32;

/// The powerset algebra over `m` atoms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BooleanAlgebra {
    m: u32,
}

/// Boolean-algebra operation selector for [`ba_eval`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BaOp {
    Meet,
    Join,
    Compl,
    Imp,
    Leq,
}

/// Result of [`ba_eval`]: an element, or a truth value for `Leq`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BaValue {
    Elem(Elem),
    Bool(bool),
}

/// The full powerset algebra over `m` atoms.
pub fn powerset_algebra(m: u32) -> Result<BooleanAlgebra> {
    if m == 0 {
        return Err(Error::Invalid(
            "a Boolean algebra needs at least one atom".into(),
        ));
    }
    if m > 16 {
        return Err(Error::Invalid(format!(
            "{m} atoms is beyond the supported range"
        )));
    }
    Ok(BooleanAlgebra { m })
}

pub fn ba_eval(b: &BooleanAlgebra, op: BaOp, args: &[Elem]) -> Result<BaValue> {
    let want = if op == BaOp::Compl { 1 } else { 2 };
    if args.len() != want {
        return Err(Error::Arity {
            expected: want,
            got: args.len(),
        });
    }
    if let Some(x) = args.iter().find(|&&x| x > b.one()) {
        return Err(Error::UnknownValue(format!("{x:#b}")));
    }
    Ok(match op {
        BaOp::Meet => BaValue::Elem(b.meet(args[0], args[1])),
        BaOp::Join => BaValue::Elem(b.join(args[0], args[1])),
        BaOp::Compl => BaValue::Elem(b.compl(args[0])),
        BaOp::Imp => BaValue::Elem(b.imp(args[0], args[1])),
        BaOp::Leq => BaValue::Bool(b.leq(args[0], args[1])),
    })
}

impl BooleanAlgebra {
    pub fn atoms(&self) -> u32 {
        self.m
    }

    pub fn size(&self) -> usize {
        1 << self.m
    }

    pub fn zero(&self) -> Elem {
        0
    }

    pub fn one(&self) -> Elem {
        (1 << self.m) - 1
    }

    /// All elements in increasing bitmask order.
    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..(1u32 << self.m)
    }

    pub fn meet(&self, x: Elem, y: Elem) -> Elem {
        x & y
    }

    pub fn join(&self, x: Elem, y: Elem) -> Elem {
        x | y
    }

    pub fn compl(&self, x: Elem) -> Elem {
        self.one() & !x
    }

    pub fn imp(&self, x: Elem, y: Elem) -> Elem {
        self.compl(x) | y
    }

    pub fn leq(&self, x: Elem, y: Elem) -> bool {
        x & !y == 0
    }

    /// `{a,c}` style; the empty set prints as `{}`.
    pub fn format(&self, x: Elem) -> String {
        let names: Vec<String> = (0..self.m)
            .filter(|i| x >> i & 1 == 1)
            .map(|i| atom_name(i as usize))
            .collect();
        format!("{{{}}}", names.join(","))
    }

    pub fn parse_elem(&self, text: &str) -> Result<Elem> {
        let inner = text
            .trim()
            .strip_prefix('{')
            .and_then(|s| s.strip_suffix('}'))
            .ok_or_else(|| Error::UnknownValue(text.to_string()))?;
        let mut x = 0;
        for part in inner.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let i = (0..self.m as usize)
                .find(|&i| atom_name(i) == part)
                .ok_or_else(|| Error::UnknownValue(part.to_string()))?;
            x |= 1 << i;
        }
        Ok(x)
    }
}

fn atom_name(i: usize) -> String {
    let letters = b"abcdefghijklmnop";
    (letters[i] as char).to_string()
}
