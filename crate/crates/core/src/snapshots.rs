//! Snapshot sets and swap multialgebras for the da Costa hierarchy `C_n`.
//!
//! A snapshot for `C_n` over a Boolean algebra `B` is a tuple
//! `(z_1, …, z_{n+1})` of elements of `B` with `(z_1 ∧ … ∧ z_k) ∨ z_{k+1} = 1`
//! for every `1 ≤ k ≤ n`. Over the two-element algebra there are exactly
//! `n + 2` of them, named `T`, `t0`, …, `t{n-1}`, `F`.
//!
//! Carrier order is always designated first, then undesignated; within each
//! half Boolean snapshots come before the others.

use std::collections::HashMap;

use crate::algebra::{mv, Multialgebra, RestrictionRule, Value, ValueSet};
use crate::boolean::{powerset_algebra, BooleanAlgebra, Elem};
use crate::error::{Error, Result};
use crate::formula::{pow_conj_raw, pow_raw, Conn, Formula, Signature};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Snapshot {
    pub coords: Vec<Elem>,
}

impl Snapshot {
    /// `(⋀_{i≤k} z_i) ∨ z_{k+1} = 1` for every `k`.
    pub fn is_valid(&self, b: &BooleanAlgebra) -> bool {
        let mut meet = b.one();
        for k in 0..self.coords.len().saturating_sub(1) {
            meet = b.meet(meet, self.coords[k]);
            if b.join(meet, self.coords[k + 1]) != b.one() {
                return false;
            }
        }
        true
    }

    pub fn format(&self, b: &BooleanAlgebra) -> String {
        let parts: Vec<String> = self.coords.iter().map(|&z| b.format(z)).collect();
        format!("({})", parts.join(","))
    }
}

/// All snapshots of one level over one Boolean algebra.
#[derive(Clone, Debug)]
pub struct SnapshotSpace {
    pub n: usize,
    pub algebra: BooleanAlgebra,
    pub all: Vec<Snapshot>,
    /// Indices into `all` with `z_1 = 1`.
    pub designated: Vec<usize>,
    /// Indices into `all` with `z_1 ∧ z_2 = 0`.
    pub boolean_subset: Vec<usize>,
    pub names: Vec<String>,
}

impl SnapshotSpace {
    pub fn len(&self) -> usize {
        self.all.len()
    }

    pub fn is_empty(&self) -> bool {
        self.all.is_empty()
    }

    pub fn index_of(&self, s: &Snapshot) -> Option<usize> {
        self.all.iter().position(|x| x == s)
    }

    pub fn designated_set(&self) -> ValueSet {
        self.designated.iter().copied().collect()
    }

    pub fn boolean_set(&self) -> ValueSet {
        self.boolean_subset.iter().copied().collect()
    }
}

/// Value indices of the two-valued snapshot carrier `T, t0, …, t{n-1}, F`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CnValues {
    pub n: usize,
}

impl CnValues {
    pub const TOP: Value = 0;

    pub fn t(&self, k: usize) -> Value {
        debug_assert!(k < self.n);
        k + 1
    }

    pub fn f(&self) -> Value {
        self.n + 1
    }

    pub fn size(&self) -> usize {
        self.n + 2
    }

    /// `I_n = {t0, …, t{n-1}}`.
    pub fn middle(&self) -> ValueSet {
        (1..=self.n).collect()
    }

    /// `D_n = I_n ∪ {T}`.
    pub fn designated(&self) -> ValueSet {
        (0..=self.n).collect()
    }

    /// `Some(k)` when `v` is `t_k`.
    pub fn t_index(&self, v: Value) -> Option<usize> {
        (1..=self.n).contains(&v).then(|| v - 1)
    }

    pub fn names(&self) -> Vec<String> {
        let mut out = vec!["T".to_string()];
        out.extend((0..self.n).map(|k| format!("t{k}")));
        out.push("F".to_string());
        out
    }
}

fn check_level(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::InvalidLevel("n must be at least 1".into()))
    } else {
        Ok(())
    }
}

/// The `n + 2` snapshots over the two-element algebra, in the order
/// `T, t0, …, t{n-1}, F`.
pub fn snapshots(n: usize) -> Result<SnapshotSpace> {
    check_level(n)?;
    let b = powerset_algebra(1)?;
    let mut all = Vec::new();
    let mut top = vec![1; n + 1];
    top[1] = 0;
    all.push(Snapshot { coords: top });
    for k in 0..n {
        let mut c = vec![1; n + 1];
        if k + 2 <= n {
            c[k + 2] = 0;
        }
        all.push(Snapshot { coords: c });
    }
    let mut bottom = vec![1; n + 1];
    bottom[0] = 0;
    all.push(Snapshot { coords: bottom });
    let names = CnValues { n }.names();
    Ok(SnapshotSpace {
        n,
        algebra: b,
        designated: (0..=n).collect(),
        boolean_subset: vec![0, n + 1],
        all,
        names,
    })
}

/// All `B`-snapshots for level `n`.
pub fn snapshots_over(n: usize, b: &BooleanAlgebra) -> Result<SnapshotSpace> {
    check_level(n)?;
    let size = b.size();
    let total = size
        .checked_pow((n + 1) as u32)
        .filter(|&t| t <= 1 << 24)
        .ok_or_else(|| Error::Invalid(format!("|B|^(n+1) too large for n={n}, m={}", b.atoms())))?;
    let mut found = Vec::new();
    for idx in 0..total {
        let mut rest = idx;
        let mut coords = vec![0; n + 1];
        for c in coords.iter_mut() {
            *c = (rest % size) as Elem;
            rest /= size;
        }
        let s = Snapshot { coords };
        if s.is_valid(b) {
            found.push(s);
        }
    }
    let group = |s: &Snapshot| {
        let designated = s.coords[0] == b.one();
        let boolean = b.meet(s.coords[0], s.coords[1]) == 0;
        match (designated, boolean) {
            (true, true) => 0,
            (true, false) => 1,
            (false, true) => 2,
            (false, false) => 3,
        }
    };
    found.sort_by(|x, y| {
        group(x)
            .cmp(&group(y))
            .then_with(|| x.coords.cmp(&y.coords))
    });
    let designated = (0..found.len())
        .filter(|&i| group(&found[i]) <= 1)
        .collect();
    let boolean_subset = (0..found.len())
        .filter(|&i| group(&found[i]) % 2 == 0)
        .collect();
    let names = if b.atoms() == 1 {
        CnValues { n }.names()
    } else {
        found.iter().map(|s| s.format(b)).collect()
    };
    Ok(SnapshotSpace {
        n,
        algebra: *b,
        all: found,
        designated,
        boolean_subset,
        names,
    })
}

/// The swap multialgebra `A_Cn` over the two-element algebra, written out
/// from its summary tables.
pub fn swap_structure(n: usize) -> Result<Multialgebra> {
    check_level(n)?;
    let cv = CnValues { n };
    let t = CnValues::TOP;
    let f = cv.f();
    let d = cv.designated();
    let one = ValueSet::single;
    Multialgebra::from_fn(Signature::c(), cv.names(), move |c, a| match c {
        Conn::Neg => {
            if a[0] == f {
                one(t)
            } else if a[0] == t {
                one(f)
            } else {
                d
            }
        }
        Conn::And => {
            if a[0] == f || a[1] == f {
                one(f)
            } else if a[0] == t && a[1] == t {
                one(t)
            } else {
                d
            }
        }
        Conn::Or => match (a[0] == f, a[1] == f) {
            (true, true) => one(f),
            _ if (a[0] == t || a[0] == f) && (a[1] == t || a[1] == f) => one(t),
            _ => d,
        },
        Conn::Imp => {
            let (x, y) = (a[0], a[1]);
            if y == f && x != f {
                one(f)
            } else if (x == f || x == t) && (y == f || y == t) {
                one(t)
            } else {
                d
            }
        }
        _ => unreachable!("SigC has no {c}"),
    })
}

/// The full swap structure over `B`, computed from the coordinate-wise
/// definitions.
pub fn swap_structure_over(n: usize, b: &BooleanAlgebra) -> Result<Multialgebra> {
    let space = snapshots_over(n, b)?;
    let all = space.all.clone();
    let boo = space.boolean_set();
    let bb = *b;
    Multialgebra::from_fn(Signature::c(), space.names.clone(), move |c, a| {
        let z = &all[a[0]].coords;
        match c {
            Conn::Neg => (0..all.len())
                .filter(|&w| all[w].coords[0] == z[1] && bb.leq(all[w].coords[1], z[0]))
                .collect(),
            _ => {
                let w = &all[a[1]].coords;
                let first = match c {
                    Conn::And => bb.meet(z[0], w[0]),
                    Conn::Or => bb.join(z[0], w[0]),
                    Conn::Imp => bb.imp(z[0], w[0]),
                    _ => unreachable!(),
                };
                let s: ValueSet = (0..all.len())
                    .filter(|&u| all[u].coords[0] == first)
                    .collect();
                if boo.contains(a[0]) && boo.contains(a[1]) {
                    s.intersect(boo)
                } else {
                    s
                }
            }
        }
    })
}

fn a_and_not_a() -> Formula {
    Formula::and(mv("a"), Formula::neg(mv("a")))
}

/// Restriction rules over the two-element snapshots: `R1` and `R2_k` for
/// `2 ≤ k ≤ n`.
pub fn restriction_cn(n: usize) -> Result<Vec<RestrictionRule>> {
    check_level(n)?;
    let cv = CnValues { n };
    let full = ValueSet::full(cv.size());
    let t0 = cv.t(0);
    let mut rules =
        vec![
            RestrictionRule::new("R1", vec![mv("a")]).constrain(a_and_not_a(), move |g| {
                if g[0] == t0 {
                    ValueSet::single(CnValues::TOP)
                } else {
                    full
                }
            }),
        ];
    for k in 2..=n {
        let trigger = cv.t(k - 1);
        let target = cv.t(k - 2);
        let middle = cv.middle();
        rules.push(
            RestrictionRule::new(&format!("R2_{k}"), vec![mv("a")])
                .constrain(
                    a_and_not_a(),
                    move |g| if g[0] == trigger { middle } else { full },
                )
                .constrain(pow_raw(&mv("a"), 1), move |g| {
                    if g[0] == trigger {
                        ValueSet::single(target)
                    } else {
                        full
                    }
                }),
        );
    }
    Ok(rules)
}

/// Restriction rules over `B`-snapshots.
///
/// With `L = [z_3, …, z_{n+1}, ~(z_1 ∧ … ∧ z_{n+1})]` read off `ν(α)`:
/// `ν(α∧¬α)` must have second coordinate `L[0]`, `ν(α¹)` must equal
/// `(L[0], z_1 ∧ z_2, L[1], …)`, and the formulas
/// `(α⁽ⁿ⁾ ∧ β⁽ⁿ⁾) → (α#β)⁽ⁿ⁾` must be designated.
pub fn restriction_cn_over(n: usize, b: &BooleanAlgebra) -> Result<Vec<RestrictionRule>> {
    let space = snapshots_over(n, b)?;
    let all = std::sync::Arc::new(space.all.clone());
    let index: std::sync::Arc<HashMap<Vec<Elem>, usize>> = std::sync::Arc::new(
        all.iter()
            .enumerate()
            .map(|(i, s)| (s.coords.clone(), i))
            .collect(),
    );
    let bb = *b;
    let tail = move |z: &[Elem]| -> Vec<Elem> {
        let mut l: Vec<Elem> = z[2..].to_vec();
        let meet = z.iter().fold(bb.one(), |acc, &x| bb.meet(acc, x));
        l.push(bb.compl(meet));
        l
    };

    let all1 = all.clone();
    let clause1 = RestrictionRule::new("B1", vec![mv("a")]).constrain(a_and_not_a(), move |g| {
        let l = tail(&all1[g[0]].coords);
        (0..all1.len())
            .filter(|&u| all1[u].coords[1] == l[0])
            .collect()
    });

    let all2 = all.clone();
    let clause2 =
        RestrictionRule::new("B2", vec![mv("a")]).constrain(pow_raw(&mv("a"), 1), move |g| {
            let z = &all2[g[0]].coords;
            let l = tail(z);
            let mut w = vec![l[0], bb.meet(z[0], z[1])];
            w.extend_from_slice(&l[1..]);
            match index.get(&w) {
                Some(&i) => ValueSet::single(i),
                None => ValueSet::EMPTY,
            }
        });

    let designated = space.designated_set();
    let mut rules = vec![clause1, clause2];
    for c in [Conn::Or, Conn::And, Conn::Imp] {
        let lhs = Formula::and(pow_conj_raw(&mv("a"), n), pow_conj_raw(&mv("b"), n));
        let rhs = pow_conj_raw(&Formula::app(c, vec![mv("a"), mv("b")]), n);
        rules.push(
            RestrictionRule::new(&format!("B3{}", c.symbol()), vec![])
                .constrain(Formula::imp(lhs, rhs), move |_| designated),
        );
    }
    Ok(rules)
}

/// Which snapshot subset [`count_closed_form`] counts.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Which {
    All,
    Designated,
    Boolean,
}

/// `(n+2)^m`, `(n+1)^m` or `2^m`.
pub fn count_closed_form(n: usize, m: u32, which: Which) -> Result<u64> {
    check_level(n)?;
    if m == 0 {
        return Err(Error::Invalid("m must be at least 1".into()));
    }
    let base = match which {
        Which::All => n as u64 + 2,
        Which::Designated => n as u64 + 1,
        Which::Boolean => 2,
    };
    base.checked_pow(m)
        .ok_or_else(|| Error::Invalid("count overflows".into()))
}

/// Size of the enumerated subset.
pub fn count_enumerated(n: usize, m: u32, which: Which) -> Result<u64> {
    let b = powerset_algebra(m)?;
    let s = snapshots_over(n, &b)?;
    Ok(match which {
        Which::All => s.all.len(),
        Which::Designated => s.designated.len(),
        Which::Boolean => s.boolean_subset.len(),
    } as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_valued_snapshots() {
        let s = snapshots(1).unwrap();
        let c: Vec<Vec<Elem>> = s.all.iter().map(|x| x.coords.clone()).collect();
        assert_eq!(c, vec![vec![1, 0], vec![1, 1], vec![0, 1]]);
        let s = snapshots(2).unwrap();
        let c: Vec<Vec<Elem>> = s.all.iter().map(|x| x.coords.clone()).collect();
        assert_eq!(
            c,
            vec![vec![1, 0, 1], vec![1, 1, 0], vec![1, 1, 1], vec![0, 1, 1]]
        );
        assert_eq!(s.names, ["T", "t0", "t1", "F"]);
        for n in 1..=6 {
            let s = snapshots(n).unwrap();
            assert_eq!(s.len(), n + 2);
            let b = powerset_algebra(1).unwrap();
            assert!(s.all.iter().all(|z| z.is_valid(&b)));
            let over = snapshots_over(n, &b).unwrap();
            assert_eq!(over.all, s.all);
            assert_eq!(over.designated, s.designated);
            assert_eq!(over.boolean_subset, s.boolean_subset);
        }
        assert!(snapshots(0).is_err());
    }

    #[test]
    fn swap_tables_agree_over_two() {
        let b = powerset_algebra(1).unwrap();
        for n in 1..=4 {
            assert_eq!(
                swap_structure(n).unwrap(),
                swap_structure_over(n, &b).unwrap(),
                "n={n}"
            );
        }
    }

    #[test]
    fn summary_examples() {
        let n = 3;
        let cv = CnValues { n };
        let a = swap_structure(n).unwrap();
        for k in 0..n {
            assert_eq!(a.op(Conn::Neg, &[cv.t(k)]), cv.designated());
            for j in 0..n {
                assert_eq!(a.op(Conn::Or, &[cv.t(k), cv.t(j)]), cv.designated());
            }
        }
        assert_eq!(a.op(Conn::Imp, &[0, 0]), ValueSet::single(0));
        assert_eq!(a.op(Conn::Neg, &[0]), ValueSet::single(cv.f()));
        assert_eq!(a.op(Conn::And, &[cv.f(), 0]), ValueSet::single(cv.f()));
    }

    #[test]
    fn boolean_negation_is_singleton() {
        let b = powerset_algebra(2).unwrap();
        for n in 1..=2 {
            let s = snapshots_over(n, &b).unwrap();
            let a = swap_structure_over(n, &b).unwrap();
            for x in b.elements() {
                let mut z = vec![x, b.compl(x)];
                z.extend(std::iter::repeat(b.one()).take(n - 1));
                let zi = s.index_of(&Snapshot { coords: z }).unwrap();
                let mut w = vec![b.compl(x), x];
                w.extend(std::iter::repeat(b.one()).take(n - 1));
                let wi = s.index_of(&Snapshot { coords: w }).unwrap();
                assert_eq!(a.op(Conn::Neg, &[zi]), ValueSet::single(wi));
            }
        }
    }

    #[test]
    fn counts() {
        assert_eq!(count_closed_form(1, 2, Which::All).unwrap(), 9);
        assert_eq!(count_closed_form(2, 2, Which::All).unwrap(), 16);
        assert_eq!(count_closed_form(1, 2, Which::Designated).unwrap(), 4);
        assert_eq!(count_enumerated(2, 2, Which::All).unwrap(), 16);
    }

    #[test]
    fn rule_counts() {
        assert_eq!(restriction_cn(1).unwrap().len(), 1);
        assert_eq!(restriction_cn(2).unwrap().len(), 2);
        assert_eq!(restriction_cn(4).unwrap().len(), 4);
    }
}
