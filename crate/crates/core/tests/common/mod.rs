//! Formula generators shared by the integration tests.
#![allow(dead_code)]

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rnmatrix::{Conn, Formula, Signature};

pub fn rng(seed: u64) -> ChaCha8Rng {
    use rand::SeedableRng;
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn connectives(sig: &Signature) -> Vec<Conn> {
    Conn::ALL
        .iter()
        .copied()
        .filter(|c| sig.contains(*c))
        .collect()
}

/// A random formula of complexity at most `depth` (depth = nesting of
/// connectives) over the given variables.
pub fn random_formula(r: &mut ChaCha8Rng, sig: &Signature, vars: &[&str], depth: usize) -> Formula {
    let conns = connectives(sig);
    if depth == 0 || r.gen_bool(0.25) {
        return Formula::var(vars[r.gen_range(0..vars.len())]);
    }
    let c = conns[r.gen_range(0..conns.len())];
    let args = (0..c.arity())
        .map(|_| random_formula(r, sig, vars, depth - 1))
        .collect();
    Formula::app(c, args)
}

/// Every formula of complexity (nesting depth) at most `k` over `vars`, by
/// increasing complexity.
pub fn all_formulas(sig: &Signature, vars: &[&str], k: usize) -> Vec<Formula> {
    let conns = connectives(sig);
    let mut layers: Vec<Vec<Formula>> = vec![vars.iter().map(|v| Formula::var(v)).collect()];
    for c in 1..=k {
        let below: Vec<&Formula> = layers.iter().flatten().collect();
        let top = &layers[c - 1];
        let mut layer = Vec::new();
        for &op in &conns {
            if op.arity() == 1 {
                layer.extend(top.iter().map(|f| Formula::app(op, vec![f.clone()])));
                continue;
            }
            for x in &below {
                for y in &below {
                    if x.complexity() == c - 1 || y.complexity() == c - 1 {
                        layer.push(Formula::app(op, vec![(*x).clone(), (*y).clone()]));
                    }
                }
            }
        }
        layers.push(layer);
    }
    layers.into_iter().flatten().collect()
}

/// Proptest strategy for formulas over `sig` with nesting depth at most
/// `depth`, drawing variables from `vars`.
pub fn arb_formula(
    sig: Signature,
    vars: &'static [&'static str],
    depth: u32,
) -> impl proptest::strategy::Strategy<Value = Formula> {
    use proptest::prelude::*;
    let conns = connectives(&sig);
    let leaf = proptest::sample::select(vars).prop_map(Formula::var);
    leaf.prop_recursive(depth, 64, 2, move |inner| {
        (
            proptest::sample::select(conns.clone()),
            inner.clone(),
            inner,
        )
            .prop_map(|(c, a, b)| {
                if c.arity() == 1 {
                    Formula::app(c, vec![a])
                } else {
                    Formula::app(c, vec![a, b])
                }
            })
    })
}
