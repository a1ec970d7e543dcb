//! Independent confirmation of a counter-model by exhaustive evaluation.

use std::collections::BTreeMap;

use crate::congruences::Equation;
use crate::terms::{SeqKind, SeqTerm, Term, Var};
use crate::translate::cond_to_seq;

use super::{CounterExample, FiniteAlgebra};

fn value(t: &SeqTerm, alg: &FiniteAlgebra, env: &BTreeMap<Var, usize>) -> Result<usize, String> {
    Ok(match t.kind() {
        SeqKind::Const(c) => *alg
            .consts
            .get(c)
            .ok_or_else(|| format!("constant {} is not interpreted", c.symbol()))?,
        SeqKind::Atom(a) => return Err(format!("atom {} cannot be interpreted", a.name())),
        SeqKind::Var(v) => *env.get(v).ok_or_else(|| format!("?{} is unbound", v.name()))?,
        SeqKind::Neg(s) => alg.neg[value(s, alg, env)?],
        SeqKind::ScAnd(l, r) | SeqKind::FullAnd(l, r) => alg.and[value(l, alg, env)?][value(r, alg, env)?],
        SeqKind::ScOr(l, r) | SeqKind::FullOr(l, r) => alg.or[value(l, alg, env)?][value(r, alg, env)?],
    })
}

fn sides(e: &Equation) -> (SeqTerm, SeqTerm) {
    let conv = |t: &Term| match t {
        Term::Seq(s) => s.clone(),
        Term::Cond(c) => cond_to_seq(c),
    };
    (conv(&e.lhs), conv(&e.rhs))
}

/// Checks every axiom under every assignment and that the witness separates
/// the goal's sides. Shares no code with the search.
pub fn recheck(axioms: &[Equation], goal: &Equation, ce: &CounterExample) -> Result<(), String> {
    let alg = &ce.algebra;
    let n = alg.size;
    let in_range = |x: usize| x < n;
    if alg.neg.len() != n
        || alg.and.len() != n
        || alg.or.len() != n
        || alg.and.iter().chain(&alg.or).any(|row| row.len() != n)
        || !alg.neg.iter().chain(alg.and.iter().flatten()).chain(alg.or.iter().flatten()).chain(alg.consts.values()).all(|&x| in_range(x))
    {
        return Err("malformed tables".into());
    }
    for e in axioms {
        let (l, r) = sides(e);
        let mut vars = e.lhs.variables();
        for v in e.rhs.variables() {
            if !vars.contains(&v) {
                vars.push(v);
            }
        }
        let total = n.pow(vars.len() as u32);
        for mut code in 0..total {
            let mut env = BTreeMap::new();
            for v in vars.iter().rev() {
                env.insert(v.clone(), code % n);
                code /= n;
            }
            let (a, b) = (value(&l, alg, &env)?, value(&r, alg, &env)?);
            if a != b {
                let shown: Vec<String> = vars.iter().map(|v| format!("?{}={}", v.name(), env[v])).collect();
                return Err(format!("axiom {} fails at {}: {a} vs {b}", e.name, shown.join(" ")));
            }
        }
    }
    let env: BTreeMap<Var, usize> = ce.witness.iter().cloned().collect();
    if env.values().any(|&x| !in_range(x)) {
        return Err("witness out of range".into());
    }
    let (l, r) = sides(goal);
    let (a, b) = (value(&l, alg, &env)?, value(&r, alg, &env)?);
    if a == b {
        return Err(format!("goal {} holds at the witness (both sides {a})", goal.name));
    }
    Ok(())
}
