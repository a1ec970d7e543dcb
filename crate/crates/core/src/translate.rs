//! Translations between the two signatures.
//!
//! Terms are shared DAGs, so each walk memoises on node identity.

use std::collections::HashMap;

use crate::terms::{CondKind, CondTerm, SeqKind, SeqTerm};

fn neg_c(x: CondTerm) -> CondTerm {
    CondTerm::cond(CondTerm::f(), x, CondTerm::t())
}

fn full_and_c(x: CondTerm, y: CondTerm) -> CondTerm {
    CondTerm::cond(y.clone(), x, CondTerm::cond(CondTerm::f(), y, CondTerm::f()))
}

/// Maps a sequential term to a conditional one.
///
/// `!t` becomes `F <| t |> T`, `s && t` becomes `t <| s |> F`, `s || t`
/// becomes `T <| s |> t` and `s &* t` becomes `t <| s |> (F <| t |> F)`.
/// `s |* t` is translated through its encoding `!(!s &* !t)`.
pub fn seq_to_cond(t: &SeqTerm) -> CondTerm {
    fn go(t: &SeqTerm, memo: &mut HashMap<usize, CondTerm>) -> CondTerm {
        if let Some(c) = memo.get(&t.addr()) {
            return c.clone();
        }
        let out = match t.kind() {
            SeqKind::Const(c) => CondTerm::constant(*c),
            SeqKind::Atom(a) => CondTerm::atom(a.clone()),
            SeqKind::Var(v) => CondTerm::var(v.clone()),
            SeqKind::Neg(s) => neg_c(go(s, memo)),
            SeqKind::ScAnd(l, r) => CondTerm::cond(go(r, memo), go(l, memo), CondTerm::f()),
            SeqKind::ScOr(l, r) => CondTerm::cond(CondTerm::t(), go(l, memo), go(r, memo)),
            SeqKind::FullAnd(l, r) => full_and_c(go(l, memo), go(r, memo)),
            SeqKind::FullOr(l, r) => {
                neg_c(full_and_c(neg_c(go(l, memo)), neg_c(go(r, memo))))
            }
        };
        memo.insert(t.addr(), out.clone());
        out
    }
    go(t, &mut HashMap::new())
}

/// Maps a conditional term to a sequential one:
/// `p <| q |> r` becomes `(q && p) || (!q && r)`.
pub fn cond_to_seq(t: &CondTerm) -> SeqTerm {
    fn go(t: &CondTerm, memo: &mut HashMap<usize, SeqTerm>) -> SeqTerm {
        if let Some(s) = memo.get(&t.addr()) {
            return s.clone();
        }
        let out = match t.kind() {
            CondKind::Const(c) => SeqTerm::constant(*c),
            CondKind::Atom(a) => SeqTerm::atom(a.clone()),
            CondKind::Var(v) => SeqTerm::var(v.clone()),
            CondKind::Cond(p, q, r) => {
                let gq = go(q, memo);
                SeqTerm::or(
                    SeqTerm::and(gq.clone(), go(p, memo)),
                    SeqTerm::and(SeqTerm::neg(gq), go(r, memo)),
                )
            }
        };
        memo.insert(t.addr(), out.clone());
        out
    }
    go(t, &mut HashMap::new())
}

/// Replaces full connectives by short-circuit encodings, innermost first:
/// `x &* y` by `(x || (y && F)) && y` and `x |* y` by `!(!x &* !y)`.
pub fn desugar_full(t: &SeqTerm) -> SeqTerm {
    fn full_and(x: SeqTerm, y: SeqTerm) -> SeqTerm {
        SeqTerm::and(SeqTerm::or(x, SeqTerm::and(y.clone(), SeqTerm::f())), y)
    }
    fn go(t: &SeqTerm, memo: &mut HashMap<usize, SeqTerm>) -> SeqTerm {
        if let Some(s) = memo.get(&t.addr()) {
            return s.clone();
        }
        let out = match t.kind() {
            SeqKind::Const(_) | SeqKind::Atom(_) | SeqKind::Var(_) => t.clone(),
            SeqKind::Neg(s) => SeqTerm::neg(go(s, memo)),
            SeqKind::ScAnd(l, r) => SeqTerm::and(go(l, memo), go(r, memo)),
            SeqKind::ScOr(l, r) => SeqTerm::or(go(l, memo), go(r, memo)),
            SeqKind::FullAnd(l, r) => full_and(go(l, memo), go(r, memo)),
            SeqKind::FullOr(l, r) => {
                SeqTerm::neg(full_and(SeqTerm::neg(go(l, memo)), SeqTerm::neg(go(r, memo))))
            }
        };
        memo.insert(t.addr(), out.clone());
        out
    }
    go(t, &mut HashMap::new())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::textio::{parse_cond, parse_seq};

    fn f(s: &str) -> CondTerm {
        seq_to_cond(&parse_seq(s).unwrap())
    }

    #[test]
    fn f_examples() {
        assert_eq!(f("a && b"), parse_cond("b <| a |> F").unwrap());
        assert_eq!(f("!a"), parse_cond("F <| a |> T").unwrap());
        assert_eq!(f("a &* b"), parse_cond("b <| a |> (F <| b |> F)").unwrap());
        assert_eq!(f("a || b"), parse_cond("T <| a |> b").unwrap());
        assert_eq!(f("U"), CondTerm::u());
        assert_eq!(f("?x"), parse_cond("?x").unwrap());
    }

    #[test]
    fn g_examples() {
        let g = |s: &str| cond_to_seq(&parse_cond(s).unwrap());
        assert_eq!(g("T"), parse_seq("T").unwrap());
        assert_eq!(g("U"), parse_seq("U").unwrap());
        assert_eq!(g("b <| a |> F"), parse_seq("(a && b) || (!a && F)").unwrap());
    }

    #[test]
    fn desugar_examples() {
        let d = |s: &str| desugar_full(&parse_seq(s).unwrap());
        assert_eq!(d("a &* b"), parse_seq("(a || (b && F)) && b").unwrap());
        assert_eq!(d("a || b"), parse_seq("a || b").unwrap());
        assert_eq!(d("a |* b"), parse_seq("!((!a || (!b && F)) && !b)").unwrap());
    }
}
