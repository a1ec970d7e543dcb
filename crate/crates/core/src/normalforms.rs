//! Basic forms and their refinements.
//!
//! A basic form is a conditional term whose conditions are atoms and whose
//! leaves are constants. Three canonical forms are computed here:
//!
//! * `bf`: unique modulo free valuation congruence,
//! * `mbf`: no atom repeats on a root-to-leaf path (memorising congruence),
//! * `cl_basic_form`: mem-basic forms whose top layers follow the shared
//!   alphabet in a fixed atom order (conditional congruence), with an extra
//!   collapse of all-`U` trees in the three-valued case.
//!
//! All functions memoise on shared subterms, so terms whose tree size is
//! exponential are handled in time proportional to their DAG size.

use std::cmp::Ordering;
use std::collections::{HashMap, HashSet};
use std::ops::Deref;

use crate::error::Error;
use crate::terms::{Atom, AtomSet, CondKind, CondTerm, Constant};
use crate::textio::print_cond;

/// Whether `U` may occur.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Valuedness {
    Two,
    Three,
}

impl Valuedness {
    /// `Three` iff `U` occurs in `t`.
    pub fn infer(t: &CondTerm) -> Valuedness {
        if t.is_three_valued() {
            Valuedness::Three
        } else {
            Valuedness::Two
        }
    }
}

/// A strict total order on atoms. Listed atoms come first in list order; all
/// other atoms follow, ordered by name.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AtomOrder {
    listed: Vec<Atom>,
    rank: HashMap<Atom, usize>,
}

impl AtomOrder {
    pub fn new(atoms: Vec<Atom>) -> Result<AtomOrder, Error> {
        let mut rank = HashMap::new();
        for (i, a) in atoms.iter().enumerate() {
            if rank.insert(a.clone(), i).is_some() {
                return Err(Error::DuplicateInOrder(a.name().to_string()));
            }
        }
        Ok(AtomOrder {
            listed: atoms,
            rank,
        })
    }

    /// Parses a comma-separated list such as `a,d,b,c`.
    pub fn parse(text: &str) -> Result<AtomOrder, Error> {
        let atoms = text
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(Atom::new)
            .collect::<Result<Vec<_>, _>>()?;
        AtomOrder::new(atoms)
    }

    /// The order by atom name.
    pub fn lexicographic() -> AtomOrder {
        AtomOrder::default()
    }

    pub fn listed(&self) -> &[Atom] {
        &self.listed
    }

    pub fn compare(&self, a: &Atom, b: &Atom) -> Ordering {
        match (self.rank.get(a), self.rank.get(b)) {
            (Some(i), Some(j)) => i.cmp(j),
            (Some(_), None) => Ordering::Less,
            (None, Some(_)) => Ordering::Greater,
            (None, None) => a.cmp(b),
        }
    }

    pub fn sort(&self, atoms: &AtomSet) -> Vec<Atom> {
        let mut v = atoms.to_vec();
        v.sort_by(|a, b| self.compare(a, b));
        v
    }
}

/// A term in the basic-form grammar `T | F | U | P <| a |> Q`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BasicForm(CondTerm);

impl BasicForm {
    pub fn new(t: CondTerm) -> Result<BasicForm, Error> {
        if is_basic_form(&t) {
            Ok(BasicForm(t))
        } else {
            Err(Error::NotBasicForm(print_cond(&t)))
        }
    }

    pub fn term(&self) -> &CondTerm {
        &self.0
    }

    pub fn into_term(self) -> CondTerm {
        self.0
    }
}

impl Deref for BasicForm {
    type Target = CondTerm;

    fn deref(&self) -> &CondTerm {
        &self.0
    }
}

/// A basic form in which no atom occurs below a node conditioned on it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MemBasicForm(CondTerm);

impl MemBasicForm {
    pub fn new(t: CondTerm) -> Result<MemBasicForm, Error> {
        if is_mem_basic_form(&t) {
            Ok(MemBasicForm(t))
        } else {
            Err(Error::NotMemBasicForm(print_cond(&t)))
        }
    }

    pub fn term(&self) -> &CondTerm {
        &self.0
    }

    pub fn into_term(self) -> CondTerm {
        self.0
    }

    pub fn as_basic(&self) -> BasicForm {
        BasicForm(self.0.clone())
    }
}

impl Deref for MemBasicForm {
    type Target = CondTerm;

    fn deref(&self) -> &CondTerm {
        &self.0
    }
}

fn node_atom(t: &CondTerm) -> Option<&Atom> {
    match t.kind() {
        CondKind::Cond(_, q, _) => match q.kind() {
            CondKind::Atom(a) => Some(a),
            _ => None,
        },
        _ => None,
    }
}

pub fn is_basic_form(t: &CondTerm) -> bool {
    fn go(t: &CondTerm, seen: &mut HashSet<usize>) -> bool {
        if !seen.insert(t.addr()) {
            return true;
        }
        match t.kind() {
            CondKind::Const(_) => true,
            CondKind::Cond(p, q, r) => {
                matches!(q.kind(), CondKind::Atom(_)) && go(p, seen) && go(r, seen)
            }
            _ => false,
        }
    }
    go(t, &mut HashSet::new())
}

pub fn is_mem_basic_form(t: &CondTerm) -> bool {
    // a node is fine iff its children are fine and do not mention its atom
    fn go(t: &CondTerm, memo: &mut HashMap<usize, Option<AtomSet>>) -> Option<AtomSet> {
        if let Some(r) = memo.get(&t.addr()) {
            return r.clone();
        }
        let r = match t.kind() {
            CondKind::Const(_) => Some(AtomSet::new()),
            CondKind::Cond(p, q, r) => match q.kind() {
                CondKind::Atom(a) => match (go(p, memo), go(r, memo)) {
                    (Some(x), Some(y)) if !x.contains(a) && !y.contains(a) => {
                        let mut s = x.union(&y);
                        s.insert(a.clone());
                        Some(s)
                    }
                    _ => None,
                },
                _ => None,
            },
            _ => None,
        };
        memo.insert(t.addr(), r.clone());
        r
    }
    go(t, &mut HashMap::new()).is_some()
}

// ---------------------------------------------------------------------------
// bf and the leaf substitution

fn subst_raw(p: &CondTerm, q: &CondTerm, r: &CondTerm) -> CondTerm {
    fn go(
        t: &CondTerm,
        q: &CondTerm,
        r: &CondTerm,
        memo: &mut HashMap<usize, CondTerm>,
    ) -> CondTerm {
        match t.kind() {
            CondKind::Const(Constant::T) => return q.clone(),
            CondKind::Const(Constant::F) => return r.clone(),
            CondKind::Const(Constant::U) => return t.clone(),
            _ => {}
        }
        if let Some(x) = memo.get(&t.addr()) {
            return x.clone();
        }
        let out = match t.kind() {
            CondKind::Cond(a, c, b) => CondTerm::cond(go(a, q, r, memo), c.clone(), go(b, q, r, memo)),
            _ => t.clone(),
        };
        memo.insert(t.addr(), out.clone());
        out
    }
    go(p, q, r, &mut HashMap::new())
}

/// `p[T ↦ q, F ↦ r]`: replaces the `T` leaves of `p` by `q` and its `F`
/// leaves by `r`, keeping `U`.
pub fn subst_tf(p: &BasicForm, q: &BasicForm, r: &BasicForm) -> BasicForm {
    BasicForm(subst_raw(&p.0, &q.0, &r.0))
}

fn bf_raw(t: &CondTerm) -> CondTerm {
    fn go(t: &CondTerm, memo: &mut HashMap<usize, CondTerm>) -> CondTerm {
        if let Some(x) = memo.get(&t.addr()) {
            return x.clone();
        }
        let out = match t.kind() {
            CondKind::Const(_) => t.clone(),
            CondKind::Atom(a) => CondTerm::node(CondTerm::t(), a, CondTerm::f()),
            CondKind::Var(_) => unreachable!("bf is only called on closed terms"),
            CondKind::Cond(p, q, r) => {
                let bq = go(q, memo);
                let bp = go(p, memo);
                let br = go(r, memo);
                subst_raw(&bq, &bp, &br)
            }
        };
        memo.insert(t.addr(), out.clone());
        out
    }
    go(t, &mut HashMap::new())
}

/// The basic form of a closed conditional term.
pub fn bf(t: &CondTerm) -> Result<BasicForm, Error> {
    if !t.is_closed() {
        return Err(Error::OpenTerm);
    }
    Ok(BasicForm(bf_raw(t)))
}

// ---------------------------------------------------------------------------
// Reductions and mbf

fn reduce_raw(a: &Atom, t: &CondTerm, left: bool) -> CondTerm {
    fn go(
        a: &Atom,
        t: &CondTerm,
        left: bool,
        memo: &mut HashMap<usize, CondTerm>,
    ) -> CondTerm {
        let (p, b, q) = match t.kind() {
            CondKind::Cond(p, b, q) => (p, b, q),
            _ => return t.clone(),
        };
        if let Some(x) = memo.get(&t.addr()) {
            return x.clone();
        }
        let out = if matches!(b.kind(), CondKind::Atom(x) if x == a) {
            if left {
                go(a, p, left, memo)
            } else {
                go(a, q, left, memo)
            }
        } else {
            CondTerm::cond(go(a, p, left, memo), b.clone(), go(a, q, left, memo))
        };
        memo.insert(t.addr(), out.clone());
        out
    }
    go(a, t, left, &mut HashMap::new())
}

/// Left `a`-reduction: every `P <| a |> Q` node is replaced by (the
/// reduction of) `P`.
///
/// The recursion also descends into the chosen child, which changes nothing
/// on mem-basic forms and makes the result free of `a` in general.
pub fn left_reduce(a: &Atom, p: &BasicForm) -> BasicForm {
    BasicForm(reduce_raw(a, &p.0, true))
}

/// Right `a`-reduction, the mirror image of [`left_reduce`].
pub fn right_reduce(a: &Atom, p: &BasicForm) -> BasicForm {
    BasicForm(reduce_raw(a, &p.0, false))
}

/// Walks `t` carrying the values already fixed for each atom on the path,
/// which amounts to applying the reductions of every ancestor at once.
fn mf_raw(t: &CondTerm) -> CondTerm {
    struct Walk {
        index: HashMap<Atom, usize>,
        memo: HashMap<(usize, Vec<u8>), CondTerm>,
    }
    // env[i]: 0 unknown, 1 left taken, 2 right taken
    fn go(w: &mut Walk, t: &CondTerm, env: &mut Vec<u8>) -> CondTerm {
        let (p, a, q) = match t.kind() {
            CondKind::Cond(p, c, q) => match c.kind() {
                CondKind::Atom(a) => (p, a, q),
                _ => unreachable!("mf is only called on basic forms"),
            },
            _ => return t.clone(),
        };
        let i = w.index[a];
        match env[i] {
            1 => return go(w, p, env),
            2 => return go(w, q, env),
            _ => {}
        }
        let key = (t.addr(), env.clone());
        if let Some(x) = w.memo.get(&key) {
            return x.clone();
        }
        env[i] = 1;
        let l = go(w, p, env);
        env[i] = 2;
        let r = go(w, q, env);
        env[i] = 0;
        let out = CondTerm::node(l, a, r);
        w.memo.insert(key, out.clone());
        out
    }
    let index = t.alphabet().into_iter().enumerate().map(|(i, a)| (a, i)).collect();
    let mut w = Walk { index, memo: HashMap::new() };
    let mut env = vec![0; w.index.len()];
    go(&mut w, t, &mut env)
}

/// Memorising evaluation of `t` under a partial valuation: either the
/// value reached or the first atom whose value is still unknown.
#[derive(Clone, Copy)]
enum Step {
    Done(Constant),
    Ask(usize),
}

/// The mem-basic form without building the basic form first. Under each
/// partial valuation the root is the first unknown atom the evaluation
/// asks for, so the form is the tree of these questions.
fn mbf_direct(t: &CondTerm) -> CondTerm {
    struct Run {
        atoms: Vec<Atom>,
        index: HashMap<Atom, usize>,
        forms: HashMap<Vec<u8>, CondTerm>,
    }
    fn eval(r: &Run, t: &CondTerm, env: &[u8], memo: &mut HashMap<usize, Step>) -> Step {
        if let Some(&s) = memo.get(&t.addr()) {
            return s;
        }
        let out = match t.kind() {
            CondKind::Const(c) => Step::Done(*c),
            CondKind::Atom(a) => {
                let i = r.index[a];
                match env[i] {
                    1 => Step::Done(Constant::T),
                    2 => Step::Done(Constant::F),
                    _ => Step::Ask(i),
                }
            }
            CondKind::Var(_) => unreachable!("mbf is only called on closed terms"),
            CondKind::Cond(p, q, s) => match eval(r, q, env, memo) {
                Step::Done(Constant::T) => eval(r, p, env, memo),
                Step::Done(Constant::F) => eval(r, s, env, memo),
                other => other,
            },
        };
        memo.insert(t.addr(), out);
        out
    }
    fn build(r: &mut Run, t: &CondTerm, env: &mut Vec<u8>) -> CondTerm {
        if let Some(x) = r.forms.get(env) {
            return x.clone();
        }
        let out = match eval(r, t, env, &mut HashMap::new()) {
            Step::Done(c) => CondTerm::constant(c),
            Step::Ask(i) => {
                env[i] = 1;
                let l = build(r, t, env);
                env[i] = 2;
                let rr = build(r, t, env);
                env[i] = 0;
                CondTerm::node(l, &r.atoms[i], rr)
            }
        };
        r.forms.insert(env.clone(), out.clone());
        out
    }
    let atoms: Vec<Atom> = t.alphabet().into_iter().collect();
    let index = atoms.iter().cloned().enumerate().map(|(i, a)| (a, i)).collect();
    let mut env = vec![0; atoms.len()];
    let mut r = Run { atoms, index, forms: HashMap::new() };
    build(&mut r, t, &mut env)
}

/// Removes repeated tests of an atom below its first test.
pub fn mf(p: &BasicForm) -> MemBasicForm {
    MemBasicForm(mf_raw(&p.0))
}

/// The mem-basic form of a closed conditional term.
pub fn mbf(t: &CondTerm) -> Result<MemBasicForm, Error> {
    if !t.is_closed() {
        return Err(Error::OpenTerm);
    }
    Ok(MemBasicForm(mbf_direct(t)))
}

// ---------------------------------------------------------------------------
// Shared alphabets

fn shared_two(t: &CondTerm, memo: &mut HashMap<usize, AtomSet>) -> AtomSet {
    if let Some(x) = memo.get(&t.addr()) {
        return x.clone();
    }
    let out = match t.kind() {
        CondKind::Cond(p, b, q) => {
            let mut s = shared_two(p, memo).intersection(&shared_two(q, memo));
            if let CondKind::Atom(a) = b.kind() {
                s.insert(a.clone());
            }
            s
        }
        _ => AtomSet::new(),
    };
    memo.insert(t.addr(), out.clone());
    out
}

fn shared_three(
    t: &CondTerm,
    x: &AtomSet,
    memo: &mut HashMap<(usize, AtomSet), AtomSet>,
) -> AtomSet {
    match t.kind() {
        CondKind::Const(Constant::U) => return x.clone(),
        CondKind::Const(_) => return AtomSet::new(),
        _ => {}
    }
    let key = (t.addr(), x.clone());
    if let Some(s) = memo.get(&key) {
        return s.clone();
    }
    let out = match t.kind() {
        CondKind::Cond(p, b, q) => {
            let a = match b.kind() {
                CondKind::Atom(a) => a,
                _ => unreachable!("basic form"),
            };
            let mut rest = x.clone();
            rest.remove(a);
            let mut s = shared_three(p, &rest, memo).intersection(&shared_three(q, &rest, memo));
            s.insert(a.clone());
            s
        }
        _ => unreachable!("basic form"),
    };
    memo.insert(key, out.clone());
    out
}

fn shared_raw(t: &CondTerm, mode: Valuedness) -> AtomSet {
    match mode {
        Valuedness::Two => shared_two(t, &mut HashMap::new()),
        Valuedness::Three => shared_three(t, &t.alphabet(), &mut HashMap::new()),
    }
}

/// The atoms tested on every path of `p`. In three-valued mode a `U` leaf
/// counts as agreeing with every atom not yet tested on its path.
pub fn shared_alphabet(p: &MemBasicForm, mode: Valuedness) -> Result<AtomSet, Error> {
    if mode == Valuedness::Two && p.is_three_valued() {
        return Err(Error::UndefinedInTwoValued);
    }
    Ok(shared_raw(&p.0, mode))
}

// ---------------------------------------------------------------------------
// F_sigma

fn decompose_raw(t: &CondTerm, sigma: &[Atom], out: &mut Vec<CondTerm>) {
    match sigma.split_first() {
        None => out.push(t.clone()),
        Some((a, rest)) => {
            decompose_raw(&reduce_raw(a, t, true), rest, out);
            decompose_raw(&reduce_raw(a, t, false), rest, out);
        }
    }
}

/// Splits `p` along its shared alphabet sorted by `order`. Part `i` is
/// obtained by reducing along `sigma`, where the most significant bit of `i`
/// belongs to the first atom and a 0 bit selects the left reduction.
pub fn f_sigma_decompose(
    p: &MemBasicForm,
    order: &AtomOrder,
    mode: Valuedness,
) -> Result<(Vec<Atom>, Vec<MemBasicForm>), Error> {
    let sigma = order.sort(&shared_alphabet(p, mode)?);
    let mut parts = Vec::with_capacity(1 << sigma.len());
    decompose_raw(&p.0, &sigma, &mut parts);
    Ok((sigma, parts.into_iter().map(MemBasicForm).collect()))
}

/// Rebuilds `F_sigma(parts)`: a complete tree testing `sigma[0]` at the root,
/// `sigma[1]` on the next layer and so on, with `parts` as its leaves.
///
/// Panics unless `parts.len() == 2^sigma.len()`.
pub fn f_sigma(sigma: &[Atom], parts: &[CondTerm]) -> CondTerm {
    assert_eq!(parts.len(), 1usize << sigma.len(), "F_sigma arity");
    match sigma.split_first() {
        None => parts[0].clone(),
        Some((a, rest)) => {
            let (l, r) = parts.split_at(parts.len() / 2);
            CondTerm::node(f_sigma(rest, l), a, f_sigma(rest, r))
        }
    }
}

// ---------------------------------------------------------------------------
// CL- and CLU-basic forms

fn cl_rec(
    t: &CondTerm,
    order: &AtomOrder,
    mode: Valuedness,
    memo: &mut HashMap<CondTerm, CondTerm>,
) -> CondTerm {
    if t.as_constant().is_some() {
        return t.clone();
    }
    if let Some(x) = memo.get(t) {
        return x.clone();
    }
    let sigma = order.sort(&shared_raw(t, mode));
    let mut parts = Vec::with_capacity(1 << sigma.len());
    decompose_raw(t, &sigma, &mut parts);
    let parts: Vec<CondTerm> = parts.iter().map(|p| cl_rec(p, order, mode, memo)).collect();
    let out = if mode == Valuedness::Three && parts.iter().all(|p| p.is_constant(Constant::U)) {
        CondTerm::u()
    } else {
        f_sigma(&sigma, &parts)
    };
    memo.insert(t.clone(), out.clone());
    out
}

/// The CL-basic form (two-valued) or CLU-basic form (three-valued) of a
/// closed term under `order`.
pub fn cl_basic_form(t: &CondTerm, order: &AtomOrder, mode: Valuedness) -> Result<BasicForm, Error> {
    if !t.is_closed() {
        return Err(Error::OpenTerm);
    }
    if mode == Valuedness::Two && t.is_three_valued() {
        return Err(Error::UndefinedInTwoValued);
    }
    let m = mbf(t)?;
    Ok(BasicForm(cl_rec(&m.0, order, mode, &mut HashMap::new())))
}

/// The grammars accepted by [`validate_form`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FormKind {
    Basic,
    Mem,
    Cl,
    Clu,
}

impl std::str::FromStr for FormKind {
    type Err = String;

    fn from_str(s: &str) -> Result<FormKind, String> {
        match s {
            "basic" => Ok(FormKind::Basic),
            "mem" => Ok(FormKind::Mem),
            "cl" => Ok(FormKind::Cl),
            "clu" => Ok(FormKind::Clu),
            _ => Err(format!("unknown form kind `{s}`")),
        }
    }
}

/// Collects the subtrees at depth `sigma.len()`, provided every node above
/// that depth tests the atom of `sigma` for its layer.
fn layered_parts(t: &CondTerm, sigma: &[Atom], out: &mut Vec<CondTerm>) -> bool {
    match sigma.split_first() {
        None => {
            out.push(t.clone());
            true
        }
        Some((a, rest)) => match t.kind() {
            CondKind::Cond(p, _, q) if node_atom(t) == Some(a) => {
                layered_parts(p, rest, out) && layered_parts(q, rest, out)
            }
            _ => false,
        },
    }
}

fn cl_valid(
    t: &CondTerm,
    order: &AtomOrder,
    mode: Valuedness,
    memo: &mut HashMap<CondTerm, bool>,
) -> bool {
    if t.as_constant().is_some() {
        return true;
    }
    if let Some(v) = memo.get(t) {
        return *v;
    }
    let sigma = order.sort(&shared_raw(t, mode));
    let mut parts = Vec::new();
    let ok = layered_parts(t, &sigma, &mut parts)
        && !(mode == Valuedness::Three && parts.iter().all(|p| p.is_constant(Constant::U)))
        && parts.iter().all(|p| cl_valid(p, order, mode, memo));
    memo.insert(t.clone(), ok);
    ok
}

/// Whether `t` belongs to the named grammar. `Cl` forbids `U`; `Clu` allows
/// it but rejects any layer whose parts are all `U`.
pub fn validate_form(kind: FormKind, t: &CondTerm, order: &AtomOrder) -> bool {
    match kind {
        FormKind::Basic => is_basic_form(t),
        FormKind::Mem => is_mem_basic_form(t),
        FormKind::Cl => {
            is_mem_basic_form(t)
                && !t.is_three_valued()
                && cl_valid(t, order, Valuedness::Two, &mut HashMap::new())
        }
        FormKind::Clu => {
            is_mem_basic_form(t) && cl_valid(t, order, Valuedness::Three, &mut HashMap::new())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::textio::{parse_cond, parse_seq};
    use crate::translate::seq_to_cond;

    fn c(s: &str) -> CondTerm {
        parse_cond(s).unwrap()
    }

    fn at(s: &str) -> Atom {
        Atom::new(s).unwrap()
    }

    fn b(s: &str) -> BasicForm {
        BasicForm::new(c(s)).unwrap()
    }

    fn m(s: &str) -> MemBasicForm {
        MemBasicForm::new(c(s)).unwrap()
    }

    fn set(names: &[&str]) -> AtomSet {
        names.iter().map(|n| at(n)).collect()
    }

    fn order(s: &str) -> AtomOrder {
        AtomOrder::parse(s).unwrap()
    }

    #[test]
    fn bf_examples() {
        assert_eq!(bf(&c("a")).unwrap().term(), &c("T <| a |> F"));
        assert_eq!(bf(&c("F <| a |> T")).unwrap().term(), &c("F <| a |> T"));
        assert_eq!(bf(&c("a <| a |> F")).unwrap().term(), &c("(T <| a |> F) <| a |> F"));
        assert_eq!(bf(&c("?x")), Err(Error::OpenTerm));
    }

    #[test]
    fn subst_examples() {
        let q = b("T <| b |> F");
        let r = b("F");
        assert_eq!(subst_tf(&b("U"), &q, &r).term(), &c("U"));
        assert_eq!(subst_tf(&b("T"), &q, &r).term(), q.term());
        assert_eq!(
            subst_tf(&b("T <| a |> F"), &q, &r).term(),
            &c("(T <| b |> F) <| a |> F")
        );
    }

    #[test]
    fn reduction_examples() {
        let a = at("a");
        assert_eq!(left_reduce(&a, &b("(T <| b |> F) <| a |> U")).term(), &c("T <| b |> F"));
        assert_eq!(left_reduce(&a, &b("T")).term(), &c("T"));
        assert_eq!(
            left_reduce(&a, &b("(T <| a |> F) <| b |> (F <| a |> T)")).term(),
            &c("T <| b |> F")
        );
        assert_eq!(
            right_reduce(&a, &b("(T <| a |> F) <| b |> (F <| a |> T)")).term(),
            &c("F <| b |> T")
        );
    }

    #[test]
    fn mbf_examples() {
        let f = |s: &str| seq_to_cond(&parse_seq(s).unwrap());
        assert_eq!(mbf(&f("a && a")).unwrap().term(), &c("T <| a |> F"));
        assert_eq!(mbf(&c("T")).unwrap().term(), &c("T"));
        assert_eq!(mbf(&f("a && b")).unwrap().term(), &c("(T <| b |> F) <| a |> F"));
    }

    #[test]
    fn shared_alphabet_examples() {
        let two = |s: &str| shared_alphabet(&m(s), Valuedness::Two).unwrap();
        let three = |s: &str| shared_alphabet(&m(s), Valuedness::Three).unwrap();
        assert_eq!(two("T"), set(&[]));
        assert_eq!(two("(T <| b |> F) <| a |> (T <| c |> F)"), set(&["a"]));
        assert_eq!(two("(T <| b |> F) <| a |> (F <| b |> T)"), set(&["a", "b"]));
        assert_eq!(three("U"), set(&[]));
        assert_eq!(three("U <| a |> U"), set(&["a"]));
        assert_eq!(three("(U <| b |> U) <| a |> T"), set(&["a"]));
        assert_eq!(three("U <| a |> (T <| b |> F)"), set(&["a", "b"]));
        assert_eq!(
            shared_alphabet(&m("U <| a |> T"), Valuedness::Two),
            Err(Error::UndefinedInTwoValued)
        );
    }

    #[test]
    fn decompose_examples() {
        let (sigma, parts) = f_sigma_decompose(&m("T"), &order(""), Valuedness::Two).unwrap();
        assert!(sigma.is_empty());
        assert_eq!(parts, vec![m("T")]);

        let p = m("(T <| b |> F) <| a |> (T <| c |> F)");
        let (sigma, parts) = f_sigma_decompose(&p, &order(""), Valuedness::Two).unwrap();
        assert_eq!(sigma, vec![at("a")]);
        assert_eq!(parts, vec![m("T <| b |> F"), m("T <| c |> F")]);
        assert_eq!(f_sigma(&sigma, &[parts[0].term().clone(), parts[1].term().clone()]), p.term().clone());
    }

    #[test]
    fn f_sigma_indexing() {
        let sigma = [at("a"), at("b")];
        let parts = [c("T"), c("F"), c("U"), c("T")];
        assert_eq!(
            f_sigma(&sigma, &parts),
            c("(T <| b |> F) <| a |> (U <| b |> T)")
        );
    }

    #[test]
    fn clu_examples() {
        let p = c("(F <| a |> U) <| b |> (T <| a |> U)");
        assert_eq!(
            cl_basic_form(&p, &order("a,b"), Valuedness::Three).unwrap().term(),
            &c("(F <| b |> T) <| a |> (U <| b |> U)")
        );
        assert_eq!(
            cl_basic_form(&p, &order("b,a"), Valuedness::Three).unwrap().term(),
            &p
        );
        assert_eq!(
            cl_basic_form(&c("U <| a |> U"), &order(""), Valuedness::Three).unwrap().term(),
            &c("U")
        );
        assert_eq!(
            cl_basic_form(&p, &order("a,b"), Valuedness::Two),
            Err(Error::UndefinedInTwoValued)
        );
    }

    #[test]
    fn cl_reorders_commuting_tests() {
        let s = seq_to_cond(&parse_seq("a &* b").unwrap());
        let t = seq_to_cond(&parse_seq("b &* a").unwrap());
        let o = order("");
        assert_eq!(
            cl_basic_form(&s, &o, Valuedness::Two).unwrap(),
            cl_basic_form(&t, &o, Valuedness::Two).unwrap()
        );
    }

    #[test]
    fn validate_examples() {
        let any = order("c,b,a");
        let t = c("(T <| b |> F) <| a |> (T <| c |> F)");
        assert!(validate_form(FormKind::Cl, &t, &any));
        assert!(validate_form(FormKind::Cl, &t, &order("")));
        assert!(!validate_form(FormKind::Clu, &c("U <| a |> U"), &any));
        assert!(validate_form(FormKind::Clu, &c("U"), &any));
        assert!(!validate_form(FormKind::Mem, &c("T <| a |> (T <| a |> F)"), &any));
        assert!(validate_form(FormKind::Basic, &c("T <| a |> (T <| a |> F)"), &any));
        assert!(!validate_form(FormKind::Basic, &c("T <| (T <| a |> F) |> F"), &any));
        // commuting tests must appear in order
        let ab = c("(T <| b |> F) <| a |> (F <| b |> F)");
        let ba = c("(T <| a |> F) <| b |> (F <| a |> F)");
        assert!(validate_form(FormKind::Cl, &ab, &order("a,b")));
        assert!(!validate_form(FormKind::Cl, &ba, &order("a,b")));
        assert!(validate_form(FormKind::Cl, &ba, &order("b,a")));
        assert!(!validate_form(FormKind::Cl, &c("U"), &any));
    }

    #[test]
    fn order_parsing() {
        assert!(AtomOrder::parse("a,b,a").is_err());
        let o = order("d,a");
        assert_eq!(o.sort(&set(&["a", "b", "c", "d"])), vec![at("d"), at("a"), at("b"), at("c")]);
    }
}
