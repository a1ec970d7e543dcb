//! Immutable term representations for the conditional signature
//! (`T`, `F`, `U`, atoms, variables and Hoare's ternary `p <| q |> r`) and the
//! sequential signature (negation, short-circuit and full left-sequential
//! connectives).
//!
//! Terms are reference-counted trees. Operations that rebuild terms
//! (substitution, reductions, normalisation) share unchanged subterms, so a
//! term is in general a DAG whose *tree* size may be exponential in the number
//! of allocated nodes. Every node caches a structural hash, which makes
//! inequality checks cheap; equality on shared DAGs is decided with a
//! pointer-pair memo so it stays linear in the DAG size.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::error::Error;

fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_lowercase() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_lowercase() || c.is_ascii_digit() || c == '_')
}

/// A propositional atom. Atoms compare by name.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Atom(Arc<str>);

impl Atom {
    pub fn new(name: &str) -> Result<Atom, Error> {
        if is_identifier(name) {
            Ok(Atom(Arc::from(name)))
        } else {
            Err(Error::InvalidName(name.to_string()))
        }
    }

    pub fn name(&self) -> &str {
        &self.0
    }
}

impl fmt::Debug for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// A term variable, written `?x` in concrete syntax.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var(Arc<str>);

impl Var {
    pub fn new(name: &str) -> Result<Var, Error> {
        if is_identifier(name) {
            Ok(Var(Arc::from(name)))
        } else {
            Err(Error::InvalidName(name.to_string()))
        }
    }

    pub fn name(&self) -> &str {
        &self.0
    }
}

impl fmt::Debug for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "?{}", self.0)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "?{}", self.0)
    }
}

/// The three truth-value constants shared by both signatures.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Constant {
    T,
    F,
    U,
}

impl Constant {
    pub fn symbol(self) -> &'static str {
        match self {
            Constant::T => "T",
            Constant::F => "F",
            Constant::U => "U",
        }
    }
}

/// An ordered set of atoms (lexicographic by name).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct AtomSet(BTreeSet<Atom>);

impl AtomSet {
    pub fn new() -> AtomSet {
        AtomSet(BTreeSet::new())
    }

    pub fn insert(&mut self, atom: Atom) -> bool {
        self.0.insert(atom)
    }

    pub fn remove(&mut self, atom: &Atom) -> bool {
        self.0.remove(atom)
    }

    pub fn contains(&self, atom: &Atom) -> bool {
        self.0.contains(atom)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Atom> {
        self.0.iter()
    }

    pub fn union(&self, other: &AtomSet) -> AtomSet {
        AtomSet(self.0.union(&other.0).cloned().collect())
    }

    pub fn intersection(&self, other: &AtomSet) -> AtomSet {
        AtomSet(self.0.intersection(&other.0).cloned().collect())
    }

    pub fn is_subset(&self, other: &AtomSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn to_vec(&self) -> Vec<Atom> {
        self.0.iter().cloned().collect()
    }
}

impl FromIterator<Atom> for AtomSet {
    fn from_iter<I: IntoIterator<Item = Atom>>(iter: I) -> Self {
        AtomSet(iter.into_iter().collect())
    }
}

impl IntoIterator for AtomSet {
    type Item = Atom;
    type IntoIter = std::collections::btree_set::IntoIter<Atom>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.into_iter()
    }
}

impl fmt::Display for AtomSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}")?;
        }
        f.write_str("}")
    }
}

fn node_hash<T: Hash>(value: &T) -> u64 {
    let mut h = std::collections::hash_map::DefaultHasher::new();
    value.hash(&mut h);
    h.finish()
}

// ---------------------------------------------------------------------------
// Conditional terms

/// The shape of a conditional term. `Cond(p, q, r)` is `p <| q |> r`,
/// "if `q` then `p` else `r`".
#[derive(Clone)]
pub enum CondKind {
    Const(Constant),
    Atom(Atom),
    Var(Var),
    Cond(CondTerm, CondTerm, CondTerm),
}

struct CondNode {
    kind: CondKind,
    hash: u64,
    depth: u32,
}

/// A term over the conditional signature.
#[derive(Clone)]
pub struct CondTerm(Arc<CondNode>);

impl CondTerm {
    fn from_kind(kind: CondKind) -> CondTerm {
        let (hash, depth) = match &kind {
            CondKind::Const(c) => (node_hash(&(0u8, *c)), 0),
            CondKind::Atom(a) => (node_hash(&(1u8, a)), 0),
            CondKind::Var(v) => (node_hash(&(2u8, v)), 0),
            CondKind::Cond(p, q, r) => (
                node_hash(&(3u8, p.0.hash, q.0.hash, r.0.hash)),
                1 + p.depth().max(q.depth()).max(r.depth()),
            ),
        };
        CondTerm(Arc::new(CondNode { kind, hash, depth }))
    }

    pub fn constant(c: Constant) -> CondTerm {
        CondTerm::from_kind(CondKind::Const(c))
    }

    pub fn t() -> CondTerm {
        CondTerm::constant(Constant::T)
    }

    pub fn f() -> CondTerm {
        CondTerm::constant(Constant::F)
    }

    pub fn u() -> CondTerm {
        CondTerm::constant(Constant::U)
    }

    pub fn atom(a: Atom) -> CondTerm {
        CondTerm::from_kind(CondKind::Atom(a))
    }

    pub fn var(v: Var) -> CondTerm {
        CondTerm::from_kind(CondKind::Var(v))
    }

    /// `then_ <| cond |> else_`.
    pub fn cond(then_: CondTerm, cond: CondTerm, else_: CondTerm) -> CondTerm {
        CondTerm::from_kind(CondKind::Cond(then_, cond, else_))
    }

    /// Shorthand for a basic-form node `then_ <| a |> else_`.
    pub fn node(then_: CondTerm, a: &Atom, else_: CondTerm) -> CondTerm {
        CondTerm::cond(then_, CondTerm::atom(a.clone()), else_)
    }

    pub fn kind(&self) -> &CondKind {
        &self.0.kind
    }

    pub fn as_constant(&self) -> Option<Constant> {
        match self.kind() {
            CondKind::Const(c) => Some(*c),
            _ => None,
        }
    }

    pub fn is_constant(&self, c: Constant) -> bool {
        self.as_constant() == Some(c)
    }

    /// Depth with constants, atoms and variables at depth 0.
    pub fn depth(&self) -> u32 {
        self.0.depth
    }

    pub(crate) fn addr(&self) -> usize {
        Arc::as_ptr(&self.0) as usize
    }

    pub fn ptr_eq(&self, other: &CondTerm) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
    }

    /// True iff no variable occurs.
    pub fn is_closed(&self) -> bool {
        !self.any_leaf(|k| matches!(k, CondKind::Var(_)))
    }

    /// True iff `U` occurs.
    pub fn is_three_valued(&self) -> bool {
        self.any_leaf(|k| matches!(k, CondKind::Const(Constant::U)))
    }

    fn any_leaf(&self, pred: impl Fn(&CondKind) -> bool) -> bool {
        let mut seen = HashSet::new();
        let mut stack = vec![self.clone()];
        while let Some(t) = stack.pop() {
            if !seen.insert(t.addr()) {
                continue;
            }
            match t.kind() {
                CondKind::Cond(p, q, r) => {
                    stack.push(p.clone());
                    stack.push(q.clone());
                    stack.push(r.clone());
                }
                k => {
                    if pred(k) {
                        return true;
                    }
                }
            }
        }
        false
    }

    pub fn alphabet(&self) -> AtomSet {
        let mut out = AtomSet::new();
        let mut seen = HashSet::new();
        let mut stack = vec![self.clone()];
        while let Some(t) = stack.pop() {
            if !seen.insert(t.addr()) {
                continue;
            }
            match t.kind() {
                CondKind::Atom(a) => {
                    out.insert(a.clone());
                }
                CondKind::Cond(p, q, r) => {
                    stack.push(p.clone());
                    stack.push(q.clone());
                    stack.push(r.clone());
                }
                _ => {}
            }
        }
        out
    }

    /// Variables in first-occurrence (left-to-right preorder) order.
    pub fn variables(&self) -> Vec<Var> {
        let mut out = Vec::new();
        let mut seen = HashSet::new();
        self.collect_vars(&mut out, &mut seen);
        out
    }

    fn collect_vars(&self, out: &mut Vec<Var>, seen: &mut HashSet<usize>) {
        if !seen.insert(self.addr()) {
            return;
        }
        match self.kind() {
            CondKind::Var(v) => {
                if !out.contains(v) {
                    out.push(v.clone());
                }
            }
            CondKind::Cond(p, q, r) => {
                p.collect_vars(out, seen);
                q.collect_vars(out, seen);
                r.collect_vars(out, seen);
            }
            _ => {}
        }
    }

    /// Number of nodes of the term read as a tree (saturating).
    pub fn tree_size(&self) -> u64 {
        fn go(t: &CondTerm, memo: &mut HashMap<usize, u64>) -> u64 {
            if let Some(n) = memo.get(&t.addr()) {
                return *n;
            }
            let n = match t.kind() {
                CondKind::Cond(p, q, r) => 1u64
                    .saturating_add(go(p, memo))
                    .saturating_add(go(q, memo))
                    .saturating_add(go(r, memo)),
                _ => 1,
            };
            memo.insert(t.addr(), n);
            n
        }
        go(self, &mut HashMap::new())
    }

    /// Replace atoms and variables according to `f`; `None` keeps the leaf.
    pub fn map_leaves(&self, f: &impl Fn(&CondKind) -> Option<CondTerm>) -> CondTerm {
        fn go(
            t: &CondTerm,
            f: &impl Fn(&CondKind) -> Option<CondTerm>,
            memo: &mut HashMap<usize, CondTerm>,
        ) -> CondTerm {
            if let Some(r) = memo.get(&t.addr()) {
                return r.clone();
            }
            let out = match t.kind() {
                CondKind::Cond(p, q, r) => {
                    CondTerm::cond(go(p, f, memo), go(q, f, memo), go(r, f, memo))
                }
                k => f(k).unwrap_or_else(|| t.clone()),
            };
            memo.insert(t.addr(), out.clone());
            out
        }
        go(self, f, &mut HashMap::new())
    }
}

fn cond_eq(a: &CondTerm, b: &CondTerm, memo: &mut HashSet<(usize, usize)>) -> bool {
    if a.ptr_eq(b) {
        return true;
    }
    if a.0.hash != b.0.hash || a.0.depth != b.0.depth {
        return false;
    }
    match (a.kind(), b.kind()) {
        (CondKind::Const(x), CondKind::Const(y)) => x == y,
        (CondKind::Atom(x), CondKind::Atom(y)) => x == y,
        (CondKind::Var(x), CondKind::Var(y)) => x == y,
        (CondKind::Cond(p1, q1, r1), CondKind::Cond(p2, q2, r2)) => {
            if memo.contains(&(a.addr(), b.addr())) {
                return true;
            }
            let eq = cond_eq(q1, q2, memo) && cond_eq(p1, p2, memo) && cond_eq(r1, r2, memo);
            if eq {
                memo.insert((a.addr(), b.addr()));
            }
            eq
        }
        _ => false,
    }
}

impl PartialEq for CondTerm {
    fn eq(&self, other: &CondTerm) -> bool {
        if self.ptr_eq(other) {
            return true;
        }
        if self.0.hash != other.0.hash {
            return false;
        }
        cond_eq(self, other, &mut HashSet::new())
    }
}

impl Eq for CondTerm {}

impl Hash for CondTerm {
    fn hash<H: Hasher>(&self, state: &mut H) {
        state.write_u64(self.0.hash);
    }
}

impl fmt::Debug for CondTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::textio::print_cond(self))
    }
}

impl fmt::Display for CondTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::textio::print_cond(self))
    }
}

// ---------------------------------------------------------------------------
// Sequential terms

/// The shape of a sequential term.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum SeqKind {
    Const(Constant),
    Atom(Atom),
    Var(Var),
    Neg(SeqTerm),
    /// Short-circuit conjunction `&&`.
    ScAnd(SeqTerm, SeqTerm),
    /// Short-circuit disjunction `||`.
    ScOr(SeqTerm, SeqTerm),
    /// Full left-sequential conjunction `&*`.
    FullAnd(SeqTerm, SeqTerm),
    /// Full left-sequential disjunction `|*`.
    FullOr(SeqTerm, SeqTerm),
}

/// A term over the sequential signature.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SeqTerm(Arc<SeqKind>);

impl SeqTerm {
    pub fn from_kind(kind: SeqKind) -> SeqTerm {
        SeqTerm(Arc::new(kind))
    }

    pub fn constant(c: Constant) -> SeqTerm {
        SeqTerm::from_kind(SeqKind::Const(c))
    }

    pub fn t() -> SeqTerm {
        SeqTerm::constant(Constant::T)
    }

    pub fn f() -> SeqTerm {
        SeqTerm::constant(Constant::F)
    }

    pub fn u() -> SeqTerm {
        SeqTerm::constant(Constant::U)
    }

    pub fn atom(a: Atom) -> SeqTerm {
        SeqTerm::from_kind(SeqKind::Atom(a))
    }

    pub fn var(v: Var) -> SeqTerm {
        SeqTerm::from_kind(SeqKind::Var(v))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn neg(t: SeqTerm) -> SeqTerm {
        SeqTerm::from_kind(SeqKind::Neg(t))
    }

    pub fn and(l: SeqTerm, r: SeqTerm) -> SeqTerm {
        SeqTerm::from_kind(SeqKind::ScAnd(l, r))
    }

    pub fn or(l: SeqTerm, r: SeqTerm) -> SeqTerm {
        SeqTerm::from_kind(SeqKind::ScOr(l, r))
    }

    pub fn full_and(l: SeqTerm, r: SeqTerm) -> SeqTerm {
        SeqTerm::from_kind(SeqKind::FullAnd(l, r))
    }

    pub fn full_or(l: SeqTerm, r: SeqTerm) -> SeqTerm {
        SeqTerm::from_kind(SeqKind::FullOr(l, r))
    }

    pub fn kind(&self) -> &SeqKind {
        &self.0
    }

    pub fn children(&self) -> Vec<&SeqTerm> {
        match self.kind() {
            SeqKind::Neg(t) => vec![t],
            SeqKind::ScAnd(l, r)
            | SeqKind::ScOr(l, r)
            | SeqKind::FullAnd(l, r)
            | SeqKind::FullOr(l, r) => vec![l, r],
            _ => vec![],
        }
    }

    pub(crate) fn addr(&self) -> usize {
        Arc::as_ptr(&self.0) as *const () as usize
    }

    /// Distinct subterms in left-to-right preorder, each shared node once.
    fn nodes(&self) -> Vec<&SeqTerm> {
        let mut out = Vec::new();
        let mut seen = HashSet::new();
        let mut stack = vec![self];
        while let Some(t) = stack.pop() {
            if seen.insert(t.addr()) {
                out.push(t);
                stack.extend(t.children().into_iter().rev());
            }
        }
        out
    }

    pub fn is_closed(&self) -> bool {
        !self.nodes().iter().any(|t| matches!(t.kind(), SeqKind::Var(_)))
    }

    pub fn is_three_valued(&self) -> bool {
        self.nodes()
            .iter()
            .any(|t| matches!(t.kind(), SeqKind::Const(Constant::U)))
    }

    pub fn has_full_connectives(&self) -> bool {
        self.nodes()
            .iter()
            .any(|t| matches!(t.kind(), SeqKind::FullAnd(..) | SeqKind::FullOr(..)))
    }

    pub fn has_short_circuit_connectives(&self) -> bool {
        self.nodes()
            .iter()
            .any(|t| matches!(t.kind(), SeqKind::ScAnd(..) | SeqKind::ScOr(..)))
    }

    pub fn alphabet(&self) -> AtomSet {
        self.nodes()
            .into_iter()
            .filter_map(|t| match t.kind() {
                SeqKind::Atom(a) => Some(a.clone()),
                _ => None,
            })
            .collect()
    }

    /// Variables in order of first occurrence.
    pub fn variables(&self) -> Vec<Var> {
        let mut out: Vec<Var> = Vec::new();
        for t in self.nodes() {
            if let SeqKind::Var(v) = t.kind() {
                if !out.contains(v) {
                    out.push(v.clone());
                }
            }
        }
        out
    }

    pub fn depth(&self) -> u32 {
        fn go(t: &SeqTerm, memo: &mut HashMap<usize, u32>) -> u32 {
            if let Some(&d) = memo.get(&t.addr()) {
                return d;
            }
            let d = t.children().into_iter().map(|c| 1 + go(c, memo)).max().unwrap_or(0);
            memo.insert(t.addr(), d);
            d
        }
        go(self, &mut HashMap::new())
    }

    /// Rebuild with every leaf passed through `f`.
    pub fn map_leaves(&self, f: &impl Fn(&SeqKind) -> Option<SeqTerm>) -> SeqTerm {
        fn go(
            t: &SeqTerm,
            f: &impl Fn(&SeqKind) -> Option<SeqTerm>,
            memo: &mut HashMap<usize, SeqTerm>,
        ) -> SeqTerm {
            if let Some(x) = memo.get(&t.addr()) {
                return x.clone();
            }
            let out = match t.kind() {
                SeqKind::Neg(s) => SeqTerm::neg(go(s, f, memo)),
                SeqKind::ScAnd(l, r) => SeqTerm::and(go(l, f, memo), go(r, f, memo)),
                SeqKind::ScOr(l, r) => SeqTerm::or(go(l, f, memo), go(r, f, memo)),
                SeqKind::FullAnd(l, r) => SeqTerm::full_and(go(l, f, memo), go(r, f, memo)),
                SeqKind::FullOr(l, r) => SeqTerm::full_or(go(l, f, memo), go(r, f, memo)),
                k => f(k).unwrap_or_else(|| t.clone()),
            };
            memo.insert(t.addr(), out.clone());
            out
        }
        go(self, f, &mut HashMap::new())
    }
}

impl fmt::Debug for SeqTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::textio::print_seq(self))
    }
}

impl fmt::Display for SeqTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::textio::print_seq(self))
    }
}

// ---------------------------------------------------------------------------
// Either signature

/// A term of either signature.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Term {
    Cond(CondTerm),
    Seq(SeqTerm),
}

/// Which signature a term or equation lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Signature {
    Cond,
    Seq,
}

impl Term {
    pub fn signature(&self) -> Signature {
        match self {
            Term::Cond(_) => Signature::Cond,
            Term::Seq(_) => Signature::Seq,
        }
    }

    pub fn alphabet(&self) -> AtomSet {
        match self {
            Term::Cond(t) => t.alphabet(),
            Term::Seq(t) => t.alphabet(),
        }
    }

    pub fn is_closed(&self) -> bool {
        match self {
            Term::Cond(t) => t.is_closed(),
            Term::Seq(t) => t.is_closed(),
        }
    }

    pub fn is_three_valued(&self) -> bool {
        match self {
            Term::Cond(t) => t.is_three_valued(),
            Term::Seq(t) => t.is_three_valued(),
        }
    }

    pub fn variables(&self) -> Vec<Var> {
        match self {
            Term::Cond(t) => t.variables(),
            Term::Seq(t) => t.variables(),
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Cond(t) => fmt::Display::fmt(t, f),
            Term::Seq(t) => fmt::Display::fmt(t, f),
        }
    }
}

impl From<CondTerm> for Term {
    fn from(t: CondTerm) -> Term {
        Term::Cond(t)
    }
}

impl From<SeqTerm> for Term {
    fn from(t: SeqTerm) -> Term {
        Term::Seq(t)
    }
}

/// The set of atoms occurring anywhere in `t`.
pub fn alphabet(t: &Term) -> AtomSet {
    t.alphabet()
}

/// Whether `U` occurs in `t`.
pub fn three_valued(t: &Term) -> bool {
    t.is_three_valued()
}

/// The dual: `T` and `F` swap, the outer branches of every conditional swap.
pub fn dual(t: &CondTerm) -> CondTerm {
    fn go(t: &CondTerm, memo: &mut HashMap<usize, CondTerm>) -> CondTerm {
        if let Some(d) = memo.get(&t.addr()) {
            return d.clone();
        }
        let d = match t.kind() {
            CondKind::Const(Constant::T) => CondTerm::f(),
            CondKind::Const(Constant::F) => CondTerm::t(),
            CondKind::Cond(p, q, r) => CondTerm::cond(go(r, memo), go(q, memo), go(p, memo)),
            _ => t.clone(),
        };
        memo.insert(t.addr(), d.clone());
        d
    }
    go(t, &mut HashMap::new())
}

/// Replaces variables by fresh atoms `v1, v2, ...`, skipping names that are
/// reserved or already used. One closer may be applied to several terms so
/// they share a mapping.
#[derive(Clone, Debug)]
pub struct VarCloser {
    taken: AtomSet,
    next: usize,
    mapping: Vec<(Var, Atom)>,
}

impl VarCloser {
    pub fn new(reserved: AtomSet) -> VarCloser {
        VarCloser {
            taken: reserved,
            next: 1,
            mapping: Vec::new(),
        }
    }

    /// The atom assigned to `v`, allocating one on first sight.
    pub fn atom_for(&mut self, v: &Var) -> Atom {
        if let Some((_, a)) = self.mapping.iter().find(|(w, _)| w == v) {
            return a.clone();
        }
        let atom = loop {
            let candidate = Atom::new(&format!("v{}", self.next)).expect("valid atom name");
            self.next += 1;
            if !self.taken.contains(&candidate) {
                break candidate;
            }
        };
        self.taken.insert(atom.clone());
        self.mapping.push((v.clone(), atom.clone()));
        atom
    }

    pub fn close_cond(&mut self, t: &CondTerm) -> CondTerm {
        for a in t.alphabet() {
            self.taken.insert(a);
        }
        let vars = t.variables();
        for v in &vars {
            self.atom_for(v);
        }
        let mapping = self.mapping.clone();
        t.map_leaves(&|k| match k {
            CondKind::Var(v) => mapping
                .iter()
                .find(|(w, _)| w == v)
                .map(|(_, a)| CondTerm::atom(a.clone())),
            _ => None,
        })
    }

    pub fn close_seq(&mut self, t: &SeqTerm) -> SeqTerm {
        for a in t.alphabet() {
            self.taken.insert(a);
        }
        for v in &t.variables() {
            self.atom_for(v);
        }
        let mapping = self.mapping.clone();
        t.map_leaves(&|k| match k {
            SeqKind::Var(v) => mapping
                .iter()
                .find(|(w, _)| w == v)
                .map(|(_, a)| SeqTerm::atom(a.clone())),
            _ => None,
        })
    }

    pub fn close(&mut self, t: &Term) -> Term {
        match t {
            Term::Cond(c) => Term::Cond(self.close_cond(c)),
            Term::Seq(s) => Term::Seq(self.close_seq(s)),
        }
    }

    pub fn mapping(&self) -> &[(Var, Atom)] {
        &self.mapping
    }
}

/// Closes `t` by replacing each distinct variable with a distinct fresh atom
/// outside `reserved` and the alphabet of `t`.
pub fn close_variables(t: &Term, reserved: &AtomSet) -> (Term, BTreeMap<Var, Atom>) {
    let mut closer = VarCloser::new(reserved.union(&t.alphabet()));
    let closed = closer.close(t);
    (closed, closer.mapping().iter().cloned().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::textio::{parse_cond, parse_seq};

    fn c(s: &str) -> CondTerm {
        parse_cond(s).unwrap()
    }

    fn a(s: &str) -> Atom {
        Atom::new(s).unwrap()
    }

    #[test]
    fn atom_names_are_validated() {
        assert!(Atom::new("a").is_ok());
        assert!(Atom::new("x_1").is_ok());
        assert!(Atom::new("A").is_err());
        assert!(Atom::new("1a").is_err());
        assert!(Atom::new("").is_err());
        assert_eq!(a("abc"), a("abc"));
    }

    #[test]
    fn dual_examples() {
        assert_eq!(dual(&c("U")), c("U"));
        assert_eq!(dual(&c("T <| a |> F")), c("T <| a |> F"));
        assert_eq!(dual(&c("T <| a |> U")), c("U <| a |> F"));
        assert_eq!(dual(&c("?x")), c("?x"));
    }

    #[test]
    fn alphabet_examples() {
        assert!(c("T").alphabet().is_empty());
        let s = c("(T <| a |> F) <| b |> (T <| a |> F)").alphabet();
        assert_eq!(s.to_vec(), vec![a("a"), a("b")]);
    }

    #[test]
    fn closing_variables() {
        let t = Term::Seq(parse_seq("?x && ?y").unwrap());
        let (closed, map) = close_variables(&t, &AtomSet::new());
        assert_eq!(closed, Term::Seq(parse_seq("v1 && v2").unwrap()));
        assert_eq!(map.len(), 2);

        let t = Term::Seq(parse_seq("?x && ?x").unwrap());
        let (closed, map) = close_variables(&t, &AtomSet::new());
        assert_eq!(closed, Term::Seq(parse_seq("v1 && v1").unwrap()));
        assert_eq!(map.len(), 1);

        let t = Term::Seq(parse_seq("?x && a").unwrap());
        let reserved: AtomSet = [a("v1")].into_iter().collect();
        let (closed, _) = close_variables(&t, &reserved);
        assert_eq!(closed, Term::Seq(parse_seq("v2 && a").unwrap()));
    }

    #[test]
    fn closing_avoids_atoms_of_the_term() {
        let t = Term::Cond(c("?x <| v1 |> ?y"));
        let (closed, _) = close_variables(&t, &AtomSet::new());
        assert_eq!(closed, Term::Cond(c("v2 <| v1 |> v3")));
    }

    #[test]
    fn depth_and_predicates() {
        let t = c("(T <| a |> F) <| b |> U");
        assert_eq!(t.depth(), 2);
        assert!(t.is_closed());
        assert!(t.is_three_valued());
        assert!(!c("T <| ?x |> F").is_closed());
        assert!(!c("T <| a |> F").is_three_valued());
    }

    #[test]
    fn shared_dags_compare_structurally() {
        // a chain of 60 conditionals sharing both branches: tree size 2^60
        let mut left = CondTerm::t();
        let mut right = CondTerm::t();
        for _ in 0..60 {
            left = CondTerm::node(left.clone(), &a("a"), left);
            right = CondTerm::node(right.clone(), &a("a"), right);
        }
        assert_eq!(left, right);
        let other = CondTerm::node(left.clone(), &a("a"), CondTerm::f());
        assert_ne!(other, CondTerm::node(right.clone(), &a("a"), right.clone()));
    }
}
