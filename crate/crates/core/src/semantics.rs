//! Evaluation of closed terms over the truth values `T`, `F`, `U`.
//!
//! `&&` and `||` follow McCarthy's tables: the left operand decides whether the
//! right one is looked at, and `U` on the left is absorbing. `&*` and `|*` are
//! strict: `U` on either side yields `U`. A conditional evaluates its middle
//! operand and selects a branch, or yields `U`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::error::Error;
use crate::terms::{Atom, AtomSet, CondKind, CondTerm, Constant, SeqKind, SeqTerm, Term};

/// Ordered `T < F < U` for row enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TruthValue {
    T,
    F,
    U,
}

impl TruthValue {
    pub const ALL: [TruthValue; 3] = [TruthValue::T, TruthValue::F, TruthValue::U];
    pub const CLASSICAL: [TruthValue; 2] = [TruthValue::T, TruthValue::F];

    pub fn symbol(self) -> &'static str {
        match self {
            TruthValue::T => "T",
            TruthValue::F => "F",
            TruthValue::U => "U",
        }
    }

    pub fn strict_and(self, rhs: TruthValue) -> TruthValue {
        match (self, rhs) {
            (TruthValue::U, _) | (_, TruthValue::U) => TruthValue::U,
            (TruthValue::T, TruthValue::T) => TruthValue::T,
            _ => TruthValue::F,
        }
    }

    pub fn strict_or(self, rhs: TruthValue) -> TruthValue {
        match (self, rhs) {
            (TruthValue::U, _) | (_, TruthValue::U) => TruthValue::U,
            (TruthValue::F, TruthValue::F) => TruthValue::F,
            _ => TruthValue::T,
        }
    }
}

impl std::ops::Not for TruthValue {
    type Output = TruthValue;

    fn not(self) -> TruthValue {
        match self {
            TruthValue::T => TruthValue::F,
            TruthValue::F => TruthValue::T,
            TruthValue::U => TruthValue::U,
        }
    }
}

impl From<Constant> for TruthValue {
    fn from(c: Constant) -> TruthValue {
        match c {
            Constant::T => TruthValue::T,
            Constant::F => TruthValue::F,
            Constant::U => TruthValue::U,
        }
    }
}

/// An assignment of truth values to atoms.
pub type Valuation = BTreeMap<Atom, TruthValue>;

fn lookup(v: &Valuation, a: &Atom) -> Result<TruthValue, Error> {
    v.get(a)
        .copied()
        .ok_or_else(|| Error::UnboundAtom(a.name().to_string()))
}

pub fn eval_seq(t: &SeqTerm, v: &Valuation) -> Result<TruthValue, Error> {
    Ok(match t.kind() {
        SeqKind::Const(c) => (*c).into(),
        SeqKind::Atom(a) => lookup(v, a)?,
        SeqKind::Var(_) => return Err(Error::OpenTerm),
        SeqKind::Neg(s) => !eval_seq(s, v)?,
        SeqKind::ScAnd(l, r) => match eval_seq(l, v)? {
            TruthValue::T => eval_seq(r, v)?,
            other => other,
        },
        SeqKind::ScOr(l, r) => match eval_seq(l, v)? {
            TruthValue::F => eval_seq(r, v)?,
            other => other,
        },
        SeqKind::FullAnd(l, r) => eval_seq(l, v)?.strict_and(eval_seq(r, v)?),
        SeqKind::FullOr(l, r) => eval_seq(l, v)?.strict_or(eval_seq(r, v)?),
    })
}

pub fn eval_cond(t: &CondTerm, v: &Valuation) -> Result<TruthValue, Error> {
    let mut t = t;
    // the branch taken is a tail position
    loop {
        match t.kind() {
            CondKind::Const(c) => return Ok((*c).into()),
            CondKind::Atom(a) => return lookup(v, a),
            CondKind::Var(_) => return Err(Error::OpenTerm),
            CondKind::Cond(p, q, r) => match eval_cond(q, v)? {
                TruthValue::T => t = p,
                TruthValue::F => t = r,
                TruthValue::U => return Ok(TruthValue::U),
            },
        }
    }
}

pub fn eval(t: &Term, v: &Valuation) -> Result<TruthValue, Error> {
    match t {
        Term::Cond(c) => eval_cond(c, v),
        Term::Seq(s) => eval_seq(s, v),
    }
}

/// All valuations of `atoms`, first atom most significant, values in
/// `T < F < U` order (or `T < F` when two-valued).
pub fn valuations(atoms: &AtomSet, three_valued: bool) -> Vec<Valuation> {
    let values: &[TruthValue] = if three_valued {
        &TruthValue::ALL
    } else {
        &TruthValue::CLASSICAL
    };
    let mut rows = vec![Valuation::new()];
    for a in atoms.iter() {
        rows = rows
            .into_iter()
            .flat_map(|row| {
                values.iter().map(move |&val| {
                    let mut r = row.clone();
                    r.insert(a.clone(), val);
                    r
                })
            })
            .collect();
    }
    rows
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruthTable {
    pub atoms: Vec<Atom>,
    pub rows: Vec<(Vec<TruthValue>, TruthValue)>,
}

impl TruthTable {
    /// Tab-separated, header line of atom names followed by `value`.
    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        for a in &self.atoms {
            out.push_str(a.name());
            out.push('\t');
        }
        out.push_str("value\n");
        for (inputs, value) in &self.rows {
            for x in inputs {
                out.push_str(x.symbol());
                out.push('\t');
            }
            let _ = writeln!(out, "{}", value.symbol());
        }
        out
    }
}

pub fn truth_table(t: &Term, atoms: &AtomSet, three_valued: bool) -> Result<TruthTable, Error> {
    if !t.is_closed() {
        return Err(Error::OpenTerm);
    }
    if let Some(a) = t.alphabet().iter().find(|a| !atoms.contains(a)) {
        return Err(Error::UnboundAtom(a.name().to_string()));
    }
    let rows = valuations(atoms, three_valued)
        .into_iter()
        .map(|v| {
            let value = eval(t, &v)?;
            Ok((v.values().copied().collect(), value))
        })
        .collect::<Result<_, Error>>()?;
    Ok(TruthTable {
        atoms: atoms.to_vec(),
        rows,
    })
}
