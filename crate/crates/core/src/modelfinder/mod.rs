//! Finite-model search over the signature `{!, and, or, T, F, U}`.
//!
//! Given axioms and a goal, [`find_model`] looks for a finite algebra that
//! satisfies every axiom but violates the goal for some assignment of the
//! goal's variables. The search fills operation tables cell by cell,
//! evaluates ground instances as soon as the cells they need are known,
//! forces a cell when one side of an instance is known and the other only
//! waits for its outermost operation, and restricts each decision to values
//! already in use plus one fresh element.
//!
//! Short-circuit and full connectives are both read as the binary `and`/`or`
//! tables, so one equation list may use either family but not both.

mod format;
mod recheck;
mod search;

use std::collections::BTreeMap;
use std::fmt;
use std::time::{Duration, Instant};

use crate::congruences::{axiom_set, Equation};
use crate::error::Error;
use crate::terms::{Constant, SeqTerm, Term, Var};
use crate::translate::cond_to_seq;

pub use format::{parse_counter_example, render_counter_example};
pub use recheck::recheck;

/// Operation tables over `{0, ..., size-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteAlgebra {
    pub size: usize,
    pub neg: Vec<usize>,
    pub and: Vec<Vec<usize>>,
    pub or: Vec<Vec<usize>>,
    /// Only the constants that occur in the equations are bound.
    pub consts: BTreeMap<Constant, usize>,
}

/// The order in which table cells are decided.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CellOrder {
    /// `neg`, then `and`, then `or`, each row-major, then constants and the
    /// goal's witness values.
    RowMajor,
    /// Constants and witness values first, then cells grouped by their
    /// largest argument, so fresh elements enter as late as possible.
    MaxArgument,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub max_size: usize,
    /// Maximum number of decisions per domain size.
    pub budget: u64,
    /// Wall-clock limit for the whole call.
    pub deadline: Duration,
    pub symmetry_breaking: bool,
    pub cell_order: CellOrder,
}

impl Default for SearchConfig {
    fn default() -> SearchConfig {
        SearchConfig {
            max_size: 4,
            budget: 50_000_000,
            deadline: Duration::from_secs(60),
            symmetry_breaking: true,
            cell_order: CellOrder::MaxArgument,
        }
    }
}

/// An algebra and an assignment to the goal's variables under which the
/// goal's sides differ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CounterExample {
    pub algebra: FiniteAlgebra,
    pub witness: Vec<(Var, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    CounterModel(CounterExample),
    /// The whole space up to `max_size` was searched.
    NoModel,
    /// Budget or deadline ran out first.
    Inconclusive(String),
}

impl SearchOutcome {
    pub fn counter_example(&self) -> Option<&CounterExample> {
        match self {
            SearchOutcome::CounterModel(ce) => Some(ce),
            _ => None,
        }
    }
}

impl fmt::Display for SearchOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SearchOutcome::CounterModel(ce) => write!(f, "counter-model of size {}", ce.algebra.size),
            SearchOutcome::NoModel => f.write_str("no model"),
            SearchOutcome::Inconclusive(why) => write!(f, "inconclusive ({why})"),
        }
    }
}

/// Which connectives the `and`/`or` tables stand for.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Connectives {
    ShortCircuit,
    Full,
    Neither,
}

/// Equations translated into the finder's signature.
pub(crate) struct Prepared {
    pub axioms: Vec<(SeqTerm, SeqTerm)>,
    pub goal: (SeqTerm, SeqTerm),
}

fn to_seq(t: &Term) -> SeqTerm {
    match t {
        Term::Seq(s) => s.clone(),
        Term::Cond(c) => cond_to_seq(c),
    }
}

pub(crate) fn connectives_of(terms: &[&SeqTerm]) -> Result<Connectives, Error> {
    let full = terms.iter().any(|t| t.has_full_connectives());
    let sc = terms.iter().any(|t| t.has_short_circuit_connectives());
    match (full, sc) {
        (true, true) => Err(Error::Unsupported(
            "equations mix short-circuit and full connectives".into(),
        )),
        (true, false) => Ok(Connectives::Full),
        (false, true) => Ok(Connectives::ShortCircuit),
        (false, false) => Ok(Connectives::Neither),
    }
}

fn prepare(axioms: &[Equation], goal: &Equation) -> Result<Prepared, Error> {
    let conv = |e: &Equation| -> Result<(SeqTerm, SeqTerm), Error> {
        let pair = (to_seq(&e.lhs), to_seq(&e.rhs));
        if !pair.0.alphabet().is_empty() || !pair.1.alphabet().is_empty() {
            return Err(Error::Unsupported(format!("equation `{}` contains atoms", e.name)));
        }
        Ok(pair)
    };
    let prepared = Prepared {
        axioms: axioms.iter().map(conv).collect::<Result<_, _>>()?,
        goal: conv(goal)?,
    };
    let mut all: Vec<&SeqTerm> = vec![&prepared.goal.0, &prepared.goal.1];
    for (l, r) in &prepared.axioms {
        all.push(l);
        all.push(r);
    }
    connectives_of(&all)?;
    Ok(prepared)
}

/// Searches sizes `2..=cfg.max_size` in turn for a model of `axioms` that
/// refutes `goal`. A one-element algebra satisfies every equation, so it is
/// skipped.
pub fn find_model(axioms: &[Equation], goal: &Equation, cfg: &SearchConfig) -> Result<SearchOutcome, Error> {
    let prepared = prepare(axioms, goal)?;
    let start = Instant::now();
    let mut inconclusive = None;
    for size in 2..=cfg.max_size.max(2) {
        let mut s = search::Search::new(&prepared, size, cfg, start)?;
        match s.run() {
            search::Result::Found(ce) => return Ok(SearchOutcome::CounterModel(ce)),
            search::Result::Exhausted => {}
            search::Result::OutOfBudget => {
                inconclusive = Some(format!("decision budget exhausted at size {size}"));
            }
            search::Result::OutOfTime => {
                return Ok(SearchOutcome::Inconclusive(format!(
                    "deadline of {:?} reached at size {size}",
                    cfg.deadline
                )))
            }
        }
    }
    Ok(match inconclusive {
        Some(why) => SearchOutcome::Inconclusive(why),
        None => SearchOutcome::NoModel,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndependenceReport {
    pub set: String,
    pub entries: Vec<(Equation, SearchOutcome)>,
}

impl IndependenceReport {
    /// True iff every axiom was refuted by a model of the others.
    pub fn independent(&self) -> bool {
        self.entries
            .iter()
            .all(|(_, o)| matches!(o, SearchOutcome::CounterModel(_)))
    }
}

/// For each axiom, searches for a model of the remaining axioms refuting it.
pub fn independence_report(set_name: &str, cfg: &SearchConfig) -> Result<IndependenceReport, Error> {
    let set = axiom_set(set_name)?;
    let mut entries = Vec::new();
    for e in &set.equations {
        let rest = set.without(&e.name);
        entries.push((e.clone(), find_model(&rest.equations, e, cfg)?));
    }
    Ok(IndependenceReport {
        set: set.name,
        entries,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn eq(name: &str, s: &str) -> Equation {
        Equation::parse(name, s).unwrap()
    }

    #[test]
    fn trivial_goal() {
        let cfg = SearchConfig {
            max_size: 2,
            ..SearchConfig::default()
        };
        let out = find_model(&[], &eq("g", "?x = ?y"), &cfg).unwrap();
        let ce = out.counter_example().expect("model");
        assert_eq!(ce.algebra.size, 2);
        let w: Vec<_> = ce.witness.iter().map(|(v, i)| (v.name().to_string(), *i)).collect();
        assert_eq!(w, vec![("x".to_string(), 0), ("y".to_string(), 1)]);
    }

    #[test]
    fn valid_goal_has_no_model() {
        let axioms = vec![eq("dn", "!!?x = ?x")];
        let cfg = SearchConfig {
            max_size: 3,
            ..SearchConfig::default()
        };
        let out = find_model(&axioms, &eq("g", "!!!!?x = ?x"), &cfg).unwrap();
        assert_eq!(out, SearchOutcome::NoModel);
    }

    #[test]
    fn finds_non_commutative_and() {
        let axioms = vec![eq("assoc", "(?x && ?y) && ?z = ?x && (?y && ?z)")];
        let goal = eq("comm", "?x && ?y = ?y && ?x");
        let out = find_model(&axioms, &goal, &SearchConfig::default()).unwrap();
        let ce = out.counter_example().expect("model");
        recheck(&axioms, &goal, ce).unwrap();
    }

    #[test]
    fn both_cell_orders_agree_on_existence() {
        let axioms = vec![eq("dn", "!!?x = ?x"), eq("Or", "?x || ?y = !(!?x && !?y)")];
        let goal = eq("abs", "?x && (?x || ?y) = ?x");
        for order in [CellOrder::RowMajor, CellOrder::MaxArgument] {
            let cfg = SearchConfig {
                cell_order: order,
                ..SearchConfig::default()
            };
            let out = find_model(&axioms, &goal, &cfg).unwrap();
            recheck(&axioms, &goal, out.counter_example().expect("model")).unwrap();
        }
    }

    #[test]
    fn rejects_atoms_and_mixed_connectives() {
        let goal = eq("g", "a && ?x = ?x");
        assert!(matches!(
            find_model(&[], &goal, &SearchConfig::default()),
            Err(Error::Unsupported(_))
        ));
        let goal = eq("g", "?x && ?y = ?x &* ?y");
        assert!(matches!(
            find_model(&[], &goal, &SearchConfig::default()),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn budget_exhaustion_is_inconclusive() {
        let axioms = vec![eq("assoc", "(?x && ?y) && ?z = ?x && (?y && ?z)")];
        let goal = eq("g", "?x && ?x = ?x");
        let cfg = SearchConfig {
            budget: 1,
            ..SearchConfig::default()
        };
        assert!(matches!(
            find_model(&axioms, &goal, &cfg).unwrap(),
            SearchOutcome::Inconclusive(_)
        ));
    }

    #[test]
    fn conditional_goals_go_through_g() {
        let goal = eq("g", "?x <| ?y |> ?z = ?z <| ?y |> ?x");
        let out = find_model(&[], &goal, &SearchConfig::default()).unwrap();
        let ce = out.counter_example().expect("model");
        recheck(&[], &goal, ce).unwrap();
    }
}
