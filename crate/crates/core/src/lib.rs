//! Normal forms, valuation congruences and counter-model search for
//! short-circuit (sequential) and conditional propositional logics.
//!
//! Terms come in two signatures: conditional terms built from `T`, `F`, `U`,
//! atoms and the ternary `p <| q |> r` ("if q then p else r"), and sequential
//! terms built from `!`, the short-circuit connectives `&&`/`||` and the full
//! left-sequential connectives `&*`/`|*`.

pub mod congruences;
pub mod error;
pub mod modelfinder;
pub mod normalforms;
pub mod semantics;
pub mod terms;
pub mod textio;
pub mod translate;

pub use error::{Error, SyntaxError};
pub use terms::{Atom, AtomSet, CondKind, CondTerm, Constant, SeqKind, SeqTerm, Signature, Term, Var};
