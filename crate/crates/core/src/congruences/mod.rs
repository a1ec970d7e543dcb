//! Deciding the free, memorising and conditional valuation congruences, and
//! checking open equations against them.
//!
//! Two terms are congruent iff their normal forms coincide. An open equation
//! is valid iff the closed equation obtained by replacing its variables with
//! fresh atoms is, since atoms not mentioned by any axiom behave like
//! variables.

mod registry;

use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::normalforms::{bf, cl_basic_form, mbf, AtomOrder, BasicForm, Valuedness};
use crate::terms::{AtomSet, CondTerm, Signature, Term, VarCloser};
use crate::textio::print;
use crate::translate::seq_to_cond;

pub use registry::{axiom_set, export, parse_axiom_file, parse_equation, set_names, set_source};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Free,
    Mem,
    Cl,
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Family, String> {
        match s {
            "free" => Ok(Family::Free),
            "mem" => Ok(Family::Mem),
            "cl" => Ok(Family::Cl),
            _ => Err(format!("unknown congruence `{s}` (expected free, mem or cl)")),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Free => "free",
            Family::Mem => "mem",
            Family::Cl => "cl",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CongruenceId {
    pub family: Family,
    pub valued: Valuedness,
}

impl CongruenceId {
    pub const fn new(family: Family, valued: Valuedness) -> CongruenceId {
        CongruenceId { family, valued }
    }

    /// All six congruences, finest first within each valuedness.
    pub const ALL: [CongruenceId; 6] = [
        CongruenceId::new(Family::Free, Valuedness::Two),
        CongruenceId::new(Family::Mem, Valuedness::Two),
        CongruenceId::new(Family::Cl, Valuedness::Two),
        CongruenceId::new(Family::Free, Valuedness::Three),
        CongruenceId::new(Family::Mem, Valuedness::Three),
        CongruenceId::new(Family::Cl, Valuedness::Three),
    ];
}

impl fmt::Display for CongruenceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = match self.valued {
            Valuedness::Two => "two",
            Valuedness::Three => "three",
        };
        write!(f, "({},{v})", self.family)
    }
}

/// A named equation whose sides share a signature.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Equation {
    pub name: String,
    pub lhs: Term,
    pub rhs: Term,
}

impl Equation {
    pub fn new(name: &str, lhs: Term, rhs: Term) -> Result<Equation, Error> {
        if lhs.signature() != rhs.signature() {
            return Err(Error::MixedSignature(name.to_string()));
        }
        Ok(Equation {
            name: name.to_string(),
            lhs,
            rhs,
        })
    }

    /// Parses `lhs = rhs`, conditional iff `<|` occurs.
    pub fn parse(name: &str, text: &str) -> Result<Equation, Error> {
        parse_equation(name, text)
    }

    pub fn signature(&self) -> Signature {
        self.lhs.signature()
    }

    pub fn is_three_valued(&self) -> bool {
        self.lhs.is_three_valued() || self.rhs.is_three_valued()
    }
}

impl fmt::Display for Equation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} = {}", self.name, print(&self.lhs), print(&self.rhs))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomSet {
    pub name: String,
    pub signature: Signature,
    pub equations: Vec<Equation>,
}

impl AxiomSet {
    pub fn new(name: &str, equations: Vec<Equation>) -> Result<AxiomSet, Error> {
        let signature = equations
            .first()
            .map(Equation::signature)
            .unwrap_or(Signature::Seq);
        if let Some(e) = equations.iter().find(|e| e.signature() != signature) {
            return Err(Error::MixedSignature(e.name.clone()));
        }
        Ok(AxiomSet {
            name: name.to_string(),
            signature,
            equations,
        })
    }

    pub fn get(&self, name: &str) -> Option<&Equation> {
        self.equations.iter().find(|e| e.name == name)
    }

    /// The set without the named axiom.
    pub fn without(&self, name: &str) -> AxiomSet {
        AxiomSet {
            name: format!("{}-{}", self.name, name),
            signature: self.signature,
            equations: self
                .equations
                .iter()
                .filter(|e| e.name != name)
                .cloned()
                .collect(),
        }
    }
}

fn to_cond(t: &Term) -> CondTerm {
    match t {
        Term::Cond(c) => c.clone(),
        Term::Seq(s) => seq_to_cond(s),
    }
}

/// The normal form of a closed term under `c`. Sequential terms are
/// translated to conditional ones first; `order` only matters for `cl`.
pub fn normal_form(t: &Term, c: CongruenceId, order: &AtomOrder) -> Result<BasicForm, Error> {
    let ct = to_cond(t);
    if !ct.is_closed() {
        return Err(Error::OpenTerm);
    }
    if c.valued == Valuedness::Two && ct.is_three_valued() {
        return Err(Error::UndefinedInTwoValued);
    }
    match c.family {
        Family::Free => bf(&ct),
        Family::Mem => Ok(mbf(&ct)?.as_basic()),
        Family::Cl => cl_basic_form(&ct, order, c.valued),
    }
}

pub fn equiv(s: &Term, t: &Term, c: CongruenceId, order: &AtomOrder) -> Result<bool, Error> {
    Ok(normal_form(s, c, order)? == normal_form(t, c, order)?)
}

/// The outcome of checking one equation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    /// Normal forms of the two sides after closing.
    Fails { lhs: CondTerm, rhs: CondTerm },
}

impl Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }
}

/// Decides an open equation by closing both sides with one shared mapping
/// of variables to fresh atoms.
pub fn check_equation_verdict(e: &Equation, c: CongruenceId) -> Result<Verdict, Error> {
    let reserved: AtomSet = e.lhs.alphabet().union(&e.rhs.alphabet());
    let mut closer = VarCloser::new(reserved);
    let lhs = closer.close(&e.lhs);
    let rhs = closer.close(&e.rhs);
    let order = AtomOrder::lexicographic();
    let l = normal_form(&lhs, c, &order)?;
    let r = normal_form(&rhs, c, &order)?;
    Ok(if l == r {
        Verdict::Holds
    } else {
        Verdict::Fails {
            lhs: l.into_term(),
            rhs: r.into_term(),
        }
    })
}

pub fn check_equation(e: &Equation, c: CongruenceId) -> Result<bool, Error> {
    Ok(check_equation_verdict(e, c)?.holds())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub set: String,
    pub congruence: CongruenceId,
    pub verdicts: Vec<(String, Verdict)>,
}

impl VerifyReport {
    pub fn all_hold(&self) -> bool {
        self.verdicts.iter().all(|(_, v)| v.holds())
    }

    pub fn holding(&self) -> usize {
        self.verdicts.iter().filter(|(_, v)| v.holds()).count()
    }

    /// One line per axiom, `name<TAB>holds` or `name<TAB>fails<TAB>nf<TAB>nf`.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for (name, v) in &self.verdicts {
            match v {
                Verdict::Holds => out.push_str(&format!("{name}\tholds\n")),
                Verdict::Fails { lhs, rhs } => {
                    out.push_str(&format!("{name}\tfails\t{lhs}\t{rhs}\n"))
                }
            }
        }
        out.push_str(&format!(
            "{}/{} hold in {} under {}\n",
            self.holding(),
            self.verdicts.len(),
            self.set,
            self.congruence
        ));
        out
    }
}

pub fn verify_set(set: &AxiomSet, c: CongruenceId) -> Result<VerifyReport, Error> {
    let verdicts = set
        .equations
        .iter()
        .map(|e| Ok((e.name.clone(), check_equation_verdict(e, c)?)))
        .collect::<Result<_, Error>>()?;
    Ok(VerifyReport {
        set: set.name.clone(),
        congruence: c,
        verdicts,
    })
}

pub fn verify_axiom_set(name: &str, c: CongruenceId) -> Result<VerifyReport, Error> {
    verify_set(&axiom_set(name)?, c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::textio::{parse_cond, parse_seq};

    const FREE2: CongruenceId = CongruenceId::new(Family::Free, Valuedness::Two);
    const MEM2: CongruenceId = CongruenceId::new(Family::Mem, Valuedness::Two);
    const CL2: CongruenceId = CongruenceId::new(Family::Cl, Valuedness::Two);
    const MEM3: CongruenceId = CongruenceId::new(Family::Mem, Valuedness::Three);
    const CL3: CongruenceId = CongruenceId::new(Family::Cl, Valuedness::Three);

    fn seq(s: &str) -> Term {
        Term::Seq(parse_seq(s).unwrap())
    }

    fn eq(s: &str) -> Equation {
        Equation::parse("e", s).unwrap()
    }

    fn nf(s: &str, c: CongruenceId) -> CondTerm {
        normal_form(&seq(s), c, &AtomOrder::lexicographic())
            .unwrap()
            .into_term()
    }

    #[test]
    fn normal_form_examples() {
        assert_eq!(nf("a && a", FREE2), parse_cond("(T <| a |> F) <| a |> F").unwrap());
        assert_eq!(nf("a && a", MEM2), parse_cond("T <| a |> F").unwrap());
        assert_eq!(nf("!(!a && !b)", FREE2), parse_cond("T <| a |> (T <| b |> F)").unwrap());
        assert_eq!(
            normal_form(&seq("a && U"), CL2, &AtomOrder::lexicographic()),
            Err(Error::UndefinedInTwoValued)
        );
        assert_eq!(
            normal_form(&seq("?x"), CL2, &AtomOrder::lexicographic()),
            Err(Error::OpenTerm)
        );
    }

    #[test]
    fn equiv_examples() {
        let o = AtomOrder::lexicographic();
        assert!(equiv(&seq("a &* b"), &seq("b &* a"), CL2, &o).unwrap());
        assert!(!equiv(&seq("a &* b"), &seq("b &* a"), MEM2, &o).unwrap());
        assert!(!equiv(&seq("a && b"), &seq("b && a"), CL2, &o).unwrap());
    }

    #[test]
    fn check_equation_examples() {
        assert!(check_equation(&eq("(?x && U) || U = U"), CL3).unwrap());
        assert!(!check_equation(&eq("(?x && U) || U = U"), MEM3).unwrap());
        assert!(!check_equation(&eq("?x && F = F"), CL2).unwrap());
        assert!(check_equation(
            &eq("(?x && !?x) || (?y && !?y) = (?y && !?y) || (?x && !?x)"),
            CL2
        )
        .unwrap());
        assert!(!check_equation(&eq("?x && !?x = ?y && !?y"), CL2).unwrap());
    }

    #[test]
    fn variables_do_not_capture_atoms() {
        // v1 already occurs, so ?x must not become v1
        assert!(!check_equation(&eq("?x && v1 = v1 && v1"), CL2).unwrap());
        assert!(check_equation(&eq("?x && v1 = ?x && v1"), FREE2).unwrap());
    }

    #[test]
    fn mixed_signatures_rejected() {
        let l = Term::Cond(parse_cond("?x").unwrap());
        assert!(matches!(
            Equation::new("m", l, seq("?x")),
            Err(Error::MixedSignature(_))
        ));
    }

    #[test]
    fn report_rendering() {
        let r = verify_axiom_set("FULL_defs", FREE2);
        // the definitions mention F but not U, so the two-valued check applies
        let r = r.unwrap();
        assert!(r.all_hold());
        assert!(r.render().ends_with("2/2 hold in FULL_defs under (free,two)\n"));
    }
}
