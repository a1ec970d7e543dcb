//! Built-in axiom sets and the `name: lhs = rhs` file format.

use std::fmt::Write as _;

use crate::error::Error;
use crate::terms::Signature;
use crate::textio::{parse_term, print};

use super::{AxiomSet, Equation};

macro_rules! builtin {
    ($($name:literal),* $(,)?) => {
        const BUILTIN: &[(&str, &str)] = &[
            $(($name, include_str!(concat!("../../axioms/", $name, ".ax")))),*
        ];
    };
}

builtin!(
    "CL",
    "CL_consts",
    "CL_TFU",
    "CL_i",
    "CL_ii",
    "CL_TF_i",
    "CL_TF_ii",
    "CL_U_i",
    "CL_U_ii",
    "CL_TFU_i",
    "CL_TFU_ii",
    "EqMSCL",
    "EqMSCL_U",
    "EqCL",
    "EqCL_U",
    "EqCL_0",
    "EqCL_U0",
    "EqMSCL_0",
    "EqMSCL_U0",
    "MSCL_facts",
    "FSCL_0",
    "FSCL_laws",
    "FULL_defs",
    "CP",
    "CP_U",
    "CPmem",
    "CPmem_U",
    "CPcl",
    "CPcl_U",
    "CL_cond",
    "SB",
    "SB2",
    "SB0",
    "FFEL",
);

/// Names of the built-in sets in registry order.
pub fn set_names() -> Vec<&'static str> {
    BUILTIN.iter().map(|(n, _)| *n).collect()
}

/// The source text of a built-in set.
pub fn set_source(name: &str) -> Result<&'static str, Error> {
    BUILTIN
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, src)| *src)
        .ok_or_else(|| Error::UnknownAxiomSet(name.to_string()))
}

pub fn axiom_set(name: &str) -> Result<AxiomSet, Error> {
    parse_axiom_file(name, set_source(name)?)
}

/// Parses one equation `lhs = rhs`. The signature is conditional when `<|`
/// occurs anywhere in the text, sequential otherwise.
pub fn parse_equation(name: &str, text: &str) -> Result<Equation, Error> {
    let (lhs, rhs) = text
        .split_once('=')
        .ok_or_else(|| Error::AxiomFile {
            line: 0,
            msg: format!("expected `lhs = rhs`, got `{}`", text.trim()),
        })?;
    let sig = if text.contains("<|") {
        Signature::Cond
    } else {
        Signature::Seq
    };
    Equation::new(name, parse_term(lhs, sig)?, parse_term(rhs, sig)?)
}

pub fn parse_axiom_file(set_name: &str, text: &str) -> Result<AxiomSet, Error> {
    let mut equations: Vec<Equation> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let wrap = |e: Error| Error::AxiomFile {
            line: line_no,
            msg: e.to_string(),
        };
        let (name, body) = line.split_once(':').ok_or_else(|| Error::AxiomFile {
            line: line_no,
            msg: "expected `name: lhs = rhs`".into(),
        })?;
        let name = name.trim();
        if name.is_empty() {
            return Err(Error::AxiomFile {
                line: line_no,
                msg: "empty axiom name".into(),
            });
        }
        if equations.iter().any(|e| e.name == name) {
            return Err(Error::AxiomFile {
                line: line_no,
                msg: format!("duplicate axiom name `{name}`"),
            });
        }
        equations.push(parse_equation(name, body).map_err(wrap)?);
    }
    AxiomSet::new(set_name, equations)
}

/// Renders a set in the file format accepted by [`parse_axiom_file`].
pub fn export(set: &AxiomSet) -> String {
    let mut out = format!("# {}\n", set.name);
    for e in &set.equations {
        let _ = writeln!(out, "{}: {} = {}", e.name, print(&e.lhs), print(&e.rhs));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashMap;

    #[test]
    fn every_builtin_parses() {
        for name in set_names() {
            let set = axiom_set(name).unwrap_or_else(|e| panic!("{name}: {e}"));
            assert!(!set.equations.is_empty(), "{name}");
        }
    }

    #[test]
    fn sizes() {
        let len = |n: &str| axiom_set(n).unwrap().equations.len();
        assert_eq!(len("CL"), 7);
        assert_eq!(len("CL_TFU"), 10);
        assert_eq!(len("CL_i"), 5);
        assert_eq!(len("CL_ii"), 6);
        assert_eq!(len("EqMSCL"), 5);
        assert_eq!(len("EqCL"), 6);
        assert_eq!(len("EqCL_U"), 7);
        assert_eq!(len("EqCL_0"), 5);
        assert_eq!(len("EqCL_U0"), 6);
        assert_eq!(len("EqMSCL_0"), 4);
        assert_eq!(len("SB"), 10);
        assert_eq!(len("SB2"), 7);
        assert_eq!(len("FFEL"), 10);
        assert_eq!(len("CP"), 4);
        assert_eq!(len("CP_U"), 5);
    }

    #[test]
    fn shared_axiom_names_agree_across_sets() {
        let mut seen: HashMap<String, (String, Equation)> = HashMap::new();
        for name in set_names() {
            for e in axiom_set(name).unwrap().equations {
                if let Some((other, prev)) = seen.get(&e.name) {
                    assert_eq!(prev, &e, "{} differs between {} and {}", e.name, other, name);
                } else {
                    seen.insert(e.name.clone(), (name.to_string(), e));
                }
            }
        }
    }

    #[test]
    fn export_round_trips() {
        for name in set_names() {
            let set = axiom_set(name).unwrap();
            let again = parse_axiom_file(name, &export(&set)).unwrap();
            assert_eq!(set, again);
        }
    }

    #[test]
    fn file_errors() {
        assert!(matches!(
            parse_axiom_file("x", "a: ?x && = ?x"),
            Err(Error::AxiomFile { line: 1, .. })
        ));
        assert!(matches!(
            parse_axiom_file("x", "# c\n\nno colon here"),
            Err(Error::AxiomFile { line: 3, .. })
        ));
        assert!(matches!(
            parse_axiom_file("x", "a: ?x = ?x\na: ?y = ?y"),
            Err(Error::AxiomFile { line: 2, .. })
        ));
        assert!(matches!(axiom_set("nope"), Err(Error::UnknownAxiomSet(_))));
    }
}
