//! Plain-text form of a counter-model:
//!
//! ```text
//! size 2
//! neg
//! 1 0
//! and
//! 0 0
//! 0 1
//! or
//! 0 1
//! 1 1
//! const T 0
//! witness ?x 0
//! ```

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::error::Error;
use crate::terms::{Constant, Var};

use super::{CounterExample, FiniteAlgebra};

fn row(xs: &[usize]) -> String {
    xs.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

pub fn render_counter_example(ce: &CounterExample) -> String {
    let a = &ce.algebra;
    let mut out = format!("size {}\nneg\n{}\nand\n", a.size, row(&a.neg));
    for r in &a.and {
        let _ = writeln!(out, "{}", row(r));
    }
    out.push_str("or\n");
    for r in &a.or {
        let _ = writeln!(out, "{}", row(r));
    }
    for (c, v) in &a.consts {
        let _ = writeln!(out, "const {} {v}", c.symbol());
    }
    for (v, x) in &ce.witness {
        let _ = writeln!(out, "witness ?{} {x}", v.name());
    }
    out
}

fn bad(line: usize, msg: impl Into<String>) -> Error {
    Error::AxiomFile { line, msg: msg.into() }
}

pub fn parse_counter_example(text: &str) -> Result<CounterExample, Error> {
    let lines: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .collect();
    let mut it = lines.into_iter().peekable();
    let (ln, first) = it.next().ok_or_else(|| bad(1, "empty counter-model"))?;
    let size: usize = first
        .strip_prefix("size ")
        .and_then(|s| s.trim().parse().ok())
        .filter(|&s| s > 0)
        .ok_or_else(|| bad(ln, "expected `size N`"))?;
    let numbers = |ln: usize, l: &str| -> Result<Vec<usize>, Error> {
        let xs = l
            .split_whitespace()
            .map(|x| x.parse::<usize>().ok().filter(|&v| v < size))
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| bad(ln, format!("expected elements below {size}")))?;
        if xs.len() != size {
            return Err(bad(ln, format!("expected {size} entries")));
        }
        Ok(xs)
    };
    let table = |header: &str, rows: usize, it: &mut std::iter::Peekable<std::vec::IntoIter<(usize, &str)>>| -> Result<Vec<Vec<usize>>, Error> {
        match it.next() {
            Some((_, l)) if l == header => {}
            Some((ln, _)) => return Err(bad(ln, format!("expected `{header}`"))),
            None => return Err(bad(0, format!("missing `{header}`"))),
        }
        (0..rows)
            .map(|_| {
                let (ln, l) = it.next().ok_or_else(|| bad(0, format!("truncated `{header}` table")))?;
                numbers(ln, l)
            })
            .collect()
    };
    let neg = table("neg", 1, &mut it)?.remove(0);
    let and = table("and", size, &mut it)?;
    let or = table("or", size, &mut it)?;
    let mut consts = BTreeMap::new();
    let mut witness = Vec::new();
    for (ln, l) in it {
        let parts: Vec<&str> = l.split_whitespace().collect();
        let elem = |s: &str| s.parse::<usize>().ok().filter(|&v| v < size).ok_or_else(|| bad(ln, "element out of range"));
        match parts.as_slice() {
            ["const", c, x] => {
                let c = match *c {
                    "T" => Constant::T,
                    "F" => Constant::F,
                    "U" => Constant::U,
                    _ => return Err(bad(ln, "unknown constant")),
                };
                consts.insert(c, elem(x)?);
            }
            ["witness", v, x] => {
                let name = v.strip_prefix('?').ok_or_else(|| bad(ln, "expected `?name`"))?;
                witness.push((Var::new(name)?, elem(x)?));
            }
            _ => return Err(bad(ln, "expected `const` or `witness` line")),
        }
    }
    Ok(CounterExample {
        algebra: FiniteAlgebra { size, neg, and, or, consts },
        witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let text = "size 2\nneg\n1 0\nand\n0 0\n0 1\nor\n0 1\n1 1\nconst T 1\nconst F 0\nwitness ?x 0\nwitness ?y 1\n";
        let ce = parse_counter_example(text).unwrap();
        assert_eq!(ce.algebra.and[1][1], 1);
        assert_eq!(ce.algebra.consts[&Constant::T], 1);
        assert_eq!(render_counter_example(&ce), text);
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(parse_counter_example("size 2\nneg\n1 2\nand\n0 0\n0 1\nor\n0 1\n1 1\n").is_err());
        assert!(parse_counter_example("size 2\nneg\n1 0\nand\n0 0\nor\n0 1\n1 1\n").is_err());
    }
}
