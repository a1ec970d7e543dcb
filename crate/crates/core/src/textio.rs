//! Concrete syntax for both signatures and DOT output for basic-form trees.
//!
//! Conditional terms: `T`, `F`, `U`, atoms, `?x` variables and
//! `p <| q |> r`. The ternary is non-associative: each operand must be a
//! constant, atom, variable or parenthesised term.
//!
//! Sequential terms: `!` binds tightest, then `&&`/`&*`, then `||`/`|*`. All
//! binary operators associate to the left.

use crate::error::{Error, SyntaxError};
use crate::normalforms::is_basic_form;
use crate::terms::{Atom, CondKind, CondTerm, Constant, SeqKind, SeqTerm, Signature, Term, Var};

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Const(Constant),
    Atom(String),
    Var(String),
    LParen,
    RParen,
    CondOpen,
    CondClose,
    Not,
    ScAnd,
    ScOr,
    FullAnd,
    FullOr,
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Const(c) => format!("`{}`", c.symbol()),
            Tok::Atom(a) => format!("atom `{a}`"),
            Tok::Var(v) => format!("variable `?{v}`"),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::CondOpen => "`<|`".into(),
            Tok::CondClose => "`|>`".into(),
            Tok::Not => "`!`".into(),
            Tok::ScAnd => "`&&`".into(),
            Tok::ScOr => "`||`".into(),
            Tok::FullAnd => "`&*`".into(),
            Tok::FullOr => "`|*`".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, SyntaxError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    let err = |i: usize, expected: &str| {
        let found = text[i..]
            .chars()
            .next()
            .map(|c| format!("`{c}`"))
            .unwrap_or_else(|| "end of input".into());
        SyntaxError {
            offset: i,
            expected: expected.into(),
            found,
        }
    };
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let next = bytes.get(i + 1).copied();
        let tok = match c {
            b'(' => {
                i += 1;
                Tok::LParen
            }
            b')' => {
                i += 1;
                Tok::RParen
            }
            b'!' => {
                i += 1;
                Tok::Not
            }
            b'<' if next == Some(b'|') => {
                i += 2;
                Tok::CondOpen
            }
            b'|' if next == Some(b'>') => {
                i += 2;
                Tok::CondClose
            }
            b'|' if next == Some(b'|') => {
                i += 2;
                Tok::ScOr
            }
            b'|' if next == Some(b'*') => {
                i += 2;
                Tok::FullOr
            }
            b'&' if next == Some(b'&') => {
                i += 2;
                Tok::ScAnd
            }
            b'&' if next == Some(b'*') => {
                i += 2;
                Tok::FullAnd
            }
            b'T' | b'F' | b'U' if !next.is_some_and(is_ident_byte) => {
                i += 1;
                Tok::Const(match c {
                    b'T' => Constant::T,
                    b'F' => Constant::F,
                    _ => Constant::U,
                })
            }
            b'a'..=b'z' => {
                while i < bytes.len() && is_ident_byte(bytes[i]) {
                    i += 1;
                }
                Tok::Atom(text[start..i].to_string())
            }
            b'?' => {
                i += 1;
                if i >= bytes.len() || !bytes[i].is_ascii_lowercase() {
                    return Err(err(i, "variable name after `?`"));
                }
                while i < bytes.len() && is_ident_byte(bytes[i]) {
                    i += 1;
                }
                Tok::Var(text[start + 1..i].to_string())
            }
            _ => return Err(err(i, "a term")),
        };
        out.push((start, tok));
    }
    out.push((text.len(), Tok::Eof));
    Ok(out)
}

fn is_ident_byte(b: u8) -> bool {
    b.is_ascii_lowercase() || b.is_ascii_digit() || b == b'_'
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
}

impl Parser {
    fn new(text: &str) -> Result<Parser, SyntaxError> {
        Ok(Parser {
            toks: lex(text)?,
            pos: 0,
        })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.pos].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].1.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &str) -> SyntaxError {
        let (offset, tok) = &self.toks[self.pos];
        SyntaxError {
            offset: *offset,
            expected: expected.into(),
            found: tok.describe(),
        }
    }

    fn expect(&mut self, tok: Tok, expected: &str) -> Result<(), SyntaxError> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            Err(self.error(expected))
        }
    }

    fn finish(&self) -> Result<(), SyntaxError> {
        if *self.peek() == Tok::Eof {
            Ok(())
        } else {
            Err(self.error("end of input"))
        }
    }

    fn cond_term(&mut self) -> Result<CondTerm, SyntaxError> {
        let first = self.cond_primary()?;
        if *self.peek() != Tok::CondOpen {
            return Ok(first);
        }
        self.bump();
        let cond = self.cond_primary()?;
        self.expect(Tok::CondClose, "`|>`")?;
        let else_ = self.cond_primary()?;
        Ok(CondTerm::cond(first, cond, else_))
    }

    fn cond_primary(&mut self) -> Result<CondTerm, SyntaxError> {
        match self.peek().clone() {
            Tok::Const(c) => {
                self.bump();
                Ok(CondTerm::constant(c))
            }
            Tok::Atom(a) => {
                self.bump();
                Ok(CondTerm::atom(Atom::new(&a).expect("lexer yields valid names")))
            }
            Tok::Var(v) => {
                self.bump();
                Ok(CondTerm::var(Var::new(&v).expect("lexer yields valid names")))
            }
            Tok::LParen => {
                self.bump();
                let t = self.cond_term()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(t)
            }
            _ => Err(self.error("a conditional term")),
        }
    }

    fn seq_or(&mut self) -> Result<SeqTerm, SyntaxError> {
        let mut left = self.seq_and()?;
        loop {
            match self.peek() {
                Tok::ScOr => {
                    self.bump();
                    left = SeqTerm::or(left, self.seq_and()?);
                }
                Tok::FullOr => {
                    self.bump();
                    left = SeqTerm::full_or(left, self.seq_and()?);
                }
                _ => return Ok(left),
            }
        }
    }

    fn seq_and(&mut self) -> Result<SeqTerm, SyntaxError> {
        let mut left = self.seq_unary()?;
        loop {
            match self.peek() {
                Tok::ScAnd => {
                    self.bump();
                    left = SeqTerm::and(left, self.seq_unary()?);
                }
                Tok::FullAnd => {
                    self.bump();
                    left = SeqTerm::full_and(left, self.seq_unary()?);
                }
                _ => return Ok(left),
            }
        }
    }

    fn seq_unary(&mut self) -> Result<SeqTerm, SyntaxError> {
        match self.peek().clone() {
            Tok::Not => {
                self.bump();
                Ok(SeqTerm::neg(self.seq_unary()?))
            }
            Tok::Const(c) => {
                self.bump();
                Ok(SeqTerm::constant(c))
            }
            Tok::Atom(a) => {
                self.bump();
                Ok(SeqTerm::atom(Atom::new(&a).expect("lexer yields valid names")))
            }
            Tok::Var(v) => {
                self.bump();
                Ok(SeqTerm::var(Var::new(&v).expect("lexer yields valid names")))
            }
            Tok::LParen => {
                self.bump();
                let t = self.seq_or()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(t)
            }
            _ => Err(self.error("a sequential term")),
        }
    }
}

pub fn parse_cond(text: &str) -> Result<CondTerm, SyntaxError> {
    let mut p = Parser::new(text)?;
    let t = p.cond_term()?;
    p.finish()?;
    Ok(t)
}

pub fn parse_seq(text: &str) -> Result<SeqTerm, SyntaxError> {
    let mut p = Parser::new(text)?;
    let t = p.seq_or()?;
    p.finish()?;
    Ok(t)
}

pub fn parse_term(text: &str, sig: Signature) -> Result<Term, SyntaxError> {
    Ok(match sig {
        Signature::Cond => Term::Cond(parse_cond(text)?),
        Signature::Seq => Term::Seq(parse_seq(text)?),
    })
}

/// Parses a term whose signature is guessed from its tokens: anything
/// containing `<|` is conditional, everything else sequential.
pub fn parse_any(text: &str) -> Result<Term, SyntaxError> {
    if text.contains("<|") {
        parse_term(text, Signature::Cond)
    } else {
        parse_term(text, Signature::Seq)
    }
}

// ---------------------------------------------------------------------------
// Printing

pub fn print_cond(t: &CondTerm) -> String {
    let mut out = String::new();
    write_cond(t, false, &mut out);
    out
}

fn write_cond(t: &CondTerm, operand: bool, out: &mut String) {
    match t.kind() {
        CondKind::Const(c) => out.push_str(c.symbol()),
        CondKind::Atom(a) => out.push_str(a.name()),
        CondKind::Var(v) => {
            out.push('?');
            out.push_str(v.name());
        }
        CondKind::Cond(p, q, r) => {
            if operand {
                out.push('(');
            }
            write_cond(p, true, out);
            out.push_str(" <| ");
            write_cond(q, true, out);
            out.push_str(" |> ");
            write_cond(r, true, out);
            if operand {
                out.push(')');
            }
        }
    }
}

fn seq_prec(t: &SeqTerm) -> u8 {
    match t.kind() {
        SeqKind::ScOr(..) | SeqKind::FullOr(..) => 1,
        SeqKind::ScAnd(..) | SeqKind::FullAnd(..) => 2,
        SeqKind::Neg(_) => 3,
        _ => 4,
    }
}

pub fn print_seq(t: &SeqTerm) -> String {
    let mut out = String::new();
    write_seq(t, &mut out);
    out
}

fn write_seq_child(t: &SeqTerm, parens: bool, out: &mut String) {
    if parens {
        out.push('(');
        write_seq(t, out);
        out.push(')');
    } else {
        write_seq(t, out);
    }
}

fn write_seq(t: &SeqTerm, out: &mut String) {
    let (l, r, op) = match t.kind() {
        SeqKind::Const(c) => return out.push_str(c.symbol()),
        SeqKind::Atom(a) => return out.push_str(a.name()),
        SeqKind::Var(v) => {
            out.push('?');
            return out.push_str(v.name());
        }
        SeqKind::Neg(s) => {
            out.push('!');
            return write_seq_child(s, seq_prec(s) < 3, out);
        }
        SeqKind::ScAnd(l, r) => (l, r, " && "),
        SeqKind::ScOr(l, r) => (l, r, " || "),
        SeqKind::FullAnd(l, r) => (l, r, " &* "),
        SeqKind::FullOr(l, r) => (l, r, " |* "),
    };
    let p = seq_prec(t);
    write_seq_child(l, seq_prec(l) < p, out);
    out.push_str(op);
    write_seq_child(r, seq_prec(r) <= p, out);
}

pub fn print(t: &Term) -> String {
    match t {
        Term::Cond(c) => print_cond(c),
        Term::Seq(s) => print_seq(s),
    }
}

/// Renders a basic form as a DOT digraph. Nodes are numbered in preorder;
/// the then-branch edge is labelled `T` and the else-branch edge `F`.
pub fn to_dot(t: &CondTerm) -> Result<String, Error> {
    if !is_basic_form(t) {
        return Err(Error::NotBasicForm(print_cond(t)));
    }
    let mut nodes = Vec::new();
    let mut edges = Vec::new();
    let mut stack = vec![(t.clone(), None::<(usize, &str)>)];
    while let Some((node, parent)) = stack.pop() {
        let id = nodes.len();
        if let Some((pid, label)) = parent {
            edges.push(format!("  n{pid} -> n{id} [label=\"{label}\"];"));
        }
        match node.kind() {
            CondKind::Const(c) => nodes.push(format!("  n{id} [label=\"{}\"];", c.symbol())),
            CondKind::Cond(p, q, r) => {
                let name = match q.kind() {
                    CondKind::Atom(a) => a.name().to_string(),
                    _ => unreachable!("checked basic form"),
                };
                nodes.push(format!("  n{id} [label=\"{name}\"];"));
                stack.push((r.clone(), Some((id, "F"))));
                stack.push((p.clone(), Some((id, "T"))));
            }
            _ => unreachable!("checked basic form"),
        }
    }
    let mut out = String::from("digraph basic_form {\n");
    for line in nodes.iter().chain(edges.iter()) {
        out.push_str(line);
        out.push('\n');
    }
    out.push_str("}\n");
    Ok(out)
}
