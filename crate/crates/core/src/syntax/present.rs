//! Surface forms: austere bars and dots, bare `|ₖ` symbols, and the
//! presentable ASCII notation with defined connectives.

use super::expr::{Category, Expr, Kind};
use super::formation::Formation;
use super::parse::{ParseMode, Parsed};
use super::sugar::{Sugar, View};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Form {
    Austere,
    Bare,
    Presentable,
}

pub fn print(e: &Expr, form: Form) -> String {
    match form {
        Form::Austere => formation(e).austere(),
        Form::Bare => formation(e).bare(),
        Form::Presentable => {
            let mut s = String::new();
            if e.is_term() {
                term(e, &mut s);
            } else {
                formula(e, 0, &mut s);
            }
            s
        }
    }
}

fn formation(e: &Expr) -> Formation {
    Formation::from_symbols(e.symbols()).expect("expressions are nonempty")
}

// Binding levels: quantifiers open to the right (0), <-> (1), -> (2),
// or (3), and (4), atoms and identities (5), prefix forms (6).
fn formula(e: &Expr, min: u8, out: &mut String) {
    let view = View::of(e);
    let level = match &view {
        View::Iff(..) => 1,
        View::Implies(..) => 2,
        View::Or(..) => 3,
        View::And(..) => 4,
        View::Exists(..) => 0,
        View::Identity(..) => 5,
        View::Primitive if matches!(e.kind(), Kind::Universal(..)) => 0,
        View::Primitive if matches!(e.kind(), Kind::Atom(..)) => 5,
        _ => 6,
    };
    let wrap = level < min;
    if wrap {
        out.push('(');
    }
    let binary = |out: &mut String, a: &Expr, op: &str, b: &Expr, l: u8, r: u8| {
        formula(a, l, out);
        out.push(' ');
        out.push_str(op);
        out.push(' ');
        formula(b, r, out);
    };
    match &view {
        View::Iff(a, b) => binary(out, a, "<->", b, 1, 2),
        View::Implies(a, b) => binary(out, a, "->", b, 3, 2),
        View::Or(a, b) => binary(out, a, "or", b, 3, 4),
        View::And(a, b) => binary(out, a, "and", b, 4, 5),
        View::Not(a) => {
            out.push_str("not ");
            formula(a, 6, out);
        }
        View::Exists(y, a) => {
            out.push_str(&format!("exists v{y}. "));
            formula(a, 0, out);
        }
        View::Truth(a) => {
            out.push_str("TT(");
            formula(a, 0, out);
            out.push(')');
        }
        View::Identity(a, b) => {
            term(a, out);
            out.push_str(" = ");
            term(b, out);
        }
        _ => match e.kind() {
            Kind::Atom(b, a) => {
                term(a, out);
                out.push_str(" in ");
                term(b, out);
            }
            Kind::JointFormula(a, b) => {
                out.push_str("nor(");
                formula(a, 0, out);
                out.push_str(", ");
                formula(b, 0, out);
                out.push(')');
            }
            Kind::Universal(y, a) => {
                out.push_str(&format!("all v{y}. "));
                formula(a, 0, out);
            }
            _ => unreachable!("formula view over a term"),
        },
    }
    if wrap {
        out.push(')');
    }
}

fn term(e: &Expr, out: &mut String) {
    let call = |out: &mut String, name: &str, args: &[&Expr]| {
        out.push_str(name);
        out.push('(');
        for (i, a) in args.iter().enumerate() {
            if i > 0 {
                out.push_str(", ");
            }
            term(a, out);
        }
        out.push(')');
    };
    match View::of(e) {
        View::Comp(a) => call(out, "comp", &[&a]),
        View::Union(a, b) => call(out, "union", &[&a, &b]),
        View::Inter(a, b) => call(out, "inter", &[&a, &b]),
        View::Minus(a, b) => call(out, "minus", &[&a, &b]),
        _ => match e.kind() {
            Kind::Noema(i) => out.push_str(&format!("v{i}")),
            Kind::Alethizor => out.push('T'),
            Kind::Enumerator => out.push('E'),
            Kind::JointTerm(a, b) => call(out, "nor", &[a, b]),
            Kind::Abstraction(y, a) => {
                out.push_str(&format!("{{v{y} | "));
                formula(a, 0, out);
                out.push('}');
            }
            _ => unreachable!("term view over a formula"),
        },
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Word(String),
    Var(u64),
    Punct(&'static str),
}

fn lex(text: &str) -> Result<Vec<Tok>> {
    const PUNCT: [&str; 9] = ["<->", "->", "(", ")", "{", "}", "|", ",", "."];
    let mut toks = Vec::new();
    let b = text.as_bytes();
    let mut i = 0;
    'outer: while i < b.len() {
        let c = b[i];
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        if c == b'=' {
            toks.push(Tok::Punct("="));
            i += 1;
            continue;
        }
        for p in PUNCT {
            if text[i..].starts_with(p) {
                toks.push(Tok::Punct(p));
                i += p.len();
                continue 'outer;
            }
        }
        if c.is_ascii_alphanumeric() || c == b'_' {
            let start = i;
            while i < b.len() && (b[i].is_ascii_alphanumeric() || b[i] == b'_') {
                i += 1;
            }
            let w = &text[start..i];
            let var = w
                .strip_prefix('v')
                .filter(|d| !d.is_empty() && d.bytes().all(|x| x.is_ascii_digit()));
            match var {
                Some(d) => toks.push(Tok::Var(d.parse().map_err(|_| Error::Syntax {
                    position: toks.len(),
                    message: format!("noema index too large: {w}"),
                })?)),
                None => toks.push(Tok::Word(w.to_string())),
            }
            continue;
        }
        return Err(Error::Syntax {
            position: toks.len(),
            message: format!(
                "unexpected character `{}`",
                text[i..].chars().next().unwrap()
            ),
        });
    }
    Ok(toks)
}

struct Reader {
    toks: Vec<Tok>,
    pos: usize,
}

impl Reader {
    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            position: self.pos,
            message: message.into(),
        })
    }

    fn peek_punct(&self, p: &str) -> bool {
        matches!(self.toks.get(self.pos), Some(Tok::Punct(q)) if *q == p)
    }

    fn peek_word(&self, w: &str) -> bool {
        matches!(self.toks.get(self.pos), Some(Tok::Word(x)) if x == w)
    }

    fn punct(&mut self, p: &str) -> Result<()> {
        if self.peek_punct(p) {
            self.pos += 1;
            Ok(())
        } else {
            self.err(format!("expected `{p}`"))
        }
    }

    fn word(&mut self, w: &str) -> bool {
        if self.peek_word(w) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn var(&mut self) -> Result<u64> {
        match self.toks.get(self.pos) {
            Some(Tok::Var(i)) => {
                self.pos += 1;
                Ok(*i)
            }
            _ => self.err("expected a noema `v<k>`"),
        }
    }

    fn formula(&mut self) -> Result<Expr> {
        let mut a = self.implication()?;
        while self.peek_punct("<->") {
            self.pos += 1;
            let b = self.implication()?;
            a = Sugar::iff(a, b);
        }
        Ok(a)
    }

    fn implication(&mut self) -> Result<Expr> {
        let a = self.disjunction()?;
        if self.peek_punct("->") {
            self.pos += 1;
            let b = self.implication()?;
            return Ok(Sugar::implies(a, b));
        }
        Ok(a)
    }

    fn disjunction(&mut self) -> Result<Expr> {
        let mut a = self.conjunction()?;
        while self.word("or") {
            let b = self.conjunction()?;
            a = Sugar::or(a, b);
        }
        Ok(a)
    }

    fn conjunction(&mut self) -> Result<Expr> {
        let mut a = self.unary()?;
        while self.word("and") {
            let b = self.unary()?;
            a = Sugar::and(a, b);
        }
        Ok(a)
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.word("not") {
            return Ok(Sugar::not(self.unary()?));
        }
        for (q, exists) in [("all", false), ("exists", true)] {
            if self.word(q) {
                let y = self.var()?;
                self.punct(".")?;
                let body = self.formula()?;
                return Ok(if exists {
                    Sugar::exists(y, body)
                } else {
                    Expr::universal(y, body)
                });
            }
        }
        if self.word("TT") {
            self.punct("(")?;
            let a = self.formula()?;
            self.punct(")")?;
            return Ok(Sugar::truth(a));
        }
        if self.peek_punct("(") {
            self.pos += 1;
            let a = self.formula()?;
            self.punct(")")?;
            return Ok(a);
        }
        // `nor(` opens either a term joint followed by `in`/`=`, or a formula joint
        let save = self.pos;
        match self.atomic() {
            Ok(a) => Ok(a),
            Err(e) if self.toks.get(save) == Some(&Tok::Word("nor".into())) => {
                self.pos = save + 1;
                self.punct("(")
                    .and_then(|_| self.formula())
                    .and_then(|a| {
                        self.punct(",")?;
                        let b = self.formula()?;
                        self.punct(")")?;
                        Ok(Expr::joint_formula(a, b))
                    })
                    .map_err(|_| e)
            }
            Err(e) => Err(e),
        }
    }

    fn atomic(&mut self) -> Result<Expr> {
        let a = self.term()?;
        if self.word("in") {
            let b = self.term()?;
            return Ok(Sugar::member(a, b));
        }
        if self.peek_punct("=") {
            self.pos += 1;
            let b = self.term()?;
            return Ok(Sugar::identity(a, b));
        }
        self.err("expected `in` or `=` after a term")
    }

    fn args(&mut self, n: usize) -> Result<Vec<Expr>> {
        self.punct("(")?;
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            if i > 0 {
                self.punct(",")?;
            }
            out.push(self.term()?);
        }
        self.punct(")")?;
        Ok(out)
    }

    fn term(&mut self) -> Result<Expr> {
        if let Some(Tok::Var(i)) = self.toks.get(self.pos) {
            let i = *i;
            self.pos += 1;
            return Ok(Expr::noema(i));
        }
        if self.peek_punct("{") {
            self.pos += 1;
            let y = self.var()?;
            self.punct("|")?;
            let body = self.formula()?;
            self.punct("}")?;
            return Ok(Expr::abstraction(y, body));
        }
        let w = match self.toks.get(self.pos) {
            Some(Tok::Word(w)) => w.clone(),
            _ => return self.err("expected a term"),
        };
        self.pos += 1;
        let take2 = |r: &mut Reader, f: fn(Expr, Expr) -> Expr| -> Result<Expr> {
            let mut a = r.args(2)?;
            let b = a.pop().unwrap();
            Ok(f(a.pop().unwrap(), b))
        };
        match w.as_str() {
            "T" => Ok(Expr::alethizor()),
            "E" => Ok(Expr::enumerator()),
            "nor" => take2(self, Expr::joint_term),
            "union" => take2(self, Sugar::union),
            "inter" => take2(self, Sugar::inter),
            "minus" => take2(self, Sugar::minus),
            "comp" => Ok(Sugar::comp(self.args(1)?.pop().unwrap())),
            _ => {
                self.pos -= 1;
                self.err(format!("unknown term `{w}`"))
            }
        }
    }

    fn finish(&self) -> Result<()> {
        if self.pos == self.toks.len() {
            Ok(())
        } else {
            self.err("trailing input")
        }
    }
}

/// Parses the presentable notation.
pub fn parse_presentable(text: &str, mode: ParseMode) -> Result<Parsed> {
    let toks = lex(text)?;
    let run = |cat: Category| -> Result<Expr> {
        let mut r = Reader {
            toks: toks.clone(),
            pos: 0,
        };
        let e = match cat {
            Category::Term => r.term()?,
            Category::Formula => r.formula()?,
        };
        r.finish()?;
        Ok(e)
    };
    match mode {
        ParseMode::Term => run(Category::Term).map(|expr| Parsed {
            expr,
            category: Category::Term,
        }),
        ParseMode::Formula => run(Category::Formula).map(|expr| Parsed {
            expr,
            category: Category::Formula,
        }),
        ParseMode::Auto => match run(Category::Formula) {
            Ok(expr) => Ok(Parsed {
                expr,
                category: Category::Formula,
            }),
            Err(fe) => run(Category::Term)
                .map(|expr| Parsed {
                    expr,
                    category: Category::Term,
                })
                .map_err(|_| fe),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(s: &str) -> Expr {
        parse_presentable(s, ParseMode::Formula).unwrap().expr
    }

    #[test]
    fn russell_prints() {
        let v0 = Expr::noema(0);
        let r = Expr::abstraction(0, Sugar::not(Sugar::member(v0.clone(), v0)));
        assert_eq!(print(&r, Form::Presentable), "{v0 | not (v0 in v0)}");
        assert_eq!(
            parse_presentable("{v0 | not (v0 in v0)}", ParseMode::Term)
                .unwrap()
                .expr,
            r
        );
    }

    #[test]
    fn bare_and_austere() {
        let tt = Expr::atom(Expr::alethizor(), Expr::alethizor());
        assert_eq!(print(&tt, Form::Bare), "|₃|₃");
        assert_eq!(print(&Expr::noema(1), Form::Austere), "|......");
    }

    #[test]
    fn precedence_round_trips() {
        for s in [
            "T in T and E in T or T in E",
            "T in T -> E in T -> T in E",
            "(T in T -> E in T) -> T in E",
            "not (all v0. v0 in T) and T in T",
            "TT(v0 in T) <-> v0 in {v1 | v1 in v0}",
            "nor(T in T, E in E)",
            "nor(T, E) in T",
            "union(T, comp(E)) = minus(E, T)",
            "exists v2. v2 in v2",
        ] {
            let e = f(s);
            assert_eq!(f(&print(&e, Form::Presentable)), e, "{s}");
        }
    }

    #[test]
    fn syntax_errors_have_positions() {
        assert!(matches!(
            parse_presentable("T in", ParseMode::Formula),
            Err(Error::Syntax { position: 2, .. })
        ));
        assert!(parse_presentable("T in T T", ParseMode::Formula).is_err());
    }
}
