//! Substitution on codes (`sub`, `Sub`, `SUB`) and the diagonal constructor.
//!
//! Codes are handled through their decoded structure: `sub` walks the
//! expression a number codes and reassembles the resulting number with
//! `⌢`, never scanning raw bit strings.

use num_bigint::BigUint;
use serde::Serialize;

use crate::codec;
use crate::error::{Error, Result};
use crate::goedel::{self, CodeDag};
use crate::syntax::{self, Category, Expr, Kind, ParseMode};

/// A number together with the expression it is, when it is one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodedExpr {
    source: BigUint,
    expr: Option<Expr>,
}

impl CodedExpr {
    pub fn of(expr: &Expr) -> CodedExpr {
        CodedExpr {
            source: expr.value(),
            expr: Some(expr.clone()),
        }
    }

    /// Decodes a number, preferring a formula reading; formations that are
    /// not expressions stay opaque.
    pub fn from_number(n: &BigUint) -> CodedExpr {
        let expr = codec::formation_of(n).ok().and_then(|f| {
            syntax::parse_formation(&f, ParseMode::Formula)
                .or_else(|_| syntax::parse_formation(&f, ParseMode::Term))
                .ok()
                .map(|p| p.expr)
        });
        CodedExpr {
            source: n.clone(),
            expr,
        }
    }

    pub fn source(&self) -> &BigUint {
        &self.source
    }

    pub fn expr(&self) -> Option<&Expr> {
        self.expr.as_ref()
    }

    /// The unique term reading of the number, which may differ from
    /// [`CodedExpr::expr`] when the formation also reads as a formula.
    pub fn term(&self) -> Option<Expr> {
        match &self.expr {
            Some(e) if e.is_term() => Some(e.clone()),
            _ => codec::formation_of(&self.source)
                .ok()
                .and_then(|f| syntax::parse_formation(&f, ParseMode::Term).ok())
                .map(|p| p.expr),
        }
    }

    /// ⌜x⌝ for this number x.
    pub fn code(&self) -> CodeDag {
        goedel::goedel_code(&self.source)
    }
}

fn cat(parts: &[BigUint]) -> BigUint {
    parts[1..].iter().fold(parts[0].clone(), |acc, p| {
        codec::concat(&acc, p).expect("formations are positive")
    })
}

fn sym(k: u64) -> BigUint {
    BigUint::from(1u8) << k
}

// sub on decoded structure, assembled numerically
fn sub_number(e: &Expr, i: u64, y: &BigUint) -> BigUint {
    if !e.has_noema(i) {
        return e.value();
    }
    match e.kind() {
        Kind::Noema(_) => y.clone(),
        Kind::Atom(b, a) => cat(&[sub_number(b, i, y), sub_number(a, i, y)]),
        Kind::JointTerm(l, r) | Kind::JointFormula(l, r) => {
            cat(&[sym(2), sub_number(l, i, y), sub_number(r, i, y)])
        }
        Kind::Universal(j, body) => cat(&[sym(1), sym(j + 5), sub_number(body, i, y)]),
        Kind::Abstraction(j, body) => cat(&[sym(0), sym(j + 5), sub_number(body, i, y)]),
        Kind::Alethizor | Kind::Enumerator => e.value(),
    }
}

/// sub(x, i, y): replaces the noema v_i present in what x codes by y.
pub fn sub(x: &CodedExpr, i: u64, y: &CodedExpr) -> Result<CodedExpr> {
    let t = y
        .term()
        .ok_or_else(|| Error::NotTermCode(y.source.to_string()))?;
    let e = match &x.expr {
        Some(e) => e,
        None => return Ok(x.clone()),
    };
    Ok(CodedExpr {
        source: sub_number(e, i, &y.source),
        expr: Some(syntax::substitute(&t, i, e)),
    })
}

/// The index Sub substitutes at: the least noema present in a coded formula.
pub fn least_noema(x: &CodedExpr) -> Option<u64> {
    x.expr
        .as_ref()
        .filter(|e| e.is_formula())
        .and_then(|e| e.noemata().first().copied())
}

/// Sub(x, y) = sub(x, i, y) for the least noema v_i of the formula x codes;
/// x itself otherwise.
#[allow(non_snake_case)]
pub fn Sub(x: &CodedExpr, y: &CodedExpr) -> Result<CodedExpr> {
    match least_noema(x) {
        Some(i) => sub(x, i, y),
        None => Ok(x.clone()),
    }
}

/// SUB(x, y) = Sub(x, ⌜y⌝), with ⌜y⌝ unfolded only within `budget_bits`.
#[allow(non_snake_case)]
pub fn SUB(x: &CodedExpr, y: &BigUint, budget_bits: u64) -> Result<CodedExpr> {
    if least_noema(x).is_none() {
        return Ok(x.clone());
    }
    let code = goedel::goedel_code(y);
    let fits = code
        .bit_length()
        .is_some_and(|r| *r <= BigUint::from(budget_bits));
    let numeral = code
        .as_expr()
        .filter(|_| fits)
        .ok_or_else(|| Error::BudgetExceeded {
            required: code.required_bits(),
            budget: budget_bits,
        })?;
    Sub(x, &CodedExpr::of(&numeral))
}

/// The object-language stand-in for an application Sub(a, b): the joint
/// term `↓(↓€€)(↓ab)`. The grammar has no function symbols, so the diagonal
/// marks where Sub is applied with this tag and evaluates it at the meta
/// level.
pub fn sub_tag(a: Expr, b: Expr) -> Expr {
    let e = Expr::enumerator();
    Expr::joint_term(Expr::joint_term(e.clone(), e), Expr::joint_term(a, b))
}

fn tag_args(t: &Expr) -> Option<(Expr, Expr)> {
    let e = Expr::enumerator();
    match t.kind() {
        Kind::JointTerm(head, args) if *head == Expr::joint_term(e.clone(), e) => match args.kind()
        {
            Kind::JointTerm(a, b) => Some((a.clone(), b.clone())),
            _ => None,
        },
        _ => None,
    }
}

/// A coded expression too large to write down: `template` with the noema
/// `hole` standing for the numeral ⌜numeral⌝.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Deferred {
    pub template: Expr,
    pub hole: u64,
    pub numeral: BigUint,
}

impl Deferred {
    /// Exact bit length when ⌜numeral⌝ has one.
    pub fn bit_length(&self) -> Option<BigUint> {
        let l = goedel::goedel_code(&self.numeral).bit_length()?.clone();
        let holes = occurrences(&self.template, self.hole);
        let rest = self.template.bit_len() - holes * (self.hole + 6);
        Some(BigUint::from(rest) + l * holes)
    }
}

/// Free occurrences of v_u.
pub fn occurrences(e: &Expr, u: u64) -> u64 {
    if !e.has_noema(u) {
        return 0;
    }
    match e.kind() {
        Kind::Noema(_) => 1,
        _ => e.children().iter().map(|c| occurrences(c, u)).sum(),
    }
}

/// Output of the diagonal constructor.
#[derive(Debug, Clone)]
pub struct Diagonal {
    /// The input A(v0).
    pub input: Expr,
    /// D = A(Sub(v0, v0)).
    pub carrier: Expr,
    /// m = ⌜D⌝.
    pub m: CodeDag,
    /// B = A(Sub(⌜m⌝, ⌜m⌝)).
    pub sentence: Deferred,
    pub certificate: Certificate,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub input: String,
    pub carrier: String,
    pub m: String,
    pub m_bits: u64,
    pub hole: u64,
    pub sentence_template: String,
    pub sentence_bits: Option<String>,
    pub steps: Vec<String>,
    pub verified: bool,
}

/// Builds B with B ↔ A(⌜B⌝) in the proof's shape, and checks that
/// evaluating the Sub application inside B yields B's own code.
pub fn diagonal(a: &Expr) -> Result<Diagonal> {
    if !a.is_formula() || a.noemata() != [0] {
        return Err(Error::WrongNoemata(a.noemata().to_vec()));
    }
    let v0 = Expr::noema(0);
    let carrier = syntax::substitute(&sub_tag(v0.clone(), v0), 0, a);
    let m_source = carrier.value();
    let hole = carrier
        .symbols()
        .iter()
        .filter_map(|s| s.0.checked_sub(5))
        .max()
        .map_or(1, |k| k + 1);
    let h = Expr::noema(hole);
    let template = syntax::substitute(&h, 0, &carrier);
    let sentence = Deferred {
        template,
        hole,
        numeral: m_source.clone(),
    };
    let certificate = certify(a, &carrier, &sentence);
    Ok(Diagonal {
        input: a.clone(),
        carrier,
        m: goedel::goedel_code(&m_source),
        sentence,
        certificate,
    })
}

fn find_tag(e: &Expr, hole: u64) -> Option<(Expr, Expr)> {
    if let Some((x, y)) = tag_args(e) {
        if x == Expr::noema(hole) && y == Expr::noema(hole) {
            return Some((x, y));
        }
    }
    e.children().iter().find_map(|c| find_tag(c, hole))
}

/// Replays the Sub evaluation of B's tagged argument from the numbers alone.
pub fn certify(a: &Expr, carrier: &Expr, b: &Deferred) -> Certificate {
    let mut steps = Vec::new();
    let mut ok = true;
    let mut check = |cond: bool, msg: String| {
        steps.push(format!("{} {msg}", if cond { "ok" } else { "FAIL" }));
        ok &= cond;
    };
    check(
        find_tag(&b.template, b.hole).is_some(),
        format!("B applies Sub to ⌜m⌝, ⌜m⌝ (hole v{})", b.hole),
    );
    // D is a reading of m exactly when D's own code is m
    let d = (carrier.value() == b.numeral).then(|| carrier.clone());
    let others = codec::formation_of(&b.numeral)
        .map(|f| syntax::parse_readings(f.symbols(), Category::Formula).len() > 1)
        .unwrap_or(false);
    let note = if others {
        ", among other formula readings"
    } else {
        ""
    };
    check(
        d.is_some(),
        format!("m decodes to D = A(Sub(v0, v0)){note}"),
    );
    let least = d.as_ref().and_then(|e| e.noemata().first().copied());
    check(least == Some(0), format!("least noema of D is {least:?}"));
    if let (Some(d), Some(i)) = (d, least) {
        // Sub(m, m) = sub(m, i, ⌜m⌝), with ⌜m⌝ held in the hole
        let evaluated = syntax::substitute(&Expr::noema(b.hole), i, &d);
        check(
            evaluated.ptr_eq(&b.template),
            "Sub(m, m) evaluates to the shared node of B".into(),
        );
        check(
            !a.has_noema(b.hole) && !d.has_noema(b.hole),
            "hole noema is fresh".into(),
        );
    }
    let bits = b.bit_length();
    Certificate {
        input: a.to_string(),
        carrier: carrier.to_string(),
        m: b.numeral.to_string(),
        m_bits: b.numeral.bits(),
        hole: b.hole,
        sentence_template: b.template.to_string(),
        sentence_bits: bits.map(|n| n.to_string()),
        steps,
        verified: ok,
    }
}
