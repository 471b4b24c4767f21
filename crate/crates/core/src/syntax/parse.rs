use std::collections::HashMap;
use std::rc::Rc;

use super::expr::{Category, Expr};
use super::formation::{Formation, Symbol, SymbolClass};
use crate::error::{Error, Result};

/// Which category a whole-string parse is asked for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParseMode {
    Term,
    Formula,
    Auto,
}

/// Result of an auto-mode parse: which category succeeded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Parsed {
    pub expr: Expr,
    pub category: Category,
}

// Readings kept per span; beyond this we only need to know that more than
// one exists.
const MAX_READINGS: usize = 4;

/// Keeps at most [`MAX_READINGS`] readings for each end position.
fn cap(out: Vec<(Expr, usize)>) -> Vec<(Expr, usize)> {
    let mut per_end: HashMap<usize, usize> = HashMap::new();
    out.into_iter()
        .filter(|(_, end)| {
            let n = per_end.entry(*end).or_default();
            *n += 1;
            *n <= MAX_READINGS
        })
        .collect()
}

type Readings = Rc<Vec<(Expr, usize)>>;

struct Parser<'a> {
    syms: &'a [Symbol],
    terms: HashMap<usize, Readings>,
    formulas: HashMap<usize, Readings>,
}

impl<'a> Parser<'a> {
    fn new(syms: &'a [Symbol]) -> Self {
        Parser {
            syms,
            terms: HashMap::new(),
            formulas: HashMap::new(),
        }
    }

    fn noema_at(&self, i: usize) -> Option<u64> {
        match self.syms.get(i)?.class() {
            SymbolClass::Noema(n) => Some(n),
            _ => None,
        }
    }

    fn term(&mut self, i: usize) -> Readings {
        if let Some(r) = self.terms.get(&i) {
            return r.clone();
        }
        let mut out = Vec::new();
        if let Some(sym) = self.syms.get(i) {
            match sym.class() {
                SymbolClass::Alethizor => out.push((Expr::alethizor(), i + 1)),
                SymbolClass::Enumerator => out.push((Expr::enumerator(), i + 1)),
                SymbolClass::Noema(n) => out.push((Expr::noema(n), i + 1)),
                SymbolClass::Norifyer => {
                    for (l, j) in self.term(i + 1).iter() {
                        for (r, k) in self.term(*j).iter() {
                            out.push((Expr::joint_term(l.clone(), r.clone()), *k));
                        }
                    }
                }
                SymbolClass::Sortifier => {
                    if let Some(y) = self.noema_at(i + 1) {
                        for (body, k) in self.formula(i + 2).iter() {
                            out.push((Expr::abstraction(y, body.clone()), *k));
                        }
                    }
                }
                SymbolClass::Universalizor => {}
            }
        }
        let r = Rc::new(cap(out));
        self.terms.insert(i, r.clone());
        r
    }

    fn formula(&mut self, i: usize) -> Readings {
        if let Some(r) = self.formulas.get(&i) {
            return r.clone();
        }
        let mut out = Vec::new();
        if let Some(sym) = self.syms.get(i) {
            match sym.class() {
                SymbolClass::Norifyer => {
                    for (a, j) in self.formula(i + 1).iter() {
                        for (b, k) in self.formula(*j).iter() {
                            out.push((Expr::joint_formula(a.clone(), b.clone()), *k));
                        }
                    }
                }
                SymbolClass::Universalizor => {
                    if let Some(y) = self.noema_at(i + 1) {
                        for (body, k) in self.formula(i + 2).iter() {
                            out.push((Expr::universal(y, body.clone()), *k));
                        }
                    }
                }
                _ => {}
            }
            // atomic formula: two terms in a row
            for (b, j) in self.term(i).iter() {
                for (a, k) in self.term(*j).iter() {
                    out.push((Expr::atom(b.clone(), a.clone()), *k));
                }
            }
        }
        let r = Rc::new(cap(out));
        self.formulas.insert(i, r.clone());
        r
    }

    fn whole(&mut self, cat: Category) -> Vec<Expr> {
        let n = self.syms.len();
        let readings = match cat {
            Category::Term => self.term(0),
            Category::Formula => self.formula(0),
        };
        readings
            .iter()
            .filter(|(_, end)| *end == n)
            .map(|(e, _)| e.clone())
            .collect()
    }
}

fn run_deep<T: Send>(f: impl FnOnce() -> T + Send) -> T {
    // Polish-notation nesting can be deep for numeral codes.
    std::thread::scope(|s| {
        std::thread::Builder::new()
            .stack_size(256 << 20)
            .spawn_scoped(s, f)
            .expect("spawn parser thread")
            .join()
            .expect("parser thread panicked")
    })
}

/// All whole-string readings in one category (at most a handful).
pub fn parse_readings(symbols: &[Symbol], category: Category) -> Vec<Expr> {
    if symbols.len() > 4096 {
        run_deep(|| Parser::new(symbols).whole(category))
    } else {
        Parser::new(symbols).whole(category)
    }
}

/// Whole-string parse of a symbol sequence in the requested category.
pub fn parse_symbols(symbols: &[Symbol], mode: ParseMode) -> Result<Parsed> {
    let describe = || {
        Formation::from_symbols(symbols.to_vec())
            .map(|f| f.bare())
            .unwrap_or_default()
    };
    let pick = |cat: Category| -> Result<Expr> {
        let mut rs = parse_readings(symbols, cat);
        match rs.len() {
            0 => Err(Error::NotInCategory {
                expected: cat_name(cat),
                found: describe(),
            }),
            1 => Ok(rs.pop().unwrap()),
            _ => Err(Error::Ambiguous {
                first: format!("{} `{}`", cat_name(cat), rs[0]),
                second: format!("{} `{}`", cat_name(cat), rs[1]),
            }),
        }
    };
    match mode {
        ParseMode::Term => pick(Category::Term).map(|expr| Parsed {
            expr,
            category: Category::Term,
        }),
        ParseMode::Formula => pick(Category::Formula).map(|expr| Parsed {
            expr,
            category: Category::Formula,
        }),
        ParseMode::Auto => {
            let t = parse_readings(symbols, Category::Term);
            let f = parse_readings(symbols, Category::Formula);
            match (t.len(), f.len()) {
                (0, 0) => Err(Error::NotInCategory {
                    expected: "expression",
                    found: describe(),
                }),
                (1, 0) => Ok(Parsed {
                    expr: t[0].clone(),
                    category: Category::Term,
                }),
                (0, 1) => Ok(Parsed {
                    expr: f[0].clone(),
                    category: Category::Formula,
                }),
                (1, 1) => Err(Error::Ambiguous {
                    first: format!("term `{}`", t[0]),
                    second: format!("formula `{}`", f[0]),
                }),
                (_, 0) => pick(Category::Term).map(|expr| Parsed {
                    expr,
                    category: Category::Term,
                }),
                (0, _) => pick(Category::Formula).map(|expr| Parsed {
                    expr,
                    category: Category::Formula,
                }),
                _ => Err(Error::Ambiguous {
                    first: format!("term `{}`", t[0]),
                    second: format!("formula `{}`", f[0]),
                }),
            }
        }
    }
}

fn cat_name(c: Category) -> &'static str {
    match c {
        Category::Term => "term",
        Category::Formula => "formula",
    }
}

pub fn parse_formation(f: &Formation, mode: ParseMode) -> Result<Parsed> {
    parse_symbols(f.symbols(), mode)
}

/// Parses austere or bare text.
pub fn parse(text: &str, mode: ParseMode) -> Result<Parsed> {
    parse_formation(&Formation::parse_text(text)?, mode)
}
