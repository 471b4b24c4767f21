//! The £ grammar: symbols, formations, expressions and their surface forms.

mod expr;
mod formation;
mod ops;
mod parse;
mod present;
mod read;
mod sugar;

pub use expr::{Category, Expr, Kind};
pub use formation::{Formation, Symbol, SymbolClass};
pub use ops::{caliber, classify_term, substitutable, substitute, substitute_all, TermClass};
pub use parse::{parse, parse_formation, parse_readings, parse_symbols, ParseMode, Parsed};
pub use present::{parse_presentable, print, Form};
pub use read::read;
pub use sugar::{Sugar, View};
