//! Workbench for the librationist system £.
//!
//! The crate covers the bar-dot language ([`syntax`]), formations read as
//! binary numerals ([`codec`]), the numeral coding of naturals ([`goedel`]),
//! code-level substitution and the diagonal constructor ([`substitution`]),
//! alphabetological variants and the enumeration of cognomina
//! ([`enumeration`]), a fragment-relative revision process ([`engine`]) and
//! audits of posits and regulations over its traces ([`audit`]).
//!
//! All semantic verdicts are relative to a finite fragment of closed terms;
//! quantifiers range over the fragment universe only.

pub mod audit;
pub mod codec;
pub mod engine;
pub mod enumeration;
pub mod error;
pub mod goedel;
pub mod scenario;
pub mod substitution;
pub mod syntax;

pub use error::{Error, Result};
pub use syntax::{Category, Expr, Kind};
