use super::{parse, parse_presentable, ParseMode, Parsed};
use crate::error::Result;

/// Reads an expression in any surface form: austere or bare formations
/// (text starting with a bar), otherwise presentable notation.
pub fn read(text: &str, mode: ParseMode) -> Result<Parsed> {
    if text.trim_start().starts_with('|') {
        parse(text, mode)
    } else {
        parse_presentable(text, mode)
    }
}
