use std::fmt;

use num_bigint::BigUint;

use crate::error::{Error, Result};

/// `|_k`: one bar followed by `k` dots. Its value is `2^k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Symbol(pub u64);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SymbolClass {
    Sortifier,
    Universalizor,
    Norifyer,
    Alethizor,
    Enumerator,
    Noema(u64),
}

impl SymbolClass {
    pub fn is_syncategoreme(self) -> bool {
        matches!(
            self,
            SymbolClass::Sortifier | SymbolClass::Universalizor | SymbolClass::Norifyer
        )
    }

    pub fn is_praenomen(self) -> bool {
        !self.is_syncategoreme()
    }
}

impl Symbol {
    pub const SORTIFIER: Symbol = Symbol(0);
    pub const UNIVERSALIZOR: Symbol = Symbol(1);
    pub const NORIFYER: Symbol = Symbol(2);
    pub const ALETHIZOR: Symbol = Symbol(3);
    pub const ENUMERATOR: Symbol = Symbol(4);

    /// `v_i = |_{i+5}`.
    pub fn noema(i: u64) -> Symbol {
        Symbol(i + 5)
    }

    pub fn class(self) -> SymbolClass {
        match self.0 {
            0 => SymbolClass::Sortifier,
            1 => SymbolClass::Universalizor,
            2 => SymbolClass::Norifyer,
            3 => SymbolClass::Alethizor,
            4 => SymbolClass::Enumerator,
            k => SymbolClass::Noema(k - 5),
        }
    }

    pub fn value(self) -> BigUint {
        BigUint::from(1u8) << self.0
    }

    /// Number of characters in the austere rendering.
    pub fn len(self) -> u64 {
        self.0 + 1
    }

    pub fn is_empty(self) -> bool {
        false
    }

    pub fn bare(self) -> String {
        const SUB: [char; 10] = ['₀', '₁', '₂', '₃', '₄', '₅', '₆', '₇', '₈', '₉'];
        let mut s = String::from("|");
        for d in self.0.to_string().bytes() {
            s.push(SUB[(d - b'0') as usize]);
        }
        s
    }
}

/// A nonempty symbol sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Formation(Vec<Symbol>);

impl Formation {
    pub fn from_symbols(symbols: Vec<Symbol>) -> Result<Formation> {
        if symbols.is_empty() {
            return Err(Error::MalformedFormation("empty symbol sequence".into()));
        }
        Ok(Formation(symbols))
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.0
    }

    pub fn into_symbols(self) -> Vec<Symbol> {
        self.0
    }

    /// Total length of the austere string.
    pub fn bit_len(&self) -> u64 {
        self.0.iter().map(|s| s.len()).sum()
    }

    /// Reads text in austere (`|..|`), bare (`|₃`, `|_3`) or mixed form.
    ///
    /// A bar opens a symbol; an explicit subscript fixes its dot count, and
    /// any following dots are added to it. Whitespace is ignored.
    pub fn parse_text(text: &str) -> Result<Formation> {
        let chars: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
        let mut out = Vec::new();
        let mut i = 0;
        while i < chars.len() {
            if chars[i] != '|' {
                return Err(Error::MalformedFormation(format!(
                    "expected `|` at character {i}, found `{}`",
                    chars[i]
                )));
            }
            i += 1;
            let mut k: u64 = 0;
            if i < chars.len() && chars[i] == '_' {
                i += 1;
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                if start == i {
                    return Err(Error::MalformedFormation("`_` without digits".into()));
                }
                let digits: String = chars[start..i].iter().collect();
                k = digits.parse().map_err(|_| {
                    Error::MalformedFormation(format!("subscript too large: {digits}"))
                })?;
            } else {
                let start = i;
                let mut acc: u64 = 0;
                while i < chars.len() {
                    let d = match chars[i] {
                        '₀'..='₉' => chars[i] as u32 - '₀' as u32,
                        _ => break,
                    };
                    acc = acc
                        .checked_mul(10)
                        .and_then(|a| a.checked_add(d as u64))
                        .ok_or_else(|| Error::MalformedFormation("subscript too large".into()))?;
                    i += 1;
                }
                if i > start {
                    k = acc;
                }
            }
            while i < chars.len() && chars[i] == '.' {
                k += 1;
                i += 1;
            }
            out.push(Symbol(k));
        }
        Formation::from_symbols(out)
    }

    pub fn austere(&self) -> String {
        let mut s = String::with_capacity(self.bit_len() as usize);
        for sym in &self.0 {
            s.push('|');
            for _ in 0..sym.0 {
                s.push('.');
            }
        }
        s
    }

    pub fn bare(&self) -> String {
        self.0.iter().map(|s| s.bare()).collect()
    }

    /// The austere string read as a binary numeral.
    pub fn value(&self) -> BigUint {
        let len = self.bit_len() as usize;
        let mut bytes = vec![0u8; len.div_ceil(8)];
        // bit 0 of the numeral is the last character
        let mut pos = len;
        for sym in &self.0 {
            let bar = pos - 1;
            bytes[bar / 8] |= 1 << (bar % 8);
            pos -= sym.len() as usize;
        }
        BigUint::from_bytes_le(&bytes)
    }
}

impl fmt::Display for Formation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.austere())
    }
}
