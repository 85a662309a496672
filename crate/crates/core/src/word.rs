//! Words over `{0, ..., q-1}`, their moments, and the text format used by the CLI.

use std::fmt;
use std::ops::Deref;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::params::CodeParams;

pub type Symbol = u8;

/// A full-length codeword candidate: `n` symbols, each below `q`.
///
/// Membership in a particular codebook is not implied; see
/// [`crate::codebook::contains`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Codeword(Vec<Symbol>);

impl Codeword {
    pub fn new(params: &CodeParams, symbols: Vec<Symbol>) -> Result<Self> {
        check_length(params, symbols.len())?;
        check_symbols(params, &symbols)?;
        Ok(Codeword(symbols))
    }

    /// Wraps symbols that the caller has already validated.
    pub(crate) fn from_trusted(symbols: Vec<Symbol>) -> Self {
        Codeword(symbols)
    }

    pub fn zeros(params: &CodeParams) -> Self {
        Codeword(vec![0; params.n()])
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.0
    }

    pub fn into_symbols(self) -> Vec<Symbol> {
        self.0
    }
}

impl Deref for Codeword {
    type Target = [Symbol];

    fn deref(&self) -> &[Symbol] {
        &self.0
    }
}

impl fmt::Display for Codeword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_symbols(&self.0))
    }
}

/// A word observed at the channel output. Its length is at most `n`; the gap
/// `n - len` is the number of deletions the decoder has to undo.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ReceivedWord(Vec<Symbol>);

impl ReceivedWord {
    pub fn new(params: &CodeParams, symbols: Vec<Symbol>) -> Result<Self> {
        if symbols.len() > params.n() {
            return Err(Error::TooLong {
                len: symbols.len(),
                n: params.n(),
            });
        }
        check_symbols(params, &symbols)?;
        Ok(ReceivedWord(symbols))
    }

    /// `n - len`.
    pub fn deletions(&self, params: &CodeParams) -> usize {
        params.n() - self.0.len()
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.0
    }

    pub fn into_symbols(self) -> Vec<Symbol> {
        self.0
    }
}

impl Deref for ReceivedWord {
    type Target = [Symbol];

    fn deref(&self) -> &[Symbol] {
        &self.0
    }
}

impl fmt::Display for ReceivedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_symbols(&self.0))
    }
}

impl From<Codeword> for ReceivedWord {
    fn from(x: Codeword) -> Self {
        ReceivedWord(x.0)
    }
}

fn check_length(params: &CodeParams, len: usize) -> Result<()> {
    if len != params.n() {
        return Err(Error::LengthMismatch {
            expected: params.n(),
            actual: len,
        });
    }
    Ok(())
}

pub(crate) fn check_symbols(params: &CodeParams, symbols: &[Symbol]) -> Result<()> {
    for (i, &s) in symbols.iter().enumerate() {
        if u32::from(s) >= params.q() {
            return Err(Error::InvalidSymbol {
                symbol: s.into(),
                position: i + 1,
                q: params.q(),
            });
        }
    }
    Ok(())
}

/// `M(w) = sum_i w_i * x_i` over the word's own length.
pub fn moment(params: &CodeParams, word: &[Symbol]) -> Result<BigUint> {
    if word.len() > params.n() {
        return Err(Error::TooLong {
            len: word.len(),
            n: params.n(),
        });
    }
    check_symbols(params, word)?;
    Ok(moment_unchecked(params, word))
}

/// Moment of the first `k` symbols.
pub fn truncated_moment(params: &CodeParams, word: &[Symbol], k: usize) -> Result<BigUint> {
    if k > word.len() {
        return Err(Error::PrefixOutOfRange { k, len: word.len() });
    }
    moment(params, &word[..k])
}

pub(crate) fn moment_unchecked(params: &CodeParams, word: &[Symbol]) -> BigUint {
    if let Some(small) = params.small() {
        let m: u64 = word
            .iter()
            .zip(&small.weights[1..])
            .map(|(&s, &w)| u64::from(s) * w)
            .sum();
        return BigUint::from(m);
    }
    let mut acc = BigUint::zero();
    for (&s, w) in word.iter().zip(&params.weights()[1..]) {
        if s != 0 {
            acc += w * u32::from(s);
        }
    }
    acc
}

/// `M(x) - M(y)` for two length-`n` words.
pub fn delta(params: &CodeParams, x: &[Symbol], y: &[Symbol]) -> Result<BigInt> {
    check_length(params, x.len())?;
    check_length(params, y.len())?;
    let mx = BigInt::from(moment(params, x)?);
    let my = BigInt::from(moment(params, y)?);
    Ok(mx - my)
}

/// `M(x) ≡ M(y) (mod m)`.
pub fn congruent(params: &CodeParams, x: &[Symbol], y: &[Symbol]) -> Result<bool> {
    let diff = delta(params, x, y)?;
    Ok(diff.mod_floor(&BigInt::from(params.m().clone())).is_zero())
}

/// Compact digit string for `q <= 10`, comma-separated otherwise.
pub fn format_word(symbols: &[Symbol], q: u32) -> String {
    if q <= 10 {
        format_symbols(symbols)
    } else {
        symbols
            .iter()
            .map(|s| s.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

fn format_symbols(symbols: &[Symbol]) -> String {
    if symbols.iter().all(|&s| s < 10) {
        symbols.iter().map(|&s| char::from(b'0' + s)).collect()
    } else {
        symbols
            .iter()
            .map(|s| s.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// Parses either a digit string (`"12202212"`) or a comma-separated list
/// (`"1,2,2,0"`). The empty string is the empty word. Symbols are checked
/// against `q`.
pub fn parse_word(text: &str, q: u32) -> Result<Vec<Symbol>> {
    let text = text.trim();
    let fail = |reason: String| Error::ParseWord {
        text: text.to_string(),
        reason,
    };
    if text.is_empty() {
        return Ok(Vec::new());
    }
    let raw: Vec<u32> = if text.contains(',') {
        text.split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<u32>()
                    .map_err(|e| fail(format!("{tok:?}: {e}")))
            })
            .collect::<Result<_>>()?
    } else if q > 10 && !text.chars().all(|c| c.is_ascii_digit()) {
        return Err(fail("expected comma-separated symbols".into()));
    } else {
        text.chars()
            .map(|c| {
                c.to_digit(10)
                    .ok_or_else(|| fail(format!("unexpected character {c:?}")))
            })
            .collect::<Result<_>>()?
    };
    raw.into_iter()
        .enumerate()
        .map(|(i, s)| {
            if s >= q {
                Err(fail(format!("symbol {s} at position {} is not below q={q}", i + 1)))
            } else {
                Ok(s as Symbol)
            }
        })
        .collect()
}
