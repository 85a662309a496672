//! Deletion channel: applying deletion patterns, inserting symbols, seeded
//! random corruption, and the index of a deleted codeword.

use std::fmt;
use std::str::FromStr;

use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::params::CodeParams;
use crate::word::{self, Symbol};

/// Canonical set of 1-based positions, strictly increasing.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct DeletionPattern(Vec<usize>);

impl DeletionPattern {
    /// Sorts the positions and rejects zero and duplicates. Range against a
    /// particular word length is checked with [`DeletionPattern::check_len`].
    pub fn new(mut positions: Vec<usize>) -> Result<Self> {
        positions.sort_unstable();
        for pair in positions.windows(2) {
            if pair[0] == pair[1] {
                return Err(Error::DuplicatePosition(pair[0]));
            }
        }
        if let Some(&0) = positions.first() {
            return Err(Error::PositionOutOfRange {
                position: 0,
                len: usize::MAX,
            });
        }
        Ok(DeletionPattern(positions))
    }

    pub fn empty() -> Self {
        DeletionPattern(Vec::new())
    }

    pub fn positions(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn check_len(&self, len: usize) -> Result<()> {
        match self.0.last() {
            Some(&last) if last > len => Err(Error::PositionOutOfRange {
                position: last,
                len,
            }),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for DeletionPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for DeletionPattern {
    type Err = Error;

    /// `"3,5"`; the empty string is the empty pattern.
    fn from_str(text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() {
            return Ok(DeletionPattern::empty());
        }
        let positions = text
            .split(',')
            .map(|tok| {
                tok.trim().parse::<usize>().map_err(|e| Error::ParsePattern {
                    text: text.to_string(),
                    reason: format!("{tok:?}: {e}"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        DeletionPattern::new(positions)
    }
}

/// Every pattern of exactly `size` positions in a word of length `len`, in
/// lexicographic order.
pub fn all_patterns(len: usize, size: usize) -> impl Iterator<Item = DeletionPattern> {
    let mut current: Option<Vec<usize>> = (size <= len).then(|| (1..=size).collect());
    std::iter::from_fn(move || {
        let out = current.clone()?;
        // Advance to the next combination.
        let next = current.as_mut().and_then(|c| {
            let k = c.len();
            let i = (0..k).rev().find(|&i| c[i] < len - (k - 1 - i))?;
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            Some(())
        });
        if next.is_none() {
            current = None;
        }
        Some(DeletionPattern(out))
    })
}

/// `x^(D)`: `x` with the positions in `pattern` removed, order preserved.
pub fn delete_at(x: &[Symbol], pattern: &DeletionPattern) -> Result<Vec<Symbol>> {
    pattern.check_len(x.len())?;
    let mut out = Vec::with_capacity(x.len() - pattern.len());
    let mut skip = pattern.positions().iter().peekable();
    for (i, &s) in x.iter().enumerate() {
        if skip.peek() == Some(&&(i + 1)) {
            skip.next();
        } else {
            out.push(s);
        }
    }
    Ok(out)
}

/// Inserts `(position, symbol)` entries one after another; each position is
/// 1-based in the sequence as it stands when that entry is applied, so the
/// inserted symbol ends up at that position.
pub fn insert_at(x: &[Symbol], entries: &[(usize, Symbol)], q: u32) -> Result<Vec<Symbol>> {
    let mut out = x.to_vec();
    for &(position, symbol) in entries {
        if u32::from(symbol) >= q {
            return Err(Error::InvalidSymbol {
                symbol: symbol.into(),
                position,
                q,
            });
        }
        if position == 0 || position > out.len() + 1 {
            return Err(Error::PositionOutOfRange {
                position,
                len: out.len() + 1,
            });
        }
        out.insert(position - 1, symbol);
    }
    Ok(out)
}

/// Deletes a uniformly random `count`-subset of positions. The same
/// `(x, count, seed)` always yields the same result.
pub fn random_deletions(
    x: &[Symbol],
    count: usize,
    seed: u64,
) -> Result<(Vec<Symbol>, DeletionPattern)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_deletions_with(x, count, &mut rng)
}

/// As [`random_deletions`] but drawing from a caller-supplied generator.
pub fn random_deletions_with<R: Rng + ?Sized>(
    x: &[Symbol],
    count: usize,
    rng: &mut R,
) -> Result<(Vec<Symbol>, DeletionPattern)> {
    if count > x.len() {
        return Err(Error::TooManyDeletions {
            count,
            len: x.len(),
        });
    }
    let positions: Vec<usize> = index::sample(rng, x.len(), count)
        .into_iter()
        .map(|i| i + 1)
        .collect();
    let pattern = DeletionPattern::new(positions)?;
    let received = delete_at(x, &pattern)?;
    Ok((received, pattern))
}

/// Inserts `count` random symbols at random positions, one at a time.
pub fn random_insertions<R: Rng + ?Sized>(
    x: &[Symbol],
    count: usize,
    q: u32,
    rng: &mut R,
) -> Vec<Symbol> {
    let mut out = x.to_vec();
    for _ in 0..count {
        let pos = rng.gen_range(0..=out.len());
        out.insert(pos, rng.gen_range(0..q) as Symbol);
    }
    out
}

/// `I = M(x) - M(x')`. Non-negative whenever `received` is a subsequence of
/// `x`; the result is not clamped, so callers that violate that see a
/// negative value.
pub fn index_of(
    params: &CodeParams,
    x: &[Symbol],
    received: &[Symbol],
) -> Result<num_bigint::BigInt> {
    let mx = word::moment(params, x)?;
    let mr = word::moment(params, received)?;
    Ok(num_bigint::BigInt::from(mx) - num_bigint::BigInt::from(mr))
}

/// Whether `sub` can be obtained from `sup` by deleting symbols.
pub fn is_subsequence(sub: &[Symbol], sup: &[Symbol]) -> bool {
    let mut it = sup.iter();
    sub.iter().all(|s| it.any(|t| t == s))
}
