//! Codebook membership, enumeration, and the largest-codebook search over
//! residues.
//!
//! Every routine that touches all `q^n` words is guarded by a [`Budget`];
//! exceeding it is an error, never a silent truncation.

use std::collections::{BTreeMap, HashMap};
use std::io;

use num_bigint::BigUint;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::params::CodeParams;
use crate::word::{self, Codeword, Symbol};

/// Default cap on the number of words an exhaustive walk may visit.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// Upper bound on `q^n` for exhaustive enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget(pub u64);

impl Default for Budget {
    fn default() -> Self {
        Budget(DEFAULT_BUDGET)
    }
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget(u64::MAX)
    }

    pub fn check(self, params: &CodeParams) -> Result<()> {
        let words = params.word_count();
        if words > u128::from(self.0) {
            return Err(Error::BudgetExceeded {
                words,
                budget: self.0,
            });
        }
        Ok(())
    }
}

/// `M(x) mod m == r`.
pub fn contains(params: &CodeParams, x: &[Symbol]) -> Result<bool> {
    if x.len() != params.n() {
        return Err(Error::LengthMismatch {
            expected: params.n(),
            actual: x.len(),
        });
    }
    let m = word::moment(params, x)?;
    Ok(&(m % params.m()) == params.r())
}

pub(crate) fn contains_unchecked(params: &CodeParams, x: &[Symbol]) -> bool {
    &(word::moment_unchecked(params, x) % params.m()) == params.r()
}

/// Running moment of the odometer word.
enum Acc {
    Small { moment: u64, weights: Vec<u64>, m: u64 },
    Big { moment: BigUint },
}

/// Lexicographic odometer over all `q^n` words that keeps the moment
/// up to date incrementally.
struct Walker<'a> {
    params: &'a CodeParams,
    word: Vec<Symbol>,
    acc: Acc,
    started: bool,
}

impl<'a> Walker<'a> {
    fn new(params: &'a CodeParams) -> Self {
        let acc = match params.small() {
            Some(s) => Acc::Small {
                moment: 0,
                weights: s.weights.clone(),
                m: s.m,
            },
            None => Acc::Big {
                moment: BigUint::zero(),
            },
        };
        Walker {
            params,
            word: vec![0; params.n()],
            acc,
            started: false,
        }
    }

    /// Moves to the next word; false once every word has been visited.
    fn advance(&mut self) -> bool {
        if !self.started {
            self.started = true;
            return true;
        }
        let p = self.params.p() as Symbol;
        // Last position varies fastest.
        for pos in (0..self.word.len()).rev() {
            let i = pos + 1;
            if self.word[pos] < p {
                self.word[pos] += 1;
                match &mut self.acc {
                    Acc::Small { moment, weights, .. } => *moment += weights[i],
                    Acc::Big { moment } => *moment += &self.params.weights()[i],
                }
                return true;
            }
            self.word[pos] = 0;
            match &mut self.acc {
                Acc::Small { moment, weights, .. } => *moment -= u64::from(p) * weights[i],
                Acc::Big { moment } => *moment -= &self.params.weights()[i] * u32::from(p),
            }
        }
        false
    }

    fn residue_is(&self, r: &BigUint, small_r: u64) -> bool {
        match &self.acc {
            Acc::Small { moment, m, .. } => moment % m == small_r,
            Acc::Big { moment } => &(moment % self.params.m()) == r,
        }
    }
}

/// Members of a codebook in lexicographic order. Created by [`enumerate`].
pub struct Members<'a> {
    walker: Walker<'a>,
    small_r: u64,
}

impl Iterator for Members<'_> {
    type Item = Codeword;

    fn next(&mut self) -> Option<Codeword> {
        while self.walker.advance() {
            if self.walker.residue_is(self.walker.params.r(), self.small_r) {
                return Some(Codeword::from_trusted(self.walker.word.clone()));
            }
        }
        None
    }
}

/// Streams the members of `C_n(q, d, m, r)` in lexicographic order.
pub fn enumerate(params: &CodeParams, budget: Budget) -> Result<Members<'_>> {
    budget.check(params)?;
    Ok(Members {
        small_r: params.small().map_or(0, |s| s.r),
        walker: Walker::new(params),
    })
}

/// `|C_n(q, d, m, r)|`.
pub fn size(params: &CodeParams, budget: Budget) -> Result<u64> {
    Ok(enumerate(params, budget)?.count() as u64)
}

/// Outcome of [`max_size_search`]: the largest codebook size `N_n(q, d)`
/// over all residues with `m = w_{n+1}`, and the residues attaining it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SizeSearchResult {
    pub n: usize,
    pub q: u32,
    pub d: usize,
    pub max_size: u64,
    #[serde(serialize_with = "crate::serde_big::serialize_vec")]
    pub argmax_residues: Vec<BigUint>,
    /// Residue to codebook size, for residues with at least one member.
    #[serde(
        skip_serializing_if = "Option::is_none",
        serialize_with = "serialize_histogram"
    )]
    pub per_residue_sizes: Option<BTreeMap<BigUint, u64>>,
}

fn serialize_histogram<S: serde::Serializer>(
    h: &Option<BTreeMap<BigUint, u64>>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeMap;
    let h = h.as_ref().expect("skipped when absent");
    let mut map = s.serialize_map(Some(h.len()))?;
    for (r, count) in h {
        map.serialize_entry(&r.to_str_radix(10), count)?;
    }
    map.end()
}

impl SizeSearchResult {
    /// `R_n` joined with `sep`.
    pub fn residues_joined(&self, sep: &str) -> String {
        self.argmax_residues
            .iter()
            .map(|r| r.to_str_radix(10))
            .collect::<Vec<_>>()
            .join(sep)
    }
}

/// Computes `N_n(q, d)` and `R_n(q, d)` in one pass over all `q^n` words,
/// bucketing moments modulo `m = w_{n+1}`.
pub fn max_size_search(
    q: u32,
    d: usize,
    n: usize,
    budget: Budget,
    histogram: bool,
) -> Result<SizeSearchResult> {
    let params = CodeParams::new(q, d, n, BigUint::zero(), None)?;
    budget.check(&params)?;
    let counts = residue_counts(&params);
    let max_size = counts.values().copied().max().unwrap_or(0);
    let argmax_residues = counts
        .iter()
        .filter(|&(_, &c)| c == max_size)
        .map(|(r, _)| r.clone())
        .collect();
    Ok(SizeSearchResult {
        n,
        q,
        d,
        max_size,
        argmax_residues,
        per_residue_sizes: histogram.then_some(counts),
    })
}

/// Residue histogram over every word; only residues that occur are present.
fn residue_counts(params: &CodeParams) -> BTreeMap<BigUint, u64> {
    let mut walker = Walker::new(params);
    match params.small() {
        Some(s) if s.m <= 1 << 22 => {
            let mut dense = vec![0u64; s.m as usize];
            while walker.advance() {
                if let Acc::Small { moment, m, .. } = &walker.acc {
                    dense[(moment % m) as usize] += 1;
                }
            }
            dense
                .into_iter()
                .enumerate()
                .filter(|&(_, c)| c > 0)
                .map(|(r, c)| (BigUint::from(r), c))
                .collect()
        }
        Some(_) => {
            let mut sparse: HashMap<u64, u64> = HashMap::new();
            while walker.advance() {
                if let Acc::Small { moment, m, .. } = &walker.acc {
                    *sparse.entry(moment % m).or_default() += 1;
                }
            }
            sparse
                .into_iter()
                .map(|(r, c)| (BigUint::from(r), c))
                .collect()
        }
        None => {
            let mut sparse: HashMap<BigUint, u64> = HashMap::new();
            while walker.advance() {
                if let Acc::Big { moment } = &walker.acc {
                    *sparse.entry(moment % params.m()).or_default() += 1;
                }
            }
            sparse.into_iter().collect()
        }
    }
}

/// Writes `n,max_size,residues` rows with residues joined by `;`.
pub fn write_csv<W: io::Write>(results: &[SizeSearchResult], out: W) -> io::Result<()> {
    let mut wtr = csv::Writer::from_writer(out);
    wtr.write_record(["n", "max_size", "residues"])?;
    for res in results {
        wtr.write_record([
            res.n.to_string(),
            res.max_size.to_string(),
            res.residues_joined(";"),
        ])?;
    }
    wtr.flush()
}

/// Residue of a word's moment, `M(x) mod m`.
pub fn residue_of(params: &CodeParams, x: &[Symbol]) -> Result<BigUint> {
    Ok(word::moment(params, x)? % params.m())
}
