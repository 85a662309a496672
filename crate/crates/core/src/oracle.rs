//! Brute-force ground truth.
//!
//! These routines generate candidates and filter them by membership, a
//! different route from the scan-and-shift decoders, so agreement between
//! the two is meaningful.

use std::collections::{BTreeSet, HashMap};

use serde::Serialize;

use crate::channel::{all_patterns, delete_at, DeletionPattern};
use crate::codebook::{self, Budget};
use crate::error::{Error, Result};
use crate::params::{CodeParams, ParamsSummary};
use crate::word::{self, format_word, Codeword, Symbol};

/// Every codeword that becomes `received` after `n - len` deletions.
pub fn brute_decode_deletions(params: &CodeParams, received: &[Symbol]) -> Result<BTreeSet<Codeword>> {
    let n = params.n();
    if received.len() > n {
        return Err(Error::TooLong {
            len: received.len(),
            n,
        });
    }
    word::check_symbols(params, received)?;
    let c = n - received.len();
    let q = params.q() as usize;
    let mut found = BTreeSet::new();
    let mut candidate = vec![0 as Symbol; n];
    for slots in all_patterns(n, c) {
        let slots = slots.positions();
        for fill in 0..q.pow(c as u32) {
            let mut f = fill;
            let mut next_slot = 0;
            let mut next_known = 0;
            for (i, cell) in candidate.iter_mut().enumerate() {
                if next_slot < c && slots[next_slot] == i + 1 {
                    *cell = (f % q) as Symbol;
                    f /= q;
                    next_slot += 1;
                } else {
                    *cell = received[next_known];
                    next_known += 1;
                }
            }
            if codebook::contains_unchecked(params, &candidate) {
                found.insert(Codeword::from_trusted(candidate.clone()));
            }
        }
    }
    Ok(found)
}

/// Length of a longest common subsequence.
pub fn lcs_len(a: &[Symbol], b: &[Symbol]) -> usize {
    let mut prev = vec![0usize; b.len() + 1];
    let mut cur = vec![0usize; b.len() + 1];
    for &x in a {
        for (j, &y) in b.iter().enumerate() {
            cur[j + 1] = if x == y {
                prev[j] + 1
            } else {
                cur[j].max(prev[j + 1])
            };
        }
        std::mem::swap(&mut prev, &mut cur);
    }
    prev[b.len()]
}

/// Minimum number of insertions plus deletions turning `a` into `b`.
pub fn indel_distance(a: &[Symbol], b: &[Symbol]) -> usize {
    a.len() + b.len() - 2 * lcs_len(a, b)
}

/// Every codeword within `d` insertions and deletions of `y`.
pub fn brute_decode_indels(params: &CodeParams, y: &[Symbol], budget: Budget) -> Result<BTreeSet<Codeword>> {
    word::check_symbols(params, y)?;
    let members: Vec<Codeword> = codebook::enumerate(params, budget)?.collect();
    Ok(brute_decode_indels_among(&members, y, params.d()))
}

/// [`brute_decode_indels`] against an already enumerated codebook.
pub fn brute_decode_indels_among(members: &[Codeword], y: &[Symbol], d: usize) -> BTreeSet<Codeword> {
    members
        .iter()
        .filter(|x| x.len().abs_diff(y.len()) <= d && indel_distance(x, y) <= d)
        .cloned()
        .collect()
}

/// Two distinct codewords that share a deleted word.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub x: String,
    pub y: String,
    pub x_deletions: DeletionPattern,
    pub y_deletions: DeletionPattern,
    pub shared: String,
}

/// Result of [`verify_code`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub params: ParamsSummary,
    pub checks: Vec<String>,
    pub codewords: usize,
    pub deleted_words: usize,
    pub counterexamples: Vec<Counterexample>,
    pub pass: bool,
}

/// Confirms that no two distinct codewords have a common deleted word for
/// any deletion count up to `d`, by hashing every deleted word of every
/// codeword.
pub fn verify_code(params: &CodeParams, budget: Budget) -> Result<VerificationReport> {
    let members: Vec<Codeword> = codebook::enumerate(params, budget)?.collect();
    let q = params.q();
    let mut counterexamples = Vec::new();
    let mut deleted_words = 0;
    for k in 1..=params.d().min(params.n()) {
        // Deleted word -> (owning codeword index, pattern that produced it).
        let mut seen: HashMap<Vec<Symbol>, (usize, DeletionPattern)> = HashMap::new();
        for (owner, x) in members.iter().enumerate() {
            for pattern in all_patterns(params.n(), k) {
                let shared = delete_at(x, &pattern)?;
                match seen.get(&shared) {
                    Some((other, _)) if *other == owner => {}
                    Some((other, other_pattern)) => counterexamples.push(Counterexample {
                        x: format_word(&members[*other], q),
                        y: format_word(x, q),
                        x_deletions: other_pattern.clone(),
                        y_deletions: pattern,
                        shared: format_word(&shared, q),
                    }),
                    None => {
                        seen.insert(shared, (owner, pattern));
                    }
                }
            }
        }
        deleted_words += seen.len();
    }
    Ok(VerificationReport {
        params: params.summary(),
        checks: vec![format!(
            "distinct codewords never share a deleted word for 1..={} deletions",
            params.d()
        )],
        codewords: members.len(),
        deleted_words,
        pass: counterexamples.is_empty(),
        counterexamples,
    })
}
