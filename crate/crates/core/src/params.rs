//! Code parameters and the weight sequence.
//!
//! The weights of a `(q, d)` code obey
//!
//! ```text
//! w_i = 1 + (q - 1) * (w_{i-1} + ... + w_{i-d}),   w_i = 0 for i <= 0
//! ```
//!
//! so `w_1 = 1` and the sequence is strictly increasing. A codebook
//! `C_n(q, d, m, r)` collects the length-`n` words whose moment is congruent
//! to `r` modulo `m`, with `m >= w_{n+1}`.

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

/// Largest alphabet a [`Symbol`](crate::word::Symbol) can hold.
pub const MAX_ALPHABET: u32 = 256;

/// Computes `w_0 ..= w_len` for the given alphabet and deletion capacity.
///
/// Index 0 holds the boundary value `w_0 = 0`.
pub fn weight_sequence(q: u32, d: usize, len: usize) -> Vec<BigUint> {
    let p = BigUint::from(q.saturating_sub(1));
    let mut w: Vec<BigUint> = Vec::with_capacity(len + 1);
    w.push(BigUint::zero());
    // Sliding window sum of the previous d weights.
    let mut window = BigUint::zero();
    for i in 1..=len {
        let next = BigUint::from(1u32) + &p * &window;
        window += &next;
        if i >= d {
            window -= &w[i - d];
        }
        w.push(next);
    }
    w
}

/// Validated parameters `(q, d, n, m, r)` of one codebook, with the weights
/// `w_1..=w_{n+1}` precomputed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeParams {
    q: u32,
    d: usize,
    n: usize,
    m: BigUint,
    r: BigUint,
    weights: Vec<BigUint>,
    small: Option<SmallWeights>,
}

/// Machine-word copy of the weights, present when every moment and `2m`
/// fit in a `u64`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct SmallWeights {
    pub weights: Vec<u64>,
    pub m: u64,
    pub r: u64,
}

impl CodeParams {
    /// Builds parameters for `C_n(q, d, m, r)`. When `m` is `None` the
    /// minimum modulus `w_{n+1}` is used.
    pub fn new(q: u32, d: usize, n: usize, r: BigUint, m: Option<BigUint>) -> Result<Self> {
        if q < 2 {
            return Err(Error::AlphabetTooSmall(q));
        }
        if q > MAX_ALPHABET {
            return Err(Error::AlphabetTooLarge(q));
        }
        if d < 1 {
            return Err(Error::InvalidCapacity(d));
        }
        if n < 1 {
            return Err(Error::EmptyLength);
        }
        let weights = weight_sequence(q, d, n + 1);
        let min = weights[n + 1].clone();
        let m = match m {
            Some(m) if m < min => return Err(Error::ModulusTooSmall { m, min }),
            Some(m) => m,
            None => min,
        };
        if r >= m {
            return Err(Error::ResidueOutOfRange { r, m });
        }
        let small = small_weights(q, &weights, &m, &r);
        Ok(CodeParams {
            q,
            d,
            n,
            m,
            r,
            weights,
            small,
        })
    }

    /// Shorthand for [`CodeParams::new`] with machine-word residue and modulus.
    pub fn with_u64(q: u32, d: usize, n: usize, r: u64, m: Option<u64>) -> Result<Self> {
        Self::new(q, d, n, BigUint::from(r), m.map(BigUint::from))
    }

    /// Same `(q, d, n, m)` with a different residue.
    pub fn with_residue(&self, r: BigUint) -> Result<Self> {
        Self::new(self.q, self.d, self.n, r, Some(self.m.clone()))
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    /// Largest symbol value, `q - 1`.
    pub fn p(&self) -> u32 {
        self.q - 1
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> &BigUint {
        &self.m
    }

    pub fn r(&self) -> &BigUint {
        &self.r
    }

    /// `w_0 ..= w_{n+1}`.
    pub fn weights(&self) -> &[BigUint] {
        &self.weights
    }

    pub(crate) fn small(&self) -> Option<&SmallWeights> {
        self.small.as_ref()
    }

    /// `w_i`, zero for `i <= 0`. Indices past `n + 1` are computed on demand.
    pub fn weight(&self, i: i64) -> BigUint {
        if i <= 0 {
            return BigUint::zero();
        }
        let i = i as usize;
        match self.weights.get(i) {
            Some(w) => w.clone(),
            None => weight_sequence(self.q, self.d, i).swap_remove(i),
        }
    }

    /// `w_1 + ... + w_k` by direct summation.
    pub fn weight_sum(&self, k: usize) -> BigUint {
        if k < self.weights.len() {
            self.weights[1..=k].iter().sum()
        } else {
            weight_sequence(self.q, self.d, k)[1..=k].iter().sum()
        }
    }

    /// Closed form of `w_1 + ... + w_k`:
    /// `(p * sum_{i=0}^{d-1} (d - i) w_{k-i} - k) / (pd - 1)`. Valid for `d >= 2`.
    pub fn weight_sum_closed_form(&self, k: usize) -> Result<BigUint> {
        if self.d < 2 {
            return Err(Error::RequiresCapacityTwo("weight_sum_closed_form"));
        }
        let w = self.extended_weights(k);
        let p = BigUint::from(self.p());
        let mut acc = BigUint::zero();
        for i in 0..self.d {
            if k >= i {
                acc += BigUint::from(self.d - i) * &w[k - i];
            }
        }
        let numerator = p.clone() * acc - BigUint::from(k);
        let denominator = p * BigUint::from(self.d) - BigUint::from(1u32);
        Ok(numerator / denominator)
    }

    /// Checks `(pd - 1) * (w_1 + ... + w_k) < d * w_{k+1}` exactly.
    pub fn verify_weight_sum_bound(&self, k: usize) -> Result<bool> {
        if self.d < 2 {
            return Err(Error::RequiresCapacityTwo("verify_weight_sum_bound"));
        }
        let w = self.extended_weights(k + 1);
        let sum: BigUint = w[1..=k].iter().sum();
        let lhs = (BigUint::from(self.p()) * BigUint::from(self.d) - 1u32) * sum;
        let rhs = BigUint::from(self.d) * &w[k + 1];
        Ok(lhs < rhs)
    }

    /// `w_0..=w_len`, reusing the memoized prefix where possible.
    fn extended_weights(&self, len: usize) -> std::borrow::Cow<'_, [BigUint]> {
        if len < self.weights.len() {
            std::borrow::Cow::Borrowed(&self.weights[..=len])
        } else {
            std::borrow::Cow::Owned(weight_sequence(self.q, self.d, len))
        }
    }

    /// `q^n` as a `u128`, saturating.
    pub fn word_count(&self) -> u128 {
        (self.q as u128).checked_pow(self.n as u32).unwrap_or(u128::MAX)
    }

    pub fn summary(&self) -> ParamsSummary {
        ParamsSummary {
            q: self.q,
            d: self.d,
            n: self.n,
            m: self.m.clone(),
            r: self.r.clone(),
        }
    }
}

/// Plain serializable view of a [`CodeParams`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ParamsSummary {
    pub q: u32,
    pub d: usize,
    pub n: usize,
    #[serde(serialize_with = "crate::serde_big::serialize")]
    pub m: BigUint,
    #[serde(serialize_with = "crate::serde_big::serialize")]
    pub r: BigUint,
}

fn small_weights(q: u32, weights: &[BigUint], m: &BigUint, r: &BigUint) -> Option<SmallWeights> {
    let p = BigUint::from(q - 1);
    let max_moment: BigUint = weights.iter().sum::<BigUint>() * p;
    let limit = BigUint::from(u64::MAX / 4);
    if max_moment > limit || m > &limit {
        return None;
    }
    Some(SmallWeights {
        weights: weights.iter().map(|w| w.to_u64().unwrap()).collect(),
        m: m.to_u64()?,
        r: r.to_u64()?,
    })
}
