//! Linear-time deletion decoders.
//!
//! All decoders start from the received word with the missing symbols
//! appended as placeholders `δ_1..δ_c` at the right end, and track the index
//! `I = M(x) - M(known symbols at their current positions)`. At each position
//! `P` of the rightmost placeholder they either resolve placeholders (when
//! `I` is exactly the moment the placeholders would contribute there) or move
//! the known symbol just left of the placeholder block to its right, until
//! `I` reaches zero.
//!
//! * [`decode_one`] handles a single deletion by plain trial and shift.
//! * [`decode_two_binary`] handles two deletions in a binary code.
//! * [`decode_multi`] handles `2 <= c <= d` deletions over any alphabet, fixing
//!   the rightmost placeholder first and recursing on the rest.
//!
//! [`decode`] recovers `M(x)`, picks the right algorithm, and checks the
//! result.

mod trace;

use num_bigint::BigUint;
use num_traits::Zero;

pub use trace::{DecodeTrace, Slot, TraceStep};

use crate::channel::is_subsequence;
use crate::codebook;
use crate::error::{Error, Result};
use crate::params::CodeParams;
use crate::word::{self, Codeword, ReceivedWord, Symbol};

/// Decoder output.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decoded {
    pub codeword: Codeword,
    pub trace: DecodeTrace,
}

/// Which decoding routine to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Algorithm {
    /// Dispatch on the number of deletions.
    #[default]
    Auto,
    One,
    TwoBinary,
    Multi,
}

/// Moment of the transmitted codeword, recovered from the received word:
/// `r + m` when `M(x') > r`, otherwise `r`.
pub fn recover_moment(params: &CodeParams, received: &ReceivedWord) -> Result<BigUint> {
    require_capacity_two(params)?;
    let c = received.deletions(params);
    if c == 0 || c > params.d() {
        return Err(Error::BeyondCapacity {
            deletions: c,
            capacity: params.d(),
        });
    }
    Ok(recover_moment_unchecked(params, received))
}

fn recover_moment_unchecked(params: &CodeParams, received: &[Symbol]) -> BigUint {
    let mr = word::moment_unchecked(params, received);
    if &mr > params.r() {
        params.r() + params.m()
    } else {
        params.r().clone()
    }
}

/// Corrects one deletion given the index `I = M(x) - M(x')`.
pub fn decode_one(params: &CodeParams, received: &ReceivedWord, index: &BigUint) -> Result<Decoded> {
    require_capacity_two(params)?;
    expect_deletions(params, received, 1)?;
    run(params, received, index.clone(), Strategy::Multi)
}

/// Corrects two deletions in a binary code given the index.
pub fn decode_two_binary(
    params: &CodeParams,
    received: &ReceivedWord,
    index: &BigUint,
) -> Result<Decoded> {
    require_capacity_two(params)?;
    if params.q() != 2 {
        return Err(Error::NotBinary(params.q()));
    }
    expect_deletions(params, received, 2)?;
    run(params, received, index.clone(), Strategy::TwoBinary)
}

/// Corrects `2 <= c <= d` deletions over any alphabet given the index.
pub fn decode_multi(params: &CodeParams, received: &ReceivedWord, index: &BigUint) -> Result<Decoded> {
    require_capacity_two(params)?;
    let c = received.deletions(params);
    if c > params.d() {
        return Err(Error::BeyondCapacity {
            deletions: c,
            capacity: params.d(),
        });
    }
    if c < 2 {
        return Err(Error::WrongDeletionCount {
            expected: 2,
            actual: c,
        });
    }
    run(params, received, index.clone(), Strategy::Multi)
}

/// Full decoder: recovers the index, dispatches, and verifies that the
/// result is a codeword containing the received word as a subsequence.
pub fn decode(params: &CodeParams, received: &ReceivedWord) -> Result<Decoded> {
    decode_with(params, received, Algorithm::Auto)
}

/// [`decode`] with a forced algorithm choice.
pub fn decode_with(params: &CodeParams, received: &ReceivedWord, algorithm: Algorithm) -> Result<Decoded> {
    let c = received.deletions(params);
    if c == 0 {
        if codebook::contains_unchecked(params, received) {
            return Ok(Decoded {
                codeword: Codeword::from_trusted(received.to_vec()),
                trace: DecodeTrace::new(),
            });
        }
        return Err(Error::CorruptedSameLength);
    }
    require_capacity_two(params)?;
    let target = recover_moment(params, received)?;
    let observed = word::moment_unchecked(params, received);
    if observed > target {
        return Err(Error::Undecodable(format!(
            "received moment {observed} exceeds every admissible codeword moment"
        )));
    }
    let index = target - observed;
    let decoded = match algorithm {
        Algorithm::Auto if c == 1 => decode_one(params, received, &index)?,
        Algorithm::Auto => decode_multi(params, received, &index)?,
        Algorithm::One => decode_one(params, received, &index)?,
        Algorithm::TwoBinary => decode_two_binary(params, received, &index)?,
        Algorithm::Multi => decode_multi(params, received, &index)?,
    };
    if !codebook::contains_unchecked(params, &decoded.codeword) {
        return Err(Error::Undecodable(format!(
            "decoder output {} is not a codeword",
            decoded.codeword
        )));
    }
    if !is_subsequence(received, &decoded.codeword) {
        return Err(Error::Undecodable(format!(
            "decoder output {} does not contain the received word",
            decoded.codeword
        )));
    }
    Ok(decoded)
}

fn require_capacity_two(params: &CodeParams) -> Result<()> {
    if params.d() < 2 {
        return Err(Error::UseLevenshtein);
    }
    Ok(())
}

fn expect_deletions(params: &CodeParams, received: &ReceivedWord, expected: usize) -> Result<()> {
    let actual = received.deletions(params);
    if actual != expected {
        return Err(Error::WrongDeletionCount { expected, actual });
    }
    Ok(())
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Strategy {
    /// Single-deletion scan, or the general rule for `c >= 2`.
    Multi,
    /// Binary two-deletion rule while two placeholders are open.
    TwoBinary,
}

/// Action chosen at one scan position after the placeholder test failed.
enum Action {
    /// Move the known symbol left of the block to the right of it and lower
    /// `I` by the given amount.
    Shift(BigUint),
    /// Fix the rightmost placeholder to this symbol.
    Resolve(Symbol),
}

/// Working arrangement: `prefix` holds the known symbols left of the
/// placeholder block (positions `1..=P-c`), `suffix_rev` the symbols right of
/// it in reverse order.
struct State<'a> {
    params: &'a CodeParams,
    prefix: Vec<Symbol>,
    suffix_rev: Vec<Symbol>,
    open: usize,
    index: BigUint,
    trace: DecodeTrace,
}

impl State<'_> {
    /// Rightmost placeholder position.
    fn position(&self) -> usize {
        self.prefix.len() + self.open
    }

    fn weight(&self, i: usize) -> &BigUint {
        &self.params.weights()[i]
    }

    fn sub_index(&mut self, amount: &BigUint) -> Result<()> {
        if amount > &self.index {
            return Err(Error::Undecodable(format!(
                "index would become negative at P={}",
                self.position()
            )));
        }
        self.index -= amount;
        Ok(())
    }

    fn shift(&mut self, amount: &BigUint) -> Result<()> {
        let position = self.position();
        let symbol = self.prefix.pop().expect("caller checked P - c >= 1");
        self.sub_index(amount)?;
        self.suffix_rev.push(symbol);
        self.trace.push(TraceStep::Shift {
            position,
            symbol,
            index: self.index.clone(),
        });
        Ok(())
    }

    fn resolve(&mut self, value: Symbol) -> Result<()> {
        let position = self.position();
        let amount = self.weight(position) * u32::from(value);
        self.sub_index(&amount)?;
        self.suffix_rev.push(value);
        self.trace.push(TraceStep::Resolve {
            placeholder: self.open,
            value,
            position,
            index: self.index.clone(),
        });
        self.open -= 1;
        Ok(())
    }

    /// Solves `I = σ_1 w_{P-c+1} + ... + σ_c w_P` with every `σ_k <= p`.
    /// Weights of the block grow fast enough that the largest-first greedy
    /// choice is the only possible solution.
    fn placeholder_values(&self) -> Option<Vec<Symbol>> {
        let p = BigUint::from(self.params.p());
        let top = self.position();
        let mut rest = self.index.clone();
        let mut values = vec![0; self.open];
        for k in (0..self.open).rev() {
            let w = self.weight(top - (self.open - 1 - k));
            let s = (&rest / w).min(p.clone());
            rest -= w * &s;
            values[k] = symbol_of(&s);
        }
        rest.is_zero().then_some(values)
    }

    /// Multi-deletion rule at position `P` for `c` open placeholders. With
    /// `c = 1` this reduces to shifting whenever the test failed.
    fn multi_action(&self) -> Action {
        let c = self.open;
        let top = self.position();
        let x = *self.prefix.last().expect("caller checked P - c >= 1");
        let w_top = self.weight(top);
        let gap = w_top - self.weight(top - c);
        let shift_cost = &gap * u32::from(x);
        if c == 1 {
            return Action::Shift(shift_cost);
        }
        if w_top > &self.index {
            if x == 0 || self.index >= gap {
                Action::Shift(shift_cost)
            } else {
                Action::Resolve(0)
            }
        } else {
            // σ_max = max { σ <= p : σ (w_P - w_{P-c}) <= I }. With a strict
            // bound, I = k (w_P - w_{P-c}) would resolve where a shift is due.
            let sigma_max = (&self.index / &gap).min(BigUint::from(self.params.p()));
            let sigma_max = symbol_of(&sigma_max);
            if x > sigma_max {
                Action::Resolve(sigma_max)
            } else if x < sigma_max {
                if w_top * u32::from(sigma_max) <= self.index {
                    Action::Resolve(sigma_max)
                } else {
                    Action::Shift(shift_cost)
                }
            } else {
                Action::Shift(shift_cost)
            }
        }
    }

    /// Binary two-deletion rule.
    fn two_binary_action(&self) -> Action {
        let top = self.position();
        let x = *self.prefix.last().expect("caller checked P - c >= 1");
        let w_top = self.weight(top);
        let gap = w_top - self.weight(top - 2);
        if w_top > &self.index {
            if x == 0 {
                Action::Shift(BigUint::zero())
            } else if self.index >= gap {
                Action::Shift(gap)
            } else {
                Action::Resolve(0)
            }
        } else if x == 0 {
            Action::Resolve(1)
        } else {
            Action::Shift(gap)
        }
    }

    fn finish(self) -> Decoded {
        let State {
            mut prefix,
            suffix_rev,
            trace,
            ..
        } = self;
        prefix.extend(suffix_rev.into_iter().rev());
        Decoded {
            codeword: Codeword::from_trusted(prefix),
            trace,
        }
    }
}

fn symbol_of(v: &BigUint) -> Symbol {
    // Callers cap v at p <= 255.
    v.iter_u32_digits().next().unwrap_or(0) as Symbol
}

fn run(params: &CodeParams, received: &ReceivedWord, index: BigUint, strategy: Strategy) -> Result<Decoded> {
    let c = received.deletions(params);
    let mut state = State {
        params,
        prefix: received.to_vec(),
        suffix_rev: Vec::with_capacity(c),
        open: c,
        index,
        trace: DecodeTrace::new(),
    };
    state.trace.push(TraceStep::Start {
        deletions: c,
        index: state.index.clone(),
    });
    while state.open > 0 {
        if let Some(values) = state.placeholder_values() {
            for &v in values.iter().rev() {
                state.resolve(v)?;
            }
            break;
        }
        if state.prefix.is_empty() {
            return Err(Error::Undecodable(format!(
                "no placement of {} missing symbols matches index {}",
                state.open, state.index
            )));
        }
        let action = if strategy == Strategy::TwoBinary && state.open == 2 {
            state.two_binary_action()
        } else {
            state.multi_action()
        };
        match action {
            Action::Shift(amount) => state.shift(&amount)?,
            Action::Resolve(v) => state.resolve(v)?,
        }
    }
    if !state.index.is_zero() {
        return Err(Error::Undecodable(format!(
            "index {} left after placing every symbol",
            state.index
        )));
    }
    Ok(state.finish())
}

#[cfg(test)]
mod tests;
