use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::word::Symbol;

/// One decoder action. `index` is the value of `I` after the action.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "step", rename_all = "snake_case")]
pub enum TraceStep {
    /// Placeholders appended at the right end; `index` is the starting `I`.
    Start {
        deletions: usize,
        #[serde(serialize_with = "crate::serde_big::serialize")]
        index: BigUint,
    },
    /// The known symbol just left of the placeholder block moved to the right
    /// of it. `position` is the rightmost placeholder position before the move.
    Shift {
        position: usize,
        symbol: Symbol,
        #[serde(serialize_with = "crate::serde_big::serialize")]
        index: BigUint,
    },
    /// Placeholder `placeholder` (1-based, left to right) fixed to `value`
    /// at `position`.
    Resolve {
        placeholder: usize,
        value: Symbol,
        position: usize,
        #[serde(serialize_with = "crate::serde_big::serialize")]
        index: BigUint,
    },
}

impl TraceStep {
    pub fn index(&self) -> &BigUint {
        match self {
            TraceStep::Start { index, .. }
            | TraceStep::Shift { index, .. }
            | TraceStep::Resolve { index, .. } => index,
        }
    }
}

impl fmt::Display for TraceStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TraceStep::Start { deletions, index } => write!(f, "start c={deletions} I={index}"),
            TraceStep::Shift {
                position,
                symbol,
                index,
            } => write!(f, "shift P={position} sym={symbol} I={index}"),
            TraceStep::Resolve {
                placeholder,
                value,
                position,
                index,
            } => write!(f, "resolve k={placeholder} val={value} P={position} I={index}"),
        }
    }
}

/// Slot of a partially decoded word: a known symbol or an unresolved
/// placeholder.
pub type Slot = Option<Symbol>;

/// Ordered log of a decoder run.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct DecodeTrace {
    steps: Vec<TraceStep>,
}

impl DecodeTrace {
    pub fn new() -> Self {
        DecodeTrace::default()
    }

    pub(crate) fn push(&mut self, step: TraceStep) {
        self.steps.push(step);
    }

    pub fn steps(&self) -> &[TraceStep] {
        &self.steps
    }

    /// Number of shift and resolve actions.
    pub fn action_count(&self) -> usize {
        self.steps
            .iter()
            .filter(|s| !matches!(s, TraceStep::Start { .. }))
            .count()
    }

    /// Distinct successive values of `I`, starting from the initial index.
    pub fn index_sequence(&self) -> Vec<BigUint> {
        let mut out: Vec<BigUint> = Vec::new();
        for step in &self.steps {
            if out.last() != Some(step.index()) {
                out.push(step.index().clone());
            }
        }
        out
    }

    /// Rebuilds the arrangement after every step, starting from `received`
    /// padded with the placeholders announced by the `Start` step. The last
    /// arrangement of a complete trace is the decoded word.
    pub fn replay(&self, received: &[Symbol]) -> Result<Vec<Vec<Slot>>> {
        let bad = |why: &str| Error::Undecodable(format!("trace replay: {why}"));
        let mut iter = self.steps.iter();
        let c = match iter.next() {
            Some(TraceStep::Start { deletions, .. }) => *deletions,
            Some(_) => return Err(bad("trace does not begin with start")),
            None => return Ok(Vec::new()),
        };
        let n = received.len() + c;
        let mut slots: Vec<Slot> = received.iter().copied().map(Some).collect();
        slots.extend(std::iter::repeat_n(None, c));
        // Rightmost placeholder position and the number still open.
        let mut p = n;
        let mut open = c;
        let mut out = vec![slots.clone()];
        for step in iter {
            match *step {
                TraceStep::Shift { position, symbol, .. } => {
                    if position != p || open == 0 || p <= open {
                        return Err(bad("shift out of place"));
                    }
                    let from = p - open - 1;
                    if slots[from] != Some(symbol) {
                        return Err(bad("shifted symbol does not match"));
                    }
                    slots[from..p].rotate_left(1);
                    p -= 1;
                }
                TraceStep::Resolve {
                    placeholder,
                    value,
                    position,
                    ..
                } => {
                    // Placeholders close right to left.
                    if open == 0 || placeholder != open {
                        return Err(bad("resolve of a placeholder that is not rightmost"));
                    }
                    if position != p || slots[position - 1].is_some() {
                        return Err(bad("resolve out of place"));
                    }
                    slots[position - 1] = Some(value);
                    open -= 1;
                    p -= 1;
                }
                TraceStep::Start { .. } => return Err(bad("repeated start")),
            }
            out.push(slots.clone());
        }
        Ok(out)
    }

    /// Line-oriented text form, one step per line.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for step in &self.steps {
            s.push_str(&step.to_string());
            s.push('\n');
        }
        s
    }
}

impl fmt::Display for DecodeTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl FromStr for DecodeTrace {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut trace = DecodeTrace::new();
        for line in text.lines().map(str::trim).filter(|l| !l.is_empty()) {
            trace.push(parse_step(line)?);
        }
        Ok(trace)
    }
}

fn parse_step(line: &str) -> Result<TraceStep> {
    let bad = || Error::Undecodable(format!("malformed trace line {line:?}"));
    let mut parts = line.split_whitespace();
    let kind = parts.next().ok_or_else(bad)?;
    let mut fields = std::collections::HashMap::new();
    for part in parts {
        let (k, v) = part.split_once('=').ok_or_else(bad)?;
        fields.insert(k, v);
    }
    let get = |k: &str| fields.get(k).copied().ok_or_else(bad);
    let num = |k: &str| get(k)?.parse::<usize>().map_err(|_| bad());
    let sym = |k: &str| get(k)?.parse::<Symbol>().map_err(|_| bad());
    let index = get("I")?.parse::<BigUint>().map_err(|_| bad())?;
    Ok(match kind {
        "start" => TraceStep::Start {
            deletions: num("c")?,
            index,
        },
        "shift" => TraceStep::Shift {
            position: num("P")?,
            symbol: sym("sym")?,
            index,
        },
        "resolve" => TraceStep::Resolve {
            placeholder: num("k")?,
            value: sym("val")?,
            position: num("P")?,
            index,
        },
        _ => return Err(bad()),
    })
}
