use num_bigint::BigUint;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("alphabet size q must be at least 2, got {0}")]
    AlphabetTooSmall(u32),
    #[error("alphabet size q={0} exceeds the supported maximum of 256")]
    AlphabetTooLarge(u32),
    #[error("deletion capacity d must be at least 1, got {0}")]
    InvalidCapacity(usize),
    #[error("codeword length n must be at least 1")]
    EmptyLength,
    #[error("modulus m={m} is below the minimum w_(n+1)={min}")]
    ModulusTooSmall { m: BigUint, min: BigUint },
    #[error("residue r={r} must satisfy 0 <= r < m={m}")]
    ResidueOutOfRange { r: BigUint, m: BigUint },
    #[error("{0} requires d >= 2")]
    RequiresCapacityTwo(&'static str),
    #[error("d = 1 codes are decoded with Levenshtein's single-deletion algorithm, which this crate does not provide")]
    UseLevenshtein,
    #[error("symbol {symbol} at position {position} is not below q={q}")]
    InvalidSymbol { symbol: u32, position: usize, q: u32 },
    #[error("expected a word of length {expected}, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },
    #[error("prefix length {k} exceeds word length {len}")]
    PrefixOutOfRange { k: usize, len: usize },
    #[error("position {position} is outside 1..={len}")]
    PositionOutOfRange { position: usize, len: usize },
    #[error("position {0} appears more than once in the deletion pattern")]
    DuplicatePosition(usize),
    #[error("cannot delete {count} symbols from a word of length {len}")]
    TooManyDeletions { count: usize, len: usize },
    #[error("received word implies {deletions} deletions, more than the code corrects (d={capacity})")]
    BeyondCapacity { deletions: usize, capacity: usize },
    #[error("received word is longer than n={n} (length {len})")]
    TooLong { len: usize, n: usize },
    #[error("received word has full length but is not a codeword")]
    CorruptedSameLength,
    #[error("decoder needs exactly {expected} deletions, the received word implies {actual}")]
    WrongDeletionCount { expected: usize, actual: usize },
    #[error("two-deletion binary decoder requires q = 2, got q={0}")]
    NotBinary(u32),
    #[error("received word is not decodable: {0}")]
    Undecodable(String),
    #[error("enumerating {words} words exceeds the budget of {budget}")]
    BudgetExceeded { words: u128, budget: u64 },
    #[error("cannot parse word {text:?}: {reason}")]
    ParseWord { text: String, reason: String },
    #[error("cannot parse pattern {text:?}: {reason}")]
    ParsePattern { text: String, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;
