//! q-ary Helberg codes: number-theoretic codes that correct up to `d`
//! insertions and deletions.
//!
//! A codebook `C_n(q, d, m, r)` holds the length-`n` words over
//! `{0, ..., q-1}` whose weighted sum `M(x) = Σ w_i x_i` is congruent to `r`
//! modulo `m`, where the weights follow
//! `w_i = 1 + (q-1)(w_{i-1} + ... + w_{i-d})`.
//!
//! ```
//! use helberg::{decoder, CodeParams, ReceivedWord};
//!
//! let params = CodeParams::with_u64(3, 2, 8, 23, None)?;
//! let received = ReceivedWord::new(&params, vec![1, 2, 0, 2, 1, 2])?;
//! let decoded = decoder::decode(&params, &received)?;
//! assert_eq!(decoded.codeword.symbols(), &[1, 2, 2, 0, 2, 2, 1, 2]);
//! # Ok::<(), helberg::Error>(())
//! ```

pub mod channel;
pub mod cli;
pub mod codebook;
pub mod decoder;
mod error;
pub mod oracle;
pub mod params;
mod serde_big;
pub mod word;

pub use channel::DeletionPattern;
pub use codebook::{Budget, SizeSearchResult};
pub use decoder::{DecodeTrace, Decoded};
pub use error::{Error, Result};
pub use oracle::VerificationReport;
pub use params::CodeParams;
pub use word::{Codeword, ReceivedWord, Symbol};
