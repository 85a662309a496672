//! The codes also correct insertions: a word with one extra symbol is within
//! indel distance d of exactly one codeword.

use helberg::channel::random_insertions;
use helberg::codebook::{self, Budget};
use helberg::oracle::brute_decode_indels_among;
use helberg::word::format_word;
use helberg::{CodeParams, Codeword};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> helberg::Result<()> {
    let params = CodeParams::with_u64(3, 2, 8, 23, None)?;
    let members: Vec<Codeword> = codebook::enumerate(&params, Budget::default())?.collect();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for x in &members {
        let y = random_insertions(x, 1, params.q(), &mut rng);
        let found = brute_decode_indels_among(&members, &y, params.d());
        let list: Vec<String> = found.iter().map(|c| c.to_string()).collect();
        println!("{x} + insertion -> {} -> {{{}}}", format_word(&y, 3), list.join(", "));
    }
    Ok(())
}
