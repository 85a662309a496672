//! Sends random codewords through a seeded deletion channel and decodes
//! them, comparing each result with the brute-force oracle.
//!
//! cargo run --example channel_roundtrip -- [seed]

use helberg::channel::random_deletions_with;
use helberg::codebook::{self, Budget};
use helberg::decoder::decode;
use helberg::oracle::brute_decode_deletions;
use helberg::{CodeParams, Codeword, ReceivedWord};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() -> helberg::Result<()> {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let params = CodeParams::with_u64(4, 3, 7, 61, None)?;
    let members: Vec<Codeword> = codebook::enumerate(&params, Budget::default())?.collect();
    println!("C_7(4,3,{},61) has {} codewords", params.m(), members.len());

    let mut ok = 0;
    let trials = 20;
    for _ in 0..trials {
        let x = &members[rng.gen_range(0..members.len())];
        let c = rng.gen_range(1..=params.d());
        let (y, pattern) = random_deletions_with(x, c, &mut rng)?;
        let rx = ReceivedWord::new(&params, y)?;
        let out = decode(&params, &rx)?;
        let oracle = brute_decode_deletions(&params, &rx)?;
        let agree = oracle.len() == 1 && oracle.contains(&out.codeword);
        println!(
            "{x}  delete {pattern:<7} -> {rx:<6} -> {}  steps={} oracle_agrees={agree}",
            out.codeword,
            out.trace.action_count()
        );
        ok += usize::from(out.codeword == *x && agree);
    }
    println!("{ok}/{trials} recovered");
    Ok(())
}
