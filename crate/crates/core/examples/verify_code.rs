//! Exhaustively checks that no two codewords share a deleted word, for the
//! best residue at each length.

use helberg::codebook::{max_size_search, Budget};
use helberg::oracle::verify_code;
use helberg::CodeParams;

fn main() -> helberg::Result<()> {
    for (q, d, max_n) in [(2, 2, 10), (3, 2, 7), (2, 3, 9)] {
        for n in 1..=max_n {
            let best = max_size_search(q, d, n, Budget::default(), false)?;
            let r = best.argmax_residues[0].clone();
            let params = CodeParams::new(q, d, n, r, None)?;
            let report = verify_code(&params, Budget::default())?;
            println!(
                "q={q} d={d} n={n:<2} r={:<5} codewords={:<3} deleted words={:<5} {}",
                params.r(),
                report.codewords,
                report.deleted_words,
                if report.pass { "ok" } else { "COUNTEREXAMPLE" }
            );
        }
    }
    Ok(())
}
