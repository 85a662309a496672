//! Prints the weight sequence for a few alphabets and checks the
//! closed-form weight sum against direct summation.
//!
//! cargo run --example weights -- [q] [d] [count]

use helberg::params::weight_sequence;
use helberg::CodeParams;

fn main() -> helberg::Result<()> {
    let args: Vec<u32> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let q = args.first().copied().unwrap_or(3);
    let d = args.get(1).copied().unwrap_or(2) as usize;
    let count = args.get(2).copied().unwrap_or(12) as usize;

    let w = weight_sequence(q, d, count);
    println!("q={q} d={d}");
    for (i, wi) in w.iter().enumerate().skip(1) {
        println!("  w_{i:<3} = {wi}");
    }

    if d >= 2 {
        let p = CodeParams::with_u64(q, d, count, 0, None)?;
        let direct = p.weight_sum(count);
        let closed = p.weight_sum_closed_form(count)?;
        println!("sum w_1..w_{count}: direct {direct}, closed form {closed}");
        println!("sum bound holds: {}", p.verify_weight_sum_bound(count)?);
    }
    Ok(())
}
