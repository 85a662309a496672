//! Largest codebook size over all residues, with the residues attaining it.
//!
//! cargo run --release --example size_tables -- [q] [d] [max_n]

use helberg::codebook::{max_size_search, Budget};

fn main() -> helberg::Result<()> {
    let args: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let q = args.first().copied().unwrap_or(2) as u32;
    let d = args.get(1).copied().unwrap_or(2);
    let max_n = args.get(2).copied().unwrap_or(12);

    println!("q={q} d={d}");
    println!("{:>3} {:>6}  residues", "n", "size");
    for n in 1..=max_n {
        let res = max_size_search(q, d, n, Budget::default(), false)?;
        println!("{n:>3} {:>6}  {}", res.max_size, res.residues_joined(", "));
    }
    Ok(())
}
