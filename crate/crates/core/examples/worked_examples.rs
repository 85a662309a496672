//! Decodes the three textbook cases with full traces: one ternary deletion,
//! two binary deletions, and two ternary deletions.

use helberg::decoder::{decode, decode_with, Algorithm};
use helberg::{CodeParams, ReceivedWord};

fn show(title: &str, params: &CodeParams, received: Vec<u8>, algorithm: Algorithm) -> helberg::Result<()> {
    let rx = ReceivedWord::new(params, received)?;
    let out = decode_with(params, &rx, algorithm)?;
    println!("{title}: {rx} -> {}", out.codeword);
    print!("{}", out.trace);
    println!();
    Ok(())
}

fn main() -> helberg::Result<()> {
    let ternary = CodeParams::with_u64(3, 2, 8, 23, None)?;
    let binary = CodeParams::with_u64(2, 2, 10, 62, None)?;

    show("one deletion, q=3", &ternary, vec![1, 2, 2, 0, 2, 1, 2], Algorithm::One)?;
    show("two deletions, q=2", &binary, vec![1, 1, 0, 1, 0, 1, 0, 1], Algorithm::TwoBinary)?;
    show("two deletions, q=3", &ternary, vec![1, 2, 0, 2, 1, 2], Algorithm::Multi)?;

    // The dispatching decoder picks the routine itself.
    let rx = ReceivedWord::new(&ternary, vec![1, 2, 0, 2, 1, 2])?;
    println!("auto: {}", decode(&ternary, &rx)?.codeword);
    Ok(())
}
