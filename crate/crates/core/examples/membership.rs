//! Codebook membership, moments and enumeration.

use helberg::codebook::{self, Budget};
use helberg::word::{format_word, moment};
use helberg::CodeParams;

fn main() -> helberg::Result<()> {
    let params = CodeParams::with_u64(3, 2, 8, 23, None)?;
    println!("C_8(3,2,{},{})", params.m(), params.r());

    for word in [[1, 2, 2, 0, 2, 2, 1, 2], [1, 2, 2, 0, 2, 2, 1, 1]] {
        let m = moment(&params, &word)?;
        let member = codebook::contains(&params, &word)?;
        println!(
            "  {}  M={m}  residue={}  member={member}",
            format_word(&word, 3),
            &m % params.m()
        );
    }

    println!("members:");
    for x in codebook::enumerate(&params, Budget::default())? {
        println!("  {x}");
    }
    println!("size: {}", codebook::size(&params, Budget::default())?);
    Ok(())
}
