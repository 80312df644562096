//! Definition items, determinant, stability and monad for the odd constructions.

use pn_blowup::instanton::{build_odd, check, CheckOptions};

fn main() -> pn_blowup::Result<()> {
    for n in [5, 7] {
        let r = check(&build_odd(n)?, &CheckOptions::default())?;
        println!("{}", r.to_markdown());
    }
    Ok(())
}
