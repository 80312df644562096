//! A torsion-free, non-locally-free instanton as the kernel of E → O_℘.

use pn_blowup::instanton::{build_elementary, check, CheckOptions};

fn main() -> pn_blowup::Result<()> {
    let g = build_elementary(5)?;
    for r in g.registry.records() {
        println!("{r}");
    }
    let rep = check(&g, &CheckOptions::default())?;
    println!("{}", rep.to_markdown());
    println!("{}", rep.stability.to_markdown());
    Ok(())
}
