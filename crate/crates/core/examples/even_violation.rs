//! The four-dimensional bundle passes the cohomological items but is not semistable.

use pn_blowup::instanton::{build_even4, check, CheckOptions};

fn main() -> pn_blowup::Result<()> {
    let c = build_even4()?;
    println!("c₁ = {}, c₂ = {}, charge {}", c.c1()?, c.c2()?, c.charge()?);
    let r = check(&c, &CheckOptions::default())?;
    println!("cohomological items pass: {}", r.cohomology_passes());
    println!("{}", r.stability.to_markdown());
    if let Some(w) = &r.stability.witness {
        println!("destabilising θ = O({},{}) with h⁰ = {}", w.theta.0, w.theta.1, w.h0);
    }
    Ok(())
}
