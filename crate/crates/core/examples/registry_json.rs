//! Exporting a registry as JSON and reading it back as an axiom file.

use pn_blowup::instanton::build_odd;
use pn_blowup::les::{Solver, SolverOptions};
use pn_blowup::sheafdag::{Registry, SheafExpr};

fn main() -> pn_blowup::Result<()> {
    let c = build_odd(5)?;
    let text = c.registry.to_json()?;
    println!("{text}");
    let back = Registry::from_json(&text)?;
    let mut s = Solver::new(&back, SolverOptions::default());
    let e = SheafExpr::named("F").twist(-1, -5);
    println!("after reload: h^4({e}) = {}", s.h(&e, 4)?);
    Ok(())
}
