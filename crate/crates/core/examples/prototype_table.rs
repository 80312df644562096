//! The cohomology table of the five-dimensional prototype over the exceptional collection.

use pn_blowup::instanton::build_odd;
use pn_blowup::les::{Solver, SolverOptions};
use pn_blowup::projcoh::exceptional_collection;

fn main() -> pn_blowup::Result<()> {
    let c = build_odd(5)?;
    let mut s = Solver::new(&c.registry, SolverOptions::default());
    let t = s.table(&c.sheaf, &exceptional_collection(5).bundles)?.with_label("E");
    print!("{}", t.to_markdown());
    println!("exact: {}", t.is_exact());
    for (i, tw, v) in t.nonzero() {
        println!("h^{i}(E({},{})) = {v}", tw.0, tw.1);
    }
    Ok(())
}
