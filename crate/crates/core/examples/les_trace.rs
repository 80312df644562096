//! Long-exact-sequence propagation with a replayable trace.

use pn_blowup::instanton::build_odd;
use pn_blowup::les::{Key, Solver, SolverOptions};

fn main() -> pn_blowup::Result<()> {
    let c = build_odd(5)?;
    let mut s = Solver::new(&c.registry, SolverOptions::default());
    let col = c.sheaf.twist(0, -4);
    let h4 = s.h(&col, 4)?;
    println!("h^4({col}) = {h4}");
    println!("derivation:");
    for step in s.support(&Key::h(&c.registry.normalize(&col)?, 4)) {
        println!("  #{} [{}] {}: {} → {} ({})", step.step, step.source, step.key, step.before, step.after, step.label);
    }
    println!("{:?}", s.stats());
    s.replay()?;
    s.check_fixpoint()?;
    println!("replay and fixpoint checks pass; trace JSON is {} bytes", s.trace_json()?.len());
    Ok(())
}
