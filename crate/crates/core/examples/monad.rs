//! Monads from cohomology tables, and the index tables behind them.

use pn_blowup::beilinson::{contribution_tables, monad_for, obstruction_list};
use pn_blowup::instanton::build_odd;
use pn_blowup::les::SolverOptions;

fn main() -> pn_blowup::Result<()> {
    for n in [5, 7] {
        let c = build_odd(n)?;
        let m = monad_for(&c.registry, &c.sheaf, SolverOptions::default())?;
        println!("n = {n}: {m}");
        for t in m.terms() {
            for s in &t.summands {
                println!("  C^{} ⊇ {} ⊗ {} ({}×)", t.p, s.group, s.bundle, s.multiplicity);
            }
        }
        println!("  rank {}, Chern {}, Euler {}", m.checks.rank, m.checks.chern, m.checks.euler);
    }
    let n = 5;
    for p in -1..=1 {
        println!("degree {p}:");
        for r in contribution_tables(p, n) {
            println!("  s = {}: {:?} {:?}", r.s, r.pairs, r.source);
        }
    }
    println!("groups that would feed degree 2: {:?}", obstruction_list(n));
    Ok(())
}
