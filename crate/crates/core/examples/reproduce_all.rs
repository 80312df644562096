//! Every acceptance criterion in one run.

use pn_blowup::les::SolverOptions;
use pn_blowup::reproduce::run_all;

fn main() -> pn_blowup::Result<()> {
    let t = std::time::Instant::now();
    for r in run_all(SolverOptions::default())? {
        println!("{:>2} {} {}: {}", r.id, if r.passed { "PASS" } else { "FAIL" }, r.title, r.detail);
    }
    println!("{:.1?}", t.elapsed());
    Ok(())
}
