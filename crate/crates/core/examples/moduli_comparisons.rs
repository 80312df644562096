//! Deformation count and Ulrich vanishings, with the printed values alongside.

use pn_blowup::instanton::{moduli_dimension, ulrich_check};
use pn_blowup::les::SolverOptions;

fn main() -> pn_blowup::Result<()> {
    let m = moduli_dimension(SolverOptions::default())?;
    println!("h^•(E⊗E^∨) = {}", m.h_ee.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(", "));
    println!("normal sections: {}", m.normal_sections);
    for c in [&m.delta_ideal, &m.delta_i2, &m.h0_ek, &m.h1_ee] {
        println!("{}: engine {}, printed {}, agrees {} ({} trace steps)", c.quantity, c.engine, c.printed, c.agrees, c.trace.len());
    }
    println!("replay {}, fixpoint {}", m.replay_ok, m.fixpoint_ok);
    let u = ulrich_check(SolverOptions::default())?;
    println!("Ulrich failures: {:?}", u.failures);
    println!("{}: engine {}, printed {}", u.top.quantity, u.top.engine, u.top.printed);
    Ok(())
}
