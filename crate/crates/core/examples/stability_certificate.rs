//! Semistability certificate for the prototype, via the Hoppe-type region and line bounds.

use pn_blowup::instanton::build_odd;
use pn_blowup::les::SolverOptions;
use pn_blowup::stability::Certifier;

fn main() -> pn_blowup::Result<()> {
    for n in [5, 7] {
        let c = build_odd(n)?;
        let mut cert = Certifier::new(&c.registry, SolverOptions::default()).with_sampling(7, 1000);
        let out = cert.certify(&c.sheaf, &c.polarization, true)?;
        println!("{}", out.to_markdown());
        println!("sampled {} points outside the window, uncovered {:?}\n", out.coverage.sampled, out.coverage.sample_uncovered);
    }
    Ok(())
}
