//! Cohomology of the prototype restricted to H and to the exceptional divisor.

use pn_blowup::instanton::{build_odd, restrict_to_divisor, Divisor};
use pn_blowup::les::SolverOptions;

fn main() -> pn_blowup::Result<()> {
    let c = build_odd(5)?;
    let ks: Vec<i64> = (-6..=6).collect();
    for d in [Divisor::H, Divisor::Exceptional] {
        let r = restrict_to_divisor(&c, d, &ks, SolverOptions::default())?;
        println!("E|{} against the split model {:?}:", d.name(), r.model);
        for row in &r.rows {
            let h: Vec<String> = row.h.iter().map(|v| v.to_string()).collect();
            println!("  k = {:>2}: [{}] model {:?} χ {:?}/{} agrees {}", row.k, h.join(", "), row.model_h, row.chi, row.model_chi, row.agrees);
        }
    }
    Ok(())
}
