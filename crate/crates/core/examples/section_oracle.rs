//! Global sections of ideal sheaves by exact elimination on monomial bases.

use pn_blowup::sections::{h0_ideal, restrict_matrix, CoordinateMode, SectionBasis, SubKind, SubvarietySpec};

fn main() -> pn_blowup::Result<()> {
    let x = vec![SubvarietySpec::new(SubKind::Wp, 5)?, SubvarietySpec::new(SubKind::Kappa, 5)?];
    for (p, q) in [(2, 0), (1, -1), (0, 1), (3, -1)] {
        let m = restrict_matrix(&x, p, q, CoordinateMode::Fixed)?;
        let r = m.rank_report();
        println!(
            "I_X({p},{q}): {} sections of O({p},{q}), evaluation {} → {} of rank {}, h⁰ = {}",
            SectionBasis::new(p, q, 5).len(),
            r.cols,
            r.rows,
            r.rank,
            r.nullity
        );
    }
    for seed in [1, 2, 3] {
        println!("generic coordinates, seed {seed}: h⁰(I_X(2,0)) = {}", h0_ideal(&x, 2, 0, CoordinateMode::Random(seed))?);
    }
    let y = vec![SubvarietySpec::new(SubKind::Q1, 4)?, SubvarietySpec::new(SubKind::Q2, 4)?];
    let m = restrict_matrix(&y, 2, -1, CoordinateMode::Fixed)?;
    println!("n = 4, I_X(2,−1): kernel basis {:?}", m.matrix.kernel_basis().iter().map(|v| v.iter().map(|c| c.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>());
    Ok(())
}
