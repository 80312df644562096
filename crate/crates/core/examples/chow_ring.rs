//! Intersection numbers, tangent classes and Riemann–Roch on the blow-up of P⁵.

use pn_blowup::chow::{charge, chern_tangent, chi_line, delta, hrr_chi, slope, todd_tangent, ChowClass, Polarization};

fn main() -> pn_blowup::Result<()> {
    let n = 5;
    let (xi, alpha) = (ChowClass::xi(n), ChowClass::alpha(n));
    let h = &xi + &alpha;
    let h4 = h.pow(4);
    println!("(ξ+α)^4 = {h4}");
    println!("ξ·(ξ+α)^4 = {}, α·(ξ+α)^4 = {}", (&xi * &h4).degree(), (&alpha * &h4).degree());
    println!("c(T) = {}", chern_tangent(n));
    println!("td(T) = {}", todd_tangent(n));

    for (p, q) in [(0, 0), (1, -1), (2, 0), (-3, 2)] {
        let by_hrr = hrr_chi(&ChowClass::divisor(n, p, q).exp());
        println!("χ(O({p},{q})) = {by_hrr} (closed form {})", chi_line(p, q, n)?);
    }

    let l = Polarization::standard(n)?;
    println!("L = O{:?}: δ(O(1,0)) = {}, δ(O(0,1)) = {}", l.twist(), delta((1, 0), &l), delta((0, 1), &l));
    println!("μ(c₁ = −2α) = {}", slope(&alpha.scale_int(-2), 2, &l));
    for m in [5usize, 7, 9] {
        let l = Polarization::standard(m)?;
        println!("n = {m}: charge of ξ² is {}", charge(&ChowClass::xi(m).pow(2), &l));
    }
    Ok(())
}
