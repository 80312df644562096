//! Cohomology of line bundles and twisted differentials, and the exceptional collection.

use pn_blowup::projcoh::{exceptional_collection, h_line_all, h_omega_all};

fn main() {
    let n = 5;
    for (p, q) in [(1, -1), (3, 1), (-5, -5), (-1, 4), (2, -6)] {
        println!("h^•(O({p},{q})) = {:?}", h_line_all(p, q, n));
    }
    for (l, p, q) in [(1, 0, 2), (3, 0, 3), (2, -3, 1)] {
        println!("h^•(Ω^{l}({p},{q})) = {:?}", h_omega_all(l, p, q, n));
    }
    let ec = exceptional_collection(n);
    println!("exceptional collection on n = {n}: {:?}", ec.bundles);
    println!("vanishing and orthogonality hold: {}", ec.verified());
}
