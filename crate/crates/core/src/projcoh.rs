//! Closed-form cohomology of `O(p, q)` and `Ω^l(p, q) = pr*Ω^l_{P^{n-1}} ⊗ O(p, q)`.
//!
//! Everything is pushed forward along the `P¹`-bundle projection to `P^{n-1}`:
//! for `p ≥ 0` the direct image of `O(p, q)` is `⊕_{k=0}^{p} O(q + k)`, for `p = −1` it
//! vanishes, and for `p ≤ −2` only `R¹` survives and contributes
//! `⊕_{k=0}^{−2−p} O(q − k − 1)` one cohomological degree higher.

use serde::Serialize;

use crate::chow::TwistPair;

/// Binomial coefficient, zero whenever the upper argument is smaller than the lower one.
pub fn binom(top: i64, bottom: i64) -> i64 {
    if bottom < 0 || top < bottom {
        return 0;
    }
    let k = bottom.min(top - bottom);
    let mut acc: i128 = 1;
    for i in 1..=k as i128 {
        acc = acc * (top as i128 - k as i128 + i) / i;
    }
    i64::try_from(acc).expect("binomial coefficient overflows i64")
}

/// Bott's formula for `h^i(P^dim, Ω^l(m))`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BottTable {
    pub dim: usize,
}

impl BottTable {
    pub fn new(dim: usize) -> Self {
        BottTable { dim }
    }

    pub fn h(&self, i: i64, l: usize, m: i64) -> i64 {
        let d = self.dim as i64;
        let l = l as i64;
        if l < 0 || l > d || i < 0 || i > d {
            return 0;
        }
        let mut v = 0;
        if i == 0 && m > l {
            v += binom(m + d - l, m) * binom(m - 1, l);
        }
        if m == 0 && i == l {
            v += 1;
        }
        if i == d && m < l - d {
            v += binom(-m + l, -m) * binom(-m - 1, d - l);
        }
        v
    }

    /// `h^i(P^dim, O(m))`.
    pub fn h_line(&self, i: i64, m: i64) -> i64 {
        self.h(i, 0, m)
    }
}

fn pushforward_sum(i: i64, p: i64, q: i64, base: impl Fn(i64, i64) -> i64) -> i64 {
    if p >= 0 {
        (0..=p).map(|k| base(i, q + k)).sum()
    } else if p == -1 {
        0
    } else {
        (0..=(-2 - p)).map(|k| base(i - 1, q - k - 1)).sum()
    }
}

/// `h^i(O(p, q))` on the blow-up of `Pⁿ`.
pub fn h_line(i: i64, p: i64, q: i64, n: usize) -> i64 {
    if i < 0 || i > n as i64 {
        return 0;
    }
    let base = BottTable::new(n - 1);
    pushforward_sum(i, p, q, |j, m| base.h_line(j, m))
}

/// `h^i(Ω^l(p, q))` on the blow-up of `Pⁿ`.
pub fn h_omega(i: i64, l: usize, p: i64, q: i64, n: usize) -> i64 {
    if i < 0 || i > n as i64 || l > n - 1 {
        return 0;
    }
    let base = BottTable::new(n - 1);
    pushforward_sum(i, p, q, |j, m| base.h(j, l, m))
}

pub fn h_line_all(p: i64, q: i64, n: usize) -> Vec<i64> {
    (0..=n as i64).map(|i| h_line(i, p, q, n)).collect()
}

pub fn h_omega_all(l: usize, p: i64, q: i64, n: usize) -> Vec<i64> {
    (0..=n as i64).map(|i| h_omega(i, l, p, q, n)).collect()
}

/// Row-by-row transcription of the tabulated line-bundle formula: each row contributes to the
/// degree it names, empty sums give zero.
pub fn tabulated_h_line(i: i64, p: i64, q: i64, n: usize) -> i64 {
    let n = n as i64;
    let mut v = 0;
    if i == 0 {
        v += (0..=p).map(|k| binom(n + q + k - 1, n - 1)).sum::<i64>();
    }
    if i == 1 {
        v += (0..=(-2 - p)).map(|k| binom(n + q - k - 2, n - 1)).sum::<i64>();
    }
    if i == n - 1 {
        v += (0..=p).map(|k| binom(-q - k - 1, n - 1)).sum::<i64>();
    }
    if i == n {
        v += (0..=(-2 - p)).map(|k| binom(k - q, n - 1)).sum::<i64>();
    }
    v
}

/// Row-by-row transcription of the tabulated twisted-differentials formula.
///
/// The isolated `1` row (`l = i`, `k + q = 0`) is read with `k` running over `0..=p`. For
/// `p ≤ −2` the pushforward places the corresponding contribution in degree `l + 1`, which
/// the table does not list; callers compare only where `i ≠ l + 1` in that regime.
pub fn tabulated_h_omega(i: i64, l: usize, p: i64, q: i64, n: usize) -> i64 {
    let n = n as i64;
    let l = l as i64;
    let mut v = 0;
    if i == 0 {
        v += (0..=p)
            .map(|k| binom(q + k + n - l - 1, n - 1 - l) * binom(q + k - 1, l))
            .sum::<i64>();
    }
    if i == 1 {
        v += (0..=(-2 - p))
            .map(|k| binom(q - k + n - l - 2, n - 1 - l) * binom(q - k - 2, l))
            .sum::<i64>();
    }
    if i == l {
        v += (0..=p).filter(|k| k + q == 0).count() as i64;
    }
    if i == n - 1 {
        v += (0..=p)
            .map(|k| binom(-q - k + l, l) * binom(-q - k - 1, n - 1 - l))
            .sum::<i64>();
    }
    if i == n {
        v += (0..=(-2 - p))
            .map(|k| binom(k - q + l + 1, l) * binom(k - q, n - 1 - l))
            .sum::<i64>();
    }
    v
}

#[derive(Debug, Clone, Serialize)]
pub struct ExceptionalCollection {
    pub n: usize,
    pub bundles: Vec<TwistPair>,
    /// `h^•` of each member.
    pub cohomology: Vec<(TwistPair, Vec<i64>)>,
    /// Members other than `O` with nonzero cohomology (empty when the pattern holds).
    pub nonvanishing: Vec<TwistPair>,
    pub structure_sheaf_h0: i64,
    /// Pairs `(j, k)` with `j > k` where `h^•(θ_j^∨ ⊗ θ_k) ≠ 0`.
    pub orthogonality_failures: Vec<(TwistPair, TwistPair)>,
}

impl ExceptionalCollection {
    pub fn verified(&self) -> bool {
        self.nonvanishing.is_empty()
            && self.structure_sheaf_h0 == 1
            && self.orthogonality_failures.is_empty()
    }
}

/// `O(−1, 2−n), …, O(−1, 1), O(0, 1−n), …, O(0, 0)` with its vanishing report.
pub fn exceptional_collection(n: usize) -> ExceptionalCollection {
    let ni = n as i64;
    let mut bundles: Vec<TwistPair> = (2 - ni..=1).map(|q| (-1, q)).collect();
    bundles.extend((1 - ni..=0).map(|q| (0, q)));
    let cohomology: Vec<(TwistPair, Vec<i64>)> = bundles
        .iter()
        .map(|&(p, q)| ((p, q), h_line_all(p, q, n)))
        .collect();
    let nonvanishing = cohomology
        .iter()
        .filter(|(t, h)| *t != (0, 0) && h.iter().any(|&x| x != 0))
        .map(|(t, _)| *t)
        .collect();
    let structure_sheaf_h0 = h_line(0, 0, 0, n);
    let mut orthogonality_failures = Vec::new();
    for (j, &tj) in bundles.iter().enumerate() {
        for &tk in &bundles[..j] {
            let (p, q) = (tk.0 - tj.0, tk.1 - tj.1);
            if h_line_all(p, q, n).iter().any(|&x| x != 0) {
                orthogonality_failures.push((tj, tk));
            }
        }
    }
    ExceptionalCollection {
        n,
        bundles,
        cohomology,
        nonvanishing,
        structure_sheaf_h0,
        orthogonality_failures,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_convention() {
        assert_eq!(binom(5, 2), 10);
        assert_eq!(binom(2, 5), 0);
        assert_eq!(binom(-1, 0), 0);
        assert_eq!(binom(-3, 2), 0);
        assert_eq!(binom(4, 0), 1);
    }

    #[test]
    fn sections_of_o_one_minus_one() {
        assert_eq!(h_line_all(1, -1, 5), vec![1, 0, 0, 0, 0, 0]);
    }

    #[test]
    fn exceptional_members_vanish() {
        for n in [3usize, 4, 5, 7] {
            let ni = n as i64;
            for k in 0..ni {
                if k > 0 {
                    assert!(h_line_all(0, -k, n).iter().all(|&h| h == 0));
                }
            }
            for m in 2 - ni..=1 {
                assert!(h_line_all(-1, m, n).iter().all(|&h| h == 0));
            }
        }
    }

    #[test]
    fn global_sections_of_o_three_one() {
        let oracle: i64 = (0..=3).map(|k| binom(5 + k, 4)).sum();
        assert_eq!(oracle, 125);
        assert_eq!(h_line(0, 3, 1, 5), 125);
    }

    #[test]
    fn identity_class_in_each_hodge_degree() {
        for n in [4usize, 5] {
            for l in 0..n {
                assert_eq!(h_omega(l as i64, l, 0, 0, n), 1, "n = {n}, l = {l}");
            }
        }
    }

    #[test]
    fn sections_of_twisted_cotangent_on_p4() {
        // Euler sequence 0 → Ω¹(2) → O(1)^5 → O(2) → 0 on P⁴: 25 − 15.
        let euler_oracle = 5 * binom(5, 4) - binom(6, 4);
        assert_eq!(euler_oracle, 10);
        assert_eq!(BottTable::new(4).h(0, 1, 2), euler_oracle);
        assert_eq!(h_omega(0, 1, 0, 2, 5), euler_oracle);
    }

    #[test]
    fn p_minus_one_kills_differentials() {
        for n in [3usize, 5] {
            for l in 0..n {
                for q in -6..=6 {
                    assert!(h_omega_all(l, -1, q, n).iter().all(|&h| h == 0));
                }
            }
        }
    }

    #[test]
    fn top_differentials_are_a_line_bundle() {
        // Ω^{m}_{P^m} = O(−m−1)
        let b = BottTable::new(4);
        for i in 0..=4 {
            for m in -8..8 {
                assert_eq!(b.h(i, 4, m), b.h_line(i, m - 5));
            }
        }
    }

    #[test]
    fn exceptional_collections() {
        let c5 = exceptional_collection(5);
        assert_eq!(
            c5.bundles,
            vec![
                (-1, -3),
                (-1, -2),
                (-1, -1),
                (-1, 0),
                (-1, 1),
                (0, -4),
                (0, -3),
                (0, -2),
                (0, -1),
                (0, 0)
            ]
        );
        assert!(c5.verified());
        let c3 = exceptional_collection(3);
        assert_eq!(c3.bundles.len(), 6);
        assert!(c3.verified());
        assert_eq!(c3.structure_sheaf_h0, 1);
    }
    #[test]
    fn serre_duality_for_lines_and_differentials() {
        for n in [3usize, 4, 5] {
            let ni = n as i64;
            for p in -5..=4 {
                for q in -7..=5 {
                    for i in 0..=ni {
                        assert_eq!(h_line(i, p, q, n), h_line(ni - i, -2 - p, 1 - ni - q, n));
                        for l in 0..n {
                            assert_eq!(
                                h_omega(i, l, p, q, n),
                                h_omega(ni - i, n - 1 - l, -2 - p, 1 - q, n)
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn euler_characteristic_matches_riemann_roch() {
        for n in [3usize, 5] {
            for p in -4..=3 {
                for q in -6..=4 {
                    let h = h_line_all(p, q, n);
                    let chi: i64 = h.iter().enumerate().map(|(i, v)| if i % 2 == 0 { *v } else { -*v }).sum();
                    let rr = crate::chow::chi_line(p, q, n).unwrap();
                    assert_eq!(num_bigint::BigInt::from(chi), rr, "n = {n}, ({p}, {q})");
                }
            }
        }
    }

    #[test]
    fn tabulated_rows_agree() {
        for n in [3usize, 4, 5, 6] {
            let ni = n as i64;
            for p in -5..=4 {
                for q in -8..=6 {
                    for i in 0..=ni {
                        assert_eq!(h_line(i, p, q, n), tabulated_h_line(i, p, q, n));
                        for l in 0..n {
                            if p <= -2 && i == l as i64 + 1 {
                                continue;
                            }
                            assert_eq!(
                                h_omega(i, l, p, q, n),
                                tabulated_h_omega(i, l, p, q, n),
                                "n = {n}, i = {i}, l = {l}, ({p}, {q})"
                            );
                        }
                    }
                }
            }
        }
    }
}
