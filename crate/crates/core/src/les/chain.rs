//! Narrowing for one long exact sequence `0 → t₀ → t₁ → … → t_{L-1} → 0`.
//!
//! Unknown ranks `r_j ≥ 0` of the maps into `t_j` satisfy `dim t_j = r_j + r_{j+1}` with
//! `r_0 = r_L = 0`. Interval sweeps come first; runs of positions whose ranks are bounded are
//! then solved exactly by forward and backward reachability.

use super::interval::DimInterval;

type DI = DimInterval;

pub(crate) struct ChainState {
    pub d: Vec<DI>,
    /// `h⁰ − h¹` of the three sheaves of the sequence.
    pub delta: [DI; 3],
}

fn narrow(x: &mut DI, by: &DI, what: &str, j: usize) -> Result<bool, String> {
    match x.intersect(by) {
        None => Err(format!("{what} at position {j}: {x} ∩ {by} is empty")),
        Some(v) => {
            let changed = v != *x;
            *x = v;
            Ok(changed)
        }
    }
}

/// Sorted members of a bounded small set, stored as a bitmap from `lo`.
struct Domain {
    lo: i64,
    bits: Vec<bool>,
}

impl Domain {
    fn from_interval(i: &DI) -> Self {
        let (lo, hi) = (i.lo.unwrap(), i.hi.unwrap());
        Domain { lo, bits: vec![true; (hi - lo + 1) as usize] }
    }

    fn values(&self) -> Vec<i64> {
        self.bits.iter().enumerate().filter(|(_, b)| **b).map(|(k, _)| self.lo + k as i64).collect()
    }

    fn prefix(&self) -> Vec<usize> {
        let mut p = vec![0usize; self.bits.len() + 1];
        for (k, b) in self.bits.iter().enumerate() {
            p[k + 1] = p[k] + usize::from(*b);
        }
        p
    }

    /// Does the set meet `[a, b]`?
    fn meets(&self, pre: &[usize], a: Option<i64>, b: Option<i64>) -> bool {
        let top = self.lo + self.bits.len() as i64 - 1;
        let a = a.map_or(self.lo, |v| v.max(self.lo));
        let b = b.map_or(top, |v| v.min(top));
        if a > b {
            return false;
        }
        let (ia, ib) = ((a - self.lo) as usize, (b - self.lo) as usize);
        pre[ib + 1] > pre[ia]
    }
}

/// `[min, max]` of `u + v` over `u ∈ us`, `v ∈ vs` (both sorted) with `u + v ∈ d`.
fn pair_sum_range(us: &[i64], vs: &[i64], d: &DI) -> Option<(i64, i64)> {
    let mut best: Option<(i64, i64)> = None;
    for &u in us {
        let lo_v = d.lo.map(|l| l - u);
        let hi_v = d.hi.map(|h| h - u);
        let start = lo_v.map_or(0, |l| vs.partition_point(|&v| v < l));
        let end = hi_v.map_or(vs.len(), |h| vs.partition_point(|&v| v <= h));
        if start < end {
            let (a, b) = (u + vs[start], u + vs[end - 1]);
            best = Some(best.map_or((a, b), |(x, y)| (x.min(a), y.max(b))));
        }
    }
    best
}

fn dp_pass(r: &mut [DI], st: &mut ChainState, cap: i64) -> Result<bool, String> {
    let l = st.d.len();
    let mut changed = false;
    let mut j = 0;
    while j <= l {
        if !r[j].width().is_some_and(|w| w <= cap) {
            j += 1;
            continue;
        }
        let s = j;
        while j <= l && r[j].width().is_some_and(|w| w <= cap) {
            j += 1;
        }
        let e = j - 1;
        if e == s {
            continue;
        }
        let doms: Vec<Domain> = (s..=e).map(|k| Domain::from_interval(&r[k])).collect();
        // forward
        let mut fwd: Vec<Domain> = Vec::with_capacity(doms.len());
        fwd.push(Domain { lo: doms[0].lo, bits: doms[0].bits.clone() });
        for k in s..e {
            let prev = fwd.last().unwrap();
            let pre = prev.prefix();
            let nd = &doms[k + 1 - s];
            let d = &st.d[k];
            let bits = (0..nd.bits.len())
                .map(|t| {
                    let v = nd.lo + t as i64;
                    prev.meets(&pre, d.lo.map(|x| x - v), d.hi.map(|x| x - v))
                })
                .collect();
            fwd.push(Domain { lo: nd.lo, bits });
        }
        // backward
        let mut bwd: Vec<Domain> = Vec::with_capacity(doms.len());
        bwd.push(Domain { lo: doms[e - s].lo, bits: doms[e - s].bits.clone() });
        for k in (s..e).rev() {
            let next = bwd.last().unwrap();
            let pre = next.prefix();
            let nd = &doms[k - s];
            let d = &st.d[k];
            let bits = (0..nd.bits.len())
                .map(|t| {
                    let u = nd.lo + t as i64;
                    next.meets(&pre, d.lo.map(|x| x - u), d.hi.map(|x| x - u))
                })
                .collect();
            bwd.push(Domain { lo: nd.lo, bits });
        }
        bwd.reverse();
        let fv: Vec<Vec<i64>> = fwd.iter().map(|x| x.values()).collect();
        let bv: Vec<Vec<i64>> = bwd.iter().map(|x| x.values()).collect();
        for k in s..=e {
            let both: Vec<i64> = fv[k - s].iter().copied().filter(|v| bv[k - s].binary_search(v).is_ok()).collect();
            let (Some(&mn), Some(&mx)) = (both.first(), both.last()) else {
                return Err(format!("no consistent rank at position {k}"));
            };
            changed |= narrow(&mut r[k], &DI::new(mn, mx), "rank", k)?;
        }
        for k in s..e {
            let Some((mn, mx)) = pair_sum_range(&fv[k - s], &bv[k + 1 - s], &st.d[k]) else {
                return Err(format!("no consistent dimension at position {k}"));
            };
            changed |= narrow(&mut st.d[k], &DI::new(mn, mx), "dimension", k)?;
        }
        // h⁰ − h¹ windows: positions t..t+4 inside the run
        for t in 0..3 {
            if t < s || t + 4 > e {
                continue;
            }
            let coef = [1i64, 1, 0, -1, -1];
            let mut layer: Vec<(i64, i64, i64)> = fv[t - s].iter().map(|&u| (u, coef[0] * u, coef[0] * u)).collect();
            for off in 1..5 {
                let k = t + off;
                let d = &st.d[k - 1];
                let vals = if off == 4 { &bv[k - s] } else { &fv[k - s] };
                let mut next: Vec<(i64, i64, i64)> = Vec::new();
                for &v in vals {
                    let mut acc: Option<(i64, i64)> = None;
                    for &(u, mn, mx) in &layer {
                        if d.contains(u + v) {
                            acc = Some(acc.map_or((mn, mx), |(a, b)| (a.min(mn), b.max(mx))));
                        }
                    }
                    if let Some((a, b)) = acc {
                        next.push((v, a + coef[off] * v, b + coef[off] * v));
                    }
                }
                layer = next;
            }
            if let (Some(mn), Some(mx)) = (layer.iter().map(|x| x.1).min(), layer.iter().map(|x| x.2).max()) {
                changed |= narrow(&mut st.delta[t], &DI::new(mn, mx), "h⁰ − h¹", t)?;
            }
        }
    }
    Ok(changed)
}

pub(crate) fn narrow_chain(st: &mut ChainState, dp_cap: i64) -> Result<(), String> {
    let l = st.d.len();
    let mut r = vec![DI::NONNEG; l + 1];
    r[0] = DI::exact(0);
    r[l] = DI::exact(0);
    for _round in 0..8 {
        let mut changed = false;
        for _ in 0..(2 * l + 2) {
            let mut local = false;
            for j in 0..l {
                let next = r[j + 1];
                local |= narrow(&mut r[j], &st.d[j].sub(&next), "rank", j)?;
                let prev = r[j];
                local |= narrow(&mut r[j + 1], &st.d[j].sub(&prev), "rank", j + 1)?;
                local |= narrow(&mut st.d[j], &r[j].add(&r[j + 1]), "dimension", j)?;
            }
            for j in (0..l).rev() {
                let next = r[j + 1];
                local |= narrow(&mut r[j], &st.d[j].sub(&next), "rank", j)?;
                let prev = r[j];
                local |= narrow(&mut r[j + 1], &st.d[j].sub(&prev), "rank", j + 1)?;
                local |= narrow(&mut st.d[j], &r[j].add(&r[j + 1]), "dimension", j)?;
            }
            changed |= local;
            if !local {
                break;
            }
        }
        changed |= dp_pass(&mut r, st, dp_cap)?;
        for t in 0..3 {
            let v = st.d[t].sub(&st.d[t + 3]);
            changed |= narrow(&mut st.delta[t], &v, "h⁰ − h¹", t)?;
        }
        // δA − δB + δC = −r₆
        let [_, b, c] = st.delta;
        changed |= narrow(&mut st.delta[0], &b.sub(&c).sub(&r[6]), "h⁰ − h¹", 0)?;
        let [a2, _, c2] = st.delta;
        changed |= narrow(&mut st.delta[1], &a2.add(&c2).add(&r[6]), "h⁰ − h¹", 1)?;
        let [a3, b3, _] = st.delta;
        changed |= narrow(&mut st.delta[2], &b3.sub(&a3).sub(&r[6]), "h⁰ − h¹", 2)?;
        let [a4, b4, c4] = st.delta;
        changed |= narrow(&mut r[6], &b4.sub(&a4).sub(&c4), "rank", 6)?;
        if !changed {
            break;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(d: Vec<DI>) -> ChainState {
        let mut st = ChainState { d, delta: [DI::UNBOUNDED; 3] };
        narrow_chain(&mut st, 200).unwrap();
        st
    }

    #[test]
    fn zeros_flanking_a_segment_force_exactness() {
        // 0 → 5 → x → 1 → 0 forces x = 6
        let mut d = vec![DI::exact(0); 12];
        d[3] = DI::exact(5);
        d[4] = DI::NONNEG;
        d[5] = DI::exact(1);
        let st = run(d);
        assert_eq!(st.d[4], DI::exact(6));
    }

    #[test]
    fn bounded_search_catches_parity() {
        // 0 → a → 3 → b → 0 with a, b ∈ [0, 5] and a + b = 3
        let mut d = vec![DI::exact(0); 12];
        d[0] = DI::new(0, 5);
        d[1] = DI::exact(3);
        d[2] = DI::new(0, 5);
        let st = run(d);
        assert_eq!(st.d[0], DI::new(0, 3));
        assert_eq!(st.d[2], DI::new(0, 3));
        assert_eq!(st.delta[1], DI::exact(3));
    }

    #[test]
    fn infeasible_sequences_are_reported() {
        let mut d = vec![DI::exact(0); 12];
        d[1] = DI::exact(2);
        let mut st = ChainState { d, delta: [DI::UNBOUNDED; 3] };
        assert!(narrow_chain(&mut st, 200).is_err());
    }

    #[test]
    fn unbounded_terms_are_tolerated() {
        let mut d = vec![DI::exact(0); 12];
        d[0] = DI::NONNEG;
        d[1] = DI::exact(4);
        d[2] = DI::NONNEG;
        d[3] = DI::exact(0);
        let st = run(d);
        assert_eq!(st.d[0], DI::new(0, 4));
        assert_eq!(st.d[2], DI::new(0, 4));
    }
}
