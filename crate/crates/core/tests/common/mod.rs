#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap};

use cmtrace::linalg;
use cmtrace::{Monomial, MonomialIdeal, SimpleGraph};

/// Multigraded Betti numbers `β_{i,b}(I)` from the Taylor complex tensored
/// with the field: in degree `b` the chains are subsets `F` of `G(I)` with
/// `lcm(F) = b`, and a face of `F` survives in the boundary only if it has
/// the same lcm.
pub fn taylor_betti(ideal: &MonomialIdeal) -> BTreeMap<(usize, Monomial), usize> {
    let g = ideal.gens();
    let mu = g.len();
    let n = ideal.nvars();
    let mut by_degree: HashMap<Monomial, Vec<u32>> = HashMap::new();
    for mask in 1u32..(1 << mu) {
        let l = (0..mu).filter(|k| mask & (1 << k) != 0).fold(Monomial::one(n), |acc, k| acc.lcm(&g[k]));
        by_degree.entry(l).or_default().push(mask);
    }
    let mut out = BTreeMap::new();
    for (b, faces) in by_degree {
        let top = faces.iter().map(|f| f.count_ones() as usize).max().unwrap();
        let mut sized: Vec<Vec<u32>> = vec![Vec::new(); top + 2];
        for &f in &faces {
            sized[f.count_ones() as usize].push(f);
        }
        let rank_of = |s: usize| -> usize {
            if s < 2 || s > top || sized[s].is_empty() || sized[s - 1].is_empty() {
                return 0;
            }
            let index: HashMap<u32, usize> = sized[s - 1].iter().enumerate().map(|(k, &f)| (f, k)).collect();
            let mut mat = vec![vec![0i64; sized[s].len()]; sized[s - 1].len()];
            for (col, &f) in sized[s].iter().enumerate() {
                let mut sign = 1;
                for v in 0..mu {
                    if f & (1 << v) != 0 {
                        if let Some(&row) = index.get(&(f & !(1 << v))) {
                            mat[row][col] = sign;
                        }
                        sign = -sign;
                    }
                }
            }
            linalg::rank(&mat)
        };
        let ranks: Vec<usize> = (0..=top + 1).map(rank_of).collect();
        for s in 1..=top {
            let h = sized[s].len() - ranks[s] - ranks[s + 1];
            if h > 0 {
                out.insert((s - 1, b.clone()), h);
            }
        }
    }
    out
}

/// Whether the induced subgraph on `mask` is a cycle.
fn induces_cycle(g: &SimpleGraph, mask: u32) -> bool {
    let vs: Vec<usize> = (0..g.len()).filter(|&v| mask & (1 << v) != 0).collect();
    if vs.len() < 4 {
        return false;
    }
    let deg = |v: usize| vs.iter().filter(|&&w| g.has_edge(v, w)).count();
    if !vs.iter().all(|&v| deg(v) == 2) {
        return false;
    }
    // 2-regular and connected
    let mut seen = 1u32 << vs[0];
    let mut stack = vec![vs[0]];
    while let Some(v) = stack.pop() {
        for &w in &vs {
            if g.has_edge(v, w) && seen & (1 << w) == 0 {
                seen |= 1 << w;
                stack.push(w);
            }
        }
    }
    seen == mask
}

/// Chordality by exhaustive search for an induced cycle of length ≥ 4.
pub fn brute_force_chordal(g: &SimpleGraph) -> bool {
    let n = g.len();
    !(0u32..(1 << n)).any(|mask| induces_cycle(g, mask))
}
