//! Deterministic instance families for sweeps: exhaustive two-variable
//! enumerations, relabeled classification patterns, and seeded random
//! ideals and edge-sequence data.

use std::collections::BTreeSet;

use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::betti::is_cohen_macaulay_h2;
use crate::classify::NgCase;
use crate::decomposition::height;
use crate::graph::EdgeSequenceData;
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::ring::AmbientRing;
use crate::trace::is_generically_gorenstein;

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn xy_ring() -> AmbientRing {
    AmbientRing::new(["x", "y"]).expect("valid names")
}

/// `(x^a, x^b y^c, y^d)` with its parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XyInstance {
    pub a: u32,
    pub b: u32,
    pub c: u32,
    pub d: u32,
    pub ideal: MonomialIdeal,
}

/// Whether `(a, b, c, d)` satisfy the two-variable nearly-Gorenstein
/// conditions.
pub fn xy_conditions(a: u32, b: u32, c: u32, d: u32) -> bool {
    (a - b == 1 || b == 1) && (d - c == 1 || c == 1) && b + c >= 1
}

/// All `(x^a, x^b y^c, y^d)` with `0 ≤ b < a ≤ max`, `0 ≤ c < d ≤ max` and
/// `b + c ≥ 1`. When `b = 0` or `c = 0` one generator is redundant and the
/// ideal has two minimal generators.
pub fn xy_three_generator_family(max_exp: u32) -> Vec<XyInstance> {
    let r = xy_ring();
    let mut out = Vec::new();
    for a in 1..=max_exp {
        for b in 0..a {
            for d in 1..=max_exp {
                for c in 0..d {
                    if b + c == 0 {
                        continue;
                    }
                    let gens = vec![Monomial::new(vec![a, 0]), Monomial::new(vec![b, c]), Monomial::new(vec![0, d])];
                    let ideal = MonomialIdeal::new(&r, gens).expect("two variables");
                    out.push(XyInstance { a, b, c, d, ideal });
                }
            }
        }
    }
    out
}

/// All relabelings of `ideal` by permutations of its ambient variables.
fn relabelings(ideal: &MonomialIdeal) -> Vec<MonomialIdeal> {
    let n = ideal.nvars();
    let set: BTreeSet<Vec<Monomial>> =
        (0..n).permutations(n).map(|p| ideal.permute(&p).expect("permutation").gens().to_vec()).collect();
    set.into_iter().map(|g| MonomialIdeal::new(ideal.ring(), g).expect("same ring")).collect()
}

fn from_exps(ring: &AmbientRing, gens: &[Vec<u32>]) -> MonomialIdeal {
    MonomialIdeal::new(ring, gens.iter().map(|e| Monomial::new(e.clone())).collect()).expect("arity")
}

/// Every instance of the five nearly-Gorenstein patterns with parameters at
/// most `max_param`, in all relabelings of the variables. Case (a) uses
/// rings in two and three variables.
pub fn pattern_instances(max_param: u32) -> Vec<(NgCase, MonomialIdeal)> {
    let mut out = Vec::new();
    // (a): disjoint supports
    for n in 2..=3usize {
        let ring = AmbientRing::indexed("x", n).expect("valid");
        let mut seen = BTreeSet::new();
        for (sa, sb) in (0..3usize.pow(n as u32)).map(|code| {
            let mut sa = Vec::new();
            let mut sb = Vec::new();
            let mut c = code;
            for v in 0..n {
                match c % 3 {
                    1 => sa.push(v),
                    2 => sb.push(v),
                    _ => {}
                }
                c /= 3;
            }
            (sa, sb)
        }) {
            if sa.is_empty() || sb.is_empty() {
                continue;
            }
            let exps = |s: &[usize]| s.iter().map(|_| 1..=max_param).multi_cartesian_product().collect::<Vec<_>>();
            for ea in exps(&sa) {
                for eb in exps(&sb) {
                    let mut u = vec![0; n];
                    let mut v = vec![0; n];
                    sa.iter().zip(&ea).for_each(|(&k, &e)| u[k] = e);
                    sb.iter().zip(&eb).for_each(|(&k, &e)| v[k] = e);
                    let i = from_exps(&ring, &[u, v]);
                    if seen.insert(i.gens().to_vec()) {
                        out.push((NgCase::ATwoGens, i));
                    }
                }
            }
        }
    }
    // (b)
    for inst in xy_three_generator_family(max_param) {
        if inst.ideal.num_gens() == 3 && xy_conditions(inst.a, inst.b, inst.c, inst.d) {
            out.push((NgCase::BTwoVars, inst.ideal));
        }
    }
    let r3 = AmbientRing::indexed("x", 3).expect("valid");
    // (c)
    for a in 1..=max_param {
        for b in 0..=max_param {
            if a + b >= 2 {
                let i = from_exps(&r3, &[vec![a, b, 0], vec![1, 0, 1], vec![0, 1, 1]]);
                out.extend(relabelings(&i).into_iter().map(|j| (NgCase::C, j)));
            }
        }
    }
    // (d)
    for b in 1..=max_param {
        let i = from_exps(&r3, &[vec![1, b, 0], vec![0, b + 1, 0], vec![1, 0, 1]]);
        out.extend(relabelings(&i).into_iter().map(|j| (NgCase::D, j)));
    }
    // (e)
    let r4 = AmbientRing::indexed("x", 4).expect("valid");
    let i = from_exps(&r4, &[vec![1, 0, 1, 0], vec![1, 0, 0, 1], vec![0, 1, 0, 1]]);
    out.extend(relabelings(&i).into_iter().map(|j| (NgCase::E, j)));
    out
}

/// `m` generators `x^{a_i} y^{b_i}` with `a` strictly decreasing and `b`
/// strictly increasing, exponents at most `max_exp`. The ideal need not be
/// Cohen-Macaulay.
pub fn random_xy_ideal<R: Rng>(rng: &mut R, m: usize, max_exp: u32) -> MonomialIdeal {
    assert!(m >= 1 && m as u32 <= max_exp + 1);
    let pool: Vec<u32> = (0..=max_exp).collect();
    let mut a: Vec<u32> = pool.choose_multiple(rng, m).copied().collect();
    let mut b: Vec<u32> = pool.choose_multiple(rng, m).copied().collect();
    a.sort_unstable_by(|p, q| q.cmp(p));
    b.sort_unstable();
    let gens = a.into_iter().zip(b).map(|(p, q)| Monomial::new(vec![p, q])).collect();
    MonomialIdeal::new(&xy_ring(), gens).expect("two variables")
}

/// Random data `(G, a, b)` on `n` vertices with `t` distinct edges and
/// exponents in `1..=max_exp`.
pub fn random_edge_sequence_data<R: Rng>(rng: &mut R, n: usize, t: usize, max_exp: u32) -> EdgeSequenceData {
    let mut pairs: Vec<(usize, usize)> = (0..n).tuple_combinations().collect();
    assert!(t <= pairs.len());
    pairs.shuffle(rng);
    let edges: Vec<(usize, usize)> =
        pairs.into_iter().take(t).map(|(i, j)| if rng.gen_bool(0.5) { (i, j) } else { (j, i) }).collect();
    let a = (0..t).map(|_| rng.gen_range(1..=max_exp)).collect();
    let b = (0..t).map(|_| rng.gen_range(1..=max_exp)).collect();
    EdgeSequenceData::new(AmbientRing::indexed("x", n).expect("valid"), edges, a, b).expect("valid data")
}

/// Random edge-sequence data with `1 ≤ t ≤ max_edges` on between two and
/// `max_vertices` vertices.
pub fn random_small_edge_data<R: Rng>(
    rng: &mut R,
    max_vertices: usize,
    max_edges: usize,
    max_exp: u32,
) -> EdgeSequenceData {
    let n = rng.gen_range(2..=max_vertices);
    let t = rng.gen_range(1..=max_edges.min(n * (n - 1) / 2));
    random_edge_sequence_data(rng, n, t, max_exp)
}

/// Random ideal with at most `max_gens` generators in `n` variables,
/// exponents at most `max_exp`; never zero or the unit ideal.
pub fn random_monomial_ideal<R: Rng>(rng: &mut R, ring: &AmbientRing, max_gens: usize, max_exp: u32) -> MonomialIdeal {
    let n = ring.len();
    loop {
        let k = rng.gen_range(1..=max_gens);
        let gens: Vec<Monomial> =
            (0..k).map(|_| Monomial::new((0..n).map(|_| rng.gen_range(0..=max_exp)).collect())).collect();
        let i = MonomialIdeal::new(ring, gens).expect("arity");
        if i.is_proper() {
            return i;
        }
    }
}

pub fn random_squarefree_ideal<R: Rng>(rng: &mut R, ring: &AmbientRing, max_gens: usize) -> MonomialIdeal {
    random_monomial_ideal(rng, ring, max_gens, 1)
}

/// A random height-two Cohen-Macaulay ideal in `n` variables that is not
/// generically Gorenstein. Half of the draws substitute monomials with
/// disjoint supports for `x` and `y` in a two-variable ideal with at least
/// three generators; the other half intersect random primary components on
/// height-two primes, at least one of them not a complete intersection.
pub fn random_non_generically_gorenstein<R: Rng>(rng: &mut R, n: usize, max_exp: u32) -> MonomialIdeal {
    assert!(n >= 2 && max_exp >= 2);
    let ring = AmbientRing::indexed("x", n).expect("valid");
    loop {
        let candidate =
            if rng.gen_bool(0.5) { substituted(rng, &ring, max_exp) } else { intersected(rng, &ring, max_exp) };
        let Some(i) = candidate else { continue };
        if i.support().len() < 3 || !matches!(height(&i), Ok(2)) {
            continue;
        }
        if !matches!(is_cohen_macaulay_h2(&i), Ok(true)) {
            continue;
        }
        if matches!(is_generically_gorenstein(&i), Ok(g) if !g.holds) {
            return i;
        }
    }
}

fn substituted<R: Rng>(rng: &mut R, ring: &AmbientRing, max_exp: u32) -> Option<MonomialIdeal> {
    let n = ring.len();
    let m = rng.gen_range(3..=(max_exp as usize + 1).min(4));
    let base = random_xy_ideal(rng, m, max_exp);
    let (a, b) = crate::hilbert_burch::xy_sequences(&base).ok()?;
    if a[m - 1] != 0 || b[0] != 0 {
        return None;
    }
    let mut vars: Vec<usize> = (0..n).collect();
    vars.shuffle(rng);
    let k = rng.gen_range(1..n);
    let l = rng.gen_range(1..=n - k);
    let u: Vec<(usize, u32)> = vars[..k].iter().map(|&v| (v, rng.gen_range(1..=2))).collect();
    let w: Vec<(usize, u32)> = vars[k..k + l].iter().map(|&v| (v, rng.gen_range(1..=2))).collect();
    let gens = a
        .iter()
        .zip(&b)
        .map(|(&p, &q)| {
            let mut e = vec![0; n];
            u.iter().for_each(|&(v, s)| e[v] += p * s);
            w.iter().for_each(|&(v, s)| e[v] += q * s);
            Monomial::new(e)
        })
        .collect();
    MonomialIdeal::new(ring, gens).ok()
}

fn intersected<R: Rng>(rng: &mut R, ring: &AmbientRing, max_exp: u32) -> Option<MonomialIdeal> {
    let n = ring.len();
    let pairs: Vec<(usize, usize)> = (0..n).tuple_combinations().collect();
    let t = rng.gen_range(2..=pairs.len().min(4));
    let chosen: Vec<(usize, usize)> = pairs.choose_multiple(rng, t).copied().collect();
    let mut ideal = MonomialIdeal::unit(ring);
    for (k, &(i, j)) in chosen.iter().enumerate() {
        let m = if k == 0 { rng.gen_range(3..=(max_exp as usize + 1).min(4)) } else { rng.gen_range(2..=3) };
        let local = random_xy_ideal(rng, m.min(max_exp as usize + 1), max_exp);
        let (a, b) = crate::hilbert_burch::xy_sequences(&local).ok()?;
        if a[a.len() - 1] != 0 || b[0] != 0 {
            return None;
        }
        let gens = a
            .iter()
            .zip(&b)
            .map(|(&p, &q)| {
                let mut e = vec![0; n];
                e[i] = p;
                e[j] = q;
                Monomial::new(e)
            })
            .collect();
        ideal = ideal.intersect(&MonomialIdeal::new(ring, gens).ok()?).ok()?;
    }
    Some(ideal)
}
