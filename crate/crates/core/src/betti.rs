//! Multigraded Betti numbers from upper Koszul simplicial complexes.
//!
//! For a monomial ideal `I` and `b ∈ ℕⁿ`, the upper Koszul complex is
//! `K^b(I) = { F ⊆ supp(b) squarefree : x^{b-F} ∈ I }` and
//! `β_{i,b}(I) = dim_ℚ H̃_{i-1}(K^b(I))`. Only lcm-lattice degrees carry
//! nonzero Betti numbers. All ranks are exact over ℚ.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use rayon::prelude::*;
use serde::Serialize;

use crate::decomposition::height;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::linalg;
use crate::monomial::Monomial;

/// Largest `μ(I)` accepted by the lcm-lattice routines.
pub const MAX_GENERATORS: usize = 20;

/// Finite simplicial complex on at most 64 vertices, stored by its facets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    nverts: usize,
    facets: Vec<u64>,
}

impl SimplicialComplex {
    /// The complex generated by `faces`. No faces at all gives the void
    /// complex; the single face `0` gives `{∅}`.
    pub fn from_faces(nverts: usize, faces: impl IntoIterator<Item = u64>) -> Self {
        assert!(nverts <= 64);
        let mut faces: Vec<u64> = faces.into_iter().collect();
        faces.sort_by_key(|f| std::cmp::Reverse(f.count_ones()));
        faces.dedup();
        let mut facets: Vec<u64> = Vec::new();
        for f in faces {
            if !facets.iter().any(|&g| g & f == f) {
                facets.push(f);
            }
        }
        facets.sort_unstable();
        SimplicialComplex { nverts, facets }
    }

    pub fn nverts(&self) -> usize {
        self.nverts
    }

    pub fn facets(&self) -> &[u64] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// All faces, including `∅` unless the complex is void.
    pub fn faces(&self) -> BTreeSet<u64> {
        let mut out = BTreeSet::new();
        for &f in &self.facets {
            // enumerate submasks of f
            let mut s = f;
            loop {
                out.insert(s);
                if s == 0 {
                    break;
                }
                s = (s - 1) & f;
            }
        }
        out
    }

    /// Reduced homology ranks over ℚ; entry `k` is `dim H̃_{k-1}`.
    pub fn reduced_homology(&self) -> Vec<usize> {
        if self.is_void() {
            return Vec::new();
        }
        let faces = self.faces();
        let top = faces.iter().map(|f| f.count_ones() as usize).max().unwrap_or(0);
        // by_size[s] = faces with s vertices (dimension s - 1)
        let mut by_size: Vec<Vec<u64>> = vec![Vec::new(); top + 1];
        for &f in &faces {
            by_size[f.count_ones() as usize].push(f);
        }
        let index: Vec<HashMap<u64, usize>> =
            by_size.iter().map(|fs| fs.iter().enumerate().map(|(k, &f)| (f, k)).collect()).collect();
        // rank of the boundary from size-s faces to size-(s-1) faces
        let boundary_rank = |s: usize| -> usize {
            if s == 0 || s > top || by_size[s].is_empty() {
                return 0;
            }
            let rows = by_size[s - 1].len();
            let mut m = vec![vec![0i64; by_size[s].len()]; rows];
            for (col, &f) in by_size[s].iter().enumerate() {
                let mut sign = 1;
                for v in 0..64 {
                    if f & (1 << v) != 0 {
                        m[index[s - 1][&(f & !(1 << v))]][col] = sign;
                        sign = -sign;
                    }
                }
            }
            linalg::rank(&m)
        };
        let ranks: Vec<usize> = (0..=top + 1).map(boundary_rank).collect();
        (0..=top).map(|s| by_size[s].len() - ranks[s] - ranks[s + 1]).collect()
    }
}

/// Upper Koszul complex `K^b(I)` on the vertices `supp(b)` (bit `k` is the
/// `k`-th variable of the support).
pub fn upper_koszul_complex(ideal: &MonomialIdeal, degree: &Monomial) -> SimplicialComplex {
    let supp = degree.support();
    let k = supp.len();
    let faces = (0u64..(1u64 << k)).filter(|&mask| {
        let mut exps = degree.exponents().to_vec();
        for (bit, &v) in supp.iter().enumerate() {
            if mask & (1 << bit) != 0 {
                exps[v] -= 1;
            }
        }
        ideal.contains(&Monomial::new(exps))
    });
    SimplicialComplex::from_faces(k, faces)
}

fn check_cap(ideal: &MonomialIdeal) -> Result<()> {
    if ideal.num_gens() > MAX_GENERATORS {
        return Err(Error::Resource(format!(
            "{} generators exceed the lcm-lattice cap of {MAX_GENERATORS}",
            ideal.num_gens()
        )));
    }
    if ideal.is_zero() {
        return Err(Error::domain("the zero ideal has no lcm lattice"));
    }
    Ok(())
}

/// All lcms of nonempty subsets of `G(I)`.
pub fn lcm_lattice_degrees(ideal: &MonomialIdeal) -> Result<BTreeSet<Monomial>> {
    check_cap(ideal)?;
    let mut lattice: BTreeSet<Monomial> = ideal.gens().iter().cloned().collect();
    let mut frontier: Vec<Monomial> = lattice.iter().cloned().collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for l in &frontier {
            for g in ideal.gens() {
                let m = l.lcm(g);
                if lattice.insert(m.clone()) {
                    next.push(m);
                }
            }
        }
        frontier = next;
    }
    Ok(lattice)
}

/// Multigraded Betti numbers `β_{i,b}(I)` of the ideal. For the quotient,
/// `β_{i+1,b}(S/I) = β_{i,b}(I)` and `β_0(S/I) = 1`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<(usize, Monomial), usize>,
}

impl BettiTable {
    pub fn entries(&self) -> &BTreeMap<(usize, Monomial), usize> {
        &self.entries
    }

    pub fn get(&self, i: usize, degree: &Monomial) -> usize {
        self.entries.get(&(i, degree.clone())).copied().unwrap_or(0)
    }

    /// `β_i(I) = Σ_b β_{i,b}(I)`.
    pub fn ideal_total(&self, i: usize) -> usize {
        self.entries.iter().filter(|((j, _), _)| *j == i).map(|(_, &v)| v).sum()
    }

    /// `β_i(S/I)`.
    pub fn quotient_total(&self, i: usize) -> usize {
        if i == 0 {
            1
        } else {
            self.ideal_total(i - 1)
        }
    }

    /// Largest `i` with `β_i(I) ≠ 0`.
    pub fn ideal_length(&self) -> usize {
        self.entries.keys().map(|(i, _)| *i).max().unwrap_or(0)
    }

    /// `pd(S/I)`.
    pub fn quotient_projective_dimension(&self) -> usize {
        if self.entries.is_empty() {
            0
        } else {
            self.ideal_length() + 1
        }
    }

    /// Betti numbers of `S/I` in homological order `β_0, β_1, ...`.
    pub fn quotient_totals(&self) -> Vec<usize> {
        (0..=self.quotient_projective_dimension()).map(|i| self.quotient_total(i)).collect()
    }

    /// `(i, degree, value)` rows for `S/I`.
    pub fn quotient_rows(&self) -> Vec<BettiEntry> {
        self.entries
            .iter()
            .map(|((i, b), &v)| BettiEntry { index: i + 1, degree: b.exponents().to_vec(), value: v })
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BettiEntry {
    pub index: usize,
    pub degree: Vec<u32>,
    pub value: usize,
}

pub fn betti_numbers(ideal: &MonomialIdeal) -> Result<BettiTable> {
    let lattice: Vec<Monomial> = lcm_lattice_degrees(ideal)?.into_iter().collect();
    let per_degree: Vec<Vec<((usize, Monomial), usize)>> = lattice
        .par_iter()
        .map(|b| {
            upper_koszul_complex(ideal, b)
                .reduced_homology()
                .into_iter()
                .enumerate()
                .filter(|&(_, r)| r > 0)
                .map(|(i, r)| ((i, b.clone()), r))
                .collect()
        })
        .collect();
    Ok(BettiTable { entries: per_degree.into_iter().flatten().collect() })
}

/// `pd(S/I)`: a height-two Cohen-Macaulay ideal gives 2.
pub fn projective_dimension(ideal: &MonomialIdeal) -> Result<usize> {
    Ok(betti_numbers(ideal)?.quotient_projective_dimension())
}

/// `S/I` is Cohen-Macaulay iff `pd(S/I) = height(I)`.
pub fn is_cohen_macaulay(ideal: &MonomialIdeal) -> Result<bool> {
    let h = height(ideal)?;
    Ok(projective_dimension(ideal)? == h)
}

/// Cohen-Macaulay test for height-two ideals; other heights are a domain
/// error.
pub fn is_cohen_macaulay_h2(ideal: &MonomialIdeal) -> Result<bool> {
    let h = height(ideal)?;
    if h != 2 {
        return Err(Error::domain(format!("{ideal} has height {h}, not two")));
    }
    Ok(projective_dimension(ideal)? == 2)
}

/// Cohen-Macaulay type `β_p(S/I)` with `p = pd(S/I)`.
pub fn cm_type(ideal: &MonomialIdeal) -> Result<usize> {
    let table = betti_numbers(ideal)?;
    let p = table.quotient_projective_dimension();
    if p != height(ideal)? {
        return Err(Error::domain(format!("{ideal} is not Cohen-Macaulay")));
    }
    Ok(table.quotient_total(p))
}
