//! Brute-force fine-graded oracle for the kernel `C` of
//! `ψ = X ⊗ R : ⊕ R(-f_j) → ⊕ R(-u_i)`, `R = S/I`.
//!
//! Every fine-graded piece of `R` is zero or spanned by one standard
//! monomial, so `ψ` in degree `d` is an integer matrix whose kernel is found
//! by exact elimination. Kernel generators are collected degree by degree up
//! to a bound, and the ideal of their coordinates (plus `I`) is compared with
//! minors of `X`. Within the window `bound - lcm(f_j)` that ideal is exact;
//! beyond it a missing generator only makes the run inconclusive.

use std::collections::{BTreeMap, HashMap};

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::betti::is_cohen_macaulay_h2;
use crate::decomposition::height;
use crate::error::{Error, Result};
use crate::hilbert_burch::{hb_matrix_general, hb_matrix_xy, xy_sequences};
use crate::ideal::MonomialIdeal;
use crate::linalg;
use crate::matrix::{minor, minors_ideal, SignedMonomialEntry, SignedMonomialMatrix};
use crate::monomial::Monomial;

/// Default limit on the number of degrees scanned by the kernel search.
pub const DEFAULT_DEGREE_CAP: usize = 1_000_000;

/// `dim_K R_d`, which is 0 or 1.
pub fn quotient_dim(ideal: &MonomialIdeal, degree: &Monomial) -> usize {
    usize::from(!ideal.contains(degree))
}

/// The standard monomials of `R` in degree `d`: `x^d` or nothing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientBasis {
    pub degree: Monomial,
    pub standard_monomials: Vec<Monomial>,
}

pub fn quotient_basis(ideal: &MonomialIdeal, degree: &Monomial) -> QuotientBasis {
    let standard_monomials = if ideal.contains(degree) { Vec::new() } else { vec![degree.clone()] };
    QuotientBasis { degree: degree.clone(), standard_monomials }
}

/// `ψ` restricted to fine degree `d`. Column `k` stands for
/// `x^{d - f_j} e_j` with `j = domain[k]`, row `k` for `x^{d - u_i} e_i`
/// with `i = codomain[k]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PsiComponent {
    pub degree: Monomial,
    pub domain: Vec<usize>,
    pub codomain: Vec<usize>,
    pub matrix: Vec<Vec<i64>>,
}

/// Indices `k` whose shifted piece `R(-deg_k)_d` is nonzero.
fn surviving(degrees: &[Monomial], ideal: &MonomialIdeal, d: &Monomial) -> Vec<usize> {
    degrees.iter().enumerate().filter_map(|(k, g)| d.checked_div(g).filter(|q| !ideal.contains(q)).map(|_| k)).collect()
}

pub fn psi_component(x: &SignedMonomialMatrix, ideal: &MonomialIdeal, degree: &Monomial) -> PsiComponent {
    let domain = surviving(x.col_degrees(), ideal, degree);
    let codomain = surviving(x.row_degrees(), ideal, degree);
    let matrix = codomain.iter().map(|&i| domain.iter().map(|&j| x.entry(i, j).coefficient).collect()).collect();
    PsiComponent { degree: degree.clone(), domain, codomain, matrix }
}

/// A homogeneous element of `⊕ R(-f_j)`: coordinate `j` is
/// `coefficient · x^{degree - f_j}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelGenerator {
    pub degree: Monomial,
    pub coordinates: BTreeMap<usize, SignedMonomialEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelGenerators {
    pub ideal: MonomialIdeal,
    pub bound: Monomial,
    pub generators: Vec<KernelGenerator>,
    pub degrees_scanned: usize,
}

fn box_degrees(bound: &Monomial, cap: usize) -> Result<Vec<Monomial>> {
    let count = bound.exponents().iter().try_fold(1usize, |acc, &e| acc.checked_mul(e as usize + 1));
    match count {
        Some(c) if c <= cap => {}
        _ => {
            return Err(Error::Resource(format!("degree box {:?} exceeds the cap of {cap} degrees", bound.exponents())))
        }
    }
    let ranges = bound.exponents().iter().map(|&e| 0..=e);
    let mut all: Vec<Monomial> = ranges.multi_cartesian_product().map(Monomial::new).collect();
    if bound.nvars() == 0 {
        all = vec![Monomial::one(0)];
    }
    all.sort();
    Ok(all)
}

fn to_i64(v: &BigInt) -> Result<i64> {
    v.to_i64().ok_or_else(|| Error::Resource("kernel coefficient overflows i64".into()))
}

/// Kernel generators of `ψ` in all degrees `≤ bound`, scanned in graded
/// order. A kernel vector in degree `d` becomes a generator unless it lies
/// in the span of earlier generators moved up to `d`.
pub fn kernel_generators(
    x: &SignedMonomialMatrix,
    ideal: &MonomialIdeal,
    bound: &Monomial,
    cap: usize,
) -> Result<KernelGenerators> {
    if x.ring() != ideal.ring() {
        return Err(Error::AmbientMismatch);
    }
    bound.check_arity(ideal.nvars())?;
    let degrees = box_degrees(bound, cap)?;
    let degrees_scanned = degrees.len();
    // raw kernels in parallel, then minimalization in graded order
    let raw: Vec<(PsiComponent, Vec<Vec<BigInt>>)> = degrees
        .par_iter()
        .filter_map(|d| {
            let psi = psi_component(x, ideal, d);
            if psi.domain.is_empty() {
                return None;
            }
            let ker = linalg::nullspace(&psi.matrix, psi.domain.len());
            (!ker.is_empty()).then_some((psi, ker))
        })
        .collect();
    let mut generators: Vec<KernelGenerator> = Vec::new();
    for (psi, ker) in raw {
        let d = &psi.degree;
        let restrict = |g: &KernelGenerator| -> Vec<BigInt> {
            psi.domain
                .iter()
                .map(|j| g.coordinates.get(j).map_or_else(BigInt::zero, |e| BigInt::from(e.coefficient)))
                .collect()
        };
        let mut span: Vec<Vec<BigInt>> = generators.iter().filter(|g| g.degree.divides(d)).map(restrict).collect();
        let mut rank = linalg::rank_big(span.clone());
        for v in ker {
            span.push(v.clone());
            let r = linalg::rank_big(span.clone());
            if r == rank {
                span.pop();
                continue;
            }
            rank = r;
            let mut coordinates = BTreeMap::new();
            for (k, c) in v.iter().enumerate() {
                if !c.is_zero() {
                    let j = psi.domain[k];
                    let mono = d.checked_div(&x.col_degrees()[j]).expect("domain degrees divide d");
                    coordinates.insert(j, SignedMonomialEntry::new(to_i64(c)?, mono));
                }
            }
            let g = KernelGenerator { degree: d.clone(), coordinates };
            if !is_kernel_element(x, ideal, &g) {
                return Err(Error::invariant(format!("kernel vector in degree {:?} fails ψ(g) ≡ 0", d.exponents())));
            }
            generators.push(g);
        }
    }
    Ok(KernelGenerators { ideal: ideal.clone(), bound: bound.clone(), generators, degrees_scanned })
}

/// Symbolic check that `ψ(g) ≡ 0 mod I`: in every row, terms are grouped by
/// monomial and each group either cancels or lies in `I`.
pub fn is_kernel_element(x: &SignedMonomialMatrix, ideal: &MonomialIdeal, g: &KernelGenerator) -> bool {
    (0..x.nrows()).all(|i| {
        let mut sums: HashMap<Monomial, i128> = HashMap::new();
        for (&j, c) in &g.coordinates {
            let e = x.entry(i, j);
            if !e.is_zero() && !c.is_zero() {
                *sums.entry(e.monomial.mul(&c.monomial)).or_default() +=
                    i128::from(e.coefficient) * i128::from(c.coefficient);
            }
        }
        sums.into_iter().all(|(m, s)| s == 0 || ideal.contains(&m))
    })
}

/// Coordinate monomials of the kernel generators together with the degree of
/// the generator they come from.
pub fn entries_with_degrees(k: &KernelGenerators) -> Vec<(Monomial, Monomial)> {
    k.generators
        .iter()
        .flat_map(|g| g.coordinates.values().map(move |e| (e.monomial.clone(), g.degree.clone())))
        .collect()
}

/// `I_1(α) + I` restricted to what was found up to the bound.
pub fn entries_ideal(k: &KernelGenerators) -> Result<MonomialIdeal> {
    let gens = entries_with_degrees(k).into_iter().map(|(m, _)| m).chain(k.ideal.gens().iter().cloned()).collect();
    MonomialIdeal::new(k.ideal.ring(), gens)
}

/// Componentwise lcm of the generators, doubled.
pub fn default_bound(ideal: &MonomialIdeal) -> Monomial {
    ideal.lcm_of_gens().pow(2)
}

/// `bound - lcm(col degrees)` when nonnegative in every coordinate.
pub fn comparison_window(x: &SignedMonomialMatrix, bound: &Monomial) -> Option<Monomial> {
    let l = x.col_degrees().iter().fold(Monomial::one(bound.nvars()), |acc, f| acc.lcm(f));
    bound.checked_div(&l)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    #[serde(rename = "confirmed-to-bound")]
    ConfirmedToBound,
    #[serde(rename = "refuted")]
    Refuted,
    #[serde(rename = "inconclusive")]
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    /// `lhs-only`: a kernel entry outside the formula; `rhs-only`: a formula
    /// generator that no kernel entry divides.
    pub side: String,
    pub monomial: String,
    pub exponents: Vec<u32>,
    /// Fine degree of the kernel generator carrying the entry, if any.
    pub generator_degree: Option<Vec<u32>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub statement: String,
    pub ideal: MonomialIdeal,
    pub bound: Vec<u32>,
    pub window: Option<Vec<u32>>,
    pub verdict: Verdict,
    pub witness: Option<Witness>,
    /// `I_1(α) + I` as found up to the bound.
    pub entries_ideal: MonomialIdeal,
    /// The minors side of the statement.
    pub formula_ideal: MonomialIdeal,
    pub kernel_generators: usize,
    pub degrees_scanned: usize,
    /// Generators of the formula side that lie outside the window.
    pub unchecked: Vec<String>,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Direction {
    Equality,
    FormulaInEntries,
}

fn compare(
    statement: &str,
    k: &KernelGenerators,
    formula: MonomialIdeal,
    window: Option<Monomial>,
    direction: Direction,
) -> Result<VerificationReport> {
    let ring = k.ideal.ring().clone();
    let lhs = entries_ideal(k)?;
    let mut witness = None;
    if direction == Direction::Equality {
        let provenance: HashMap<Monomial, Monomial> = entries_with_degrees(k).into_iter().collect();
        if let Some(w) = lhs.gens().iter().find(|w| !formula.contains(w)) {
            witness = Some(Witness {
                side: "lhs-only".into(),
                monomial: w.to_string_in(&ring),
                exponents: w.exponents().to_vec(),
                generator_degree: provenance.get(w).map(|d| d.exponents().to_vec()),
            });
        }
    }
    let in_window = |g: &Monomial| window.as_ref().is_some_and(|w| g.divides(w));
    let mut unchecked = Vec::new();
    for g in formula.gens() {
        if lhs.contains(g) {
            continue;
        }
        if in_window(g) {
            if witness.is_none() {
                witness = Some(Witness {
                    side: "rhs-only".into(),
                    monomial: g.to_string_in(&ring),
                    exponents: g.exponents().to_vec(),
                    generator_degree: None,
                });
            }
        } else {
            unchecked.push(g.to_string_in(&ring));
        }
    }
    let verdict = if witness.is_some() {
        Verdict::Refuted
    } else if unchecked.is_empty() {
        Verdict::ConfirmedToBound
    } else {
        Verdict::Inconclusive
    };
    Ok(VerificationReport {
        statement: statement.into(),
        ideal: k.ideal.clone(),
        bound: k.bound.exponents().to_vec(),
        window: window.map(|w| w.exponents().to_vec()),
        verdict,
        witness,
        entries_ideal: lhs,
        formula_ideal: formula,
        kernel_generators: k.generators.len(),
        degrees_scanned: k.degrees_scanned,
        unchecked,
    })
}

/// `I_1(α) = x^{a_m} y^{b_1} I_{m-2}(X)` modulo `I`, for any two-variable
/// ideal with at least two generators.
pub fn verify_kernel_theorem_xy(
    ideal: &MonomialIdeal,
    bound: Option<&Monomial>,
    cap: usize,
) -> Result<VerificationReport> {
    let x = hb_matrix_xy(ideal)?;
    let (a, b) = xy_sequences(ideal)?;
    let m = a.len();
    let scale = Monomial::new(vec![a[m - 1], b[0]]);
    let formula = minors_ideal(&x, m - 2)?.scale(&scale)?.sum(ideal)?;
    let bound = bound.cloned().unwrap_or_else(|| default_bound(ideal));
    let k = kernel_generators(&x, ideal, &bound, cap)?;
    compare(
        "I_1(alpha) = x^{a_m} y^{b_1} I_{m-2}(X) + I",
        &k,
        formula,
        comparison_window(&x, &bound),
        Direction::Equality,
    )
}

fn guard_h2_cm(ideal: &MonomialIdeal) -> Result<()> {
    let h = height(ideal)?;
    if h != 2 {
        return Err(Error::domain(format!("{ideal} has height {h}, not two")));
    }
    if !is_cohen_macaulay_h2(ideal)? {
        return Err(Error::domain(format!("{ideal} is not Cohen-Macaulay")));
    }
    Ok(())
}

fn hb_matrix(ideal: &MonomialIdeal) -> Result<SignedMonomialMatrix> {
    if ideal.nvars() == 2 {
        hb_matrix_xy(ideal)
    } else {
        hb_matrix_general(ideal)
    }
}

/// `tr(ω_R) = I_{m-2}(X) + I` through the kernel oracle, for a height-two
/// Cohen-Macaulay ideal.
pub fn verify_conjecture(ideal: &MonomialIdeal, bound: Option<&Monomial>, cap: usize) -> Result<VerificationReport> {
    guard_h2_cm(ideal)?;
    let x = hb_matrix(ideal)?;
    let formula = minors_ideal(&x, ideal.num_gens() - 2)?.sum(ideal)?;
    let bound = bound.cloned().unwrap_or_else(|| default_bound(ideal));
    let k = kernel_generators(&x, ideal, &bound, cap)?;
    compare("I_1(alpha) = I_{m-2}(X) + I", &k, formula, comparison_window(&x, &bound), Direction::Equality)
}

/// The vector `c_A = Σ_j (-1)^j a [A | cols ∖ {j}] e_j` for an
/// `(m-2)`-subset `A` of the rows (indices from zero), where `a` is a
/// monomial scale.
pub fn c_vector(x: &SignedMonomialMatrix, rows: &[usize], scale: &Monomial) -> Result<KernelGenerator> {
    let c = x.ncols();
    let mut coordinates = BTreeMap::new();
    let mut degree = None;
    for j in 0..c {
        let cols: Vec<usize> = (0..c).filter(|&k| k != j).collect();
        let v = minor(x, rows, &cols)?;
        if v.is_zero() {
            continue;
        }
        let sign = if j % 2 == 0 { 1 } else { -1 };
        let mono = v.monomial.mul(scale);
        degree.get_or_insert_with(|| mono.mul(&x.col_degrees()[j]));
        coordinates.insert(j, SignedMonomialEntry::new(sign * v.coefficient, mono));
    }
    let degree = degree.unwrap_or_else(|| Monomial::one(x.ring().len()));
    Ok(KernelGenerator { degree, coordinates })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InclusionReport {
    /// `I_{m-2}(X) ⊆ I_1(α) + I` checked against the oracle.
    pub inclusion: VerificationReport,
    pub c_vectors_checked: usize,
    /// Row sets `A` whose `c_A` is not annihilated by `ψ`.
    pub c_vector_failures: Vec<Vec<usize>>,
}

impl InclusionReport {
    pub fn holds(&self) -> bool {
        self.inclusion.verdict == Verdict::ConfirmedToBound && self.c_vector_failures.is_empty()
    }
}

/// `a I_{m-2}(X) ⊆ I_1(α)` with `a = gcd(G(I))`, checked against the
/// oracle and constructively through the vectors `c_A`. Accepts height-two
/// Cohen-Macaulay ideals (`a = 1`) and any two-variable ideal with at least
/// two generators.
pub fn verify_inclusion(ideal: &MonomialIdeal, bound: Option<&Monomial>, cap: usize) -> Result<InclusionReport> {
    if ideal.nvars() != 2 {
        guard_h2_cm(ideal)?;
    }
    let x = hb_matrix(ideal)?;
    let m = ideal.num_gens();
    let scale = ideal.gens().iter().skip(1).fold(ideal.gens()[0].clone(), |acc, g| acc.gcd(g));
    let bound = bound.cloned().unwrap_or_else(|| default_bound(ideal));
    let k = kernel_generators(&x, ideal, &bound, cap)?;
    let formula = minors_ideal(&x, m - 2)?.scale(&scale)?.sum(ideal)?;
    let inclusion = compare(
        "a I_{m-2}(X) + I is contained in I_1(alpha)",
        &k,
        formula,
        comparison_window(&x, &bound),
        Direction::FormulaInEntries,
    )?;
    let mut c_vector_failures = Vec::new();
    let mut c_vectors_checked = 0;
    for rows in (0..m).combinations(m - 2) {
        let c = c_vector(&x, &rows, &scale)?;
        c_vectors_checked += 1;
        if !is_kernel_element(&x, ideal, &c) {
            c_vector_failures.push(rows);
        }
    }
    Ok(InclusionReport { inclusion, c_vectors_checked, c_vector_failures })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::AmbientRing;

    fn ideal(r: &AmbientRing, g: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(r, g).unwrap()
    }

    fn xy() -> AmbientRing {
        AmbientRing::new(["x", "y"]).unwrap()
    }

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn quotient_dim_examples() {
        let r = xy();
        let i = ideal(&r, &[&[2, 0], &[1, 1], &[0, 2]]);
        assert_eq!(quotient_dim(&i, &m(&[1, 0])), 1);
        assert_eq!(quotient_dim(&i, &m(&[1, 1])), 0);
        assert_eq!(quotient_dim(&i, &m(&[0, 0])), 1);
        assert_eq!(quotient_basis(&i, &m(&[1, 1])).standard_monomials.len(), 0);
    }

    #[test]
    fn psi_component_examples() {
        let r = xy();
        let i = ideal(&r, &[&[2, 0], &[1, 1], &[0, 2]]);
        let x = hb_matrix_xy(&i).unwrap();
        // columns have degrees x^2 y and x y^2
        assert!(psi_component(&x, &i, &m(&[1, 0])).domain.is_empty());
        let p = psi_component(&x, &i, &m(&[2, 1]));
        assert_eq!(p.domain, vec![0]);
        let p = psi_component(&x, &i, &m(&[3, 1]));
        assert_eq!(p.domain, vec![0]);
        // x f_1 maps to (xy, -x^2, 0), which vanishes in R
        assert!(p.codomain.is_empty());
        assert_eq!(psi_component(&x, &i, &m(&[2, 2])).domain, vec![0, 1]);
        // every shifted piece lies in I
        assert!(psi_component(&x, &i, &m(&[3, 3])).domain.is_empty());
    }

    #[test]
    fn kernel_of_maximal_ideal_square() {
        let r = xy();
        let i = ideal(&r, &[&[2, 0], &[1, 1], &[0, 2]]);
        let x = hb_matrix_xy(&i).unwrap();
        let k = kernel_generators(&x, &i, &default_bound(&i), DEFAULT_DEGREE_CAP).unwrap();
        let found: Vec<(usize, Vec<u32>)> = k
            .generators
            .iter()
            .flat_map(|g| g.coordinates.iter().map(|(&j, e)| (j, e.monomial.exponents().to_vec())))
            .sorted()
            .collect();
        assert_eq!(found, vec![(0, vec![0, 1]), (0, vec![1, 0]), (1, vec![0, 1]), (1, vec![1, 0])]);
        for g in &k.generators {
            assert!(g.coordinates.values().all(|e| e.coefficient.abs() == 1));
        }
        assert_eq!(entries_ideal(&k).unwrap(), MonomialIdeal::maximal(&r));
    }

    #[test]
    fn complete_intersection_kernel_is_everything() {
        // entries of X lie in I, so ψ = 0 and C is free on e_1
        let r = xy();
        let i = ideal(&r, &[&[3, 0], &[0, 2]]);
        let x = hb_matrix_xy(&i).unwrap();
        let k = kernel_generators(&x, &i, &default_bound(&i), DEFAULT_DEGREE_CAP).unwrap();
        assert_eq!(k.generators.len(), 1);
        assert_eq!(k.generators[0].degree, m(&[3, 2]));
        assert!(entries_ideal(&k).unwrap().is_unit());
    }

    #[test]
    fn zero_matrix_kernel() {
        let r = xy();
        let i = ideal(&r, &[&[2, 0], &[0, 2]]);
        let x =
            SignedMonomialMatrix::from_coefficients(&r, vec![m(&[2, 0]), m(&[0, 2])], vec![m(&[2, 2]), m(&[3, 2])], [])
                .unwrap();
        let k = kernel_generators(&x, &i, &m(&[4, 4]), DEFAULT_DEGREE_CAP).unwrap();
        let degs: Vec<Monomial> = k.generators.iter().map(|g| g.degree.clone()).collect();
        assert_eq!(degs, vec![m(&[2, 2]), m(&[3, 2])]);
    }

    #[test]
    fn entries_examples() {
        let r = xy();
        let i = ideal(&r, &[&[3, 0], &[2, 1], &[0, 2]]);
        let x = hb_matrix_xy(&i).unwrap();
        let k = kernel_generators(&x, &i, &default_bound(&i), DEFAULT_DEGREE_CAP).unwrap();
        assert_eq!(entries_ideal(&k).unwrap(), MonomialIdeal::maximal(&r));
        let empty = KernelGenerators { ideal: i.clone(), bound: m(&[0, 0]), generators: vec![], degrees_scanned: 0 };
        assert_eq!(entries_ideal(&empty).unwrap(), i);
    }

    #[test]
    fn kernel_theorem_examples() {
        let r = xy();
        for g in [
            vec![vec![2, 0], vec![1, 1], vec![0, 2]],
            vec![vec![3, 1], vec![2, 2], vec![1, 4]],
            vec![vec![1, 0], vec![0, 1]],
            vec![vec![4, 1], vec![1, 3]],
        ] {
            let gens: Vec<&[u32]> = g.iter().map(|v| v.as_slice()).collect();
            let i = ideal(&r, &gens);
            let rep = verify_kernel_theorem_xy(&i, None, DEFAULT_DEGREE_CAP).unwrap();
            assert_eq!(rep.verdict, Verdict::ConfirmedToBound, "{i}: {rep:?}");
        }
    }

    #[test]
    fn two_generator_convention() {
        // m = 2: both sides are (x^{a_2} y^{b_1}) + I
        let r = xy();
        let i = ideal(&r, &[&[4, 1], &[1, 3]]);
        let rep = verify_kernel_theorem_xy(&i, None, DEFAULT_DEGREE_CAP).unwrap();
        assert_eq!(rep.entries_ideal, ideal(&r, &[&[1, 1]]));
        assert_eq!(rep.formula_ideal, rep.entries_ideal);
    }

    #[test]
    fn inclusion_examples() {
        let r4 = AmbientRing::indexed("x", 4).unwrap();
        let i = ideal(&r4, &[&[1, 0, 1, 0], &[1, 0, 0, 1], &[0, 1, 0, 1]]);
        let rep = verify_inclusion(&i, None, DEFAULT_DEGREE_CAP).unwrap();
        assert_eq!(rep.c_vectors_checked, 3);
        assert!(rep.holds(), "{rep:?}");
        let r = xy();
        let i = ideal(&r, &[&[3, 0], &[2, 1], &[0, 2]]);
        let rep = verify_inclusion(&i, None, DEFAULT_DEGREE_CAP).unwrap();
        assert!(rep.holds());
        assert_eq!(rep.inclusion.entries_ideal, rep.inclusion.formula_ideal);
        let i = ideal(&r, &[&[2, 0], &[0, 3]]);
        let rep = verify_inclusion(&i, None, DEFAULT_DEGREE_CAP).unwrap();
        assert_eq!(rep.c_vectors_checked, 1);
        assert!(rep.holds());
        // off the Cohen-Macaulay locus the scale x^{a_m} y^{b_1} is needed
        let i = ideal(&r, &[&[3, 1], &[2, 2], &[1, 4]]);
        let rep = verify_inclusion(&i, None, DEFAULT_DEGREE_CAP).unwrap();
        assert!(rep.holds(), "{rep:?}");
        let x = hb_matrix_xy(&i).unwrap();
        let unscaled = c_vector(&x, &[0], &Monomial::one(2)).unwrap();
        assert!(!is_kernel_element(&x, &i, &unscaled));
    }

    #[test]
    fn conjecture_on_proven_instances() {
        let r = xy();
        let rep = verify_conjecture(&ideal(&r, &[&[4, 0], &[2, 2], &[0, 4]]), None, DEFAULT_DEGREE_CAP).unwrap();
        assert_eq!(rep.verdict, Verdict::ConfirmedToBound);
        let r3 = AmbientRing::indexed("x", 3).unwrap();
        let rep =
            verify_conjecture(&ideal(&r3, &[&[2, 1, 0], &[1, 0, 1], &[0, 1, 1]]), None, DEFAULT_DEGREE_CAP).unwrap();
        assert_eq!(rep.verdict, Verdict::ConfirmedToBound);
    }

    #[test]
    fn conjecture_guards_and_cap() {
        let r = xy();
        assert!(verify_conjecture(&ideal(&r, &[&[2, 0], &[1, 1]]), None, DEFAULT_DEGREE_CAP).is_err());
        let i = ideal(&r, &[&[3, 0], &[0, 3]]);
        assert!(matches!(verify_conjecture(&i, None, 10), Err(Error::Resource(_))));
    }

    #[test]
    fn raising_the_bound_keeps_entries() {
        let r3 = AmbientRing::indexed("x", 3).unwrap();
        let i = ideal(&r3, &[&[0, 2, 0], &[2, 0, 1], &[1, 1, 1]]);
        let x = hb_matrix_general(&i).unwrap();
        let small = kernel_generators(&x, &i, &m(&[2, 2, 1]), DEFAULT_DEGREE_CAP).unwrap();
        let large = kernel_generators(&x, &i, &default_bound(&i), DEFAULT_DEGREE_CAP).unwrap();
        let big = entries_ideal(&large).unwrap();
        assert!(big.contains_ideal(&entries_ideal(&small).unwrap()));
    }
}
