//! Canonical traces of height-two Cohen-Macaulay monomial quotients, read
//! off the submaximal minors of a Hilbert-Burch matrix.

use serde::Serialize;

use crate::betti::{cm_type, is_cohen_macaulay_h2};
use crate::decomposition::{height, is_height_unmixed, standard_primary_decomposition};
use crate::error::{Error, Result};
use crate::hilbert_burch::{hb_matrix_general, hb_matrix_xy};
use crate::ideal::MonomialIdeal;
use crate::matrix::{minors_ideal, SignedMonomialMatrix};
use crate::monomial::Monomial;

/// Why the minors formula for the trace is trusted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum TraceBasis {
    /// Two-variable support: proven.
    TwoVariables,
    /// Generically Gorenstein: proven.
    GenericallyGorenstein,
    /// Neither; the formula is the open conjecture.
    ConjecturalOnly,
}

impl TraceBasis {
    pub fn is_proven(self) -> bool {
        self != TraceBasis::ConjecturalOnly
    }

    pub fn describe(self) -> &'static str {
        match self {
            TraceBasis::TwoVariables => "proven (two-variable support)",
            TraceBasis::GenericallyGorenstein => "proven (generically Gorenstein)",
            TraceBasis::ConjecturalOnly => "conjectural (not generically Gorenstein)",
        }
    }
}

/// A minimal prime whose localization is not a complete intersection.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LocalizationWitness {
    pub prime: Vec<usize>,
    pub localized: MonomialIdeal,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GenericGorenstein {
    pub holds: bool,
    pub witness: Option<LocalizationWitness>,
}

fn is_complete_intersection_h2(ideal: &MonomialIdeal) -> bool {
    match ideal.gens() {
        [u, v] => u.gcd(v).is_one(),
        _ => false,
    }
}

/// Height-two unmixed `I` is generically Gorenstein iff each localization at
/// a minimal prime is generated by two monomials with disjoint supports.
pub fn is_generically_gorenstein(ideal: &MonomialIdeal) -> Result<GenericGorenstein> {
    let h = height(ideal)?;
    if h != 2 {
        return Err(Error::domain(format!("{ideal} has height {h}, not two")));
    }
    if !is_height_unmixed(ideal)? {
        return Err(Error::domain(format!("{ideal} has embedded or mixed components")));
    }
    let spd = standard_primary_decomposition(ideal)?;
    for p in spd.minimal_primes() {
        let prime: Vec<usize> = p.iter().copied().collect();
        let localized = ideal.localize(&prime)?;
        if !is_complete_intersection_h2(&localized) {
            return Ok(GenericGorenstein { holds: false, witness: Some(LocalizationWitness { prime, localized }) });
        }
    }
    Ok(GenericGorenstein { holds: true, witness: None })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TraceReport {
    pub ideal: MonomialIdeal,
    pub m: usize,
    pub hb_matrix: SignedMonomialMatrix,
    /// `I_{m-2}(X) + I`.
    pub trace: MonomialIdeal,
    pub basis: TraceBasis,
    pub is_cm: bool,
    pub is_gorenstein: bool,
    pub is_nearly_gorenstein: bool,
    pub is_generically_gorenstein: bool,
    pub generic_witness: Option<LocalizationWitness>,
}

impl TraceReport {
    /// Ambient variables missing from the trace.
    pub fn missing_variables(&self) -> Vec<usize> {
        let n = self.ideal.nvars();
        (0..n).filter(|&i| !self.trace.contains(&Monomial::var(n, i))).collect()
    }
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

/// The trace `I_{m-2}(X) + I` of a height-two Cohen-Macaulay ideal, with the
/// basis that justifies it. Conjectural traces are reported, not refused.
pub fn canonical_trace(ideal: &MonomialIdeal) -> Result<TraceReport> {
    guard_h2_cm(ideal)?;
    let m = ideal.num_gens();
    let hb_matrix = if ideal.nvars() == 2 { hb_matrix_xy(ideal)? } else { hb_matrix_general(ideal)? };
    let trace = minors_ideal(&hb_matrix, m - 2)?.sum(ideal)?;
    let gg = is_generically_gorenstein(ideal)?;
    let basis = if ideal.support().len() == 2 {
        TraceBasis::TwoVariables
    } else if gg.holds {
        TraceBasis::GenericallyGorenstein
    } else {
        TraceBasis::ConjecturalOnly
    };
    let n = ideal.nvars();
    let is_gorenstein = trace.is_unit();
    let is_nearly_gorenstein = is_gorenstein || (0..n).all(|i| trace.contains(&Monomial::var(n, i)));
    Ok(TraceReport {
        ideal: ideal.clone(),
        m,
        hb_matrix,
        trace,
        basis,
        is_cm: true,
        is_gorenstein,
        is_nearly_gorenstein,
        is_generically_gorenstein: gg.holds,
        generic_witness: gg.witness,
    })
}

/// Gorenstein test; the trace, `μ(I) = 2` and type one must all agree.
pub fn is_gorenstein_h2(ideal: &MonomialIdeal) -> Result<bool> {
    let report = canonical_trace(ideal)?;
    let by_mu = ideal.num_gens() == 2;
    let by_type = cm_type(ideal)? == 1;
    if report.is_gorenstein != by_mu || by_mu != by_type {
        return Err(Error::invariant(format!(
            "Gorenstein tests disagree on {ideal}: trace {}, two generators {by_mu}, type one {by_type}",
            report.is_gorenstein
        )));
    }
    Ok(by_mu)
}

/// Nearly Gorenstein test, refused when the trace formula is conjectural.
pub fn is_nearly_gorenstein_h2(ideal: &MonomialIdeal) -> Result<bool> {
    let report = canonical_trace(ideal)?;
    if !report.basis.is_proven() {
        return Err(Error::Conjectural(format!(
            "{ideal} is not generically Gorenstein; its trace formula is conjectural"
        )));
    }
    if report.m >= 4 {
        return Ok(false);
    }
    Ok(report.is_nearly_gorenstein)
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

    #[test]
    fn generic_gorenstein_examples() {
        let r3 = AmbientRing::indexed("x", 3).unwrap();
        assert!(is_generically_gorenstein(&ideal(&r3, &[&[0, 1, 0], &[1, 0, 1]])).unwrap().holds);
        let r = xy();
        let g = is_generically_gorenstein(&ideal(&r, &[&[2, 0], &[1, 1], &[0, 2]])).unwrap();
        assert!(!g.holds);
        let w = g.witness.unwrap();
        assert_eq!(w.prime, vec![0, 1]);
        assert_eq!(w.localized.num_gens(), 3);
        assert!(is_generically_gorenstein(&ideal(&r, &[&[3, 0], &[0, 2]])).unwrap().holds);
    }

    #[test]
    fn generic_gorenstein_guards() {
        let r = xy();
        assert!(is_generically_gorenstein(&ideal(&r, &[&[2, 0], &[1, 1]])).is_err());
        let r3 = AmbientRing::indexed("x", 3).unwrap();
        // (x1, x2) ∩ (x1, x2, x3)^2-ish embedded component
        let i = ideal(&r3, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1], &[0, 0, 2]]);
        assert!(is_generically_gorenstein(&i).is_err());
    }

    #[test]
    fn trace_examples() {
        let r = xy();
        let t = canonical_trace(&ideal(&r, &[&[3, 0], &[2, 1], &[0, 2]])).unwrap();
        assert_eq!(t.trace, MonomialIdeal::maximal(&r));
        assert_eq!(t.basis, TraceBasis::TwoVariables);
        assert!(t.is_nearly_gorenstein && !t.is_gorenstein);

        let r4 = AmbientRing::indexed("x", 4).unwrap();
        let t = canonical_trace(&ideal(&r4, &[&[1, 0, 1, 0], &[1, 0, 0, 1], &[0, 1, 0, 1]])).unwrap();
        assert_eq!(t.trace, MonomialIdeal::maximal(&r4));
        assert_eq!(t.basis, TraceBasis::GenericallyGorenstein);
        assert!(t.is_nearly_gorenstein);

        let t = canonical_trace(&ideal(&r, &[&[4, 0], &[0, 5]])).unwrap();
        assert!(t.trace.is_unit() && t.is_gorenstein);
    }

    #[test]
    fn trace_guards() {
        let r = xy();
        assert!(canonical_trace(&ideal(&r, &[&[2, 0], &[1, 1]])).is_err());
        let r3 = AmbientRing::indexed("x", 3).unwrap();
        let i = ideal(&r3, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1], &[0, 0, 2]]);
        assert!(matches!(canonical_trace(&i), Err(Error::Domain(_))));
    }

    #[test]
    fn conjectural_basis_is_flagged() {
        // (x1^2, x1 x2, x2^2) extended by x3: not generically Gorenstein
        let r3 = AmbientRing::indexed("x", 3).unwrap();
        let i = ideal(&r3, &[&[2, 0, 0], &[1, 1, 0], &[0, 2, 0]]);
        let t = canonical_trace(&i).unwrap();
        assert_eq!(t.basis, TraceBasis::TwoVariables);
        // (y^2, x^2 z, x y z): localizing at (x, y) gives (x^2, xy, y^2)
        let i = ideal(&r3, &[&[0, 2, 0], &[2, 0, 1], &[1, 1, 1]]);
        let t = canonical_trace(&i).unwrap();
        assert!(!t.is_generically_gorenstein);
        assert_eq!(t.basis, TraceBasis::ConjecturalOnly);
        assert_eq!(t.generic_witness.unwrap().prime, vec![0, 1]);
        assert!(matches!(is_nearly_gorenstein_h2(&i), Err(Error::Conjectural(_))));
    }

    #[test]
    fn gorenstein_examples() {
        let r = xy();
        assert!(is_gorenstein_h2(&ideal(&r, &[&[2, 0], &[0, 3]])).unwrap());
        assert!(!is_gorenstein_h2(&ideal(&r, &[&[2, 0], &[1, 1], &[0, 2]])).unwrap());
        let r3 = AmbientRing::indexed("x", 3).unwrap();
        assert!(is_gorenstein_h2(&ideal(&r3, &[&[0, 1, 0], &[1, 0, 1]])).unwrap());
    }

    #[test]
    fn nearly_gorenstein_examples() {
        let r = xy();
        let i = ideal(&r, &[&[4, 0], &[2, 2], &[0, 4]]);
        assert!(!is_nearly_gorenstein_h2(&i).unwrap());
        let t = canonical_trace(&i).unwrap();
        assert_eq!(t.trace, ideal(&r, &[&[2, 0], &[0, 2]]));
        assert!(is_nearly_gorenstein_h2(&ideal(&r, &[&[3, 0], &[2, 1], &[0, 2]])).unwrap());
        assert!(!is_nearly_gorenstein_h2(&ideal(&r, &[&[3, 0], &[2, 1], &[1, 2], &[0, 3]])).unwrap());
    }

    #[test]
    fn excess_variables_block_nearly_gorenstein() {
        let r3 = AmbientRing::indexed("x", 3).unwrap();
        let i = ideal(&r3, &[&[3, 0, 0], &[2, 1, 0], &[0, 2, 0]]);
        let t = canonical_trace(&i).unwrap();
        assert_eq!(t.missing_variables(), vec![2]);
        assert!(!t.is_nearly_gorenstein);
        // a complete intersection stays Gorenstein in any ambient ring
        assert!(canonical_trace(&ideal(&r3, &[&[2, 0, 0], &[0, 3, 0]])).unwrap().is_nearly_gorenstein);
    }
}
