//! Polarization and Alexander duality.

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::ring::AmbientRing;

/// Variable map of a polarization: new variable `k` is copy `copy` (1-based)
/// of original variable `var`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolarizationMap {
    pub copies: Vec<(usize, u32)>,
}

impl PolarizationMap {
    pub fn index_of(&self, var: usize, copy: u32) -> Option<usize> {
        self.copies.iter().position(|&c| c == (var, copy))
    }
}

/// Polarizes `I` with the copy counts forced by `G(I)`; every variable keeps
/// at least its first copy, so a squarefree ideal is only renamed.
pub fn polarize(ideal: &MonomialIdeal) -> Result<(MonomialIdeal, PolarizationMap)> {
    let n = ideal.nvars();
    let copies: Vec<u32> =
        (0..n).map(|i| ideal.gens().iter().map(|g| g.exponent(i)).max().unwrap_or(0).max(1)).collect();
    polarize_with_copies(ideal, &copies)
}

/// Polarizes into the ring with `copies[i]` copies `x_i_1, ..., x_i_{copies[i]}`
/// of each variable. Using the same copy counts for several ideals puts their
/// polarizations in one ring.
pub fn polarize_with_copies(ideal: &MonomialIdeal, copies: &[u32]) -> Result<(MonomialIdeal, PolarizationMap)> {
    if ideal.is_zero() {
        return Err(Error::domain("cannot polarize the zero ideal"));
    }
    let ring = ideal.ring();
    if copies.len() != ring.len() {
        return Err(Error::Arity { expected: ring.len(), got: copies.len() });
    }
    for (i, &c) in copies.iter().enumerate() {
        let need = ideal.gens().iter().map(|g| g.exponent(i)).max().unwrap_or(0);
        if c < need {
            return Err(Error::domain(format!(
                "{} copies of `{}` requested but an exponent {} occurs",
                c,
                ring.name(i),
                need
            )));
        }
    }
    let map = PolarizationMap { copies: (0..ring.len()).flat_map(|i| (1..=copies[i]).map(move |j| (i, j))).collect() };
    if map.copies.is_empty() {
        return Err(Error::domain("polarization would have no variables"));
    }
    let new_ring = AmbientRing::new(map.copies.iter().map(|&(i, j)| format!("{}_{}", ring.name(i), j)))?;
    let m = map.copies.len();
    let gens = ideal
        .gens()
        .iter()
        .map(|g| {
            Monomial::from_support(
                m,
                map.copies.iter().enumerate().filter(|(_, &(i, j))| j <= g.exponent(i)).map(|(k, _)| k),
            )
        })
        .collect();
    Ok((MonomialIdeal::new(&new_ring, gens)?, map))
}

/// Alexander dual of a squarefree ideal: the intersection over the
/// generators `u` of the primes `(x_i : x_i | u)`.
pub fn alexander_dual(ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
    if ideal.is_zero() || ideal.is_unit() {
        return Err(Error::domain("Alexander duality needs a proper nonzero ideal"));
    }
    if !ideal.is_squarefree() {
        return Err(Error::domain(format!("{ideal} is not squarefree")));
    }
    let ring = ideal.ring();
    let mut dual = MonomialIdeal::unit(ring);
    for g in ideal.gens() {
        dual = dual.intersect(&MonomialIdeal::prime(ring, g.support()))?;
    }
    Ok(dual)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(r: &AmbientRing, g: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(r, g).unwrap()
    }

    #[test]
    fn polarize_examples() {
        let r = AmbientRing::new(["x", "y"]).unwrap();
        let (p, map) = polarize(&ideal(&r, &[&[2, 0], &[1, 1]])).unwrap();
        assert_eq!(p.ring().names(), ["x_1", "x_2", "y_1"]);
        assert_eq!(p.generator_strings(), ["x_1*x_2", "x_1*y_1"]);
        assert_eq!(map.index_of(0, 2), Some(1));
        assert_eq!(map.index_of(1, 2), None);
    }

    #[test]
    fn polarize_squarefree_is_renaming() {
        let r = AmbientRing::indexed("x", 3).unwrap();
        let i = ideal(&r, &[&[1, 1, 0], &[0, 1, 1]]);
        let (p, _) = polarize(&i).unwrap();
        assert_eq!(p.ring().names(), ["x1_1", "x2_1", "x3_1"]);
        assert_eq!(p.gens(), i.gens());
    }

    #[test]
    fn polarize_rejects_too_few_copies() {
        let r = AmbientRing::new(["x"]).unwrap();
        assert!(polarize_with_copies(&ideal(&r, &[&[3]]), &[2]).is_err());
        assert!(polarize(&MonomialIdeal::zero(&r)).is_err());
    }

    #[test]
    fn dual_examples() {
        let r = AmbientRing::indexed("x", 3).unwrap();
        let path = ideal(&r, &[&[1, 1, 0], &[0, 1, 1]]);
        let dual = alexander_dual(&path).unwrap();
        assert_eq!(dual, ideal(&r, &[&[0, 1, 0], &[1, 0, 1]]));
        assert_eq!(alexander_dual(&dual).unwrap(), path);

        let r2 = AmbientRing::indexed("x", 2).unwrap();
        assert_eq!(alexander_dual(&ideal(&r2, &[&[1, 1]])).unwrap(), MonomialIdeal::maximal(&r2));
    }

    #[test]
    fn dual_rejects_non_squarefree() {
        let r = AmbientRing::indexed("x", 2).unwrap();
        assert!(alexander_dual(&ideal(&r, &[&[2, 0]])).is_err());
        assert!(alexander_dual(&MonomialIdeal::unit(&r)).is_err());
    }
}
