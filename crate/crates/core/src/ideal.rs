use std::collections::BTreeSet;
use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::ring::AmbientRing;

/// A monomial ideal stored by its minimal generating set `G(I)`, sorted in the
/// canonical monomial order. The empty set is the zero ideal, `{1}` the unit
/// ideal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    ring: AmbientRing,
    gens: Vec<Monomial>,
}

/// Reduces a generating set to the minimal one and sorts it.
pub fn minimalize(gens: Vec<Monomial>, ring: &AmbientRing) -> Result<MonomialIdeal> {
    for g in &gens {
        g.check_arity(ring.len())?;
    }
    Ok(MonomialIdeal { ring: ring.clone(), gens: minimal_set(gens) })
}

pub(crate) fn minimal_set(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort();
    gens.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    // a divisor never comes later in the canonical order
    for g in gens {
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    kept
}

impl MonomialIdeal {
    pub fn new(ring: &AmbientRing, gens: Vec<Monomial>) -> Result<Self> {
        minimalize(gens, ring)
    }

    /// Builds an ideal from raw exponent vectors.
    pub fn from_exponents(ring: &AmbientRing, gens: &[&[u32]]) -> Result<Self> {
        Self::new(ring, gens.iter().map(|e| Monomial::new(e.to_vec())).collect())
    }

    pub fn zero(ring: &AmbientRing) -> Self {
        MonomialIdeal { ring: ring.clone(), gens: Vec::new() }
    }

    pub fn unit(ring: &AmbientRing) -> Self {
        MonomialIdeal { ring: ring.clone(), gens: vec![Monomial::one(ring.len())] }
    }

    /// The homogeneous maximal ideal `(x_1, ..., x_n)`.
    pub fn maximal(ring: &AmbientRing) -> Self {
        let n = ring.len();
        MonomialIdeal { ring: ring.clone(), gens: minimal_set((0..n).map(|i| Monomial::var(n, i)).collect()) }
    }

    /// The prime generated by the given variables.
    pub fn prime(ring: &AmbientRing, vars: impl IntoIterator<Item = usize>) -> Self {
        let n = ring.len();
        MonomialIdeal { ring: ring.clone(), gens: minimal_set(vars.into_iter().map(|i| Monomial::var(n, i)).collect()) }
    }

    pub fn ring(&self) -> &AmbientRing {
        &self.ring
    }

    pub fn nvars(&self) -> usize {
        self.ring.len()
    }

    /// The minimal generators `G(I)` in canonical order.
    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    /// `μ(I)`.
    pub fn num_gens(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.first().is_some_and(Monomial::is_one)
    }

    pub fn is_proper(&self) -> bool {
        !self.is_unit()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    /// Variables dividing some generator.
    pub fn support(&self) -> Vec<usize> {
        (0..self.nvars()).filter(|&i| self.gens.iter().any(|g| g.exponent(i) > 0)).collect()
    }

    pub fn lcm_of_gens(&self) -> Monomial {
        self.gens.iter().fold(Monomial::one(self.nvars()), |acc, g| acc.lcm(g))
    }

    /// Monomial membership: some generator divides `w`.
    pub fn contains(&self, w: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(w))
    }

    /// `other ⊆ self`.
    pub fn contains_ideal(&self, other: &MonomialIdeal) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    fn same_ring(&self, other: &MonomialIdeal) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::AmbientMismatch)
        }
    }

    /// `(I : u) = ( v / gcd(v, u) : v ∈ G(I) )`.
    pub fn colon(&self, u: &Monomial) -> Result<MonomialIdeal> {
        u.check_arity(self.nvars())?;
        let gens = self.gens.iter().map(|v| v.div_gcd(u)).collect();
        Ok(MonomialIdeal { ring: self.ring.clone(), gens: minimal_set(gens) })
    }

    /// `I ∩ J` via pairwise lcms.
    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.same_ring(other)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for u in &self.gens {
            for v in &other.gens {
                gens.push(u.lcm(v));
            }
        }
        Ok(MonomialIdeal { ring: self.ring.clone(), gens: minimal_set(gens) })
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.same_ring(other)?;
        let gens = self.gens.iter().chain(&other.gens).cloned().collect();
        Ok(MonomialIdeal { ring: self.ring.clone(), gens: minimal_set(gens) })
    }

    /// `u · I`.
    pub fn scale(&self, u: &Monomial) -> Result<MonomialIdeal> {
        u.check_arity(self.nvars())?;
        let gens = self.gens.iter().map(|g| g.mul(u)).collect();
        Ok(MonomialIdeal { ring: self.ring.clone(), gens: minimal_set(gens) })
    }

    /// Adds generators given as monomials of the same ring.
    pub fn with_gens(&self, extra: impl IntoIterator<Item = Monomial>) -> Result<MonomialIdeal> {
        let mut gens = self.gens.clone();
        for g in extra {
            g.check_arity(self.nvars())?;
            gens.push(g);
        }
        Ok(MonomialIdeal { ring: self.ring.clone(), gens: minimal_set(gens) })
    }

    /// Re-expresses the ideal in `target`, matching variables by name.
    /// Fails if a variable in the support is missing from `target`.
    pub fn rebase(&self, target: &AmbientRing) -> Result<MonomialIdeal> {
        let mut map = Vec::with_capacity(self.nvars());
        for name in self.ring.names() {
            map.push(target.index_of(name));
        }
        let mut gens = Vec::with_capacity(self.gens.len());
        for g in &self.gens {
            let mut exps = vec![0; target.len()];
            for (i, &e) in g.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                match map[i] {
                    Some(j) => exps[j] = e,
                    None => return Err(Error::Ring(format!("variable `{}` is not in {}", self.ring.name(i), target))),
                }
            }
            gens.push(Monomial::new(exps));
        }
        Ok(MonomialIdeal { ring: target.clone(), gens: minimal_set(gens) })
    }

    /// Monomial localization `I(P)`: substitute 1 for every variable outside
    /// `vars`, giving an ideal of the polynomial ring on `vars`.
    pub fn localize(&self, vars: &[usize]) -> Result<MonomialIdeal> {
        if vars.is_empty() {
            return Err(Error::domain("localization needs a nonempty set of variables"));
        }
        let sub = self.ring.restrict(vars)?;
        let keep: BTreeSet<usize> = vars.iter().copied().collect();
        let keep: Vec<usize> = keep.into_iter().collect();
        let gens = self.gens.iter().map(|g| Monomial::new(keep.iter().map(|&v| g.exponent(v)).collect())).collect();
        Ok(MonomialIdeal { ring: sub, gens: minimal_set(gens) })
    }

    /// Applies a variable permutation: variable `i` becomes `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> Result<MonomialIdeal> {
        if perm.len() != self.nvars() {
            return Err(Error::Arity { expected: self.nvars(), got: perm.len() });
        }
        let gens = self
            .gens
            .iter()
            .map(|g| {
                let mut exps = vec![0; perm.len()];
                for (i, &e) in g.exponents().iter().enumerate() {
                    exps[perm[i]] = e;
                }
                Monomial::new(exps)
            })
            .collect();
        Ok(MonomialIdeal { ring: self.ring.clone(), gens: minimal_set(gens) })
    }

    /// Generators of `self` that divide `bound`; two ideals agree on every
    /// monomial dividing `bound` iff these sets coincide.
    pub fn gens_dividing(&self, bound: &Monomial) -> Vec<Monomial> {
        self.gens.iter().filter(|g| g.divides(bound)).cloned().collect()
    }

    pub fn generator_strings(&self) -> Vec<String> {
        self.gens.iter().map(|g| g.to_string_in(&self.ring)).collect()
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.gens.is_empty() {
            return f.write_str("(0)");
        }
        f.write_str("(")?;
        for (k, g) in self.gens.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}", g.display(&self.ring))?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in {:?}", self, self.ring)
    }
}

impl Serialize for MonomialIdeal {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("MonomialIdeal", 2)?;
        st.serialize_field("variables", self.ring.names())?;
        st.serialize_field("generators", &self.generator_strings())?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xy() -> AmbientRing {
        AmbientRing::new(["x", "y"]).unwrap()
    }

    fn ideal(r: &AmbientRing, g: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(r, g).unwrap()
    }

    #[test]
    fn minimalize_examples() {
        let r = xy();
        assert_eq!(ideal(&r, &[&[2, 0], &[3, 0], &[0, 1]]), ideal(&r, &[&[2, 0], &[0, 1]]));
        assert!(ideal(&r, &[]).is_zero());
        let i = ideal(&r, &[&[2, 1], &[1, 2], &[2, 2]]);
        assert_eq!(i.gens(), &[Monomial::new(vec![2, 1]), Monomial::new(vec![1, 2])]);
    }

    #[test]
    fn minimalize_rejects_bad_arity() {
        let err = MonomialIdeal::from_exponents(&xy(), &[&[1, 0, 0]]).unwrap_err();
        assert_eq!(err, Error::Arity { expected: 2, got: 3 });
    }

    #[test]
    fn colon_examples() {
        let r = xy();
        let i = ideal(&r, &[&[3, 0], &[2, 1], &[0, 2]]);
        assert_eq!(i.colon(&Monomial::new(vec![0, 1])).unwrap(), ideal(&r, &[&[2, 0], &[0, 1]]));
        assert_eq!(i.colon(&Monomial::one(2)).unwrap(), i);
    }

    #[test]
    fn colon_by_y_power_matches_closed_form() {
        // (x^{a_j} y^{b_j}) : y^{b_{p+1}-b_p} = (x^{a_j} y^{max(b_j + b_p - b_{p+1}, 0)})
        let r = xy();
        let a = [5u32, 3, 2, 0];
        let b = [0u32, 1, 4, 6];
        let i = MonomialIdeal::new(&r, (0..4).map(|j| Monomial::new(vec![a[j], b[j]])).collect()).unwrap();
        for p in 0..3 {
            let shift = b[p + 1] - b[p];
            let expected = MonomialIdeal::new(
                &r,
                (0..4).map(|j| Monomial::new(vec![a[j], (b[j] + b[p]).saturating_sub(b[p + 1])])).collect(),
            )
            .unwrap();
            assert_eq!(i.colon(&Monomial::new(vec![0, shift])).unwrap(), expected);
        }
    }

    #[test]
    fn intersect_examples() {
        let r = xy();
        assert_eq!(ideal(&r, &[&[1, 0]]).intersect(&ideal(&r, &[&[0, 1]])).unwrap(), ideal(&r, &[&[1, 1]]));
        assert_eq!(
            ideal(&r, &[&[2, 0], &[0, 1]]).intersect(&ideal(&r, &[&[1, 0], &[0, 3]])).unwrap(),
            ideal(&r, &[&[2, 0], &[1, 1], &[0, 3]])
        );
        let r3 = AmbientRing::indexed("x", 3).unwrap();
        let p12 = MonomialIdeal::prime(&r3, [0, 1]);
        let p23 = MonomialIdeal::prime(&r3, [1, 2]);
        assert_eq!(p12.intersect(&p23).unwrap(), ideal(&r3, &[&[0, 1, 0], &[1, 0, 1]]));
    }

    #[test]
    fn intersect_rejects_mixed_rings() {
        let r = xy();
        let s = AmbientRing::new(["x", "z"]).unwrap();
        assert_eq!(MonomialIdeal::unit(&r).intersect(&MonomialIdeal::unit(&s)), Err(Error::AmbientMismatch));
    }

    #[test]
    fn localization_examples() {
        let r3 = AmbientRing::indexed("x", 3).unwrap();
        let i = ideal(&r3, &[&[0, 1, 0], &[1, 0, 1]]);
        let loc = i.localize(&[0, 1]).unwrap();
        assert_eq!(loc.ring().names(), ["x1", "x2"]);
        assert_eq!(loc, MonomialIdeal::maximal(loc.ring()));
        assert_eq!(i.localize(&[0, 1, 2]).unwrap(), i);

        let xyz = AmbientRing::new(["x", "y", "z"]).unwrap();
        let j = ideal(&xyz, &[&[2, 1, 0], &[0, 3, 1]]);
        let loc = j.localize(&[1]).unwrap();
        assert_eq!(loc.generator_strings(), ["y"]);
        assert!(i.localize(&[]).is_err());
    }

    #[test]
    fn display() {
        let r = xy();
        assert_eq!(ideal(&r, &[&[3, 0], &[2, 1], &[0, 2]]).to_string(), "(y^2, x^3, x^2*y)");
        assert_eq!(MonomialIdeal::zero(&r).to_string(), "(0)");
        assert_eq!(MonomialIdeal::unit(&r).to_string(), "(1)");
    }
}
