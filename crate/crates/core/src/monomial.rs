//! Exponent-vector monomials.
//!
//! A [`Monomial`] does not know its ring; the owning [`MonomialIdeal`] or
//! matrix carries the [`AmbientRing`] and guarantees the vector length.
//!
//! [`MonomialIdeal`]: crate::MonomialIdeal

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::ring::AmbientRing;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    pub fn one(n: usize) -> Self {
        Monomial { exps: vec![0; n] }
    }

    pub fn var(n: usize, i: usize) -> Self {
        Self::var_pow(n, i, 1)
    }

    pub fn var_pow(n: usize, i: usize, e: u32) -> Self {
        let mut exps = vec![0; n];
        exps[i] = e;
        Monomial { exps }
    }

    /// Squarefree monomial on the given variable indices.
    pub fn from_support(n: usize, vars: impl IntoIterator<Item = usize>) -> Self {
        let mut exps = vec![0; n];
        for v in vars {
            exps[v] = 1;
        }
        Monomial { exps }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.exps.len()).filter(|&i| self.exps[i] > 0).collect()
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// `Some(i)` when the monomial is a pure power `x_i^e` with `e > 0`.
    pub fn pure_power_var(&self) -> Option<usize> {
        let mut found = None;
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some(i);
            }
        }
        found
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial { exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect() }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial { exps: self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect() }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial { exps: self.exps.iter().zip(&other.exps).map(|(a, b)| *a.min(b)).collect() }
    }

    /// `self / other`, or `None` if `other` does not divide `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        let exps = self.exps.iter().zip(&other.exps).map(|(a, b)| a.checked_sub(*b)).collect::<Option<Vec<_>>>()?;
        Some(Monomial { exps })
    }

    /// `self / gcd(self, other)`.
    pub fn div_gcd(&self, other: &Monomial) -> Monomial {
        Monomial { exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a.saturating_sub(*b)).collect() }
    }

    pub fn pow(&self, k: u32) -> Monomial {
        Monomial { exps: self.exps.iter().map(|e| e * k).collect() }
    }

    pub(crate) fn check_arity(&self, n: usize) -> Result<()> {
        if self.exps.len() == n {
            Ok(())
        } else {
            Err(Error::Arity { expected: n, got: self.exps.len() })
        }
    }

    /// Renders the monomial with the ring's variable names, e.g. `x^2*y`.
    pub fn display<'a>(&'a self, ring: &'a AmbientRing) -> MonomialDisplay<'a> {
        MonomialDisplay { mono: self, ring }
    }

    pub fn to_string_in(&self, ring: &AmbientRing) -> String {
        self.display(ring).to_string()
    }
}

/// Canonical order: total degree first, then the exponent vectors compared
/// lexicographically with larger leading exponents first
/// (`x1*x3 < x1*x4 < x2*x4`, `y^2 < x^3 < x^2*y` in `K[x,y]`).
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| other.exps.cmp(&self.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x^{:?}", self.exps)
    }
}

pub struct MonomialDisplay<'a> {
    mono: &'a Monomial,
    ring: &'a AmbientRing,
}

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.mono.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            f.write_str(self.ring.name(i))?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn canonical_order() {
        let mut v = vec![m(&[2, 1]), m(&[0, 2]), m(&[3, 0])];
        v.sort();
        assert_eq!(v, vec![m(&[0, 2]), m(&[3, 0]), m(&[2, 1])]);
    }

    #[test]
    fn arithmetic() {
        let a = m(&[2, 1, 0]);
        let b = m(&[1, 3, 1]);
        assert_eq!(a.lcm(&b), m(&[2, 3, 1]));
        assert_eq!(a.gcd(&b), m(&[1, 1, 0]));
        assert_eq!(a.div_gcd(&b), m(&[1, 0, 0]));
        assert_eq!(a.checked_div(&b), None);
        assert_eq!(a.lcm(&b).checked_div(&a), Some(m(&[0, 2, 1])));
        assert!(m(&[0, 0, 0]).is_one());
        assert_eq!(m(&[0, 4, 0]).pure_power_var(), Some(1));
        assert_eq!(m(&[1, 4, 0]).pure_power_var(), None);
    }

    #[test]
    fn renders_with_names() {
        let r = AmbientRing::new(["x", "y"]).unwrap();
        assert_eq!(m(&[2, 1]).to_string_in(&r), "x^2*y");
        assert_eq!(m(&[0, 0]).to_string_in(&r), "1");
    }
}
