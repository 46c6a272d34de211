use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// An ordered list of distinct variable names, `K[x_1, ..., x_n]` with the
/// standard grading. Cloning is cheap.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AmbientRing {
    names: Arc<[String]>,
}

impl AmbientRing {
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::Ring("a ring needs at least one variable".into()));
        }
        for (i, name) in names.iter().enumerate() {
            if name.is_empty() {
                return Err(Error::Ring("empty variable name".into()));
            }
            if names[..i].contains(name) {
                return Err(Error::Ring(format!("duplicate variable `{name}`")));
            }
        }
        Ok(AmbientRing { names: names.into() })
    }

    /// `x1, ..., xn`.
    pub fn indexed(prefix: &str, n: usize) -> Result<Self> {
        Self::new((1..=n).map(|i| format!("{prefix}{i}")))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// The ring on the given subset of variables, kept in ambient order.
    pub fn restrict(&self, vars: &[usize]) -> Result<Self> {
        let mut vars = vars.to_vec();
        vars.sort_unstable();
        vars.dedup();
        if let Some(&bad) = vars.iter().find(|&&v| v >= self.len()) {
            return Err(Error::Ring(format!("variable index {bad} out of range")));
        }
        Self::new(vars.iter().map(|&v| self.names[v].clone()))
    }

    /// Union of two rings: `self` first, then the new names of `other`.
    pub fn union(&self, other: &AmbientRing) -> AmbientRing {
        let mut names = self.names.to_vec();
        for n in other.names.iter() {
            if !names.contains(n) {
                names.push(n.clone());
            }
        }
        AmbientRing { names: names.into() }
    }
}

impl fmt::Debug for AmbientRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "K[{}]", self.names.join(","))
    }
}

impl fmt::Display for AmbientRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_duplicates_and_empty() {
        assert!(AmbientRing::new(["x", "y", "x"]).is_err());
        assert!(AmbientRing::new(Vec::<String>::new()).is_err());
    }

    #[test]
    fn restrict_keeps_ambient_order() {
        let r = AmbientRing::indexed("x", 4).unwrap();
        let s = r.restrict(&[3, 1]).unwrap();
        assert_eq!(s.names(), ["x2", "x4"]);
    }
}
