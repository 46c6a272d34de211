//! Fine-graded matrices with signed monomial entries and their minors.

use std::collections::HashMap;
use std::fmt;

use itertools::Itertools;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::ring::AmbientRing;

/// `coefficient · monomial`; a zero coefficient is the zero entry.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignedMonomialEntry {
    pub coefficient: i64,
    pub monomial: Monomial,
}

impl SignedMonomialEntry {
    pub fn new(coefficient: i64, monomial: Monomial) -> Self {
        if coefficient == 0 {
            let n = monomial.nvars();
            return Self::zero(n);
        }
        SignedMonomialEntry { coefficient, monomial }
    }

    pub fn zero(n: usize) -> Self {
        SignedMonomialEntry { coefficient: 0, monomial: Monomial::one(n) }
    }

    pub fn is_zero(&self) -> bool {
        self.coefficient == 0
    }

    pub fn to_string_in(&self, ring: &AmbientRing) -> String {
        match (self.coefficient, self.monomial.is_one()) {
            (0, _) => "0".into(),
            (c, true) => c.to_string(),
            (1, false) => self.monomial.to_string_in(ring),
            (-1, false) => format!("-{}", self.monomial.to_string_in(ring)),
            (c, false) => format!("{c}*{}", self.monomial.to_string_in(ring)),
        }
    }
}

/// An `r × c` matrix representing a map `⊕ S(-col_deg_j) → ⊕ S(-row_deg_i)`.
/// Every nonzero entry satisfies `row_deg_i · entry = col_deg_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedMonomialMatrix {
    ring: AmbientRing,
    entries: Vec<Vec<SignedMonomialEntry>>,
    row_degrees: Vec<Monomial>,
    col_degrees: Vec<Monomial>,
}

impl SignedMonomialMatrix {
    /// Builds the matrix from sparse `(row, col, coefficient)` triples; each
    /// entry monomial is forced to `col_deg / row_deg`.
    pub fn from_coefficients(
        ring: &AmbientRing,
        row_degrees: Vec<Monomial>,
        col_degrees: Vec<Monomial>,
        coefficients: impl IntoIterator<Item = (usize, usize, i64)>,
    ) -> Result<Self> {
        let n = ring.len();
        let mut entries = vec![vec![SignedMonomialEntry::zero(n); col_degrees.len()]; row_degrees.len()];
        for (i, j, c) in coefficients {
            if i >= row_degrees.len() || j >= col_degrees.len() {
                return Err(Error::domain(format!("entry ({i}, {j}) out of range")));
            }
            if c == 0 {
                continue;
            }
            let mono = col_degrees[j]
                .checked_div(&row_degrees[i])
                .ok_or_else(|| Error::invariant(format!("row degree {i} does not divide column degree {j}")))?;
            entries[i][j] = SignedMonomialEntry::new(c, mono);
        }
        Self::new(ring, entries, row_degrees, col_degrees)
    }

    /// Validates shapes, arity and fine homogeneity.
    pub fn new(
        ring: &AmbientRing,
        entries: Vec<Vec<SignedMonomialEntry>>,
        row_degrees: Vec<Monomial>,
        col_degrees: Vec<Monomial>,
    ) -> Result<Self> {
        let n = ring.len();
        if entries.len() != row_degrees.len() {
            return Err(Error::domain("row count does not match row degrees"));
        }
        if row_degrees.len() > 64 || col_degrees.len() > 64 {
            return Err(Error::Resource("matrices are limited to 64 rows and columns".into()));
        }
        for m in row_degrees.iter().chain(&col_degrees) {
            m.check_arity(n)?;
        }
        for (i, row) in entries.iter().enumerate() {
            if row.len() != col_degrees.len() {
                return Err(Error::domain("column count does not match column degrees"));
            }
            for (j, e) in row.iter().enumerate() {
                e.monomial.check_arity(n)?;
                if !e.is_zero() && row_degrees[i].mul(&e.monomial) != col_degrees[j] {
                    return Err(Error::invariant(format!("entry ({i}, {j}) is not homogeneous")));
                }
            }
        }
        let entries = entries
            .into_iter()
            .map(|row| row.into_iter().map(|e| if e.is_zero() { SignedMonomialEntry::zero(n) } else { e }).collect())
            .collect();
        Ok(SignedMonomialMatrix { ring: ring.clone(), entries, row_degrees, col_degrees })
    }

    pub fn ring(&self) -> &AmbientRing {
        &self.ring
    }

    pub fn nrows(&self) -> usize {
        self.row_degrees.len()
    }

    pub fn ncols(&self) -> usize {
        self.col_degrees.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> &SignedMonomialEntry {
        &self.entries[i][j]
    }

    pub fn row_degrees(&self) -> &[Monomial] {
        &self.row_degrees
    }

    pub fn col_degrees(&self) -> &[Monomial] {
        &self.col_degrees
    }

    /// Nonzero entries of column `j` as `(row, entry)`.
    pub fn column(&self, j: usize) -> impl Iterator<Item = (usize, &SignedMonomialEntry)> + '_ {
        (0..self.nrows()).map(move |i| (i, &self.entries[i][j])).filter(|(_, e)| !e.is_zero())
    }

    pub fn select_columns(&self, cols: &[usize]) -> Result<SignedMonomialMatrix> {
        if let Some(&j) = cols.iter().find(|&&j| j >= self.ncols()) {
            return Err(Error::domain(format!("column {j} out of range")));
        }
        let entries = self.entries.iter().map(|row| cols.iter().map(|&j| row[j].clone()).collect()).collect();
        let col_degrees = cols.iter().map(|&j| self.col_degrees[j].clone()).collect();
        Self::new(&self.ring, entries, self.row_degrees.clone(), col_degrees)
    }

    /// Rows reordered so that new row `k` is old row `order[k]`.
    pub fn permute_rows(&self, order: &[usize]) -> Result<SignedMonomialMatrix> {
        if order.len() != self.nrows() || !order.iter().all(|&i| i < self.nrows()) || !order.iter().all_unique() {
            return Err(Error::domain("not a row permutation"));
        }
        let entries = order.iter().map(|&i| self.entries[i].clone()).collect();
        let row_degrees = order.iter().map(|&i| self.row_degrees[i].clone()).collect();
        Self::new(&self.ring, entries, row_degrees, self.col_degrees.clone())
    }

    pub fn scale_column(&self, j: usize, sign: i64) -> SignedMonomialMatrix {
        let mut out = self.clone();
        for row in &mut out.entries {
            row[j].coefficient *= sign;
        }
        out
    }

    /// Monomials of all nonzero entries.
    pub fn entry_monomials(&self) -> Vec<Monomial> {
        self.entries.iter().flatten().filter(|e| !e.is_zero()).map(|e| e.monomial.clone()).collect()
    }

    /// Entries rendered as strings, row by row.
    pub fn text_grid(&self) -> Vec<Vec<String>> {
        self.entries.iter().map(|row| row.iter().map(|e| e.to_string_in(&self.ring)).collect()).collect()
    }
}

impl fmt::Display for SignedMonomialMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let grid = self.text_grid();
        let widths: Vec<usize> =
            (0..self.ncols()).map(|j| grid.iter().map(|r| r[j].chars().count()).max().unwrap_or(1)).collect();
        for (k, row) in grid.iter().enumerate() {
            let cells: Vec<String> = row.iter().zip(&widths).map(|(s, &w)| format!("{s:>w$}")).collect();
            write!(f, "[ {} ]", cells.join("  "))?;
            if k + 1 < grid.len() {
                writeln!(f)?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize)]
struct JsonEntry {
    row: usize,
    col: usize,
    coeff: i64,
    monomial: String,
}

impl Serialize for SignedMonomialMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let deg = |v: &[Monomial]| v.iter().map(|m| m.to_string_in(&self.ring)).collect::<Vec<_>>();
        let entries: Vec<JsonEntry> = (0..self.nrows())
            .flat_map(|i| (0..self.ncols()).map(move |j| (i, j)))
            .filter(|&(i, j)| !self.entries[i][j].is_zero())
            .map(|(i, j)| JsonEntry {
                row: i,
                col: j,
                coeff: self.entries[i][j].coefficient,
                monomial: self.entries[i][j].monomial.to_string_in(&self.ring),
            })
            .collect();
        let mut st = serializer.serialize_struct("SignedMonomialMatrix", 6)?;
        st.serialize_field("variables", self.ring.names())?;
        st.serialize_field("rows", &self.nrows())?;
        st.serialize_field("cols", &self.ncols())?;
        st.serialize_field("row_degrees", &deg(&self.row_degrees))?;
        st.serialize_field("col_degrees", &deg(&self.col_degrees))?;
        st.serialize_field("entries", &entries)?;
        st.end()
    }
}

/// A signed-monomial determinant of a square submatrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinorValue {
    pub coefficient: i64,
    pub monomial: Monomial,
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
}

impl MinorValue {
    pub fn is_zero(&self) -> bool {
        self.coefficient == 0
    }
}

/// Laplace expansion along the first column, memoized on `(rows, cols)`
/// bitmasks. Only coefficients are tracked: homogeneity makes every term of
/// a minor share one monomial.
struct MinorCache<'a> {
    matrix: &'a SignedMonomialMatrix,
    memo: HashMap<(u64, u64), i64>,
}

impl<'a> MinorCache<'a> {
    fn new(matrix: &'a SignedMonomialMatrix) -> Self {
        MinorCache { matrix, memo: HashMap::new() }
    }

    fn coefficient(&mut self, rows: u64, cols: u64) -> Result<i64> {
        if cols == 0 {
            return Ok(1);
        }
        if let Some(&c) = self.memo.get(&(rows, cols)) {
            return Ok(c);
        }
        let c0 = cols.trailing_zeros() as usize;
        let rest = cols & (cols - 1);
        let mut acc: i64 = 0;
        let mut k = 0;
        let mut r = rows;
        while r != 0 {
            let i = r.trailing_zeros() as usize;
            r &= r - 1;
            let e = self.matrix.entries[i][c0].coefficient;
            if e != 0 {
                let sub = self.coefficient(rows & !(1 << i), rest)?;
                let term = e.checked_mul(sub).ok_or_else(overflow)?;
                acc = if k % 2 == 0 { acc.checked_add(term) } else { acc.checked_sub(term) }.ok_or_else(overflow)?;
            }
            k += 1;
        }
        self.memo.insert((rows, cols), acc);
        Ok(acc)
    }

    fn minor(&mut self, rows: &[usize], cols: &[usize]) -> Result<MinorValue> {
        let x = self.matrix;
        if rows.len() != cols.len() {
            return Err(Error::domain("minor needs as many rows as columns"));
        }
        let mask = |idx: &[usize], bound: usize, what: &str| -> Result<u64> {
            let mut m = 0u64;
            for &i in idx {
                if i >= bound {
                    return Err(Error::domain(format!("{what} index {i} out of range")));
                }
                if m & (1 << i) != 0 {
                    return Err(Error::domain(format!("repeated {what} index {i}")));
                }
                m |= 1 << i;
            }
            Ok(m)
        };
        let rmask = mask(rows, x.nrows(), "row")?;
        let cmask = mask(cols, x.ncols(), "column")?;
        let sign = permutation_sign(rows) * permutation_sign(cols);
        let coefficient = sign * self.coefficient(rmask, cmask)?;
        let n = x.ring.len();
        let monomial = if coefficient == 0 {
            Monomial::one(n)
        } else {
            let top = cols.iter().fold(Monomial::one(n), |acc, &j| acc.mul(&x.col_degrees[j]));
            let bottom = rows.iter().fold(Monomial::one(n), |acc, &i| acc.mul(&x.row_degrees[i]));
            top.checked_div(&bottom).ok_or_else(|| Error::invariant("minor is not homogeneous"))?
        };
        Ok(MinorValue { coefficient, monomial, rows: rows.to_vec(), cols: cols.to_vec() })
    }
}

fn overflow() -> Error {
    Error::Resource("minor coefficient overflows i64".into())
}

/// Sign of the permutation sorting `idx`.
fn permutation_sign(idx: &[usize]) -> i64 {
    let inversions =
        (0..idx.len()).flat_map(|a| (a + 1..idx.len()).map(move |b| (a, b))).filter(|&(a, b)| idx[a] > idx[b]).count();
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// The minor with the given row and column sequences; the order of the
/// indices is respected, so swapping two rows negates the value.
pub fn minor(x: &SignedMonomialMatrix, rows: &[usize], cols: &[usize]) -> Result<MinorValue> {
    MinorCache::new(x).minor(rows, cols)
}

/// All nonzero `j × j` minors, rows and columns in increasing order.
pub fn nonzero_minors(x: &SignedMonomialMatrix, j: usize) -> Result<Vec<MinorValue>> {
    if j > x.nrows().min(x.ncols()) {
        return Err(Error::domain(format!("no {j}-minors in a {}×{} matrix", x.nrows(), x.ncols())));
    }
    let mut cache = MinorCache::new(x);
    let mut out = Vec::new();
    for cols in (0..x.ncols()).combinations(j) {
        for rows in (0..x.nrows()).combinations(j) {
            let m = cache.minor(&rows, &cols)?;
            if !m.is_zero() {
                out.push(m);
            }
        }
    }
    Ok(out)
}

/// `I_j(X)`: generated by the monomials of the nonzero `j`-minors. `I_0` is
/// the unit ideal.
pub fn minors_ideal(x: &SignedMonomialMatrix, j: usize) -> Result<MonomialIdeal> {
    let gens = nonzero_minors(x, j)?.into_iter().map(|m| m.monomial).collect();
    MonomialIdeal::new(&x.ring, gens)
}
