//! Hilbert-Burch matrices: the bidiagonal closed form in two variables and
//! minimal first syzygies extracted from the Taylor resolution in general.

use crate::betti::betti_numbers;
use crate::decomposition::height;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::linalg;
use crate::matrix::{minors_ideal, SignedMonomialMatrix};
use crate::monomial::Monomial;

/// Largest `μ(I)` for syzygy minimalization.
pub const MAX_SYZYGY_GENERATORS: usize = 12;

/// Generators of a two-variable ideal as `x^{a_i} y^{b_i}` with `a`
/// strictly decreasing (so `b` strictly increasing).
pub fn xy_sequences(ideal: &MonomialIdeal) -> Result<(Vec<u32>, Vec<u32>)> {
    if ideal.nvars() != 2 {
        return Err(Error::domain(format!("{} is not a ring in two variables", ideal.ring())));
    }
    let mut gens: Vec<&Monomial> = ideal.gens().iter().collect();
    gens.sort_by_key(|g| std::cmp::Reverse(g.exponent(0)));
    Ok((gens.iter().map(|g| g.exponent(0)).collect(), gens.iter().map(|g| g.exponent(1)).collect()))
}

/// The bidiagonal `m × (m-1)` matrix with `+y^{b_{j+1}-b_j}` at `(j, j)`
/// and `-x^{a_j-a_{j+1}}` at `(j+1, j)`. Rows follow decreasing `x`-degree
/// and carry degrees `u_i`; column `j` has degree `x^{a_j} y^{b_{j+1}}`.
pub fn hb_matrix_xy(ideal: &MonomialIdeal) -> Result<SignedMonomialMatrix> {
    let (a, b) = xy_sequences(ideal)?;
    let m = a.len();
    if m < 2 {
        return Err(Error::domain("a Hilbert-Burch matrix needs at least two generators"));
    }
    let rows = (0..m).map(|i| Monomial::new(vec![a[i], b[i]])).collect();
    let cols = (0..m - 1).map(|j| Monomial::new(vec![a[j], b[j + 1]])).collect();
    let coeffs = (0..m - 1).flat_map(|j| [(j, j, 1), (j + 1, j, -1)]);
    SignedMonomialMatrix::from_coefficients(ideal.ring(), rows, cols, coeffs)
}

/// The Taylor syzygy `σ_ij = (lcm/u_i) e_i - (lcm/u_j) e_j`, `i < j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TaylorSyzygy {
    pub pair: (usize, usize),
    pub degree: Monomial,
}

pub fn taylor_syzygies(ideal: &MonomialIdeal) -> Result<Vec<TaylorSyzygy>> {
    let g = ideal.gens();
    if g.len() < 2 {
        return Err(Error::domain("Taylor syzygies need at least two generators"));
    }
    Ok((0..g.len())
        .flat_map(|i| (i + 1..g.len()).map(move |j| (i, j)))
        .map(|(i, j)| TaylorSyzygy { pair: (i, j), degree: g[i].lcm(&g[j]) })
        .collect())
}

fn syzygy_matrix(ideal: &MonomialIdeal, columns: &[TaylorSyzygy]) -> Result<SignedMonomialMatrix> {
    let coeffs = columns.iter().enumerate().flat_map(|(k, s)| [(s.pair.0, k, 1), (s.pair.1, k, -1)]);
    SignedMonomialMatrix::from_coefficients(
        ideal.ring(),
        ideal.gens().to_vec(),
        columns.iter().map(|s| s.degree.clone()).collect(),
        coeffs,
    )
}

/// All Taylor syzygies as an `m × C(m,2)` matrix, columns in lexicographic
/// pair order, rows in generator order.
pub fn taylor_matrix(ideal: &MonomialIdeal) -> Result<SignedMonomialMatrix> {
    syzygy_matrix(ideal, &taylor_syzygies(ideal)?)
}

/// A minimal generating set of the first syzygies of `G(I)`, chosen greedily
/// among Taylor syzygies by increasing `(degree, monomial order, pair)`. A
/// syzygy is kept iff its coefficient vector is independent from those kept
/// before it whose degree divides its own.
pub fn minimal_first_syzygies(ideal: &MonomialIdeal) -> Result<SignedMonomialMatrix> {
    let m = ideal.num_gens();
    if m > MAX_SYZYGY_GENERATORS {
        return Err(Error::Resource(format!("{m} generators exceed the syzygy cap of {MAX_SYZYGY_GENERATORS}")));
    }
    let mut candidates = taylor_syzygies(ideal)?;
    candidates.sort_by(|s, t| s.degree.cmp(&t.degree).then(s.pair.cmp(&t.pair)));
    let vector = |s: &TaylorSyzygy| {
        let mut v = vec![0i64; m];
        v[s.pair.0] = 1;
        v[s.pair.1] = -1;
        v
    };
    let mut kept: Vec<TaylorSyzygy> = Vec::new();
    for s in candidates {
        let mut span: Vec<Vec<i64>> = kept.iter().filter(|t| t.degree.divides(&s.degree)).map(vector).collect();
        let before = linalg::rank(&span);
        span.push(vector(&s));
        if linalg::rank(&span) > before {
            kept.push(s);
        }
    }
    let beta1 = betti_numbers(ideal)?.ideal_total(1);
    if kept.len() != beta1 {
        return Err(Error::invariant(format!(
            "kept {} syzygies but the first Betti number of {ideal} is {beta1}",
            kept.len()
        )));
    }
    syzygy_matrix(ideal, &kept)
}

/// The Hilbert-Burch matrix of a height-two Cohen-Macaulay ideal, validated
/// by `I_{m-1}(X) = I`.
pub fn hb_matrix_general(ideal: &MonomialIdeal) -> Result<SignedMonomialMatrix> {
    let h = height(ideal)?;
    if h != 2 {
        return Err(Error::domain(format!("{ideal} has height {h}, not two")));
    }
    let x = minimal_first_syzygies(ideal)?;
    let m = ideal.num_gens();
    if x.ncols() != m - 1 {
        return Err(Error::domain(format!(
            "{ideal} is not Cohen-Macaulay: {} minimal syzygies for {m} generators",
            x.ncols()
        )));
    }
    if minors_ideal(&x, m - 1)? != *ideal {
        return Err(Error::invariant(format!("maximal minors of the syzygy matrix do not generate {ideal}")));
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::minor;
    use crate::ring::AmbientRing;

    fn xy() -> AmbientRing {
        AmbientRing::new(["x", "y"]).unwrap()
    }

    fn ideal(r: &AmbientRing, g: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(r, g).unwrap()
    }

    fn grid(x: &SignedMonomialMatrix) -> Vec<Vec<String>> {
        x.text_grid()
    }

    fn s(rows: &[&[&str]]) -> Vec<Vec<String>> {
        rows.iter().map(|r| r.iter().map(|e| e.to_string()).collect()).collect()
    }

    #[test]
    fn hb_xy_examples() {
        let r = xy();
        let x = hb_matrix_xy(&ideal(&r, &[&[3, 0], &[2, 1], &[0, 2]])).unwrap();
        assert_eq!(grid(&x), s(&[&["y", "0"], &["-x", "y"], &["0", "-x^2"]]));
        let x = hb_matrix_xy(&MonomialIdeal::maximal(&r)).unwrap();
        assert_eq!(grid(&x), s(&[&["y"], &["-x"]]));
        let x = hb_matrix_xy(&ideal(&r, &[&[4, 0], &[2, 2], &[0, 4]])).unwrap();
        assert_eq!(grid(&x), s(&[&["y^2", "0"], &["-x^2", "y^2"], &["0", "-x^2"]]));
    }

    #[test]
    fn hb_xy_guards() {
        let r = xy();
        assert!(hb_matrix_xy(&ideal(&r, &[&[2, 3]])).is_err());
        let r3 = AmbientRing::indexed("x", 3).unwrap();
        assert!(hb_matrix_xy(&MonomialIdeal::maximal(&r3)).is_err());
    }

    #[test]
    fn hb_xy_scaled_maximal_minors() {
        // x^{a_m} y^{b_1} [[m]∖{i} | [m-1]] = ±x^{a_i} y^{b_i}, also off the CM locus
        let r = xy();
        let i = ideal(&r, &[&[5, 1], &[3, 2], &[2, 4], &[1, 6]]);
        let (a, b) = xy_sequences(&i).unwrap();
        let x = hb_matrix_xy(&i).unwrap();
        let m = a.len();
        let scale = Monomial::new(vec![a[m - 1], b[0]]);
        for drop in 0..m {
            let rows: Vec<usize> = (0..m).filter(|&k| k != drop).collect();
            let v = minor(&x, &rows, &(0..m - 1).collect::<Vec<_>>()).unwrap();
            assert_eq!(v.coefficient.abs(), 1);
            assert_eq!(scale.mul(&v.monomial), Monomial::new(vec![a[drop], b[drop]]));
        }
    }

    #[test]
    fn taylor_examples() {
        let r = xy();
        let t = taylor_syzygies(&MonomialIdeal::maximal(&r)).unwrap();
        assert_eq!(t.len(), 1);
        let x = taylor_matrix(&MonomialIdeal::maximal(&r)).unwrap();
        // generators in canonical order: x, y
        assert_eq!(grid(&x), s(&[&["y"], &["-x"]]));
        let i = ideal(&r, &[&[2, 0], &[1, 1], &[0, 2]]);
        let mut degs: Vec<Vec<u32>> =
            taylor_syzygies(&i).unwrap().iter().map(|t| t.degree.exponents().to_vec()).collect();
        degs.sort();
        assert_eq!(degs, vec![vec![1, 2], vec![2, 1], vec![2, 2]]);
        assert!(taylor_syzygies(&ideal(&r, &[&[1, 1]])).is_err());
    }

    #[test]
    fn taylor_matrix_shape() {
        let r = AmbientRing::indexed("x", 4).unwrap();
        let i = ideal(&r, &[&[1, 0, 1, 0], &[1, 0, 0, 1], &[0, 1, 0, 1]]);
        let t = taylor_matrix(&i).unwrap();
        assert_eq!((t.nrows(), t.ncols()), (3, 3));
        // columns (1,2), (1,3), (2,3) with +lcm/u_i and -lcm/u_j
        assert_eq!(grid(&t), s(&[&["x4", "x2*x4", "0"], &["-x3", "0", "x2"], &["0", "-x1*x3", "-x1"]]));
    }

    #[test]
    fn minimal_syzygies_examples() {
        let r = xy();
        let i = ideal(&r, &[&[2, 0], &[1, 1], &[0, 2]]);
        let x = minimal_first_syzygies(&i).unwrap();
        let mut degs: Vec<Vec<u32>> = x.col_degrees().iter().map(|d| d.exponents().to_vec()).collect();
        degs.sort();
        assert_eq!(degs, vec![vec![1, 2], vec![2, 1]]);
        assert_eq!(minimal_first_syzygies(&MonomialIdeal::maximal(&r)).unwrap().ncols(), 1);
    }

    #[test]
    fn case_e_reproduces_the_bidiagonal_matrix() {
        let r = AmbientRing::indexed("x", 4).unwrap();
        let i = ideal(&r, &[&[1, 0, 1, 0], &[1, 0, 0, 1], &[0, 1, 0, 1]]);
        let x = hb_matrix_general(&i).unwrap();
        assert_eq!(grid(&x), s(&[&["0", "x4"], &["x2", "-x3"], &["-x1", "0"]]));
        // reversing the rows and negating gives [[x1, 0], [-x2, x3], [0, -x4]]
        let y = x.permute_rows(&[2, 1, 0]).unwrap();
        let y = y.scale_column(0, -1).scale_column(1, -1);
        assert_eq!(grid(&y), s(&[&["x1", "0"], &["-x2", "x3"], &["0", "-x4"]]));
    }

    #[test]
    fn hb_general_examples() {
        let r = AmbientRing::indexed("x", 3).unwrap();
        let i = ideal(&r, &[&[0, 1, 0], &[1, 0, 1]]);
        let x = hb_matrix_general(&i).unwrap();
        assert_eq!(x.ncols(), 1);
        assert_eq!(grid(&x), s(&[&["x1*x3"], &["-x2"]]));

        let r = xy();
        let i = ideal(&r, &[&[3, 0], &[2, 1], &[0, 2]]);
        let g = hb_matrix_general(&i).unwrap();
        let h = hb_matrix_xy(&i).unwrap();
        // align rows of the general matrix with the x-degree order of hb_matrix_xy
        let order: Vec<usize> =
            h.row_degrees().iter().map(|d| g.row_degrees().iter().position(|e| e == d).unwrap()).collect();
        let g = g.permute_rows(&order).unwrap();
        let cols: Vec<usize> =
            h.col_degrees().iter().map(|d| g.col_degrees().iter().position(|e| e == d).unwrap()).collect();
        let mut g = g.select_columns(&cols).unwrap();
        for j in 0..g.ncols() {
            if g.entry(j, j).coefficient != h.entry(j, j).coefficient {
                g = g.scale_column(j, -1);
            }
        }
        assert_eq!(g, h);
    }

    #[test]
    fn hb_general_rejects_non_cm() {
        let r = AmbientRing::indexed("x", 3).unwrap();
        let i = ideal(&r, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1], &[0, 0, 2]]);
        assert!(matches!(hb_matrix_general(&i), Err(Error::Domain(_))));
        let r = xy();
        assert!(matches!(hb_matrix_general(&ideal(&r, &[&[2, 0], &[1, 1]])), Err(Error::Domain(_))));
    }

    #[test]
    fn syzygy_columns_have_two_opposite_units() {
        let r = AmbientRing::indexed("x", 3).unwrap();
        let i = ideal(&r, &[&[2, 1, 0], &[1, 0, 1], &[0, 1, 1]]);
        let x = hb_matrix_general(&i).unwrap();
        for j in 0..x.ncols() {
            let c: Vec<i64> = x.column(j).map(|(_, e)| e.coefficient).collect();
            assert_eq!(c.len(), 2);
            assert_eq!(c[0], -c[1]);
            assert_eq!(c[0].abs(), 1);
        }
    }

    #[test]
    fn syzygy_cap() {
        let r = xy();
        let gens: Vec<Monomial> = (0..=12).map(|k| Monomial::new(vec![k, 12 - k])).collect();
        let i = MonomialIdeal::new(&r, gens).unwrap();
        assert!(matches!(minimal_first_syzygies(&i), Err(Error::Resource(_))));
    }
}
