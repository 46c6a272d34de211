//! Exact linear algebra over ℚ on integer matrices, by fraction-free
//! (Bareiss) elimination. No floating point anywhere.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Bareiss row echelon form in place. Columns without a pivot are skipped.
/// Returns the pivot positions `(row, col)`.
pub fn row_echelon(a: &mut [Vec<BigInt>]) -> Vec<(usize, usize)> {
    let nrows = a.len();
    let ncols = a.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let (top, rest) = a.split_at_mut(r + 1);
        let pivot_row = &top[r];
        for row in rest.iter_mut() {
            let factor = row[c].clone();
            for j in c + 1..ncols {
                let num = &pivot_row[c] * &row[j] - &factor * &pivot_row[j];
                debug_assert!(num.is_multiple_of(&prev), "Bareiss division must be exact");
                row[j] = num / &prev;
            }
            row[c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        pivots.push((r, c));
        r += 1;
    }
    pivots
}

fn to_big(rows: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
    rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
}

pub fn rank(rows: &[Vec<i64>]) -> usize {
    rank_big(to_big(rows))
}

pub fn rank_big(mut rows: Vec<Vec<BigInt>>) -> usize {
    row_echelon(&mut rows).len()
}

/// A basis of `{x : A x = 0}` made of primitive integer vectors, one per
/// non-pivot column, ordered by that column.
pub fn nullspace(rows: &[Vec<i64>], ncols: usize) -> Vec<Vec<BigInt>> {
    let mut a = to_big(rows);
    for r in &a {
        assert_eq!(r.len(), ncols, "ragged matrix");
    }
    let pivots = row_echelon(&mut a);
    let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
    let free: Vec<usize> = (0..ncols).filter(|c| !pivot_cols.contains(c)).collect();
    free.into_iter()
        .map(|f| {
            let mut x: Vec<BigRational> = vec![BigRational::zero(); ncols];
            x[f] = BigRational::one();
            for &(r, c) in pivots.iter().rev() {
                let mut s = BigRational::zero();
                for j in c + 1..ncols {
                    if !a[r][j].is_zero() && !x[j].is_zero() {
                        s += BigRational::from_integer(a[r][j].clone()) * &x[j];
                    }
                }
                x[c] = -s / BigRational::from_integer(a[r][c].clone());
            }
            primitive(&x)
        })
        .collect()
}

/// Clears denominators and divides by the content; the first nonzero entry
/// becomes positive.
pub fn primitive(x: &[BigRational]) -> Vec<BigInt> {
    let lcm = x.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let mut v: Vec<BigInt> = x.iter().map(|q| (q * BigRational::from_integer(lcm.clone())).to_integer()).collect();
    let g = v.iter().fold(BigInt::zero(), |acc, e| acc.gcd(e));
    if !g.is_zero() {
        for e in &mut v {
            *e = &*e / &g;
        }
    }
    if v.iter().find(|e| !e.is_zero()).is_some_and(|e| e.is_negative()) {
        for e in &mut v {
            *e = -&*e;
        }
    }
    v
}

/// Whether `v` lies in the ℚ-span of `basis`.
pub fn in_span(basis: &[Vec<BigInt>], v: &[BigInt]) -> bool {
    if v.iter().all(Zero::is_zero) {
        return true;
    }
    let r0 = rank_big(basis.to_vec());
    let mut ext = basis.to_vec();
    ext.push(v.to_vec());
    rank_big(ext) == r0
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn rank_of_small_matrices() {
        assert_eq!(rank(&[vec![1, 2], vec![2, 4]]), 1);
        assert_eq!(rank(&[vec![0, 0], vec![0, 0]]), 0);
        assert_eq!(rank(&[vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]]), 3);
        assert_eq!(rank(&[]), 0);
        // skipped pivot column
        assert_eq!(rank(&[vec![0, 2, 3], vec![0, 4, 6], vec![0, 1, 5]]), 2);
    }

    #[test]
    fn nullspace_vectors_are_annihilated() {
        let a = vec![vec![1, -1, 0, 2], vec![0, 3, -3, 1], vec![1, 2, -3, 3]];
        let ker = nullspace(&a, 4);
        assert_eq!(ker.len(), 4 - rank(&a));
        for v in &ker {
            for row in &a {
                let s: BigInt = row.iter().zip(v).map(|(&r, x)| BigInt::from(r) * x).sum();
                assert!(s.is_zero());
            }
        }
    }

    #[test]
    fn nullspace_of_boundary() {
        // ∂ of the path complex a-b-c on edges ab, bc: kernel is zero
        let d = vec![vec![-1, 0], vec![1, -1], vec![0, 1]];
        assert!(nullspace(&d, 2).is_empty());
        // triangle boundary has the cycle ab + bc - ac
        let d = vec![vec![-1, 0, -1], vec![1, -1, 0], vec![0, 1, 1]];
        assert_eq!(nullspace(&d, 3), vec![big(&[1, 1, -1])]);
    }

    #[test]
    fn span_membership() {
        let basis = vec![big(&[1, 0, 1]), big(&[0, 1, 1])];
        assert!(in_span(&basis, &big(&[2, -3, -1])));
        assert!(!in_span(&basis, &big(&[0, 0, 1])));
        assert!(in_span(&[], &big(&[0, 0])));
    }
}
