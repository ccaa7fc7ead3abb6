//! Exact linear algebra over Q(zeta)(f, t).
//!
//! Elimination works directly on rational-function entries; every
//! arithmetic step cancels monomial content (the only normalization the
//! fraction type performs), and rows with a zero entry in the pivot
//! column are never touched, which keeps the sparse multiplication
//! operators of the algebra modules cheap to eliminate.

#![allow(clippy::needless_range_loop)]

use crate::ratfun::RationalFunction2;

/// Outcome of solving a square system A x = b.
pub enum LinearSolution {
    /// A is invertible; the unique solution.
    Unique(Vec<RationalFunction2>),
    /// A is singular; a nonzero kernel vector of A.
    Singular { kernel: Vec<RationalFunction2> },
}

fn entry_weight(e: &RationalFunction2) -> usize {
    e.num().num_terms() + e.den().num_terms()
}

struct Echelon {
    rows: Vec<Vec<RationalFunction2>>,
    pivots: Vec<(usize, usize)>,
    free_cols: Vec<usize>,
}

/// Forward elimination on an n x m matrix (columns beyond `cols` are
/// carried along as right-hand sides).
fn eliminate(mut rows: Vec<Vec<RationalFunction2>>, cols: usize) -> Echelon {
    let n = rows.len();
    let width = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut free_cols = Vec::new();
    let mut r = 0usize;
    for c in 0..cols {
        if r == n {
            free_cols.push(c);
            continue;
        }
        // Sparsest nonzero pivot to limit fill-in.
        let Some(pr) = (r..n)
            .filter(|&i| !rows[i][c].is_zero())
            .min_by_key(|&i| entry_weight(&rows[i][c]))
        else {
            free_cols.push(c);
            continue;
        };
        rows.swap(r, pr);
        let pivot = rows[r][c].clone();
        for i in r + 1..n {
            if rows[i][c].is_zero() {
                continue;
            }
            let factor = rows[i][c].div(&pivot).expect("pivot is nonzero");
            for j in c + 1..width {
                if !rows[r][j].is_zero() {
                    let t = factor.mul(&rows[r][j]);
                    rows[i][j] = rows[i][j].sub(&t);
                }
            }
            rows[i][c] = RationalFunction2::zero();
        }
        pivots.push((r, c));
        r += 1;
    }
    Echelon {
        rows,
        pivots,
        free_cols,
    }
}

/// Solve the square system A x = b exactly.
pub fn solve_square(
    matrix: &[Vec<RationalFunction2>],
    rhs: &[RationalFunction2],
) -> LinearSolution {
    let n = matrix.len();
    assert!(
        matrix.iter().all(|row| row.len() == n),
        "matrix must be square"
    );
    assert_eq!(rhs.len(), n);
    let rows: Vec<Vec<RationalFunction2>> = matrix
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let mut r = row.clone();
            r.push(b.clone());
            r
        })
        .collect();
    let ech = eliminate(rows, n);
    if ech.free_cols.is_empty() {
        // Full rank: back-substitute.
        let mut x = vec![RationalFunction2::zero(); n];
        for &(pr, pc) in ech.pivots.iter().rev() {
            let mut acc = ech.rows[pr][n].clone();
            for j in pc + 1..n {
                if !ech.rows[pr][j].is_zero() && !x[j].is_zero() {
                    acc = acc.sub(&ech.rows[pr][j].mul(&x[j]));
                }
            }
            x[pc] = acc.div(&ech.rows[pr][pc]).expect("pivot is nonzero");
        }
        LinearSolution::Unique(x)
    } else {
        // Rank deficient: exhibit a kernel vector through the first free
        // column (set it to one, other free columns to zero).
        let fc = ech.free_cols[0];
        let mut x = vec![RationalFunction2::zero(); n];
        x[fc] = RationalFunction2::one();
        for &(pr, pc) in ech.pivots.iter().rev() {
            if pc > fc {
                continue;
            }
            let mut acc = RationalFunction2::zero();
            for j in pc + 1..n {
                if !ech.rows[pr][j].is_zero() && !x[j].is_zero() {
                    acc = acc.add(&ech.rows[pr][j].mul(&x[j]));
                }
            }
            x[pc] = acc.neg().div(&ech.rows[pr][pc]).expect("pivot is nonzero");
        }
        LinearSolution::Singular { kernel: x }
    }
}

/// Rank of a (possibly non-square) matrix over the fraction field.
pub fn rank(matrix: &[Vec<RationalFunction2>]) -> usize {
    if matrix.is_empty() {
        return 0;
    }
    let ncols = matrix[0].len();
    assert!(matrix.iter().all(|row| row.len() == ncols));
    eliminate(matrix.to_vec(), ncols).pivots.len()
}
