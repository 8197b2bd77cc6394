//! Exact integer and rational linear algebra: Smith normal form, rank,
//! reduced row echelon form, kernel bases, and linear solves.
//!
//! Matrices are dense row-major `Vec<Vec<_>>`; everything here runs at desk
//! scale, so clarity wins over asymptotics.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Diagonal entries of the Smith normal form of an integer matrix, including
/// the zero entries up to `min(rows, cols)`. Nonzero entries are positive and
/// each divides the next.
pub fn smith_normal_form(mat: &[Vec<BigInt>]) -> Vec<BigInt> {
    let rows = mat.len();
    let cols = if rows == 0 { 0 } else { mat[0].len() };
    let mut a: Vec<Vec<BigInt>> = mat.to_vec();
    let n = rows.min(cols);
    let mut divisors = Vec::with_capacity(n);

    let mut t = 0;
    while t < n {
        // find a pivot of minimal absolute value in the remaining block
        let mut pivot: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if !a[i][j].is_zero() {
                    match &pivot {
                        Some((pi, pj)) if a[*pi][*pj].abs() <= a[i][j].abs() => {}
                        _ => pivot = Some((i, j)),
                    }
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }

        // clear row and column t by Euclidean steps
        loop {
            let mut dirty = false;
            for i in t + 1..rows {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = div_floor_nearest(&a[i][t], &a[t][t]);
                if !q.is_zero() {
                    for j in t..cols {
                        let s = &a[t][j] * &q;
                        a[i][j] -= s;
                    }
                }
                if !a[i][t].is_zero() {
                    a.swap(t, i);
                    dirty = true;
                }
            }
            for j in t + 1..cols {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = div_floor_nearest(&a[t][j], &a[t][t]);
                if !q.is_zero() {
                    for row in a.iter_mut().take(rows).skip(t) {
                        let s = &row[t] * &q;
                        row[j] -= s;
                    }
                }
                if !a[t][j].is_zero() {
                    for row in a.iter_mut() {
                        row.swap(t, j);
                    }
                    dirty = true;
                }
            }
            if !dirty {
                break;
            }
        }

        // ensure the pivot divides every later entry
        let mut fixed = true;
        'scan: for i in t + 1..rows {
            for j in t + 1..cols {
                if !(&a[i][j] % &a[t][t]).is_zero() {
                    for jj in t..cols {
                        let add = a[i][jj].clone();
                        a[t][jj] += add;
                    }
                    fixed = false;
                    break 'scan;
                }
            }
        }
        if fixed {
            divisors.push(a[t][t].abs());
            t += 1;
        }
    }
    while divisors.len() < n {
        divisors.push(BigInt::zero());
    }
    divisors
}

/// Quotient minimizing the remainder magnitude, used by the SNF reduction.
fn div_floor_nearest(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r) = a.div_rem(b);
    if &r.abs() * 2 > b.abs() {
        if (r.is_positive()) == (b.is_positive()) {
            q + 1
        } else {
            q - 1
        }
    } else {
        q
    }
}

/// Rank of an integer matrix over Q.
pub fn rank(mat: &[Vec<BigInt>]) -> usize {
    smith_normal_form(mat)
        .iter()
        .filter(|d| !d.is_zero())
        .count()
}

/// True when the nonzero SNF divisors are all 1 and there are `expected` of
/// them: the rows generate a direct summand of full expected rank.
pub fn is_unimodular_span(mat: &[Vec<BigInt>], expected: usize) -> bool {
    let d = smith_normal_form(mat);
    let nonzero: Vec<_> = d.iter().filter(|x| !x.is_zero()).collect();
    nonzero.len() == expected && nonzero.iter().all(|x| x.is_one())
}

/// Reduced row echelon form over Q, in place; returns pivot column indices.
pub fn rref(a: &mut [Vec<BigRational>]) -> Vec<usize> {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].clone();
        for j in c..cols {
            a[r][j] = &a[r][j] / &inv;
        }
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in c..cols {
                    let s = &a[r][j] * &f;
                    a[i][j] -= s;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Basis of `{x : M x = 0}` for a rational matrix `M` (columns = variables).
pub fn kernel_basis(mat: &[Vec<BigRational>]) -> Vec<Vec<BigRational>> {
    let cols = if mat.is_empty() { 0 } else { mat[0].len() };
    let mut a = mat.to_vec();
    let pivots = rref(&mut a);
    let mut basis = Vec::new();
    let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
    for free in 0..cols {
        if pivot_set.contains(&free) {
            continue;
        }
        let mut v = vec![BigRational::zero(); cols];
        v[free] = BigRational::one();
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = -a[row][free].clone();
        }
        basis.push(v);
    }
    basis
}

/// Solve `A x = b` over Q when `A` has full column rank (unique solution if
/// consistent). Returns `None` when inconsistent.
pub fn solve_full_column_rank(
    a: &[Vec<BigRational>],
    b: &[BigRational],
) -> Option<Vec<BigRational>> {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut aug: Vec<Vec<BigRational>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    // inconsistency: pivot in the augmented column
    if pivots.contains(&cols) {
        return None;
    }
    if pivots.len() < cols {
        // column-rank deficient; caller promised otherwise
        return None;
    }
    let mut x = vec![BigRational::zero(); cols];
    for (row, &pc) in pivots.iter().enumerate() {
        x[pc] = aug[row][cols].clone();
    }
    // verify exactly (cheap at this scale)
    for (row, rhs) in a.iter().zip(b) {
        let mut acc = BigRational::zero();
        for (c, coeff) in row.iter().enumerate() {
            acc += coeff * &x[c];
        }
        if &acc != rhs {
            return None;
        }
    }
    Some(x)
}

pub fn int_to_rational_matrix(mat: &[Vec<BigInt>]) -> Vec<Vec<BigRational>> {
    mat.iter()
        .map(|row| {
            row.iter()
                .map(|x| BigRational::from_integer(x.clone()))
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bi(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    #[test]
    fn snf_of_identity_like_block() {
        let d = smith_normal_form(&bi(&[&[1, 0], &[0, 1], &[-1, -1]]));
        assert_eq!(d, vec![BigInt::one(), BigInt::one()]);
    }

    #[test]
    fn snf_detects_index_two_sublattice() {
        let d = smith_normal_form(&bi(&[&[2, 0], &[0, 1]]));
        assert_eq!(d, vec![BigInt::one(), BigInt::from(2)]);
        let d = smith_normal_form(&bi(&[&[1, 0], &[1, 2]]));
        assert_eq!(d, vec![BigInt::one(), BigInt::from(2)]);
    }

    #[test]
    fn snf_divisibility_chain() {
        let d = smith_normal_form(&bi(&[&[2, 4, 4], &[-6, 6, 12], &[10, 4, 16]]));
        for w in d.windows(2) {
            if !w[1].is_zero() {
                assert!((&w[1] % &w[0]).is_zero(), "{d:?}");
            }
        }
        // known invariant factors of this classical example
        assert_eq!(d, vec![BigInt::from(2), BigInt::from(2), BigInt::from(156)]);
    }

    #[test]
    fn kernel_of_projective_plane_rays() {
        let m = int_to_rational_matrix(&bi(&[&[1, 0, -1], &[0, 1, -1]]));
        let k = kernel_basis(&m);
        assert_eq!(k.len(), 1);
        let v = &k[0];
        assert_eq!(v[0], v[2]);
        assert_eq!(v[1], v[2]);
    }

    #[test]
    fn solve_detects_inconsistency() {
        let a = int_to_rational_matrix(&bi(&[&[1, 0], &[0, 1], &[1, 1]]));
        let b: Vec<BigRational> = [1, 1, 3]
            .iter()
            .map(|&x| BigRational::from_integer(BigInt::from(x)))
            .collect();
        assert!(solve_full_column_rank(&a, &b).is_none());
        let b2: Vec<BigRational> = [1, 1, 2]
            .iter()
            .map(|&x| BigRational::from_integer(BigInt::from(x)))
            .collect();
        let x = solve_full_column_rank(&a, &b2).unwrap();
        assert_eq!(x[0], BigRational::one());
        assert_eq!(x[1], BigRational::one());
    }
}
