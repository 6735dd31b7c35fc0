//! Exact linear algebra over `Q` and over `Q[q, q^-1]`.
//!
//! Matrices are dense `Vec<Vec<_>>` in row-major order. Over the Laurent ring
//! the elimination is fraction-free: row operations multiply by pivots and
//! then strip the content (polynomial gcd) of the row.

use num_traits::{One, Zero};

use crate::qcoeff::{LaurentPoly, Rational};

/// Reduced row echelon form over `Q`; returns the pivot columns.
pub fn rref(mat: &mut [Vec<Rational>]) -> Vec<usize> {
    let rows = mat.len();
    let cols = mat.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !mat[i][c].is_zero()) else {
            continue;
        };
        mat.swap(r, p);
        let inv = mat[r][c].recip();
        for x in mat[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = mat[r].clone();
        for (i, row) in mat.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                *x -= &f * p;
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Rank over `Q`.
pub fn rank(mat: &[Vec<Rational>]) -> usize {
    let mut m = mat.to_vec();
    rref(&mut m).len()
}

/// Basis of the right kernel `{v : M v = 0}` over `Q`, one vector per free column.
pub fn kernel(mat: &[Vec<Rational>], cols: usize) -> Vec<Vec<Rational>> {
    let mut m = mat.to_vec();
    let pivots = rref(&mut m);
    let mut out = Vec::new();
    for f in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![Rational::zero(); cols];
        v[f] = Rational::one();
        for (k, &pc) in pivots.iter().enumerate() {
            v[pc] = -m[k][f].clone();
        }
        out.push(v);
    }
    out
}

/// Whether `v` lies in the row span of `rows` over `Q`.
pub fn in_span(rows: &[Vec<Rational>], v: &[Rational]) -> bool {
    if v.iter().all(Zero::is_zero) {
        return true;
    }
    let r = rank(rows);
    let mut ext = rows.to_vec();
    ext.push(v.to_vec());
    rank(&ext) == r
}

fn row_content(row: &[LaurentPoly]) -> LaurentPoly {
    row.iter()
        .filter(|x| !x.is_zero())
        .fold(LaurentPoly::zero(), |g, x| g.gcd(x))
}

/// Divides a vector by the gcd of its entries and fixes the unit so the first
/// nonzero entry has lowest exponent 0 and leading coefficient 1.
pub fn normalize_poly_vector(v: &mut [LaurentPoly]) {
    let g = row_content(v);
    if g.is_zero() {
        return;
    }
    for x in v.iter_mut() {
        *x = x.div_exact(&g).expect("content divides every entry");
    }
    if let Some(first) = v.iter().find(|x| !x.is_zero()).cloned() {
        let shift = -first.min_exp().unwrap_or(0);
        let s = first.leading_coeff().cloned().unwrap_or_else(Rational::one).recip();
        for x in v.iter_mut() {
            *x = x.shift(shift).scale(&s);
        }
    }
}

/// Fraction-free Gauss-Jordan elimination over `Q[q, q^-1]`.
///
/// On return every pivot column is zero outside its pivot row. Returns
/// `(pivot_row_index, pivot_column)` pairs in order.
pub fn poly_eliminate(mat: &mut [Vec<LaurentPoly>]) -> Vec<(usize, usize)> {
    let rows = mat.len();
    let cols = mat.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let choice = (r..rows)
            .filter(|&i| !mat[i][c].is_zero())
            .min_by_key(|&i| mat[i][c].terms().len());
        let Some(p) = choice else { continue };
        mat.swap(r, p);
        let pivot_row = mat[r].clone();
        let pv = pivot_row[c].clone();
        for i in 0..rows {
            if i == r || mat[i][c].is_zero() {
                continue;
            }
            let f = mat[i][c].clone();
            let row = &mut mat[i];
            for (x, pr) in row.iter_mut().zip(&pivot_row) {
                *x = &(&pv * &*x) - &(&f * pr);
            }
            normalize_row(row);
        }
        pivots.push((r, c));
        r += 1;
    }
    pivots
}

fn normalize_row(row: &mut [LaurentPoly]) {
    let g = row_content(row);
    if g.is_zero() || g.is_one() {
        return;
    }
    for x in row.iter_mut() {
        *x = x.div_exact(&g).expect("content divides every entry");
    }
}

/// Rank over the fraction field `Q(q)`.
pub fn poly_rank(mat: &[Vec<LaurentPoly>]) -> usize {
    let mut m = mat.to_vec();
    poly_eliminate(&mut m).len()
}

/// Basis of the right kernel over `Q(q)`, with entries in `Q[q, q^-1]`.
///
/// There is one vector per free column `f`; it has a nonzero entry at `f`,
/// zeros at the other free columns, and is normalised by
/// [`normalize_poly_vector`].
pub fn poly_kernel(mat: &[Vec<LaurentPoly>], cols: usize) -> Vec<Vec<LaurentPoly>> {
    let mut m = mat.to_vec();
    let pivots = poly_eliminate(&mut m);
    let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
    let mut lcm = LaurentPoly::one();
    for &(r, c) in &pivots {
        let p = &m[r][c];
        let g = lcm.gcd(p);
        lcm = (&lcm * p).div_exact(&g).expect("gcd divides the product");
    }
    let mut out = Vec::new();
    for f in (0..cols).filter(|c| !pivot_cols.contains(c)) {
        let mut v = vec![LaurentPoly::zero(); cols];
        v[f] = lcm.clone();
        for &(r, c) in &pivots {
            if m[r][f].is_zero() {
                continue;
            }
            let scale = lcm.div_exact(&m[r][c]).expect("pivot divides lcm");
            v[c] = -(&scale * &m[r][f]);
        }
        normalize_poly_vector(&mut v);
        out.push(v);
    }
    out
}

/// `M v` over `Q[q, q^-1]`.
pub fn poly_mat_vec(mat: &[Vec<LaurentPoly>], v: &[LaurentPoly]) -> Vec<LaurentPoly> {
    mat.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .fold(LaurentPoly::zero(), |acc, (a, b)| &acc + &(a * b))
        })
        .collect()
}
