use super::Mat;
use crate::error::{invalid, Error, Result};
use crate::ring::{Field, Ring};

/// Determinant using only ring addition and multiplication (Bird's iterated
/// product), valid over any commutative ring including `Z/p^2` and `Q[q, 1/q]`.
///
/// With `mu(X)` the matrix that keeps the strict upper triangle of `X`, zeroes
/// the lower one and puts `-(X_{i+1,i+1} + ... + X_{n,n})` on the diagonal,
/// iterating `X <- mu(X) A` from `X = A` for `n - 1` steps leaves
/// `(-1)^(n-1) det A` in the top-left corner.
pub fn det_divfree<R: Ring>(a: &Mat<R>) -> Result<R::Elem> {
    let n = a.n();
    if n == 0 {
        return invalid("determinant of an empty matrix");
    }
    let r = a.ring();
    let mut x = a.clone();
    for _ in 1..n {
        let mut mu = Mat::from_fn(r.clone(), n, |j, k| {
            if k > j {
                r.normalize(x.get(j, k).clone())
            } else {
                r.zero()
            }
        })?;
        let mut tail = r.zero();
        for i in (0..n).rev() {
            mu.set(i, i, r.neg(&tail));
            r.add_assign(&mut tail, x.get(i, i));
        }
        x = mu.mul(a);
    }
    let corner = x.get(0, 0).clone();
    Ok(r.normalize(if n.is_multiple_of(2) {
        r.neg(&corner)
    } else {
        corner
    }))
}

/// Determinant by Gaussian elimination with nonzero-pivot search.
pub fn det_field<F: Field>(a: &Mat<F>) -> Result<F::Elem> {
    let r = a.ring();
    if !r.is_field() {
        return Err(Error::UnsupportedRing(r.name()));
    }
    let n = a.n();
    if n == 0 {
        return invalid("determinant of an empty matrix");
    }
    let mut rows: Vec<Vec<F::Elem>> = (0..n)
        .map(|j| a.row(j).iter().map(|e| r.normalize(e.clone())).collect())
        .collect();
    let mut det = r.one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&j| !r.is_zero(&rows[j][c])) else {
            return Ok(r.zero());
        };
        if p != c {
            rows.swap(p, c);
            det = r.neg(&det);
        }
        let pivot = rows[c][c].clone();
        det = r.normalize(r.mul(&det, &pivot));
        let inv = r.inv(&pivot)?;
        let (upper, lower) = rows.split_at_mut(c + 1);
        let prow = &upper[c];
        for row in lower.iter_mut() {
            if r.is_zero(&row[c]) {
                continue;
            }
            let factor = r.mul(&row[c], &inv);
            for k in c..n {
                let v = r.sub(&row[k], &r.mul(&factor, &prow[k]));
                row[k] = r.normalize(v);
            }
        }
    }
    Ok(det)
}
