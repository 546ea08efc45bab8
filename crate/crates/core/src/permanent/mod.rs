//! Dense square matrices over any [`Ring`], permanents and determinants.
//!
//! [`per`] dispatches through [`Ring::permanent`], so integer, rational and
//! cyclotomic matrices use their specialised Ryser kernels while every other
//! ring uses the generic one. All kernels share the same deterministic
//! subset partition (see [`ryser`]).

mod det;
mod ryser;

pub use det::{det_divfree, det_field};
pub use ryser::{per_cyclotomic, per_integer, per_rational, per_ryser, MAX_RYSER};

use crate::error::{invalid, Error, Result};
use crate::ring::Ring;

/// Largest size accepted by the factorial-time oracle.
pub const MAX_NAIVE: usize = 9;

/// A dense `n x n` matrix over a ring instance, stored row-major.
#[derive(Clone, Debug)]
pub struct Mat<R: Ring> {
    ring: R,
    n: usize,
    entries: Vec<R::Elem>,
}

impl<R: Ring> Mat<R> {
    pub fn new(ring: R, n: usize, entries: Vec<R::Elem>) -> Result<Self> {
        if entries.len() != n * n {
            return invalid(format!(
                "matrix of size {n} needs {} entries, got {}",
                n * n,
                entries.len()
            ));
        }
        if let Some(bad) = entries.iter().find(|e| !ring.contains(e)) {
            return Err(Error::RingMismatch(format!(
                "entry {bad:?} does not belong to {}",
                ring.name()
            )));
        }
        Ok(Mat { ring, n, entries })
    }

    /// Builds the matrix with entry `f(j, k)` at row `j`, column `k` (0-based).
    pub fn from_fn(ring: R, n: usize, mut f: impl FnMut(usize, usize) -> R::Elem) -> Result<Self> {
        let mut entries = Vec::with_capacity(n * n);
        for j in 0..n {
            for k in 0..n {
                entries.push(f(j, k));
            }
        }
        Mat::new(ring, n, entries)
    }

    pub fn try_from_fn(
        ring: R,
        n: usize,
        mut f: impl FnMut(usize, usize) -> Result<R::Elem>,
    ) -> Result<Self> {
        let mut entries = Vec::with_capacity(n * n);
        for j in 0..n {
            for k in 0..n {
                entries.push(f(j, k)?);
            }
        }
        Mat::new(ring, n, entries)
    }

    pub fn identity(ring: R, n: usize) -> Self {
        let (zero, one) = (ring.zero(), ring.one());
        Mat::from_fn(
            ring,
            n,
            |j, k| if j == k { one.clone() } else { zero.clone() },
        )
        .expect("identity entries belong to the ring")
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, j: usize, k: usize) -> &R::Elem {
        &self.entries[j * self.n + k]
    }

    pub fn set(&mut self, j: usize, k: usize, v: R::Elem) {
        self.entries[j * self.n + k] = v;
    }

    pub fn entries(&self) -> &[R::Elem] {
        &self.entries
    }

    pub fn row(&self, j: usize) -> &[R::Elem] {
        &self.entries[j * self.n..(j + 1) * self.n]
    }

    pub fn transpose(&self) -> Self {
        let n = self.n;
        Mat::from_fn(self.ring.clone(), n, |j, k| self.get(k, j).clone()).expect("same ring")
    }

    /// `P A Q`: row `j` of the result is row `rows[j]` of `self`, column `k`
    /// is column `cols[k]`.
    pub fn permute(&self, rows: &[usize], cols: &[usize]) -> Result<Self> {
        if !is_permutation(rows, self.n) || !is_permutation(cols, self.n) {
            return invalid("permute: index lists must be permutations of 0..n");
        }
        Mat::from_fn(self.ring.clone(), self.n, |j, k| {
            self.get(rows[j], cols[k]).clone()
        })
    }

    pub fn map<S: Ring>(&self, ring: S, f: impl Fn(&R::Elem) -> S::Elem) -> Result<Mat<S>> {
        Mat::new(ring, self.n, self.entries.iter().map(f).collect())
    }

    /// Entrywise equality under the ring's notion of equality.
    pub fn equals(&self, other: &Self) -> bool {
        self.n == other.n
            && self
                .entries
                .iter()
                .zip(&other.entries)
                .all(|(a, b)| self.ring.equal(a, b))
    }

    pub fn is_symmetric(&self) -> bool {
        self.equals(&self.transpose())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "size mismatch");
        let n = self.n;
        let r = &self.ring;
        Mat::from_fn(r.clone(), n, |j, k| {
            let mut acc = r.zero();
            for l in 0..n {
                r.add_assign(&mut acc, &r.mul(self.get(j, l), other.get(l, k)));
            }
            acc
        })
        .expect("same ring")
    }

    pub fn render(&self) -> String {
        let rows: Vec<String> = (0..self.n)
            .map(|j| {
                let cells: Vec<String> = self.row(j).iter().map(|e| self.ring.render(e)).collect();
                format!("[{}]", cells.join(", "))
            })
            .collect();
        format!("[{}]", rows.join(", "))
    }
}

fn is_permutation(idx: &[usize], n: usize) -> bool {
    let mut seen = vec![false; n];
    idx.len() == n
        && idx
            .iter()
            .all(|&i| i < n && !std::mem::replace(&mut seen[i], true))
}

/// Permanent via the ring's preferred exact kernel.
pub fn per<R: Ring>(m: &Mat<R>) -> Result<R::Elem> {
    m.ring().permanent(m)
}

/// The permanent as the literal sum over all `n!` permutations.
pub fn per_naive<R: Ring>(m: &Mat<R>) -> Result<R::Elem> {
    let n = m.n();
    if n == 0 {
        return invalid("permanent of an empty matrix");
    }
    if n > MAX_NAIVE {
        return Err(Error::SizeLimit { n, max: MAX_NAIVE });
    }
    let r = m.ring();
    let mut total = r.zero();
    for_each_permutation(n, |tau, _| {
        let mut prod = r.one();
        for (j, &k) in tau.iter().enumerate() {
            prod = r.mul(&prod, m.get(j, k));
        }
        r.add_assign(&mut total, &prod);
    });
    Ok(total)
}

/// Calls `f(tau, sign)` for every permutation of `0..n` (Heap's algorithm),
/// where `sign` is `+1` or `-1`.
pub fn for_each_permutation(n: usize, mut f: impl FnMut(&[usize], i32)) {
    let mut tau: Vec<usize> = (0..n).collect();
    let mut c = vec![0usize; n];
    let mut sign = 1;
    f(&tau, sign);
    let mut i = 1;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                tau.swap(0, i);
            } else {
                tau.swap(c[i], i);
            }
            sign = -sign;
            f(&tau, sign);
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

/// Copy of `m` with the diagonal replaced by zero, so that the permanent and
/// determinant only see fixed-point-free permutations.
pub fn zero_diagonal<R: Ring>(m: &Mat<R>) -> Mat<R> {
    mask(m, |j, k, _| j == k)
}

/// Copy of `m` with every entry for which `forbidden(j, k, entry)` holds
/// replaced by zero (indices 0-based).
pub fn mask<R: Ring>(m: &Mat<R>, forbidden: impl Fn(usize, usize, &R::Elem) -> bool) -> Mat<R> {
    let r = m.ring();
    Mat::from_fn(r.clone(), m.n(), |j, k| {
        let e = m.get(j, k);
        if forbidden(j, k, e) {
            r.zero()
        } else {
            e.clone()
        }
    })
    .expect("same ring")
}
