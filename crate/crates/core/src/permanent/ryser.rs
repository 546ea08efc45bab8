//! Ryser's formula walked in Gray-code order.
//!
//! `per(A) = sum over nonempty column sets S of (-1)^(n-|S|) prod_j sum_{k in S} a_jk`.
//! Subset `i` (for `1 <= i < 2^n`) is the Gray code `i ^ (i >> 1)`; moving from
//! `i - 1` to `i` toggles column `trailing_zeros(i)`, so each step updates the
//! row sums with one column.
//!
//! The index range is cut into contiguous blocks whose count depends only on
//! `n`. Each block rebuilds its row sums from its first subset and walks
//! forward, and block totals are combined in index order. The result is
//! therefore identical for every thread count.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;

use super::Mat;
use crate::cyclotomic::{Cyc, CycField};
use crate::error::{invalid, Error, Result};
use crate::ring::{Integers, Rat, Rationals, Ring};

/// Largest size accepted by the Ryser kernels.
pub const MAX_RYSER: usize = 30;

const MAX_BLOCKS: u64 = 256;
const MIN_BLOCK_LEN: u64 = 64;

/// One exact Ryser evaluation strategy. `None` from [`RyserKernel::accumulate`]
/// aborts the walk (a fixed-width fast path overflowed).
trait RyserKernel: Sync {
    type Sums;
    type Acc: Send;

    fn n(&self) -> usize;
    fn sums_for(&self, subset: u64) -> Self::Sums;
    fn toggle(&self, sums: &mut Self::Sums, col: usize, added: bool);
    fn zero(&self) -> Self::Acc;
    fn accumulate(&self, sums: &Self::Sums, acc: &mut Self::Acc, negative: bool) -> Option<()>;
    fn combine(&self, a: Self::Acc, b: Self::Acc) -> Self::Acc;
}

fn check_size(n: usize) -> Result<()> {
    if n == 0 {
        return invalid("permanent of an empty matrix");
    }
    if n > MAX_RYSER {
        return Err(Error::SizeLimit { n, max: MAX_RYSER });
    }
    Ok(())
}

fn walk_block<K: RyserKernel>(k: &K, start: u64, end: u64) -> Option<K::Acc> {
    let n = k.n() as u32;
    let mut gray = start ^ (start >> 1);
    let mut sums = k.sums_for(gray);
    let mut acc = k.zero();
    k.accumulate(&sums, &mut acc, (n + gray.count_ones()) % 2 == 1)?;
    for i in start + 1..end {
        let col = i.trailing_zeros();
        gray ^= 1 << col;
        k.toggle(&mut sums, col as usize, gray >> col & 1 == 1);
        k.accumulate(&sums, &mut acc, (n + gray.count_ones()) % 2 == 1)?;
    }
    Some(acc)
}

fn ryser_walk<K: RyserKernel>(k: &K) -> Option<K::Acc> {
    let total = (1u64 << k.n()) - 1;
    let blocks = (total / MIN_BLOCK_LEN).clamp(1, MAX_BLOCKS);
    let bounds = |b: u64| 1 + total * b / blocks;
    let parts: Vec<Option<K::Acc>> = (0..blocks)
        .into_par_iter()
        .map(|b| walk_block(k, bounds(b), bounds(b + 1)))
        .collect();
    let mut out = k.zero();
    for part in parts {
        out = k.combine(out, part?);
    }
    Some(out)
}

struct GenericKernel<'a, R: Ring> {
    m: &'a Mat<R>,
}

impl<R: Ring> RyserKernel for GenericKernel<'_, R> {
    type Sums = Vec<R::Elem>;
    type Acc = R::Elem;

    fn n(&self) -> usize {
        self.m.n()
    }
    fn sums_for(&self, subset: u64) -> Vec<R::Elem> {
        let r = self.m.ring();
        (0..self.n())
            .map(|j| {
                let mut s = r.zero();
                for k in (0..self.n()).filter(|k| subset >> k & 1 == 1) {
                    r.add_assign(&mut s, self.m.get(j, k));
                }
                s
            })
            .collect()
    }
    fn toggle(&self, sums: &mut Vec<R::Elem>, col: usize, added: bool) {
        let r = self.m.ring();
        for (j, s) in sums.iter_mut().enumerate() {
            if added {
                r.add_assign(s, self.m.get(j, col));
            } else {
                r.sub_assign(s, self.m.get(j, col));
            }
        }
    }
    fn zero(&self) -> R::Elem {
        self.m.ring().zero()
    }
    fn accumulate(&self, sums: &Vec<R::Elem>, acc: &mut R::Elem, negative: bool) -> Option<()> {
        let r = self.m.ring();
        let mut prod = sums[0].clone();
        for s in &sums[1..] {
            prod = r.mul(&prod, s);
        }
        if negative {
            r.sub_assign(acc, &prod);
        } else {
            r.add_assign(acc, &prod);
        }
        Some(())
    }
    fn combine(&self, a: R::Elem, b: R::Elem) -> R::Elem {
        self.m.ring().add(&a, &b)
    }
}

/// Generic Gray-code Ryser permanent over any ring.
pub fn per_ryser<R: Ring>(m: &Mat<R>) -> Result<R::Elem> {
    check_size(m.n())?;
    Ok(ryser_walk(&GenericKernel { m }).expect("generic kernel never aborts"))
}

/// Running integer sum kept in an `i128` and spilled into a `BigInt` on overflow.
#[derive(Clone, Debug, Default)]
struct WideSum {
    small: i128,
    big: BigInt,
}

impl WideSum {
    fn add_small(&mut self, v: i128) {
        match self.small.checked_add(v) {
            Some(s) => self.small = s,
            None => {
                self.big += self.small;
                self.small = v;
            }
        }
    }

    fn add_big(&mut self, v: BigInt) {
        self.big += v;
    }

    fn total(self) -> BigInt {
        self.big + self.small
    }
}

struct IntegerKernel {
    n: usize,
    cells: Vec<i64>,
}

impl RyserKernel for IntegerKernel {
    type Sums = Vec<i128>;
    type Acc = WideSum;

    fn n(&self) -> usize {
        self.n
    }
    fn sums_for(&self, subset: u64) -> Vec<i128> {
        (0..self.n)
            .map(|j| {
                (0..self.n)
                    .filter(|k| subset >> k & 1 == 1)
                    .map(|k| self.cells[j * self.n + k] as i128)
                    .sum()
            })
            .collect()
    }
    fn toggle(&self, sums: &mut Vec<i128>, col: usize, added: bool) {
        for (j, s) in sums.iter_mut().enumerate() {
            let v = self.cells[j * self.n + col] as i128;
            if added {
                *s += v;
            } else {
                *s -= v;
            }
        }
    }
    fn zero(&self) -> WideSum {
        WideSum::default()
    }
    fn accumulate(&self, sums: &Vec<i128>, acc: &mut WideSum, negative: bool) -> Option<()> {
        if sums.contains(&0) {
            return Some(());
        }
        // multiply in i128 while it fits, folding full chunks into a BigInt
        let mut chunk: i128 = if negative { -1 } else { 1 };
        let mut big: Option<BigInt> = None;
        for &s in sums {
            match chunk.checked_mul(s) {
                Some(c) => chunk = c,
                None => {
                    big = Some(match big {
                        Some(b) => b * chunk,
                        None => BigInt::from(chunk),
                    });
                    chunk = s;
                }
            }
        }
        match big {
            None => acc.add_small(chunk),
            Some(b) => acc.add_big(b * chunk),
        }
        Some(())
    }
    fn combine(&self, mut a: WideSum, b: WideSum) -> WideSum {
        a.add_big(b.total());
        a
    }
}

/// Permanent of an integer matrix. Entries that fit in `i64` take the
/// fixed-width fast path; anything larger falls back to the generic kernel.
pub fn per_integer(m: &Mat<Integers>) -> Result<BigInt> {
    check_size(m.n())?;
    let cells: Option<Vec<i64>> = m.entries().iter().map(ToPrimitive::to_i64).collect();
    match cells {
        Some(cells) => {
            let k = IntegerKernel { n: m.n(), cells };
            Ok(ryser_walk(&k).expect("integer kernel never aborts").total())
        }
        None => per_ryser(m),
    }
}

/// Permanent of a rational matrix: every row is scaled by the lcm of its
/// denominators, the integer permanent is taken, and the scaling divided out.
pub fn per_rational(m: &Mat<Rationals>) -> Result<Rat> {
    check_size(m.n())?;
    let n = m.n();
    let mut scale = BigInt::one();
    let mut cells = Vec::with_capacity(n * n);
    for j in 0..n {
        let l = m
            .row(j)
            .iter()
            .fold(BigInt::one(), |acc, e| acc.lcm(e.denom()));
        cells.extend(m.row(j).iter().map(|e| e.numer() * (&l / e.denom())));
        scale *= l;
    }
    let im = Mat::new(Integers, n, cells)?;
    Ok(Rat::new(per_integer(&im)?, scale))
}

/// Row sums and products in `Z[x]/(x^m - 1)` with `i128` coefficients.
struct CyclicKernel {
    n: usize,
    m: usize,
    /// `cells[(j * n + k) * m + e]`: coefficient of `x^e` in the scaled entry `(j, k)`.
    cells: Vec<i64>,
}

#[derive(Clone, Debug)]
struct CyclicAcc {
    small: Vec<i128>,
    big: Vec<BigInt>,
}

impl CyclicAcc {
    fn add_small(&mut self, v: &[i128]) {
        for (e, &x) in v.iter().enumerate() {
            match self.small[e].checked_add(x) {
                Some(s) => self.small[e] = s,
                None => {
                    self.big[e] += self.small[e];
                    self.small[e] = x;
                }
            }
        }
    }

    fn add_big(&mut self, v: &[BigInt]) {
        for (e, x) in v.iter().enumerate() {
            self.big[e] += x;
        }
    }

    fn total(self) -> Vec<BigInt> {
        self.big
            .into_iter()
            .zip(self.small)
            .map(|(b, s)| b + s)
            .collect()
    }
}

impl CyclicKernel {
    fn cell(&self, j: usize, k: usize) -> &[i64] {
        let start = (j * self.n + k) * self.m;
        &self.cells[start..start + self.m]
    }

    fn mul_small(&self, a: &[i128], b: &[i128]) -> Option<Vec<i128>> {
        let m = self.m;
        let mut out = vec![0i128; m];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                if y == 0 {
                    continue;
                }
                let k = if i + j >= m { i + j - m } else { i + j };
                out[k] = out[k].checked_add(x.checked_mul(y)?)?;
            }
        }
        Some(out)
    }

    fn product_small(&self, sums: &[Vec<i128>]) -> Option<Vec<i128>> {
        let mut prod = sums[0].clone();
        for s in &sums[1..] {
            prod = self.mul_small(&prod, s)?;
        }
        Some(prod)
    }

    fn product_big(&self, sums: &[Vec<i128>]) -> Vec<BigInt> {
        let m = self.m;
        let mut prod: Vec<BigInt> = sums[0].iter().map(|&x| BigInt::from(x)).collect();
        for s in &sums[1..] {
            let mut out = vec![BigInt::zero(); m];
            for (i, x) in prod.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                for (j, &y) in s.iter().enumerate() {
                    if y != 0 {
                        out[(i + j) % m] += x * y;
                    }
                }
            }
            prod = out;
        }
        prod
    }
}

impl RyserKernel for CyclicKernel {
    type Sums = Vec<Vec<i128>>;
    type Acc = CyclicAcc;

    fn n(&self) -> usize {
        self.n
    }
    fn sums_for(&self, subset: u64) -> Vec<Vec<i128>> {
        (0..self.n)
            .map(|j| {
                let mut s = vec![0i128; self.m];
                for k in (0..self.n).filter(|k| subset >> k & 1 == 1) {
                    for (e, &c) in self.cell(j, k).iter().enumerate() {
                        s[e] += c as i128;
                    }
                }
                s
            })
            .collect()
    }
    fn toggle(&self, sums: &mut Vec<Vec<i128>>, col: usize, added: bool) {
        for (j, s) in sums.iter_mut().enumerate() {
            for (e, &c) in self.cell(j, col).iter().enumerate() {
                if added {
                    s[e] += c as i128;
                } else {
                    s[e] -= c as i128;
                }
            }
        }
    }
    fn zero(&self) -> CyclicAcc {
        CyclicAcc {
            small: vec![0; self.m],
            big: vec![BigInt::zero(); self.m],
        }
    }
    fn accumulate(&self, sums: &Vec<Vec<i128>>, acc: &mut CyclicAcc, negative: bool) -> Option<()> {
        match self.product_small(sums) {
            Some(mut p) => {
                if negative {
                    p.iter_mut().for_each(|x| *x = -*x);
                }
                acc.add_small(&p);
            }
            None => {
                let mut p = self.product_big(sums);
                if negative {
                    p.iter_mut().for_each(|x| *x = -&*x);
                }
                acc.add_big(&p);
            }
        }
        Some(())
    }
    fn combine(&self, mut a: CyclicAcc, b: CyclicAcc) -> CyclicAcc {
        a.add_big(&b.total());
        a
    }
}

/// Permanent over `Q(zeta_m)`.
///
/// Each row is scaled by the lcm of the coefficient denominators of its
/// entries; the permanent of the scaled matrix is computed in `Z[x]/(x^m - 1)`
/// with `i128` coefficients (products that overflow are redone with `BigInt`),
/// and mapped back to `Q(zeta_m)`.
pub fn per_cyclotomic(mat: &Mat<CycField>) -> Result<Cyc> {
    check_size(mat.n())?;
    let n = mat.n();
    let m = mat.ring().order();
    let mut scale = BigInt::one();
    let mut cells = Vec::with_capacity(n * n * m);
    for j in 0..n {
        let l = mat
            .row(j)
            .iter()
            .fold(BigInt::one(), |acc, e| acc.lcm(&e.denominator_lcm()));
        for e in mat.row(j) {
            for c in e.coeffs() {
                match (c.numer() * (&l / c.denom())).to_i64() {
                    Some(v) => cells.push(v),
                    None => return per_ryser(mat),
                }
            }
        }
        scale *= l;
    }
    let k = CyclicKernel { n, m, cells };
    let total = ryser_walk(&k).expect("cyclic kernel never aborts").total();
    let coeffs: Vec<Rat> = total
        .into_iter()
        .map(|c| Rat::new(c, scale.clone()))
        .collect();
    Ok(Cyc::from_coeffs(m, &coeffs))
}
