use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{rat_int, Rat};
use crate::error::{invalid, Result};

/// Jacobi symbol `(a/n)` for odd positive `n`, by quadratic reciprocity.
pub fn jacobi(a: i64, n: i64) -> Result<i32> {
    if n <= 0 || n % 2 == 0 {
        return invalid(format!("jacobi: modulus {n} must be odd and positive"));
    }
    let mut a = a.rem_euclid(n);
    let mut n = n;
    let mut sign = 1;
    while a != 0 {
        while a % 2 == 0 {
            a /= 2;
            if n % 8 == 3 || n % 8 == 5 {
                sign = -sign;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            sign = -sign;
        }
        a %= n;
    }
    Ok(if n == 1 { sign } else { 0 })
}

/// `(-1)^#{1 <= k <= (n-1)/2 : (k a mod n) > n/2}`, the counting form of the
/// Jacobi symbol for `gcd(a, n) = 1`.
pub fn jacobi_by_count(a: i64, n: i64) -> Result<i32> {
    if n <= 0 || n % 2 == 0 {
        return invalid(format!("jacobi: modulus {n} must be odd and positive"));
    }
    let flips = (1..=(n - 1) / 2)
        .filter(|k| 2 * (k * a).rem_euclid(n) > n)
        .count();
    Ok(if flips % 2 == 0 { 1 } else { -1 })
}

/// Trial division; inputs are desk-scale.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

pub fn factorial(n: i64) -> Result<BigInt> {
    if n < 0 {
        return invalid(format!("factorial of negative {n}"));
    }
    Ok((2..=n).fold(BigInt::one(), |acc, k| acc * k))
}

/// `n!! = n (n-2) (n-4) ...`, with `0!! = (-1)!! = 1`.
pub fn double_factorial(n: i64) -> Result<BigInt> {
    if n < -1 {
        return invalid(format!("double factorial of {n}"));
    }
    let mut acc = BigInt::one();
    let mut k = n;
    while k > 1 {
        acc *= k;
        k -= 2;
    }
    Ok(acc)
}

pub fn binomial(n: i64, k: i64) -> Result<BigInt> {
    if n < 0 || k < 0 || k > n {
        return invalid(format!("binomial({n}, {k}) outside 0 <= k <= n"));
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    Ok(acc)
}

/// Bernoulli number `B_k` with `B_1 = -1/2`, from
/// `sum_{j=0}^{k} C(k+1, j) B_j = 0`.
pub fn bernoulli(k: u32) -> Rat {
    let mut table: Vec<Rat> = Vec::with_capacity(k as usize + 1);
    table.push(rat_int(1));
    for m in 1..=k as i64 {
        let mut s = Rat::zero();
        for (j, b) in table.iter().enumerate() {
            let c = binomial(m + 1, j as i64).expect("j <= m");
            s += Rat::from_integer(c) * b;
        }
        table.push(-s / rat_int(m + 1));
    }
    table.pop().expect("table is nonempty")
}
