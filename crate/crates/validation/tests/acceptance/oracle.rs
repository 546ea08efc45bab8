//! Reference computations written independently of the library:
//! textbook Ryser in floating point, over i128 and modulo m, a floating
//! determinant, and Bernoulli numbers by the Akiyama-Tanigawa recurrence.

use arithper::ring::Rat;
use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Zero};

/// Permanent by Ryser's formula over any numeric type, Gray-code order.
pub fn ryser<T>(n: usize, a: &[T]) -> T
where
    T: Copy + Zero + One + std::ops::Sub<Output = T> + std::ops::Neg<Output = T>,
{
    if n == 0 {
        return T::one();
    }
    let mut sums = vec![T::zero(); n];
    let mut total = T::zero();
    let mut gray = 0usize;
    for step in 1usize..1 << n {
        let bit = step.trailing_zeros() as usize;
        gray ^= 1 << bit;
        let adding = gray & (1 << bit) != 0;
        for (i, s) in sums.iter_mut().enumerate() {
            *s = if adding {
                *s + a[i * n + bit]
            } else {
                *s - a[i * n + bit]
            };
        }
        let prod = sums.iter().fold(T::one(), |acc, &s| acc * s);
        // sign (-1)^(n - |S|)
        if (n - gray.count_ones() as usize).is_multiple_of(2) {
            total = total + prod;
        } else {
            total = total - prod;
        }
    }
    total
}

pub fn per_f64(n: usize, f: impl Fn(usize, usize) -> f64) -> f64 {
    ryser(n, &grid(n, f))
}

pub fn per_c64(n: usize, f: impl Fn(usize, usize) -> Complex64) -> Complex64 {
    ryser(n, &grid(n, f))
}

pub fn per_i128(n: usize, f: impl Fn(usize, usize) -> i128) -> i128 {
    ryser(n, &grid(n, f))
}

fn grid<T>(n: usize, f: impl Fn(usize, usize) -> T) -> Vec<T> {
    (0..n * n).map(|i| f(i / n, i % n)).collect()
}

/// Permanent modulo `m` (`m < 2^31`) with entries already reduced.
pub fn per_mod(n: usize, m: u64, f: impl Fn(usize, usize) -> u64) -> u64 {
    let a = grid(n, |i, j| f(i, j) % m);
    if n == 0 {
        return 1 % m;
    }
    let mut sums = vec![0u64; n];
    let mut total = 0u64;
    let mut gray = 0usize;
    for step in 1usize..1 << n {
        let bit = step.trailing_zeros() as usize;
        gray ^= 1 << bit;
        let adding = gray & (1 << bit) != 0;
        for (i, s) in sums.iter_mut().enumerate() {
            let v = a[i * n + bit];
            *s = if adding {
                (*s + v) % m
            } else {
                (*s + m - v) % m
            };
        }
        let prod = sums.iter().fold(1u64, |acc, &s| acc * s % m);
        if (n - gray.count_ones() as usize).is_multiple_of(2) {
            total = (total + prod) % m;
        } else {
            total = (total + m - prod) % m;
        }
    }
    total
}

pub fn det_f64(n: usize, f: impl Fn(usize, usize) -> f64) -> f64 {
    let mut a = grid(n, f);
    let mut det = 1.0;
    for c in 0..n {
        let pivot = (c..n)
            .max_by(|&x, &y| a[x * n + c].abs().total_cmp(&a[y * n + c].abs()))
            .unwrap();
        if a[pivot * n + c] == 0.0 {
            return 0.0;
        }
        if pivot != c {
            for k in 0..n {
                a.swap(pivot * n + k, c * n + k);
            }
            det = -det;
        }
        det *= a[c * n + c];
        for r in c + 1..n {
            let factor = a[r * n + c] / a[c * n + c];
            for k in c..n {
                a[r * n + k] -= factor * a[c * n + k];
            }
        }
    }
    det
}

pub fn mod_pow(b: u64, mut e: u64, m: u64) -> u64 {
    let mut b = b % m;
    let mut r = 1 % m;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    r
}

/// Inverse modulo a prime power `m = p^k` (`a` coprime to `p`), by Euler's theorem.
pub fn mod_inv(a: u64, m: u64, p: u64) -> u64 {
    let phi = m / p * (p - 1);
    mod_pow(a, phi - 1, m)
}

pub fn reduce(v: i128, m: u64) -> u64 {
    v.rem_euclid(m as i128) as u64
}

/// Reduces a rational with denominator prime to `p` modulo `m = p^k`.
pub fn reduce_rat(r: &Rat, m: u64, p: u64) -> u64 {
    let mb = BigInt::from(m);
    let num = ((r.numer() % &mb) + &mb) % &mb;
    let den = ((r.denom() % &mb) + &mb) % &mb;
    let num: u64 = num.try_into().unwrap();
    let den: u64 = den.try_into().unwrap();
    num * mod_inv(den, m, p) % m
}

/// Legendre symbol by Euler's criterion.
pub fn legendre(a: i64, p: u64) -> i64 {
    let r = mod_pow(a.rem_euclid(p as i64) as u64, (p - 1) / 2, p);
    match r {
        0 => 0,
        1 => 1,
        _ => -1,
    }
}

pub fn is_prime(n: u64) -> bool {
    n >= 2
        && (2..)
            .take_while(|d| d * d <= n)
            .all(|d| !n.is_multiple_of(d))
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

pub fn double_factorial(n: u64) -> BigInt {
    (1..=n)
        .rev()
        .step_by(2)
        .fold(BigInt::one(), |acc, k| acc * k)
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// `B_k` with `B_1 = +1/2`, by the Akiyama-Tanigawa algorithm.
pub fn bernoulli_plus(k: usize) -> Rat {
    let mut a: Vec<Rat> = (0..=k)
        .map(|m| Rat::new(BigInt::one(), BigInt::from(m + 1)))
        .collect();
    for m in (1..=k).rev() {
        for j in 0..m {
            a[j] = (&a[j] - &a[j + 1]) * Rat::from_integer(BigInt::from(j + 1));
        }
    }
    a[0].clone()
}

/// A primitive `n`-th root of unity modulo the prime `p` (`n | p - 1`).
pub fn root_of_unity(n: u64, p: u64) -> u64 {
    let factors: Vec<u64> = (2..=n)
        .filter(|q| n.is_multiple_of(*q) && is_prime(*q))
        .collect();
    (2..p)
        .map(|g| mod_pow(g, (p - 1) / n, p))
        .find(|&w| factors.iter().all(|q| mod_pow(w, n / q, p) != 1))
        .unwrap_or(1)
}

pub fn close(a: f64, b: f64, rel: f64) -> bool {
    (a - b).abs() <= rel * a.abs().max(b.abs()).max(1.0)
}
