use crate::error::{Error, Result};
use crate::ring::{is_prime, ModInt, ZMod};

/// A prime `p` together with an element of `F_p` of exact multiplicative order `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FqRoot {
    pub p: u64,
    pub order: u64,
    pub root: u64,
}

impl FqRoot {
    pub fn field(&self) -> ZMod {
        ZMod::new(self.p).expect("p is prime")
    }

    /// `root^e` with the exponent reduced modulo the order.
    pub fn pow(&self, e: i64) -> ModInt {
        let e = e.rem_euclid(self.order as i64) as u64;
        ModInt::new(self.root, self.p).pow(e)
    }
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn has_exact_order(x: ModInt, n: u64, factors: &[u64]) -> bool {
    x.pow(n).value() == 1 && factors.iter().all(|l| x.pow(n / l).value() != 1)
}

/// Smallest prime `p = 1 (mod n)` with `p <= bound`, and the first element of
/// exact order `n` among `g^((p-1)/n)` for `g = 2, 3, ...`.
///
/// The scan is deterministic so every run picks the same backend.
pub fn find_fq_root(n: u64, bound: u64) -> Result<FqRoot> {
    if n == 0 {
        return Err(Error::InvalidArgument("root order must be positive".into()));
    }
    let factors = prime_factors(n);
    let mut p = n + 1;
    while p <= bound {
        if is_prime(p) {
            if n == 1 {
                return Ok(FqRoot {
                    p,
                    order: 1,
                    root: 1,
                });
            }
            let cofactor = (p - 1) / n;
            for g in 2..p {
                let h = ModInt::new(g, p).pow(cofactor);
                if has_exact_order(h, n, &factors) {
                    return Ok(FqRoot {
                        p,
                        order: n,
                        root: h.value(),
                    });
                }
            }
        }
        p += n;
    }
    Err(Error::SearchExhausted { order: n, bound })
}
