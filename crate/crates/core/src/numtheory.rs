//! Small integer helpers: primality, factorisation, totient, Gaussian binomials.

pub use num_integer::gcd;

pub fn is_prime(x: u64) -> bool {
    if x < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= x {
        if x.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime divisors of `x` in increasing order.
pub fn prime_factors(mut x: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= x {
        if x.is_multiple_of(d) {
            out.push(d);
            while x.is_multiple_of(d) {
                x /= d;
            }
        }
        d += 1;
    }
    if x > 1 {
        out.push(x);
    }
    out
}

pub fn euler_phi(x: u64) -> u64 {
    prime_factors(x)
        .into_iter()
        .fold(x, |acc, r| acc / r * (r - 1))
}

/// Writes `q` as `p^h` with `p` prime.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    let f = prime_factors(q);
    if f.len() != 1 {
        return None;
    }
    let p = f[0];
    let mut h = 0;
    let mut r = q;
    while r > 1 {
        r /= p;
        h += 1;
    }
    Some((p, h))
}

/// Number of `d`-dimensional subspaces of a `k`-dimensional space over a
/// field with `field_order` elements.
pub fn gaussian_binomial(field_order: u128, k: usize, d: usize) -> u128 {
    if d > k {
        return 0;
    }
    let mut num = 1u128;
    let mut den = 1u128;
    for i in 0..d {
        num *= field_order.pow((k - i) as u32) - 1;
        den *= field_order.pow((i + 1) as u32) - 1;
    }
    num / den
}
