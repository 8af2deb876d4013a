//! Dense polynomials over the prime field F_p, used to pick and check the
//! defining modulus of an extension field. Coefficients are stored constant
//! term first.

fn trim(a: &mut Vec<u32>) {
    while a.len() > 1 && *a.last().unwrap() == 0 {
        a.pop();
    }
    if a.is_empty() {
        a.push(0);
    }
}

fn is_zero(a: &[u32]) -> bool {
    a.iter().all(|&c| c == 0)
}

fn inv_mod(a: u32, p: u32) -> u32 {
    // Fermat; p is prime and a != 0.
    let mut base = a as u64 % p as u64;
    let mut e = p as u64 - 2;
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p as u64;
        }
        base = base * base % p as u64;
        e >>= 1;
    }
    acc as u32
}

/// Remainder of `a` modulo the nonzero polynomial `f`.
pub(crate) fn rem(a: &[u32], f: &[u32], p: u32) -> Vec<u32> {
    let mut r: Vec<u32> = a.to_vec();
    trim(&mut r);
    let mut f = f.to_vec();
    trim(&mut f);
    let df = f.len() - 1;
    let lead_inv = inv_mod(f[df], p) as u64;
    while r.len() > df && !is_zero(&r) {
        let dr = r.len() - 1;
        let c = r[dr] as u64 * lead_inv % p as u64;
        if c != 0 {
            let shift = dr - df;
            for (j, &fj) in f.iter().enumerate() {
                let sub = c * fj as u64 % p as u64;
                let v = (r[shift + j] as u64 + p as u64 - sub) % p as u64;
                r[shift + j] = v as u32;
            }
        }
        r.pop();
        trim(&mut r);
        if r.len() <= df {
            break;
        }
    }
    trim(&mut r);
    r
}

fn mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x as u64 * y as u64) % p as u64;
        }
    }
    out.into_iter().map(|c| c as u32).collect()
}

fn mulmod(a: &[u32], b: &[u32], f: &[u32], p: u32) -> Vec<u32> {
    rem(&mul(a, b, p), f, p)
}

fn powmod(a: &[u32], mut e: u64, f: &[u32], p: u32) -> Vec<u32> {
    let mut base = rem(a, f, p);
    let mut acc = vec![1u32];
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(&acc, &base, f, p);
        }
        base = mulmod(&base, &base, f, p);
        e >>= 1;
    }
    acc
}

fn sub(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let len = a.len().max(b.len());
    let mut out = Vec::with_capacity(len);
    for i in 0..len {
        let x = *a.get(i).unwrap_or(&0) as u64;
        let y = *b.get(i).unwrap_or(&0) as u64;
        out.push(((x + p as u64 - y) % p as u64) as u32);
    }
    trim(&mut out);
    out
}

pub(crate) fn gcd(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    while !is_zero(&y) {
        let r = rem(&x, &y, p);
        x = y;
        y = r;
    }
    x
}

/// X^(p^k) mod f.
fn x_pow_p_pow(k: u32, f: &[u32], p: u32) -> Vec<u32> {
    let mut r = rem(&[0, 1], f, p);
    for _ in 0..k {
        r = powmod(&r, p as u64, f, p);
    }
    r
}

/// Rabin's irreducibility test for a polynomial of degree >= 1 over F_p.
pub(crate) fn is_irreducible(f: &[u32], p: u32) -> bool {
    let mut f = f.to_vec();
    trim(&mut f);
    let deg = f.len() - 1;
    if deg == 0 {
        return false;
    }
    if deg == 1 {
        return true;
    }
    let x = vec![0u32, 1];
    let full = x_pow_p_pow(deg as u32, &f, p);
    if !is_zero(&sub(&full, &rem(&x, &f, p), p)) {
        return false;
    }
    for r in crate::numtheory::prime_factors(deg as u64) {
        let d = deg as u64 / r;
        let xp = x_pow_p_pow(d as u32, &f, p);
        let g = gcd(&sub(&xp, &x, p), &f, p);
        if g.len() > 1 {
            return false;
        }
    }
    true
}

/// Coefficients of the monic polynomial of degree `deg` whose lower
/// coefficients are the base-`p` digits of `code`.
pub(crate) fn monic_from_code(code: u64, deg: usize, p: u32) -> Vec<u32> {
    let mut out = Vec::with_capacity(deg + 1);
    let mut c = code;
    for _ in 0..deg {
        out.push((c % p as u64) as u32);
        c /= p as u64;
    }
    out.push(1);
    out
}

/// Lexicographically least monic irreducible polynomial of degree `deg >= 2`.
pub(crate) fn least_irreducible(deg: usize, p: u32) -> Vec<u32> {
    let mut code = 0u64;
    loop {
        let f = monic_from_code(code, deg, p);
        if is_irreducible(&f, p) {
            return f;
        }
        code += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn irreducibility_over_f2() {
        assert!(is_irreducible(&[1, 1, 0, 0, 1], 2)); // X^4+X+1
        assert!(!is_irreducible(&[1, 0, 0, 0, 1], 2)); // (X+1)^4
        assert!(is_irreducible(&[1, 1, 1, 1, 1], 2)); // 5th cyclotomic
        assert!(!is_irreducible(&[1, 0, 1, 0, 1], 2)); // (X^2+X+1)^2
        assert!(is_irreducible(&[1, 1, 1], 2));
    }

    #[test]
    fn least_irreducible_degree_four() {
        assert_eq!(least_irreducible(4, 2), vec![1, 1, 0, 0, 1]);
        assert_eq!(least_irreducible(8, 2), vec![1, 1, 0, 1, 1, 0, 0, 0, 1]);
    }

    #[test]
    fn least_irreducible_matches_trial_division() {
        // Trial division by every monic polynomial of degree 1..=deg/2.
        fn divides(g: &[u32], f: &[u32], p: u32) -> bool {
            is_zero(&rem(f, g, p))
        }
        for &(p, deg) in &[(2u32, 4usize), (2, 5), (3, 4), (3, 2), (5, 3)] {
            let mut code = 0u64;
            let found = loop {
                let f = monic_from_code(code, deg, p);
                let mut reducible = false;
                for d in 1..=deg / 2 {
                    for c in 0..(p as u64).pow(d as u32) {
                        if divides(&monic_from_code(c, d, p), &f, p) {
                            reducible = true;
                        }
                    }
                }
                if !reducible {
                    break f;
                }
                code += 1;
            };
            assert_eq!(least_irreducible(deg, p), found, "p={p} deg={deg}");
        }
    }
}
