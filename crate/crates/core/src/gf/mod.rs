//! Arithmetic in F_{q^n}, q = p^h, realised as F_p[X]/(m(X)) with a single
//! modulus of degree h·n. F_q is the fixed field of the q-Frobenius.
//!
//! Elements are plain `u32` codes: the coefficient vector of the residue
//! class, read as a base-p integer (constant term in the least significant
//! digit). For p = 2 this is the usual bitmask.

mod prime_poly;
mod upoly;

use std::fmt;
use std::sync::{Arc, OnceLock};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::numtheory::{gcd, is_prime, prime_factors};

pub use upoly::Poly;

/// Fields with at most this many elements get log/antilog tables.
const TABLE_LIMIT: u64 = 1 << 22;

/// An element of F_{q^n}. Only meaningful together with its [`Field`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Elem(pub u32);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub fn to_hex(self) -> String {
        format!("{:x}", self.0)
    }

    pub fn from_hex(s: &str) -> Result<Elem> {
        let t = s.trim();
        let t = t.strip_prefix("0x").unwrap_or(t);
        u32::from_str_radix(t, 16)
            .map(Elem)
            .map_err(|e| Error::Parse(format!("bad field element {s:?}: {e}")))
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:x}", self.0)
    }
}

impl Serialize for Elem {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_hex())
    }
}

impl<'de> Deserialize<'de> for Elem {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        Elem::from_hex(&s).map_err(serde::de::Error::custom)
    }
}

/// Shared handle to a field context.
pub type FieldRef = Arc<Field>;

/// Construction knobs for [`Field::with_options`].
#[derive(Clone, Debug)]
pub struct FieldOptions {
    /// Monic modulus over F_p of degree h·n, constant term first.
    pub modulus: Option<Vec<u32>>,
    /// Build log/antilog tables when the field is small enough.
    pub tables: bool,
}

impl Default for FieldOptions {
    fn default() -> Self {
        FieldOptions {
            modulus: None,
            tables: true,
        }
    }
}

struct Tables {
    /// exp[i] = g^i for 0 <= i < 2(Q-1).
    exp: Vec<u32>,
    log: Vec<u32>,
}

/// The tower F_p ⊂ F_q ⊂ F_{q^n}.
pub struct Field {
    p: u32,
    h: u32,
    n: u32,
    degree: u32,
    q: u64,
    order: u64,
    modulus: Vec<u32>,
    tables: Option<Tables>,
    generator: Elem,
    /// q^e mod (Q - 1) for 0 <= e < n.
    frob_mult: Vec<u64>,
    /// Images of X^i under the q^e-power map, indexed [e][i]; table-free fields only.
    frob_images: OnceLock<Vec<Elem>>,
    fq: Vec<Elem>,
    basis: Vec<Elem>,
    dual_basis: Vec<Elem>,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Field({})", self.descriptor())
    }
}

impl Field {
    /// F_{q^n} with q = p^h and the default (lexicographically least) modulus.
    pub fn new(p: u32, h: u32, n: u32) -> Result<FieldRef> {
        Self::with_options(p, h, n, FieldOptions::default())
    }

    pub fn with_modulus(p: u32, h: u32, n: u32, modulus: &[u32]) -> Result<FieldRef> {
        Self::with_options(
            p,
            h,
            n,
            FieldOptions {
                modulus: Some(modulus.to_vec()),
                tables: true,
            },
        )
    }

    pub fn with_options(p: u32, h: u32, n: u32, opts: FieldOptions) -> Result<FieldRef> {
        if !is_prime(p as u64) {
            return Err(Error::NonPrimeCharacteristic(p as u64));
        }
        if h == 0 || n == 0 {
            return Err(Error::InvalidParams("h and n must be positive".into()));
        }
        let degree = h * n;
        let order = (p as u128).pow(degree);
        if order > 1u128 << 32 {
            return Err(Error::FieldTooLarge { p, degree });
        }
        let order = order as u64;
        let modulus = match opts.modulus {
            Some(m) => {
                if m.len() != degree as usize + 1 {
                    return Err(Error::DegreeMismatch {
                        expected: degree as usize,
                        got: m.len().saturating_sub(1),
                    });
                }
                if m.iter().any(|&c| c >= p) {
                    return Err(Error::InvalidParams(format!(
                        "modulus coefficients must lie in 0..{p}"
                    )));
                }
                if m[degree as usize] != 1 {
                    return Err(Error::InvalidParams("modulus must be monic".into()));
                }
                if !prime_poly::is_irreducible(&m, p) {
                    return Err(Error::ReducibleModulus(p));
                }
                m
            }
            None if degree == 1 => {
                // X - r with r the least primitive root, so X is a generator.
                let r = (1..p)
                    .find(|&r| is_primitive_root_mod(r, p))
                    .expect("every prime has a primitive root");
                vec![(p - r) % p, 1]
            }
            None => prime_poly::least_irreducible(degree as usize, p),
        };
        let q = (p as u64).pow(h);
        let mut field = Field {
            p,
            h,
            n,
            degree,
            q,
            order,
            modulus,
            tables: None,
            generator: Elem::ONE,
            frob_mult: Vec::new(),
            frob_images: OnceLock::new(),
            fq: Vec::new(),
            basis: Vec::new(),
            dual_basis: Vec::new(),
        };
        let x = field.class_of_x();
        field.generator = if field.is_primitive(x) {
            x
        } else {
            (1..order)
                .map(|c| Elem(c as u32))
                .find(|&c| field.is_primitive(c))
                .expect("finite fields are cyclic")
        };
        if opts.tables && order <= TABLE_LIMIT {
            field.build_tables();
        }
        field.frob_mult = (0..n).map(|e| mod_pow(q, e as u64, order - 1)).collect();
        // F_q* is generated by g^((Q-1)/(q-1)).
        let step = field.pow(field.generator, (order - 1) / (q - 1));
        let mut fq = vec![Elem::ZERO];
        let mut cur = Elem::ONE;
        for _ in 0..q - 1 {
            fq.push(cur);
            cur = field.mul(cur, step);
        }
        fq.sort();
        field.fq = fq;
        field.basis = (0..n).map(|j| field.pow(x, j as u64)).collect();
        field.dual_basis = field.compute_dual_basis()?;
        Ok(Arc::new(field))
    }

    fn class_of_x(&self) -> Elem {
        if self.degree == 1 {
            // X ≡ -m_0 (mod X + m_0)
            Elem((self.p - self.modulus[0]) % self.p)
        } else {
            Elem(self.p)
        }
    }

    fn is_primitive(&self, x: Elem) -> bool {
        if x.is_zero() {
            return false;
        }
        if self.order == 2 {
            return x == Elem::ONE;
        }
        prime_factors(self.order - 1)
            .into_iter()
            .all(|r| self.pow_slow(x, (self.order - 1) / r) != Elem::ONE)
    }

    fn build_tables(&mut self) {
        let m = (self.order - 1) as usize;
        let mut exp = vec![0u32; 2 * m.max(1)];
        let mut log = vec![0u32; self.order as usize];
        let mut cur = Elem::ONE;
        for (i, slot) in exp.iter_mut().take(m).enumerate() {
            *slot = cur.0;
            log[cur.0 as usize] = i as u32;
            cur = self.mul_slow(cur, self.generator);
        }
        for i in m..2 * m {
            exp[i] = exp[i - m];
        }
        if m == 0 {
            exp[0] = 1;
        }
        self.tables = Some(Tables { exp, log });
    }

    fn compute_dual_basis(&self) -> Result<Vec<Elem>> {
        let n = self.n as usize;
        let gram: Vec<Vec<Elem>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| self.trace(self.mul(self.basis[i], self.basis[j])))
                    .collect()
            })
            .collect();
        let inv = crate::linalg::invert(self, &gram).ok_or_else(|| {
            Error::InternalInconsistency("trace form is degenerate on the basis".into())
        })?;
        Ok((0..n)
            .map(|j| {
                (0..n).fold(Elem::ZERO, |acc, k| {
                    self.add(acc, self.mul(inv[k][j], self.basis[k]))
                })
            })
            .collect())
    }

    // ---- parameters -----------------------------------------------------

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn h(&self) -> u32 {
        self.h
    }

    /// Extension degree over F_q.
    pub fn n(&self) -> u32 {
        self.n
    }

    /// Size of the subfield F_q.
    pub fn q(&self) -> u64 {
        self.q
    }

    /// Number of elements q^n.
    pub fn order(&self) -> u64 {
        self.order
    }

    /// Modulus coefficients over F_p, constant term first.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn has_tables(&self) -> bool {
        self.tables.is_some()
    }

    /// The canonical generator: the class of X when it is primitive,
    /// otherwise the least primitive element.
    pub fn generator(&self) -> Elem {
        self.generator
    }

    /// `"p^h^n:modhex"`, the modulus read as a base-p integer in hex.
    pub fn descriptor(&self) -> String {
        let code = self
            .modulus
            .iter()
            .rev()
            .fold(0u128, |acc, &c| acc * self.p as u128 + c as u128);
        format!("{}^{}^{}:{:x}", self.p, self.h, self.n, code)
    }

    pub fn same(a: &Field, b: &Field) -> bool {
        std::ptr::eq(a, b) || (a.p == b.p && a.h == b.h && a.n == b.n && a.modulus == b.modulus)
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + '_ {
        (0..self.order).map(|c| Elem(c as u32))
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = Elem> + '_ {
        (1..self.order).map(|c| Elem(c as u32))
    }

    /// Elements of F_q in increasing code order.
    pub fn fq_elements(&self) -> &[Elem] {
        &self.fq
    }

    pub fn is_binary_prime(&self) -> bool {
        self.p == 2 && self.h == 1
    }

    // ---- digits ---------------------------------------------------------

    /// Coefficients over F_p of the residue class, constant first.
    pub fn digits(&self, x: Elem) -> Vec<u32> {
        let mut c = x.0 as u64;
        (0..self.degree)
            .map(|_| {
                let d = (c % self.p as u64) as u32;
                c /= self.p as u64;
                d
            })
            .collect()
    }

    pub fn from_digits(&self, d: &[u32]) -> Elem {
        Elem(
            d.iter()
                .rev()
                .fold(0u64, |acc, &c| acc * self.p as u64 + (c % self.p) as u64) as u32,
        )
    }

    /// Embeds an integer of the prime field.
    pub fn from_int(&self, v: i64) -> Elem {
        Elem(v.rem_euclid(self.p as i64) as u32)
    }

    // ---- ring operations ------------------------------------------------

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        if self.p == 2 {
            return Elem(a.0 ^ b.0);
        }
        let p = self.p as u64;
        let (mut x, mut y) = (a.0 as u64, b.0 as u64);
        let mut out = 0u64;
        let mut place = 1u64;
        while x > 0 || y > 0 {
            out += ((x % p + y % p) % p) * place;
            x /= p;
            y /= p;
            place *= p;
        }
        Elem(out as u32)
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        if self.p == 2 {
            return a;
        }
        let p = self.p as u64;
        let mut x = a.0 as u64;
        let mut out = 0u64;
        let mut place = 1u64;
        while x > 0 {
            out += ((p - x % p) % p) * place;
            x /= p;
            place *= p;
        }
        Elem(out as u32)
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a.is_zero() || b.is_zero() {
            return Elem::ZERO;
        }
        match &self.tables {
            Some(t) => Elem(t.exp[(t.log[a.0 as usize] + t.log[b.0 as usize]) as usize]),
            None => self.mul_slow(a, b),
        }
    }

    /// Schoolbook multiplication modulo the defining polynomial.
    pub fn mul_slow(&self, a: Elem, b: Elem) -> Elem {
        let deg = self.degree as usize;
        if self.p == 2 {
            let (a, b) = (a.0 as u64, b.0 as u64);
            let mut prod = 0u64;
            for i in 0..deg {
                if (b >> i) & 1 == 1 {
                    prod ^= a << i;
                }
            }
            let m = self
                .modulus
                .iter()
                .enumerate()
                .fold(0u64, |acc, (i, &c)| acc | ((c as u64) << i));
            for i in (deg..2 * deg).rev() {
                if (prod >> i) & 1 == 1 {
                    prod ^= m << (i - deg);
                }
            }
            return Elem(prod as u32);
        }
        let p = self.p as u64;
        let da = self.digits(a);
        let db = self.digits(b);
        let mut prod = vec![0u64; 2 * deg];
        for (i, &x) in da.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p;
            }
        }
        for i in (deg..2 * deg).rev() {
            let c = prod[i];
            if c == 0 {
                continue;
            }
            for j in 0..deg {
                let s = c * self.modulus[j] as u64 % p;
                prod[i - deg + j] = (prod[i - deg + j] + p - s) % p;
            }
            prod[i] = 0;
        }
        let d: Vec<u32> = prod[..deg].iter().map(|&c| c as u32).collect();
        self.from_digits(&d)
    }

    fn pow_slow(&self, x: Elem, mut e: u64) -> Elem {
        let mut base = x;
        let mut acc = Elem::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_slow(acc, base);
            }
            base = self.mul_slow(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn pow(&self, x: Elem, e: u64) -> Elem {
        if e == 0 {
            return Elem::ONE;
        }
        if x.is_zero() {
            return Elem::ZERO;
        }
        match &self.tables {
            Some(t) => {
                let m = self.order - 1;
                let l = t.log[x.0 as usize] as u128 * (e % m) as u128 % m as u128;
                Elem(t.exp[l as usize])
            }
            None => self.pow_slow(x, e),
        }
    }

    /// x^k for a possibly negative exponent; `x` must be nonzero when `k < 0`.
    pub fn pow_signed(&self, x: Elem, k: i64) -> Elem {
        if k >= 0 {
            self.pow(x, k as u64)
        } else {
            self.pow(self.inv(x), k.unsigned_abs())
        }
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(&self, x: Elem) -> Elem {
        assert!(!x.is_zero(), "inverse of zero");
        match &self.tables {
            Some(t) => {
                let m = (self.order - 1) as u32;
                let l = t.log[x.0 as usize];
                Elem(t.exp[((m - l) % m.max(1)) as usize])
            }
            None => self.pow_slow(x, self.order - 2),
        }
    }

    pub fn div(&self, a: Elem, b: Elem) -> Elem {
        self.mul(a, self.inv(b))
    }

    /// g^k for the canonical generator g.
    pub fn gen_pow(&self, k: i64) -> Elem {
        let m = (self.order - 1) as i64;
        self.pow(self.generator, k.rem_euclid(m.max(1)) as u64)
    }

    /// Discrete logarithm to the canonical generator.
    pub fn log(&self, x: Elem) -> Option<u64> {
        if x.is_zero() {
            return None;
        }
        match &self.tables {
            Some(t) => Some(t.log[x.0 as usize] as u64),
            None => {
                let mut cur = Elem::ONE;
                for i in 0..self.order - 1 {
                    if cur == x {
                        return Some(i);
                    }
                    cur = self.mul(cur, self.generator);
                }
                None
            }
        }
    }

    /// Some y with y^e = t, if one exists (smallest code when searched).
    pub fn solve_pow(&self, t: Elem, e: u64) -> Option<Elem> {
        if t.is_zero() {
            return if e == 0 { None } else { Some(Elem::ZERO) };
        }
        let m = self.order - 1;
        if self.tables.is_some() {
            let lt = self.log(t)?;
            let e = e % m;
            let g = gcd(e, m);
            if g == 0 {
                return (lt == 0).then_some(Elem::ONE);
            }
            if lt % g != 0 {
                return None;
            }
            let mg = m / g;
            let inv = mod_inverse((e / g) % mg.max(1), mg.max(1))?;
            let l = (lt / g) as u128 * inv as u128 % mg.max(1) as u128;
            return Some(self.gen_pow(l as i64));
        }
        self.nonzero_elements().find(|&y| self.pow(y, e) == t)
    }

    // ---- Frobenius, trace, norm ----------------------------------------

    /// x^(q^e), with `e` taken modulo n.
    #[inline]
    pub fn frob(&self, x: Elem, e: i64) -> Elem {
        let e = e.rem_euclid(self.n as i64) as usize;
        if e == 0 || x.is_zero() {
            return x;
        }
        match &self.tables {
            Some(t) => {
                let m = self.order - 1;
                let l = t.log[x.0 as usize] as u64 * self.frob_mult[e] % m;
                Elem(t.exp[l as usize])
            }
            None => {
                let images = self.frob_images.get_or_init(|| self.frobenius_images());
                let d = self.digits(x);
                d.iter()
                    .zip(&images[e * self.degree as usize..(e + 1) * self.degree as usize])
                    .fold(Elem::ZERO, |acc, (&c, &img)| {
                        self.add(acc, self.scale_prime(img, c))
                    })
            }
        }
    }

    /// Columns of the F_p-linear q^e-power maps, flattened [e][i].
    fn frobenius_images(&self) -> Vec<Elem> {
        let deg = self.degree as usize;
        let mut out = Vec::with_capacity(self.n as usize * deg);
        for e in 0..self.n {
            let qe = self.q.pow(e);
            for i in 0..deg {
                let mut d = vec![0u32; deg];
                d[i] = 1;
                out.push(self.pow_slow(self.from_digits(&d), qe));
            }
        }
        out
    }

    fn scale_prime(&self, x: Elem, c: u32) -> Elem {
        match c {
            0 => Elem::ZERO,
            1 => x,
            _ => {
                let d: Vec<u32> = self
                    .digits(x)
                    .into_iter()
                    .map(|v| ((v as u64 * c as u64) % self.p as u64) as u32)
                    .collect();
                self.from_digits(&d)
            }
        }
    }

    /// Tr_{q^n/q}(x).
    pub fn trace(&self, x: Elem) -> Elem {
        (0..self.n as i64).fold(Elem::ZERO, |acc, i| self.add(acc, self.frob(x, i)))
    }

    /// N_{q^n/q}(x).
    pub fn norm(&self, x: Elem) -> Elem {
        (0..self.n as i64).fold(Elem::ONE, |acc, i| self.mul(acc, self.frob(x, i)))
    }

    /// Whether x lies in F_{q^d} ∩ F_{q^n} = F_{q^gcd(d,n)}.
    pub fn in_subfield(&self, x: Elem, d: u32) -> bool {
        let g = gcd(d, self.n);
        self.frob(x, g as i64) == x
    }

    pub fn in_fq(&self, x: Elem) -> bool {
        self.frob(x, 1) == x
    }

    // ---- F_q-coordinates ------------------------------------------------

    /// The fixed F_q-basis (1, x, ..., x^{n-1}) of F_{q^n}, x the class of X.
    pub fn fq_basis(&self) -> &[Elem] {
        &self.basis
    }

    /// Trace-dual basis of [`Field::fq_basis`].
    pub fn fq_dual_basis(&self) -> &[Elem] {
        &self.dual_basis
    }

    /// Appends the n coordinates of `x` in the fixed F_q-basis to `out`.
    #[inline]
    pub fn push_fq_coords(&self, x: Elem, out: &mut Vec<Elem>) {
        if self.h == 1 {
            if self.p == 2 {
                for j in 0..self.n {
                    out.push(Elem((x.0 >> j) & 1));
                }
            } else {
                let mut c = x.0 as u64;
                for _ in 0..self.n {
                    out.push(Elem((c % self.p as u64) as u32));
                    c /= self.p as u64;
                }
            }
        } else {
            for &d in &self.dual_basis {
                out.push(self.trace(self.mul(x, d)));
            }
        }
    }

    pub fn fq_coords(&self, x: Elem) -> Vec<Elem> {
        let mut out = Vec::with_capacity(self.n as usize);
        self.push_fq_coords(x, &mut out);
        out
    }

    /// Inverse of [`Field::fq_coords`].
    pub fn from_fq_coords(&self, c: &[Elem]) -> Elem {
        c.iter()
            .zip(&self.basis)
            .fold(Elem::ZERO, |acc, (&a, &b)| self.add(acc, self.mul(a, b)))
    }

    // ---- parsing --------------------------------------------------------

    /// Parses `gK` (a power of the canonical generator), `0x..` or bare hex.
    pub fn parse_elem(&self, s: &str) -> Result<Elem> {
        let t = s.trim();
        let e = if let Some(k) = t.strip_prefix('g') {
            let k: i64 = k
                .parse()
                .map_err(|_| Error::Parse(format!("bad generator power {s:?}")))?;
            self.gen_pow(k)
        } else {
            Elem::from_hex(t)?
        };
        if e.0 as u64 >= self.order {
            return Err(Error::Parse(format!(
                "{s:?} is not an element of the field"
            )));
        }
        Ok(e)
    }
}

fn mod_pow(b: u64, mut e: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut base = b as u128 % m as u128;
    let mut acc = 1u128;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % m as u128;
        }
        base = base * base % m as u128;
        e >>= 1;
    }
    acc as u64
}

fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(0);
    }
    let (mut t, mut new_t) = (0i128, 1i128);
    let (mut r, mut new_r) = (m as i128, a as i128);
    while new_r != 0 {
        let qt = r / new_r;
        (t, new_t) = (new_t, t - qt * new_t);
        (r, new_r) = (new_r, r - qt * new_r);
    }
    if r != 1 {
        return None;
    }
    Some(t.rem_euclid(m as i128) as u64)
}

fn is_primitive_root_mod(r: u32, p: u32) -> bool {
    if p == 2 {
        return r == 1;
    }
    prime_factors(p as u64 - 1)
        .into_iter()
        .all(|f| mod_pow(r as u64, (p as u64 - 1) / f, p as u64) != 1)
}

/// All pairs (γ', c') in F_q* × F_q* such that X² + γ'X − c' is primitive
/// over F_q, in increasing code order.
///
/// Primitivity is decided through the companion matrix [[0, c'], [1, −γ']]:
/// the polynomial is primitive exactly when this matrix has multiplicative
/// order q² − 1 in GL(2, q).
pub fn primitive_quadratics(field: &Field) -> Vec<(Elem, Elem)> {
    let q = field.q();
    let target = q * q - 1;
    let mut out = Vec::new();
    for &g in &field.fq_elements()[1..] {
        for &c in &field.fq_elements()[1..] {
            let comp = [[Elem::ZERO, c], [Elem::ONE, field.neg(g)]];
            let is_id = |m: [[Elem; 2]; 2]| m == [[Elem::ONE, Elem::ZERO], [Elem::ZERO, Elem::ONE]];
            let full = mat2_pow(field, comp, target);
            if !is_id(full) {
                continue;
            }
            if prime_factors(target)
                .into_iter()
                .all(|r| !is_id(mat2_pow(field, comp, target / r)))
            {
                out.push((g, c));
            }
        }
    }
    out
}

pub(crate) fn mat2_mul(f: &Field, a: [[Elem; 2]; 2], b: [[Elem; 2]; 2]) -> [[Elem; 2]; 2] {
    let mut out = [[Elem::ZERO; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            out[i][j] = f.add(f.mul(a[i][0], b[0][j]), f.mul(a[i][1], b[1][j]));
        }
    }
    out
}

fn mat2_pow(f: &Field, m: [[Elem; 2]; 2], mut e: u64) -> [[Elem; 2]; 2] {
    let mut acc = [[Elem::ONE, Elem::ZERO], [Elem::ZERO, Elem::ONE]];
    let mut base = m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mat2_mul(f, acc, base);
        }
        base = mat2_mul(f, base, base);
        e >>= 1;
    }
    acc
}

#[cfg(test)]
mod tests;
