//! The finite field `F_q`, `q = p^e`.
//!
//! Elements are indices `0..q` encoding the coefficient vector of a
//! polynomial over `F_p` in base-`p` digits (degree-0 digit least
//! significant). Prime fields are the `e = 1` case, where the index is the
//! residue itself. For `e > 1` arithmetic is reduced modulo a fixed monic
//! irreducible polynomial, chosen as the lexicographically smallest one so
//! that tables are deterministic across runs and platforms.
//!
//! All operations go through precomputed tables; elements are plain `u16`
//! indices and are meaningful only relative to their [`Fq`] context.

use crate::{Error, Result};

/// An element of `F_q`, as an index into the tables of its [`Fq`] context.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FqElement(pub u16);

impl FqElement {
    pub const ZERO: FqElement = FqElement(0);
    pub const ONE: FqElement = FqElement(1);

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// Table-based arithmetic context for `F_q`.
#[derive(Debug, Clone)]
pub struct Fq {
    pub p: u64,
    pub e: u32,
    pub q: u64,
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
    inv: Vec<u16>,
    /// Coefficients of the reducing polynomial, absent for prime fields.
    modulus: Vec<u16>,
}

fn factor_prime_power(q: u64) -> Result<(u64, u32)> {
    if q < 2 {
        return Err(Error::Config(format!("q = {q} is not a prime power")));
    }
    let mut p = 2;
    while p * p <= q {
        if q % p == 0 {
            break;
        }
        p += 1;
    }
    if q % p != 0 {
        return Ok((q, 1)); // q itself is prime
    }
    let mut n = q;
    let mut e = 0;
    while n % p == 0 {
        n /= p;
        e += 1;
    }
    if n != 1 {
        return Err(Error::Config(format!("q = {q} is not a prime power")));
    }
    Ok((p, e))
}

/// Polynomials over F_p encoded as digit vectors, used only at table-build
/// time.
fn poly_mul_mod_p(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut out = vec![0u64; a.len() + b.len()];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    while out.last() == Some(&0) {
        out.pop();
    }
    out
}

fn poly_rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let mut r: Vec<u64> = a.to_vec();
    let dm = m.len() - 1;
    // m is monic
    while r.len() > dm {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - dm;
        if lead != 0 {
            for k in 0..=dm {
                let idx = shift + k;
                r[idx] = (r[idx] + (p - lead) * m[k]) % p;
            }
        }
        r.pop();
    }
    while r.last() == Some(&0) {
        r.pop();
    }
    r
}

fn encode(digits: &[u64], p: u64) -> u16 {
    let mut v = 0u64;
    for &d in digits.iter().rev() {
        v = v * p + d;
    }
    v as u16
}

fn decode(mut v: u64, p: u64, e: u32) -> Vec<u64> {
    let mut out = Vec::with_capacity(e as usize);
    for _ in 0..e {
        out.push(v % p);
        v /= p;
    }
    out
}

/// Finds the lexicographically smallest monic irreducible of degree `e`
/// over `F_p`, by trial division against all monic polynomials of degree
/// up to `e/2`.
fn smallest_irreducible(p: u64, e: u32) -> Vec<u64> {
    let pe = |k: u32| p.pow(k);
    'cand: for tail in 0..pe(e) {
        let mut cand = decode(tail, p, e);
        cand.push(1); // monic of degree e
        for d in 1..=(e / 2) {
            for dtail in 0..pe(d) {
                let mut div = decode(dtail, p, d);
                div.push(1);
                if poly_rem(&cand, &div, p).is_empty() {
                    continue 'cand;
                }
            }
        }
        return cand;
    }
    unreachable!("irreducible polynomials of every degree exist over F_p")
}

impl Fq {
    pub fn new(q: u64) -> Result<Fq> {
        let (p, e) = factor_prime_power(q)?;
        if q > u16::MAX as u64 {
            return Err(Error::Config(format!("q = {q} too large for table-based F_q")));
        }
        let n = q as usize;
        let modulus = if e > 1 { smallest_irreducible(p, e) } else { vec![] };
        let mut add = vec![0u16; n * n];
        let mut mul = vec![0u16; n * n];
        let mut neg = vec![0u16; n];
        let mut inv = vec![0u16; n];
        for a in 0..q {
            let da = decode(a, p, e);
            let mut nd = da.clone();
            for x in nd.iter_mut() {
                *x = (p - *x) % p;
            }
            neg[a as usize] = encode(&nd, p);
            for b in 0..q {
                let db = decode(b, p, e);
                let sum: Vec<u64> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[(a * q + b) as usize] = encode(&sum, p);
                let prod = if e == 1 {
                    vec![(a * b) % p]
                } else {
                    let raw = poly_mul_mod_p(&da, &db, p);
                    poly_rem(&raw, &modulus, p)
                };
                let mut padded = prod;
                padded.resize(e as usize, 0);
                mul[(a * q + b) as usize] = encode(&padded, p);
            }
        }
        for a in 1..q {
            for b in 1..q {
                if mul[(a * q + b) as usize] == 1 {
                    inv[a as usize] = b as u16;
                    break;
                }
            }
        }
        let modulus = modulus.iter().map(|&x| x as u16).collect();
        Ok(Fq { p, e, q, add, mul, neg, inv, modulus })
    }

    #[inline]
    pub fn add(&self, a: FqElement, b: FqElement) -> FqElement {
        FqElement(self.add[a.0 as usize * self.q as usize + b.0 as usize])
    }

    #[inline]
    pub fn mul(&self, a: FqElement, b: FqElement) -> FqElement {
        FqElement(self.mul[a.0 as usize * self.q as usize + b.0 as usize])
    }

    #[inline]
    pub fn neg(&self, a: FqElement) -> FqElement {
        FqElement(self.neg[a.0 as usize])
    }

    #[inline]
    pub fn sub(&self, a: FqElement, b: FqElement) -> FqElement {
        self.add(a, self.neg(b))
    }

    pub fn inv(&self, a: FqElement) -> Result<FqElement> {
        if a.is_zero() {
            return Err(Error::NotInvertible);
        }
        Ok(FqElement(self.inv[a.0 as usize]))
    }

    /// The element with index `v` (bounds-checked).
    pub fn elem(&self, v: u64) -> FqElement {
        assert!(v < self.q, "element index out of range");
        FqElement(v as u16)
    }

    /// Canonical embedding of an integer via its residue mod p (a ring
    /// homomorphism Z -> F_q).
    pub fn from_int(&self, n: i64) -> FqElement {
        let r = n.rem_euclid(self.p as i64) as u64;
        FqElement(r as u16)
    }

    pub fn elements(&self) -> impl Iterator<Item = FqElement> {
        (0..self.q as u16).map(FqElement)
    }

    /// Reducing polynomial for non-prime `q` (monic, digit-encoded), empty
    /// for prime fields.
    pub fn modulus(&self) -> &[u16] {
        &self.modulus
    }

    /// A fixed F_p-basis of F_q: the powers of the adjoined root.
    pub fn p_basis(&self) -> Vec<FqElement> {
        (0..self.e).map(|i| FqElement(self.p.pow(i) as u16)).collect()
    }

    /// Multiplicative order of a nonzero element.
    pub fn order(&self, a: FqElement) -> u64 {
        assert!(!a.is_zero());
        let mut x = a;
        let mut n = 1;
        while x != FqElement::ONE {
            x = self.mul(x, a);
            n += 1;
        }
        n
    }

    /// The smallest-index generator of `F_q^x`.
    pub fn primitive_element(&self) -> FqElement {
        (1..self.q as u16)
            .map(FqElement)
            .find(|&a| self.order(a) == self.q - 1)
            .expect("F_q^x is cyclic")
    }
}
