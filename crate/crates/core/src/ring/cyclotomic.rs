//! The exact scalar field `Q(zeta_m)`.
//!
//! Scalars are rational coefficient vectors of length `phi(m)` in the power
//! basis `1, zeta, ..., zeta^{phi(m)-1}`, reduced modulo the cyclotomic
//! polynomial `Phi_m`. Only the subring actually reached by character
//! values and powers of `q` is ever used, but the arithmetic is fully
//! general and exact.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::fmt;

/// Arithmetic context for `Q(zeta_m)`: the cyclotomic polynomial and
/// reduction rows for all powers `zeta^k`, `0 <= k < m`.
#[derive(Debug, Clone)]
pub struct CycField {
    pub m: u64,
    pub phi: usize,
    /// `zeta^k` in the power basis, for `k = 0..m`.
    power_rows: Vec<Vec<BigRational>>,
    /// Coefficients of `Phi_m`, low degree first (integers).
    phi_m: Vec<BigInt>,
}

fn poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    // Exact division of integer polynomials (den monic up to sign).
    let mut rem: Vec<BigInt> = num.to_vec();
    let dd = den.len() - 1;
    let lead = den[dd].clone();
    let mut out = vec![BigInt::zero(); rem.len() - dd];
    for k in (0..out.len()).rev() {
        let c = &rem[k + dd] / &lead;
        out[k] = c.clone();
        for j in 0..=dd {
            let t = &c * &den[j];
            rem[k + j] -= t;
        }
    }
    assert!(rem.iter().all(|c| c.is_zero()), "non-exact polynomial division");
    out
}

fn cyclotomic_poly(m: u64) -> Vec<BigInt> {
    // Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d
    let mut num = vec![BigInt::zero(); m as usize + 1];
    num[0] = -BigInt::one();
    num[m as usize] = BigInt::one();
    let mut acc = num;
    for d in 1..m {
        if m % d == 0 {
            let phi_d = cyclotomic_poly(d);
            acc = poly_div_exact(&acc, &phi_d);
        }
    }
    acc
}

impl CycField {
    pub fn new(m: u64) -> CycField {
        assert!(m >= 1);
        let phi_m = cyclotomic_poly(m);
        let phi = phi_m.len() - 1;
        // Build zeta^k rows iteratively: multiply by x, reduce by Phi_m.
        let mut rows: Vec<Vec<BigRational>> = Vec::with_capacity(m as usize);
        let mut cur = vec![BigRational::zero(); phi];
        cur[0] = BigRational::one();
        for _ in 0..m {
            rows.push(cur.clone());
            // cur <- x * cur mod Phi_m
            let top = cur[phi - 1].clone();
            let mut next = vec![BigRational::zero(); phi];
            for i in (1..phi).rev() {
                next[i] = cur[i - 1].clone();
            }
            if !top.is_zero() {
                // x^phi = -(low part of Phi_m) since Phi_m is monic
                for i in 0..phi {
                    let c = BigRational::from(phi_m[i].clone());
                    next[i] -= &top * c;
                }
            }
            cur = next;
        }
        CycField { m, phi, power_rows: rows, phi_m }
    }

    pub fn zero(&self) -> CycScalar {
        CycScalar { coeffs: vec![BigRational::zero(); self.phi] }
    }

    pub fn one(&self) -> CycScalar {
        self.rational(BigRational::one())
    }

    pub fn rational(&self, r: BigRational) -> CycScalar {
        // phi(m) >= 1 for every m, so there is always a constant coordinate.
        let mut coeffs = vec![BigRational::zero(); self.phi];
        coeffs[0] = r;
        CycScalar { coeffs }
    }

    pub fn integer(&self, n: i64) -> CycScalar {
        self.rational(BigRational::from(BigInt::from(n)))
    }

    /// `q^e` as a rational scalar, with `e` possibly negative.
    pub fn q_power(&self, q: u64, e: i64) -> CycScalar {
        let base = BigInt::from(q);
        let r = if e >= 0 {
            BigRational::from(base.pow(e as u32))
        } else {
            BigRational::new(BigInt::one(), base.pow((-e) as u32))
        };
        self.rational(r)
    }

    /// `zeta_m^k` (k taken mod m).
    pub fn root_of_unity(&self, k: i64) -> CycScalar {
        let k = k.rem_euclid(self.m as i64) as usize;
        CycScalar { coeffs: self.power_rows[k].clone() }
    }

    pub fn add(&self, a: &CycScalar, b: &CycScalar) -> CycScalar {
        CycScalar {
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect(),
        }
    }

    pub fn neg(&self, a: &CycScalar) -> CycScalar {
        CycScalar { coeffs: a.coeffs.iter().map(|x| -x).collect() }
    }

    pub fn sub(&self, a: &CycScalar, b: &CycScalar) -> CycScalar {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &CycScalar, b: &CycScalar) -> CycScalar {
        let n = self.phi;
        let mut raw = vec![BigRational::zero(); 2 * n - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                raw[i + j] += x * y;
            }
        }
        // Reduce degrees >= phi using x^phi = -(low part of Phi_m).
        for k in (n..2 * n - 1).rev() {
            if raw[k].is_zero() {
                continue;
            }
            let c = raw[k].clone();
            raw[k] = BigRational::zero();
            for i in 0..n {
                let p = BigRational::from(self.phi_m[i].clone());
                raw[k - n + i] -= &c * p;
            }
        }
        raw.truncate(n);
        CycScalar { coeffs: raw }
    }

    pub fn scale(&self, a: &CycScalar, r: &BigRational) -> CycScalar {
        CycScalar { coeffs: a.coeffs.iter().map(|x| x * r).collect() }
    }

    pub fn eq(&self, a: &CycScalar, b: &CycScalar) -> bool {
        a.coeffs == b.coeffs
    }

    /// The value as a rational number, if it lies in Q.
    pub fn as_rational(&self, a: &CycScalar) -> Option<BigRational> {
        if a.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(a.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Coefficients of `Phi_m`, low degree first.
    pub fn cyclotomic_polynomial(&self) -> &[BigInt] {
        &self.phi_m
    }
}

/// An element of `Q(zeta_m)` in the power basis of its [`CycField`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycScalar {
    coeffs: Vec<BigRational>,
}

impl CycScalar {
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }
}

impl fmt::Display for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if i == 0 {
                write!(f, "{c}")?;
            } else if i == 1 {
                write!(f, "{c}*z")?;
            } else {
                write!(f, "{c}*z^{i}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}
