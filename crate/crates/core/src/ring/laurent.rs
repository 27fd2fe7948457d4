//! Truncated Laurent polynomials over `F_q`.
//!
//! An element models a Laurent series known exactly below its precision
//! window `P`: coefficients of degree `>= P` are unknown. `P = Exact`
//! means every coefficient is known (a genuine Laurent polynomial).
//! Precision propagates pessimistically through arithmetic; reading a
//! coefficient at or above the window is an error, never a guess.

use super::fq::{Fq, FqElement};
use crate::{Error, Result};
use std::fmt;

/// Precision window: coefficients of degree `>= Below(P)` are unknown.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Prec {
    Exact,
    Below(i64),
}

impl Prec {
    pub fn min(self, other: Prec) -> Prec {
        match (self, other) {
            (Prec::Exact, p) | (p, Prec::Exact) => p,
            (Prec::Below(a), Prec::Below(b)) => Prec::Below(a.min(b)),
        }
    }

    /// Shift the window by `d` (saturating on Exact).
    pub fn shift(self, d: i64) -> Prec {
        match self {
            Prec::Exact => Prec::Exact,
            Prec::Below(p) => Prec::Below(p + d),
        }
    }

    pub fn covers(self, degree: i64) -> bool {
        match self {
            Prec::Exact => true,
            Prec::Below(p) => degree < p,
        }
    }

    /// True if every degree `< level` is covered.
    pub fn covers_below(self, level: i64) -> bool {
        match self {
            Prec::Exact => true,
            Prec::Below(p) => p >= level,
        }
    }
}

/// A Laurent polynomial over `F_q` with a tracked precision window.
///
/// Invariants: terms are sorted by strictly increasing degree, carry no
/// zero coefficients, and no stored degree lies at or above the window.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TruncatedLaurent {
    terms: Vec<(i64, FqElement)>,
    prec: Prec,
}

impl std::hash::Hash for Prec {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        match self {
            Prec::Exact => i64::MAX.hash(state),
            Prec::Below(p) => p.hash(state),
        }
    }
}

impl TruncatedLaurent {
    pub fn zero() -> Self {
        TruncatedLaurent { terms: vec![], prec: Prec::Exact }
    }

    pub fn one() -> Self {
        TruncatedLaurent { terms: vec![(0, FqElement::ONE)], prec: Prec::Exact }
    }

    /// The monomial `c * t^d`.
    pub fn monomial(c: FqElement, d: i64) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        TruncatedLaurent { terms: vec![(d, c)], prec: Prec::Exact }
    }

    /// Builds from raw terms (any order, duplicates summed).
    pub fn from_terms(fq: &Fq, terms: &[(i64, FqElement)], prec: Prec) -> Self {
        let mut sorted: Vec<(i64, FqElement)> = Vec::with_capacity(terms.len());
        let mut ts = terms.to_vec();
        ts.sort_by_key(|&(d, _)| d);
        for (d, c) in ts {
            if let Some(last) = sorted.last_mut() {
                if last.0 == d {
                    last.1 = fq.add(last.1, c);
                    continue;
                }
            }
            sorted.push((d, c));
        }
        sorted.retain(|&(d, c)| !c.is_zero() && prec.covers(d));
        TruncatedLaurent { terms: sorted, prec }
    }

    pub fn prec(&self) -> Prec {
        self.prec
    }

    pub fn terms(&self) -> &[(i64, FqElement)] {
        &self.terms
    }

    /// True if no nonzero coefficient is known. For truncated elements this
    /// certifies only `val >= P`.
    pub fn is_known_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Exactly the zero element.
    pub fn is_exact_zero(&self) -> bool {
        self.terms.is_empty() && self.prec == Prec::Exact
    }

    /// Valuation, when a nonzero coefficient is known.
    pub fn val(&self) -> Option<i64> {
        self.terms.first().map(|&(d, _)| d)
    }

    /// A lower bound for the valuation: the first visible degree, or the
    /// precision window when nothing is visible. `None` for exact zero
    /// (valuation +infinity).
    pub fn val_lower_bound(&self) -> Option<i64> {
        match self.terms.first() {
            Some(&(d, _)) => Some(d),
            None => match self.prec {
                Prec::Exact => None,
                Prec::Below(p) => Some(p),
            },
        }
    }

    /// Certifies `val >= level`: all coefficients below `level` are known
    /// and zero. Errors if the window does not reach `level`.
    pub fn val_at_least(&self, level: i64) -> Result<bool> {
        if let Some(&(d, _)) = self.terms.first() {
            if d < level {
                return Ok(false);
            }
        }
        // Nothing visible below level; the window must actually reach it.
        if self.prec.covers_below(level) {
            Ok(true)
        } else {
            Err(Error::Precision(format!(
                "need coefficients below degree {level}, window is {:?}",
                self.prec
            )))
        }
    }

    /// The coefficient at `degree`, or a precision error if unknown.
    pub fn coeff(&self, degree: i64) -> Result<FqElement> {
        if !self.prec.covers(degree) {
            return Err(Error::Precision(format!(
                "coefficient of degree {degree} is above the window {:?}",
                self.prec
            )));
        }
        Ok(self
            .terms
            .iter()
            .find(|&&(d, _)| d == degree)
            .map(|&(_, c)| c)
            .unwrap_or(FqElement::ZERO))
    }

    pub fn add(&self, fq: &Fq, other: &Self) -> Self {
        let prec = self.prec.min(other.prec);
        let mut terms = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() || j < other.terms.len() {
            let ta = self.terms.get(i);
            let tb = other.terms.get(j);
            let (d, c) = match (ta, tb) {
                (Some(&(da, ca)), Some(&(db, cb))) => {
                    if da == db {
                        i += 1;
                        j += 1;
                        (da, fq.add(ca, cb))
                    } else if da < db {
                        i += 1;
                        (da, ca)
                    } else {
                        j += 1;
                        (db, cb)
                    }
                }
                (Some(&(da, ca)), None) => {
                    i += 1;
                    (da, ca)
                }
                (None, Some(&(db, cb))) => {
                    j += 1;
                    (db, cb)
                }
                (None, None) => unreachable!(),
            };
            if !c.is_zero() && prec.covers(d) {
                terms.push((d, c));
            }
        }
        TruncatedLaurent { terms, prec }
    }

    pub fn neg(&self, fq: &Fq) -> Self {
        TruncatedLaurent {
            terms: self.terms.iter().map(|&(d, c)| (d, fq.neg(c))).collect(),
            prec: self.prec,
        }
    }

    pub fn sub(&self, fq: &Fq, other: &Self) -> Self {
        self.add(fq, &other.neg(fq))
    }

    pub fn scale(&self, fq: &Fq, c: FqElement) -> Self {
        if c.is_zero() {
            // Scaling by zero yields zero, but the window cannot improve.
            return TruncatedLaurent { terms: vec![], prec: self.prec };
        }
        TruncatedLaurent {
            terms: self.terms.iter().map(|&(d, a)| (d, fq.mul(a, c))).collect(),
            prec: self.prec,
        }
    }

    /// Multiplication by `t^d`.
    pub fn shift(&self, d: i64) -> Self {
        TruncatedLaurent {
            terms: self.terms.iter().map(|&(deg, c)| (deg + d, c)).collect(),
            prec: self.prec.shift(d),
        }
    }

    /// Product, with window `min(P_a + val(b), P_b + val(a))` when either
    /// input is truncated, exact when both are exact.
    pub fn mul(&self, fq: &Fq, other: &Self) -> Self {
        let prec = match (self.prec, other.prec) {
            (Prec::Exact, Prec::Exact) => Prec::Exact,
            _ => {
                let pa = match (self.prec, other.val_lower_bound()) {
                    (Prec::Below(p), Some(v)) => Prec::Below(p + v),
                    _ => Prec::Exact,
                };
                let pb = match (other.prec, self.val_lower_bound()) {
                    (Prec::Below(p), Some(v)) => Prec::Below(p + v),
                    _ => Prec::Exact,
                };
                pa.min(pb)
            }
        };
        if self.terms.is_empty() || other.terms.is_empty() {
            return TruncatedLaurent { terms: vec![], prec };
        }
        // Dense accumulation over the visible degree range.
        let lo = self.terms[0].0 + other.terms[0].0;
        let hi_raw = self.terms.last().unwrap().0 + other.terms.last().unwrap().0;
        let hi = match prec {
            Prec::Exact => hi_raw,
            Prec::Below(p) => hi_raw.min(p - 1),
        };
        if hi < lo {
            return TruncatedLaurent { terms: vec![], prec };
        }
        let mut acc = vec![FqElement::ZERO; (hi - lo + 1) as usize];
        for &(da, ca) in &self.terms {
            for &(db, cb) in &other.terms {
                let d = da + db;
                if d > hi {
                    break;
                }
                let idx = (d - lo) as usize;
                acc[idx] = fq.add(acc[idx], fq.mul(ca, cb));
            }
        }
        let terms = acc
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (lo + i as i64, c))
            .collect();
        TruncatedLaurent { terms, prec }
    }

    /// Truncates to the window `Below(level)` (weakening only).
    pub fn truncate(&self, level: i64) -> Self {
        let prec = self.prec.min(Prec::Below(level));
        TruncatedLaurent {
            terms: self.terms.iter().copied().filter(|&(d, _)| prec.covers(d)).collect(),
            prec,
        }
    }

    /// Inverse of a unit-times-monomial, modulo degrees `>= level`:
    /// returns `b` with `a * b = 1` on all degrees `< level`, `b` having
    /// window `level - val(a)`.
    pub fn unit_inverse_mod(&self, fq: &Fq, level: i64) -> Result<Self> {
        let v = match self.val() {
            Some(v) => v,
            None => return Err(Error::NotInvertible),
        };
        // Write a = t^v * u with u a unit of O. The product a*b reads the
        // inverse unit series below degree `level`, so that many
        // coefficients are needed, and a itself must be known below v+level.
        let n = level;
        if n <= 0 {
            return Ok(TruncatedLaurent { terms: vec![], prec: Prec::Below(level - v) });
        }
        if !self.prec.covers_below(v + level) {
            return Err(Error::Precision(format!(
                "inverting to level {level} needs input known below degree {}",
                v + level
            )));
        }
        let u0 = self.coeff(v)?;
        let u0inv = fq.inv(u0)?;
        let mut w = vec![FqElement::ZERO; n as usize];
        w[0] = u0inv;
        // Solve u * w = 1 degree by degree: w_d = -u0^{-1} sum_{k>=1} u_k w_{d-k}.
        for d in 1..n {
            let mut s = FqElement::ZERO;
            for &(deg, c) in &self.terms {
                let k = deg - v;
                if k >= 1 && k <= d {
                    s = fq.add(s, fq.mul(c, w[(d - k) as usize]));
                }
            }
            w[d as usize] = fq.mul(fq.neg(u0inv), s);
        }
        let terms: Vec<(i64, FqElement)> = w
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i as i64 - v, c))
            .collect();
        Ok(TruncatedLaurent { terms, prec: Prec::Below(level - v) })
    }

    /// Equality of all coefficients below `level` (errors if either window
    /// is too small).
    pub fn eq_below(&self, fq: &Fq, other: &Self, level: i64) -> Result<bool> {
        let diff = self.sub(fq, other);
        diff.val_at_least(level)
    }
}

impl fmt::Display for TruncatedLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            write!(f, "0")?;
        } else {
            for (i, &(d, c)) in self.terms.iter().enumerate() {
                if i > 0 {
                    write!(f, " + ")?;
                }
                match d {
                    0 => write!(f, "{}", c.0)?,
                    1 => write!(f, "{}*t", c.0)?,
                    _ => write!(f, "{}*t^{}", c.0, d)?,
                }
            }
        }
        if let Prec::Below(p) = self.prec {
            write!(f, " + O(t^{p})")?;
        }
        Ok(())
    }
}
