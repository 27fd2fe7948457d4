//! Exact arithmetic: `F_q`, truncated Laurent polynomials, and `Q(zeta_m)`.

mod cyclotomic;
mod fq;
mod laurent;

pub use cyclotomic::{CycField, CycScalar};
pub use fq::{Fq, FqElement};
pub use laurent::{Prec, TruncatedLaurent};
