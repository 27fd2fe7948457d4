//! Exact-arithmetic laboratory for Roche compact open subgroups of
//! `GL_N(F_q((t)))` and their twisted Hecke algebras.
//!
//! The crate is organized in layers:
//!
//! * [`ring`] - the residue field `F_q`, truncated Laurent polynomials over
//!   `F_q[t, 1/t]` with tracked precision windows, and the exact cyclotomic
//!   scalar field `Q(zeta_m)`.
//! * [`rootdata`] - root systems, coweights, Weyl group, concave level
//!   functions, and the purely combinatorial volume / dimension formulas.
//! * [`torus`] - characters of `T(O)`, conductors, the level function
//!   `f_mu`, the subgroups `T_f` and `T' = <T_c, T_f>`, and the finite
//!   quotient `A = J/J'`.
//! * [`group`] - the matrix model of `GL_N(F)`: membership tests for `J`,
//!   `J'`, the Iwahori decomposition, and the character `mu` extended to `J`.
//! * [`cosets`] - enumeration of the relevant double cosets `J t^lambda J`
//!   as tables of `J'`-cosets, with brute-force oracles for coset-product
//!   and fiber-dimension laws.
//! * [`hecke`] - basis functions `f_lambda`, exact convolution over coset
//!   tables, the Satake normalization constants `b_lambda`, the family
//!   vector `p_0`, and the counting oracle for `b_lambda`.
//! * [`dims`] - dimension and semismallness certificates.
//! * [`session`] - configuration plumbing shared by tests and the CLI.
//!
//! All arithmetic is exact. Comparisons below an element's precision window
//! are decided; comparisons at or above it raise [`Error::Precision`]
//! instead of guessing.

pub mod cosets;
pub mod dims;
pub mod group;
pub mod hecke;
pub mod ring;
pub mod rootdata;
pub mod session;
pub mod torus;

/// Crate-wide error type. Variants mirror the failure modes of the
/// individual layers so callers can react to specific conditions.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("element is not invertible")]
    NotInvertible,
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("precision too low: {0}")]
    Precision(String),
    #[error("concavity violated at roots {alpha:?} + {beta:?}")]
    ConcavityViolation { alpha: Vec<i64>, beta: Vec<i64> },
    #[error("f(alpha) + f(-alpha) < 1 at root {alpha:?}")]
    PositivityViolation { alpha: Vec<i64> },
    #[error("dominance precondition failed: {0}")]
    DominanceError(String),
    #[error("element is not in J: {0}")]
    NotInJ(String),
    #[error("character is not trivial on T'")]
    CharacterNotTrivialOnTPrime,
    #[error("invalid character specification: {0}")]
    InvalidCharacter(String),
    #[error("truncation too small: {0}")]
    TruncationTooSmall(String),
    #[error("element does not lie in J t^lambda J for any lambda in the box")]
    NotRelevantInBox,
    #[error("inconsistent factorizations of a relevant element: {0}")]
    FactorizationInconsistent(String),
    #[error("convolution support leaves the enumerated box: {0}")]
    SupportOutsideBox(String),
    #[error("property violated: {0}")]
    PropertyViolation(String),
    #[error("operation requires a torus character but none was configured")]
    NoCharacter,
    #[error("bad configuration: {0}")]
    Config(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Serde(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
