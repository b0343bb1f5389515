//! Exact Bernoulli and Euler convolution identities.
//!
//! [`exactmath`] provides rationals, dense polynomials and combinatorial
//! coefficients; [`sequences`] memoizes Bernoulli, Euler and Genocchi
//! numbers and polynomials. [`umbral`] evaluates symbolic expressions in
//! umbral symbols, [`identities`] holds the registry of identities and the
//! verification engine, and [`stochastic`] checks the Dirichlet moment
//! formula by simulation.

pub mod exactmath;
pub mod identities;
pub mod sequences;
pub mod stochastic;
pub mod umbral;

pub use exactmath::{format_rational, parse_rational, Poly, Rational};
pub use identities::{
    IdentityError, IdentityReport, IdentitySpec, Inputs, Level, Sides, Status, VerifyOptions,
};
pub use sequences::SequenceCache;
pub use stochastic::{MomentEstimate, MomentQuery, StochasticError};
pub use umbral::{SymbolId, UmbralExpr};
