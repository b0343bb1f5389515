//! Exact scalar and polynomial arithmetic plus the combinatorial kernel
//! (binomials, multinomials, Pochhammer symbols, harmonic numbers, weak
//! compositions) that every identity is built from.

mod combinatorics;
mod poly;
mod rational;

pub use combinatorics::{
    binomial, binomial_int, factorial, gamma_ratio, harmonic, harmonic_second, harmonic_shifted,
    multinomial, pochhammer, subsets_of_size, Composition, Compositions, compositions,
};
pub use poly::{poly_compose_linear, poly_eval, poly_mul, Poly};
pub use rational::{big, format_rational, int, is_positive, parse_rational, rat, Rational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExactMathError {
    #[error("composition {parts:?} does not sum to {n}")]
    MalformedComposition { n: usize, parts: Vec<usize> },
    #[error("shifted harmonic numbers need a > 0, got {0}")]
    NonPositiveShift(String),
    #[error("not an exact rational: {0:?} (use forms like 3/7 or -2)")]
    ParseRational(String),
}
