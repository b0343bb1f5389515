//! Umbral symbols with moment evaluation, forward and discrete-mean
//! difference operators, and exact checkers for the operator and symbol
//! expansions that the convolution theorems rest on.
//!
//! Symbols are evaluated only through their moments; there is no rewriting.
//! An annihilating pair such as `(ℬ, 𝒰)` is therefore "annihilating" exactly
//! when the evaluated power vanishes.

mod delta;
mod expr;
mod lemmas;

pub use delta::{
    apply_delta, discrete_mean, forward_difference, verify_lemma1, verify_lemma3, DeltaVariant,
    DifferenceOp,
};
pub use expr::{
    moment, umbral_compose, umbral_eval, umbral_pow, Atom, Monomial, SymbolId, SymbolKind,
    UmbralExpr,
};
pub use lemmas::{
    annihilation_value, discrete_uniform_shift, uniform_difference, verify_annihilation,
    verify_general_f, verify_lemma2, verify_lemma4, AnnihilatingPair,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum UmbralError {
    #[error("shift parameters must sum to 1, got {0}")]
    ShiftsDoNotSumToOne(String),
    #[error("at least one shift parameter is required")]
    EmptyShifts,
}
