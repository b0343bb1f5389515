//! Registry of convolution identities with exact evaluators for both sides,
//! and the batch verification engine.
//!
//! Every identity is stored as `lhs` plus a list of right-hand terms, one
//! per displayed summand. Keeping the terms separate lets the harness flip
//! the sign of a single term to check that a broken identity is reported.

mod bernoulli;
mod euler;
mod gamma;
mod helpers;
mod inputs;
mod registry;
mod theorems;
mod verify;

use crate::exactmath::{ExactMathError, Poly, Rational};

pub use inputs::{Inputs, ParamKind};
pub use registry::{evaluate, lookup, registry, IdentitySpec, Level};
pub use verify::{
    default_grid, grid_for, verify, verify_all, GridRequest, IdentityReport, Status,
    VerifyOptions,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum IdentityError {
    #[error("unknown identity `{name}`; valid names: {}", valid.join(", "))]
    UnknownIdentity { name: String, valid: Vec<String> },
    #[error("{identity}: inputs ({inputs}) violate validity `{validity}`")]
    OutOfDomain {
        identity: String,
        inputs: String,
        validity: String,
    },
    #[error("{identity}: missing parameter `{param}`")]
    MissingParameter { identity: String, param: String },
    #[error("{identity}: parameter `{param}` is not used by this identity")]
    UnexpectedParameter { identity: String, param: String },
    #[error(transparent)]
    Math(#[from] ExactMathError),
}

/// Both sides of one identity instance.
#[derive(Debug, Clone, PartialEq)]
pub struct Sides {
    pub lhs: Poly,
    pub rhs_terms: Vec<Poly>,
}

impl Sides {
    pub fn new(lhs: Poly, rhs_terms: Vec<Poly>) -> Self {
        Sides { lhs, rhs_terms }
    }

    pub fn rhs(&self) -> Poly {
        let mut total = Poly::zero();
        for t in &self.rhs_terms {
            total += t;
        }
        total
    }

    pub fn difference(&self) -> Poly {
        &self.lhs - &self.rhs()
    }

    pub fn holds(&self) -> bool {
        self.difference().is_zero()
    }

    /// Negates the last nonzero right-hand term. Returns `false` when every
    /// term is zero, in which case nothing changes.
    pub fn mutate(&mut self) -> bool {
        match self.rhs_terms.iter_mut().rev().find(|t| !t.is_zero()) {
            Some(t) => {
                *t = -t.clone();
                true
            }
            None => false,
        }
    }

    pub fn into_pair(self) -> (Poly, Poly) {
        let rhs = self.rhs();
        (self.lhs, rhs)
    }
}

fn pair(name: &str, inputs: Inputs) -> Result<(Poly, Poly), IdentityError> {
    evaluate(name, &inputs).map(Sides::into_pair)
}

fn number_pair(name: &str, inputs: Inputs) -> Result<(Rational, Rational), IdentityError> {
    let (l, r) = pair(name, inputs)?;
    Ok((l.coeff(0), r.coeff(0)))
}

/// Both sides of the two-parameter Bernoulli convolution, `n ≥ 1`, `a, b > 0`.
pub fn eval_theorem1(n: usize, a: Rational, b: Rational) -> Result<(Poly, Poly), IdentityError> {
    pair("theorem1", Inputs::new(n).with_a(a).with_b(b))
}

/// The `k`-fold Bernoulli convolution with Dirichlet weights `a_vec`.
pub fn eval_theorem2(n: usize, a_vec: Vec<Rational>) -> Result<(Poly, Poly), IdentityError> {
    pair("theorem2", Inputs::new(n).with_a_vec(a_vec))
}

/// Euler-polynomial analogue of [`eval_theorem1`].
pub fn eval_theorem3(n: usize, a: Rational, b: Rational) -> Result<(Poly, Poly), IdentityError> {
    pair("theorem3", Inputs::new(n).with_a(a).with_b(b))
}

/// Euler-polynomial analogue of [`eval_theorem2`]; `k = 1` is allowed.
pub fn eval_theorem4(n: usize, a_vec: Vec<Rational>) -> Result<(Poly, Poly), IdentityError> {
    pair("theorem4", Inputs::new(n).with_a_vec(a_vec))
}

/// Any registry entry by name.
pub fn eval_corollary(name: &str, inputs: &Inputs) -> Result<(Poly, Poly), IdentityError> {
    evaluate(name, inputs).map(Sides::into_pair)
}

/// Dunne–Schubert, both sides divided by `Γ(p+1)²`. `p = 0` is Miki's case.
pub fn eval_dunne_schubert(n: usize, p: Rational) -> Result<(Rational, Rational), IdentityError> {
    number_pair("dunne-schubert", Inputs::new(n).with_p(p))
}

/// The closed-form variant of Dunne–Schubert valid for `p > 0`.
pub fn eval_eq72(n: usize, p: Rational) -> Result<(Rational, Rational), IdentityError> {
    number_pair("eq-7-2", Inputs::new(n).with_p(p))
}

/// `Σ_{l=1}^{2n-1} (p)_l/(2p+1)_l` against its closed form.
pub fn gamma_sum_identity(n: usize, p: Rational) -> Result<(Rational, Rational), IdentityError> {
    number_pair("gamma-sum", Inputs::new(n).with_p(p))
}

#[cfg(test)]
mod tests;
