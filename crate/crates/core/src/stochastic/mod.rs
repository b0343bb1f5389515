//! Monte Carlo check of the Dirichlet mixed-moment formula
//! `E[u_1^{l_1}⋯u_k^{l_k}] = ∏(a_i)_{l_i} / (Σa)_{Σl}`, where
//! `u_i = Γ_{a_i} / Σ_j Γ_{a_j}` for independent unit-scale gamma variables.
//!
//! Samples are drawn in fixed-size blocks. Block `b` always uses ChaCha
//! stream `b` of the master seed, and block statistics are merged in block
//! order, so estimates do not depend on the number of worker threads.

mod accumulate;
mod gamma;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::exactmath::{compositions, is_positive, multinomial, pochhammer, Rational};

pub use accumulate::SampleStats;
pub use gamma::{sample_gamma, GammaSampler};

/// Samples per RNG stream.
pub const BLOCK_SIZE: u64 = 1 << 16;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum StochasticError {
    #[error("shape parameter must be positive, got {0}")]
    NonPositiveShape(String),
    #[error("shape and exponent vectors must be non-empty")]
    Empty,
    #[error("need at least {min} components, got {got}")]
    TooFewComponents { min: usize, got: usize },
    #[error("{shapes} shapes but {exponents} exponents")]
    LengthMismatch { shapes: usize, exponents: usize },
    #[error("need at least 2 samples, got {0}")]
    TooFewSamples(u64),
}

#[derive(Debug, Clone, PartialEq)]
pub struct MomentQuery {
    pub a_vec: Vec<Rational>,
    pub l_vec: Vec<usize>,
    pub samples: u64,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct MomentEstimate {
    pub mean: f64,
    pub stderr: f64,
    pub n_samples: u64,
    pub exact: Rational,
}

impl MomentEstimate {
    pub fn exact_f64(&self) -> f64 {
        rational_to_f64(&self.exact)
    }

    /// `|mean − exact| / stderr`; zero when both the error and stderr vanish.
    pub fn z_score(&self) -> f64 {
        let err = (self.mean - self.exact_f64()).abs();
        if err == 0.0 {
            0.0
        } else {
            err / self.stderr
        }
    }

    pub fn within(&self, sigma: f64) -> bool {
        (self.mean - self.exact_f64()).abs() <= sigma * self.stderr
    }
}

pub fn rational_to_f64(r: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

fn check_shapes(a_vec: &[Rational]) -> Result<(), StochasticError> {
    if a_vec.is_empty() {
        return Err(StochasticError::Empty);
    }
    match a_vec.iter().find(|a| !is_positive(a)) {
        Some(bad) => Err(StochasticError::NonPositiveShape(bad.to_string())),
        None => Ok(()),
    }
}

/// `∏(a_i)_{l_i} / (Σa)_{Σl}`.
pub fn dirichlet_moment_exact(a_vec: &[Rational], l_vec: &[usize]) -> Result<Rational, StochasticError> {
    check_shapes(a_vec)?;
    if l_vec.len() != a_vec.len() {
        return Err(StochasticError::LengthMismatch {
            shapes: a_vec.len(),
            exponents: l_vec.len(),
        });
    }
    let num: Rational = a_vec.iter().zip(l_vec).map(|(a, &l)| pochhammer(a, l)).product();
    let total: Rational = a_vec.iter().sum();
    Ok(num / pochhammer(&total, l_vec.iter().sum()))
}

/// `Σ_{|l|=n} multinomial(n, l) · E[u^l]`, which must equal 1 because the
/// weights sum to 1.
pub fn normalization_check(a_vec: &[Rational], n: usize) -> Result<Rational, StochasticError> {
    if a_vec.len() < 2 {
        return Err(StochasticError::TooFewComponents { min: 2, got: a_vec.len() });
    }
    check_shapes(a_vec)?;
    let mut total = Rational::from_integer(0.into());
    for comp in compositions(n, a_vec.len()) {
        let m = multinomial(n, comp.parts()).expect("composition parts sum to n");
        total += m * dirichlet_moment_exact(a_vec, comp.parts())?;
    }
    Ok(total)
}

/// Runs `draw` once per sample, each call filling one value per output
/// slot, and returns per-slot statistics. `draw` also gets a scratch buffer
/// that lives for one block.
fn run_blocks<F>(samples: u64, seed: u64, width: usize, draw: F) -> Vec<SampleStats>
where
    F: Fn(&mut ChaCha8Rng, &mut Vec<f64>, &mut [f64]) + Sync,
{
    let blocks = samples.div_ceil(BLOCK_SIZE);
    let per_block: Vec<Vec<SampleStats>> = (0..blocks)
        .into_par_iter()
        .map(|b| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(b);
            let len = BLOCK_SIZE.min(samples - b * BLOCK_SIZE) as usize;
            let mut columns = vec![Vec::with_capacity(len); width];
            let mut row = vec![0.0; width];
            let mut scratch = Vec::new();
            for _ in 0..len {
                draw(&mut rng, &mut scratch, &mut row);
                for (col, &v) in columns.iter_mut().zip(&row) {
                    col.push(v);
                }
            }
            columns.iter().map(|c| SampleStats::from_values(c)).collect()
        })
        .collect();
    let mut merged = vec![SampleStats::default(); width];
    for block in per_block {
        for (m, s) in merged.iter_mut().zip(block) {
            m.merge(&s);
        }
    }
    merged
}

fn samplers(a_vec: &[Rational]) -> Result<Vec<GammaSampler>, StochasticError> {
    a_vec.iter().map(|a| GammaSampler::new(rational_to_f64(a))).collect()
}

pub fn dirichlet_moment_mc(q: &MomentQuery) -> Result<MomentEstimate, StochasticError> {
    if q.a_vec.len() < 2 {
        return Err(StochasticError::TooFewComponents { min: 2, got: q.a_vec.len() });
    }
    if q.samples < 2 {
        return Err(StochasticError::TooFewSamples(q.samples));
    }
    let exact = dirichlet_moment_exact(&q.a_vec, &q.l_vec)?;
    let gammas = samplers(&q.a_vec)?;
    let exps: Vec<i32> = q.l_vec.iter().map(|&l| l as i32).collect();
    let stats = run_blocks(q.samples, q.seed, 1, |rng, g, out| {
        g.clear();
        g.extend(gammas.iter().map(|s| s.sample(rng)));
        let total: f64 = g.iter().sum();
        out[0] = g.iter().zip(&exps).map(|(x, &l)| (x / total).powi(l)).product();
    });
    Ok(MomentEstimate {
        mean: stats[0].mean(),
        stderr: stats[0].stderr(),
        n_samples: q.samples,
        exact,
    })
}

/// Raw moments `1..=max_order` of `Γ_{a_1} + ⋯ + Γ_{a_m}` against
/// `(a_1+⋯+a_m)_n`. With one shape this checks the gamma moments; with
/// several it checks additivity.
pub fn gamma_moments_mc(
    shapes: &[Rational],
    max_order: usize,
    samples: u64,
    seed: u64,
) -> Result<Vec<MomentEstimate>, StochasticError> {
    if samples < 2 {
        return Err(StochasticError::TooFewSamples(samples));
    }
    check_shapes(shapes)?;
    let gammas = samplers(shapes)?;
    let stats = run_blocks(samples, seed, max_order, |rng, _, out| {
        let x: f64 = gammas.iter().map(|s| s.sample(rng)).sum();
        let mut p = 1.0;
        for slot in out.iter_mut() {
            p *= x;
            *slot = p;
        }
    });
    let total: Rational = shapes.iter().sum();
    Ok(stats
        .iter()
        .enumerate()
        .map(|(i, s)| MomentEstimate {
            mean: s.mean(),
            stderr: s.stderr(),
            n_samples: samples,
            exact: pochhammer(&total, i + 1),
        })
        .collect())
}
