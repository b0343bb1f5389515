use std::ops::RangeInclusive;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::exactmath::{int, Poly};
use crate::sequences::global;

use super::inputs::ParamKind;
use super::registry::{lookup, registry, IdentitySpec};
use super::{IdentityError, Inputs};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct IdentityReport {
    pub identity: String,
    pub inputs: Inputs,
    pub status: Status,
    pub lhs: Poly,
    pub rhs: Poly,
    pub difference: Poly,
    pub elapsed: Duration,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct VerifyOptions {
    /// Flip the sign of one right-hand term before comparing.
    pub mutate_rhs: bool,
}

/// Restricts or overrides an identity's default grid.
#[derive(Debug, Clone, Default)]
pub struct GridRequest {
    pub n: Option<RangeInclusive<usize>>,
    pub k: Option<usize>,
    /// Parameter values to use instead of the default sets; `n` is ignored.
    pub params: Inputs,
}

impl GridRequest {
    fn has_overrides(&self) -> bool {
        [ParamKind::A, ParamKind::B, ParamKind::AVec, ParamKind::P, ParamKind::Epsilon]
            .into_iter()
            .any(|p| self.params.has(p))
    }
}

pub fn default_grid(name: &str) -> Result<Vec<Inputs>, IdentityError> {
    Ok(lookup(name)?.default_grid())
}

fn push_unique<T: PartialEq>(v: &mut Vec<T>, x: T) {
    if !v.contains(&x) {
        v.push(x);
    }
}

/// Builds the grid for one identity. Parameter sets come from the request
/// when given, else from the default grid; `n` values likewise.
pub fn grid_for(spec: &IdentitySpec, req: &GridRequest) -> Vec<Inputs> {
    let base = spec.default_grid();
    let mut signatures = Vec::new();
    for point in &base {
        push_unique(&mut signatures, point.clone().with_n(0));
    }
    if req.has_overrides() {
        let mut sig = req.params.clone().with_n(0);
        if let Some(v) = sig.a_vec.clone() {
            sig = sig.with_a_vec(v);
        } else if let Some(k) = req.k {
            sig = sig.with_k(k);
        }
        signatures = vec![sig];
    } else if let Some(k) = req.k {
        signatures.retain(|s| s.k == Some(k));
        if signatures.is_empty() {
            let sig = if spec.params.contains(&ParamKind::AVec) {
                Inputs::new(0).with_a_vec(vec![int(1); k])
            } else {
                Inputs::new(0).with_k(k)
            };
            signatures.push(sig);
        }
    }

    let mut out = Vec::new();
    for sig in signatures {
        let ns: Vec<usize> = match &req.n {
            Some(r) => r.clone().collect(),
            None => {
                let same_sig: Vec<usize> =
                    base.iter().filter(|p| (*p).clone().with_n(0) == sig).map(|p| p.n).collect();
                if !same_sig.is_empty() {
                    same_sig
                } else {
                    let mut fallback = Vec::new();
                    for p in base.iter().filter(|p| p.k == sig.k || sig.k.is_none()) {
                        push_unique(&mut fallback, p.n);
                    }
                    fallback
                }
            }
        };
        out.extend(ns.into_iter().map(|n| sig.clone().with_n(n)));
    }
    out
}

fn warm_for(grid: &[Inputs]) {
    let max_n = grid.iter().map(|i| i.n).max().unwrap_or(0);
    global().warm(2 * max_n + 4);
}

fn run_point(
    spec: &IdentitySpec,
    inputs: &Inputs,
    options: VerifyOptions,
) -> Result<IdentityReport, IdentityError> {
    let start = Instant::now();
    let mut sides = spec.evaluate(inputs)?;
    if options.mutate_rhs {
        sides.mutate();
    }
    let rhs = sides.rhs();
    let difference = &sides.lhs - &rhs;
    let status = if difference.is_zero() { Status::Pass } else { Status::Fail };
    Ok(IdentityReport {
        identity: spec.name.to_string(),
        inputs: inputs.clone(),
        status,
        lhs: sides.lhs,
        rhs,
        difference,
        elapsed: start.elapsed(),
    })
}

/// One result per grid point, in grid order. A point outside the validity
/// domain yields an error entry; the rest of the batch still runs.
pub fn verify(
    name: &str,
    grid: &[Inputs],
    options: VerifyOptions,
) -> Result<Vec<Result<IdentityReport, IdentityError>>, IdentityError> {
    let spec = lookup(name)?;
    warm_for(grid);
    Ok(grid.par_iter().map(|i| run_point(spec, i, options)).collect())
}

/// Every registry entry on its default grid, in registry order.
pub fn verify_all(
    options: VerifyOptions,
) -> Vec<(&'static str, Vec<Result<IdentityReport, IdentityError>>)> {
    let grids: Vec<(&IdentitySpec, Vec<Inputs>)> =
        registry().iter().map(|s| (s, s.default_grid())).collect();
    let all: Vec<Inputs> = grids.iter().flat_map(|(_, g)| g.iter().cloned()).collect();
    warm_for(&all);
    let jobs: Vec<(&IdentitySpec, &Inputs)> =
        grids.iter().flat_map(|(s, g)| g.iter().map(move |i| (*s, i))).collect();
    let mut results: Vec<Result<IdentityReport, IdentityError>> =
        jobs.par_iter().map(|(s, i)| run_point(s, i, options)).collect();
    let mut out = Vec::new();
    for (spec, grid) in grids.iter().rev() {
        let tail = results.split_off(results.len() - grid.len());
        out.push((spec.name, tail));
    }
    out.reverse();
    out
}
