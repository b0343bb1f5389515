//! The `bek` command-line frontend: table regeneration, identity
//! verification and Monte Carlo checks, with text, JSON or CSV output.
//!
//! Exit status is 0 when everything passes, 1 when an identity or a
//! statistical check fails, and 2 for usage or domain errors.

mod args;
mod render;

use std::io::{self, Write};

use bek_core::identities::{
    grid_for, lookup, verify, verify_all, GridRequest, IdentityError, IdentityReport, Status,
    VerifyOptions,
};
use bek_core::stochastic::{dirichlet_moment_mc, MomentQuery, StochasticError};

pub use args::{parse_n_range, parse_params, Cli, Command, Format, McArgs, RunFlags, VerifyArgs};
pub use render::Style;

pub const EXIT_PASS: u8 = 0;
pub const EXIT_FAIL: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Identity(#[from] IdentityError),
    #[error("{0} grid point(s) outside the validity domain:\n{1}")]
    Domain(usize, String),
    #[error(transparent)]
    Stochastic(#[from] StochasticError),
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        EXIT_USAGE
    }
}

fn options(flags: RunFlags) -> VerifyOptions {
    VerifyOptions {
        mutate_rhs: flags.mutate_rhs,
    }
}

fn exit_for(reports: &[IdentityReport]) -> u8 {
    if reports.iter().all(|r| r.status == Status::Pass) {
        EXIT_PASS
    } else {
        EXIT_FAIL
    }
}

/// Runs one parsed command, writing the report stream to `out`, and
/// returns the exit status.
pub fn run(cli: Cli, out: &mut dyn Write) -> Result<u8, CliError> {
    let style = Style::detect(cli.format);
    match cli.command {
        Command::List => {
            render::list(out, cli.format)?;
            Ok(EXIT_PASS)
        }
        Command::Tables { max_n } => {
            render::tables(out, cli.format, max_n)?;
            Ok(EXIT_PASS)
        }
        Command::Verify(args) => run_verify(args, cli.format, style, out),
        Command::VerifyAll(flags) => {
            let results = verify_all(options(flags));
            let mut groups = Vec::new();
            for (name, reports) in results {
                let reports = reports.into_iter().collect::<Result<Vec<_>, _>>()?;
                groups.push((name, reports));
            }
            render::reports(out, cli.format, style, &groups, flags.timing)?;
            let all: Vec<IdentityReport> = groups.into_iter().flat_map(|(_, r)| r).collect();
            Ok(exit_for(&all))
        }
        Command::Mc(args) => run_mc(args, cli.format, style, out),
    }
}

fn run_verify(args: VerifyArgs, format: Format, style: Style, out: &mut dyn Write) -> Result<u8, CliError> {
    let spec = lookup(&args.identity)?;
    let req = GridRequest {
        n: args.n.as_deref().map(parse_n_range).transpose()?,
        k: args.k,
        params: parse_params(&args.params)?,
    };
    let grid = grid_for(spec, &req);
    let problems: Vec<String> = grid
        .iter()
        .filter_map(|i| spec.check_inputs(i).err())
        .map(|e| format!("  {e}"))
        .collect();
    if !problems.is_empty() {
        return Err(CliError::Domain(problems.len(), problems.join("\n")));
    }
    let reports = verify(spec.name, &grid, options(args.flags))?
        .into_iter()
        .collect::<Result<Vec<_>, _>>()?;
    let code = exit_for(&reports);
    render::reports(out, format, style, &[(spec.name, reports)], args.flags.timing)?;
    Ok(code)
}

fn run_mc(args: McArgs, format: Format, style: Style, out: &mut dyn Write) -> Result<u8, CliError> {
    if !(args.sigma > 0.0 && args.sigma.is_finite()) {
        return Err(CliError::Usage(format!("--sigma must be positive, got {}", args.sigma)));
    }
    let query = MomentQuery {
        a_vec: args::parse_rational_list(&args.a)?,
        l_vec: args::parse_usize_list(&args.l)?,
        samples: args.samples,
        seed: args.seed,
    };
    let estimate = dirichlet_moment_mc(&query)?;
    let pass = estimate.within(args.sigma);
    render::mc(out, format, style, &query, &estimate, args.sigma, pass)?;
    Ok(if pass { EXIT_PASS } else { EXIT_FAIL })
}
