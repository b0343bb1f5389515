use std::ops::RangeInclusive;

use bek_core::exactmath::{parse_rational, Rational};
use bek_core::identities::Inputs;
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::CliError;

#[derive(Debug, Parser)]
#[command(name = "bek", version, about = "Exact verification of Bernoulli/Euler convolution identities")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List registered identities with their validity and default grid.
    List,
    /// Print B_n, E_n, G_n, B_n(x) and E_n(x).
    Tables {
        #[arg(long, default_value_t = 6)]
        max_n: usize,
    },
    /// Verify one identity over a grid.
    Verify(VerifyArgs),
    /// Verify every identity on its default grid.
    VerifyAll(RunFlags),
    /// Monte Carlo check of a Dirichlet mixed moment.
    Mc(McArgs),
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long)]
    pub identity: String,
    /// `A..B`, `A..=B` (both inclusive) or a single `N`.
    #[arg(long)]
    pub n: Option<String>,
    #[arg(long)]
    pub k: Option<usize>,
    /// `a=1/2,b=3/2`, `a_vec=1,2,1/2`, `p=1/2` or `epsilon=1/3`; may repeat.
    #[arg(long, allow_hyphen_values = true)]
    pub params: Vec<String>,
    #[command(flatten)]
    pub flags: RunFlags,
}

#[derive(Debug, Clone, Copy, Args)]
pub struct RunFlags {
    /// Record per-point wall time (makes output nondeterministic).
    #[arg(long)]
    pub timing: bool,
    /// Flip the sign of one right-hand term; every affected point should fail.
    #[arg(long, hide = true)]
    pub mutate_rhs: bool,
}

#[derive(Debug, Args)]
pub struct McArgs {
    /// Shape parameters, e.g. `1,2,1/2`.
    #[arg(long)]
    pub a: String,
    /// Exponents, e.g. `2,1,3`.
    #[arg(long)]
    pub l: String,
    #[arg(long, default_value_t = 1_000_000)]
    pub samples: u64,
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    /// Pass when |mean − exact| ≤ sigma · stderr.
    #[arg(long, default_value_t = 4.0)]
    pub sigma: f64,
}

pub fn parse_n_range(s: &str) -> Result<RangeInclusive<usize>, CliError> {
    let bad = || CliError::Usage(format!("invalid --n `{s}`; expected A..B or N"));
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
    let range = if let Some((lo, hi)) = s.split_once("..=") {
        num(lo)?..=num(hi)?
    } else if let Some((lo, hi)) = s.split_once("..") {
        num(lo)?..=num(hi)?
    } else {
        let n = num(s)?;
        n..=n
    };
    if range.is_empty() {
        return Err(bad());
    }
    Ok(range)
}

pub fn parse_rational_list(s: &str) -> Result<Vec<Rational>, CliError> {
    s.split(',')
        .map(|t| parse_rational(t.trim()).map_err(|e| CliError::Usage(e.to_string())))
        .collect()
}

pub fn parse_usize_list(s: &str) -> Result<Vec<usize>, CliError> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse()
                .map_err(|_| CliError::Usage(format!("invalid exponent `{t}`")))
        })
        .collect()
}

/// Parses `--params` values. A comma-separated token without `=` extends
/// the previous key, which is how `a_vec=1,2,1/2` reads.
pub fn parse_params(raw: &[String]) -> Result<Inputs, CliError> {
    let mut entries: Vec<(String, Vec<String>)> = Vec::new();
    for token in raw.iter().flat_map(|r| r.split(',')) {
        let token = token.trim();
        if token.is_empty() {
            continue;
        }
        match token.split_once('=') {
            Some((k, v)) => entries.push((k.trim().to_string(), vec![v.trim().to_string()])),
            None => match entries.last_mut() {
                Some((_, values)) => values.push(token.to_string()),
                None => return Err(CliError::Usage(format!("parameter value `{token}` has no name"))),
            },
        }
    }
    let mut inputs = Inputs::default();
    for (key, values) in entries {
        let parse = |v: &str| parse_rational(v).map_err(|e| CliError::Usage(format!("{key}: {e}")));
        let single = || -> Result<Rational, CliError> {
            match values.as_slice() {
                [v] => parse(v),
                _ => Err(CliError::Usage(format!("`{key}` takes a single value"))),
            }
        };
        match key.as_str() {
            "a" => inputs.a = Some(single()?),
            "b" => inputs.b = Some(single()?),
            "p" => inputs.p = Some(single()?),
            "epsilon" | "eps" => inputs.epsilon = Some(single()?),
            "a_vec" | "a-vec" => {
                let v = values.iter().map(|s| parse(s)).collect::<Result<Vec<_>, _>>()?;
                inputs = inputs.with_a_vec(v);
            }
            other => {
                return Err(CliError::Usage(format!(
                    "unknown parameter `{other}`; expected a, b, a_vec, p or epsilon"
                )))
            }
        }
    }
    Ok(inputs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use bek_core::exactmath::{int, rat};

    #[test]
    fn ranges() {
        assert_eq!(parse_n_range("4..12").unwrap(), 4..=12);
        assert_eq!(parse_n_range("4..=12").unwrap(), 4..=12);
        assert_eq!(parse_n_range("7").unwrap(), 7..=7);
        assert!(parse_n_range("5..2").is_err());
        assert!(parse_n_range("x").is_err());
    }

    #[test]
    fn params() {
        let p = parse_params(&["a=1/2,b=3/2".into()]).unwrap();
        assert_eq!((p.a, p.b), (Some(rat(1, 2)), Some(rat(3, 2))));
        let p = parse_params(&["a_vec=1,2,1/2".into()]).unwrap();
        assert_eq!(p.a_vec, Some(vec![int(1), int(2), rat(1, 2)]));
        assert_eq!(p.k, Some(3));
        let p = parse_params(&["p=1/2".into(), "epsilon=3".into()]).unwrap();
        assert_eq!((p.p, p.epsilon), (Some(rat(1, 2)), Some(int(3))));
        assert!(parse_params(&["q=1".into()]).is_err());
        assert!(parse_params(&["a=0.5".into()]).is_err());
        assert!(parse_params(&["a=1,2".into()]).is_err());
        assert!(parse_params(&["1".into()]).is_err());
    }
}
