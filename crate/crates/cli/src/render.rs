use std::io::{IsTerminal, Write};

use bek_core::exactmath::{format_rational, Poly, Rational};
use bek_core::identities::{registry, IdentityReport, Inputs, Status};
use bek_core::sequences::global;
use bek_core::stochastic::{MomentEstimate, MomentQuery};
use serde_json::{json, Value};

use crate::{CliError, Format};

/// Whether text output may use ANSI colour.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Style {
    pub color: bool,
}

impl Style {
    pub fn detect(format: Format) -> Self {
        let no_color = std::env::var_os("NO_COLOR").is_some_and(|v| !v.is_empty());
        Style {
            color: format == Format::Text && !no_color && std::io::stdout().is_terminal(),
        }
    }

    fn status(&self, pass: bool) -> String {
        let (word, code) = if pass { ("PASS", "32") } else { ("FAIL", "31") };
        if self.color {
            format!("\x1b[{code}m{word}\x1b[0m")
        } else {
            word.to_string()
        }
    }
}

fn poly_json(p: &Poly) -> Value {
    Value::Array(p.coeffs().iter().map(|c| Value::String(format_rational(c))).collect())
}

fn poly_csv(p: &Poly) -> String {
    p.coeffs().iter().map(format_rational).collect::<Vec<_>>().join(" ")
}

fn inputs_json(i: &Inputs) -> Value {
    let mut map = serde_json::Map::new();
    map.insert("n".into(), json!(i.n));
    if let Some(k) = i.k {
        map.insert("k".into(), json!(k));
    }
    for (name, v) in [("a", &i.a), ("b", &i.b), ("p", &i.p), ("epsilon", &i.epsilon)] {
        if let Some(v) = v {
            map.insert(name.into(), json!(format_rational(v)));
        }
    }
    if let Some(v) = &i.a_vec {
        map.insert("a_vec".into(), json!(v.iter().map(format_rational).collect::<Vec<_>>()));
    }
    Value::Object(map)
}

fn elapsed_ms(r: &IdentityReport, timing: bool) -> Value {
    if timing {
        json!(r.elapsed.as_secs_f64() * 1e3)
    } else {
        Value::Null
    }
}

pub fn report_json(r: &IdentityReport, timing: bool) -> Value {
    json!({
        "identity": r.identity,
        "inputs": inputs_json(&r.inputs),
        "status": r.status.as_str(),
        "lhs": poly_json(&r.lhs),
        "rhs": poly_json(&r.rhs),
        "difference": poly_json(&r.difference),
        "elapsed_ms": elapsed_ms(r, timing),
    })
}

fn write_json(out: &mut dyn Write, v: &Value) -> Result<(), CliError> {
    serde_json::to_writer_pretty(&mut *out, v)?;
    writeln!(out)?;
    Ok(())
}

pub fn reports(
    out: &mut dyn Write,
    format: Format,
    style: Style,
    groups: &[(&str, Vec<IdentityReport>)],
    timing: bool,
) -> Result<(), CliError> {
    match format {
        Format::Json => {
            let all: Vec<Value> =
                groups.iter().flat_map(|(_, rs)| rs.iter().map(|r| report_json(r, timing))).collect();
            write_json(out, &Value::Array(all))
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record([
                "identity", "n", "k", "a", "b", "a_vec", "p", "epsilon", "status", "lhs", "rhs",
                "difference", "elapsed_ms",
            ])?;
            for r in groups.iter().flat_map(|(_, rs)| rs) {
                let opt = |v: &Option<Rational>| v.as_ref().map(format_rational).unwrap_or_default();
                let i = &r.inputs;
                let a_vec = i
                    .a_vec
                    .as_ref()
                    .map(|v| v.iter().map(format_rational).collect::<Vec<_>>().join(" "))
                    .unwrap_or_default();
                let ms = if timing { format!("{:.3}", r.elapsed.as_secs_f64() * 1e3) } else { String::new() };
                w.write_record([
                    r.identity.clone(),
                    i.n.to_string(),
                    i.k.map(|k| k.to_string()).unwrap_or_default(),
                    opt(&i.a),
                    opt(&i.b),
                    a_vec,
                    opt(&i.p),
                    opt(&i.epsilon),
                    r.status.as_str().to_string(),
                    poly_csv(&r.lhs),
                    poly_csv(&r.rhs),
                    poly_csv(&r.difference),
                    ms,
                ])?;
            }
            w.flush()?;
            Ok(())
        }
        Format::Text => {
            let (mut passed, mut total) = (0, 0);
            for (name, rs) in groups {
                let ok = rs.iter().filter(|r| r.status == Status::Pass).count();
                passed += ok;
                total += rs.len();
                let mut line = format!("{} {name}: {ok}/{} pass", style.status(ok == rs.len()), rs.len());
                if timing {
                    let ms: f64 = rs.iter().map(|r| r.elapsed.as_secs_f64() * 1e3).sum();
                    line.push_str(&format!(" ({ms:.1} ms)"));
                }
                writeln!(out, "{line}")?;
                for r in rs.iter().filter(|r| r.status == Status::Fail) {
                    writeln!(out, "  {} {name} [{}]", style.status(false), r.inputs)?;
                    writeln!(out, "    lhs        = {}", r.lhs)?;
                    writeln!(out, "    rhs        = {}", r.rhs)?;
                    writeln!(out, "    difference = {}", r.difference)?;
                }
            }
            if groups.len() > 1 {
                writeln!(out, "total: {passed}/{total} pass")?;
            }
            Ok(())
        }
    }
}

pub fn list(out: &mut dyn Write, format: Format) -> Result<(), CliError> {
    let specs = registry();
    match format {
        Format::Json => {
            let v: Vec<Value> = specs
                .iter()
                .map(|s| {
                    json!({
                        "name": s.name,
                        "summary": s.summary,
                        "level": s.level.as_str(),
                        "params": s.params.iter().map(|p| p.name()).collect::<Vec<_>>(),
                        "validity": s.validity,
                        "default_grid": s.grid,
                    })
                })
                .collect();
            write_json(out, &Value::Array(v))
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["name", "level", "params", "validity", "default_grid", "summary"])?;
            for s in specs {
                let params: Vec<&str> = s.params.iter().map(|p| p.name()).collect();
                w.write_record([s.name, s.level.as_str(), &params.join(" "), s.validity, s.grid, s.summary])?;
            }
            w.flush()?;
            Ok(())
        }
        Format::Text => {
            let width = specs.iter().map(|s| s.name.len()).max().unwrap_or(0);
            for s in specs {
                let params: Vec<&str> = s.params.iter().map(|p| p.name()).collect();
                writeln!(out, "{:width$}  {}", s.name, s.summary)?;
                writeln!(
                    out,
                    "{:width$}  {} level; params: {}; valid for {}; grid: {}",
                    "",
                    s.level.as_str(),
                    params.join(", "),
                    s.validity,
                    s.grid
                )?;
            }
            Ok(())
        }
    }
}

pub fn tables(out: &mut dyn Write, format: Format, max_n: usize) -> Result<(), CliError> {
    let cache = global();
    cache.warm(max_n + 2);
    let rows: Vec<_> = (0..=max_n)
        .map(|n| {
            (
                n,
                cache.bernoulli(n),
                cache.euler(n),
                cache.genocchi(n),
                cache.bernoulli_poly(n),
                cache.euler_poly(n),
            )
        })
        .collect();
    match format {
        Format::Json => {
            let v: Vec<Value> = rows
                .iter()
                .map(|(n, b, e, g, bp, ep)| {
                    json!({
                        "n": n,
                        "bernoulli": format_rational(b),
                        "euler": format_rational(e),
                        "genocchi": format_rational(g),
                        "bernoulli_poly": poly_json(bp),
                        "euler_poly": poly_json(ep),
                    })
                })
                .collect();
            write_json(out, &Value::Array(v))
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["n", "B_n", "E_n", "G_n", "B_n(x)", "E_n(x)"])?;
            for (n, b, e, g, bp, ep) in &rows {
                w.write_record([
                    n.to_string(),
                    format_rational(b),
                    format_rational(e),
                    format_rational(g),
                    bp.to_string(),
                    ep.to_string(),
                ])?;
            }
            w.flush()?;
            Ok(())
        }
        Format::Text => {
            writeln!(out, "{:>3}  {:>12}  {:>8}  {:>8}", "n", "B_n", "E_n", "G_n")?;
            for (n, b, e, g, _, _) in &rows {
                writeln!(
                    out,
                    "{n:>3}  {:>12}  {:>8}  {:>8}",
                    format_rational(b),
                    format_rational(e),
                    format_rational(g)
                )?;
            }
            writeln!(out)?;
            for (n, _, _, _, bp, _) in &rows {
                writeln!(out, "B_{n}(x) = {bp}")?;
            }
            writeln!(out)?;
            for (n, _, _, _, _, ep) in &rows {
                writeln!(out, "E_{n}(x) = {ep}")?;
            }
            Ok(())
        }
    }
}

pub fn mc(
    out: &mut dyn Write,
    format: Format,
    style: Style,
    q: &MomentQuery,
    e: &MomentEstimate,
    sigma: f64,
    pass: bool,
) -> Result<(), CliError> {
    let a: Vec<String> = q.a_vec.iter().map(format_rational).collect();
    let l: Vec<String> = q.l_vec.iter().map(|x| x.to_string()).collect();
    let status = if pass { Status::Pass } else { Status::Fail };
    match format {
        Format::Json => write_json(
            out,
            &json!({
                "a": a,
                "l": q.l_vec,
                "samples": e.n_samples,
                "seed": q.seed,
                "sigma": sigma,
                "mean": e.mean,
                "stderr": e.stderr,
                "exact": format_rational(&e.exact),
                "exact_f64": e.exact_f64(),
                "z": e.z_score(),
                "status": status.as_str(),
            }),
        ),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["a", "l", "samples", "seed", "sigma", "mean", "stderr", "exact", "z", "status"])?;
            w.write_record([
                a.join(" "),
                l.join(" "),
                e.n_samples.to_string(),
                q.seed.to_string(),
                sigma.to_string(),
                e.mean.to_string(),
                e.stderr.to_string(),
                format_rational(&e.exact),
                e.z_score().to_string(),
                status.as_str().to_string(),
            ])?;
            w.flush()?;
            Ok(())
        }
        Format::Text => {
            writeln!(
                out,
                "{} a=({}) l=({}) samples={} seed={}",
                style.status(pass),
                a.join(","),
                l.join(","),
                e.n_samples,
                q.seed
            )?;
            writeln!(out, "  exact  = {} ≈ {:.10}", format_rational(&e.exact), e.exact_f64())?;
            writeln!(out, "  mean   = {:.10}", e.mean)?;
            writeln!(out, "  stderr = {:.3e}", e.stderr)?;
            writeln!(out, "  |z|    = {:.3} (limit {sigma})", e.z_score())?;
            Ok(())
        }
    }
}
