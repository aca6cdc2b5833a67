//! `fquad integrate`: apply the rule to a built-in integrand or to a CSV
//! sample file pinned to the lattice.

use num_complex::Complex64;
use std::path::Path;
use std::str::FromStr;

use fourier_quad::coefficients::{optimal_coefficients, Frequency, Interval};
use fourier_quad::quadrature::{apply, Integrand, ReferenceIntegrand};

use crate::config::{resolve, CliError, OutputFormat, RunConfig};
use crate::IntegrateArgs;

pub fn run(args: IntegrateArgs) -> Result<(), CliError> {
    let config = resolve(&args.common, args.integrand, args.samples, false)?;
    let n = config.scalar_n()?;
    let omega = config.scalar_omega()?;
    let interval = Interval::new(config.a, config.b, n)?;
    let frequency = Frequency::new(omega)?;
    let set = optimal_coefficients(frequency, interval, config.eps_res)?;

    let (integrand, exact) = match (&config.integrand, &config.samples) {
        (Some(_), Some(_)) => {
            return Err(CliError::usage(
                "--integrand and --samples are mutually exclusive",
            ))
        }
        (Some(id), None) => {
            let kind = ReferenceIntegrand::from_str(id)?;
            (kind.integrand(), Some(kind.exact(frequency, interval)))
        }
        (None, Some(path)) => (load_samples(path, &interval)?, None),
        (None, None) => {
            return Err(CliError::usage(
                "one of --integrand or --samples is required",
            ))
        }
    };

    let approx = apply(&set, &integrand)?;
    let r = exact.map(|e| (approx - e).norm());
    let content = render(&config, approx, exact, r);
    config.emit(&content)
}

fn render(
    config: &RunConfig,
    approx: Complex64,
    exact: Option<Complex64>,
    r: Option<f64>,
) -> String {
    match config.format {
        Some(OutputFormat::Json) => {
            let exact_re = exact.map_or("null".into(), |e| format!("{:.17e}", e.re));
            let exact_im = exact.map_or("null".into(), |e| format!("{:.17e}", e.im));
            let r_text = r.map_or("null".into(), |r| format!("{r:.17e}"));
            format!(
                "{{\"approx_re\": {:.17e}, \"approx_im\": {:.17e}, \"exact_re\": {exact_re}, \
                 \"exact_im\": {exact_im}, \"R\": {r_text}}}\n",
                approx.re, approx.im
            )
        }
        Some(OutputFormat::Csv) => {
            let mut text = String::from("approx_re,approx_im,exact_re,exact_im,R\n");
            text.push_str(&format!("{:.17e},{:.17e},", approx.re, approx.im));
            match exact {
                Some(e) => text.push_str(&format!("{:.17e},{:.17e},", e.re, e.im)),
                None => text.push_str(",,"),
            }
            match r {
                Some(r) => text.push_str(&format!("{r:.17e}\n")),
                None => text.push('\n'),
            }
            text
        }
        None => {
            let mut text = format!("approx = ({:.17e}, {:.17e})\n", approx.re, approx.im);
            match exact {
                Some(e) => text.push_str(&format!("exact  = ({:.17e}, {:.17e})\n", e.re, e.im)),
                None => text.push_str("exact  = unknown\n"),
            }
            match r {
                Some(r) => text.push_str(&format!("R      = {r:.17e}\n")),
                None => text.push_str("R      = unknown\n"),
            }
            text
        }
    }
}

/// Reads `x,re,im` rows and pins them to the lattice: the file must contain
/// exactly one row per node, in order, with x matching to 1e-12·h.
fn load_samples(path: &Path, interval: &Interval) -> Result<Integrand, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|err| CliError::usage(format!("cannot read samples {}: {err}", path.display())))?;
    let mut rows = Vec::new();
    for (line_no, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') || line.starts_with("x,") {
            continue;
        }
        let fields: Vec<&str> = line.split(',').map(str::trim).collect();
        if fields.len() != 3 {
            return Err(CliError::usage(format!(
                "samples {}:{}: expected `x,re,im`, got `{raw}`",
                path.display(),
                line_no + 1
            )));
        }
        let parse = |s: &str| {
            s.parse::<f64>().map_err(|_| {
                CliError::usage(format!(
                    "samples {}:{}: invalid number `{s}`",
                    path.display(),
                    line_no + 1
                ))
            })
        };
        rows.push((parse(fields[0])?, parse(fields[1])?, parse(fields[2])?));
    }
    let n = interval.n();
    if rows.len() != n as usize + 1 {
        return Err(CliError::usage(format!(
            "samples {}: expected {} rows for N = {n}, got {}",
            path.display(),
            n + 1,
            rows.len()
        )));
    }
    let h = interval.h();
    let tolerance = 1e-12 * h;
    for (beta, &(x, _, _)) in rows.iter().enumerate() {
        let node = interval.node(beta as u32);
        if (x - node).abs() > tolerance {
            return Err(CliError::usage(format!(
                "samples {}: row {} has x = {x}, expected the lattice node {node} \
                 (tolerance {tolerance:e}); the rule is defined only on equispaced nodes",
                path.display(),
                beta + 1
            )));
        }
    }
    let values: Vec<Complex64> = rows
        .iter()
        .map(|&(_, re, im)| Complex64::new(re, im))
        .collect();
    let a = interval.a();
    Ok(Integrand::new("samples", move |x| {
        let index = ((x - a) / h).round() as usize;
        values[index.min(values.len() - 1)]
    }))
}
