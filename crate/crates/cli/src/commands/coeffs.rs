//! `fquad coeffs`: compute one weight set and emit it.

use fourier_quad::coefficients::{optimal_coefficients, Frequency, Interval};
use fourier_quad::kernel::{self, StepSize};
use serde::{Deserialize, Serialize};

use crate::config::{resolve, CliError, OutputFormat};
use crate::CoeffsArgs;

#[derive(Serialize, Deserialize)]
pub struct WeightSetJson {
    pub a: f64,
    pub b: f64,
    #[serde(rename = "N")]
    pub n: u32,
    pub omega: f64,
    pub regime: String,
    pub lambda1: f64,
    pub weights: Vec<WeightEntry>,
    pub aux: Option<AuxJson>,
}

#[derive(Serialize, Deserialize)]
pub struct WeightEntry {
    pub beta: u32,
    pub re: f64,
    pub im: f64,
}

#[derive(Serialize, Deserialize)]
pub struct AuxJson {
    #[serde(rename = "K_re")]
    pub k_re: f64,
    #[serde(rename = "K_im")]
    pub k_im: f64,
    pub a1_re: f64,
    pub a1_im: f64,
    pub b1_re: f64,
    pub b1_im: f64,
}

pub fn run(args: CoeffsArgs) -> Result<(), CliError> {
    let config = resolve(&args.common, None, None, false)?;
    let n = config.scalar_n()?;
    let omega = config.scalar_omega()?;
    let interval = Interval::new(config.a, config.b, n)?;
    let frequency = Frequency::new(omega)?;
    let set = optimal_coefficients(frequency, interval, config.eps_res)?;

    if let Some(gap) = set.near_resonance() {
        eprintln!(
            "warning: omega*h is within {gap:e} of an integer; the generic closed form is \
             ill-conditioned there and `fquad verify` is recommended for this input"
        );
    }
    let sum = set.weight_sum();
    eprintln!("# weight sum = ({:.17e}, {:.17e})", sum.re, sum.im);

    let content = match config.format.unwrap_or(OutputFormat::Json) {
        OutputFormat::Json => {
            let json = WeightSetJson {
                a: interval.a(),
                b: interval.b(),
                n,
                omega,
                regime: set.regime().to_string(),
                lambda1: kernel::lambda1(StepSize::unit_interval(n)?),
                weights: set
                    .weights()
                    .iter()
                    .enumerate()
                    .map(|(beta, c)| WeightEntry {
                        beta: beta as u32,
                        re: c.re,
                        im: c.im,
                    })
                    .collect(),
                aux: set.aux().map(|aux| AuxJson {
                    k_re: aux.k.re,
                    k_im: aux.k.im,
                    a1_re: aux.a1.re,
                    a1_im: aux.a1.im,
                    b1_re: aux.b1.re,
                    b1_im: aux.b1.im,
                }),
            };
            let mut text = serde_json::to_string_pretty(&json)
                .map_err(|err| CliError::numeric(format!("serialization failed: {err}")))?;
            text.push('\n');
            text
        }
        OutputFormat::Csv => {
            let mut text = String::from("beta,re,im\n");
            for (beta, c) in set.weights().iter().enumerate() {
                text.push_str(&format!("{beta},{:.17e},{:.17e}\n", c.re, c.im));
            }
            text
        }
    };
    config.emit(&content)
}
