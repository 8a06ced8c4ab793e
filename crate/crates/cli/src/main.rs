use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;
use suq_core::certificate::{
    evaluate_nom, evaluate_nosm, nom_sweep, search_certificate, CertificateKind, Evaluation,
    DEFAULT_BUDGET,
};
use suq_core::classifier::{classify_with_budget, sweep, Report, Sweep};
use suq_core::duality::duality_info;
use suq_core::orbit::{dimension, orbit, weight_system};
use suq_core::props::{verify_all, Bounds, Prop, PropResult};
use suq_core::weights::{parse_dominant, parse_fundamental, Weight};
use suq_core::Error;

#[derive(Parser, Debug)]
#[command(
    name = "suq",
    version,
    about = "Weight combinatorics and quotient certificates for su(r+1)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Json)]
    format: Format,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Args, Debug)]
struct WeightArgs {
    /// Rank r of A_r.
    #[arg(short, long)]
    rank: usize,
    /// Highest weight in fundamental coordinates, `a1,...,ar`.
    #[arg(short, long)]
    weight: String,
}

impl WeightArgs {
    fn parse(&self) -> Result<Weight, Error> {
        if self.rank < 2 {
            return Err(Error::InvalidRank(self.rank));
        }
        let w = parse_dominant(self.rank, &self.weight)?;
        if w.is_zero() {
            return Err(Error::InvalidWeight("the zero weight is excluded".into()));
        }
        Ok(w)
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Classify one representation.
    Classify {
        #[command(flatten)]
        weight: WeightArgs,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Classify every dominant weight up to a height bound.
    Sweep {
        #[arg(long, default_value_t = 2)]
        r_min: usize,
        #[arg(long, default_value_t = 8)]
        r_max: usize,
        #[arg(long, default_value_t = 2)]
        height_bound: i64,
        /// Additional weights as `r:a1,...,ar`; may repeat.
        #[arg(long)]
        extra: Vec<String>,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// The Weyl orbit of a weight.
    Orbit {
        #[command(flatten)]
        weight: WeightArgs,
    },
    /// The weight system with multiplicities.
    Weights {
        #[command(flatten)]
        weight: WeightArgs,
    },
    /// Multiplicity of one weight.
    Mult {
        #[command(flatten)]
        weight: WeightArgs,
        /// The weight whose multiplicity is wanted, fundamental coordinates.
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
    },
    /// Weyl dimension.
    Dim {
        #[command(flatten)]
        weight: WeightArgs,
    },
    /// Dual weight, Frobenius-Schur indicator and realness index.
    Delta {
        #[command(flatten)]
        weight: WeightArgs,
    },
    /// Evaluate an explicit subset, or search for a certificate.
    Certificate {
        #[command(flatten)]
        weight: WeightArgs,
        /// JSON list of weights in fundamental coordinates.
        #[arg(long)]
        omega: Option<String>,
        /// Evaluate the equality criterion instead.
        #[arg(long)]
        nom: bool,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Check the counting propositions on a bounded domain.
    VerifyPaper {
        #[arg(long, default_value_t = 7)]
        max_n: usize,
        #[arg(long, default_value_t = 3)]
        coord_bound: i64,
        #[arg(long, default_value_t = 4)]
        height_bound: i64,
        /// Comma-separated subset of propositions.
        #[arg(long, value_delimiter = ',')]
        props: Vec<String>,
    },
    /// Exhaustive search for equality-case certificates on minuscule weights.
    NomSweep {
        #[arg(long, default_value_t = 2)]
        r_min: usize,
        #[arg(long, default_value_t = 6)]
        r_max: usize,
        #[arg(long, default_value_t = 1)]
        coord_bound: i64,
    },
}

#[derive(Debug)]
enum Failure {
    Input(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Verification(msg) => Failure::Verification(msg),
            other => Failure::Input(other.to_string()),
        }
    }
}

struct Output {
    body: String,
    failed: Option<String>,
}

impl Output {
    fn ok(body: String) -> Self {
        Self { body, failed: None }
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable output");
    s.push('\n');
    s
}

fn fmt_coords(a: &[i64]) -> String {
    a.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn fundamental(w: &Weight) -> Vec<i64> {
    w.fundamental_coords()
        .expect("lattice weights have integral coordinates")
}

const CSV_HEADER: [&str; 8] = [
    "rank",
    "weight",
    "delta",
    "verdict",
    "mechanism",
    "margin",
    "orbit_size",
    "dim",
];

fn reports_csv(reports: &[Report]) -> Result<String, Failure> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Failure::Input(e.to_string());
    w.write_record(CSV_HEADER).map_err(io)?;
    for rep in reports {
        w.write_record([
            rep.rank.to_string(),
            fmt_coords(&rep.input),
            rep.delta.to_string(),
            rep.verdict.to_string(),
            rep.mechanism.clone(),
            rep.margin().map(|m| m.to_string()).unwrap_or_default(),
            rep.orbit_size.to_string(),
            rep.dim.to_string(),
        ])
        .map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| Failure::Input(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn reports_text(reports: &[Report]) -> String {
    let mut s = String::new();
    for rep in reports {
        s.push_str(&format!(
            "r={} [{}] -> [{}] delta={} {} ({})",
            rep.rank,
            fmt_coords(&rep.input),
            fmt_coords(&rep.normalized),
            rep.delta,
            rep.verdict,
            rep.mechanism
        ));
        if let Some(m) = rep.margin() {
            s.push_str(&format!(" margin={m}"));
        }
        s.push('\n');
    }
    s
}

fn render_reports(
    format: Format,
    reports: &[Report],
    json_value: String,
) -> Result<String, Failure> {
    match format {
        Format::Json => Ok(json_value),
        Format::Csv => reports_csv(reports),
        Format::Text => Ok(reports_text(reports)),
    }
}

fn render_props(format: Format, results: &[PropResult]) -> Result<String, Failure> {
    match format {
        Format::Json => Ok(to_json(&results)),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let io = |e: csv::Error| Failure::Input(e.to_string());
            w.write_record(["prop", "checked", "counterexamples"])
                .map_err(io)?;
            for r in results {
                w.write_record([
                    r.prop.to_string(),
                    r.checked.to_string(),
                    r.counterexamples.len().to_string(),
                ])
                .map_err(io)?;
            }
            let bytes = w.into_inner().map_err(|e| Failure::Input(e.to_string()))?;
            Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
        }
        Format::Text => Ok(results
            .iter()
            .map(|r| {
                format!(
                    "{}: checked {}, counterexamples {}\n",
                    r.prop,
                    r.checked,
                    r.counterexamples.len()
                )
            })
            .collect()),
    }
}

fn json_only(
    format: Format,
    value: serde_json::Value,
    text: impl FnOnce() -> String,
) -> Result<String, Failure> {
    match format {
        Format::Json => Ok(to_json(&value)),
        Format::Text => Ok(text()),
        Format::Csv => Err(Failure::Input(
            "csv output is available for classify, sweep and verify-paper".into(),
        )),
    }
}

fn parse_extra(text: &str) -> Result<(usize, Vec<i64>), Failure> {
    let (r, a) = text.split_once(':').ok_or_else(|| {
        Failure::Input(format!("extra weight {text:?} must look like r:a1,...,ar"))
    })?;
    let r: usize = r
        .trim()
        .parse()
        .map_err(|_| Failure::Input(format!("bad rank in {text:?}")))?;
    Ok((r, parse_fundamental(a)?))
}

fn parse_omega(r: usize, text: &str) -> Result<Vec<Weight>, Failure> {
    let rows: Vec<Vec<i64>> = serde_json::from_str(text)
        .map_err(|e| Failure::Input(format!("omega must be a JSON list of integer lists: {e}")))?;
    rows.into_iter()
        .map(|a| {
            if a.len() != r {
                Err(Failure::Input(format!(
                    "omega entry {a:?} needs {r} coordinates"
                )))
            } else {
                Ok(Weight::from_fundamental(&a))
            }
        })
        .collect()
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    let format = cli.format;
    match &cli.command {
        Command::Classify { weight, budget } => {
            let w = weight.parse()?;
            let rep = classify_with_budget(weight.rank, &w, *budget)?;
            let body = render_reports(format, std::slice::from_ref(&rep), to_json(&rep))?;
            Ok(Output::ok(body))
        }
        Command::Sweep {
            r_min,
            r_max,
            height_bound,
            extra,
            budget,
        } => {
            let extra = extra
                .iter()
                .map(|e| parse_extra(e))
                .collect::<Result<Vec<_>, _>>()?;
            let s: Sweep = sweep(*r_min, *r_max, *height_bound, &extra, *budget)?;
            let body = render_reports(format, &s.reports, to_json(&s))?;
            let failed = (s.summary.unresolved > 0)
                .then(|| format!("{} unresolved rows", s.summary.unresolved));
            Ok(Output { body, failed })
        }
        Command::Orbit { weight } => {
            let w = weight.parse()?;
            let o = orbit(&w);
            let elements: Vec<Vec<i64>> = o.elements.iter().map(fundamental).collect();
            let value = json!({
                "highest": fundamental(&w),
                "size": elements.len(),
                "elements": elements,
            });
            let body = json_only(format, value, || {
                elements
                    .iter()
                    .map(|e| format!("{}\n", fmt_coords(e)))
                    .collect()
            })?;
            Ok(Output::ok(body))
        }
        Command::Weights { weight } => {
            let w = weight.parse()?;
            let ws = weight_system(&w)?;
            let mut entries: Vec<(Vec<i64>, u64)> = ws
                .weights()
                .iter()
                .map(|(mu, m)| (fundamental(mu), *m))
                .collect();
            entries.sort();
            let value = json!({
                "highest": fundamental(&w),
                "dim": dimension(&w)?,
                "weights": entries.iter().map(|(c, m)| json!({"coords": c, "mult": m})).collect::<Vec<_>>(),
            });
            let body = json_only(format, value, || {
                entries
                    .iter()
                    .map(|(c, m)| format!("{} x{m}\n", fmt_coords(c)))
                    .collect()
            })?;
            Ok(Output::ok(body))
        }
        Command::Mult { weight, mu } => {
            let w = weight.parse()?;
            let a = parse_fundamental(mu)?;
            if a.len() != weight.rank {
                return Err(Failure::Input(format!(
                    "--mu needs {} coordinates",
                    weight.rank
                )));
            }
            let m = weight_system(&w)?.multiplicity(&Weight::from_fundamental(&a));
            let value = json!({"highest": fundamental(&w), "mu": a, "mult": m});
            Ok(Output::ok(json_only(format, value, || format!("{m}\n"))?))
        }
        Command::Dim { weight } => {
            let w = weight.parse()?;
            let d = dimension(&w)?;
            let value = json!({"highest": fundamental(&w), "dim": d});
            Ok(Output::ok(json_only(format, value, || format!("{d}\n"))?))
        }
        Command::Delta { weight } => {
            let w = weight.parse()?;
            let info = duality_info(&w);
            let value = json!({
                "dual": fundamental(&info.dual),
                "self_dual": info.self_dual,
                "fs": info.fs_indicator,
                "delta": info.delta,
            });
            let body = json_only(format, value, || {
                format!(
                    "dual [{}] self_dual {} fs {} delta {}\n",
                    fmt_coords(&fundamental(&info.dual)),
                    info.self_dual,
                    info.fs_indicator
                        .map(|x| x.to_string())
                        .unwrap_or_else(|| "-".into()),
                    info.delta
                )
            })?;
            Ok(Output::ok(body))
        }
        Command::Certificate {
            weight,
            omega,
            nom,
            budget,
        } => {
            let w = weight.parse()?;
            let evaluation = match omega {
                Some(text) => {
                    let omega = parse_omega(weight.rank, text)?;
                    if *nom {
                        evaluate_nom(&w, &omega)?
                    } else {
                        evaluate_nosm(&w, &omega)?
                    }
                }
                None if *nom => {
                    return Err(Failure::Input("--nom needs an explicit --omega".into()));
                }
                None => match search_certificate(&w, *budget)? {
                    outcome if outcome.certificate.is_some() => {
                        Evaluation::Certified(Box::new(outcome.certificate.expect("checked")))
                    }
                    outcome => {
                        let value = json!({
                            "certificate": null,
                            "nodes": outcome.nodes,
                            "hyperplanes_tried": outcome.hyperplanes_tried,
                            "budget_exhausted": outcome.budget_exhausted,
                        });
                        let body = json_only(format, value, || "no certificate found\n".into())?;
                        return Ok(Output {
                            body,
                            failed: Some("no certificate found".into()),
                        });
                    }
                },
            };
            match evaluation {
                Evaluation::Certified(cert) => {
                    cert.verify()?;
                    let value = serde_json::to_value(&*cert).expect("serializable certificate");
                    let body = json_only(format, value, || {
                        format!(
                            "{} certificate on {} margin {}\n",
                            match cert.kind {
                                CertificateKind::Nosm => "NOSM",
                                CertificateKind::Nom => "NOM",
                            },
                            cert.hyperplane.equation(),
                            cert.margin
                        )
                    })?;
                    Ok(Output::ok(body))
                }
                Evaluation::Rejected(reason) => {
                    let value = json!({"rejected": serde_json::to_value(&reason).expect("serializable reason")});
                    let body = json_only(format, value, || format!("rejected: {reason}\n"))?;
                    Ok(Output {
                        body,
                        failed: Some(format!("rejected: {reason}")),
                    })
                }
            }
        }
        Command::VerifyPaper {
            max_n,
            coord_bound,
            height_bound,
            props,
        } => {
            let props: Vec<Prop> = if props.is_empty() {
                Prop::ALL.to_vec()
            } else {
                props
                    .iter()
                    .map(|p| p.trim().parse())
                    .collect::<Result<_, Error>>()?
            };
            let bounds = Bounds {
                max_n: *max_n,
                coord_bound: *coord_bound,
                height_bound: *height_bound,
            };
            let results = verify_all(&props, &bounds)?;
            let bad: usize = results.iter().map(|r| r.counterexamples.len()).sum();
            let body = render_props(format, &results)?;
            Ok(Output {
                body,
                failed: (bad > 0).then(|| format!("{bad} counterexamples")),
            })
        }
        Command::NomSweep {
            r_min,
            r_max,
            coord_bound,
        } => {
            let s = nom_sweep(*r_min..=*r_max, *coord_bound)?;
            let value = serde_json::to_value(&s).expect("serializable sweep");
            let body = json_only(format, value, || {
                format!(
                    "weights {} minuscule {} subsets {} findings {}\n",
                    s.weights_examined,
                    s.minuscule_weights,
                    s.omegas_examined,
                    s.findings.len()
                )
            })?;
            Ok(Output::ok(body))
        }
    }
}

fn configure_threads() -> Result<(), Failure> {
    let Ok(text) = std::env::var("SUQ_THREADS") else {
        return Ok(());
    };
    let threads: usize = text.trim().parse().ok().filter(|&t| t > 0).ok_or_else(|| {
        Failure::Input(format!(
            "SUQ_THREADS must be a positive integer, got {text:?}"
        ))
    })?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| Failure::Input(e.to_string()))
}

fn emit(cli: &Cli, body: &str) -> io::Result<()> {
    match &cli.out {
        Some(path) => fs::write(path, body),
        None => io::stdout().lock().write_all(body.as_bytes()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = configure_threads().and_then(|()| run(&cli));
    match result {
        Ok(out) => {
            if let Err(e) = emit(&cli, &out.body) {
                eprintln!("error: cannot write output: {e}");
                return ExitCode::from(1);
            }
            match out.failed {
                Some(msg) => {
                    eprintln!("verification failed: {msg}");
                    ExitCode::from(2)
                }
                None => ExitCode::SUCCESS,
            }
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Verification(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(2)
        }
    }
}
