mod format;
mod report;

use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use thiserror::Error;

use tgain::energy_integral::coulson_energy;
use tgain::gain::{is_antibalanced, is_balanced, random_gains};
use tgain::graph::{maximum_matching, named_family, random_graph, Family};
use tgain::polynomials::{char_poly_eigen, char_poly_faddeev, char_poly_subgraph, matching_counts, matching_number_from_counts};
use tgain::spectral::{adjacency, eigensystem, energy};
use tgain::theorems::harness::{run_suite, Suite};
use tgain::theorems::{
    check_energy_lower_bounds, check_matching_bounds, check_spectral_basics, check_unicyclic, decompose_by_matching,
    unicyclic_energy_curve, TheoremError,
};
use tgain::GainGraphF64;

use report::{CheckJson, CoulsonJson, ReportDocument, VerifyJson};

#[derive(Parser)]
#[command(name = "tgain", version, about = "Spectra, energy and polynomials of complex unit gain graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Input {
    /// Gain graph file; stdin when omitted or `-`.
    file: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Eigen,
    Subgraph,
    Faddeev,
}

#[derive(Clone, Copy, ValueEnum)]
enum Gains {
    Ones,
    Random,
}

#[derive(Subcommand)]
enum Command {
    /// Eigenvalues in ascending order.
    Spectrum(Input),
    /// Energy, vertex energies and the lower-bound checks.
    Energy(Input),
    /// Characteristic polynomial coefficients, highest degree first.
    Charpoly {
        #[arg(long, value_enum, default_value_t = Method::Subgraph)]
        method: Method,
        #[command(flatten)]
        input: Input,
    },
    /// Matching polynomial and matching number of the underlying graph.
    Matchpoly(Input),
    /// Balance and antibalance.
    Balance(Input),
    /// Energy by the Coulson integral of the characteristic polynomial.
    Coulson {
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
        #[command(flatten)]
        input: Input,
    },
    /// Matching decomposition and the matching-number upper bounds.
    Decompose(Input),
    /// Run a check suite over a seeded corpus.
    Verify {
        #[arg(long, default_value = "all")]
        suite: Suite,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        count: usize,
    },
    /// Tab-separated `theta  energy` rows for the cycle gain of a unicyclic graph.
    SweepUnicyclic {
        #[arg(long, default_value_t = 64)]
        samples: usize,
        #[command(flatten)]
        input: Input,
    },
    /// Write a named graph in the file format.
    Gen {
        /// path, cycle, complete, complete-bipartite, star, double-star,
        /// book, t1, empty, random
        #[arg(long)]
        family: String,
        #[arg(long, num_args = 0.., value_delimiter = ',', allow_negative_numbers = true)]
        params: Vec<String>,
        #[arg(long, value_enum, default_value_t = Gains::Ones)]
        gains: Gains,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Parse { path: String, source: format::ParseError },
    #[error("{0}")]
    Io(#[from] io::Error),
    #[error("{0}")]
    Compute(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Compute(_) => 1,
            _ => 2,
        }
    }
}

fn compute<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Compute(e.to_string())
}

impl From<TheoremError> for CliError {
    fn from(e: TheoremError) -> Self {
        match e {
            TheoremError::TooFewSamples(_) => CliError::Usage(e.to_string()),
            e => compute(e),
        }
    }
}

fn read_input(input: &Input) -> Result<GainGraphF64, CliError> {
    let (path, text) = match input.file.as_deref() {
        None => ("<stdin>".to_string(), read_stdin()?),
        Some(p) if p.as_os_str() == "-" => ("<stdin>".to_string(), read_stdin()?),
        Some(p) => (p.display().to_string(), std::fs::read_to_string(p)?),
    };
    format::parse(&text).map_err(|source| CliError::Parse { path, source })
}

fn read_stdin() -> io::Result<String> {
    let mut s = String::new();
    io::stdin().read_to_string(&mut s)?;
    Ok(s)
}

fn emit_json<T: Serialize>(value: &T) -> Result<(), CliError> {
    let mut out = io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, value).map_err(compute)?;
    writeln!(out)?;
    Ok(())
}

/// Runs the command; `Ok(false)` means some requested check failed.
fn run(command: Command) -> Result<bool, CliError> {
    match command {
        Command::Spectrum(input) => {
            let phi = read_input(&input)?;
            let spec = eigensystem(&adjacency(&phi)).map_err(compute)?;
            eprintln!("spectrum of a gain graph on {} vertices", phi.n());
            let mut doc = ReportDocument::with_instance(&phi);
            doc.spectral_radius = Some(spec.spectral_radius());
            doc.spectrum = Some(spec.eigenvalues);
            emit_json(&doc)?;
            Ok(true)
        }
        Command::Energy(input) => {
            let phi = read_input(&input)?;
            let spec = eigensystem(&adjacency(&phi)).map_err(compute)?;
            let rep = energy(&phi).map_err(compute)?;
            let mut checks = check_spectral_basics(&phi)?;
            checks.extend(check_energy_lower_bounds(&phi)?);
            let mut doc = ReportDocument::with_instance(&phi);
            doc.spectrum = Some(spec.eigenvalues);
            doc.energy = Some(rep.energy);
            doc.vertex_energies = Some(rep.vertex_energies);
            doc.spectral_radius = Some(rep.spectral_radius);
            doc.checks = Some(checks.iter().map(CheckJson::from).collect());
            eprintln!("energy {} ({} checks)", rep.energy, checks.len());
            let ok = doc.checks_pass();
            emit_json(&doc)?;
            Ok(ok)
        }
        Command::Charpoly { method, input } => {
            let phi = read_input(&input)?;
            let (name, poly) = match method {
                Method::Eigen => ("eigen", char_poly_eigen(&eigensystem(&adjacency(&phi)).map_err(compute)?.eigenvalues)),
                Method::Subgraph => ("subgraph", char_poly_subgraph(&phi).map_err(compute)?),
                Method::Faddeev => ("faddeev", char_poly_faddeev(&adjacency(&phi)).map_err(compute)?),
            };
            eprintln!("characteristic polynomial of degree {} by {name}", poly.degree());
            let mut doc = ReportDocument::with_instance(&phi);
            doc.char_poly_method = Some(name);
            doc.char_poly = Some(poly.coeffs().to_vec());
            emit_json(&doc)?;
            Ok(true)
        }
        Command::Matchpoly(input) => {
            let phi = read_input(&input)?;
            let counts = matching_counts(phi.graph()).map_err(compute)?;
            let mu = matching_number_from_counts(&counts);
            let poly = tgain::polynomials::matching_poly::<f64>(phi.graph()).map_err(compute)?;
            eprintln!("matching number {mu}");
            let mut doc = ReportDocument::with_instance(&phi);
            doc.matching_poly = Some(poly.coeffs().to_vec());
            doc.matching_number = Some(mu);
            emit_json(&doc)?;
            Ok(true)
        }
        Command::Balance(input) => {
            let phi = read_input(&input)?;
            let balanced = is_balanced(&phi).balanced;
            let anti = is_antibalanced(&phi);
            eprintln!("balanced: {balanced}, antibalanced: {anti}");
            let mut doc = ReportDocument::with_instance(&phi);
            doc.balanced = Some(balanced);
            doc.antibalanced = Some(anti);
            emit_json(&doc)?;
            Ok(true)
        }
        Command::Coulson { tol, input } => {
            if !(tol > 0.0 && tol.is_finite()) {
                return Err(CliError::Usage(format!("tolerance must be positive, got {tol}")));
            }
            let phi = read_input(&input)?;
            let poly = char_poly_faddeev(&adjacency(&phi)).map_err(compute)?;
            let q = coulson_energy(&poly, tol).map_err(compute)?;
            let e = energy(&phi).map_err(compute)?.energy;
            eprintln!("Coulson energy {} (eigenvalues give {e}, {} evaluations)", q.value, q.evaluations);
            let mut doc = ReportDocument::with_instance(&phi);
            doc.energy = Some(q.value);
            doc.char_poly = Some(poly.coeffs().to_vec());
            doc.coulson = Some(CoulsonJson {
                value: q.value,
                abs_error_estimate: q.abs_error_estimate,
                evaluations: q.evaluations,
                tolerance: tol,
                eigenvalue_energy: e,
            });
            emit_json(&doc)?;
            Ok(true)
        }
        Command::Decompose(input) => {
            let phi = read_input(&input)?;
            let matching = maximum_matching(phi.graph());
            let decomposition = decompose_by_matching(phi.graph(), &matching)?;
            let checks = check_matching_bounds(&phi)?;
            eprintln!("{} pieces after {} moves", decomposition.pieces.len(), decomposition.moves);
            let mut doc = ReportDocument::with_instance(&phi);
            doc.matching_number = Some(matching.size());
            doc.decomposition = Some((&decomposition).into());
            doc.checks = Some(checks.iter().map(CheckJson::from).collect());
            let ok = doc.checks_pass();
            emit_json(&doc)?;
            Ok(ok)
        }
        Command::Verify { suite, seed, count } => {
            let report = run_suite(suite, seed, count);
            let json = VerifyJson::from(&report);
            eprintln!(
                "suite {suite}, seed {seed}: {} checks on {} instances, {} failures",
                json.checks,
                json.instances,
                json.failures.len()
            );
            for f in &json.failures {
                eprintln!("  FAIL {}: {}", f.instance, f.check.as_ref().map_or(f.error.clone().unwrap_or_default(), |c| c.name.clone()));
            }
            emit_json(&json)?;
            Ok(json.passed)
        }
        Command::SweepUnicyclic { samples, input } => {
            let phi = read_input(&input)?;
            let checks = check_unicyclic(phi.graph(), samples)?;
            let curve = unicyclic_energy_curve(phi.graph(), samples)?;
            let mut out = io::stdout().lock();
            writeln!(out, "theta\tenergy")?;
            for (theta, e) in curve {
                writeln!(out, "{theta}\t{e}")?;
            }
            let failed = checks.iter().filter(|c| !c.passed()).count();
            eprintln!("{samples} samples, {} checks, {failed} failures", checks.len());
            for c in checks.iter().filter(|c| !c.passed()) {
                eprintln!("  FAIL {c}");
            }
            Ok(failed == 0)
        }
        Command::Gen { family, params, gains, seed } => {
            let phi = generate(&family, &params, gains, seed)?;
            eprintln!("{family}: {} vertices, {} edges", phi.n(), phi.m());
            io::stdout().lock().write_all(format::write(&phi).as_bytes())?;
            Ok(true)
        }
    }
}

fn generate(family: &str, params: &[String], gains: Gains, seed: u64) -> Result<GainGraphF64, CliError> {
    let usage = |msg: String| CliError::Usage(format!("{family}: {msg}"));
    let ints = |want: usize| -> Result<Vec<usize>, CliError> {
        if params.len() != want {
            return Err(usage(format!("expected {want} parameters, got {}", params.len())));
        }
        params.iter().map(|p| p.parse().map_err(|_| usage(format!("bad parameter `{p}`")))).collect()
    };
    let graph = if family == "random" {
        let [n, p] = params else {
            return Err(usage("expected `n,p`".into()));
        };
        let n = n.parse().map_err(|_| usage(format!("bad vertex count `{n}`")))?;
        let p: f64 = p.parse().map_err(|_| usage(format!("bad probability `{p}`")))?;
        if !(0.0..=1.0).contains(&p) {
            return Err(usage(format!("probability {p} outside [0, 1]")));
        }
        random_graph(n, p, seed)
    } else {
        let kind = match family {
            "path" => Family::Path(ints(1)?[0]),
            "cycle" => Family::Cycle(ints(1)?[0]),
            "complete" => Family::Complete(ints(1)?[0]),
            "complete-bipartite" => {
                let v = ints(2)?;
                Family::CompleteBipartite(v[0], v[1])
            }
            "star" => Family::Star(ints(1)?[0]),
            "double-star" => {
                let v = ints(2)?;
                Family::DoubleStar(v[0], v[1])
            }
            "book" => {
                let v = ints(3)?;
                Family::Book(v[0], v[1], v[2])
            }
            "t1" => Family::TreeT1(ints(1)?[0]),
            "empty" => Family::Empty(ints(1)?[0]),
            other => return Err(CliError::Usage(format!("unknown family `{other}`"))),
        };
        named_family(kind).map_err(|e| usage(e.to_string()))?
    };
    Ok(match gains {
        Gains::Ones => GainGraphF64::all_ones(graph),
        Gains::Random => random_gains(&graph, seed),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
