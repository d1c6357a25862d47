//! `adem`: homology, Steenrod squares, the Adem secondary operation and the
//! verification suites on complexes read from JSON files.

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use adem_core::linalg::Matrix;
use adem_core::reduce::{homology, psi, sq2_matrix, sq_matrix, Contraction};
use adem_core::verify::{self, Suite};
use adem_core::{Integer, Ring, RingKind, Simplex, SimplicialSet, Z2};
use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

/// An ordered simplicial complex given by its maximal simplices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ComplexFile {
    name: String,
    maximal_simplices: Vec<Vec<u32>>,
}

impl ComplexFile {
    fn parse(text: &str) -> Result<Self, CliError> {
        let file: ComplexFile = serde_json::from_str(text).map_err(|e| CliError::Input(e.to_string()))?;
        if file.maximal_simplices.is_empty() {
            return Err(CliError::Input("complex has no simplices".into()));
        }
        for s in &file.maximal_simplices {
            if s.is_empty() || s.windows(2).any(|w| w[0] >= w[1]) {
                return Err(CliError::Input(format!("simplex {s:?} is not a non-empty strictly increasing list")));
            }
        }
        Ok(file)
    }

    fn to_text(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("plain data serializes");
        out.push('\n');
        out
    }

    fn from_complex(k: &SimplicialSet) -> Self {
        ComplexFile {
            name: k.name().to_string(),
            maximal_simplices: k.maximal_simplices().iter().map(|s| s.vertices().to_vec()).collect(),
        }
    }

    fn build(&self) -> Result<SimplicialSet, CliError> {
        SimplicialSet::with_name(&self.name, &self.maximal_simplices).map_err(|e| CliError::Input(e.to_string()))
    }
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("input error: {0}")]
    Input(String),
    #[error("computation failed: {0}")]
    Compute(#[from] adem_core::Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Compute(_) => 1,
        }
    }
}

#[derive(Parser)]
#[command(name = "adem", version, about = "Exact Steenrod squares and Adem secondary operations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum RingArg {
    Z,
    Z2,
}

#[derive(Subcommand)]
enum Command {
    /// Betti numbers and torsion per degree.
    Homology {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "z")]
        ring: RingArg,
    },
    /// The matrix of Sq^i on H^q with mod-2 coefficients.
    Sq {
        file: PathBuf,
        #[arg(long)]
        q: usize,
        #[arg(long, default_value_t = 0)]
        i: usize,
    },
    /// The Adem secondary operation on the kernel of Sq^2 in H^q(K;Z).
    Psi {
        file: PathBuf,
        #[arg(long)]
        q: usize,
    },
    /// Run a verification suite.
    Check {
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        samples: Option<usize>,
    },
    /// Write the built-in fixture complexes as JSON files into a directory.
    #[command(hide = true)]
    Fixtures { dir: PathBuf },
}

/// The report body and the summary lines for standard error.
struct Outcome {
    result: Value,
    summary: Vec<String>,
    ok: bool,
}

fn load(path: &Path) -> Result<SimplicialSet, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    ComplexFile::parse(&text)?.build()
}

fn labels(simplices: &[Simplex]) -> Value {
    simplices.iter().map(|s| s.vertices().to_vec()).collect()
}

fn bits(v: &[Z2]) -> Value {
    v.iter().map(|x| u8::from(x.bit())).collect()
}

fn bit_matrix(m: &Matrix<Z2>) -> Value {
    m.to_rows().iter().map(|r| bits(r)).collect()
}

fn integer(v: &Integer) -> Value {
    v.to_i64().map_or_else(|| Value::String(v.to_string()), Value::from)
}

fn complex_stats(k: &SimplicialSet) -> Value {
    json!({ "name": k.name(), "dimension": k.dim(), "simplex_counts": k.counts() })
}

fn cmd_homology(k: &SimplicialSet, ring: RingArg) -> Outcome {
    let kind = match ring {
        RingArg::Z => RingKind::Integers,
        RingArg::Z2 => RingKind::Mod2,
    };
    let groups = homology(k, kind);
    let summary = groups
        .iter()
        .enumerate()
        .map(|(n, g)| match kind {
            RingKind::Integers => format!("H_{n} = {g}"),
            RingKind::Mod2 => format!("H_{n} = (Z/2)^{}", g.betti),
        })
        .collect();
    let result = json!({
        "ring": kind.to_string(),
        "betti": groups.iter().map(|g| g.betti).collect::<Vec<_>>(),
        "torsion": groups.iter().map(|g| g.torsion.iter().map(integer).collect::<Vec<_>>()).collect::<Vec<_>>(),
    });
    Outcome { result, summary, ok: true }
}

fn cmd_sq(k: &SimplicialSet, q: usize, i: usize) -> Result<Outcome, CliError> {
    if i > q {
        return Err(CliError::Input(format!("need q >= i, got q = {q}, i = {i}")));
    }
    // Sq^2 goes through integral representatives, as in the secondary operation.
    let (matrix, source, target, lift) = if i == 2 {
        let c = Contraction::<Integer>::new(k)?;
        let m = sq2_matrix(k, &c.dual(), q)?;
        (m, c.generators(k, q).into_iter().cloned().collect::<Vec<_>>(), c.generators(k, q + i).into_iter().cloned().collect::<Vec<_>>(), "Z")
    } else {
        let c = Contraction::<Z2>::new(k)?;
        let m = sq_matrix(k, &c.dual(), q, i)?;
        (m, c.generators(k, q).into_iter().cloned().collect(), c.generators(k, q + i).into_iter().cloned().collect(), "Z/2")
    };
    let summary = vec![format!("Sq^{i}: H^{q} -> H^{}, {}x{} matrix", q + i, matrix.rows(), matrix.cols())];
    let result = json!({
        "q": q,
        "i": i,
        "representatives": lift,
        "source_basis": labels(&source),
        "target_basis": labels(&target),
        "matrix": bit_matrix(&matrix),
    });
    Ok(Outcome { result, summary, ok: true })
}

fn cmd_psi(k: &SimplicialSet, q: usize) -> Result<Outcome, CliError> {
    if q < 2 {
        return Err(CliError::Input(format!("need q >= 2, got {q}")));
    }
    let r = psi(k, q)?;
    let ok = r.all_cocycles();
    let classes: Vec<Value> = r
        .classes
        .iter()
        .map(|c| {
            let support: Vec<Vec<u32>> = k
                .simplices(q + 3)
                .iter()
                .zip(c.representative.values())
                .filter(|(_, v)| !v.is_zero())
                .map(|(s, _)| s.vertices().to_vec())
                .collect();
            json!({
                "kernel_vector": bits(&c.kernel_vector),
                "value": bits(&c.value),
                "representative_support": support,
                "is_cocycle": c.is_cocycle,
            })
        })
        .collect();
    let summary = vec![
        format!("kernel of Sq^2 on H^{q}: dimension {}", r.classes.len()),
        format!("w cocycle check: {}", if ok { "pass" } else { "FAIL" }),
    ];
    let result = json!({
        "q": q,
        "i": q - 2,
        "source_basis": labels(&r.source_basis),
        "sq2_basis": labels(&r.sq2_basis),
        "target_basis": labels(&r.target_basis),
        "sq2": bit_matrix(&r.sq2),
        "classes": classes,
        "indeterminacy": r.indeterminacy.iter().map(|v| bits(v)).collect::<Vec<_>>(),
        "w_cocycle_check": if ok { "pass" } else { "fail" },
    });
    Ok(Outcome { result, summary, ok })
}

fn cmd_check(suite: &str, seed: u64, samples: Option<usize>) -> Result<Outcome, CliError> {
    let suite: Suite = suite.parse().map_err(|e: adem_core::Error| CliError::Input(e.to_string()))?;
    let report = verify::run(suite, seed, samples)?;
    let checks: Vec<Value> = report
        .checks
        .iter()
        .map(|c| json!({ "name": c.name, "cases": c.cases, "failures": c.failures, "passed": c.passed() }))
        .collect();
    let summary = report.to_string().lines().map(str::to_string).collect();
    let result = json!({
        "suite": suite.name(),
        "seed": seed,
        "samples": report.samples,
        "passed": report.passed(),
        "checks": checks,
    });
    Ok(Outcome { result, summary, ok: report.passed() })
}

fn write_fixtures(dir: &Path) -> Result<(), CliError> {
    std::fs::create_dir_all(dir).map_err(|e| CliError::Input(format!("{}: {e}", dir.display())))?;
    for k in adem_core::fixtures::all() {
        let path = dir.join(format!("{}.json", k.name()));
        std::fs::write(&path, ComplexFile::from_complex(&k).to_text())
            .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    }
    Ok(())
}

fn run(cli: Cli) -> Result<bool, CliError> {
    let start = Instant::now();
    let (echo, stats, outcome) = match cli.command {
        Command::Homology { file, ring } => {
            let k = load(&file)?;
            let ring_name = match ring {
                RingArg::Z => "z",
                RingArg::Z2 => "z2",
            };
            let echo = json!({ "name": "homology", "file": file.display().to_string(), "ring": ring_name });
            (echo, Some(complex_stats(&k)), cmd_homology(&k, ring))
        }
        Command::Sq { file, q, i } => {
            let k = load(&file)?;
            let echo = json!({ "name": "sq", "file": file.display().to_string(), "q": q, "i": i });
            (echo, Some(complex_stats(&k)), cmd_sq(&k, q, i)?)
        }
        Command::Psi { file, q } => {
            let k = load(&file)?;
            let echo = json!({ "name": "psi", "file": file.display().to_string(), "q": q });
            (echo, Some(complex_stats(&k)), cmd_psi(&k, q)?)
        }
        Command::Check { suite, seed, samples } => {
            let echo = json!({ "name": "check", "suite": suite, "seed": seed, "samples": samples });
            (echo, None, cmd_check(&suite, seed, samples)?)
        }
        Command::Fixtures { dir } => {
            write_fixtures(&dir)?;
            return Ok(true);
        }
    };
    let mut report = serde_json::Map::new();
    report.insert("command".into(), echo);
    if let Some(stats) = stats {
        report.insert("complex".into(), stats);
    }
    report.insert("result".into(), outcome.result);
    report.insert("elapsed_seconds".into(), json!(start.elapsed().as_secs_f64()));
    println!("{}", serde_json::to_string_pretty(&Value::Object(report)).expect("json values serialize"));
    for line in &outcome.summary {
        eprintln!("{line}");
    }
    Ok(outcome.ok)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
