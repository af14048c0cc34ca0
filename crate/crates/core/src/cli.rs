//! Command-line front end for the `pog` binary.
//!
//! Exit codes: 0 success, 1 infeasible or failed verification, 2 bad input.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::density::{ceil_half_mad, exact_mad, format_rational};
use crate::exactchi::{chi_orient, EXACT_CAP};
use crate::extremal::{build_extremal, counting_check, verify_structure, ConstructParams, DEFAULT_MAX_VERTICES};
use crate::graph::{verify_proper, Graph, Partition};
use crate::hakimi::{orient_bounded, BoundedOrientation};
use crate::indset::DEFAULT_CAP;
use crate::io::{parse_graph, parse_orientation, write_graph, write_orientation};
use crate::orient3::{orient3, Orient3Config};
use crate::random::{random_multipartite, Probability};

#[derive(Debug, Parser)]
#[command(name = "pog", version, about = "Proper orientations of tripartite graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Exact maximum average degree and k = ceil(Mad/2)
    Mad { file: PathBuf },
    /// Orientation with out-degrees at most k, or a dense set
    Hakimi {
        file: PathBuf,
        /// Defaults to ceil(Mad/2)
        #[arg(long)]
        k: Option<usize>,
    },
    /// Proper orientation of a tripartite graph with max out-degree <= k+7
    Orient3 {
        file: PathBuf,
        #[arg(long)]
        trace: Option<PathBuf>,
        /// Largest component searched by the independent-set solver
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
    /// Checks that an orientation is proper (and within a bound)
    Verify {
        graph: PathBuf,
        orientation: PathBuf,
        #[arg(long)]
        bound: Option<usize>,
    },
    /// Exact proper orientation number (small graphs)
    Chi {
        file: PathBuf,
        #[arg(long)]
        max_k: Option<usize>,
        /// Writes the witness here instead of standard output
        #[arg(long)]
        witness: Option<PathBuf>,
    },
    /// Writes the extremal r-partite construction
    Construct {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        r: usize,
        #[arg(short = 'o', long)]
        output: Option<PathBuf>,
    },
    /// Builds the extremal construction and checks its structure and counts
    ConstructCheck {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        r: usize,
    },
    /// Seeded random multipartite graph
    GenRandom {
        #[arg(long, num_args = 1.., required = true)]
        sizes: Vec<usize>,
        /// Edge probability as num/den
        #[arg(long)]
        p: Probability,
        #[arg(long)]
        seed: u64,
        #[arg(short = 'o', long)]
        output: Option<PathBuf>,
    },
}

/// Outcome of a command: exit code plus a message for standard error.
struct Failure {
    code: u8,
    message: String,
}

fn input_error(message: impl Into<String>) -> Failure {
    Failure { code: 2, message: message.into() }
}

fn failed(message: impl Into<String>) -> Failure {
    Failure { code: 1, message: message.into() }
}

type Outcome = Result<(), Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| input_error(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, text: &str) -> Outcome {
    std::fs::write(path, text).map_err(|e| input_error(format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<(Graph, Partition), Failure> {
    parse_graph(&read(path)?).map_err(|e| input_error(format!("{}: {e}", path.display())))
}

fn emit(out: &mut dyn Write, text: &str) -> Outcome {
    out.write_all(text.as_bytes()).map_err(|e| input_error(e.to_string()))
}

fn emit_or_write(out: &mut dyn Write, path: Option<&Path>, text: &str) -> Outcome {
    match path {
        Some(p) => write_file(p, text),
        None => emit(out, text),
    }
}

fn cmd_mad(out: &mut dyn Write, file: &Path) -> Outcome {
    let (g, _) = load_graph(file)?;
    let (mad, _) = exact_mad(&g);
    emit(out, &format!("mad = {}\nk = {}\n", format_rational(&mad), ceil_half_mad(&g)))
}

fn cmd_hakimi(out: &mut dyn Write, file: &Path, k: Option<usize>) -> Outcome {
    let (g, _) = load_graph(file)?;
    let k = k.unwrap_or_else(|| ceil_half_mad(&g));
    match orient_bounded(&g, k) {
        BoundedOrientation::Feasible(o) => emit(out, &write_orientation(&g, &o)),
        BoundedOrientation::Infeasible(cert) => {
            let ids: Vec<String> = cert.vertices.iter().map(|v| (v + 1).to_string()).collect();
            emit(out, &format!("inf {}\n", ids.join(" ")))?;
            Err(failed(format!("no orientation with out-degree <= {k}: {} edges on {} vertices", cert.edges, cert.vertices.len())))
        }
    }
}

fn cmd_orient3(out: &mut dyn Write, file: &Path, trace: Option<&Path>, cap: usize) -> Outcome {
    let (g, p) = load_graph(file)?;
    match orient3(&g, &p, &Orient3Config { cap }) {
        Ok(r) => {
            if let Some(path) = trace {
                write_file(path, &r.trace.to_string())?;
            }
            let report = verify_proper(&g, &r.orientation, Some(r.k + 7)).expect("orientation matches graph");
            if !report.is_proper || report.within_bound != Some(true) {
                return Err(failed("output orientation failed verification"));
            }
            emit(out, &write_orientation(&g, &r.orientation))
        }
        Err(e) => {
            if let (Some(path), Some(t)) = (trace, e.trace()) {
                write_file(path, &t.to_string())?;
            }
            match e {
                crate::orient3::Orient3Error::Partition(_) | crate::orient3::Orient3Error::NotTripartite { .. } => {
                    Err(input_error(e.to_string()))
                }
                _ => Err(failed(e.to_string())),
            }
        }
    }
}

fn cmd_verify(out: &mut dyn Write, graph: &Path, orientation: &Path, bound: Option<usize>) -> Outcome {
    let (g, _) = load_graph(graph)?;
    let o = parse_orientation(&g, &read(orientation)?).map_err(|e| input_error(format!("{}: {e}", orientation.display())))?;
    let r = verify_proper(&g, &o, bound).expect("parsed orientation matches graph");
    let mut text = format!("proper = {}\nmax_outdeg = {}\n", r.is_proper, r.max_outdeg);
    if let Some(ok) = r.within_bound {
        text.push_str(&format!("within_bound = {ok}\n"));
    }
    for &(u, v) in &r.violations {
        text.push_str(&format!("violation {} {} outdeg {}\n", u + 1, v + 1, r.outdeg[u]));
    }
    emit(out, &text)?;
    if r.is_proper && r.within_bound != Some(false) {
        Ok(())
    } else {
        Err(failed("verification failed"))
    }
}

fn cmd_chi(out: &mut dyn Write, file: &Path, max_k: Option<usize>, witness: Option<&Path>) -> Outcome {
    let (g, _) = load_graph(file)?;
    match chi_orient(&g, max_k, EXACT_CAP).map_err(|e| input_error(e.to_string()))? {
        Some((k, o)) => {
            emit(out, &format!("chi_orient = {k}\n"))?;
            emit_or_write(out, witness, &write_orientation(&g, &o))
        }
        None => Err(failed(format!("no proper orientation with out-degree <= {}", max_k.unwrap_or(0)))),
    }
}

fn cmd_construct(out: &mut dyn Write, k: usize, r: usize, output: Option<&Path>) -> Outcome {
    let (g, p, _) = build_extremal(ConstructParams { k, r }, DEFAULT_MAX_VERTICES).map_err(|e| input_error(e.to_string()))?;
    emit_or_write(out, output, &write_graph(&g, &p))
}

fn cmd_construct_check(out: &mut dyn Write, k: usize, r: usize) -> Outcome {
    let (g, _, layout) =
        build_extremal(ConstructParams { k, r }, DEFAULT_MAX_VERTICES).map_err(|e| input_error(e.to_string()))?;
    let c = &layout.copies[0];
    let mut text = format!("n = {}\nm = {}\n", g.vertex_count(), g.edge_count());
    text.push_str(&format!("blocks = {} {} {} {}\n", c.a.len(), c.b.len(), c.c.len(), c.d.len()));
    let report = verify_structure(&g, &layout);
    text.push_str(&report.to_string());
    let counting = counting_check(k, r);
    text.push_str(&counting.to_string());
    emit(out, &text)?;
    if report.all_passed() && counting.consistent() {
        Ok(())
    } else {
        Err(failed("construction check failed"))
    }
}

fn cmd_gen_random(out: &mut dyn Write, sizes: &[usize], p: Probability, seed: u64, output: Option<&Path>) -> Outcome {
    let (g, part) = random_multipartite(sizes, p, seed);
    emit_or_write(out, output, &write_graph(&g, &part))
}

/// Runs the CLI on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let outcome = match &cli.command {
        Command::Mad { file } => cmd_mad(out, file),
        Command::Hakimi { file, k } => cmd_hakimi(out, file, *k),
        Command::Orient3 { file, trace, cap } => cmd_orient3(out, file, trace.as_deref(), *cap),
        Command::Verify { graph, orientation, bound } => cmd_verify(out, graph, orientation, *bound),
        Command::Chi { file, max_k, witness } => cmd_chi(out, file, *max_k, witness.as_deref()),
        Command::Construct { k, r, output } => cmd_construct(out, *k, *r, output.as_deref()),
        Command::ConstructCheck { k, r } => cmd_construct_check(out, *k, *r),
        Command::GenRandom { sizes, p, seed, output } => cmd_gen_random(out, sizes, *p, *seed, output.as_deref()),
    };
    match outcome {
        Ok(()) => 0,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

/// Entry point used by the binary.
pub fn main() -> std::process::ExitCode {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    let code = run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock());
    std::process::ExitCode::from(code)
}
