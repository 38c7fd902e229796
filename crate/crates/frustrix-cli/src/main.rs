use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use frustrix::families::{
    digon_graph, gadget_chain, gamma, petersen_negative, triangle_tree_extremal, w_graphs, CubicTree, GadgetKind,
};
use frustrix::format::{parse_line, to_line};
use frustrix::solver::{frustration_branch_bound, frustration_bruteforce, FrustrationResult};
use frustrix::structure::reduce_to_fixpoint;
use frustrix::verify::{
    probe_girth5_conjecture, verify_3n2_over_8, verify_cubic_corollary, verify_main_theorem,
    verify_small_characterization, JsonLines, NoSink, RecordSink, VerificationReport, VerifyConfig,
};
use frustrix::{Error, SignedGraph};
use serde_json::json;

const EXIT_VIOLATION: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_CAPACITY: u8 = 3;

#[derive(Parser)]
#[command(name = "frustrix", version, about = "Frustration indices of signed subcubic graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Frustration index of each `<graph6> <hex>` line.
    Solve {
        /// Input file; stdin when absent.
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = MethodArg::Bb)]
        method: MethodArg,
        #[arg(long)]
        json: bool,
    },
    /// Print a named graph or family member as a signed graph6 line.
    Family {
        #[arg(value_enum)]
        name: FamilyName,
        /// Gadget kinds for `chain`: `t` triangle, `g` subdivided K4.
        #[arg(long, default_value = "tt")]
        gadgets: String,
        /// Internal vertices for `tritree`, digons for `digon`.
        #[arg(long, default_value_t = 2)]
        k: usize,
        /// For `tritree`: use the star with three internal neighbours.
        #[arg(long)]
        star: bool,
    },
    /// Exhaustive check of a bound over the census.
    Verify {
        #[arg(value_enum)]
        theorem: Theorem,
        #[arg(long)]
        nmax: Option<usize>,
        /// JSON-lines report path.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Worker threads (0: all cores).
        #[arg(long, default_value_t = 0)]
        workers: usize,
    },
    /// Apply reducible-configuration rewrites until none applies.
    Reduce {
        input: Option<PathBuf>,
        #[arg(long)]
        trace: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Bb,
    Brute,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyName {
    Gamma1,
    Gamma2,
    Gamma3,
    Gamma4,
    Gamma5,
    Chain,
    Tritree,
    Petersen,
    W1,
    W2,
    Digon,
}

#[derive(Clone, Copy, ValueEnum)]
enum Theorem {
    Main,
    Eq38,
    Cubic29,
    Small,
    Girth5,
}

fn exit_for(err: &Error) -> u8 {
    if err.is_capacity() {
        EXIT_CAPACITY
    } else {
        EXIT_USAGE
    }
}

fn fail(err: &Error) -> ExitCode {
    eprintln!("error: {err}");
    ExitCode::from(exit_for(err))
}

/// Numbered non-blank, non-comment lines of a file or stdin.
fn input_lines(input: Option<&PathBuf>) -> io::Result<Vec<(usize, String)>> {
    let reader: Box<dyn BufRead> = match input {
        Some(path) => Box::new(BufReader::new(File::open(path)?)),
        None => Box::new(BufReader::new(io::stdin())),
    };
    let mut out = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        let trimmed = line.trim();
        if !trimmed.is_empty() && !trimmed.starts_with('#') {
            out.push((i + 1, trimmed.to_string()));
        }
    }
    Ok(out)
}

fn read_input(input: Option<&PathBuf>) -> Result<Vec<(usize, String)>, ExitCode> {
    input_lines(input).map_err(|e| {
        eprintln!("error: cannot read input: {e}");
        ExitCode::from(EXIT_USAGE)
    })
}

fn solve_one(g: &SignedGraph, method: MethodArg) -> frustrix::Result<FrustrationResult> {
    match method {
        MethodArg::Bb => frustration_branch_bound(g),
        MethodArg::Brute => frustration_bruteforce(g),
    }
}

fn cmd_solve(input: Option<PathBuf>, method: MethodArg, as_json: bool) -> ExitCode {
    let lines = match read_input(input.as_ref()) {
        Ok(l) => l,
        Err(code) => return code,
    };
    let mut worst = 0u8;
    for (number, text) in lines {
        let outcome = parse_line(&text)
            .map_err(|e| e.at_line(number))
            .and_then(|g| solve_one(&g, method).map(|r| (g, r)));
        match outcome {
            Ok((g, r)) => {
                let minimal = g.negative_edge_count() == r.f;
                let witness = r.witness_signature.to_hex();
                if as_json {
                    let states = r.states_explored;
                    println!(
                        "{}",
                        json!({"line": number, "n": g.n(), "m": g.m(), "F": r.f, "witness": witness,
                               "minimal": minimal, "method": r.method, "states_explored": states})
                    );
                } else {
                    println!("F={} witness={} minimal={}", r.f, witness, minimal);
                }
            }
            Err(e) => {
                report_line_error(number, &e);
                worst = worst.max(exit_for(&e));
            }
        }
    }
    ExitCode::from(worst)
}

fn report_line_error(number: usize, e: &Error) {
    match e {
        Error::Parse { .. } => eprintln!("error: {e}"),
        _ => eprintln!("line {number}: {e}"),
    }
}

fn family_graph(name: FamilyName, gadgets: &str, k: usize, star: bool) -> frustrix::Result<SignedGraph> {
    match name {
        FamilyName::Gamma1 => gamma(1),
        FamilyName::Gamma2 => gamma(2),
        FamilyName::Gamma3 => gamma(3),
        FamilyName::Gamma4 => gamma(4),
        FamilyName::Gamma5 => gamma(5),
        FamilyName::Chain => {
            let kinds = gadgets
                .chars()
                .map(|c| {
                    GadgetKind::from_code(c).ok_or_else(|| Error::Construction(format!("unknown gadget code {c:?}")))
                })
                .collect::<frustrix::Result<Vec<_>>>()?;
            gadget_chain(&kinds)
        }
        FamilyName::Tritree => {
            let tree = if star { CubicTree::star_of_triangles() } else { CubicTree::caterpillar(k) };
            triangle_tree_extremal(&tree)
        }
        FamilyName::Petersen => Ok(petersen_negative()),
        FamilyName::W1 => Ok(w_graphs().0),
        FamilyName::W2 => Ok(w_graphs().1),
        FamilyName::Digon => digon_graph(k),
    }
}

fn cmd_family(name: FamilyName, gadgets: &str, k: usize, star: bool) -> ExitCode {
    let g = match family_graph(name, gadgets, k, star) {
        Ok(g) => g,
        Err(e) => return fail(&e),
    };
    if !g.is_simple() {
        let edges: Vec<_> = g.edges().iter().map(|e| json!([e.u, e.v, e.sign.to_string()])).collect();
        println!(
            "{}",
            json!({"family": "digon", "k": k, "n": g.n(), "m": g.m(), "edges": edges,
                   "note": "parallel edges cannot be written as graph6"})
        );
        return ExitCode::SUCCESS;
    }
    match to_line(&g) {
        Ok(line) => {
            println!("{line}");
            ExitCode::SUCCESS
        }
        Err(e) => fail(&e),
    }
}

fn print_summary(report: &VerificationReport) {
    let ratio = report.max_ratio.map_or("-".to_string(), |r| format!("{}/{}", r.num, r.den));
    println!(
        "{} n<={}: graphs={} classes={} violations={} exceptions={:?} equalities={} max_ratio={}",
        report.theorem,
        report.n_max,
        report.graphs_scanned,
        report.classes_scanned,
        report.violations.len(),
        report.exception_indices(),
        report.equalities.len(),
        ratio
    );
    eprintln!("  {} took {:.2?}", report.theorem, report.elapsed);
    for c in &report.checks {
        println!("  {} {}: {}", if c.passed { "pass" } else { "FAIL" }, c.name, c.detail);
    }
    for v in &report.violations {
        println!("  violation {} {} F={} bound {}/{}", v.graph6, v.signature_hex, v.f, v.bound_num, v.bound_den);
    }
}

fn run_verify(theorem: Theorem, nmax: Option<usize>, workers: usize, sink: &mut dyn RecordSink) -> frustrix::Result<Vec<VerificationReport>> {
    let config = |default: usize| VerifyConfig { n_max: nmax.unwrap_or(default), workers };
    Ok(match theorem {
        Theorem::Main => vec![verify_main_theorem(&config(9), sink)?],
        Theorem::Eq38 => vec![verify_3n2_over_8(&config(9), sink)?],
        Theorem::Small => vec![verify_small_characterization(&config(9), sink)?],
        Theorem::Girth5 => vec![probe_girth5_conjecture(&config(11), sink)?],
        Theorem::Cubic29 => {
            let top = nmax.unwrap_or(12);
            let orders: Vec<usize> = [10, 12].into_iter().filter(|&n| n <= top).collect();
            if orders.is_empty() {
                return Err(Error::Capacity { what: "cubic corollary (orders 10 and 12)", max: 12, actual: top });
            }
            let mut reports = Vec::new();
            for n in orders {
                reports.push(verify_cubic_corollary(n, &config(n), sink)?);
            }
            reports
        }
    })
}

fn cmd_verify(theorem: Theorem, nmax: Option<usize>, out: Option<PathBuf>, workers: usize) -> ExitCode {
    let reports = match &out {
        None => run_verify(theorem, nmax, workers, &mut NoSink),
        Some(path) => {
            let file = match File::create(path) {
                Ok(f) => f,
                Err(e) => {
                    eprintln!("error: cannot create {}: {e}", path.display());
                    return ExitCode::from(EXIT_USAGE);
                }
            };
            let mut sink = JsonLines(BufWriter::new(file));
            run_verify(theorem, nmax, workers, &mut sink).and_then(|r| sink.finish().map(|_| r))
        }
    };
    let reports = match reports {
        Ok(r) => r,
        Err(e) => return fail(&e),
    };
    let probe = matches!(theorem, Theorem::Girth5);
    let mut code = ExitCode::SUCCESS;
    for report in &reports {
        print_summary(report);
        if !report.passed() && !probe {
            code = ExitCode::from(EXIT_VIOLATION);
        }
    }
    code
}

fn cmd_reduce(input: Option<PathBuf>, trace: bool) -> ExitCode {
    let lines = match read_input(input.as_ref()) {
        Ok(l) => l,
        Err(code) => return code,
    };
    let mut worst = 0u8;
    for (number, text) in lines {
        let mut run = || -> frustrix::Result<()> {
            let g = parse_line(&text).map_err(|e| e.at_line(number))?;
            let outcome = reduce_to_fixpoint(&g)?;
            let f_in = frustration_branch_bound(&g)?.f;
            let f_out = frustration_branch_bound(&outcome.final_graph)?.f;
            if trace {
                let mut skipped = outcome.skipped.iter().peekable();
                for (i, step) in outcome.steps.iter().enumerate() {
                    while let Some(s) = skipped.next_if(|s| s.after_step <= i) {
                        println!("  skipped {} {:?}: {}", s.rule, s.vertices, s.reason);
                    }
                    println!(
                        "  step {}: {} {:?} {} offset={} n={}->{}",
                        i + 1,
                        step.rule,
                        step.matched.vertices,
                        step.variant,
                        step.offset,
                        step.input.n(),
                        step.output.n()
                    );
                }
                for s in skipped {
                    println!("  skipped {} {:?}: {}", s.rule, s.vertices, s.reason);
                }
            }
            let reconciled = f_in == f_out + outcome.total_offset;
            println!(
                "line {number}: steps={} offset={} F(input)={} F(final)={} final_n={} reconciled={}",
                outcome.steps.len(),
                outcome.total_offset,
                f_in,
                f_out,
                outcome.final_graph.n(),
                reconciled
            );
            if !reconciled {
                worst = worst.max(EXIT_VIOLATION);
            }
            Ok(())
        };
        if let Err(e) = run() {
            report_line_error(number, &e);
            worst = worst.max(exit_for(&e));
        }
    }
    ExitCode::from(worst)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Solve { input, method, json } => cmd_solve(input, method, json),
        Command::Family { name, gadgets, k, star } => cmd_family(name, &gadgets, k, star),
        Command::Verify { theorem, nmax, out, workers } => cmd_verify(theorem, nmax, out, workers),
        Command::Reduce { input, trace } => cmd_reduce(input, trace),
    }
}
