//! The `domkit` command-line front end.
//!
//! Exit codes: 0 success, 2 input error, 3 graph not bipartite, 4 set not
//! dominating, 5 bound violation or solver disagreement.

use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use rand_chacha::ChaCha8Rng;
use rand_core::{Rng, SeedableRng};
use rayon::prelude::*;

use crate::bounds::{conjecture_bound, format_rational, RatioReport, Rational, CSV_HEADER};
use crate::error::Error;
use crate::families::{random_bipartite, Family};
use crate::graph::Graph;
use crate::io::{parse_edge_list, parse_vertex_set, write_edge_list};
use crate::solvers::{gamma_bnb, i_bnb, Oracle};
use crate::transform::{independent_dominating_from, verify_theorem3};

pub const EXIT_OK: u8 = 0;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_NOT_BIPARTITE: u8 = 3;
pub const EXIT_NOT_DOMINATING: u8 = 4;
pub const EXIT_VIOLATION: u8 = 5;

#[derive(Debug, Parser)]
#[command(
    name = "domkit",
    version,
    about = "Exact domination and independent domination numbers"
)]
pub struct Cli {
    /// Write the primary output here instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute gamma, i, the ratio and both bounds for a graph.
    Solve {
        /// Edge-list file (standard input when omitted).
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Run the bipartite transform on a dominating set and print its trace.
    Transform {
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long)]
        dominating_set: PathBuf,
    },
    /// Emit a family instance in edge-list format.
    Generate {
        #[command(subcommand)]
        family: FamilyArgs,
    },
    /// Check i <= gamma * delta / 2 on seeded random bipartite graphs.
    Verify {
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 6)]
        min_n: usize,
        #[arg(long, default_value_t = 16)]
        max_n: usize,
        #[arg(long, default_value_t = 0.4)]
        edge_prob: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Tabulate the odd-cycle corona family against delta / 2.
    Sweep {
        #[arg(long, default_value_t = 1)]
        k_min: usize,
        #[arg(long, default_value_t = 3)]
        k_max: usize,
        #[arg(long, default_value_t = 1)]
        s_min: usize,
        #[arg(long, default_value_t = 8)]
        s_max: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum FamilyArgs {
    CompleteBipartite {
        #[arg(long)]
        m: usize,
    },
    DoubleStar {
        #[arg(long)]
        s: usize,
    },
    Cycle {
        #[arg(long)]
        n: usize,
    },
    Corona {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        s: usize,
    },
    RandomBipartite {
        #[arg(long)]
        na: usize,
        #[arg(long)]
        nb: usize,
        #[arg(long)]
        edge_prob: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

impl FamilyArgs {
    pub fn family(&self) -> Family {
        match *self {
            FamilyArgs::CompleteBipartite { m } => Family::CompleteBipartite { m },
            FamilyArgs::DoubleStar { s } => Family::DoubleStar { s },
            FamilyArgs::Cycle { n } => Family::Cycle { n },
            FamilyArgs::Corona { k, s } => Family::OddCycleCorona { k, s },
            FamilyArgs::RandomBipartite {
                na,
                nb,
                edge_prob,
                seed,
            } => Family::RandomBipartite {
                na,
                nb,
                p: edge_prob,
                seed,
            },
        }
    }
}

#[derive(Debug)]
enum Failure {
    Input(String),
    NotBipartite(Vec<usize>),
    NotDominating(usize),
    Violation(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Input(_) => EXIT_INPUT,
            Failure::NotBipartite(_) => EXIT_NOT_BIPARTITE,
            Failure::NotDominating(_) => EXIT_NOT_DOMINATING,
            Failure::Violation(_) => EXIT_VIOLATION,
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Input(m) | Failure::Violation(m) => m.clone(),
            Failure::NotBipartite(cycle) => format!(
                "graph is not bipartite; odd cycle of length {}: {}",
                cycle.len(),
                cycle
                    .iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            ),
            Failure::NotDominating(v) => {
                format!("set is not dominating: vertex {v} is undominated")
            }
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NotBipartite(c) => Failure::NotBipartite(c),
            Error::NotDominating(v) => Failure::NotDominating(v),
            other => Failure::Input(other.to_string()),
        }
    }
}

/// Executes one parsed command; returns the process exit code.
pub fn run(cli: &Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> u8 {
    let mut out = String::new();
    let result = dispatch(&cli.command, &mut out, stderr);
    let written = match &cli.output {
        Some(path) => std::fs::write(path, &out),
        None => stdout.write_all(out.as_bytes()),
    };
    if let Err(e) = written {
        let _ = writeln!(stderr, "error: cannot write output: {e}");
        return EXIT_INPUT;
    }
    match result {
        Ok(()) => EXIT_OK,
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message());
            f.code()
        }
    }
}

fn dispatch(cmd: &Command, out: &mut String, err: &mut dyn Write) -> Result<(), Failure> {
    match cmd {
        Command::Solve { input } => cmd_solve(&read_graph(input.as_deref())?, out),
        Command::Transform {
            input,
            dominating_set,
        } => cmd_transform(&read_graph(input.as_deref())?, dominating_set, out),
        Command::Generate { family } => {
            out.push_str(&write_edge_list(&family.family().generate()?));
            Ok(())
        }
        Command::Verify {
            count,
            min_n,
            max_n,
            edge_prob,
            seed,
        } => cmd_verify(*count, *min_n, *max_n, *edge_prob, *seed, out, err),
        Command::Sweep {
            k_min,
            k_max,
            s_min,
            s_max,
        } => cmd_sweep(*k_min, *k_max, *s_min, *s_max, out),
    }
}

fn read_graph(path: Option<&Path>) -> Result<Graph, Failure> {
    let (text, name) = match path {
        Some(p) => (
            std::fs::read_to_string(p)
                .map_err(|e| Failure::Input(format!("{}: {e}", p.display())))?,
            p.display().to_string(),
        ),
        None => {
            let mut s = String::new();
            std::io::Read::read_to_string(&mut std::io::stdin(), &mut s)
                .map_err(|e| Failure::Input(format!("<stdin>: {e}")))?;
            (s, "<stdin>".to_string())
        }
    };
    parse_edge_list(&text).map_err(|e| Failure::Input(format!("{name}: {e}")))
}

fn cmd_solve(g: &Graph, out: &mut String) -> Result<(), Failure> {
    let gamma = gamma_bnb(g);
    let i = i_bnb(g);
    let delta = g.max_degree();
    let ratio = if gamma.value == 0 {
        "na".to_string()
    } else {
        format_rational(&Rational::new(i.value as i64, gamma.value as i64))
    };
    writeln!(out, "n={} m={}", g.n(), g.edge_count()).unwrap();
    writeln!(
        out,
        "gamma={} i={} delta={} ratio={}",
        gamma.value, i.value, delta, ratio
    )
    .unwrap();
    writeln!(out, "gamma_witness={}", gamma.witness).unwrap();
    writeln!(out, "i_witness={}", i.witness).unwrap();
    if delta >= 2 && gamma.value > 0 {
        let report = RatioReport::from_values(g.n(), g.edge_count(), gamma.value, i.value, delta)?;
        writeln!(
            out,
            "conjecture_bound={} within_conjecture={}",
            format_rational(&report.conjecture_bound),
            report.within_conjecture
        )
        .unwrap();
        match (report.rv_bound, report.within_rv) {
            (Some(b), Some(w)) => {
                writeln!(out, "rv_bound={} within_rv={}", format_rational(&b), w).unwrap()
            }
            _ => writeln!(out, "rv_bound=na within_rv=na").unwrap(),
        }
        if let Some(f) = report.furuya_bound_sq_check {
            writeln!(out, "furuya_exceeds_half_delta={f}").unwrap();
        }
    } else {
        writeln!(out, "conjecture_bound=na within_conjecture=na").unwrap();
        writeln!(out, "rv_bound=na within_rv=na").unwrap();
    }
    Ok(())
}

fn cmd_transform(g: &Graph, set_path: &Path, out: &mut String) -> Result<(), Failure> {
    let parts = g.bipartition().map_err(|c| Failure::NotBipartite(c.0))?;
    let text = std::fs::read_to_string(set_path)
        .map_err(|e| Failure::Input(format!("{}: {e}", set_path.display())))?;
    let d = parse_vertex_set(&text, g.n())
        .map_err(|e| Failure::Input(format!("{}: {e}", set_path.display())))?;
    let t = independent_dominating_from(g, &parts, &d)?;
    let chain = t.size_chain();
    writeln!(out, "I0={}", t.i0).unwrap();
    writeln!(out, "A0={}", t.a0).unwrap();
    writeln!(out, "A1={}", t.a1).unwrap();
    writeln!(out, "B0={}", t.b0).unwrap();
    writeln!(out, "B1={}", t.b1).unwrap();
    writeln!(out, "swapped={}", t.swapped).unwrap();
    writeln!(out, "A2={}", t.a2).unwrap();
    writeln!(out, "I={}", t.result).unwrap();
    writeln!(
        out,
        "|A2|={} <= (delta-1)|B1|={}",
        chain.a2,
        (chain.delta - 1) * chain.b1
    )
    .unwrap();
    writeln!(
        out,
        "|I|={} = |D|-|B1|+|A2| <= |D|+(delta-2)|B1|={} <= floor(|D|*delta/2)={}",
        chain.result,
        chain.middle(),
        chain.half_bound()
    )
    .unwrap();
    let independent = g.is_independent(&t.result);
    let dominating = g.is_dominating(&t.result);
    writeln!(
        out,
        "independent={independent} dominating={dominating} chain_holds={}",
        chain.holds()
    )
    .unwrap();
    if !(independent && dominating && chain.holds()) {
        return Err(Failure::Violation(format!(
            "transform output failed its guarantees on:\n{}",
            write_edge_list(g)
        )));
    }
    Ok(())
}

/// Parameters of one `verify` instance, drawn up front from the master seed.
#[derive(Clone, Copy, Debug)]
struct Draw {
    na: usize,
    nb: usize,
    seed: u64,
}

fn draw_instances(count: usize, min_n: usize, max_n: usize, seed: u64) -> Vec<Draw> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = min_n + (rng.next_u64() % (max_n - min_n + 1) as u64) as usize;
            let na = 1 + (rng.next_u64() % (n - 1) as u64) as usize;
            Draw {
                na,
                nb: n - na,
                seed: rng.next_u64(),
            }
        })
        .collect()
}

enum VerifyRow {
    Skipped,
    Row(String),
    Violation(String),
}

fn cmd_verify(
    count: usize,
    min_n: usize,
    max_n: usize,
    p: f64,
    seed: u64,
    out: &mut String,
    err: &mut dyn Write,
) -> Result<(), Failure> {
    let oracle = Oracle::from_env()?;
    if min_n < 2 || min_n > max_n {
        return Err(Failure::Input(format!(
            "need 2 <= min-n <= max-n, got {min_n}..{max_n}"
        )));
    }
    if max_n > oracle.cap() {
        return Err(Failure::Input(format!(
            "max-n {max_n} exceeds the oracle cap {}",
            oracle.cap()
        )));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(Failure::Input(format!(
            "edge probability {p} outside [0, 1]"
        )));
    }
    let draws = draw_instances(count, min_n, max_n, seed);
    let rows: Vec<VerifyRow> = draws
        .par_iter()
        .enumerate()
        .map(|(idx, d)| verify_one(idx, d, p, &oracle))
        .collect();

    writeln!(out, "instance,{CSV_HEADER},transform_size").unwrap();
    let (mut skipped, mut violations) = (0, 0);
    for row in &rows {
        match row {
            VerifyRow::Skipped => skipped += 1,
            VerifyRow::Row(line) => out.push_str(line),
            VerifyRow::Violation(report) => {
                violations += 1;
                let _ = write!(err, "{report}");
            }
        }
    }
    let _ = writeln!(
        err,
        "instances={count} evaluated={} skipped={skipped} violations={violations}",
        count - skipped - violations
    );
    if violations > 0 {
        return Err(Failure::Violation(format!(
            "{violations} violation(s) found"
        )));
    }
    Ok(())
}

fn verify_one(idx: usize, d: &Draw, p: f64, oracle: &Oracle) -> VerifyRow {
    let g = random_bipartite(d.na, d.nb, p, d.seed).expect("parameters validated");
    if g.max_degree() < 2 {
        return VerifyRow::Skipped;
    }
    let violation = |why: &str| {
        VerifyRow::Violation(format!(
            "violation at instance {idx} ({why}; na={} nb={} p={p} seed={}):\n{}",
            d.na,
            d.nb,
            d.seed,
            write_edge_list(&g)
        ))
    };
    let report = match verify_theorem3(&g) {
        Ok(r) => r,
        Err(e) => return violation(&e.to_string()),
    };
    let exact = oracle.gamma(&g).map(|r| r.value) == Ok(report.gamma)
        && oracle.independent(&g).map(|r| r.value) == Ok(report.i);
    if !exact {
        return violation("branch-and-bound disagrees with the oracle");
    }
    if report.is_violation() {
        return violation("bound or transform guarantee failed");
    }
    let ratio =
        RatioReport::from_values(g.n(), g.edge_count(), report.gamma, report.i, report.delta)
            .expect("delta >= 2 and gamma >= 1");
    VerifyRow::Row(format!(
        "{idx},{},{}\n",
        ratio.csv_row(),
        report.transform_size
    ))
}

pub const SWEEP_HEADER: &str =
    "k,s,n,gamma,i,delta,ratio_num,ratio_den,half_delta_num,half_delta_den,exceeds,oracle_gamma,oracle_i";

fn cmd_sweep(
    k_min: usize,
    k_max: usize,
    s_min: usize,
    s_max: usize,
    out: &mut String,
) -> Result<(), Failure> {
    if k_min == 0 || s_min == 0 {
        return Err(Failure::Input(
            "k and s ranges must start at 1 or above".into(),
        ));
    }
    let oracle = Oracle::from_env()?;
    writeln!(out, "{SWEEP_HEADER}").unwrap();
    for k in k_min..=k_max {
        for s in s_min..=s_max {
            let family = Family::OddCycleCorona { k, s };
            let cf = family.closed_forms().expect("corona has closed forms");
            let n = (2 * k + 1) * (s + 1);
            let ratio = Rational::new(cf.i as i64, cf.gamma as i64);
            let half = conjecture_bound(cf.delta)?;
            let exceeds = 2 * cf.i > cf.gamma * cf.delta;
            let (og, oi) = if n <= oracle.cap() {
                let g = family.generate()?;
                let og = oracle.gamma(&g)?.value;
                let oi = oracle.independent(&g)?.value;
                if (og, oi) != (cf.gamma, cf.i) {
                    return Err(Failure::Violation(format!(
                        "oracle ({og}, {oi}) disagrees with closed forms ({}, {}) at k={k} s={s}",
                        cf.gamma, cf.i
                    )));
                }
                (og.to_string(), oi.to_string())
            } else {
                (String::new(), String::new())
            };
            writeln!(
                out,
                "{k},{s},{n},{},{},{},{},{},{},{},{exceeds},{og},{oi}",
                cf.gamma,
                cf.i,
                cf.delta,
                ratio.numer(),
                ratio.denom(),
                half.numer(),
                half.denom(),
            )
            .unwrap();
        }
    }
    Ok(())
}
