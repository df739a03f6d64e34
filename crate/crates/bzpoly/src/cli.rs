//! The `bzpoly` command line.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use bzpoly_core::search::StringSearch;
use bzpoly_core::{
    cone_su2, cone_su3, parse_weight_list, reconstruct_diagram, reconstruct_triangle,
    root_lattice_check, ConeReport, CouplingQuery, Error, Evaluator, Weight,
};

use crate::bench::{self, Family};
use crate::format::Record;
use crate::query::{self, Method};
use crate::sweep::{verify, VerifyConfig, VerifyReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "bzpoly",
    version,
    about = "su(r+1) tensor product multiplicities from BZ polytopes"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug)]
pub struct WeightArgs {
    /// Weights as `a,b,..;c,d,..;..` (Dynkin labels).
    pub weights: String,
    /// Rank r of su(r+1); inferred from the first weight when omitted.
    #[arg(long)]
    pub rank: Option<usize>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Multiplicity of the singlet in the tensor product of three or more weights.
    Mult {
        #[command(flatten)]
        input: WeightArgs,
        #[arg(long, value_enum, default_value = "polytope")]
        method: Method,
        /// Also evaluate the other paths and fail on disagreement.
        #[arg(long)]
        check: bool,
        /// List the terms of the first channel.
        #[arg(long)]
        explain: bool,
        #[arg(long)]
        json: bool,
    },
    /// List the true triangles or diagrams.
    Enumerate {
        #[command(flatten)]
        input: WeightArgs,
        /// Print the explicit entries of each object.
        #[arg(long)]
        entries: bool,
        /// Print entries in the machine format instead of the triangular layout.
        #[arg(long, requires = "entries")]
        machine: bool,
    },
    /// Four-point non-vanishing cone test (rank 1 or 2).
    Cone {
        #[command(flatten)]
        input: WeightArgs,
        #[arg(long)]
        json: bool,
    },
    /// Cross-check all evaluation paths over a label box.
    Verify {
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        max_label: i64,
        #[arg(long, default_value_t = 3)]
        points: usize,
        /// Check this many random tuples instead of the whole box.
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Worker threads (default: all cores).
        #[arg(long)]
        threads: Option<usize>,
        /// Also count glued diagrams directly (rank <= 2, points <= 6).
        #[arg(long)]
        diagrams: bool,
    },
    /// Time the evaluation paths over a scaling family.
    Bench {
        #[arg(long, value_enum, default_value = "default")]
        family: Family,
        #[arg(long, default_value_t = 6)]
        kmax: i64,
        #[arg(long)]
        json: bool,
    },
}

struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure {
            code: 1,
            message: e.to_string(),
        }
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure {
            code: 1,
            message: e.to_string(),
        }
    }
}

type Outcome = std::result::Result<(), Failure>;

/// Parses `args` (program name first), runs the command and returns the
/// exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(()) => EXIT_OK,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> Outcome {
    match cmd {
        Command::Mult {
            input,
            method,
            check,
            explain,
            json,
        } => mult(&input, method, check, explain, json, out),
        Command::Enumerate {
            input,
            entries,
            machine,
        } => enumerate(&input, entries, machine, out),
        Command::Cone { input, json } => cone(&input, json, out),
        Command::Verify {
            rank,
            max_label,
            points,
            samples,
            seed,
            threads,
            diagrams,
        } => {
            let cfg = VerifyConfig {
                rank,
                max_label,
                points,
                samples,
                seed,
                diagrams,
            };
            let rep = match threads {
                Some(n) => {
                    let pool = rayon::ThreadPoolBuilder::new()
                        .num_threads(n)
                        .build()
                        .map_err(|e| Failure {
                            code: EXIT_USAGE,
                            message: e.to_string(),
                        })?;
                    pool.install(|| verify(&cfg))?
                }
                None => verify(&cfg)?,
            };
            print_verify(&cfg, rep, out)
        }
        Command::Bench { family, kmax, json } => {
            let rows = bench::run(family, kmax)?;
            if json {
                writeln!(out, "{}", serde_json::to_string_pretty(&rows)?)?;
            } else {
                write!(out, "{}", bench::to_csv(&rows))?;
            }
            Ok(())
        }
    }
}

fn parse(input: &WeightArgs, min_points: usize) -> std::result::Result<Vec<Weight>, Failure> {
    let ws = parse_weight_list(&input.weights, input.rank)?;
    if ws.len() < min_points {
        return Err(Error::TooFewWeights {
            needed: min_points,
            found: ws.len(),
        }
        .into());
    }
    Ok(ws)
}

fn mult(
    input: &WeightArgs,
    method: Method,
    check: bool,
    explain: bool,
    json: bool,
    out: &mut dyn Write,
) -> Outcome {
    let q = CouplingQuery::new(parse(input, 3)?)?;
    let ev = Evaluator::new(q.rank())?;
    let report = query::report(&ev, &q, method, explain)?;
    if check || method != Method::Polytope {
        let others: Vec<Method> = if check {
            Method::ALL.to_vec()
        } else {
            vec![Method::Polytope]
        };
        for m in others {
            let v = query::evaluate(&ev, &q, m)?;
            if v != report.multiplicity {
                return Err(Failure {
                    code: EXIT_MISMATCH,
                    message: format!(
                        "{} gives {} but {} gives {}",
                        method.name(),
                        report.multiplicity,
                        m.name(),
                        v
                    ),
                });
            }
        }
    }
    if json {
        writeln!(out, "{}", serde_json::to_string(&report)?)?;
        return Ok(());
    }
    writeln!(out, "{}", report.multiplicity)?;
    if let Some(terms) = &report.breakdown {
        for t in terms {
            let rho = Weight::new(t.rho.clone())?;
            writeln!(
                out,
                "  rho=({rho}) {} x {} = {}",
                t.left,
                t.right,
                t.left * t.right
            )?;
        }
    }
    Ok(())
}

fn enumerate(input: &WeightArgs, entries: bool, machine: bool, out: &mut dyn Write) -> Outcome {
    let ws = parse(input, 3)?;
    let rank = ws[0].rank();
    let ev = Evaluator::new(rank)?;
    let mut blocks: Vec<(String, Option<Record>, Option<String>)> = Vec::new();
    match ws.as_slice() {
        [a, b, c] => {
            for cv in ev.enumerate3(a, b, c)? {
                let t = entries
                    .then(|| reconstruct_triangle(a, b, c, &cv))
                    .transpose()?;
                blocks.push((
                    cv.to_string(),
                    t.as_ref().map(Record::triangle),
                    t.map(|t| t.render()),
                ));
            }
        }
        [a, b, c, d] => {
            for cv in ev.enumerate4(a, b, c, d)? {
                let g = entries
                    .then(|| reconstruct_diagram(a, b, c, d, &cv))
                    .transpose()?;
                blocks.push((
                    cv.to_string(),
                    g.as_ref().map(Record::diagram),
                    g.map(|g| g.render()),
                ));
            }
        }
        _ => {
            if rank > 2 || ws.len() > 6 {
                return Err(Error::ScaleLimit(
                    "enumeration above four points needs rank <= 2 and at most six weights",
                )
                .into());
            }
            if root_lattice_check(&ws)?.is_some() {
                let search = StringSearch::new(&ws)?;
                for x in search.points()? {
                    let g = entries.then(|| search.diagram(&x)).transpose()?;
                    let label = x.iter().map(i64::to_string).collect::<Vec<_>>().join(" ");
                    blocks.push((
                        format!("x=[{label}]"),
                        g.as_ref().map(Record::diagram),
                        g.map(|g| g.render()),
                    ));
                }
            }
        }
    }
    for (k, (label, record, pretty)) in blocks.iter().enumerate() {
        writeln!(out, "#{} {label}", k + 1)?;
        if machine {
            if let Some(r) = record {
                writeln!(out, "{r}")?;
            }
        } else if let Some(p) = pretty {
            writeln!(out, "{}", p.trim_end())?;
        }
    }
    writeln!(out, "count: {}", blocks.len())?;
    Ok(())
}

#[derive(Serialize)]
struct ConeJson<'a> {
    rank: usize,
    weights: Vec<Vec<i64>>,
    member: bool,
    violated: &'a [String],
    s_numerators: &'a [i64],
    s_denominator: i64,
}

fn fraction(n: i64, d: i64) -> String {
    if n % d == 0 {
        (n / d).to_string()
    } else {
        format!("{n}/{d}")
    }
}

fn cone(input: &WeightArgs, json: bool, out: &mut dyn Write) -> Outcome {
    let ws = parse(input, 4)?;
    if ws.len() != 4 {
        return Err(Failure {
            code: EXIT_USAGE,
            message: format!("cone needs exactly four weights, got {}", ws.len()),
        });
    }
    let rank = ws[0].rank();
    let report: ConeReport = match rank {
        1 => cone_su2(
            ws[0].label(1),
            ws[1].label(1),
            ws[2].label(1),
            ws[3].label(1),
        ),
        2 => cone_su3(&ws[0], &ws[1], &ws[2], &ws[3])?,
        r => return Err(Error::UnsupportedRank { rank: r }.into()),
    };
    if json {
        let j = ConeJson {
            rank,
            weights: ws.iter().map(|w| w.labels().to_vec()).collect(),
            member: report.member,
            violated: &report.violated,
            s_numerators: &report.s_numerators,
            s_denominator: report.s_denominator,
        };
        writeln!(out, "{}", serde_json::to_string(&j)?)?;
        return Ok(());
    }
    writeln!(
        out,
        "{}",
        if report.member {
            "member"
        } else {
            "non-member"
        }
    )?;
    let s: Vec<String> = report
        .s_numerators
        .iter()
        .map(|&n| fraction(n, report.s_denominator))
        .collect();
    writeln!(out, "S: {}", s.join(" "))?;
    if !report.violated.is_empty() {
        writeln!(out, "violated: {}", report.violated.join(", "))?;
    }
    Ok(())
}

fn print_verify(cfg: &VerifyConfig, rep: VerifyReport, out: &mut dyn Write) -> Outcome {
    writeln!(
        out,
        "rank: {} max-label: {} points: {}",
        cfg.rank, cfg.max_label, cfg.points
    )?;
    writeln!(out, "paths: {}", rep.paths.join(", "))?;
    writeln!(out, "checked: {}", rep.checked)?;
    writeln!(out, "nonzero: {}", rep.nonzero)?;
    writeln!(out, "mismatches: {}", rep.mismatches)?;
    writeln!(out, "elapsed: {:.2}s", rep.elapsed.as_secs_f64())?;
    if let Some(m) = rep.first {
        return Err(Failure {
            code: EXIT_MISMATCH,
            message: format!("first counterexample: {m}"),
        });
    }
    Ok(())
}
