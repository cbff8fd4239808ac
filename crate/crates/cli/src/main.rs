//! Command-line front end. Every subcommand prints a machine-readable first
//! line (`YES` or `NO reason=<code>`) followed by human detail, and exits
//! with 0 on yes, 1 on no, 2 on usage or input errors.

use std::fs;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use temporient::complete::{solve_ttc_fpt_jobs, FptAnswer};
use temporient::graph::{Orientation, TemporalGraph};
use temporient::io::{parse_instance, parse_orientation, serialize_instance, serialize_orientation, Instance};
use temporient::oracle::{
    oracle_complete, oracle_multilayer_witness, oracle_recognize_par, oracle_recognize_witness,
    OracleBudget,
};
use temporient::recognize::{recognize, solve_multilayer, Answer};
use temporient::reductions::{gen_mto, gen_strict_tto, gen_ttc, CnfFormula, CnfKind};
use temporient::verify::{describe_violation, verify_multilayer, verify_orientation, Variant};

#[derive(Parser)]
#[command(name = "temporient", version, about = "Temporal transitive orientation toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct InstanceArg {
    /// Instance file in the `v`/`e`/`em`/`o` line format.
    file: PathBuf,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether the instance admits a transitive orientation.
    Recognize {
        #[arg(long)]
        variant: Variant,
        /// Print the witness orientation as `->` lines on YES.
        #[arg(long)]
        print_orientation: bool,
        /// Print solver statistics to stderr.
        #[arg(long)]
        stats: bool,
        #[command(flatten)]
        instance: InstanceArg,
    },
    /// Decide temporal transitive completion within a budget of added edges.
    Complete {
        #[arg(long)]
        variant: Variant,
        /// Maximum number of added time-edges.
        #[arg(long)]
        budget: usize,
        /// Also print the chosen orientation before the `+` lines.
        #[arg(long)]
        print_orientation: bool,
        /// Worker threads for the extension search (witness canonical only with 1).
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[command(flatten)]
        instance: InstanceArg,
    },
    /// Decide multilayer transitive orientation of a multi-label instance.
    Multilayer {
        #[arg(long)]
        print_orientation: bool,
        #[command(flatten)]
        instance: InstanceArg,
    },
    /// Check an orientation against a variant (or per-layer transitivity).
    Verify {
        #[arg(long, conflicts_with = "multilayer")]
        variant: Option<Variant>,
        #[arg(long)]
        multilayer: bool,
        /// Orientation file of `->` lines; defaults to the instance's `o` lines.
        #[arg(long)]
        orientation: Option<PathBuf>,
        #[command(flatten)]
        instance: InstanceArg,
    },
    /// Generate a hardness-reduction instance from a DIMACS CNF formula.
    Gen {
        #[arg(long, value_parser = ["strict-tto", "ttc", "mto"])]
        reduction: String,
        /// Clause target for the ttc reduction (budget becomes m - k).
        #[arg(long)]
        k: Option<usize>,
        /// Output instance file; stdout when omitted.
        #[arg(short, long)]
        out: Option<PathBuf>,
        /// CNF input file; stdin when omitted.
        cnf: Option<PathBuf>,
    },
    /// Exhaustive ground-truth engines with the same flags as the solvers.
    #[command(subcommand)]
    Oracle(OracleCommand),
}

#[derive(Subcommand)]
enum OracleCommand {
    Recognize {
        #[arg(long)]
        variant: Variant,
        #[arg(long)]
        print_orientation: bool,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[command(flatten)]
        instance: InstanceArg,
    },
    Complete {
        #[arg(long)]
        variant: Variant,
        #[arg(long)]
        budget: usize,
        #[command(flatten)]
        instance: InstanceArg,
    },
    Multilayer {
        #[arg(long)]
        print_orientation: bool,
        #[command(flatten)]
        instance: InstanceArg,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {}", msg);
            ExitCode::from(2)
        }
    }
}

fn read_instance(path: &PathBuf) -> Result<Instance, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {}", path.display(), e))?;
    parse_instance(&text).map_err(|e| format!("{}: {}", path.display(), e))
}

fn plain_graph(inst: Instance, what: &str) -> Result<TemporalGraph, String> {
    match inst {
        Instance::Graph(g) => Ok(g),
        Instance::Oriented(..) => Err(format!("{} expects an unoriented single-label instance (found `o` lines)", what)),
        Instance::Multi(..) => Err(format!("{} expects a single-label instance (found `em` lines)", what)),
    }
}

fn print_no(reason: &str, detail: &str) -> u8 {
    println!("NO reason={}", reason);
    if !detail.is_empty() {
        println!("{}", detail);
    }
    1
}

fn run(cmd: Command) -> Result<u8, String> {
    match cmd {
        Command::Recognize { variant, print_orientation, stats, instance } => {
            let g = plain_graph(read_instance(&instance.file)?, "recognize")?;
            let result = recognize(&g, variant);
            if stats {
                eprintln!(
                    "iterations={} branches={} forcing_rounds={}",
                    result.stats.iterations, result.stats.branches, result.stats.forcing_rounds
                );
            }
            match result.answer {
                Answer::Yes(f) => {
                    println!("YES");
                    if print_orientation {
                        print!("{}", serialize_orientation(&g, &f));
                    }
                    Ok(0)
                }
                Answer::No(reason) => {
                    let detail = match &reason {
                        temporient::recognize::NoReason::BottomTriangle => {
                            "UNSAT: bottom-triangle (a synchronous triangle admits no strong transitive orientation)"
                        }
                        temporient::recognize::NoReason::ImproperClass => {
                            "an implication class forces an edge in both directions"
                        }
                        _ => "the constraint system is unsatisfiable",
                    };
                    Ok(print_no(&reason.code(), detail))
                }
            }
        }
        Command::Complete { variant, budget, print_orientation, jobs, instance } => {
            let (g, partial) = match read_instance(&instance.file)? {
                Instance::Graph(g) => {
                    let m = g.m();
                    (g, Orientation::empty(m))
                }
                Instance::Oriented(g, f) => (g, f),
                Instance::Multi(..) => return Err("complete expects a single-label instance".into()),
            };
            match solve_ttc_fpt_jobs(&g, &partial, budget, variant, jobs) {
                FptAnswer::Yes(out) => {
                    println!("YES");
                    if print_orientation {
                        print!("{}", serialize_orientation(&g, &out.orientation));
                    }
                    let mut lines: Vec<String> = out
                        .completion
                        .added
                        .iter()
                        .map(|d| format!("+ {} {} {}", g.name(d.from), g.name(d.to), d.label))
                        .collect();
                    lines.sort();
                    for line in lines {
                        println!("{}", line);
                    }
                    Ok(0)
                }
                FptAnswer::No(reason) => Ok(print_no(reason.code(), &reason.to_string())),
            }
        }
        Command::Multilayer { print_orientation, instance } => {
            let g = match read_instance(&instance.file)? {
                Instance::Multi(g) => g,
                // A single-label file is a degenerate multi-label instance.
                Instance::Graph(sg) => to_multi(&sg),
                Instance::Oriented(..) => {
                    return Err("multilayer expects an unoriented instance".into())
                }
            };
            match solve_multilayer(&g).answer {
                Answer::Yes(f) => {
                    println!("YES");
                    if print_orientation {
                        print!("{}", serialize_multi_orientation(&g, &f));
                    }
                    Ok(0)
                }
                Answer::No(reason) => Ok(print_no(&reason.code(), "no orientation makes every layer transitive")),
            }
        }
        Command::Verify { variant, multilayer, orientation, instance } => {
            let inst = read_instance(&instance.file)?;
            if multilayer {
                let g = match inst {
                    Instance::Multi(g) => g,
                    Instance::Graph(sg) => to_multi(&sg),
                    Instance::Oriented(..) => {
                        return Err("multilayer verification reads the orientation from --orientation".into())
                    }
                };
                let path = orientation.ok_or("--multilayer requires --orientation")?;
                let text = fs::read_to_string(&path).map_err(|e| format!("{}: {}", path.display(), e))?;
                let f = parse_multi_orientation(&g, &text)?;
                match verify_multilayer(&g, &f).map_err(|e| e.to_string())? {
                    None => {
                        println!("YES");
                        Ok(0)
                    }
                    Some((layer, viol)) => {
                        let names = |v| g.name(v).to_owned();
                        Ok(print_no(
                            "violation",
                            &format!("layer {}: {}", layer, describe_violation(&names, &viol)),
                        ))
                    }
                }
            } else {
                let variant = variant.ok_or("verify requires --variant or --multilayer")?;
                let (g, f) = match (inst, orientation) {
                    (Instance::Oriented(g, f), None) => (g, f),
                    (Instance::Graph(g), Some(path)) | (Instance::Oriented(g, _), Some(path)) => {
                        let text =
                            fs::read_to_string(&path).map_err(|e| format!("{}: {}", path.display(), e))?;
                        let f = parse_orientation(&g, &text).map_err(|e| e.to_string())?;
                        (g, f)
                    }
                    (Instance::Graph(_), None) => {
                        return Err("no orientation: pass --orientation or use `o` lines".into())
                    }
                    (Instance::Multi(..), _) => {
                        return Err("variant verification expects a single-label instance".into())
                    }
                };
                if !f.is_proper() {
                    return Err("orientation does not cover every edge".into());
                }
                match verify_orientation(&g, &f, variant).map_err(|e| e.to_string())? {
                    None => {
                        println!("YES");
                        Ok(0)
                    }
                    Some(viol) => {
                        let names = |v| g.name(v).to_owned();
                        Ok(print_no("violation", &describe_violation(&names, &viol)))
                    }
                }
            }
        }
        Command::Gen { reduction, k, out, cnf } => {
            let text = match cnf {
                Some(path) => fs::read_to_string(&path).map_err(|e| format!("{}: {}", path.display(), e))?,
                None => {
                    let mut buf = String::new();
                    std::io::stdin().read_to_string(&mut buf).map_err(|e| e.to_string())?;
                    buf
                }
            };
            let (header, body) = match reduction.as_str() {
                "strict-tto" => {
                    let f = CnfFormula::parse_dimacs(CnfKind::Sat34, &text).map_err(|e| e.to_string())?;
                    let g = gen_strict_tto(&f).map_err(|e| e.to_string())?;
                    ("# reduction=strict-tto\n".to_string(), serialize_instance(&Instance::Graph(g)))
                }
                "ttc" => {
                    let k = k.ok_or("--k is required for the ttc reduction")?;
                    let f = CnfFormula::parse_dimacs(CnfKind::Impl2, &text).map_err(|e| e.to_string())?;
                    let (g, _, budget) = gen_ttc(&f, k).map_err(|e| e.to_string())?;
                    (
                        format!("# reduction=ttc k={} budget={}\n", k, budget),
                        serialize_instance(&Instance::Graph(g)),
                    )
                }
                "mto" => {
                    let f = CnfFormula::parse_dimacs(CnfKind::MonoNae3, &text).map_err(|e| e.to_string())?;
                    let g = gen_mto(&f).map_err(|e| e.to_string())?;
                    ("# reduction=mto\n".to_string(), serialize_instance(&Instance::Multi(g)))
                }
                other => return Err(format!("unknown reduction {:?}", other)),
            };
            let content = format!("{}{}", header, body);
            match out {
                Some(path) => {
                    fs::write(&path, content).map_err(|e| format!("{}: {}", path.display(), e))?;
                    eprintln!("wrote {}", path.display());
                }
                None => print!("{}", content),
            }
            Ok(0)
        }
        Command::Oracle(oc) => run_oracle(oc),
    }
}

fn run_oracle(cmd: OracleCommand) -> Result<u8, String> {
    let budget = OracleBudget::from_env();
    match cmd {
        OracleCommand::Recognize { variant, print_orientation, jobs, instance } => {
            let g = plain_graph(read_instance(&instance.file)?, "oracle recognize")?;
            if print_orientation || jobs <= 1 {
                match oracle_recognize_witness(&g, variant, &budget).map_err(|e| e.to_string())? {
                    Some(f) => {
                        println!("YES");
                        if print_orientation {
                            print!("{}", serialize_orientation(&g, &f));
                        }
                        Ok(0)
                    }
                    None => Ok(print_no("exhausted", "no proper orientation passes the check")),
                }
            } else {
                match oracle_recognize_par(&g, variant, &budget, jobs).map_err(|e| e.to_string())? {
                    true => {
                        println!("YES");
                        Ok(0)
                    }
                    false => Ok(print_no("exhausted", "no proper orientation passes the check")),
                }
            }
        }
        OracleCommand::Complete { variant, budget: k, instance } => {
            let (g, partial) = match read_instance(&instance.file)? {
                Instance::Graph(g) => {
                    let m = g.m();
                    (g, Orientation::empty(m))
                }
                Instance::Oriented(g, f) => (g, f),
                Instance::Multi(..) => return Err("oracle complete expects a single-label instance".into()),
            };
            match oracle_complete(&g, &partial, k, variant, &budget).map_err(|e| e.to_string())? {
                Some(size) => {
                    println!("YES");
                    println!("# minimum additions: {}", size);
                    Ok(0)
                }
                None => Ok(print_no("exhausted", "no completion within budget")),
            }
        }
        OracleCommand::Multilayer { print_orientation, instance } => {
            let g = match read_instance(&instance.file)? {
                Instance::Multi(g) => g,
                Instance::Graph(sg) => to_multi(&sg),
                Instance::Oriented(..) => return Err("oracle multilayer expects an unoriented instance".into()),
            };
            match oracle_multilayer_witness(&g, &budget).map_err(|e| e.to_string())? {
                Some(f) => {
                    println!("YES");
                    if print_orientation {
                        print!("{}", serialize_multi_orientation(&g, &f));
                    }
                    Ok(0)
                }
                None => Ok(print_no("exhausted", "no orientation makes every layer transitive")),
            }
        }
    }
}

fn to_multi(g: &TemporalGraph) -> temporient::graph::MultiLabelTemporalGraph {
    let mut b = temporient::graph::GraphBuilder::new();
    for v in g.vertices() {
        b.add_vertex(g.name(v)).unwrap();
    }
    for e in g.edges() {
        b.add_multi_edge(e.u, e.v, vec![e.label]).unwrap();
    }
    b.build_multi()
}

fn serialize_multi_orientation(g: &temporient::graph::MultiLabelTemporalGraph, f: &Orientation) -> String {
    let mut lines: Vec<String> = Vec::new();
    for e in 0..g.m() {
        if let Some(d) = f.get(e) {
            let (from, to) = g.edge(e).ends(d);
            for t in &g.edge(e).labels {
                lines.push(format!("-> {} {} {}", g.name(from), g.name(to), t));
            }
        }
    }
    lines.sort();
    lines.join("\n") + if lines.is_empty() { "" } else { "\n" }
}

fn parse_multi_orientation(
    g: &temporient::graph::MultiLabelTemporalGraph,
    text: &str,
) -> Result<Orientation, String> {
    let mut f = Orientation::empty(g.m());
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let toks: Vec<&str> = trimmed.split_whitespace().collect();
        if toks.len() != 4 || toks[0] != "->" {
            return Err(format!("line {}: expected `-> U V LABEL`", line));
        }
        let from = g.vertex(toks[1]).ok_or(format!("line {}: unknown vertex {}", line, toks[1]))?;
        let to = g.vertex(toks[2]).ok_or(format!("line {}: unknown vertex {}", line, toks[2]))?;
        let e = g
            .edge_between(from, to)
            .ok_or(format!("line {}: no edge {} -- {}", line, toks[1], toks[2]))?;
        let dir = if g.edge(e).u == from {
            temporient::graph::Dir::Fwd
        } else {
            temporient::graph::Dir::Rev
        };
        match f.get(e) {
            None => f.set(e, dir),
            Some(d) if d == dir => {}
            Some(_) => return Err(format!("line {}: conflicting orientation for {} -- {}", line, toks[1], toks[2])),
        }
    }
    Ok(f)
}
