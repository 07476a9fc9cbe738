//! `tropwick`: batch verification of valuated Δ-matroids from text files.
//!
//! Exit status: 0 when the predicate holds (or the computation succeeded),
//! 1 when it fails, 2 on malformed input or a scale guard.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use tropwick::delta_matroid::{
    enumerate_cumulative, enumerate_even_delta_matroids, is_delta_matroid, is_even_delta_matroid, squeeze,
};
use tropwick::format::{
    parse_bases, parse_delta_matroid, parse_matrix, parse_plucker, parse_signed_vector, parse_vectors, parse_wick,
    write_bases, write_cells, write_delta_matroid, write_plucker, write_wick,
};
use tropwick::linear_spaces::{
    is_isotropical, is_tropical_plucker, sample_admissible, sample_linear_space, three_term_relations_hold,
};
use tropwick::realization::{plucker_valuation_from_rowspace, wick_valuation_from_rowspace};
use tropwick::sets::{parse_signed_set, parse_subset};
use tropwick::subdivision::{is_even_dm_subdivision, maximal_cells};
use tropwick::trop::hull_witness;
use tropwick::wick::{all_circuits, all_cocircuits, check_wick_full, check_wick_local, cocycle_decompose, is_cocycle};
use tropwick::{Error, GroundSet, TropicalValue, WickCircuit};

#[derive(Parser)]
#[command(name = "tropwick", version, about = "Exact checks for tropical Wick vectors and even Δ-matroids")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the tropical Wick relations.
    CheckWick {
        file: PathBuf,
        /// Only the four-term relations with |S Δ T| = 4.
        #[arg(long, conflicts_with = "full")]
        local: bool,
        /// Every pair (S, T) (the default).
        #[arg(long)]
        full: bool,
    },
    /// Check that a Plücker file is a tropical Plücker vector.
    CheckPlucker { file: PathBuf },
    /// List the circuits of a Wick vector.
    Circuits { file: PathBuf },
    /// List the cocircuits of a Wick vector.
    Cocircuits { file: PathBuf },
    /// Test whether a vector in T^J is a cocycle.
    CocycleTest { wick: PathBuf, vector: PathBuf },
    /// Write a cocycle as a tropical combination of cocircuits.
    Decompose { wick: PathBuf, vector: PathBuf },
    /// Regular subdivision of the support polytope.
    Subdivision {
        file: PathBuf,
        /// Print the maximal cells.
        #[arg(long, conflicts_with = "verify")]
        cells: bool,
        /// Check that every maximal cell is an even Δ-matroid polytope.
        #[arg(long)]
        verify: bool,
    },
    /// Operations on set systems given by their bases.
    Dm(DmArgs),
    /// Valuations of the coordinates of a row space.
    Realize {
        file: PathBuf,
        /// Wick valuation of an isotropic n × 2n matrix.
        #[arg(long, conflicts_with = "plucker")]
        wick: bool,
        /// Plücker valuation (on J when the matrix is n × 2n).
        #[arg(long)]
        plucker: bool,
    },
    /// Decide whether a Plücker vector on J is isotropical.
    Isotropical { file: PathBuf },
    /// Tropical convex hull membership of a vector.
    HullTest { vector: PathBuf, generators: PathBuf },
    /// Random points of the tropical linear space of a Plücker vector.
    Sample {
        file: PathBuf,
        #[arg(long, default_value_t = 10)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Only admissible members (ground set J).
        #[arg(long)]
        admissible: bool,
    },
}

#[derive(Args)]
#[command(group(clap::ArgGroup::new("op").required(true).args(["check", "dual", "minor", "rank", "circuits", "enumerate"])))]
struct DmArgs {
    /// Bases file (not used by --enumerate).
    file: Option<PathBuf>,
    #[arg(long)]
    check: bool,
    #[arg(long)]
    dual: bool,
    /// Minor M / C \ D, with --contract and --delete.
    #[arg(long)]
    minor: bool,
    #[arg(long, value_name = "SUBSET", default_value = "{}")]
    contract: String,
    #[arg(long, value_name = "SUBSET", default_value = "{}")]
    delete: String,
    /// Rank of the admissible set given by --set.
    #[arg(long)]
    rank: bool,
    #[arg(long, value_name = "SIGNED-SUBSET")]
    set: Option<String>,
    #[arg(long)]
    circuits: bool,
    /// Count even Δ-matroids on [n].
    #[arg(long)]
    enumerate: bool,
    #[arg(short = 'n')]
    n: Option<usize>,
    /// Count up to the hyperoctahedral group action.
    #[arg(long)]
    iso: bool,
    /// Count loop- and coloop-free classes over all ground sets of size at most n.
    #[arg(long)]
    cumulative: bool,
    /// Print the matroids as well as the count.
    #[arg(long)]
    list: bool,
}

struct Report {
    holds: bool,
    text: String,
    json: Value,
}

impl Report {
    fn predicate(holds: bool, json: Value) -> Self {
        Report { holds, text: format!("{holds}\n"), json }
    }

    fn output(text: String, json: Value) -> Self {
        Report { holds: true, text, json }
    }
}

type Outcome = Result<Report, String>;

fn read(path: &Path) -> Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn load<T>(path: &Path, parse: impl Fn(&str) -> Result<T, Error>) -> Result<T, String> {
    parse(&read(path)?).map_err(|e| format!("{}: {e}", path.display()))
}

fn lib(e: Error) -> String {
    e.to_string()
}

fn circuit_json(c: &WickCircuit) -> Value {
    json!({
        "support": c.support().literal(),
        "vector": c.vector.coords().iter().map(|v| v.to_string()).collect::<Vec<_>>(),
    })
}

fn circuit_report(cs: Vec<WickCircuit>) -> Report {
    let text = cs.iter().map(|c| format!("{c}\n")).collect();
    Report::output(text, json!(cs.iter().map(circuit_json).collect::<Vec<_>>()))
}

fn values_json(vs: &[TropicalValue]) -> Value {
    json!(vs.iter().map(|v| v.to_string()).collect::<Vec<_>>())
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::CheckWick { file, local, .. } => {
            let p = load(&file, parse_wick)?;
            let holds = if local { check_wick_local(&p) } else { check_wick_full(&p) };
            Ok(Report::predicate(holds, json!({ "wick": holds, "mode": if local { "local" } else { "full" } })))
        }
        Command::CheckPlucker { file } => {
            let p = load(&file, parse_plucker)?;
            let three_term = three_term_relations_hold(&p);
            let holds = is_tropical_plucker(&p);
            Ok(Report::predicate(holds, json!({ "plucker": holds, "three_term": three_term })))
        }
        Command::Circuits { file } => Ok(circuit_report(all_circuits(&load(&file, parse_wick)?))),
        Command::Cocircuits { file } => Ok(circuit_report(all_cocircuits(&load(&file, parse_wick)?))),
        Command::CocycleTest { wick, vector } => {
            let p = load(&wick, parse_wick)?;
            let x = load(&vector, |t| parse_signed_vector(t, p.n()))?;
            let holds = is_cocycle(&p, &x).map_err(lib)?;
            Ok(Report::predicate(holds, json!({ "cocycle": holds })))
        }
        Command::Decompose { wick, vector } => {
            let p = load(&wick, parse_wick)?;
            let x = load(&vector, |t| parse_signed_vector(t, p.n()))?;
            match cocycle_decompose(&p, &x) {
                Ok(terms) => {
                    let text = terms.iter().map(|(l, c)| format!("{l} + {c}\n")).collect();
                    let js =
                        terms.iter().map(|(l, c)| json!({ "lambda": l.to_string(), "cocircuit": circuit_json(c) }));
                    Ok(Report::output(text, json!(js.collect::<Vec<_>>())))
                }
                Err(Error::NotACocycle) => {
                    Ok(Report { holds: false, text: "not a cocycle\n".into(), json: json!({ "cocycle": false }) })
                }
                Err(e) => Err(lib(e)),
            }
        }
        Command::Subdivision { file, verify, .. } => {
            let p = load(&file, parse_wick)?;
            if verify {
                let holds = is_even_dm_subdivision(&p).map_err(lib)?;
                return Ok(Report::predicate(holds, json!({ "even_dm_subdivision": holds })));
            }
            let cells = maximal_cells(&p).map_err(lib)?;
            let js: Vec<Value> = cells
                .iter()
                .map(|c| {
                    json!({
                        "vertices": c.vertices.iter().map(|s| s.literal()).collect::<Vec<_>>(),
                        "functional": c.functional.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
                    })
                })
                .collect();
            Ok(Report::output(write_cells(&cells), json!(js)))
        }
        Command::Dm(args) => run_dm(args),
        Command::Realize { file, plucker, .. } => {
            let m = load(&file, parse_matrix)?;
            if plucker {
                let ground =
                    if m.cols() == 2 * m.rows() { GroundSet::Signed(m.rows()) } else { GroundSet::Plain(m.cols()) };
                let q = plucker_valuation_from_rowspace(&m, ground).map_err(lib)?;
                let js = q.support().iter().map(|&s| (ground.literal(s), json!(q.get(s).to_string()))).collect();
                return Ok(Report::output(write_plucker(&q), Value::Object(js)));
            }
            let p = wick_valuation_from_rowspace(&m).map_err(lib)?;
            let js = p.support().iter().map(|&s| (s.literal(), json!(p.get(s).to_string()))).collect();
            Ok(Report::output(write_wick(&p), Value::Object(js)))
        }
        Command::Isotropical { file } => {
            let q = load(&file, parse_plucker)?;
            let holds = is_isotropical(&q).map_err(lib)?;
            Ok(Report::predicate(holds, json!({ "isotropical": holds })))
        }
        Command::HullTest { vector, generators } => {
            let text = read(&vector)?;
            let len = text
                .lines()
                .find(|l| !l.trim().is_empty() && !l.trim().starts_with('#'))
                .map_or(0, |l| l.split_whitespace().count());
            let x = parse_vectors(&text, len).map_err(|e| format!("{}: {e}", vector.display()))?;
            let [x] = x.as_slice() else {
                return Err(format!("{}: expected exactly one vector", vector.display()));
            };
            let gens = load(&generators, |t| parse_vectors(t, len))?;
            match hull_witness(x, &gens).map_err(lib)? {
                Some(l) => Ok(Report {
                    holds: true,
                    text: format!("true\n{}\n", l.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")),
                    json: json!({ "in_hull": true, "coefficients": values_json(&l) }),
                }),
                None => Ok(Report::predicate(false, json!({ "in_hull": false }))),
            }
        }
        Command::Sample { file, count, seed, admissible } => {
            let q = load(&file, parse_plucker)?;
            let pts = if admissible {
                sample_admissible(&q, seed, count).map_err(lib)?
            } else {
                sample_linear_space(&q, seed, count)
            };
            let text =
                pts.iter().map(|v| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ") + "\n").collect();
            Ok(Report::output(text, json!(pts.iter().map(|v| values_json(v)).collect::<Vec<_>>())))
        }
    }
}

fn run_dm(args: DmArgs) -> Outcome {
    if args.enumerate {
        let n = args.n.ok_or("--enumerate needs -n")?;
        let ms = if args.cumulative { enumerate_cumulative(n) } else { enumerate_even_delta_matroids(n, args.iso) }
            .map_err(lib)?;
        let mut text = format!("{}\n", ms.len());
        if args.list {
            for m in &ms {
                text.push_str(&write_delta_matroid(m));
                text.push('\n');
            }
        }
        return Ok(Report::output(text, json!({ "n": n, "iso": args.iso || args.cumulative, "count": ms.len() })));
    }
    let file = args.file.as_deref().ok_or("a bases file is required")?;
    if args.check {
        let (n, bases) = load(file, parse_bases)?;
        let delta = is_delta_matroid(n, &bases);
        let even = is_even_delta_matroid(n, &bases);
        let text = format!("delta-matroid {delta}\neven {even}\n");
        return Ok(Report { holds: even, text, json: json!({ "delta_matroid": delta, "even": even }) });
    }
    let m = load(file, parse_delta_matroid)?;
    let n = m.n();
    if args.dual {
        let d = m.dual();
        let js = json!(d.bases().iter().map(|b| b.literal()).collect::<Vec<_>>());
        return Ok(Report::output(write_delta_matroid(&d), js));
    }
    if args.minor {
        let c = parse_subset(&args.contract, n).map_err(lib)?;
        let d = parse_subset(&args.delete, n).map_err(lib)?;
        if !c.intersection(d).is_empty() {
            return Err("contracted and deleted sets must be disjoint".into());
        }
        let minor = m.contraction(c).and_then(|mc| mc.deletion(squeeze(d, c))).map_err(lib)?;
        let js = json!(minor.bases().iter().map(|b| b.literal()).collect::<Vec<_>>());
        return Ok(Report::output(write_bases(minor.n(), minor.bases()), js));
    }
    if args.rank {
        let lit = args.set.as_deref().ok_or("--rank needs --set")?;
        let a = parse_signed_set(lit, n).map_err(lib)?;
        let r = m.rank(a).map_err(lib)?;
        return Ok(Report::output(format!("{r}\n"), json!({ "set": a.literal(), "rank": r })));
    }
    let cs = m.circuits();
    let mut text = String::new();
    for c in &cs {
        let _ = writeln!(text, "{c}");
    }
    Ok(Report::output(text, json!(cs.iter().map(|c| c.literal()).collect::<Vec<_>>())))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let json = cli.json;
    match run(cli) {
        Ok(report) => {
            if json {
                println!("{}", report.json);
            } else {
                print!("{}", report.text);
            }
            ExitCode::from(if report.holds { 0 } else { 1 })
        }
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
