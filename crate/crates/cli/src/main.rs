//! `vnum` — command-line interface to the v-number engine.
//!
//! Input documents are either the ideal DSL or JSON graph documents; graph
//! inputs are accepted by ideal commands through their (weighted oriented)
//! edge ideal. Exit codes: 0 success, 2 parse error, 3 resource limit,
//! 4 precondition violation.

mod input;
mod report;

use std::fmt;
use std::io::Read;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use input::{ideal_to_dsl, parse_edge_multiset, parse_input, InputDocument, ParseError};
use report::{Report, Table};
use vnum_core as core;
use vnum_core::{
    Graph, Limits, MonomialIdeal, PrimeIdeal, Ring, VReport, VWitness, WeightedOrientedGraph,
};

#[derive(Parser)]
#[command(name = "vnum", version, about = "v-numbers of powers of monomial ideals")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Seed echoed into reports; reserved for corpus-generation workflows.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Cap on the number of minimal generators of any constructed ideal.
    #[arg(long = "limit-generators", global = true, default_value_t = 50_000)]
    limit_generators: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
    Md,
}

#[derive(Subcommand)]
enum Command {
    /// Profile an ideal (alpha, equigeneration, square-freeness) or a graph.
    Profile { input: PathBuf },
    /// Associated primes with minimal/embedded flags.
    Ass { input: PathBuf },
    /// The v-number with its canonical witness.
    Vnum { input: PathBuf },
    /// Local v-number at a fixed prime, e.g. --prime x2,x5.
    Vlocal {
        input: PathBuf,
        #[arg(long)]
        prime: String,
    },
    /// The v-function v(I^k) for k = 1..K.
    Vfun {
        input: PathBuf,
        #[arg(long = "max-k")]
        max_k: u32,
        /// Also compute local v-numbers per associated prime.
        #[arg(long)]
        locals: bool,
    },
    /// Stability estimate from the observed v-function window.
    Stab {
        input: PathBuf,
        #[arg(long = "max-k")]
        max_k: u32,
    },
    /// Linear-powers conjecture check: v(I^k) = alpha(I)k - c(I).
    Conjecture {
        input: PathBuf,
        #[arg(long = "max-k")]
        max_k: u32,
    },
    /// Brute-force v-number over all divisors of the generator lcm.
    OracleVnum { input: PathBuf },
    /// Irredundant irreducible decomposition.
    Decompose { input: PathBuf },
    /// k-th symbolic power of a square-free ideal.
    Symbolic {
        input: PathBuf,
        #[arg(long)]
        k: u32,
    },
    /// Normally-torsion-free window check: Ass(I^k) against Ass(I).
    Ntf {
        input: PathBuf,
        #[arg(long = "max-k")]
        max_k: u32,
    },
    /// Strong persistence window check: (I^{k+1} : I) = I^k.
    Persistence {
        input: PathBuf,
        #[arg(long = "max-k")]
        max_k: u32,
    },
    /// Square-free polarization in the extended ring.
    Polarize { input: PathBuf },
    /// Linear-quotients ordering search.
    LinearQuotients { input: PathBuf },
    /// Vertex-splittable witness tree search.
    VertexSplittable { input: PathBuf },
    /// Graph-specific constructions and bounds.
    Graph {
        #[command(subcommand)]
        command: GraphCommand,
    },
}

#[derive(Subcommand)]
enum GraphCommand {
    /// Edge ideal I(G).
    EdgeIdeal { input: PathBuf },
    /// Cover ideal J(G), generated by the minimal vertex covers.
    CoverIdeal { input: PathBuf },
    /// t-path ideal I_t(G).
    PathIdeal {
        input: PathBuf,
        #[arg(long)]
        t: usize,
    },
    /// Edge ideal of a weighted oriented graph.
    WogIdeal { input: PathBuf },
    /// (I(G)^{s+1} : e_1...e_s) via even-connection, e.g. --edges x1-x2,x2-x3.
    ColonPower {
        input: PathBuf,
        #[arg(long)]
        edges: String,
    },
    /// Theorem-backed upper bound for the stability index.
    StabBound { input: PathBuf },
}

enum CliError {
    Io(String),
    Parse(ParseError),
    Core(core::Error),
    Precondition(String),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Io(_) => 1,
            CliError::Parse(_) => 2,
            CliError::Core(e) if e.is_resource_limit() => 3,
            CliError::Core(_) | CliError::Precondition(_) => 4,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Io(m) => write!(f, "{m}"),
            CliError::Parse(e) => write!(f, "{e}"),
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Precondition(m) => write!(f, "{m}"),
        }
    }
}

impl From<core::Error> for CliError {
    fn from(e: core::Error) -> Self {
        CliError::Core(e)
    }
}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        CliError::Parse(e)
    }
}

fn main() {
    let cli = Cli::parse();
    let engine = format!("vnum {}", env!("CARGO_PKG_VERSION"));
    let command = std::env::args().skip(1).collect::<Vec<_>>().join(" ");
    match run(&cli) {
        Ok((report, code)) => {
            let text = match cli.format {
                Format::Json => report.to_json(&engine, &command),
                Format::Csv => report.to_csv(),
                Format::Md => report.to_md(&engine, &command),
            };
            print!("{text}");
            std::process::exit(code);
        }
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(e.exit_code());
        }
    }
}

fn read_document(path: &PathBuf) -> Result<InputDocument, CliError> {
    let text = if path.as_os_str() == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| CliError::Io(format!("cannot read stdin: {e}")))?;
        buf
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| CliError::Io(format!("cannot read {}: {e}", path.display())))?
    };
    Ok(parse_input(&text)?)
}

/// Ideal view of any document: graphs contribute their edge ideal, weighted
/// oriented graphs their weighted edge ideal.
fn as_ideal(doc: &InputDocument) -> Result<MonomialIdeal, CliError> {
    match doc {
        InputDocument::Ideal(ideal) => Ok(ideal.clone()),
        InputDocument::Graph(g) => Ok(core::edge_ideal(g)?),
        InputDocument::Weighted(d) => Ok(core::weighted_oriented_edge_ideal(d)?),
    }
}

fn require_graph(doc: &InputDocument) -> Result<&Graph, CliError> {
    match doc {
        InputDocument::Graph(g) => Ok(g),
        InputDocument::Weighted(d) => Ok(d.underlying()),
        InputDocument::Ideal(_) => Err(CliError::Precondition(
            "this command requires a graph document".into(),
        )),
    }
}

fn require_weighted(doc: &InputDocument) -> Result<&WeightedOrientedGraph, CliError> {
    match doc {
        InputDocument::Weighted(d) => Ok(d),
        _ => Err(CliError::Precondition(
            "this command requires a directed graph document".into(),
        )),
    }
}

fn require_k(k: u32) -> Result<(), CliError> {
    if k < 1 {
        return Err(CliError::Precondition(
            "power exponent must be at least 1".into(),
        ));
    }
    Ok(())
}

fn prime_names(p: &PrimeIdeal) -> Vec<String> {
    p.vars()
        .iter()
        .map(|&v| p.ring().name(v).to_string())
        .collect()
}

fn prime_string(p: &PrimeIdeal) -> String {
    prime_names(p).join(",")
}

fn witness_json(ring: &Ring, w: &VWitness) -> Value {
    json!({
        "degree": w.degree,
        "monomial": ring.display(&w.monomial),
        "prime": prime_names(&w.prime),
    })
}

fn ideal_report(kind: &str, ideal: &MonomialIdeal, extra: Value) -> Report {
    let ring = ideal.ring();
    let generators: Vec<String> = ideal.gens().iter().map(|g| ring.display(g)).collect();
    let dsl = ideal_to_dsl(ideal);
    let mut payload = json!({
        "kind": kind,
        "ring": ring.names(),
        "generators": generators,
        "num_generators": ideal.num_generators(),
        "alpha": ideal.alpha(),
        "dsl": dsl,
    });
    if let (Value::Object(map), Value::Object(extra)) = (&mut payload, extra) {
        for (k, v) in extra {
            map.insert(k, v);
        }
    }
    let table = Table {
        title: "generators".into(),
        header: vec!["generator".into()],
        rows: ideal
            .gens()
            .iter()
            .map(|g| vec![ring.display(g)])
            .collect(),
    };
    Report::new(payload).scalar("dsl", dsl).table(table)
}

fn vfun_report(ideal: &MonomialIdeal, vreport: &VReport, extra: Value) -> (Report, i32) {
    let ring = ideal.ring();
    let mut rows_json = Vec::new();
    let mut rows = Vec::new();
    let mut local_rows = Vec::new();
    for row in &vreport.rows {
        let b = row.v() as i64 - row.alpha_k as i64;
        let mut entry = json!({
            "k": row.k,
            "alpha_k": row.alpha_k,
            "v": row.v(),
            "b": b,
            "witness": ring.display(&row.witness.monomial),
            "prime": prime_names(&row.witness.prime),
        });
        rows.push(vec![
            row.k.to_string(),
            row.alpha_k.to_string(),
            row.v().to_string(),
            b.to_string(),
            ring.display(&row.witness.monomial),
            prime_string(&row.witness.prime),
        ]);
        if let Some(locals) = &row.locals {
            entry["locals"] = Value::Array(
                locals
                    .iter()
                    .map(|w| {
                        local_rows.push(vec![
                            row.k.to_string(),
                            prime_string(&w.prime),
                            w.degree.to_string(),
                            ring.display(&w.monomial),
                        ]);
                        witness_json(ring, w)
                    })
                    .collect(),
            );
        }
        rows_json.push(entry);
    }
    let truncated = vreport.truncated.as_ref().map(|e| e.to_string());
    let mut payload = json!({
        "rows": rows_json,
        "truncated": truncated,
    });
    if let (Value::Object(map), Value::Object(extra)) = (&mut payload, extra) {
        for (k, v) in extra {
            map.insert(k, v);
        }
    }
    let mut report = Report::new(payload).table(Table {
        title: "v-function".into(),
        header: ["k", "alpha_k", "v", "b", "witness", "prime"]
            .map(String::from)
            .to_vec(),
        rows,
    });
    if !local_rows.is_empty() {
        report = report.table(Table {
            title: "local v-numbers".into(),
            header: ["k", "prime", "v_p", "witness"].map(String::from).to_vec(),
            rows: local_rows,
        });
    }
    let code = if let Some(msg) = &truncated {
        report = report.scalar("truncated", msg);
        3
    } else {
        0
    };
    (report, code)
}

fn run(cli: &Cli) -> Result<(Report, i32), CliError> {
    let limits = Limits::with_max_generators(cli.limit_generators);
    let report = match &cli.command {
        Command::Profile { input } => match read_document(input)? {
            InputDocument::Ideal(ideal) => {
                let p = ideal.profile();
                let ring = ideal.ring();
                Report::new(json!({
                    "kind": "ideal-profile",
                    "ring": ring.names(),
                    "alpha": p.alpha,
                    "equigenerated": p.equigenerated,
                    "squarefree": p.squarefree,
                    "lcm": ring.display(&p.lcm_of_generators),
                    "num_generators": p.num_generators,
                }))
                .scalar("alpha", fmt_opt(p.alpha))
                .scalar("equigenerated", p.equigenerated)
                .scalar("squarefree", p.squarefree)
                .scalar("lcm", ring.display(&p.lcm_of_generators))
                .scalar("num_generators", p.num_generators)
            }
            doc @ (InputDocument::Graph(_) | InputDocument::Weighted(_)) => {
                let g = require_graph(&doc)?;
                let p = core::graph_profile(g);
                let names = |side: &[usize]| -> Vec<String> {
                    side.iter().map(|&v| g.ring().name(v).to_string()).collect()
                };
                Report::new(json!({
                    "kind": "graph-profile",
                    "vertices": g.ring().names(),
                    "edge_count": p.edge_count,
                    "connected": p.connected,
                    "bipartition": p.bipartition.as_ref().map(|(x, y)| json!({
                        "x": names(x),
                        "y": names(y),
                    })),
                    "degrees": p.degrees,
                    "cycle_shape": p.cycle_shape.tag(),
                }))
                .scalar("edge_count", p.edge_count)
                .scalar("connected", p.connected)
                .scalar("bipartite", p.bipartition.is_some())
                .scalar("cycle_shape", p.cycle_shape.tag())
            }
        },
        Command::Ass { input } => {
            let ideal = as_ideal(&read_document(input)?)?;
            let ass = core::associated_primes(&ideal, &limits)?;
            let primes_json: Vec<Value> = ass
                .primes
                .iter()
                .zip(&ass.minimal)
                .map(|(p, &m)| json!({"prime": prime_names(p), "minimal": m}))
                .collect();
            let rows = ass
                .primes
                .iter()
                .zip(&ass.minimal)
                .map(|(p, &m)| vec![prime_string(p), m.to_string()])
                .collect();
            Report::new(json!({
                "kind": "associated-primes",
                "count": ass.primes.len(),
                "primes": primes_json,
            }))
            .scalar("count", ass.primes.len())
            .table(Table {
                title: "associated primes".into(),
                header: ["prime", "minimal"].map(String::from).to_vec(),
                rows,
            })
        }
        Command::Vnum { input } => {
            let ideal = as_ideal(&read_document(input)?)?;
            let w = core::v_number(&ideal, &limits)?;
            let alpha = ideal.alpha().expect("nonzero ideal");
            let c = core::c_invariant(&ideal, &limits)?;
            let ring = ideal.ring();
            Report::new(json!({
                "kind": "v-number",
                "alpha": alpha,
                "c": c,
                "lower_bound": alpha as i64 - c as i64,
                "v": w.degree,
                "witness": ring.display(&w.monomial),
                "prime": prime_names(&w.prime),
            }))
            .scalar("alpha", alpha)
            .scalar("c", c)
            .scalar("lower_bound", alpha as i64 - c as i64)
            .scalar("v", w.degree)
            .scalar("witness", ring.display(&w.monomial))
            .scalar("prime", prime_string(&w.prime))
        }
        Command::Vlocal { input, prime } => {
            let ideal = as_ideal(&read_document(input)?)?;
            let ring = ideal.ring().clone();
            let vars = prime
                .split(',')
                .map(|name| {
                    ring.index_of(name.trim()).ok_or_else(|| {
                        CliError::Precondition(format!(
                            "unknown variable {} in --prime",
                            name.trim()
                        ))
                    })
                })
                .collect::<Result<Vec<usize>, CliError>>()?;
            let p = PrimeIdeal::new(ring.clone(), vars).map_err(CliError::Core)?;
            let w = core::local_v_number(&ideal, &p, &limits)?;
            let mut report = Report::new(json!({
                "kind": "local-v-number",
                "prime": prime_names(&p),
                "associated": w.is_some(),
                "v": w.as_ref().map(|w| w.degree),
                "witness": w.as_ref().map(|w| ring.display(&w.monomial)),
            }))
            .scalar("prime", prime_string(&p))
            .scalar("associated", w.is_some());
            if let Some(w) = &w {
                report = report
                    .scalar("v", w.degree)
                    .scalar("witness", ring.display(&w.monomial));
            }
            report
        }
        Command::Vfun {
            input,
            max_k,
            locals,
        } => {
            require_k(*max_k)?;
            let ideal = as_ideal(&read_document(input)?)?;
            let vreport = core::v_function(&ideal, *max_k, *locals, &limits)?;
            let (report, code) = vfun_report(
                &ideal,
                &vreport,
                json!({
                    "kind": "v-function",
                    "alpha": ideal.alpha(),
                    "max_k": max_k,
                }),
            );
            return Ok((report, code));
        }
        Command::Stab { input, max_k } => {
            require_k(*max_k)?;
            let doc = read_document(input)?;
            let ideal = as_ideal(&doc)?;
            let alpha = ideal.alpha().ok_or(core::Error::ZeroIdeal)?;
            let vreport = core::v_function(&ideal, *max_k, false, &limits)?;
            let mut estimate = core::stability_estimate(&vreport, alpha);
            let bound = match &doc {
                InputDocument::Graph(g) if g.edge_count() > 0 && g.is_connected() => {
                    Some(core::v_stab_upper_bound(g)?)
                }
                _ => None,
            };
            if let Some(b) = bound.as_ref() {
                let observed = vreport.rows.last().map(|r| r.k).unwrap_or(0);
                estimate = estimate.map(|est| est.certify_with(b, observed));
            }
            let estimate_json = estimate.as_ref().map(|e| {
                json!({
                    "slope": e.slope,
                    "intercept": e.intercept,
                    "index": e.index,
                    "certified": e.certified,
                    "source": e.source.tag(),
                })
            });
            let bound_json = bound
                .as_ref()
                .map(|b| json!({"bound": b.bound, "source": b.source.tag()}));
            let (mut report, code) = vfun_report(
                &ideal,
                &vreport,
                json!({
                    "kind": "stability",
                    "alpha": alpha,
                    "max_k": max_k,
                    "estimate": estimate_json,
                    "bound": bound_json,
                }),
            );
            if let Some(e) = &estimate {
                report = report
                    .scalar("slope", e.slope)
                    .scalar("intercept", e.intercept)
                    .scalar("index", e.index)
                    .scalar("certified", e.certified)
                    .scalar("source", e.source.tag());
            } else {
                report = report.scalar("estimate", "absent");
            }
            if let Some(b) = &bound {
                report = report
                    .scalar("bound", b.bound)
                    .scalar("bound_source", b.source.tag());
            }
            return Ok((report, code));
        }
        Command::Conjecture { input, max_k } => {
            require_k(*max_k)?;
            let ideal = as_ideal(&read_document(input)?)?;
            let cr = core::check_conjecture(&ideal, *max_k, &limits)?;
            let rows_json: Vec<Value> = cr
                .rows
                .iter()
                .map(|r| {
                    json!({
                        "k": r.k,
                        "linear_quotients": r.linear_quotients.tag(),
                        "v": r.v,
                        "expected": r.expected,
                        "matches": r.matches,
                    })
                })
                .collect();
            let rows = cr
                .rows
                .iter()
                .map(|r| {
                    vec![
                        r.k.to_string(),
                        r.linear_quotients.tag().to_string(),
                        r.v.to_string(),
                        r.expected.to_string(),
                        r.matches.to_string(),
                    ]
                })
                .collect();
            Report::new(json!({
                "kind": "conjecture",
                "alpha": cr.alpha,
                "c": cr.c,
                "verdict": cr.verdict.tag(),
                "first_hypothesis_failure": cr.first_hypothesis_failure,
                "rows": rows_json,
            }))
            .scalar("alpha", cr.alpha)
            .scalar("c", cr.c)
            .scalar("verdict", cr.verdict.tag())
            .table(Table {
                title: "per-power checks".into(),
                header: ["k", "linear_quotients", "v", "expected", "matches"]
                    .map(String::from)
                    .to_vec(),
                rows,
            })
        }
        Command::OracleVnum { input } => {
            let ideal = as_ideal(&read_document(input)?)?;
            let w = core::v_oracle(&ideal)?;
            let ring = ideal.ring();
            Report::new(json!({
                "kind": "oracle-v-number",
                "v": w.degree,
                "witness": ring.display(&w.monomial),
                "prime": prime_names(&w.prime),
            }))
            .scalar("v", w.degree)
            .scalar("witness", ring.display(&w.monomial))
            .scalar("prime", prime_string(&w.prime))
        }
        Command::Decompose { input } => {
            let ideal = as_ideal(&read_document(input)?)?;
            let comps = core::irreducible_decomposition(&ideal, &limits)?;
            let ring = ideal.ring();
            let comp_strings: Vec<Vec<String>> = comps
                .iter()
                .map(|c| {
                    c.to_ideal(ring)
                        .gens()
                        .iter()
                        .map(|g| ring.display(g))
                        .collect()
                })
                .collect();
            let rows = comp_strings
                .iter()
                .enumerate()
                .map(|(i, gens)| vec![i.to_string(), gens.join(", ")])
                .collect();
            Report::new(json!({
                "kind": "irreducible-decomposition",
                "count": comps.len(),
                "components": comp_strings,
            }))
            .scalar("count", comps.len())
            .table(Table {
                title: "irreducible components".into(),
                header: ["index", "generators"].map(String::from).to_vec(),
                rows,
            })
        }
        Command::Symbolic { input, k } => {
            require_k(*k)?;
            let ideal = as_ideal(&read_document(input)?)?;
            let symb = core::symbolic_power_squarefree(&ideal, *k, &limits)?;
            ideal_report("symbolic-power", &symb, json!({"k": k}))
        }
        Command::Ntf { input, max_k } => {
            require_k(*max_k)?;
            let ideal = as_ideal(&read_document(input)?)?;
            let rows = core::is_ntf_upto(&ideal, *max_k, &limits)?;
            let rows_json: Vec<Value> = rows
                .iter()
                .map(|r| {
                    json!({
                        "k": r.k,
                        "ass_contained": r.ass_contained,
                        "symbolic_matches": r.symbolic_matches,
                    })
                })
                .collect();
            let table_rows = rows
                .iter()
                .map(|r| {
                    vec![
                        r.k.to_string(),
                        r.ass_contained.to_string(),
                        fmt_opt(r.symbolic_matches),
                    ]
                })
                .collect();
            Report::new(json!({
                "kind": "normally-torsion-free",
                "rows": rows_json,
            }))
            .table(Table {
                title: "torsion-freeness window".into(),
                header: ["k", "ass_contained", "symbolic_matches"]
                    .map(String::from)
                    .to_vec(),
                rows: table_rows,
            })
        }
        Command::Persistence { input, max_k } => {
            require_k(*max_k)?;
            let ideal = as_ideal(&read_document(input)?)?;
            let rows = core::has_strong_persistence_upto(&ideal, *max_k, &limits)?;
            let rows_json: Vec<Value> = rows
                .iter()
                .map(|r| json!({"k": r.k, "holds": r.holds}))
                .collect();
            let table_rows = rows
                .iter()
                .map(|r| vec![r.k.to_string(), r.holds.to_string()])
                .collect();
            Report::new(json!({
                "kind": "strong-persistence",
                "rows": rows_json,
            }))
            .table(Table {
                title: "persistence window".into(),
                header: ["k", "holds"].map(String::from).to_vec(),
                rows: table_rows,
            })
        }
        Command::Polarize { input } => {
            let ideal = as_ideal(&read_document(input)?)?;
            let (pol, map) = core::polarize(&ideal)?;
            ideal_report(
                "polarization",
                &pol,
                json!({
                    "source_ring": map.source.names(),
                }),
            )
        }
        Command::LinearQuotients { input } => {
            let ideal = as_ideal(&read_document(input)?)?;
            let ring = ideal.ring();
            let result = core::has_linear_quotients(&ideal)?;
            let (status, ordering) = match &result {
                core::LinearQuotients::Found(order) => (
                    "found",
                    Some(
                        order
                            .iter()
                            .map(|m| ring.display(m))
                            .collect::<Vec<String>>(),
                    ),
                ),
                core::LinearQuotients::Absent => ("absent", None),
                core::LinearQuotients::Unknown => ("unknown", None),
            };
            let mut report = Report::new(json!({
                "kind": "linear-quotients",
                "status": status,
                "ordering": ordering,
            }))
            .scalar("status", status);
            if let Some(order) = &ordering {
                report = report.scalar("ordering", order.join(", "));
            }
            report
        }
        Command::VertexSplittable { input } => {
            let ideal = as_ideal(&read_document(input)?)?;
            let ring = ideal.ring().clone();
            let tree = core::is_vertex_splittable(&ideal, &limits)?;
            let formula = tree.as_ref().map(|t| split_formula(t, &ring));
            Report::new(json!({
                "kind": "vertex-splittable",
                "splittable": tree.is_some(),
                "tree": tree.as_ref().map(|t| split_json(t, &ring)),
            }))
            .scalar("splittable", tree.is_some())
            .scalar("tree", formula.unwrap_or_else(|| "-".into()))
        }
        Command::Graph { command } => match command {
            GraphCommand::EdgeIdeal { input } => {
                let doc = read_document(input)?;
                let g = require_graph(&doc)?;
                let ideal = core::edge_ideal(g)?;
                ideal_report("edge-ideal", &ideal, json!({}))
            }
            GraphCommand::CoverIdeal { input } => {
                let doc = read_document(input)?;
                let g = require_graph(&doc)?;
                let ideal = core::cover_ideal(g)?;
                ideal_report("cover-ideal", &ideal, json!({}))
            }
            GraphCommand::PathIdeal { input, t } => {
                let doc = read_document(input)?;
                let g = require_graph(&doc)?;
                let ideal = core::path_ideal(g, *t)?;
                ideal_report("path-ideal", &ideal, json!({"t": t}))
            }
            GraphCommand::WogIdeal { input } => {
                let doc = read_document(input)?;
                let d = require_weighted(&doc)?;
                let ideal = core::weighted_oriented_edge_ideal(d)?;
                ideal_report("weighted-oriented-edge-ideal", &ideal, json!({}))
            }
            GraphCommand::ColonPower { input, edges } => {
                let doc = read_document(input)?;
                let g = require_graph(&doc)?;
                let multiset = parse_edge_multiset(g, edges)?;
                let pairs = core::even_connected_pairs(g, &multiset)?;
                let colon = core::edge_power_colon(g, &multiset)?;
                let pair_names: Vec<Vec<String>> = pairs
                    .iter()
                    .map(|&(u, v)| {
                        vec![g.ring().name(u).to_string(), g.ring().name(v).to_string()]
                    })
                    .collect();
                ideal_report(
                    "edge-power-colon",
                    &colon,
                    json!({
                        "s": multiset.len(),
                        "even_connected_pairs": pair_names,
                    }),
                )
            }
            GraphCommand::StabBound { input } => {
                let doc = read_document(input)?;
                let g = require_graph(&doc)?;
                let b = core::v_stab_upper_bound(g)?;
                Report::new(json!({
                    "kind": "stability-bound",
                    "bound": b.bound,
                    "source": b.source.tag(),
                    "slope": b.slope,
                    "intercept": b.intercept,
                }))
                .scalar("bound", b.bound)
                .scalar("source", b.source.tag())
                .scalar("slope", b.slope)
                .scalar("intercept", b.intercept)
            }
        },
    };
    Ok((report, 0))
}

fn fmt_opt<T: ToString>(v: Option<T>) -> String {
    v.map(|x| x.to_string()).unwrap_or_else(|| "-".into())
}

fn split_json(tree: &core::SplitTree, ring: &Ring) -> Value {
    match tree {
        core::SplitTree::Leaf(core::SplitLeaf::Zero) => json!({"leaf": "zero"}),
        core::SplitTree::Leaf(core::SplitLeaf::Unit) => json!({"leaf": "unit"}),
        core::SplitTree::Leaf(core::SplitLeaf::Principal(m)) => {
            json!({"leaf": "principal", "monomial": ring.display(m)})
        }
        core::SplitTree::Node { var, left, right } => json!({
            "var": ring.name(*var),
            "left": split_json(left, ring),
            "right": split_json(right, ring),
        }),
    }
}

fn split_formula(tree: &core::SplitTree, ring: &Ring) -> String {
    match tree {
        core::SplitTree::Leaf(core::SplitLeaf::Zero) => "0".into(),
        core::SplitTree::Leaf(core::SplitLeaf::Unit) => "1".into(),
        core::SplitTree::Leaf(core::SplitLeaf::Principal(m)) => ring.display(m),
        core::SplitTree::Node { var, left, right } => format!(
            "{}*[{}] + [{}]",
            ring.name(*var),
            split_formula(left, ring),
            split_formula(right, ring)
        ),
    }
}
