use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use exseq::config::{
    duality_frame, garside_configuration, mutate_tilde_c, mutated_cluster, mutation_graph, order_cluster, Direction,
};
use exseq::counting::{
    coefficients_i64, e_closed_form, e_count, f_poly_recursive, fr_product, g_matches_fr_product, g_poly,
};
use exseq::linalg::{q, rational_to_i64};
use exseq::schema::{cluster_record, config_record, exc_record, m_exc_record, ClusterRecord};
use exseq::shift::{enumerate_m_clusters, show_list};
use exseq::wide::{enumerate_complete_exc_sequences, WideSubcat};
use exseq::{suites, DynkinDiagram, Error, Quiver, RepEngine};
use serde_json::json;

const MAX_M: u32 = 6;
const COUNT_RANK: usize = 8;
const ENUM_RANK: usize = 6;
const ENUM_M: u32 = 3;

#[derive(Parser)]
#[command(
    name = "exseq",
    version,
    about = "Exceptional sequences and m-clusters of Dynkin quivers"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Dynkin type such as A3, D4, E6 or A2xA1
    #[arg(long = "type", value_name = "TYPE")]
    type_tag: Option<String>,
    #[arg(long, default_value_t = 1)]
    m: u32,
    /// Write output here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    format: Option<Format>,
    /// Refuse diagrams of larger rank
    #[arg(long)]
    max_rank: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Dot,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum What {
    Clusters,
    ExcSeqs,
    MExcSeqs,
    Configs,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Counting,
    Bijection,
    Duality,
    Mutation,
    All,
}

#[derive(Subcommand)]
enum Command {
    /// Counting table: e, f(x), g(m), and the product formula
    Count {
        #[command(flatten)]
        common: Common,
        #[arg(value_name = "TYPE")]
        type_pos: Option<String>,
    },
    /// Dump clusters, exceptional sequences, m-exceptional sequences or configurations
    Enumerate {
        #[command(flatten)]
        common: Common,
        /// [TYPE] WHAT
        #[arg(num_args = 1..=2, required = true)]
        args: Vec<String>,
    },
    /// Run a verification suite
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        suite: Option<Suite>,
        /// [TYPE] [SUITE]
        #[arg(num_args = 0..=2)]
        args: Vec<String>,
    },
    /// Mutate a cluster at one entry
    Mutate {
        #[command(flatten)]
        common: Common,
        #[arg(value_name = "TYPE")]
        type_pos: Option<String>,
        /// Cluster as JSON: {"m": 1, "objects": [{"dim": [1,0], "level": 0}, ...]}
        #[arg(long)]
        cluster: String,
        /// 1-based position in the given object list
        #[arg(long)]
        k: usize,
        /// + or -
        #[arg(long, allow_hyphen_values = true)]
        dir: String,
    },
    /// Mutation graph in DOT format
    Graph {
        #[command(flatten)]
        common: Common,
        #[arg(value_name = "TYPE")]
        type_pos: Option<String>,
    },
}

/// Failure categories mapped to exit codes 1 and 2.
enum Failure {
    Verification(String),
    Input(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Consistency(_) => Failure::Verification(e.to_string()),
            Error::Input(_) | Error::Unsupported(_) => Failure::Input(e.to_string()),
        }
    }
}

type Outcome = Result<(), Failure>;

fn input(msg: impl Into<String>) -> Failure {
    Failure::Input(msg.into())
}

fn resolve_type(common: &Common, positional: Option<&str>) -> Result<String, Failure> {
    match (&common.type_tag, positional) {
        (Some(a), Some(b)) if a != b => Err(input(format!("conflicting types {a} and {b}"))),
        (Some(a), _) => Ok(a.clone()),
        (None, Some(b)) => Ok(b.to_string()),
        (None, None) => Err(input("a Dynkin type is required")),
    }
}

fn diagram(common: &Common, positional: Option<&str>, hard_limit: usize) -> Result<DynkinDiagram, Failure> {
    let d = DynkinDiagram::parse(&resolve_type(common, positional)?)?;
    let limit = common.max_rank.map_or(hard_limit, |r| r.min(hard_limit));
    if d.rank() > limit {
        return Err(input(format!(
            "{} has rank {}, limit is {limit}",
            d.type_tag(),
            d.rank()
        )));
    }
    if common.m > MAX_M {
        return Err(input(format!("m = {} exceeds {MAX_M}", common.m)));
    }
    Ok(d)
}

fn engine(d: DynkinDiagram) -> Result<RepEngine, Failure> {
    Ok(RepEngine::new(Quiver::new(d)?)?)
}

fn emit(common: &Common, text: &str) -> Outcome {
    match &common.out {
        Some(path) => std::fs::write(path, text).map_err(|e| input(format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())
                .map_err(|e| input(format!("cannot write output: {e}")))
        }
    }
}

fn count(common: &Common, type_pos: Option<&str>) -> Outcome {
    let d = diagram(common, type_pos, COUNT_RANK)?;
    let e = e_count(&d)?;
    let closed = e_closed_form(&d)?;
    let f = coefficients_i64(&f_poly_recursive(&d)?)?;
    let g = g_poly(&d)?;
    let identity = g_matches_fr_product(&d)?;
    let rows: Vec<(u32, i64, i64)> = (0..=common.m)
        .map(|m| {
            let gm = rational_to_i64(&g.eval(&q(i64::from(m)))).ok_or_else(|| input("g(m) overflows"))?;
            Ok((m, gm, fr_product(&d, m)?))
        })
        .collect::<Result<_, Failure>>()?;
    let text = match common.format.unwrap_or(Format::Text) {
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "type {}", d.type_tag());
            let _ = writeln!(s, "e = {e} (closed form {closed})");
            let _ = writeln!(s, "f(x) = {}", f_poly_recursive(&d)?);
            let _ = writeln!(s, "g(m) = {}", g.to_string().replace('x', "m"));
            for (m, gm, p) in &rows {
                let _ = writeln!(s, "m = {m}: g = {gm}, p = {p}");
            }
            let _ = writeln!(s, "g = n! p: {}", if identity { "holds" } else { "FAILS" });
            s
        }
        Format::Csv => {
            let mut s = String::from("type,m,e,g,p\n");
            for (m, gm, p) in &rows {
                let _ = writeln!(s, "{},{m},{e},{gm},{p}", d.type_tag());
            }
            s
        }
        Format::Json => {
            let table: Vec<_> = rows.iter().map(|(m, gm, p)| json!({"g": gm, "m": m, "p": p})).collect();
            let v = json!({
                "e": e,
                "e_closed_form": closed,
                "f": f,
                "g_equals_n_factorial_p": identity,
                "table": table,
                "type": d.type_tag(),
            });
            format!("{}\n", serde_json::to_string(&v).expect("serializable"))
        }
        Format::Dot => return Err(input("count supports text, csv and json")),
    };
    emit(common, &text)?;
    if e != closed || !identity {
        return Err(Failure::Verification("counting identities fail".into()));
    }
    Ok(())
}

fn enumerate(common: &Common, args: &[String]) -> Outcome {
    let (type_pos, what) = match args {
        [w] => (None, w.as_str()),
        [t, w] => (Some(t.as_str()), w.as_str()),
        _ => return Err(input("expected [TYPE] WHAT")),
    };
    let what = What::from_str(what, true).map_err(|_| input(format!("unknown listing {what:?}")))?;
    let d = diagram(common, type_pos, ENUM_RANK)?;
    let m = common.m;
    if m > ENUM_M {
        return Err(input(format!("enumeration supports m <= {ENUM_M}")));
    }
    let format = common.format.unwrap_or(Format::Json);
    if !matches!(format, Format::Json | Format::Text) {
        return Err(input("enumerate supports json and text"));
    }
    let e = engine(d.clone())?;
    let whole = WideSubcat::whole(&e);
    let mut lines = Vec::new();
    let expected: i64;
    let line = |v: String, t: String| if format == Format::Json { v } else { t };
    match what {
        What::Clusters => {
            expected = fr_product(&d, m)?;
            for c in enumerate_m_clusters(&e, &whole, m)? {
                lines.push(line(to_json(&cluster_record(&e, m, &c)), show_list(&e, &c)));
            }
        }
        What::ExcSeqs => {
            expected = e_count(&d)?;
            for s in enumerate_complete_exc_sequences(&e, &whole) {
                let text = s
                    .terms
                    .iter()
                    .zip(&s.rel_proj)
                    .map(|(&t, &p)| format!("{}{}", e.dim(t), if p { "*" } else { "" }))
                    .collect::<Vec<_>>()
                    .join(", ");
                lines.push(line(to_json(&exc_record(&e, &s)), format!("({text})")));
            }
        }
        What::MExcSeqs => {
            expected = rational_to_i64(&g_poly(&d)?.eval(&q(i64::from(m)))).unwrap_or(-1);
            for s in exseq::bijection::enumerate_m_exc_sequences(&e, m, e.rank()) {
                lines.push(line(to_json(&m_exc_record(&e, m, &s)), show_list(&e, &s)));
            }
        }
        What::Configs => {
            expected = fr_product(&d, m)?;
            for c in enumerate_m_clusters(&e, &whole, m)? {
                let ordered = order_cluster(&e, &c)?;
                let config = garside_configuration(&e, m, &ordered)?;
                lines.push(line(
                    to_json(&config_record(&e, &ordered, &config)),
                    format!("{} -> {}", show_list(&e, &ordered), show_list(&e, &config.components)),
                ));
            }
        }
    }
    let mut text = lines.join("\n");
    if !text.is_empty() {
        text.push('\n');
    }
    emit(common, &text)?;
    eprintln!("records: {} (expected {expected})", lines.len());
    if lines.len() as i64 != expected {
        return Err(Failure::Verification(format!(
            "{} records, formula predicts {expected}",
            lines.len()
        )));
    }
    Ok(())
}

fn to_json<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("serializable")
}

fn verify(common: &Common, flag: Option<Suite>, args: &[String]) -> Outcome {
    let mut type_pos = None;
    let mut suite = flag;
    for a in args {
        match Suite::from_str(a, true) {
            Ok(s) if suite.is_none() => suite = Some(s),
            Ok(_) => return Err(input("suite given twice")),
            Err(_) if type_pos.is_none() => type_pos = Some(a.as_str()),
            Err(_) => return Err(input(format!("unexpected argument {a:?}"))),
        }
    }
    let suite = suite.unwrap_or(Suite::All);
    let d = diagram(common, type_pos, COUNT_RANK)?;
    let m = common.m;
    let mut reports = Vec::new();
    if matches!(suite, Suite::Counting | Suite::All) {
        reports.push(suites::counting(&d, m));
    }
    if suite != Suite::Counting {
        let limit = common.max_rank.map_or(ENUM_RANK, |r| r.min(ENUM_RANK));
        if d.rank() > limit || m > ENUM_M {
            return Err(input(format!("this suite supports rank <= {limit} and m <= {ENUM_M}")));
        }
        let e = engine(d)?;
        if matches!(suite, Suite::Bijection | Suite::All) {
            reports.push(suites::bijection(&e, m));
        }
        if matches!(suite, Suite::Duality | Suite::All) {
            reports.push(suites::duality(&e, m));
        }
        if matches!(suite, Suite::Mutation | Suite::All) {
            reports.push(suites::mutation(&e, m));
        }
    }
    let text: String = reports.iter().map(|r| format!("{r}\n")).collect();
    emit(common, &text)?;
    if reports.iter().all(|r| r.passed()) {
        Ok(())
    } else {
        Err(Failure::Verification("verification failed".into()))
    }
}

fn mutate(common: &Common, type_pos: Option<&str>, cluster: &str, k: usize, dir: &str) -> Outcome {
    let d = diagram(common, type_pos, ENUM_RANK)?;
    let e = engine(d)?;
    let rec: ClusterRecord = serde_json::from_str(cluster).map_err(|err| input(format!("bad cluster JSON: {err}")))?;
    let m = rec.m;
    if m > MAX_M {
        return Err(input(format!("m = {m} exceeds {MAX_M}")));
    }
    let objs = rec.decode(&e)?;
    let dir: Direction = dir.parse()?;
    if k == 0 || k > objs.len() {
        return Err(input(format!("k = {k} out of range 1..={}", objs.len())));
    }
    let mut sorted = objs.clone();
    sorted.sort();
    let clusters = enumerate_m_clusters(&e, &WideSubcat::whole(&e), m)?;
    if clusters.binary_search(&sorted).is_err() {
        return Err(input(format!("{} is not an m-cluster", show_list(&e, &objs))));
    }
    let ordered = order_cluster(&e, &objs)?;
    let pos = ordered.iter().position(|&o| o == objs[k - 1]).expect("same objects");
    let config = garside_configuration(&e, m, &ordered)?;
    let mutated = mutate_tilde_c(&e, &config, pos, dir)?;
    let new_ordered = mutated_cluster(&e, &ordered, &mutated, pos)?;
    let mut new_objs = objs.clone();
    new_objs[k - 1] = new_ordered[pos];
    let frame = |o: &[_], c: &_| duality_frame(&e, o, c).product;
    let v = json!({
        "after": config_record(&e, &new_ordered, &mutated),
        "before": config_record(&e, &ordered, &config),
        "cluster": cluster_record(&e, m, &new_objs),
        "frame_after": frame(&new_ordered, &mutated),
        "frame_before": frame(&ordered, &config),
    });
    emit(
        common,
        &format!("{}\n", serde_json::to_string(&v).expect("serializable")),
    )
}

fn graph(common: &Common, type_pos: Option<&str>) -> Outcome {
    let d = diagram(common, type_pos, ENUM_RANK)?;
    if common.m > ENUM_M {
        return Err(input(format!("graph supports m <= {ENUM_M}")));
    }
    if !matches!(common.format, None | Some(Format::Dot)) {
        return Err(input("graph supports dot only"));
    }
    let e = engine(d)?;
    let g = mutation_graph(&e, common.m)?;
    emit(common, &g.to_dot(&e))
}

fn run(cli: Cli) -> Outcome {
    match &cli.command {
        Command::Count { common, type_pos } => count(common, type_pos.as_deref()),
        Command::Enumerate { common, args } => enumerate(common, args),
        Command::Verify { common, suite, args } => verify(common, *suite, args),
        Command::Mutate {
            common,
            type_pos,
            cluster,
            k,
            dir,
        } => mutate(common, type_pos.as_deref(), cluster, *k, dir),
        Command::Graph { common, type_pos } => graph(common, type_pos.as_deref()),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
