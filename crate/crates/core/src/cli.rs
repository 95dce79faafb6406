//! Command-line front end. Exit codes: 0 success, 1 failure (including a
//! failed `verify`), 2 usage or parameter errors.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use etmaps::census::{boundary_census, run_census, CensusConfig, CensusError};
use etmaps::classify::{
    basic_premap_catalog, quotient_premap, transitivity_from_quotient, EtClass,
};
use etmaps::construct::formulas::Expected;
use etmaps::construct::{biggs_map, james_map, k6_regular_pair, ConstructError};
use etmaps::field::{make_field, totient, FieldError};
use etmaps::flagmap::{parse_flagmap, write_flagmap, FlagMap};
use etmaps::report::{report_json, MapReport};
use etmaps::verify;

#[derive(Parser, Debug)]
#[command(
    name = "etmaps",
    version,
    about = "Edge-transitive embeddings of complete graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Finite field information.
    #[command(subcommand)]
    Field(FieldCommand),
    /// Construct, analyze or classify maps.
    #[command(subcommand)]
    Map(MapCommand),
    /// The fourteen one-edge premaps.
    #[command(subcommand)]
    Catalog(CatalogCommand),
    /// Brute-force census of edge-transitive embeddings of K_n.
    Census(CensusArgs),
    /// Run the acceptance checks.
    Verify {
        #[arg(long, default_value_t = 27)]
        max_n: u64,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand, Debug)]
enum FieldCommand {
    /// Modulus, primitive elements and their Galois orbits in GF(p^e).
    Info {
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 1)]
        e: u32,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args, Debug)]
struct Output {
    /// Apply Petrie duality.
    #[arg(long)]
    petrie: bool,
    /// Apply duality (after --petrie).
    #[arg(long)]
    dual: bool,
    /// Write the map here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Print the report as JSON.
    #[arg(long)]
    json: bool,
    /// Print the underlying graph in DOT format.
    #[arg(long)]
    dot: bool,
}

#[derive(Subcommand, Debug)]
enum MapCommand {
    /// Biggs map M_n(c).
    Biggs {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        c: u32,
        #[command(flatten)]
        output: Output,
    },
    /// James map M_n(c, j).
    James {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        c: u32,
        #[arg(long, allow_hyphen_values = true)]
        j: i64,
        #[command(flatten)]
        output: Output,
    },
    /// One of the regular maps {3,5}_5 and {5,5}_3 on K6.
    K6 {
        #[arg(long)]
        which: String,
        #[command(flatten)]
        output: Output,
    },
    /// Invariants of a map in flagmap v1 format.
    Analyze {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Edge-transitivity class of a map in flagmap v1 format.
    Classify {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand, Debug)]
enum CatalogCommand {
    /// Write the fourteen premaps in flagmap v1 format.
    Premaps {
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
struct CensusArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    orientable_only: bool,
    /// Embeddings in surfaces with boundary (n = 2, 3).
    #[arg(long)]
    boundary: bool,
    #[arg(long)]
    jobs: Option<usize>,
    /// Run only units congruent to I mod M.
    #[arg(long, value_parser = parse_shard)]
    shard: Option<(usize, usize)>,
    /// Checkpoint directory; finished units found there are skipped.
    #[arg(long)]
    resume: Option<PathBuf>,
    /// Directory for one flagmap v1 file per class.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Do not fix the rotation and signs at vertex 0 (n <= 4).
    #[arg(long)]
    unnormalized: bool,
    /// Permit the full n = 6 census.
    #[arg(long)]
    long_run: bool,
}

fn parse_shard(s: &str) -> Result<(usize, usize), String> {
    let (i, m) = s.split_once('/').ok_or("expected I/M")?;
    let i = i
        .trim()
        .parse()
        .map_err(|_| format!("bad shard index {i:?}"))?;
    let m = m
        .trim()
        .parse()
        .map_err(|_| format!("bad shard count {m:?}"))?;
    Ok((i, m))
}

#[derive(Debug)]
enum Failure {
    /// Bad parameters; exit 2.
    Usage(String),
    /// Anything else; exit 1.
    Runtime(String),
}

/// `Variant: message`, so scripts can match on the error kind.
fn with_kind(e: &(impl std::fmt::Debug + std::fmt::Display)) -> String {
    let dbg = format!("{e:?}");
    let kind = dbg.split(['(', ' ', '{']).next().unwrap_or_default();
    format!("{kind}: {e}")
}

impl From<ConstructError> for Failure {
    fn from(e: ConstructError) -> Failure {
        match e {
            ConstructError::Field(f) => f.into(),
            e => Failure::Usage(with_kind(&e)),
        }
    }
}

impl From<FieldError> for Failure {
    fn from(e: FieldError) -> Failure {
        Failure::Usage(with_kind(&e))
    }
}

impl From<CensusError> for Failure {
    fn from(e: CensusError) -> Failure {
        match e {
            CensusError::Io(_) | CensusError::Checkpoint { .. } | CensusError::ThreadPool(_) => {
                Failure::Runtime(e.to_string())
            }
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Failure {
        Failure::Runtime(e.to_string())
    }
}

type Res = Result<i32, Failure>;

/// Parses `args` (including the program name), runs the command and
/// returns the exit code. Errors go to stderr.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            2
        }
        Err(Failure::Runtime(msg)) => {
            eprintln!("error: {msg}");
            1
        }
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> Res {
    match cmd {
        Command::Field(FieldCommand::Info { p, e, json }) => field_info(p, e, json, out),
        Command::Map(m) => map_command(m, out),
        Command::Catalog(CatalogCommand::Premaps { out: dir }) => catalog(dir.as_deref(), out),
        Command::Census(args) => census(args, out),
        Command::Verify { max_n, json } => verify_all(max_n, json, out),
    }
}

fn print_json(out: &mut dyn Write, v: &Value) -> std::io::Result<()> {
    writeln!(out, "{}", serde_json::to_string_pretty(v).expect("json"))
}

fn field_info(p: u64, e: u32, json: bool, out: &mut dyn Write) -> Res {
    let f = make_field(p, e)?;
    let n = f.order() as u64;
    let prim = f.primitive_elements();
    let orbits = f.galois_orbits(&prim);
    let show = |x: &etmaps::field::FieldElement| {
        if e == 1 {
            x.to_string()
        } else {
            format!("{x}={}", f.element_string(*x))
        }
    };
    if json {
        let ids =
            |v: &[etmaps::field::FieldElement]| v.iter().map(|x| x.index()).collect::<Vec<_>>();
        print_json(
            out,
            &json!({
                "n": n,
                "modulus": f.modulus_string(),
                "phi": totient(n - 1),
                "primitive_elements": ids(&prim),
                "galois_orbits": orbits.iter().map(|o| ids(o)).collect::<Vec<_>>(),
            }),
        )?;
        return Ok(0);
    }
    writeln!(out, "n = {n}")?;
    writeln!(out, "modulus = {}", f.modulus_string())?;
    writeln!(out, "phi(n-1) = {}", totient(n - 1))?;
    let list: Vec<String> = prim.iter().map(show).collect();
    writeln!(
        out,
        "primitive elements ({}): {}",
        prim.len(),
        list.join(" ")
    )?;
    writeln!(out, "galois orbits ({}):", orbits.len())?;
    for o in &orbits {
        let list: Vec<String> = o.iter().map(show).collect();
        writeln!(out, "  {{{}}}", list.join(", "))?;
    }
    Ok(0)
}

fn map_command(cmd: MapCommand, out: &mut dyn Write) -> Res {
    match cmd {
        MapCommand::Biggs { n, c, output } => {
            let m = biggs_map(n, c)?.to_flag_map();
            let e = Expected::biggs(n, output.petrie).ok();
            emit(m, e, &output, out)
        }
        MapCommand::James { n, c, j, output } => {
            let m = james_map(n, c, j)?.to_flag_map();
            let e = Expected::james(n, j, output.petrie).ok();
            emit(m, e, &output, out)
        }
        MapCommand::K6 { which, output } => {
            let first = match which
                .trim_matches(|c| c == '{' || c == '}')
                .replace(['{', '}', ' '], "")
                .as_str()
            {
                "3,5_5" | "3,5" => true,
                "5,5_3" | "5,5" => false,
                _ => {
                    return Err(Failure::Usage(format!(
                        "--which must be {{3,5}} or {{5,5}}, got {which:?}"
                    )))
                }
            };
            let (a, b) = k6_regular_pair();
            let m = if first { a } else { b };
            // The pair is closed under Petrie duality.
            let e = Some(Expected::k6(first != output.petrie));
            emit(m, e, &output, out)
        }
        MapCommand::Analyze { file, json } => {
            let m = read_map(&file)?;
            let r = MapReport::analyze(&m);
            if json {
                print_json(out, &r.to_value())?;
            } else {
                print_report(&r, out)?;
            }
            Ok(0)
        }
        MapCommand::Classify { file, json } => {
            let m = read_map(&file)?;
            let q = quotient_premap(&m);
            let t = transitivity_from_quotient(&q);
            let class = etmaps::classify::class_of_quotient(&q);
            let aut = m.n_flags() / q.n_flags();
            if json {
                print_json(
                    out,
                    &json!({
                        "et_class": class.label(),
                        "aut_order": aut,
                        "flags_transitive": t.flags,
                        "edge_transitive": t.edges,
                        "vertex_transitive": t.vertices,
                        "arc_transitive": t.arcs,
                        "face_transitive": t.faces,
                    }),
                )?;
            } else {
                writeln!(out, "class {}", class.label())?;
                writeln!(out, "aut_order {aut}")?;
                writeln!(
                    out,
                    "transitive flags={} edges={} vertices={} arcs={} faces={}",
                    t.flags, t.edges, t.vertices, t.arcs, t.faces
                )?;
            }
            Ok(0)
        }
    }
}

fn read_map(path: &Path) -> Result<FlagMap, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Runtime(format!("{}: {e}", path.display())))?;
    parse_flagmap(&text).map_err(|e| Failure::Runtime(format!("{}: {e}", path.display())))
}

/// Applies the Ω operations and writes the map, report or graph.
fn emit(mut m: FlagMap, mut expected: Option<Expected>, o: &Output, out: &mut dyn Write) -> Res {
    if o.petrie {
        m = m.petrie_dual();
    }
    if o.dual {
        m = m.dual();
        expected = expected.map(|e| e.dual());
    }
    let text = write_flagmap(&m);
    if let Some(path) = &o.out {
        fs::write(path, &text).map_err(|e| Failure::Runtime(format!("{}: {e}", path.display())))?;
    }
    if o.dot {
        write!(out, "{}", m.underlying_graph().to_dot())?;
    }
    if o.json {
        let r = MapReport::analyze(&m);
        print_json(out, &report_json(&r, expected.as_ref()))?;
    } else if o.out.is_none() && !o.dot {
        write!(out, "{text}")?;
    }
    Ok(0)
}

fn opt<T: std::fmt::Debug>(v: &Option<T>) -> String {
    match v {
        Some(x) => format!("{x:?}"),
        None => "-".into(),
    }
}

fn print_report(r: &MapReport, out: &mut dyn Write) -> std::io::Result<()> {
    writeln!(
        out,
        "V={} E={} F={} petrie={}",
        r.v, r.e, r.f, r.petrie_count
    )?;
    writeln!(
        out,
        "chi={} orientable={} boundary={} genus_or_crosscaps={}",
        r.chi,
        r.orientable,
        r.has_boundary,
        opt(&r.genus_or_crosscaps)
    )?;
    writeln!(out, "face_sizes={}", opt(&r.face_sizes))?;
    writeln!(out, "vertex_degrees={}", opt(&r.vertex_degrees))?;
    writeln!(out, "petrie_lengths={}", opt(&r.petrie_lengths))?;
    writeln!(out, "aut_order={} class={}", r.aut_order, r.et_class)?;
    writeln!(
        out,
        "transitive flags={} edges={} vertices={} arcs={} faces={}",
        r.flags_transitive,
        r.edge_transitive,
        r.vertex_transitive,
        r.arc_transitive,
        r.face_transitive
    )?;
    writeln!(out, "face_orbit_sizes={:?}", r.face_orbit_sizes)
}

/// File name for a class label: `2*ex` becomes `2starex`.
fn class_file(class: EtClass) -> String {
    format!("{}.flagmap", class.label().replace('*', "star"))
}

fn catalog(dir: Option<&Path>, out: &mut dyn Write) -> Res {
    if let Some(d) = dir {
        fs::create_dir_all(d)?;
    }
    for (class, m) in basic_premap_catalog() {
        let text = write_flagmap(&m);
        match dir {
            Some(d) => {
                let path = d.join(class_file(class));
                fs::write(&path, text)?;
                writeln!(out, "{class} {}", path.display())?;
            }
            None => write!(out, "# {class}\n{text}")?,
        }
    }
    Ok(0)
}

fn census(a: CensusArgs, out: &mut dyn Write) -> Res {
    if let Some(d) = &a.out {
        fs::create_dir_all(d)?;
    }
    if a.boundary {
        let maps = boundary_census(a.n)?;
        for (k, (m, class)) in maps.iter().enumerate() {
            writeln!(out, "{} {class}", m.canonical_form().to_hex())?;
            if let Some(d) = &a.out {
                fs::write(d.join(format!("boundary-{k}.flagmap")), write_flagmap(m))?;
            }
        }
        writeln!(out, "n={} boundary maps={}", a.n, maps.len())?;
        return Ok(0);
    }
    let mut cfg = CensusConfig::new(a.n, a.orientable_only);
    cfg.unnormalized = a.unnormalized;
    cfg.allow_long = a.long_run;
    cfg.jobs = a.jobs;
    cfg.shard = a.shard;
    cfg.resume = a.resume;
    let outcome = run_census(&cfg)?;
    for (k, cm) in outcome.maps.iter().enumerate() {
        writeln!(out, "{} {}", cm.certificate.to_hex(), cm.class)?;
        if let Some(d) = &a.out {
            fs::write(d.join(format!("class-{k}.flagmap")), write_flagmap(&cm.map))?;
        }
    }
    if outcome.units_done < outcome.units_total {
        writeln!(
            out,
            "partial: {}/{} units",
            outcome.units_done, outcome.units_total
        )?;
    }
    writeln!(out, "{}", outcome.summary())?;
    Ok(0)
}

fn verify_all(max_n: u64, json: bool, out: &mut dyn Write) -> Res {
    let mut ok = true;
    let mut results = Vec::new();
    for c in verify::CRITERIA {
        let r = c(max_n);
        ok &= r.passed();
        if !json {
            writeln!(out, "{}", r.line())?;
            for note in &r.notes {
                writeln!(out, "    {note}")?;
            }
            for f in &r.failures {
                writeln!(out, "    FAILED: {f}")?;
            }
            out.flush()?;
        }
        results.push(r);
    }
    if json {
        print_json(
            out,
            &json!({ "max_n": max_n, "passed": ok, "criteria": results }),
        )?;
    }
    Ok(if ok { 0 } else { 1 })
}
