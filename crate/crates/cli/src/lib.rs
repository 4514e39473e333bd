//! The `circan` command line: `analyze`, `verify`, `spectrum` and `routing`.
//!
//! Exit codes: 0 success, 2 disconnected or edgeless graph, 3 parse or usage
//! error, 4 verification failure, 1 anything else.

pub mod args;
pub mod render;

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use circan_core::graph::{GenericGraph, GraphFixture, Indexing};
use circan_core::indices::{circulant_report, full_report};
use circan_core::metrics::{
    all_pairs_distances, circulant_has_property_star, circulant_summary, distance_vector,
    has_property_star, metrics_summary, reciprocal_transmissions, transmissions, MetricsSummary,
};
use circan_core::routing::{
    edge_forwarding_bounds, parse_routing_fixture, vertex_forwarding_index, LoadProfile,
    RotationRouting, Routing, MATERIALIZE_LIMIT,
};
use circan_core::verify::{verify_family, ParamRanges, VerifyOptions};
use circan_core::{circulant_spectrum, CirculantSpec, Error};
use clap::error::ErrorKind;
use clap::Parser;
use serde_json::{json, Value};

use args::{AnalyzeArgs, Cli, Command, GraphArgs, VerifyArgs};

pub const EXIT_OK: i32 = 0;
pub const EXIT_OTHER: i32 = 1;
pub const EXIT_DISCONNECTED: i32 = 2;
pub const EXIT_PARSE: i32 = 3;
pub const EXIT_VERIFICATION: i32 = 4;

#[derive(Debug)]
enum Failure {
    Core(Error),
    Usage(String),
    Io(PathBuf, std::io::Error),
}

impl Failure {
    fn exit_code(&self) -> i32 {
        match self {
            Failure::Core(Error::Disconnected | Error::EmptyComplement { .. }) => EXIT_DISCONNECTED,
            Failure::Core(
                Error::Parse { .. }
                | Error::Range { .. }
                | Error::DuplicateEdge { .. }
                | Error::SelfLoop { .. }
                | Error::MissingPair { .. }
                | Error::DuplicatePair { .. }
                | Error::InvalidEdge { .. }
                | Error::NonElementary { .. }
                | Error::OrderTooSmall(_)
                | Error::EmptyJumpSet { .. },
            )
            | Failure::Usage(_) => EXIT_PARSE,
            _ => EXIT_OTHER,
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Core(e) => e.to_string(),
            Failure::Usage(m) => m.clone(),
            Failure::Io(p, e) => format!("{}: {e}", p.display()),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

type Outcome<T> = std::result::Result<T, Failure>;

/// Parses `args`, runs the command and returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_PARSE,
            };
        }
    };
    match execute(&cli) {
        Ok((text, code)) => match emit(&cli, &text) {
            Ok(()) => code,
            Err(f) => {
                eprintln!("error: {}", f.message());
                f.exit_code()
            }
        },
        Err(f) => {
            eprintln!("error: {}", f.message());
            f.exit_code()
        }
    }
}

fn emit(cli: &Cli, text: &str) -> Outcome<()> {
    match &cli.out {
        Some(path) => fs::write(path, text).map_err(|e| Failure::Io(path.clone(), e)),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())
                .and_then(|_| out.flush())
                .map_err(|e| Failure::Io("<stdout>".into(), e))
        }
    }
}

fn execute(cli: &Cli) -> Outcome<(String, i32)> {
    match &cli.command {
        Command::Analyze(a) => Ok((render::document(&analyze(a)?, cli.format), EXIT_OK)),
        Command::Spectrum(g) => Ok((render::document(&spectrum(g)?, cli.format), EXIT_OK)),
        Command::Routing(a) => Ok((render::document(&routing(a)?, cli.format), EXIT_OK)),
        Command::Verify(v) => verify(v, cli),
    }
}

fn read(path: &Path) -> Outcome<String> {
    fs::read_to_string(path).map_err(|e| Failure::Io(path.to_path_buf(), e))
}

enum Source {
    Circulant(CirculantSpec),
    Fixture(GraphFixture),
}

impl Source {
    fn generic(&self) -> GenericGraph {
        match self {
            Source::Circulant(spec) => spec.build(),
            Source::Fixture(f) => f.graph.clone(),
        }
    }

    fn indexing(&self) -> Indexing {
        match self {
            Source::Circulant(_) => Indexing::Zero,
            Source::Fixture(f) => f.indexing,
        }
    }

    fn describe(&self) -> Value {
        match self {
            Source::Circulant(spec) => {
                json!({ "kind": "circulant", "name": spec.to_string(), "n": spec.order(), "jumps": spec.jumps() })
            }
            Source::Fixture(f) => {
                json!({ "kind": "fixture", "n": f.graph.order(), "edges": f.graph.edge_count() })
            }
        }
    }
}

fn load_source(g: &GraphArgs) -> Outcome<Source> {
    let source = match (&g.fixture, g.n, &g.jumps, g.m, g.h) {
        (Some(path), None, None, None, None) => Source::Fixture(GraphFixture::parse(&read(path)?)?),
        (None, Some(n), Some(jumps), None, None) => {
            Source::Circulant(CirculantSpec::new(n, jumps.iter().copied())?)
        }
        (None, None, None, Some(m), Some(h)) => {
            if m < 2 || h == 0 || m.checked_pow(h).is_none() {
                return Err(Failure::Usage(format!(
                    "need m >= 2, h >= 1 and m^h in range, got m={m}, h={h}"
                )));
            }
            Source::Circulant(CirculantSpec::multiplicative(m, h)?)
        }
        _ => {
            return Err(Failure::Usage(
                "give exactly one graph: --n/--jumps, --m/--h or --fixture".into(),
            ))
        }
    };
    if !g.complement {
        return Ok(source);
    }
    Ok(match source {
        Source::Circulant(spec) => Source::Circulant(spec.complement()?),
        Source::Fixture(f) => Source::Fixture(GraphFixture {
            graph: f.graph.complement(),
            indexing: f.indexing,
        }),
    })
}

fn summary_fields(doc: &mut serde_json::Map<String, Value>, s: &MetricsSummary) {
    doc.insert("order".into(), json!(s.order));
    doc.insert("regularity".into(), json!(s.regularity));
    doc.insert("edge_count".into(), json!(s.edge_count));
    doc.insert("connected".into(), json!(s.connected));
    doc.insert("diameter".into(), json!(s.diameter));
    doc.insert("transmission_regular".into(), json!(s.transmission_regular));
    doc.insert("transmission".into(), json!(s.transmission));
    doc.insert(
        "reciprocal_transmission".into(),
        render::rational(&s.reciprocal_transmission),
    );
}

fn analyze(a: &AnalyzeArgs) -> Outcome<Value> {
    let source = load_source(&a.graph)?;
    let mut doc = serde_json::Map::new();
    doc.insert("graph".into(), source.describe());
    doc.insert("complement".into(), json!(a.graph.complement));
    match &source {
        Source::Circulant(spec) => {
            let dv = distance_vector(spec)?;
            summary_fields(&mut doc, &circulant_summary(spec)?);
            doc.insert("distance_vector".into(), json!(dv.entries()));
            let rho = dv.transmission();
            let sp = circulant_spectrum(&dv);
            doc.insert("rho".into(), json!(rho));
            doc.insert("rho_dft".into(), json!(sp.radius));
            doc.insert("xi".into(), json!(vertex_forwarding_index(spec)?));
            let b = edge_forwarding_bounds(spec)?;
            doc.insert("pi_lower".into(), render::rational(&b.lower));
            doc.insert("pi_upper".into(), json!(b.upper));
            doc.insert(
                "property_star".into(),
                json!(circulant_has_property_star(spec)),
            );
            doc.insert("indices".into(), render::indices(&circulant_report(spec)?));
        }
        Source::Fixture(f) => {
            let s = metrics_summary(&f.graph)?;
            summary_fields(&mut doc, &s);
            if !s.transmission_regular {
                let dm = all_pairs_distances(&f.graph)?;
                let rs: Vec<Value> = reciprocal_transmissions(&dm)
                    .iter()
                    .map(render::rational)
                    .collect();
                doc.insert("transmission".into(), json!(transmissions(&dm)));
                doc.insert("reciprocal_transmission".into(), Value::Array(rs));
            }
            // The distance spectral radius of a transmission-regular graph is its transmission.
            doc.insert(
                "rho".into(),
                if s.transmission_regular {
                    json!(s.transmission)
                } else {
                    Value::Null
                },
            );
            doc.insert("property_star".into(), json!(has_property_star(&f.graph)));
            doc.insert("indices".into(), render::indices(&full_report(&f.graph)?));
        }
    }
    if let Some(path) = &a.routing {
        let r = parse_routing_fixture(&read(path)?, &source.generic(), source.indexing())?;
        doc.insert("routing".into(), routing_doc(&r, source.indexing()));
    }
    Ok(Value::Object(doc))
}

fn loads_doc(p: &LoadProfile, indexing: Indexing) -> Value {
    let edges: Vec<Value> = p
        .edge_loads
        .iter()
        .map(|((u, v), load)| json!([indexing.to_external(u), indexing.to_external(v), load]))
        .collect();
    json!({
        "vertex_loads": p.vertex_loads,
        "forwarding_index": p.max_vertex_load,
        "max_edge_load": p.max_edge_load,
        "edge_loads": edges,
    })
}

fn routing_doc(r: &Routing, indexing: Indexing) -> Value {
    let mut doc = json!({ "minimal": r.is_minimal(), "symmetric": r.is_symmetric() });
    if let (Value::Object(d), Value::Object(l)) = (&mut doc, loads_doc(&r.load_profile(), indexing))
    {
        d.extend(l);
    }
    doc
}

fn routing(a: &AnalyzeArgs) -> Outcome<Value> {
    let source = load_source(&a.graph)?;
    let mut doc = serde_json::Map::new();
    doc.insert("graph".into(), source.describe());
    doc.insert("complement".into(), json!(a.graph.complement));
    match (&a.routing, &source) {
        (Some(path), _) => {
            let r = parse_routing_fixture(&read(path)?, &source.generic(), source.indexing())?;
            doc.insert("routing".into(), json!("fixture"));
            if let Value::Object(m) = routing_doc(&r, source.indexing()) {
                doc.extend(m);
            }
        }
        (None, Source::Circulant(spec)) => {
            let rr = RotationRouting::new(spec)?;
            doc.insert("routing".into(), json!("rotation"));
            if spec.order() <= MATERIALIZE_LIMIT {
                let r = rr.to_routing()?;
                doc.insert("minimal".into(), json!(r.is_minimal()));
                doc.insert("symmetric".into(), json!(r.is_symmetric()));
            }
            if let Value::Object(m) = loads_doc(&rr.load_profile(), Indexing::Zero) {
                doc.extend(m);
            }
            doc.insert("xi".into(), json!(vertex_forwarding_index(spec)?));
            let b = edge_forwarding_bounds(spec)?;
            doc.insert("pi_lower".into(), render::rational(&b.lower));
            doc.insert("pi_upper".into(), json!(b.upper));
        }
        (None, Source::Fixture(_)) => {
            return Err(Failure::Usage("a fixture graph needs --routing".into()));
        }
    }
    Ok(Value::Object(doc))
}

fn spectrum(g: &GraphArgs) -> Outcome<Value> {
    let Source::Circulant(spec) = load_source(g)? else {
        return Err(Failure::Usage(
            "spectrum needs a circulant (--n/--jumps or --m/--h)".into(),
        ));
    };
    let dv = distance_vector(&spec)?;
    let sp = circulant_spectrum(&dv);
    let exact = dv.transmission();
    Ok(json!({
        "graph": Source::Circulant(spec.clone()).describe(),
        "complement": g.complement,
        "eigenvalues": sp.eigenvalues,
        "radius": sp.radius,
        "radius_exact": exact,
        "radius_error": (sp.radius - exact as f64).abs(),
        "trace": sp.trace(),
    }))
}

fn verify(v: &VerifyArgs, cli: &Cli) -> Outcome<(String, i32)> {
    let ranges = ParamRanges {
        k: v.k.clone(),
        n: v.n.clone(),
        a: v.a.clone(),
        m: v.m.clone(),
        h: v.h.clone(),
        max_order: v.max_order,
    };
    let mut opts = VerifyOptions::default();
    if let Some(tol) = cli.tol {
        opts.tolerance = tol;
    }
    let sweep = || verify_family(v.family, &ranges, &opts);
    let records = match cli.jobs {
        Some(jobs) => rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| Failure::Usage(e.to_string()))?
            .install(sweep),
        None => sweep(),
    };
    let code = if records.iter().any(|r| r.is_failure()) {
        EXIT_VERIFICATION
    } else {
        EXIT_OK
    };
    Ok((render::records(&records, cli.format), code))
}
