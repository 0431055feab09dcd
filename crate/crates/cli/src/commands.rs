use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io;
use std::time::Instant;

use serde::Serialize;
use symtc::cohomology::RingExport;
use symtc::{Analysis, CohomologyRing, Complex, Error, InducedMap};
use thiserror::Error as ThisError;

use crate::cache;
use crate::config::{CommandKind, Format, RunConfig, Source};

#[derive(Debug, ThisError)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Refuted(String),
    #[error("internal error: {0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Refuted(_) => 3,
            CliError::Internal(_) => 4,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. }
            | Error::DuplicateVertex { .. }
            | Error::VertexOutOfRange { .. }
            | Error::EmptyComplex
            | Error::Json(_)
            | Error::UnknownGenerator(_)
            | Error::Disconnected { .. } => CliError::Input(e.to_string()),
            Error::ConnectivityRefuted { .. } | Error::InconsistentBounds { .. } => {
                CliError::Refuted(e.to_string())
            }
            other => CliError::Internal(other.to_string()),
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Internal(format!("cache: {e}"))
    }
}

struct Input {
    label: String,
    complex: Complex,
}

fn load(source: &Source) -> Result<Input, CliError> {
    match source {
        Source::Generator(g) => Ok(Input {
            label: g.to_string(),
            complex: g.generate(),
        }),
        Source::File(path) => {
            let shown = path.display();
            let text = std::fs::read_to_string(path).map_err(|e| match e.kind() {
                io::ErrorKind::NotFound => CliError::Input(format!("{shown}: file not found")),
                _ => CliError::Input(format!("{shown}: {e}")),
            })?;
            let complex = Complex::parse(&text).map_err(|e| match CliError::from(e) {
                CliError::Input(m) => CliError::Input(format!("{shown}: {m}")),
                other => other,
            })?;
            let label = complex
                .name()
                .map_or_else(|| shown.to_string(), str::to_string);
            Ok(Input { label, complex })
        }
    }
}

struct Timer {
    verbose: bool,
    last: Instant,
}

impl Timer {
    fn lap(&mut self, stage: &str) {
        if self.verbose {
            eprintln!("[{stage}] {:.3?}", self.last.elapsed());
        }
        self.last = Instant::now();
    }
}

pub fn run(cfg: &RunConfig) -> Result<String, CliError> {
    let mut timer = Timer {
        verbose: cfg.verbose,
        last: Instant::now(),
    };
    let input = load(&cfg.source)?;
    timer.lap("load");
    if cfg.command == CommandKind::Generate {
        return Ok(match cfg.format {
            Format::Text => input.complex.to_text(),
            Format::Json => input.complex.to_json() + "\n",
        });
    }

    let (pair, hit) = cache::load_or_build(cfg.cache.as_deref(), &input.complex)?;
    timer.lap(if hit { "symmetric square (cached)" } else { "symmetric square" });
    let analysis = Analysis::from_pair(pair, input.label)?;
    timer.lap("cohomology");
    if cfg.dump_debug {
        dump_debug(&analysis);
    }

    let out = match cfg.command {
        CommandKind::Homology => homology(&analysis, cfg.format),
        CommandKind::Ring => ring(&analysis, cfg.format),
        CommandKind::Bounds => {
            let report = analysis.report(cfg.connectivity, cfg.connectivity_declared)?;
            match cfg.format {
                Format::Text => report.to_string(),
                Format::Json => report.to_json() + "\n",
            }
        }
        CommandKind::Generate => unreachable!("handled above"),
    };
    timer.lap(match cfg.command {
        CommandKind::Homology => "homology",
        CommandKind::Ring => "ring",
        _ => "bounds",
    });
    Ok(out)
}

fn dump_debug(a: &Analysis) {
    eprintln!("{:#}", a.pair.debug_dump());
    let complex = a.symmetric_square.complex();
    for k in 0..complex.top_grade() {
        let m = complex.coboundary(k);
        eprintln!("coboundary SP² {k} -> {} ({}x{})", k + 1, m.rows(), m.cols());
        eprint!("{}", m.dump());
    }
}

fn tuple(values: &[usize]) -> String {
    let inner: Vec<String> = values.iter().map(usize::to_string).collect();
    format!("({})", inner.join(", "))
}

#[derive(Serialize)]
struct HomologyOutput<'a> {
    space: &'a str,
    betti: symtc::bounds::BettiTable,
}

fn homology(a: &Analysis, format: Format) -> String {
    let betti = a.betti();
    match format {
        Format::Json => {
            let out = HomologyOutput {
                space: &a.label,
                betti,
            };
            serde_json::to_string_pretty(&out).expect("serializable") + "\n"
        }
        Format::Text => {
            let mut s = format!("space: {}\n", a.label);
            for (name, b) in [
                ("X", &betti.space),
                ("X×X", &betti.product),
                ("SP²(X)", &betti.symmetric_square),
                ("dX", &betti.diagonal),
                ("(SP²(X), dX)", &betti.relative),
            ] {
                writeln!(s, "  {name:<13} {}", tuple(b)).unwrap();
            }
            s
        }
    }
}

#[derive(Serialize)]
struct RingOutput<'a> {
    space: &'a str,
    rings: BTreeMap<&'static str, RingExport>,
    maps: BTreeMap<&'static str, BTreeMap<usize, Vec<String>>>,
}

fn map_export(f: &InducedMap, top: usize) -> BTreeMap<usize, Vec<String>> {
    (0..=top)
        .filter_map(|k| {
            let m = f.matrix(k)?;
            Some((k, m.row_slice().iter().map(|r| r.to_string01()).collect()))
        })
        .collect()
}

fn ring(a: &Analysis, format: Format) -> String {
    let rings: [(&'static str, &CohomologyRing); 4] = [
        ("space", &a.space),
        ("symmetric_square", &a.symmetric_square),
        ("diagonal", &a.diagonal),
        ("relative", &a.relative),
    ];
    let top = a.symmetric_square.top_grade();
    let maps = BTreeMap::from([
        ("restriction", map_export(&a.restriction, top)),
        ("relative_to_absolute", map_export(&a.relative_to_absolute, top)),
    ]);
    let out = RingOutput {
        space: &a.label,
        rings: rings.iter().map(|&(n, r)| (n, r.export())).collect(),
        maps,
    };
    match format {
        Format::Json => serde_json::to_string_pretty(&out).expect("serializable") + "\n",
        Format::Text => {
            let mut s = format!("space: {}\n", a.label);
            for ((name, _), shown) in rings.iter().zip(["X", "SP²(X)", "dX", "(SP²(X), dX)"]) {
                let e = &out.rings[name];
                writeln!(s, "{shown}: betti {}", tuple(&e.betti)).unwrap();
                for t in e.products.iter().filter(|t| t.p > 0 && t.q > 0 && t.p <= t.q) {
                    for (i, row) in t.table.iter().enumerate() {
                        for (j, prod) in row.iter().enumerate() {
                            if prod.contains('1') {
                                writeln!(s, "  e{}_{i} · e{}_{j} = [{prod}] in degree {}", t.p, t.q, t.p + t.q)
                                    .unwrap();
                            }
                        }
                    }
                }
            }
            for (name, grades) in &out.maps {
                writeln!(s, "{name}:").unwrap();
                for (k, rows) in grades {
                    writeln!(s, "  H^{k}: [{}]", rows.join(" ")).unwrap();
                }
            }
            s
        }
    }
}
