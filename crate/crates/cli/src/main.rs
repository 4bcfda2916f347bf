mod report;
mod svg;

use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use oneplane::certify::{digest, turan_exhaustive};
use oneplane::constructions::{check_fixture, ladder_plus, FIXTURE_NAMES};
use oneplane::invariants::{
    alternating_vertices, classify_face, count_class, crossing_skeleton, FaceClass,
};
use oneplane::{
    certify, compute_invariants, drawing_search, has_clique, maxe_bound, opg, turan_size,
    AbstractGraph, DrawingError, Family, OnePlaneDrawing, SearchError, SearchLimits,
};

use report::{record, write_records, Format, Layout, Record};

#[derive(Parser)]
#[command(
    name = "oneplane",
    version,
    about = "Validate, measure and generate 1-plane drawings"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value = "text", global = true)]
    format: Format,
    /// Print a version banner to stderr.
    #[arg(long, short, global = true)]
    verbose: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check that an OPG file is a valid 1-plane drawing.
    Validate(Input),
    /// Print the planarization invariants A, twoB and C.
    Invariants(Input),
    /// List the faces of the planarization.
    Faces(Input),
    /// Summarize the crossing skeleton (the crossed edges only).
    Skeleton {
        #[command(flatten)]
        input: Input,
        /// Emit the skeleton drawing as OPG instead of a summary.
        #[arg(long)]
        opg: bool,
    },
    /// Certify a drawing against the K_k-free edge bound.
    Certify {
        #[arg(long)]
        k: u64,
        /// OPG file, or '-' for stdin.
        #[arg(required_unless_present = "all", conflicts_with = "all")]
        input: Option<String>,
        /// Certify every .opg file in a directory.
        #[arg(long, value_name = "DIR")]
        all: Option<PathBuf>,
    },
    /// Generate a drawing from a construction family as OPG.
    Gen {
        #[arg(value_enum)]
        family: GenFamily,
        /// Fixture name, for `gen fixture`.
        name: Option<String>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
    },
    /// Turán numbers and the matching 1-planar bound.
    Turan {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// Recompute the Turán number by exhaustive search (n <= 7).
        #[arg(long)]
        exhaustive: bool,
    },
    /// Look for a 1-plane drawing of a graph given as an edge list.
    Search {
        /// Edge-list file (`n m` then `u v` per line), or '-' for stdin.
        input: String,
        #[arg(long)]
        max_crossings: Option<usize>,
        #[arg(long, default_value_t = 200_000)]
        max_nodes: u64,
    },
    /// List and check the bundled fixtures.
    Fixtures {
        /// Check only these fixtures.
        names: Vec<String>,
    },
}

#[derive(Args)]
struct Input {
    /// OPG file, or '-' for stdin.
    input: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GenFamily {
    CubeG8,
    Ladder,
    LadderPlus,
    K4Extremal,
    K5Optimal,
    Turan,
    Fixture,
}

/// A verdict the caller should see as exit code 1.
struct Verdict(bool);

fn read_input(input: &str) -> Result<String> {
    if input == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .context("reading stdin")?;
        Ok(s)
    } else {
        std::fs::read_to_string(input).with_context(|| format!("reading {input}"))
    }
}

fn variant(e: &DrawingError) -> String {
    let dbg = format!("{e:?}");
    dbg.split(|c: char| !c.is_alphanumeric())
        .next()
        .unwrap_or_default()
        .to_string()
}

fn parse_drawing(text: &str, origin: &str) -> Result<OnePlaneDrawing> {
    opg::parse(text).map_err(|e| anyhow!("{origin}: {}: {e}", variant(&e)))
}

fn load(input: &str) -> Result<OnePlaneDrawing> {
    let origin = if input == "-" { "<stdin>" } else { input };
    parse_drawing(&read_input(input)?, origin)
}

fn fixture_dir() -> Option<PathBuf> {
    std::env::var_os("ONEPLANE_FIXTURES").map(PathBuf::from)
}

fn fixture(name: &str) -> Result<OnePlaneDrawing> {
    match fixture_dir() {
        Some(dir) => {
            let path = dir.join(format!("{name}.opg"));
            let text = std::fs::read_to_string(&path)
                .with_context(|| format!("reading {}", path.display()))?;
            Ok(check_fixture(name, &text)?)
        }
        None => Ok(Family::Fixture(name.to_string()).generate()?),
    }
}

fn face_class(c: FaceClass) -> String {
    match c {
        FaceClass::Fake3 => "fake3".into(),
        FaceClass::True3 => "true3".into(),
        FaceClass::True4 => "true4".into(),
        FaceClass::SingleFake4 => "single-fake4".into(),
        FaceClass::Alternating4 => "alternating4".into(),
        FaceClass::AlmostAlternating5 => "almost-alternating5".into(),
        FaceClass::Other { .. } => "other".into(),
    }
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    let v: Vec<String> = items.into_iter().map(|t| t.to_string()).collect();
    if v.is_empty() {
        "none".into()
    } else {
        v.join(",")
    }
}

struct Out {
    format: Format,
    stdout: io::StdoutLock<'static>,
}

impl Out {
    fn records(&mut self, recs: &[Record], layout: Layout) -> Result<()> {
        write_records(
            &mut self.stdout,
            recs,
            layout,
            self.format == Format::JsonLines,
        )?;
        Ok(())
    }

    /// Writes `text` in text mode, the drawing in svg mode and `recs` in json mode.
    fn drawing(&mut self, d: &OnePlaneDrawing, text: &str, recs: &[Record]) -> Result<()> {
        match self.format {
            Format::Text => self.stdout.write_all(text.as_bytes())?,
            Format::Svg => self.stdout.write_all(svg::render(d).as_bytes())?,
            Format::JsonLines => self.records(recs, Layout::Block)?,
        }
        Ok(())
    }

    fn report(&mut self, d: &OnePlaneDrawing, recs: &[Record], layout: Layout) -> Result<()> {
        if self.format == Format::Svg {
            self.stdout.write_all(svg::render(d).as_bytes())?;
            Ok(())
        } else {
            self.records(recs, layout)
        }
    }
}

fn summary(d: &OnePlaneDrawing) -> Record {
    record([
        ("n", d.n().to_string()),
        ("m", d.m().to_string()),
        ("x", d.x().to_string()),
        ("faces", d.face_count().to_string()),
        ("components", d.connectivity().to_string()),
        ("digest", digest(d)),
    ])
}

fn certify_file(path: &Path, k: u64) -> Result<Record> {
    let name = path.file_name().map_or_else(
        || path.display().to_string(),
        |f| f.to_string_lossy().into_owned(),
    );
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let d = parse_drawing(&text, &name)?;
    let cert = certify(&d, k)?;
    let mut rec = record([("file", name)]);
    rec.extend(cert.pairs().into_iter().map(|(k, v)| (k.to_string(), v)));
    Ok(rec)
}

fn run(cli: Cli) -> Result<Verdict> {
    let mut out = Out {
        format: cli.format,
        stdout: io::stdout().lock(),
    };
    match cli.command {
        Command::Validate(Input { input }) => {
            let d = load(&input)?;
            let mut rec = record([("valid", "true")]);
            rec.extend(summary(&d));
            out.report(&d, &[rec], Layout::Block)?;
        }
        Command::Invariants(Input { input }) => {
            let d = load(&input)?;
            let r = compute_invariants(&d);
            out.report(&d, &[r.pairs()], Layout::Block)?;
        }
        Command::Faces(Input { input }) => {
            let d = load(&input)?;
            let recs: Vec<Record> = (0..d.face_count() as u32)
                .map(|f| {
                    record([
                        ("face", f.to_string()),
                        ("degree", d.face_degree(f).to_string()),
                        ("fake", d.fake_count(f).to_string()),
                        ("class", face_class(classify_face(&d, f))),
                        ("walk", join(d.face_vertices(f))),
                    ])
                })
                .collect();
            out.report(&d, &recs, Layout::Rows)?;
        }
        Command::Skeleton { input, opg: as_opg } => {
            let d = load(&input.input)?;
            let s = crossing_skeleton(&d);
            let alt = alternating_vertices(&s);
            let rec = record([
                ("n", s.n().to_string()),
                ("m", s.m().to_string()),
                ("x", s.x().to_string()),
                ("faces", s.face_count().to_string()),
                (
                    "alternating4",
                    count_class(&s, FaceClass::Alternating4).to_string(),
                ),
                ("alternating_vertices", join(&alt)),
                (
                    "triangle",
                    has_clique(&AbstractGraph::of_drawing(&s), 3).to_string(),
                ),
            ]);
            if as_opg && out.format == Format::Text {
                out.stdout.write_all(opg::serialize(&s).as_bytes())?;
            } else {
                out.report(&s, &[rec], Layout::Block)?;
            }
        }
        Command::Certify { k, input, all } => {
            if let Some(dir) = all {
                let mut files: Vec<PathBuf> = std::fs::read_dir(&dir)
                    .with_context(|| format!("reading {}", dir.display()))?
                    .filter_map(|e| e.ok().map(|e| e.path()))
                    .filter(|p| p.extension().is_some_and(|x| x == "opg"))
                    .collect();
                files.sort();
                let results: Vec<Result<Record>> = std::thread::scope(|scope| {
                    let handles: Vec<_> = files
                        .iter()
                        .map(|p| scope.spawn(move || certify_file(p, k)))
                        .collect();
                    handles
                        .into_iter()
                        .map(|h| h.join().expect("certify worker panicked"))
                        .collect()
                });
                let recs = results.into_iter().collect::<Result<Vec<_>>>()?;
                let pass = recs
                    .iter()
                    .all(|r| r.iter().any(|(k, v)| k == "verdict" && v == "pass"));
                out.records(&recs, Layout::Block)?;
                return Ok(Verdict(pass));
            }
            let input = input.expect("clap requires an input without --all");
            let d = load(&input)?;
            let cert = certify(&d, k)?;
            let rec = cert
                .pairs()
                .into_iter()
                .map(|(k, v)| (k.to_string(), v))
                .collect::<Record>();
            out.report(&d, &[rec], Layout::Block)?;
            return Ok(Verdict(cert.pass));
        }
        Command::Gen { family, name, n, k } => {
            let fam = family
                .to_possible_value()
                .map(|v| v.get_name().to_string())
                .unwrap_or_default();
            let need =
                |v: Option<usize>, flag: &str| v.ok_or_else(|| anyhow!("gen {fam} needs --{flag}"));
            let d = match family {
                GenFamily::CubeG8 => Family::CubeG8.generate()?,
                GenFamily::Ladder => Family::Ladder(need(k, "k")?).generate()?,
                GenFamily::LadderPlus => ladder_plus(need(k, "k")?)?,
                GenFamily::K4Extremal => Family::K4Extremal(need(n, "n")?).generate()?,
                GenFamily::K5Optimal => Family::K5Optimal(need(n, "n")?).generate()?,
                GenFamily::Turan => {
                    Family::TuranDrawing(need(n, "n")?, need(k, "k")?).generate()?
                }
                GenFamily::Fixture => fixture(
                    name.as_deref()
                        .ok_or_else(|| anyhow!("gen fixture needs a name"))?,
                )?,
            };
            out.drawing(&d, &opg::serialize(&d), &[summary(&d)])?;
        }
        Command::Turan { n, k, exhaustive } => {
            if k < 2 {
                bail!("k must be at least 2");
            }
            let mut rec = record([
                ("n", n),
                ("k", k),
                ("turan", turan_size(n as u64, k as u64) as usize),
            ]);
            if k >= 3 && n >= 1 {
                let b = maxe_bound(n as u64, k as u64)?;
                rec.push(("maxe_1planar".into(), b.upper.to_string()));
                rec.push(("maxe_status".into(), b.tight.to_string()));
            }
            if exhaustive {
                rec.push(("exhaustive".into(), turan_exhaustive(n, k)?.to_string()));
            }
            out.records(&[rec], Layout::Block)?;
        }
        Command::Search {
            input,
            max_crossings,
            max_nodes,
        } => {
            let g = AbstractGraph::parse_edge_list(&read_input(&input)?)?;
            let limits = SearchLimits {
                max_crossings,
                max_candidates: max_nodes,
            };
            match drawing_search(&g, limits) {
                Ok(d) => {
                    let mut rec = record([("verdict", "one-planar")]);
                    rec.extend(summary(&d));
                    out.drawing(&d, &opg::serialize(&d), &[rec])?;
                }
                Err(e) => {
                    let verdict = match e {
                        SearchError::Rejected { .. }
                        | SearchError::Exhausted { complete: true, .. } => "not-one-planar",
                        SearchError::Exhausted {
                            complete: false, ..
                        } => "undecided",
                    };
                    let rec = record([("verdict", verdict.to_string()), ("reason", e.to_string())]);
                    out.records(&[rec], Layout::Block)?;
                    return Ok(Verdict(false));
                }
            }
        }
        Command::Fixtures { names } => {
            let names: Vec<String> = if names.is_empty() {
                FIXTURE_NAMES.iter().map(|s| s.to_string()).collect()
            } else {
                names
            };
            let mut ok = true;
            let mut recs = Vec::new();
            for name in names {
                let rec = match fixture(&name) {
                    Ok(d) => record([
                        ("fixture", name),
                        ("status", "ok".into()),
                        ("n", d.n().to_string()),
                        ("m", d.m().to_string()),
                        ("x", d.x().to_string()),
                    ]),
                    Err(e) => {
                        ok = false;
                        record([
                            ("fixture", name),
                            ("status", "error".into()),
                            ("reason", format!("{e:#}")),
                        ])
                    }
                };
                recs.push(rec);
            }
            out.records(&recs, Layout::Rows)?;
            return Ok(Verdict(ok));
        }
    }
    Ok(Verdict(true))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.verbose {
        eprintln!("oneplane {}", env!("CARGO_PKG_VERSION"));
    }
    match run(cli) {
        Ok(Verdict(true)) => ExitCode::SUCCESS,
        Ok(Verdict(false)) => ExitCode::from(1),
        Err(e) => {
            let _ = io::stdout().flush();
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
