use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Parser, Subcommand, ValueEnum};

use sdlift::constructions::{gen_matrix, ConstructionId, FirstRows};
use sdlift::r1ring::parse_r1_vector;
use sdlift::records::{CodeRecord, RecordFile, RingKind, TOOL_VERSION};
use sdlift::searchlift::{dedup_by_fingerprint, lift_code, search_binary, LiftConfig, LiftMode, SearchConfig};
use sdlift::{check_selfdual_blocks, fixtures, report, verify, R1};

#[derive(Parser)]
#[command(name = "sdlift", version, about = "Self-dual codes from composite group-ring matrices")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print [I | Omega] for the given first rows and check self-duality.
    Construct {
        #[arg(long = "matrix")]
        matrix: ConstructionId,
        #[arg(long = "rB", allow_hyphen_values = true)]
        r_b: String,
        #[arg(long = "rC", allow_hyphen_values = true)]
        r_c: String,
        #[arg(long = "rD", allow_hyphen_values = true)]
        r_d: Option<String>,
        #[arg(long, default_value = "f2")]
        ring: Ring,
    },
    /// Re-derive the parameters of every record in a file.
    Verify { file: PathBuf },
    /// Random search for binary self-dual [36,18] codes.
    Search {
        #[arg(long = "matrix")]
        matrix: ConstructionId,
        #[arg(long, default_value_t = 6)]
        target_d: usize,
        #[arg(long)]
        budget: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, env = "SDLIFT_SHARDS")]
        shards: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Lift the binary records of a file over R1.
    Lift {
        #[arg(long = "in")]
        input: PathBuf,
        /// Lift only this record.
        #[arg(long)]
        id: Option<String>,
        /// `exhaustive` or `sampled:N`.
        #[arg(long, default_value = "exhaustive")]
        mode: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 12)]
        min_d: usize,
        #[arg(long, env = "SDLIFT_SHARDS")]
        shards: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Render records as a table.
    Report {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Keep one record per (n, k, d, family, gamma, beta).
        #[arg(long)]
        dedup: bool,
    },
    /// Write the published codes as a record file.
    Fixtures {
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Ring {
    F2,
    R1,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Csv,
}

/// Failure classes mapped to exit codes.
enum Failure {
    Usage(anyhow::Error),
    Mismatch,
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Usage(e)
    }
}

fn default_shards(flag: Option<usize>) -> usize {
    flag.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
}

fn read_records(path: &Path) -> anyhow::Result<RecordFile> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    RecordFile::parse(&text).with_context(|| format!("parsing {}", path.display()))
}

fn emit(out: Option<&Path>, text: &str) -> anyhow::Result<()> {
    match out {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => std::io::stdout().write_all(text.as_bytes()).context("writing stdout"),
    }
}

fn provenance(file: &mut RecordFile, command: &str, seed: Option<u64>) {
    file.header_extra.insert("command".into(), command.into());
    if let Some(s) = seed {
        file.header_extra.insert("seed".into(), s.into());
    }
    file.header_extra.insert("tool_version".into(), TOOL_VERSION.into());
}

fn parse_row(flag: &str, text: &str) -> anyhow::Result<Vec<R1>> {
    parse_r1_vector(text).map_err(|e| anyhow!("--{flag}: {e}"))
}

fn construct(matrix: ConstructionId, rows: Vec<(&str, &str)>, ring: Ring) -> Result<(), Failure> {
    let parsed = rows.iter().map(|(f, t)| parse_row(f, t)).collect::<anyhow::Result<Vec<_>>>()?;
    let fr = FirstRows::new(matrix, parsed).map_err(anyhow::Error::from)?;
    let ring = match ring {
        Ring::F2 if fr.alphas().iter().any(|x| x.b) => {
            return Err(anyhow!("u appears in the rows; pass --ring r1").into());
        }
        Ring::F2 => RingKind::F2,
        Ring::R1 => RingKind::R1,
    };
    let g = gen_matrix(&fr.omega()).map_err(anyhow::Error::from)?;
    for row in g.iter_rows() {
        let line: Vec<&str> = row.iter().map(|x| x.token()).collect();
        match ring {
            RingKind::F2 => println!("{}", line.concat()),
            RingKind::R1 => println!("{}", line.join(" ")),
        }
    }
    let report = check_selfdual_blocks(&fr);
    println!("{report}");
    let mut rec = CodeRecord::new(format!("{matrix}-cli"), &fr, ring);
    if report.holds() {
        rec.params = match ring {
            RingKind::F2 => Some(sdlift::analyze(&sdlift::BitMatrix::from_dense(&g.map(|x| x.project())))),
            RingKind::R1 => Some(sdlift::analyze(&sdlift::R1Matrix::from_dense(&g).gray_image_generator())),
        }
        .transpose()
        .map_err(anyhow::Error::from)?;
    }
    let mut file = RecordFile::new(vec![rec]);
    provenance(&mut file, "construct", None);
    print!("{}", file.to_text());
    if report.holds() {
        Ok(())
    } else {
        Err(Failure::Mismatch)
    }
}

fn verify_cmd(path: &Path) -> Result<(), Failure> {
    let file = read_records(path)?;
    if file.records.is_empty() {
        eprintln!("warning: {} contains no records", path.display());
        return Ok(());
    }
    let verdicts = verify::verify_file(&file);
    let bad = verdicts.iter().filter(|v| !v.passed()).count();
    for v in &verdicts {
        println!("{v}");
    }
    println!("{} records, {} verified, {bad} mismatched ({TOOL_VERSION})", verdicts.len(), verdicts.len() - bad);
    if bad == 0 {
        Ok(())
    } else {
        Err(Failure::Mismatch)
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Construct { matrix, r_b, r_c, r_d, ring } => {
            let mut rows = vec![("rB", r_b.as_str()), ("rC", r_c.as_str())];
            if let Some(d) = &r_d {
                rows.push(("rD", d));
            }
            construct(matrix, rows, ring)
        }
        Command::Verify { file } => verify_cmd(&file),
        Command::Search { matrix, target_d, budget, seed, shards, out } => {
            let cfg = SearchConfig { shards: default_shards(shards), ..SearchConfig::new(matrix, target_d, budget, seed) };
            let recs = search_binary(&cfg).map_err(anyhow::Error::from)?;
            eprintln!("{} records from {budget} trials", recs.len());
            let mut file = RecordFile::new(recs);
            provenance(&mut file, "search", Some(seed));
            Ok(emit(out.as_deref(), &file.to_text())?)
        }
        Command::Lift { input, id, mode, seed, min_d, shards, out } => {
            let mode: LiftMode = mode.parse().map_err(anyhow::Error::from)?;
            let file = read_records(&input)?;
            let bases: Vec<&CodeRecord> = file
                .records
                .iter()
                .filter(|r| r.ring == RingKind::F2 && id.as_ref().map_or(true, |i| &r.id == i))
                .collect();
            if bases.is_empty() {
                return Err(anyhow!("no matching binary records in {}", input.display()).into());
            }
            let mut all = Vec::new();
            for base in bases {
                let cfg = LiftConfig {
                    shards: default_shards(shards),
                    min_d,
                    ..LiftConfig::new(base.clone(), mode, seed)
                };
                let lifts = lift_code(&cfg).map_err(anyhow::Error::from)?;
                eprintln!("{}: {} lifts", base.id, lifts.len());
                all.push(base.clone());
                all.extend(lifts);
            }
            let mut file = RecordFile::new(all);
            provenance(&mut file, "lift", Some(seed));
            Ok(emit(out.as_deref(), &file.to_text())?)
        }
        Command::Report { input, format, dedup } => {
            let file = read_records(&input)?;
            let recs = if dedup { dedup_by_fingerprint(&file.records) } else { file.records };
            let text = match format {
                Format::Text => report::to_text(&recs),
                Format::Csv => report::to_csv(&recs),
            };
            Ok(emit(None, &text)?)
        }
        Command::Fixtures { out } => {
            let mut file = fixtures::all_records();
            provenance(&mut file, "fixtures", None);
            Ok(emit(out.as_deref(), &file.to_text())?)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Mismatch) => ExitCode::from(1),
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

