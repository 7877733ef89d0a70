use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use e8grade::checks;
use e8grade::format::{self, to_json};
use e8grade::helix_file::HelixFile;
use e8grade::CliError;
use e8grade_core::{
    appendix_counts, build_grading, curve_classes, dims_table, gu_generators, orbit_decompose,
    quiver, validate_helix_period, GradingLabel,
};

#[derive(Parser)]
#[command(
    name = "e8grade",
    version,
    about = "Z_d-gradings of E8 and del Pezzo helix arithmetic"
)]
struct Cli {
    /// Output format; defaults to tsv for tables and json elsewhere
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Write output to a file instead of standard output
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Tsv,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Roots normalised into the degree window of a grading
    Roots {
        #[arg(value_parser = parse_label)]
        label: GradingLabel,
        #[arg(long)]
        m: Option<i64>,
    },
    /// Graded components, lifted weights and the U-duality algebra
    Grading {
        #[arg(value_parser = parse_label)]
        label: GradingLabel,
    },
    /// Weyl-group orbits of the lifted weights in degree m
    Orbits {
        #[arg(value_parser = parse_label)]
        label: GradingLabel,
        #[arg(long)]
        m: i64,
    },
    /// Rational curve classes (-K)·β = m, β² = m - 2
    Curves {
        #[arg(value_parser = parse_label)]
        label: GradingLabel,
        #[arg(long)]
        m: Option<i64>,
    },
    /// Test whether a Picard class is helical
    Helical {
        #[arg(value_parser = parse_label)]
        label: GradingLabel,
        /// JSON array of coordinates, e.g. [1,-1,0,0,0,0]
        #[arg(allow_hyphen_values = true)]
        vector: String,
        /// Read the vector as [x, y] over (f_1, f_2) (label 8b only)
        #[arg(long)]
        hyperbolic: bool,
    },
    /// Helix period files
    Helix {
        #[command(subcommand)]
        action: HelixAction,
    },
    /// Representation dimension and shape-count tables
    Table {
        #[arg(value_enum)]
        which: TableKind,
    },
    /// Run every registered check
    Verify {
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum HelixAction {
    /// Validate a helix period
    Check { file: PathBuf },
    /// Quiver of a valid helix period
    Quiver {
        file: PathBuf,
        #[arg(long)]
        dot: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum TableKind {
    Dims,
    OrbitCounts,
}

fn parse_label(s: &str) -> Result<GradingLabel, String> {
    s.parse().map_err(|e: e8grade_core::Error| e.to_string())
}

fn parse_vector(s: &str) -> Result<Vec<i64>, CliError> {
    let trimmed = s.trim();
    if trimmed.starts_with('[') {
        return Ok(serde_json::from_str(trimmed)?);
    }
    trimmed
        .split(',')
        .map(|x| {
            x.trim()
                .parse()
                .map_err(|_| CliError::Input(format!("bad coordinate {x:?}")))
        })
        .collect()
}

/// Emitted document plus whether a verification step failed.
struct Output {
    text: String,
    failed: bool,
}

impl From<String> for Output {
    fn from(text: String) -> Self {
        Output {
            text,
            failed: false,
        }
    }
}

fn require_json(format: Option<Format>) -> Result<(), CliError> {
    match format {
        None | Some(Format::Json) => Ok(()),
        Some(_) => Err(CliError::Usage("this command only emits json".into())),
    }
}

fn run(cli: &Cli) -> Result<Output, CliError> {
    let format = cli.format;
    match &cli.command {
        Command::Roots { label, m } => {
            require_json(format)?;
            let g = build_grading(*label);
            Ok(to_json(&format::roots_doc(&g, *m))?.into())
        }
        Command::Grading { label } => {
            require_json(format)?;
            Ok(to_json(&format::grading_doc(&build_grading(*label)))?.into())
        }
        Command::Orbits { label, m } => {
            require_json(format)?;
            let d = label.d();
            if !(1..d).contains(m) {
                return Err(CliError::Usage(format!("--m must lie in [1, {}]", d - 1)));
            }
            let g = build_grading(*label);
            let dec = orbit_decompose(g.beta_weights(*m), &gu_generators(*label))?;
            let doc = format::OrbitsDoc {
                label: label.to_string(),
                m: *m,
                orbits: dec
                    .orbits
                    .iter()
                    .map(|o| o.iter().map(|v| format::picard(*label, v)).collect())
                    .collect(),
            };
            Ok(to_json(&doc)?.into())
        }
        Command::Curves { label, m } => {
            require_json(format)?;
            let degrees: Vec<i64> = match m {
                Some(m) => vec![*m],
                None => (0..=label.d()).collect(),
            };
            let docs = degrees
                .into_iter()
                .map(|m| Ok(format::curves_doc(*label, m, &curve_classes(*label, m)?)))
                .collect::<Result<Vec<_>, CliError>>()?;
            let text = match (m, docs.as_slice()) {
                (Some(_), [one]) => to_json(one)?,
                _ => to_json(&docs)?,
            };
            Ok(text.into())
        }
        Command::Helical {
            label,
            vector,
            hyperbolic,
        } => {
            require_json(format)?;
            let coords = parse_vector(vector)?;
            let beta = if *hyperbolic {
                format::parse_hyperbolic(*label, &coords)?
            } else {
                format::parse_picard(*label, &coords)?
            };
            Ok(to_json(&format::helical_doc(*label, &beta)?)?.into())
        }
        Command::Helix { action } => match action {
            HelixAction::Check { file } => {
                require_json(format)?;
                let period = HelixFile::read(file)?.to_period()?;
                let report = validate_helix_period(&period);
                Ok(Output {
                    text: to_json(&format::helix_check_doc(period.label, &report))?,
                    failed: !report.is_valid(),
                })
            }
            HelixAction::Quiver { file, dot } => {
                let period = HelixFile::read(file)?.to_period()?;
                let q = quiver(&period)?;
                let as_dot = *dot || format == Some(Format::Dot);
                if format == Some(Format::Tsv) {
                    return Err(CliError::Usage("quiver output is json or dot".into()));
                }
                Ok(if as_dot {
                    format::quiver_dot(&q)
                } else {
                    to_json(&format::quiver_doc(period.label, &q))?
                }
                .into())
            }
        },
        Command::Table { which } => {
            let json = match format {
                None | Some(Format::Tsv) => false,
                Some(Format::Json) => true,
                Some(Format::Dot) => return Err(CliError::Usage("tables are tsv or json".into())),
            };
            let text = match which {
                TableKind::Dims => {
                    let rows = dims_table();
                    if json {
                        let docs: Vec<_> = rows
                            .iter()
                            .map(|r| format::DimsRowDoc {
                                label: r.label.to_string(),
                                dims: r.dims.clone(),
                            })
                            .collect();
                        to_json(&docs)?
                    } else {
                        format::dims_tsv(&rows)
                    }
                }
                TableKind::OrbitCounts => {
                    use GradingLabel::*;
                    let mut docs = Vec::new();
                    for label in [D2, D3, D4, D5, D6, D7, D8a] {
                        docs.extend(format::orbit_count_docs(label, &appendix_counts(label)?));
                    }
                    if json {
                        to_json(&docs)?
                    } else {
                        format::orbit_counts_tsv(&docs)
                    }
                }
            };
            Ok(text.into())
        }
        Command::Verify { json } => {
            let results = checks::run_all();
            let failed = results.iter().any(|(_, o)| !o.pass);
            let text = if *json || format == Some(Format::Json) {
                let map: serde_json::Map<String, serde_json::Value> = results
                    .iter()
                    .map(|(c, o)| {
                        (
                            c.name.to_string(),
                            serde_json::to_value(o).expect("plain struct"),
                        )
                    })
                    .collect();
                to_json(&map)?
            } else {
                let mut s = String::new();
                for (c, o) in &results {
                    let status = if o.pass { "PASS" } else { "FAIL" };
                    s.push_str(&format!("{status} {:02} {}: {}\n", c.id, c.name, o.details));
                }
                let passed = results.iter().filter(|(_, o)| o.pass).count();
                s.push_str(&format!("{passed}/{} checks passed\n", results.len()));
                s
            };
            Ok(Output { text, failed })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return ExitCode::SUCCESS;
            }
            let rendered = e.to_string();
            let first = rendered
                .lines()
                .next()
                .unwrap_or_default()
                .trim_start_matches("error: ");
            eprintln!("error[usage]: {first}");
            return ExitCode::from(2);
        }
    };

    let out = match run(&cli) {
        Ok(out) => out,
        Err(e) => {
            eprintln!("error[{}]: {e}", e.tag());
            return ExitCode::from(2);
        }
    };

    let written = match &cli.output {
        Some(path) => std::fs::write(path, &out.text),
        None => std::io::stdout().write_all(out.text.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error[io]: {e}");
        return ExitCode::from(2);
    }
    if out.failed {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}
