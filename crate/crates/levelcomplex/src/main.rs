//! Command-line front end: every capability of the library as a
//! subcommand, with text and JSON output.

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;
use std::path::PathBuf;

use levelcomplex::canonical::HilbertSeries;
use levelcomplex::fixtures;
use levelcomplex::homology::betti_table_with_limit;
use levelcomplex::order::initial_ideal_generators;
use levelcomplex::shelling::{path_vertices, shelling_report, ShellingDirection};
use levelcomplex::{
    canonical_report, full_report, stanley_reisner_complex, verify_groebner_basis, Error,
    FieldSpec, MatrixShape, MonomialOrder, RunOptions, SimplicialComplex, VariableId,
};

/// Subset sweeps beyond this many vertices need `--force`.
const CLI_SWEEP_LIMIT: usize = 20;

#[derive(Parser)]
#[command(
    name = "levelcomplex",
    version,
    about = "Square-free initial ideals of 2-minors and their simplicial complexes"
)]
struct Cli {
    /// Worker threads (default: LEVELCOMPLEX_THREADS, then all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct ShapeArgs {
    /// Number of rows of the matrix (2 <= m <= n).
    #[arg(short, long)]
    m: u16,
    /// Number of columns of the matrix.
    #[arg(short, long)]
    n: u16,
    /// Monomial order: rows | diag | natural | perm:<file>.
    #[arg(long, default_value = "rows")]
    order: String,
}

impl ShapeArgs {
    fn shape(&self) -> Result<MatrixShape, Error> {
        MatrixShape::new(self.m, self.n)
    }

    fn monomial_order(&self) -> Result<MonomialOrder, Error> {
        match self.order.as_str() {
            "rows" => Ok(MonomialOrder::PaperRows),
            "diag" => Ok(MonomialOrder::PaperDiagonals),
            "natural" => Ok(MonomialOrder::NaturalRowMajor),
            other => {
                if let Some(path) = other.strip_prefix("perm:") {
                    let text = std::fs::read_to_string(path).map_err(|e| {
                        Error::Parse(format!("cannot read permutation file '{path}': {e}"))
                    })?;
                    MonomialOrder::custom_from_text(self.shape()?, &text)
                } else {
                    Err(Error::Parse(format!(
                        "unknown order '{other}' (expected rows, diag, natural, or perm:<file>)"
                    )))
                }
            }
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Args)]
struct OutputArgs {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write to this file instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
}

impl OutputArgs {
    fn emit(&self, content: String) -> Result<(), Error> {
        match &self.output {
            None => {
                print!("{content}");
                if !content.ends_with('\n') {
                    println!();
                }
                Ok(())
            }
            Some(path) => std::fs::write(path, content)
                .map_err(|e| Error::Parse(format!("cannot write {}: {e}", path.display()))),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Direction {
    /// Ascending facet order.
    Forward,
    /// Descending facet order.
    Backward,
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// List the facets of the complex of the initial ideal.
    Facets {
        #[command(flatten)]
        shape: ShapeArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Export the Stanley-Reisner complex (JSON interchange form).
    Complex {
        #[command(flatten)]
        shape: ShapeArgs,
        /// Restrict to the non-cone vertices.
        #[arg(long)]
        restricted: bool,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Reduce every S-polynomial of the 2-minors to verify the basis.
    GbVerify {
        #[command(flatten)]
        shape: ShapeArgs,
    },
    /// Graded Betti numbers via vertex-subset homology.
    Betti {
        #[command(flatten)]
        shape: ShapeArgs,
        /// Coefficient field: rat or a prime.
        #[arg(long, default_value = "rat")]
        field: String,
        /// Run sweeps past the vertex cap.
        #[arg(long)]
        force: bool,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Canonical module: generators, type, levelness, graded dimensions.
    Canonical {
        #[command(flatten)]
        shape: ShapeArgs,
        #[arg(long, default_value = "rat")]
        field: String,
        /// Largest degree in the graded dimension listings (default n).
        #[arg(long)]
        upto: Option<usize>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Decide levelness (canonical module and, if feasible, Betti table).
    Level {
        #[command(flatten)]
        shape: ShapeArgs,
        #[arg(long, default_value = "rat")]
        field: String,
        /// Run the Betti check past the vertex cap.
        #[arg(long)]
        force: bool,
    },
    /// Hilbert series of the ring and of its canonical module.
    Hilbert {
        #[command(flatten)]
        shape: ShapeArgs,
        /// Largest degree to expand (default n).
        #[arg(long)]
        upto: Option<usize>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Order the facets and verify the shelling in one or both directions.
    Shelling {
        #[command(flatten)]
        shape: ShapeArgs,
        #[arg(long, value_enum, default_value_t = Direction::Both)]
        direction: Direction,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Full structural report.
    Report {
        #[command(flatten)]
        shape: ShapeArgs,
        #[arg(long, default_value = "rat")]
        field: String,
        #[arg(long)]
        upto: Option<usize>,
        /// Run sweeps past the vertex cap.
        #[arg(long)]
        force: bool,
        /// Skip the S-polynomial reduction.
        #[arg(long)]
        skip_gb: bool,
        /// Skip the Betti sweep.
        #[arg(long)]
        skip_betti: bool,
        /// Skip the shelling checks.
        #[arg(long)]
        skip_shelling: bool,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Embedded reference tables.
    Fixtures {
        #[command(subcommand)]
        action: FixturesAction,
    },
}

#[derive(Subcommand)]
enum FixturesAction {
    /// List the available reference tables.
    List,
    /// Print one reference table.
    Show {
        /// Fixture identifier (see `fixtures list`).
        id: String,
        #[command(flatten)]
        out: OutputArgs,
    },
}

fn restricted_complex(
    shape: MatrixShape,
    order: &MonomialOrder,
) -> Result<(SimplicialComplex, Vec<VariableId>), Error> {
    let generators = initial_ideal_generators(shape, order)?;
    let full = stanley_reisner_complex(shape, &generators)?;
    let cone = full.cone_points();
    let keep: Vec<VariableId> = full
        .vertices()
        .iter()
        .copied()
        .filter(|v| !cone.contains(v))
        .collect();
    Ok((full.restrict(&keep)?, cone))
}

fn parse_field(text: &str) -> Result<FieldSpec, Error> {
    FieldSpec::parse(text)
}

fn run(command: Command) -> Result<i32, Error> {
    match command {
        Command::Facets { shape, out } => {
            let sh = shape.shape()?;
            let order = shape.monomial_order()?;
            let (complex, cone) = restricted_complex(sh, &order)?;
            // Prefer the shelling order when every facet is a path.
            let facets: Vec<Vec<VariableId>> = match complex
                .facets()
                .iter()
                .map(|&f| path_vertices(&complex, f))
                .collect::<Result<Vec<_>, _>>()
            {
                Ok(_) => {
                    let ordered = levelcomplex::shelling::shelling_order(
                        &complex,
                        ShellingDirection::Ascending,
                    );
                    ordered
                        .iter()
                        .map(|&f| path_vertices(&complex, f).expect("checked above"))
                        .collect()
                }
                Err(_) => complex
                    .facets()
                    .iter()
                    .map(|&f| complex.face_vertices(f))
                    .collect(),
            };
            match out.format {
                Format::Json => {
                    let doc = json!({
                        "m": sh.m(),
                        "n": sh.n(),
                        "order": order.label(),
                        "cone_points": cone.iter().map(|v| [v.row, v.col]).collect::<Vec<_>>(),
                        "num_facets": facets.len(),
                        "facets": facets
                            .iter()
                            .map(|f| f.iter().map(|v| [v.row, v.col]).collect::<Vec<_>>())
                            .collect::<Vec<_>>(),
                    });
                    out.emit(serde_json::to_string_pretty(&doc).expect("serializable"))?;
                }
                _ => {
                    let mut text = String::new();
                    for f in &facets {
                        let cells: Vec<String> =
                            f.iter().map(|v| format!("({},{})", v.row, v.col)).collect();
                        text.push_str(&format!("{{{}}}\n", cells.join(",")));
                    }
                    text.push_str(&format!("{} facets\n", facets.len()));
                    out.emit(text)?;
                }
            }
            Ok(0)
        }
        Command::Complex { shape, restricted, out } => {
            let sh = shape.shape()?;
            let order = shape.monomial_order()?;
            let complex = if restricted {
                restricted_complex(sh, &order)?.0
            } else {
                let generators = initial_ideal_generators(sh, &order)?;
                stanley_reisner_complex(sh, &generators)?
            };
            let doc = complex.to_json();
            out.emit(serde_json::to_string_pretty(&doc).expect("serializable"))?;
            Ok(0)
        }
        Command::GbVerify { shape } => {
            let sh = shape.shape()?;
            let order = shape.monomial_order()?;
            let report = verify_groebner_basis(sh, &order)?;
            println!(
                "{} S-pairs checked, {}",
                report.pairs_checked,
                if report.is_groebner_basis() {
                    "all reduced to zero".to_string()
                } else {
                    format!("{} FAILED to reduce", report.failing_pairs.len())
                }
            );
            Ok(if report.is_groebner_basis() { 0 } else { 1 })
        }
        Command::Betti { shape, field, force, out } => {
            let sh = shape.shape()?;
            let order = shape.monomial_order()?;
            let field = parse_field(&field)?;
            let (complex, _) = restricted_complex(sh, &order)?;
            let nv = complex.vertices().len();
            if nv > CLI_SWEEP_LIMIT && !force {
                return Err(Error::SweepGuard { vertices: nv, limit: CLI_SWEEP_LIMIT });
            }
            let table = betti_table_with_limit(&complex, field, nv.max(CLI_SWEEP_LIMIT))?;
            let rendered = match out.format {
                Format::Text => table.render_text(),
                Format::Csv => table.render_csv(),
                Format::Json => {
                    serde_json::to_string_pretty(&table.to_json()).expect("serializable")
                }
            };
            out.emit(rendered)?;
            Ok(0)
        }
        Command::Canonical { shape, field, upto, out } => {
            let sh = shape.shape()?;
            let order = shape.monomial_order()?;
            let field = parse_field(&field)?;
            let (complex, cone) = restricted_complex(sh, &order)?;
            let upto = upto.unwrap_or(sh.n() as usize);
            let report = canonical_report(&complex, field, upto, cone.len());
            match out.format {
                Format::Json => {
                    let dims_object = |dims: &[u64]| -> serde_json::Value {
                        dims.iter()
                            .enumerate()
                            .map(|(deg, &v)| (deg.to_string(), json!(v)))
                            .collect::<serde_json::Map<_, _>>()
                            .into()
                    };
                    let doc = json!({
                        "generators": report
                            .generators
                            .iter()
                            .map(|(cells, _)| {
                                cells.iter().map(|v| [v.row, v.col]).collect::<Vec<_>>()
                            })
                            .collect::<Vec<_>>(),
                        "degrees": report.degrees,
                        "type": report.module_type,
                        "a_invariant": report.a_invariant_reduced,
                        "a_invariant_ambient": report.a_invariant_ambient,
                        "level": report.level,
                        "gorenstein": report.gorenstein,
                        "cohen_macaulay": report.cohen_macaulay,
                        "omega_dims": dims_object(&report.omega_dims),
                        "omega_dims_paper_rule": dims_object(&report.omega_dims_power_rule),
                        "notes": report.notes,
                    });
                    out.emit(serde_json::to_string_pretty(&doc).expect("serializable"))?;
                }
                _ => {
                    let mut text = String::new();
                    text.push_str(&format!(
                        "canonical module of the {}x{} case, order {}, field {field}\n",
                        sh.m(),
                        sh.n(),
                        order.label()
                    ));
                    text.push_str(&format!("generators ({}):\n", report.generators.len()));
                    for (cells, d) in &report.generators {
                        let parts: Vec<String> =
                            cells.iter().map(|v| format!("({},{})", v.row, v.col)).collect();
                        text.push_str(&format!("  {{{}}} multiplicity {d}\n", parts.join(",")));
                    }
                    text.push_str(&format!("degrees: {:?}\n", report.degrees));
                    text.push_str(&format!("type: {}\n", report.module_type));
                    text.push_str(&format!(
                        "cohen-macaulay: {}  level: {}  gorenstein: {}\n",
                        report.cohen_macaulay, report.level, report.gorenstein
                    ));
                    text.push_str(&format!(
                        "expected generator set: {}\n",
                        if report.matches_expected_generators { "match" } else { "MISMATCH" }
                    ));
                    text.push_str(&format!(
                        "a-invariant: {} reduced, {} ambient\n",
                        report.a_invariant_reduced, report.a_invariant_ambient
                    ));
                    text.push_str(&format!("graded dims 0..={upto}: {:?}\n", report.omega_dims));
                    text.push_str(&format!(
                        "graded dims, power rule: {:?}\n",
                        report.omega_dims_power_rule
                    ));
                    if !report.omega_dims_series.is_empty() {
                        text.push_str(&format!(
                            "graded dims, series duality: {:?}\n",
                            report.omega_dims_series
                        ));
                    }
                    for note in &report.notes {
                        text.push_str(&format!("note: {note}\n"));
                    }
                    out.emit(text)?;
                }
            }
            Ok(0)
        }
        Command::Level { shape, field, force } => {
            let sh = shape.shape()?;
            let order = shape.monomial_order()?;
            let field = parse_field(&field)?;
            let (complex, cone) = restricted_complex(sh, &order)?;
            let report = canonical_report(&complex, field, sh.n() as usize, cone.len());
            println!(
                "canonical module: generators in degrees {:?} -> {}",
                report.degrees,
                if report.level { "level" } else { "not level" }
            );
            let nv = complex.vertices().len();
            let mut verdicts = vec![report.level];
            if nv <= CLI_SWEEP_LIMIT || force {
                let table = betti_table_with_limit(&complex, field, nv.max(CLI_SWEEP_LIMIT))?;
                let by_table = table.last_column_single_degree();
                println!(
                    "betti table: last column degrees -> {}",
                    if by_table { "level" } else { "not level" }
                );
                verdicts.push(by_table);
            } else {
                println!("betti check skipped ({nv} vertices; pass --force to run)");
            }
            Ok(if verdicts.iter().all(|&v| v) { 0 } else { 1 })
        }
        Command::Hilbert { shape, upto, out } => {
            let sh = shape.shape()?;
            let order = shape.monomial_order()?;
            let (complex, _) = restricted_complex(sh, &order)?;
            let upto = upto.unwrap_or(sh.n() as usize);
            let hs = HilbertSeries::from_f_vector(&complex.f_vector());
            let dual = hs.canonical_dual();
            match out.format {
                Format::Json => {
                    let doc = json!({
                        "m": sh.m(),
                        "n": sh.n(),
                        "order": order.label(),
                        "ring": {
                            "numerator": hs.numerator,
                            "denominator_power": hs.denominator_power,
                            "coefficients": hs.coefficients(upto),
                        },
                        "canonical_module": {
                            "numerator": dual.numerator,
                            "denominator_power": dual.denominator_power,
                            "coefficients": dual.coefficients(upto),
                        },
                    });
                    out.emit(serde_json::to_string_pretty(&doc).expect("serializable"))?;
                }
                _ => {
                    let mut text = String::new();
                    text.push_str(&format!(
                        "ring:      numerator {:?} over (1-t)^{}\n",
                        hs.numerator, hs.denominator_power
                    ));
                    text.push_str(&format!(
                        "           dims 0..={upto}: {:?}\n",
                        hs.coefficients(upto)
                    ));
                    text.push_str(&format!(
                        "canonical: numerator {:?} over (1-t)^{}\n",
                        dual.numerator, dual.denominator_power
                    ));
                    text.push_str(&format!(
                        "           dims 0..={upto}: {:?}\n",
                        dual.coefficients(upto)
                    ));
                    out.emit(text)?;
                }
            }
            Ok(0)
        }
        Command::Shelling { shape, direction, out } => {
            let sh = shape.shape()?;
            let order = shape.monomial_order()?;
            let (complex, _) = restricted_complex(sh, &order)?;
            let directions: Vec<ShellingDirection> = match direction {
                Direction::Forward => vec![ShellingDirection::Ascending],
                Direction::Backward => vec![ShellingDirection::Descending],
                Direction::Both => {
                    vec![ShellingDirection::Ascending, ShellingDirection::Descending]
                }
            };
            let mut all_valid = true;
            let mut texts = Vec::new();
            let mut docs = Vec::new();
            for d in directions {
                let report = shelling_report(&complex, d)?;
                all_valid &= report.valid
                    && report.partition_mismatch_steps.is_empty()
                    && report.partition_predicts_attachment;
                match out.format {
                    Format::Json => docs.push(serde_json::to_value(&report).map_err(|e| {
                        Error::Parse(format!("serialize: {e}"))
                    })?),
                    _ => {
                        let label = match report.direction {
                            ShellingDirection::Ascending => "Forward",
                            ShellingDirection::Descending => "Backward",
                        };
                        let mut text = format!(
                            "{label}: {} ({} facets, h-vector {:?})\n",
                            if report.valid { "valid shelling" } else { "NOT a shelling" },
                            report.order.len(),
                            report.h_vector
                        );
                        text.push_str(&format!(
                            "  restriction faces match the vertex partition: {}\n",
                            report.partition_mismatch_steps.is_empty()
                        ));
                        text.push_str(&format!(
                            "  partition predicts attachment faces: {}\n",
                            report.partition_predicts_attachment
                        ));
                        texts.push(text);
                    }
                }
            }
            match out.format {
                Format::Json => out.emit(
                    serde_json::to_string_pretty(&serde_json::Value::Array(docs))
                        .expect("serializable"),
                )?,
                _ => out.emit(texts.join(""))?,
            }
            Ok(if all_valid { 0 } else { 1 })
        }
        Command::Report {
            shape,
            field,
            upto,
            force,
            skip_gb,
            skip_betti,
            skip_shelling,
            out,
        } => {
            let sh = shape.shape()?;
            let order = shape.monomial_order()?;
            let field = parse_field(&field)?;
            let sweep_limit = if force { 64 } else { CLI_SWEEP_LIMIT };
            let opts = RunOptions {
                field,
                upto,
                sweep_limit,
                with_groebner: !skip_gb,
                with_betti: !skip_betti,
                with_shelling: !skip_shelling,
            };
            let report = full_report(sh, &order, &opts)?;
            match out.format {
                Format::Json => out.emit(
                    serde_json::to_string_pretty(&report.to_json()).expect("serializable"),
                )?,
                _ => out.emit(report.render_text())?,
            }
            let healthy = report.groebner.map_or(true, |(_, ok)| ok)
                && report.quasimanifold.is_quasimanifold
                && report.betti_facts.iter().all(|f| f.passed)
                && report
                    .shelling_ascending
                    .as_ref()
                    .map_or(true, |r| r.valid)
                && report
                    .shelling_descending
                    .as_ref()
                    .map_or(true, |r| r.valid);
            Ok(if healthy { 0 } else { 1 })
        }
        Command::Fixtures { action } => match action {
            FixturesAction::List => {
                for f in fixtures::all_fixtures() {
                    println!(
                        "{:14} {}x{:<3} {}",
                        f.id,
                        f.shape.m(),
                        f.shape.n(),
                        f.description
                    );
                }
                Ok(0)
            }
            FixturesAction::Show { id, out } => {
                let Some(f) = fixtures::fixture(&id) else {
                    return Err(Error::Parse(format!(
                        "no fixture '{id}' (see `fixtures list`)"
                    )));
                };
                let rendered = match out.format {
                    Format::Text => {
                        format!("{} ({})\n{}", f.id, f.description, f.table.render_text())
                    }
                    Format::Csv => f.table.render_csv(),
                    Format::Json => {
                        serde_json::to_string_pretty(&f.table.to_json()).expect("serializable")
                    }
                };
                out.emit(rendered)?;
                Ok(0)
            }
        },
    }
}

fn main() {
    let cli = Cli::parse();
    levelcomplex::workers::configure_threads(cli.threads);
    match run(cli.command) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(2);
        }
    }
}
