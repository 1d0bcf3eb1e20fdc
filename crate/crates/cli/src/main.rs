//! Command-line interface for the homology digraph engine.
//!
//! Exit codes: 0 on success or a passing verification, 1 when a verification
//! check fails, 2 on input errors (including unmet theorem hypotheses).

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use dirhom::digraph::{
    brute_force_digraph, homology_digraph, homology_digraph_pair, induced_digraph_morphism,
    relative_kunneth, verify_connecting, verify_coproduct, verify_excision, verify_kunneth,
};
use dirhom::doc::SpaceDocument;
use dirhom::homology::SpaceHomology;
use dirhom::models;
use dirhom::report::{
    check_document, digraph_report, homology_report, render_check_table, render_digraph_table,
    render_homology_table, to_json, ReportOptions,
};
use dirhom::space::{FinitePreorderedSpace, PointMap, PointSet};
use dirhom::{Error, Field, Gf2, GfPrime, Mode, Rationals};

#[derive(Parser)]
#[command(
    name = "dirhom",
    version,
    about = "Homology digraphs of finite preordered spaces"
)]
struct Cli {
    /// Coefficient field: gf2, gf:<p>, or rational
    #[arg(long, global = true, default_value = "gf2")]
    field: String,
    /// Output form
    #[arg(long, global = true, value_enum, default_value_t = OutputMode::Table)]
    output: OutputMode,
    /// Include the witness list in digraph reports
    #[arg(long, global = true)]
    witnesses: bool,
    /// Truncate reports above this degree
    #[arg(long, global = true)]
    max_degree: Option<i64>,
    /// Point-count cap for the brute-force oracle
    #[arg(long, global = true, default_value_t = 10)]
    oracle_cap: usize,
    /// Seed recorded in structured reports
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputMode {
    Table,
    Structured,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and validate a space document
    Validate { file: PathBuf },
    /// Betti numbers and representative cycles
    Homology { file: PathBuf },
    /// Homology digraph of a space
    Digraph { file: PathBuf },
    /// Homology digraph of a pair (the document must carry a subset)
    DigraphPair { file: PathBuf },
    /// Product space document
    Product {
        left: PathBuf,
        right: PathBuf,
        #[arg(long)]
        name: Option<String>,
    },
    /// Coproduct space document
    Coproduct {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        #[arg(long)]
        name: Option<String>,
    },
    /// Wedge of two based spaces at direction-minimal basepoints
    Wedge {
        left: PathBuf,
        right: PathBuf,
        #[arg(long)]
        base_left: String,
        #[arg(long)]
        base_right: String,
        #[arg(long)]
        name: Option<String>,
    },
    /// Verify the product compatibility of two space digraphs
    KunnethCheck { left: PathBuf, right: PathBuf },
    /// Verify the relative product compatibility of two pairs with open subsets
    RelativeKunnethCheck { left: PathBuf, right: PathBuf },
    /// Verify excision of a subset U of the pair subset
    ExcisionCheck {
        file: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        excise: Vec<String>,
    },
    /// Verify that the connecting homomorphism respects the pointing relations
    ConnectingCheck { file: PathBuf },
    /// Verify the coproduct compatibility of several space digraphs
    CoproductCheck {
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Verify that a monotone continuous map induces a digraph morphism
    MapCheck {
        source: PathBuf,
        target: PathBuf,
        /// Point assignments source=target, separated by semicolons
        #[arg(long, value_delimiter = ';', required = true)]
        map: Vec<String>,
    },
    /// Compare the concept-based digraph against the brute-force oracle
    OracleCompare { file: PathBuf },
    /// Evaluate the expected facts of every bundled fixture
    Fixtures {
        /// Write the fixture space documents into this directory
        #[arg(long)]
        export: Option<PathBuf>,
    },
}

enum FieldSpec {
    Gf2,
    Prime(u64),
    Rational,
}

fn parse_field(text: &str) -> Result<FieldSpec, Error> {
    match text {
        "gf2" => Ok(FieldSpec::Gf2),
        "rational" => Ok(FieldSpec::Rational),
        other => {
            if let Some(p) = other.strip_prefix("gf:") {
                let p: u64 = p
                    .parse()
                    .map_err(|_| Error::Parse(format!("invalid field modulus '{p}'")))?;
                Ok(FieldSpec::Prime(p))
            } else {
                Err(Error::Parse(format!(
                    "unknown field '{other}' (expected gf2, gf:<p>, or rational)"
                )))
            }
        }
    }
}

fn load(path: &Path) -> Result<(SpaceDocument, FinitePreorderedSpace, Option<PointSet>), Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    let doc = SpaceDocument::parse(&text).map_err(|e| match e {
        Error::Parse(msg) => Error::Parse(format!("{}: {msg}", path.display())),
        other => other,
    })?;
    let (space, subset) = doc.build()?;
    Ok((doc, space, subset))
}

fn load_space(path: &Path) -> Result<(SpaceDocument, FinitePreorderedSpace), Error> {
    let (doc, space, subset) = load(path)?;
    if subset.map(|s| !s.is_empty()).unwrap_or(false) {
        return Err(Error::Parse(format!(
            "{}: document carries a pair subset; this command works on plain spaces",
            path.display()
        )));
    }
    Ok((doc, space))
}

fn load_pair(path: &Path) -> Result<(SpaceDocument, FinitePreorderedSpace, PointSet), Error> {
    let (doc, space, subset) = load(path)?;
    let subset = subset.ok_or_else(|| {
        Error::Parse(format!(
            "{}: document needs a subset field for pair mode",
            path.display()
        ))
    })?;
    Ok((doc, space, subset))
}

struct Printer {
    mode: OutputMode,
}

impl Printer {
    fn emit<T: serde::Serialize>(&self, value: &T, table: String) {
        match self.mode {
            OutputMode::Structured => print!("{}", to_json(value)),
            OutputMode::Table => print!("{table}"),
        }
    }
}

/// Runs a command over a concrete field; returns whether everything passed.
fn run_with<F: Field>(field: &F, cli: &Cli) -> Result<bool, Error> {
    let printer = Printer { mode: cli.output };
    let mode = Mode::default();
    let opts = ReportOptions {
        witnesses: cli.witnesses,
        max_degree: cli.max_degree,
        seed: cli.seed,
    };
    match &cli.command {
        Command::Validate { file } => {
            let (doc, space, subset) = load(file)?;
            #[derive(serde::Serialize)]
            struct Validation {
                valid: bool,
                name: String,
                points: usize,
                subset_points: Option<usize>,
            }
            let v = Validation {
                valid: true,
                name: doc.name.clone(),
                points: space.len(),
                subset_points: subset.as_ref().map(|s| s.count()),
            };
            printer.emit(
                &v,
                format!(
                    "ok: {} ({} points{})\n",
                    v.name,
                    v.points,
                    v.subset_points
                        .map(|n| format!(", subset of {n}"))
                        .unwrap_or_default()
                ),
            );
            Ok(true)
        }
        Command::Homology { file } => {
            let (doc, space, subset) = load(file)?;
            let ctx = match subset {
                Some(a) if !a.is_empty() => SpaceHomology::pair(field, &space, a),
                _ => SpaceHomology::absolute(field, &space),
            };
            let report = homology_report(field, &ctx, &doc.name, cli.max_degree);
            printer.emit(&report, render_homology_table(&report));
            Ok(true)
        }
        Command::Digraph { file } => {
            let (doc, space) = load_space(file)?;
            let dg = homology_digraph(field, &space, mode);
            let report = digraph_report(field, &dg, &doc.name, &opts);
            printer.emit(&report, render_digraph_table(&report));
            Ok(true)
        }
        Command::DigraphPair { file } => {
            let (doc, space, subset) = load_pair(file)?;
            let dg = homology_digraph_pair(field, &space, subset, mode);
            let report = digraph_report(field, &dg, &doc.name, &opts);
            printer.emit(&report, render_digraph_table(&report));
            Ok(true)
        }
        Command::Product { left, right, name } => {
            let (ldoc, lspace) = load_space(left)?;
            let (rdoc, rspace) = load_space(right)?;
            let prod = lspace.product(&rspace);
            let name = name
                .clone()
                .unwrap_or_else(|| format!("product({},{})", ldoc.name, rdoc.name));
            print!(
                "{}",
                SpaceDocument::from_space(&name, &prod, None).serialize()
            );
            Ok(true)
        }
        Command::Coproduct { files, name } => {
            let mut docs = Vec::new();
            for f in files {
                docs.push(load_space(f)?);
            }
            let spaces: Vec<&FinitePreorderedSpace> = docs.iter().map(|(_, s)| s).collect();
            let (cop, _) = FinitePreorderedSpace::coproduct(&spaces);
            let name = name.clone().unwrap_or_else(|| {
                format!(
                    "coproduct({})",
                    docs.iter()
                        .map(|(d, _)| d.name.as_str())
                        .collect::<Vec<_>>()
                        .join(",")
                )
            });
            print!(
                "{}",
                SpaceDocument::from_space(&name, &cop, None).serialize()
            );
            Ok(true)
        }
        Command::Wedge {
            left,
            right,
            base_left,
            base_right,
            name,
        } => {
            let (ldoc, lspace) = load_space(left)?;
            let (rdoc, rspace) = load_space(right)?;
            let x0 = lspace.index_of(base_left)?;
            let y0 = rspace.index_of(base_right)?;
            let (wedge, _, _) = lspace.wedge(x0, &rspace, y0)?;
            let name = name
                .clone()
                .unwrap_or_else(|| format!("wedge({},{})", ldoc.name, rdoc.name));
            print!(
                "{}",
                SpaceDocument::from_space(&name, &wedge, None).serialize()
            );
            Ok(true)
        }
        Command::KunnethCheck { left, right } => {
            let (_, lspace) = load_space(left)?;
            let (_, rspace) = load_space(right)?;
            let report = verify_kunneth(field, &lspace, &rspace, mode)?;
            let doc = check_document(&field.name(), &report);
            printer.emit(&doc, render_check_table(&doc));
            Ok(report.passed)
        }
        Command::RelativeKunnethCheck { left, right } => {
            let (_, lspace, la) = load_pair(left)?;
            let (_, rspace, ra) = load_pair(right)?;
            let report = relative_kunneth(field, &lspace, &la, &rspace, &ra, mode)?;
            let doc = check_document(&field.name(), &report);
            printer.emit(&doc, render_check_table(&doc));
            Ok(report.passed)
        }
        Command::ExcisionCheck { file, excise } => {
            let (_, space, subset) = load_pair(file)?;
            let refs: Vec<&str> = excise.iter().map(|s| s.as_str()).collect();
            let excised = space.point_set(&refs)?;
            let report = verify_excision(field, &space, &subset, &excised, mode)?;
            let doc = check_document(&field.name(), &report);
            printer.emit(&doc, render_check_table(&doc));
            Ok(report.passed)
        }
        Command::ConnectingCheck { file } => {
            let (_, space, subset) = load_pair(file)?;
            let report = verify_connecting(field, &space, &subset, mode)?;
            let doc = check_document(&field.name(), &report);
            printer.emit(&doc, render_check_table(&doc));
            Ok(report.passed)
        }
        Command::CoproductCheck { files } => {
            let mut docs = Vec::new();
            for f in files {
                docs.push(load_space(f)?);
            }
            let spaces: Vec<&FinitePreorderedSpace> = docs.iter().map(|(_, s)| s).collect();
            let report = verify_coproduct(field, &spaces, mode)?;
            let doc = check_document(&field.name(), &report);
            printer.emit(&doc, render_check_table(&doc));
            Ok(report.passed)
        }
        Command::MapCheck {
            source,
            target,
            map,
        } => {
            let (_, src_space, src_subset) = load(source)?;
            let (_, tgt_space, tgt_subset) = load(target)?;
            let mut assignment = vec![usize::MAX; src_space.len()];
            for entry in map {
                let (a, b) = entry.split_once('=').ok_or_else(|| {
                    Error::Parse(format!("map entry '{entry}' is not of the form src=dst"))
                })?;
                let i = src_space.index_of(a.trim())?;
                let j = tgt_space.index_of(b.trim())?;
                assignment[i] = j;
            }
            if let Some(i) = assignment.iter().position(|&j| j == usize::MAX) {
                return Err(Error::Parse(format!(
                    "map does not assign a target to point '{}'",
                    src_space.id(i)
                )));
            }
            let f = PointMap::new(src_space.len(), tgt_space.len(), assignment);
            let src_dg = match src_subset {
                Some(a) if !a.is_empty() => homology_digraph_pair(field, &src_space, a, mode),
                _ => homology_digraph(field, &src_space, mode),
            };
            let tgt_dg = match tgt_subset {
                Some(a) if !a.is_empty() => homology_digraph_pair(field, &tgt_space, a, mode),
                _ => homology_digraph(field, &tgt_space, mode),
            };
            #[derive(serde::Serialize)]
            struct MapCheckDocument {
                check: &'static str,
                field: String,
                passed: bool,
                detail: String,
            }
            match induced_digraph_morphism(field, &f, &src_dg, &tgt_dg) {
                Ok(_) => {
                    let doc = MapCheckDocument {
                        check: "map",
                        field: field.name(),
                        passed: true,
                        detail: "induced map is a morphism of the pointing relations".into(),
                    };
                    printer.emit(
                        &doc,
                        format!("map over {}: PASS\n  {}\n", doc.field, doc.detail),
                    );
                    Ok(true)
                }
                Err(Error::VerificationFailed(msg)) => {
                    let doc = MapCheckDocument {
                        check: "map",
                        field: field.name(),
                        passed: false,
                        detail: msg,
                    };
                    printer.emit(
                        &doc,
                        format!("map over {}: FAIL\n  {}\n", doc.field, doc.detail),
                    );
                    Ok(false)
                }
                Err(other) => Err(other),
            }
        }
        Command::OracleCompare { file } => {
            let (doc, space, subset) = load(file)?;
            let subset = subset.filter(|s| !s.is_empty());
            let dg = match &subset {
                Some(a) => homology_digraph_pair(field, &space, a.clone(), mode),
                None => homology_digraph(field, &space, mode),
            };
            let oracle = brute_force_digraph(field, &space, subset, cli.oracle_cap, mode)?;
            let identical = dg.dgvs.pointing.defining == oracle.dgvs.pointing.defining;
            #[derive(serde::Serialize)]
            struct OracleDocument {
                check: &'static str,
                field: String,
                space: String,
                passed: bool,
                verdict: &'static str,
            }
            let verdict = if identical { "identical" } else { "different" };
            let d = OracleDocument {
                check: "oracle",
                field: field.name(),
                space: doc.name.clone(),
                passed: identical,
                verdict,
            };
            printer.emit(
                &d,
                format!(
                    "oracle comparison for {} over {}: {}\n",
                    d.space, d.field, verdict
                ),
            );
            Ok(identical)
        }
        Command::Fixtures { export } => {
            if let Some(dir) = export {
                std::fs::create_dir_all(dir)
                    .map_err(|e| Error::Parse(format!("{}: {e}", dir.display())))?;
                for model in models::all_models() {
                    let doc =
                        SpaceDocument::from_space(&model.name, &model.space, model.subset.as_ref());
                    let path = dir.join(format!("{}.doc", model.name));
                    std::fs::write(&path, doc.serialize())
                        .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
                }
            }
            #[derive(serde::Serialize)]
            struct FixtureLine {
                model: String,
                fact: String,
                passed: bool,
            }
            let mut lines = Vec::new();
            let mut all_pass = true;
            for model in models::all_models() {
                for fact in models::evaluate(&model, field, mode)? {
                    all_pass &= fact.passed;
                    lines.push(FixtureLine {
                        model: model.name.clone(),
                        fact: fact.description,
                        passed: fact.passed,
                    });
                }
            }
            let table: String = lines
                .iter()
                .map(|l| {
                    format!(
                        "{} {}: {}\n",
                        if l.passed { "PASS" } else { "FAIL" },
                        l.model,
                        l.fact
                    )
                })
                .collect();
            printer.emit(&lines, table);
            Ok(all_pass)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match parse_field(&cli.field) {
        Ok(FieldSpec::Gf2) => run_with(&Gf2, &cli),
        Ok(FieldSpec::Prime(p)) => match GfPrime::new(p) {
            Some(f) => run_with(&f, &cli),
            None => Err(Error::Parse(format!("{p} is not prime"))),
        },
        Ok(FieldSpec::Rational) => run_with(&Rationals, &cli),
        Err(e) => Err(e),
    };
    match outcome {
        Ok(true) => ExitCode::from(0),
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
