//! Command-line front end.
//!
//! Subcommands: `char-sym`, `char-wreath`, `core-quotient`, `hat`, `sign`,
//! `table`, `verify`. JSON is the default output format (CSV is available
//! for tables); every wreath-related output echoes the character labelling
//! it was computed under. Exit codes: 0 success/pass, 1 identity failure,
//! 2 usage or input error.

use std::ffi::OsString;
use std::io::Write;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::groups::{ConstantColor, GroupModel, QuotientLinearModel};
use crate::identities::{
    report_sign2, verify_main, verify_main2, verify_rr, verify_rr_general, EqualDegreeModel,
    VerificationReport,
};
use crate::partitions::{hat, r_core, r_quotient, Composition, Partition, RPartitePartition};
use crate::symchar::{character_table, sign_r, CharCache};
use crate::wreath::psi_constant_color;
use crate::{Error, Result};

#[derive(Parser)]
#[command(
    name = "wreathchar",
    version,
    about = "Exact character values of symmetric groups and wreath products",
    subcommand_required = true,
    arg_required_else_help = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate an irreducible S_n character at a conjugacy class
    #[command(name = "char-sym")]
    CharSym {
        /// Shape partition literal, e.g. "3,1"
        #[arg(long)]
        shape: String,
        /// Cycle type literal, e.g. "2,2"
        #[arg(long)]
        class: String,
        /// Entry cap for the character memo cache (cleared when exceeded)
        #[arg(long)]
        cache_cap: Option<usize>,
    },
    /// Evaluate an irreducible G wr S_n character at a constant-color class
    #[command(name = "char-wreath")]
    CharWreath {
        /// Group spec: abelian like "Z6", "Z2xZ2"; or "S3", "quot:d=..,ab=..,a=.."
        #[arg(long)]
        group: String,
        /// r-partite shape literal, e.g. "[1|-|1|-|-|-]"
        #[arg(long)]
        shape: String,
        /// Constant color: group element literal ("5", "1,1"); "e" = identity
        #[arg(long, default_value = "e")]
        color: String,
        /// Cycle type of the underlying permutation, e.g. "1,1"
        #[arg(long)]
        class: String,
    },
    /// r-core and r-quotient of a partition
    #[command(name = "core-quotient")]
    CoreQuotient {
        /// Partition literal
        #[arg(long)]
        shape: String,
        /// Number of abacus runners (r >= 2)
        #[arg(long)]
        r: usize,
    },
    /// The partition of r*n with empty r-core whose r-quotient is the shape
    Hat {
        /// r-partite shape literal, e.g. "[1|1]"
        #[arg(long)]
        shape: String,
        /// Optional consistency check against the shape's arity
        #[arg(long)]
        r: Option<usize>,
    },
    /// sign_r of a partition of r*n with empty r-core
    Sign {
        /// Partition literal
        #[arg(long)]
        shape: String,
        #[arg(long)]
        r: usize,
    },
    /// Full character table of S_n
    Table {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Entry cap for the character memo cache (cleared when exceeded)
        #[arg(long)]
        cache_cap: Option<usize>,
    },
    /// Sweep a character identity exhaustively and report failures
    Verify {
        /// Which identity to check
        #[arg(value_enum)]
        identity: Identity,
        /// Sweep size: the wreath degree n (for sign2: the bound on n)
        #[arg(long)]
        n: usize,
        /// Group spec (required for all identities except sign2)
        #[arg(long)]
        group: Option<String>,
        /// Constant color for `main`; distinguished coset for `main2`
        #[arg(long)]
        color: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Stop recording counterexamples past this many (sweep continues)
        #[arg(long, default_value_t = crate::identities::DEFAULT_MAX_FAILURES)]
        max_failures: usize,
        /// Worker threads for the sweep (default: rayon's choice)
        #[arg(long)]
        jobs: Option<usize>,
        /// Entry cap for the character memo cache (cleared when exceeded)
        #[arg(long)]
        cache_cap: Option<usize>,
    },
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq)]
enum Format {
    Json,
    Csv,
}

#[derive(ValueEnum, Clone, Copy)]
enum Identity {
    /// psi at identity colors vs sign_r * chi after the hat bijection
    Rr,
    /// The equal-degree d^t generalization of rr
    RrGeneral,
    /// Constant-color psi vs zeta^alpha * sign_d * chi (abelian G)
    Main,
    /// The linear-support version of main (quotient model)
    Main2,
    /// The sign_2 closed-form discrepancy report
    Sign2,
}

/// Parses `argv` and runs one command; output lands on `out`, diagnostics on
/// `err`. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(parse_err) => {
            let informational = matches!(
                parse_err.kind(),
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion
            );
            let rendered = parse_err.render();
            if informational {
                let _ = write!(out, "{rendered}");
                return 0;
            }
            let _ = write!(err, "{rendered}");
            return 2;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(run_err) => {
            let _ = writeln!(err, "error: {run_err}");
            2
        }
    }
}

fn emit_json(out: &mut dyn Write, value: &serde_json::Value) -> Result<()> {
    serde_json::to_writer(&mut *out, value)
        .map_err(|e| Error::InvalidInput(format!("cannot write output: {e}")))?;
    writeln!(out).map_err(|e| Error::InvalidInput(format!("cannot write output: {e}")))?;
    Ok(())
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::CharSym {
            shape,
            class,
            cache_cap,
        } => {
            let shape: Partition = shape.parse()?;
            let class: Composition = class.parse()?;
            let cache = CharCache::with_cap(cache_cap);
            let value = cache.chi(&shape, &class)?;
            emit_json(
                out,
                &json!({
                    "schema": 1,
                    "shape": shape.to_string(),
                    "class": class.to_string(),
                    "value": crate::cyclotomic::bigint_number(&value),
                }),
            )?;
            Ok(0)
        }
        Command::CharWreath {
            group,
            shape,
            color,
            class,
        } => {
            let shape: RPartitePartition = shape.parse()?;
            let class: Composition = class.parse()?;
            let (value, labelling, color_literal, group_spec) = match GroupModel::from_spec(&group)?
            {
                GroupModel::Abelian(abelian) => {
                    let element = abelian.parse_element(&color)?;
                    let model = ConstantColor::new(&abelian, element.clone())?;
                    let value = psi_constant_color(&shape, &model, &class)?;
                    (
                        value,
                        abelian.labelling_json(),
                        abelian.element_literal(&element),
                        abelian.spec_string(),
                    )
                }
                GroupModel::QuotientLinear(quotient) => {
                    let model = override_distinguished(quotient, Some(&color))?;
                    let value = psi_constant_color(&shape, &model, &class)?;
                    let literal = model
                        .abelianization()
                        .element_literal(model.distinguished());
                    let spec = model.spec_string();
                    (value, model.labelling_json(), literal, spec)
                }
            };
            emit_json(
                out,
                &json!({
                    "schema": 1,
                    "group": group_spec,
                    "shape": shape.to_string(),
                    "color": color_literal,
                    "class": class.to_string(),
                    "value": value,
                    "pretty": value.to_string(),
                    "labelling": labelling,
                }),
            )?;
            Ok(0)
        }
        Command::CoreQuotient { shape, r } => {
            let shape: Partition = shape.parse()?;
            if r < 2 {
                return Err(Error::InvalidInput("core-quotient needs r >= 2".into()));
            }
            let core = r_core(&shape, r);
            let quotient = r_quotient(&shape, r);
            emit_json(
                out,
                &json!({
                    "schema": 1,
                    "shape": shape.to_string(),
                    "r": r,
                    "core": core.to_string(),
                    "quotient": quotient.to_string(),
                }),
            )?;
            Ok(0)
        }
        Command::Hat { shape, r } => {
            let shape: RPartitePartition = shape.parse()?;
            if let Some(r) = r {
                if r != shape.arity() {
                    return Err(Error::SizeMismatch {
                        context: "--r vs shape arity",
                        left: r,
                        right: shape.arity(),
                    });
                }
            }
            let hatted = hat(&shape)?;
            emit_json(
                out,
                &json!({
                    "schema": 1,
                    "shape": shape.to_string(),
                    "r": shape.arity(),
                    "hat": hatted.to_string(),
                }),
            )?;
            Ok(0)
        }
        Command::Sign { shape, r } => {
            let shape: Partition = shape.parse()?;
            let value = sign_r(&shape, r)?;
            emit_json(
                out,
                &json!({
                    "schema": 1,
                    "shape": shape.to_string(),
                    "r": r,
                    "value": value,
                }),
            )?;
            Ok(0)
        }
        Command::Table {
            n,
            format,
            cache_cap,
        } => {
            let cache = CharCache::with_cap(cache_cap);
            let table = character_table(n, &cache)?;
            match format {
                Format::Json => {
                    let mut value = serde_json::to_value(&table)
                        .map_err(|e| Error::InvalidInput(format!("serialize: {e}")))?;
                    value
                        .as_object_mut()
                        .expect("table serializes to an object")
                        .insert("schema".into(), json!(1));
                    emit_json(out, &value)?;
                }
                Format::Csv => {
                    let mut writer = csv::Writer::from_writer(Vec::new());
                    let mut header = vec!["shape".to_string()];
                    header.extend(table.classes.iter().cloned());
                    write_csv_row(&mut writer, &header)?;
                    for (shape, row) in table.shapes.iter().zip(&table.values) {
                        let mut record = vec![shape.clone()];
                        record.extend(row.iter().map(|v| v.to_string()));
                        write_csv_row(&mut writer, &record)?;
                    }
                    let bytes = writer
                        .into_inner()
                        .map_err(|e| Error::InvalidInput(format!("csv: {e}")))?;
                    out.write_all(&bytes)
                        .map_err(|e| Error::InvalidInput(format!("cannot write output: {e}")))?;
                }
            }
            Ok(0)
        }
        Command::Verify {
            identity,
            n,
            group,
            color,
            format,
            max_failures,
            jobs,
            cache_cap,
        } => {
            if format == Format::Csv {
                return Err(Error::InvalidInput(
                    "csv output is only available for `table`".into(),
                ));
            }
            let report = match jobs {
                Some(jobs) => {
                    let pool = rayon::ThreadPoolBuilder::new()
                        .num_threads(jobs)
                        .build()
                        .map_err(|e| Error::InvalidInput(format!("cannot build pool: {e}")))?;
                    pool.install(|| {
                        run_verify(
                            identity,
                            n,
                            group.as_deref(),
                            color.as_deref(),
                            max_failures,
                            cache_cap,
                        )
                    })?
                }
                None => run_verify(
                    identity,
                    n,
                    group.as_deref(),
                    color.as_deref(),
                    max_failures,
                    cache_cap,
                )?,
            };
            let value = serde_json::to_value(&report)
                .map_err(|e| Error::InvalidInput(format!("serialize: {e}")))?;
            emit_json(out, &value)?;
            Ok(if report.passed() { 0 } else { 1 })
        }
    }
}

fn write_csv_row(writer: &mut csv::Writer<Vec<u8>>, row: &[String]) -> Result<()> {
    writer
        .write_record(row)
        .map_err(|e| Error::InvalidInput(format!("csv: {e}")))
}

fn required_group(group: Option<&str>) -> Result<GroupModel> {
    let spec = group.ok_or_else(|| Error::InvalidInput("--group is required here".into()))?;
    GroupModel::from_spec(spec)
}

fn override_distinguished(
    model: QuotientLinearModel,
    color: Option<&str>,
) -> Result<QuotientLinearModel> {
    match color {
        Some(text) => {
            let element = model.abelianization().parse_element(text)?;
            model.with_distinguished(element)
        }
        None => Ok(model),
    }
}

fn run_verify(
    identity: Identity,
    n: usize,
    group: Option<&str>,
    color: Option<&str>,
    max_failures: usize,
    cache_cap: Option<usize>,
) -> Result<VerificationReport> {
    let cache = CharCache::with_cap(cache_cap);
    match identity {
        Identity::Rr => match required_group(group)? {
            GroupModel::Abelian(abelian) => verify_rr(n, &abelian, &cache, max_failures),
            GroupModel::QuotientLinear(_) => Err(Error::InvalidInput(
                "verify rr needs an abelian group; use rr-general for quotient models".into(),
            )),
        },
        Identity::RrGeneral => match required_group(group)? {
            GroupModel::Abelian(abelian) => verify_rr_general(
                n,
                &EqualDegreeModel::Abelian(&abelian),
                &cache,
                max_failures,
            ),
            GroupModel::QuotientLinear(quotient) => verify_rr_general(
                n,
                &EqualDegreeModel::QuotientLinear(&quotient),
                &cache,
                max_failures,
            ),
        },
        Identity::Main => match required_group(group)? {
            GroupModel::Abelian(abelian) => {
                let element = match color {
                    Some(text) => abelian.parse_element(text)?,
                    None => abelian.identity(),
                };
                verify_main(n, &abelian, &element, &cache, max_failures)
            }
            GroupModel::QuotientLinear(_) => Err(Error::InvalidInput(
                "verify main needs an abelian group; use main2 for quotient models".into(),
            )),
        },
        Identity::Main2 => match required_group(group)? {
            GroupModel::QuotientLinear(quotient) => {
                let model = override_distinguished(quotient, color)?;
                verify_main2(n, &model, &cache, max_failures)
            }
            GroupModel::Abelian(_) => Err(Error::InvalidInput(
                "verify main2 needs a quotient model (e.g. S3 or quot:...)".into(),
            )),
        },
        Identity::Sign2 => report_sign2(n, max_failures),
    }
}
