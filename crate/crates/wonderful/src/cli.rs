//! Command-line surface: build root data, query single curves and dimension
//! reports, emit the verification tables, and run the identity suite.
//!
//! Exit codes: 0 success, 1 verification failure (a table diff or a failed
//! identity), 2 usage error. Output on stdout is byte-identical across runs
//! with identical inputs.

use std::ffi::OsString;
use std::io::Write;

use clap::error::ErrorKind;
use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::curves::{
    additive_degree, curve_report, mult_degree, AddCurve, AdditiveClass, Curve, MultCurve,
};
use crate::error::{Error, Result};
use crate::report::{emit_table, OutputFormat, ReportDocument};
use crate::root_system::{Cocharacter, RootDatum, SimpleType, Weight};
use crate::verify::{self, Status, VerifyConfig};
use crate::weyl::DEFAULT_ORACLE_CAP;
use crate::wonderful::{minimal_family_product, orbit_closure_contains, vmrt_report, OrbitLabel};

pub const ORACLE_CAP_ENV: &str = "WONDERFUL_ORACLE_CAP";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Json,
    Tsv,
}

impl From<FormatArg> for OutputFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Json => OutputFormat::Json,
            FormatArg::Tsv => OutputFormat::Tsv,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "wonderful",
    version,
    about = "Exact curve and orbit invariants of wonderful group compactifications",
    after_help = "EXAMPLES:\n  wonderful roots A2\n  wonderful curve --type G2 --additive theta-short --weight 2,-1\n  wonderful curve --type A3 --mult 1,0,1\n  wonderful vmrt E8\n  wonderful orbits A3 --contains 1 --in 1,3\n  wonderful table remark-lines --max-rank 8\n  wonderful verify --all --max-rank 8"
)]
struct Cli {
    /// Output format for the report document
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Json)]
    format: FormatArg,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build the root datum of a simple type and print its distinguished data
    #[command(after_help = "EXAMPLE:\n  wonderful roots B3")]
    Roots {
        /// Simple type, e.g. A2, D5, G2
        type_name: String,
    },
    /// Invariants of one curve class (multiplicative or additive)
    #[command(
        group(ArgGroup::new("curve_kind").required(true).args(["mult", "additive"])),
        after_help = "EXAMPLES:\n  wonderful curve --type A3 --mult 1,0,1\n  wonderful curve --type G2 --additive theta-short --weight 2,-1"
    )]
    Curve {
        /// Simple type, e.g. A2, D5, G2
        #[arg(long = "type")]
        type_name: String,
        /// Dominant indivisible cocharacter coordinates, e.g. 1,0,1
        #[arg(long, value_name = "c1,..,cl")]
        mult: Option<String>,
        /// Additive curve class: theta or theta-short
        #[arg(long, value_name = "theta|theta-short")]
        additive: Option<String>,
        /// Optional weight (fundamental-weight coordinates) to evaluate the
        /// degree against, e.g. 1,0,2
        #[arg(long, value_name = "a1,..,al")]
        weight: Option<String>,
    },
    /// Dimension report for the minimal family of rational curves; accepts a
    /// product of simple factors (x-joined, e.g. A2xG2)
    #[command(
        after_help = "EXAMPLES:\n  wonderful vmrt F4\n  wonderful vmrt A2xG2 --polarization 1,1;1,1"
    )]
    Vmrt {
        /// Simple type or product expression, e.g. A2, D5, A2xG2
        type_name: String,
        /// One regular dominant weight per factor, ;-joined (defaults to rho
        /// on every factor)
        #[arg(long, value_name = "a1,..;b1,..")]
        polarization: Option<String>,
    },
    /// Closure order on boundary orbits: does the closure of O_I contain O_J?
    #[command(
        after_help = "EXAMPLE:\n  wonderful orbits A3 --contains 1 --in 1,3\n  (subsets are comma-separated indices; use 'none' for the open orbit)"
    )]
    Orbits {
        /// Simple type fixing the ambient rank
        type_name: String,
        /// Subset I, e.g. 1,3 or none
        #[arg(long)]
        contains: String,
        /// Subset J, e.g. 1,2,3 or none
        #[arg(long = "in")]
        inner: String,
    },
    /// Emit a verification table (remark-lines, remark-short, lemma-roots, lemma-dim)
    #[command(after_help = "EXAMPLE:\n  wonderful table remark-short --max-rank 8")]
    Table {
        /// Table name
        name: String,
        #[arg(long, default_value_t = 8)]
        max_rank: usize,
    },
    /// Run the identity verification suite and report pass/fail per identity
    #[command(
        after_help = "EXAMPLE:\n  wonderful verify --all --max-rank 8\n  (--all additionally runs the brute-force Weyl enumeration cross-check)"
    )]
    Verify {
        /// Include the Weyl enumeration oracle checks
        #[arg(long)]
        all: bool,
        #[arg(long, default_value_t = 8)]
        max_rank: usize,
        /// Cap on Weyl group enumeration (overrides WONDERFUL_ORACLE_CAP)
        #[arg(long)]
        oracle_cap: Option<usize>,
    },
}

/// Parse arguments, run one command, and write the report to `out`.
/// Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    eprint!("{e}");
                    2
                }
            };
        }
    };
    let format: OutputFormat = cli.format.into();
    match dispatch(cli.command) {
        Ok((document, exit_code)) => {
            let rendered = document.render(format);
            if out.write_all(rendered.as_bytes()).is_err() {
                return 2;
            }
            exit_code
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn dispatch(command: Command) -> Result<(ReportDocument, i32)> {
    match command {
        Command::Roots { type_name } => cmd_roots(&type_name),
        Command::Curve {
            type_name,
            mult,
            additive,
            weight,
        } => cmd_curve(
            &type_name,
            mult.as_deref(),
            additive.as_deref(),
            weight.as_deref(),
        ),
        Command::Vmrt {
            type_name,
            polarization,
        } => cmd_vmrt(&type_name, polarization.as_deref()),
        Command::Orbits {
            type_name,
            contains,
            inner,
        } => cmd_orbits(&type_name, &contains, &inner),
        Command::Table { name, max_rank } => {
            let outcome = emit_table(&name, max_rank)?;
            let exit = i32::from(outcome.diff_count > 0);
            Ok((outcome.document, exit))
        }
        Command::Verify {
            all,
            max_rank,
            oracle_cap,
        } => cmd_verify(all, max_rank, oracle_cap),
    }
}

fn parse_coords(what: &str, s: &str, rank: usize) -> Result<Vec<i64>> {
    let coords: Vec<i64> = s
        .split(',')
        .map(|p| p.trim().parse::<i64>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| {
            Error::InvalidInput(format!(
                "cannot parse {what} {s:?}: expected comma-separated integers, e.g. --weight 1,0,2"
            ))
        })?;
    if coords.len() != rank {
        return Err(Error::RankMismatch {
            expected: rank,
            found: coords.len(),
        });
    }
    Ok(coords)
}

fn parse_subset(what: &str, s: &str, rank: usize) -> Result<OrbitLabel> {
    let s = s.trim();
    if s.is_empty() || s == "none" {
        return OrbitLabel::new(rank, []);
    }
    if s == "all" {
        return Ok(OrbitLabel::closed_orbit(rank));
    }
    let indices: Vec<usize> = s
        .split(',')
        .map(|p| p.trim().parse::<usize>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| {
            Error::InvalidInput(format!(
                "cannot parse {what} {s:?}: expected comma-separated indices like 1,3, or 'none'"
            ))
        })?;
    OrbitLabel::new(rank, indices)
}

fn weight_value(w: &Weight) -> Value {
    json!(w.coords())
}

fn orbit_value(label: &OrbitLabel) -> Value {
    json!(label.subset().iter().copied().collect::<Vec<usize>>())
}

fn cmd_roots(type_name: &str) -> Result<(ReportDocument, i32)> {
    let t = SimpleType::parse(type_name)?;
    let datum = RootDatum::build(t)?;
    let mut document = ReportDocument::new(json!({
        "command": "roots",
        "type": t.to_string(),
    }));
    let positive: Vec<Value> = datum
        .positive_roots()
        .iter()
        .map(|r| json!(r.coords()))
        .collect();
    document.push(
        &t.to_string(),
        "section-3",
        json!({
            "type": t.to_string(),
            "rank": t.rank(),
            "cartan": datum.cartan(),
            "positive_root_count": datum.positive_roots().len(),
            "positive_roots": positive,
            "theta": datum.theta().coords(),
            "theta_weight": weight_value(&datum.root_to_weight(datum.theta())),
            "theta_coroot": datum.theta_coroot().coords(),
            "theta_cocharacter": datum.coroot_to_cocharacter(datum.theta_coroot()).coords(),
            "theta_short": datum.theta_short().map(|r| json!(r.coords())),
            "theta_short_coroot": datum.theta_short_coroot().map(|c| json!(c.coords())),
            "rho": weight_value(datum.rho()),
            "kappa": weight_value(datum.kappa()),
        }),
    );
    Ok((document, 0))
}

fn cmd_curve(
    type_name: &str,
    mult: Option<&str>,
    additive: Option<&str>,
    weight: Option<&str>,
) -> Result<(ReportDocument, i32)> {
    let t = SimpleType::parse(type_name)?;
    let datum = RootDatum::build(t)?;
    let rank = t.rank();

    let (curve, provenance, curve_query): (Curve, &'static str, Value) = match (mult, additive) {
        (Some(coords), None) => {
            let eta = Cocharacter::new(parse_coords("--mult", coords, rank)?);
            (
                Curve::Mult(MultCurve::new(&datum, eta.clone())?),
                "lemma-mult",
                json!({ "mult": eta.coords() }),
            )
        }
        (None, Some(kind)) => {
            let class = match kind {
                "theta" => AdditiveClass::Theta,
                "theta-short" => AdditiveClass::ThetaShort,
                other => {
                    return Err(Error::InvalidInput(format!(
                        "unknown additive class {other:?}: use theta or theta-short"
                    )))
                }
            };
            let provenance = match class {
                AdditiveClass::Theta => "lemma-add",
                AdditiveClass::ThetaShort => "remark-short",
            };
            (
                Curve::Add(AddCurve::new(&datum, class)?),
                provenance,
                json!({ "additive": kind }),
            )
        }
        _ => unreachable!("clap enforces exactly one of --mult/--additive"),
    };

    let report = curve_report(&datum, &curve)?;
    let mut document = ReportDocument::new(json!({
        "command": "curve",
        "type": t.to_string(),
        "curve": curve_query,
        "weight": weight,
    }));

    let degrees: Vec<Value> = (1..=rank)
        .map(|i| {
            let w = datum.fundamental_weight(i).expect("in range");
            json!({
                "fundamental_weight": i,
                "degree": report.degrees[&w],
            })
        })
        .collect();
    document.push(
        "curve-report",
        provenance,
        json!({
            "type": t.to_string(),
            "degrees": degrees,
            "orbit_at_zero": orbit_value(&report.orbit_at_zero),
            "orbit_at_infinity": orbit_value(&report.orbit_at_infinity),
            "smooth": report.smooth,
            "anticanonical_degree": report.anticanonical_degree,
        }),
    );

    if let Some(weight_str) = weight {
        let lam = Weight::new(parse_coords("--weight", weight_str, rank)?);
        let degree = match &curve {
            Curve::Mult(c) => mult_degree(&datum, &lam, c.eta())?,
            Curve::Add(c) => additive_degree(&datum, &lam, c.class())?,
        };
        document.push(
            "weight-degree",
            provenance,
            json!({
                "weight": lam.coords(),
                "degree": degree,
            }),
        );
    }
    Ok((document, 0))
}

/// Parse an x-joined product expression like "A2xG2" (a single atom is a
/// one-factor product).
fn parse_product(expression: &str) -> Result<Vec<SimpleType>> {
    expression
        .split(['x', 'X'])
        .map(SimpleType::parse)
        .collect::<Result<Vec<_>>>()
        .and_then(|factors| {
            if factors.is_empty() {
                Err(Error::EmptyProduct)
            } else {
                Ok(factors)
            }
        })
}

fn vmrt_record(t: SimpleType, datum: &RootDatum) -> Value {
    let report = vmrt_report(datum);
    json!({
        "type": t.to_string(),
        "dim_kx": report.dim_kx,
        "dim_p_omin": report.dim_p_omin,
        "offset": report.offset,
        "i0": report.i0,
        "family": serde_json::to_value(report.family).expect("serializes"),
    })
}

fn cmd_vmrt(type_name: &str, polarization: Option<&str>) -> Result<(ReportDocument, i32)> {
    let factors = parse_product(type_name)?;
    let mut document = ReportDocument::new(json!({
        "command": "vmrt",
        "type": type_name,
        "polarization": polarization,
    }));

    if factors.len() == 1 && polarization.is_none() {
        let t = factors[0];
        let datum = RootDatum::build(t)?;
        document.push(&t.to_string(), "lemma-dim", vmrt_record(t, &datum));
        return Ok((document, 0));
    }

    // product form: per-factor reports, the Borel-stable curves, and the
    // factors attaining the minimal ample degree
    let weights: Vec<Weight> = match polarization {
        None => factors
            .iter()
            .map(|t| Weight::new(vec![1; t.rank()]))
            .collect(),
        Some(spec_str) => {
            let parts: Vec<&str> = spec_str.split(';').collect();
            if parts.len() != factors.len() {
                return Err(Error::InvalidInput(format!(
                    "{} factors but {} weights in --polarization (join weights with ';')",
                    factors.len(),
                    parts.len()
                )));
            }
            factors
                .iter()
                .zip(parts)
                .map(|(t, p)| Ok(Weight::new(parse_coords("--polarization", p, t.rank())?)))
                .collect::<Result<Vec<_>>>()?
        }
    };

    let mut degrees = Vec::new();
    for (k, (t, lam)) in factors.iter().zip(&weights).enumerate() {
        let datum = RootDatum::build(*t)?;
        let degree = crate::wonderful::min_degree_bound(&datum, lam)?;
        degrees.push(degree);
        let mut record = vmrt_record(*t, &datum);
        if let Value::Object(map) = &mut record {
            map.insert("factor".to_string(), json!(k));
            map.insert("ample_degree".to_string(), json!(degree));
        }
        document.push(&format!("factor-{k}"), "lemma-dim", record);
    }

    let curves = crate::curves::b_stable_curves(&factors)?;
    document.push(
        "b-stable-curves",
        "lemma-stable",
        json!({
            "count": curves.len(),
            "curves": curves
                .iter()
                .map(|c| json!({ "factor": c.factor(), "root": c.root().coords() }))
                .collect::<Vec<_>>(),
        }),
    );

    let argmin = minimal_family_product(&factors, &weights)?;
    document.push(
        "minimal-family-factors",
        "prop-product",
        json!({
            "ample_degrees": degrees,
            "factors": argmin.clone(),
            "pinned_to_one_factor": argmin.len() == 1,
        }),
    );
    Ok((document, 0))
}

fn cmd_orbits(type_name: &str, contains: &str, inner: &str) -> Result<(ReportDocument, i32)> {
    let t = SimpleType::parse(type_name)?;
    let rank = t.rank();
    let outer_label = parse_subset("--contains", contains, rank)?;
    let inner_label = parse_subset("--in", inner, rank)?;
    let answer = orbit_closure_contains(&outer_label, &inner_label)?;
    let mut document = ReportDocument::new(json!({
        "command": "orbits",
        "type": t.to_string(),
        "contains": orbit_value(&outer_label),
        "in": orbit_value(&inner_label),
    }));
    document.push(
        "orbit-closure",
        "section-3",
        json!({
            "closure_of": orbit_value(&outer_label),
            "contains_orbit": orbit_value(&inner_label),
            "answer": answer,
        }),
    );
    Ok((document, 0))
}

fn oracle_cap_from_env() -> Result<Option<usize>> {
    match std::env::var(ORACLE_CAP_ENV) {
        Ok(v) => {
            v.trim().parse::<usize>().map(Some).map_err(|_| {
                Error::InvalidInput(format!("{ORACLE_CAP_ENV}={v:?} is not an integer"))
            })
        }
        Err(_) => Ok(None),
    }
}

fn cmd_verify(
    all: bool,
    max_rank: usize,
    oracle_cap: Option<usize>,
) -> Result<(ReportDocument, i32)> {
    let cap = match oracle_cap {
        Some(c) => c,
        None => oracle_cap_from_env()?.unwrap_or(DEFAULT_ORACLE_CAP),
    };
    let config = VerifyConfig {
        max_rank,
        oracle_cap: cap,
        include_oracle: all,
        ..VerifyConfig::default()
    };
    let outcomes = verify::run(&config)?;

    let mut document = ReportDocument::new(json!({
        "command": "verify",
        "all": all,
        "max_rank": max_rank,
        "oracle_cap": cap,
    }));
    for outcome in &outcomes {
        let id = format!("{}:{}", outcome.id, outcome.subject);
        document.push(
            &id,
            outcome.provenance,
            json!({
                "check": outcome.id,
                "subject": outcome.subject,
                "status": outcome.status.as_str(),
                "detail": outcome.detail,
            }),
        );
    }
    // per-subject summary, in first-seen order
    let mut subjects: Vec<String> = Vec::new();
    for outcome in &outcomes {
        if !subjects.contains(&outcome.subject) {
            subjects.push(outcome.subject.clone());
        }
    }
    for subject in &subjects {
        let count = |status: Status| {
            outcomes
                .iter()
                .filter(|o| &o.subject == subject && o.status == status)
                .count()
        };
        document.push(
            &format!("summary:{subject}"),
            "derived",
            json!({
                "subject": subject,
                "status": "summary",
                "pass": count(Status::Pass),
                "fail": count(Status::Fail),
                "skip": count(Status::Skip),
            }),
        );
    }
    let failures = outcomes.iter().filter(|o| o.status == Status::Fail).count();
    let passes = outcomes.iter().filter(|o| o.status == Status::Pass).count();
    let skips = outcomes.iter().filter(|o| o.status == Status::Skip).count();
    document.push(
        "summary",
        "derived",
        json!({
            "subject": "total",
            "status": "summary",
            "pass": passes,
            "fail": failures,
            "skip": skips,
        }),
    );
    Ok((document, i32::from(failures > 0)))
}
