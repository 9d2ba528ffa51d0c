//! `nichols` — classify diagonal braidings and compute Nichols algebra
//! invariants from the command line.
//!
//! Subcommands mirror the library modules: `cartan-type`, `dim`,
//! `twist-symmetrize`, `zp-classify`, `serre-check`, `antisym-dim`, and the
//! pipeline command `analyze`. All input and output is JSON; every number is
//! exact (integers, decimal strings, reduced fractions). Exit codes: 0 on
//! success, 2 on malformed input, 3 on a precondition refusal.

mod schema;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use num_traits::ToPrimitive;

use nichols_core::antisym::{total_dimension, DEFAULT_DEGREE_CAP};
use nichols_core::braiding::{
    cartan_type, connected_components, fl_rank2_criterion, fl_witness, is_locally_fl, is_symmetric,
    FlVerdict,
};
use nichols_core::cartan::{graded_hilbert, is_finite_type, nichols_dimension, top_degree};
use nichols_core::freebraided::{is_primitive, serre_element, serre_primitivity_scalar};
use nichols_core::realization::classify_zp;
use nichols_core::twisting::{symmetrize, twist_exponents};
use nichols_core::{BraidingMatrix, CartanTypeResult, Error};

use schema::*;

#[derive(Debug)]
pub enum CliError {
    /// Unreadable, unparsable, or schema-violating input → exit 2.
    Malformed(String),
    /// Valid input refused by a mathematical precondition or guard → exit 3.
    Refusal(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Refusal(e.to_string())
    }
}

#[derive(Parser)]
#[command(
    name = "nichols",
    version,
    about = "Exact classification of diagonal braidings"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Full pipeline: Cartan data, components, finite type, FL checks,
    /// symmetrization, dimension, and optionally the antisymmetrizer oracle.
    Analyze {
        #[arg(long)]
        input: PathBuf,
        /// Degree cap for the Hilbert series and the oracle.
        #[arg(long)]
        degree_cap: Option<u64>,
        /// Cross-check the dimension formula against antisymmetrizer ranks.
        #[arg(long)]
        oracle: bool,
    },
    /// Extract the generalized Cartan matrix and component structure.
    CartanType {
        #[arg(long)]
        input: PathBuf,
    },
    /// Nichols algebra dimension and graded Hilbert series (finite type).
    Dim {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        degree_cap: Option<u64>,
    },
    /// Realize over a group and twist by a cocycle that symmetrizes.
    TwistSymmetrize {
        #[arg(long)]
        input: PathBuf,
    },
    /// Classify all finite-dimensional Nichols algebras over ℤ/(p).
    ZpClassify {
        #[arg(long)]
        p: u64,
        /// Also write the report to `DIR/zp_<p>.json` as a golden fixture.
        #[arg(long)]
        golden: Option<PathBuf>,
    },
    /// Quantum Serre element, its primitivity scalar, and the exact verdict.
    SerreCheck {
        #[arg(long)]
        input: PathBuf,
        /// 1-based acting letter.
        #[arg(long)]
        i: usize,
        /// 1-based target letter.
        #[arg(long)]
        j: usize,
    },
    /// Graded dimensions by antisymmetrizer rank, degree by degree.
    AntisymDim {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        degree_cap: Option<u64>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Malformed(msg)) => {
            eprintln!("error: malformed input: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Refusal(msg)) => {
            eprintln!("error: precondition refused: {msg}");
            ExitCode::from(3)
        }
    }
}

fn load_braiding(path: &Path) -> Result<(BraidingJson, BraidingMatrix), CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Malformed(format!("{}: {e}", path.display())))?;
    let json: BraidingJson =
        serde_json::from_str(&text).map_err(|e| CliError::Malformed(e.to_string()))?;
    let b = json.to_braiding()?;
    Ok((json, b))
}

fn emit<T: serde::Serialize>(report: &T) -> Result<(), CliError> {
    let text = serde_json::to_string_pretty(report)
        .map_err(|e| CliError::Refusal(format!("serialization failed: {e}")))?;
    println!("{text}");
    Ok(())
}

fn require_cartan(b: &BraidingMatrix) -> Result<CartanTypeResult, CliError> {
    cartan_type(b).ok_or_else(|| CliError::Refusal("braiding is not of Cartan type".into()))
}

fn run(cmd: Cmd) -> Result<(), CliError> {
    match cmd {
        Cmd::CartanType { input } => cmd_cartan_type(&input),
        Cmd::Dim { input, degree_cap } => cmd_dim(&input, degree_cap),
        Cmd::TwistSymmetrize { input } => cmd_twist(&input),
        Cmd::ZpClassify { p, golden } => cmd_zp(p, golden.as_deref()),
        Cmd::SerreCheck { input, i, j } => cmd_serre(&input, i, j),
        Cmd::AntisymDim { input, degree_cap } => cmd_antisym(&input, degree_cap),
        Cmd::Analyze {
            input,
            degree_cap,
            oracle,
        } => cmd_analyze(&input, degree_cap, oracle),
    }
}

fn cmd_cartan_type(input: &Path) -> Result<(), CliError> {
    let (_, b) = load_braiding(input)?;
    let ct = cartan_type(&b);
    let report = CartanTypeReport {
        gcm: ct.as_ref().map(|c| c.gcm().rows().to_vec()),
        orders: ct.as_ref().map(|c| c.diagonal_orders().to_vec()),
        components: components_json(&connected_components(&b)),
        symmetric: is_symmetric(&b),
    };
    emit(&report)
}

fn hilbert_as_u64(
    b: &BraidingMatrix,
    ct: &CartanTypeResult,
    cap: usize,
) -> Result<Option<Vec<u64>>, CliError> {
    match graded_hilbert(b, ct, cap) {
        Ok(series) => {
            let mut out = Vec::with_capacity(series.len());
            for c in &series {
                out.push(c.to_u64().ok_or_else(|| {
                    CliError::Refusal("Hilbert coefficient exceeds 64 bits".into())
                })?);
            }
            Ok(Some(out))
        }
        // mixed diagonal orders per component: the series form is undefined
        Err(Error::UnequalComponentOrders) => Ok(None),
        Err(e) => Err(e.into()),
    }
}

fn cmd_dim(input: &Path, degree_cap: Option<u64>) -> Result<(), CliError> {
    let (_, b) = load_braiding(input)?;
    let ct = require_cartan(&b)?;
    let dimension = nichols_dimension(&b, &ct)?;
    let top = top_degree(&b, &ct)?;
    let cap = degree_cap.unwrap_or(top).min(top);
    let report = DimReport {
        finite_type: true,
        components: components_json(&connected_components(&b)),
        dimension: dimension.to_string(),
        hilbert: hilbert_as_u64(&b, &ct, cap as usize)?,
    };
    emit(&report)
}

fn cmd_twist(input: &Path) -> Result<(), CliError> {
    let (_, b) = load_braiding(input)?;
    let (m, cocycle) = symmetrize(&b)?;
    let twisted = twist_exponents(&m, &cocycle)?;
    let symmetric = is_symmetric(&twisted.braiding());
    emit(&TwistReport::new(&cocycle, &twisted, symmetric))
}

fn cmd_zp(p: u64, golden: Option<&Path>) -> Result<(), CliError> {
    let classification = classify_zp(p)?;
    let report = ZpReport::new(&classification);
    if let Some(dir) = golden {
        fs::create_dir_all(dir)
            .map_err(|e| CliError::Refusal(format!("cannot create {}: {e}", dir.display())))?;
        let path = dir.join(format!("zp_{p}.json"));
        let mut text =
            serde_json::to_string_pretty(&report).map_err(|e| CliError::Refusal(e.to_string()))?;
        text.push('\n');
        fs::write(&path, text)
            .map_err(|e| CliError::Refusal(format!("cannot write {}: {e}", path.display())))?;
    }
    emit(&report)
}

fn cmd_serre(input: &Path, i: usize, j: usize) -> Result<(), CliError> {
    let (_, b) = load_braiding(input)?;
    if i == 0 || j == 0 || i > b.theta() || j > b.theta() || i == j {
        return Err(CliError::Malformed(format!(
            "need distinct 1-based letters i, j in 1..={}",
            b.theta()
        )));
    }
    let ct = require_cartan(&b)?;
    let (i0, j0) = (i - 1, j - 1);
    let a_ij = ct.gcm().entry(i0, j0);
    let z = serre_element(&b, i0, j0, a_ij)?;
    let report = SerreReport {
        i,
        j,
        a_ij,
        level: b.level(),
        serre_element: z
            .terms()
            .iter()
            .map(|(word, c)| SerreTermJson {
                word: word.iter().map(|&l| l as usize + 1).collect(),
                coefficient: CycIntJson::new(c),
            })
            .collect(),
        primitivity_scalar: serre_primitivity_scalar(&b, i0, j0, a_ij).to_string(),
        primitive: is_primitive(&z),
    };
    emit(&report)
}

fn cmd_antisym(input: &Path, degree_cap: Option<u64>) -> Result<(), CliError> {
    let (_, b) = load_braiding(input)?;
    let ct = require_cartan(&b)?;
    let dims = total_dimension(&b, &ct, degree_cap.unwrap_or(DEFAULT_DEGREE_CAP))?;
    emit(&AntisymReport {
        ranks: dims.ranks.iter().map(|&r| r as u64).collect(),
        total: dims.total.as_ref().map(|t| t.to_string()),
        capped: dims.capped,
    })
}

fn cmd_analyze(input: &Path, degree_cap: Option<u64>, oracle: bool) -> Result<(), CliError> {
    let (input_json, b) = load_braiding(input)?;
    let symmetric = is_symmetric(&b);
    let odd_order = b.all_odd_order();
    let components = connected_components(&b);
    let ct = cartan_type(&b);

    let cartan_section = ct.as_ref().map(|c| CartanSection {
        gcm: c.gcm().rows().to_vec(),
        orders: c.diagonal_orders().to_vec(),
    });
    let finite = ct.as_ref().map(|c| is_finite_type(c.gcm()));

    let fl = match (&ct, odd_order) {
        (Some(ct), true) => {
            let verdict = fl_witness(&b, ct)?;
            let (name, d, q) = match &verdict {
                FlVerdict::Witness(w) => ("witness", Some(w.d.clone()), Some(w.q.to_string())),
                FlVerdict::NotSymmetrizable => ("not-symmetrizable", None, None),
                FlVerdict::NoWitness => ("no-witness", None, None),
            };
            let rank2 = if b.theta() == 2 && symmetric && ct.gcm().entry(0, 1) != 0 {
                Some(fl_rank2_criterion(&b, ct)?)
            } else {
                None
            };
            Some(FlReport {
                verdict: name.to_string(),
                d,
                q,
                locally_fl: is_locally_fl(&b, ct)?,
                rank2_criterion: rank2,
            })
        }
        _ => None,
    };

    let twist = match (&ct, odd_order) {
        (Some(_), true) => {
            let (m, cocycle) = symmetrize(&b)?;
            let twisted = twist_exponents(&m, &cocycle)?;
            let sym = is_symmetric(&twisted.braiding());
            Some(TwistReport::new(&cocycle, &twisted, sym))
        }
        _ => None,
    };

    let (dimension, hilbert, oracle_section) = match (&ct, finite, odd_order) {
        (Some(ct), Some(true), true) => {
            let dim = nichols_dimension(&b, ct)?;
            let top = top_degree(&b, ct)?;
            let series_cap = degree_cap.unwrap_or(top).min(top);
            let hilbert = hilbert_as_u64(&b, ct, series_cap as usize)?;
            let oracle_section = if oracle {
                let dims = total_dimension(&b, ct, degree_cap.unwrap_or(DEFAULT_DEGREE_CAP))?;
                let ranks: Vec<u64> = dims.ranks.iter().map(|&r| r as u64).collect();
                let matches_formula = hilbert.as_ref().map(|h| {
                    let prefix_ok = ranks.iter().zip(h.iter()).all(|(a, b)| a == b);
                    let total_ok = match &dims.total {
                        Some(t) => *t == dim,
                        None => true, // capped run: only the prefix is compared
                    };
                    prefix_ok && total_ok
                });
                Some(OracleSection {
                    ranks,
                    total: dims.total.as_ref().map(|t| t.to_string()),
                    capped: dims.capped,
                    matches_formula,
                })
            } else {
                None
            };
            (Some(dim.to_string()), hilbert, oracle_section)
        }
        _ => (None, None, None),
    };

    emit(&AnalysisReport {
        input: input_json,
        symmetric,
        odd_order,
        components: components_json(&components),
        cartan: cartan_section,
        finite_type: finite,
        fl,
        twist,
        dimension,
        hilbert,
        oracle: oracle_section,
    })
}
