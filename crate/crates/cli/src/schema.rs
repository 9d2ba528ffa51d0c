//! JSON schemas for inputs and reports. Roots of unity appear as canonical
//! `"num/den"` strings everywhere; dimensions are decimal strings; indices
//! in reports are 1-based.

use serde::{Deserialize, Serialize};

use nichols_core::cyclotomic::{CyclotomicInt, RootOfUnity};
use nichols_core::realization::{FamilyReport, ZpClassification};
use nichols_core::twisting::{CocycleData, ExponentMatrix};
use nichols_core::BraidingMatrix;

use crate::CliError;

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct BraidingJson {
    pub theta: usize,
    pub entries: Vec<Vec<String>>,
}

impl BraidingJson {
    pub fn to_braiding(&self) -> Result<BraidingMatrix, CliError> {
        if self.theta == 0 || self.entries.len() != self.theta {
            return Err(CliError::Malformed(format!(
                "theta = {} does not match {} entry rows",
                self.theta,
                self.entries.len()
            )));
        }
        let mut rows = Vec::with_capacity(self.theta);
        for row in &self.entries {
            if row.len() != self.theta {
                return Err(CliError::Malformed("entries are not square".into()));
            }
            let parsed: Result<Vec<RootOfUnity>, _> =
                row.iter().map(|s| s.parse::<RootOfUnity>()).collect();
            rows.push(parsed.map_err(|e| CliError::Malformed(e.to_string()))?);
        }
        BraidingMatrix::new(rows).map_err(|e| CliError::Malformed(e.to_string()))
    }
}

/// One-based component blocks for reports.
pub fn components_json(comps: &[Vec<usize>]) -> Vec<Vec<usize>> {
    comps
        .iter()
        .map(|c| c.iter().map(|i| i + 1).collect())
        .collect()
}

#[derive(Debug, Serialize)]
pub struct CartanTypeReport {
    pub gcm: Option<Vec<Vec<i64>>>,
    pub orders: Option<Vec<u64>>,
    pub components: Vec<Vec<usize>>,
    pub symmetric: bool,
}

#[derive(Debug, Serialize)]
pub struct DimReport {
    pub finite_type: bool,
    pub components: Vec<Vec<usize>>,
    pub dimension: String,
    pub hilbert: Option<Vec<u64>>,
}

#[derive(Debug, Serialize)]
pub struct TwistReport {
    pub group: Vec<u64>,
    pub cocycle: Vec<Vec<u64>>,
    pub alpha_twisted: Vec<Vec<u64>>,
    pub symmetric: bool,
}

impl TwistReport {
    pub fn new(cocycle: &CocycleData, twisted: &ExponentMatrix, symmetric: bool) -> Self {
        TwistReport {
            group: cocycle.group().factors().to_vec(),
            cocycle: cocycle.entries().to_vec(),
            alpha_twisted: twisted.alpha().to_vec(),
            symmetric,
        }
    }
}

#[derive(Debug, Serialize, Deserialize)]
pub struct RealizationJson {
    pub g: Vec<Vec<i64>>,
    pub chi: Vec<Vec<i64>>,
}

#[derive(Debug, Serialize)]
pub struct FamilyJson {
    pub name: String,
    pub theta: usize,
    pub class_count: usize,
    pub dimension: String,
    pub representatives: Vec<RealizationJson>,
}

#[derive(Debug, Serialize)]
pub struct ZpReport {
    pub p: u64,
    pub group: Vec<u64>,
    pub families: Vec<FamilyJson>,
}

impl ZpReport {
    pub fn new(c: &ZpClassification) -> Self {
        ZpReport {
            p: c.p,
            group: vec![c.p],
            families: c.families.iter().map(family_json).collect(),
        }
    }
}

fn family_json(f: &FamilyReport) -> FamilyJson {
    FamilyJson {
        name: f.name.to_string(),
        theta: f.theta,
        class_count: f.class_count,
        dimension: f.dimension.to_string(),
        representatives: f
            .representatives
            .iter()
            .map(|r| RealizationJson {
                g: r.g_vectors().to_vec(),
                chi: r.chi().to_vec(),
            })
            .collect(),
    }
}

/// A cyclotomic integer as its power-basis coordinates (decimal strings).
#[derive(Debug, Serialize)]
pub struct CycIntJson {
    pub coeffs: Vec<String>,
}

impl CycIntJson {
    pub fn new(c: &CyclotomicInt) -> Self {
        CycIntJson {
            coeffs: c.coeffs().iter().map(|x| x.to_string()).collect(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct SerreTermJson {
    /// 1-based letters of the word.
    pub word: Vec<usize>,
    pub coefficient: CycIntJson,
}

#[derive(Debug, Serialize)]
pub struct SerreReport {
    pub i: usize,
    pub j: usize,
    pub a_ij: i64,
    pub level: u64,
    pub serre_element: Vec<SerreTermJson>,
    pub primitivity_scalar: String,
    pub primitive: bool,
}

#[derive(Debug, Serialize)]
pub struct AntisymReport {
    pub ranks: Vec<u64>,
    pub total: Option<String>,
    pub capped: bool,
}

#[derive(Debug, Serialize)]
pub struct FlReport {
    pub verdict: String,
    pub d: Option<Vec<u64>>,
    pub q: Option<String>,
    pub locally_fl: bool,
    pub rank2_criterion: Option<bool>,
}

#[derive(Debug, Serialize)]
pub struct CartanSection {
    pub gcm: Vec<Vec<i64>>,
    pub orders: Vec<u64>,
}

#[derive(Debug, Serialize)]
pub struct OracleSection {
    pub ranks: Vec<u64>,
    pub total: Option<String>,
    pub capped: bool,
    pub matches_formula: Option<bool>,
}

#[derive(Debug, Serialize)]
pub struct AnalysisReport {
    pub input: BraidingJson,
    pub symmetric: bool,
    pub odd_order: bool,
    pub components: Vec<Vec<usize>>,
    pub cartan: Option<CartanSection>,
    pub finite_type: Option<bool>,
    pub fl: Option<FlReport>,
    pub twist: Option<TwistReport>,
    pub dimension: Option<String>,
    pub hilbert: Option<Vec<u64>>,
    pub oracle: Option<OracleSection>,
}
