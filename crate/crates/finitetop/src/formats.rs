//! JSON formats for posets, complexes, neighborhoods and reports.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use finitetop_core::poset::FinitePreorder;
use finitetop_core::{
    AbstractComplex, HomologyResult, ShapeReport, SimplicialNeighborhood,
};

use crate::error::{AppError, AppResult};

#[derive(Debug, Serialize, Deserialize)]
pub struct PosetJson {
    pub elements: Vec<String>,
    /// Hasse pairs `[a, b]` meaning a < b; the loader closes
    /// transitively.
    pub covers: Vec<(String, String)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t0: Option<bool>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct ComplexJson {
    pub vertices: Vec<String>,
    pub maximal: Vec<Vec<String>>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct NeighborhoodJson {
    pub vertices: Vec<String>,
    pub members: Vec<Vec<String>>,
}

/// Named sets for nerve computation.
pub type FamilyJson = BTreeMap<String, Vec<String>>;

#[derive(Debug, Serialize, Deserialize)]
pub struct HomologyJson {
    pub betti: Vec<usize>,
    pub torsion: Vec<Vec<u64>>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct ShapeStageJson {
    pub eps: f64,
    pub betti: Vec<usize>,
    pub torsion: Vec<Vec<u64>>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct ShapeReportJson {
    pub stages: Vec<ShapeStageJson>,
    /// `transitions[i][q]` = rank of H_q from stage i into stage i+1.
    pub transitions: Vec<Vec<usize>>,
}

fn read(path: &Path) -> AppResult<String> {
    std::fs::read_to_string(path)
        .map_err(|e| AppError::io(format!("cannot read {}: {e}", path.display())))
}

fn parse<T: for<'de> Deserialize<'de>>(path: &Path, what: &str) -> AppResult<T> {
    serde_json::from_str(&read(path)?)
        .map_err(|e| AppError::io(format!("malformed {what} file {}: {e}", path.display())))
}

pub fn load_poset(path: &Path) -> AppResult<FinitePreorder> {
    let data: PosetJson = parse(path, "poset")?;
    let p = FinitePreorder::from_relation(&data.elements, &data.covers)?;
    if let Some(declared) = data.t0 {
        if declared != p.is_t0() {
            return Err(AppError::io(format!(
                "field `t0` declares {declared} but the relation is {}",
                if p.is_t0() { "T0" } else { "not T0" }
            )));
        }
    }
    Ok(p)
}

pub fn poset_json(p: &FinitePreorder) -> PosetJson {
    PosetJson { elements: p.elements().to_vec(), covers: p.covers(), t0: Some(p.is_t0()) }
}

pub fn load_complex(path: &Path) -> AppResult<AbstractComplex> {
    let data: ComplexJson = parse(path, "complex")?;
    Ok(AbstractComplex::from_maximal(&data.vertices, &data.maximal)?)
}

pub fn complex_json(k: &AbstractComplex) -> ComplexJson {
    ComplexJson { vertices: k.vertices().to_vec(), maximal: k.maximal_simplices_by_id() }
}

pub fn load_neighborhood(path: &Path, strict: bool) -> AppResult<SimplicialNeighborhood> {
    let data: NeighborhoodJson = parse(path, "neighborhood")?;
    let u = if strict {
        SimplicialNeighborhood::new_strict(&data.vertices, &data.members)?
    } else {
        SimplicialNeighborhood::new_closing(&data.vertices, &data.members)?
    };
    Ok(u)
}

pub fn load_family(path: &Path) -> AppResult<FamilyJson> {
    parse(path, "family")
}

fn torsion_u64(torsion: &[Vec<u128>]) -> AppResult<Vec<Vec<u64>>> {
    torsion
        .iter()
        .map(|layer| {
            layer
                .iter()
                .map(|&f| {
                    u64::try_from(f)
                        .map_err(|_| AppError::io("torsion coefficient exceeds u64".into()))
                })
                .collect()
        })
        .collect()
}

pub fn homology_json(h: &HomologyResult) -> AppResult<HomologyJson> {
    Ok(HomologyJson { betti: h.betti.clone(), torsion: torsion_u64(&h.torsion)? })
}

pub fn shape_report_json(r: &ShapeReport) -> AppResult<ShapeReportJson> {
    let stages = r
        .epsilons
        .iter()
        .zip(r.homologies.iter())
        .map(|(&eps, h)| {
            Ok(ShapeStageJson {
                eps,
                betti: h.betti.clone(),
                torsion: torsion_u64(&h.torsion)?,
            })
        })
        .collect::<AppResult<_>>()?;
    Ok(ShapeReportJson { stages, transitions: r.transitions.clone() })
}

pub fn to_pretty(value: &impl Serialize) -> String {
    serde_json::to_string_pretty(value).expect("report types always serialize")
}
