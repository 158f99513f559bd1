//! Scale-filtered shape pipeline for finite metric spaces: the family
//! of epsilon-small subsets inside the hyperspace, its order complex
//! (the subdivided Vietoris-Rips complex), and Betti numbers with
//! transition ranks along an increasing scale grid.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::guards;
use crate::homology::{
    bigint_rank, chain_complex, homology, homology_of_chain_complex, snf_with_kernel,
    HomologyResult,
};
use crate::mccord::{order_complex, SimplicialNeighborhood};
use crate::metric::FiniteMetricSpace;
use crate::simcomplex::{vietoris_rips, AbstractComplex};

/// The open family of all nonempty point sets of diameter strictly
/// below `eps`, as a simplicial neighborhood over the point ids. Its
/// member family is by definition the simplex set of the Vietoris-Rips
/// complex at the same scale.
pub fn u_epsilon_f(m: &FiniteMetricSpace, eps: f64) -> Result<SimplicialNeighborhood> {
    if m.len() > guards::U_EPSILON_MAX_POINTS {
        return Err(Error::resource(format!(
            "subset family materialization limited to {} points",
            guards::U_EPSILON_MAX_POINTS
        )));
    }
    let rips = vietoris_rips(m, eps)?;
    // the diameter family is down-closed, so closing the maximal
    // cliques reproduces it exactly
    SimplicialNeighborhood::new_closing(m.ids(), &rips.maximal_simplices_by_id())
}

/// Order complex of the epsilon family: chains of epsilon-small sets
/// under inclusion. Carries the same canonical labels as the
/// barycentric subdivision of the Rips complex, to which it is equal.
pub fn mccord_stage(m: &FiniteMetricSpace, eps: f64) -> Result<AbstractComplex> {
    let u = u_epsilon_f(m, eps)?;
    order_complex(&u.to_preorder())
}

/// The stage complex is the subdivided Rips complex: same simplex
/// family, isomorphic complexes, same homology.
pub fn verify_rips_correspondence(m: &FiniteMetricSpace, eps: f64) -> Result<bool> {
    let rips = vietoris_rips(m, eps)?;
    let u = u_epsilon_f(m, eps)?;
    let rips_faces = rips.faces()?;
    if u.members().len() != rips_faces.len() {
        return Ok(false);
    }
    for f in &rips_faces {
        // vertex index sets agree because both sort ids canonically
        if !u.contains(f) {
            return Ok(false);
        }
    }
    let stage = mccord_stage(m, eps)?;
    let sd = rips.barycentric_subdivision()?;
    // literal equality (same labels) is the common case; fall back to a
    // guarded isomorphism search when labels happen to differ
    if stage != sd && !stage.is_isomorphic(&sd)? {
        return Ok(false);
    }
    // the homology cross-check needs dense exact linear algebra, so it
    // only runs when the subdivided complex is small enough for it
    match stage.faces_with_guard(guards::HOMOLOGY_CROSS_CHECK_MAX_FACES) {
        Ok(_) => Ok(homology(&stage)? == homology(&rips)?),
        Err(_) => Ok(true),
    }
}

/// Rank over the rationals of the map induced on q-th homology by the
/// inclusion of the Rips complex at `eps_lo` into the one at `eps_hi`:
/// the number of independent cycle classes that survive the transition.
pub fn transition_rank(
    m: &FiniteMetricSpace,
    eps_lo: f64,
    eps_hi: f64,
    q: usize,
) -> Result<usize> {
    if !(eps_lo > 0.0) || !(eps_hi >= eps_lo) {
        return Err(Error::domain("scales must satisfy 0 < eps_lo <= eps_hi"));
    }
    let small = chain_complex(&vietoris_rips(m, eps_lo)?)?;
    let large_k = vietoris_rips(m, eps_hi)?;
    let large = chain_complex(&large_k)?;
    if q > small.dimension() || q > large.dimension() {
        return Ok(0);
    }
    // integer basis of the q-cycles of the small complex
    let cycles: Vec<Vec<BigInt>> = match small.boundary(q) {
        Some(d_q) => snf_with_kernel(d_q)?.1,
        // q = 0: every chain is a cycle
        None => {
            let n = small.simplex_count(0);
            (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| if i == j { BigInt::from(1) } else { BigInt::from(0) })
                        .collect()
                })
                .collect()
        }
    };
    if cycles.is_empty() {
        return Ok(0);
    }
    // position of each small q-simplex inside the large complex
    let index: BTreeMap<&str, usize> = large
        .labels(q)
        .iter()
        .enumerate()
        .map(|(i, l)| (l.as_str(), i))
        .collect();
    let rows = large.simplex_count(q);
    let mut included: Vec<Vec<BigInt>> = Vec::with_capacity(cycles.len());
    for z in &cycles {
        let mut v = alloc::vec![BigInt::from(0); rows];
        for (j, coeff) in z.iter().enumerate() {
            let label = &small.labels(q)[j];
            let i = *index
                .get(label.as_str())
                .ok_or_else(|| Error::domain(format!("simplex {label} missing upstairs")))?;
            v[i] = coeff.clone();
        }
        included.push(v);
    }
    // rank of the image in H_q = rank([boundaries | cycles]) - rank(boundaries)
    let boundary_cols: Vec<Vec<BigInt>> = match large.boundary(q + 1) {
        Some(d) if !d.is_empty() => {
            let cols = d[0].len();
            (0..cols)
                .map(|j| (0..rows).map(|i| BigInt::from(d[i][j])).collect())
                .collect()
        }
        _ => Vec::new(),
    };
    let as_matrix = |col_sets: &[&[Vec<BigInt>]]| -> Vec<Vec<BigInt>> {
        let total: usize = col_sets.iter().map(|c| c.len()).sum();
        let mut mat = alloc::vec![alloc::vec![BigInt::from(0); total]; rows];
        let mut offset = 0;
        for set in col_sets {
            for (j, col) in set.iter().enumerate() {
                for i in 0..rows {
                    mat[i][offset + j] = col[i].clone();
                }
            }
            offset += set.len();
        }
        mat
    };
    let rank_b = bigint_rank(as_matrix(&[&boundary_cols]));
    let rank_bz = bigint_rank(as_matrix(&[&boundary_cols, &included]));
    Ok(rank_bz - rank_b)
}

/// Homology along an increasing scale grid plus the transition ranks
/// between consecutive stages.
#[derive(Debug, Clone, PartialEq)]
pub struct ShapeReport {
    pub epsilons: Vec<f64>,
    pub homologies: Vec<HomologyResult>,
    /// `transitions[i][q]` = rank of H_q at grid[i] -> H_q at grid[i+1].
    pub transitions: Vec<Vec<usize>>,
}

pub fn shape_scan(m: &FiniteMetricSpace, grid: &[f64]) -> Result<ShapeReport> {
    if grid.is_empty() {
        return Err(Error::domain("scale grid must be nonempty"));
    }
    for w in grid.windows(2) {
        if !(w[0] < w[1]) {
            return Err(Error::domain("scale grid must be strictly increasing"));
        }
    }
    if !(grid[0] > 0.0) {
        return Err(Error::domain("scales must be positive"));
    }
    let mut homologies = Vec::with_capacity(grid.len());
    for &eps in grid {
        homologies.push(homology_of_chain_complex(&chain_complex(&vietoris_rips(
            m, eps,
        )?)?)?);
    }
    let mut transitions = Vec::with_capacity(grid.len().saturating_sub(1));
    for i in 0..grid.len().saturating_sub(1) {
        let depth = homologies[i].betti.len().max(homologies[i + 1].betti.len());
        let mut per_q = Vec::with_capacity(depth);
        for q in 0..depth {
            per_q.push(transition_rank(m, grid[i], grid[i + 1], q)?);
        }
        transitions.push(per_q);
    }
    Ok(ShapeReport { epsilons: grid.to_vec(), homologies, transitions })
}
