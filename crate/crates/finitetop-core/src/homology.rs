//! Integer simplicial homology via Smith normal form.
//!
//! Boundary matrices are built from the canonical face order of a
//! complex. The Smith reduction runs on `i128` with checked arithmetic
//! and transparently restarts on arbitrary-precision integers if an
//! intermediate entry overflows, so results are always exact.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::guards;
use crate::simcomplex::AbstractComplex;

/// Simplices grouped by dimension together with the boundary matrices
/// between consecutive groups.
#[derive(Debug, Clone)]
pub struct ChainComplexData {
    simplices: Vec<Vec<BTreeSet<usize>>>,
    labels: Vec<Vec<String>>,
    /// `boundaries[q]` is the matrix of the boundary map from dimension
    /// `q + 1` chains to dimension `q` chains.
    boundaries: Vec<Vec<Vec<i64>>>,
}

impl ChainComplexData {
    pub fn dimension(&self) -> usize {
        self.simplices.len() - 1
    }

    pub fn simplices(&self, q: usize) -> &[BTreeSet<usize>] {
        &self.simplices[q]
    }

    pub fn labels(&self, q: usize) -> &[String] {
        &self.labels[q]
    }

    pub fn simplex_count(&self, q: usize) -> usize {
        if q < self.simplices.len() { self.simplices[q].len() } else { 0 }
    }

    /// Boundary from `q`-chains to `(q-1)`-chains; rows index the
    /// codomain. `q = 0` and `q > dim` give empty matrices.
    pub fn boundary(&self, q: usize) -> Option<&Vec<Vec<i64>>> {
        if q == 0 || q > self.dimension() {
            None
        } else {
            Some(&self.boundaries[q - 1])
        }
    }

    /// The defining identity of a chain complex.
    pub fn boundary_squares_to_zero(&self) -> bool {
        for q in 1..self.dimension() {
            let a = &self.boundaries[q - 1]; // d_q: rows n_{q-1}, cols n_q
            let b = &self.boundaries[q]; // d_{q+1}: rows n_q, cols n_{q+1}
            let rows = a.len();
            let cols = if b.is_empty() { 0 } else { b[0].len() };
            for i in 0..rows {
                for j in 0..cols {
                    let mut acc: i64 = 0;
                    for (k, b_row) in b.iter().enumerate() {
                        acc += a[i][k] * b_row[j];
                    }
                    if acc != 0 {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Build the chain complex of a finite simplicial complex. The sign of
/// an entry follows the position of the removed vertex in the sorted
/// simplex.
pub fn chain_complex(k: &AbstractComplex) -> Result<ChainComplexData> {
    let faces = k.faces_with_guard(guards::CHAIN_COMPLEX_MAX_SIMPLICES)?;
    if faces.len() > guards::CHAIN_COMPLEX_MAX_SIMPLICES {
        return Err(Error::resource(format!(
            "chain complex limited to {} simplices",
            guards::CHAIN_COMPLEX_MAX_SIMPLICES
        )));
    }
    let dim = k.dimension();
    let mut simplices: Vec<Vec<BTreeSet<usize>>> = vec![Vec::new(); dim + 1];
    for f in faces {
        simplices[f.len() - 1].push(f);
    }
    let labels: Vec<Vec<String>> = simplices
        .iter()
        .map(|layer| layer.iter().map(|s| k.label_of(s)).collect())
        .collect();
    let mut boundaries = Vec::with_capacity(dim);
    for q in 1..=dim {
        let rows = simplices[q - 1].len();
        let cols = simplices[q].len();
        let mut m = vec![vec![0i64; cols]; rows];
        for (j, s) in simplices[q].iter().enumerate() {
            let vs: Vec<usize> = s.iter().copied().collect();
            for (pos, _) in vs.iter().enumerate() {
                let face: BTreeSet<usize> =
                    vs.iter().enumerate().filter(|&(p, _)| p != pos).map(|(_, &v)| v).collect();
                let i = simplices[q - 1]
                    .binary_search_by(|c| {
                        c.iter().copied().collect::<Vec<_>>().cmp(
                            &face.iter().copied().collect::<Vec<_>>(),
                        )
                    })
                    .expect("face of a simplex is a simplex");
                m[i][j] = if pos % 2 == 0 { 1 } else { -1 };
            }
        }
        boundaries.push(m);
    }
    let data = ChainComplexData { simplices, labels, boundaries };
    debug_assert!(data.boundary_squares_to_zero());
    Ok(data)
}

// --- Smith normal form over a generic exact integer ring ---

trait Ring: Clone + Ord + Zero + Signed {
    fn cadd(&self, o: &Self) -> Option<Self>;
    fn cmul(&self, o: &Self) -> Option<Self>;
    fn cdiv_rem(&self, o: &Self) -> Option<(Self, Self)>;
    fn from_i64(v: i64) -> Self;
}

impl Ring for i128 {
    fn cadd(&self, o: &Self) -> Option<Self> {
        self.checked_add(*o)
    }
    fn cmul(&self, o: &Self) -> Option<Self> {
        self.checked_mul(*o)
    }
    fn cdiv_rem(&self, o: &Self) -> Option<(Self, Self)> {
        Some((self.checked_div(*o)?, self.checked_rem(*o)?))
    }
    fn from_i64(v: i64) -> Self {
        v as i128
    }
}

impl Ring for BigInt {
    fn cadd(&self, o: &Self) -> Option<Self> {
        Some(self + o)
    }
    fn cmul(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn cdiv_rem(&self, o: &Self) -> Option<(Self, Self)> {
        Some(self.div_rem(o))
    }
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
}

struct SnfCore<T> {
    rank: usize,
    factors: Vec<T>,
    /// Columns of the accumulated right transform spanning the kernel.
    kernel: Vec<Vec<T>>,
}

/// Diagonalize by row/column operations with smallest-absolute-value
/// pivoting; returns None on arithmetic overflow (caller restarts with
/// wider integers). The right transform is accumulated so the trailing
/// columns give an integer kernel basis.
fn snf_core<T: Ring>(mut a: Vec<Vec<T>>, want_kernel: bool) -> Option<SnfCore<T>> {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut v: Vec<Vec<T>> = if want_kernel {
        (0..cols)
            .map(|i| (0..cols).map(|j| if i == j { T::one() } else { T::zero() }).collect())
            .collect()
    } else {
        Vec::new()
    };
    let mut t = 0usize;
    while t < rows.min(cols) {
        // smallest nonzero absolute value in the remaining submatrix
        let mut pivot: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if !a[i][j].is_zero()
                    && pivot.is_none_or(|(pi, pj)| a[i][j].abs() < a[pi][pj].abs())
                {
                    pivot = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        a.swap(t, pi);
        swap_cols(&mut a, t, pj);
        if want_kernel {
            swap_cols(&mut v, t, pj);
        }
        loop {
            let mut clean = true;
            // clear the pivot column
            for i in (t + 1)..rows {
                if a[i][t].is_zero() {
                    continue;
                }
                let (q, r) = a[i][t].cdiv_rem(&a[t][t])?;
                row_op(&mut a, i, t, &q)?;
                if !r.is_zero() {
                    a.swap(t, i);
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            // clear the pivot row
            for j in (t + 1)..cols {
                if a[t][j].is_zero() {
                    continue;
                }
                let (q, r) = a[t][j].cdiv_rem(&a[t][t])?;
                col_op(&mut a, j, t, &q)?;
                if want_kernel {
                    col_op(&mut v, j, t, &q)?;
                }
                if !r.is_zero() {
                    swap_cols(&mut a, t, j);
                    if want_kernel {
                        swap_cols(&mut v, t, j);
                    }
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            // pivot must divide the remaining block for the invariant
            // factor chain
            let mut fixed = true;
            'scan: for i in (t + 1)..rows {
                for j in (t + 1)..cols {
                    let (_, r) = a[i][j].cdiv_rem(&a[t][t])?;
                    if !r.is_zero() {
                        let row: Vec<T> = a[i].clone();
                        for (dst, src) in a[t].iter_mut().zip(row.iter()) {
                            *dst = dst.cadd(src)?;
                        }
                        fixed = false;
                        break 'scan;
                    }
                }
            }
            if fixed {
                break;
            }
        }
        if a[t][t].is_negative() {
            a[t][t] = -a[t][t].clone();
        }
        t += 1;
    }
    let rank = t;
    let factors = (0..rank).map(|i| a[i][i].clone()).collect();
    let kernel = if want_kernel {
        (rank..cols)
            .map(|j| (0..cols).map(|i| v[i][j].clone()).collect())
            .collect()
    } else {
        Vec::new()
    };
    Some(SnfCore { rank, factors, kernel })
}

fn swap_cols<T>(m: &mut [Vec<T>], a: usize, b: usize) {
    if a != b {
        for row in m.iter_mut() {
            row.swap(a, b);
        }
    }
}

/// row_i -= q * row_t
fn row_op<T: Ring>(m: &mut [Vec<T>], i: usize, t: usize, q: &T) -> Option<()> {
    if q.is_zero() {
        return Some(());
    }
    let src: Vec<T> = m[t].clone();
    for (dst, s) in m[i].iter_mut().zip(src.iter()) {
        *dst = dst.cadd(&(-q.clone()).cmul(s)?)?;
    }
    Some(())
}

/// col_j -= q * col_t
fn col_op<T: Ring>(m: &mut [Vec<T>], j: usize, t: usize, q: &T) -> Option<()> {
    if q.is_zero() {
        return Some(());
    }
    for row in m.iter_mut() {
        let delta = (-q.clone()).cmul(&row[t])?;
        row[j] = row[j].cadd(&delta)?;
    }
    Some(())
}

/// Rank and invariant factors of an integer matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithNormalForm {
    pub rank: usize,
    /// d_1 | d_2 | ... | d_rank, all positive.
    pub factors: Vec<u128>,
}

fn convert<T: Ring>(m: &[Vec<i64>]) -> Vec<Vec<T>> {
    m.iter().map(|row| row.iter().map(|&x| T::from_i64(x)).collect()).collect()
}

fn snf_result(core: SnfCore<BigInt>) -> Result<(SmithNormalForm, Vec<Vec<BigInt>>)> {
    let factors = core
        .factors
        .iter()
        .map(|f| {
            f.to_u128()
                .ok_or_else(|| Error::resource("invariant factor exceeds u128"))
        })
        .collect::<Result<Vec<u128>>>()?;
    Ok((SmithNormalForm { rank: core.rank, factors }, core.kernel))
}

pub fn smith_normal_form(m: &[Vec<i64>]) -> Result<SmithNormalForm> {
    if let Some(core) = snf_core::<i128>(convert(m), false) {
        let factors = core
            .factors
            .iter()
            .map(|&f| {
                u128::try_from(f)
                    .map_err(|_| Error::resource("invariant factor exceeds u128"))
            })
            .collect::<Result<Vec<u128>>>()?;
        return Ok(SmithNormalForm { rank: core.rank, factors });
    }
    let core = snf_core::<BigInt>(convert(m), false).expect("big integers never overflow");
    Ok(snf_result(core)?.0)
}

/// As `smith_normal_form`, additionally returning an integer basis of
/// the kernel (the trailing columns of the right transform).
pub(crate) fn snf_with_kernel(m: &[Vec<i64>]) -> Result<(SmithNormalForm, Vec<Vec<BigInt>>)> {
    if let Some(core) = snf_core::<i128>(convert(m), true) {
        let factors = core
            .factors
            .iter()
            .map(|&f| {
                u128::try_from(f)
                    .map_err(|_| Error::resource("invariant factor exceeds u128"))
            })
            .collect::<Result<Vec<u128>>>()?;
        let kernel = core
            .kernel
            .into_iter()
            .map(|col| col.into_iter().map(BigInt::from).collect())
            .collect();
        return Ok((SmithNormalForm { rank: core.rank, factors }, kernel));
    }
    let core = snf_core::<BigInt>(convert(m), true).expect("big integers never overflow");
    snf_result(core)
}

/// Integer rank of a matrix already held in arbitrary precision.
pub(crate) fn bigint_rank(m: Vec<Vec<BigInt>>) -> usize {
    snf_core::<BigInt>(m, false).expect("big integers never overflow").rank
}

/// Unreduced integral homology: Betti numbers and torsion coefficients
/// per dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyResult {
    pub betti: Vec<usize>,
    pub torsion: Vec<Vec<u128>>,
}

pub fn homology(k: &AbstractComplex) -> Result<HomologyResult> {
    let cc = chain_complex(k)?;
    homology_of_chain_complex(&cc)
}

pub fn homology_of_chain_complex(cc: &ChainComplexData) -> Result<HomologyResult> {
    let dim = cc.dimension();
    let mut snfs: Vec<SmithNormalForm> = Vec::with_capacity(dim);
    for q in 1..=dim {
        snfs.push(smith_normal_form(cc.boundary(q).expect("q in range"))?);
    }
    let mut betti = Vec::with_capacity(dim + 1);
    let mut torsion = Vec::with_capacity(dim + 1);
    for q in 0..=dim {
        let rank_q = if q == 0 { 0 } else { snfs[q - 1].rank };
        let rank_q1 = if q < dim { snfs[q].rank } else { 0 };
        betti.push(cc.simplex_count(q) - rank_q - rank_q1);
        let tors: Vec<u128> = if q < dim {
            snfs[q].factors.iter().copied().filter(|&f| f >= 2).collect()
        } else {
            Vec::new()
        };
        torsion.push(tors);
    }
    Ok(HomologyResult { betti, torsion })
}
