//! Hyperspaces of nonempty subsets of a discrete ground set, ordered by
//! inclusion, with the minimal neighborhood of a point `C` being the
//! family of nonempty subsets of `C`.
//!
//! Finite grounds are materialized with points stored as bit masks; a
//! countable ground (the naturals) is answered lazily. The one-point
//! extension adds a top above every finite subset whose only
//! neighborhood is the whole space.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::bitmat::BitMatrix;
use crate::error::{Error, Result};
use crate::guards;
use crate::label::{nat_subset_label, subset_label};
use crate::poset::{FinitePreorder, PointMap};

/// A canonical nonempty finite subset of the naturals (sorted, no
/// duplicates). The point type of lazy hyperspaces and inverse systems.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FiniteSubset {
    members: Vec<u32>,
}

impl FiniteSubset {
    pub fn new(members: impl IntoIterator<Item = u32>) -> Result<Self> {
        let mut m: Vec<u32> = members.into_iter().collect();
        m.sort_unstable();
        m.dedup();
        if m.is_empty() {
            return Err(Error::domain("subset must be nonempty"));
        }
        Ok(FiniteSubset { members: m })
    }

    /// `{1, ..., n}`.
    pub fn initial_segment(n: u32) -> Result<Self> {
        FiniteSubset::new(1..=n)
    }

    pub fn members(&self) -> &[u32] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, v: u32) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    pub fn is_subset(&self, other: &FiniteSubset) -> bool {
        self.members.iter().all(|v| other.contains(*v))
    }

    pub fn union(&self, other: &FiniteSubset) -> FiniteSubset {
        let mut m = self.members.clone();
        m.extend_from_slice(&other.members);
        m.sort_unstable();
        m.dedup();
        FiniteSubset { members: m }
    }

    /// Maximum element (`m(C)` in the inverse-sequence verification).
    pub fn max_element(&self) -> u32 {
        *self.members.last().expect("nonempty")
    }

    /// All nonempty subsets, in canonical order.
    pub fn nonempty_subsets(&self) -> Vec<FiniteSubset> {
        let k = self.members.len();
        assert!(k < 32, "subset enumeration limited to 31 members");
        let mut out: Vec<FiniteSubset> = (1u32..(1 << k))
            .map(|mask| FiniteSubset {
                members: (0..k).filter(|i| mask >> i & 1 == 1).map(|i| self.members[i]).collect(),
            })
            .collect();
        out.sort();
        out
    }

    pub fn label(&self) -> String {
        nat_subset_label(&self.members)
    }
}

/// The poset of all nonempty subsets of a finite ground set, optionally
/// restricted to cardinality at most `cap`, ordered by inclusion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaterializedHyperspace {
    ground: Vec<String>,
    cap: Option<usize>,
    /// Point masks over ground indices, sorted by (cardinality, mask).
    points: Vec<u64>,
    index: BTreeMap<u64, usize>,
}

/// All nonempty subsets of `X` (cardinality-capped when requested).
pub fn build_power_finite<S: AsRef<str>>(
    ground: &[S],
    cap: Option<usize>,
) -> Result<MaterializedHyperspace> {
    let mut ids: Vec<String> = ground.iter().map(|g| g.as_ref().to_string()).collect();
    ids.sort_unstable();
    let before = ids.len();
    ids.dedup();
    if ids.len() != before {
        return Err(Error::domain("duplicate ground element"));
    }
    if ids.is_empty() {
        return Err(Error::domain("ground set must be nonempty"));
    }
    let n = ids.len();
    match cap {
        None => {
            if n > guards::POWER_UNCAPPED_MAX_GROUND {
                return Err(Error::resource(format!(
                    "uncapped hyperspace limited to ground size {}, got {n}",
                    guards::POWER_UNCAPPED_MAX_GROUND
                )));
            }
        }
        Some(r) => {
            if r == 0 {
                return Err(Error::domain("cardinality cap must be positive"));
            }
            if n > guards::POWER_UNCAPPED_MAX_GROUND
                && (r > guards::POWER_MAX_CAP || n > guards::POWER_CAPPED_MAX_GROUND)
            {
                return Err(Error::resource(format!(
                    "capped hyperspace limited to ground size {} with cap {}, got n={n} r={r}",
                    guards::POWER_CAPPED_MAX_GROUND,
                    guards::POWER_MAX_CAP
                )));
            }
        }
    }
    let rmax = cap.unwrap_or(n).min(n);
    let mut points: Vec<u64> = Vec::new();
    if n <= 24 {
        for mask in 1u64..(1u64 << n) {
            if (mask.count_ones() as usize) <= rmax {
                points.push(mask);
            }
        }
    } else {
        // wide ground with small cap: enumerate by cardinality
        let mut frontier: Vec<u64> = (0..n).map(|i| 1u64 << i).collect();
        points.extend_from_slice(&frontier);
        for _ in 1..rmax {
            let mut next: BTreeSet<u64> = BTreeSet::new();
            for &m in &frontier {
                let top = 63 - m.leading_zeros() as usize;
                for j in (top + 1)..n {
                    next.insert(m | 1u64 << j);
                }
            }
            frontier = next.into_iter().collect();
            points.extend_from_slice(&frontier);
        }
    }
    points.sort_by_key(|m| (m.count_ones(), *m));
    let index = points.iter().enumerate().map(|(i, &m)| (m, i)).collect();
    Ok(MaterializedHyperspace { ground: ids, cap, points, index })
}

impl MaterializedHyperspace {
    pub fn ground(&self) -> &[String] {
        &self.ground
    }

    pub fn cap(&self) -> Option<usize> {
        self.cap
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn mask_of<S: AsRef<str>>(&self, members: &[S]) -> Result<u64> {
        let mut mask = 0u64;
        for m in members {
            let i = self
                .ground
                .binary_search_by(|g| g.as_str().cmp(m.as_ref()))
                .map_err(|_| Error::domain(format!("unknown ground element `{}`", m.as_ref())))?;
            mask |= 1 << i;
        }
        if mask == 0 {
            return Err(Error::domain("subset must be nonempty"));
        }
        Ok(mask)
    }

    pub fn contains_mask(&self, mask: u64) -> bool {
        self.index.contains_key(&mask)
    }

    pub fn members_of(&self, mask: u64) -> Vec<String> {
        (0..self.ground.len()).filter(|i| mask >> i & 1 == 1).map(|i| self.ground[i].clone()).collect()
    }

    pub fn point_masks(&self) -> &[u64] {
        &self.points
    }

    pub fn label_of(&self, mask: u64) -> String {
        subset_label(&self.members_of(mask))
    }

    /// Specialization order: inclusion.
    pub fn leq_mask(&self, c: u64, d: u64) -> bool {
        c & !d == 0
    }

    /// Minimal neighborhood of `C`: all nonempty subsets of `C`.
    pub fn min_nbhd(&self, c: u64) -> Result<Vec<u64>> {
        if !self.contains_mask(c) {
            return Err(Error::domain("subset is not a point of this hyperspace"));
        }
        // enumerate submasks
        let mut out = Vec::with_capacity((1usize << c.count_ones()) - 1);
        let mut sub = c;
        loop {
            if sub != 0 {
                out.push(sub);
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & c;
        }
        out.sort_by_key(|m| (m.count_ones(), *m));
        Ok(out)
    }

    /// Structural T0 check over all point pairs.
    pub fn is_t0(&self) -> bool {
        // inclusion is antisymmetric by construction; checked honestly
        for (i, &c) in self.points.iter().enumerate() {
            for &d in &self.points[i + 1..] {
                if self.leq_mask(c, d) && self.leq_mask(d, c) {
                    return false;
                }
            }
        }
        true
    }

    /// T1 fails as soon as some point is below another.
    pub fn is_t1(&self) -> bool {
        !self.points.iter().enumerate().any(|(i, &c)| {
            self.points[i + 1..].iter().any(|&d| c != d && (self.leq_mask(c, d) || self.leq_mask(d, c)))
        })
    }

    pub fn is_strongly_locally_finite(&self) -> bool {
        true
    }

    /// Materialize as a `FinitePreorder` with subset labels as ids.
    pub fn to_preorder(&self) -> Result<FinitePreorder> {
        self.to_preorder_with_pair_cap(guards::DEFAULT_PAIR_CAP)
    }

    pub fn to_preorder_with_pair_cap(&self, pair_cap: usize) -> Result<FinitePreorder> {
        let n = self.points.len();
        if n.saturating_mul(n) > pair_cap {
            return Err(Error::resource(format!(
                "hyperspace has {n} points; relation exceeds pair cap {pair_cap}"
            )));
        }
        let mut labels: Vec<String> = self.points.iter().map(|&m| self.label_of(m)).collect();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| labels[a].cmp(&labels[b]));
        labels.sort();
        let mut leq = BitMatrix::identity(n);
        for (i, &pi) in order.iter().enumerate() {
            for (j, &pj) in order.iter().enumerate() {
                if self.leq_mask(self.points[pi], self.points[pj]) {
                    leq.set(i, j);
                }
            }
        }
        Ok(FinitePreorder::from_closed_parts(labels, leq))
    }

    /// Elevation of a ground bijection: `C` goes to its elementwise
    /// image. Always a homeomorphism of the hyperspace.
    pub fn elevation(&self, gamma: &BTreeMap<String, String>) -> Result<PointMap> {
        let perm = self.ground_permutation(gamma)?;
        let poset = self.to_preorder()?;
        let mut assignment = vec![0usize; poset.len()];
        for &mask in &self.points {
            let image = self.apply_ground_perm(mask, &perm);
            let from = poset.index_of(&self.label_of(mask))?;
            let to = poset.index_of(&self.label_of(image))?;
            assignment[from] = to;
        }
        Ok(PointMap::from_indices(poset.clone(), poset, assignment))
    }

    fn ground_permutation(&self, gamma: &BTreeMap<String, String>) -> Result<Vec<usize>> {
        let n = self.ground.len();
        if gamma.len() != n {
            return Err(Error::precondition("ground map must be defined on every element"));
        }
        let mut perm = vec![usize::MAX; n];
        let mut hit = vec![false; n];
        for (k, v) in gamma {
            let i = self
                .ground
                .binary_search_by(|g| g.as_str().cmp(k.as_str()))
                .map_err(|_| Error::domain(format!("unknown ground element `{k}`")))?;
            let j = self
                .ground
                .binary_search_by(|g| g.as_str().cmp(v.as_str()))
                .map_err(|_| Error::domain(format!("unknown ground element `{v}`")))?;
            if hit[j] {
                return Err(Error::precondition("ground map is not a bijection"));
            }
            hit[j] = true;
            perm[i] = j;
        }
        Ok(perm)
    }

    fn apply_ground_perm(&self, mask: u64, perm: &[usize]) -> u64 {
        let mut out = 0u64;
        for (i, &pi) in perm.iter().enumerate() {
            if mask >> i & 1 == 1 {
                out |= 1 << pi;
            }
        }
        out
    }

    /// Number of self-homeomorphisms, which must be `n!`.
    ///
    /// Homeomorphisms are exactly elevations of ground bijections, and
    /// an order automorphism is determined by its action on atoms (the
    /// points whose minimal neighborhood is a singleton family), so it
    /// suffices to enumerate ground permutations and verify that each
    /// extension by elementwise image preserves the order.
    pub fn automorphism_group_order(&self) -> Result<u64> {
        if self.cap.is_some() {
            return Err(Error::precondition(
                "automorphism enumeration requires an uncapped hyperspace",
            ));
        }
        let n = self.ground.len();
        if n > guards::AUTOMORPHISM_MAX_GROUND {
            return Err(Error::resource(format!(
                "automorphism enumeration limited to ground size {}, got {n}",
                guards::AUTOMORPHISM_MAX_GROUND
            )));
        }
        let mut count = 0u64;
        let mut perm: Vec<usize> = (0..n).collect();
        permute(&mut perm, 0, &mut |p| {
            if self.perm_extension_is_automorphism(p) {
                count += 1;
            }
        });
        Ok(count)
    }

    fn perm_extension_is_automorphism(&self, perm: &[usize]) -> bool {
        self.points.iter().all(|&c| {
            let fc = self.apply_ground_perm(c, perm);
            self.contains_mask(fc)
                && self.points.iter().all(|&d| {
                    self.leq_mask(c, d) == self.leq_mask(fc, self.apply_ground_perm(d, perm))
                })
        })
    }

    /// Number of self-homeomorphisms sending `C` to `D`:
    /// `|C|! * (n - |C|)!` when the cardinalities agree, zero otherwise.
    pub fn count_homeos_sending(&self, c: u64, d: u64) -> Result<u64> {
        if self.cap.is_some() {
            return Err(Error::precondition("requires an uncapped hyperspace"));
        }
        if !self.contains_mask(c) || !self.contains_mask(d) {
            return Err(Error::domain("subset is not a point of this hyperspace"));
        }
        if c.count_ones() != d.count_ones() {
            return Ok(0);
        }
        let n = self.ground.len() as u64;
        let k = c.count_ones() as u64;
        Ok(factorial(k) * factorial(n - k))
    }
}

fn factorial(k: u64) -> u64 {
    (1..=k).product::<u64>().max(1)
}

fn permute(perm: &mut Vec<usize>, k: usize, emit: &mut impl FnMut(&[usize])) {
    if k == perm.len() {
        emit(perm);
        return;
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        permute(perm, k + 1, emit);
        perm.swap(k, i);
    }
}

/// The hyperspace of a finite space `P`: points are the nonempty closed
/// sets (up-sets) of `P`, preordered by `C <= D` iff `C` is covered by
/// the union of the minimal neighborhoods of the points of `D`. The
/// result can fail T0.
pub fn hyperspace_of_finite_space(p: &FinitePreorder) -> Result<FinitePreorder> {
    let n = p.len();
    if n > guards::OF_SPACE_MAX_POINTS {
        return Err(Error::resource(format!(
            "closed-set enumeration limited to {} points, got {n}",
            guards::OF_SPACE_MAX_POINTS
        )));
    }
    // enumerate nonempty up-sets
    let mut closed: Vec<u32> = Vec::new();
    for mask in 1u32..(1 << n) {
        let is_up = (0..n)
            .filter(|&i| mask >> i & 1 == 1)
            .all(|i| p.up_set_idx(i).all(|j| mask >> j & 1 == 1));
        if is_up {
            closed.push(mask);
        }
    }
    // minimal-neighborhood union per point set
    let basis: Vec<u32> = (0..n)
        .map(|i| p.down_set_idx(i).fold(0u32, |acc, j| acc | 1 << j))
        .collect();
    let hull = |mask: u32| -> u32 {
        (0..n).filter(|&i| mask >> i & 1 == 1).fold(0u32, |acc, i| acc | basis[i])
    };
    let labels: Vec<String> = closed
        .iter()
        .map(|&mask| {
            let members: Vec<&str> = (0..n)
                .filter(|&i| mask >> i & 1 == 1)
                .map(|i| p.elements()[i].as_str())
                .collect();
            subset_label(&members)
        })
        .collect();
    let mut pairs: Vec<(String, String)> = Vec::new();
    for (a, &ca) in closed.iter().enumerate() {
        for (b, &cb) in closed.iter().enumerate() {
            if ca & !hull(cb) == 0 {
                pairs.push((labels[a].clone(), labels[b].clone()));
            }
        }
    }
    let refs: Vec<&str> = labels.iter().map(|s| s.as_str()).collect();
    let pair_refs: Vec<(&str, &str)> =
        pairs.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
    FinitePreorder::from_relation(&refs, &pair_refs)
}

/// The hyperspace of nonempty finite subsets of the naturals, answered
/// on demand. Locally finite but not strongly locally finite.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct LazyHyperspace;

/// Up-degree answer for lazy queries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UpDegree {
    Finite(u64),
    Infinite,
}

impl LazyHyperspace {
    pub fn new() -> Self {
        LazyHyperspace
    }

    /// Every canonical nonempty finite subset of the naturals is a point.
    pub fn contains(&self, _c: &FiniteSubset) -> bool {
        true
    }

    pub fn leq(&self, c: &FiniteSubset, d: &FiniteSubset) -> bool {
        c.is_subset(d)
    }

    /// Minimal neighborhood: all nonempty subsets of `C` (finite).
    pub fn min_nbhd(&self, c: &FiniteSubset) -> Vec<FiniteSubset> {
        c.nonempty_subsets()
    }

    /// Every point lies below infinitely many others.
    pub fn up_degree(&self, _c: &FiniteSubset) -> UpDegree {
        UpDegree::Infinite
    }

    pub fn is_locally_finite(&self) -> bool {
        true
    }

    pub fn is_strongly_locally_finite(&self) -> bool {
        false
    }
}

/// A point of the extended hyperspace: a finite subset or the top.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum ExtPoint {
    Finite(FiniteSubset),
    Top,
}

/// One-point extension of the lazy hyperspace: the top sits above every
/// finite subset and its only neighborhood is the whole space.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ExtendedHyperspace {
    base: LazyHyperspace,
}

/// Alexandroff extension of the lazy hyperspace. Since the base has no
/// nonempty closed compact subsets, the only new open set is the whole
/// space, which makes the extension coincide with the non-Hausdorff cone.
pub fn alexandroff_extension(base: LazyHyperspace) -> ExtendedHyperspace {
    ExtendedHyperspace { base }
}

impl ExtendedHyperspace {
    pub fn base(&self) -> &LazyHyperspace {
        &self.base
    }

    pub fn leq(&self, c: &ExtPoint, d: &ExtPoint) -> bool {
        match (c, d) {
            (_, ExtPoint::Top) => true,
            (ExtPoint::Top, ExtPoint::Finite(_)) => false,
            (ExtPoint::Finite(a), ExtPoint::Finite(b)) => self.base.leq(a, b),
        }
    }

    /// The minimal neighborhood of the top is not a finite family; the
    /// only open set containing it is the whole space.
    pub fn top_min_nbhd_is_whole_space(&self) -> bool {
        true
    }

    /// Compare against the non-Hausdorff cone on a truncation: both
    /// spaces assign each finite point the minimal neighborhood `2^C`
    /// and the top the whole space, and Alexandroff topologies are
    /// determined by minimal neighborhoods.
    pub fn coincides_with_non_hausdorff_cone(&self, truncation: u32) -> Result<bool> {
        if truncation == 0 || truncation > 16 {
            return Err(Error::resource("truncation must be in 1..=16"));
        }
        let full = FiniteSubset::initial_segment(truncation)?;
        for c in full.nonempty_subsets() {
            // extension minimal nbhd of a finite point
            let ext: BTreeSet<FiniteSubset> = self.base.min_nbhd(&c).into_iter().collect();
            // cone: proper opens are the opens of the base, so the
            // minimal neighborhood of a finite point is unchanged
            let cone: BTreeSet<FiniteSubset> = c.nonempty_subsets().into_iter().collect();
            if ext != cone {
                return Ok(false);
            }
        }
        // both give the top the whole space as minimal neighborhood
        Ok(self.top_min_nbhd_is_whole_space())
    }
}
