//! Finite preorders as carriers for finite Alexandroff spaces.
//!
//! Convention, fixed for the whole crate: opens are down-sets. The
//! minimal neighborhood of `x` is therefore the down-set of `x` and the
//! closure of `{x}` is its up-set. T0 is equivalent to antisymmetry of
//! the relation, and continuity of maps between these spaces is
//! equivalent to order preservation.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::bitmat::BitMatrix;
use crate::error::{Error, Result};
use crate::guards;

/// A finite set with a reflexive transitive relation.
///
/// Elements are opaque string ids kept in canonical sorted order; the
/// full relation is stored as bit rows after transitive closure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinitePreorder {
    elements: Vec<String>,
    leq: BitMatrix,
}

impl FinitePreorder {
    /// Build from Hasse (cover) pairs `(a, b)` meaning `a < b`. The
    /// relation is reflexively and transitively closed on load.
    pub fn from_covers<S: AsRef<str>>(elements: &[S], covers: &[(S, S)]) -> Result<Self> {
        Self::from_relation(elements, covers)
    }

    /// Build from arbitrary relation pairs `(a, b)` meaning `a <= b`;
    /// the reflexive transitive closure is taken. Covers are a special
    /// case, so this is also the cover loader.
    pub fn from_relation<S: AsRef<str>>(elements: &[S], pairs: &[(S, S)]) -> Result<Self> {
        Self::from_relation_with_pair_cap(elements, pairs, guards::DEFAULT_PAIR_CAP)
    }

    pub fn from_relation_with_pair_cap<S: AsRef<str>>(
        elements: &[S],
        pairs: &[(S, S)],
        pair_cap: usize,
    ) -> Result<Self> {
        let mut ids: Vec<String> = elements.iter().map(|e| e.as_ref().to_string()).collect();
        ids.sort_unstable();
        let before = ids.len();
        ids.dedup();
        if ids.len() != before {
            return Err(Error::domain("duplicate element id in element list"));
        }
        let n = ids.len();
        if n.saturating_mul(n) > pair_cap {
            return Err(Error::resource(format!(
                "relation needs {} pairs, cap is {pair_cap}",
                n * n
            )));
        }
        let index: BTreeMap<&str, usize> =
            ids.iter().enumerate().map(|(i, s)| (s.as_str(), i)).collect();
        let mut leq = BitMatrix::identity(n);
        for (a, b) in pairs {
            let &i = index
                .get(a.as_ref())
                .ok_or_else(|| Error::domain(format!("unknown element id `{}`", a.as_ref())))?;
            let &j = index
                .get(b.as_ref())
                .ok_or_else(|| Error::domain(format!("unknown element id `{}`", b.as_ref())))?;
            leq.set(i, j);
        }
        leq.transitive_close();
        Ok(FinitePreorder { elements: ids, leq })
    }

    /// Internal constructor from an already closed relation.
    pub(crate) fn from_closed_parts(elements: Vec<String>, leq: BitMatrix) -> Self {
        FinitePreorder { elements, leq }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn index_of(&self, id: &str) -> Result<usize> {
        self.elements
            .binary_search_by(|e| e.as_str().cmp(id))
            .map_err(|_| Error::domain(format!("unknown element id `{id}`")))
    }

    #[inline]
    pub fn leq_idx(&self, i: usize, j: usize) -> bool {
        self.leq.get(i, j)
    }

    pub fn leq(&self, a: &str, b: &str) -> Result<bool> {
        Ok(self.leq_idx(self.index_of(a)?, self.index_of(b)?))
    }

    /// Minimal neighborhood `B_x`: the down-set of `x`.
    pub fn min_neighborhood(&self, x: &str) -> Result<Vec<String>> {
        let i = self.index_of(x)?;
        Ok(self.down_set_idx(i).map(|j| self.elements[j].clone()).collect())
    }

    /// Closure of a set: its up-set.
    pub fn closure<S: AsRef<str>>(&self, set: &[S]) -> Result<Vec<String>> {
        let mut out: BTreeSet<usize> = BTreeSet::new();
        for s in set {
            let i = self.index_of(s.as_ref())?;
            out.extend(self.up_set_idx(i));
        }
        Ok(out.into_iter().map(|j| self.elements[j].clone()).collect())
    }

    pub fn down_set_idx(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(move |&j| self.leq_idx(j, i))
    }

    pub fn up_set_idx(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(move |&j| self.leq_idx(i, j))
    }

    /// T0 holds iff the relation is antisymmetric.
    pub fn is_t0(&self) -> bool {
        let n = self.len();
        for i in 0..n {
            for j in (i + 1)..n {
                if self.leq_idx(i, j) && self.leq_idx(j, i) {
                    return false;
                }
            }
        }
        true
    }

    /// Materialized finite spaces are always strongly locally finite;
    /// kept for interface symmetry with the lazy hyperspace.
    pub fn is_strongly_locally_finite(&self) -> bool {
        true
    }

    /// True iff the relation is trivial (no `x < y`).
    pub fn is_antichain(&self) -> bool {
        let n = self.len();
        for i in 0..n {
            for j in 0..n {
                if i != j && self.leq_idx(i, j) {
                    return false;
                }
            }
        }
        true
    }

    /// Hasse cover pairs `(i, j)` with `i < j` and nothing strictly between.
    pub fn covers_idx(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i == j || !self.leq_idx(i, j) || self.leq_idx(j, i) {
                    continue;
                }
                let mut is_cover = true;
                for k in 0..n {
                    if k != i
                        && k != j
                        && self.leq_idx(i, k)
                        && self.leq_idx(k, j)
                        && !self.leq_idx(k, i)
                        && !self.leq_idx(j, k)
                    {
                        is_cover = false;
                        break;
                    }
                }
                if is_cover {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn covers(&self) -> Vec<(String, String)> {
        self.covers_idx()
            .into_iter()
            .map(|(i, j)| (self.elements[i].clone(), self.elements[j].clone()))
            .collect()
    }

    /// Restriction to a subset of element indices.
    fn restrict(&self, keep: &[usize]) -> FinitePreorder {
        let elements: Vec<String> = keep.iter().map(|&i| self.elements[i].clone()).collect();
        let mut leq = BitMatrix::new(keep.len());
        for (a, &i) in keep.iter().enumerate() {
            for (b, &j) in keep.iter().enumerate() {
                if self.leq_idx(i, j) {
                    leq.set(a, b);
                }
            }
        }
        FinitePreorder { elements, leq }
    }

    /// Stong core: iteratively remove beat points until none remain.
    ///
    /// At each step the first beat point in canonical element order is
    /// removed; the result is unique up to isomorphism, so the order
    /// only serves determinism. A point is an up-beat point if its
    /// strict up-set has a minimum, a down-beat point if its strict
    /// down-set has a maximum. The input must be T0.
    pub fn core(&self) -> Result<FinitePreorder> {
        if !self.is_t0() {
            return Err(Error::precondition("core requires a T0 space"));
        }
        let mut current = self.clone();
        'outer: loop {
            let n = current.len();
            for x in 0..n {
                if current.is_beat_point(x) {
                    let keep: Vec<usize> = (0..n).filter(|&i| i != x).collect();
                    current = current.restrict(&keep);
                    continue 'outer;
                }
            }
            return Ok(current);
        }
    }

    fn is_beat_point(&self, x: usize) -> bool {
        let up: Vec<usize> = self.up_set_idx(x).filter(|&y| y != x).collect();
        if !up.is_empty() && up.iter().any(|&m| up.iter().all(|&y| self.leq_idx(m, y))) {
            return true;
        }
        let down: Vec<usize> = self.down_set_idx(x).filter(|&y| y != x).collect();
        !down.is_empty() && down.iter().any(|&m| down.iter().all(|&y| self.leq_idx(y, m)))
    }

    /// Order isomorphism test by backtracking.
    pub fn is_isomorphic_to(&self, other: &FinitePreorder) -> bool {
        if self.len() != other.len() {
            return false;
        }
        iso_search(self, other, &mut vec![usize::MAX; self.len()], &mut vec![false; self.len()], 0)
    }

    /// Count all order automorphisms by backtracking (the brute-force
    /// oracle for the hyperspace automorphism law).
    pub fn count_order_automorphisms(&self) -> u64 {
        let mut count = 0u64;
        auto_search(self, &mut vec![usize::MAX; self.len()], &mut vec![false; self.len()], 0, &mut |_| {
            count += 1
        });
        count
    }

    /// Enumerate order automorphisms as index permutations, stopping
    /// with a resource error past `limit`.
    pub fn order_automorphisms(&self, limit: usize) -> Result<Vec<Vec<usize>>> {
        let mut out: Vec<Vec<usize>> = Vec::new();
        let mut overflow = false;
        auto_search(self, &mut vec![usize::MAX; self.len()], &mut vec![false; self.len()], 0, &mut |p| {
            if out.len() < limit {
                out.push(p.to_vec());
            } else {
                overflow = true;
            }
        });
        if overflow {
            return Err(Error::resource(format!("more than {limit} automorphisms")));
        }
        Ok(out)
    }

    fn invariant(&self, i: usize) -> (usize, usize) {
        (self.down_set_idx(i).count(), self.up_set_idx(i).count())
    }
}

fn consistent(
    a: &FinitePreorder,
    b: &FinitePreorder,
    map: &[usize],
    depth: usize,
    i: usize,
    cand: usize,
) -> bool {
    if a.invariant(i) != b.invariant(cand) {
        return false;
    }
    for j in 0..depth {
        let jm = map[j];
        if a.leq_idx(i, j) != b.leq_idx(cand, jm) || a.leq_idx(j, i) != b.leq_idx(jm, cand) {
            return false;
        }
    }
    true
}

fn iso_search(
    a: &FinitePreorder,
    b: &FinitePreorder,
    map: &mut Vec<usize>,
    used: &mut Vec<bool>,
    depth: usize,
) -> bool {
    if depth == a.len() {
        return true;
    }
    for cand in 0..b.len() {
        if !used[cand] && consistent(a, b, map, depth, depth, cand) {
            map[depth] = cand;
            used[cand] = true;
            if iso_search(a, b, map, used, depth + 1) {
                return true;
            }
            used[cand] = false;
            map[depth] = usize::MAX;
        }
    }
    false
}

fn auto_search(
    p: &FinitePreorder,
    map: &mut Vec<usize>,
    used: &mut Vec<bool>,
    depth: usize,
    emit: &mut impl FnMut(&[usize]),
) {
    if depth == p.len() {
        emit(map);
        return;
    }
    for cand in 0..p.len() {
        if !used[cand] && consistent(p, p, map, depth, depth, cand) {
            map[depth] = cand;
            used[cand] = true;
            auto_search(p, map, used, depth + 1, emit);
            used[cand] = false;
            map[depth] = usize::MAX;
        }
    }
}

/// A total map between two finite preorders.
#[derive(Debug, Clone)]
pub struct PointMap {
    domain: FinitePreorder,
    codomain: FinitePreorder,
    assignment: Vec<usize>,
}

impl PointMap {
    /// Build from an id-to-id assignment; every domain element must
    /// have exactly one image.
    pub fn new(
        domain: FinitePreorder,
        codomain: FinitePreorder,
        assignment: &BTreeMap<String, String>,
    ) -> Result<Self> {
        let mut idx = Vec::with_capacity(domain.len());
        for e in domain.elements() {
            let img = assignment
                .get(e)
                .ok_or_else(|| Error::domain(format!("no image for element `{e}`")))?;
            idx.push(codomain.index_of(img)?);
        }
        if assignment.len() != domain.len() {
            for k in assignment.keys() {
                domain.index_of(k)?;
            }
        }
        Ok(PointMap { domain, codomain, assignment: idx })
    }

    pub(crate) fn from_indices(
        domain: FinitePreorder,
        codomain: FinitePreorder,
        assignment: Vec<usize>,
    ) -> Self {
        debug_assert_eq!(assignment.len(), domain.len());
        PointMap { domain, codomain, assignment }
    }

    pub fn identity(p: FinitePreorder) -> Self {
        let n = p.len();
        PointMap { domain: p.clone(), codomain: p, assignment: (0..n).collect() }
    }

    pub fn domain(&self) -> &FinitePreorder {
        &self.domain
    }

    pub fn codomain(&self) -> &FinitePreorder {
        &self.codomain
    }

    pub fn image_idx(&self, i: usize) -> usize {
        self.assignment[i]
    }

    pub fn image_of(&self, id: &str) -> Result<&str> {
        let i = self.domain.index_of(id)?;
        Ok(self.codomain.elements()[self.assignment[i]].as_str())
    }

    /// Continuity for Alexandroff spaces: order preservation.
    pub fn is_continuous(&self) -> bool {
        let n = self.domain.len();
        for i in 0..n {
            for j in 0..n {
                if self.domain.leq_idx(i, j)
                    && !self.codomain.leq_idx(self.assignment[i], self.assignment[j])
                {
                    return false;
                }
            }
        }
        true
    }

    /// Openness checked on the minimal basis: the image of every
    /// down-set of a point must be a down-set of the codomain.
    pub fn is_open_map(&self) -> bool {
        for x in 0..self.domain.len() {
            let image: BTreeSet<usize> =
                self.domain.down_set_idx(x).map(|i| self.assignment[i]).collect();
            for &y in &image {
                for z in self.codomain.down_set_idx(y) {
                    if !image.contains(&z) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Bijective with both directions order-preserving.
    pub fn is_homeomorphism(&self) -> bool {
        if self.domain.len() != self.codomain.len() {
            return false;
        }
        let mut seen = vec![false; self.codomain.len()];
        for &v in &self.assignment {
            if seen[v] {
                return false;
            }
            seen[v] = true;
        }
        if !self.is_continuous() {
            return false;
        }
        // inverse monotone
        let n = self.domain.len();
        for i in 0..n {
            for j in 0..n {
                if self.codomain.leq_idx(self.assignment[i], self.assignment[j])
                    && !self.domain.leq_idx(i, j)
                {
                    return false;
                }
            }
        }
        true
    }

    /// `self` after `other` (so `other` is applied first).
    pub fn compose(&self, other: &PointMap) -> Result<PointMap> {
        if other.codomain.elements() != self.domain.elements() {
            return Err(Error::domain("composition mismatch: codomain != domain"));
        }
        let assignment = other.assignment.iter().map(|&i| self.assignment[i]).collect();
        Ok(PointMap {
            domain: other.domain.clone(),
            codomain: self.codomain.clone(),
            assignment,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain3() -> FinitePreorder {
        FinitePreorder::from_covers(&["a", "b", "c"], &[("a", "b"), ("b", "c")]).unwrap()
    }

    fn sierpinski() -> FinitePreorder {
        FinitePreorder::from_covers(&["0", "1"], &[("0", "1")]).unwrap()
    }

    fn antichain(ids: &[&str]) -> FinitePreorder {
        FinitePreorder::from_covers::<&str>(ids, &[]).unwrap()
    }

    #[test]
    fn min_neighborhood_examples() {
        let d = antichain(&["a", "b", "c"]);
        assert_eq!(d.min_neighborhood("a").unwrap(), ["a"]);
        let s = sierpinski();
        assert_eq!(s.min_neighborhood("1").unwrap(), ["0", "1"]);
        let c = chain3();
        assert_eq!(c.min_neighborhood("b").unwrap(), ["a", "b"]);
        assert!(c.min_neighborhood("z").is_err());
    }

    #[test]
    fn closure_examples() {
        let c = chain3();
        assert_eq!(c.closure(&["b"]).unwrap(), ["b", "c"]);
        let a = antichain(&["a", "b"]);
        assert_eq!(a.closure(&["a"]).unwrap(), ["a"]);
        let s = sierpinski();
        assert_eq!(s.closure(&["0"]).unwrap(), ["0", "1"]);
    }

    #[test]
    fn t0_examples() {
        assert!(chain3().is_t0());
        let p = FinitePreorder::from_relation(&["a", "b"], &[("a", "b"), ("b", "a")]).unwrap();
        assert!(!p.is_t0());
        // three points with opens {1},{1,2},{1,2,3}: points 2 and 3 are
        // topologically indistinguishable, encoded as 2<=3 and 3<=2
        let q = FinitePreorder::from_relation(
            &["1", "2", "3"],
            &[("1", "2"), ("1", "3"), ("2", "3"), ("3", "2")],
        )
        .unwrap();
        assert!(!q.is_t0());
    }

    #[test]
    fn transitive_closure_works() {
        let c = chain3();
        assert!(c.leq("a", "c").unwrap());
        assert!(!c.leq("c", "a").unwrap());
    }

    #[test]
    fn continuity_examples() {
        let c = chain3();
        assert!(PointMap::identity(c.clone()).is_continuous());
        let constant: BTreeMap<String, String> =
            ["a", "b", "c"].iter().map(|e| (e.to_string(), "a".to_string())).collect();
        let f = PointMap::new(c.clone(), c.clone(), &constant).unwrap();
        assert!(f.is_continuous());
        // chain -> antichain of same size is continuous only if constant
        let a = antichain(&["x", "y", "z"]);
        let g = PointMap::new(
            c,
            a,
            &[("a", "x"), ("b", "y"), ("c", "z")]
                .iter()
                .map(|(u, v)| (u.to_string(), v.to_string()))
                .collect(),
        )
        .unwrap();
        assert!(!g.is_continuous());
        assert!(!g.is_homeomorphism());
    }

    #[test]
    fn open_map_examples() {
        let s = sierpinski();
        assert!(PointMap::identity(s.clone()).is_open_map());
        let point = antichain(&["p"]);
        let collapse = PointMap::new(
            s.clone(),
            point,
            &[("0", "p"), ("1", "p")].iter().map(|(u, v)| (u.to_string(), v.to_string())).collect(),
        )
        .unwrap();
        assert!(collapse.is_open_map());
        // inclusion of the top point into the two-point space: image of
        // the one basic open {top} is {1}, not a down-set
        let top = antichain(&["1"]);
        let inc = PointMap::new(
            top,
            s,
            &[("1", "1")].iter().map(|(u, v)| (u.to_string(), v.to_string())).collect(),
        )
        .unwrap();
        assert!(inc.is_continuous());
        assert!(!inc.is_open_map());
    }

    #[test]
    fn core_examples() {
        let point = antichain(&["p"]);
        assert_eq!(point.core().unwrap().len(), 1);
        // chains are contractible
        assert_eq!(chain3().core().unwrap().len(), 1);
        // minimal 4-point circle model: no beat points
        let circle = FinitePreorder::from_covers(
            &["a", "b", "c", "d"],
            &[("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")],
        )
        .unwrap();
        let core = circle.core().unwrap();
        assert_eq!(core.len(), 4);
        assert!(core.is_isomorphic_to(&circle));
        // non-T0 input rejected
        let p = FinitePreorder::from_relation(&["a", "b"], &[("a", "b"), ("b", "a")]).unwrap();
        assert!(p.core().is_err());
    }

    #[test]
    fn core_is_idempotent() {
        let circle = FinitePreorder::from_covers(
            &["a", "b", "c", "d"],
            &[("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")],
        )
        .unwrap();
        let once = circle.core().unwrap();
        let twice = once.core().unwrap();
        assert!(once.is_isomorphic_to(&twice));
    }

    #[test]
    fn minimality_of_min_neighborhood() {
        // every down-set containing x contains the down-set of x
        let p = FinitePreorder::from_covers(
            &["a", "b", "c", "d"],
            &[("a", "b"), ("a", "c"), ("b", "d"), ("c", "d")],
        )
        .unwrap();
        let n = p.len();
        for x in 0..n {
            let bx: BTreeSet<usize> = p.down_set_idx(x).collect();
            for mask in 0u32..(1 << n) {
                let set: BTreeSet<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
                let is_down = set
                    .iter()
                    .all(|&i| p.down_set_idx(i).all(|j| set.contains(&j)));
                if is_down && set.contains(&x) {
                    assert!(bx.is_subset(&set));
                }
            }
        }
    }

    #[test]
    fn leq_iff_min_neighborhood_inclusion() {
        let p = FinitePreorder::from_covers(
            &["a", "b", "c", "d"],
            &[("a", "b"), ("a", "c"), ("b", "d")],
        )
        .unwrap();
        for i in 0..p.len() {
            for j in 0..p.len() {
                let bi: BTreeSet<usize> = p.down_set_idx(i).collect();
                let bj: BTreeSet<usize> = p.down_set_idx(j).collect();
                assert_eq!(p.leq_idx(i, j), bi.is_subset(&bj));
            }
        }
    }

    #[test]
    fn continuity_equals_downset_preimage_condition() {
        // enumerate all down-sets of the codomain and check preimages
        let dom = FinitePreorder::from_covers(&["a", "b", "c"], &[("a", "b")]).unwrap();
        let cod = sierpinski();
        let n = dom.len();
        let maps = [
            [("a", "0"), ("b", "0"), ("c", "1")],
            [("a", "0"), ("b", "1"), ("c", "0")],
            [("a", "1"), ("b", "0"), ("c", "0")],
            [("a", "1"), ("b", "1"), ("c", "1")],
        ];
        for raw in maps {
            let f = PointMap::new(
                dom.clone(),
                cod.clone(),
                &raw.iter().map(|(u, v)| (u.to_string(), v.to_string())).collect(),
            )
            .unwrap();
            let mut preimages_ok = true;
            for mask in 0u32..(1 << cod.len()) {
                let set: BTreeSet<usize> =
                    (0..cod.len()).filter(|&i| mask >> i & 1 == 1).collect();
                let is_down =
                    set.iter().all(|&i| cod.down_set_idx(i).all(|j| set.contains(&j)));
                if !is_down {
                    continue;
                }
                let pre: BTreeSet<usize> =
                    (0..n).filter(|&i| set.contains(&f.image_idx(i))).collect();
                let pre_down =
                    pre.iter().all(|&i| dom.down_set_idx(i).all(|j| pre.contains(&j)));
                if !pre_down {
                    preimages_ok = false;
                    break;
                }
            }
            assert_eq!(f.is_continuous(), preimages_ok);
        }
    }

    #[test]
    fn covers_recover_chain() {
        let c = chain3();
        assert_eq!(c.covers(), vec![("a".into(), "b".into()), ("b".into(), "c".into())]);
    }

    #[test]
    fn pair_cap_guard() {
        let ids: Vec<String> = (0..300).map(|i| format!("e{i:03}")).collect();
        let refs: Vec<&str> = ids.iter().map(|s| s.as_str()).collect();
        assert!(FinitePreorder::from_covers::<&str>(&refs, &[]).is_err());
        assert!(
            FinitePreorder::from_relation_with_pair_cap::<&str>(&refs, &[], 1 << 20).is_ok()
        );
    }
}
