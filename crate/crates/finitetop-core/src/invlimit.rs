//! Inverse systems of finite hyperspace stages.
//!
//! The stages are the finite spaces `2^C` for `C` in a union-closed
//! family of finite subsets; the bonding map from the stage of `C'`
//! down to the stage of `C <= C'` keeps `D` when it fits inside `C` and
//! collapses it to `C` otherwise. Threads are compatible tuples, and
//! the truncated sequence over the initial segments of the naturals is
//! verified against the explicit thread formula.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::guards;
use crate::hyperspace::FiniteSubset;

/// A finite family of subsets closed under binary union: a truncation
/// of the directed index of the full system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirectedIndex {
    family: Vec<FiniteSubset>,
}

impl DirectedIndex {
    /// Build from a family already closed under union.
    pub fn new(family: impl IntoIterator<Item = FiniteSubset>) -> Result<Self> {
        let set: BTreeSet<FiniteSubset> = family.into_iter().collect();
        if set.is_empty() {
            return Err(Error::domain("index family must be nonempty"));
        }
        for a in &set {
            for b in &set {
                if !set.contains(&a.union(b)) {
                    return Err(Error::domain(format!(
                        "index family not union-closed: {} missing",
                        a.union(b).label()
                    )));
                }
            }
        }
        Ok(DirectedIndex { family: set.into_iter().collect() })
    }

    /// Close an arbitrary family under binary union, reporting whether
    /// anything had to be added.
    pub fn closing(family: impl IntoIterator<Item = FiniteSubset>) -> Result<(Self, bool)> {
        let mut set: BTreeSet<FiniteSubset> = family.into_iter().collect();
        if set.is_empty() {
            return Err(Error::domain("index family must be nonempty"));
        }
        let mut added = false;
        loop {
            let mut new: Vec<FiniteSubset> = Vec::new();
            for a in &set {
                for b in &set {
                    let u = a.union(b);
                    if !set.contains(&u) {
                        new.push(u);
                    }
                }
            }
            if new.is_empty() {
                break;
            }
            added = true;
            set.extend(new);
        }
        Ok((DirectedIndex { family: set.into_iter().collect() }, added))
    }

    /// All nonempty subsets of `{1..n}`.
    pub fn full_power(n: u32) -> Result<Self> {
        let full = FiniteSubset::initial_segment(n)?;
        DirectedIndex::new(full.nonempty_subsets())
    }

    /// The chain `{1} <= {1,2} <= ... <= {1..n}`.
    pub fn initial_chain(n: u32) -> Result<Self> {
        let family: Result<Vec<_>> = (1..=n).map(FiniteSubset::initial_segment).collect();
        DirectedIndex::new(family?)
    }

    pub fn members(&self) -> &[FiniteSubset] {
        &self.family
    }

    pub fn len(&self) -> usize {
        self.family.len()
    }

    pub fn is_empty(&self) -> bool {
        self.family.is_empty()
    }

    pub fn maximum(&self) -> Option<&FiniteSubset> {
        self.family.iter().find(|m| self.family.iter().all(|c| c.is_subset(m)))
    }
}

/// Bonding map `2^{C'} -> 2^C` for `C <= C'`: identity below `C`,
/// collapse to `C` otherwise.
pub fn bonding(
    c: &FiniteSubset,
    c_big: &FiniteSubset,
    d: &FiniteSubset,
) -> Result<FiniteSubset> {
    if !c.is_subset(c_big) {
        return Err(Error::domain(format!(
            "bonding requires {} <= {}",
            c.label(),
            c_big.label()
        )));
    }
    if !d.is_subset(c_big) {
        return Err(Error::domain(format!(
            "{} is not a point of the stage of {}",
            d.label(),
            c_big.label()
        )));
    }
    Ok(if d.is_subset(c) { d.clone() } else { c.clone() })
}

/// Sequence bonding `2^{1..n+1} -> 2^{1..n}`: identity when `n+1` is
/// absent from `C`, collapse to `{1..n}` otherwise.
pub fn bonding_seq(n: u32, c: &FiniteSubset) -> Result<FiniteSubset> {
    if c.max_element() > n + 1 {
        return Err(Error::domain(format!(
            "{} is not a point of the stage of {{1..{}}}",
            c.label(),
            n + 1
        )));
    }
    if c.contains(n + 1) {
        FiniteSubset::initial_segment(n)
    } else {
        Ok(c.clone())
    }
}

/// The inverse system over a directed index, with stage `2^C` at each
/// index element and the collapse bonding maps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InverseSystem {
    index: DirectedIndex,
}

impl InverseSystem {
    pub fn new(index: DirectedIndex) -> Self {
        InverseSystem { index }
    }

    pub fn index(&self) -> &DirectedIndex {
        &self.index
    }

    /// Points of the stage `2^C`, in canonical order.
    pub fn stage_points(&self, c: &FiniteSubset) -> Vec<FiniteSubset> {
        c.nonempty_subsets()
    }

    /// Functoriality over every index triple `C <= C' <= C''`.
    pub fn check_functoriality(&self) -> Result<bool> {
        for c2 in self.index.members() {
            for c1 in self.index.members().iter().filter(|c| c.is_subset(c2)) {
                for c0 in self.index.members().iter().filter(|c| c.is_subset(c1)) {
                    for d in self.stage_points(c2) {
                        let two_step = bonding(c0, c1, &bonding(c1, c2, &d)?)?;
                        let one_step = bonding(c0, c2, &d)?;
                        if two_step != one_step {
                            return Ok(false);
                        }
                    }
                }
            }
        }
        Ok(true)
    }

    /// Every bonding map is order-preserving, hence continuous.
    pub fn check_bonding_continuity(&self) -> Result<bool> {
        for c_big in self.index.members() {
            for c in self.index.members().iter().filter(|c| c.is_subset(c_big)) {
                let points = self.stage_points(c_big);
                for d in &points {
                    for e in &points {
                        if d.is_subset(e)
                            && !bonding(c, c_big, d)?.is_subset(&bonding(c, c_big, e)?)
                        {
                            return Ok(false);
                        }
                    }
                }
            }
        }
        Ok(true)
    }

    /// Brute-force enumeration of all compatible tuples, in canonical
    /// index order. Guarded by the product of stage sizes.
    pub fn enumerate_limit(&self) -> Result<Vec<Vec<FiniteSubset>>> {
        let stages: Vec<Vec<FiniteSubset>> =
            self.index.members().iter().map(|c| self.stage_points(c)).collect();
        let mut product: u128 = 1;
        for s in &stages {
            product = product.saturating_mul(s.len() as u128);
            if product > guards::LIMIT_ENUMERATION_MAX {
                return Err(Error::resource(format!(
                    "stage-size product exceeds {}",
                    guards::LIMIT_ENUMERATION_MAX
                )));
            }
        }
        let mut out: Vec<Vec<FiniteSubset>> = Vec::new();
        let mut current: Vec<FiniteSubset> = Vec::new();
        self.enumerate_rec(&stages, &mut current, &mut out)?;
        Ok(out)
    }

    fn enumerate_rec(
        &self,
        stages: &[Vec<FiniteSubset>],
        current: &mut Vec<FiniteSubset>,
        out: &mut Vec<Vec<FiniteSubset>>,
    ) -> Result<()> {
        let k = current.len();
        if k == stages.len() {
            out.push(current.clone());
            return Ok(());
        }
        let ck = &self.index.members()[k];
        'cand: for cand in &stages[k] {
            // compatibility against all already chosen components
            for (j, chosen) in current.iter().enumerate() {
                let cj = &self.index.members()[j];
                if cj.is_subset(ck) && bonding(cj, ck, cand)? != *chosen {
                    continue 'cand;
                }
                if ck.is_subset(cj) && bonding(ck, cj, chosen)? != *cand {
                    continue 'cand;
                }
            }
            current.push(cand.clone());
            self.enumerate_rec(stages, current, out)?;
            current.pop();
        }
        Ok(())
    }

    /// Compatibility test for a candidate tuple (one component per
    /// index element, in canonical index order).
    pub fn is_thread(&self, components: &[FiniteSubset]) -> Result<bool> {
        if components.len() != self.index.len() {
            return Err(Error::domain("tuple arity does not match the index"));
        }
        for (k, c) in self.index.members().iter().enumerate() {
            if !components[k].is_subset(c) {
                return Err(Error::domain(format!(
                    "component {} is not a point of the stage of {}",
                    components[k].label(),
                    c.label()
                )));
            }
        }
        for (i, ci) in self.index.members().iter().enumerate() {
            for (j, cj) in self.index.members().iter().enumerate() {
                if ci.is_subset(cj) && bonding(ci, cj, &components[j])? != components[i] {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// What a thread realizes: a finite subset or the extension point.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum ThreadSource {
    Finite(FiniteSubset),
    Top,
}

/// A realized compatible tuple over a directed index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Thread {
    source: ThreadSource,
    components: Vec<FiniteSubset>,
}

impl Thread {
    pub fn source(&self) -> &ThreadSource {
        &self.source
    }

    /// Components in canonical index order.
    pub fn components(&self) -> &[FiniteSubset] {
        &self.components
    }
}

/// Realize the thread of a finite subset or of the extension point:
/// the component at `C` is `D` when `D <= C`, otherwise `C`; the
/// extension point has component `C` at every stage.
pub fn thread_of(source: ThreadSource, index: &DirectedIndex) -> Thread {
    let components = index
        .members()
        .iter()
        .map(|c| match &source {
            ThreadSource::Top => c.clone(),
            ThreadSource::Finite(d) => {
                if d.is_subset(c) {
                    d.clone()
                } else {
                    c.clone()
                }
            }
        })
        .collect();
    Thread { source, components }
}

/// Truncation-level verification of the inverse-sequence description.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HBijectionReport {
    pub n: u32,
    /// Every subset of `{1..n}` yields a compatible tuple.
    pub all_threads_valid: bool,
    /// Distinct subsets with maximum at most `n` give distinct tuples;
    /// the extension thread collides only with the full segment.
    pub injective_on_finite: bool,
    /// The extension thread truncates to `({1},{1,2},...,{1..n})`.
    pub top_thread_is_initial_chain: bool,
    /// Inclusion of sources gives componentwise inclusion of tuples.
    pub order_preserving: bool,
}

impl HBijectionReport {
    pub fn pass(&self) -> bool {
        self.all_threads_valid
            && self.injective_on_finite
            && self.top_thread_is_initial_chain
            && self.order_preserving
    }

    pub fn lines(&self) -> Vec<String> {
        let fmt = |name: &str, ok: bool| {
            format!("{name}: {}", if ok { "pass" } else { "FAIL" })
        };
        vec![
            fmt("threads valid", self.all_threads_valid),
            fmt("injective on finite subsets", self.injective_on_finite),
            fmt("top thread is initial chain", self.top_thread_is_initial_chain),
            fmt("order preserving", self.order_preserving),
        ]
    }
}

/// Run the four truncation checks on the sequence of stages
/// `2^{1}, 2^{1,2}, ..., 2^{1..n}` with the sequence bonding maps.
pub fn verify_h_bijection(n: u32) -> Result<HBijectionReport> {
    if n == 0 || n > guards::H_VERIFY_MAX_N {
        return Err(Error::resource(format!(
            "truncation must be in 1..={}",
            guards::H_VERIFY_MAX_N
        )));
    }
    let index = DirectedIndex::initial_chain(n)?;
    let full = FiniteSubset::initial_segment(n)?;
    let subsets = full.nonempty_subsets();

    // (a) compatibility of every realized thread under the sequence maps
    let mut all_threads_valid = true;
    let mut tuples: BTreeSet<Vec<FiniteSubset>> = BTreeSet::new();
    for d in &subsets {
        let t = thread_of(ThreadSource::Finite(d.clone()), &index);
        for k in 1..n {
            // component at stage k must be the bonding image of stage k+1
            let upper = &t.components()[k as usize];
            let lower = &t.components()[(k - 1) as usize];
            if bonding_seq(k, upper)? != *lower {
                all_threads_valid = false;
            }
        }
        tuples.insert(t.components().to_vec());
    }

    // (b) injectivity among finite subsets with maximum <= n; the
    // extension thread coincides with the full segment at truncation
    let injective_on_finite = tuples.len() == subsets.len();

    // (c) extension thread truncates to the initial chain
    let top = thread_of(ThreadSource::Top, &index);
    let expected: Result<Vec<_>> = (1..=n).map(FiniteSubset::initial_segment).collect();
    let top_thread_is_initial_chain = top.components() == expected?.as_slice();

    // (d) monotonicity: D <= E gives componentwise inclusion
    let mut order_preserving = true;
    for d in &subsets {
        for e in &subsets {
            if !d.is_subset(e) {
                continue;
            }
            let td = thread_of(ThreadSource::Finite(d.clone()), &index);
            let te = thread_of(ThreadSource::Finite(e.clone()), &index);
            if !td
                .components()
                .iter()
                .zip(te.components())
                .all(|(a, b)| a.is_subset(b))
            {
                order_preserving = false;
            }
        }
    }

    Ok(HBijectionReport {
        n,
        all_threads_valid,
        injective_on_finite,
        top_thread_is_initial_chain,
        order_preserving,
    })
}

/// Image of the basic open `2^D` under the thread map at truncation
/// `n`, compared against the open box with `2^D` inserted at the stage
/// after `m(D)` intersected with the enumerated limit.
pub fn openness_certificate(n: u32, d: &FiniteSubset) -> Result<bool> {
    if d.max_element() > n {
        return Err(Error::domain("subset exceeds the truncation"));
    }
    let index = DirectedIndex::initial_chain(n)?;
    let sys = InverseSystem::new(index.clone());
    let limit = sys.enumerate_limit()?;
    // The distinguishing stage of the box sits right after m(D); at a
    // truncation that stage may not exist, so it is clamped to the last
    // stage, which determines every thread of the truncated chain.
    let pin = d.max_element().min(n - 1) + 1;
    let image: BTreeSet<Vec<FiniteSubset>> = d
        .nonempty_subsets()
        .into_iter()
        .map(|e| thread_of(ThreadSource::Finite(e), &index).components().to_vec())
        .collect();
    let box_hits: BTreeSet<Vec<FiniteSubset>> = limit
        .into_iter()
        .filter(|tuple| {
            tuple.iter().enumerate().all(|(k, comp)| {
                let stage = k as u32 + 1;
                // the box is the full stage away from the pinned slot
                stage != pin || comp.is_subset(d)
            })
        })
        .collect();
    Ok(image == box_hits)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fs(m: &[u32]) -> FiniteSubset {
        FiniteSubset::new(m.iter().copied()).unwrap()
    }

    #[test]
    fn bonding_examples() {
        let c = fs(&[1, 2]);
        let cb = fs(&[1, 2, 3]);
        assert_eq!(bonding(&c, &cb, &fs(&[1])).unwrap(), fs(&[1]));
        assert_eq!(bonding(&c, &cb, &fs(&[3])).unwrap(), fs(&[1, 2]));
        assert_eq!(bonding(&c, &cb, &cb).unwrap(), c);
        assert!(bonding(&cb, &c, &fs(&[1])).is_err());
        assert!(bonding(&c, &cb, &fs(&[4])).is_err());
    }

    #[test]
    fn bonding_seq_examples() {
        assert_eq!(bonding_seq(3, &fs(&[1, 4])).unwrap(), fs(&[1, 2, 3]));
        assert_eq!(bonding_seq(3, &fs(&[1, 3])).unwrap(), fs(&[1, 3]));
        assert_eq!(bonding_seq(1, &fs(&[2])).unwrap(), fs(&[1]));
        assert!(bonding_seq(2, &fs(&[5])).is_err());
    }

    #[test]
    fn thread_of_examples() {
        let index = DirectedIndex::full_power(2).unwrap();
        // index members in canonical order: {1}, {1,2}, {2}
        assert_eq!(index.members(), &[fs(&[1]), fs(&[1, 2]), fs(&[2])]);
        let t = thread_of(ThreadSource::Finite(fs(&[1])), &index);
        // note the component at {2} is {2}, because {1} is not below {2}
        assert_eq!(t.components(), &[fs(&[1]), fs(&[1]), fs(&[2])]);
        let top = thread_of(ThreadSource::Top, &index);
        assert_eq!(top.components(), index.members());
        let t12 = thread_of(ThreadSource::Finite(fs(&[1, 2])), &index);
        assert_eq!(t12.components()[1], fs(&[1, 2]));
    }

    #[test]
    fn is_thread_examples() {
        let index = DirectedIndex::full_power(2).unwrap();
        let sys = InverseSystem::new(index.clone());
        for d in fs(&[1, 2]).nonempty_subsets() {
            let t = thread_of(ThreadSource::Finite(d), &index);
            assert!(sys.is_thread(t.components()).unwrap());
        }
        // incompatible tuple on a two-stage chain index
        let chain = DirectedIndex::new([fs(&[1, 2]), fs(&[1, 2, 3])]).unwrap();
        let sys2 = InverseSystem::new(chain);
        assert!(!sys2.is_thread(&[fs(&[1]), fs(&[2])]).unwrap());
        // single-stage index accepts any stage point
        let single = DirectedIndex::new([fs(&[1])]).unwrap();
        assert!(InverseSystem::new(single).is_thread(&[fs(&[1])]).unwrap());
    }

    #[test]
    fn union_closure() {
        assert!(DirectedIndex::new([fs(&[1]), fs(&[2])]).is_err());
        let (idx, added) = DirectedIndex::closing([fs(&[1]), fs(&[2])]).unwrap();
        assert!(added);
        assert_eq!(idx.len(), 3);
        let (idx2, added2) = DirectedIndex::closing([fs(&[1]), fs(&[1, 2])]).unwrap();
        assert!(!added2);
        assert_eq!(idx2.len(), 2);
    }

    #[test]
    fn enumerate_limit_collapses_to_top_stage() {
        let index = DirectedIndex::full_power(2).unwrap();
        let sys = InverseSystem::new(index.clone());
        let limit = sys.enumerate_limit().unwrap();
        assert_eq!(limit.len(), 3);
        let expected: BTreeSet<Vec<FiniteSubset>> = fs(&[1, 2])
            .nonempty_subsets()
            .into_iter()
            .map(|d| thread_of(ThreadSource::Finite(d), &index).components().to_vec())
            .collect();
        let got: BTreeSet<Vec<FiniteSubset>> = limit.into_iter().collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn enumerate_limit_chain() {
        let index = DirectedIndex::initial_chain(3).unwrap();
        let sys = InverseSystem::new(index);
        assert_eq!(sys.enumerate_limit().unwrap().len(), 7);
        let single = DirectedIndex::new([fs(&[1])]).unwrap();
        assert_eq!(InverseSystem::new(single).enumerate_limit().unwrap().len(), 1);
    }

    #[test]
    fn functoriality_and_continuity() {
        let sys = InverseSystem::new(DirectedIndex::full_power(4).unwrap());
        assert!(sys.check_functoriality().unwrap());
        assert!(sys.check_bonding_continuity().unwrap());
    }

    #[test]
    fn h_verification() {
        let r = verify_h_bijection(3).unwrap();
        assert!(r.pass(), "{:?}", r);
        // spot checks of the explicit formula
        let index = DirectedIndex::initial_chain(3).unwrap();
        let t = thread_of(ThreadSource::Finite(fs(&[1, 3])), &index);
        assert_eq!(t.components(), &[fs(&[1]), fs(&[1, 2]), fs(&[1, 3])]);
        let t2 = thread_of(ThreadSource::Finite(fs(&[2])), &index);
        assert_eq!(t2.components(), &[fs(&[1]), fs(&[2]), fs(&[2])]);
        let index2 = DirectedIndex::initial_chain(2).unwrap();
        let top = thread_of(ThreadSource::Top, &index2);
        assert_eq!(top.components(), &[fs(&[1]), fs(&[1, 2])]);
        assert!(verify_h_bijection(13).is_err());
    }

    #[test]
    fn openness_certificates() {
        for n in 2..=5u32 {
            let full = FiniteSubset::initial_segment(n).unwrap();
            for d in full.nonempty_subsets() {
                assert!(openness_certificate(n, &d).unwrap(), "n={n} d={}", d.label());
            }
        }
    }
}
