//! Abstract simplicial complexes stored by their maximal simplices.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::guards;
use crate::label::subset_label;
use crate::metric::FiniteMetricSpace;

/// Vertex set plus an antichain of maximal simplices; membership is
/// answered by downward closure. Simplices are unordered vertex sets,
/// held as sorted index sets into the canonical vertex list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbstractComplex {
    vertices: Vec<String>,
    maximal: Vec<BTreeSet<usize>>,
}

/// Absorb redundant faces: keep only the inclusion-maximal ones.
fn absorb(mut faces: Vec<BTreeSet<usize>>) -> Vec<BTreeSet<usize>> {
    faces.sort();
    faces.dedup();
    let mut keep: Vec<BTreeSet<usize>> = Vec::new();
    for f in &faces {
        if !faces.iter().any(|g| g != f && f.is_subset(g)) {
            keep.push(f.clone());
        }
    }
    keep
}

impl AbstractComplex {
    /// Canonicalize a complex from its vertex list and generating
    /// faces. Vertices not covered by any face become isolated points.
    pub fn from_maximal<S: AsRef<str>>(vertices: &[S], faces: &[Vec<S>]) -> Result<Self> {
        let mut ids: Vec<String> = vertices.iter().map(|v| v.as_ref().to_string()).collect();
        ids.sort_unstable();
        let before = ids.len();
        ids.dedup();
        if ids.len() != before {
            return Err(Error::domain("duplicate vertex id"));
        }
        let mut gen: Vec<BTreeSet<usize>> = Vec::new();
        for face in faces {
            if face.is_empty() {
                return Err(Error::domain("empty face"));
            }
            let mut s = BTreeSet::new();
            for v in face {
                let i = ids
                    .binary_search_by(|e| e.as_str().cmp(v.as_ref()))
                    .map_err(|_| Error::domain(format!("unknown vertex `{}`", v.as_ref())))?;
                s.insert(i);
            }
            gen.push(s);
        }
        let covered: BTreeSet<usize> = gen.iter().flatten().copied().collect();
        for i in 0..ids.len() {
            if !covered.contains(&i) {
                gen.push([i].into_iter().collect());
            }
        }
        Ok(AbstractComplex { vertices: ids, maximal: absorb(gen) })
    }

    pub(crate) fn from_indexed_parts(
        vertices: Vec<String>,
        generating: Vec<BTreeSet<usize>>,
    ) -> Self {
        let mut gen = generating;
        let covered: BTreeSet<usize> = gen.iter().flatten().copied().collect();
        for i in 0..vertices.len() {
            if !covered.contains(&i) {
                gen.push([i].into_iter().collect());
            }
        }
        AbstractComplex { vertices, maximal: absorb(gen) }
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex_index(&self, id: &str) -> Result<usize> {
        self.vertices
            .binary_search_by(|e| e.as_str().cmp(id))
            .map_err(|_| Error::domain(format!("unknown vertex `{id}`")))
    }

    pub fn maximal_simplices(&self) -> &[BTreeSet<usize>] {
        &self.maximal
    }

    pub fn maximal_simplices_by_id(&self) -> Vec<Vec<String>> {
        self.maximal
            .iter()
            .map(|s| s.iter().map(|&i| self.vertices[i].clone()).collect())
            .collect()
    }

    pub fn contains(&self, simplex: &BTreeSet<usize>) -> bool {
        !simplex.is_empty() && self.maximal.iter().any(|m| simplex.is_subset(m))
    }

    pub fn dimension(&self) -> usize {
        self.maximal.iter().map(|m| m.len()).max().unwrap_or(1) - 1
    }

    /// All faces, canonically ordered by (cardinality, vertex indices).
    pub fn faces(&self) -> Result<Vec<BTreeSet<usize>>> {
        self.faces_with_guard(guards::DEFAULT_MAX_FACES)
    }

    pub fn faces_with_guard(&self, max_faces: usize) -> Result<Vec<BTreeSet<usize>>> {
        let mut all: BTreeSet<Vec<usize>> = BTreeSet::new();
        for m in &self.maximal {
            let vs: Vec<usize> = m.iter().copied().collect();
            let k = vs.len();
            if k >= usize::BITS as usize - 1 {
                return Err(Error::resource("simplex too large to enumerate faces"));
            }
            for mask in 1usize..(1 << k) {
                let face: Vec<usize> =
                    (0..k).filter(|i| mask >> i & 1 == 1).map(|i| vs[i]).collect();
                all.insert(face);
                if all.len() > max_faces {
                    return Err(Error::resource(format!("face count exceeds {max_faces}")));
                }
            }
        }
        let mut out: Vec<BTreeSet<usize>> =
            all.into_iter().map(|f| f.into_iter().collect()).collect();
        out.sort_by_key(|f| (f.len(), f.iter().copied().collect::<Vec<_>>()));
        Ok(out)
    }

    pub fn face_count(&self) -> Result<usize> {
        Ok(self.faces()?.len())
    }

    /// Face counts per dimension.
    pub fn f_vector(&self) -> Result<Vec<usize>> {
        let mut f = vec![0usize; self.dimension() + 1];
        for face in self.faces()? {
            f[face.len() - 1] += 1;
        }
        Ok(f)
    }

    pub fn label_of(&self, simplex: &BTreeSet<usize>) -> String {
        let members: Vec<&str> = simplex.iter().map(|&i| self.vertices[i].as_str()).collect();
        subset_label(&members)
    }

    /// Simplices with at most `q + 1` vertices.
    pub fn skeleton(&self, q: usize) -> AbstractComplex {
        let mut gen: Vec<BTreeSet<usize>> = Vec::new();
        for m in &self.maximal {
            if m.len() <= q + 1 {
                gen.push(m.clone());
            } else {
                let vs: Vec<usize> = m.iter().copied().collect();
                combinations(&vs, q + 1, &mut |c| gen.push(c.iter().copied().collect()));
            }
        }
        AbstractComplex { vertices: self.vertices.clone(), maximal: absorb(gen) }
    }

    /// Barycentric subdivision: vertices are the faces of the complex,
    /// simplices the chains of faces under inclusion. Equals the order
    /// complex of the face poset.
    pub fn barycentric_subdivision(&self) -> Result<AbstractComplex> {
        self.barycentric_subdivision_with_guard(guards::DEFAULT_MAX_FACES)
    }

    pub fn barycentric_subdivision_with_guard(
        &self,
        max_faces: usize,
    ) -> Result<AbstractComplex> {
        // maximal chains = permutation prefixes of maximal simplices
        let mut chain_count: usize = 0;
        for m in &self.maximal {
            chain_count = chain_count
                .checked_add(factorial_capped(m.len(), max_faces)?)
                .ok_or_else(|| Error::resource("subdivision too large"))?;
            if chain_count > max_faces {
                return Err(Error::resource(format!(
                    "subdivision maximal-simplex count exceeds {max_faces}"
                )));
            }
        }
        let mut vertex_labels: BTreeSet<String> = BTreeSet::new();
        for face in self.faces_with_guard(max_faces)? {
            vertex_labels.insert(self.label_of(&face));
        }
        let vertices: Vec<String> = vertex_labels.into_iter().collect();
        let vindex: BTreeMap<&str, usize> =
            vertices.iter().enumerate().map(|(i, s)| (s.as_str(), i)).collect();
        let mut gen: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
        for m in &self.maximal {
            let vs: Vec<usize> = m.iter().copied().collect();
            let mut perm: Vec<usize> = (0..vs.len()).collect();
            permutations(&mut perm, 0, &mut |p| {
                let mut prefix: BTreeSet<usize> = BTreeSet::new();
                let mut chain: BTreeSet<usize> = BTreeSet::new();
                for &slot in p {
                    prefix.insert(vs[slot]);
                    let label = self.label_of(&prefix);
                    chain.insert(vindex[label.as_str()]);
                }
                gen.insert(chain);
            });
        }
        Ok(AbstractComplex { vertices, maximal: absorb(gen.into_iter().collect()) })
    }

    /// Vertex-bijection isomorphism test by backtracking, guarded by
    /// the combined simplex count.
    pub fn is_isomorphic(&self, other: &AbstractComplex) -> Result<bool> {
        let fa = self.faces_with_guard(guards::ISOMORPHISM_MAX_SIMPLICES)?;
        let fb = other.faces_with_guard(guards::ISOMORPHISM_MAX_SIMPLICES)?;
        if fa.len() > guards::ISOMORPHISM_MAX_SIMPLICES
            || fb.len() > guards::ISOMORPHISM_MAX_SIMPLICES
        {
            return Err(Error::resource(format!(
                "isomorphism search limited to {} simplices",
                guards::ISOMORPHISM_MAX_SIMPLICES
            )));
        }
        if self.vertices.len() != other.vertices.len() || fa.len() != fb.len() {
            return Ok(false);
        }
        let fva = count_by_dim(&fa);
        let fvb = count_by_dim(&fb);
        if fva != fvb {
            return Ok(false);
        }
        // invariant per vertex: sorted sizes of maximal simplices through it
        let inv = |k: &AbstractComplex, v: usize| -> Vec<usize> {
            let mut sizes: Vec<usize> =
                k.maximal.iter().filter(|m| m.contains(&v)).map(|m| m.len()).collect();
            sizes.sort_unstable();
            sizes
        };
        let ia: Vec<Vec<usize>> = (0..self.vertices.len()).map(|v| inv(self, v)).collect();
        let ib: Vec<Vec<usize>> = (0..other.vertices.len()).map(|v| inv(other, v)).collect();
        let n = self.vertices.len();
        let mut map = vec![usize::MAX; n];
        let mut used = vec![false; n];
        Ok(self.iso_search(other, &ia, &ib, &mut map, &mut used, 0))
    }

    fn iso_search(
        &self,
        other: &AbstractComplex,
        ia: &[Vec<usize>],
        ib: &[Vec<usize>],
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
        depth: usize,
    ) -> bool {
        let n = self.vertices.len();
        if depth == n {
            // every maximal simplex must land on a maximal simplex
            let image: BTreeSet<BTreeSet<usize>> = self
                .maximal
                .iter()
                .map(|m| m.iter().map(|&v| map[v]).collect())
                .collect();
            let target: BTreeSet<BTreeSet<usize>> = other.maximal.iter().cloned().collect();
            return image == target;
        }
        'cand: for cand in 0..n {
            if used[cand] || ia[depth] != ib[cand] {
                continue;
            }
            // pairwise edge consistency with assigned vertices
            for prev in 0..depth {
                let e1 = self.contains(&[depth, prev].into_iter().collect());
                let e2 = other.contains(&[cand, map[prev]].into_iter().collect());
                if e1 != e2 {
                    continue 'cand;
                }
            }
            map[depth] = cand;
            used[cand] = true;
            if self.iso_search(other, ia, ib, map, used, depth + 1) {
                return true;
            }
            used[cand] = false;
            map[depth] = usize::MAX;
        }
        false
    }
}

fn count_by_dim(faces: &[BTreeSet<usize>]) -> Vec<usize> {
    let maxd = faces.iter().map(|f| f.len()).max().unwrap_or(0);
    let mut out = vec![0usize; maxd];
    for f in faces {
        out[f.len() - 1] += 1;
    }
    out
}

fn factorial_capped(k: usize, cap: usize) -> Result<usize> {
    let mut acc: usize = 1;
    for i in 2..=k {
        acc = acc.saturating_mul(i);
        if acc > cap {
            return Err(Error::resource("subdivision too large"));
        }
    }
    Ok(acc)
}

fn combinations(items: &[usize], k: usize, emit: &mut impl FnMut(&[usize])) {
    fn rec(
        items: &[usize],
        k: usize,
        start: usize,
        current: &mut Vec<usize>,
        emit: &mut impl FnMut(&[usize]),
    ) {
        if current.len() == k {
            emit(current);
            return;
        }
        for i in start..items.len() {
            current.push(items[i]);
            rec(items, k, i + 1, current, emit);
            current.pop();
        }
    }
    rec(items, k, 0, &mut Vec::new(), emit);
}

fn permutations(perm: &mut Vec<usize>, k: usize, emit: &mut impl FnMut(&[usize])) {
    if k == perm.len() {
        emit(perm);
        return;
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        permutations(perm, k + 1, emit);
        perm.swap(k, i);
    }
}

/// Nerve of a named family of sets: vertices are the names, and a name
/// set spans a simplex exactly when the members intersect. Empty family
/// members are rejected (they could carry no vertex).
pub fn nerve<S: AsRef<str>>(family: &[(S, BTreeSet<String>)]) -> Result<AbstractComplex> {
    if family.len() > guards::NERVE_MAX_FAMILY {
        return Err(Error::resource(format!(
            "nerve limited to {} family members",
            guards::NERVE_MAX_FAMILY
        )));
    }
    let mut names: Vec<String> = family.iter().map(|(n, _)| n.as_ref().to_string()).collect();
    names.sort_unstable();
    let before = names.len();
    names.dedup();
    if names.len() != before {
        return Err(Error::domain("duplicate family member name"));
    }
    let mut sets: Vec<&BTreeSet<String>> = Vec::with_capacity(family.len());
    let mut by_name: BTreeMap<&str, &BTreeSet<String>> = BTreeMap::new();
    for (n, s) in family {
        if s.is_empty() {
            return Err(Error::domain(format!(
                "empty family member `{}` can belong to no simplex",
                n.as_ref()
            )));
        }
        by_name.insert(n.as_ref(), s);
    }
    for n in &names {
        sets.push(by_name[n.as_str()]);
    }
    let k = names.len();
    let mut gen: Vec<BTreeSet<usize>> = Vec::new();
    for mask in 1usize..(1 << k) {
        let chosen: Vec<usize> = (0..k).filter(|i| mask >> i & 1 == 1).collect();
        let mut it = chosen.iter();
        let first = *it.next().expect("nonempty mask");
        let mut common: BTreeSet<String> = sets[first].clone();
        for &i in it {
            common = common.intersection(sets[i]).cloned().collect();
            if common.is_empty() {
                break;
            }
        }
        if !common.is_empty() {
            gen.push(chosen.into_iter().collect());
        }
    }
    Ok(AbstractComplex::from_indexed_parts(names, gen))
}

/// Vietoris-Rips complex at scale `eps`: simplices are the point sets
/// of diameter strictly below `eps`. The diameter condition is
/// pairwise, so the maximal simplices are the maximal cliques of the
/// `< eps` proximity graph.
pub fn vietoris_rips(metric: &FiniteMetricSpace, eps: f64) -> Result<AbstractComplex> {
    if !(eps > 0.0) {
        return Err(Error::domain("scale must be positive"));
    }
    let n = metric.len();
    let adj: Vec<Vec<bool>> = (0..n)
        .map(|i| (0..n).map(|j| i != j && metric.dist_idx(i, j) < eps).collect())
        .collect();
    let mut cliques: Vec<BTreeSet<usize>> = Vec::new();
    bron_kerbosch(
        &adj,
        &mut BTreeSet::new(),
        &mut (0..n).collect(),
        &mut BTreeSet::new(),
        &mut cliques,
    );
    Ok(AbstractComplex::from_indexed_parts(metric.ids().to_vec(), cliques))
}

fn bron_kerbosch(
    adj: &[Vec<bool>],
    r: &mut BTreeSet<usize>,
    p: &mut BTreeSet<usize>,
    x: &mut BTreeSet<usize>,
    out: &mut Vec<BTreeSet<usize>>,
) {
    if p.is_empty() && x.is_empty() {
        if !r.is_empty() {
            out.push(r.clone());
        }
        return;
    }
    let pivot = p.iter().chain(x.iter()).copied().next().expect("nonempty");
    let candidates: Vec<usize> = p.iter().copied().filter(|&v| !adj[pivot][v]).collect();
    for v in candidates {
        r.insert(v);
        let mut p2: BTreeSet<usize> = p.iter().copied().filter(|&u| adj[v][u]).collect();
        let mut x2: BTreeSet<usize> = x.iter().copied().filter(|&u| adj[v][u]).collect();
        bron_kerbosch(adj, r, &mut p2, &mut x2, out);
        r.remove(&v);
        p.remove(&v);
        x.insert(v);
    }
}

/// A simplicial map given by a vertex assignment; the image of every
/// simplex must be a simplex, which is checked on construction.
#[derive(Debug, Clone)]
pub struct SimplicialMap {
    domain: AbstractComplex,
    codomain: AbstractComplex,
    assignment: Vec<usize>,
}

impl SimplicialMap {
    pub fn new(
        domain: AbstractComplex,
        codomain: AbstractComplex,
        vertex_map: &BTreeMap<String, String>,
    ) -> Result<Self> {
        let mut assignment = Vec::with_capacity(domain.vertices.len());
        for v in &domain.vertices {
            let img = vertex_map
                .get(v)
                .ok_or_else(|| Error::domain(format!("no image for vertex `{v}`")))?;
            assignment.push(codomain.vertex_index(img)?);
        }
        for m in &domain.maximal {
            let image: BTreeSet<usize> = m.iter().map(|&v| assignment[v]).collect();
            if !codomain.contains(&image) {
                return Err(Error::domain(format!(
                    "image of simplex {} is not a simplex",
                    domain.label_of(m)
                )));
            }
        }
        Ok(SimplicialMap { domain, codomain, assignment })
    }

    pub fn identity(k: AbstractComplex) -> Self {
        let n = k.vertices.len();
        SimplicialMap { domain: k.clone(), codomain: k, assignment: (0..n).collect() }
    }

    pub fn domain(&self) -> &AbstractComplex {
        &self.domain
    }

    pub fn codomain(&self) -> &AbstractComplex {
        &self.codomain
    }

    pub fn vertex_image(&self, i: usize) -> usize {
        self.assignment[i]
    }

    /// Elementwise image of a simplex; duplicates collapse.
    pub fn apply(&self, simplex: &BTreeSet<usize>) -> Result<BTreeSet<usize>> {
        if !self.domain.contains(simplex) {
            return Err(Error::domain("simplex not in the domain complex"));
        }
        Ok(simplex.iter().map(|&v| self.assignment[v]).collect())
    }

    /// `self` after `other`.
    pub fn compose(&self, other: &SimplicialMap) -> Result<SimplicialMap> {
        if other.codomain.vertices != self.domain.vertices {
            return Err(Error::domain("composition mismatch: codomain != domain"));
        }
        Ok(SimplicialMap {
            domain: other.domain.clone(),
            codomain: self.codomain.clone(),
            assignment: other.assignment.iter().map(|&i| self.assignment[i]).collect(),
        })
    }
}
