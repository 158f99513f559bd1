//! The order-complex and face-poset functors, the embedding of a poset
//! into its hyperspace, and simplicial neighborhoods with the inverse
//! functor back to complexes.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::bitmat::BitMatrix;
use crate::error::{Error, Result};
use crate::label::subset_label;
use crate::poset::{FinitePreorder, PointMap};
use crate::simcomplex::{AbstractComplex, SimplicialMap};

/// A down-closed family of nonempty finite subsets of a vertex set,
/// containing every singleton. These are exactly the open subspaces of
/// the hyperspace over the vertex set that cover all vertices, and they
/// carry the same data as an abstract simplicial complex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialNeighborhood {
    vertices: Vec<String>,
    members: Vec<BTreeSet<usize>>,
}

fn canonical_members(members: BTreeSet<BTreeSet<usize>>) -> Vec<BTreeSet<usize>> {
    let mut out: Vec<BTreeSet<usize>> = members.into_iter().collect();
    out.sort_by_key(|m| (m.len(), m.iter().copied().collect::<Vec<_>>()));
    out
}

impl SimplicialNeighborhood {
    /// Reject input that is not already down-closed or misses a
    /// singleton.
    pub fn new_strict<S: AsRef<str>>(vertices: &[S], members: &[Vec<S>]) -> Result<Self> {
        let candidate = Self::new_closing(vertices, members)?;
        let given: BTreeSet<BTreeSet<usize>> = members
            .iter()
            .map(|m| {
                m.iter()
                    .map(|v| candidate.vertex_index(v.as_ref()))
                    .collect::<Result<BTreeSet<usize>>>()
            })
            .collect::<Result<_>>()?;
        for m in &candidate.members {
            if !given.contains(m) {
                return Err(Error::domain(format!(
                    "family is not a simplicial neighborhood: missing {}",
                    candidate.label_of(m)
                )));
            }
        }
        Ok(candidate)
    }

    /// Close the given family downward and adjoin all singletons.
    pub fn new_closing<S: AsRef<str>>(vertices: &[S], members: &[Vec<S>]) -> Result<Self> {
        let mut ids: Vec<String> = vertices.iter().map(|v| v.as_ref().to_string()).collect();
        ids.sort_unstable();
        let before = ids.len();
        ids.dedup();
        if ids.len() != before {
            return Err(Error::domain("duplicate vertex id"));
        }
        let mut closed: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
        for i in 0..ids.len() {
            closed.insert([i].into_iter().collect());
        }
        for m in members {
            if m.is_empty() {
                return Err(Error::domain("empty family member"));
            }
            let mut s: Vec<usize> = Vec::with_capacity(m.len());
            for v in m {
                let i = ids
                    .binary_search_by(|e| e.as_str().cmp(v.as_ref()))
                    .map_err(|_| Error::domain(format!("unknown vertex `{}`", v.as_ref())))?;
                s.push(i);
            }
            s.sort_unstable();
            s.dedup();
            for mask in 1usize..(1 << s.len()) {
                closed.insert(
                    (0..s.len()).filter(|i| mask >> i & 1 == 1).map(|i| s[i]).collect(),
                );
            }
        }
        Ok(SimplicialNeighborhood { vertices: ids, members: canonical_members(closed) })
    }

    fn from_indexed(vertices: Vec<String>, members: BTreeSet<BTreeSet<usize>>) -> Self {
        let mut closed = members;
        for i in 0..vertices.len() {
            closed.insert([i].into_iter().collect());
        }
        SimplicialNeighborhood { vertices, members: canonical_members(closed) }
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex_index(&self, id: &str) -> Result<usize> {
        self.vertices
            .binary_search_by(|e| e.as_str().cmp(id))
            .map_err(|_| Error::domain(format!("unknown vertex `{id}`")))
    }

    pub fn members(&self) -> &[BTreeSet<usize>] {
        &self.members
    }

    pub fn members_by_id(&self) -> Vec<Vec<String>> {
        self.members
            .iter()
            .map(|m| m.iter().map(|&i| self.vertices[i].clone()).collect())
            .collect()
    }

    pub fn contains(&self, member: &BTreeSet<usize>) -> bool {
        self.members.iter().any(|m| m == member)
    }

    pub fn label_of(&self, member: &BTreeSet<usize>) -> String {
        let ids: Vec<&str> = member.iter().map(|&i| self.vertices[i].as_str()).collect();
        subset_label(&ids)
    }

    /// The inclusion order on the members, with canonical subset
    /// labels as elements.
    pub fn to_preorder(&self) -> FinitePreorder {
        preorder_of_inclusion(
            self.members.iter().map(|m| (self.label_of(m), m.clone())).collect(),
        )
    }

    /// Members containing the given member (its closure in the
    /// neighborhood).
    pub fn up_set_of(&self, member: &BTreeSet<usize>) -> Vec<BTreeSet<usize>> {
        self.members.iter().filter(|m| member.is_subset(m)).cloned().collect()
    }
}

fn preorder_of_inclusion(labelled: Vec<(String, BTreeSet<usize>)>) -> FinitePreorder {
    let mut rows = labelled;
    rows.sort_by(|a, b| a.0.cmp(&b.0));
    let n = rows.len();
    let mut leq = BitMatrix::new(n);
    for i in 0..n {
        for j in 0..n {
            if rows[i].1.is_subset(&rows[j].1) {
                leq.set(i, j);
            }
        }
    }
    FinitePreorder::from_closed_parts(rows.into_iter().map(|(l, _)| l).collect(), leq)
}

/// Order complex of a finite T0 space: simplices are the nonempty
/// chains. Maximal simplices are found as the saturated chains from
/// minimal to maximal points.
pub fn order_complex(p: &FinitePreorder) -> Result<AbstractComplex> {
    if !p.is_t0() {
        return Err(Error::precondition("order complex requires a T0 space"));
    }
    let n = p.len();
    let covers = p.covers_idx();
    let mut above: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut has_below = vec![false; n];
    for &(lo, hi) in &covers {
        above[lo].push(hi);
        has_below[hi] = true;
    }
    let mut maximal: Vec<BTreeSet<usize>> = Vec::new();
    let mut stack: Vec<usize> = Vec::new();
    fn dfs(
        x: usize,
        above: &[Vec<usize>],
        stack: &mut Vec<usize>,
        out: &mut Vec<BTreeSet<usize>>,
    ) {
        stack.push(x);
        if above[x].is_empty() {
            out.push(stack.iter().copied().collect());
        } else {
            for &y in &above[x] {
                dfs(y, above, stack, out);
            }
        }
        stack.pop();
    }
    for x in 0..n {
        if !has_below[x] {
            dfs(x, &above, &mut stack, &mut maximal);
        }
    }
    Ok(AbstractComplex::from_indexed_parts(p.elements().to_vec(), maximal))
}

/// Face poset of a complex: the simplices ordered by inclusion, with
/// canonical subset labels as point ids.
pub fn face_poset(k: &AbstractComplex) -> Result<FinitePreorder> {
    let faces = k.faces()?;
    Ok(preorder_of_inclusion(
        faces.into_iter().map(|f| (k.label_of(&f), f)).collect(),
    ))
}

/// Induced map between face posets: a simplex goes to its image
/// simplex. Always continuous, and open onto its image stage by stage.
pub fn functor_x_on_map(phi: &SimplicialMap) -> Result<PointMap> {
    let dom = face_poset(phi.domain())?;
    let cod = face_poset(phi.codomain())?;
    let mut assignment = Vec::with_capacity(dom.len());
    for label in dom.elements() {
        let face = parse_face(phi.domain(), label)?;
        let image = phi.apply(&face)?;
        assignment.push(cod.index_of(&phi.codomain().label_of(&image))?);
    }
    Ok(PointMap::from_indices(dom, cod, assignment))
}

fn parse_face(k: &AbstractComplex, label: &str) -> Result<BTreeSet<usize>> {
    let inner = label
        .strip_prefix('{')
        .and_then(|s| s.strip_suffix('}'))
        .ok_or_else(|| Error::domain(format!("malformed face label `{label}`")))?;
    inner.split(',').map(|v| k.vertex_index(v)).collect()
}

/// The image of a T0 space inside the hyperspace over its own points:
/// each point is sent to its minimal neighborhood.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RhoImage {
    ground: Vec<String>,
    images: Vec<BTreeSet<String>>,
}

impl RhoImage {
    pub fn ground(&self) -> &[String] {
        &self.ground
    }

    /// Image sets, indexed like the source poset's elements.
    pub fn images(&self) -> &[BTreeSet<String>] {
        &self.images
    }

    pub fn image_of(&self, p: &FinitePreorder, x: &str) -> Result<&BTreeSet<String>> {
        Ok(&self.images[p.index_of(x)?])
    }

    /// Order-embedding law: x <= y in the source iff the images nest.
    pub fn is_order_embedding(&self, p: &FinitePreorder) -> bool {
        let n = p.len();
        (0..n).all(|i| {
            (0..n).all(|j| p.leq_idx(i, j) == self.images[i].is_subset(&self.images[j]))
        })
    }

    /// The image is open in the hyperspace (closed under passing to
    /// nonempty subsets) exactly when the source is discrete.
    pub fn image_is_open(&self) -> bool {
        let present: BTreeSet<&BTreeSet<String>> = self.images.iter().collect();
        for img in &self.images {
            let vs: Vec<&String> = img.iter().collect();
            for mask in 1usize..(1 << vs.len()) {
                let sub: BTreeSet<String> = (0..vs.len())
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| vs[i].clone())
                    .collect();
                if !present.contains(&sub) {
                    return false;
                }
            }
        }
        true
    }
}

/// x maps to its minimal neighborhood B_x. Fails on non-T0 input,
/// naming a pair of points the map cannot separate.
pub fn rho_embedding(p: &FinitePreorder) -> Result<RhoImage> {
    let n = p.len();
    for i in 0..n {
        for j in (i + 1)..n {
            if p.leq_idx(i, j) && p.leq_idx(j, i) {
                return Err(Error::domain(format!(
                    "space is not T0: rho({}) = rho({})",
                    p.elements()[i],
                    p.elements()[j]
                )));
            }
        }
    }
    let images = (0..n)
        .map(|i| p.down_set_idx(i).map(|j| p.elements()[j].clone()).collect())
        .collect();
    Ok(RhoImage { ground: p.elements().to_vec(), images })
}

/// Same embedding after an injective relabeling of the points into
/// another ground set.
pub fn rho_with_injection(
    p: &FinitePreorder,
    alpha: &BTreeMap<String, String>,
) -> Result<RhoImage> {
    let plain = rho_embedding(p)?;
    let mut seen: BTreeSet<&String> = BTreeSet::new();
    let mut ground = Vec::with_capacity(p.len());
    for x in p.elements() {
        let y = alpha
            .get(x)
            .ok_or_else(|| Error::domain(format!("no image for point `{x}`")))?;
        if !seen.insert(y) {
            return Err(Error::domain(format!("relabeling is not injective at `{y}`")));
        }
        ground.push(y.clone());
    }
    let images = plain
        .images
        .iter()
        .map(|img| img.iter().map(|v| alpha[v].clone()).collect())
        .collect();
    ground.sort_unstable();
    Ok(RhoImage { ground, images })
}

/// The family of all nonempty chains of a T0 space, as a simplicial
/// neighborhood over the point set. This is the open image of the face
/// poset of the order complex inside the hyperspace over the points.
pub fn embed_weak(p: &FinitePreorder) -> Result<SimplicialNeighborhood> {
    let k = order_complex(p)?;
    let members: BTreeSet<BTreeSet<usize>> = k.faces()?.into_iter().collect();
    Ok(SimplicialNeighborhood::from_indexed(p.elements().to_vec(), members))
}

/// Down-closed and containing every singleton of the vertex set.
pub fn is_simplicial_neighborhood(family: &[BTreeSet<String>], vertices: &[String]) -> bool {
    let present: BTreeSet<&BTreeSet<String>> = family.iter().collect();
    for v in vertices {
        let singleton: BTreeSet<String> = [v.clone()].into_iter().collect();
        if !present.contains(&singleton) {
            return false;
        }
    }
    for m in family {
        if m.is_empty() || !m.iter().all(|v| vertices.contains(v)) {
            return false;
        }
        let vs: Vec<&String> = m.iter().collect();
        for mask in 1usize..(1 << vs.len()) {
            let sub: BTreeSet<String> = (0..vs.len())
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| vs[i].clone())
                .collect();
            if !present.contains(&sub) {
                return false;
            }
        }
    }
    true
}

/// From a neighborhood back to a complex: the members are the
/// simplices, the singleton members the vertices.
pub fn functor_y(u: &SimplicialNeighborhood) -> AbstractComplex {
    AbstractComplex::from_indexed_parts(u.vertices().to_vec(), u.members().to_vec())
}

/// A point map between the inclusion orders of two simplicial
/// neighborhoods, given by member-label assignment.
#[derive(Debug, Clone)]
pub struct NeighborhoodMap {
    domain: SimplicialNeighborhood,
    codomain: SimplicialNeighborhood,
    map: PointMap,
}

impl NeighborhoodMap {
    pub fn new(
        domain: SimplicialNeighborhood,
        codomain: SimplicialNeighborhood,
        assignment: &BTreeMap<String, String>,
    ) -> Result<Self> {
        let map = PointMap::new(domain.to_preorder(), codomain.to_preorder(), assignment)?;
        Ok(NeighborhoodMap { domain, codomain, map })
    }

    pub fn identity(u: SimplicialNeighborhood) -> Self {
        let p = u.to_preorder();
        let n = p.len();
        NeighborhoodMap {
            domain: u.clone(),
            codomain: u,
            map: PointMap::from_indices(p.clone(), p, (0..n).collect()),
        }
    }

    /// The induced point map on the underlying hyperspace of a
    /// simplicial map, restricted to the chain neighborhoods.
    pub fn elevation_of_simplicial(
        phi: &SimplicialMap,
        domain: SimplicialNeighborhood,
        codomain: SimplicialNeighborhood,
    ) -> Result<Self> {
        let mut assignment: BTreeMap<String, String> = BTreeMap::new();
        for m in domain.members() {
            let face: BTreeSet<usize> = m
                .iter()
                .map(|&i| phi.domain().vertex_index(&domain.vertices()[i]))
                .collect::<Result<_>>()?;
            let image = phi.apply(&face)?;
            assignment.insert(domain.label_of(m), phi.codomain().label_of(&image));
        }
        NeighborhoodMap::new(domain, codomain, &assignment)
    }

    pub fn domain(&self) -> &SimplicialNeighborhood {
        &self.domain
    }

    pub fn codomain(&self) -> &SimplicialNeighborhood {
        &self.codomain
    }

    pub fn point_map(&self) -> &PointMap {
        &self.map
    }

    pub fn image_label(&self, member_label: &str) -> Result<String> {
        Ok(self.map.image_of(member_label)?.to_string())
    }

    pub fn compose(&self, other: &NeighborhoodMap) -> Result<NeighborhoodMap> {
        Ok(NeighborhoodMap {
            domain: other.domain.clone(),
            codomain: self.codomain.clone(),
            map: self.map.compose(&other.map)?,
        })
    }
}

/// Continuous and open as a map of the neighborhood subspaces.
pub fn is_hypersimplicial(psi: &NeighborhoodMap) -> bool {
    psi.map.is_continuous() && psi.map.is_open_map()
}

/// Recover the simplicial map from a hypersimplicial one: openness
/// forces singleton members to land on singletons, and those images
/// define the vertex map.
pub fn functor_y_on_map(psi: &NeighborhoodMap) -> Result<SimplicialMap> {
    if !is_hypersimplicial(psi) {
        return Err(Error::precondition("map is not hypersimplicial"));
    }
    let dom_k = functor_y(psi.domain());
    let cod_k = functor_y(psi.codomain());
    let mut vertex_map: BTreeMap<String, String> = BTreeMap::new();
    for (i, v) in psi.domain().vertices().iter().enumerate() {
        let singleton: BTreeSet<usize> = [i].into_iter().collect();
        let image_label = psi.image_label(&psi.domain().label_of(&singleton))?;
        let image = parse_face(&cod_k, &image_label)?;
        if image.len() != 1 {
            return Err(Error::precondition(format!(
                "singleton {{{v}}} does not map to a singleton"
            )));
        }
        let w = cod_k.vertices()[*image.iter().next().expect("nonempty")].clone();
        vertex_map.insert(v.clone(), w);
    }
    SimplicialMap::new(dom_k, cod_k, &vertex_map)
}

/// Largest member cardinality minus one.
pub fn neighborhood_dimension(u: &SimplicialNeighborhood) -> usize {
    u.members().iter().map(|m| m.len()).max().unwrap_or(1) - 1
}

/// Every member has a finite closure. Trivially true for materialized
/// neighborhoods; kept as a named check to mirror the lazy hyperspace.
pub fn is_locally_finite_neighborhood(_u: &SimplicialNeighborhood) -> bool {
    true
}

/// `w` sits fully in `u` when every member of `u` whose vertices all
/// lie in `w` has the same closure in both neighborhoods.
pub fn is_full_subneighborhood(
    w: &SimplicialNeighborhood,
    u: &SimplicialNeighborhood,
) -> Result<bool> {
    // w must be an open (down-closed) subfamily of u
    let translate = |m: &BTreeSet<usize>| -> Result<BTreeSet<usize>> {
        m.iter().map(|&i| u.vertex_index(&w.vertices()[i])).collect()
    };
    let w_in_u: BTreeSet<BTreeSet<usize>> = w
        .members()
        .iter()
        .map(|m| {
            let t = translate(m)?;
            if !u.contains(&t) {
                return Err(Error::domain(format!(
                    "{} is not a member of the ambient neighborhood",
                    w.label_of(m)
                )));
            }
            Ok(t)
        })
        .collect::<Result<_>>()?;
    let w_vertices: BTreeSet<usize> = w
        .vertices()
        .iter()
        .map(|v| u.vertex_index(v))
        .collect::<Result<_>>()?;
    for c in u.members() {
        if !c.iter().all(|v| w_vertices.contains(v)) {
            continue;
        }
        for d in u.up_set_of(c) {
            if !w_in_u.contains(&d) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Whether x maps to {x} continuously into the hyperspace over the
/// points: singleton images nest only when equal, so this holds exactly
/// for antichains.
pub fn singleton_map_continuity(p: &FinitePreorder) -> bool {
    let n = p.len();
    for i in 0..n {
        for j in 0..n {
            // continuity would need {x_i} included in {x_j} whenever x_i <= x_j
            if p.leq_idx(i, j) && i != j {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn poset(elements: &[&str], covers: &[(&str, &str)]) -> FinitePreorder {
        FinitePreorder::from_covers(elements, covers).unwrap()
    }

    fn circle_model() -> FinitePreorder {
        poset(&["a", "b", "c", "d"], &[("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")])
    }

    #[test]
    fn order_complex_examples() {
        let antichain = poset(&["p", "q", "r"], &[]);
        assert_eq!(order_complex(&antichain).unwrap().f_vector().unwrap(), vec![3]);

        let sierpinski = poset(&["0", "1"], &[("0", "1")]);
        assert_eq!(order_complex(&sierpinski).unwrap().f_vector().unwrap(), vec![2, 1]);

        let circle = order_complex(&circle_model()).unwrap();
        assert_eq!(circle.f_vector().unwrap(), vec![4, 4]);

        let not_t0 =
            FinitePreorder::from_relation(&["x", "y"], &[("x", "y"), ("y", "x")]).unwrap();
        assert!(order_complex(&not_t0).is_err());
    }

    #[test]
    fn order_complex_simplices_are_exactly_chains() {
        let p = poset(&["a", "b", "c", "d"], &[("a", "b"), ("b", "c"), ("a", "d")]);
        let k = order_complex(&p).unwrap();
        let n = p.len();
        for mask in 1usize..(1 << n) {
            let subset: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
            let is_chain = subset
                .iter()
                .all(|&i| subset.iter().all(|&j| p.leq_idx(i, j) || p.leq_idx(j, i)));
            let simplex: alloc::collections::BTreeSet<usize> =
                subset.into_iter().collect();
            assert_eq!(k.contains(&simplex), is_chain, "{simplex:?}");
        }
    }

    #[test]
    fn face_poset_examples() {
        let edge = AbstractComplex::from_maximal(&["a", "b"], &[vec!["a", "b"]]).unwrap();
        let fp = face_poset(&edge).unwrap();
        let expected: Vec<String> =
            ["{a,b}", "{a}", "{b}"].iter().map(|s| s.to_string()).collect();
        assert_eq!(fp.elements(), &expected[..]);
        assert!(fp.leq("{a}", "{a,b}").unwrap());
        assert!(!fp.leq("{a,b}", "{a}").unwrap());
        assert!(fp.is_t0());

        let hollow = AbstractComplex::from_maximal(
            &["a", "b", "c"],
            &[vec!["a", "b"], vec!["b", "c"], vec!["a", "c"]],
        )
        .unwrap();
        assert_eq!(face_poset(&hollow).unwrap().len(), 6);
    }

    #[test]
    fn functor_x_on_map_examples() {
        let edge = AbstractComplex::from_maximal(&["a", "b"], &[vec!["a", "b"]]).unwrap();
        let point = AbstractComplex::from_maximal(&["a"], &[]).unwrap();
        let collapse = SimplicialMap::new(
            edge.clone(),
            point,
            &[("a", "a"), ("b", "a")]
                .iter()
                .map(|(u, v)| (u.to_string(), v.to_string()))
                .collect(),
        )
        .unwrap();
        let induced = functor_x_on_map(&collapse).unwrap();
        assert!(induced.is_continuous());
        assert_eq!(induced.image_of("{a,b}").unwrap(), "{a}");

        let id = SimplicialMap::identity(edge);
        let induced_id = functor_x_on_map(&id).unwrap();
        for label in induced_id.domain().elements() {
            assert_eq!(induced_id.image_of(label).unwrap(), label);
        }
    }

    #[test]
    fn rho_examples() {
        let discrete = poset(&["1", "2", "3"], &[]);
        let rho = rho_embedding(&discrete).unwrap();
        assert!(rho.images().iter().all(|img| img.len() == 1));
        assert!(rho.image_is_open());
        assert!(rho.is_order_embedding(&discrete));

        let sierpinski = poset(&["0", "1"], &[("0", "1")]);
        let rho = rho_embedding(&sierpinski).unwrap();
        assert_eq!(rho.image_of(&sierpinski, "0").unwrap().len(), 1);
        assert_eq!(rho.image_of(&sierpinski, "1").unwrap().len(), 2);
        assert!(!rho.image_is_open());

        // three points where 2 and 3 are topologically indistinguishable
        let bad = FinitePreorder::from_relation(
            &["1", "2", "3"],
            &[("1", "2"), ("1", "3"), ("2", "3"), ("3", "2")],
        )
        .unwrap();
        let err = rho_embedding(&bad).unwrap_err();
        assert!(err.to_string().contains("rho(2) = rho(3)"), "{err}");
    }

    #[test]
    fn rho_with_injection_examples() {
        let chain = poset(&["a", "b"], &[("a", "b")]);
        let alpha: BTreeMap<String, String> =
            [("a", "5"), ("b", "9")].iter().map(|(k, v)| (k.to_string(), v.to_string())).collect();
        let rho = rho_with_injection(&chain, &alpha).unwrap();
        let expected: BTreeSet<String> = ["5".to_string(), "9".to_string()].into();
        assert_eq!(rho.image_of(&chain, "b").unwrap(), &expected);
        assert!(rho.is_order_embedding(&chain));

        let ident: BTreeMap<String, String> =
            [("a", "a"), ("b", "b")].iter().map(|(k, v)| (k.to_string(), v.to_string())).collect();
        assert_eq!(rho_with_injection(&chain, &ident).unwrap(), rho_embedding(&chain).unwrap());

        let bad: BTreeMap<String, String> =
            [("a", "x"), ("b", "x")].iter().map(|(k, v)| (k.to_string(), v.to_string())).collect();
        assert!(rho_with_injection(&chain, &bad).is_err());
    }

    #[test]
    fn embed_weak_examples() {
        let sierpinski = poset(&["0", "1"], &[("0", "1")]);
        let u = embed_weak(&sierpinski).unwrap();
        assert_eq!(u.members().len(), 3);

        let antichain = poset(&["a", "b", "c"], &[]);
        assert!(embed_weak(&antichain).unwrap().members().iter().all(|m| m.len() == 1));

        let u = embed_weak(&circle_model()).unwrap();
        assert_eq!(u.members().len(), 8);
        let ab: BTreeSet<usize> = [0, 1].into_iter().collect();
        assert!(!u.contains(&ab), "incomparable pair must not be a chain");

        let family: Vec<BTreeSet<String>> = u
            .members_by_id()
            .iter()
            .map(|m| m.iter().cloned().collect())
            .collect();
        assert!(is_simplicial_neighborhood(&family, u.vertices()));
    }

    #[test]
    fn is_simplicial_neighborhood_examples() {
        let vs: Vec<String> = ["a", "b"].iter().map(|s| s.to_string()).collect();
        let s = |items: &[&str]| -> BTreeSet<String> {
            items.iter().map(|s| s.to_string()).collect()
        };
        assert!(is_simplicial_neighborhood(&[s(&["a"]), s(&["b"]), s(&["a", "b"])], &vs));
        assert!(!is_simplicial_neighborhood(&[s(&["a"])], &vs));
        assert!(!is_simplicial_neighborhood(
            &[s(&["a"]), s(&["b"]), s(&["a", "b"]), s(&["a", "c"])],
            &vs
        ));
        // pair without one of its singletons
        let vs3: Vec<String> = ["a", "b", "c"].iter().map(|x| x.to_string()).collect();
        assert!(!is_simplicial_neighborhood(
            &[s(&["a"]), s(&["b"]), s(&["c"]), s(&["a", "b"]), s(&["b", "c"]), s(&["a", "b", "c"])],
            &vs3
        ));
    }

    #[test]
    fn functor_y_examples() {
        let full = SimplicialNeighborhood::new_closing(
            &["a", "b", "c"],
            &[vec!["a", "b", "c"]],
        )
        .unwrap();
        let k = functor_y(&full);
        assert_eq!(k.f_vector().unwrap(), vec![3, 3, 1]);

        let discrete =
            SimplicialNeighborhood::new_closing::<&str>(&["x", "y"], &[]).unwrap();
        assert_eq!(functor_y(&discrete).f_vector().unwrap(), vec![2]);
    }

    #[test]
    fn roundtrip_y_after_x() {
        let suite = [
            AbstractComplex::from_maximal(&["a", "b"], &[vec!["a", "b"]]).unwrap(),
            AbstractComplex::from_maximal(
                &["a", "b", "c"],
                &[vec!["a", "b"], vec!["b", "c"], vec!["a", "c"]],
            )
            .unwrap(),
            AbstractComplex::from_maximal(&["a", "b", "c"], &[vec!["a", "b", "c"]]).unwrap(),
        ];
        for k in &suite {
            // the X-image of K inside the hyperspace over the vertices is
            // the member family of K's faces; functor_y recovers K
            let members: Vec<Vec<String>> = k
                .faces()
                .unwrap()
                .iter()
                .map(|f| f.iter().map(|&i| k.vertices()[i].clone()).collect())
                .collect();
            let image =
                SimplicialNeighborhood::new_strict(&k.vertices().to_vec(), &members).unwrap();
            let back = functor_y(&image);
            assert!(back.is_isomorphic(k).unwrap());
        }
    }

    #[test]
    fn roundtrip_face_poset_of_y() {
        let u = SimplicialNeighborhood::new_closing(
            &["a", "b", "c"],
            &[vec!["a", "b"], vec!["b", "c"]],
        )
        .unwrap();
        let fp = face_poset(&functor_y(&u)).unwrap();
        assert!(fp.is_isomorphic_to(&u.to_preorder()));
    }

    #[test]
    fn k_then_x_is_subdivision() {
        let k = AbstractComplex::from_maximal(
            &["a", "b", "c"],
            &[vec!["a", "b"], vec!["b", "c"], vec!["a", "c"]],
        )
        .unwrap();
        let kx = order_complex(&face_poset(&k).unwrap()).unwrap();
        let sd = k.barycentric_subdivision().unwrap();
        assert_eq!(kx, sd, "labels agree exactly, not just up to isomorphism");
    }

    #[test]
    fn hypersimplicial_examples() {
        let u = SimplicialNeighborhood::new_closing(&["a", "b"], &[vec!["a", "b"]]).unwrap();
        let id = NeighborhoodMap::identity(u.clone());
        assert!(is_hypersimplicial(&id));
        let back = functor_y_on_map(&id).unwrap();
        assert_eq!(back.vertex_image(0), 0);
        assert_eq!(back.vertex_image(1), 1);

        // collapse {a,b} to {a}: continuous and open, induces b -> a
        let point = SimplicialNeighborhood::new_closing::<&str>(&["a"], &[]).unwrap();
        let psi = NeighborhoodMap::new(
            u.clone(),
            point,
            &[("{a}", "{a}"), ("{b}", "{a}"), ("{a,b}", "{a}")]
                .iter()
                .map(|(k, v)| (k.to_string(), v.to_string()))
                .collect(),
        )
        .unwrap();
        assert!(is_hypersimplicial(&psi));
        let induced = functor_y_on_map(&psi).unwrap();
        assert_eq!(induced.vertex_image(0), 0);
        assert_eq!(induced.vertex_image(1), 0);

        // sending a singleton to a pair is not open
        let bad = NeighborhoodMap::new(
            SimplicialNeighborhood::new_closing::<&str>(&["x"], &[]).unwrap(),
            u,
            &[("{x}", "{a,b}")].iter().map(|(k, v)| (k.to_string(), v.to_string())).collect(),
        )
        .unwrap();
        assert!(!is_hypersimplicial(&bad));
        assert!(functor_y_on_map(&bad).is_err());
    }

    #[test]
    fn x_images_are_hypersimplicial() {
        // the elevation of a simplicial map restricted to chain
        // neighborhoods is continuous and open, and Y recovers the map
        let edge = AbstractComplex::from_maximal(&["a", "b"], &[vec!["a", "b"]]).unwrap();
        let tri =
            AbstractComplex::from_maximal(&["a", "b", "c"], &[vec!["a", "b", "c"]]).unwrap();
        let incl = SimplicialMap::new(
            edge.clone(),
            tri.clone(),
            &[("a", "a"), ("b", "b")]
                .iter()
                .map(|(u, v)| (u.to_string(), v.to_string()))
                .collect(),
        )
        .unwrap();
        let dom = SimplicialNeighborhood::new_closing(&["a", "b"], &[vec!["a", "b"]]).unwrap();
        let cod =
            SimplicialNeighborhood::new_closing(&["a", "b", "c"], &[vec!["a", "b", "c"]])
                .unwrap();
        let psi = NeighborhoodMap::elevation_of_simplicial(&incl, dom, cod).unwrap();
        assert!(is_hypersimplicial(&psi));
        let back = functor_y_on_map(&psi).unwrap();
        for i in 0..2 {
            assert_eq!(
                back.codomain().vertices()[back.vertex_image(i)],
                incl.codomain().vertices()[incl.vertex_image(i)]
            );
        }
    }

    #[test]
    fn dimension_and_fullness() {
        let full = SimplicialNeighborhood::new_closing(
            &["a", "b", "c"],
            &[vec!["a", "b", "c"]],
        )
        .unwrap();
        assert_eq!(neighborhood_dimension(&full), 2);
        assert!(is_locally_finite_neighborhood(&full));

        let skeleton0 =
            SimplicialNeighborhood::new_closing::<&str>(&["a", "b", "c"], &[]).unwrap();
        assert!(!is_full_subneighborhood(&skeleton0, &full).unwrap());
        assert!(is_full_subneighborhood(&full, &full).unwrap());

        // a family not inside the ambient one is rejected
        let stray = SimplicialNeighborhood::new_closing(&["a", "b", "d"], &[vec!["a", "d"]]);
        assert!(stray.is_ok());
        assert!(is_full_subneighborhood(&stray.unwrap(), &full).is_err());
    }

    #[test]
    fn singleton_map_continuity_examples() {
        assert!(singleton_map_continuity(&poset(&["a", "b", "c"], &[])));
        assert!(!singleton_map_continuity(&poset(&["a", "b"], &[("a", "b")])));
        for n in 1..=4 {
            let ids: Vec<String> = (0..n).map(|i| format!("x{i}")).collect();
            let p = FinitePreorder::from_covers(&ids, &[]).unwrap();
            assert_eq!(singleton_map_continuity(&p), p.is_antichain());
        }
    }

    #[test]
    fn strict_constructor_rejects_open_gaps() {
        assert!(SimplicialNeighborhood::new_strict(
            &["a", "b"],
            &[vec!["a"], vec!["b"], vec!["a", "b"]]
        )
        .is_ok());
        assert!(SimplicialNeighborhood::new_strict(&["a", "b"], &[vec!["a", "b"]]).is_err());
        assert!(SimplicialNeighborhood::new_strict(&["a", "b"], &[vec!["a"]]).is_err());
    }
}
