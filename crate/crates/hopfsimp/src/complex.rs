//! Finite abstract simplicial complexes on labeled vertices `0..n-1`.
//!
//! A complex is stored by its facets (maximal faces) as sorted bitmasks. Every
//! vertex is a face (full vertex support), so the facet set together with `n`
//! determines the complex. The unique complex with no vertices has facet set
//! `{∅}` and acts as the unit of the Hopf algebra.

use std::collections::BTreeSet;
use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Hard cap: faces are `u32` bitmasks and canonical forms are found by
/// permutation search, so anything near this bound is already impractical.
pub const MAX_VERTICES: usize = 20;

/// Complexes are enumerated by antichain search; beyond five vertices the
/// labeled counts blow up past desk scale.
pub const MAX_ENUMERATE: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SimplicialComplex {
    n: usize,
    /// Sorted, pairwise-incomparable facet bitmasks. The unit complex stores `[0]`.
    facets: Vec<u32>,
}

impl SimplicialComplex {
    /// The complex with no vertices, whose only face is the empty set.
    pub fn unit() -> Self {
        SimplicialComplex { n: 0, facets: vec![0] }
    }

    /// Builds a complex from a list of faces, normalizing to facets: dominated
    /// sets are removed and any vertex missing from every face is added as a
    /// singleton facet.
    pub fn from_facets(n: usize, facet_list: &[Vec<usize>]) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::Capacity(format!(
                "complexes support at most {MAX_VERTICES} vertices, got {n}"
            )));
        }
        let mut masks = Vec::with_capacity(facet_list.len());
        for verts in facet_list {
            let mut m = 0u32;
            for &v in verts {
                if v >= n {
                    return Err(Error::Input(format!(
                        "vertex label {v} out of range for n={n}"
                    )));
                }
                m |= 1 << v;
            }
            masks.push(m);
        }
        Ok(Self::from_masks(n, masks))
    }

    /// Normalizing constructor over bitmasks; callers guarantee bits `< n`.
    pub(crate) fn from_masks(n: usize, mut masks: Vec<u32>) -> Self {
        if n == 0 {
            return Self::unit();
        }
        masks.retain(|&m| m != 0);
        masks.sort_unstable();
        masks.dedup();
        // Remove inclusion-dominated sets.
        let mut maximal: Vec<u32> = Vec::with_capacity(masks.len());
        for (i, &m) in masks.iter().enumerate() {
            let dominated = masks
                .iter()
                .enumerate()
                .any(|(j, &other)| j != i && other & m == m && other != m);
            if !dominated {
                maximal.push(m);
            }
        }
        // Full vertex support: missing vertices become singleton facets.
        let covered = maximal.iter().fold(0u32, |acc, &m| acc | m);
        for v in 0..n {
            if covered & (1 << v) == 0 {
                maximal.push(1 << v);
            }
        }
        maximal.sort_unstable();
        SimplicialComplex { n, facets: maximal }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_unit(&self) -> bool {
        self.n == 0
    }

    pub fn facet_masks(&self) -> &[u32] {
        &self.facets
    }

    /// Facets as sorted vertex lists, in deterministic order.
    pub fn facet_sets(&self) -> Vec<Vec<usize>> {
        let mut sets: Vec<Vec<usize>> = self.facets.iter().map(|&m| mask_to_verts(m)).collect();
        sets.sort();
        sets
    }

    /// Downward closure of the facets, including the empty face.
    pub fn faces_masks(&self) -> BTreeSet<u32> {
        let mut faces = BTreeSet::new();
        for &f in &self.facets {
            let mut sub = f;
            loop {
                faces.insert(sub);
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & f;
            }
        }
        faces
    }

    pub fn faces(&self) -> Vec<Vec<usize>> {
        self.faces_masks().iter().map(|&m| mask_to_verts(m)).collect()
    }

    /// Max facet dimension; the unit complex has dimension -1.
    pub fn dimension(&self) -> i64 {
        self.facets
            .iter()
            .map(|&m| m.count_ones() as i64 - 1)
            .max()
            .unwrap_or(-1)
    }

    /// All faces of dimension at most `k`, on the same vertex set.
    pub fn k_skeleton(&self, k: usize) -> Self {
        let keep = (k + 1) as u32;
        let mut masks = Vec::new();
        for &f in &self.facets {
            if f.count_ones() <= keep {
                masks.push(f);
            } else {
                let verts = mask_to_verts(f);
                for sub in verts.iter().combinations(k + 1) {
                    masks.push(sub.iter().fold(0u32, |acc, &&v| acc | 1 << v));
                }
            }
        }
        Self::from_masks(self.n, masks)
    }

    /// Induced subcomplex on the vertex subset `t_mask`, relabeled
    /// order-preservingly to `0..|T|-1`.
    pub fn induced(&self, t_mask: u32) -> Self {
        let t_verts = mask_to_verts(t_mask);
        let masks = self
            .facets
            .iter()
            .map(|&f| compress_mask(f & t_mask, &t_verts))
            .collect();
        Self::from_masks(t_verts.len(), masks)
    }

    pub fn induced_on(&self, verts: &[usize]) -> Self {
        self.induced(verts.iter().fold(0u32, |acc, &v| acc | 1 << v))
    }

    /// Disjoint union; the other complex's vertices are shifted up by `self.n`.
    pub fn disjoint_union(&self, other: &Self) -> Self {
        let shift = self.n;
        let mut masks = self.facets.clone();
        masks.extend(other.facets.iter().map(|&m| m << shift));
        Self::from_masks(self.n + other.n, masks)
    }

    /// Face counts by dimension `(f_0, ..., f_d)`; empty for the unit complex.
    pub fn f_vector(&self) -> FVector {
        let d = self.dimension();
        if d < 0 {
            return FVector(vec![]);
        }
        let mut entries = vec![0u64; (d + 1) as usize];
        for m in self.faces_masks() {
            if m != 0 {
                entries[m.count_ones() as usize - 1] += 1;
            }
        }
        FVector(entries)
    }

    fn relabeled_facets(&self, perm: &[usize]) -> Vec<u32> {
        let mut masks: Vec<u32> = self
            .facets
            .iter()
            .map(|&f| {
                let mut m = 0u32;
                for v in 0..self.n {
                    if f & (1 << v) != 0 {
                        m |= 1 << perm[v];
                    }
                }
                m
            })
            .collect();
        masks.sort_unstable();
        masks
    }

    /// Complex relabeled by `perm` (vertex `v` becomes `perm[v]`).
    pub fn relabel(&self, perm: &[usize]) -> Self {
        SimplicialComplex {
            n: self.n,
            facets: self.relabeled_facets(perm),
        }
    }

    /// Canonical representative of the isomorphism class: the minimal facet
    /// bitmask list over all vertex relabelings. Equal canonical forms
    /// characterize isomorphic complexes.
    pub fn canonical_form(&self) -> Self {
        self.canonical_form_with_witness().0
    }

    /// Canonical form plus a permutation realizing it.
    pub fn canonical_form_with_witness(&self) -> (Self, Vec<usize>) {
        if self.n <= 1 {
            return (self.clone(), (0..self.n).collect());
        }
        let mut best: Option<(Vec<u32>, Vec<usize>)> = None;
        for perm in (0..self.n).permutations(self.n) {
            let masks = self.relabeled_facets(&perm);
            match &best {
                Some((b, _)) if *b <= masks => {}
                _ => best = Some((masks, perm)),
            }
        }
        let (facets, perm) = best.expect("n >= 2 has permutations");
        (SimplicialComplex { n: self.n, facets }, perm)
    }

    pub fn is_isomorphic_to(&self, other: &Self) -> bool {
        self.n == other.n && self.canonical_form() == other.canonical_form()
    }

    /// The 1-skeleton as a simple graph: edges are the 2-element faces.
    pub fn one_skeleton_graph(&self) -> Graph {
        let mut edges = Vec::new();
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                let pair = (1u32 << u) | (1 << v);
                if self.facets.iter().any(|&f| f & pair == pair) {
                    edges.push((u, v));
                }
            }
        }
        Graph::new(self.n, &edges).expect("1-skeleton edges are in range")
    }

    /// Connected components of the 1-skeleton (isolated vertices count).
    pub fn component_count(&self) -> usize {
        self.one_skeleton_graph().component_count()
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() == 1
    }

    /// Rank of the 1-skeleton: `n` minus its number of components.
    pub fn one_skeleton_rank(&self) -> usize {
        self.n - self.component_count()
    }

    /// All isomorphism classes of complexes with full vertex support on `n`
    /// vertices, as canonical forms in sorted order.
    pub fn enumerate_complexes(n: usize) -> Result<Vec<Self>> {
        if n > MAX_ENUMERATE {
            return Err(Error::Capacity(format!(
                "complex enumeration is bounded at n <= {MAX_ENUMERATE}, got {n}"
            )));
        }
        if n == 0 {
            return Ok(vec![Self::unit()]);
        }
        let full = (1u32 << n) - 1;
        let mut seen: BTreeSet<SimplicialComplex> = BTreeSet::new();
        let mut chosen: Vec<u32> = Vec::new();
        fn dfs(
            start: u32,
            full: u32,
            n: usize,
            chosen: &mut Vec<u32>,
            seen: &mut BTreeSet<SimplicialComplex>,
        ) {
            let union = chosen.iter().fold(0u32, |acc, &m| acc | m);
            if union == full {
                let gamma = SimplicialComplex {
                    n,
                    facets: {
                        let mut f = chosen.clone();
                        f.sort_unstable();
                        f
                    },
                };
                seen.insert(gamma.canonical_form());
            }
            for m in start..=full {
                let incomparable = chosen
                    .iter()
                    .all(|&c| c & m != c && c & m != m);
                if incomparable {
                    chosen.push(m);
                    dfs(m + 1, full, n, chosen, seen);
                    chosen.pop();
                }
            }
        }
        dfs(1, full, n, &mut chosen, &mut seen);
        Ok(seen.into_iter().collect())
    }

    /// Parses the one-line text format, e.g. `n=4; {0,1,2},{2,3}`.
    pub fn parse_text(line: &str) -> Result<Self> {
        let line = line.trim();
        let rest = line
            .strip_prefix("n=")
            .ok_or_else(|| Error::Input(format!("expected `n=<count>; ...`, got {line:?}")))?;
        let (num, tail) = rest
            .split_once(';')
            .ok_or_else(|| Error::Input("missing `;` after vertex count".into()))?;
        let n: usize = num
            .trim()
            .parse()
            .map_err(|_| Error::Input(format!("bad vertex count {:?}", num.trim())))?;
        let mut facets: Vec<Vec<usize>> = Vec::new();
        let mut chars = tail.chars().peekable();
        while let Some(c) = chars.next() {
            match c {
                '{' => {
                    let mut body = String::new();
                    for c in chars.by_ref() {
                        if c == '}' {
                            break;
                        }
                        body.push(c);
                    }
                    let mut verts = Vec::new();
                    for tok in body.split(',') {
                        let tok = tok.trim();
                        if tok.is_empty() {
                            continue;
                        }
                        verts.push(
                            tok.parse()
                                .map_err(|_| Error::Input(format!("bad vertex {tok:?}")))?,
                        );
                    }
                    facets.push(verts);
                }
                ',' | ' ' | '\t' => {}
                other => {
                    return Err(Error::Input(format!("unexpected character {other:?}")));
                }
            }
        }
        Self::from_facets(n, &facets)
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}; ", self.n)?;
        let sets = self.facet_sets();
        let body = sets
            .iter()
            .map(|verts| format!("{{{}}}", verts.iter().join(",")))
            .join(",");
        write!(f, "{body}")
    }
}

fn mask_to_verts(m: u32) -> Vec<usize> {
    (0..32).filter(|&v| m & (1 << v) != 0).collect()
}

/// Renumber the bits of `m` (a submask of the sorted vertex list `t_verts`)
/// down to positions `0..t_verts.len()`.
fn compress_mask(m: u32, t_verts: &[usize]) -> u32 {
    let mut out = 0u32;
    for (new, &old) in t_verts.iter().enumerate() {
        if m & (1 << old) != 0 {
            out |= 1 << new;
        }
    }
    out
}

/// JSON shape: `{"n":4,"facets":[[0,1,2],[2,3]]}`.
#[derive(Serialize, Deserialize)]
struct ComplexDto {
    n: usize,
    facets: Vec<Vec<usize>>,
}

impl From<SimplicialComplex> for ComplexDto {
    fn from(c: SimplicialComplex) -> Self {
        ComplexDto {
            n: c.n,
            facets: c.facet_sets().into_iter().filter(|f| !f.is_empty()).collect(),
        }
    }
}

impl TryFrom<ComplexDto> for SimplicialComplex {
    type Error = Error;
    fn try_from(dto: ComplexDto) -> Result<Self> {
        SimplicialComplex::from_facets(dto.n, &dto.facets)
    }
}

impl Serialize for SimplicialComplex {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ComplexDto::from(self.clone()).serialize(s)
    }
}

impl<'de> Deserialize<'de> for SimplicialComplex {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let dto = ComplexDto::deserialize(d)?;
        SimplicialComplex::try_from(dto).map_err(serde::de::Error::custom)
    }
}

/// Face counts by dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FVector(pub Vec<u64>);

impl FVector {
    pub fn entries(&self) -> &[u64] {
        &self.0
    }
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.iter().join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn paw() -> SimplicialComplex {
        SimplicialComplex::from_facets(4, &[vec![0, 1, 2], vec![2, 3]]).unwrap()
    }

    #[test]
    fn from_facets_normalizes() {
        let c = paw();
        assert_eq!(c.facet_sets(), vec![vec![0, 1, 2], vec![2, 3]]);
        let u = SimplicialComplex::from_facets(0, &[]).unwrap();
        assert_eq!(u, SimplicialComplex::unit());
        assert_eq!(u.facet_masks(), &[0]);
        // Dominated sets removed, isolated vertex added.
        let c = SimplicialComplex::from_facets(3, &[vec![0, 1], vec![0], vec![1]]).unwrap();
        assert_eq!(c.facet_sets(), vec![vec![0, 1], vec![2]]);
    }

    #[test]
    fn from_facets_rejects_out_of_range() {
        assert!(matches!(
            SimplicialComplex::from_facets(2, &[vec![0, 5]]),
            Err(Error::Input(_))
        ));
    }

    #[test]
    fn faces_downward_closure() {
        assert_eq!(paw().faces_masks().len(), 10);
        assert_eq!(SimplicialComplex::unit().faces_masks().len(), 1);
        let pt = SimplicialComplex::from_facets(1, &[]).unwrap();
        assert_eq!(pt.faces(), vec![vec![], vec![0]]);
    }

    #[test]
    fn dimension_cases() {
        assert_eq!(paw().dimension(), 2);
        assert_eq!(SimplicialComplex::unit().dimension(), -1);
        let pts = SimplicialComplex::from_facets(3, &[]).unwrap();
        assert_eq!(pts.dimension(), 0);
        let simplex = SimplicialComplex::from_facets(4, &[vec![0, 1, 2, 3]]).unwrap();
        assert_eq!(simplex.dimension(), 3);
    }

    #[test]
    fn skeleton_matches_paper_example() {
        let sk = paw().k_skeleton(1);
        assert_eq!(
            sk.facet_sets(),
            vec![vec![0, 1], vec![0, 2], vec![1, 2], vec![2, 3]]
        );
        assert_eq!(paw().k_skeleton(2), paw());
        assert_eq!(paw().k_skeleton(7), paw());
        let tri = SimplicialComplex::from_facets(3, &[vec![0, 1, 2]]).unwrap();
        assert_eq!(
            tri.k_skeleton(0).facet_sets(),
            vec![vec![0], vec![1], vec![2]]
        );
    }

    #[test]
    fn induced_follows_the_definition() {
        // T = {0,2,3}: faces are intersections, giving facets {0,2},{2,3} after
        // order-preserving relabeling to {0,1,2}.
        let ind = paw().induced_on(&[0, 2, 3]);
        assert_eq!(ind.facet_sets(), vec![vec![0, 1], vec![1, 2]]);
        assert_eq!(paw().induced_on(&[0, 1, 2, 3]), paw());
        assert_eq!(paw().induced(0), SimplicialComplex::unit());
    }

    #[test]
    fn disjoint_union_laws() {
        let unit = SimplicialComplex::unit();
        assert_eq!(unit.disjoint_union(&paw()), paw());
        assert_eq!(paw().disjoint_union(&unit), paw());
        let pt = SimplicialComplex::from_facets(1, &[]).unwrap();
        let two = pt.disjoint_union(&pt);
        assert_eq!(two.facet_sets(), vec![vec![0], vec![1]]);
        let edge = SimplicialComplex::from_facets(2, &[vec![0, 1]]).unwrap();
        assert_eq!(
            paw().disjoint_union(&edge).dimension(),
            paw().dimension().max(edge.dimension())
        );
    }

    #[test]
    fn f_vector_cases() {
        assert_eq!(paw().f_vector().entries(), &[4, 4, 1]);
        let tri = SimplicialComplex::from_facets(3, &[vec![0, 1, 2]]).unwrap();
        assert_eq!(tri.f_vector().entries(), &[3, 3, 1]);
        let pts = SimplicialComplex::from_facets(5, &[]).unwrap();
        assert_eq!(pts.f_vector().entries(), &[5]);
        assert_eq!(SimplicialComplex::unit().f_vector().entries(), &[] as &[u64]);
    }

    #[test]
    fn canonical_form_orbit_invariance() {
        let c = paw();
        for perm in (0..4).permutations(4) {
            assert_eq!(c.relabel(&perm).canonical_form(), c.canonical_form());
        }
        let path_a = SimplicialComplex::from_facets(3, &[vec![0, 1], vec![1, 2]]).unwrap();
        let path_b = SimplicialComplex::from_facets(3, &[vec![0, 1], vec![0, 2]]).unwrap();
        assert_eq!(path_a.canonical_form(), path_b.canonical_form());
        let canon = path_a.canonical_form();
        assert_eq!(canon.canonical_form(), canon);
    }

    #[test]
    fn canonical_form_witness_and_alternating_sum() {
        let c = paw();
        let (canon, perm) = c.canonical_form_with_witness();
        assert_eq!(c.relabel(&perm), canon);
        let alt = |x: &SimplicialComplex| -> i64 {
            x.f_vector()
                .entries()
                .iter()
                .enumerate()
                .map(|(i, &f)| if i % 2 == 0 { f as i64 } else { -(f as i64) })
                .sum()
        };
        assert_eq!(alt(&c), alt(&canon));
    }

    #[test]
    fn skeleton_commutes_with_induced_and_union() {
        let c = paw();
        for t_mask in 0u32..16 {
            for k in 0..3 {
                assert_eq!(
                    c.induced(t_mask).k_skeleton(k),
                    c.k_skeleton(k).induced(t_mask),
                );
            }
        }
        let edge = SimplicialComplex::from_facets(2, &[vec![0, 1]]).unwrap();
        for k in 0..3 {
            assert_eq!(
                c.disjoint_union(&edge).k_skeleton(k),
                c.k_skeleton(k).disjoint_union(&edge.k_skeleton(k))
            );
        }
    }

    #[test]
    fn f_vector_adds_under_union() {
        let edge = SimplicialComplex::from_facets(2, &[vec![0, 1]]).unwrap();
        let u = paw().disjoint_union(&edge);
        let (a, b) = (paw().f_vector(), edge.f_vector());
        let mut expect = a.0.clone();
        for (i, x) in b.0.iter().enumerate() {
            if i < expect.len() {
                expect[i] += x;
            } else {
                expect.push(*x);
            }
        }
        assert_eq!(u.f_vector().0, expect);
    }

    #[test]
    fn enumeration_counts_isomorphism_classes() {
        assert_eq!(SimplicialComplex::enumerate_complexes(0).unwrap().len(), 1);
        assert_eq!(SimplicialComplex::enumerate_complexes(1).unwrap().len(), 1);
        assert_eq!(SimplicialComplex::enumerate_complexes(2).unwrap().len(), 2);
        // Independent oracle for n=3: filter all families of nonempty subsets
        // for the antichain + covering conditions, then dedupe by orbit.
        let n = 3;
        let subsets: Vec<u32> = (1..8).collect();
        let mut labeled: Vec<Vec<u32>> = Vec::new();
        for pick in 0u32..(1 << subsets.len()) {
            let family: Vec<u32> = subsets
                .iter()
                .enumerate()
                .filter(|(i, _)| pick & (1 << i) != 0)
                .map(|(_, &m)| m)
                .collect();
            let antichain = family
                .iter()
                .enumerate()
                .all(|(i, &a)| family.iter().enumerate().all(|(j, &b)| {
                    i == j || (a & b != a && a & b != b)
                }));
            let covering = family.iter().fold(0, |acc, &m| acc | m) == 7;
            if antichain && covering {
                labeled.push(family);
            }
        }
        assert_eq!(labeled.len(), 9, "labeled covering antichains on 3 vertices");
        let mut classes = BTreeSet::new();
        for family in labeled {
            let c = SimplicialComplex { n, facets: { let mut f = family; f.sort_unstable(); f } };
            classes.insert(c.canonical_form());
        }
        assert_eq!(classes.len(), 5, "isomorphism classes on 3 vertices");
        let enumerated = SimplicialComplex::enumerate_complexes(3).unwrap();
        assert_eq!(enumerated, classes.into_iter().collect::<Vec<_>>());
    }

    #[test]
    fn enumeration_refuses_above_bound() {
        assert!(matches!(
            SimplicialComplex::enumerate_complexes(6),
            Err(Error::Capacity(_))
        ));
    }

    #[test]
    fn text_and_json_round_trip() {
        let c = paw();
        let line = c.to_string();
        assert_eq!(line, "n=4; {0,1,2},{2,3}");
        assert_eq!(SimplicialComplex::parse_text(&line).unwrap(), c);
        let json = serde_json::to_string(&c).unwrap();
        assert_eq!(json, r#"{"n":4,"facets":[[0,1,2],[2,3]]}"#);
        let back: SimplicialComplex = serde_json::from_str(&json).unwrap();
        assert_eq!(back, c);
        let unit = SimplicialComplex::unit();
        let back: SimplicialComplex =
            serde_json::from_str(&serde_json::to_string(&unit).unwrap()).unwrap();
        assert_eq!(back, unit);
        assert_eq!(SimplicialComplex::parse_text("n=0; ").unwrap(), unit);
    }
}
