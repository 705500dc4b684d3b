//! Simple graphs, graphic-matroid flats, contractions, acyclic-orientation
//! counts, and the memoized deletion–contraction chromatic polynomial.

use dashmap::DashMap;
use itertools::Itertools;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};
use once_cell::sync::Lazy;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::poly::{Poly, PolyT};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Graph {
    n: usize,
    /// Sorted edge list with `u < v`; no loops, no parallel edges.
    edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut list = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::Input(format!(
                    "edge ({a},{b}) out of range for n={n}"
                )));
            }
            if a == b {
                return Err(Error::Input(format!("loop at vertex {a}")));
            }
            list.push((a.min(b), a.max(b)));
        }
        list.sort_unstable();
        list.dedup();
        Ok(Graph { n, edges: list })
    }

    pub fn complete(n: usize) -> Self {
        let edges: Vec<_> = (0..n).tuple_combinations().collect();
        Graph { n, edges }
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Graph { n, edges }
    }

    /// One center (vertex 0) adjacent to the `n-1` remaining leaves.
    pub fn star(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|v| (0, v)).collect();
        Graph { n, edges }
    }

    /// Tree decoded from a Pruefer sequence over `0..n-1` (length `n-2`).
    pub fn from_pruefer(n: usize, seq: &[usize]) -> Result<Self> {
        if n < 2 {
            return Ok(Graph { n, edges: vec![] });
        }
        if seq.len() != n - 2 || seq.iter().any(|&v| v >= n) {
            return Err(Error::Input("bad Pruefer sequence".into()));
        }
        let mut degree = vec![1usize; n];
        for &v in seq {
            degree[v] += 1;
        }
        let mut edges = Vec::with_capacity(n - 1);
        for &v in seq {
            let leaf = (0..n).find(|&u| degree[u] == 1).expect("leaf exists");
            edges.push((leaf.min(v), leaf.max(v)));
            degree[leaf] -= 1;
            degree[v] -= 1;
        }
        let rest: Vec<usize> = (0..n).filter(|&u| degree[u] == 1).collect();
        edges.push((rest[0], rest[1]));
        Graph::new(n, &edges)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    fn adjacency(&self) -> Vec<u32> {
        let mut adj = vec![0u32; self.n];
        for &(u, v) in &self.edges {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        adj
    }

    pub fn component_count(&self) -> usize {
        let adj = self.adjacency();
        let mut seen = 0u32;
        let mut count = 0;
        for start in 0..self.n {
            if seen & (1 << start) != 0 {
                continue;
            }
            count += 1;
            let mut stack = vec![start];
            seen |= 1 << start;
            while let Some(u) = stack.pop() {
                let mut fresh = adj[u] & !seen;
                seen |= fresh;
                while fresh != 0 {
                    let v = fresh.trailing_zeros() as usize;
                    fresh &= fresh - 1;
                    stack.push(v);
                }
            }
        }
        count
    }

    pub fn is_connected(&self) -> bool {
        self.n >= 1 && self.component_count() == 1
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.edges.len() == self.n - 1
    }

    /// Rank of the graphic matroid: `n` minus the number of components.
    pub fn rank(&self) -> usize {
        self.n - self.component_count()
    }

    fn block_is_connected(&self, mask: u32) -> bool {
        if mask == 0 {
            return false;
        }
        let adj = self.adjacency();
        let start = mask.trailing_zeros() as usize;
        let mut seen = 1u32 << start;
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            let mut fresh = adj[u] & mask & !seen;
            seen |= fresh;
            while fresh != 0 {
                let v = fresh.trailing_zeros() as usize;
                fresh &= fresh - 1;
                stack.push(v);
            }
        }
        seen == mask
    }

    fn edges_inside(&self, blocks: &[Vec<usize>]) -> Vec<(usize, usize)> {
        let masks: Vec<u32> = blocks.iter().map(|b| verts_to_mask(b)).collect();
        self.edges
            .iter()
            .copied()
            .filter(|&(u, v)| {
                masks
                    .iter()
                    .any(|&m| m & (1 << u) != 0 && m & (1 << v) != 0)
            })
            .collect()
    }

    /// All flats, one per partition of the vertices into blocks that each
    /// induce a connected subgraph, in block-partition lexicographic order.
    pub fn flats(&self) -> Vec<Flat> {
        if self.n == 0 {
            return vec![Flat { blocks: vec![], edges: vec![] }];
        }
        let mut out = Vec::new();
        // Set partitions via restricted growth strings.
        let mut rgs = vec![0usize; self.n];
        self.flats_rec(1, &mut rgs, &mut out);
        out.sort();
        out
    }

    fn flats_rec(&self, pos: usize, rgs: &mut Vec<usize>, out: &mut Vec<Flat>) {
        if pos == self.n {
            let nblocks = rgs.iter().max().unwrap() + 1;
            let mut blocks: Vec<Vec<usize>> = vec![Vec::new(); nblocks];
            for (v, &b) in rgs.iter().enumerate() {
                blocks[b].push(v);
            }
            if blocks.iter().all(|b| self.block_is_connected(verts_to_mask(b))) {
                blocks.sort();
                let edges = self.edges_inside(&blocks);
                out.push(Flat { blocks, edges });
            }
            return;
        }
        let max = rgs[..pos].iter().max().copied().unwrap_or(0);
        for b in 0..=max + 1 {
            rgs[pos] = b;
            self.flats_rec(pos + 1, rgs, out);
        }
        rgs[pos] = 0;
    }

    /// Checks the `Flat` invariants against this graph.
    pub fn is_flat_of(&self, flat: &Flat) -> bool {
        let mut union = 0u32;
        for b in &flat.blocks {
            let m = verts_to_mask(b);
            if b.is_empty() || union & m != 0 || !self.block_is_connected(m) {
                return false;
            }
            union |= m;
        }
        union == mask_full(self.n) && flat.edges == self.edges_inside(&flat.blocks)
    }

    /// Contracts the flat: one vertex per block (ordered by block), simple
    /// edges between blocks joined by an ambient edge.
    pub fn contract(&self, flat: &Flat) -> Result<Graph> {
        if !self.is_flat_of(flat) {
            return Err(Error::Input("not a flat of this graph".into()));
        }
        let mut block_of = vec![0usize; self.n];
        for (i, b) in flat.blocks.iter().enumerate() {
            for &v in b {
                block_of[v] = i;
            }
        }
        let edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .map(|&(u, v)| (block_of[u], block_of[v]))
            .filter(|&(a, b)| a != b)
            .collect();
        Graph::new(flat.blocks.len(), &edges)
    }

    fn delete_edge(&self, idx: usize) -> Graph {
        let mut edges = self.edges.clone();
        edges.remove(idx);
        Graph { n: self.n, edges }
    }

    fn contract_edge(&self, idx: usize) -> Graph {
        let (a, b) = self.edges[idx];
        let map = |w: usize| -> usize {
            let w = if w == b { a } else { w };
            if w > b {
                w - 1
            } else {
                w
            }
        };
        let edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .map(|&(u, v)| (map(u), map(v)))
            .filter(|&(u, v)| u != v)
            .map(|(u, v)| (u.min(v), u.max(v)))
            .collect();
        let mut g = Graph { n: self.n - 1, edges };
        g.edges.sort_unstable();
        g.edges.dedup();
        g
    }

    /// Minimal edge-list representation over all vertex relabelings.
    pub fn canonical_form(&self) -> Graph {
        if self.n <= 1 || self.edges.is_empty() {
            return self.clone();
        }
        let mut best: Option<Vec<(usize, usize)>> = None;
        for perm in (0..self.n).permutations(self.n) {
            let mut edges: Vec<(usize, usize)> = self
                .edges
                .iter()
                .map(|&(u, v)| {
                    let (a, b) = (perm[u], perm[v]);
                    (a.min(b), a.max(b))
                })
                .collect();
            edges.sort_unstable();
            if best.as_ref().is_none_or(|b| edges < *b) {
                best = Some(edges);
            }
        }
        Graph { n: self.n, edges: best.unwrap() }
    }

    /// Chromatic polynomial by deletion–contraction, memoized on canonical
    /// forms across the process.
    pub fn chromatic_polynomial(&self) -> PolyT {
        if self.edges.is_empty() {
            return Poly::monomial(BigRational::one(), self.n);
        }
        let canon = self.canonical_form();
        if let Some(hit) = CHROMATIC_CACHE.get(&canon) {
            return hit.clone();
        }
        let val = &canon.delete_edge(0).chromatic_polynomial()
            - &canon.contract_edge(0).chromatic_polynomial();
        cache_insert(canon, val.clone());
        val
    }

    /// `a(G) = (-1)^n χ_G(-1)`, the number of acyclic orientations.
    pub fn acyclic_orientations(&self) -> BigInt {
        let at = self.chromatic_polynomial().eval_int(-1);
        let signed = if self.n % 2 == 0 { at } else { -at };
        debug_assert!(signed.is_integer() && !signed.is_negative());
        signed.to_integer()
    }

    /// The graph as a simplicial complex of dimension at most one.
    pub fn to_complex(&self) -> SimplicialComplex {
        let facets: Vec<Vec<usize>> = self.edges.iter().map(|&(u, v)| vec![u, v]).collect();
        SimplicialComplex::from_facets(self.n, &facets).expect("edges are in range")
    }
}

static CACHE_LIMIT: Lazy<Option<usize>> = Lazy::new(|| {
    std::env::var("HOPFSIMP_CACHE_LIMIT")
        .ok()
        .and_then(|s| s.parse().ok())
});

static CHROMATIC_CACHE: Lazy<DashMap<Graph, PolyT>> = Lazy::new(DashMap::new);

fn cache_insert(key: Graph, val: PolyT) {
    if let Some(limit) = *CACHE_LIMIT {
        if CHROMATIC_CACHE.len() >= limit {
            return;
        }
    }
    CHROMATIC_CACHE.insert(key, val);
}

/// A flat of a graph: a partition of the vertices into connected blocks,
/// together with the ambient edges inside the blocks. Ordering is
/// block-partition lexicographic.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Flat {
    /// Disjoint sorted vertex lists, sorted among themselves.
    blocks: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

impl Flat {
    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// `c(F)`: number of blocks.
    pub fn component_count(&self) -> usize {
        self.blocks.len()
    }

    /// `rk(F) = n - c(F)`.
    pub fn rank(&self) -> usize {
        let n: usize = self.blocks.iter().map(|b| b.len()).sum();
        n - self.blocks.len()
    }

    pub fn display_blocks(&self) -> String {
        self.blocks
            .iter()
            .map(|b| format!("{{{}}}", b.iter().join(",")))
            .join(",")
    }
}

/// The subcomplex `Γ_{V,F}`: all faces of `gamma` whose 1-skeleton edges lie
/// in the flat `F` of the 1-skeleton, on the full vertex set.
pub fn gamma_vf(gamma: &SimplicialComplex, flat: &Flat) -> Result<SimplicialComplex> {
    let skel = gamma.one_skeleton_graph();
    if !skel.is_flat_of(flat) {
        return Err(Error::Input("not a flat of the complex's 1-skeleton".into()));
    }
    let mut adj = vec![0u32; gamma.n()];
    for &(u, v) in flat.edges() {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    let keep: Vec<u32> = gamma
        .faces_masks()
        .into_iter()
        .filter(|&face| {
            let mut rest = face;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                if face & !(1 << v) & !adj[v] != 0 && face & !(1 << v) & !adj[v] & !0 != 0 {
                    // some other vertex of the face is not F-adjacent to v
                    if (face & !(1 << v)) & !adj[v] != 0 {
                        return false;
                    }
                }
            }
            true
        })
        .collect();
    Ok(SimplicialComplex::from_masks(gamma.n(), keep))
}

/// The complete graph on `n` vertices as a 1-dimensional complex.
pub fn complete_complex(n: usize) -> SimplicialComplex {
    Graph::complete(n).to_complex()
}

/// The full simplex of dimension `d` (one facet on `d+1` vertices).
pub fn simplex_complex(d: usize) -> SimplicialComplex {
    SimplicialComplex::from_facets(d + 1, &[(0..=d).collect()]).expect("in range")
}

fn verts_to_mask(verts: &[usize]) -> u32 {
    verts.iter().fold(0u32, |acc, &v| acc | 1 << v)
}

fn mask_full(n: usize) -> u32 {
    if n == 0 {
        0
    } else {
        (1u32 << n) - 1
    }
}
