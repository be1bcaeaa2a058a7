//! Simple graphs and loop graphs on at most 64 vertices.

mod ktree;
mod minor;
mod treewidth;

pub use ktree::{is_linear_ktree, ktree_recognize};
pub use minor::{hadwiger_number, HADWIGER_MAX_VERTICES};
pub use treewidth::{treewidth_exact, TREEWIDTH_MAX_VERTICES};

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

pub const MAX_VERTICES: usize = 64;

/// A simple undirected graph with bitset adjacency rows.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        assert!(
            (1..=MAX_VERTICES).contains(&n),
            "graphs have 1..=64 vertices"
        );
        Graph {
            n,
            adj: vec![VertexSet::EMPTY; n],
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for v in 0..n {
            g.adj[v] = VertexSet::full(n) - VertexSet::singleton(v);
        }
        g
    }

    pub fn path(n: usize) -> Self {
        Self::from_edges(n, (1..n).map(|v| (v - 1, v))).expect("path edges are valid")
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Self::path(n);
        if n >= 3 {
            g.add_edge(0, n - 1);
        }
        g
    }

    /// Builds a graph from 0-based edges. Duplicate edges are merged.
    pub fn from_edges<I: IntoIterator<Item = (usize, usize)>>(n: usize, edges: I) -> Result<Self> {
        if !(1..=MAX_VERTICES).contains(&n) {
            return Err(Error::SizeCap {
                what: "vertex count",
                limit: MAX_VERTICES,
                got: n,
            });
        }
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange(u));
            }
            if v >= n {
                return Err(Error::VertexOutOfRange(v));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!(
                    "self-loop at vertex {}",
                    u + 1
                )));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from 1-based edges, as transcribed from figures.
    pub fn from_labeled_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if let Some(&(u, v)) = edges.iter().find(|&&(u, v)| u == 0 || v == 0) {
            return Err(Error::InvalidGraph(format!("label 0 in edge ({u}, {v})")));
        }
        Self::from_edges(n, edges.iter().map(|&(u, v)| (u - 1, v - 1)))
    }

    /// Builds from raw adjacency rows, validating symmetry and the absence of loops.
    pub fn from_adjacency(adj: Vec<VertexSet>) -> Result<Self> {
        let n = adj.len();
        let g = Graph { n, adj };
        if !(1..=MAX_VERTICES).contains(&n) {
            return Err(Error::SizeCap {
                what: "vertex count",
                limit: MAX_VERTICES,
                got: n,
            });
        }
        for v in 0..n {
            if !g.adj[v].is_subset(VertexSet::full(n)) {
                return Err(Error::VertexOutOfRange(v));
            }
            if g.adj[v].contains(v) {
                return Err(Error::InvalidGraph(format!(
                    "self-loop at vertex {}",
                    v + 1
                )));
            }
            for u in g.adj[v] {
                if !g.adj[u].contains(v) {
                    return Err(Error::InvalidGraph("adjacency is not symmetric".into()));
                }
            }
        }
        Ok(g)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v && u < self.n && v < self.n);
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u].remove(v);
        self.adj[v].remove(u);
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.adj[u] {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn is_clique(&self, s: VertexSet) -> bool {
        s.iter()
            .all(|v| (s - VertexSet::singleton(v)).is_subset(self.adj[v]))
    }

    pub fn is_complete(&self) -> bool {
        self.is_clique(self.vertices())
    }

    pub fn complement(&self) -> Graph {
        let full = self.vertices();
        Graph {
            n: self.n,
            adj: (0..self.n)
                .map(|v| full - self.adj[v] - VertexSet::singleton(v))
                .collect(),
        }
    }

    /// Connected components of the subgraph induced by `within`, each given
    /// by its vertex set, ordered by smallest member.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut rest = within;
        let mut out = Vec::new();
        while let Some(start) = rest.first() {
            let comp = self.component_of(VertexSet::singleton(start), within);
            rest = rest - comp;
            out.push(comp);
        }
        out
    }

    /// Vertices reachable from `start` through vertices of `within`.
    #[inline]
    pub fn component_of(&self, start: VertexSet, within: VertexSet) -> VertexSet {
        let mut comp = start & within;
        let mut frontier = comp;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                next |= self.adj[v];
            }
            next &= within - comp;
            comp |= next;
            frontier = next;
        }
        comp
    }

    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertices())
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// Size of a largest clique, by branch and bound over candidate sets.
    pub fn clique_number(&self) -> usize {
        fn expand(g: &Graph, size: usize, cand: VertexSet, best: &mut usize) {
            if cand.is_empty() {
                *best = (*best).max(size);
                return;
            }
            let mut cand = cand;
            while let Some(v) = cand.first() {
                if size + cand.len() <= *best {
                    return;
                }
                cand.remove(v);
                expand(g, size + 1, cand & g.adj[v], best);
            }
        }
        let mut best = 0;
        expand(self, 0, self.vertices(), &mut best);
        best
    }

    /// Proper 2-coloring of the subgraph induced by `within`, if one exists.
    /// Returns the color class containing each component's smallest vertex.
    pub fn bipartition(&self, within: VertexSet) -> Option<VertexSet> {
        let mut side = VertexSet::EMPTY;
        for comp in self.components_within(within) {
            let (a, _) = self.two_color(comp)?;
            side |= a;
        }
        Some(side)
    }

    /// 2-colors one connected vertex set; the first class holds its smallest vertex.
    fn two_color(&self, comp: VertexSet) -> Option<(VertexSet, VertexSet)> {
        let start = comp.first()?;
        let mut a = VertexSet::singleton(start);
        let mut b = VertexSet::EMPTY;
        let mut frontier = a;
        let mut on_a = true;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                next |= self.adj[v] & comp;
            }
            let (same, other) = if on_a { (a, b) } else { (b, a) };
            if !(next & same).is_empty() {
                return None;
            }
            let fresh = next - other;
            if on_a {
                b |= fresh;
            } else {
                a |= fresh;
            }
            frontier = fresh;
            on_a = !on_a;
        }
        Some((a, b))
    }

    /// Every way of splitting the vertex set into two cliques. Each partition
    /// is listed once, with vertex 0 in `v1`; the list is empty iff the graph
    /// is not cobipartite.
    pub fn clique_partitions(&self) -> Vec<CliquePartition> {
        let co = self.complement();
        let mut classes = Vec::new();
        for comp in co.components() {
            match co.two_color(comp) {
                Some(pair) => classes.push(pair),
                None => return Vec::new(),
            }
        }
        // component 0 contains vertex 0 and is pinned to its first class
        let free = classes.len() - 1;
        let mut out = Vec::with_capacity(1 << free);
        for mask in 0u64..(1u64 << free) {
            let mut v1 = classes[0].0;
            for (i, &(a, b)) in classes[1..].iter().enumerate() {
                v1 |= if mask >> i & 1 == 0 { a } else { b };
            }
            out.push(CliquePartition {
                v1,
                v2: self.vertices() - v1,
            });
        }
        out
    }

    pub fn is_cobipartite(&self) -> bool {
        self.complement().bipartition(self.vertices()).is_some()
    }

    /// Checks that `p` splits the vertex set into two cliques.
    pub fn validate_clique_partition(&self, p: &CliquePartition) -> Result<()> {
        self.validate_partition(p.v1, p.v2)?;
        if !self.is_clique(p.v1) || !self.is_clique(p.v2) {
            return Err(Error::InvalidPartition(format!(
                "{} or {} is not a clique",
                p.v1, p.v2
            )));
        }
        Ok(())
    }

    pub fn validate_partition(&self, v1: VertexSet, v2: VertexSet) -> Result<()> {
        if !(v1 & v2).is_empty() || (v1 | v2) != self.vertices() {
            return Err(Error::NotAPartition {
                v1: v1.to_string(),
                v2: v2.to_string(),
            });
        }
        Ok(())
    }

    /// True iff every vertex of each side has a neighbor on the other side.
    pub fn is_saturated(&self, p: &CliquePartition) -> Result<bool> {
        self.validate_clique_partition(p)?;
        let (u1, u2) = self.unsaturated_vertices(p);
        Ok(u1.is_empty() && u2.is_empty())
    }

    /// Vertices of each side with no neighbor on the other side.
    pub fn unsaturated_vertices(&self, p: &CliquePartition) -> (VertexSet, VertexSet) {
        let lonely = |side: VertexSet, other: VertexSet| {
            side.iter()
                .filter(|&v| (self.adj[v] & other).is_empty())
                .collect::<VertexSet>()
        };
        (lonely(p.v1, p.v2), lonely(p.v2, p.v1))
    }

    /// Induced subgraph on `V \ s`, relabeled contiguously in ascending order.
    pub fn delete_vertices(&self, s: VertexSet) -> Result<(Graph, IdMap)> {
        let s = s & self.vertices();
        let keep = self.vertices() - s;
        if keep.is_empty() {
            return Err(Error::EmptyDeletion);
        }
        let (g, map) = self.induced(keep);
        Ok((g, map))
    }

    /// Induced subgraph on `keep` (nonempty), relabeled in ascending order.
    pub fn induced(&self, keep: VertexSet) -> (Graph, IdMap) {
        let kept: Vec<usize> = keep.iter().collect();
        let mut old_to_new = vec![None; self.n];
        for (new, &old) in kept.iter().enumerate() {
            old_to_new[old] = Some(new);
        }
        let adj = kept
            .iter()
            .map(|&old| {
                (self.adj[old] & keep)
                    .iter()
                    .map(|u| old_to_new[u].unwrap())
                    .collect::<VertexSet>()
            })
            .collect();
        (Graph { n: kept.len(), adj }, IdMap { old_to_new })
    }

    /// Removes a single vertex (`G \ z`).
    pub fn without_vertex(&self, z: usize) -> Result<Graph> {
        self.delete_vertices(VertexSet::singleton(z))
            .map(|(g, _)| g)
    }

    /// Applies a relabeling: vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }

    pub fn with_loops(&self, loops: VertexSet) -> LoopGraph {
        LoopGraph::new(self.clone(), loops)
    }

    /// Edge list with 1-based labels.
    pub fn labeled_edges(&self) -> Vec<(usize, usize)> {
        self.edges()
            .into_iter()
            .map(|(u, v)| (u + 1, v + 1))
            .collect()
    }
}

/// Old-to-new vertex id map produced by vertex deletion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdMap {
    pub old_to_new: Vec<Option<usize>>,
}

impl IdMap {
    pub fn get(&self, old: usize) -> Option<usize> {
        self.old_to_new.get(old).copied().flatten()
    }

    pub fn map_set(&self, s: VertexSet) -> VertexSet {
        s.iter().filter_map(|v| self.get(v)).collect()
    }
}

/// A looping of a simple graph: some vertices carry a loop.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LoopGraph {
    base: Graph,
    loops: VertexSet,
}

impl LoopGraph {
    pub fn new(base: Graph, loops: VertexSet) -> Self {
        let loops = loops & base.vertices();
        LoopGraph { base, loops }
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn loops(&self) -> VertexSet {
        self.loops
    }

    pub fn n(&self) -> usize {
        self.base.n
    }

    /// `N(v)`, plus `v` itself when looped.
    #[inline]
    pub fn loop_neighbors(&self, v: usize) -> VertexSet {
        let mut s = self.base.adj[v];
        if self.loops.contains(v) {
            s.insert(v);
        }
        s
    }
}

/// A split of the vertex set into two cliques.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct CliquePartition {
    pub v1: VertexSet,
    pub v2: VertexSet,
}

impl CliquePartition {
    pub fn new(v1: VertexSet, v2: VertexSet) -> Self {
        CliquePartition { v1, v2 }
    }

    pub fn from_labels(v1: &[usize], v2: &[usize]) -> Self {
        CliquePartition {
            v1: VertexSet::from_labels(v1),
            v2: VertexSet::from_labels(v2),
        }
    }

    pub fn swapped(self) -> Self {
        CliquePartition {
            v1: self.v2,
            v2: self.v1,
        }
    }

    /// Same partition irrespective of side order.
    pub fn same_split(&self, other: &CliquePartition) -> bool {
        self == other || *self == other.swapped()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.labels().serialize(s)
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let labels = Vec::<usize>::deserialize(d)?;
        if labels.iter().any(|&l| l == 0 || l > MAX_VERTICES) {
            return Err(serde::de::Error::custom("vertex labels are 1..=64"));
        }
        Ok(VertexSet::from_labels(&labels))
    }
}
