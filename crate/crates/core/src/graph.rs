//! Dense simple undirected graphs on at most 64 vertices.
//!
//! Adjacency is one `u64` row per vertex, so vertex sets are plain bitmasks
//! and most predicates reduce to a handful of word operations.

use std::fmt;
use std::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, Not, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Largest vertex count a [`Graph`] can hold.
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph has {0} vertices; at most {MAX_VERTICES} are supported")]
    TooManyVertices(usize),
    #[error("edge ({u}, {v}) has an endpoint outside 0..{n}")]
    EndpointOutOfRange { u: usize, v: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {v} is outside 0..{n}")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("vertex sets overlap in {0:?}")]
    Overlap(VertexSet),
    #[error("edge list: {0}")]
    EdgeList(String),
}

/// A set of vertices, stored as a bitmask over `0..64`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    /// `{0, .., n-1}`.
    pub const fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub const fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub const fn contains(self, v: usize) -> bool {
        v < 64 && (self.0 >> v) & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Smallest member.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Largest member.
    pub fn last(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    pub const fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub const fn is_disjoint(self, other: VertexSet) -> bool {
        self.0 & other.0 == 0
    }

    pub fn iter(self) -> Members {
        Members(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
#[derive(Clone)]
pub struct Members(u64);

impl Iterator for Members {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for Members {}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Members;

    fn into_iter(self) -> Members {
        self.iter()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl<const N: usize> From<[usize; N]> for VertexSet {
    fn from(vs: [usize; N]) -> Self {
        vs.into_iter().collect()
    }
}

impl BitOr for VertexSet {
    type Output = VertexSet;
    fn bitor(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 | rhs.0)
    }
}

impl BitOrAssign for VertexSet {
    fn bitor_assign(&mut self, rhs: VertexSet) {
        self.0 |= rhs.0;
    }
}

impl BitAnd for VertexSet {
    type Output = VertexSet;
    fn bitand(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & rhs.0)
    }
}

impl BitAndAssign for VertexSet {
    fn bitand_assign(&mut self, rhs: VertexSet) {
        self.0 &= rhs.0;
    }
}

impl Sub for VertexSet {
    type Output = VertexSet;
    fn sub(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & !rhs.0)
    }
}

impl Not for VertexSet {
    type Output = VertexSet;
    fn not(self) -> VertexSet {
        VertexSet(!self.0)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let vs = Vec::<usize>::deserialize(d)?;
        if let Some(&v) = vs.iter().find(|&&v| v >= MAX_VERTICES) {
            return Err(serde::de::Error::custom(format!("vertex {v} out of range")));
        }
        Ok(vs.into_iter().collect())
    }
}

/// Immutable simple undirected graph with vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

/// Result of [`Graph::induced_subgraph`]: the subgraph and the relabelling
/// between the two vertex sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedSubgraph {
    pub graph: Graph,
    /// `old_to_new[v]` is the new label of original vertex `v`, if kept.
    pub old_to_new: Vec<Option<usize>>,
    /// `new_to_old[i]` is the original label of new vertex `i`.
    pub new_to_old: Vec<usize>,
}

impl InducedSubgraph {
    /// Translates a set of new labels back to original labels.
    pub fn lift(&self, set: VertexSet) -> VertexSet {
        set.iter().map(|i| self.new_to_old[i]).collect()
    }
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        Ok(Graph {
            n,
            adj: vec![VertexSet::EMPTY; n],
        })
    }

    /// Builds a graph from unordered pairs. Duplicate pairs collapse.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::EndpointOutOfRange { u, v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            g.adj[u].insert(v);
            g.adj[v].insert(u);
        }
        Ok(g)
    }

    /// Builds a graph from neighbourhood masks, symmetrising and dropping loops.
    /// Crate-internal constructors use this after they have produced valid rows.
    pub(crate) fn from_rows(rows: Vec<VertexSet>) -> Self {
        let n = rows.len();
        debug_assert!(n <= MAX_VERTICES);
        let full = VertexSet::full(n);
        let mut adj: Vec<VertexSet> = rows.iter().map(|&r| r & full).collect();
        for (v, row) in adj.iter_mut().enumerate() {
            row.remove(v);
        }
        for u in 0..n {
            for v in adj[u].iter() {
                adj[v].insert(u);
            }
        }
        Graph { n, adj }
    }

    /// Parses the edge-list text format: a header line `n m`, then `m` lines `u v`.
    /// Blank lines and lines starting with `#` are skipped.
    pub fn parse_edge_list(text: &str) -> Result<Self, GraphError> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines
            .next()
            .ok_or_else(|| GraphError::EdgeList("missing header line".into()))?;
        let (n, m) = parse_pair(header)?;
        let mut edges = Vec::with_capacity(m);
        for line in lines {
            edges.push(parse_pair(line)?);
        }
        if edges.len() != m {
            return Err(GraphError::EdgeList(format!(
                "header promises {m} edges, found {}",
                edges.len()
            )));
        }
        Graph::from_edge_list(n, &edges)
    }

    /// Renders the edge-list text format.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.edge_count());
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// All vertices, `{0, .., n-1}`.
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.len()).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.adj[u]
                .iter()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    /// Neighbourhood of `v` without bounds reporting. Panics if `v >= n`.
    #[inline]
    pub fn adj(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { v, n: self.n })
        }
    }

    fn check_set(&self, set: VertexSet) -> Result<(), GraphError> {
        match (set - self.vertices()).first() {
            Some(v) => Err(GraphError::VertexOutOfRange { v, n: self.n }),
            None => Ok(()),
        }
    }

    /// N(v).
    pub fn neighbors(&self, v: usize) -> Result<VertexSet, GraphError> {
        self.check_vertex(v)?;
        Ok(self.adj[v])
    }

    /// M(v) = V \ (N(v) ∪ {v}).
    pub fn non_neighbors(&self, v: usize) -> Result<VertexSet, GraphError> {
        self.check_vertex(v)?;
        Ok(self.vertices() - self.adj[v] - VertexSet::singleton(v))
    }

    /// Vertices outside `set` with a neighbour in it.
    pub fn neighborhood_of_set(&self, set: VertexSet) -> VertexSet {
        let mut out = VertexSet::EMPTY;
        for v in set {
            out |= self.adj[v];
        }
        out - set
    }

    /// Vertices of `within` adjacent to every member of `set`.
    pub fn common_neighbors(&self, set: VertexSet, within: VertexSet) -> VertexSet {
        set.iter().fold(within, |acc, v| acc & self.adj[v]) - set
    }

    fn check_disjoint(&self, x: VertexSet, y: VertexSet) -> Result<(), GraphError> {
        self.check_set(x)?;
        self.check_set(y)?;
        if x.is_disjoint(y) {
            Ok(())
        } else {
            Err(GraphError::Overlap(x & y))
        }
    }

    /// Every vertex of `x` is adjacent to every vertex of `y`.
    pub fn is_complete_to(&self, x: VertexSet, y: VertexSet) -> Result<bool, GraphError> {
        self.check_disjoint(x, y)?;
        Ok(x.iter().all(|v| y.is_subset(self.adj[v])))
    }

    /// No vertex of `x` is adjacent to a vertex of `y`.
    pub fn is_anticomplete_to(&self, x: VertexSet, y: VertexSet) -> Result<bool, GraphError> {
        self.check_disjoint(x, y)?;
        Ok(x.iter().all(|v| y.is_disjoint(self.adj[v])))
    }

    /// G[X], relabelled to `0..|X|` in increasing order of original label.
    pub fn induced_subgraph(&self, set: VertexSet) -> Result<InducedSubgraph, GraphError> {
        self.check_set(set)?;
        let new_to_old = set.to_vec();
        let mut old_to_new = vec![None; self.n];
        for (i, &v) in new_to_old.iter().enumerate() {
            old_to_new[v] = Some(i);
        }
        let adj = new_to_old
            .iter()
            .map(|&v| {
                (self.adj[v] & set)
                    .iter()
                    .map(|u| old_to_new[u].expect("member of set"))
                    .collect()
            })
            .collect();
        Ok(InducedSubgraph {
            graph: Graph {
                n: new_to_old.len(),
                adj,
            },
            old_to_new,
            new_to_old,
        })
    }

    /// The vertex set of the component of `G[within]` containing `start`.
    pub fn component_within(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                next |= self.adj[v];
            }
            next = (next & within) - seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// Components of `G[within]`, ordered by smallest member.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut rest = within;
        let mut out = Vec::new();
        while let Some(v) = rest.first() {
            let comp = self.component_within(v, within);
            rest = rest - comp;
            out.push(comp);
        }
        out
    }

    pub fn connected_components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertices())
    }

    /// Connectivity; the empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.component_within(0, self.vertices()) == self.vertices()
    }

    pub fn is_clique(&self, set: VertexSet) -> bool {
        set.iter()
            .all(|v| (set - VertexSet::singleton(v)).is_subset(self.adj[v]))
    }

    pub fn is_stable(&self, set: VertexSet) -> bool {
        set.iter().all(|v| self.adj[v].is_disjoint(set))
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

    /// Disjoint union; the vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        let mut adj = self.adj.clone();
        adj.extend(
            other
                .adj
                .iter()
                .map(|r| VertexSet::from_bits(r.bits() << self.n)),
        );
        Ok(Graph { n, adj })
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length");
        let mut adj = vec![VertexSet::EMPTY; self.n];
        for v in 0..self.n {
            adj[perm[v]] = self.adj[v].iter().map(|u| perm[u]).collect();
        }
        Graph { n: self.n, adj }
    }
}

fn parse_pair(line: &str) -> Result<(usize, usize), GraphError> {
    let mut it = line.split_whitespace().map(str::parse::<usize>);
    match (it.next(), it.next(), it.next()) {
        (Some(Ok(a)), Some(Ok(b)), None) => Ok((a, b)),
        _ => Err(GraphError::EdgeList(format!(
            "expected two integers, got {line:?}"
        ))),
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Graph(n={}, edges={:?})",
            self.n,
            self.edges().collect::<Vec<_>>()
        )
    }
}

/// Small named graphs used across tests, examples and the pattern library.
pub mod named {
    use super::Graph;

    fn build(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::from_edge_list(n, edges).expect("valid named graph")
    }

    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        build(n, &edges)
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycle needs at least three vertices");
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        build(n, &edges)
    }

    pub fn complete(n: usize) -> Graph {
        let edges: Vec<_> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        build(n, &edges)
    }

    /// Rim `0..n` forming a cycle, hub `n` adjacent to every rim vertex.
    pub fn wheel(n: usize) -> Graph {
        let mut edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        edges.extend((0..n).map(|i| (i, n)));
        build(n + 1, &edges)
    }

    /// Outer 5-cycle `0..5`, spokes `i -- i+5`, inner pentagram on `5..10`.
    pub fn petersen() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((i + 5, (i + 2) % 5 + 5));
        }
        build(10, &edges)
    }

    /// Triangle `0,1,2` with pendant edges `1-3` and `2-4`.
    pub fn bull() -> Graph {
        build(5, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 4)])
    }

    /// Triangle `0,1,2` with the path `2-3-4` attached at vertex 2.
    pub fn hammer() -> Graph {
        build(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (3, 4)])
    }

    /// Two triangles sharing vertex 0.
    pub fn bowtie() -> Graph {
        build(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])
    }

    /// Two triangles sharing the edge `0-1`; `2` and `3` are non-adjacent.
    pub fn diamond() -> Graph {
        build(4, &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)])
    }

    /// Centre 0 with legs `0-1-2`, `0-3-4` and `0-5`.
    pub fn t1() -> Graph {
        build(6, &[(0, 1), (1, 2), (0, 3), (3, 4), (0, 5)])
    }

    /// Adjacent centres 0 and 1, leaves `2,3` on 0 and `4,5` on 1.
    pub fn t2() -> Graph {
        build(6, &[(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)])
    }

    /// Centre 0 with leaves `1,2,3` and the subdivided leg `0-4-5`.
    pub fn t3() -> Graph {
        build(6, &[(0, 1), (0, 2), (0, 3), (0, 4), (4, 5)])
    }
}

#[cfg(test)]
mod tests {
    use super::named::*;
    use super::*;

    #[test]
    fn edge_list_construction() {
        let k3 = Graph::from_edge_list(3, &[(0, 1), (1, 2), (0, 2), (2, 0)]).unwrap();
        assert_eq!(k3.edge_count(), 3);
        assert!(k3.is_complete());
        let c5 = Graph::from_edge_list(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(c5, cycle(5));
        assert_eq!(
            Graph::from_edge_list(2, &[(0, 0)]),
            Err(GraphError::SelfLoop(0))
        );
        assert!(matches!(
            Graph::from_edge_list(2, &[(0, 2)]),
            Err(GraphError::EndpointOutOfRange { u: 0, v: 2, n: 2 })
        ));
        assert_eq!(Graph::empty(65), Err(GraphError::TooManyVertices(65)));
    }

    #[test]
    fn neighbourhoods() {
        let c5 = cycle(5);
        assert_eq!(c5.neighbors(0).unwrap(), VertexSet::from([1, 4]));
        assert_eq!(c5.non_neighbors(0).unwrap(), VertexSet::from([2, 3]));
        assert_eq!(complete(3).neighbors(2).unwrap(), VertexSet::from([0, 1]));
        assert!(complete(3).non_neighbors(0).unwrap().is_empty());
        let e4 = Graph::empty(4).unwrap();
        assert!(e4.neighbors(3).unwrap().is_empty());
        assert_eq!(e4.non_neighbors(1).unwrap(), VertexSet::from([0, 2, 3]));
        assert!(c5.neighbors(5).is_err());
    }

    #[test]
    fn complete_and_anticomplete() {
        let k4 = complete(4);
        let c5 = cycle(5);
        assert!(k4.is_complete_to([0, 1].into(), [2, 3].into()).unwrap());
        assert!(!c5.is_complete_to([0].into(), [2, 3].into()).unwrap());
        assert!(c5.is_complete_to(VertexSet::EMPTY, [1, 2].into()).unwrap());
        assert!(c5.is_anticomplete_to([0].into(), [2, 3].into()).unwrap());
        assert!(!k4.is_anticomplete_to([0].into(), [1].into()).unwrap());
        assert!(k4.is_anticomplete_to([0].into(), VertexSet::EMPTY).unwrap());
        assert_eq!(
            k4.is_complete_to([0, 1].into(), [1, 2].into()),
            Err(GraphError::Overlap([1].into()))
        );
    }

    #[test]
    fn induced_subgraphs() {
        let sub = cycle(5).induced_subgraph([0, 1, 2].into()).unwrap();
        assert_eq!(sub.graph, path(3));
        let sub = complete(4).induced_subgraph([0, 1].into()).unwrap();
        assert_eq!(sub.graph, complete(2));
        let p = petersen();
        let sub = p.induced_subgraph(p.vertices()).unwrap();
        assert_eq!(sub.graph, p);
        assert_eq!(sub.new_to_old, (0..10).collect::<Vec<_>>());
        let sub = p.induced_subgraph([3, 7, 8].into()).unwrap();
        assert_eq!(sub.old_to_new[7], Some(1));
        assert_eq!(sub.lift([0, 2].into()), VertexSet::from([3, 8]));
        assert!(p.induced_subgraph([10].into()).is_err());
    }

    #[test]
    fn components() {
        assert_eq!(cycle(5).connected_components(), vec![VertexSet::full(5)]);
        let g = complete(3).disjoint_union(&complete(2)).unwrap();
        assert_eq!(
            g.connected_components(),
            vec![VertexSet::from([0, 1, 2]), VertexSet::from([3, 4])]
        );
        let e3 = Graph::empty(3).unwrap();
        assert_eq!(e3.connected_components().len(), 3);
        assert!(Graph::empty(0).unwrap().is_connected());
    }

    #[test]
    fn cliques() {
        assert!(complete(4).is_clique([0, 1, 2].into()));
        assert!(!cycle(5).is_clique([0, 1, 2].into()));
        assert!(cycle(5).is_clique(VertexSet::EMPTY));
        assert!(cycle(5).is_clique([3].into()));
    }

    #[test]
    fn edge_list_text() {
        let g = Graph::parse_edge_list("5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n").unwrap();
        assert_eq!(g, cycle(5));
        assert_eq!(Graph::parse_edge_list(&g.to_edge_list()).unwrap(), g);
        assert!(Graph::parse_edge_list("3 2\n0 1\n").is_err());
        assert!(Graph::parse_edge_list("3 1\n0 x\n").is_err());
    }

    #[test]
    fn named_shapes() {
        let shapes = [
            (bull(), 5, 5),
            (hammer(), 5, 5),
            (t1(), 6, 5),
            (t2(), 6, 5),
            (t3(), 6, 5),
            (petersen(), 10, 15),
            (wheel(5), 6, 10),
        ];
        for (g, n, m) in shapes {
            assert_eq!((g.n(), g.edge_count()), (n, m), "{g:?}");
        }
        let mut t2_degrees: Vec<_> = (0..6).map(|v| t2().degree(v)).collect();
        t2_degrees.sort();
        assert_eq!(t2_degrees, [1, 1, 1, 1, 3, 3]);
        assert!((0..10).all(|v| petersen().degree(v) == 3));
    }
}
