//! Forbidden induced subgraphs, holes, girth and hole centres.

use std::fmt;
use std::ops::ControlFlow;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{named, Graph, VertexSet, MAX_VERTICES};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown pattern {0:?}; expected P<t>, C<t>, K<t>, bull, hammer, T1, T2 or T3")]
pub struct UnknownPattern(pub String);

/// A named small graph that can be forbidden as an induced subgraph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Pattern {
    /// Path on `t >= 1` vertices.
    Path(usize),
    /// Cycle on `t >= 3` vertices.
    Cycle(usize),
    /// Complete graph on `t >= 1` vertices.
    Complete(usize),
    Bull,
    Hammer,
    /// `K_{1,3}` with two edges subdivided.
    T1,
    /// Two adjacent vertices of degree three, each carrying two leaves.
    T2,
    /// `K_{1,4}` with one edge subdivided.
    T3,
}

impl Pattern {
    pub fn realization(self) -> Graph {
        match self {
            Pattern::Path(t) => named::path(t),
            Pattern::Cycle(t) => named::cycle(t),
            Pattern::Complete(t) => named::complete(t),
            Pattern::Bull => named::bull(),
            Pattern::Hammer => named::hammer(),
            Pattern::T1 => named::t1(),
            Pattern::T2 => named::t2(),
            Pattern::T3 => named::t3(),
        }
    }

    /// Whether the realization is a tree.
    pub fn is_tree(self) -> bool {
        matches!(
            self,
            Pattern::Path(_)
                | Pattern::Complete(1)
                | Pattern::Complete(2)
                | Pattern::T1
                | Pattern::T2
                | Pattern::T3
        )
    }

    pub fn order(self) -> usize {
        match self {
            Pattern::Path(t) | Pattern::Cycle(t) | Pattern::Complete(t) => t,
            Pattern::Bull | Pattern::Hammer => 5,
            Pattern::T1 | Pattern::T2 | Pattern::T3 => 6,
        }
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Pattern::Path(t) => write!(f, "P{t}"),
            Pattern::Cycle(t) => write!(f, "C{t}"),
            Pattern::Complete(t) => write!(f, "K{t}"),
            Pattern::Bull => f.write_str("bull"),
            Pattern::Hammer => f.write_str("hammer"),
            Pattern::T1 => f.write_str("T1"),
            Pattern::T2 => f.write_str("T2"),
            Pattern::T3 => f.write_str("T3"),
        }
    }
}

impl FromStr for Pattern {
    type Err = UnknownPattern;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || UnknownPattern(s.to_string());
        match s {
            "bull" => return Ok(Pattern::Bull),
            "hammer" => return Ok(Pattern::Hammer),
            "T1" => return Ok(Pattern::T1),
            "T2" => return Ok(Pattern::T2),
            "T3" => return Ok(Pattern::T3),
            _ => {}
        }
        let (head, digits) = s.split_at(s.char_indices().nth(1).map_or(s.len(), |(i, _)| i));
        let t: usize = digits.parse().map_err(|_| err())?;
        if t > MAX_VERTICES {
            return Err(err());
        }
        match head {
            "P" if t >= 1 => Ok(Pattern::Path(t)),
            "C" if t >= 3 => Ok(Pattern::Cycle(t)),
            "K" if t >= 1 => Ok(Pattern::Complete(t)),
            _ => Err(err()),
        }
    }
}

impl Serialize for Pattern {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Pattern {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        String::deserialize(d)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}

/// An induced embedding of `pattern` into `g`: `map[i]` is the image of
/// pattern vertex `i`. The lexicographically smallest image tuple is returned.
pub fn find_induced(g: &Graph, pattern: Pattern) -> Option<Vec<usize>> {
    find_induced_graph(g, &pattern.realization())
}

/// [`find_induced`] for an arbitrary pattern graph.
pub fn find_induced_graph(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    if h.n() > g.n() {
        return None;
    }
    let mut map = Vec::with_capacity(h.n());
    embed(g, h, &mut map, VertexSet::EMPTY).then_some(map)
}

pub fn contains_induced(g: &Graph, pattern: Pattern) -> bool {
    find_induced(g, pattern).is_some()
}

fn embed(g: &Graph, h: &Graph, map: &mut Vec<usize>, used: VertexSet) -> bool {
    let i = map.len();
    if i == h.n() {
        return true;
    }
    let mut cand = g.vertices() - used;
    for (j, &image) in map.iter().enumerate() {
        if h.has_edge(i, j) {
            cand &= g.adj(image);
        } else {
            cand = cand - g.adj(image);
        }
    }
    let need = h.degree(i);
    for v in cand {
        if g.degree(v) < need {
            continue;
        }
        map.push(v);
        if embed(g, h, map, used | VertexSet::singleton(v)) {
            return true;
        }
        map.pop();
    }
    false
}

/// An induced cycle on at least four vertices, in cyclic order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HoleWitness {
    pub vertices: Vec<usize>,
}

impl HoleWitness {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.vertices.iter().copied().collect()
    }

    /// Consecutive vertices adjacent, every other pair non-adjacent.
    pub fn validate(&self, g: &Graph) -> bool {
        let q = self.vertices.len();
        if q < 4 || self.vertex_set().len() != q || self.vertices.iter().any(|&v| v >= g.n()) {
            return false;
        }
        (0..q).all(|i| {
            (i + 1..q).all(|j| {
                let consecutive = j == i + 1 || (i == 0 && j == q - 1);
                g.has_edge(self.vertices[i], self.vertices[j]) == consecutive
            })
        })
    }
}

/// Calls `visit` on every hole of `G[within]` with at least `min_len`
/// vertices, once per hole. Each hole is reported starting at its smallest
/// vertex and oriented so that the second vertex is smaller than the last;
/// holes arrive in lexicographic order of that tuple.
pub fn for_each_hole<F>(
    g: &Graph,
    within: VertexSet,
    min_len: usize,
    mut visit: F,
) -> ControlFlow<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let min_len = min_len.max(4);
    let mut path = Vec::with_capacity(within.len());
    for s in within {
        let higher = within & !VertexSet::full(s + 1);
        path.clear();
        path.push(s);
        extend_hole(g, &mut path, higher, min_len, &mut visit)?;
    }
    ControlFlow::Continue(())
}

/// `allowed` holds the vertices that may still be appended: above the start,
/// off the path, and non-adjacent to every interior path vertex.
fn extend_hole<F>(
    g: &Graph,
    path: &mut Vec<usize>,
    allowed: VertexSet,
    min_len: usize,
    visit: &mut F,
) -> ControlFlow<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let s = path[0];
    let last = *path.last().expect("nonempty path");
    let len = path.len();
    for v in g.adj(last) & allowed {
        if len >= 2 && g.has_edge(s, v) {
            if len >= 3 && v > path[1] && len + 1 >= min_len {
                path.push(v);
                let flow = visit(path);
                path.pop();
                flow?;
            }
            continue;
        }
        let mut next = allowed - VertexSet::singleton(v);
        if len >= 2 {
            next = next - g.adj(last);
        }
        path.push(v);
        let flow = extend_hole(g, path, next, min_len, visit);
        path.pop();
        flow?;
    }
    ControlFlow::Continue(())
}

/// Some hole of `G`, or `None` when `G` is chordal.
pub fn find_hole(g: &Graph) -> Option<HoleWitness> {
    find_hole_within(g, g.vertices(), 4)
}

pub fn find_hole_within(g: &Graph, within: VertexSet, min_len: usize) -> Option<HoleWitness> {
    let mut found = None;
    let _ = for_each_hole(g, within, min_len, |h| {
        found = Some(HoleWitness {
            vertices: h.to_vec(),
        });
        ControlFlow::Break(())
    });
    found
}

/// A hole with at least five vertices together with the smallest vertex
/// complete to it.
pub fn find_hole_with_center(g: &Graph) -> Option<(HoleWitness, usize)> {
    let mut found = None;
    let _ = for_each_hole(g, g.vertices(), 5, |h| {
        let set: VertexSet = h.iter().copied().collect();
        match g.common_neighbors(set, g.vertices()).first() {
            Some(c) => {
                found = Some((
                    HoleWitness {
                        vertices: h.to_vec(),
                    },
                    c,
                ));
                ControlFlow::Break(())
            }
            None => ControlFlow::Continue(()),
        }
    });
    found
}

/// A vertex `x` and a hole `C` of `G - x` such that `x` is adjacent to two
/// consecutive vertices of `C`.
pub fn vertex_with_two_consecutive_hole_neighbors(g: &Graph) -> Option<(usize, HoleWitness)> {
    for x in 0..g.n() {
        let nx = g.adj(x);
        if nx.len() < 2 {
            continue;
        }
        let mut found = None;
        let _ = for_each_hole(g, g.vertices() - VertexSet::singleton(x), 4, |h| {
            let q = h.len();
            if (0..q).any(|i| nx.contains(h[i]) && nx.contains(h[(i + 1) % q])) {
                found = Some(HoleWitness {
                    vertices: h.to_vec(),
                });
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        });
        if let Some(hole) = found {
            return Some((x, hole));
        }
    }
    None
}

pub fn is_triangle_free(g: &Graph) -> bool {
    find_triangle(g).is_none()
}

/// Lexicographically smallest triangle.
pub fn find_triangle(g: &Graph) -> Option<[usize; 3]> {
    g.edges().find_map(|(u, v)| {
        let above = !VertexSet::full(v + 1);
        (g.adj(u) & g.adj(v) & above).first().map(|w| [u, v, w])
    })
}

/// Length of a shortest cycle, `None` for forests.
pub fn girth(g: &Graph) -> Option<usize> {
    let n = g.n();
    let mut best: Option<usize> = None;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = Vec::with_capacity(n);
    for root in 0..n {
        dist.fill(usize::MAX);
        parent.fill(usize::MAX);
        queue.clear();
        dist[root] = 0;
        queue.push(root);
        let mut head = 0;
        while head < queue.len() {
            let u = queue[head];
            head += 1;
            if best.is_some_and(|b| 2 * dist[u] + 1 >= b) {
                break;
            }
            for w in g.adj(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push(w);
                } else if parent[u] != w {
                    let len = dist[u] + dist[w] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}

/// Girth at least five, counting forests.
pub fn has_girth_at_least_5(g: &Graph) -> bool {
    girth(g).is_none_or(|l| l >= 5)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    /// Exhaustive oracle: tries every injective tuple in lexicographic order.
    fn brute_embedding(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
        fn go(g: &Graph, h: &Graph, t: &mut Vec<usize>) -> bool {
            if t.len() == h.n() {
                return (0..h.n())
                    .all(|i| (0..i).all(|j| h.has_edge(i, j) == g.has_edge(t[i], t[j])));
            }
            for v in 0..g.n() {
                if !t.contains(&v) {
                    t.push(v);
                    if go(g, h, t) {
                        return true;
                    }
                    t.pop();
                }
            }
            false
        }
        let mut t = Vec::new();
        go(g, h, &mut t).then_some(t)
    }

    /// All holes as vertex sets, by subset enumeration.
    fn brute_holes(g: &Graph, within: VertexSet) -> Vec<VertexSet> {
        (0u64..1 << g.n())
            .map(VertexSet::from_bits)
            .filter(|s| s.is_subset(within) && s.len() >= 4)
            .filter(|&s| {
                s.iter().all(|v| (g.adj(v) & s).len() == 2)
                    && g.component_within(s.first().unwrap(), s) == s
            })
            .collect()
    }

    #[test]
    fn parse_and_display() {
        for name in [
            "P5", "C4", "K3", "bull", "hammer", "T1", "T2", "T3", "P1", "C12",
        ] {
            let p: Pattern = name.parse().unwrap();
            assert_eq!(p.to_string(), name);
            assert_eq!(p.realization().n(), p.order());
        }
        for bad in ["P0", "C2", "Q3", "", "bulls", "K", "P65"] {
            assert!(bad.parse::<Pattern>().is_err(), "{bad}");
        }
    }

    #[test]
    fn pattern_shapes() {
        let bull = Pattern::Bull.realization();
        let hammer = Pattern::Hammer.realization();
        assert_ne!(bull, hammer);
        // bull: degrees 2,3,3,1,1 ; hammer: 2,2,3,2,1
        let degs = |g: &Graph| {
            let mut d: Vec<_> = (0..g.n()).map(|v| g.degree(v)).collect();
            d.sort();
            d
        };
        assert_eq!(degs(&bull), [1, 1, 2, 3, 3]);
        assert_eq!(degs(&hammer), [1, 2, 2, 2, 3]);
        assert!(find_induced(&hammer, Pattern::Bull).is_none());
        assert!(find_induced(&bull, Pattern::Hammer).is_none());
        for t in [Pattern::T1, Pattern::T2, Pattern::T3] {
            assert!(t.is_tree());
            let g = t.realization();
            assert!(g.is_connected() && girth(&g).is_none());
        }
    }

    #[test]
    fn find_induced_examples() {
        assert_eq!(
            find_induced(&bull(), Pattern::Bull),
            Some(vec![0, 1, 2, 3, 4])
        );
        assert_eq!(find_induced(&cycle(5), Pattern::Cycle(4)), None);
        let p = petersen();
        let emb = find_induced(&p, Pattern::Cycle(5)).unwrap();
        assert_eq!(Some(emb), brute_embedding(&p, &cycle(5)));
        assert!(find_induced(&p, Pattern::Complete(3)).is_none());
    }

    #[test]
    fn girth_examples() {
        assert_eq!(girth(&cycle(5)), Some(5));
        assert_eq!(girth(&petersen()), Some(5));
        assert_eq!(girth(&t2()), None);
        assert_eq!(girth(&path(7)), None);
        assert_eq!(girth(&complete(4)), Some(3));
        assert_eq!(girth(&cycle(4)), Some(4));
        assert_eq!(girth(&cycle(9).disjoint_union(&cycle(6)).unwrap()), Some(6));
    }

    #[test]
    fn holes() {
        assert_eq!(find_hole(&cycle(5)).unwrap().vertices, [0, 1, 2, 3, 4]);
        assert_eq!(find_hole(&complete(4)), None);
        let mut chorded: Vec<_> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
        chorded.push((0, 3));
        let g = Graph::from_edge_list(6, &chorded).unwrap();
        let hole = find_hole(&g).unwrap();
        assert_eq!(hole.vertices, [0, 1, 2, 3]);
        assert!(hole.validate(&g));
        assert_eq!(brute_holes(&g, g.vertices()).len(), 2);
        let mut all = Vec::new();
        let _ = for_each_hole(&g, g.vertices(), 4, |h| {
            all.push(h.to_vec());
            ControlFlow::Continue(())
        });
        assert_eq!(all, vec![vec![0, 1, 2, 3], vec![0, 3, 4, 5]]);
    }

    #[test]
    fn holes_with_centres() {
        let (hole, hub) = find_hole_with_center(&wheel(5)).unwrap();
        assert_eq!((hole.vertices, hub), (vec![0, 1, 2, 3, 4], 5));
        assert_eq!(find_hole_with_center(&cycle(5)), None);
        let (hole, hub) = find_hole_with_center(&wheel(6)).unwrap();
        assert_eq!((hole.len(), hub), (6, 6));
        // A 4-hole with a centre does not count.
        assert_eq!(find_hole_with_center(&wheel(4)), None);
    }

    #[test]
    fn consecutive_neighbours() {
        let mut edges: Vec<_> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        edges.extend([(5, 0), (5, 1)]);
        let g = Graph::from_edge_list(6, &edges).unwrap();
        let (x, hole) = vertex_with_two_consecutive_hole_neighbors(&g).unwrap();
        assert_eq!(x, 5);
        assert_eq!(hole.vertex_set(), VertexSet::full(5));
        assert_eq!(vertex_with_two_consecutive_hole_neighbors(&cycle(5)), None);
    }

    #[test]
    fn petersen_has_no_vertex_with_consecutive_hole_neighbours() {
        let p = petersen();
        assert_eq!(vertex_with_two_consecutive_hole_neighbors(&p), None);
        // Oracle: every vertex against every hole of the remainder.
        for x in 0..10 {
            let rest = p.vertices() - VertexSet::singleton(x);
            for hole in brute_holes(&p, rest) {
                for (a, b) in p.edges() {
                    if hole.contains(a) && hole.contains(b) {
                        assert!(!(p.has_edge(x, a) && p.has_edge(x, b)));
                    }
                }
            }
        }
    }

    #[test]
    fn triangles() {
        assert!(is_triangle_free(&petersen()));
        assert!(!is_triangle_free(&bull()));
        assert!(is_triangle_free(&cycle(4)));
        // The oracle: all triples.
        let p = petersen();
        for a in 0..10 {
            for b in a + 1..10 {
                for c in b + 1..10 {
                    assert!(!(p.has_edge(a, b) && p.has_edge(b, c) && p.has_edge(a, c)));
                }
            }
        }
    }

    fn small_graphs() -> impl Iterator<Item = Graph> {
        // Every labelled graph on 5 vertices.
        (0u32..1 << 10).map(|mask| {
            let pairs: Vec<_> = (0..5usize)
                .flat_map(|u| (u + 1..5).map(move |v| (u, v)))
                .collect();
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            Graph::from_edge_list(5, &edges).unwrap()
        })
    }

    #[test]
    fn exhaustive_five_vertex_agreements() {
        for g in small_graphs() {
            for p in [
                Pattern::Cycle(4),
                Pattern::Bull,
                Pattern::Hammer,
                Pattern::Path(4),
            ] {
                assert_eq!(find_induced(&g, p), brute_embedding(&g, &p.realization()));
            }
            let holes = brute_holes(&g, g.vertices());
            let mut seen = Vec::new();
            let _ = for_each_hole(&g, g.vertices(), 4, |h| {
                let w = HoleWitness {
                    vertices: h.to_vec(),
                };
                assert!(w.validate(&g));
                seen.push(w.vertex_set());
                ControlFlow::Continue(())
            });
            seen.sort();
            let mut expected = holes.clone();
            expected.sort();
            assert_eq!(seen, expected);
            let short_cycle = girth(&g).is_some_and(|l| l < 5);
            assert_eq!(
                !short_cycle,
                find_induced(&g, Pattern::Complete(3)).is_none()
                    && find_induced(&g, Pattern::Cycle(4)).is_none()
            );
        }
    }
}
