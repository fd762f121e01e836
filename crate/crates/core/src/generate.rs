//! Small-graph generation: connected graphs up to isomorphism, random graphs
//! and random clique blowups.

use std::collections::hash_map::DefaultHasher;
use std::collections::HashMap;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, Mutex, OnceLock};

use rand::Rng;

use crate::decompose::BlowupCertificate;
use crate::graph::{Graph, VertexSet};

/// Colour refinement to a stable partition. Colours are renumbered by sorted
/// signature, so the result (and the trace hash) does not depend on the
/// labelling.
fn refine(g: &Graph, colors: &mut [u32], trace: &mut DefaultHasher) {
    let n = g.n();
    let mut cell_count = colors.iter().map(|&c| c + 1).max().unwrap_or(0) as usize;
    loop {
        let mut cells = vec![VertexSet::EMPTY; cell_count];
        for v in 0..n {
            cells[colors[v] as usize].insert(v);
        }
        let sigs: Vec<(u32, Vec<u8>)> = (0..n)
            .map(|v| {
                let row = g.adj(v);
                (
                    colors[v],
                    cells.iter().map(|&c| (row & c).len() as u8).collect(),
                )
            })
            .collect();
        let mut sorted = sigs.clone();
        sorted.sort_unstable();
        sorted.hash(trace);
        sorted.dedup();
        for (v, sig) in sigs.iter().enumerate() {
            colors[v] = sorted.binary_search(sig).expect("present") as u32;
        }
        if sorted.len() == cell_count {
            return;
        }
        cell_count = sorted.len();
    }
}

fn initial_colors(g: &Graph, trace: &mut DefaultHasher) -> Vec<u32> {
    let n = g.n();
    let key: Vec<(usize, usize)> = (0..n)
        .map(|v| {
            let row = g.adj(v);
            let triangles: usize = row.iter().map(|u| (g.adj(u) & row).len()).sum();
            (row.len(), triangles / 2)
        })
        .collect();
    let mut sorted = key.clone();
    sorted.sort_unstable();
    (n, &sorted).hash(trace);
    sorted.dedup();
    key.iter()
        .map(|k| sorted.binary_search(k).expect("present") as u32)
        .collect()
}

/// Stable colouring plus a hash of how it was reached.
fn stable_coloring(g: &Graph) -> (Vec<u32>, u64) {
    let mut trace = DefaultHasher::new();
    let mut colors = initial_colors(g, &mut trace);
    refine(g, &mut colors, &mut trace);
    (colors, trace.finish())
}

/// An isomorphism invariant: equal for isomorphic graphs.
pub fn invariant_hash(g: &Graph) -> u64 {
    stable_coloring(g).1
}

fn individualize(g: &Graph, colors: &[u32], v: usize) -> (Vec<u32>, u64) {
    let mut colors = colors.to_vec();
    colors[v] = colors.iter().max().copied().unwrap_or(0) + 1;
    let mut trace = DefaultHasher::new();
    refine(g, &mut colors, &mut trace);
    (colors, trace.finish())
}

fn extend(g: &Graph, h: &Graph, cg: &[u32], ch: &[u32]) -> bool {
    let n = g.n();
    let mut sizes = vec![0usize; n + 1];
    for &c in cg {
        sizes[c as usize] += 1;
    }
    let Some(target) = (0..n).find(|&v| sizes[cg[v] as usize] > 1) else {
        let mut map = vec![0usize; n];
        for v in 0..n {
            map[v] = ch
                .iter()
                .position(|&c| c == cg[v])
                .expect("compatible partitions");
        }
        return (0..n)
            .all(|v| g.adj(v).iter().map(|u| map[u]).collect::<VertexSet>() == h.adj(map[v]));
    };
    let (ng, tg) = individualize(g, cg, target);
    (0..n).filter(|&w| ch[w] == cg[target]).any(|w| {
        let (nh, th) = individualize(h, ch, w);
        tg == th && extend(g, h, &ng, &nh)
    })
}

/// Isomorphism test by individualization and refinement.
pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return false;
    }
    let (cg, tg) = stable_coloring(g);
    let (ch, th) = stable_coloring(h);
    tg == th && extend(g, h, &cg, &ch)
}

/// Keeps one representative per isomorphism class, in insertion order.
#[derive(Debug, Default)]
pub struct IsoClasses {
    buckets: HashMap<u64, Vec<usize>>,
    graphs: Vec<Graph>,
}

impl IsoClasses {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds `g` unless an isomorphic graph is already present.
    pub fn insert(&mut self, g: Graph) -> bool {
        self.insert_hashed(invariant_hash(&g), g)
    }

    fn insert_hashed(&mut self, key: u64, g: Graph) -> bool {
        let bucket = self.buckets.entry(key).or_default();
        if bucket.iter().any(|&i| are_isomorphic(&self.graphs[i], &g)) {
            return false;
        }
        bucket.push(self.graphs.len());
        self.graphs.push(g);
        true
    }

    pub fn len(&self) -> usize {
        self.graphs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.graphs.is_empty()
    }

    pub fn into_graphs(self) -> Vec<Graph> {
        self.graphs
    }
}

/// Whether the last vertex is a non-cut vertex of smallest degree among all
/// non-cut vertices. Every connected graph has such a vertex, so extending
/// each connected graph on `n - 1` vertices and keeping these candidates
/// still reaches every class.
fn last_is_min_noncut(g: &Graph) -> bool {
    let n = g.n();
    let last = n - 1;
    let d = g.degree(last);
    let all = g.vertices();
    let noncut = |u: usize| {
        let rest = all - VertexSet::singleton(u);
        rest.first()
            .is_none_or(|s| g.component_within(s, rest) == rest)
    };
    (0..last).all(|u| g.degree(u) >= d || !noncut(u)) && noncut(last)
}

fn extend_level(prev: &[Graph]) -> Vec<Graph> {
    let mut classes = IsoClasses::new();
    for h in prev {
        let m = h.n();
        for mask in 1u64..1 << m {
            let mut rows: Vec<VertexSet> = (0..m).map(|v| h.adj(v)).collect();
            let s = VertexSet::from_bits(mask);
            for v in s {
                rows[v].insert(m);
            }
            rows.push(s);
            let g = Graph::from_rows(rows);
            if last_is_min_noncut(&g) {
                classes.insert(g);
            }
        }
    }
    classes.into_graphs()
}

fn levels() -> &'static Mutex<Vec<Arc<[Graph]>>> {
    static LEVELS: OnceLock<Mutex<Vec<Arc<[Graph]>>>> = OnceLock::new();
    LEVELS.get_or_init(|| {
        Mutex::new(vec![
            Arc::from(vec![Graph::empty(0).expect("empty")]),
            Arc::from(vec![Graph::empty(1).expect("K1")]),
        ])
    })
}

/// All connected graphs on `n` vertices, one per isomorphism class, in a
/// fixed order. Index 0 is the empty graph. Results are cached per process.
pub fn connected_graphs(n: usize) -> Arc<[Graph]> {
    let mut levels = levels().lock().expect("generator cache poisoned");
    while levels.len() <= n {
        let next = extend_level(levels.last().expect("seeded"));
        levels.push(Arc::from(next));
    }
    levels[n].clone()
}

/// G(n, p).
pub fn random_graph(n: usize, p: f64, rng: &mut impl Rng) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edge_list(n, &edges).expect("valid random graph")
}

/// A clique blowup of `base` with bag sizes drawn from `min_bag..=max_bag`.
pub fn random_blowup(
    base: &Graph,
    min_bag: usize,
    max_bag: usize,
    rng: &mut impl Rng,
) -> Result<(Graph, BlowupCertificate), crate::graph::GraphError> {
    let sizes: Vec<usize> = (0..base.n())
        .map(|_| rng.gen_range(min_bag..=max_bag))
        .collect();
    BlowupCertificate::blow_up(base, &sizes)
}
