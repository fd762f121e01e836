//! Exact colouring oracles and the certified colourings that meet the linear
//! bounds `⌈k·ω/2⌉` (bull variant) and `ω + k - 2` (hammer variant).

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::decompose::{
    build_decomposition_tree, forbidden_witness, validate_blowup, BaseKind, BlowupCertificate,
    DecomposeError, DecompositionTree, Variant,
};
use crate::graph::{Graph, GraphError, VertexSet};
use crate::patterns::Pattern;

/// Default vertex limit for [`exact_chromatic`].
pub const DEFAULT_EXACT_LIMIT: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("exact colouring is limited to {limit} vertices, graph has {n}")]
    TooLarge { n: usize, limit: usize },
    #[error("colour budget k must be at least 2, got {0}")]
    InvalidBudget(usize),
    #[error("blowup certificate does not describe the graph")]
    InvalidCertificate,
    #[error("quotient needs {chi} colours, budget is {k}")]
    QuotientNotColorable { chi: usize, k: usize },
    #[error("graph contains an induced {pattern} at {embedding:?}")]
    NotFree {
        pattern: Pattern,
        embedding: Vec<usize>,
    },
    #[error("base graph on {vertices:?} needs {chi} colours, budget is {k}")]
    LeafExceedsBudget {
        vertices: VertexSet,
        chi: usize,
        k: usize,
    },
    #[error("colouring has {len} entries for {n} vertices")]
    Uncovered { len: usize, n: usize },
    #[error(transparent)]
    Decompose(#[from] DecomposeError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// The number of colours allowed for triangle-free members of the ambient
/// class, plus the size limit for the exact oracle used on base graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleBudget {
    pub k: usize,
    pub exact_limit: usize,
}

impl OracleBudget {
    pub fn new(k: usize) -> Result<Self, ColoringError> {
        if k < 2 {
            return Err(ColoringError::InvalidBudget(k));
        }
        Ok(OracleBudget {
            k,
            exact_limit: DEFAULT_EXACT_LIMIT,
        })
    }

    pub fn with_exact_limit(self, exact_limit: usize) -> Self {
        OracleBudget {
            exact_limit,
            ..self
        }
    }
}

/// Which bound a colouring claims.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundKind {
    /// `⌈k·ω/2⌉`
    Bull,
    /// `ω + k - 2`
    Hammer,
    /// Optimal colouring; the bound is χ itself.
    Exact,
}

impl From<Variant> for BoundKind {
    fn from(v: Variant) -> Self {
        match v {
            Variant::Bull => BoundKind::Bull,
            Variant::Hammer => BoundKind::Hammer,
        }
    }
}

pub fn bull_bound(k: usize, omega: usize) -> usize {
    (k * omega).div_ceil(2)
}

pub fn hammer_bound(k: usize, omega: usize) -> usize {
    if omega == 0 {
        0
    } else {
        omega + k - 2
    }
}

pub fn variant_bound(variant: Variant, k: usize, omega: usize) -> usize {
    match variant {
        Variant::Bull => bull_bound(k, omega),
        Variant::Hammer => hammer_bound(k, omega),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coloring {
    /// Colour of each vertex.
    pub colors: Vec<usize>,
    /// Number of distinct colours.
    pub used: usize,
    pub k: usize,
    /// The bound instance claimed for this graph.
    pub bound: usize,
    pub variant: BoundKind,
}

/// Maximum clique, by Bron–Kerbosch with pivoting and a size bound.
pub fn max_clique(g: &Graph) -> VertexSet {
    fn go(g: &Graph, r: VertexSet, mut p: VertexSet, mut x: VertexSet, best: &mut VertexSet) {
        if p.is_empty() {
            if x.is_empty() && r.len() > best.len() {
                *best = r;
            }
            return;
        }
        if r.len() + p.len() <= best.len() {
            return;
        }
        let pivot = (p | x)
            .iter()
            .max_by_key(|&u| (g.adj(u) & p).len())
            .expect("nonempty");
        for v in p - g.adj(pivot) {
            let nv = g.adj(v);
            go(g, r | VertexSet::singleton(v), p & nv, x & nv, best);
            p.remove(v);
            x.insert(v);
        }
    }
    let mut best = VertexSet::EMPTY;
    go(
        g,
        VertexSet::EMPTY,
        g.vertices(),
        VertexSet::EMPTY,
        &mut best,
    );
    best
}

/// ω(G); zero only for the empty graph.
pub fn exact_clique_number(g: &Graph) -> usize {
    max_clique(g).len()
}

/// Optimal colouring with the default size limit.
pub fn exact_chromatic(g: &Graph) -> Result<(usize, Coloring), ColoringError> {
    exact_chromatic_with_limit(g, DEFAULT_EXACT_LIMIT)
}

/// DSATUR branch and bound. Colours are `0..χ`.
pub fn exact_chromatic_with_limit(
    g: &Graph,
    limit: usize,
) -> Result<(usize, Coloring), ColoringError> {
    let n = g.n();
    if n > limit {
        return Err(ColoringError::TooLarge { n, limit });
    }
    let lower = exact_clique_number(g);
    let mut search = Dsatur {
        g,
        colors: vec![NONE; n],
        best: dsatur_greedy(g),
        best_used: 0,
        lower,
    };
    search.best_used = count_colors(&search.best);
    if search.best_used > lower {
        search.branch(0, 0);
    }
    let chi = search.best_used;
    Ok((
        chi,
        Coloring {
            colors: search.best,
            used: chi,
            k: chi,
            bound: chi,
            variant: BoundKind::Exact,
        },
    ))
}

const NONE: usize = usize::MAX;

fn count_colors(colors: &[usize]) -> usize {
    colors
        .iter()
        .filter(|&&c| c != NONE)
        .fold(0u64, |acc, &c| acc | (1 << c))
        .count_ones() as usize
}

fn saturation(g: &Graph, colors: &[usize], v: usize) -> u64 {
    g.adj(v)
        .iter()
        .filter(|&u| colors[u] != NONE)
        .map(|u| 1u64 << colors[u])
        .fold(0, |a, b| a | b)
}

/// Next DSATUR vertex: most saturated, then most uncoloured neighbours,
/// then smallest index.
fn pick(g: &Graph, colors: &[usize]) -> Option<(usize, u64)> {
    let uncolored: VertexSet = (0..g.n()).filter(|&v| colors[v] == NONE).collect();
    uncolored
        .iter()
        .map(|v| (v, saturation(g, colors, v)))
        .max_by_key(|&(v, sat)| {
            (
                sat.count_ones(),
                (g.adj(v) & uncolored).len(),
                std::cmp::Reverse(v),
            )
        })
}

fn dsatur_greedy(g: &Graph) -> Vec<usize> {
    let mut colors = vec![NONE; g.n()];
    while let Some((v, sat)) = pick(g, &colors) {
        colors[v] = (!sat).trailing_zeros() as usize;
    }
    colors
}

struct Dsatur<'a> {
    g: &'a Graph,
    colors: Vec<usize>,
    best: Vec<usize>,
    best_used: usize,
    lower: usize,
}

impl Dsatur<'_> {
    /// Returns true once an optimal colouring (one matching the clique bound)
    /// has been found.
    fn branch(&mut self, colored: usize, used: usize) -> bool {
        if colored == self.g.n() {
            if used < self.best_used {
                self.best_used = used;
                self.best = self.colors.clone();
            }
            return self.best_used == self.lower;
        }
        let (v, sat) = pick(self.g, &self.colors).expect("uncoloured vertex remains");
        if sat.count_ones() as usize >= self.best_used {
            return false;
        }
        // Colours above `used` are interchangeable; only try the first one.
        let top = (used + 1).min(self.best_used - 1);
        for c in 0..top {
            if sat >> c & 1 == 1 {
                continue;
            }
            self.colors[v] = c;
            if self.branch(colored + 1, used.max(c + 1)) {
                return true;
            }
        }
        self.colors[v] = NONE;
        false
    }
}

/// Relabels colours to `0..used` in increasing order of the original
/// value, leaving unassigned entries alone.
fn compact(colors: &mut [usize]) -> usize {
    let mut values: Vec<usize> = colors.iter().copied().filter(|&c| c != NONE).collect();
    values.sort_unstable();
    values.dedup();
    for c in colors.iter_mut().filter(|c| **c != NONE) {
        *c = values.binary_search(c).expect("listed");
    }
    values.len()
}

/// Colours a clique blowup with at most `⌈k·ω/2⌉` colours: repeatedly take
/// one vertex from every nonempty bag of a component, colour that transversal
/// (a copy of an induced subgraph of the quotient) with a fresh palette of at
/// most `k` colours, and recurse on what remains. A component occupying a
/// single bag is a clique and takes `|bag|` fresh colours.
pub fn color_blowup(
    g: &Graph,
    cert: &BlowupCertificate,
    budget: OracleBudget,
) -> Result<Coloring, ColoringError> {
    if budget.k < 2 {
        return Err(ColoringError::InvalidBudget(budget.k));
    }
    if !validate_blowup(g, cert) {
        return Err(ColoringError::InvalidCertificate);
    }
    let (chi, _) = exact_chromatic_with_limit(&cert.quotient, budget.exact_limit)?;
    if chi > budget.k {
        return Err(ColoringError::QuotientNotColorable { chi, k: budget.k });
    }
    let mut colors = vec![NONE; g.n()];
    color_layers(g, cert, g.vertices(), 0, &mut colors, budget)?;
    let used = compact(&mut colors);
    Ok(Coloring {
        colors,
        used,
        k: budget.k,
        bound: bull_bound(budget.k, exact_clique_number(g)),
        variant: BoundKind::Bull,
    })
}

/// Colours `G[alive]` with colours `base..base + result`.
fn color_layers(
    g: &Graph,
    cert: &BlowupCertificate,
    alive: VertexSet,
    base: usize,
    colors: &mut [usize],
    budget: OracleBudget,
) -> Result<usize, ColoringError> {
    let mut width = 0;
    for comp in g.components_within(alive) {
        let parts: Vec<VertexSet> = cert
            .bags
            .iter()
            .map(|&b| b & comp)
            .filter(|b| !b.is_empty())
            .collect();
        let used = if parts.len() == 1 {
            for (i, v) in comp.iter().enumerate() {
                colors[v] = base + i;
            }
            comp.len()
        } else {
            let transversal: VertexSet =
                parts.iter().map(|p| p.first().expect("nonempty")).collect();
            let sub = g.induced_subgraph(transversal).expect("vertices in range");
            let (layer, tc) = exact_chromatic_with_limit(&sub.graph, budget.exact_limit)?;
            debug_assert!(layer <= budget.k);
            for (i, &v) in sub.new_to_old.iter().enumerate() {
                colors[v] = base + tc.colors[i];
            }
            layer + color_layers(g, cert, comp - transversal, base + layer, colors, budget)?
        };
        width = width.max(used);
    }
    Ok(width)
}

/// Colours a (C4, `variant`)-free graph within the variant's bound by
/// following its decomposition: components independently, clique-cutset
/// sides merged by a palette permutation agreeing on the cutset, universal
/// cliques on top of a colouring of the rest, and base graphs by the exact
/// oracle (hammer) or [`color_blowup`] (bull).
pub fn color_within_bound(
    g: &Graph,
    variant: Variant,
    budget: OracleBudget,
) -> Result<Coloring, ColoringError> {
    if budget.k < 2 {
        return Err(ColoringError::InvalidBudget(budget.k));
    }
    if let Some((pattern, embedding)) = forbidden_witness(g, variant) {
        return Err(ColoringError::NotFree { pattern, embedding });
    }
    let mut colors = vec![NONE; g.n()];
    for comp in g.connected_components() {
        let sub = g.induced_subgraph(comp)?;
        let tree = build_decomposition_tree(&sub.graph, variant)?;
        let local = color_tree(&sub.graph, &tree, budget)?;
        for (i, &v) in sub.new_to_old.iter().enumerate() {
            colors[v] = local[i];
        }
    }
    let used = compact(&mut colors);
    Ok(Coloring {
        colors,
        used,
        k: budget.k,
        bound: variant_bound(variant, budget.k, exact_clique_number(g)),
        variant: variant.into(),
    })
}

/// Colours `G[tree.vertices()]`; other entries stay `NONE`. The result uses
/// colours `0..used` exactly.
fn color_tree(
    g: &Graph,
    tree: &DecompositionTree,
    budget: OracleBudget,
) -> Result<Vec<usize>, ColoringError> {
    let mut colors = vec![NONE; g.n()];
    match tree {
        DecompositionTree::CliqueCutsetSplit {
            clique,
            left,
            right,
            ..
        } => {
            let mut out = color_tree(g, left, budget)?;
            let rc = color_tree(g, right, budget)?;
            merge_on_clique(&mut out, &rc, *clique, right.vertices());
            colors = out;
        }
        DecompositionTree::UniversalCliquePeel { clique, rest, .. } => {
            colors = color_tree(g, rest, budget)?;
            let used = compact(&mut colors);
            for (i, v) in clique.iter().enumerate() {
                colors[v] = used + i;
            }
        }
        DecompositionTree::Base { vertices, kind } => match kind {
            BaseKind::Small => {}
            BaseKind::Complete => {
                for (i, v) in vertices.iter().enumerate() {
                    colors[v] = i;
                }
            }
            BaseKind::Girth5 => {
                let sub = g.induced_subgraph(*vertices)?;
                let (chi, c) = exact_chromatic_with_limit(&sub.graph, budget.exact_limit)?;
                if chi > budget.k {
                    return Err(ColoringError::LeafExceedsBudget {
                        vertices: *vertices,
                        chi,
                        k: budget.k,
                    });
                }
                for (i, &v) in sub.new_to_old.iter().enumerate() {
                    colors[v] = c.colors[i];
                }
            }
            BaseKind::Blowup(cert) => {
                let sub = g.induced_subgraph(*vertices)?;
                let local = cert.map_vertices(|v| sub.old_to_new[v].expect("bag inside leaf"));
                let c = color_blowup(&sub.graph, &local, budget).map_err(|e| match e {
                    ColoringError::QuotientNotColorable { chi, k } => {
                        ColoringError::LeafExceedsBudget {
                            vertices: *vertices,
                            chi,
                            k,
                        }
                    }
                    other => other,
                })?;
                for (i, &v) in sub.new_to_old.iter().enumerate() {
                    colors[v] = c.colors[i];
                }
            }
        },
    }
    compact(&mut colors);
    Ok(colors)
}

/// Writes the right-hand colouring into `left` after permuting its palette so
/// that both sides agree on `clique`. Right-side colours not used on the
/// clique move to the smallest values not taken by the left side's clique
/// colours.
fn merge_on_clique(
    left: &mut [usize],
    right: &[usize],
    clique: VertexSet,
    right_vertices: VertexSet,
) {
    let right_used = right
        .iter()
        .filter(|&&c| c != NONE)
        .map(|&c| c + 1)
        .max()
        .unwrap_or(0);
    let mut perm = vec![NONE; right_used];
    let mut taken = 0u64;
    for q in clique {
        perm[right[q]] = left[q];
        taken |= 1 << left[q];
    }
    let mut next = 0;
    for slot in perm.iter_mut().filter(|p| **p == NONE) {
        while taken >> next & 1 == 1 {
            next += 1;
        }
        *slot = next;
        taken |= 1 << next;
    }
    for v in right_vertices - clique {
        left[v] = perm[right[v]];
    }
}

/// Proper, colour count consistent with the assignment, and within the
/// claimed bound.
pub fn verify_coloring(g: &Graph, c: &Coloring) -> Result<bool, ColoringError> {
    if c.colors.len() != g.n() {
        return Err(ColoringError::Uncovered {
            len: c.colors.len(),
            n: g.n(),
        });
    }
    let proper = g.edges().all(|(u, v)| c.colors[u] != c.colors[v]);
    let mut distinct = c.colors.clone();
    distinct.sort_unstable();
    distinct.dedup();
    Ok(proper && distinct.len() == c.used && c.used <= c.bound)
}
