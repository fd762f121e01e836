//! Clique cutsets, universal cliques, homogeneous-clique contraction,
//! clique-blowup recognition, chordality, and the decomposition tree that
//! strings them together.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use thiserror::Error;

use crate::graph::{Graph, GraphError, VertexSet};
use crate::patterns::{find_induced, has_girth_at_least_5, Pattern};

/// Which of the two forbidden five-vertex graphs accompanies C4.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    Bull,
    Hammer,
}

impl Variant {
    pub fn pattern(self) -> Pattern {
        match self {
            Variant::Bull => Pattern::Bull,
            Variant::Hammer => Pattern::Hammer,
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::Bull => "bull",
            Variant::Hammer => "hammer",
        })
    }
}

impl FromStr for Variant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "bull" => Ok(Variant::Bull),
            "hammer" => Ok(Variant::Hammer),
            _ => Err(format!("unknown variant {s:?}; expected bull or hammer")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecomposeError {
    #[error("graph is disconnected")]
    Disconnected,
    #[error("homogeneous sets need at least 3 vertices, graph has {0}")]
    TooSmall(usize),
    #[error("{0:?} is not a clique: {1} and {2} are non-adjacent")]
    NotClique(VertexSet, usize, usize),
    #[error("{set:?} is not homogeneous: vertex {violator} is mixed on it")]
    NotHomogeneous { set: VertexSet, violator: usize },
    #[error("{set:?} has size outside 2..={max}")]
    BadHomogeneousSize { set: VertexSet, max: usize },
    #[error("graph contains an induced {pattern} at {embedding:?}")]
    NotFree {
        pattern: Pattern,
        embedding: Vec<usize>,
    },
    #[error("structural counterexample on {vertices:?} ({variant}): {reason}")]
    StructuralCounterexample {
        vertices: VertexSet,
        variant: Variant,
        reason: String,
    },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A clique `clique` whose removal disconnects the graph into `a` (the
/// component holding the smallest remaining vertex) and `b` (everything else).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CliqueCutset {
    pub clique: VertexSet,
    pub a: VertexSet,
    pub b: VertexSet,
}

/// Calls `visit` on the cliques of exactly `size` vertices inside `within`,
/// in lexicographic order, until it returns `true`.
fn first_clique_of_size(
    g: &Graph,
    within: VertexSet,
    size: usize,
    visit: &mut impl FnMut(VertexSet) -> bool,
) -> Option<VertexSet> {
    fn go(
        g: &Graph,
        chosen: VertexSet,
        cand: VertexSet,
        left: usize,
        visit: &mut impl FnMut(VertexSet) -> bool,
    ) -> Option<VertexSet> {
        if left == 0 {
            return visit(chosen).then_some(chosen);
        }
        if cand.len() < left {
            return None;
        }
        for v in cand {
            let above = !VertexSet::full(v + 1);
            let found = go(
                g,
                chosen | VertexSet::singleton(v),
                cand & g.adj(v) & above,
                left - 1,
                visit,
            );
            if found.is_some() {
                return found;
            }
        }
        None
    }
    go(g, VertexSet::EMPTY, within, size, visit)
}

/// Smallest clique cutset, ties broken lexicographically.
pub fn find_clique_cutset(g: &Graph) -> Result<Option<CliqueCutset>, DecomposeError> {
    if !g.is_connected() {
        return Err(DecomposeError::Disconnected);
    }
    if g.is_complete() {
        return Ok(None);
    }
    let all = g.vertices();
    let separates = |q: VertexSet| {
        let rest = all - q;
        rest.first()
            .is_some_and(|v| g.component_within(v, rest) != rest)
    };
    for size in 1..g.n() {
        let mut any = false;
        let found = first_clique_of_size(g, all, size, &mut |q| {
            any = true;
            separates(q)
        });
        if let Some(clique) = found {
            let rest = all - clique;
            let a = g.component_within(rest.first().expect("nonempty rest"), rest);
            return Ok(Some(CliqueCutset {
                clique,
                a,
                b: rest - a,
            }));
        }
        if !any {
            break;
        }
    }
    Ok(None)
}

/// Outcome of [`find_universal_clique`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UniversalClique {
    None,
    /// The set of all universal vertices; a proper nonempty subset of V.
    Clique(VertexSet),
    /// Every vertex is universal.
    Complete,
}

impl UniversalClique {
    /// Whether some nonempty clique is complete to the rest of the graph.
    /// Complete graphs count: any proper nonempty sub-clique qualifies.
    pub fn exists(self) -> bool {
        !matches!(self, UniversalClique::None)
    }
}

/// The set of universal vertices. Two universal vertices are adjacent, so
/// the set is a clique and is complete to everything else.
pub fn find_universal_clique(g: &Graph) -> UniversalClique {
    let all = g.vertices();
    let universal: VertexSet = (0..g.n())
        .filter(|&v| g.adj(v) == all - VertexSet::singleton(v))
        .collect();
    if universal.is_empty() {
        UniversalClique::None
    } else if universal == all {
        UniversalClique::Complete
    } else {
        UniversalClique::Clique(universal)
    }
}

/// Checks that `set` is a homogeneous clique and reports the first violation.
pub fn check_homogeneous_clique(g: &Graph, set: VertexSet) -> Result<(), DecomposeError> {
    if !set.is_subset(g.vertices()) {
        return Err(GraphError::VertexOutOfRange {
            v: (set - g.vertices()).first().expect("nonempty"),
            n: g.n(),
        }
        .into());
    }
    let max = g.n().saturating_sub(1);
    if set.len() < 2 || set.len() > max {
        return Err(DecomposeError::BadHomogeneousSize { set, max });
    }
    for u in set {
        if let Some(v) = (set - g.adj(u) - VertexSet::singleton(u)).first() {
            return Err(DecomposeError::NotClique(set, u, v));
        }
    }
    for w in g.vertices() - set {
        let seen = g.adj(w) & set;
        if !seen.is_empty() && seen != set {
            return Err(DecomposeError::NotHomogeneous { set, violator: w });
        }
    }
    Ok(())
}

/// Smallest homogeneous clique, ties broken lexicographically.
///
/// Every 2-subset of a homogeneous clique is again one (given `n >= 3`), so
/// the search is over adjacent pairs with equal closed neighbourhoods.
pub fn find_homogeneous_clique(g: &Graph) -> Result<Option<VertexSet>, DecomposeError> {
    if g.n() < 3 {
        return Err(DecomposeError::TooSmall(g.n()));
    }
    Ok(g.edges().find_map(|(u, v)| {
        let pair = VertexSet::from([u, v]);
        (g.adj(u) | VertexSet::singleton(u) == g.adj(v) | VertexSet::singleton(v)).then_some(pair)
    }))
}

/// The graph `(G - S) + s` where the new vertex `s` is adjacent to `N(S)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Contraction {
    pub graph: Graph,
    /// `old_to_new[v]` for every original vertex; members of `S` map to
    /// `new_vertex`.
    pub old_to_new: Vec<usize>,
    pub new_vertex: usize,
}

/// Contracts a homogeneous clique. Survivors keep their relative order and the
/// new vertex takes the slot of the smallest member of `S`.
pub fn contract_homogeneous_clique(
    g: &Graph,
    set: VertexSet,
) -> Result<Contraction, DecomposeError> {
    check_homogeneous_clique(g, set)?;
    let rep = set.first().expect("nonempty set");
    let keep = (g.vertices() - set) | VertexSet::singleton(rep);
    let sub = g.induced_subgraph(keep)?;
    let new_vertex = sub.old_to_new[rep].expect("representative kept");
    let old_to_new = (0..g.n())
        .map(|v| sub.old_to_new[v].unwrap_or(new_vertex))
        .collect();
    // rep already sees exactly N(S) minus the rest of S, by homogeneity.
    Ok(Contraction {
        graph: sub.graph,
        old_to_new,
        new_vertex,
    })
}

/// Witness that `G` is a clique blowup of `quotient`: `bags[i]` is the clique
/// of `G` replacing quotient vertex `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlowupCertificate {
    pub quotient: Graph,
    pub bags: Vec<VertexSet>,
}

#[derive(Serialize, Deserialize)]
struct CertificateJson {
    quotient_graph6: String,
    bags: Vec<Vec<usize>>,
}

impl Serialize for BlowupCertificate {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        CertificateJson {
            quotient_graph6: self.quotient.to_graph6(),
            bags: self.bags.iter().map(|b| b.to_vec()).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for BlowupCertificate {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = CertificateJson::deserialize(d)?;
        let quotient =
            Graph::from_graph6(&raw.quotient_graph6).map_err(serde::de::Error::custom)?;
        let mut bags = Vec::with_capacity(raw.bags.len());
        for bag in raw.bags {
            if bag.iter().any(|&v| v >= crate::graph::MAX_VERTICES) {
                return Err(serde::de::Error::custom("bag vertex out of range"));
            }
            bags.push(bag.into_iter().collect());
        }
        Ok(BlowupCertificate { quotient, bags })
    }
}

impl BlowupCertificate {
    /// The trivial certificate: `G` as a blowup of itself with singleton bags.
    pub fn identity(g: &Graph) -> Self {
        BlowupCertificate {
            quotient: g.clone(),
            bags: (0..g.n()).map(VertexSet::singleton).collect(),
        }
    }

    /// Relabels bag members through `lift` (e.g. back to a parent graph).
    pub fn map_vertices(&self, lift: impl Fn(usize) -> usize) -> Self {
        BlowupCertificate {
            quotient: self.quotient.clone(),
            bags: self
                .bags
                .iter()
                .map(|b| b.iter().map(&lift).collect())
                .collect(),
        }
    }

    /// Builds the blowup of `base` with bag `i` of size `sizes[i]`; vertices are
    /// numbered bag by bag.
    pub fn blow_up(base: &Graph, sizes: &[usize]) -> Result<(Graph, Self), GraphError> {
        assert_eq!(sizes.len(), base.n(), "one bag size per base vertex");
        let n: usize = sizes.iter().sum();
        if n > crate::graph::MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        let mut bags = Vec::with_capacity(base.n());
        let mut next = 0;
        for &s in sizes {
            bags.push(VertexSet::full(next + s) - VertexSet::full(next));
            next += s;
        }
        let mut edges = Vec::new();
        for i in 0..base.n() {
            for u in bags[i] {
                for v in bags[i] {
                    if u < v {
                        edges.push((u, v));
                    }
                }
                for j in base.adj(i) {
                    for v in bags[j] {
                        if u < v {
                            edges.push((u, v));
                        }
                    }
                }
            }
        }
        let g = Graph::from_edge_list(n, &edges)?;
        Ok((
            g,
            BlowupCertificate {
                quotient: base.clone(),
                bags,
            },
        ))
    }
}

/// Contracts homogeneous cliques until none remain, always taking the
/// smallest one. A complete graph is reported as a blowup of `K1`.
pub fn blowup_quotient(g: &Graph) -> Result<BlowupCertificate, DecomposeError> {
    if !g.is_connected() {
        return Err(DecomposeError::Disconnected);
    }
    let mut current = g.clone();
    let mut bags: Vec<VertexSet> = (0..g.n()).map(VertexSet::singleton).collect();
    while current.n() >= 3 {
        let Some(set) = find_homogeneous_clique(&current)? else {
            break;
        };
        let c = contract_homogeneous_clique(&current, set)?;
        let mut merged = vec![VertexSet::EMPTY; c.graph.n()];
        for (old, &new) in c.old_to_new.iter().enumerate() {
            merged[new] |= bags[old];
        }
        current = c.graph;
        bags = merged;
    }
    if current.n() >= 2 && current.is_complete() {
        return Ok(BlowupCertificate {
            quotient: Graph::empty(1)?,
            bags: vec![g.vertices()],
        });
    }
    Ok(BlowupCertificate {
        quotient: current,
        bags,
    })
}

/// Checks a blowup certificate: bags partition V(G), each bag is a clique,
/// and bags are complete or anticomplete to each other exactly as the
/// quotient dictates. Empty bags are allowed.
pub fn validate_blowup(g: &Graph, cert: &BlowupCertificate) -> bool {
    if cert.bags.len() != cert.quotient.n() {
        return false;
    }
    let mut seen = VertexSet::EMPTY;
    for &bag in &cert.bags {
        if !seen.is_disjoint(bag) || !g.is_clique(bag) {
            return false;
        }
        seen |= bag;
    }
    if seen != g.vertices() {
        return false;
    }
    (0..cert.bags.len()).all(|i| {
        (i + 1..cert.bags.len()).all(|j| {
            let (a, b) = (cert.bags[i], cert.bags[j]);
            if cert.quotient.has_edge(i, j) {
                a.iter().all(|u| b.is_subset(g.adj(u)))
            } else {
                a.iter().all(|u| b.is_disjoint(g.adj(u)))
            }
        })
    })
}

/// Chordality by maximum cardinality search followed by a perfect
/// elimination ordering check.
pub fn is_chordal(g: &Graph) -> bool {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut numbered = VertexSet::EMPTY;
    // order[i] is the i-th vertex picked; the reverse is a PEO iff chordal.
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (g.vertices() - numbered)
            .iter()
            .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
            .expect("unnumbered vertex");
        for w in g.adj(v) - numbered {
            weight[w] += 1;
        }
        numbered.insert(v);
        order.push(v);
    }
    let mut earlier = VertexSet::EMPTY;
    for &v in &order {
        let prior = g.adj(v) & earlier;
        // The latest-numbered prior neighbour must see all other prior neighbours.
        if let Some(&p) = order.iter().rev().find(|&&u| prior.contains(u)) {
            let others = prior - VertexSet::singleton(p);
            if !others.is_subset(g.adj(p)) {
                return false;
            }
        }
        earlier.insert(v);
    }
    true
}

/// Smallest vertex whose neighbourhood is a clique.
pub fn find_simplicial_vertex(g: &Graph) -> Option<usize> {
    (0..g.n()).find(|&v| g.is_clique(g.adj(v)))
}

pub fn simplicial_vertices(g: &Graph) -> VertexSet {
    (0..g.n()).filter(|&v| g.is_clique(g.adj(v))).collect()
}

/// Leaf classification of a [`DecompositionTree`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BaseKind {
    Girth5,
    Blowup(BlowupCertificate),
    Complete,
    /// The empty graph.
    Small,
}

impl BaseKind {
    pub fn name(&self) -> &'static str {
        match self {
            BaseKind::Girth5 => "girth5",
            BaseKind::Blowup(_) => "blowup",
            BaseKind::Complete => "complete",
            BaseKind::Small => "small",
        }
    }
}

/// Recursive record of clique-cutset splits and universal-clique peels. All
/// vertex sets use the labels of the graph the tree was built from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DecompositionTree {
    CliqueCutsetSplit {
        vertices: VertexSet,
        clique: VertexSet,
        /// `G[Q ∪ A]`
        left: Box<DecompositionTree>,
        /// `G[Q ∪ B]`
        right: Box<DecompositionTree>,
    },
    UniversalCliquePeel {
        vertices: VertexSet,
        clique: VertexSet,
        rest: Box<DecompositionTree>,
    },
    Base {
        vertices: VertexSet,
        kind: BaseKind,
    },
}

impl DecompositionTree {
    pub fn vertices(&self) -> VertexSet {
        match self {
            DecompositionTree::CliqueCutsetSplit { vertices, .. }
            | DecompositionTree::UniversalCliquePeel { vertices, .. }
            | DecompositionTree::Base { vertices, .. } => *vertices,
        }
    }

    pub fn leaves(&self) -> Vec<&DecompositionTree> {
        let mut out = Vec::new();
        let mut stack = vec![self];
        while let Some(node) = stack.pop() {
            match node {
                DecompositionTree::CliqueCutsetSplit { left, right, .. } => {
                    stack.push(right);
                    stack.push(left);
                }
                DecompositionTree::UniversalCliquePeel { rest, .. } => stack.push(rest),
                DecompositionTree::Base { .. } => out.push(node),
            }
        }
        out
    }

    /// Re-checks every node invariant against `g`.
    pub fn validate(&self, g: &Graph, variant: Variant) -> bool {
        match self {
            DecompositionTree::CliqueCutsetSplit {
                vertices,
                clique,
                left,
                right,
            } => {
                let rest = *vertices - *clique;
                let (a, b) = (left.vertices() - *clique, right.vertices() - *clique);
                clique.is_subset(*vertices)
                    && g.is_clique(*clique)
                    && clique.is_subset(left.vertices())
                    && clique.is_subset(right.vertices())
                    && !a.is_empty()
                    && !b.is_empty()
                    && a.is_disjoint(b)
                    && a | b == rest
                    && g.is_anticomplete_to(a, b).unwrap_or(false)
                    && left.validate(g, variant)
                    && right.validate(g, variant)
            }
            DecompositionTree::UniversalCliquePeel {
                vertices,
                clique,
                rest,
            } => {
                !clique.is_empty()
                    && g.is_clique(*clique)
                    && rest.vertices() == *vertices - *clique
                    && !rest.vertices().is_empty()
                    && g.is_complete_to(*clique, rest.vertices()).unwrap_or(false)
                    && rest.validate(g, variant)
            }
            DecompositionTree::Base { vertices, kind } => {
                let Ok(sub) = g.induced_subgraph(*vertices) else {
                    return false;
                };
                match kind {
                    BaseKind::Complete => !vertices.is_empty() && g.is_clique(*vertices),
                    BaseKind::Small => vertices.is_empty(),
                    BaseKind::Girth5 => {
                        variant == Variant::Hammer && has_girth_at_least_5(&sub.graph)
                    }
                    BaseKind::Blowup(cert) => {
                        if !cert.bags.iter().all(|b| b.is_subset(*vertices)) {
                            return false;
                        }
                        let local =
                            cert.map_vertices(|v| sub.old_to_new[v].expect("bag inside leaf"));
                        variant == Variant::Bull
                            && validate_blowup(&sub.graph, &local)
                            && has_girth_at_least_5(&cert.quotient)
                    }
                }
            }
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            DecompositionTree::CliqueCutsetSplit {
                vertices,
                clique,
                left,
                right,
            } => json!({
                "kind": "clique-cutset",
                "vertices": vertices,
                "clique": clique,
                "children": [left.to_json(), right.to_json()],
            }),
            DecompositionTree::UniversalCliquePeel {
                vertices,
                clique,
                rest,
            } => json!({
                "kind": "universal-clique",
                "vertices": vertices,
                "clique": clique,
                "children": [rest.to_json()],
            }),
            DecompositionTree::Base { vertices, kind } => json!({
                "kind": "base",
                "base": kind.name(),
                "vertices": vertices,
                "clique": null,
                "children": [],
                "certificate": match kind {
                    BaseKind::Blowup(cert) => serde_json::to_value(cert).expect("serializable"),
                    _ => Value::Null,
                },
            }),
        }
    }
}

impl Serialize for DecompositionTree {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

/// Returns the lexicographically smallest induced C4 or `variant` pattern.
pub fn forbidden_witness(g: &Graph, variant: Variant) -> Option<(Pattern, Vec<usize>)> {
    [Pattern::Cycle(4), variant.pattern()]
        .into_iter()
        .find_map(|p| find_induced(g, p).map(|e| (p, e)))
}

/// Decomposes a connected (C4, `variant`)-free graph: clique cutsets first,
/// then universal cliques, then base classification of what is left.
pub fn build_decomposition_tree(
    g: &Graph,
    variant: Variant,
) -> Result<DecompositionTree, DecomposeError> {
    if !g.is_connected() {
        return Err(DecomposeError::Disconnected);
    }
    if let Some((pattern, embedding)) = forbidden_witness(g, variant) {
        return Err(DecomposeError::NotFree { pattern, embedding });
    }
    decompose_node(g, g.vertices(), variant)
}

fn decompose_node(
    g: &Graph,
    vertices: VertexSet,
    variant: Variant,
) -> Result<DecompositionTree, DecomposeError> {
    if vertices.is_empty() {
        return Ok(DecompositionTree::Base {
            vertices,
            kind: BaseKind::Small,
        });
    }
    if g.is_clique(vertices) {
        return Ok(DecompositionTree::Base {
            vertices,
            kind: BaseKind::Complete,
        });
    }
    let sub = g.induced_subgraph(vertices)?;
    let h = &sub.graph;
    if let Some(cut) = find_clique_cutset(h)? {
        let clique = sub.lift(cut.clique);
        let (a, b) = (sub.lift(cut.a), sub.lift(cut.b));
        return Ok(DecompositionTree::CliqueCutsetSplit {
            vertices,
            clique,
            left: Box::new(decompose_node(g, clique | a, variant)?),
            right: Box::new(decompose_node(g, clique | b, variant)?),
        });
    }
    if let UniversalClique::Clique(u) = find_universal_clique(h) {
        let clique = sub.lift(u);
        return Ok(DecompositionTree::UniversalCliquePeel {
            vertices,
            clique,
            rest: Box::new(decompose_node(g, vertices - clique, variant)?),
        });
    }
    let counterexample = |reason: String| DecomposeError::StructuralCounterexample {
        vertices,
        variant,
        reason,
    };
    match variant {
        Variant::Hammer => {
            if has_girth_at_least_5(h) {
                Ok(DecompositionTree::Base {
                    vertices,
                    kind: BaseKind::Girth5,
                })
            } else {
                Err(counterexample(format!(
                    "no clique cutset or universal clique, but girth is {:?}",
                    crate::patterns::girth(h)
                )))
            }
        }
        Variant::Bull => {
            let cert = blowup_quotient(h)?;
            if has_girth_at_least_5(&cert.quotient) {
                Ok(DecompositionTree::Base {
                    vertices,
                    kind: BaseKind::Blowup(cert.map_vertices(|v| sub.new_to_old[v])),
                })
            } else {
                Err(counterexample(format!(
                    "no clique cutset or universal clique, but the blowup quotient {} has girth {:?}",
                    cert.quotient.to_graph6(),
                    crate::patterns::girth(&cert.quotient)
                )))
            }
        }
    }
}
