//! Executable checks of the structural claims behind the decomposition.
//!
//! Each check evaluates its hypothesis and its conclusion through separate
//! predicates (none of them consult the decomposition tree), and fails only
//! when the hypothesis holds and the conclusion does not.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::decompose::{
    blowup_quotient, find_clique_cutset, find_homogeneous_clique, find_universal_clique,
    forbidden_witness, Variant,
};
use crate::graph::Graph;
use crate::patterns::{
    find_hole, find_hole_with_center, find_triangle, girth, has_girth_at_least_5,
    vertex_with_two_consecutive_hole_neighbors,
};

/// One line of a verification report.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckEntry {
    pub g6: String,
    pub check: String,
    pub hyp: bool,
    pub concl: bool,
    pub pass: bool,
    pub witness: Option<Value>,
}

impl CheckEntry {
    fn new(g: &Graph, check: &str, hyp: bool, concl: bool, witness: Option<Value>) -> Self {
        CheckEntry {
            g6: g.to_graph6(),
            check: check.to_string(),
            hyp,
            concl,
            pass: !hyp || concl,
            witness,
        }
    }
}

/// All check results for one graph.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub g6: String,
    pub checks: Vec<CheckEntry>,
}

impl VerificationReport {
    /// Runs every structural check on `g` (the centred-hole check once per variant).
    pub fn run_all(g: &Graph) -> Self {
        VerificationReport {
            g6: g.to_graph6(),
            checks: vec![
                check_hammer_structure(g),
                check_bull_structure(g),
                check_centred_hole(g, Variant::Bull),
                check_centred_hole(g, Variant::Hammer),
                check_bull_homogeneous_clique(g),
                check_consecutive_neighbours(g),
            ],
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckEntry> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

/// Connected, not complete, no clique cutset and no universal clique.
/// Complete graphs are excluded because any proper sub-clique of them is
/// universal.
pub fn is_prime(g: &Graph) -> bool {
    g.n() > 0
        && g.is_connected()
        && !g.is_complete()
        && !find_universal_clique(g).exists()
        && matches!(find_clique_cutset(g), Ok(None))
}

fn forbidden_json(g: &Graph, variant: Variant) -> (bool, Value) {
    match forbidden_witness(g, variant) {
        None => (true, Value::Null),
        Some((pattern, embedding)) => (false, json!({"pattern": pattern, "embedding": embedding})),
    }
}

/// Prime graphs: (C4, hammer)-free exactly when the girth is at least 5.
pub fn check_hammer_structure(g: &Graph) -> CheckEntry {
    let hyp = is_prime(g);
    let (free, forbidden) = forbidden_json(g, Variant::Hammer);
    let girth5 = has_girth_at_least_5(g);
    let witness = json!({"free": free, "forbidden": forbidden, "girth": girth(g)});
    CheckEntry::new(
        g,
        "structure-hammer",
        hyp,
        free == girth5,
        hyp.then_some(witness),
    )
}

/// Prime graphs: (C4, bull)-free exactly when the blowup quotient has girth
/// at least 5.
pub fn check_bull_structure(g: &Graph) -> CheckEntry {
    let hyp = is_prime(g);
    if !hyp {
        return CheckEntry::new(g, "structure-bull", false, true, None);
    }
    let (free, forbidden) = forbidden_json(g, Variant::Bull);
    let cert = blowup_quotient(g).expect("prime graphs are connected");
    let girth5 = has_girth_at_least_5(&cert.quotient);
    let witness = json!({
        "free": free,
        "forbidden": forbidden,
        "quotient_girth": girth(&cert.quotient),
        "certificate": cert,
    });
    CheckEntry::new(g, "structure-bull", hyp, free == girth5, Some(witness))
}

fn decomposable(g: &Graph) -> (bool, Value) {
    if let Ok(Some(cut)) = find_clique_cutset(g) {
        return (true, json!({"clique_cutset": cut}));
    }
    let u = find_universal_clique(g);
    (u.exists(), json!({"universal_clique": format!("{u:?}")}))
}

/// A connected (C4, `variant`)-free graph with a centred hole of length at
/// least 5 has a clique cutset or a universal clique.
pub fn check_centred_hole(g: &Graph, variant: Variant) -> CheckEntry {
    let name = match variant {
        Variant::Bull => "centred-hole-bull",
        Variant::Hammer => "centred-hole-hammer",
    };
    let centred = (g.n() > 0 && g.is_connected() && forbidden_witness(g, variant).is_none())
        .then(|| find_hole_with_center(g))
        .flatten();
    let Some((hole, center)) = centred else {
        return CheckEntry::new(g, name, false, true, None);
    };
    let (concl, detail) = decomposable(g);
    let witness = json!({"hole": hole.vertices, "center": center, "conclusion": detail});
    CheckEntry::new(g, name, true, concl, Some(witness))
}

/// A prime (C4, bull)-free graph with a vertex having two consecutive
/// neighbours on a hole avoiding it has a homogeneous clique.
pub fn check_bull_homogeneous_clique(g: &Graph) -> CheckEntry {
    let found = (is_prime(g) && forbidden_witness(g, Variant::Bull).is_none())
        .then(|| vertex_with_two_consecutive_hole_neighbors(g))
        .flatten();
    let Some((x, hole)) = found else {
        return CheckEntry::new(g, "homogeneous-clique", false, true, None);
    };
    let homogeneous = find_homogeneous_clique(g).ok().flatten();
    let witness = json!({"vertex": x, "hole": hole.vertices, "homogeneous_clique": homogeneous});
    CheckEntry::new(
        g,
        "homogeneous-clique",
        true,
        homogeneous.is_some(),
        Some(witness),
    )
}

/// A connected graph with a triangle, a hole and no clique cutset has a
/// vertex with two consecutive neighbours on some hole avoiding it.
pub fn check_consecutive_neighbours(g: &Graph) -> CheckEntry {
    let hyp_parts = (g.n() > 0 && g.is_connected())
        .then(|| find_triangle(g).zip(find_hole(g)))
        .flatten()
        .filter(|_| matches!(find_clique_cutset(g), Ok(None)));
    let Some((triangle, hole)) = hyp_parts else {
        return CheckEntry::new(g, "consecutive-neighbours", false, true, None);
    };
    let found = vertex_with_two_consecutive_hole_neighbors(g);
    let witness = json!({
        "triangle": triangle,
        "hole": hole.vertices,
        "vertex": found.as_ref().map(|(x, _)| *x),
        "vertex_hole": found.as_ref().map(|(_, h)| h.vertices.clone()),
    });
    CheckEntry::new(
        g,
        "consecutive-neighbours",
        true,
        found.is_some(),
        Some(witness),
    )
}
