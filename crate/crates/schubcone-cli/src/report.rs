//! The machine-readable report schema and its text twin.
//!
//! Every subcommand that emits structured output goes through [`Report`]:
//! a versioned, additive-only JSON shape whose top level is
//!
//! ```text
//! { "schema_version": "1", "input": "[2,4,1,3]", "classification": {…},
//!   "diagrams": {…}?, "faces": […]?, "timings": {…}? }
//! ```
//!
//! The `classification` block is a faithful projection of
//! [`schubcone::edgecone::Classification`]: per-route verdicts are kept
//! separate (`null` when a route did not run), the combined verdict is
//! `rigid`, and witnesses carry enough data to be re-checked by hand.
//! Key order is fixed by struct declaration order, sets are emitted in
//! sorted order, and scan lines omit the volatile `timings` block, so the
//! serialized form is byte-stable across runs and thread counts.

use serde::Serialize;

use schubcone::edgecone::{
    Classification, CorollaryRule, FaceDescriptor, RigidityWitness,
};
use schubcone::rothe::{regions, rothe_diagram};

/// Version tag for the report shape; bumped on any change that is not
/// purely additive.
pub const SCHEMA_VERSION: &str = "1";

// ======================================================================
// JSON views
// ======================================================================

/// Top-level report emitted by `classify` and (one per line) by `scan`.
#[derive(Debug, Serialize)]
pub struct Report {
    /// Shape version of this report.
    pub schema_version: &'static str,
    /// The permutation in one-line notation, exactly as classified.
    pub input: String,
    /// Projection of the library's classification record.
    pub classification: ClassificationView,
    /// ASCII renderings of the Rothe diagram and region overlay
    /// (`classify` only).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub diagrams: Option<DiagramsView>,
    /// Full three-face inventory per component (`classify --faces`).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub faces: Option<Vec<ComponentFaceView>>,
    /// Per-phase wall-clock times (`classify` only; omitted from scan
    /// lines so that output is byte-stable).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings: Option<TimingsView>,
}

/// Projection of [`Classification`].
#[derive(Debug, Serialize)]
pub struct ClassificationView {
    /// One-line notation of the permutation.
    pub permutation: String,
    /// Degree of the symmetric group the permutation lives in.
    pub n: usize,
    /// Whether the variety factor is toric.
    pub toric: bool,
    /// Complexity of the torus action (0 exactly when toric).
    pub complexity: usize,
    /// Dimension of the variety factor, |L′(π)|.
    pub dim_y: usize,
    /// Whether the factor is a point (empty L-region).
    pub trivial: bool,
    /// Combined rigidity verdict; `null` when not toric or when the
    /// routes that ran disagree.
    pub rigid: Option<bool>,
    /// Per-route verdicts; `null` for routes that did not run.
    pub methods: MethodsView,
    /// Whether all routes that ran returned the same verdict.
    pub consistent: bool,
    /// Which rule answered per component on the corollary route.
    pub corollary_rules: Vec<RuleView>,
    /// Non-rigidity witnesses (chain-pattern hits, then non-simplicial
    /// three-faces, each in component order).
    pub witnesses: Vec<WitnessView>,
    /// Connected components of the graph G^π with their grid labels.
    pub components: Vec<ComponentView>,
}

/// Per-route verdicts (`true` = rigid).
#[derive(Debug, Serialize)]
pub struct MethodsView {
    pub graph: Option<bool>,
    pub corollary: Option<bool>,
    pub oracle: Option<bool>,
}

/// Which corollary branch decided a component.
#[derive(Debug, Serialize)]
#[serde(tag = "rule", rename_all = "kebab-case")]
pub enum RuleView {
    /// Chain length ≥ 2: the essential-pattern scan decided.
    Pattern { component: usize },
    /// Single essential cell, both sides ≥ 3: K_{m,n} is rigid.
    CompleteBipartite { component: usize, m: usize, n: usize },
    /// Single essential cell with a side of size 2: the graph route
    /// answered for this component.
    DeferredToGraph { component: usize, m: usize, n: usize },
}

/// One non-rigidity witness.
#[derive(Debug, Serialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum WitnessView {
    /// An essential cell matching the chain pattern.
    EssentialPattern {
        component: usize,
        /// Global grid coordinates `[row, col]`.
        cell: [usize; 2],
        /// 1-based chain position of the hit.
        index: usize,
        /// `"boundary"` or `"interior"`.
        kind: String,
    },
    /// A three-dimensional face carrying more than three extremal rays.
    NonSimplicialThreeFace { component: usize, face: FaceView },
}

/// A face of a component cone.
#[derive(Debug, Serialize)]
pub struct FaceView {
    /// Dimension of the face.
    pub dim: usize,
    /// The first independent sets that define it, as `A₁⊔A₂` text.
    pub defining_sets: Vec<String>,
    /// Supporting functional (degree sequence of the common subgraph).
    pub functional: Vec<i64>,
    /// Extremal rays lying on the face.
    pub rays: Vec<RayView>,
}

/// A face together with the component it belongs to (`--faces` dump).
#[derive(Debug, Serialize)]
pub struct ComponentFaceView {
    pub component: usize,
    pub face: FaceView,
}

/// One extremal ray in cone coordinates, tagged with its source set.
#[derive(Debug, Serialize)]
pub struct RayView {
    /// The first independent set the ray comes from, as `A₁⊔A₂` text.
    pub source: String,
    /// Coordinates in the rank-(m+n−1) quotient lattice.
    pub coords: Vec<i64>,
}

/// One connected component of G^π.
#[derive(Debug, Serialize)]
pub struct ComponentView {
    /// Rows of the component graph.
    pub m: usize,
    /// Columns of the component graph.
    pub n: usize,
    /// Essential cells inside the component, local `[row, col]`
    /// coordinates, sorted by strictly descending row.
    pub essential_chain: Vec<[usize; 2]>,
    /// Global grid row of each local row.
    pub rows: Vec<usize>,
    /// Global grid column of each local column.
    pub cols: Vec<usize>,
}

/// ASCII renderings included in `classify` reports.
#[derive(Debug, Serialize)]
pub struct DiagramsView {
    /// The Rothe diagram grid, one string per row.
    pub rothe: Vec<String>,
    /// The region overlay grid, one string per row.
    pub regions: Vec<String>,
}

/// Wall-clock milliseconds per phase of a `classify` run.
#[derive(Debug, Serialize)]
pub struct TimingsView {
    pub parse_ms: f64,
    pub classify_ms: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub faces_ms: Option<f64>,
    pub total_ms: f64,
}

// ======================================================================
// conversions
// ======================================================================

/// Project a library [`Classification`] into its JSON view.
pub fn classification_view(c: &Classification) -> ClassificationView {
    let reg = regions(&rothe_diagram(&c.permutation));
    ClassificationView {
        permutation: c.permutation.to_string(),
        n: c.permutation.n(),
        toric: c.toric,
        complexity: c.complexity,
        dim_y: reg.l_prime.len(),
        trivial: c.trivial,
        rigid: c.rigid,
        methods: MethodsView {
            graph: c.method_verdicts.graph,
            corollary: c.method_verdicts.corollary,
            oracle: c.method_verdicts.oracle,
        },
        consistent: c.consistent,
        corollary_rules: c.corollary_rules.iter().map(rule_view).collect(),
        witnesses: c.witnesses.iter().map(witness_view).collect(),
        components: c
            .components
            .iter()
            .map(|cd| ComponentView {
                m: cd.m,
                n: cd.n,
                essential_chain: cd
                    .essential_chain
                    .iter()
                    .map(|cell| [cell.row, cell.col])
                    .collect(),
                rows: cd.row_labels.clone(),
                cols: cd.col_labels.clone(),
            })
            .collect(),
    }
}

fn rule_view(r: &CorollaryRule) -> RuleView {
    match *r {
        CorollaryRule::PatternRule { component } => RuleView::Pattern { component },
        CorollaryRule::CompleteBipartite { component, m, n } => {
            RuleView::CompleteBipartite { component, m, n }
        }
        CorollaryRule::DeferredToGraph { component, m, n } => {
            RuleView::DeferredToGraph { component, m, n }
        }
    }
}

fn witness_view(w: &RigidityWitness) -> WitnessView {
    match w {
        RigidityWitness::EssentialPattern { component, cell, index, kind } => {
            WitnessView::EssentialPattern {
                component: *component,
                cell: [cell.row, cell.col],
                index: *index,
                kind: kind.to_string(),
            }
        }
        RigidityWitness::NonSimplicialThreeFace { component, face } => {
            WitnessView::NonSimplicialThreeFace {
                component: *component,
                face: face_view(face),
            }
        }
    }
}

/// Project a library [`FaceDescriptor`] into its JSON view.
pub fn face_view(f: &FaceDescriptor) -> FaceView {
    FaceView {
        dim: f.dim,
        defining_sets: f.defining_sets.iter().map(|s| s.to_string()).collect(),
        functional: f.functional.clone(),
        rays: f
            .rays_on_face
            .iter()
            .map(|r| RayView { source: r.source.to_string(), coords: r.coords.clone() })
            .collect(),
    }
}

// ======================================================================
// text twin
// ======================================================================

/// Render a classification as human-readable text (the `--text` mode).
pub fn text_report(c: &Classification, rothe: &[String], overlay: &[String]) -> String {
    use std::fmt::Write as _;
    let mut out = String::new();
    let _ = writeln!(out, "π = {}   (n = {})", c.permutation, c.permutation.n());
    let reg = regions(&rothe_diagram(&c.permutation));
    let _ = writeln!(
        out,
        "toric       {}   (complexity {})",
        if c.toric { "yes" } else { "no" },
        c.complexity
    );
    let _ = writeln!(out, "dim Y       {}", reg.l_prime.len());
    if c.trivial {
        let _ = writeln!(out, "trivial     yes (empty L-region; rigid)");
    }
    match c.rigid {
        Some(true) => {
            let _ = writeln!(out, "rigid       yes");
        }
        Some(false) => {
            let _ = writeln!(out, "rigid       no");
        }
        None if c.toric => {
            let _ = writeln!(out, "rigid       undecided (routes disagree)");
        }
        None => {
            let _ = writeln!(out, "rigid       not defined (non-toric)");
        }
    }
    if c.toric && !c.trivial {
        let verdict = |v: Option<bool>| match v {
            Some(true) => "rigid",
            Some(false) => "non-rigid",
            None => "—",
        };
        let _ = writeln!(
            out,
            "routes      graph: {}   corollary: {}   oracle: {}",
            verdict(c.method_verdicts.graph),
            verdict(c.method_verdicts.corollary),
            verdict(c.method_verdicts.oracle),
        );
        let _ = writeln!(out, "consistent  {}", if c.consistent { "yes" } else { "NO" });
    }
    if !c.components.is_empty() {
        let _ = writeln!(out, "components");
        for (i, cd) in c.components.iter().enumerate() {
            let fmt_list = |v: &[usize]| {
                v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
            };
            let chain = cd
                .essential_chain
                .iter()
                .map(|cell| cell.to_string())
                .collect::<Vec<_>>()
                .join(" ");
            let _ = writeln!(
                out,
                "  [{i}] m={} n={}   rows {{{}}} × cols {{{}}}   chain {}",
                cd.m,
                cd.n,
                fmt_list(&cd.row_labels),
                fmt_list(&cd.col_labels),
                chain,
            );
        }
    }
    if !c.corollary_rules.is_empty() {
        let _ = writeln!(out, "corollary rules");
        for r in &c.corollary_rules {
            let _ = writeln!(out, "  {r}");
        }
    }
    if !c.witnesses.is_empty() {
        let _ = writeln!(out, "witnesses");
        for w in &c.witnesses {
            let _ = writeln!(out, "  {w}");
        }
    }
    let _ = writeln!(out, "rothe");
    for line in rothe {
        let _ = writeln!(out, "  {line}");
    }
    let _ = writeln!(out, "regions");
    for line in overlay {
        let _ = writeln!(out, "  {line}");
    }
    out
}

// ======================================================================
// tests
// ======================================================================

#[cfg(test)]
mod tests {
    use super::*;
    use schubcone::edgecone::{classify, MethodSet};
    use schubcone::rothe::Permutation;

    fn report_json(text: &str) -> serde_json::Value {
        let p = Permutation::parse(text).unwrap();
        let c = classify(&p, &MethodSet::all()).unwrap();
        let report = Report {
            schema_version: SCHEMA_VERSION,
            input: p.to_string(),
            classification: classification_view(&c),
            diagrams: None,
            faces: None,
            timings: None,
        };
        serde_json::to_value(&report).unwrap()
    }

    #[test]
    fn quadric_classification_projects_faithfully() {
        let v = report_json("[2,4,1,3]");
        assert_eq!(v["schema_version"], "1");
        assert_eq!(v["input"], "[2,4,1,3]");
        let c = &v["classification"];
        assert_eq!(c["toric"], true);
        assert_eq!(c["complexity"], 0);
        assert_eq!(c["dim_y"], 3);
        assert_eq!(c["rigid"], false);
        assert_eq!(c["methods"]["graph"], false);
        assert_eq!(c["consistent"], true);
        assert_eq!(c["components"][0]["m"], 2);
        assert_eq!(c["components"][0]["rows"], serde_json::json!([2, 3]));
        assert_eq!(c["components"][0]["cols"], serde_json::json!([1, 2]));
        // Volatile blocks are absent unless requested.
        assert!(v.get("timings").is_none());
        assert!(v.get("diagrams").is_none());
    }

    #[test]
    fn non_toric_report_has_null_verdicts() {
        let v = report_json("[2,1,4,3]");
        let c = &v["classification"];
        assert_eq!(c["toric"], false);
        assert_eq!(c["complexity"], 2);
        assert_eq!(c["dim_y"], 7);
        assert_eq!(c["rigid"], serde_json::Value::Null);
        assert_eq!(c["methods"]["oracle"], serde_json::Value::Null);
        assert_eq!(c["witnesses"].as_array().unwrap().len(), 0);
    }

    #[test]
    fn witness_views_are_tagged() {
        let v = report_json("[1,4,3,2]");
        let ws = v["classification"]["witnesses"].as_array().unwrap();
        assert_eq!(ws.len(), 4, "two pattern hits + two non-simplicial faces");
        assert_eq!(ws[0]["type"], "essential-pattern");
        assert_eq!(ws[0]["cell"], serde_json::json!([3, 2]));
        assert_eq!(ws[0]["kind"], "boundary");
        assert_eq!(ws[2]["type"], "non-simplicial-three-face");
        assert_eq!(ws[2]["face"]["dim"], 3);
        assert_eq!(ws[2]["face"]["rays"].as_array().unwrap().len(), 4);
        let rules = v["classification"]["corollary_rules"].as_array().unwrap();
        assert_eq!(rules[0]["rule"], "pattern");
    }

    #[test]
    fn text_report_names_the_witnesses() {
        let p = Permutation::parse("[1,4,3,2]").unwrap();
        let c = classify(&p, &MethodSet::all()).unwrap();
        let rothe = crate::render::rothe_grid(&p);
        let overlay = crate::render::regions_grid(&p);
        let text = text_report(&c, &rothe, &overlay);
        assert!(text.contains("π = [1,4,3,2]"));
        assert!(text.contains("rigid       no"));
        assert!(text.contains("essential cell (3,2)"));
        assert!(text.contains("chain pattern rule"));
    }
}
