//! The A2 side: grids, A-sails, the diagonal product `C(a,b)`, and the
//! checker for decorated RA2-graphs.
//!
//! A [`DecoratedGraph`] uses colors I/II, rendered from [`EdgeColor::One`] and
//! [`EdgeColor::Two`]. The ⊗-decoration is stored in the vertex mark of the
//! underlying [`ColoredDigraph`]; edges carry no marks.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{is_isomorphic, strings_of, ColoredDigraph, EdgeColor, VertexIdx};
use crate::report::{AxiomResult, Report};

const I: EdgeColor = EdgeColor::One;
const II: EdgeColor = EdgeColor::Two;

#[derive(Clone, Debug, Default)]
pub struct DecoratedGraph {
    /// Vertex marks are the ⊗-decoration.
    pub graph: ColoredDigraph,
    /// Principal vertices, when the graph came from a construction.
    pub principal: Vec<VertexIdx>,
}

impl DecoratedGraph {
    /// Wraps a graph whose vertex marks already encode the decoration.
    pub fn from_marked(graph: ColoredDigraph) -> Self {
        DecoratedGraph {
            graph,
            principal: Vec::new(),
        }
    }

    pub fn is_otimes(&self, v: VertexIdx) -> bool {
        self.graph.is_central(v)
    }

    pub fn otimes_vertices(&self) -> Vec<VertexIdx> {
        self.graph.central_vertices().collect()
    }

    /// Sorted ids of the ⊗-vertices.
    pub fn otimes_ids(&self) -> Vec<String> {
        let mut ids: Vec<String> = self
            .otimes_vertices()
            .into_iter()
            .map(|v| self.graph.id(v).to_string())
            .collect();
        ids.sort();
        ids
    }

    /// Isomorphism of colored graphs preserving the decoration.
    pub fn is_isomorphic_to(&self, other: &DecoratedGraph) -> Result<bool> {
        Ok(is_isomorphic(&self.graph, &other.graph, true)?.is_some())
    }
}

impl PartialEq for DecoratedGraph {
    fn eq(&self, other: &Self) -> bool {
        self.graph == other.graph
    }
}

pub const DECORATED_FORMAT: &str = "b2crystal-decorated-v1";

#[derive(Serialize, Deserialize)]
struct DecoratedDoc {
    format: String,
    vertices: Vec<DecoratedVertexDoc>,
    edges: Vec<DecoratedEdgeDoc>,
}

#[derive(Serialize, Deserialize)]
struct DecoratedVertexDoc {
    id: String,
    otimes: bool,
}

#[derive(Serialize, Deserialize)]
struct DecoratedEdgeDoc {
    src: String,
    dst: String,
    color: String,
}

pub fn decorated_to_json(d: &DecoratedGraph) -> String {
    let g = &d.graph;
    let doc = DecoratedDoc {
        format: DECORATED_FORMAT.to_string(),
        vertices: g
            .sorted_vertices()
            .into_iter()
            .map(|v| DecoratedVertexDoc {
                id: g.id(v).to_string(),
                otimes: g.is_central(v),
            })
            .collect(),
        edges: g
            .sorted_edges()
            .into_iter()
            .map(|e| {
                let edge = g.edge(e);
                DecoratedEdgeDoc {
                    src: g.id(edge.src).to_string(),
                    dst: g.id(edge.dst).to_string(),
                    color: edge.color.roman().to_string(),
                }
            })
            .collect(),
    };
    serde_json::to_string_pretty(&doc).expect("decorated graph serializes")
}

pub fn decorated_from_json(text: &str) -> Result<DecoratedGraph> {
    let doc: DecoratedDoc = serde_json::from_str(text).map_err(|e| {
        parse_error(
            format!("line {}, column {}", e.line(), e.column()),
            e.to_string(),
        )
    })?;
    if doc.format != DECORATED_FORMAT {
        return Err(parse_error(
            "format",
            format!("expected {DECORATED_FORMAT:?}, found {:?}", doc.format),
        ));
    }
    let mut g = ColoredDigraph::new();
    for (i, v) in doc.vertices.iter().enumerate() {
        if g.vertex(&v.id).is_some() {
            return Err(parse_error(
                format!("vertices[{i}]"),
                format!("duplicate id {:?}", v.id),
            ));
        }
        g.add_vertex(v.id.clone(), v.otimes);
    }
    for (i, e) in doc.edges.iter().enumerate() {
        let at = || format!("edges[{i}]");
        let color = match e.color.as_str() {
            "I" => I,
            "II" => II,
            other => return Err(parse_error(at(), format!("unknown color {other:?}"))),
        };
        let src = g
            .vertex(&e.src)
            .ok_or_else(|| parse_error(at(), format!("unknown vertex {:?}", e.src)))?;
        let dst = g
            .vertex(&e.dst)
            .ok_or_else(|| parse_error(at(), format!("unknown vertex {:?}", e.dst)))?;
        g.add_edge(src, dst, color, false);
    }
    Ok(DecoratedGraph::from_marked(g))
}

fn parse_error(location: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Parse {
        location: location.into(),
        message: message.into(),
    }
}

/// Canonical name of a vertex of `C(a,b)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CrystalCoords {
    /// Grid point `(i, j)`.
    Principal(i64, i64),
    /// Point `(p, q)`, `q < p`, of the right sail copy `R_j`.
    RightSailInterior(i64, i64, i64),
    /// Point `(p, q)`, `p < q`, of the left sail copy `L_i`.
    LeftSailInterior(i64, i64, i64),
}

impl CrystalCoords {
    /// Point `(p, q)` of `R_j`, diagonal points resolved to the grid.
    pub fn in_right(j: i64, p: i64, q: i64) -> Self {
        if p == q {
            CrystalCoords::Principal(p, j)
        } else {
            CrystalCoords::RightSailInterior(j, p, q)
        }
    }

    /// Point `(p, q)` of `L_i`, diagonal points resolved to the grid.
    pub fn in_left(i: i64, p: i64, q: i64) -> Self {
        if p == q {
            CrystalCoords::Principal(i, p)
        } else {
            CrystalCoords::LeftSailInterior(i, p, q)
        }
    }

    /// Odd distance from the diagonal of a left sail.
    pub fn is_otimes(&self) -> bool {
        matches!(self, CrystalCoords::LeftSailInterior(_, p, q) if (q - p) % 2 != 0)
    }
}

impl fmt::Display for CrystalCoords {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CrystalCoords::Principal(i, j) => write!(f, "P({i},{j})"),
            CrystalCoords::RightSailInterior(j, p, q) => write!(f, "R({j};{p},{q})"),
            CrystalCoords::LeftSailInterior(i, p, q) => write!(f, "L({i};{p},{q})"),
        }
    }
}

pub fn build_grid(a: i64, b: i64) -> DecoratedGraph {
    let mut g = ColoredDigraph::new();
    let mut idx = HashMap::new();
    for i in 0..=a {
        for j in 0..=b {
            idx.insert(
                (i, j),
                g.add_vertex(CrystalCoords::Principal(i, j).to_string(), false),
            );
        }
    }
    for i in 0..=a {
        for j in 0..=b {
            if i < a {
                g.add_edge(idx[&(i, j)], idx[&(i + 1, j)], I, false);
            }
            if j < b {
                g.add_edge(idx[&(i, j)], idx[&(i, j + 1)], II, false);
            }
        }
    }
    let principal = g.vertices().collect();
    DecoratedGraph {
        graph: g,
        principal,
    }
}

/// The I-string of `C(a,b)` through principal `(i,j)`, in order.
pub fn principal_i_string(a: i64, i: i64, j: i64) -> Vec<CrystalCoords> {
    let left = (0..=j).map(|p| CrystalCoords::in_left(i, p, j));
    let right = (i + 1..=a).map(|p| CrystalCoords::in_right(j, p, i));
    left.chain(right).collect()
}

/// The II-string of `C(a,b)` through principal `(i,j)`, in order.
pub fn principal_ii_string(b: i64, i: i64, j: i64) -> Vec<CrystalCoords> {
    let right = (0..=i).map(|q| CrystalCoords::in_right(j, i, q));
    let left = (j + 1..=b).map(|q| CrystalCoords::in_left(i, j, q));
    right.chain(left).collect()
}

/// Vertices of `C(a,b)` in construction order: grid, right interiors, left
/// interiors.
pub fn c_coordinates(a: i64, b: i64) -> Vec<CrystalCoords> {
    let mut out = Vec::new();
    for i in 0..=a {
        for j in 0..=b {
            out.push(CrystalCoords::Principal(i, j));
        }
    }
    for j in 0..=b {
        for p in 0..=a {
            for q in 0..p {
                out.push(CrystalCoords::RightSailInterior(j, p, q));
            }
        }
    }
    for i in 0..=a {
        for q in 0..=b {
            for p in 0..q {
                out.push(CrystalCoords::LeftSailInterior(i, p, q));
            }
        }
    }
    out
}

/// The diagonal product `C(a,b)`.
pub fn build_c(a: i64, b: i64) -> DecoratedGraph {
    assert!(a >= 0 && b >= 0, "negative parameters ({a},{b})");
    let mut g = ColoredDigraph::new();
    let mut idx = HashMap::new();
    for c in c_coordinates(a, b) {
        idx.insert(c, g.add_vertex(c.to_string(), c.is_otimes()));
    }
    let edge = |g: &mut ColoredDigraph, s: CrystalCoords, t: CrystalCoords, color| {
        g.add_edge(idx[&s], idx[&t], color, false);
    };
    for j in 0..=b {
        for p in 0..=a {
            for q in 0..=p {
                let here = CrystalCoords::in_right(j, p, q);
                if p < a {
                    edge(&mut g, here, CrystalCoords::in_right(j, p + 1, q), I);
                }
                if q < p {
                    edge(&mut g, here, CrystalCoords::in_right(j, p, q + 1), II);
                }
            }
        }
    }
    for i in 0..=a {
        for q in 0..=b {
            for p in 0..=q {
                let here = CrystalCoords::in_left(i, p, q);
                if p < q {
                    edge(&mut g, here, CrystalCoords::in_left(i, p + 1, q), I);
                }
                if q < b {
                    edge(&mut g, here, CrystalCoords::in_left(i, p, q + 1), II);
                }
            }
        }
    }
    let principal = (0..(a + 1) * (b + 1)).map(|v| v as usize).collect();
    DecoratedGraph {
        graph: g,
        principal,
    }
}

/// Closed-form vertex count of `C(a,b)`.
pub fn c_vertex_count(a: i64, b: i64) -> i64 {
    (a + 1) * (b + 1) + (b + 1) * a * (a + 1) / 2 + (a + 1) * b * (b + 1) / 2
}

/// Local operator view of a decorated graph.
struct Ops<'a> {
    d: &'a DecoratedGraph,
}

impl Ops<'_> {
    fn fwd(&self, v: Option<VertexIdx>, c: EdgeColor) -> Option<VertexIdx> {
        v.and_then(|v| self.d.graph.succ(v, c))
    }

    fn back(&self, v: Option<VertexIdx>, c: EdgeColor) -> Option<VertexIdx> {
        v.and_then(|v| self.d.graph.pred(v, c))
    }

    fn ox(&self, v: Option<VertexIdx>) -> bool {
        v.is_some_and(|v| self.d.is_otimes(v))
    }

    fn ordinary(&self, v: Option<VertexIdx>) -> bool {
        v.is_some_and(|v| !self.d.is_otimes(v))
    }

    fn id(&self, v: VertexIdx) -> &str {
        self.d.graph.id(v)
    }

    /// `a`, `Ia`, `IIa`, `I(IIa) = II(Ia)` all exist.
    fn square_at(&self, a: Option<VertexIdx>) -> Option<[VertexIdx; 4]> {
        let a0 = a?;
        let b = self.fwd(a, I)?;
        let c = self.fwd(a, II)?;
        let d1 = self.fwd(Some(c), I)?;
        let d2 = self.fwd(Some(b), II)?;
        (d1 == d2).then_some([a0, b, c, d1])
    }

    /// The small Verma configuration from `v1`, if it exists.
    fn verma_from(&self, v1: Option<VertexIdx>) -> Option<[VertexIdx; 8]> {
        let v1 = v1?;
        let v2 = self.fwd(Some(v1), I)?;
        let v3 = self.fwd(Some(v1), II)?;
        let v4 = self.fwd(Some(v2), II)?;
        let v5 = self.fwd(Some(v4), II)?;
        let v6 = self.fwd(Some(v3), I)?;
        let v7 = self.fwd(Some(v6), I)?;
        let v8 = self.fwd(Some(v5), I)?;
        if self.fwd(Some(v7), II) != Some(v8) || v4 == v6 {
            return None;
        }
        Some([v1, v2, v3, v4, v5, v6, v7, v8])
    }

    /// The configuration exists and its ⊗-vertices are exactly `v3`, `v5`.
    fn verma_ok(&self, v1: Option<VertexIdx>) -> bool {
        let Some(vs) = self.verma_from(v1) else {
            return false;
        };
        vs.iter()
            .enumerate()
            .all(|(k, &v)| self.d.is_otimes(v) == (k == 2 || k == 4))
    }
}

/// Evaluates the decorated-RA2 axioms and the derived ⊗-propagation rule.
pub fn check_axioms_a(d: &DecoratedGraph) -> Report {
    let g = &d.graph;
    let ops = Ops { d };
    let mut report = Report::new();

    let mut paths = Vec::new();
    for c in EdgeColor::BOTH {
        if let Err(e) = strings_of(g, c) {
            paths.push(format!("{} edges: {e}", c.roman()));
        }
    }
    report.push(AxiomResult::from_witnesses("A0(i)", paths));

    let adjacent: Vec<String> = g
        .edges()
        .iter()
        .enumerate()
        .filter(|(_, e)| d.is_otimes(e.src) && d.is_otimes(e.dst))
        .map(|(e, _)| roman_label(g, e))
        .collect();
    report.push(AxiomResult::from_witnesses("A0(ii)", adjacent));
    report.push(AxiomResult::vacuous(
        "A0(iii)",
        "finite strings have beginnings",
    ));
    report.push(AxiomResult::vacuous("A0(iv)", "finite strings have ends"));
    let connected = if g.is_empty() || g.is_weakly_connected() {
        Vec::new()
    } else {
        vec![format!(
            "{} of {} vertices reachable",
            g.weakly_reachable_count(),
            g.vertex_count()
        )]
    };
    report.push(AxiomResult::from_witnesses("A-connected", connected));

    let mut w: HashMap<&'static str, Vec<String>> = HashMap::new();
    let mut fail = |axiom: &'static str, msg: String| w.entry(axiom).or_default().push(msg);

    for v in g.vertices() {
        let sv = Some(v);
        let id = ops.id(v);
        let ox = d.is_otimes(v);
        if ox {
            if ops.fwd(sv, I).is_none() || ops.back(sv, II).is_none() {
                fail("A1", id.to_string());
            }
            if ops.back(sv, I).is_some() {
                let a = ops.back(ops.back(sv, II), I);
                let sq = ops.square_at(a);
                if sq.map(|s| s[3]) != sv || !ops.ox(a) {
                    fail("A2", id.to_string());
                }
            }
            if ops.fwd(sv, II).is_some() {
                let sq = ops.square_at(sv);
                if sq.is_none() || !ops.ox(sq.map(|s| s[3])) {
                    fail("A2'", id.to_string());
                }
            }
            if let Some(u) = ops.back(sv, I) {
                if ops.fwd(Some(u), II).is_some() || ops.fwd(sv, II).is_some() {
                    let sq = ops.square_at(Some(u));
                    if sq.map(|s| s[1]) != sv || !ops.ox(sq.map(|s| s[2])) {
                        fail("A3", format!("{} -I-> {id}", ops.id(u)));
                    }
                }
            }
            if let Some(wv) = ops.fwd(sv, II) {
                if ops.back(sv, I).is_some() || ops.back(Some(wv), I).is_some() {
                    let sq = ops.square_at(ops.back(sv, I));
                    if sq.map(|s| s[3]) != Some(wv) || !ops.ox(sq.map(|s| s[2])) {
                        fail("A3'", format!("{id} -II-> {}", ops.id(wv)));
                    }
                }
            }
            if let Some(wv) = ops.fwd(sv, I) {
                if ops.fwd(Some(wv), II).is_some() {
                    let sq = ops.square_at(sv);
                    if sq.is_none() || !ops.ox(sq.map(|s| s[3])) {
                        fail("A4", format!("{id} -I-> {}", ops.id(wv)));
                    }
                }
            }
            if let Some(u) = ops.back(sv, II) {
                if ops.back(Some(u), I).is_some() {
                    let a = ops.back(Some(u), I);
                    let sq = ops.square_at(a);
                    if sq.map(|s| s[3]) != sv || !ops.ox(a) {
                        fail("A4'", format!("{} -II-> {id}", ops.id(u)));
                    }
                }
            }
            // ⊗ u with ordinary v = Iu, w = II^{-1}v.
            let v_ = ops.fwd(sv, I);
            let w_ = ops.back(v_, II);
            if ops.ordinary(v_) && ops.ordinary(w_) {
                let v1 = ops.back(ops.back(ops.back(sv, II), II), I);
                if !ops.verma_ok(v1)
                    || ops.verma_from(v1).map(|c| (c[4], c[6], c[7]))
                        != Some((v, w_.unwrap(), v_.unwrap()))
                {
                    fail("A7'", id.to_string());
                }
            }
            // ⊗ u with ordinary v = Iu, w = Iv.
            let w_ = ops.fwd(v_, I);
            if ops.ordinary(v_) && ops.ordinary(w_) {
                let v1 = ops.back(sv, II);
                if !ops.verma_ok(v1)
                    || ops.verma_from(v1).map(|c| (c[2], c[5], c[6]))
                        != Some((v, v_.unwrap(), w_.unwrap()))
                {
                    fail("A8", id.to_string());
                }
            }
            // ⊗ w with ordinary v = II^{-1}w, u = II^{-1}v.
            let v_ = ops.back(sv, II);
            let u_ = ops.back(v_, II);
            if ops.ordinary(v_) && ops.ordinary(u_) {
                let v1 = ops.back(u_, I);
                if !ops.verma_ok(v1)
                    || ops.verma_from(v1).map(|c| (c[1], c[3], c[4]))
                        != Some((u_.unwrap(), v_.unwrap(), v))
                {
                    fail("A8'", id.to_string());
                }
            }
            let grand = ops.back(ops.back(sv, I), I);
            if grand.is_some() && !ops.ox(grand) {
                fail("A9", id.to_string());
            }
            let grand = ops.fwd(ops.fwd(sv, II), II);
            if grand.is_some() && !ops.ox(grand) {
                fail("A9'", id.to_string());
            }
        } else {
            let v_ = ops.fwd(sv, I);
            let w_ = ops.fwd(sv, II);
            if ops.ordinary(v_)
                && ops.ox(w_)
                && (!ops.verma_ok(sv)
                    || ops.verma_from(sv).map(|c| (c[1], c[2])) != Some((v_.unwrap(), w_.unwrap())))
            {
                fail("A7", id.to_string());
            }
        }
    }

    for (e, edge) in g.edges().iter().enumerate() {
        let (u, v) = (Some(edge.src), Some(edge.dst));
        if !(ops.ordinary(u) && ops.ordinary(v)) {
            continue;
        }
        let label = roman_label(g, e);
        match edge.color {
            EdgeColor::One => {
                if !ops.ordinary(ops.fwd(v, II)) {
                    fail("A5", label.clone());
                }
                if ops.back(u, II).is_some() || ops.back(v, II).is_some() {
                    let a = ops.back(u, II);
                    let sq = ops.square_at(a);
                    let ok = sq.is_some_and(|s| {
                        s[2] == edge.src && s[3] == edge.dst && s.iter().all(|&x| !d.is_otimes(x))
                    });
                    if !ok {
                        fail("A6", label);
                    }
                }
            }
            EdgeColor::Two => {
                if !ops.ordinary(ops.back(u, I)) {
                    fail("A5'", label.clone());
                }
                if ops.fwd(u, I).is_some() || ops.fwd(v, I).is_some() {
                    let sq = ops.square_at(u);
                    let ok =
                        sq.is_some_and(|s| s[2] == edge.dst && s.iter().all(|&x| !d.is_otimes(x)));
                    if !ok {
                        fail("A6'", label);
                    }
                }
            }
        }
    }

    for axiom in [
        "A1", "A2", "A2'", "A3", "A3'", "A4", "A4'", "A5", "A5'", "A6", "A6'", "A7", "A7'", "A8",
        "A8'",
    ] {
        report.push(AxiomResult::from_witnesses(
            axiom,
            w.remove(axiom).unwrap_or_default(),
        ));
    }
    for axiom in ["A9", "A9'"] {
        report.push(
            AxiomResult::from_witnesses(axiom, w.remove(axiom).unwrap_or_default())
                .with_note("derived from A0-A8"),
        );
    }
    report
}

fn roman_label(g: &ColoredDigraph, e: usize) -> String {
    let edge = g.edge(e);
    format!(
        "{} -{}-> {}",
        g.id(edge.src),
        edge.color.roman(),
        g.id(edge.dst)
    )
}

/// Looks up a vertex of a decorated graph by coordinates.
pub fn vertex_at(d: &DecoratedGraph, c: CrystalCoords) -> Result<VertexIdx> {
    d.graph
        .vertex(&c.to_string())
        .ok_or_else(|| Error::UnknownVertex(c.to_string()))
}
