//! Finite 2-edge-colored digraphs with central marks.
//!
//! Every construction in this crate produces a [`ColoredDigraph`] and every
//! verifier consumes one. Vertices are addressed internally by dense indices;
//! the opaque string ids are what gets serialized and compared across
//! constructions.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type VertexIdx = usize;
pub type EdgeIdx = usize;

/// One of the two edge colors. For B-type graphs these are rendered `1`/`2`,
/// for decorated A-type graphs `I`/`II`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeColor {
    One,
    Two,
}

impl EdgeColor {
    pub const BOTH: [EdgeColor; 2] = [EdgeColor::One, EdgeColor::Two];

    pub fn other(self) -> EdgeColor {
        match self {
            EdgeColor::One => EdgeColor::Two,
            EdgeColor::Two => EdgeColor::One,
        }
    }

    pub fn index(self) -> usize {
        match self {
            EdgeColor::One => 0,
            EdgeColor::Two => 1,
        }
    }

    pub fn number(self) -> u8 {
        self.index() as u8 + 1
    }

    pub fn from_number(n: u64) -> Option<EdgeColor> {
        match n {
            1 => Some(EdgeColor::One),
            2 => Some(EdgeColor::Two),
            _ => None,
        }
    }

    /// Roman label used for A-type (decorated) graphs.
    pub fn roman(self) -> &'static str {
        match self {
            EdgeColor::One => "I",
            EdgeColor::Two => "II",
        }
    }
}

impl fmt::Display for EdgeColor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.number())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Edge {
    pub src: VertexIdx,
    pub dst: VertexIdx,
    pub color: EdgeColor,
    pub central: bool,
}

#[derive(Clone, Debug, Default)]
pub struct ColoredDigraph {
    ids: Vec<String>,
    index: HashMap<String, VertexIdx>,
    central: Vec<bool>,
    edges: Vec<Edge>,
    out_adj: Vec<[Vec<EdgeIdx>; 2]>,
    in_adj: Vec<[Vec<EdgeIdx>; 2]>,
}

impl ColoredDigraph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds a vertex, or returns the existing index if `id` is already present
    /// (in which case the central flag is OR-ed in).
    pub fn add_vertex(&mut self, id: impl Into<String>, central: bool) -> VertexIdx {
        let id = id.into();
        if let Some(&v) = self.index.get(&id) {
            self.central[v] |= central;
            return v;
        }
        let v = self.ids.len();
        self.index.insert(id.clone(), v);
        self.ids.push(id);
        self.central.push(central);
        self.out_adj.push([Vec::new(), Vec::new()]);
        self.in_adj.push([Vec::new(), Vec::new()]);
        v
    }

    /// Adds an edge. An identical (src, dst, color) edge is never duplicated;
    /// the existing index is returned instead.
    pub fn add_edge(
        &mut self,
        src: VertexIdx,
        dst: VertexIdx,
        color: EdgeColor,
        central: bool,
    ) -> EdgeIdx {
        if let Some(e) = self.find_edge(src, dst, color) {
            self.edges[e].central |= central;
            return e;
        }
        let e = self.edges.len();
        self.edges.push(Edge {
            src,
            dst,
            color,
            central,
        });
        self.out_adj[src][color.index()].push(e);
        self.in_adj[dst][color.index()].push(e);
        e
    }

    pub fn find_edge(&self, src: VertexIdx, dst: VertexIdx, color: EdgeColor) -> Option<EdgeIdx> {
        self.out_adj[src][color.index()]
            .iter()
            .copied()
            .find(|&e| self.edges[e].dst == dst)
    }

    pub fn vertex_count(&self) -> usize {
        self.ids.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn vertices(&self) -> std::ops::Range<VertexIdx> {
        0..self.ids.len()
    }

    pub fn id(&self, v: VertexIdx) -> &str {
        &self.ids[v]
    }

    pub fn vertex(&self, id: &str) -> Option<VertexIdx> {
        self.index.get(id).copied()
    }

    pub fn require_vertex(&self, id: &str) -> Result<VertexIdx> {
        self.vertex(id)
            .ok_or_else(|| Error::UnknownVertex(id.to_string()))
    }

    pub fn is_central(&self, v: VertexIdx) -> bool {
        self.central[v]
    }

    pub fn set_central(&mut self, v: VertexIdx, central: bool) {
        self.central[v] = central;
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, e: EdgeIdx) -> &Edge {
        &self.edges[e]
    }

    pub fn out_edges(&self, v: VertexIdx, c: EdgeColor) -> &[EdgeIdx] {
        &self.out_adj[v][c.index()]
    }

    pub fn in_edges(&self, v: VertexIdx, c: EdgeColor) -> &[EdgeIdx] {
        &self.in_adj[v][c.index()]
    }

    pub fn out_edge(&self, v: VertexIdx, c: EdgeColor) -> Option<EdgeIdx> {
        self.out_adj[v][c.index()].first().copied()
    }

    pub fn in_edge(&self, v: VertexIdx, c: EdgeColor) -> Option<EdgeIdx> {
        self.in_adj[v][c.index()].first().copied()
    }

    /// The operator `c` applied to `v`, when the leaving `c`-edge exists.
    pub fn succ(&self, v: VertexIdx, c: EdgeColor) -> Option<VertexIdx> {
        self.out_edge(v, c).map(|e| self.edges[e].dst)
    }

    /// The inverse operator `c⁻¹` applied to `v`.
    pub fn pred(&self, v: VertexIdx, c: EdgeColor) -> Option<VertexIdx> {
        self.in_edge(v, c).map(|e| self.edges[e].src)
    }

    pub fn in_degree(&self, v: VertexIdx) -> usize {
        self.in_adj[v][0].len() + self.in_adj[v][1].len()
    }

    pub fn out_degree(&self, v: VertexIdx) -> usize {
        self.out_adj[v][0].len() + self.out_adj[v][1].len()
    }

    pub fn central_vertices(&self) -> impl Iterator<Item = VertexIdx> + '_ {
        self.vertices().filter(|&v| self.central[v])
    }

    pub fn central_edges(&self) -> impl Iterator<Item = EdgeIdx> + '_ {
        (0..self.edges.len()).filter(|&e| self.edges[e].central)
    }

    pub fn sources(&self) -> Vec<VertexIdx> {
        self.vertices()
            .filter(|&v| self.in_degree(v) == 0)
            .collect()
    }

    pub fn sinks(&self) -> Vec<VertexIdx> {
        self.vertices()
            .filter(|&v| self.out_degree(v) == 0)
            .collect()
    }

    /// Human-readable edge label used in reports, e.g. `a -1-> b`.
    pub fn edge_label(&self, e: EdgeIdx) -> String {
        let edge = &self.edges[e];
        format!(
            "{} -{}-> {}",
            self.ids[edge.src], edge.color, self.ids[edge.dst]
        )
    }

    fn rebuild_adjacency(&mut self) {
        for adj in self.out_adj.iter_mut().chain(self.in_adj.iter_mut()) {
            adj[0].clear();
            adj[1].clear();
        }
        for (e, edge) in self.edges.iter().enumerate() {
            self.out_adj[edge.src][edge.color.index()].push(e);
            self.in_adj[edge.dst][edge.color.index()].push(e);
        }
    }

    pub fn remove_edge(&mut self, e: EdgeIdx) -> Edge {
        let removed = self.edges.remove(e);
        self.rebuild_adjacency();
        removed
    }

    pub fn set_edge_color(&mut self, e: EdgeIdx, color: EdgeColor) {
        self.edges[e].color = color;
        self.rebuild_adjacency();
    }

    pub fn set_edge_central(&mut self, e: EdgeIdx, central: bool) {
        self.edges[e].central = central;
    }

    /// The dual graph: every edge reversed, colors and central marks kept.
    pub fn reversed(&self) -> ColoredDigraph {
        let mut g = ColoredDigraph::new();
        for v in self.vertices() {
            g.add_vertex(self.ids[v].clone(), self.central[v]);
        }
        for edge in &self.edges {
            g.add_edge(edge.dst, edge.src, edge.color, edge.central);
        }
        g
    }

    /// First per-color degree violation (more than one entering or leaving
    /// edge of one color at a vertex), if any.
    pub fn degree_violation(&self) -> Option<Error> {
        for v in self.vertices() {
            for c in EdgeColor::BOTH {
                if self.out_adj[v][c.index()].len() > 1 {
                    return Some(Error::DegreeViolation {
                        vertex: self.ids[v].clone(),
                        color: c,
                        direction: "leaving",
                    });
                }
                if self.in_adj[v][c.index()].len() > 1 {
                    return Some(Error::DegreeViolation {
                        vertex: self.ids[v].clone(),
                        color: c,
                        direction: "entering",
                    });
                }
            }
        }
        None
    }

    pub fn check_degree_shape(&self) -> Result<()> {
        match self.degree_violation() {
            Some(err) => Err(err),
            None => Ok(()),
        }
    }

    /// Topological order, or the id of a vertex on a cycle.
    pub fn topological_order(&self) -> std::result::Result<Vec<VertexIdx>, VertexIdx> {
        let mut indeg: Vec<usize> = self.vertices().map(|v| self.in_degree(v)).collect();
        let mut queue: VecDeque<VertexIdx> = self.vertices().filter(|&v| indeg[v] == 0).collect();
        let mut order = Vec::with_capacity(self.vertex_count());
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for c in EdgeColor::BOTH {
                for &e in &self.out_adj[v][c.index()] {
                    let w = self.edges[e].dst;
                    indeg[w] -= 1;
                    if indeg[w] == 0 {
                        queue.push_back(w);
                    }
                }
            }
        }
        if order.len() == self.vertex_count() {
            Ok(order)
        } else {
            Err(self.vertices().find(|&v| indeg[v] > 0).unwrap_or(0))
        }
    }

    pub fn is_acyclic(&self) -> bool {
        self.topological_order().is_ok()
    }

    /// Number of vertices reachable from vertex 0 ignoring edge directions.
    pub fn weakly_reachable_count(&self) -> usize {
        if self.is_empty() {
            return 0;
        }
        let mut seen = vec![false; self.vertex_count()];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for c in EdgeColor::BOTH {
                let nbrs = self.out_adj[v][c.index()]
                    .iter()
                    .map(|&e| self.edges[e].dst)
                    .chain(self.in_adj[v][c.index()].iter().map(|&e| self.edges[e].src));
                for w in nbrs {
                    if !seen[w] {
                        seen[w] = true;
                        count += 1;
                        stack.push(w);
                    }
                }
            }
        }
        count
    }

    pub fn is_weakly_connected(&self) -> bool {
        self.weakly_reachable_count() == self.vertex_count()
    }

    /// Vertex ids in sorted order; used for deterministic output.
    pub fn sorted_vertices(&self) -> Vec<VertexIdx> {
        let mut vs: Vec<VertexIdx> = self.vertices().collect();
        vs.sort_by(|&a, &b| self.ids[a].cmp(&self.ids[b]));
        vs
    }

    /// Edges sorted by (src id, color, dst id).
    pub fn sorted_edges(&self) -> Vec<EdgeIdx> {
        let mut es: Vec<EdgeIdx> = (0..self.edges.len()).collect();
        es.sort_by(|&a, &b| {
            let ea = &self.edges[a];
            let eb = &self.edges[b];
            (&self.ids[ea.src], ea.color, &self.ids[ea.dst]).cmp(&(
                &self.ids[eb.src],
                eb.color,
                &self.ids[eb.dst],
            ))
        });
        es
    }
}

/// Two graphs are equal when they have the same vertex ids, the same central
/// marks and the same colored edges, regardless of insertion order.
impl PartialEq for ColoredDigraph {
    fn eq(&self, other: &Self) -> bool {
        if self.vertex_count() != other.vertex_count() || self.edge_count() != other.edge_count() {
            return false;
        }
        for v in self.vertices() {
            match other.vertex(&self.ids[v]) {
                Some(w) if other.central[w] == self.central[v] => {}
                _ => return false,
            }
        }
        self.edges.iter().all(|edge| {
            let src = other.index[&self.ids[edge.src]];
            let dst = other.index[&self.ids[edge.dst]];
            other
                .find_edge(src, dst, edge.color)
                .is_some_and(|e| other.edges[e].central == edge.central)
        })
    }
}

impl Eq for ColoredDigraph {}

/// A maximal monochromatic path.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StringPath {
    pub color: EdgeColor,
    pub vertices: Vec<VertexIdx>,
}

impl StringPath {
    /// Number of edges on the string.
    pub fn len(&self) -> usize {
        self.vertices.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

/// All `c`-strings of `g`, each listed from its first vertex.
pub fn strings_of(g: &ColoredDigraph, c: EdgeColor) -> Result<Vec<StringPath>> {
    for v in g.vertices() {
        if g.out_edges(v, c).len() > 1 {
            return Err(Error::DegreeViolation {
                vertex: g.id(v).to_string(),
                color: c,
                direction: "leaving",
            });
        }
        if g.in_edges(v, c).len() > 1 {
            return Err(Error::DegreeViolation {
                vertex: g.id(v).to_string(),
                color: c,
                direction: "entering",
            });
        }
    }
    let mut covered = vec![false; g.vertex_count()];
    let mut strings = Vec::new();
    for start in g.vertices().filter(|&v| g.pred(v, c).is_none()) {
        let mut vertices = vec![start];
        covered[start] = true;
        let mut cur = start;
        while let Some(next) = g.succ(cur, c) {
            covered[next] = true;
            vertices.push(next);
            cur = next;
        }
        strings.push(StringPath { color: c, vertices });
    }
    if let Some(v) = g.vertices().find(|&v| !covered[v]) {
        return Err(Error::Cyclic(g.id(v).to_string()));
    }
    Ok(strings)
}

/// `(t, h)`: number of `c`-edges before and after `v` on its `c`-string.
pub fn th_stats(g: &ColoredDigraph, v: VertexIdx, c: EdgeColor) -> (usize, usize) {
    let limit = g.vertex_count();
    let mut t = 0;
    let mut cur = v;
    while let Some(p) = g.pred(cur, c) {
        t += 1;
        cur = p;
        if t > limit {
            break;
        }
    }
    let mut h = 0;
    cur = v;
    while let Some(s) = g.succ(cur, c) {
        h += 1;
        cur = s;
        if h > limit {
            break;
        }
    }
    (t, h)
}

/// `(Δt, Δh)` of an edge measured on the strings of the other color.
pub fn edge_delta(g: &ColoredDigraph, e: EdgeIdx) -> (i64, i64) {
    let edge = g.edge(e);
    let other = edge.color.other();
    let (tu, hu) = th_stats(g, edge.src, other);
    let (tv, hv) = th_stats(g, edge.dst, other);
    (tv as i64 - tu as i64, hv as i64 - hu as i64)
}

/// Central elements recovered from the local commutation structure alone.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct InferredCentral {
    pub vertices: Vec<VertexIdx>,
    pub edges: Vec<EdgeIdx>,
}

/// Classifies central vertices and central 1-edges from the shape of `g`,
/// ignoring the stored marks.
///
/// A vertex is central when it carries neither the left pattern (leaving
/// 1-edge and entering 2-edge) nor the right pattern (entering 1-edge and
/// leaving 2-edge), or when the forward or backward operators fail to commute
/// at it. A 1-edge `(u, v)` is central when `u` has an entering 2-edge, `v` a
/// leaving 2-edge, and the edge completes a square with neither of them.
pub fn infer_central(g: &ColoredDigraph) -> InferredCentral {
    use EdgeColor::{One, Two};
    let compose = |v: VertexIdx, first: EdgeColor, second: EdgeColor| {
        g.succ(v, first).and_then(|w| g.succ(w, second))
    };
    let compose_back = |v: VertexIdx, first: EdgeColor, second: EdgeColor| {
        g.pred(v, first).and_then(|w| g.pred(w, second))
    };
    let mut vertices = Vec::new();
    for v in g.vertices() {
        let has_out = |c| g.succ(v, c).is_some();
        let has_in = |c| g.pred(v, c).is_some();
        let left_pattern = has_out(One) && has_in(Two);
        let right_pattern = has_in(One) && has_out(Two);
        let forward_clash =
            has_out(One) && has_out(Two) && compose(v, One, Two) != compose(v, Two, One);
        let backward_clash =
            has_in(One) && has_in(Two) && compose_back(v, One, Two) != compose_back(v, Two, One);
        if (!left_pattern && !right_pattern) || forward_clash || backward_clash {
            vertices.push(v);
        }
    }
    let mut edges = Vec::new();
    for (e, edge) in g.edges().iter().enumerate() {
        if edge.color != One {
            continue;
        }
        let (u, v) = (edge.src, edge.dst);
        let (Some(below), Some(above)) = (g.pred(u, Two), g.succ(v, Two)) else {
            continue;
        };
        let square_below = g
            .succ(below, One)
            .is_some_and(|w| g.succ(w, Two) == Some(v));
        let square_above = g
            .succ(u, Two)
            .is_some_and(|w| g.succ(w, One) == Some(above));
        if !square_below && !square_above {
            edges.push(e);
        }
    }
    InferredCentral { vertices, edges }
}

/// Result of [`interval`]: the subgraph plus a flag set when `y` is not
/// reachable from `x`.
#[derive(Clone, Debug)]
pub struct Interval {
    pub graph: ColoredDigraph,
    pub empty: bool,
}

/// The subgraph formed by all vertices and edges lying on directed paths
/// from `x` to `y`. Central marks are restricted to it.
pub fn interval(g: &ColoredDigraph, x: VertexIdx, y: VertexIdx) -> Interval {
    let forward = reach(g, x, true);
    let backward = reach(g, y, false);
    let inside: Vec<bool> = g.vertices().map(|v| forward[v] && backward[v]).collect();
    let mut sub = ColoredDigraph::new();
    if !inside[x] || !inside[y] {
        return Interval {
            graph: sub,
            empty: true,
        };
    }
    let mut map = vec![usize::MAX; g.vertex_count()];
    for v in g.vertices().filter(|&v| inside[v]) {
        map[v] = sub.add_vertex(g.id(v), g.is_central(v));
    }
    for edge in g.edges() {
        if inside[edge.src] && inside[edge.dst] {
            sub.add_edge(map[edge.src], map[edge.dst], edge.color, edge.central);
        }
    }
    Interval {
        graph: sub,
        empty: false,
    }
}

fn reach(g: &ColoredDigraph, start: VertexIdx, forward: bool) -> Vec<bool> {
    let mut seen = vec![false; g.vertex_count()];
    let mut stack = vec![start];
    seen[start] = true;
    while let Some(v) = stack.pop() {
        for c in EdgeColor::BOTH {
            let edges = if forward {
                g.out_edges(v, c)
            } else {
                g.in_edges(v, c)
            };
            for &e in edges {
                let w = if forward {
                    g.edge(e).dst
                } else {
                    g.edge(e).src
                };
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
    }
    seen
}

/// Canonical traversal transcript of a single-source graph with per-color
/// degree at most one. Discovery numbers are assigned breadth-first from the
/// source, exploring leaving 1, leaving 2, entering 1, entering 2 in that
/// order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Transcript {
    /// Vertex indices in discovery order.
    pub order: Vec<VertexIdx>,
    /// Per discovered vertex: discovery numbers of its four neighbors.
    pub neighbors: Vec<[Option<usize>; 4]>,
    /// Per discovered vertex: central mark of the vertex, then of its
    /// leaving 1- and 2-edges.
    pub marks: Vec<[bool; 3]>,
}

pub fn canonical_transcript(g: &ColoredDigraph) -> Result<Transcript> {
    g.check_degree_shape()?;
    let sources = g.sources();
    let source = match sources.as_slice() {
        [] => return Err(Error::NoSource),
        [s] => *s,
        many => {
            return Err(Error::MultipleSources(
                many.iter().map(|&v| g.id(v).to_string()).collect(),
            ))
        }
    };
    let mut number = vec![usize::MAX; g.vertex_count()];
    let mut order = vec![source];
    number[source] = 0;
    let mut neighbors = Vec::with_capacity(g.vertex_count());
    let mut marks = Vec::with_capacity(g.vertex_count());
    let mut head = 0;
    while head < order.len() {
        let v = order[head];
        head += 1;
        let slots = [
            g.succ(v, EdgeColor::One),
            g.succ(v, EdgeColor::Two),
            g.pred(v, EdgeColor::One),
            g.pred(v, EdgeColor::Two),
        ];
        let mut record = [None; 4];
        for (slot, w) in slots.into_iter().enumerate() {
            if let Some(w) = w {
                if number[w] == usize::MAX {
                    number[w] = order.len();
                    order.push(w);
                }
                record[slot] = Some(number[w]);
            }
        }
        neighbors.push(record);
        let edge_central = |c| g.out_edge(v, c).is_some_and(|e| g.edge(e).central);
        marks.push([
            g.is_central(v),
            edge_central(EdgeColor::One),
            edge_central(EdgeColor::Two),
        ]);
    }
    if order.len() != g.vertex_count() {
        return Err(Error::NotConnected {
            reached: order.len(),
            total: g.vertex_count(),
        });
    }
    Ok(Transcript {
        order,
        neighbors,
        marks,
    })
}

/// Decides isomorphism of two single-source graphs of the crystal class.
///
/// Returns the vertex bijection `(v in g1, v in g2)` on success. The
/// bijection is forced by the traversal, so transcript equality is both
/// necessary and sufficient.
pub fn is_isomorphic(
    g1: &ColoredDigraph,
    g2: &ColoredDigraph,
    respect_central: bool,
) -> Result<Option<Vec<(VertexIdx, VertexIdx)>>> {
    if g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count() {
        return Ok(None);
    }
    if g1.is_empty() {
        return Ok(Some(Vec::new()));
    }
    let t1 = canonical_transcript(g1)?;
    let t2 = canonical_transcript(g2)?;
    if t1.neighbors != t2.neighbors {
        return Ok(None);
    }
    if respect_central && t1.marks != t2.marks {
        return Ok(None);
    }
    Ok(Some(t1.order.into_iter().zip(t2.order).collect()))
}

pub const GRAPH_FORMAT: &str = "b2crystal-graph-v1";

#[derive(Serialize, Deserialize)]
struct GraphDoc {
    format: String,
    vertices: Vec<VertexDoc>,
    edges: Vec<EdgeDoc>,
}

#[derive(Serialize, Deserialize)]
struct VertexDoc {
    id: String,
    central: bool,
}

#[derive(Serialize, Deserialize)]
struct EdgeDoc {
    src: String,
    dst: String,
    color: u8,
    central: bool,
}

/// Serializes `g` as a `b2crystal-graph-v1` document: vertices sorted by id,
/// edges by (src, color, dst), two-space indentation, no trailing newline.
pub fn to_json(g: &ColoredDigraph) -> String {
    let doc = GraphDoc {
        format: GRAPH_FORMAT.to_string(),
        vertices: g
            .sorted_vertices()
            .into_iter()
            .map(|v| VertexDoc {
                id: g.id(v).to_string(),
                central: g.is_central(v),
            })
            .collect(),
        edges: g
            .sorted_edges()
            .into_iter()
            .map(|e| {
                let edge = g.edge(e);
                EdgeDoc {
                    src: g.id(edge.src).to_string(),
                    dst: g.id(edge.dst).to_string(),
                    color: edge.color.number(),
                    central: edge.central,
                }
            })
            .collect(),
    };
    serde_json::to_string_pretty(&doc).expect("graph document serializes")
}

fn parse_error(err: serde_json::Error) -> Error {
    Error::Parse {
        location: format!("line {}, column {}", err.line(), err.column()),
        message: err.to_string(),
    }
}

pub fn from_json(text: &str) -> Result<ColoredDigraph> {
    let doc: GraphDoc = serde_json::from_str(text).map_err(parse_error)?;
    if doc.format != GRAPH_FORMAT {
        return Err(Error::Parse {
            location: "format".into(),
            message: format!("expected {GRAPH_FORMAT:?}, found {:?}", doc.format),
        });
    }
    let mut g = ColoredDigraph::new();
    for (i, v) in doc.vertices.iter().enumerate() {
        if g.vertex(&v.id).is_some() {
            return Err(Error::Parse {
                location: format!("vertices[{i}]"),
                message: format!("duplicate vertex id {:?}", v.id),
            });
        }
        g.add_vertex(v.id.clone(), v.central);
    }
    for (i, e) in doc.edges.iter().enumerate() {
        let location = format!("edges[{i}]");
        let lookup = |id: &str| {
            g.vertex(id).ok_or_else(|| Error::Parse {
                location: location.clone(),
                message: format!("unknown vertex {id:?}"),
            })
        };
        let src = lookup(&e.src)?;
        let dst = lookup(&e.dst)?;
        let color = EdgeColor::from_number(e.color.into()).ok_or_else(|| Error::Parse {
            location: location.clone(),
            message: format!("color must be 1 or 2, found {}", e.color),
        })?;
        if e.central && color != EdgeColor::One {
            return Err(Error::Parse {
                location,
                message: "only 1-edges can be central".into(),
            });
        }
        if g.find_edge(src, dst, color).is_some() {
            return Err(Error::Parse {
                location,
                message: "multiple edge".into(),
            });
        }
        g.add_edge(src, dst, color, e.central);
    }
    Ok(g)
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Graphviz rendering. 1-edges blue, 2-edges red, central vertices drawn as
/// points and central edges with diamond arrowheads.
pub fn to_dot(g: &ColoredDigraph) -> String {
    let mut out = String::from("digraph crystal {\n");
    for v in g.sorted_vertices() {
        let shape = if g.is_central(v) {
            " shape=\"point\""
        } else {
            ""
        };
        out.push_str(&format!(
            "  \"{}\" [{}];\n",
            dot_escape(g.id(v)),
            shape.trim()
        ));
    }
    for e in g.sorted_edges() {
        let edge = g.edge(e);
        let color = match edge.color {
            EdgeColor::One => "blue",
            EdgeColor::Two => "red",
        };
        let arrow = if edge.central {
            " arrowhead=\"diamond\""
        } else {
            ""
        };
        out.push_str(&format!(
            "  \"{}\" -> \"{}\" [color=\"{}\"{}];\n",
            dot_escape(g.id(edge.src)),
            dot_escape(g.id(edge.dst)),
            color,
            arrow
        ));
    }
    out.push_str("}\n");
    out
}

/// Histogram helper used by reports and the CLI.
pub fn string_length_histogram(g: &ColoredDigraph, c: EdgeColor) -> Result<BTreeMap<usize, usize>> {
    let mut hist = BTreeMap::new();
    for s in strings_of(g, c)? {
        *hist.entry(s.len()).or_insert(0) += 1;
    }
    Ok(hist)
}
