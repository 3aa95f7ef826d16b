//! The B-axioms, the splitting of a graph into left and right components,
//! and extraction of the central graph.
//!
//! Dual axioms are evaluated by running the primal check on the reversed
//! graph: reversing every 1-string swaps left and right, and reversing
//! edges swaps entering and leaving, which is exactly the duality.

use std::collections::{BTreeMap, HashMap, HashSet};

use petgraph::unionfind::UnionFind;

use crate::a2::{check_axioms_a, DecoratedGraph};
use crate::error::{Error, Result};
use crate::graph::{strings_of, ColoredDigraph, EdgeColor, EdgeIdx, VertexIdx};
use crate::report::{AxiomResult, Report, Status};

const ONE: EdgeColor = EdgeColor::One;
const TWO: EdgeColor = EdgeColor::Two;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Position {
    Left,
    Central,
    Right,
}

/// Status of every vertex and edge relative to the central elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElementStatus {
    pub vertices: Vec<Position>,
    /// `None` for a 2-edge that is neither left nor right, or both.
    pub edges: Vec<Option<Position>>,
}

fn check_b0(g: &ColoredDigraph) -> AxiomResult {
    let mut witnesses = Vec::new();
    for v in g.vertices() {
        for c in EdgeColor::BOTH {
            if g.out_edges(v, c).len() > 1 {
                witnesses.push(format!("{}: several leaving {c}-edges", g.id(v)));
            }
            if g.in_edges(v, c).len() > 1 {
                witnesses.push(format!("{}: several entering {c}-edges", g.id(v)));
            }
        }
    }
    if let Err(v) = g.topological_order() {
        witnesses.push(format!("cycle through {}", g.id(v)));
    }
    if !g.is_empty() && !g.is_weakly_connected() {
        witnesses.push(format!(
            "not connected: {} of {} vertices reachable",
            g.weakly_reachable_count(),
            g.vertex_count()
        ));
    }
    AxiomResult::from_witnesses("B0", witnesses)
}

fn check_b1(g: &ColoredDigraph) -> AxiomResult {
    let mut witnesses: Vec<String> = g
        .edges()
        .iter()
        .enumerate()
        .filter(|(_, e)| e.central && e.color == TWO)
        .map(|(e, _)| format!("central mark on 2-edge {}", g.edge_label(e)))
        .collect();
    match strings_of(g, ONE) {
        Err(e) => witnesses.push(e.to_string()),
        Ok(strings) => {
            for s in strings {
                let vertices = s.vertices.iter().filter(|&&v| g.is_central(v)).count();
                let edges = s
                    .vertices
                    .iter()
                    .filter_map(|&v| g.out_edge(v, ONE))
                    .filter(|&e| g.edge(e).central)
                    .count();
                if vertices + edges != 1 {
                    witnesses.push(format!(
                        "1-string from {} has {} central elements",
                        g.id(s.vertices[0]),
                        vertices + edges
                    ));
                }
            }
        }
    }
    AxiomResult::from_witnesses("B1", witnesses)
}

/// Classifies vertices and edges. Fails with the B0/B1 report when those
/// axioms do not hold.
pub fn classify_status(g: &ColoredDigraph) -> std::result::Result<ElementStatus, Report> {
    let b0 = check_b0(g);
    let b1 = check_b1(g);
    if b0.status == Status::Fail || b1.status == Status::Fail {
        return Err(Report {
            results: vec![b0, b1],
        });
    }
    let strings = strings_of(g, ONE).expect("B0 holds");
    let mut vertices = vec![Position::Central; g.vertex_count()];
    for s in strings {
        // Doubled position of the center: 2k for a vertex, 2k+1 for an edge.
        let center = s
            .vertices
            .iter()
            .enumerate()
            .find_map(|(k, &v)| {
                if g.is_central(v) {
                    Some(2 * k)
                } else if g.out_edge(v, ONE).is_some_and(|e| g.edge(e).central) {
                    Some(2 * k + 1)
                } else {
                    None
                }
            })
            .expect("B1 holds");
        for (k, &v) in s.vertices.iter().enumerate() {
            vertices[v] = match (2 * k).cmp(&center) {
                std::cmp::Ordering::Less => Position::Left,
                std::cmp::Ordering::Equal => Position::Central,
                std::cmp::Ordering::Greater => Position::Right,
            };
        }
    }
    let edges = g
        .edges()
        .iter()
        .map(|e| {
            let (u, v) = (vertices[e.src], vertices[e.dst]);
            match e.color {
                EdgeColor::One if e.central => Some(Position::Central),
                EdgeColor::One if u == Position::Left => Some(Position::Left),
                EdgeColor::One if v == Position::Right => Some(Position::Right),
                EdgeColor::One => None,
                EdgeColor::Two => match (u == Position::Right, v == Position::Left) {
                    (false, true) => Some(Position::Left),
                    (true, false) => Some(Position::Right),
                    _ => None,
                },
            }
        })
        .collect();
    Ok(ElementStatus { vertices, edges })
}

fn check_b2(g: &ColoredDigraph, st: &ElementStatus) -> AxiomResult {
    let mut witnesses = Vec::new();
    match strings_of(g, TWO) {
        Err(e) => witnesses.push(e.to_string()),
        Ok(strings) => {
            for s in strings {
                let centers: Vec<usize> = s
                    .vertices
                    .iter()
                    .enumerate()
                    .filter(|(_, &v)| g.is_central(v))
                    .map(|(k, _)| k)
                    .collect();
                let [c] = centers.as_slice() else {
                    witnesses.push(format!(
                        "2-string from {} has {} central vertices",
                        g.id(s.vertices[0]),
                        centers.len()
                    ));
                    continue;
                };
                for (k, &v) in s.vertices.iter().enumerate() {
                    let want = match k.cmp(c) {
                        std::cmp::Ordering::Less => Position::Right,
                        std::cmp::Ordering::Equal => continue,
                        std::cmp::Ordering::Greater => Position::Left,
                    };
                    if st.vertices[v] != want {
                        witnesses.push(format!("{} should be {want:?} on its 2-string", g.id(v)));
                    }
                }
            }
        }
    }
    AxiomResult::from_witnesses("B2", witnesses)
}

/// B3, B4 and the corollaries, for `g` itself; applied to the reversed graph
/// they give the dual statements.
fn local_checks(g: &ColoredDigraph, st: &ElementStatus, prime: &str) -> Vec<AxiomResult> {
    let s = |v: Option<VertexIdx>, c| v.and_then(|v| g.succ(v, c));
    let p = |v: Option<VertexIdx>, c| v.and_then(|v| g.pred(v, c));
    let central_vertex = |v: Option<VertexIdx>| v.is_some_and(|v| g.is_central(v));
    let begins_central = |v: Option<VertexIdx>| {
        v.and_then(|v| g.out_edge(v, ONE))
            .is_some_and(|e| g.edge(e).central)
    };
    let edge_status = |e: Option<EdgeIdx>| e.and_then(|e| st.edges[e]);
    let mut b3i = Vec::new();
    let mut b3ii = Vec::new();
    let mut b4 = Vec::new();
    let mut entry = Vec::new();
    let mut ends = Vec::new();
    let mut square = Vec::new();
    for (e, edge) in g.edges().iter().enumerate() {
        let (u, v) = (Some(edge.src), Some(edge.dst));
        let label = || g.edge_label(e);
        match (edge.color, st.edges[e]) {
            (EdgeColor::One, Some(Position::Left))
                if s(u, TWO).is_some() || s(v, TWO).is_some() =>
            {
                let top = s(s(u, TWO), ONE);
                if top.is_none() || top != s(v, TWO) {
                    b3i.push(label());
                }
            }
            (EdgeColor::Two, Some(Position::Left))
                if p(u, ONE).is_some() || p(v, ONE).is_some() =>
            {
                let side = s(p(u, ONE), TWO);
                if side.is_none() || side != p(v, ONE) {
                    b3ii.push(label());
                }
            }
            _ => {}
        }
        if edge.color == ONE && edge.central {
            let w = s(u, TWO);
            let v4 = s(s(w, ONE), TWO);
            if v4.is_some() && !begins_central(v4) {
                b4.push(label());
            }
            if !central_vertex(p(u, TWO)) || !central_vertex(s(v, TWO)) {
                ends.push(label());
            }
            if w.is_some() && !central_vertex(s(w, ONE)) {
                square.push(label());
            }
        }
        match (edge.color, st.edges[e]) {
            (EdgeColor::One, Some(Position::Left | Position::Central)) => {
                let below = u.and_then(|u| g.in_edge(u, TWO));
                if edge_status(below) != Some(Position::Left) {
                    entry.push(label());
                }
            }
            (EdgeColor::Two, Some(Position::Left)) => {
                let next = v.and_then(|v| g.out_edge(v, ONE));
                if !matches!(edge_status(next), Some(Position::Left | Position::Central)) {
                    entry.push(label());
                }
            }
            _ => {}
        }
    }
    vec![
        AxiomResult::from_witnesses(format!("B3{prime}(i)"), b3i),
        AxiomResult::from_witnesses(format!("B3{prime}(ii)"), b3ii),
        AxiomResult::from_witnesses(format!("B4{prime}"), b4),
        AxiomResult::from_witnesses(format!("corollary{prime}:left-entry"), entry)
            .with_note("derived"),
        AxiomResult::from_witnesses(format!("corollary{prime}:central-edge-ends"), ends)
            .with_note("derived"),
        AxiomResult::from_witnesses(format!("corollary{prime}:central-edge-square"), square)
            .with_note("derived"),
    ]
}

const LOCAL_NAMES: [&str; 6] = [
    "B3(i)",
    "B3(ii)",
    "B4",
    "corollary:left-entry",
    "corollary:central-edge-ends",
    "corollary:central-edge-square",
];

/// Axioms B0 to B4, the duals of B3 and B4, and the derived corollaries.
pub fn check_axioms_b(g: &ColoredDigraph) -> Report {
    let mut report = Report::new();
    let st = match classify_status(g) {
        Ok(st) => st,
        Err(pre) => {
            report.merge(pre);
            report.push(AxiomResult::skipped("B2", "B0 or B1 failed"));
            for name in LOCAL_NAMES {
                report.push(AxiomResult::skipped(name, "B0 or B1 failed"));
            }
            return report;
        }
    };
    report.push(check_b0(g));
    report.push(check_b1(g));
    report.push(check_b2(g, &st));
    for r in local_checks(g, &st, "") {
        report.push(r);
    }
    let dual = g.reversed();
    let dual_st = classify_status(&dual).expect("B0 and B1 are self-dual");
    for r in local_checks(&dual, &dual_st, "'") {
        report.push(r);
    }
    report
}

/// A node of the split graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SplitNode {
    /// A non-central vertex, unchanged.
    Plain(VertexIdx),
    /// The copy of a central vertex keeping its entering 1-edge and leaving
    /// 2-edge.
    LeftCopy(VertexIdx),
    /// The copy keeping the leaving 1-edge and entering 2-edge.
    RightCopy(VertexIdx),
    /// End of the left half of a central edge.
    MidLeft(EdgeIdx),
    /// Start of the right half of a central edge.
    MidRight(EdgeIdx),
}

/// A point of a diagonal: a central vertex or the midpoint of a central edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CentralPoint {
    Vertex(VertexIdx),
    Mid(EdgeIdx),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ComponentSide {
    Left,
    Right,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitComponent {
    pub side: ComponentSide,
    pub nodes: Vec<SplitNode>,
    /// Edges of `g` lying in the component; a central edge appears in both
    /// components holding one of its halves.
    pub edges: Vec<EdgeIdx>,
    pub diagonal: Vec<CentralPoint>,
}

impl SplitComponent {
    pub fn central_points(&self) -> Vec<CentralPoint> {
        self.nodes
            .iter()
            .filter_map(|n| match (self.side, *n) {
                (ComponentSide::Left, SplitNode::LeftCopy(v))
                | (ComponentSide::Right, SplitNode::RightCopy(v)) => Some(CentralPoint::Vertex(v)),
                (ComponentSide::Left, SplitNode::MidLeft(e))
                | (ComponentSide::Right, SplitNode::MidRight(e)) => Some(CentralPoint::Mid(e)),
                _ => None,
            })
            .collect()
    }
}

fn source_node(g: &ColoredDigraph, v: VertexIdx, c: EdgeColor) -> SplitNode {
    match (g.is_central(v), c) {
        (false, _) => SplitNode::Plain(v),
        (true, EdgeColor::Two) => SplitNode::LeftCopy(v),
        (true, EdgeColor::One) => SplitNode::RightCopy(v),
    }
}

fn target_node(g: &ColoredDigraph, v: VertexIdx, c: EdgeColor) -> SplitNode {
    match (g.is_central(v), c) {
        (false, _) => SplitNode::Plain(v),
        (true, EdgeColor::One) => SplitNode::LeftCopy(v),
        (true, EdgeColor::Two) => SplitNode::RightCopy(v),
    }
}

/// Cuts `g` at its central elements and returns the left and right
/// components with their diagonals.
pub fn split_graph(g: &ColoredDigraph) -> Result<Vec<SplitComponent>> {
    let st = classify_status(g)
        .map_err(|r| Error::Diagonal(format!("B0/B1 fail: {}", r.to_string().trim())))?;
    let mut nodes = Vec::new();
    for v in g.vertices() {
        if g.is_central(v) {
            nodes.push(SplitNode::LeftCopy(v));
            nodes.push(SplitNode::RightCopy(v));
        } else {
            nodes.push(SplitNode::Plain(v));
        }
    }
    for e in g.central_edges() {
        nodes.push(SplitNode::MidLeft(e));
        nodes.push(SplitNode::MidRight(e));
    }
    let index: HashMap<SplitNode, usize> = nodes.iter().enumerate().map(|(k, n)| (*n, k)).collect();
    // (edge, piece endpoints, side of the piece)
    let mut pieces: Vec<(EdgeIdx, SplitNode, SplitNode, Option<Position>)> = Vec::new();
    for (e, edge) in g.edges().iter().enumerate() {
        let s = source_node(g, edge.src, edge.color);
        let t = target_node(g, edge.dst, edge.color);
        if edge.central {
            pieces.push((e, s, SplitNode::MidLeft(e), Some(Position::Left)));
            pieces.push((e, SplitNode::MidRight(e), t, Some(Position::Right)));
        } else {
            pieces.push((e, s, t, st.edges[e]));
        }
    }
    let mut uf = UnionFind::<usize>::new(nodes.len());
    for (_, s, t, _) in &pieces {
        uf.union(index[s], index[t]);
    }
    // Per component: nodes, edges, and the sides of its edges.
    type Group = (Vec<SplitNode>, Vec<EdgeIdx>, HashSet<Option<Position>>);
    let mut groups: BTreeMap<usize, Group> = BTreeMap::new();
    for (k, n) in nodes.iter().enumerate() {
        groups.entry(uf.find(k)).or_default().0.push(*n);
    }
    for (e, s, _, pos) in &pieces {
        let group = groups.get_mut(&uf.find(index[s])).expect("node is grouped");
        group.1.push(*e);
        group.2.insert(*pos);
    }
    let mut out = Vec::new();
    for (_, (members, edges, sides)) in groups {
        let side = if sides.is_empty() {
            match members.as_slice() {
                [SplitNode::LeftCopy(_)] => ComponentSide::Left,
                [SplitNode::RightCopy(_)] => ComponentSide::Right,
                other => {
                    return Err(Error::Diagonal(format!(
                        "edgeless component {:?} is not a split central vertex",
                        other.iter().map(|n| node_label(g, n)).collect::<Vec<_>>()
                    )))
                }
            }
        } else if sides.len() == 1 && sides.contains(&Some(Position::Left)) {
            ComponentSide::Left
        } else if sides.len() == 1 && sides.contains(&Some(Position::Right)) {
            ComponentSide::Right
        } else {
            return Err(Error::Diagonal(format!(
                "component containing {} mixes left and right edges",
                node_label(g, &members[0])
            )));
        };
        let mut k = SplitComponent {
            side,
            nodes: members,
            edges,
            diagonal: Vec::new(),
        };
        k.diagonal = component_diagonal(g, &k)?;
        out.push(k);
    }
    Ok(out)
}

fn node_label(g: &ColoredDigraph, n: &SplitNode) -> String {
    match *n {
        SplitNode::Plain(v) => g.id(v).to_string(),
        SplitNode::LeftCopy(v) => format!("{}'", g.id(v)),
        SplitNode::RightCopy(v) => format!("{}''", g.id(v)),
        SplitNode::MidLeft(e) => format!("{}'", mid_id(g, e)),
        SplitNode::MidRight(e) => format!("{}''", mid_id(g, e)),
    }
}

/// Id of the midpoint of a central edge in the central graph.
pub fn mid_id(g: &ColoredDigraph, e: EdgeIdx) -> String {
    let edge = g.edge(e);
    format!("mid({},{})", g.id(edge.src), g.id(edge.dst))
}

pub fn point_id(g: &ColoredDigraph, p: CentralPoint) -> String {
    match p {
        CentralPoint::Vertex(v) => g.id(v).to_string(),
        CentralPoint::Mid(e) => mid_id(g, e),
    }
}

/// Next diagonal point of a left component.
fn left_successor(g: &ColoredDigraph, p: CentralPoint) -> Option<CentralPoint> {
    match p {
        CentralPoint::Vertex(v) => {
            let w = g.succ(v, TWO)?;
            let e = g.out_edge(w, ONE)?;
            if g.edge(e).central {
                Some(CentralPoint::Mid(e))
            } else {
                let next = g.edge(e).dst;
                g.is_central(next).then_some(CentralPoint::Vertex(next))
            }
        }
        CentralPoint::Mid(e) => {
            let x = g.edge(e).src;
            let next = g.succ(g.succ(x, TWO)?, ONE)?;
            g.is_central(next).then_some(CentralPoint::Vertex(next))
        }
    }
}

fn left_chain(g: &ColoredDigraph, points: &[CentralPoint]) -> Result<Vec<CentralPoint>> {
    let set: HashSet<CentralPoint> = points.iter().copied().collect();
    let mut next = HashMap::new();
    let mut has_pred = HashSet::new();
    for &p in points {
        if let Some(q) = left_successor(g, p).filter(|q| set.contains(q)) {
            if !has_pred.insert(q) {
                return Err(Error::Diagonal(format!(
                    "two diagonal points precede {}",
                    point_id(g, q)
                )));
            }
            next.insert(p, q);
        }
    }
    let starts: Vec<CentralPoint> = points
        .iter()
        .copied()
        .filter(|p| !has_pred.contains(p))
        .collect();
    let [start] = starts.as_slice() else {
        return Err(Error::Diagonal(format!(
            "diagonal has {} starting points: {:?}",
            starts.len(),
            starts.iter().map(|&p| point_id(g, p)).collect::<Vec<_>>()
        )));
    };
    let mut chain = vec![*start];
    while let Some(&q) = next.get(chain.last().expect("chain is non-empty")) {
        chain.push(q);
        if chain.len() > points.len() {
            return Err(Error::Diagonal("diagonal successors cycle".into()));
        }
    }
    if chain.len() != points.len() {
        return Err(Error::Diagonal(format!(
            "diagonal from {} covers {} of {} central points",
            point_id(g, *start),
            chain.len(),
            points.len()
        )));
    }
    Ok(chain)
}

/// The ordered diagonal of a component. Right components are handled as
/// left components of the reversed graph.
pub fn component_diagonal(g: &ColoredDigraph, k: &SplitComponent) -> Result<Vec<CentralPoint>> {
    let points = k.central_points();
    if points.is_empty() {
        return Err(Error::Diagonal(format!(
            "component containing {} has no central point",
            node_label(g, &k.nodes[0])
        )));
    }
    match k.side {
        ComponentSide::Left => left_chain(g, &points),
        ComponentSide::Right => {
            let mut chain = left_chain(&g.reversed(), &points)?;
            chain.reverse();
            Ok(chain)
        }
    }
}

/// The central graph: central points joined along the diagonals, II-edges
/// in left components and I-edges in right ones; midpoints are ⊗.
pub fn extract_central_graph(g: &ColoredDigraph) -> Result<DecoratedGraph> {
    let components = split_graph(g)?;
    let mut c = ColoredDigraph::new();
    let mut index = HashMap::new();
    for v in g.central_vertices() {
        index.insert(CentralPoint::Vertex(v), c.add_vertex(g.id(v), false));
    }
    for e in g.central_edges() {
        index.insert(CentralPoint::Mid(e), c.add_vertex(mid_id(g, e), true));
    }
    for k in &components {
        let color = match k.side {
            ComponentSide::Left => EdgeColor::Two,
            ComponentSide::Right => EdgeColor::One,
        };
        for pair in k.diagonal.windows(2) {
            let (s, t) = (index[&pair[0]], index[&pair[1]]);
            if c.find_edge(s, t, color).is_some() {
                return Err(Error::Diagonal(format!(
                    "parallel {} edges {} -> {}",
                    color.roman(),
                    c.id(s),
                    c.id(t)
                )));
            }
            c.add_edge(s, t, color, false);
        }
    }
    if !c.is_empty() && !c.is_weakly_connected() {
        return Err(Error::Diagonal("central graph is not connected".into()));
    }
    Ok(DecoratedGraph::from_marked(c))
}

/// Axiom BA: the central graph is a decorated RA2-graph.
pub fn check_ba(g: &ColoredDigraph) -> Report {
    let mut report = Report::new();
    match extract_central_graph(g) {
        Err(e) => report.push(AxiomResult::from_witnesses("BA", vec![e.to_string()])),
        Ok(c) => {
            let inner = check_axioms_a(&c);
            let failing: Vec<String> = inner.failures().map(|r| r.axiom.clone()).collect();
            report.push(
                AxiomResult::from_witnesses("BA", failing).with_note(format!(
                    "central graph: {} vertices, {} ⊗",
                    c.graph.vertex_count(),
                    c.otimes_vertices().len()
                )),
            );
            for mut r in inner.results {
                r.axiom = format!("BA/{}", r.axiom);
                report.push(r);
            }
        }
    }
    report
}

/// All B-axioms followed by BA.
pub fn verify(g: &ColoredDigraph) -> Report {
    let mut report = check_axioms_b(g);
    if report.passed() {
        report.merge(check_ba(g));
    } else {
        report.push(AxiomResult::skipped("BA", "B-axioms failed"));
    }
    report
}
