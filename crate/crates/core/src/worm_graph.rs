//! Restricted worm graphs `W(a1,b1;a2,b2)` and the interval model of their
//! central graphs.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;

use crate::a2::DecoratedGraph;
use crate::error::{Error, Result};
use crate::graph::{ColoredDigraph, EdgeColor};
use crate::worm::WormState;

/// The rectangle `[2 a1, 2 b1] x [a2, b2]` confining the worm segments.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct WormBox {
    pub a1: i64,
    pub b1: i64,
    pub a2: i64,
    pub b2: i64,
}

impl WormBox {
    pub fn new(a1: i64, b1: i64, a2: i64, b2: i64) -> Self {
        assert!(a1 <= b1 && a2 <= b2, "empty box ({a1},{b1};{a2},{b2})");
        WormBox { a1, b1, a2, b2 }
    }

    /// The box of `W(a,b)`.
    pub fn ab(a: i64, b: i64) -> Self {
        WormBox::new(0, a, 0, b)
    }

    pub fn contains(&self, w: &WormState) -> bool {
        let xs = (2 * self.a1)..=(2 * self.b1);
        let ys = self.a2..=self.b2;
        xs.contains(&w.x_lo) && xs.contains(&w.x_hi) && ys.contains(&w.y_lo) && ys.contains(&w.y_hi)
    }

    pub fn contains_point(&self, (x, y): (i64, i64)) -> bool {
        (2 * self.a1..=2 * self.b1).contains(&x) && (self.a2..=self.b2).contains(&y)
    }

    pub fn shifted(&self, dx: i64, dy: i64) -> Self {
        WormBox::new(self.a1 + dx, self.b1 + dx, self.a2 + dy, self.b2 + dy)
    }
}

impl fmt::Display for WormBox {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "W({},{};{},{})", self.a1, self.b1, self.a2, self.b2)
    }
}

/// All admissible worms in the box, sorted by their literal tuple.
pub fn enumerate_admissible(bx: &WormBox) -> Vec<WormState> {
    let mut out = Vec::new();
    let (x_min, x_max) = (2 * bx.a1, 2 * bx.b1);
    let first_even = x_min + x_min.rem_euclid(2);
    for x_lo in (first_even..=x_max).step_by(2) {
        for y in bx.a2..=bx.b2 {
            for x_hi in (x_lo..=x_max).step_by(2) {
                for y_lo in bx.a2..=y {
                    for x in x_lo..=x_hi {
                        // y > y' forces x = x'.
                        if y > y_lo && x != x_lo {
                            continue;
                        }
                        for y_hi in y..=bx.b2 {
                            // y'' > y forces x'' = x.
                            if y_hi > y && x_hi != x {
                                break;
                            }
                            out.push(WormState::new(x_lo, y, x_hi, y_lo, x, y_hi));
                        }
                    }
                }
            }
        }
    }
    debug_assert!(out.iter().all(WormState::is_admissible));
    out
}

/// Closed-form size of `W(a,b)`.
pub fn w_vertex_count(a: i64, b: i64) -> i64 {
    (a + 1) * (b + 1) * (a + b + 2) * (2 * a + b + 3) / 6
}

/// Materializes the worm graph of a box. Vertex ids are worm literals.
pub fn build_w(bx: &WormBox) -> ColoredDigraph {
    let worms = enumerate_admissible(bx);
    let mut g = ColoredDigraph::new();
    let mut index = HashMap::with_capacity(worms.len());
    for w in &worms {
        let v = g.add_vertex(w.to_string(), w.center_role().central_vertex);
        index.insert(*w, v);
    }
    for w in &worms {
        let u = index[w];
        for color in EdgeColor::BOTH {
            let next = w.apply(color);
            if !bx.contains(&next) {
                continue;
            }
            let central = color == EdgeColor::One && w.center_role().central_edge_begin;
            g.add_edge(u, index[&next], color, central);
        }
    }
    g
}

pub fn build_w_ab(a: i64, b: i64) -> ColoredDigraph {
    build_w(&WormBox::ab(a, b))
}

/// Whether every vertex of `g` is reachable from `origin` along edges.
pub fn reachability_check(g: &ColoredDigraph, origin: &WormState) -> bool {
    let Some(start) = g.vertex(&origin.to_string()) else {
        return false;
    };
    let mut seen = vec![false; g.vertex_count()];
    seen[start] = true;
    let mut queue = VecDeque::from([start]);
    let mut count = 1;
    while let Some(v) = queue.pop_front() {
        for c in EdgeColor::BOTH {
            if let Some(w) = g.succ(v, c) {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
    }
    count == g.vertex_count()
}

/// The sink `(2a, b, 2a; b, 2a, b)` of `W(a,b)`.
pub fn sink_of(a: i64, b: i64) -> WormState {
    WormState::principal(2 * a, b)
}

/// A vertex of the interval model: the segment `[u, v]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntervalVertex {
    pub u: (i64, i64),
    pub v: (i64, i64),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Orientation {
    Horizontal,
    Vertical,
    Degenerate,
}

impl IntervalVertex {
    pub fn new(u: (i64, i64), v: (i64, i64)) -> Self {
        assert!(
            (u.0 == v.0 && u.1 <= v.1) || (u.1 == v.1 && u.0 <= v.0),
            "not an axis-parallel interval: {u:?} {v:?}"
        );
        IntervalVertex { u, v }
    }

    pub fn orientation(&self) -> Orientation {
        if self.u == self.v {
            Orientation::Degenerate
        } else if self.u.1 == self.v.1 {
            Orientation::Horizontal
        } else {
            Orientation::Vertical
        }
    }

    /// Odd intervals are vertical with odd length; they are the ⊗-vertices.
    pub fn is_odd(&self) -> bool {
        self.orientation() == Orientation::Vertical && (self.v.1 - self.u.1) % 2 != 0
    }

    /// Image under operator I, ignoring the box.
    pub fn op_i(&self) -> IntervalVertex {
        let (u, v) = (self.u, self.v);
        match self.orientation() {
            Orientation::Horizontal | Orientation::Degenerate => {
                IntervalVertex::new(u, (v.0 + 2, v.1))
            }
            Orientation::Vertical => IntervalVertex::new((u.0, u.1 + 1), v),
        }
    }

    /// Image under operator II, ignoring the box.
    pub fn op_ii(&self) -> IntervalVertex {
        let (u, v) = (self.u, self.v);
        match self.orientation() {
            Orientation::Horizontal => IntervalVertex::new((u.0 + 2, u.1), v),
            Orientation::Vertical | Orientation::Degenerate => {
                IntervalVertex::new(u, (v.0, v.1 + 1))
            }
        }
    }

    /// The worm-graph element this interval stands for: the central worm for
    /// an even interval, the beginning of the central edge for an odd one.
    pub fn worm(&self) -> WormState {
        let ((x0, y0), (x1, y1)) = (self.u, self.v);
        match self.orientation() {
            Orientation::Degenerate => WormState::principal(x0, y0),
            Orientation::Horizontal => WormState::new(x0, y0, x1, y0, (x0 + x1) / 2, y0),
            Orientation::Vertical => {
                let below = (y1 - y0) / 2;
                WormState::new(x0, y0 + below, x0, y0, x0, y1)
            }
        }
    }

    /// Vertex id matching the extracted central graph of the worm graph.
    pub fn id(&self) -> String {
        let w = self.worm();
        if self.is_odd() {
            format!("mid({},{})", w, w.apply1())
        } else {
            w.to_string()
        }
    }
}

impl fmt::Display for IntervalVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[({},{}),({},{})]",
            self.u.0, self.u.1, self.v.0, self.v.1
        )
    }
}

/// The interval assigned to a central vertex or central-edge beginning.
fn interval_of(w: &WormState) -> Option<IntervalVertex> {
    let role = w.center_role();
    if w.is_v() && (role.central_vertex || role.central_edge_begin) {
        Some(IntervalVertex::new((w.x, w.y_lo), (w.x, w.y_hi)))
    } else if w.is_h() && role.central_vertex {
        Some(IntervalVertex::new((w.x_lo, w.y), (w.x_hi, w.y)))
    } else {
        None
    }
}

/// Bounding box of the worms naming the vertices of `g`.
fn box_of(g: &ColoredDigraph) -> Result<WormBox> {
    let mut bounds: Option<(i64, i64, i64, i64)> = None;
    for v in g.vertices() {
        let w: WormState = g.id(v).parse()?;
        let b = bounds.get_or_insert((w.x_lo, w.x_hi, w.y_lo, w.y_hi));
        b.0 = b.0.min(w.x_lo);
        b.1 = b.1.max(w.x_hi);
        b.2 = b.2.min(w.y_lo);
        b.3 = b.3.max(w.y_hi);
    }
    let (x0, x1, y0, y1) =
        bounds.ok_or_else(|| Error::IntervalModel("graph has no vertices".into()))?;
    if x0 % 2 != 0 || x1 % 2 != 0 {
        return Err(Error::IntervalModel("odd horizontal bounds".into()));
    }
    Ok(WormBox::new(x0 / 2, x1 / 2, y0, y1))
}

/// All intervals of the box: points, horizontal segments with even ends,
/// vertical segments at even abscissa.
fn all_intervals(bx: &WormBox) -> Vec<IntervalVertex> {
    let mut out = Vec::new();
    for x in (2 * bx.a1..=2 * bx.b1).step_by(2) {
        for y in bx.a2..=bx.b2 {
            for x1 in (x..=2 * bx.b1).step_by(2) {
                out.push(IntervalVertex::new((x, y), (x1, y)));
            }
            for y1 in (y + 1)..=bx.b2 {
                out.push(IntervalVertex::new((x, y), (x, y1)));
            }
        }
    }
    out
}

/// Builds the central graph of a worm graph directly from the interval rules.
///
/// The vertex set is read off the central marks of `g` and must coincide
/// with the set of all intervals of the bounding box; edges come only from
/// the interval rules, never from `g`'s edges.
pub fn interval_model_central_graph(g: &ColoredDigraph) -> Result<DecoratedGraph> {
    let bx = box_of(g)?;
    let mut from_marks = BTreeMap::new();
    for v in g.vertices() {
        let w: WormState = g.id(v).parse()?;
        let role = w.center_role();
        let begins_central_edge = g
            .out_edge(v, EdgeColor::One)
            .is_some_and(|e| g.edge(e).central);
        if !(g.is_central(v) || begins_central_edge) {
            continue;
        }
        if g.is_central(v) != role.central_vertex || begins_central_edge != role.central_edge_begin
        {
            return Err(Error::IntervalModel(format!(
                "central marks at {w} disagree with the worm geometry"
            )));
        }
        let j = interval_of(&w)
            .ok_or_else(|| Error::IntervalModel(format!("central element {w} has no interval")))?;
        if from_marks.insert(j, w).is_some() {
            return Err(Error::IntervalModel(format!("interval {j} assigned twice")));
        }
    }
    let mut intervals = all_intervals(&bx);
    intervals.sort();
    let marked: Vec<IntervalVertex> = from_marks.keys().copied().collect();
    if marked != intervals {
        let missing: Vec<String> = intervals
            .iter()
            .filter(|j| !from_marks.contains_key(j))
            .map(|j| j.to_string())
            .collect();
        return Err(Error::IntervalModel(format!(
            "central elements do not cover the intervals of {bx}; missing {missing:?}"
        )));
    }
    let mut out = ColoredDigraph::new();
    let mut index = HashMap::new();
    for j in &intervals {
        index.insert(*j, out.add_vertex(j.id(), j.is_odd()));
    }
    let inside = |j: &IntervalVertex| bx.contains_point(j.u) && bx.contains_point(j.v);
    for j in &intervals {
        for (color, image) in [(EdgeColor::One, j.op_i()), (EdgeColor::Two, j.op_ii())] {
            if inside(&image) {
                out.add_edge(index[j], index[&image], color, false);
            }
        }
    }
    Ok(DecoratedGraph::from_marked(out))
}
