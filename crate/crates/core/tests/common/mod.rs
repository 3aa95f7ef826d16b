//! Oracles shared by the integration tests. They work from raw adjacency
//! only, so they do not reuse the library's classification code.

#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};

use b2crystal::graph::{ColoredDigraph, EdgeColor};

pub const ONE: EdgeColor = EdgeColor::One;
pub const TWO: EdgeColor = EdgeColor::Two;

/// `(t, h)` on the `c`-string through `v`, by walking adjacency.
pub fn t_h(g: &ColoredDigraph, v: usize, c: EdgeColor) -> (i64, i64) {
    let mut t = 0;
    let mut cur = v;
    while let Some(p) = g.pred(cur, c) {
        t += 1;
        cur = p;
    }
    let mut h = 0;
    cur = v;
    while let Some(s) = g.succ(cur, c) {
        h += 1;
        cur = s;
    }
    (t, h)
}

pub fn delta(g: &ColoredDigraph, e: usize) -> (i64, i64) {
    let edge = g.edge(e);
    let o = edge.color.other();
    let (tu, hu) = t_h(g, edge.src, o);
    let (tv, hv) = t_h(g, edge.dst, o);
    (tv - tu, hv - hu)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pos {
    Left,
    Center,
    Right,
}

/// Position of every vertex on its 1-string relative to the marked center.
pub fn positions(g: &ColoredDigraph) -> Vec<Pos> {
    let mut out = vec![Pos::Center; g.vertex_count()];
    for start in g.vertices().filter(|&v| g.pred(v, ONE).is_none()) {
        let mut string = vec![start];
        while let Some(n) = g.succ(*string.last().unwrap(), ONE) {
            string.push(n);
        }
        let mut center2 = None;
        for (k, &v) in string.iter().enumerate() {
            if g.is_central(v) {
                center2 = Some(2 * k);
            }
            if let Some(e) = g.out_edge(v, ONE) {
                if g.edge(e).central {
                    center2 = Some(2 * k + 1);
                }
            }
        }
        let center2 = center2.expect("string has a center");
        for (k, &v) in string.iter().enumerate() {
            out[v] = if 2 * k < center2 {
                Pos::Left
            } else if 2 * k > center2 {
                Pos::Right
            } else {
                Pos::Center
            };
        }
    }
    out
}

/// A weight potential from a BFS over the undirected graph: a 1-edge adds
/// `(1,0)`, a 2-edge `(0,1)`. Returns `None` when some edge disagrees.
pub fn weight_potential(g: &ColoredDigraph) -> Option<Vec<(i64, i64)>> {
    let step = |c: EdgeColor| match c {
        EdgeColor::One => (1, 0),
        EdgeColor::Two => (0, 1),
    };
    let mut pot: Vec<Option<(i64, i64)>> = vec![None; g.vertex_count()];
    let mut queue = VecDeque::new();
    for root in g.vertices() {
        if pot[root].is_some() {
            continue;
        }
        pot[root] = Some((0, 0));
        queue.push_back(root);
        while let Some(v) = queue.pop_front() {
            let (x, y) = pot[v].unwrap();
            for c in EdgeColor::BOTH {
                let (dx, dy) = step(c);
                if let Some(w) = g.succ(v, c) {
                    if pot[w].is_none() {
                        pot[w] = Some((x + dx, y + dy));
                        queue.push_back(w);
                    }
                }
                if let Some(w) = g.pred(v, c) {
                    if pot[w].is_none() {
                        pot[w] = Some((x - dx, y - dy));
                        queue.push_back(w);
                    }
                }
            }
        }
    }
    let pot: Vec<(i64, i64)> = pot.into_iter().map(Option::unwrap).collect();
    g.edges()
        .iter()
        .all(|e| {
            let (dx, dy) = step(e.color);
            pot[e.dst] == (pot[e.src].0 + dx, pot[e.src].1 + dy)
        })
        .then_some(pot)
}

/// All source-to-sink color words, written as operator compositions (the
/// first edge is the rightmost letter).
pub fn operator_words(g: &ColoredDigraph, from: usize, to: usize) -> BTreeSet<String> {
    let mut out = BTreeSet::new();
    let mut stack = vec![(from, String::new())];
    while let Some((v, path)) = stack.pop() {
        if v == to {
            out.insert(path.chars().rev().collect());
            continue;
        }
        for c in EdgeColor::BOTH {
            if let Some(w) = g.succ(v, c) {
                stack.push((w, format!("{path}{c}")));
            }
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mutation {
    DeleteEdge(usize),
    FlipColor(usize),
    FlipVertexMark(usize),
    FlipEdgeMark(usize),
}

/// Every single-element mutation of `g`. Central marks are only flipped on
/// 1-edges, since 2-edges carry no mark in the input format.
pub fn all_mutations(g: &ColoredDigraph) -> Vec<Mutation> {
    let mut out = Vec::new();
    for e in 0..g.edge_count() {
        out.push(Mutation::DeleteEdge(e));
        out.push(Mutation::FlipColor(e));
        if g.edge(e).color == ONE {
            out.push(Mutation::FlipEdgeMark(e));
        }
    }
    out.extend(g.vertices().map(Mutation::FlipVertexMark));
    out
}

pub fn apply_mutation(g: &ColoredDigraph, m: Mutation) -> ColoredDigraph {
    let mut h = g.clone();
    match m {
        Mutation::DeleteEdge(e) => {
            h.remove_edge(e);
        }
        Mutation::FlipColor(e) => {
            let edge = *h.edge(e);
            h.set_edge_color(e, edge.color.other());
            if edge.central {
                h.set_edge_central(e, false);
            }
        }
        Mutation::FlipVertexMark(v) => {
            let c = h.is_central(v);
            h.set_central(v, !c);
        }
        Mutation::FlipEdgeMark(e) => {
            let c = h.edge(e).central;
            h.set_edge_central(e, !c);
        }
    }
    h
}

/// The same graph with vertices inserted in a different order and renamed.
pub fn relabeled(g: &ColoredDigraph, order: &[usize], prefix: &str) -> ColoredDigraph {
    let mut h = ColoredDigraph::new();
    let mut map = vec![usize::MAX; g.vertex_count()];
    for &v in order {
        map[v] = h.add_vertex(format!("{prefix}{}", g.id(v)), g.is_central(v));
    }
    let mut edges: Vec<_> = g.edges().to_vec();
    edges.reverse();
    for e in edges {
        h.add_edge(map[e.src], map[e.dst], e.color, e.central);
    }
    h
}

/// Vertices of W(a,b) found by breadth-first search from the origin worm,
/// following the operators and their inverses while staying in the box.
pub fn bfs_worm_count(a: i64, b: i64) -> usize {
    use b2crystal::worm::WormState;
    use b2crystal::worm_graph::WormBox;
    use std::collections::HashSet;
    let bx = WormBox::ab(a, b);
    let origin = WormState::principal(0, 0);
    let mut seen = HashSet::from([origin]);
    let mut queue = VecDeque::from([origin]);
    while let Some(w) = queue.pop_front() {
        for c in EdgeColor::BOTH {
            let mut next = vec![w.apply(c)];
            next.extend(
                w.inverse_candidates(c)
                    .into_iter()
                    .filter(|&(_, ok)| ok)
                    .map(|(u, _)| u),
            );
            for u in next {
                if bx.contains(&u) && seen.insert(u) {
                    queue.push_back(u);
                }
            }
        }
    }
    seen.len()
}
