//! B-sails and the construction of `S(a,b)` from `C(a,b)`.
//!
//! Every I- and II-string of `C(a,b)` is replaced by a right or left B-sail
//! glued along its diagonal side. Half-integer diagonal points land on the
//! ⊗-vertices of `C(a,b)`; the two half-edges meeting there are fused into a
//! central 1-edge and the ⊗-vertex disappears.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::a2::{build_c, c_coordinates, principal_i_string, principal_ii_string, CrystalCoords};
use crate::error::{Error, Result};
use crate::graph::{ColoredDigraph, EdgeColor};

/// A lattice point whose abscissa may be a half-integer; stored as `2x`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SailPoint {
    pub twice_x: i64,
    pub y: i64,
}

impl SailPoint {
    pub fn integer(x: i64, y: i64) -> Self {
        SailPoint { twice_x: 2 * x, y }
    }

    pub fn half(twice_x: i64, y: i64) -> Self {
        SailPoint { twice_x, y }
    }

    pub fn is_integer(&self) -> bool {
        self.twice_x % 2 == 0
    }

    /// The integer coordinates; panics on a half-integer point.
    pub fn lattice(&self) -> (i64, i64) {
        assert!(self.is_integer(), "{self} is not a lattice point");
        (self.twice_x / 2, self.y)
    }
}

impl fmt::Display for SailPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "({},{})", self.twice_x / 2, self.y)
        } else {
            let sign = if self.twice_x < 0 { "-" } else { "" };
            write!(f, "({sign}{}.5,{})", self.twice_x.abs() / 2, self.y)
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SailSide {
    Left,
    Right,
}

/// A 1-colored half-edge between a lattice point and a half-integer point.
/// Left half-edges point into the half-integer point, right ones out of it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HalfEdge {
    pub kind: SailSide,
    pub lattice: (i64, i64),
    pub half: SailPoint,
}

/// A unit edge `(from, to, color)` between lattice points.
pub type LatticeEdge = ((i64, i64), (i64, i64), EdgeColor);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BSail {
    pub side: SailSide,
    /// `x` for a left sail, `y` for a right one.
    pub size: i64,
    /// `r` for a left sail, `q` for a right one.
    pub bend: i64,
    pub points: Vec<(i64, i64)>,
    pub half_points: Vec<SailPoint>,
    pub half_edges: Vec<HalfEdge>,
}

impl BSail {
    pub fn break_point(&self) -> (i64, i64) {
        match self.side {
            SailSide::Left => (self.bend, self.bend),
            SailSide::Right => (-self.bend, -self.bend),
        }
    }

    /// Unit 1- and 2-edges between lattice points of the sail.
    pub fn edges(&self) -> Vec<LatticeEdge> {
        let set: std::collections::HashSet<_> = self.points.iter().copied().collect();
        let mut out = Vec::new();
        for &(i, j) in &self.points {
            if set.contains(&(i + 1, j)) {
                out.push(((i, j), (i + 1, j), EdgeColor::One));
            }
            if set.contains(&(i, j + 1)) {
                out.push(((i, j), (i, j + 1), EdgeColor::Two));
            }
        }
        out
    }
}

/// Left B-sail `LB(x, r)`.
pub fn build_lb(x: i64, r: i64) -> Result<BSail> {
    if r < 0 || r > x {
        return Err(Error::Parameter(format!("LB({x},{r}) needs 0 <= r <= x")));
    }
    let mut points = Vec::new();
    for i in 0..=x {
        for j in i..=x {
            if j >= 2 * i - r {
                points.push((i, j));
            }
        }
    }
    let mut half_points = Vec::new();
    let mut half_edges = Vec::new();
    // k < (x - r) / 2, i.e. 2k < x - r.
    for k in (0..).take_while(|k| 2 * k < x - r) {
        let half = SailPoint::half(2 * (r + k) + 1, r + 2 * k + 1);
        half_points.push(half);
        half_edges.push(HalfEdge {
            kind: SailSide::Left,
            lattice: (r + k, r + 2 * k + 1),
            half,
        });
    }
    Ok(BSail {
        side: SailSide::Left,
        size: x,
        bend: r,
        points,
        half_points,
        half_edges,
    })
}

/// Right B-sail `RB(y, q)`.
pub fn build_rb(y: i64, q: i64) -> Result<BSail> {
    if q < 0 || q > y {
        return Err(Error::Parameter(format!("RB({y},{q}) needs 0 <= q <= y")));
    }
    let mut points = Vec::new();
    for i in -y..=0 {
        for j in -y..=i {
            if j <= 2 * i + q {
                points.push((i, j));
            }
        }
    }
    let mut half_points = Vec::new();
    let mut half_edges = Vec::new();
    for k in (0..).take_while(|k| 2 * k < y - q) {
        let half = SailPoint::half(-2 * (q + k) - 1, -q - 2 * k - 1);
        half_points.push(half);
        half_edges.push(HalfEdge {
            kind: SailSide::Right,
            lattice: (-q - k, -q - 2 * k - 1),
            half,
        });
    }
    Ok(BSail {
        side: SailSide::Right,
        size: y,
        bend: q,
        points,
        half_points,
        half_edges,
    })
}

/// The diagonal side, one point per level, from the minimal vertex upwards.
pub fn diagonal_side(s: &BSail) -> Vec<SailPoint> {
    match s.side {
        SailSide::Left => (0..=s.size)
            .map(|j| {
                if j <= s.bend {
                    SailPoint::integer(j, j)
                } else {
                    SailPoint::half(j + s.bend, j)
                }
            })
            .collect(),
        SailSide::Right => (-s.size..=0)
            .map(|j| {
                if j <= -s.bend {
                    SailPoint::half(j - s.bend, j)
                } else {
                    SailPoint::integer(j, j)
                }
            })
            .collect(),
    }
}

/// Glues one sail onto its string of `C(a,b)`.
///
/// Returns the ⊗-vertices met by half-integer diagonal points, keyed to the
/// graph vertex at the lattice end of the half-edge touching them.
fn glue(
    g: &mut ColoredDigraph,
    sail: &BSail,
    string: &[CrystalCoords],
    tag: &str,
) -> Result<Vec<(CrystalCoords, usize)>> {
    let diagonal = diagonal_side(sail);
    if diagonal.len() != string.len() {
        return Err(Error::Construction(format!(
            "{tag}: diagonal has {} points, string has {}",
            diagonal.len(),
            string.len()
        )));
    }
    let mut at_lattice: HashMap<(i64, i64), usize> = HashMap::new();
    let mut at_half: HashMap<SailPoint, CrystalCoords> = HashMap::new();
    for (p, c) in diagonal.iter().zip(string) {
        if p.is_integer() {
            if c.is_otimes() {
                return Err(Error::Construction(format!(
                    "{tag}: lattice diagonal point {p} lands on ⊗-vertex {c}"
                )));
            }
            at_lattice.insert(p.lattice(), g.add_vertex(c.to_string(), true));
        } else {
            if !c.is_otimes() {
                return Err(Error::Construction(format!(
                    "{tag}: half-integer point {p} lands on ordinary vertex {c}"
                )));
            }
            at_half.insert(*p, *c);
        }
    }
    for &(i, j) in &sail.points {
        at_lattice
            .entry((i, j))
            .or_insert_with(|| g.add_vertex(format!("{tag}[{i},{j}]"), false));
    }
    for (s, t, color) in sail.edges() {
        g.add_edge(at_lattice[&s], at_lattice[&t], color, false);
    }
    let mut met = Vec::new();
    for h in &sail.half_edges {
        let c = at_half.remove(&h.half).ok_or_else(|| {
            Error::Construction(format!("{tag}: half-edge at {} off the diagonal", h.half))
        })?;
        met.push((c, at_lattice[&h.lattice]));
    }
    if let Some((p, c)) = at_half.into_iter().next() {
        return Err(Error::Construction(format!(
            "{tag}: diagonal point {p} at {c} has no half-edge"
        )));
    }
    Ok(met)
}

/// The regular B2-crystal `S(a,b)`.
///
/// Vertices of `C(a,b)` keep their coordinate names; sail interiors are
/// named `LB(i,j)[p,q]` or `RB(i,j)[p,q]` after the principal vertex of the
/// replaced string and the local lattice point.
pub fn build_s(a: i64, b: i64) -> Result<ColoredDigraph> {
    if a < 0 || b < 0 {
        return Err(Error::Parameter(format!("S({a},{b}) needs a, b >= 0")));
    }
    let c = build_c(a, b);
    let mut g = ColoredDigraph::new();
    for v in c.graph.vertices().filter(|&v| !c.is_otimes(v)) {
        g.add_vertex(c.graph.id(v), true);
    }
    let mut left_ends: BTreeMap<CrystalCoords, Vec<usize>> = BTreeMap::new();
    let mut right_ends: BTreeMap<CrystalCoords, Vec<usize>> = BTreeMap::new();
    for i in 0..=a {
        for j in 0..=b {
            let lb = build_lb(b + i - j, i)?;
            let tag = format!("LB({i},{j})");
            for (c, u) in glue(&mut g, &lb, &principal_ii_string(b, i, j), &tag)? {
                left_ends.entry(c).or_default().push(u);
            }
        }
    }
    for i in 0..=a {
        for j in 0..=b {
            let rb = build_rb(a + j - i, a - i)?;
            let tag = format!("RB({i},{j})");
            for (c, w) in glue(&mut g, &rb, &principal_i_string(a, i, j), &tag)? {
                right_ends.entry(c).or_default().push(w);
            }
        }
    }
    for key in c_coordinates(a, b)
        .into_iter()
        .filter(CrystalCoords::is_otimes)
    {
        let lefts = left_ends.remove(&key).unwrap_or_default();
        let rights = right_ends.remove(&key).unwrap_or_default();
        match (lefts.as_slice(), rights.as_slice()) {
            ([u], [w]) => {
                g.add_edge(*u, *w, EdgeColor::One, true);
            }
            _ => {
                return Err(Error::Construction(format!(
                    "⊗-vertex {key} met {} left and {} right half-edges",
                    lefts.len(),
                    rights.len()
                )))
            }
        }
    }
    if let Some(c) = left_ends.keys().chain(right_ends.keys()).next() {
        return Err(Error::Construction(format!(
            "half-edges meet {c}, which is not a ⊗-vertex"
        )));
    }
    Ok(g)
}

/// Number of central edges of `S(a,b)`: one per ⊗-vertex of `C(a,b)`.
pub fn s_central_edge_count(a: i64, b: i64) -> i64 {
    let per_sail = (0..=b)
        .flat_map(|q| (0..q).map(move |p| (p, q)))
        .filter(|(p, q)| (q - p) % 2 == 1)
        .count() as i64;
    (a + 1) * per_sail
}
