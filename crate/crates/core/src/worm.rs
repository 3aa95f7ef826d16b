//! The worm model: admissible six-tuples `(x',y,x'';y',x,y'')` and the free
//! crystal operators acting on them.
//!
//! A worm is drawn as the horizontal segment `[X',X'']` at height `y` and the
//! vertical segment `[Y',Y'']` at abscissa `x`, with
//! `X' = (x',y)`, `X'' = (x'',y)`, `Y' = (x,y')`, `Y'' = (x,y'')`.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::graph::EdgeColor;
use crate::littelmann::Quadruple;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WormState {
    /// `x'`, always even.
    pub x_lo: i64,
    pub y: i64,
    /// `x''`, always even.
    pub x_hi: i64,
    pub y_lo: i64,
    pub x: i64,
    pub y_hi: i64,
}

pub const ORIGIN: WormState = WormState {
    x_lo: 0,
    y: 0,
    x_hi: 0,
    y_lo: 0,
    x: 0,
    y_hi: 0,
};

/// Admissibility of a raw six-tuple given in literal order
/// `(x', y, x''; y', x, y'')`.
pub fn is_admissible(t: [i64; 6]) -> bool {
    let [x_lo, y, x_hi, y_lo, x, y_hi] = t;
    let even = x_lo.rem_euclid(2) == 0 && x_hi.rem_euclid(2) == 0;
    let ordered = y_hi >= y && y >= y_lo && x_hi >= x && x >= x_lo;
    let hooked = (y_hi <= y || x_hi == x) && (y <= y_lo || x == x_lo);
    even && ordered && hooked
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Shape {
    V,
    H,
    VH,
    HV,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct WormClass {
    pub v: bool,
    pub h: bool,
    pub vh: bool,
    pub hv: bool,
    /// Three of the four points are distinct.
    pub proper: bool,
    /// All four points coincide.
    pub principal: bool,
}

impl WormClass {
    pub fn has(&self, shape: Shape) -> bool {
        match shape {
            Shape::V => self.v,
            Shape::H => self.h,
            Shape::VH => self.vh,
            Shape::HV => self.hv,
        }
    }

    pub fn shapes(&self) -> Vec<Shape> {
        [Shape::V, Shape::H, Shape::VH, Shape::HV]
            .into_iter()
            .filter(|&s| self.has(s))
            .collect()
    }
}

/// Which forward rule fires.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Rule {
    /// Operator 1: `x'` += 2. Operator 2: `y'` += 1.
    ShiftLow,
    /// Operator 1: `y` += 1. Operator 2: `x` += 1.
    ShiftMiddle,
    /// Operator 1: `x''` += 2. Operator 2: `y''` += 1.
    ShiftHigh,
}

/// Position of a vertex relative to the center of its 1-string.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Central,
    Right,
}

/// Geometric center data of a worm.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CenterRole {
    pub central_vertex: bool,
    pub central_edge_begin: bool,
    pub central_edge_end: bool,
    /// Status on the 1-string; endpoints of the central edge count as left
    /// (begin) and right (end).
    pub side: Side,
}

impl WormState {
    pub const fn new(x_lo: i64, y: i64, x_hi: i64, y_lo: i64, x: i64, y_hi: i64) -> Self {
        WormState {
            x_lo,
            y,
            x_hi,
            y_lo,
            x,
            y_hi,
        }
    }

    pub fn from_tuple(t: [i64; 6]) -> Option<Self> {
        is_admissible(t).then(|| WormState::new(t[0], t[1], t[2], t[3], t[4], t[5]))
    }

    pub fn tuple(&self) -> [i64; 6] {
        [self.x_lo, self.y, self.x_hi, self.y_lo, self.x, self.y_hi]
    }

    pub fn is_admissible(&self) -> bool {
        is_admissible(self.tuple())
    }

    /// The principal worm collapsed to the point `(x, y)`; `x` must be even.
    pub fn principal(x: i64, y: i64) -> Self {
        WormState::new(x, y, x, y, x, y)
    }

    pub fn points(&self) -> [(i64, i64); 4] {
        [
            (self.x_lo, self.y),
            (self.x_hi, self.y),
            (self.x, self.y_lo),
            (self.x, self.y_hi),
        ]
    }

    pub fn is_v(&self) -> bool {
        self.x_lo == self.x && self.x == self.x_hi
    }

    pub fn is_h(&self) -> bool {
        self.y_lo == self.y && self.y == self.y_hi
    }

    pub fn classify(&self) -> WormClass {
        let [xl, xh, yl, yh] = self.points();
        let mut distinct = vec![xl, xh, yl, yh];
        distinct.sort();
        distinct.dedup();
        WormClass {
            v: self.is_v(),
            h: self.is_h(),
            vh: xl == yh,
            hv: yl == xh,
            proper: distinct.len() == 3,
            principal: distinct.len() == 1,
        }
    }

    pub fn rule(&self, color: EdgeColor) -> Rule {
        match color {
            EdgeColor::One => {
                if 2 * self.x > self.x_lo + self.x_hi {
                    Rule::ShiftLow
                } else if self.is_v() && self.y_hi > self.y {
                    Rule::ShiftMiddle
                } else {
                    Rule::ShiftHigh
                }
            }
            EdgeColor::Two => {
                if 2 * self.y > self.y_lo + self.y_hi {
                    Rule::ShiftLow
                } else if self.is_h() && self.x_hi > self.x {
                    Rule::ShiftMiddle
                } else {
                    Rule::ShiftHigh
                }
            }
        }
    }

    fn shifted(&self, color: EdgeColor, rule: Rule, amount: i64) -> WormState {
        let mut w = *self;
        match (color, rule) {
            (EdgeColor::One, Rule::ShiftLow) => w.x_lo += 2 * amount,
            (EdgeColor::One, Rule::ShiftMiddle) => w.y += amount,
            (EdgeColor::One, Rule::ShiftHigh) => w.x_hi += 2 * amount,
            (EdgeColor::Two, Rule::ShiftLow) => w.y_lo += amount,
            (EdgeColor::Two, Rule::ShiftMiddle) => w.x += amount,
            (EdgeColor::Two, Rule::ShiftHigh) => w.y_hi += amount,
        }
        w
    }

    /// The free operator of the given color.
    pub fn apply(&self, color: EdgeColor) -> WormState {
        let next = self.shifted(color, self.rule(color), 1);
        assert!(
            next.is_admissible(),
            "operator {color} produced inadmissible worm {next} from {self}"
        );
        next
    }

    pub fn apply1(&self) -> WormState {
        self.apply(EdgeColor::One)
    }

    pub fn apply2(&self) -> WormState {
        self.apply(EdgeColor::Two)
    }

    /// The three reversal candidates for the operator `color`, each paired
    /// with whether it is admissible and maps forward to `self`.
    pub fn inverse_candidates(&self, color: EdgeColor) -> [(WormState, bool); 3] {
        [Rule::ShiftLow, Rule::ShiftMiddle, Rule::ShiftHigh].map(|rule| {
            let cand = self.shifted(color, rule, -1);
            let ok = cand.is_admissible() && cand.rule(color) == rule;
            (cand, ok)
        })
    }

    /// The unique admissible predecessor under `color`.
    pub fn invert(&self, color: EdgeColor) -> WormState {
        let mut found = self
            .inverse_candidates(color)
            .into_iter()
            .filter(|&(_, ok)| ok)
            .map(|(c, _)| c);
        let pred = found
            .next()
            .unwrap_or_else(|| panic!("no {color}-predecessor of {self}"));
        assert!(
            found.next().is_none(),
            "several {color}-predecessors of {self}"
        );
        pred
    }

    pub fn invert1(&self) -> WormState {
        self.invert(EdgeColor::One)
    }

    pub fn invert2(&self) -> WormState {
        self.invert(EdgeColor::Two)
    }

    /// Weight `(x'/2 + x''/2 + y, y' + y'' + x)`.
    pub fn weight(&self) -> (i64, i64) {
        (
            self.x_lo / 2 + self.x_hi / 2 + self.y,
            self.y_lo + self.y_hi + self.x,
        )
    }

    pub fn side(&self) -> Side {
        let class = self.classify();
        let compare = |before: i64, after: i64| match before.cmp(&after) {
            std::cmp::Ordering::Less => Side::Left,
            std::cmp::Ordering::Equal => Side::Central,
            std::cmp::Ordering::Greater => Side::Right,
        };
        if class.v {
            // X climbs the vertical segment.
            compare(self.y - self.y_lo, self.y_hi - self.y)
        } else if class.h {
            // X' approaches Y from the left first, then X'' moves away.
            compare(self.x_hi - self.x, self.x - self.x_lo)
        } else if class.hv {
            Side::Left
        } else {
            Side::Right
        }
    }

    pub fn center_role(&self) -> CenterRole {
        let v = self.is_v();
        let h = self.is_h();
        let below = self.y - self.y_lo;
        let above = self.y_hi - self.y;
        let span = self.y_hi - self.y_lo;
        let symmetric_v = v && below == above;
        let symmetric_h = h && self.x - self.x_lo == self.x_hi - self.x;
        let odd = span % 2 == 1;
        CenterRole {
            central_vertex: symmetric_v || symmetric_h,
            central_edge_begin: v && odd && below == (span - 1) / 2,
            central_edge_end: v && odd && below == (span + 1) / 2,
            side: self.side(),
        }
    }
}

impl fmt::Display for WormState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({},{},{};{},{},{})",
            self.x_lo, self.y, self.x_hi, self.y_lo, self.x, self.y_hi
        )
    }
}

impl FromStr for WormState {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |message: &str| Error::Parse {
            location: format!("worm literal {s:?}"),
            message: message.to_string(),
        };
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| err("expected parentheses"))?;
        let (left, right) = inner
            .split_once(';')
            .ok_or_else(|| err("expected ';' separator"))?;
        let nums: Vec<i64> = left
            .split(',')
            .chain(right.split(','))
            .map(|p| p.trim().parse::<i64>())
            .collect::<Result<_, _>>()
            .map_err(|_| err("expected integers"))?;
        let t: [i64; 6] = nums
            .try_into()
            .map_err(|_| err("expected three entries on each side of ';'"))?;
        WormState::from_tuple(t).ok_or_else(|| err("six-tuple is not admissible"))
    }
}

/// Closed-form cases for the string quadruples.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum QuadCase {
    /// Proper VH-worm.
    ProperVh = 1,
    /// Proper HV-worm.
    ProperHv = 2,
    /// H-worm with `x'' - x > x - x'`.
    HLeaning = 3,
    /// H-worm with `2x >= x' + x''`.
    HBalanced = 4,
    /// V-worm with `2y >= y' + y''`.
    VBalanced = 5,
    /// V-worm with `y'' - y > y - y'`.
    VLeaning = 6,
}

/// Every closed-form case whose guard matches `w`, with the quadruples it
/// yields. Degenerate worms may match more than one case.
pub fn closed_form_cases(w: &WormState) -> Vec<(QuadCase, Quadruple, Quadruple)> {
    let WormState {
        x_lo: xl,
        y,
        x_hi: xh,
        y_lo: yl,
        x,
        y_hi: yh,
    } = *w;
    let class = w.classify();
    let q = Quadruple::new;
    let mut out = Vec::new();
    if class.vh && class.proper {
        out.push((
            QuadCase::ProperVh,
            q(yl, xh / 2 + yh, xl + yh, xl / 2),
            q(xh / 2 + yh - yl, xl + yh, xl / 2 + yl, yl),
        ));
    }
    if class.hv && class.proper {
        out.push((
            QuadCase::ProperHv,
            q(xh - xl + yh, xh / 2 + yl, xl + yl, xl / 2),
            q(xl / 2, xh + yh, xh / 2 + yl, yl),
        ));
    }
    if class.h {
        let a = q(x - xl + y, xh / 2 + y, xl + y, xl / 2);
        if xh - x > x - xl {
            out.push((
                QuadCase::HLeaning,
                a,
                q(xh / 2 + xl - x, x + y, x - xl / 2 + y, y),
            ));
        }
        if 2 * x >= xl + xh {
            out.push((QuadCase::HBalanced, a, q(xl / 2, x + y, xh / 2 + y, y)));
        }
    }
    if class.v {
        let b = q(x / 2 + y - yl, x + yh, x / 2 + yl, yl);
        if 2 * y >= yl + yh {
            out.push((QuadCase::VBalanced, q(yl, x / 2 + y, x + yh, x / 2), b));
        }
        if yh - y > y - yl {
            out.push((
                QuadCase::VLeaning,
                q(yh - 2 * y + 2 * yl, x / 2 + y, x + 2 * y - yl, x / 2),
                b,
            ));
        }
    }
    out
}

/// Closed-form `(a(w), b(w))`. Panics if no case matches or if overlapping
/// cases disagree; both would be defects in the case analysis.
pub fn closed_form_ab(w: &WormState) -> (Quadruple, Quadruple) {
    let cases = closed_form_cases(w);
    let (_, a, b) = *cases
        .first()
        .unwrap_or_else(|| panic!("no closed-form case matches {w}"));
    for &(case, a2, b2) in &cases[1..] {
        assert!(
            a2 == a && b2 == b,
            "closed-form case {case:?} disagrees with {:?} at {w}",
            cases[0].0
        );
    }
    (a, b)
}

/// Predicted `(Δt, Δh)` for the edge of the given color leaving `w`.
///
/// For 1-edges: `(0,2)` when `w` is a VH-worm, a V-worm with
/// `|X-Y'| >= |Y''-X|`, or an H-worm with `|Y-X'| <= |X''-Y|`; `(-1,1)` when
/// `w` is a V-worm with `|X-Y'| = |Y''-X| - 1`; `(-2,0)` otherwise.
///
/// For 2-edges: `(-1,0)` when `w` lies strictly after the center of its
/// 1-string, `(0,1)` otherwise.
pub fn predict_edge_delta(w: &WormState, color: EdgeColor) -> (i64, i64) {
    let class = w.classify();
    let below = w.y - w.y_lo;
    let above = w.y_hi - w.y;
    match color {
        EdgeColor::One => {
            let right = class.vh
                || (class.v && below >= above)
                || (class.h && w.x - w.x_lo <= w.x_hi - w.x);
            if right {
                (0, 2)
            } else if class.v && below == above - 1 {
                (-1, 1)
            } else {
                (-2, 0)
            }
        }
        EdgeColor::Two => {
            if w.side() == Side::Right {
                (-1, 0)
            } else {
                (0, 1)
            }
        }
    }
}

/// The literal reading of the 2-edge rule: `(1,0)` under the same guard as
/// the right 1-edges, `(0,1)` otherwise. Kept so the sweep can report where
/// it departs from measurement.
pub fn literal_two_edge_rule(w: &WormState) -> (i64, i64) {
    let class = w.classify();
    let guard = class.vh
        || (class.v && w.y - w.y_lo >= w.y_hi - w.y)
        || (class.h && w.x - w.x_lo <= w.x_hi - w.x);
    if guard {
        (1, 0)
    } else {
        (0, 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> WormState {
        s.parse().unwrap()
    }

    #[test]
    fn admissibility_examples() {
        assert!(is_admissible([0, 0, 0, 0, 0, 0]));
        assert!(!is_admissible([2, 0, 2, 0, 1, 0]));
        assert!(is_admissible([0, 1, 2, 1, 2, 3]));
        assert!(!is_admissible([1, 0, 1, 0, 1, 0]));
    }

    #[test]
    fn classification_examples() {
        let o = ORIGIN.classify();
        assert!(o.v && o.h && o.vh && o.hv && o.principal);
        let v = w("(2,3,2;1,2,4)").classify();
        assert_eq!(v.shapes(), vec![Shape::V]);
        assert!(v.proper && !v.principal);
        let hv = w("(0,1,2;1,2,3)").classify();
        assert_eq!(hv.shapes(), vec![Shape::HV]);
        assert!(hv.proper);
    }

    #[test]
    fn forward_rule_examples() {
        assert_eq!(ORIGIN.apply1(), w("(0,0,2;0,0,0)"));
        assert_eq!(ORIGIN.rule(EdgeColor::One), Rule::ShiftHigh);
        let mid = w("(0,0,2;0,1,0)");
        assert_eq!(mid.rule(EdgeColor::Two), Rule::ShiftMiddle);
        assert_eq!(mid.apply2(), w("(0,0,2;0,2,0)"));
        let before_sink = w("(0,0,2;0,2,0)");
        assert_eq!(before_sink.rule(EdgeColor::One), Rule::ShiftLow);
        assert_eq!(before_sink.apply1(), w("(2,0,2;0,2,0)"));
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(w("(0,0,2;0,0,0)").invert1(), ORIGIN);
        assert_eq!(w("(0,0,2;0,2,0)").invert2(), w("(0,0,2;0,1,0)"));
        let sink = w("(2,0,2;0,2,0)");
        let oks: Vec<bool> = sink
            .inverse_candidates(EdgeColor::One)
            .iter()
            .map(|&(_, ok)| ok)
            .collect();
        assert_eq!(oks, vec![true, false, false]);
        assert_eq!(sink.invert1(), w("(0,0,2;0,2,0)"));
    }

    #[test]
    fn weight_examples() {
        assert_eq!(ORIGIN.weight(), (0, 0));
        let hv = w("(0,1,2;1,2,3)");
        let (a, b) = hv.weight();
        let (c, d) = hv.apply1().weight();
        assert_eq!((c - a, d - b), (1, 0));
        let (c, d) = ORIGIN.apply2().weight();
        assert_eq!((c, d), (0, 1));
    }

    #[test]
    fn center_role_examples() {
        assert!(w("(0,0,2;0,1,0)").center_role().central_vertex);
        let begin = w("(0,0,0;0,0,1)");
        assert!(begin.center_role().central_edge_begin);
        let end = begin.apply1();
        assert_eq!(end, w("(0,1,0;0,0,1)"));
        assert!(end.center_role().central_edge_end);
        assert!(w("(0,1,0;0,0,2)").center_role().central_vertex);
    }

    #[test]
    fn closed_form_examples() {
        let zero = Quadruple::new(0, 0, 0, 0);
        assert_eq!(closed_form_ab(&ORIGIN), (zero, zero));
        assert_eq!(
            closed_form_ab(&w("(2,0,2;0,2,0)")),
            (Quadruple::new(0, 1, 2, 1), Quadruple::new(1, 2, 1, 0))
        );
        // Sink of W(0,1): V-worm, balanced.
        let cases = closed_form_cases(&w("(0,1,0;1,0,1)"));
        assert!(cases.iter().any(|c| c.0 == QuadCase::VBalanced));
        assert_eq!(
            closed_form_ab(&w("(0,1,0;1,0,1)")),
            (Quadruple::new(1, 1, 1, 0), Quadruple::new(0, 1, 1, 1))
        );
    }

    #[test]
    fn central_edge_prediction() {
        assert_eq!(
            predict_edge_delta(&w("(0,0,0;0,0,1)"), EdgeColor::One),
            (-1, 1)
        );
    }

    #[test]
    fn literal_round_trip() {
        let s = "(0,1,2;1,2,3)";
        assert_eq!(w(s).to_string(), s);
        assert!("(0,1,2,1,2,3)".parse::<WormState>().is_err());
        assert!("(2,0,2;0,1,0)".parse::<WormState>().is_err());
    }
}
