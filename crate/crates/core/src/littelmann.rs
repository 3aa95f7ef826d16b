//! String-statistic quadruples on the positive-quadrant worm graph and the
//! cone conditions characterizing the B2 crystal `B(∞)`.
//!
//! The positive quadrant is never materialized. Inverse operators only lower
//! coordinates, so every walk to a string beginning terminates without an
//! upper bound on the box.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::Serialize;

use crate::graph::EdgeColor;
use crate::worm::{closed_form_cases, WormState, ORIGIN};
use crate::worm_graph::{enumerate_admissible, WormBox};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Quadruple(pub [i64; 4]);

impl Quadruple {
    pub const fn new(q1: i64, q2: i64, q3: i64, q4: i64) -> Self {
        Quadruple([q1, q2, q3, q4])
    }

    /// `2 q2 >= q3 >= q4 >= 0` and `q1 >= 0`: the cone of a-quadruples.
    pub fn in_a_cone(&self) -> bool {
        let [q1, q2, q3, q4] = self.0;
        q1 >= 0 && q4 >= 0 && 2 * q2 >= q3 && q3 >= q4
    }

    /// `2 q2 >= q3 >= 2 q4 >= 0` and `q1 >= 0`. This is the a-cone cut down by
    /// the min-relations: `b4 = min(a1, 2a2 - a3, a3 - 2a4)` is negative
    /// whenever `a3 < 2 a4`.
    pub fn in_strict_a_cone(&self) -> bool {
        let [q1, q2, q3, q4] = self.0;
        q1 >= 0 && q4 >= 0 && 2 * q2 >= q3 && q3 >= 2 * q4
    }

    /// `q2 >= q3 >= q4 >= 0` and `q1 >= 0`: the cone of b-quadruples.
    pub fn in_b_cone(&self) -> bool {
        let [q1, q2, q3, q4] = self.0;
        q1 >= 0 && q4 >= 0 && q2 >= q3 && q3 >= q4
    }
}

impl fmt::Display for Quadruple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.0;
        write!(f, "({a},{b},{c},{d})")
    }
}

/// The four auxiliary terms appearing in the min-relations between a- and
/// b-quadruples.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MinRelationTerms {
    pub p: i64,
    pub q: i64,
    pub r: i64,
    pub s: i64,
}

impl MinRelationTerms {
    pub fn of(a: &Quadruple) -> Self {
        let [a1, a2, a3, a4] = a.0;
        MinRelationTerms {
            p: 2 * a2 - a3 + a4,
            q: a1 + a4,
            r: 2 * a2 - a3,
            s: a3 - 2 * a4,
        }
    }

    /// `(b3, b4)` predicted from `a`.
    pub fn predicted_b34(a: &Quadruple) -> (i64, i64) {
        let t = Self::of(a);
        let [a1, a2, _, _] = a.0;
        (a2.min(t.p).min(t.q), a1.min(t.r).min(t.s))
    }
}

fn in_quadrant(w: &WormState) -> bool {
    w.x_lo >= 0 && w.y_lo >= 0
}

/// Walks `w` back to the beginning of its `color`-string inside the positive
/// quadrant; returns the beginning and the number of steps.
pub fn walk_to_start(w: &WormState, color: EdgeColor) -> (WormState, i64) {
    let mut cur = *w;
    let mut steps = 0;
    loop {
        let prev = cur.invert(color);
        if !in_quadrant(&prev) {
            return (cur, steps);
        }
        cur = prev;
        steps += 1;
    }
}

/// Moves `w` to the beginning of its `color`-string.
pub fn tilde(w: &WormState, color: EdgeColor) -> WormState {
    walk_to_start(w, color).0
}

fn t_stat(w: &WormState, color: EdgeColor) -> i64 {
    walk_to_start(w, color).1
}

/// `(a(w), b(w))` computed by iterating inverse operators.
pub fn quadruples(w: &WormState) -> (Quadruple, Quadruple) {
    use EdgeColor::{One, Two};
    let t2 = tilde(w, Two);
    let t12 = tilde(&t2, One);
    let t212 = tilde(&t12, Two);
    let a = Quadruple::new(
        t_stat(w, Two),
        t_stat(&t2, One),
        t_stat(&t12, Two),
        t_stat(&t212, One),
    );
    let t1 = tilde(w, One);
    let t21 = tilde(&t1, Two);
    let t121 = tilde(&t21, One);
    let b = Quadruple::new(
        t_stat(w, One),
        t_stat(&t1, Two),
        t_stat(&t21, One),
        t_stat(&t121, Two),
    );
    (a, b)
}

fn apply_power(w: WormState, color: EdgeColor, times: i64) -> WormState {
    (0..times).fold(w, |acc, _| acc.apply(color))
}

/// Both four-fold tilde compositions reach the origin, and `w` is rebuilt
/// from the origin by the monomials read off `a(w)` and `b(w)`.
pub fn check_l1(w: &WormState) -> bool {
    use EdgeColor::{One, Two};
    let down_a = tilde(&tilde(&tilde(&tilde(w, Two), One), Two), One);
    let down_b = tilde(&tilde(&tilde(&tilde(w, One), Two), One), Two);
    if down_a != ORIGIN || down_b != ORIGIN {
        return false;
    }
    let (a, b) = quadruples(w);
    let [a1, a2, a3, a4] = a.0;
    let from_a = apply_power(
        apply_power(apply_power(apply_power(ORIGIN, One, a4), Two, a3), One, a2),
        Two,
        a1,
    );
    let [b1, b2, b3, b4] = b.0;
    let from_b = apply_power(
        apply_power(apply_power(apply_power(ORIGIN, Two, b4), One, b3), Two, b2),
        One,
        b1,
    );
    from_a == *w && from_b == *w
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub checked: usize,
    pub failures: Vec<String>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("sweep report serializes")
    }
}

/// Checks L1, both cones, the min-relations, the two weight identities,
/// agreement with the closed-form cases, and injectivity of `a` and `b`, over
/// every admissible worm in `[0, 2N] x [0, N]`.
pub fn check_cones_and_relations(depth: i64) -> SweepReport {
    let worms = enumerate_admissible(&WormBox::new(0, depth, 0, depth));
    let mut report = SweepReport {
        checked: worms.len(),
        failures: Vec::new(),
    };
    let mut seen_a: HashMap<Quadruple, WormState> = HashMap::new();
    let mut seen_b: HashMap<Quadruple, WormState> = HashMap::new();
    for w in &worms {
        let (a, b) = quadruples(w);
        let [a1, a2, a3, a4] = a.0;
        let [b1, b2, b3, b4] = b.0;
        let mut fail = |what: String| report.failures.push(format!("{w}: {what}"));
        if !check_l1(w) {
            fail("L1".into());
        }
        if !a.in_a_cone() {
            fail(format!("a={a} outside 2a2>=a3>=a4"));
        }
        if !b.in_b_cone() {
            fail(format!("b={b} outside b2>=b3>=b4"));
        }
        let (p3, p4) = MinRelationTerms::predicted_b34(&a);
        if (p3, p4) != (b3, b4) {
            fail(format!(
                "min-relations give (b3,b4)=({p3},{p4}), measured ({b3},{b4})"
            ));
        }
        if a1 + a3 != b2 + b4 || a2 + a4 != b1 + b3 {
            fail(format!("weight identity broken: a={a} b={b}"));
        }
        for (case, ca, cb) in closed_form_cases(w) {
            if (ca, cb) != (a, b) {
                fail(format!(
                    "closed form {case:?} gives a={ca} b={cb}, iterative a={a} b={b}"
                ));
            }
        }
        if closed_form_cases(w).is_empty() {
            fail("no closed-form case matches".into());
        }
        if let Some(prev) = seen_a.insert(a, *w) {
            fail(format!("a={a} also realized by {prev}"));
        }
        if let Some(prev) = seen_b.insert(b, *w) {
            fail(format!("b={b} also realized by {prev}"));
        }
    }
    report
}

fn box_points(bound: i64, keep: impl Fn(&Quadruple) -> bool) -> Vec<Quadruple> {
    let r = 0..=bound;
    let mut out = Vec::new();
    for q1 in r.clone() {
        for q2 in r.clone() {
            for q3 in r.clone() {
                for q4 in r.clone() {
                    let q = Quadruple::new(q1, q2, q3, q4);
                    if keep(&q) {
                        out.push(q);
                    }
                }
            }
        }
    }
    out
}

/// All a-cone points with entries in `[0, bound]`, in lexicographic order.
pub fn a_cone_points(bound: i64) -> Vec<Quadruple> {
    box_points(bound, Quadruple::in_a_cone)
}

/// All strict a-cone points with entries in `[0, bound]`.
pub fn strict_a_cone_points(bound: i64) -> Vec<Quadruple> {
    box_points(bound, Quadruple::in_strict_a_cone)
}

/// All b-cone points with entries in `[0, bound]`.
pub fn b_cone_points(bound: i64) -> Vec<Quadruple> {
    box_points(bound, Quadruple::in_b_cone)
}

/// Quadruples with entries at most `bound` realized by worms in
/// `[0, 2 half_side] x [0, half_side]`, as `(a-set, b-set)`.
fn realized_within(bound: i64, half_side: i64) -> (BTreeSet<Quadruple>, BTreeSet<Quadruple>) {
    let small = |q: &Quadruple| q.0.iter().all(|&x| x <= bound);
    let mut a_set = BTreeSet::new();
    let mut b_set = BTreeSet::new();
    for w in enumerate_admissible(&WormBox::new(0, half_side, 0, half_side)) {
        let (a, b) = quadruples(&w);
        if small(&a) {
            a_set.insert(a);
        }
        if small(&b) {
            b_set.insert(b);
        }
    }
    (a_set, b_set)
}

fn realization_failures(
    kind: &str,
    targets: &[Quadruple],
    realized: &BTreeSet<Quadruple>,
    doubled: &BTreeSet<Quadruple>,
    in_cone: impl Fn(&Quadruple) -> bool,
    bound: i64,
) -> Vec<String> {
    let mut failures: Vec<String> = targets
        .iter()
        .filter(|q| !realized.contains(q))
        .map(|q| format!("unrealized {kind} cone vector {q}"))
        .collect();
    if realized != doubled {
        failures.push(format!(
            "{kind}: box not sufficient: {} realized in [0,{}]x[0,{}], {} after doubling",
            realized.len(),
            6 * bound,
            3 * bound,
            doubled.len()
        ));
    }
    failures.extend(
        realized
            .iter()
            .filter(|q| !in_cone(q))
            .map(|q| format!("realized {kind} quadruple {q} outside the cone")),
    );
    failures
}

/// Every a-cone point (`2a2 >= a3 >= a4`) with entries at most `bound` is
/// realized by a worm in `[0, 6B] x [0, 3B]`; the realized set must not
/// change when the box is doubled.
pub fn cone_realization_check(bound: i64) -> SweepReport {
    let targets = a_cone_points(bound);
    let (realized, _) = realized_within(bound, 3 * bound);
    let (doubled, _) = realized_within(bound, 6 * bound);
    SweepReport {
        checked: targets.len(),
        failures: realization_failures(
            "a",
            &targets,
            &realized,
            &doubled,
            Quadruple::in_a_cone,
            bound,
        ),
    }
}

/// The realized a-quadruples are exactly the strict a-cone points and the
/// realized b-quadruples exactly the b-cone points, for entries at most
/// `bound`, with the same box and doubling test as [`cone_realization_check`].
pub fn strict_cone_realization_check(bound: i64) -> SweepReport {
    let a_targets = strict_a_cone_points(bound);
    let b_targets = b_cone_points(bound);
    let (ra, rb) = realized_within(bound, 3 * bound);
    let (da, db) = realized_within(bound, 6 * bound);
    let mut failures = realization_failures(
        "strict a",
        &a_targets,
        &ra,
        &da,
        Quadruple::in_strict_a_cone,
        bound,
    );
    failures.extend(realization_failures(
        "b",
        &b_targets,
        &rb,
        &db,
        Quadruple::in_b_cone,
        bound,
    ));
    SweepReport {
        checked: a_targets.len() + b_targets.len(),
        failures,
    }
}
