mod common;

use std::collections::BTreeMap;

use b2crystal::graph::{edge_delta, ColoredDigraph, EdgeColor};
use b2crystal::sails::build_s;
use b2crystal::worm::{literal_two_edge_rule, predict_edge_delta, WormState};
use b2crystal::worm_graph::build_w_ab;
use common::{delta, positions, weight_potential, Pos};

/// 2-edges counted by (measured delta, literal-rule delta).
type DeltaTally = BTreeMap<((i64, i64), (i64, i64)), usize>;

fn built_graphs(max: i64) -> Vec<(String, ColoredDigraph)> {
    let mut out = Vec::new();
    for a in 0..=max {
        for b in 0..=max {
            out.push((format!("S({a},{b})"), build_s(a, b).unwrap()));
            out.push((format!("W({a},{b})"), build_w_ab(a, b)));
        }
    }
    out
}

fn worm(g: &ColoredDigraph, v: usize) -> WormState {
    g.id(v).parse().expect("worm graph ids are worm literals")
}

#[test]
fn weights_shift_by_unit_vectors() {
    for (name, g) in built_graphs(4) {
        assert!(
            weight_potential(&g).is_some(),
            "{name} has no weight mapping"
        );
    }
    for a in 0..=4 {
        for b in 0..=4 {
            let g = build_w_ab(a, b);
            for e in g.edges() {
                let (x0, y0) = worm(&g, e.src).weight();
                let (x1, y1) = worm(&g, e.dst).weight();
                let want = match e.color {
                    EdgeColor::One => (1, 0),
                    EdgeColor::Two => (0, 1),
                };
                assert_eq!((x1 - x0, y1 - y0), want);
            }
        }
    }
}

#[test]
fn delta_table_by_edge_status() {
    for (name, g) in built_graphs(4) {
        let pos = positions(&g);
        for (e, edge) in g.edges().iter().enumerate() {
            let d = delta(&g, e);
            assert_eq!(d, edge_delta(&g, e), "{name}");
            let want = match edge.color {
                EdgeColor::One if edge.central => (-1, 1),
                EdgeColor::One if pos[edge.src] == Pos::Left => (-2, 0),
                EdgeColor::One => {
                    assert_eq!(pos[edge.dst], Pos::Right);
                    (0, 2)
                }
                EdgeColor::Two if pos[edge.src] == Pos::Right => {
                    assert_ne!(
                        pos[edge.dst],
                        Pos::Left,
                        "{name}: 2-edge both left and right"
                    );
                    (-1, 0)
                }
                EdgeColor::Two => {
                    assert_eq!(
                        pos[edge.dst],
                        Pos::Left,
                        "{name}: 2-edge neither left nor right"
                    );
                    (0, 1)
                }
            };
            assert_eq!(d, want, "{name}: edge {}", g.edge_label(e));
            let cartan = match edge.color {
                EdgeColor::One => -2,
                EdgeColor::Two => -1,
            };
            assert_eq!(d.0 - d.1, cartan);
        }
    }
}

#[test]
fn one_edge_predictor_matches_measurement() {
    for a in 0..=4 {
        for b in 0..=4 {
            let g = build_w_ab(a, b);
            for (e, edge) in g.edges().iter().enumerate() {
                if edge.color == EdgeColor::One {
                    let u = worm(&g, edge.src);
                    assert_eq!(predict_edge_delta(&u, EdgeColor::One), delta(&g, e), "{u}");
                }
            }
        }
    }
}

/// Tallies the 2-edges by (measured delta, literal rule). The literal rule
/// predicts `(1,0)` where the measurement gives `(-1,0)`; and at symmetric
/// V- and H-worms its guard holds although the edge measures `(0,1)`.
#[test]
fn two_edge_sign_is_negative() {
    let mut tally = DeltaTally::new();
    for a in 0..=4 {
        for b in 0..=4 {
            let g = build_w_ab(a, b);
            for (e, edge) in g.edges().iter().enumerate() {
                if edge.color != EdgeColor::Two {
                    continue;
                }
                let u = worm(&g, edge.src);
                let measured = delta(&g, e);
                assert_eq!(predict_edge_delta(&u, EdgeColor::Two), measured, "{u}");
                *tally
                    .entry((measured, literal_two_edge_rule(&u)))
                    .or_default() += 1;
            }
        }
    }
    assert!(!tally.contains_key(&((1, 0), (1, 0))));
    assert!(tally[&((-1, 0), (1, 0))] > 0);
    assert!(tally[&((0, 1), (1, 0))] > 0);
    assert!(tally[&((0, 1), (0, 1))] > 0);
    assert!(!tally.contains_key(&((-1, 0), (0, 1))));
    assert_eq!(tally.len(), 3);
}

#[test]
fn central_edge_begin_example() {
    let u: WormState = "(0,0,0;0,0,1)".parse().unwrap();
    assert_eq!(predict_edge_delta(&u, EdgeColor::One), (-1, 1));
}
