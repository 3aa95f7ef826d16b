//! Acceptance suite: one line per criterion, non-zero exit if any fails.

mod common;

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use rand::{seq::SliceRandom, SeedableRng};

use b2crystal::a2::build_c;
use b2crystal::axioms::{extract_central_graph, verify};
use b2crystal::graph::{interval, is_isomorphic, ColoredDigraph, EdgeColor};
use b2crystal::littelmann::{
    a_cone_points, check_cones_and_relations, cone_realization_check, strict_cone_realization_check,
};
use b2crystal::sails::build_s;
use b2crystal::worm::{literal_two_edge_rule, predict_edge_delta, WormState};
use b2crystal::worm_graph::{
    build_w_ab, enumerate_admissible, interval_model_central_graph, w_vertex_count, WormBox,
};
use common::{
    all_mutations, apply_mutation, bfs_worm_count, delta, operator_words, positions,
    weight_potential, Pos, ONE, TWO,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, Option<Duration>, fn() -> Outcome);
/// 2-edges counted by (measured delta, literal-rule delta).
type DeltaTally = BTreeMap<((i64, i64), (i64, i64)), usize>;

fn s(a: i64, b: i64) -> Result<ColoredDigraph, String> {
    build_s(a, b).map_err(|e| format!("S({a},{b}): {e}"))
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn iso(g: &ColoredDigraph, h: &ColoredDigraph) -> Result<bool, String> {
    is_isomorphic(g, h, true)
        .map(|m| m.is_some())
        .map_err(|e| e.to_string())
}

fn single_path_colors(g: &ColoredDigraph) -> Vec<u8> {
    let mut out = Vec::new();
    let Some(&start) = g.sources().first() else {
        return out;
    };
    let mut v = start;
    while let Some(c) = [ONE, TWO].into_iter().find(|&c| g.succ(v, c).is_some()) {
        out.push(c.number());
        v = g.succ(v, c).unwrap();
    }
    out
}

fn fundamental_graphs() -> Outcome {
    for (name, g) in [("S(1,0)", s(1, 0)?), ("W(1,0)", build_w_ab(1, 0))] {
        ensure((g.vertex_count(), g.edge_count()) == (5, 4), || {
            format!(
                "{name}: {} vertices, {} edges",
                g.vertex_count(),
                g.edge_count()
            )
        })?;
        let colors = single_path_colors(&g);
        ensure(colors == [1, 2, 2, 1], || {
            format!("{name}: path colors {colors:?}")
        })?;
    }
    for (name, g) in [("S(0,1)", s(0, 1)?), ("W(0,1)", build_w_ab(0, 1))] {
        let central = g.central_edges().count();
        ensure(g.vertex_count() == 4 && central == 1, || {
            format!(
                "{name}: {} vertices, {central} central edges",
                g.vertex_count()
            )
        })?;
    }
    Ok("5 and 4 vertices, path 1,2,2,1, one central edge".into())
}

fn degree_seven_words() -> Outcome {
    let g = s(1, 1)?;
    ensure(g.vertex_count() == 16, || {
        format!("{} vertices", g.vertex_count())
    })?;
    let (src, sink) = (g.sources(), g.sinks());
    ensure(src.len() == 1 && sink.len() == 1, || {
        "not a single source and sink".into()
    })?;
    let words: Vec<String> = operator_words(&g, src[0], sink[0]).into_iter().collect();
    let expected = ["1221212", "1222112", "2112221", "2121221"];
    ensure(words == expected, || format!("words {words:?}"))?;
    Ok(words.join(" "))
}

fn s_equals_w() -> Outcome {
    for a in 0..=4 {
        for b in 0..=4 {
            ensure(iso(&s(a, b)?, &build_w_ab(a, b))?, || {
                format!("S({a},{b}) vs W({a},{b})")
            })?;
        }
    }
    Ok("25 pairs isomorphic with central marks".into())
}

fn axiom_soundness() -> Outcome {
    for a in 0..=4 {
        for b in 0..=4 {
            for (name, g) in [
                (format!("S({a},{b})"), s(a, b)?),
                (format!("W({a},{b})"), build_w_ab(a, b)),
            ] {
                let r = verify(&g);
                ensure(r.passed(), || {
                    format!(
                        "{name} fails: {:?}",
                        r.failures().map(|f| &f.axiom).collect::<Vec<_>>()
                    )
                })?;
            }
        }
    }
    let mut rng = rand::rngs::StdRng::seed_from_u64(0x005e_edb2);
    let mut tried = 0;
    for (name, g) in [("S(2,2)", s(2, 2)?), ("W(2,2)", build_w_ab(2, 2))] {
        let mut pool = all_mutations(&g);
        pool.shuffle(&mut rng);
        for m in pool.into_iter().take(120) {
            tried += 1;
            let r = verify(&apply_mutation(&g, m));
            ensure(r.violation_count() > 0, || {
                format!("{name}: {m:?} not detected")
            })?;
        }
    }
    Ok(format!(
        "50 graphs verify; {tried} random mutations all detected"
    ))
}

fn central_graph_round_trip() -> Outcome {
    for a in 0..=3 {
        for b in 0..=3 {
            let c = build_c(a, b);
            let e = extract_central_graph(&s(a, b)?).map_err(|e| e.to_string())?;
            let same = e.is_isomorphic_to(&c).map_err(|e| e.to_string())?
                && e.otimes_vertices().len() == c.otimes_vertices().len();
            ensure(same, || format!("C(S({a},{b})) differs from C({a},{b})"))?;
        }
    }
    for a in 0..=4 {
        for b in 0..=4 {
            let w = build_w_ab(a, b);
            let e = extract_central_graph(&w).map_err(|e| e.to_string())?;
            let m = interval_model_central_graph(&w).map_err(|e| e.to_string())?;
            let same = e.is_isomorphic_to(&m).map_err(|e| e.to_string())?
                && e.otimes_ids() == m.otimes_ids();
            ensure(same, || {
                format!("C(W({a},{b})) differs from the interval model")
            })?;
        }
    }
    Ok("16 sail and 25 worm central graphs match".into())
}

fn string_quadruple_suite() -> Outcome {
    let r = check_cones_and_relations(6);
    ensure(r.passed(), || {
        format!("{} failures, first: {}", r.failures.len(), r.failures[0])
    })?;
    Ok(format!("{} worms checked", r.checked))
}

fn cone_realization() -> Outcome {
    let literal = cone_realization_check(3);
    let strict = strict_cone_realization_check(3);
    let strict_note = if strict.passed() {
        format!(
            "strict cone 2a2>=a3>=2a4 and b-cone fully realized ({} points)",
            strict.checked
        )
    } else {
        format!("strict cone check also fails: {:?}", strict.failures)
    };
    // Points of the printed cone that the min-relations exclude: b4 would be
    // a3 - 2 a4 < 0.
    let excluded: Vec<String> = a_cone_points(3)
        .iter()
        .filter(|q| q.0[2] < 2 * q.0[3])
        .map(|q| format!("unrealized a cone vector {q}"))
        .collect();
    let explained = if literal.failures == excluded {
        "exactly the points with a3<2a4, where the min-relation makes b4 negative"
    } else {
        "not explained by a3<2a4"
    };
    ensure(literal.passed(), || {
        format!(
            "{} of {} points with 2a2>=a3>=a4 unrealized, e.g. {}; {explained}; {strict_note}",
            literal.failures.len(),
            literal.checked,
            literal.failures[0].trim_start_matches("unrealized a cone vector ")
        )
    })?;
    Ok(format!(
        "{} points realized, box doubling stable",
        literal.checked
    ))
}

fn vertex_count_law() -> Outcome {
    for a in 0..=5 {
        for b in 0..=5 {
            let closed = (a + 1) * (b + 1) * (a + b + 2) * (2 * a + b + 3) / 6;
            let bfs = bfs_worm_count(a, b) as i64;
            let built = build_w_ab(a, b).vertex_count() as i64;
            let enumerated = enumerate_admissible(&WormBox::ab(a, b)).len() as i64;
            let agree = [bfs, built, enumerated, w_vertex_count(a, b)] == [closed; 4];
            ensure(agree, || {
                format!("W({a},{b}): bfs {bfs}, graph {built}, enumeration {enumerated}, formula {closed}")
            })?;
        }
    }
    let spots = [
        w_vertex_count(1, 0),
        w_vertex_count(0, 1),
        w_vertex_count(1, 1),
    ];
    ensure(spots == [5, 4, 16], || format!("spot values {spots:?}"))?;
    Ok("36 boxes match the closed form".into())
}

fn delta_and_weight_sweeps() -> Outcome {
    let mut two_edges = DeltaTally::new();
    let mut edges = 0;
    for a in 0..=4 {
        for b in 0..=4 {
            for (name, g) in [
                (format!("S({a},{b})"), s(a, b)?),
                (format!("W({a},{b})"), build_w_ab(a, b)),
            ] {
                ensure(weight_potential(&g).is_some(), || {
                    format!("{name}: no weight mapping")
                })?;
                let pos = positions(&g);
                for (e, edge) in g.edges().iter().enumerate() {
                    edges += 1;
                    let d = delta(&g, e);
                    let want = match edge.color {
                        EdgeColor::One if edge.central => (-1, 1),
                        EdgeColor::One if pos[edge.src] == Pos::Left => (-2, 0),
                        EdgeColor::One => (0, 2),
                        EdgeColor::Two if pos[edge.src] == Pos::Right => (-1, 0),
                        EdgeColor::Two => (0, 1),
                    };
                    ensure(d == want, || {
                        format!("{name}: {} has {d:?}, table {want:?}", g.edge_label(e))
                    })?;
                }
            }
            let g = build_w_ab(a, b);
            for (e, edge) in g.edges().iter().enumerate() {
                let u: WormState = g.id(edge.src).parse().map_err(|e| format!("{e}"))?;
                let measured = delta(&g, e);
                let predicted = predict_edge_delta(&u, edge.color);
                ensure(predicted == measured, || {
                    format!("{u}: predicted {predicted:?}, measured {measured:?}")
                })?;
                if edge.color == EdgeColor::Two {
                    *two_edges
                        .entry((measured, literal_two_edge_rule(&u)))
                        .or_default() += 1;
                }
            }
        }
    }
    let sign_flips = two_edges.get(&((-1, 0), (1, 0))).copied().unwrap_or(0);
    let guard_misses = two_edges.get(&((0, 1), (1, 0))).copied().unwrap_or(0);
    Ok(format!(
        "{edges} edges match the delta table; 2-edges after the center measure (-1,0), \
         the literal (1,0) rule is off on {sign_flips} sign flips and {guard_misses} symmetric worms"
    ))
}

fn principal_intervals() -> Outcome {
    let mut checked = 0;
    for a in 0..=3 {
        for b in 0..=3 {
            let g = s(a, b)?;
            for i in 0..=a {
                for j in 0..=b {
                    for i2 in i..=a {
                        for j2 in j..=b {
                            let x = g
                                .vertex(&format!("P({i},{j})"))
                                .ok_or("missing principal")?;
                            let y = g
                                .vertex(&format!("P({i2},{j2})"))
                                .ok_or("missing principal")?;
                            let iv = interval(&g, x, y);
                            ensure(!iv.empty && iso(&iv.graph, &s(i2 - i, j2 - j)?)?, || {
                                format!("S({a},{b}) between P({i},{j}) and P({i2},{j2})")
                            })?;
                            checked += 1;
                        }
                    }
                }
            }
        }
    }
    Ok(format!("{checked} principal intervals"))
}

fn main() {
    let criteria: [Criterion; 10] = [
        (
            "fundamental graphs",
            Some(Duration::from_secs(1)),
            fundamental_graphs,
        ),
        (
            "degree-7 relations in S(1,1)",
            Some(Duration::from_secs(1)),
            degree_seven_words,
        ),
        (
            "S(a,b) = W(a,b) for a,b <= 4",
            Some(Duration::from_secs(30)),
            s_equals_w,
        ),
        (
            "axiom soundness and mutations",
            Some(Duration::from_secs(60)),
            axiom_soundness,
        ),
        ("central graph round trip", None, central_graph_round_trip),
        (
            "string quadruples at depth 6",
            Some(Duration::from_secs(10)),
            string_quadruple_suite,
        ),
        ("cone realization, entries <= 3", None, cone_realization),
        ("vertex-count law for a,b <= 5", None, vertex_count_law),
        (
            "weight, delta and predictor sweeps",
            None,
            delta_and_weight_sweeps,
        ),
        (
            "principal intervals for a,b <= 3",
            None,
            principal_intervals,
        ),
    ];
    let mut failed = 0;
    for (k, (name, budget, check)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let mut outcome = check();
        let elapsed = start.elapsed();
        if let (Ok(_), Some(limit)) = (&outcome, budget) {
            if elapsed > limit {
                outcome = Err(format!("took {elapsed:.2?}, budget {limit:?}"));
            }
        }
        let (tag, detail) = match &outcome {
            Ok(d) => ("PASS", d),
            Err(d) => ("FAIL", d),
        };
        failed += outcome.is_err() as usize;
        println!(
            "criterion {:>2} {tag} {name} ({elapsed:.2?}): {detail}",
            k + 1
        );
    }
    println!("{} of 10 criteria passed", 10 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
