//! Acceptance suite: one line per criterion, non-zero exit if any fails.
//!
//! Run with `cargo test -p etaedge --test acceptance`.

mod common;

use std::ops::ControlFlow;
use std::time::{Duration, Instant};

use common::{builder_k44, check_trace, cycle, named, regular_corpus};
use etaedge::additive::{bound_thm24, build_an, check_difference_condition, verify_additive};
use etaedge::constructions::Family;
use etaedge::exact::{classify, resistance};
use etaedge::oracle::{exact_d_colorable, exact_eta_p_prime, exact_resistance, for_each_proper_coloring, sample_proper_coloring};
use etaedge::spaced::{is_spaced, make_spaced, spaced_to_additive, PhaseStatus, SpacedOutcome};
use etaedge::{Budgeted, EdgeColoring, Girth, Graph, LabelSet, NodeBudget, DEFAULT_NODE_BUDGET};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn coloring(labels: &[u64], k: u64) -> EdgeColoring {
    EdgeColoring::new(labels.to_vec(), LabelSet::range(k)).unwrap()
}

fn additive(g: &Graph, c: &EdgeColoring) -> bool {
    verify_additive(g, c, true).map(|v| v.ok).unwrap_or(false)
}

fn samples_additive(g: &Graph, labels: &LabelSet, count: usize, seed: u64) -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut budget = NodeBudget::default();
    for i in 0..count {
        let c = match sample_proper_coloring(g, labels, &mut rng, &mut budget) {
            Budgeted::Done(Some(c)) => c,
            other => return Err(format!("sample {i}: {other:?}")),
        };
        ensure!(c.is_proper(g), "sample {i} improper");
        ensure!(additive(g, &c), "sample {i} not additive: {:?}", c.labels());
    }
    Ok(())
}

fn label_set_family() -> Outcome {
    let start = Instant::now();
    for n in 1..=10u32 {
        let a = build_an(n).map_err(|e| e.to_string())?;
        ensure!(a.len() == 1 << n, "|A_{n}| = {}", a.len());
        ensure!(a.max() == Some((1u64 << (2 * n)).div_ceil(3)), "max A_{n} = {:?}", a.max());
        ensure!(check_difference_condition(&a), "A_{n} fails the difference condition");
    }
    let t = start.elapsed();
    ensure!(t < Duration::from_secs(5), "took {t:?}");
    Ok(format!("n = 1..10 in {t:?}"))
}

fn class_one_exhaustive() -> Outcome {
    let k4 = named(Family::Complete, &[4]);
    let three = LabelSet::range(3);
    let mut all_additive = true;
    let count = for_each_proper_coloring(&k4, &three, &mut NodeBudget::default(), |labels| {
        all_additive &= additive(&k4, &EdgeColoring::new(labels.to_vec(), three.clone()).unwrap());
        ControlFlow::Continue(())
    });
    ensure!(count == Budgeted::Done(6), "K4 has {count:?} proper 3-colorings");
    ensure!(all_additive, "a proper 3-coloring of K4 is not additive");
    samples_additive(&named(Family::CompleteBipartite, &[3, 3]), &three, 1000, 1)?;
    samples_additive(&named(Family::Hypercube, &[3]), &three, 1000, 2)?;
    Ok("K4: 6/6 additive; K3,3 and Q3: 1000/1000 each".into())
}

fn petersen_with_a2() -> Outcome {
    let p = named(Family::Petersen, &[]);
    samples_additive(&p, &LabelSet::new(vec![1, 2, 5, 6]).unwrap(), 500, 3)?;
    let b = bound_thm24(3).map_err(|e| e.to_string())?;
    ensure!((b.paper_bound, b.refined_bound) == (6, 6), "bound(3) = {b:?}");
    Ok("500/500 additive; bound(3) = (6, 6)".into())
}

fn spaced_pipeline() -> Outcome {
    let c7 = cycle(7);
    let out = spaced_to_additive(&c7, &coloring(&[3, 1, 2, 1, 2, 1, 2], 3)).map_err(|e| e.to_string())?;
    ensure!(out.labels() == [1, 2, 4, 2, 4, 2, 4], "labels {:?}", out.labels());
    let v = verify_additive(&c7, &out, true).map_err(|e| e.to_string())?;
    ensure!(v.sums == [6, 5, 4, 8, 4, 8, 3], "sums {:?}", v.sums);
    ensure!(v.ok && out.max_label() == Some(4), "not additive or wrong max");

    // corpus: resistance witnesses, their spaced versions and random samples
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut checked = 0;
    for (name, g) in regular_corpus() {
        let d = g.regular_degree().unwrap() as u64;
        if d == 0 {
            continue;
        }
        let mut candidates = Vec::new();
        if let Budgeted::Done(r) = resistance(&g, DEFAULT_NODE_BUDGET).map_err(|e| e.to_string())? {
            if r.resistance > 0 {
                if let Ok(rep) = make_spaced(&g, &r.witness, None) {
                    if let SpacedOutcome::Success { projection, .. } = rep.outcome {
                        candidates.push(projection);
                    }
                }
            }
            candidates.push(EdgeColoring::new(r.witness.labels().to_vec(), LabelSet::range(d + 1)).unwrap());
        }
        for _ in 0..20 {
            if let Budgeted::Done(Some(c)) =
                sample_proper_coloring(&g, &LabelSet::range(d + 1), &mut rng, &mut NodeBudget::default())
            {
                candidates.push(c);
            }
        }
        for c in candidates {
            if is_spaced(&g, &c).map_err(|e| e.to_string())? {
                let a = spaced_to_additive(&g, &c).map_err(|e| format!("{name}: {e}"))?;
                ensure!(a.is_proper(&g) && additive(&g, &a), "{name}: transform not proper additive");
                ensure!(a.max_label().unwrap() <= 2 * d, "{name}: max label {:?}", a.max_label());
                checked += 1;
            }
        }
    }
    ensure!(checked > 0, "no spaced coloring in the corpus");
    Ok(format!("C7 exact; {checked} spaced corpus colorings transformed"))
}

fn timed<T>(f: impl FnOnce() -> T) -> Result<T, String> {
    let start = Instant::now();
    let out = f();
    let t = start.elapsed();
    ensure!(t <= Duration::from_secs(60), "took {t:?}");
    Ok(out)
}

fn oracle_ground_truth() -> Outcome {
    for (name, g) in [("C5", cycle(5)), ("C7", cycle(7)), ("K4", named(Family::Complete, &[4]))] {
        let r = timed(|| exact_eta_p_prime(&g, 16, DEFAULT_NODE_BUDGET))?.map_err(|e| e.to_string())?;
        let r = r.done().ok_or(format!("{name}: budget exhausted"))?;
        ensure!(r.k == 3, "{name}: eta' = {}", r.k);
        ensure!(additive(&g, &r.witness), "{name}: witness not additive");
    }
    // the documented witnesses are additive as well
    ensure!(additive(&cycle(5), &coloring(&[1, 3, 1, 2, 3], 3)), "C5 reference witness");
    ensure!(additive(&cycle(7), &coloring(&[1, 3, 1, 2, 3, 1, 2], 3)), "C7 reference witness");
    let p = named(Family::Petersen, &[]);
    let r = timed(|| exact_resistance(&p, DEFAULT_NODE_BUDGET))?.map_err(|e| e.to_string())?;
    let r = r.done().ok_or("Petersen resistance: budget exhausted")?;
    ensure!(r.resistance == 2, "Petersen resistance {}", r.resistance);
    ensure!(p.girth() == Girth::Finite(5), "Petersen girth {}", p.girth());
    Ok("eta'(C5) = eta'(C7) = eta'(K4) = 3; r(Petersen) = 2; girth(Petersen) = 5".into())
}

fn recoloring_walk() -> Outcome {
    // (a)
    let c7 = cycle(7);
    let c = coloring(&[3, 1, 2, 1, 2, 1, 2], 3);
    let rep = make_spaced(&c7, &c, None).map_err(|e| e.to_string())?;
    ensure!(rep.trace.phases.len() == 1 && rep.trace.phases[0].status == PhaseStatus::Satisfied { step: 0 }, "C7 did not stop at step 0");
    match &rep.outcome {
        SpacedOutcome::Success { projection, .. } => {
            ensure!(projection == &c, "C7 coloring changed");
            ensure!(is_spaced(&c7, projection).unwrap(), "C7 projection not spaced");
        }
        other => return Err(format!("C7: {other:?}")),
    }

    // (b)
    let p = named(Family::Petersen, &[]);
    let w = resistance(&p, DEFAULT_NODE_BUDGET).map_err(|e| e.to_string())?.done().ok_or("resistance budget")?;
    ensure!(w.resistance == 2, "Petersen witness has {} heavy edges", w.resistance);
    let rep = make_spaced(&p, &w.witness, None).map_err(|e| e.to_string())?;
    check_trace(&p, &rep.trace).map_err(|e| format!("Petersen trace: {e}"))?;
    let petersen = if rep.succeeded() { "success" } else { "budget exhausted" };

    // (c)
    let mut successes = 0;
    let mut graphs: Vec<(String, Graph, EdgeColoring)> = Vec::new();
    for (name, g) in regular_corpus() {
        if let Budgeted::Done(r) = resistance(&g, DEFAULT_NODE_BUDGET).map_err(|e| e.to_string())? {
            if r.resistance > 0 {
                graphs.push((name, g, r.witness));
            }
        }
    }
    let b = builder_k44();
    graphs.push(("builder(K4,4)".into(), b.graph, b.coloring));
    for (name, g, start) in graphs {
        let rep = make_spaced(&g, &start, None).map_err(|e| format!("{name}: {e}"))?;
        check_trace(&g, &rep.trace).map_err(|e| format!("{name}: {e}"))?;
        if let SpacedOutcome::Success { projection, .. } = rep.outcome {
            let d = g.regular_degree().unwrap() as u64;
            ensure!(is_spaced(&g, &projection).unwrap(), "{name}: projection not spaced");
            let a = spaced_to_additive(&g, &projection).map_err(|e| format!("{name}: {e}"))?;
            ensure!(additive(&g, &a) && a.max_label().unwrap() <= 2 * d, "{name}: chain fails");
            successes += 1;
        }
    }
    Ok(format!("C7 immediate; Petersen invariants hold ({petersen}); {successes} corpus successes verified"))
}

fn builder_k44_criterion() -> Outcome {
    let b = builder_k44();
    let g = &b.graph;
    ensure!(g.vertex_count() == 17, "{} vertices", g.vertex_count());
    ensure!(g.regular_degree() == Some(4), "not 4-regular");
    ensure!(b.coloring.is_proper(g) && b.coloring.universe().len() == 5, "coloring not a proper 5-coloring");
    ensure!(b.coloring.class(5).len() == 2, "class 5 has {} edges", b.coloring.class(5).len());
    ensure!(g.girth().at_least(4), "girth {}", g.girth());
    let start = Instant::now();
    let r = exact_resistance(g, DEFAULT_NODE_BUDGET).map_err(|e| e.to_string())?;
    let r = r.done().ok_or("exact resistance: budget exhausted")?;
    ensure!(r.resistance == 2, "exact resistance {}", r.resistance);
    Ok(format!("17 vertices, 4-regular, 2 heavy edges, girth {}, exact resistance 2 in {:?}", g.girth(), start.elapsed()))
}

fn cross_validation() -> Outcome {
    let mut count = 0;
    for (name, g) in regular_corpus().into_iter().filter(|(_, g)| g.edge_count() <= 16) {
        let fast = resistance(&g, DEFAULT_NODE_BUDGET).map_err(|e| e.to_string())?.done().ok_or(format!("{name}: budget"))?;
        let slow = exact_resistance(&g, DEFAULT_NODE_BUDGET).map_err(|e| e.to_string())?.done().ok_or(format!("{name}: oracle budget"))?;
        ensure!(fast.resistance == slow.resistance, "{name}: {} vs oracle {}", fast.resistance, slow.resistance);
        let class = classify(&g, DEFAULT_NODE_BUDGET).map_err(|e| e.to_string())?.class().ok_or(format!("{name}: classify budget"))?;
        let colorable = exact_d_colorable(&g, DEFAULT_NODE_BUDGET).map_err(|e| e.to_string())?.done().ok_or(format!("{name}: oracle budget"))?;
        ensure!((class == 1) == colorable.is_some(), "{name}: class {class} vs oracle {}", colorable.is_some());
        ensure!((class == 1) == (fast.resistance == 0), "{name}: class {class} with resistance {}", fast.resistance);
        count += 1;
    }
    Ok(format!("{count} regular graphs with at most 16 edges agree"))
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("1 label sets A_n", label_set_family),
        ("2 class-1 colorings are additive", class_one_exhaustive),
        ("3 Petersen with {1,2,5,6}", petersen_with_a2),
        ("4 spaced-to-additive pipeline", spaced_pipeline),
        ("5 oracle ground truth", oracle_ground_truth),
        ("6 recoloring walk", recoloring_walk),
        ("7 high-resistance builder on K4,4", builder_k44_criterion),
        ("8 resistance and class cross-validation", cross_validation),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let t = start.elapsed();
        match outcome {
            Ok(detail) => println!("PASS  criterion {name}: {detail} [{t:.2?}]"),
            Err(why) => {
                failed += 1;
                println!("FAIL  criterion {name}: {why} [{t:.2?}]");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 8 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
