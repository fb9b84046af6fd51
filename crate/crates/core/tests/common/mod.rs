//! Shared fixtures and independent reference checks for the integration
//! tests.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};

use etaedge::constructions::{build_high_resistance, generate, Family};
use etaedge::spaced::{RecolorTrace, TaggedColoring, TaggedLabel};
use etaedge::{Graph, VertexId};
use rand::seq::SliceRandom;
use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn named(f: Family, p: &[usize]) -> Graph {
    generate(f, p).unwrap()
}

pub fn cycle(n: usize) -> Graph {
    named(Family::Cycle, &[n])
}

/// Triangular prism: two triangles joined by a perfect matching.
pub fn prism() -> Graph {
    Graph::new(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)]).unwrap()
}

/// Möbius ladder: an `n`-cycle plus its `n/2` long diagonals.
pub fn mobius_ladder(n: usize) -> Graph {
    let edges = (0..n).map(|i| (i, (i + 1) % n)).chain((0..n / 2).map(|i| (i, i + n / 2)));
    Graph::new(n, edges).unwrap()
}

/// Uniform pairing-model d-regular multigraph, rejected until simple.
pub fn random_regular(n: usize, d: usize, rng: &mut ChaCha8Rng) -> Graph {
    assert!((n * d).is_multiple_of(2) && d < n);
    loop {
        let mut points: Vec<VertexId> = (0..n).flat_map(|v| std::iter::repeat_n(v, d)).collect();
        points.shuffle(rng);
        let mut seen = BTreeSet::new();
        let ok = points.chunks(2).all(|p| p[0] != p[1] && seen.insert((p[0].min(p[1]), p[0].max(p[1]))));
        if ok {
            return Graph::new(n, seen).unwrap();
        }
    }
}

/// Random simple graph with edge probability `p`.
pub fn random_graph(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).unwrap()
}

/// Regular graphs used for the cross-checks: named graphs, small cycles,
/// hand-built cubic graphs and seeded random regular graphs.
pub fn regular_corpus() -> Vec<(String, Graph)> {
    let mut out: Vec<(String, Graph)> = Vec::new();
    for n in 3..=16 {
        out.push((format!("C{n}"), cycle(n)));
    }
    for n in 2..=6 {
        out.push((format!("K{n}"), named(Family::Complete, &[n])));
    }
    for (a, b) in [(1, 1), (2, 2), (3, 3), (4, 4)] {
        out.push((format!("K{a},{b}"), named(Family::CompleteBipartite, &[a, b])));
    }
    for k in 1..=4 {
        out.push((format!("Q{k}"), named(Family::Hypercube, &[k])));
    }
    out.push(("petersen".into(), named(Family::Petersen, &[])));
    out.push(("heawood".into(), named(Family::Heawood, &[])));
    out.push(("prism".into(), prism()));
    out.push(("mobius8".into(), mobius_ladder(8)));
    out.push(("mobius10".into(), mobius_ladder(10)));
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for (n, d, count) in [(6, 3, 3), (8, 3, 6), (10, 3, 6), (5, 4, 1), (7, 4, 3), (8, 4, 3), (9, 4, 2)] {
        for i in 0..count {
            out.push((format!("rr{n}_{d}_{i}"), random_regular(n, d, &mut rng)));
        }
    }
    out
}

/// Every graph used for I/O round trips: the regular corpus plus random
/// irregular graphs and some with isolated vertices.
pub fn io_corpus() -> Vec<(String, Graph)> {
    let mut out = regular_corpus();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for i in 0..20 {
        let n = 1 + i % 12;
        out.push((format!("gnp{i}"), random_graph(n, 0.4, &mut rng)));
    }
    out.push(("empty0".into(), Graph::empty(0)));
    out.push(("empty5".into(), Graph::empty(5)));
    out.push(("isolated".into(), Graph::new(7, [(0, 1), (2, 3)]).unwrap()));
    out.push(("big".into(), Graph::new(70, [(0, 69), (10, 11)]).unwrap()));
    out
}

/// Girth by enumerating simple cycles from their smallest vertex.
pub fn brute_girth(g: &Graph) -> Option<usize> {
    fn dfs(g: &Graph, start: usize, v: usize, len: usize, on: &mut [bool], best: &mut Option<usize>) {
        for w in g.neighbors(v).collect::<Vec<_>>() {
            if w == start && len >= 3 {
                *best = Some(best.map_or(len, |b: usize| b.min(len)));
            } else if w > start && !on[w] {
                on[w] = true;
                dfs(g, start, w, len + 1, on, best);
                on[w] = false;
            }
        }
    }
    let mut best = None;
    for s in 0..g.vertex_count() {
        let mut on = vec![false; g.vertex_count()];
        on[s] = true;
        dfs(g, s, s, 1, &mut on, &mut best);
    }
    best
}

/// Incidence graph of the symplectic generalized quadrangle W(3): points
/// and totally isotropic lines of PG(3, 3). 80 vertices, 4-regular,
/// bipartite, girth 8. Points are `0..40`, lines `40..80`.
pub fn symplectic_gq3() -> Graph {
    let normalize = |v: [u8; 4]| -> [u8; 4] {
        let lead = *v.iter().find(|&&x| x != 0).unwrap();
        if lead == 1 {
            v
        } else {
            v.map(|x| (x * 2) % 3)
        }
    };
    let form = |x: [u8; 4], y: [u8; 4]| -> u8 {
        let s = x[0] as i32 * y[1] as i32 - x[1] as i32 * y[0] as i32 + x[2] as i32 * y[3] as i32
            - x[3] as i32 * y[2] as i32;
        s.rem_euclid(3) as u8
    };
    let mut points: Vec<[u8; 4]> = Vec::new();
    for code in 1..81u32 {
        let v = [0, 1, 2, 3].map(|i| ((code / 3u32.pow(i)) % 3) as u8);
        let v = normalize(v);
        if !points.contains(&v) {
            points.push(v);
        }
    }
    assert_eq!(points.len(), 40);
    let index: HashMap<[u8; 4], usize> = points.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let mut lines: BTreeSet<Vec<usize>> = BTreeSet::new();
    for (i, &p) in points.iter().enumerate() {
        for &q in &points[i + 1..] {
            if form(p, q) != 0 {
                continue;
            }
            let mut line: Vec<usize> = [q, add(p, q, 1), add(p, q, 2), p]
                .into_iter()
                .map(|v| index[&normalize(v)])
                .collect();
            line.sort_unstable();
            line.dedup();
            assert_eq!(line.len(), 4);
            lines.insert(line);
        }
    }
    assert_eq!(lines.len(), 40);
    let edges: Vec<(usize, usize)> = lines
        .iter()
        .enumerate()
        .flat_map(|(l, pts)| pts.iter().map(move |&p| (p, 40 + l)))
        .collect();
    Graph::new(80, edges).unwrap()
}

fn add(p: [u8; 4], q: [u8; 4], k: u8) -> [u8; 4] {
    [0, 1, 2, 3].map(|i| (p[i] * k + q[i]) % 3)
}

/// The builder applied to `K_{4,4}`.
pub fn builder_k44() -> etaedge::constructions::BuilderOutput {
    build_high_resistance(4, &named(Family::CompleteBipartite, &[4, 4]), None, None).unwrap()
}

fn tag_counts(g: &Graph, c: &TaggedColoring, v: VertexId) -> (usize, bool) {
    let mut plain = BTreeSet::new();
    let mut tags = 0;
    let mut distinct = true;
    for &(_, e) in g.incident(v) {
        match c.label(e) {
            TaggedLabel::Plain(l) => distinct &= plain.insert(l),
            TaggedLabel::Tag(_) => tags += 1,
        }
    }
    (tags, distinct)
}

/// Checks walk validity, tag conservation and local properness on every
/// step of a trace, by replaying it. Returns a description of the first
/// failure.
pub fn check_trace(g: &Graph, trace: &RecolorTrace) -> Result<(), String> {
    let r = trace.tags;
    let states = trace.replay();
    let mut idx = 1;
    let initial = &states[0].2;
    if initial.projection().first_conflict(g).is_some() {
        return Err("initial coloring improper".into());
    }
    let mut prev_state = initial.clone();
    for phase in &trace.phases {
        let i = phase.phase;
        let mut prev_walk = phase.start.to_vec();
        if g.edge_between(prev_walk[0], prev_walk[1]) != Some(prev_state.tag_edge(i)) {
            return Err(format!("phase {i}: start is not the tag edge"));
        }
        for step in &phase.steps {
            let (_, _, state) = &states[idx];
            idx += 1;
            let w = &step.walk;
            if w.len() != prev_walk.len() + 1 || w[..prev_walk.len()] != prev_walk[..] {
                return Err(format!("phase {i} step {}: walk does not extend", step.step));
            }
            let k = w.len() - 1;
            if !g.adjacent(w[k - 1], w[k]) || w[k] == w[k - 2] {
                return Err(format!("phase {i} step {}: walk not adjacent or backtracks", step.step));
            }
            if g.edge_between(w[k - 2], w[k - 1]) != Some(step.recolored_edge)
                || g.edge_between(w[k - 1], w[k]) != Some(step.tag_edge)
            {
                return Err(format!("phase {i} step {}: delta edges do not match walk", step.step));
            }
            // tag conservation
            for t in 1..=r {
                let carriers = state.labels().iter().filter(|&&l| l == TaggedLabel::Tag(t)).count();
                if carriers != 1 {
                    return Err(format!("phase {i} step {}: tag {t} on {carriers} edges", step.step));
                }
                if t != i && state.tag_edge(t) != prev_state.tag_edge(t) {
                    return Err(format!("phase {i} step {}: tag {t} moved", step.step));
                }
            }
            if state.projection().universe().len() != trace.d + 1 {
                return Err("projection universe changed".into());
            }
            // local properness
            let heads = [w[k - 1], w[k]];
            for v in 0..g.vertex_count() {
                let (tags, distinct) = tag_counts(g, state, v);
                let limit = if heads.contains(&v) { 2 } else { 1 };
                if !distinct || tags > limit {
                    return Err(format!(
                        "phase {i} step {}: vertex {v} has {tags} tags, plain labels distinct: {distinct}",
                        step.step
                    ));
                }
            }
            prev_walk = w.clone();
            prev_state = state.clone();
        }
        if let etaedge::spaced::PhaseStatus::Satisfied { .. } = phase.status {
            if !prev_state.satisfies_property(g, i) {
                return Err(format!("phase {i} reported satisfied but P_{i} fails"));
            }
        }
    }
    Ok(())
}
