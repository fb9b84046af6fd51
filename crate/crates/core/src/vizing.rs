//! Constructive edge colorings: the Misra–Gries fan-rotation algorithm
//! (at most Δ+1 colors on any simple graph) and the alternating-path
//! algorithm for bipartite graphs (exactly Δ colors).

use crate::coloring::EdgeColoring;
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, VertexId};
use crate::label_set::LabelSet;

/// Partial coloring with per-vertex lookup `color -> edge`.
struct Palette<'g> {
    g: &'g Graph,
    color: Vec<usize>,
    at: Vec<Vec<Option<EdgeId>>>,
}

impl<'g> Palette<'g> {
    fn new(g: &'g Graph, colors: usize) -> Self {
        Palette {
            g,
            color: vec![0; g.edge_count()],
            at: vec![vec![None; colors + 1]; g.vertex_count()],
        }
    }

    #[inline]
    fn free(&self, v: VertexId, c: usize) -> bool {
        self.at[v][c].is_none()
    }

    fn lowest_free(&self, v: VertexId) -> usize {
        (1..self.at[v].len()).find(|&c| self.free(v, c)).expect("palette has a free color")
    }

    fn set(&mut self, e: EdgeId, c: usize) {
        let (u, v) = self.g.endpoints(e);
        self.color[e] = c;
        self.at[u][c] = Some(e);
        self.at[v][c] = Some(e);
    }

    fn clear(&mut self, e: EdgeId) {
        let c = self.color[e];
        if c != 0 {
            let (u, v) = self.g.endpoints(e);
            self.at[u][c] = None;
            self.at[v][c] = None;
            self.color[e] = 0;
        }
    }

    /// Edges of the maximal path from `start` alternating colors `first`,
    /// `second`, `first`, ...
    fn alternating_path(&self, start: VertexId, first: usize, second: usize) -> Vec<EdgeId> {
        let mut path = Vec::new();
        let (mut cur, mut want) = (start, first);
        while let Some(e) = self.at[cur][want] {
            if path.last() == Some(&e) {
                break;
            }
            path.push(e);
            cur = self.g.other_endpoint(e, cur);
            want = if want == first { second } else { first };
        }
        path
    }

    fn swap_on(&mut self, path: &[EdgeId], a: usize, b: usize) {
        let new: Vec<usize> =
            path.iter().map(|&e| if self.color[e] == a { b } else { a }).collect();
        for &e in path {
            self.clear(e);
        }
        for (&e, c) in path.iter().zip(new) {
            self.set(e, c);
        }
    }

    fn finish(self, colors: usize) -> EdgeColoring {
        let labels = self.color.into_iter().map(|c| c as u64).collect();
        EdgeColoring::new(labels, LabelSet::range(colors as u64)).expect("labels within range")
    }
}

/// Proper edge coloring with labels in `{1, ..., Δ+1}`, deterministic for a
/// fixed edge order. The universe of the result is `{1, ..., Δ+1}`
/// (`{1}` for edgeless graphs).
pub fn proper_edge_color(g: &Graph) -> EdgeColoring {
    let colors = g.max_degree() + 1;
    let mut p = Palette::new(g, colors);
    for e in 0..g.edge_count() {
        let (u, v) = g.endpoints(e);

        // maximal fan at u starting with v
        let mut fan = vec![v];
        let mut in_fan = vec![false; g.vertex_count()];
        in_fan[v] = true;
        loop {
            let last = *fan.last().unwrap();
            let next = g.incident(u).iter().find(|&&(w, f)| {
                !in_fan[w] && p.color[f] != 0 && p.free(last, p.color[f])
            });
            match next {
                Some(&(w, _)) => {
                    in_fan[w] = true;
                    fan.push(w);
                }
                None => break,
            }
        }

        let c = p.lowest_free(u);
        let d = p.lowest_free(*fan.last().unwrap());
        let path = p.alternating_path(u, d, c);
        p.swap_on(&path, c, d);

        // longest still-valid fan prefix ending at a vertex where d is free
        let fan_edge = |w: VertexId| g.edge_between(u, w).expect("fan vertices are neighbors");
        let mut end = None;
        for (i, &w) in fan.iter().enumerate() {
            if i > 0 && !p.free(fan[i - 1], p.color[fan_edge(w)]) {
                break;
            }
            if p.free(w, d) {
                end = Some(i);
                break;
            }
        }
        let end = end.expect("fan-rotation invariant: some fan prefix admits color d");

        let shifted: Vec<usize> = (0..end).map(|j| p.color[fan_edge(fan[j + 1])]).collect();
        for &w in &fan[..=end] {
            p.clear(fan_edge(w));
        }
        for (j, col) in shifted.into_iter().enumerate() {
            p.set(fan_edge(fan[j]), col);
        }
        p.set(fan_edge(fan[end]), d);
    }
    p.finish(colors)
}

/// Proper Δ-edge-coloring of a bipartite graph with universe `{1, ..., Δ}`.
pub fn bipartite_edge_color(g: &Graph) -> Result<EdgeColoring> {
    if !g.is_bipartite() {
        return Err(Error::precondition("graph is not bipartite"));
    }
    let colors = g.max_degree().max(1);
    let mut p = Palette::new(g, colors);
    for e in 0..g.edge_count() {
        let (u, v) = g.endpoints(e);
        let a = p.lowest_free(u);
        if !p.free(v, a) {
            let b = p.lowest_free(v);
            let path = p.alternating_path(v, a, b);
            p.swap_on(&path, a, b);
        }
        debug_assert!(p.free(u, a) && p.free(v, a));
        p.set(e, a);
    }
    Ok(p.finish(colors))
}
