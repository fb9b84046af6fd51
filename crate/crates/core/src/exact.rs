//! Exact edge-colorability search, Vizing classification and resistance.
//!
//! The colorability search is a depth-first search over edges with
//! most-constrained-edge-first selection (ties by smallest id), labels tried
//! in increasing order, and the usual label-symmetry cut: a branch may open
//! at most one previously unused label. Each node is checked for empty
//! domains and against a per-label counting bound: a label class is a
//! matching, so it can still grow by at most half the vertices that lack it
//! and can still receive it.

use serde::Serialize;

use crate::budget::{Budgeted, NodeBudget};
use crate::coloring::EdgeColoring;
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph};
use crate::label_set::LabelSet;
use crate::vizing::{bipartite_edge_color, proper_edge_color};

/// Outcome of one colorability search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Colorability {
    /// Labels `1..=k` per edge; removed edges carry 0.
    Colorable(Vec<u8>),
    Uncolorable,
    Unknown,
}

struct Search<'a> {
    g: &'a Graph,
    k: usize,
    active: &'a [bool],
    color: Vec<u8>,
    // bit c set when label c is present at the vertex
    used: Vec<u64>,
    remaining: usize,
    budget: &'a mut NodeBudget,
}

impl Search<'_> {
    #[inline]
    fn domain(&self, e: EdgeId) -> u64 {
        let (u, v) = self.g.endpoints(e);
        let full = ((1u64 << self.k) - 1) << 1;
        full & !(self.used[u] | self.used[v])
    }

    fn pick_edge(&self) -> Option<(EdgeId, u64)> {
        let mut best: Option<(EdgeId, u64)> = None;
        for e in 0..self.g.edge_count() {
            if !self.active[e] || self.color[e] != 0 {
                continue;
            }
            let dom = self.domain(e);
            if dom == 0 {
                return Some((e, 0));
            }
            if best.is_none_or(|(_, b)| dom.count_ones() < b.count_ones()) {
                best = Some((e, dom));
            }
        }
        best
    }

    fn counting_bound_holds(&self) -> bool {
        let n = self.g.vertex_count();
        let mut capacity = 0usize;
        let mut open = vec![false; n];
        for c in 1..=self.k {
            let bit = 1u64 << c;
            open.iter_mut().for_each(|o| *o = false);
            let mut admitting = 0usize;
            for e in 0..self.g.edge_count() {
                if self.active[e] && self.color[e] == 0 && self.domain(e) & bit != 0 {
                    let (u, v) = self.g.endpoints(e);
                    open[u] = true;
                    open[v] = true;
                    admitting += 1;
                }
            }
            let open_count = open.iter().filter(|&&o| o).count();
            capacity += admitting.min(open_count / 2);
            if capacity >= self.remaining {
                return true;
            }
        }
        capacity >= self.remaining
    }

    fn run(&mut self, max_used: usize) -> Option<bool> {
        if !self.budget.tick() {
            return None;
        }
        let Some((e, dom)) = self.pick_edge() else {
            return Some(true);
        };
        if dom == 0 || !self.counting_bound_holds() {
            return Some(false);
        }
        let (u, v) = self.g.endpoints(e);
        let top = (max_used + 1).min(self.k);
        for c in 1..=top {
            let bit = 1u64 << c;
            if dom & bit == 0 {
                continue;
            }
            self.color[e] = c as u8;
            self.used[u] |= bit;
            self.used[v] |= bit;
            self.remaining -= 1;
            match self.run(max_used.max(c)) {
                Some(false) => {}
                // a success keeps its labels in place
                done => return done,
            }
            self.remaining += 1;
            self.used[u] &= !bit;
            self.used[v] &= !bit;
            self.color[e] = 0;
        }
        Some(false)
    }
}

/// Decides whether the edges with `active[e]` can be properly colored with
/// `k` labels. `k` is at most 63.
pub fn k_edge_colorable(g: &Graph, active: &[bool], k: usize, budget: &mut NodeBudget) -> Colorability {
    assert!(k <= 63, "at most 63 labels supported");
    assert_eq!(active.len(), g.edge_count());
    let remaining = active.iter().filter(|&&a| a).count();
    if remaining == 0 {
        return Colorability::Colorable(vec![0; g.edge_count()]);
    }
    if k == 0 {
        return Colorability::Uncolorable;
    }
    // each label class is a matching
    if remaining > k * (g.vertex_count() / 2) {
        return Colorability::Uncolorable;
    }
    let mut s = Search {
        g,
        k,
        active,
        color: vec![0; g.edge_count()],
        used: vec![0; g.vertex_count()],
        remaining,
        budget,
    };
    match s.run(0) {
        Some(true) => Colorability::Colorable(s.color),
        Some(false) => Colorability::Uncolorable,
        None => Colorability::Unknown,
    }
}

/// How class 2 was established.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Class2Certificate {
    /// `d` matchings cannot cover all edges (`d` even, `|V|` odd).
    Counting,
    /// The exact search exhausted every `d`-coloring.
    Exhaustive,
}

/// Vizing classification of a regular graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "class", rename_all = "snake_case")]
pub enum ClassResult {
    Class1 { witness: EdgeColoring },
    Class2 { witness: EdgeColoring, certificate: Class2Certificate },
    Unknown { expanded: u64 },
}

impl ClassResult {
    /// 1, 2 or `None` for unknown.
    pub fn class(&self) -> Option<u8> {
        match self {
            ClassResult::Class1 { .. } => Some(1),
            ClassResult::Class2 { .. } => Some(2),
            ClassResult::Unknown { .. } => None,
        }
    }
}

fn require_regular(g: &Graph) -> Result<usize> {
    g.regular_degree().ok_or(Error::NotRegular)
}

fn labels_to_coloring(labels: &[u8], universe: u64) -> EdgeColoring {
    EdgeColoring::new(labels.iter().map(|&c| c as u64).collect(), LabelSet::range(universe))
        .expect("search labels lie in the universe")
}

/// A `d+1`-labeled Vizing coloring relabeled into universe `{1, ..., d+1}`.
fn vizing_witness(g: &Graph, d: usize) -> EdgeColoring {
    let c = proper_edge_color(g);
    EdgeColoring::new(c.labels().to_vec(), LabelSet::range(d as u64 + 1))
        .expect("Vizing labels lie in 1..=d+1")
}

pub fn classify(g: &Graph, budget: u64) -> Result<ClassResult> {
    let d = require_regular(g)?;
    if g.edge_count() == 0 {
        return Ok(ClassResult::Class1 { witness: labels_to_coloring(&[], d as u64) });
    }
    if g.is_bipartite() {
        return Ok(ClassResult::Class1 { witness: bipartite_edge_color(g)? });
    }
    if g.edge_count() > d * (g.vertex_count() / 2) {
        return Ok(ClassResult::Class2 {
            witness: vizing_witness(g, d),
            certificate: Class2Certificate::Counting,
        });
    }
    let mut nodes = NodeBudget::new(budget);
    let all = vec![true; g.edge_count()];
    Ok(match k_edge_colorable(g, &all, d, &mut nodes) {
        Colorability::Colorable(labels) => {
            ClassResult::Class1 { witness: labels_to_coloring(&labels, d as u64) }
        }
        Colorability::Uncolorable => ClassResult::Class2 {
            witness: vizing_witness(g, d),
            certificate: Class2Certificate::Exhaustive,
        },
        Colorability::Unknown => ClassResult::Unknown { expanded: nodes.used() },
    })
}

/// Exact resistance and a proper (d+1)-coloring whose class `d+1` has that
/// many edges.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Resistance {
    pub resistance: usize,
    pub witness: EdgeColoring,
}

/// Visits matchings of size `size` in lexicographic order of their sorted
/// edge ids until `visit` returns `Some`.
pub(crate) fn for_each_matching<T>(
    g: &Graph,
    size: usize,
    visit: &mut dyn FnMut(&[EdgeId]) -> Option<T>,
) -> Option<T> {
    fn rec<T>(
        g: &Graph,
        size: usize,
        from: EdgeId,
        covered: &mut [bool],
        chosen: &mut Vec<EdgeId>,
        visit: &mut dyn FnMut(&[EdgeId]) -> Option<T>,
    ) -> Option<T> {
        if chosen.len() == size {
            return visit(chosen);
        }
        let need = size - chosen.len();
        for e in from..g.edge_count() {
            if g.edge_count() - e < need {
                break;
            }
            let (u, v) = g.endpoints(e);
            if covered[u] || covered[v] {
                continue;
            }
            covered[u] = true;
            covered[v] = true;
            chosen.push(e);
            let r = rec(g, size, e + 1, covered, chosen, visit);
            chosen.pop();
            covered[u] = false;
            covered[v] = false;
            if r.is_some() {
                return r;
            }
        }
        None
    }
    let mut covered = vec![false; g.vertex_count()];
    rec(g, size, 0, &mut covered, &mut Vec::with_capacity(size), visit)
}

/// Smallest `k` such that removing some matching of `k` edges leaves a
/// `d`-colorable graph; 0 for class-1 graphs.
///
/// Sizes below `|E| - d*floor(|V|/2)` are skipped, since `d` matchings
/// cannot cover more edges than that.
pub fn resistance(g: &Graph, budget: u64) -> Result<Budgeted<Resistance>> {
    let d = require_regular(g)?;
    let m = g.edge_count();
    if g.is_bipartite() {
        let c = bipartite_edge_color(g)?;
        let witness = EdgeColoring::new(c.labels().to_vec(), LabelSet::range(d as u64 + 1))?;
        return Ok(Budgeted::Done(Resistance { resistance: 0, witness }));
    }
    let mut nodes = NodeBudget::new(budget);
    let lower = m.saturating_sub(d * (g.vertex_count() / 2));
    for size in lower..=m {
        let mut unknown = false;
        let found = for_each_matching(g, size, &mut |f| {
            if !nodes.tick() {
                unknown = true;
                return Some(None);
            }
            let mut active = vec![true; m];
            f.iter().for_each(|&e| active[e] = false);
            match k_edge_colorable(g, &active, d, &mut nodes) {
                Colorability::Colorable(mut labels) => {
                    f.iter().for_each(|&e| labels[e] = d as u8 + 1);
                    Some(Some(labels))
                }
                Colorability::Uncolorable => None,
                Colorability::Unknown => {
                    unknown = true;
                    Some(None)
                }
            }
        });
        if unknown {
            return Ok(Budgeted::Unknown { expanded: nodes.used() });
        }
        if let Some(Some(labels)) = found {
            let witness = labels_to_coloring(&labels, d as u64 + 1);
            return Ok(Budgeted::Done(Resistance { resistance: size, witness }));
        }
    }
    Err(Error::Contract("no matching leaves a d-colorable remainder".into()))
}
