//! Brute-force ground truth for small graphs.
//!
//! Nothing here shares search code with [`crate::exact`]: the searches walk
//! edges in id order with labels ascending, and prune only on properness
//! (plus completed neighbor sums for the additive search).

use std::ops::ControlFlow;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::Serialize;

use crate::additive::{check_difference_condition, verify_additive};
use crate::budget::{Budgeted, NodeBudget};
use crate::coloring::EdgeColoring;
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph};
use crate::label_set::LabelSet;

/// Smallest `k` with a proper additive coloring from `{1, ..., k}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EtaPrime {
    pub k: u64,
    pub witness: EdgeColoring,
}

struct AdditiveSearch<'g> {
    g: &'g Graph,
    k: u64,
    labels: Vec<u64>,
    /// Edges whose neighbor sum is fixed once edge `t` is labeled.
    completes_at: Vec<Vec<EdgeId>>,
    nbrs: Vec<Vec<EdgeId>>,
    sum: Vec<u128>,
    fixed: Vec<bool>,
}

impl AdditiveSearch<'_> {
    fn run(&mut self, e: EdgeId, budget: &mut NodeBudget) -> Option<bool> {
        if e == self.g.edge_count() {
            return Some(true);
        }
        let (u, v) = self.g.endpoints(e);
        for l in 1..=self.k {
            if !budget.tick() {
                return None;
            }
            let clash = self.g.incident(u).iter().chain(self.g.incident(v)).any(|&(_, f)| f < e && self.labels[f] == l);
            if clash {
                continue;
            }
            self.labels[e] = l;
            if self.sums_consistent(e) && self.run(e + 1, budget)? {
                return Some(true);
            }
            self.unfix(e);
        }
        self.labels[e] = 0;
        Some(false)
    }

    /// Fixes the sums completed by labeling `t` and compares them with the
    /// already fixed sums of incident edges.
    fn sums_consistent(&mut self, t: EdgeId) -> bool {
        for &e in &self.completes_at[t] {
            self.sum[e] = self.nbrs[e].iter().map(|&f| self.labels[f] as u128).sum();
            self.fixed[e] = true;
        }
        self.completes_at[t]
            .iter()
            .all(|&e| self.nbrs[e].iter().all(|&f| !self.fixed[f] || self.sum[f] != self.sum[e]))
    }

    fn unfix(&mut self, t: EdgeId) {
        for &e in &self.completes_at[t] {
            self.fixed[e] = false;
        }
    }
}

/// Exact proper additive chromatic index: tries `k = Δ, Δ+1, ...` up to
/// `max_label`, each by exhaustive search. The witness is the
/// lexicographically smallest labeling for the returned `k`.
pub fn exact_eta_p_prime(g: &Graph, max_label: u64, budget: u64) -> Result<Budgeted<EtaPrime>> {
    let m = g.edge_count();
    let nbrs: Vec<Vec<EdgeId>> = (0..m).map(|e| g.edge_neighbors(e)).collect::<Result<_>>()?;
    let mut completes_at = vec![Vec::new(); m];
    for (e, ns) in nbrs.iter().enumerate() {
        let t = ns.iter().copied().chain([e]).max().unwrap();
        completes_at[t].push(e);
    }
    let mut nodes = NodeBudget::new(budget);
    for k in (g.max_degree().max(1) as u64)..=max_label {
        let mut search = AdditiveSearch {
            g,
            k,
            labels: vec![0; m],
            completes_at: completes_at.clone(),
            nbrs: nbrs.clone(),
            sum: vec![0; m],
            fixed: vec![false; m],
        };
        match search.run(0, &mut nodes) {
            None => return Ok(Budgeted::Unknown { expanded: nodes.used() }),
            Some(false) => continue,
            Some(true) => {
                let witness = EdgeColoring::new(search.labels, LabelSet::range(k))?;
                if !verify_additive(g, &witness, true)?.ok {
                    return Err(Error::Contract("oracle witness fails verify_additive".into()));
                }
                return Ok(Budgeted::Done(EtaPrime { k, witness }));
            }
        }
    }
    Err(Error::NoneFound(max_label))
}

/// Plain edge-order search for a proper coloring of the active edges with
/// labels `1..=k`. A new label is opened only as the next unused one.
fn colorable(g: &Graph, active: &[bool], k: u64, nodes: &mut NodeBudget) -> Option<Option<Vec<u64>>> {
    fn rec(
        g: &Graph,
        order: &[EdgeId],
        i: usize,
        k: u64,
        opened: u64,
        labels: &mut [u64],
        nodes: &mut NodeBudget,
    ) -> Option<bool> {
        let Some(&e) = order.get(i) else { return Some(true) };
        let (u, v) = g.endpoints(e);
        for l in 1..=k.min(opened + 1) {
            if !nodes.tick() {
                return None;
            }
            if g.incident(u).iter().chain(g.incident(v)).any(|&(_, f)| labels[f] == l) {
                continue;
            }
            labels[e] = l;
            if rec(g, order, i + 1, k, opened.max(l), labels, nodes)? {
                return Some(true);
            }
            labels[e] = 0;
        }
        Some(false)
    }

    let order: Vec<EdgeId> = (0..g.edge_count()).filter(|&e| active[e]).collect();
    // each label class is a matching
    if order.len() as u64 > k * (g.vertex_count() as u64 / 2) {
        return Some(None);
    }
    let mut labels = vec![0; g.edge_count()];
    rec(g, &order, 0, k, 0, &mut labels, nodes).map(|ok| ok.then_some(labels))
}

/// Exhaustive d-edge-colorability of a d-regular graph; `Done(Some(_))`
/// carries a witness.
pub fn exact_d_colorable(g: &Graph, budget: u64) -> Result<Budgeted<Option<EdgeColoring>>> {
    let d = g.regular_degree().ok_or(Error::NotRegular)? as u64;
    let mut nodes = NodeBudget::new(budget);
    Ok(match colorable(g, &vec![true; g.edge_count()], d, &mut nodes) {
        None => Budgeted::Unknown { expanded: nodes.used() },
        Some(found) => Budgeted::Done(found.map(|l| EdgeColoring::new(l, LabelSet::range(d.max(1))).unwrap())),
    })
}

/// Exact resistance with a witness whose class `d+1` has that size.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExactResistance {
    pub resistance: usize,
    pub witness: EdgeColoring,
}

/// Tries every matching `F` in order of size (from 0) and checks whether
/// `G - F` is d-colorable. Each matching costs one node on top of the
/// colorability search.
pub fn exact_resistance(g: &Graph, budget: u64) -> Result<Budgeted<ExactResistance>> {
    let d = g.regular_degree().ok_or(Error::NotRegular)?;
    let m = g.edge_count();
    let mut nodes = NodeBudget::new(budget);

    type Found = ControlFlow<Option<Vec<u64>>>;

    fn matchings(
        g: &Graph,
        size: usize,
        from: EdgeId,
        chosen: &mut Vec<EdgeId>,
        used: &mut [bool],
        visit: &mut dyn FnMut(&[EdgeId]) -> Found,
    ) -> Found {
        if chosen.len() == size {
            return visit(chosen);
        }
        for e in from..g.edge_count() {
            let (u, v) = g.endpoints(e);
            if used[u] || used[v] {
                continue;
            }
            used[u] = true;
            used[v] = true;
            chosen.push(e);
            let flow = matchings(g, size, e + 1, chosen, used, visit);
            chosen.pop();
            used[u] = false;
            used[v] = false;
            flow?;
        }
        ControlFlow::Continue(())
    }

    for size in 0..=g.vertex_count() / 2 {
        let mut visit = |f: &[EdgeId]| {
            if !nodes.tick() {
                return ControlFlow::Break(None);
            }
            let mut active = vec![true; m];
            for &e in f {
                active[e] = false;
            }
            match colorable(g, &active, d as u64, &mut nodes) {
                None => ControlFlow::Break(None),
                Some(None) => ControlFlow::Continue(()),
                Some(Some(mut labels)) => {
                    for &e in f {
                        labels[e] = d as u64 + 1;
                    }
                    ControlFlow::Break(Some(labels))
                }
            }
        };
        let flow = matchings(g, size, 0, &mut Vec::new(), &mut vec![false; g.vertex_count()], &mut visit);
        match flow {
            ControlFlow::Continue(()) => continue,
            ControlFlow::Break(None) => return Ok(Budgeted::Unknown { expanded: nodes.used() }),
            ControlFlow::Break(Some(labels)) => {
                let witness = EdgeColoring::new(labels, LabelSet::range(d as u64 + 1))?;
                witness.check_proper(g)?;
                return Ok(Budgeted::Done(ExactResistance { resistance: size, witness }));
            }
        }
    }
    Err(Error::Contract("no matching leaves a d-colorable remainder".into()))
}

/// Visits every proper coloring with labels from `labels`, in lexicographic
/// order of the label sequence. Returns the number visited.
///
/// The callback may stop the enumeration early with `ControlFlow::Break`.
pub fn for_each_proper_coloring(
    g: &Graph,
    labels: &LabelSet,
    budget: &mut NodeBudget,
    mut visit: impl FnMut(&[u64]) -> ControlFlow<()>,
) -> Budgeted<u64> {
    fn rec(
        g: &Graph,
        palette: &[u64],
        e: EdgeId,
        cur: &mut [u64],
        count: &mut u64,
        budget: &mut NodeBudget,
        visit: &mut dyn FnMut(&[u64]) -> ControlFlow<()>,
    ) -> Option<ControlFlow<()>> {
        if e == g.edge_count() {
            *count += 1;
            return Some(visit(cur));
        }
        let (u, v) = g.endpoints(e);
        for &l in palette {
            if !budget.tick() {
                return None;
            }
            if g.incident(u).iter().chain(g.incident(v)).any(|&(_, f)| f < e && cur[f] == l) {
                continue;
            }
            cur[e] = l;
            if rec(g, palette, e + 1, cur, count, budget, visit)?.is_break() {
                return Some(ControlFlow::Break(()));
            }
        }
        cur[e] = 0;
        Some(ControlFlow::Continue(()))
    }

    let mut count = 0;
    let mut cur = vec![0; g.edge_count()];
    match rec(g, labels.as_slice(), 0, &mut cur, &mut count, budget, &mut visit) {
        Some(_) => Budgeted::Done(count),
        None => Budgeted::Unknown { expanded: budget.used() },
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum StrongSetMethod {
    /// d-regular, `|A| = d+1` and `A` satisfies the difference condition.
    DifferenceCondition,
    Enumeration,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StrongSetVerdict {
    /// Every proper coloring from the set is additive.
    pub strong: bool,
    pub method: StrongSetMethod,
    /// Proper colorings examined (0 when the shortcut applied).
    pub checked: u64,
    pub counterexample: Option<EdgeColoring>,
}

/// Whether every proper coloring of `g` from `a` is additive. The
/// difference-condition shortcut is used when it applies.
pub fn verify_strong_set(g: &Graph, a: &LabelSet, budget: u64) -> Result<Budgeted<StrongSetVerdict>> {
    let d = g.regular_degree();
    if d.is_some_and(|d| d > 0 && a.len() == d + 1) && check_difference_condition(a) {
        return Ok(Budgeted::Done(StrongSetVerdict {
            strong: true,
            method: StrongSetMethod::DifferenceCondition,
            checked: 0,
            counterexample: None,
        }));
    }
    verify_strong_set_exhaustive(g, a, budget)
}

/// [`verify_strong_set`] without the shortcut.
pub fn verify_strong_set_exhaustive(g: &Graph, a: &LabelSet, budget: u64) -> Result<Budgeted<StrongSetVerdict>> {
    let mut nodes = NodeBudget::new(budget);
    let mut counterexample = None;
    let mut failure = None;
    let outcome = for_each_proper_coloring(g, a, &mut nodes, |labels| {
        let c = EdgeColoring::new(labels.to_vec(), a.clone()).expect("labels drawn from the set");
        match verify_additive(g, &c, true) {
            Ok(v) if v.ok => ControlFlow::Continue(()),
            Ok(_) => {
                counterexample = Some(c);
                ControlFlow::Break(())
            }
            Err(e) => {
                failure = Some(e);
                ControlFlow::Break(())
            }
        }
    });
    if let Some(e) = failure {
        return Err(e);
    }
    let Budgeted::Done(checked) = outcome else {
        return Ok(Budgeted::Unknown { expanded: nodes.used() });
    };
    if checked == 0 {
        return Err(Error::precondition(format!("graph has no proper coloring from {a}")));
    }
    Ok(Budgeted::Done(StrongSetVerdict {
        strong: counterexample.is_none(),
        method: StrongSetMethod::Enumeration,
        checked,
        counterexample,
    }))
}

/// A proper coloring from `labels` found by edge-order backtracking with a
/// fresh random label order at every node. `Done(None)` means none exists.
pub fn sample_proper_coloring<R: Rng + ?Sized>(
    g: &Graph,
    labels: &LabelSet,
    rng: &mut R,
    budget: &mut NodeBudget,
) -> Budgeted<Option<EdgeColoring>> {
    fn rec<R: Rng + ?Sized>(
        g: &Graph,
        palette: &[u64],
        e: EdgeId,
        cur: &mut [u64],
        rng: &mut R,
        budget: &mut NodeBudget,
    ) -> Option<bool> {
        if e == g.edge_count() {
            return Some(true);
        }
        let (u, v) = g.endpoints(e);
        let mut order = palette.to_vec();
        order.shuffle(rng);
        for l in order {
            if !budget.tick() {
                return None;
            }
            if g.incident(u).iter().chain(g.incident(v)).any(|&(_, f)| f < e && cur[f] == l) {
                continue;
            }
            cur[e] = l;
            if rec(g, palette, e + 1, cur, rng, budget)? {
                return Some(true);
            }
        }
        cur[e] = 0;
        Some(false)
    }

    let mut cur = vec![0; g.edge_count()];
    match rec(g, labels.as_slice(), 0, &mut cur, rng, budget) {
        None => Budgeted::Unknown { expanded: budget.used() },
        Some(false) => Budgeted::Done(None),
        Some(true) => Budgeted::Done(Some(EdgeColoring::new(cur, labels.clone()).expect("labels drawn from the set"))),
    }
}
