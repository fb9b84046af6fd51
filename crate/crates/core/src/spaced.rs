//! Spaced (d+1)-edge-colorings: the predicate, the relabeling into an
//! additive coloring with labels `{1} ∪ {2, 4, ..., 2d}`, and the walk
//! procedure that moves class-(d+1) edges apart.
//!
//! A proper (d+1)-edge-coloring of a d-regular graph is spaced when no two
//! edges labeled d+1, not necessarily distinct, are 2-reachable from each
//! other.

use serde::{Serialize, Serializer};

use crate::additive::verify_additive;
use crate::coloring::EdgeColoring;
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Girth, Graph, VertexId};
use crate::label_set::LabelSet;

fn require_plain_universe(g: &Graph, c: &EdgeColoring) -> Result<usize> {
    let d = g.regular_degree().ok_or(Error::NotRegular)?;
    if *c.universe() != LabelSet::range(d as u64 + 1) {
        return Err(Error::precondition(format!(
            "coloring universe must be {{1..{}}}, got {}",
            d + 1,
            c.universe()
        )));
    }
    c.check_proper(g)?;
    Ok(d)
}

fn pairwise_unreachable(g: &Graph, edges: &[EdgeId]) -> bool {
    edges.iter().enumerate().all(|(i, &e)| {
        edges[i..].iter().all(|&f| !g.two_reachable_unchecked(e, f))
    })
}

/// Whether `c`, a proper coloring over `{1, ..., d+1}` of the d-regular
/// graph `g`, is spaced.
pub fn is_spaced(g: &Graph, c: &EdgeColoring) -> Result<bool> {
    let d = require_plain_universe(g, c)?;
    Ok(pairwise_unreachable(g, &c.class(d as u64 + 1)))
}

/// Relabels a spaced coloring: class `d+1` becomes 1 and class `j <= d`
/// becomes `2j`. The result is proper and additive with largest label at
/// most `2d`.
pub fn spaced_to_additive(g: &Graph, c: &EdgeColoring) -> Result<EdgeColoring> {
    if !is_spaced(g, c)? {
        return Err(Error::precondition("coloring is not spaced"));
    }
    let heavy = c.universe().len() as u64;
    let d = heavy - 1;
    let labels = c.labels().iter().map(|&l| if l == heavy { 1 } else { 2 * l }).collect();
    let universe = LabelSet::new(std::iter::once(1).chain((1..=d).map(|j| 2 * j)).collect())?;
    let out = EdgeColoring::new(labels, universe)?;
    let verdict = verify_additive(g, &out, true)?;
    if !verdict.ok {
        return Err(Error::Contract(format!(
            "relabeled spaced coloring is not additive: {:?}",
            verdict.violation.or(verdict.proper_conflict)
        )));
    }
    Ok(out)
}

/// An edge label in a tagged coloring: an ordinary label in `1..=d`, or the
/// `i`-th distinguished copy of label `d+1` (`i` is 1-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TaggedLabel {
    Plain(u64),
    Tag(usize),
}

/// Plain labels serialize as numbers, tags as `{"tag": i}`.
impl Serialize for TaggedLabel {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        match *self {
            TaggedLabel::Plain(l) => s.serialize_u64(l),
            TaggedLabel::Tag(i) => {
                let mut m = s.serialize_map(Some(1))?;
                m.serialize_entry("tag", &i)?;
                m.end()
            }
        }
    }
}

/// A coloring whose class `d+1` is split into individually tagged edges.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TaggedColoring {
    d: usize,
    labels: Vec<TaggedLabel>,
    /// `tag_edges[i - 1]` is the edge carrying tag `i`.
    tag_edges: Vec<EdgeId>,
}

impl TaggedColoring {
    /// Tags the class-`d+1` edges of `c` as `1, 2, ...` in increasing edge id.
    pub fn from_coloring(g: &Graph, c: &EdgeColoring) -> Result<Self> {
        let d = require_plain_universe(g, c)?;
        let heavy = d as u64 + 1;
        let mut tag_edges = Vec::new();
        let labels = c
            .labels()
            .iter()
            .enumerate()
            .map(|(e, &l)| {
                if l == heavy {
                    tag_edges.push(e);
                    TaggedLabel::Tag(tag_edges.len())
                } else {
                    TaggedLabel::Plain(l)
                }
            })
            .collect();
        Ok(TaggedColoring { d, labels, tag_edges })
    }

    pub fn degree(&self) -> usize {
        self.d
    }

    pub fn labels(&self) -> &[TaggedLabel] {
        &self.labels
    }

    pub fn label(&self, e: EdgeId) -> TaggedLabel {
        self.labels[e]
    }

    pub fn tag_count(&self) -> usize {
        self.tag_edges.len()
    }

    /// The edge carrying tag `i` (1-based).
    pub fn tag_edge(&self, i: usize) -> EdgeId {
        self.tag_edges[i - 1]
    }

    pub fn tag_edges(&self) -> &[EdgeId] {
        &self.tag_edges
    }

    /// Replaces every tag by `d+1`; universe `{1, ..., d+1}`.
    pub fn projection(&self) -> EdgeColoring {
        let heavy = self.d as u64 + 1;
        let labels = self
            .labels
            .iter()
            .map(|l| match *l {
                TaggedLabel::Plain(x) => x,
                TaggedLabel::Tag(_) => heavy,
            })
            .collect();
        EdgeColoring::new(labels, LabelSet::range(heavy)).expect("labels within 1..=d+1")
    }

    /// Sets `e` to `label`, keeping the tag index in sync.
    pub fn set(&mut self, e: EdgeId, label: TaggedLabel) {
        if let TaggedLabel::Tag(i) = label {
            self.tag_edges[i - 1] = e;
        }
        self.labels[e] = label;
    }

    /// Property `P_i`: the projection is proper and no two edges with tags
    /// `<= i` are 2-reachable from each other (a tag may not be 2-reachable
    /// from itself either).
    pub fn satisfies_property(&self, g: &Graph, i: usize) -> bool {
        self.projection().first_conflict(g).is_none()
            && pairwise_unreachable(g, &self.tag_edges[..i])
    }
}

/// One move of a tag along its walk.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RecolorStep {
    /// Step index `j >= 1` within the phase.
    pub step: usize,
    /// The walk `x_0, ..., x_{j+1}` after this step.
    pub walk: Vec<VertexId>,
    /// Label given to the edge `x_{j-1} x_j` the tag left.
    pub color: u64,
    /// `x_{j+1}`.
    pub advanced_to: VertexId,
    /// The edge `x_{j-1} x_j`, now labeled `color`.
    pub recolored_edge: EdgeId,
    /// The edge `x_j x_{j+1}`, now carrying the tag.
    pub tag_edge: EdgeId,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum PhaseStatus {
    /// The property held after `step` moves (0: already on entry).
    Satisfied { step: usize },
    BudgetExhausted,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PhaseTrace {
    /// Tag being moved (1-based).
    pub phase: usize,
    /// `x_0, x_1`: the tag edge on entry, smaller endpoint first.
    pub start: [VertexId; 2],
    pub steps: Vec<RecolorStep>,
    pub status: PhaseStatus,
}

/// Complete record of a [`make_spaced`] run; replaying the steps on
/// `initial` reproduces every intermediate coloring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RecolorTrace {
    pub d: usize,
    pub tags: usize,
    pub initial: TaggedColoring,
    pub phases: Vec<PhaseTrace>,
}

impl RecolorTrace {
    /// Every coloring in the run as `(phase, step, coloring)`, starting
    /// with `(1, 0, initial)`.
    pub fn replay(&self) -> Vec<(usize, usize, TaggedColoring)> {
        let mut cur = self.initial.clone();
        let mut out = vec![(1, 0, cur.clone())];
        for phase in &self.phases {
            for s in &phase.steps {
                cur.set(s.recolored_edge, TaggedLabel::Plain(s.color));
                cur.set(s.tag_edge, TaggedLabel::Tag(phase.phase));
                out.push((phase.phase, s.step, cur.clone()));
            }
        }
        out
    }

    pub fn total_steps(&self) -> usize {
        self.phases.iter().map(|p| p.steps.len()).sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum SpacedOutcome {
    Success { coloring: TaggedColoring, projection: EdgeColoring },
    /// The step budget ran out during `phase`.
    BudgetExhausted { phase: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MakeSpacedReport {
    pub outcome: SpacedOutcome,
    pub trace: RecolorTrace,
    /// Number of tagged edges `r`.
    pub r: usize,
    pub girth: Girth,
    /// Whether the girth is large enough for success to be guaranteed:
    /// `girth >= 6r - 5` for `r >= 2`, no triangles for `r = 1`.
    pub girth_hypothesis: bool,
    pub step_budget: usize,
}

impl MakeSpacedReport {
    pub fn succeeded(&self) -> bool {
        matches!(self.outcome, SpacedOutcome::Success { .. })
    }
}

/// Default step budget: six steps per edge.
pub fn default_step_budget(g: &Graph) -> usize {
    6 * g.edge_count()
}

/// Moves the class-(d+1) edges of `c` apart until the coloring is spaced.
///
/// Tags `1..=r` are handed out in increasing edge id. Phase `i` leaves the
/// coloring alone if property `P_i` already holds; otherwise it walks tag
/// `i` forward from its smaller endpoint `x_0`: at each step the edge
/// `x_{j-1} x_j` takes the smallest label of `1..=d` absent at `x_{j-1}`
/// (other than the label chosen on the previous step), and the tag moves to
/// the edge at `x_j` that carried that label. `P_i` is checked after every
/// step and the phase ends at the first step where it holds.
///
/// `c` must be a proper coloring over `{1, ..., d+1}` of a d-regular graph
/// whose class `d+1` has minimum size (the resistance). Non-minimal input
/// is detected only if the walk stalls, and reported as
/// [`Error::NotMinimal`]. The girth hypothesis is reported, not enforced.
pub fn make_spaced(g: &Graph, c: &EdgeColoring, step_budget: Option<usize>) -> Result<MakeSpacedReport> {
    let mut cur = TaggedColoring::from_coloring(g, c)?;
    let d = cur.d;
    let r = cur.tag_count();
    if r == 0 {
        return Err(Error::precondition("coloring has no edge labeled d+1"));
    }
    let budget = step_budget.unwrap_or_else(|| default_step_budget(g));
    let girth = g.girth();
    let girth_hypothesis = if r == 1 { girth.at_least(4) } else { girth.at_least(6 * r - 5) };

    let mut trace = RecolorTrace { d, tags: r, initial: cur.clone(), phases: Vec::new() };
    let mut used = 0usize;
    let mut exhausted_in = None;

    for i in 1..=r {
        let (p, q) = g.endpoints(cur.tag_edge(i));
        let mut phase = PhaseTrace {
            phase: i,
            start: [p.min(q), p.max(q)],
            steps: Vec::new(),
            status: PhaseStatus::Satisfied { step: 0 },
        };
        let mut walk = phase.start.to_vec();
        let mut previous: Option<u64> = None;
        let mut satisfied = cur.satisfies_property(g, i);
        while !satisfied {
            if used == budget {
                break;
            }
            used += 1;
            let tail = walk[walk.len() - 2];
            let head = walk[walk.len() - 1];
            let present = |v: VertexId, cur: &TaggedColoring| -> u128 {
                g.incident(v).iter().fold(0u128, |mask, &(_, f)| match cur.label(f) {
                    TaggedLabel::Plain(l) => mask | (1u128 << l),
                    TaggedLabel::Tag(_) => mask,
                })
            };
            let at_tail = present(tail, &cur);
            let color = (1..=d as u64)
                .find(|&a| Some(a) != previous && at_tail & (1u128 << a) == 0)
                .ok_or_else(|| Error::NotMinimal {
                    vertex: tail,
                    reason: "no label of 1..=d is free".into(),
                })?;
            let &(next, next_edge) = g
                .incident(head)
                .iter()
                .find(|&&(w, f)| w != tail && cur.label(f) == TaggedLabel::Plain(color))
                .ok_or_else(|| Error::NotMinimal {
                    vertex: head,
                    reason: format!("label {color} is free at both ends of the tagged edge"),
                })?;
            let left = cur.tag_edge(i);
            cur.set(left, TaggedLabel::Plain(color));
            cur.set(next_edge, TaggedLabel::Tag(i));
            walk.push(next);
            previous = Some(color);
            phase.steps.push(RecolorStep {
                step: phase.steps.len() + 1,
                walk: walk.clone(),
                color,
                advanced_to: next,
                recolored_edge: left,
                tag_edge: next_edge,
            });
            satisfied = cur.satisfies_property(g, i);
        }
        phase.status = if satisfied {
            PhaseStatus::Satisfied { step: phase.steps.len() }
        } else {
            PhaseStatus::BudgetExhausted
        };
        trace.phases.push(phase);
        if !satisfied {
            exhausted_in = Some(i);
            break;
        }
    }

    let outcome = match exhausted_in {
        Some(phase) => SpacedOutcome::BudgetExhausted { phase },
        None => {
            let projection = cur.projection();
            if !is_spaced(g, &projection)? {
                return Err(Error::Contract("final projection is not spaced".into()));
            }
            SpacedOutcome::Success { coloring: cur, projection }
        }
    };
    Ok(MakeSpacedReport { outcome, trace, r, girth, girth_hypothesis, step_budget: budget })
}
