//! Edge colorings as total maps from edge ids to labels of a declared
//! universe, with properness checks and missing-color maps.
//!
//! Properness is a predicate here, not an invariant of the type: the
//! recoloring procedures pass through improper intermediate states.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, VertexId};
use crate::label_set::LabelSet;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EdgeColoring {
    labels: Vec<u64>,
    universe: LabelSet,
}

impl EdgeColoring {
    /// Labels indexed by edge id; every label must belong to `universe`.
    pub fn new(labels: Vec<u64>, universe: LabelSet) -> Result<Self> {
        if let Some((e, &l)) = labels.iter().enumerate().find(|(_, &l)| !universe.contains(l)) {
            return Err(Error::precondition(format!(
                "edge {e} has label {l} outside the universe {universe}"
            )));
        }
        Ok(EdgeColoring { labels, universe })
    }

    /// Labels with universe `{1, ..., k}`, `k` the largest label (at least 1).
    pub fn with_range_universe(labels: Vec<u64>) -> Result<Self> {
        let k = labels.iter().copied().max().unwrap_or(1);
        EdgeColoring::new(labels, LabelSet::range(k))
    }

    pub fn labels(&self) -> &[u64] {
        &self.labels
    }

    pub fn universe(&self) -> &LabelSet {
        &self.universe
    }

    #[inline]
    pub fn label(&self, e: EdgeId) -> u64 {
        self.labels[e]
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn max_label(&self) -> Option<u64> {
        self.labels.iter().copied().max()
    }

    /// Fails unless the coloring assigns exactly one label to every edge of `g`.
    pub fn check_total(&self, g: &Graph) -> Result<()> {
        if self.labels.len() == g.edge_count() {
            Ok(())
        } else {
            Err(Error::precondition(format!(
                "coloring labels {} edges but the graph has {}",
                self.labels.len(),
                g.edge_count()
            )))
        }
    }

    /// Edge ids carrying `label`, increasing.
    pub fn class(&self, label: u64) -> Vec<EdgeId> {
        (0..self.labels.len()).filter(|&e| self.labels[e] == label).collect()
    }

    pub fn labels_at<'a>(&'a self, g: &'a Graph, v: VertexId) -> impl Iterator<Item = u64> + 'a {
        g.incident(v).iter().map(move |&(_, e)| self.labels[e])
    }

    /// The lexicographically smallest pair `(e, f)`, `e < f`, of incident
    /// edges with the same label.
    pub fn first_conflict(&self, g: &Graph) -> Option<(EdgeId, EdgeId)> {
        (0..g.edge_count()).find_map(|e| {
            let (u, v) = g.endpoints(e);
            g.incident(u)
                .iter()
                .chain(g.incident(v))
                .map(|&(_, f)| f)
                .filter(|&f| f > e && self.labels[f] == self.labels[e])
                .min()
                .map(|f| (e, f))
        })
    }

    pub fn is_proper(&self, g: &Graph) -> bool {
        self.labels.len() == g.edge_count() && self.first_conflict(g).is_none()
    }

    /// Fails with [`Error::Improper`] naming the first conflicting pair.
    pub fn check_proper(&self, g: &Graph) -> Result<()> {
        self.check_total(g)?;
        match self.first_conflict(g) {
            Some((e, f)) => Err(Error::Improper(e, f)),
            None => Ok(()),
        }
    }

    pub fn to_json_value(&self) -> ColoringJson {
        ColoringJson {
            universe: self.universe.as_slice().to_vec(),
            labels: self.labels.iter().copied().enumerate().collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_value()).expect("coloring JSON serialization")
    }

    /// Parses the JSON schema and checks that every edge of `g` is labeled.
    pub fn from_json(text: &str, g: &Graph) -> Result<Self> {
        let parsed: ColoringJson = serde_json::from_str(text)
            .map_err(|e| Error::Malformed { format: "coloring json", reason: e.to_string() })?;
        let c = EdgeColoring::try_from(parsed)?;
        c.check_total(g)?;
        Ok(c)
    }
}

/// JSON schema for colorings: `{"universe": [...], "labels": {"<edge id>": label}}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringJson {
    pub universe: Vec<u64>,
    pub labels: BTreeMap<EdgeId, u64>,
}

impl TryFrom<ColoringJson> for EdgeColoring {
    type Error = Error;

    fn try_from(j: ColoringJson) -> Result<Self> {
        let m = j.labels.len();
        if let Some(&e) = j.labels.keys().find(|&&e| e >= m) {
            return Err(Error::precondition(format!(
                "coloring skips edge ids: found id {e} among {m} labels"
            )));
        }
        EdgeColoring::new(j.labels.into_values().collect(), LabelSet::new(j.universe)?)
    }
}

impl Serialize for EdgeColoring {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json_value().serialize(s)
    }
}

/// For each vertex, the unique label of the universe absent at it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct MissingColorMap(Vec<u64>);

impl MissingColorMap {
    #[inline]
    pub fn get(&self, v: VertexId) -> u64 {
        self.0[v]
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }
}

/// The map `v -> a_v` for a proper coloring of a d-regular graph over a
/// universe of d+1 labels.
pub fn missing_color_map(g: &Graph, c: &EdgeColoring) -> Result<MissingColorMap> {
    let d = g.regular_degree().ok_or(Error::NotRegular)?;
    c.check_proper(g)?;
    if c.universe().len() != d + 1 {
        return Err(Error::precondition(format!(
            "universe has {} labels, expected d+1 = {}",
            c.universe().len(),
            d + 1
        )));
    }
    let mut present = vec![false; d + 1];
    let mut out = Vec::with_capacity(g.vertex_count());
    for v in 0..g.vertex_count() {
        present.iter_mut().for_each(|p| *p = false);
        for l in c.labels_at(g, v) {
            present[c.universe().index_of(l).expect("label in universe")] = true;
        }
        let mut absent = present.iter().enumerate().filter(|(_, &p)| !p).map(|(i, _)| i);
        match (absent.next(), absent.next()) {
            (Some(i), None) => out.push(c.universe().as_slice()[i]),
            _ => {
                return Err(Error::Contract(format!(
                    "vertex {v} does not miss exactly one label"
                )))
            }
        }
    }
    Ok(MissingColorMap(out))
}
