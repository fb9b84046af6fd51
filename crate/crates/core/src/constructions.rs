//! Named graph families and the builder for d-regular graphs with
//! resistance d/2 from a d-regular bipartite seed graph.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::coloring::EdgeColoring;
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, VertexId};
use crate::label_set::LabelSet;
use crate::vizing::bipartite_edge_color;

/// Graph families understood by [`generate`].
///
/// Vertex numbering:
/// * `Cycle [n]`: `0..n` in cyclic order, edges `(i, i+1 mod n)`.
/// * `Complete [n]`: edges `(u, v)`, `u < v`, lexicographic.
/// * `CompleteBipartite [a, b]`: left side `0..a`, right side `a..a+b`.
/// * `Hypercube [k]`: vertices are the `k`-bit words, adjacent when they
///   differ in one bit.
/// * `Petersen`: outer 5-cycle `0..5`, spokes `(i, i+5)`, inner pentagram
///   `(5+i, 5+(i+2) mod 5)`.
/// * `Heawood`: Hamiltonian 14-cycle plus chords `(i, i+5 mod 14)` for even `i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Cycle,
    Complete,
    CompleteBipartite,
    Hypercube,
    Petersen,
    Heawood,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::Cycle,
        Family::Complete,
        Family::CompleteBipartite,
        Family::Hypercube,
        Family::Petersen,
        Family::Heawood,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Cycle => "cycle",
            Family::Complete => "complete",
            Family::CompleteBipartite => "complete_bipartite",
            Family::Hypercube => "hypercube",
            Family::Petersen => "petersen",
            Family::Heawood => "heawood",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::precondition(format!("unknown graph family {s:?}")))
    }
}

fn params<const N: usize>(family: Family, p: &[usize]) -> Result<[usize; N]> {
    p.try_into().map_err(|_| {
        Error::precondition(format!("{family} takes {N} parameter(s), got {}", p.len()))
    })
}

pub fn generate(family: Family, p: &[usize]) -> Result<Graph> {
    let bad = |msg: &str| Err(Error::precondition(format!("{family}: {msg}")));
    match family {
        Family::Cycle => {
            let [n] = params(family, p)?;
            if n < 3 {
                return bad("needs n >= 3");
            }
            Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
        }
        Family::Complete => {
            let [n] = params(family, p)?;
            if n < 1 {
                return bad("needs n >= 1");
            }
            Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
        }
        Family::CompleteBipartite => {
            let [a, b] = params(family, p)?;
            if a < 1 || b < 1 {
                return bad("needs both sides nonempty");
            }
            Graph::new(a + b, (0..a).flat_map(|i| (0..b).map(move |j| (i, a + j))))
        }
        Family::Hypercube => {
            let [k] = params(family, p)?;
            if !(1..=20).contains(&k) {
                return bad("dimension must be in 1..=20");
            }
            let n = 1usize << k;
            let edges = (0..n).flat_map(|v| {
                (0..k).map(move |bit| (v, v ^ (1 << bit))).filter(|&(v, w)| v < w)
            });
            Graph::new(n, edges)
        }
        Family::Petersen => {
            let [] = params(family, p)?;
            let outer = (0..5).map(|i| (i, (i + 1) % 5));
            let spokes = (0..5).map(|i| (i, i + 5));
            let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
            Graph::new(10, outer.chain(spokes).chain(inner))
        }
        Family::Heawood => {
            let [] = params(family, p)?;
            let ring = (0..14).map(|i| (i, (i + 1) % 14));
            let chords = (0..14).step_by(2).map(|i| (i, (i + 5) % 14));
            Graph::new(14, ring.chain(chords))
        }
    }
}

/// Where a vertex of the built graph comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CopyOrigin {
    /// Vertex `vertex` of the seed graph inside copy `copy` (1-based).
    Copy { copy: usize, vertex: VertexId },
    /// The vertex obtained by identifying the subdivision vertices.
    Identified,
}

/// Output of [`build_high_resistance`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BuilderOutput {
    pub graph: Graph,
    pub coloring: EdgeColoring,
    /// The `d/2` edges labeled `d+1`, one per copy.
    pub heavy_class: Vec<EdgeId>,
    pub copy_map: Vec<CopyOrigin>,
    /// Index of the identified vertex.
    pub identified: VertexId,
    /// The seed edge `xy` that was subdivided, with `x < y`.
    pub subdivided: (VertexId, VertexId),
}

/// Permutation of `{1, ..., d}` sending `lo -> 2i-1` and `hi -> 2i`, fixing
/// every other label it can. Returned as a lookup table indexed by label;
/// index `d+1` maps to itself.
fn class_permutation(lo: u64, hi: u64, i: u64, d: u64) -> Vec<u64> {
    let targets = [2 * i - 1, 2 * i];
    let mut sigma: Vec<u64> = (0..=d + 1).collect();
    sigma[lo as usize] = targets[0];
    sigma[hi as usize] = targets[1];
    // labels displaced from the target slots fill the vacated source slots
    let displaced: Vec<u64> = targets.into_iter().filter(|t| *t != lo && *t != hi).collect();
    let vacated: Vec<u64> = [lo, hi].into_iter().filter(|s| !targets.contains(s)).collect();
    for (t, s) in displaced.into_iter().zip(vacated) {
        sigma[t as usize] = s;
    }
    sigma
}

/// Builds a d-regular graph with resistance d/2 from a d-regular bipartite
/// graph `seed`, together with a proper (d+1)-edge-coloring having exactly
/// d/2 edges labeled d+1.
///
/// The seed edge `xy` (smallest id by default, `x < y`) is subdivided by a
/// new vertex; d/2 copies of the result are glued along that vertex. In copy
/// `i` the path `x, v, y` is labeled `c(xy)` then `d+1`; the labels of `vy`
/// and `yw` are swapped, where `w` is the smallest neighbor of `y` other
/// than `x`, so `d+1` leaves the identified vertex; finally the copy's color
/// classes are permuted so that `v` sees `2i-1` and `2i`.
///
/// Copy `i` (1-based) occupies vertices `(i-1)*n .. i*n` in the seed's
/// numbering; the identified vertex is the last one.
pub fn build_high_resistance(
    d: usize,
    seed: &Graph,
    seed_coloring: Option<&EdgeColoring>,
    subdivided_edge: Option<EdgeId>,
) -> Result<BuilderOutput> {
    if d < 4 || !d.is_multiple_of(2) {
        return Err(Error::precondition(format!("d must be an even integer >= 4, got {d}")));
    }
    if seed.regular_degree() != Some(d) || seed.vertex_count() == 0 {
        return Err(Error::precondition(format!("seed graph is not {d}-regular")));
    }
    if !seed.is_bipartite() {
        return Err(Error::precondition("seed graph is not bipartite"));
    }
    let coloring = match seed_coloring {
        Some(c) => {
            c.check_proper(seed)?;
            if let Some(l) = c.labels().iter().find(|&&l| l == 0 || l > d as u64) {
                return Err(Error::precondition(format!("seed coloring uses label {l} > d")));
            }
            c.clone()
        }
        None => bipartite_edge_color(seed)?,
    };
    let xy = subdivided_edge.unwrap_or(0);
    seed.check_edge(xy)?;
    let (a, b) = seed.endpoints(xy);
    let (x, y) = (a.min(b), a.max(b));
    let c_xy = coloring.label(xy);
    let &(_, yw) = seed
        .incident(y)
        .iter()
        .find(|&&(w, _)| w != x)
        .expect("d >= 4 gives y another neighbor");
    let swapped = coloring.label(yw);
    debug_assert_ne!(swapped, c_xy);

    let n = seed.vertex_count();
    let copies = d / 2;
    let hub = copies * n;
    let heavy = d as u64 + 1;
    let (lo, hi) = (c_xy.min(swapped), c_xy.max(swapped));

    let mut edges = Vec::with_capacity(copies * (seed.edge_count() + 1));
    let mut labels = Vec::with_capacity(edges.capacity());
    let mut heavy_class = Vec::with_capacity(copies);
    for k in 0..copies {
        let off = k * n;
        let sigma = class_permutation(lo, hi, k as u64 + 1, d as u64);
        for (f, &(p, q)) in seed.edges().iter().enumerate() {
            if f == xy {
                continue;
            }
            let label = if f == yw {
                heavy_class.push(edges.len());
                heavy
            } else {
                coloring.label(f)
            };
            edges.push((off + p, off + q));
            labels.push(sigma[label as usize]);
        }
        edges.push((off + x, hub));
        labels.push(sigma[c_xy as usize]);
        edges.push((hub, off + y));
        labels.push(sigma[swapped as usize]);
    }

    let graph = Graph::new(hub + 1, edges)?;
    let coloring = EdgeColoring::new(labels, LabelSet::range(heavy))?;
    if graph.regular_degree() != Some(d) || !coloring.is_proper(&graph) {
        return Err(Error::Contract("builder produced an invalid graph or coloring".into()));
    }
    let mut copy_map: Vec<CopyOrigin> = (0..copies)
        .flat_map(|k| (0..n).map(move |v| CopyOrigin::Copy { copy: k + 1, vertex: v }))
        .collect();
    copy_map.push(CopyOrigin::Identified);
    Ok(BuilderOutput {
        graph,
        coloring,
        heavy_class,
        copy_map,
        identified: hub,
        subdivided: (x, y),
    })
}
