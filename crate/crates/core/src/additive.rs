//! Additive edge colorings.
//!
//! A labeling is additive when any two incident edges have different
//! neighbor sums, the neighbor sum of `e` being the total label over all
//! edges sharing an endpoint with `e`. For an edge `vw`,
//!
//! ```text
//! S(vw) = sum(labels at v) + sum(labels at w) - 2 * label(vw)
//! ```
//!
//! so for incident `vw`, `vx` the difference of sums only involves the
//! label totals at `w` and `x` and the two shared-vertex labels. On a
//! d-regular graph colored properly from d+1 labels those totals differ by
//! the missing labels `a_x - a_w`, which is what the difference condition
//! and the odd-or-zero test below exploit.

use std::collections::HashSet;

use serde::Serialize;

use crate::coloring::{missing_color_map, EdgeColoring};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph};
use crate::label_set::LabelSet;

pub use crate::label_set::MAX_LABEL;

/// Outcome of [`verify_additive`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AdditiveVerdict {
    pub ok: bool,
    /// Lexicographically smallest incident pair `(e, f)`, `e < f`, with
    /// equal neighbor sums.
    pub violation: Option<(EdgeId, EdgeId)>,
    pub proper: bool,
    /// Lexicographically smallest pair of incident edges sharing a label,
    /// reported when properness was required and fails.
    pub proper_conflict: Option<(EdgeId, EdgeId)>,
    /// Neighbor sum of every edge, by edge id.
    pub sums: Vec<u128>,
}

fn vertex_totals(g: &Graph, c: &EdgeColoring) -> Result<Vec<u128>> {
    c.check_total(g)?;
    (0..g.vertex_count())
        .map(|v| {
            c.labels_at(g, v)
                .try_fold(0u128, |acc, l| acc.checked_add(l as u128))
                .ok_or(Error::Overflow)
        })
        .collect()
}

fn sum_from_totals(g: &Graph, c: &EdgeColoring, totals: &[u128], e: EdgeId) -> Result<u128> {
    let (u, v) = g.endpoints(e);
    let twice = 2 * c.label(e) as u128;
    totals[u]
        .checked_add(totals[v])
        .and_then(|s| s.checked_sub(twice))
        .ok_or(Error::Overflow)
}

/// Sum of the labels on `N'(e)`.
pub fn neighbor_sum(g: &Graph, c: &EdgeColoring, e: EdgeId) -> Result<u128> {
    g.check_edge(e)?;
    c.check_total(g)?;
    let direct = g
        .edge_neighbors(e)?
        .into_iter()
        .try_fold(0u128, |acc, f| acc.checked_add(c.label(f) as u128))
        .ok_or(Error::Overflow)?;
    let totals = vertex_totals(g, c)?;
    let via_vertices = sum_from_totals(g, c, &totals, e)?;
    if direct != via_vertices {
        return Err(Error::Contract(format!(
            "neighbor sum of edge {e}: direct {direct} != vertex identity {via_vertices}"
        )));
    }
    Ok(direct)
}

/// Checks additivity (and properness when `require_proper`).
pub fn verify_additive(g: &Graph, c: &EdgeColoring, require_proper: bool) -> Result<AdditiveVerdict> {
    let totals = vertex_totals(g, c)?;
    let sums = (0..g.edge_count())
        .map(|e| sum_from_totals(g, c, &totals, e))
        .collect::<Result<Vec<_>>>()?;
    let violation = (0..g.edge_count()).find_map(|e| {
        let (u, v) = g.endpoints(e);
        g.incident(u)
            .iter()
            .chain(g.incident(v))
            .map(|&(_, f)| f)
            .filter(|&f| f > e && sums[f] == sums[e])
            .min()
            .map(|f| (e, f))
    });
    let conflict = c.first_conflict(g);
    let proper = conflict.is_none();
    let ok = violation.is_none() && (proper || !require_proper);
    Ok(AdditiveVerdict {
        ok,
        violation,
        proper,
        proper_conflict: if require_proper { conflict } else { None },
        sums,
    })
}

/// `A_n`: `A_1 = {1, 2}`, `A_{n+1} = A_n ∪ (A_n + 3 max(A_n) - 2)`.
/// Defined for `1 <= n <= 16`.
pub fn build_an(n: u32) -> Result<LabelSet> {
    if !(1..=16).contains(&n) {
        return Err(Error::precondition(format!("n must be in 1..=16, got {n}")));
    }
    let mut set: Vec<u64> = vec![1, 2];
    for _ in 1..n {
        let shift = 3 * set.last().unwrap() - 2;
        let upper: Vec<u64> = set.iter().map(|&x| x + shift).collect();
        set.extend(upper);
    }
    LabelSet::new(set)
}

/// `A⁻ ∩ 2A⁻ = ∅`: no difference of two distinct elements is twice
/// another such difference. Both sets are symmetric under negation, so
/// comparing positive differences suffices.
pub fn check_difference_condition(a: &LabelSet) -> bool {
    let xs = a.as_slice();
    let mut diffs = HashSet::with_capacity(xs.len() * xs.len() / 2);
    for (i, &hi) in xs.iter().enumerate() {
        for &lo in &xs[..i] {
            diffs.insert(hi - lo);
        }
    }
    diffs.iter().all(|&delta| !diffs.contains(&(2 * delta)))
}

/// Upper bounds on the proper additive chromatic index of a d-regular
/// class-2 graph obtained from `A_n`, `n = ceil(log2(d+1))`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AnBound {
    pub n: u32,
    /// `max(A_n) = ((2^n)^2 + 2) / 3`.
    pub paper_bound: u64,
    /// The (d+1)-th smallest element of `A_n`, the largest label the
    /// coloring actually needs.
    pub refined_bound: u64,
}

pub fn bound_thm24(d: u64) -> Result<AnBound> {
    if d < 2 {
        return Err(Error::precondition(format!("d must be at least 2, got {d}")));
    }
    let n = u64::BITS - d.leading_zeros(); // ceil(log2(d + 1))
    let a = build_an(n)?;
    let paper_bound = (1u64 << (2 * n)).div_ceil(3);
    debug_assert_eq!(a.max(), Some(paper_bound));
    Ok(AnBound { n, paper_bound, refined_bound: a.as_slice()[d as usize] })
}

/// True when for every path `v1 v2 v3` the missing labels satisfy
/// `a_{v1} - a_{v3}` zero or odd, which makes the coloring additive.
///
/// The coloring must be proper over `{1, ..., d+1}` on a d-regular graph.
pub fn check_odd_zero(g: &Graph, c: &EdgeColoring) -> Result<bool> {
    let d = g.regular_degree().ok_or(Error::NotRegular)?;
    if *c.universe() != LabelSet::range(d as u64 + 1) {
        return Err(Error::precondition(format!("universe must be {{1..{}}}", d + 1)));
    }
    let a = missing_color_map(g, c)?;
    let holds = (0..g.vertex_count()).all(|mid| {
        let nbrs: Vec<_> = g.neighbors(mid).collect();
        nbrs.iter().enumerate().all(|(i, &p)| {
            nbrs[i + 1..].iter().all(|&q| {
                let diff = a.get(p).abs_diff(a.get(q));
                diff == 0 || diff % 2 == 1
            })
        })
    });
    if holds && !verify_additive(g, c, true)?.ok {
        return Err(Error::Contract("odd-or-zero coloring is not additive".into()));
    }
    Ok(holds)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn col(labels: &[u64], k: u64) -> EdgeColoring {
        EdgeColoring::new(labels.to_vec(), LabelSet::range(k)).unwrap()
    }

    fn set(xs: &[u64]) -> LabelSet {
        LabelSet::new(xs.to_vec()).unwrap()
    }

    #[test]
    fn neighbor_sums_on_c5() {
        let g = cycle(5);
        let c = col(&[1, 2, 1, 2, 3], 3);
        assert_eq!(neighbor_sum(&g, &c, 0), Ok(5));
        assert_eq!(neighbor_sum(&g, &c, 2), Ok(4));
        assert!(neighbor_sum(&g, &c, 7).is_err());
        let single = Graph::new(2, [(0, 1)]).unwrap();
        assert_eq!(neighbor_sum(&single, &col(&[4], 4), 0), Ok(0));
    }

    #[test]
    fn verify_examples() {
        let g = cycle(5);
        let bad = verify_additive(&g, &col(&[1, 2, 1, 2, 3], 3), true).unwrap();
        assert!(!bad.ok);
        assert_eq!(bad.violation, Some((2, 3)));
        assert_eq!(bad.sums, vec![5, 2, 4, 4, 3]);

        let good = verify_additive(&g, &col(&[1, 3, 1, 2, 3], 3), true).unwrap();
        assert!(good.ok);
        assert_eq!(good.sums, vec![6, 2, 5, 4, 3]);
    }

    #[test]
    fn improper_but_additive() {
        // edges 0 and 1 share label 1 at vertex 1
        let g = cycle(4);
        let c = col(&[1, 1, 2, 2], 2);
        let v = verify_additive(&g, &c, false).unwrap();
        let strict = verify_additive(&g, &c, true).unwrap();
        assert!(!v.proper);
        assert_eq!(strict.proper_conflict, Some((0, 1)));
        assert!(!strict.ok);
        assert_eq!(v.ok, v.violation.is_none());
    }

    #[test]
    fn an_small_cases() {
        assert_eq!(build_an(1).unwrap().as_slice(), &[1, 2]);
        assert_eq!(build_an(2).unwrap().as_slice(), &[1, 2, 5, 6]);
        assert_eq!(build_an(3).unwrap().as_slice(), &[1, 2, 5, 6, 17, 18, 21, 22]);
        assert!(build_an(0).is_err());
        assert!(build_an(17).is_err());
        assert_eq!(build_an(16).unwrap().max(), Some((1u64 << 32).div_ceil(3)));
    }

    #[test]
    fn difference_condition_examples() {
        assert!(check_difference_condition(&set(&[1, 2])));
        assert!(!check_difference_condition(&set(&[1, 2, 3])));
        assert!(check_difference_condition(&set(&[1, 2, 5, 6])));
        assert!(check_difference_condition(&set(&[])));
    }

    #[test]
    fn bounds() {
        let b = |d| {
            let r = bound_thm24(d).unwrap();
            (r.paper_bound, r.refined_bound)
        };
        assert_eq!(b(3), (6, 6));
        assert_eq!(b(7), (22, 22));
        assert_eq!(b(4), (22, 17));
        assert_eq!(b(2), (6, 5));
        assert!(bound_thm24(1).is_err());
    }

    #[test]
    fn odd_zero_examples() {
        assert_eq!(check_odd_zero(&cycle(5), &col(&[1, 3, 1, 2, 3], 3)), Ok(true));
        assert_eq!(check_odd_zero(&cycle(5), &col(&[1, 2, 1, 2, 3], 3)), Ok(false));
        assert_eq!(check_odd_zero(&cycle(7), &col(&[1, 2, 1, 2, 1, 2, 3], 3)), Ok(false));
        assert!(check_odd_zero(&cycle(5), &col(&[1, 2, 1, 2, 3], 4)).is_err());
        assert_eq!(
            check_odd_zero(&cycle(5), &col(&[1, 1, 2, 1, 3], 3)),
            Err(Error::Improper(0, 1))
        );
    }
}
