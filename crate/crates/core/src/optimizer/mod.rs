//! Marker graph between candidate positions and universe edges, and the
//! minimal, greedy and exact-minimum constructions over it.

mod bucket;

pub use bucket::BucketQueue;

use std::collections::HashSet;

use crate::attractor::{AttractorSet, EquivClasses};
use crate::combinatorics::binomial;
use crate::error::{Error, Result};
use crate::text_index::{SuffixIndex, Universe};

/// Default cap on subset evaluations for [`MarkerGraph::find_minimum`].
pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// Bipartite graph: candidate `c` (an index into [`MarkerGraph::candidates`])
/// is adjacent to universe edge `e` iff the candidate's position marks `e`.
#[derive(Debug, Clone)]
pub struct MarkerGraph {
    n: usize,
    candidates: Vec<usize>,
    universe: Universe,
    by_candidate: Vec<Vec<u32>>,
    by_edge: Vec<Vec<u32>>,
    members: HashSet<(u32, u32)>,
}

pub fn build_marker_graph(index: &SuffixIndex, classes: &EquivClasses, k: usize) -> Result<MarkerGraph> {
    if classes.k() != k || classes.class_ids().len() != index.len() {
        return Err(Error::Parameter(
            "equivalence classes were built for a different text or k".into(),
        ));
    }
    let universe = index.universe(k)?;
    let candidates = classes.representatives().to_vec();
    let mut by_candidate = vec![Vec::new(); candidates.len()];
    let mut by_edge = vec![Vec::new(); universe.len()];
    let mut members = HashSet::new();
    for (c, &j) in candidates.iter().enumerate() {
        for i in (j.saturating_sub(k - 1)..=j).rev() {
            let locus = index.locus_edge(i, k)?;
            let mut e = universe.edge_for_node(locus.node).map(|e| e.id);
            while let Some(id) = e {
                let edge = universe.edge(id);
                if edge.lambda <= j - i || !members.insert((c as u32, id as u32)) {
                    break;
                }
                by_candidate[c].push(id as u32);
                by_edge[id].push(c as u32);
                e = edge.parent_edge;
            }
        }
    }
    Ok(MarkerGraph {
        n: index.len(),
        candidates,
        universe,
        by_candidate,
        by_edge,
        members,
    })
}

impl MarkerGraph {
    /// Candidate offsets, ascending.
    pub fn candidates(&self) -> &[usize] {
        &self.candidates
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn edge_count(&self) -> usize {
        self.members.len()
    }

    pub fn edges_of(&self, candidate: usize) -> &[u32] {
        &self.by_candidate[candidate]
    }

    pub fn markers_of(&self, edge: usize) -> &[u32] {
        &self.by_edge[edge]
    }

    pub fn contains(&self, candidate: usize, edge: usize) -> bool {
        self.members.contains(&(candidate as u32, edge as u32))
    }

    fn to_set(&self, chosen: impl IntoIterator<Item = usize>) -> AttractorSet {
        AttractorSet::from_offsets(chosen.into_iter().map(|c| self.candidates[c]).collect(), self.n)
    }

    /// Peeling: a candidate is kept once it becomes the last remaining
    /// marker of some edge; others are deleted in increasing position order.
    pub fn find_minimal(&self) -> AttractorSet {
        let m = self.candidates.len();
        let mut degree: Vec<u32> = self.by_edge.iter().map(|v| v.len() as u32).collect();
        // XOR of the remaining markers, so a lone survivor is found in O(1).
        let mut xor: Vec<u32> = self.by_edge.iter().map(|v| v.iter().fold(0, |a, &c| a ^ c)).collect();
        let mut kept = vec![false; m];
        for e in 0..degree.len() {
            if degree[e] == 1 {
                kept[xor[e] as usize] = true;
            }
        }
        for j in 0..m {
            if kept[j] {
                continue;
            }
            for &e in &self.by_candidate[j] {
                let e = e as usize;
                degree[e] -= 1;
                xor[e] ^= j as u32;
                if degree[e] == 1 {
                    kept[xor[e] as usize] = true;
                }
            }
        }
        self.to_set((0..m).filter(|&c| kept[c]))
    }

    /// Greedy set cover: repeatedly take the candidate marking the most
    /// still-unmarked edges, the smallest position on ties.
    pub fn greedy(&self) -> AttractorSet {
        let degrees: Vec<usize> = self.by_candidate.iter().map(Vec::len).collect();
        let mut queue = BucketQueue::new(&degrees);
        let mut marked = vec![false; self.universe.len()];
        let mut left = self.universe.len();
        let mut chosen = Vec::new();
        while left > 0 {
            let (c, _) = queue.pop_max().expect("candidates mark every edge");
            chosen.push(c);
            for &e in &self.by_candidate[c] {
                if std::mem::replace(&mut marked[e as usize], true) {
                    continue;
                }
                left -= 1;
                for &other in &self.by_edge[e as usize] {
                    if queue.contains(other as usize) {
                        queue.dec(other as usize);
                    }
                }
            }
        }
        self.to_set(chosen)
    }

    /// Whether the candidates in `chosen` mark every edge.
    pub fn covers(&self, chosen: &[usize]) -> bool {
        let mut hit = vec![false; self.universe.len()];
        let mut count = 0;
        for &c in chosen {
            for &e in &self.by_candidate[c] {
                if !std::mem::replace(&mut hit[e as usize], true) {
                    count += 1;
                }
            }
        }
        count == self.universe.len()
    }

    /// Exact minimum by enumerating candidate subsets in increasing size,
    /// lexicographically within a size. Without `upper_bound` the greedy
    /// result bounds the search and is returned if nothing smaller exists.
    /// Fails before searching if more than `budget` subsets could be
    /// examined.
    pub fn find_minimum(&self, upper_bound: Option<usize>, budget: u64) -> Result<AttractorSet> {
        let m = self.candidates.len();
        let (last_size, fallback) = match upper_bound {
            Some(b) => (b.min(m), None),
            None => {
                let g = self.greedy();
                (g.len() - 1, Some(g))
            }
        };
        let bound = upper_bound.unwrap_or(last_size + 1);
        let work = (1..=last_size).fold(0u64, |acc, s| acc.saturating_add(binomial(m, s)));
        if work > budget {
            return Err(Error::InstanceTooLarge {
                candidates: m,
                bound,
                budget,
            });
        }
        let words = self.universe.len().div_ceil(64);
        let masks: Vec<Vec<u64>> = self
            .by_candidate
            .iter()
            .map(|edges| {
                let mut mask = vec![0u64; words];
                for &e in edges {
                    mask[e as usize / 64] |= 1 << (e % 64);
                }
                mask
            })
            .collect();
        let mut full = vec![u64::MAX; words];
        if !self.universe.len().is_multiple_of(64) {
            full[words - 1] = (1u64 << (self.universe.len() % 64)) - 1;
        }
        for size in 1..=last_size {
            let mut search = Search {
                masks: &masks,
                full: &full,
                combo: Vec::with_capacity(size),
                acc: vec![vec![0u64; words]; size + 1],
            };
            if search.run(0, size) {
                return Ok(self.to_set(search.combo));
            }
        }
        fallback.ok_or_else(|| {
            Error::Parameter(format!("no k-attractor within the upper bound {bound}"))
        })
    }
}

/// Depth-first lexicographic enumeration with prefix unions.
struct Search<'a> {
    masks: &'a [Vec<u64>],
    full: &'a [u64],
    combo: Vec<usize>,
    acc: Vec<Vec<u64>>,
}

impl Search<'_> {
    fn run(&mut self, from: usize, size: usize) -> bool {
        let depth = self.combo.len();
        if depth == size {
            return self.acc[depth] == self.full;
        }
        for c in from..=self.masks.len() - (size - depth) {
            let (lo, hi) = self.acc.split_at_mut(depth + 1);
            for ((out, a), b) in hi[0].iter_mut().zip(&lo[depth]).zip(&self.masks[c]) {
                *out = a | b;
            }
            self.combo.push(c);
            if self.run(c + 1, size) {
                return true;
            }
            self.combo.pop();
        }
        false
    }
}

pub fn find_minimal(index: &SuffixIndex, classes: &EquivClasses, k: usize) -> Result<AttractorSet> {
    Ok(build_marker_graph(index, classes, k)?.find_minimal())
}

pub fn greedy_approx(index: &SuffixIndex, classes: &EquivClasses, k: usize) -> Result<AttractorSet> {
    Ok(build_marker_graph(index, classes, k)?.greedy())
}

pub fn find_minimum(
    index: &SuffixIndex,
    classes: &EquivClasses,
    k: usize,
    upper_bound: Option<usize>,
    budget: u64,
) -> Result<AttractorSet> {
    build_marker_graph(index, classes, k)?.find_minimum(upper_bound, budget)
}

/// Whether offset `j` marks `e` by the definition: some occurrence
/// `[SA[m], SA[m] + λ(e))` with `m` in `l_e..=r_e` contains `j`.
pub fn naive_marks(index: &SuffixIndex, universe: &Universe, edge: usize, j: usize) -> bool {
    let e = universe.edge(edge);
    index.sa()[e.l..=e.r]
        .iter()
        .any(|&s| (s as usize) <= j && j < s as usize + e.lambda)
}
