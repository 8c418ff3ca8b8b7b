//! Sharp attractors: the exact 2-sharp minimum through edge cover, an
//! exhaustive k-sharp oracle, and the set-cover gadget.

pub mod gadget;
mod matching;

pub use gadget::{build_gadget_attractor, gen_sharp_gadget, Gadget, SetCoverInstance, SetLayout};
pub use matching::maximum_matching;

use std::collections::HashMap;

use crate::attractor::AttractorSet;
use crate::error::{Error, Result};
use crate::verify::SubstringCatalog;

/// One vertex per distinct 2-mer. Window `text[c-1..c+2]` joins the 2-mers
/// at `c - 1` and `c` and is annotated with its center offset `c`; the first
/// and last 2-mers get self-loops annotated `0` and `n - 1`.
#[derive(Debug, Clone)]
pub struct BigramGraph {
    vertices: Vec<[u32; 2]>,
    /// `(u, v, annotation)`; `u == v` for loops.
    edges: Vec<(usize, usize, usize)>,
}

impl BigramGraph {
    pub fn new(text: &[u32]) -> Result<Self> {
        let n = text.len();
        if n < 2 {
            return Err(Error::NoBigrams(n));
        }
        let mut ids: HashMap<[u32; 2], usize> = HashMap::new();
        let mut vertices = Vec::new();
        let vertex_at: Vec<usize> = text
            .windows(2)
            .map(|w| {
                let key = [w[0], w[1]];
                *ids.entry(key).or_insert_with(|| {
                    vertices.push(key);
                    vertices.len() - 1
                })
            })
            .collect();
        let mut edges = vec![(vertex_at[0], vertex_at[0], 0)];
        for c in 1..n - 1 {
            edges.push((vertex_at[c - 1], vertex_at[c], c));
        }
        edges.push((vertex_at[n - 2], vertex_at[n - 2], n - 1));
        Ok(Self { vertices, edges })
    }

    pub fn vertices(&self) -> &[[u32; 2]] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize, usize)] {
        &self.edges
    }

    /// Minimum edge cover, as edge indices in increasing annotation order.
    pub fn minimum_edge_cover(&self) -> Vec<usize> {
        let v = self.vertices.len();
        let mut adj = vec![Vec::new(); v];
        // The lowest-annotated edge per incidence, used for determinism.
        let mut cheapest: HashMap<(usize, usize), usize> = HashMap::new();
        let mut any_incident = vec![usize::MAX; v];
        for (i, &(a, b, _)) in self.edges.iter().enumerate() {
            any_incident[a] = any_incident[a].min(i);
            any_incident[b] = any_incident[b].min(i);
            if a != b {
                let key = (a.min(b), a.max(b));
                cheapest.entry(key).or_insert_with(|| {
                    adj[a].push(b);
                    adj[b].push(a);
                    i
                });
            }
        }
        let mate = maximum_matching(&adj);
        let mut chosen = Vec::new();
        for x in 0..v {
            match mate[x] {
                Some(y) if x < y => chosen.push(cheapest[&(x, y)]),
                Some(_) => {}
                None => chosen.push(any_incident[x]),
            }
        }
        chosen.sort_unstable();
        chosen.dedup();
        chosen
    }
}

/// Minimum set covering every distinct 2-mer, via minimum edge cover of the
/// bigram graph (its size is `|V| - |M|`).
pub fn min_2_sharp_attractor(text: &[u32]) -> Result<AttractorSet> {
    let graph = BigramGraph::new(text)?;
    let offsets = graph
        .minimum_edge_cover()
        .into_iter()
        .map(|e| graph.edges[e].2)
        .collect();
    Ok(AttractorSet::from_offsets(offsets, text.len()))
}

/// Exhaustive minimum k-sharp attractor (`n <= 64`), lexicographically
/// first among those of minimum size.
pub fn brute_force_min_k_sharp(text: &[u32], k: usize, budget: u64) -> Result<(usize, AttractorSet)> {
    let n = text.len();
    if k == 0 || k > n {
        return Err(Error::KOutOfRange { k, n });
    }
    if n > 64 {
        return Err(Error::Parameter(format!(
            "exhaustive search supports at most 64 symbols, text has {n}"
        )));
    }
    let best = SubstringCatalog::exactly(text, k)
        .minimum_cover(budget)
        .ok_or(Error::InstanceTooLarge {
            candidates: n,
            bound: n,
            budget,
        })?;
    Ok((best.len(), best))
}
