//! Attractor verification over the suffix index.
//!
//! `Γ` marks an edge `e` iff `λ(e) > min(D[l_e..=r_e])`, and `Γ` is a
//! k-attractor iff it marks every edge of the k-truncated suffix tree.

pub mod oracle;

use crate::attractor::{AttractorSet, DArray};
use crate::error::{Error, Result};
use crate::text_index::{Rmq, SuffixIndex, TruncatedEdge, Universe};

pub use oracle::{
    brute_force_is_k_attractor, brute_force_is_k_sharp_attractor, brute_force_min_k_attractor,
    SubstringCatalog,
};

/// An unmarked edge; its string is `text[offset..offset + len]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Witness {
    pub edge: TruncatedEdge,
    pub offset: usize,
    pub len: usize,
}

impl Witness {
    pub fn substring<'t>(&self, text: &'t [u32]) -> &'t [u32] {
        &text[self.offset..self.offset + self.len]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Valid,
    Invalid(Witness),
}

impl Verdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, Verdict::Valid)
    }
}

/// D array of one attractor with an RMQ over it.
#[derive(Debug, Clone)]
pub struct Marking {
    rmq: Rmq,
}

impl Marking {
    pub fn new(index: &SuffixIndex, gamma: &AttractorSet, k: usize) -> Result<Self> {
        let d = DArray::new(index, gamma, k)?;
        Ok(Self {
            rmq: Rmq::new(d.into_values()),
        })
    }

    pub fn d(&self) -> &[u32] {
        self.rmq.values()
    }

    /// Whether some member lies in `[SA[m], SA[m] + lambda)` for some rank
    /// `m` in `l..=r`.
    pub fn marks(&self, l: usize, r: usize, lambda: usize) -> bool {
        (self.rmq.min(l, r) as usize) < lambda
    }

    pub fn argmin(&self, l: usize, r: usize) -> usize {
        self.rmq.argmin(l, r)
    }
}

/// Scans the tree nodes directly; the universe is only materialized to
/// describe a witness.
pub fn is_k_attractor(index: &SuffixIndex, gamma: &AttractorSet, k: usize) -> Result<Verdict> {
    let marking = Marking::new(index, gamma, k)?;
    let nodes = index.tree().nodes();
    let all_marked = nodes.iter().skip(1).all(|v| {
        let lambda = nodes[v.parent().unwrap()].depth as usize + 1;
        lambda > k || marking.marks(v.lb as usize, v.rb as usize, lambda)
    });
    if all_marked {
        return Ok(Verdict::Valid);
    }
    is_k_attractor_in(index, &index.universe(k)?, gamma)
}

/// Verification against a precomputed universe.
pub fn is_k_attractor_in(
    index: &SuffixIndex,
    universe: &Universe,
    gamma: &AttractorSet,
) -> Result<Verdict> {
    let marking = Marking::new(index, gamma, universe.k())?;
    for e in universe.edges() {
        if !marking.marks(e.l, e.r, e.lambda) {
            return Ok(Verdict::Invalid(Witness {
                edge: *e,
                offset: index.sa()[e.l] as usize,
                len: e.lambda,
            }));
        }
    }
    Ok(Verdict::Valid)
}

/// Offsets `i'` of occurrences of `text[offset..offset + len]` that contain
/// a member of `gamma`, at most `limit` of them, in discovery order.
pub fn report_occurrences(
    index: &SuffixIndex,
    gamma: &AttractorSet,
    offset: usize,
    len: usize,
    limit: usize,
) -> Result<Vec<usize>> {
    let (l, r) = index.pattern_range(offset, len)?;
    let mut out = Vec::new();
    if limit == 0 {
        return Ok(out);
    }
    let marking = Marking::new(index, gamma, len)?;
    let mut stack = vec![(l, r)];
    while let Some((lo, hi)) = stack.pop() {
        let m = marking.argmin(lo, hi);
        if marking.d()[m] as usize >= len {
            continue;
        }
        out.push(index.sa()[m] as usize);
        if out.len() == limit {
            break;
        }
        if m < hi {
            stack.push((m + 1, hi));
        }
        if m > lo {
            stack.push((lo, m - 1));
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SharpVerdict {
    Valid,
    /// Leftmost uncovered k-mer, as `text[offset..offset + k]`.
    Invalid { offset: usize },
}

impl SharpVerdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, SharpVerdict::Valid)
    }
}

/// Verifies that every distinct substring of length exactly `k` has an
/// occurrence containing a member of `gamma`.
pub fn is_k_sharp_attractor(
    index: &SuffixIndex,
    gamma: &AttractorSet,
    k: usize,
) -> Result<SharpVerdict> {
    index.check_k(k)?;
    let marking = Marking::new(index, gamma, k)?;
    let (n, sa, lcp) = (index.len(), index.sa(), index.lcp());
    let mut leftmost: Option<u32> = None;
    let mut rank = 0;
    while rank < n {
        if n - (sa[rank] as usize) < k {
            rank += 1;
            continue;
        }
        // Ranks sharing this k-mer form a run with lcp >= k.
        let mut end = rank;
        let mut first = sa[rank];
        while end + 1 < n && lcp[end + 1] as usize >= k {
            end += 1;
            first = first.min(sa[end]);
        }
        if !marking.marks(rank, end, k) && leftmost.is_none_or(|o| first < o) {
            leftmost = Some(first);
        }
        rank = end + 1;
    }
    Ok(match leftmost {
        None => SharpVerdict::Valid,
        Some(offset) => SharpVerdict::Invalid { offset: offset as usize },
    })
}

pub(crate) fn check_gamma(index: &SuffixIndex, gamma: &AttractorSet) -> Result<()> {
    if gamma.text_len() != index.len() {
        return Err(Error::Parameter(format!(
            "attractor is over a text of length {}, index has length {}",
            gamma.text_len(),
            index.len()
        )));
    }
    Ok(())
}
