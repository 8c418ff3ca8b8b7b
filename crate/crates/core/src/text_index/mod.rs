//! Suffix-based text indexing: alphabet remapping, suffix array, LCP, RMQ,
//! suffix-tree topology and truncated-edge enumeration.
//!
//! All offsets and suffix-array ranks in this module are 0-based.

mod rmq;
mod sais;
mod tree;

use std::cmp::Ordering;
use std::collections::HashMap;
use std::sync::OnceLock;

pub use rmq::Rmq;
pub use sais::{inverse, lcp_array, suffix_array};
pub use tree::{Node, NodeId, SuffixTree, ROOT};

use crate::error::{Error, Result};

/// A text over the dense alphabet `[1..=sigma]`.
///
/// Codes are assigned in order of first occurrence. The mapping is injective,
/// so attractors of the remapped text are exactly the attractors of the input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RemappedText {
    symbols: Vec<u32>,
    sigma: u32,
    /// `alphabet[c - 1]` is the original symbol with code `c`.
    alphabet: Vec<u64>,
}

impl RemappedText {
    pub fn from_bytes(raw: &[u8]) -> Result<Self> {
        let wide: Vec<u64> = raw.iter().map(|&b| b as u64).collect();
        Self::from_symbols(&wide)
    }

    /// Remaps arbitrary integer symbols.
    pub fn from_symbols(raw: &[u64]) -> Result<Self> {
        if raw.is_empty() {
            return Err(Error::EmptyText);
        }
        let mut codes: HashMap<u64, u32> = HashMap::new();
        let mut alphabet = Vec::new();
        let symbols = raw
            .iter()
            .map(|&c| {
                *codes.entry(c).or_insert_with(|| {
                    alphabet.push(c);
                    alphabet.len() as u32
                })
            })
            .collect();
        Ok(Self {
            symbols,
            sigma: alphabet.len() as u32,
            alphabet,
        })
    }

    pub fn symbols(&self) -> &[u32] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn sigma(&self) -> u32 {
        self.sigma
    }

    pub fn code_of(&self, original: u64) -> Option<u32> {
        self.alphabet
            .iter()
            .position(|&c| c == original)
            .map(|p| p as u32 + 1)
    }

    pub fn original(&self, code: u32) -> u64 {
        self.alphabet[code as usize - 1]
    }
}

/// Convenience wrapper around [`RemappedText::from_bytes`].
pub fn remap_alphabet(raw: &[u8]) -> Result<RemappedText> {
    RemappedText::from_bytes(raw)
}

/// One suffix-tree edge, identified by the node below it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TreeEdge {
    pub node: NodeId,
    /// Inclusive SA interval of the child node.
    pub l: usize,
    pub r: usize,
    /// `lambda = |s(e)|`: parent string depth plus one.
    pub lambda: usize,
    /// String depth of the child node.
    pub child_depth: usize,
}

/// An edge of the k-truncated suffix tree, with a dense id in its universe.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TruncatedEdge {
    pub id: usize,
    pub node: NodeId,
    pub l: usize,
    pub r: usize,
    pub lambda: usize,
    pub parent_edge: Option<usize>,
}

/// The set-cover universe: every suffix-tree edge with `lambda <= k`.
#[derive(Debug, Clone)]
pub struct Universe {
    k: usize,
    edges: Vec<TruncatedEdge>,
    by_node: Vec<u32>,
}

const ABSENT: u32 = u32::MAX;

impl Universe {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn edges(&self) -> &[TruncatedEdge] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn edge(&self, id: usize) -> &TruncatedEdge {
        &self.edges[id]
    }

    pub fn edge_for_node(&self, node: NodeId) -> Option<&TruncatedEdge> {
        match self.by_node.get(node) {
            Some(&id) if id != ABSENT => Some(&self.edges[id as usize]),
            _ => None,
        }
    }
}

/// Suffix array, inverse, LCP, RMQ over LCP and suffix-tree topology of one
/// remapped text. Immutable after construction.
#[derive(Debug)]
pub struct SuffixIndex {
    text: Vec<u32>,
    sigma: u32,
    sa: Vec<u32>,
    isa: Vec<u32>,
    lcp: Vec<u32>,
    /// Built on first use; verification never needs it.
    lcp_rmq: OnceLock<Rmq>,
    tree: SuffixTree,
}

impl SuffixIndex {
    pub fn new(text: &RemappedText) -> Self {
        let s = text.symbols().to_vec();
        let sa = sais::suffix_array(&s, text.sigma());
        let isa = sais::inverse(&sa);
        let lcp = sais::lcp_array(&s, &sa, &isa);
        let tree = SuffixTree::build(&sa, &lcp);
        Self {
            lcp_rmq: OnceLock::new(),
            text: s,
            sigma: text.sigma(),
            sa,
            isa,
            lcp,
            tree,
        }
    }

    pub fn text(&self) -> &[u32] {
        &self.text
    }

    pub fn len(&self) -> usize {
        self.text.len()
    }

    pub fn is_empty(&self) -> bool {
        self.text.is_empty()
    }

    pub fn sigma(&self) -> u32 {
        self.sigma
    }

    pub fn sa(&self) -> &[u32] {
        &self.sa
    }

    pub fn isa(&self) -> &[u32] {
        &self.isa
    }

    pub fn lcp(&self) -> &[u32] {
        &self.lcp
    }

    pub fn tree(&self) -> &SuffixTree {
        &self.tree
    }

    /// Longest common prefix of the suffixes at ranks `a < b`.
    pub fn lcp_of_ranks(&self, a: usize, b: usize) -> usize {
        debug_assert!(a < b);
        self.lcp_rmq.get_or_init(|| Rmq::new(self.lcp.clone())).min(a + 1, b) as usize
    }

    pub fn check_k(&self, k: usize) -> Result<()> {
        if k == 0 || k > self.len() {
            return Err(Error::KOutOfRange { k, n: self.len() });
        }
        Ok(())
    }

    fn tree_edge(&self, node: NodeId) -> TreeEdge {
        let v = self.tree.node(node);
        let parent = v.parent().expect("the root has no incoming edge");
        TreeEdge {
            node,
            l: v.lb as usize,
            r: v.rb as usize,
            lambda: self.tree.node(parent).depth as usize + 1,
            child_depth: v.depth as usize,
        }
    }

    /// All suffix-tree edges with `lambda <= k`.
    pub fn universe(&self, k: usize) -> Result<Universe> {
        self.check_k(k)?;
        let nodes = self.tree.nodes();
        let mut by_node = vec![ABSENT; nodes.len()];
        let mut members = Vec::new();
        for (id, node) in nodes.iter().enumerate() {
            if let Some(p) = node.parent() {
                if (nodes[p].depth as usize) < k {
                    by_node[id] = members.len() as u32;
                    members.push(id);
                }
            }
        }
        let edges = members
            .iter()
            .enumerate()
            .map(|(id, &node)| {
                let e = self.tree_edge(node);
                let parent = nodes[node].parent().unwrap();
                TruncatedEdge {
                    id,
                    node,
                    l: e.l,
                    r: e.r,
                    lambda: e.lambda,
                    parent_edge: (parent != ROOT).then(|| by_node[parent] as usize),
                }
            })
            .collect();
        Ok(Universe { k, edges, by_node })
    }

    /// The edge on which the path spelling `text[offset..offset + d]` ends,
    /// with `d = min(depth, n - offset)`.
    pub fn locus_edge(&self, offset: usize, depth: usize) -> Result<TreeEdge> {
        if offset >= self.len() {
            return Err(Error::PositionOutOfRange {
                position: offset as i64 + 1,
                n: self.len(),
            });
        }
        if depth == 0 {
            return Err(Error::Parameter("locus depth must be at least 1".into()));
        }
        let d = depth.min(self.len() - offset) as u32;
        let leaf = self.tree.suffix_node(self.isa[offset] as usize);
        Ok(self.tree_edge(self.tree.ancestor_at_depth(leaf, d)))
    }

    /// Inclusive SA interval of the suffixes prefixed by
    /// `text[offset..offset + len]`, by binary search over the suffix array.
    pub fn pattern_range(&self, offset: usize, len: usize) -> Result<(usize, usize)> {
        if len == 0 || offset + len > self.len() {
            return Err(Error::Parameter(format!(
                "pattern [{offset}, {}) is not a non-empty substring",
                offset + len
            )));
        }
        let pattern = &self.text[offset..offset + len];
        let cmp = |rank: usize| -> Ordering {
            let start = self.sa[rank] as usize;
            let end = (start + len).min(self.len());
            self.text[start..end].cmp(pattern)
        };
        let first = partition(self.len(), |r| cmp(r) == Ordering::Less);
        let last = partition(self.len(), |r| cmp(r) != Ordering::Greater);
        Ok((first, last - 1))
    }
}

/// First index in `0..len` for which `pred` is false (`pred` monotone).
fn partition(len: usize, pred: impl Fn(usize) -> bool) -> usize {
    let (mut lo, mut hi) = (0, len);
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        if pred(mid) {
            lo = mid + 1;
        } else {
            hi = mid;
        }
    }
    lo
}
