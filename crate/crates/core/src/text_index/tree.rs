use std::sync::OnceLock;

/// Dense node identifier; the root is always node 0.
pub type NodeId = usize;

pub const ROOT: NodeId = 0;
const NO_PARENT: u32 = u32::MAX;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Node {
    parent: u32,
    /// String depth of the node.
    pub depth: u32,
    /// Inclusive suffix-array interval of the node.
    pub lb: u32,
    pub rb: u32,
}

impl Node {
    pub fn parent(&self) -> Option<NodeId> {
        (self.parent != NO_PARENT).then_some(self.parent as NodeId)
    }
}

/// Suffix-tree topology recovered from SA + LCP.
///
/// No terminator is used. A node is explicit wherever the path branches or a
/// suffix ends, so every suffix `i` ends exactly at node `suffix_node[isa[i]]`
/// (a leaf, or an internal node when the suffix is a prefix of another).
#[derive(Debug)]
pub struct SuffixTree {
    nodes: Vec<Node>,
    /// By suffix-array rank: node where that suffix ends.
    suffix_node: Vec<u32>,
    lifting: OnceLock<Vec<Vec<u32>>>,
}

impl SuffixTree {
    pub(crate) fn build(sa: &[u32], lcp: &[u32]) -> Self {
        let n = sa.len();
        // At most n leaves and n - 1 branching nodes, plus the root.
        let mut nodes = Vec::with_capacity(2 * n + 1);
        nodes.push(Node {
            parent: NO_PARENT,
            depth: 0,
            lb: 0,
            rb: n.saturating_sub(1) as u32,
        });
        let mut suffix_node = vec![0u32; n];
        let mut stack: Vec<usize> = vec![ROOT];

        for rank in 0..n {
            let h = if rank == 0 { 0 } else { lcp[rank] };
            let mut dangling = None;
            while nodes[*stack.last().unwrap()].depth > h {
                let x = stack.pop().unwrap();
                nodes[x].rb = (rank - 1) as u32;
                let top = *stack.last().unwrap();
                if nodes[top].depth >= h {
                    nodes[x].parent = top as u32;
                } else {
                    dangling = Some(x);
                    break;
                }
            }
            if let Some(x) = dangling {
                let id = nodes.len();
                nodes.push(Node {
                    parent: NO_PARENT,
                    depth: h,
                    lb: nodes[x].lb,
                    rb: 0,
                });
                nodes[x].parent = id as u32;
                stack.push(id);
            }
            let depth = n as u32 - sa[rank];
            let top = *stack.last().unwrap();
            if depth == nodes[top].depth {
                suffix_node[rank] = top as u32;
            } else {
                let id = nodes.len();
                nodes.push(Node {
                    parent: NO_PARENT,
                    depth,
                    lb: rank as u32,
                    rb: 0,
                });
                suffix_node[rank] = id as u32;
                stack.push(id);
            }
        }
        while stack.len() > 1 {
            let x = stack.pop().unwrap();
            nodes[x].rb = (n - 1) as u32;
            nodes[x].parent = *stack.last().unwrap() as u32;
        }
        Self {
            nodes,
            suffix_node,
            lifting: OnceLock::new(),
        }
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    pub fn node(&self, id: NodeId) -> &Node {
        &self.nodes[id]
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Node at which the suffix of the given rank ends.
    pub fn suffix_node(&self, rank: usize) -> NodeId {
        self.suffix_node[rank] as NodeId
    }

    fn lifting(&self) -> &[Vec<u32>] {
        self.lifting.get_or_init(|| {
            let len = self.nodes.len();
            let levels = (usize::BITS - len.leading_zeros()).max(1) as usize;
            let mut up = Vec::with_capacity(levels);
            // The root points at itself so jumps saturate there.
            let first: Vec<u32> = self
                .nodes
                .iter()
                .map(|node| node.parent().unwrap_or(ROOT) as u32)
                .collect();
            up.push(first);
            for level in 1..levels {
                let prev: &Vec<u32> = &up[level - 1];
                let next = prev.iter().map(|&a| prev[a as usize]).collect();
                up.push(next);
            }
            up
        })
    }

    /// Shallowest ancestor of `from` (inclusive) whose depth is at least
    /// `depth`. Requires `depth >= 1` and `depth(from) >= depth`.
    pub fn ancestor_at_depth(&self, from: NodeId, depth: u32) -> NodeId {
        debug_assert!(depth >= 1 && self.nodes[from].depth >= depth);
        let up = self.lifting();
        let mut v = from;
        for level in (0..up.len()).rev() {
            let a = up[level][v] as NodeId;
            if self.nodes[a].depth >= depth {
                v = a;
            }
        }
        v
    }
}
