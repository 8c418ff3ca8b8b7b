//! Attractor sets, the capped successor-distance array `D`, and the
//! k-equivalence classes that shrink the candidate set.

use crate::error::{Error, Result};
use crate::text_index::{self, RemappedText, SuffixIndex};

/// A set of text positions.
///
/// Stored as sorted 0-based offsets; [`AttractorSet::positions`] reports the
/// 1-based positions used by files and the command line.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AttractorSet {
    n: usize,
    offsets: Vec<usize>,
    member: Vec<bool>,
}

impl AttractorSet {
    /// Builds a set from 1-based positions, sorting and deduplicating.
    pub fn from_positions(positions: &[i64], n: usize) -> Result<Self> {
        let mut offsets = Vec::with_capacity(positions.len());
        for &p in positions {
            if p < 1 || p as u64 > n as u64 {
                return Err(Error::PositionOutOfRange { position: p, n });
            }
            offsets.push(p as usize - 1);
        }
        Ok(Self::from_offsets(offsets, n))
    }

    /// Builds a set from 0-based offsets. Panics if an offset is `>= n`.
    pub fn from_offsets(mut offsets: Vec<usize>, n: usize) -> Self {
        offsets.sort_unstable();
        offsets.dedup();
        let mut member = vec![false; n];
        for &o in &offsets {
            member[o] = true;
        }
        Self { n, offsets, member }
    }

    pub fn empty(n: usize) -> Self {
        Self::from_offsets(Vec::new(), n)
    }

    pub fn full(n: usize) -> Self {
        Self::from_offsets((0..n).collect(), n)
    }

    pub fn text_len(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.offsets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.offsets.is_empty()
    }

    pub fn offsets(&self) -> &[usize] {
        &self.offsets
    }

    pub fn positions(&self) -> impl Iterator<Item = usize> + '_ {
        self.offsets.iter().map(|o| o + 1)
    }

    pub fn contains_offset(&self, offset: usize) -> bool {
        self.member.get(offset).copied().unwrap_or(false)
    }

    /// Index of `offset` among the members (its color), if present.
    pub fn rank_of(&self, offset: usize) -> Option<usize> {
        self.offsets.binary_search(&offset).ok()
    }

    /// `next[p]` = smallest member `>= p`, or `None`. Length `n + 1`.
    pub fn successors(&self) -> Vec<Option<usize>> {
        let mut next = vec![None; self.n + 1];
        for p in (0..self.n).rev() {
            next[p] = if self.member[p] { Some(p) } else { next[p + 1] };
        }
        next
    }

    /// Distance from each offset to the nearest member at or after it,
    /// capped at `cap`. Length `n`.
    pub fn gaps(&self, cap: u32) -> Vec<u32> {
        let mut gap = vec![cap; self.n];
        let mut run = cap;
        for p in (0..self.n).rev() {
            run = if self.member[p] { 0 } else { (run + 1).min(cap) };
            gap[p] = run;
        }
        gap
    }

    pub fn without(&self, offset: usize) -> Self {
        let offsets = self.offsets.iter().copied().filter(|&o| o != offset).collect();
        Self::from_offsets(offsets, self.n)
    }

    pub fn with(&self, offset: usize) -> Self {
        let mut offsets = self.offsets.clone();
        offsets.push(offset);
        Self::from_offsets(offsets, self.n)
    }
}

/// Parses the attractor file format: one 1-based decimal position per line;
/// blank lines and `#` comments are ignored.
pub fn parse_attractor_file(contents: &str, n: usize) -> Result<AttractorSet> {
    let mut positions = Vec::new();
    for (i, line) in contents.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let p: i64 = line.parse().map_err(|_| Error::Parse {
            line: i + 1,
            message: format!("expected a decimal position, found {line:?}"),
        })?;
        positions.push(p);
    }
    AttractorSet::from_positions(&positions, n)
}

/// Wrapper matching the file-loading contract: 1-based positions in, set out.
pub fn load_attractor(positions: &[i64], n: usize) -> Result<AttractorSet> {
    AttractorSet::from_positions(positions, n)
}

/// `values[r] = min(succ(SA[r]) - SA[r], k + 1)` where `succ` is the first
/// attractor position at or after the suffix start.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DArray {
    values: Vec<u32>,
    cap: u32,
}

impl DArray {
    pub fn new(index: &SuffixIndex, gamma: &AttractorSet, k: usize) -> Result<Self> {
        index.check_k(k)?;
        if gamma.text_len() != index.len() {
            return Err(Error::Parameter(format!(
                "attractor is over a text of length {}, index has length {}",
                gamma.text_len(),
                index.len()
            )));
        }
        let cap = k as u32 + 1;
        let gap = gamma.gaps(cap);
        let values = index.sa().iter().map(|&p| gap[p as usize]).collect();
        Ok(Self { values, cap })
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    pub fn into_values(self) -> Vec<u32> {
        self.values
    }
}

/// Partition of the positions into k-equivalence classes, plus the
/// class minima (the candidate set `C`).
///
/// Two positions are equivalent when their width `2k - 1` contexts on the
/// padded text agree; the padding symbol sorts below every text symbol.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivClasses {
    k: usize,
    class_of: Vec<u32>,
    representatives: Vec<usize>,
}

impl EquivClasses {
    /// Groups contexts through the suffix array of the padded text: a class
    /// is a maximal run of padded suffixes sharing a prefix of length `2k - 1`.
    pub fn new(text: &RemappedText, k: usize) -> Result<Self> {
        let n = text.len();
        if k == 0 || k > n {
            return Err(Error::KOutOfRange { k, n });
        }
        let width = 2 * k - 1;
        // Shift by one so the padding symbol is 1 and stays above SA-IS's
        // implicit terminator.
        let mut padded = vec![1u32; k - 1];
        padded.extend(text.symbols().iter().map(|&c| c + 1));
        padded.extend(std::iter::repeat_n(1, k - 1));
        let sa = text_index::suffix_array(&padded, text.sigma() + 1);
        let isa = text_index::inverse(&sa);
        let lcp = text_index::lcp_array(&padded, &sa, &isa);

        // Starts 0..n of the padded text are the contexts of offsets 0..n.
        let mut class_of = vec![u32::MAX; n];
        let mut group_min: Vec<usize> = Vec::new();
        let mut run_lcp = 0u32;
        for (rank, &start) in sa.iter().enumerate() {
            let start = start as usize;
            run_lcp = run_lcp.min(lcp[rank]);
            if start >= n {
                continue;
            }
            if group_min.is_empty() || (run_lcp as usize) < width {
                group_min.push(start);
            }
            let g = group_min.len() - 1;
            group_min[g] = group_min[g].min(start);
            class_of[start] = g as u32;
            run_lcp = u32::MAX;
        }
        // Renumber so class ids follow ascending representatives.
        let mut order: Vec<usize> = (0..group_min.len()).collect();
        order.sort_unstable_by_key(|&g| group_min[g]);
        let mut renumber = vec![0u32; order.len()];
        for (new, &g) in order.iter().enumerate() {
            renumber[g] = new as u32;
        }
        for c in &mut class_of {
            *c = renumber[*c as usize];
        }
        let representatives = order.iter().map(|&g| group_min[g]).collect();
        Ok(Self {
            k,
            class_of,
            representatives,
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn class_of(&self, offset: usize) -> usize {
        self.class_of[offset] as usize
    }

    pub fn class_ids(&self) -> &[u32] {
        &self.class_of
    }

    pub fn len(&self) -> usize {
        self.representatives.len()
    }

    pub fn is_empty(&self) -> bool {
        self.representatives.is_empty()
    }

    /// Class minima as 0-based offsets, ascending.
    pub fn representatives(&self) -> &[usize] {
        &self.representatives
    }

    pub fn same_class(&self, a: usize, b: usize) -> bool {
        self.class_of[a] == self.class_of[b]
    }
}

/// Replaces `j` by an equivalent offset `j2`. Both arguments are 0-based.
pub fn swap_check(
    gamma: &AttractorSet,
    j: usize,
    j2: usize,
    classes: &EquivClasses,
) -> Result<AttractorSet> {
    if !gamma.contains_offset(j) {
        return Err(Error::NotInAttractor(j + 1));
    }
    if j2 >= gamma.text_len() || !classes.same_class(j, j2) {
        return Err(Error::ClassMismatch(j + 1, j2 + 1));
    }
    Ok(gamma.without(j).with(j2))
}
