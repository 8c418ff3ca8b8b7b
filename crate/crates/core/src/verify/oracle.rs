//! Brute-force ground truth straight from the definitions. Intended for
//! texts of a few dozen symbols.

use std::collections::HashMap;

use crate::attractor::AttractorSet;

/// Distinct substrings of selected lengths, each with the start offsets of
/// all its occurrences.
#[derive(Debug, Clone)]
pub struct SubstringCatalog {
    n: usize,
    /// `(length, occurrence starts)` per distinct substring.
    entries: Vec<(usize, Vec<usize>)>,
}

impl SubstringCatalog {
    /// Every distinct substring of length `1..=k`.
    pub fn up_to(text: &[u32], k: usize) -> Self {
        Self::with_lengths(text, 1..=k.min(text.len()))
    }

    /// Every distinct substring of length exactly `k`.
    pub fn exactly(text: &[u32], k: usize) -> Self {
        Self::with_lengths(text, k..=k.min(text.len()))
    }

    fn with_lengths(text: &[u32], lengths: std::ops::RangeInclusive<usize>) -> Self {
        let n = text.len();
        let mut entries = Vec::new();
        for len in lengths {
            let mut seen: HashMap<&[u32], usize> = HashMap::new();
            for start in 0..=n - len {
                let slot = *seen.entry(&text[start..start + len]).or_insert_with(|| {
                    entries.push((len, Vec::new()));
                    entries.len() - 1
                });
                entries[slot].1.push(start);
            }
        }
        Self { n, entries }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Whether some occurrence of every catalogued substring contains a member.
    pub fn is_covered_by(&self, gamma: &AttractorSet) -> bool {
        self.entries.iter().all(|(len, starts)| {
            starts
                .iter()
                .any(|&s| (s..s + len).any(|p| gamma.contains_offset(p)))
        })
    }

    /// Per substring, the bitmask of offsets that would cover it (`n <= 64`).
    pub fn cover_masks(&self) -> Vec<u64> {
        assert!(self.n <= 64, "bitmask oracle limited to 64 symbols");
        self.entries
            .iter()
            .map(|(len, starts)| {
                starts.iter().fold(0u64, |acc, &s| {
                    let window = if *len == 64 { u64::MAX } else { ((1u64 << len) - 1) << s };
                    acc | window
                })
            })
            .collect()
    }

    /// Smallest covering set, lexicographically first among those of minimum
    /// size. `None` if more than `budget` search nodes would be visited.
    pub fn minimum_cover(&self, budget: u64) -> Option<AttractorSet> {
        let masks = self.cover_masks();
        let mut search = CoverSearch {
            masks: &masks,
            n: self.n,
            combo: Vec::new(),
            spent: 0,
            budget,
        };
        for size in 0..=self.n {
            match search.run(size, 0, 0) {
                Some(true) => return Some(AttractorSet::from_offsets(search.combo, self.n)),
                Some(false) => {}
                None => return None,
            }
        }
        None
    }
}

/// Lexicographic subset enumeration that abandons a prefix as soon as some
/// substring can no longer be covered by it plus the positions after it.
struct CoverSearch<'a> {
    masks: &'a [u64],
    n: usize,
    combo: Vec<usize>,
    spent: u64,
    budget: u64,
}

impl CoverSearch<'_> {
    /// `Some(true)` once `combo` covers, `None` when the budget runs out.
    fn run(&mut self, need: usize, from: usize, chosen: u64) -> Option<bool> {
        self.spent += 1;
        if self.spent > self.budget {
            return None;
        }
        if need == 0 {
            return Some(self.masks.iter().all(|&m| m & chosen != 0));
        }
        let full = if self.n == 64 { u64::MAX } else { (1u64 << self.n) - 1 };
        for p in from..=self.n - need {
            let with = chosen | 1 << p;
            let later = if need > 1 && p + 1 < 64 { full & !((1u64 << (p + 1)) - 1) } else { 0 };
            if self.masks.iter().any(|&m| m & (with | later) == 0) {
                continue;
            }
            self.combo.push(p);
            match self.run(need - 1, p + 1, with)? {
                true => return Some(true),
                false => {
                    self.combo.pop();
                }
            }
        }
        Some(false)
    }
}

/// Literal check: every substring of length `<= k` has an occurrence
/// containing a member of `gamma`.
pub fn brute_force_is_k_attractor(text: &[u32], gamma: &AttractorSet, k: usize) -> bool {
    SubstringCatalog::up_to(text, k).is_covered_by(gamma)
}

pub fn brute_force_is_k_sharp_attractor(text: &[u32], gamma: &AttractorSet, k: usize) -> bool {
    SubstringCatalog::exactly(text, k).is_covered_by(gamma)
}

/// Exhaustive minimum k-attractor over all position subsets (`n <= 64`,
/// practical for `n` up to about 16).
pub fn brute_force_min_k_attractor(text: &[u32], k: usize) -> (usize, AttractorSet) {
    let best = SubstringCatalog::up_to(text, k)
        .minimum_cover(u64::MAX)
        .expect("the full position set always covers");
    (best.len(), best)
}
