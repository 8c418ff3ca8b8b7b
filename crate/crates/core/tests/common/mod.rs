#![allow(dead_code)]

use attractors::{AttractorSet, RemappedText, SuffixIndex};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// Every text of length `1..=max_len` over the first `sigma` letters.
pub fn all_texts(max_len: usize, sigma: u8) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    for n in 1..=max_len {
        let mut digits = vec![0u8; n];
        loop {
            out.push(digits.iter().map(|d| b'a' + d).collect());
            let mut p = 0;
            while p < n && digits[p] == sigma - 1 {
                digits[p] = 0;
                p += 1;
            }
            if p == n {
                break;
            }
            digits[p] += 1;
        }
    }
    out
}

pub fn random_text(rng: &mut StdRng, n: usize, sigma: u8) -> Vec<u8> {
    (0..n).map(|_| b'a' + rng.gen_range(0..sigma)).collect()
}

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub struct Instance {
    pub text: RemappedText,
    pub index: SuffixIndex,
}

pub fn instance(raw: &[u8]) -> Instance {
    let text = RemappedText::from_bytes(raw).unwrap();
    let index = SuffixIndex::new(&text);
    Instance { text, index }
}

pub fn subset(mask: u64, n: usize) -> AttractorSet {
    AttractorSet::from_offsets((0..n).filter(|&i| mask >> i & 1 == 1).collect(), n)
}

pub fn random_subset(rng: &mut StdRng, n: usize) -> AttractorSet {
    let density = rng.gen_range(0.05..0.9);
    AttractorSet::from_offsets((0..n).filter(|_| rng.gen_bool(density)).collect(), n)
}

/// Start offsets of every occurrence of `pattern`.
pub fn occurrences(text: &[u32], pattern: &[u32]) -> Vec<usize> {
    if pattern.len() > text.len() {
        return Vec::new();
    }
    (0..=text.len() - pattern.len())
        .filter(|&i| &text[i..i + pattern.len()] == pattern)
        .collect()
}
