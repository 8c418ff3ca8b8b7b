/// Plain bitvector with rank and select support.
#[derive(Debug, Clone, Default)]
pub struct RankSelect {
    words: Vec<u64>,
    /// Ones strictly before each word; one extra entry holds the total.
    ranks: Vec<u32>,
    len: usize,
}

impl RankSelect {
    pub fn from_bits(bits: impl IntoIterator<Item = bool>) -> Self {
        let mut words = Vec::new();
        let mut len = 0;
        for bit in bits {
            if len % 64 == 0 {
                words.push(0u64);
            }
            if bit {
                *words.last_mut().unwrap() |= 1 << (len % 64);
            }
            len += 1;
        }
        words.push(0);
        let mut ranks = Vec::with_capacity(words.len() + 1);
        let mut acc = 0u32;
        for w in &words {
            ranks.push(acc);
            acc += w.count_ones();
        }
        ranks.push(acc);
        Self { words, ranks, len }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    /// Ones in `[0, i)`.
    pub fn rank1(&self, i: usize) -> usize {
        let (w, b) = (i / 64, i % 64);
        let below = if b == 0 { 0 } else { self.words[w] & (u64::MAX >> (64 - b)) };
        self.ranks[w] as usize + below.count_ones() as usize
    }

    pub fn rank0(&self, i: usize) -> usize {
        i - self.rank1(i)
    }

    /// Index of the `j`-th one (0-based).
    pub fn select1(&self, j: usize) -> usize {
        let w = self.ranks.partition_point(|&r| r as usize <= j) - 1;
        let mut word = self.words[w];
        for _ in 0..j - self.ranks[w] as usize {
            word &= word - 1;
        }
        w * 64 + word.trailing_zeros() as usize
    }

    /// Index of the `j`-th zero (0-based).
    pub fn select0(&self, j: usize) -> usize {
        let zeros_before = |w: usize| w * 64 - self.ranks[w] as usize;
        let (mut lo, mut hi) = (0, self.words.len());
        while hi - lo > 1 {
            let mid = (lo + hi) / 2;
            if zeros_before(mid) <= j {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let mut word = !self.words[lo];
        for _ in 0..j - zeros_before(lo) {
            word &= word - 1;
        }
        lo * 64 + word.trailing_zeros() as usize
    }
}
