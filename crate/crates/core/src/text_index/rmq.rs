/// Range-minimum structure answering with the *position* of the leftmost
/// minimum.
///
/// Values are grouped into blocks of [`BLOCK`] entries; a sparse table over
/// block minima answers the aligned middle part of a query and the two ragged
/// ends are scanned. Space is `O(n)` words.
#[derive(Debug, Clone)]
pub struct Rmq {
    values: Vec<u32>,
    /// `table[level][b]`: position of the minimum over blocks `b..b + 2^level`.
    table: Vec<Vec<u32>>,
}

const BLOCK: usize = 32;

impl Rmq {
    pub fn new(values: Vec<u32>) -> Self {
        let blocks = values.len().div_ceil(BLOCK);
        let mut base = Vec::with_capacity(blocks);
        for b in 0..blocks {
            let lo = b * BLOCK;
            let hi = (lo + BLOCK).min(values.len());
            base.push(scan(&values, lo, hi - 1) as u32);
        }
        let mut table = vec![base];
        let mut width = 1;
        while 2 * width <= blocks {
            let prev = table.last().unwrap();
            let next: Vec<u32> = (0..=blocks - 2 * width)
                .map(|b| pick(&values, prev[b], prev[b + width]))
                .collect();
            table.push(next);
            width *= 2;
        }
        Self { values, table }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    /// Position of the leftmost minimum in `values[l..=r]`.
    pub fn argmin(&self, l: usize, r: usize) -> usize {
        debug_assert!(l <= r && r < self.values.len());
        let (bl, br) = (l / BLOCK, r / BLOCK);
        if br <= bl + 1 {
            return scan(&self.values, l, r);
        }
        let mut best = scan(&self.values, l, (bl + 1) * BLOCK - 1) as u32;
        let (lo, hi) = (bl + 1, br - 1);
        let level = (hi - lo + 1).ilog2() as usize;
        let row = &self.table[level];
        best = pick(&self.values, best, row[lo]);
        best = pick(&self.values, best, row[hi + 1 - (1 << level)]);
        best = pick(&self.values, best, scan(&self.values, br * BLOCK, r) as u32);
        best as usize
    }

    pub fn min(&self, l: usize, r: usize) -> u32 {
        self.values[self.argmin(l, r)]
    }
}

fn scan(values: &[u32], l: usize, r: usize) -> usize {
    let mut best = l;
    for i in l + 1..=r {
        if values[i] < values[best] {
            best = i;
        }
    }
    best
}

/// Leftmost of two candidate minima.
fn pick(values: &[u32], a: u32, b: u32) -> u32 {
    let (va, vb) = (values[a as usize], values[b as usize]);
    if vb < va || (vb == va && b < a) {
        b
    } else {
        a
    }
}
