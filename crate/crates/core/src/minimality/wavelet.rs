use super::bits::RankSelect;

/// Distinct colors found in a query box, at most two reported.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoxColors {
    None,
    One(u32),
    Two(u32, u32),
}

#[derive(Debug, Clone)]
struct Level {
    /// Bit of the reduced y value that routes each element to a child.
    route: RankSelect,
    colors: Vec<u32>,
    /// Restarts at 0 on every node and flips whenever the color changes.
    flips: RankSelect,
}

/// Wavelet tree over a permutation `y[0..v]` (indexed by reduced x), with a
/// color per point and flip bitvectors for two-color detection.
#[derive(Debug, Clone)]
pub struct WaveletGrid {
    v: usize,
    height: u32,
    /// `height + 1` levels; the last one holds leaves and has no routing.
    levels: Vec<Level>,
}

impl WaveletGrid {
    /// `ys` must be a permutation of `0..ys.len()`; `colors[x]` colors the
    /// point `(x, ys[x])`.
    pub fn new(ys: &[u32], colors: &[u32]) -> Self {
        assert_eq!(ys.len(), colors.len());
        let v = ys.len();
        let height = if v <= 1 { 0 } else { usize::BITS - (v - 1).leading_zeros() };
        let mut order: Vec<usize> = (0..v).collect();
        let mut levels = Vec::with_capacity(height as usize + 1);
        for level in 0..=height {
            let span = 1usize << (height - level);
            let cols: Vec<u32> = order.iter().map(|&x| colors[x]).collect();
            let flips = {
                let mut bit = false;
                let mut bits = Vec::with_capacity(v);
                for (i, &x) in order.iter().enumerate() {
                    let fresh_node = i == 0 || ys[order[i - 1]] as usize / span != ys[x] as usize / span;
                    if fresh_node {
                        bit = false;
                    } else if cols[i] != cols[i - 1] {
                        bit = !bit;
                    }
                    bits.push(bit);
                }
                RankSelect::from_bits(bits)
            };
            let route = if level < height {
                let shift = height - level - 1;
                let route = RankSelect::from_bits(order.iter().map(|&x| ys[x] >> shift & 1 == 1));
                // Stable partition of each node by the routing bit.
                let mut next = Vec::with_capacity(v);
                let mut s = 0;
                while s < v {
                    let node = ys[order[s]] >> (shift + 1);
                    let mut e = s;
                    while e < v && ys[order[e]] >> (shift + 1) == node {
                        e += 1;
                    }
                    next.extend(order[s..e].iter().filter(|&&x| ys[x] >> shift & 1 == 0));
                    next.extend(order[s..e].iter().filter(|&&x| ys[x] >> shift & 1 == 1));
                    s = e;
                }
                order = next;
                route
            } else {
                RankSelect::default()
            };
            levels.push(Level {
                route,
                colors: cols,
                flips,
            });
        }
        Self { v, height, levels }
    }

    pub fn len(&self) -> usize {
        self.v
    }

    pub fn is_empty(&self) -> bool {
        self.v == 0
    }

    /// Up to two distinct colors among points with `x in x_lo..=x_hi` and
    /// `y in y_lo..=y_hi` (reduced coordinates).
    pub fn two_distinct_colors(&self, x_lo: usize, x_hi: usize, y_lo: usize, y_hi: usize) -> BoxColors {
        if self.v == 0 || x_lo > x_hi || y_lo > y_hi || x_lo >= self.v || y_lo >= self.v {
            return BoxColors::None;
        }
        let x_hi = x_hi.min(self.v - 1);
        let y_hi = y_hi.min(self.v - 1);
        let mut found = BoxColors::None;
        self.descend(0, 0, 0, x_lo, x_hi + 1, y_lo, y_hi, &mut found);
        found
    }

    /// Visits the node at `level` whose y range starts at `y0` and whose
    /// elements start at `start`; `[a, b)` is the mapped x interval.
    #[allow(clippy::too_many_arguments)]
    fn descend(
        &self,
        level: u32,
        y0: usize,
        start: usize,
        a: usize,
        b: usize,
        y_lo: usize,
        y_hi: usize,
        found: &mut BoxColors,
    ) {
        if a >= b || matches!(found, BoxColors::Two(..)) {
            return;
        }
        let span = 1usize << (self.height - level);
        let y1 = y0 + span - 1;
        if y1 < y_lo || y0 > y_hi {
            return;
        }
        if y_lo <= y0 && y1 <= y_hi {
            self.report(level as usize, a, b, found);
            return;
        }
        let route = &self.levels[level as usize].route;
        let end = (start + span).min(self.v);
        let (z_start, z_a, z_b, z_end) = (
            route.rank0(start),
            route.rank0(a),
            route.rank0(b),
            route.rank0(end),
        );
        let zeros = z_end - z_start;
        let half = span / 2;
        self.descend(level + 1, y0, start, start + z_a - z_start, start + z_b - z_start, y_lo, y_hi, found);
        let right = start + zeros;
        let (o_start, o_a, o_b) = (start - z_start, a - z_a, b - z_b);
        self.descend(level + 1, y0 + half, right, right + o_a - o_start, right + o_b - o_start, y_lo, y_hi, found);
    }

    /// Folds the colors of `[a, b)` inside one node into `found`.
    fn report(&self, level: usize, a: usize, b: usize, found: &mut BoxColors) {
        let lv = &self.levels[level];
        let ones = lv.flips.rank1(b) - lv.flips.rank1(a);
        let first = lv.colors[a];
        if ones != 0 && ones != b - a {
            // Locate an adjacent pair with different bits, hence colors.
            let i = if lv.flips.get(a) {
                lv.flips.select0(lv.flips.rank0(a))
            } else {
                lv.flips.select1(lv.flips.rank1(a))
            };
            *found = BoxColors::Two(lv.colors[i - 1], lv.colors[i]);
            return;
        }
        *found = match *found {
            BoxColors::None => BoxColors::One(first),
            BoxColors::One(c) if c != first => BoxColors::Two(c, first),
            other => other,
        };
    }
}
