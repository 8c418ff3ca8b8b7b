//! Minimality checking with a colored grid.
//!
//! Each suffix contributes up to two points: the distances to its first and
//! second attractor successors, colored by those members. A member is
//! necessary iff some edge's box `[l_e, r_e] x [0, λ(e) - 1]` holds a single
//! color, namely its own.

mod bits;
mod wavelet;

pub use bits::RankSelect;
pub use wavelet::{BoxColors, WaveletGrid};

use crate::attractor::AttractorSet;
use crate::error::{Error, Result};
use crate::text_index::{SuffixIndex, Universe};
use crate::verify::{is_k_attractor_in, Verdict, Witness};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GridPoint {
    /// Suffix array rank.
    pub x: usize,
    /// Distance from the suffix start to the member, at most `k`.
    pub y: usize,
    /// Index of the member within `Γ`.
    pub color: u32,
}

/// Points in `(x, y)` order plus the rank-reduced wavelet view.
#[derive(Debug, Clone)]
pub struct ColoredGrid {
    k: usize,
    colors: usize,
    points: Vec<GridPoint>,
    /// First reduced x whose original rank is `>= r`, for `r in 0..=n`.
    x_start: Vec<u32>,
    /// First reduced y whose original distance is `>= d`, for `d in 0..=k+1`.
    y_start: Vec<u32>,
    wavelet: WaveletGrid,
}

impl ColoredGrid {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn color_count(&self) -> usize {
        self.colors
    }

    pub fn points(&self) -> &[GridPoint] {
        &self.points
    }

    pub fn wavelet(&self) -> &WaveletGrid {
        &self.wavelet
    }

    /// Colors among points with rank in `l..=r` and distance below `lambda`.
    pub fn edge_colors(&self, l: usize, r: usize, lambda: usize) -> BoxColors {
        let x_lo = self.x_start[l] as usize;
        let x_hi = self.x_start[r + 1] as usize;
        let y_hi = self.y_start[lambda.min(self.k + 1)] as usize;
        if x_lo >= x_hi || y_hi == 0 {
            return BoxColors::None;
        }
        self.wavelet.two_distinct_colors(x_lo, x_hi - 1, 0, y_hi - 1)
    }
}

pub fn build_grid(index: &SuffixIndex, gamma: &AttractorSet, k: usize) -> Result<ColoredGrid> {
    index.check_k(k)?;
    crate::verify::check_gamma(index, gamma)?;
    if gamma.is_empty() {
        return Err(Error::EmptyAttractor);
    }
    let n = index.len();
    let next = gamma.successors();
    let color = |offset: usize| gamma.rank_of(offset).expect("successor is a member") as u32;
    let mut points = Vec::with_capacity(2 * n);
    let mut x_start = Vec::with_capacity(n + 1);
    for (rank, &p) in index.sa().iter().enumerate() {
        x_start.push(points.len() as u32);
        let p = p as usize;
        let Some(first) = next[p] else { continue };
        if first - p > k {
            continue;
        }
        points.push(GridPoint { x: rank, y: first - p, color: color(first) });
        if let Some(second) = next[first + 1] {
            if second - p <= k {
                points.push(GridPoint { x: rank, y: second - p, color: color(second) });
            }
        }
    }
    x_start.push(points.len() as u32);

    // Counting sort by distance; equal distances keep x order.
    let mut y_start = vec![0u32; k + 2];
    for pt in &points {
        y_start[pt.y + 1] += 1;
    }
    for d in 1..k + 2 {
        y_start[d] += y_start[d - 1];
    }
    let mut cursor = y_start.clone();
    let mut ys = vec![0u32; points.len()];
    for (i, pt) in points.iter().enumerate() {
        ys[i] = cursor[pt.y];
        cursor[pt.y] += 1;
    }
    let colors: Vec<u32> = points.iter().map(|p| p.color).collect();
    let wavelet = WaveletGrid::new(&ys, &colors);
    Ok(ColoredGrid {
        k,
        colors: gamma.len(),
        points,
        x_start,
        y_start,
        wavelet,
    })
}

/// Per member of `Γ` (in offset order), whether it is the only member
/// marking some edge of the universe.
pub fn necessity_flags(index: &SuffixIndex, universe: &Universe, gamma: &AttractorSet) -> Result<Vec<bool>> {
    let grid = build_grid(index, gamma, universe.k())?;
    let mut flags = vec![false; gamma.len()];
    for e in universe.edges() {
        if let BoxColors::One(c) = grid.edge_colors(e.l, e.r, e.lambda) {
            flags[c as usize] = true;
        }
    }
    Ok(flags)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MinimalityVerdict {
    Minimal,
    /// Every member that is not necessary. Removing any one of them keeps
    /// `Γ` valid, but removing several at once may not.
    NotMinimal { removable: AttractorSet },
    NotAttractor(Witness),
}

impl MinimalityVerdict {
    pub fn is_minimal(&self) -> bool {
        matches!(self, MinimalityVerdict::Minimal)
    }
}

pub fn is_minimal_k_attractor(index: &SuffixIndex, gamma: &AttractorSet, k: usize) -> Result<MinimalityVerdict> {
    let universe = index.universe(k)?;
    is_minimal_k_attractor_in(index, &universe, gamma)
}

pub fn is_minimal_k_attractor_in(
    index: &SuffixIndex,
    universe: &Universe,
    gamma: &AttractorSet,
) -> Result<MinimalityVerdict> {
    if let Verdict::Invalid(w) = is_k_attractor_in(index, universe, gamma)? {
        return Ok(MinimalityVerdict::NotAttractor(w));
    }
    let flags = necessity_flags(index, universe, gamma)?;
    let removable: Vec<usize> = gamma
        .offsets()
        .iter()
        .zip(&flags)
        .filter(|(_, &f)| !f)
        .map(|(&o, _)| o)
        .collect();
    Ok(if removable.is_empty() {
        MinimalityVerdict::Minimal
    } else {
        MinimalityVerdict::NotMinimal {
            removable: AttractorSet::from_offsets(removable, gamma.text_len()),
        }
    })
}
