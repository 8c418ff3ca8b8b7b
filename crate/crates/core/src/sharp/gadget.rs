//! Reduction from k-set-cover to the k-sharp-attractor problem.
//!
//! The text is `R · S_1 ⋯ S_m` with `R = #^k $ $ #^(k-1)` and
//! `S_i = Π_j (#^(k-1) $_{i,1}⋯$_{i,j} x_c^(1)⋯x_c^(k) $_{i,j}) · #^(k-1) $_{i,1}⋯$_{i,n_i+1} #^(k-1)`
//! where `c` runs over the elements of set `i`.

use std::fmt::Write as _;

use crate::attractor::AttractorSet;
use crate::error::{Error, Result};
use crate::text_index::RemappedText;

/// A universe `1..=universe` and sets over it, each of size at most `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetCoverInstance {
    pub universe: usize,
    pub k: usize,
    /// Elements of each set, sorted ascending.
    pub sets: Vec<Vec<usize>>,
}

impl SetCoverInstance {
    pub fn new(universe: usize, k: usize, mut sets: Vec<Vec<usize>>) -> Result<Self> {
        for s in &mut sets {
            s.sort_unstable();
        }
        let inst = Self { universe, k, sets };
        inst.validate()?;
        Ok(inst)
    }

    /// Parses `"n_u m k"` followed by `m` lines of elements.
    pub fn parse(contents: &str) -> Result<Self> {
        let mut lines = contents
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'));
        let numbers = |(i, line): (usize, &str)| -> Result<Vec<usize>> {
            line.split_whitespace()
                .map(|w| {
                    w.parse().map_err(|_| Error::Parse {
                        line: i + 1,
                        message: format!("expected a non-negative integer, found {w:?}"),
                    })
                })
                .collect()
        };
        let header = lines.next().ok_or(Error::Parse {
            line: 1,
            message: "missing header \"n_u m k\"".into(),
        })?;
        let header_line = header.0 + 1;
        let head = numbers(header)?;
        let [universe, m, k] = head[..] else {
            return Err(Error::Parse {
                line: header_line,
                message: "header must be \"n_u m k\"".into(),
            });
        };
        let sets = lines.map(numbers).collect::<Result<Vec<_>>>()?;
        if sets.len() != m {
            return Err(Error::InvalidInstance(format!(
                "header announces {m} sets, found {}",
                sets.len()
            )));
        }
        Self::new(universe, k, sets)
    }

    pub fn validate(&self) -> Result<()> {
        let mut covered = vec![false; self.universe + 1];
        for (i, s) in self.sets.iter().enumerate() {
            let name = i + 1;
            if s.is_empty() {
                return Err(Error::InvalidInstance(format!("set {name} is empty")));
            }
            if s.len() > self.k {
                return Err(Error::InvalidInstance(format!(
                    "set {name} has {} elements, more than k = {}",
                    s.len(),
                    self.k
                )));
            }
            for (a, &u) in s.iter().enumerate() {
                if u == 0 || u > self.universe {
                    return Err(Error::InvalidInstance(format!(
                        "set {name} has element {u} outside 1..={}",
                        self.universe
                    )));
                }
                if a > 0 && s[a - 1] == u {
                    return Err(Error::InvalidInstance(format!("set {name} repeats element {u}")));
                }
                covered[u] = true;
            }
        }
        if let Some(u) = (1..=self.universe).find(|&u| !covered[u]) {
            return Err(Error::InvalidInstance(format!("element {u} is in no set")));
        }
        Ok(())
    }

    /// Whether the chosen 0-based set indices cover the universe.
    pub fn is_cover(&self, chosen: &[usize]) -> bool {
        let mut covered = vec![false; self.universe + 1];
        for &i in chosen {
            for &u in &self.sets[i] {
                covered[u] = true;
            }
        }
        covered[1..].iter().all(|&c| c)
    }

    /// `t`, the sum of set sizes.
    pub fn total_size(&self) -> usize {
        self.sets.iter().map(Vec::len).sum()
    }
}

/// 0-based offsets of the landmarks of one `S_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetLayout {
    pub start: usize,
    pub end: usize,
    /// First occurrence of `$_{i,j}`, for `j = 1..=n_i + 1`.
    pub first_dollar: Vec<usize>,
    /// Second occurrence of `$_{i,j}` (right after the x block), `j = 1..=n_i`.
    pub second_dollar: Vec<usize>,
    /// `x^(1)` of each element block, `j = 1..=n_i`.
    pub x_start: Vec<usize>,
    /// Last occurrence of `$_{i,1}`, in the closing part.
    pub last_dollar_one: usize,
}

#[derive(Debug, Clone)]
pub struct Gadget {
    pub k: usize,
    /// Raw integer symbols; see [`Gadget::legend`].
    pub symbols: Vec<u64>,
    /// `legend[c - 1]` names symbol `c`.
    pub legend: Vec<String>,
    /// Sum of set sizes.
    pub t: usize,
    pub m: usize,
    pub layout: Vec<SetLayout>,
}

impl Gadget {
    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn text(&self) -> RemappedText {
        RemappedText::from_symbols(&self.symbols).expect("gadget text is non-empty")
    }

    /// Legend file body: `code name` per line.
    pub fn legend_file(&self) -> String {
        let mut out = String::new();
        for (c, name) in self.legend.iter().enumerate() {
            let _ = writeln!(out, "{} {}", c + 1, name);
        }
        out
    }

    /// Size of every attractor the builder produces for `chosen` sets.
    pub fn expected_size(&self, chosen: usize) -> usize {
        2 * self.t + self.m + chosen + 2
    }
}

pub fn gen_sharp_gadget(instance: &SetCoverInstance, k: usize) -> Result<Gadget> {
    if k < 3 {
        return Err(Error::Parameter(format!("gadget needs k >= 3, got {k}")));
    }
    let inst = SetCoverInstance {
        k,
        ..instance.clone()
    };
    inst.validate()?;

    const HASH: u64 = 1;
    const DOLLAR: u64 = 2;
    let mut legend = vec!["#".to_string(), "$".to_string()];
    for u in 1..=inst.universe {
        for j in 1..=k {
            legend.push(format!("x_{u}^({j})"));
        }
    }
    let x = |u: usize, j: usize| (3 + (u - 1) * k + (j - 1)) as u64;
    let mut dollar_base = Vec::with_capacity(inst.sets.len());
    for (i, s) in inst.sets.iter().enumerate() {
        dollar_base.push(legend.len() as u64 + 1);
        for j in 1..=s.len() + 1 {
            legend.push(format!("$_{},{}", i + 1, j));
        }
    }
    let sep = |i: usize, j: usize| dollar_base[i] + (j - 1) as u64;

    let mut text = Vec::new();
    text.extend(std::iter::repeat_n(HASH, k));
    text.extend([DOLLAR, DOLLAR]);
    text.extend(std::iter::repeat_n(HASH, k - 1));
    let mut layout = Vec::with_capacity(inst.sets.len());
    for (i, s) in inst.sets.iter().enumerate() {
        let start = text.len();
        let mut first_dollar = Vec::new();
        let mut second_dollar = Vec::new();
        let mut x_start = Vec::new();
        for (j0, &u) in s.iter().enumerate() {
            let j = j0 + 1;
            text.extend(std::iter::repeat_n(HASH, k - 1));
            text.extend((1..=j).map(|a| sep(i, a)));
            first_dollar.push(text.len() - 1);
            x_start.push(text.len());
            text.extend((1..=k).map(|b| x(u, b)));
            second_dollar.push(text.len());
            text.push(sep(i, j));
        }
        text.extend(std::iter::repeat_n(HASH, k - 1));
        let last_dollar_one = text.len();
        text.extend((1..=s.len() + 1).map(|a| sep(i, a)));
        first_dollar.push(text.len() - 1);
        text.extend(std::iter::repeat_n(HASH, k - 1));
        layout.push(SetLayout {
            start,
            end: text.len(),
            first_dollar,
            second_dollar,
            x_start,
            last_dollar_one,
        });
    }
    Ok(Gadget {
        k,
        symbols: text,
        legend,
        t: inst.total_size(),
        m: inst.sets.len(),
        layout,
    })
}

/// `{k, k+2}` (1-based) inside `R`, plus per set the universal positions if
/// it is chosen (0-based index) and the minimum positions otherwise.
pub fn build_gadget_attractor(gadget: &Gadget, chosen: &[usize]) -> Result<AttractorSet> {
    let mut picked = vec![false; gadget.m];
    for &i in chosen {
        if i >= gadget.m {
            return Err(Error::Parameter(format!(
                "set index {} out of range 1..={}",
                i + 1,
                gadget.m
            )));
        }
        picked[i] = true;
    }
    let k = gadget.k;
    let mut offsets = vec![k - 1, k + 1];
    for (lay, &universal) in gadget.layout.iter().zip(&picked) {
        offsets.extend(&lay.second_dollar);
        if universal {
            offsets.extend(&lay.x_start);
            offsets.push(*lay.first_dollar.last().unwrap());
            offsets.push(lay.last_dollar_one);
        } else {
            offsets.extend(&lay.first_dollar);
        }
    }
    Ok(AttractorSet::from_offsets(offsets, gadget.len()))
}
