/// Binomial coefficient, saturating at `u64::MAX`.
pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

/// `H(p) = 1 + 1/2 + ... + 1/p`.
pub fn harmonic(p: usize) -> f64 {
    (1..=p).map(|i| 1.0 / i as f64).sum()
}

/// Advances `combo` (strictly increasing indices below `n`) to the next
/// combination in lexicographic order. Returns false after the last one.
pub fn next_combination(combo: &mut [usize], n: usize) -> bool {
    let k = combo.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if combo[i] < n - k + i {
            combo[i] += 1;
            for j in i + 1..k {
                combo[j] = combo[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Calls `visit` on every `size`-subset of `0..n` in lexicographic order until
/// it returns true. Returns whether some call returned true.
pub fn find_combination(n: usize, size: usize, mut visit: impl FnMut(&[usize]) -> bool) -> bool {
    if size > n {
        return false;
    }
    let mut combo: Vec<usize> = (0..size).collect();
    loop {
        if visit(&combo) {
            return true;
        }
        if size == 0 || !next_combination(&mut combo, n) {
            return false;
        }
    }
}
