//! Suffix array construction. Byte-range alphabets go through libdivsufsort's
//! port, larger ones through induced sorting (SA-IS).
//!
//! Suffixes are ordered without an appended terminator: a suffix that is a
//! proper prefix of another sorts first.

const NAIVE_THRESHOLD: usize = 10;
/// divsufsort zeroes 256 KiB of buckets per call; not worth it on short texts.
const DIVSUFSORT_THRESHOLD: usize = 1 << 14;

fn sa_naive(s: &[u32]) -> Vec<usize> {
    let mut sa: Vec<usize> = (0..s.len()).collect();
    sa.sort_by(|&a, &b| s[a..].cmp(&s[b..]));
    sa
}

/// Builds the suffix array of `s`, whose symbols lie in `[0..=upper]`.
pub fn suffix_array(s: &[u32], upper: u32) -> Vec<u32> {
    assert!(s.len() < u32::MAX as usize, "text too long for 32-bit suffix arrays");
    if upper <= u8::MAX as u32 && (DIVSUFSORT_THRESHOLD..i32::MAX as usize).contains(&s.len()) {
        let bytes: Vec<u8> = s.iter().map(|&c| c as u8).collect();
        let mut sa = vec![0i32; s.len()];
        divsufsort::sort_in_place(&bytes, &mut sa);
        return sa.into_iter().map(|p| p as u32).collect();
    }
    sa_is(s, upper)
}

pub fn inverse(sa: &[u32]) -> Vec<u32> {
    let mut isa = vec![0u32; sa.len()];
    for (rank, &p) in sa.iter().enumerate() {
        isa[p as usize] = rank as u32;
    }
    isa
}

/// SA-IS on 32-bit indices, which halves the memory traffic.
fn sa_is(s: &[u32], upper: u32) -> Vec<u32> {
    let n = s.len();
    match n {
        0 => return Vec::new(),
        1 => return vec![0],
        2 => return if s[0] < s[1] { vec![0, 1] } else { vec![1, 0] },
        _ if n < NAIVE_THRESHOLD => return sa_naive(s).into_iter().map(|v| v as u32).collect(),
        _ => {}
    }
    assert!(upper < 1 << 31, "alphabet too large");
    let upper = upper as usize;
    const NONE: u32 = u32::MAX;

    // ls[i]: suffix i is S-type.
    let mut ls = vec![false; n];
    for i in (0..n - 1).rev() {
        ls[i] = if s[i] == s[i + 1] { ls[i + 1] } else { s[i] < s[i + 1] };
    }
    let mut sum_l = vec![0u32; upper + 2];
    let mut sum_s = vec![0u32; upper + 2];
    for i in 0..n {
        if !ls[i] {
            sum_s[s[i] as usize] += 1;
        } else {
            sum_l[s[i] as usize + 1] += 1;
        }
    }
    for i in 0..=upper {
        sum_s[i] += sum_l[i];
        if i < upper {
            sum_l[i + 1] += sum_s[i];
        }
    }

    // Symbol and type packed together so each induction step touches one
    // word of the text: (s[i] << 1) | is_s_type.
    let packed: Vec<u32> = s.iter().zip(&ls).map(|(&c, &t)| c << 1 | t as u32).collect();
    let mut sa = vec![NONE; n];
    let induce = |sa: &mut Vec<u32>, lms: &[u32]| {
        sa.fill(NONE);
        let mut buf = sum_s.clone();
        for &d in lms {
            let c = s[d as usize] as usize;
            sa[buf[c] as usize] = d;
            buf[c] += 1;
        }
        buf.copy_from_slice(&sum_l);
        let c = s[n - 1] as usize;
        sa[buf[c] as usize] = (n - 1) as u32;
        buf[c] += 1;
        for i in 0..n {
            let v = sa[i];
            if v != NONE && v >= 1 {
                let w = packed[v as usize - 1];
                if w & 1 == 0 {
                    let c = (w >> 1) as usize;
                    sa[buf[c] as usize] = v - 1;
                    buf[c] += 1;
                }
            }
        }
        buf.copy_from_slice(&sum_l);
        for i in (0..n).rev() {
            let v = sa[i];
            if v != NONE && v >= 1 {
                let w = packed[v as usize - 1];
                if w & 1 == 1 {
                    let c = (w >> 1) as usize + 1;
                    buf[c] -= 1;
                    sa[buf[c] as usize] = v - 1;
                }
            }
        }
    };

    let mut lms_map = vec![NONE; n + 1];
    let mut lms: Vec<u32> = Vec::new();
    for i in 1..n {
        if !ls[i - 1] && ls[i] {
            lms_map[i] = lms.len() as u32;
            lms.push(i as u32);
        }
    }
    let m = lms.len();

    induce(&mut sa, &lms);

    if m > 0 {
        let mut sorted_lms: Vec<u32> = sa
            .iter()
            .copied()
            .filter(|&v| v != NONE && lms_map[v as usize] != NONE)
            .collect();
        let mut rec_s = vec![0u32; m];
        let mut rec_upper = 0u32;
        let end_of = |p: usize| {
            let next = lms_map[p] as usize + 1;
            if next < m { lms[next] as usize } else { n }
        };
        for i in 1..m {
            let (mut l, mut r) = (sorted_lms[i - 1] as usize, sorted_lms[i] as usize);
            let (end_l, end_r) = (end_of(l), end_of(r));
            let mut same = true;
            if end_l - l != end_r - r {
                same = false;
            } else {
                while l < end_l {
                    if s[l] != s[r] {
                        break;
                    }
                    l += 1;
                    r += 1;
                }
                if l == n || s[l] != s[r] {
                    same = false;
                }
            }
            if !same {
                rec_upper += 1;
            }
            rec_s[lms_map[sorted_lms[i] as usize] as usize] = rec_upper;
        }
        let rec_sa = sa_is(&rec_s, rec_upper);
        for i in 0..m {
            sorted_lms[i] = lms[rec_sa[i] as usize];
        }
        induce(&mut sa, &sorted_lms);
    }
    sa
}

/// Kasai's algorithm: `lcp[r]` is the longest common prefix of the suffixes
/// at ranks `r - 1` and `r`; `lcp[0] = 0`.
pub fn lcp_array(s: &[u32], sa: &[u32], isa: &[u32]) -> Vec<u32> {
    let n = s.len();
    let mut lcp = vec![0u32; n];
    let mut h = 0usize;
    for i in 0..n {
        let r = isa[i] as usize;
        if r == 0 {
            h = 0;
            continue;
        }
        let j = sa[r - 1] as usize;
        while i + h < n && j + h < n && s[i + h] == s[j + h] {
            h += 1;
        }
        lcp[r] = h as u32;
        h = h.saturating_sub(1);
    }
    lcp
}
