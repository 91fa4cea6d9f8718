//! Suffix array, rank array and lcp array.
//!
//! All three arrays hold 1-based values. `sa[k]` is the text position of
//! the `(k+1)`-th smallest suffix and `rank[p-1]` the rank of the suffix
//! starting at position `p`. The lcp vector has `n + 1` entries:
//! `lcp[0] = lcp[n] = 0` are sentinels and `lcp[k]` for `1 <= k < n` is the
//! common prefix length of the suffixes `sa[k-1]` and `sa[k]`.

use crate::text::Text;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuffixStructures {
    sa: Vec<u32>,
    rank: Vec<u32>,
    lcp: Vec<u32>,
}

impl SuffixStructures {
    pub fn build(text: &Text) -> Self {
        let sa = build_suffix_array(text);
        let rank = build_rank_array(&sa);
        let lcp = build_lcp_array(text, &sa, &rank);
        SuffixStructures { sa, rank, lcp }
    }

    pub fn len(&self) -> usize {
        self.sa.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sa.is_empty()
    }

    pub fn sa(&self) -> &[u32] {
        &self.sa
    }

    pub fn rank(&self) -> &[u32] {
        &self.rank
    }

    pub fn lcp(&self) -> &[u32] {
        &self.lcp
    }

    /// Length of the longest repeat starting at position `p`: the larger of
    /// the two lcp values adjacent to the suffix's rank. Zero means `S[p]`
    /// is a singleton.
    #[inline]
    pub fn llr_len(&self, p: usize) -> usize {
        let r = self.rank[p - 1] as usize;
        self.lcp[r - 1].max(self.lcp[r]) as usize
    }

    pub fn heap_bytes(&self) -> usize {
        4 * (self.sa.capacity() + self.rank.capacity() + self.lcp.capacity())
    }
}

pub fn build_suffix_array(text: &Text) -> Vec<u32> {
    let mut sa = sa_is(text.as_bytes(), 255);
    for v in sa.iter_mut() {
        *v += 1;
    }
    sa
}

/// Inverse permutation of a 1-based suffix array.
pub fn build_rank_array(sa: &[u32]) -> Vec<u32> {
    let mut rank = vec![0u32; sa.len()];
    for (k, &p) in sa.iter().enumerate() {
        rank[p as usize - 1] = k as u32 + 1;
    }
    rank
}

/// Kasai et al. linear-time construction from the text, suffix array and
/// rank array.
pub fn build_lcp_array(text: &Text, sa: &[u32], rank: &[u32]) -> Vec<u32> {
    let s = text.as_bytes();
    let n = s.len();
    let mut lcp = vec![0u32; n + 1];
    let mut h = 0usize;
    for i in 0..n {
        let r = rank[i] as usize - 1;
        if r == 0 {
            h = 0;
            continue;
        }
        let j = sa[r - 1] as usize - 1;
        while i + h < n && j + h < n && s[i + h] == s[j + h] {
            h += 1;
        }
        lcp[r] = h as u32;
        h = h.saturating_sub(1);
    }
    lcp
}

trait Symbol: Copy + Eq {
    fn idx(self) -> usize;
}

impl Symbol for u8 {
    #[inline]
    fn idx(self) -> usize {
        self as usize
    }
}

impl Symbol for u32 {
    #[inline]
    fn idx(self) -> usize {
        self as usize
    }
}

const EMPTY: u32 = u32::MAX;

/// Induced-sorting suffix array construction (Nong, Zhang and Chan).
/// Returns 0-based positions. Every symbol must be `<= upper`.
fn sa_is<T: Symbol>(s: &[T], upper: usize) -> Vec<u32> {
    let n = s.len();
    match n {
        0 => return vec![],
        1 => return vec![0],
        2 => {
            return if s[0].idx() < s[1].idx() {
                vec![0, 1]
            } else {
                vec![1, 0]
            }
        }
        _ => {}
    }

    // ls[i]: suffix i is S-type.
    let mut ls = vec![false; n];
    for i in (0..n - 1).rev() {
        ls[i] = if s[i] == s[i + 1] {
            ls[i + 1]
        } else {
            s[i].idx() < s[i + 1].idx()
        };
    }

    // sum_l[c]: start of bucket c. sum_s[c]: start of the S-part of bucket c.
    let mut sum_l = vec![0u32; upper + 2];
    let mut sum_s = vec![0u32; upper + 2];
    for i in 0..n {
        if ls[i] {
            sum_l[s[i].idx() + 1] += 1;
        } else {
            sum_s[s[i].idx()] += 1;
        }
    }
    for c in 0..=upper {
        sum_s[c] += sum_l[c];
        if c < upper {
            sum_l[c + 1] += sum_s[c];
        }
    }

    let mut sa = vec![EMPTY; n];
    let induce = |sa: &mut [u32], lms: &[u32]| {
        sa.fill(EMPTY);
        let mut buf = sum_s.clone();
        for &d in lms {
            let d = d as usize;
            if d == n {
                continue;
            }
            let c = s[d].idx();
            sa[buf[c] as usize] = d as u32;
            buf[c] += 1;
        }
        buf.copy_from_slice(&sum_l);
        let c = s[n - 1].idx();
        sa[buf[c] as usize] = (n - 1) as u32;
        buf[c] += 1;
        for i in 0..n {
            let v = sa[i];
            if v != EMPTY && v >= 1 && !ls[v as usize - 1] {
                let c = s[v as usize - 1].idx();
                sa[buf[c] as usize] = v - 1;
                buf[c] += 1;
            }
        }
        buf.copy_from_slice(&sum_l);
        for i in (0..n).rev() {
            let v = sa[i];
            if v != EMPTY && v >= 1 && ls[v as usize - 1] {
                let c = s[v as usize - 1].idx() + 1;
                buf[c] -= 1;
                sa[buf[c] as usize] = v - 1;
            }
        }
    };

    let mut lms_map = vec![EMPTY; n + 1];
    let mut lms = Vec::new();
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
            .filter(|&v| v != EMPTY && lms_map[v as usize] != EMPTY)
            .collect();
        let mut rec_s = vec![0u32; m];
        let mut rec_upper = 0u32;
        rec_s[lms_map[sorted_lms[0] as usize] as usize] = 0;
        for i in 1..m {
            let mut l = sorted_lms[i - 1] as usize;
            let mut r = sorted_lms[i] as usize;
            let next = |p: usize| {
                let k = lms_map[p] as usize + 1;
                if k < m {
                    lms[k] as usize
                } else {
                    n
                }
            };
            let end_l = next(l);
            let end_r = next(r);
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
        drop(lms_map);

        let rec_sa = sa_is(&rec_s, rec_upper as usize);
        for (dst, &k) in sorted_lms.iter_mut().zip(rec_sa.iter()) {
            *dst = lms[k as usize];
        }
        induce(&mut sa, &sorted_lms);
    }
    sa
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn text(s: &[u8]) -> Text {
        Text::new(s.to_vec(), "t").unwrap()
    }

    fn naive_sa(s: &[u8]) -> Vec<u32> {
        let mut sa: Vec<u32> = (1..=s.len() as u32).collect();
        sa.sort_by_key(|&p| &s[p as usize - 1..]);
        sa
    }

    fn naive_lcp(s: &[u8], sa: &[u32]) -> Vec<u32> {
        let mut lcp = vec![0u32; s.len() + 1];
        for k in 1..s.len() {
            let a = &s[sa[k - 1] as usize - 1..];
            let b = &s[sa[k] as usize - 1..];
            lcp[k] = a.iter().zip(b).take_while(|(x, y)| x == y).count() as u32;
        }
        lcp
    }

    #[test]
    fn mississippi_table() {
        let ss = SuffixStructures::build(&text(b"mississippi"));
        assert_eq!(ss.sa(), &[11, 8, 5, 2, 1, 10, 9, 7, 4, 6, 3]);
        assert_eq!(ss.rank(), &[5, 4, 11, 9, 3, 10, 8, 2, 7, 6, 1]);
        assert_eq!(ss.lcp(), &[0, 1, 1, 4, 0, 0, 1, 0, 2, 1, 3, 0]);
    }

    #[test]
    fn small_cases() {
        let ss = SuffixStructures::build(&text(b"a"));
        assert_eq!(ss.sa(), &[1]);
        assert_eq!(ss.rank(), &[1]);
        assert_eq!(ss.lcp(), &[0, 0]);

        let t = text(b"banana");
        assert_eq!(naive_sa(b"banana"), vec![6, 4, 2, 1, 5, 3]);
        let ss = SuffixStructures::build(&t);
        assert_eq!(ss.sa(), &[6, 4, 2, 1, 5, 3]);
        assert_eq!(ss.lcp(), &[0, 1, 3, 0, 0, 2, 0]);

        assert_eq!(build_rank_array(&[2, 1]), vec![2, 1]);
    }

    #[test]
    fn degenerate_texts_match_naive() {
        for s in [
            b"aaaaaaaaaaaaaaaaaaaa".to_vec(),
            b"abababababababababa".to_vec(),
            b"zyxwvutsrqponm".to_vec(),
            (0..=255u8).collect::<Vec<_>>(),
            (0..=255u8).rev().chain(0..=255u8).collect::<Vec<_>>(),
        ] {
            let ss = SuffixStructures::build(&text(&s));
            let sa = naive_sa(&s);
            assert_eq!(ss.sa(), &sa[..]);
            assert_eq!(ss.lcp(), &naive_lcp(&s, &sa)[..]);
        }
    }

    fn alphabet_string(sigma: u8, max: usize) -> impl Strategy<Value = Vec<u8>> {
        proptest::collection::vec(0..sigma, 1..=max)
            .prop_map(|v| v.into_iter().map(|c| b'a' + c).collect())
    }

    proptest! {
        #[test]
        fn matches_naive_binary(s in alphabet_string(2, 64)) {
            let ss = SuffixStructures::build(&text(&s));
            let sa = naive_sa(&s);
            prop_assert_eq!(ss.sa(), &sa[..]);
            prop_assert_eq!(ss.lcp(), &naive_lcp(&s, &sa)[..]);
        }

        #[test]
        fn matches_naive_dna(s in alphabet_string(4, 64)) {
            let ss = SuffixStructures::build(&text(&s));
            let sa = naive_sa(&s);
            prop_assert_eq!(ss.sa(), &sa[..]);
            prop_assert_eq!(ss.lcp(), &naive_lcp(&s, &sa)[..]);
        }

        #[test]
        fn rank_inverts_sa(s in proptest::collection::vec(any::<u8>(), 1..128)) {
            let ss = SuffixStructures::build(&text(&s));
            let n = s.len();
            for k in 0..n {
                prop_assert_eq!(ss.rank()[ss.sa()[k] as usize - 1] as usize, k + 1);
                prop_assert_eq!(ss.sa()[ss.rank()[k] as usize - 1] as usize, k + 1);
            }
            prop_assert_eq!(ss.lcp()[0], 0);
            prop_assert_eq!(ss.lcp()[n], 0);
            for k in 1..n {
                let far = ss.sa()[k - 1].max(ss.sa()[k]) as usize;
                prop_assert!(ss.lcp()[k] as usize <= n - far + 1);
            }
        }
    }
}
