//! Longest-common-extension queries via a suffix array, LCP array and a
//! sparse table for range minima.

pub(crate) struct Lce {
    rank: Vec<u32>,
    /// `table[k][x]` = min of `lcp[x .. x + 2^k]`, where `lcp[x]` is the LCP of
    /// the suffixes ranked `x - 1` and `x`.
    table: Vec<Vec<u32>>,
    len: usize,
}

impl Lce {
    pub(crate) fn new(s: &[u32]) -> Self {
        let n = s.len();
        assert!(n < u32::MAX as usize, "text too long for 32-bit ranks");
        let sa = suffix_array(s);
        let mut rank = vec![0u32; n];
        for (r, &i) in sa.iter().enumerate() {
            rank[i as usize] = r as u32;
        }
        // Kasai
        let mut lcp = vec![0u32; n];
        let mut h = 0usize;
        for i in 0..n {
            let r = rank[i] as usize;
            if r > 0 {
                let j = sa[r - 1] as usize;
                while i + h < n && j + h < n && s[i + h] == s[j + h] {
                    h += 1;
                }
                lcp[r] = h as u32;
                h = h.saturating_sub(1);
            } else {
                h = 0;
            }
        }
        let mut table = vec![lcp];
        let mut width = 1;
        while 2 * width <= n {
            let prev = table.last().expect("nonempty");
            let next: Vec<u32> = (0..=n - 2 * width)
                .map(|x| prev[x].min(prev[x + width]))
                .collect();
            table.push(next);
            width *= 2;
        }
        Lce {
            rank,
            table,
            len: n,
        }
    }

    /// Length of the longest common prefix of the suffixes at `i` and `j`.
    pub(crate) fn query(&self, i: usize, j: usize) -> usize {
        if i == j {
            return self.len - i;
        }
        let (ri, rj) = (self.rank[i] as usize, self.rank[j] as usize);
        let (lo, hi) = (ri.min(rj) + 1, ri.max(rj) + 1);
        let k = (usize::BITS - 1 - (hi - lo).leading_zeros()) as usize;
        self.table[k][lo].min(self.table[k][hi - (1 << k)]) as usize
    }
}

/// Prefix doubling with counting sorts, `O(n log n)`.
fn suffix_array(s: &[u32]) -> Vec<u32> {
    let n = s.len();
    if n == 0 {
        return Vec::new();
    }
    // initial classes: letters compressed to 0..c
    let mut letters: Vec<u32> = s.to_vec();
    letters.sort_unstable();
    letters.dedup();
    let mut rank: Vec<u32> = s
        .iter()
        .map(|c| letters.binary_search(c).expect("letter present") as u32)
        .collect();
    let mut classes = letters.len();
    let mut sa: Vec<u32> = (0..n as u32).collect();
    sa.sort_unstable_by_key(|&i| rank[i as usize]);
    let mut second = vec![0u32; n];
    let mut count = vec![0u32; n.max(classes) + 1];
    let mut tmp = vec![0u32; n];
    let mut k = 1;
    while classes < n {
        // order by the second key: suffixes without a partner at +k first
        let mut x = 0;
        for i in n - k.min(n)..n {
            second[x] = i as u32;
            x += 1;
        }
        for &i in &sa {
            if i as usize >= k {
                second[x] = i - k as u32;
                x += 1;
            }
        }
        // stable counting sort by the first key
        count[..=classes].iter_mut().for_each(|c| *c = 0);
        for &r in &rank {
            count[r as usize + 1] += 1;
        }
        for c in 1..=classes {
            count[c] += count[c - 1];
        }
        for &i in &second {
            let r = rank[i as usize] as usize;
            sa[count[r] as usize] = i;
            count[r] += 1;
        }
        let key = |i: usize| (rank[i], if i + k < n { rank[i + k] as i64 } else { -1 });
        tmp[sa[0] as usize] = 0;
        let mut c = 0;
        for x in 1..n {
            if key(sa[x - 1] as usize) != key(sa[x] as usize) {
                c += 1;
            }
            tmp[sa[x] as usize] = c;
        }
        std::mem::swap(&mut rank, &mut tmp);
        classes = c as usize + 1;
        k *= 2;
    }
    sa
}
