//! Brute-force analysis of the sets `Subseq^p_k(w)`: enumeration,
//! non-universality, non-equivalence, plus the (unbounded) universality
//! index.
//!
//! The bounded-range questions are NP-hard, so everything here is
//! exponential in `k` and guarded by an explicit budget. Exceeding the budget
//! is an error, never a truncated answer. Candidates of `Σ^k` are visited in
//! lexicographic symbol-id order and the least witness is reported, also when
//! the search runs on several threads.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::matcher::p_subsequence_occurs;
use crate::word::{window_ends, Symbol, Word};

/// Default number of candidate words a brute-force search may visit.
pub const DEFAULT_CANDIDATE_BUDGET: u128 = 1 << 24;
/// Default number of members an enumerated set may hold.
pub const DEFAULT_SET_BUDGET: u128 = 1 << 22;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub budget: u128,
    /// Worker threads for candidate searches; 0 or 1 searches sequentially.
    pub threads: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            budget: DEFAULT_CANDIDATE_BUDGET,
            threads: 1,
        }
    }
}

impl SearchConfig {
    pub fn with_budget(budget: u128) -> Self {
        SearchConfig {
            budget,
            ..Self::default()
        }
    }
}

/// `σ^k`, saturating.
pub fn candidate_count(sigma: u32, k: usize) -> u128 {
    u32::try_from(k)
        .ok()
        .and_then(|k| (sigma as u128).checked_pow(k))
        .unwrap_or(u128::MAX)
}

fn check_budget(sigma: u32, k: usize, budget: u128) -> Result<u64> {
    let required = candidate_count(sigma, k);
    if required > budget {
        return Err(Error::BudgetExceeded {
            what: "candidate words",
            required,
            budget,
        });
    }
    u64::try_from(required).map_err(|_| Error::BudgetExceeded {
        what: "candidate words",
        required,
        budget: u64::MAX as u128,
    })
}

/// The `index`-th word of `Σ^k` in lexicographic order.
fn decode(mut index: u64, sigma: u32, k: usize) -> Vec<Symbol> {
    let mut out = vec![1; k];
    for slot in out.iter_mut().rev() {
        *slot = (index % sigma as u64) as Symbol + 1;
        index /= sigma as u64;
    }
    out
}

/// Visits `Σ^k` in lexicographic order and returns the first candidate (and
/// its 0-based rank) satisfying `pred`. The caller checks the budget.
pub(crate) fn for_each_candidate_until<F>(
    sigma: u32,
    k: usize,
    cfg: &SearchConfig,
    pred: F,
) -> Option<(u64, Vec<Symbol>)>
where
    F: Fn(&[Symbol]) -> bool + Sync,
{
    let count = candidate_count(sigma, k) as u64;
    if cfg.threads > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(cfg.threads)
            .build()
            .expect("thread pool");
        return pool.install(|| {
            (0..count)
                .into_par_iter()
                .find_first(|&i| pred(&decode(i, sigma, k)))
                .map(|i| (i, decode(i, sigma, k)))
        });
    }
    let mut cur = vec![1 as Symbol; k];
    for i in 0..count {
        if pred(&cur) {
            return Some((i, cur));
        }
        // odometer increment
        for slot in cur.iter_mut().rev() {
            if *slot < sigma {
                *slot += 1;
                break;
            }
            *slot = 1;
        }
    }
    None
}

/// `Subseq^p_k(w)` with its members in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubseqSet {
    pub k: usize,
    pub p: usize,
    pub members: BTreeSet<Vec<Symbol>>,
}

impl SubseqSet {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, x: &[Symbol]) -> bool {
        self.members.contains(x)
    }
}

/// Enumerates all length-`k` words occurring in some window of size `p`.
///
/// Each window's distinct subsequences are generated through a
/// next-occurrence table (every branch picks the leftmost occurrence of the
/// next letter, so every leaf is a different word) and merged into one set.
/// Fails once the set would exceed `budget` members.
pub fn enumerate_subseq_pk(w: &Word, k: usize, p: usize, budget: u128) -> Result<SubseqSet> {
    let n = w.len();
    let sigma = w.alphabet_size() as usize;
    let text = w.symbols();
    let mut members = BTreeSet::new();
    let ends = window_ends(n, p);
    let pe = *ends.start();
    if k > pe {
        return Ok(SubseqSet { k, p, members });
    }

    // next[i * sigma + a - 1]: smallest j >= i with text[j] == a, or n
    let mut next = vec![n; (n + 1) * sigma];
    for i in (0..n).rev() {
        let (head, tail) = next.split_at_mut((i + 1) * sigma);
        head[i * sigma..].copy_from_slice(&tail[..sigma]);
        head[i * sigma + text[i] as usize - 1] = i;
    }

    struct Walk<'a> {
        next: &'a [usize],
        sigma: usize,
        k: usize,
        end: usize,
        prefix: Vec<Symbol>,
        members: &'a mut BTreeSet<Vec<Symbol>>,
        budget: u128,
    }

    impl Walk<'_> {
        fn go(&mut self, from: usize) -> Result<()> {
            if self.prefix.len() == self.k {
                if !self.members.contains(&self.prefix) {
                    if self.members.len() as u128 >= self.budget {
                        return Err(Error::BudgetExceeded {
                            what: "set members",
                            required: self.members.len() as u128 + 1,
                            budget: self.budget,
                        });
                    }
                    self.members.insert(self.prefix.clone());
                }
                return Ok(());
            }
            let still_needed = self.k - self.prefix.len();
            for a in 0..self.sigma {
                let j = self.next[from * self.sigma + a];
                if j < self.end && self.end - j >= still_needed {
                    self.prefix.push(a as Symbol + 1);
                    self.go(j + 1)?;
                    self.prefix.pop();
                }
            }
            Ok(())
        }
    }

    for t in ends {
        let mut walk = Walk {
            next: &next,
            sigma,
            k,
            end: t,
            prefix: Vec::with_capacity(k),
            members: &mut members,
            budget,
        };
        walk.go(t - pe)?;
    }
    Ok(SubseqSet { k, p, members })
}

/// Outcome of a budgeted witness search.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchOutcome {
    /// The lexicographically least witness, if the answer is YES.
    pub witness: Option<Word>,
    pub candidates_checked: u64,
    pub budget: u128,
    /// Answered by the letter-count argument without enumerating.
    pub shortcut: bool,
}

impl SearchOutcome {
    pub fn answer(&self) -> bool {
        self.witness.is_some()
    }
}

/// Looks for a word of length `k` that occurs in no window of size `p` of
/// `w`, i.e. decides `Subseq^p_k(w) ≠ Σ^k`.
///
/// When `|w| < kσ` some letter occurs fewer than `k` times and the answer is
/// YES without search; the witness is then `a^k` for the least such letter `a`.
pub fn kp_non_universal(w: &Word, k: usize, p: usize, cfg: &SearchConfig) -> Result<SearchOutcome> {
    let sigma = w.alphabet_size();
    if (w.len() as u128) < k as u128 * sigma as u128 {
        let counts = w.counts();
        let a = (1..=sigma)
            .find(|&a| counts[a as usize] < k)
            .expect("some letter is rare");
        return Ok(SearchOutcome {
            witness: Some(Word::new(vec![a; k], sigma)?),
            candidates_checked: 0,
            budget: cfg.budget,
            shortcut: true,
        });
    }
    let count = check_budget(sigma, k, cfg.budget)?;
    let hit = for_each_candidate_until(sigma, k, cfg, |x| {
        let x = Word::new(x.to_vec(), sigma).expect("candidate in range");
        !p_subsequence_occurs(&x, w, p)
    });
    Ok(match hit {
        Some((rank, x)) => SearchOutcome {
            witness: Some(Word::new(x, sigma)?),
            candidates_checked: rank + 1,
            budget: cfg.budget,
            shortcut: false,
        },
        None => SearchOutcome {
            witness: None,
            candidates_checked: count,
            budget: cfg.budget,
            shortcut: false,
        },
    })
}

/// Looks for a word of length `k` in exactly one of `Subseq^p_k(w)` and
/// `Subseq^p_k(v)`. Both words are read over the larger of their alphabets.
pub fn kp_non_equivalent(
    w: &Word,
    v: &Word,
    k: usize,
    p: usize,
    cfg: &SearchConfig,
) -> Result<SearchOutcome> {
    let sigma = w.alphabet_size().max(v.alphabet_size());
    let count = check_budget(sigma, k, cfg.budget)?;
    let hit = for_each_candidate_until(sigma, k, cfg, |x| {
        let x = Word::new(x.to_vec(), sigma).expect("candidate in range");
        p_subsequence_occurs(&x, w, p) != p_subsequence_occurs(&x, v, p)
    });
    Ok(match hit {
        Some((rank, x)) => SearchOutcome {
            witness: Some(Word::new(x, sigma)?),
            candidates_checked: rank + 1,
            budget: cfg.budget,
            shortcut: false,
        },
        None => SearchOutcome {
            witness: None,
            candidates_checked: count,
            budget: cfg.budget,
            shortcut: false,
        },
    })
}

/// `ι(w)`, the largest `k` with `alph(w)^k ⊆ Subseq(w)`, via the greedy arch
/// factorization: repeatedly cut the shortest prefix containing every letter
/// of `alph(w)`; the number of complete arches is `ι(w)`.
pub fn universality_index(w: &Word) -> Result<usize> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    let distinct = w.alph().len();
    let mut seen = vec![false; w.alphabet_size() as usize + 1];
    let mut in_arch = 0;
    let mut arches = 0;
    for &c in w.symbols() {
        if !seen[c as usize] {
            seen[c as usize] = true;
            in_arch += 1;
            if in_arch == distinct {
                arches += 1;
                in_arch = 0;
                seen.iter_mut().for_each(|s| *s = false);
            }
        }
    }
    Ok(arches)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::is_subsequence;

    fn w(s: &str) -> Word {
        Word::from_letters(s)
    }

    fn letters(x: &[Symbol]) -> String {
        Word::from_symbols(x.to_vec()).unwrap().to_letters()
    }

    fn set_of(s: &SubseqSet) -> Vec<String> {
        s.members.iter().map(|x| letters(x)).collect()
    }

    #[test]
    fn enumerate_examples() {
        assert_eq!(
            set_of(&enumerate_subseq_pk(&w("ab"), 1, 1, 100).unwrap()),
            ["a", "b"]
        );
        assert_eq!(
            set_of(&enumerate_subseq_pk(&w("ab"), 2, 2, 100).unwrap()),
            ["ab"]
        );
        assert_eq!(
            set_of(&enumerate_subseq_pk(&w("aba"), 2, 2, 100).unwrap()),
            ["ab", "ba"]
        );
        assert!(enumerate_subseq_pk(&w("ab"), 3, 2, 100).unwrap().is_empty());
        assert_eq!(enumerate_subseq_pk(&w("ab"), 0, 2, 100).unwrap().len(), 1);
    }

    #[test]
    fn enumerate_budget() {
        let err = enumerate_subseq_pk(&w("abcabc"), 2, 6, 3).unwrap_err();
        assert!(matches!(
            err,
            Error::BudgetExceeded {
                what: "set members",
                ..
            }
        ));
    }

    #[test]
    fn enumerate_matches_window_brute_force() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(5);
        for _ in 0..300 {
            let sigma = rng.gen_range(1..=3u32);
            let n = rng.gen_range(0..=12);
            let text: Vec<Symbol> = (0..n).map(|_| rng.gen_range(1..=sigma)).collect();
            let tw = Word::new(text.clone(), sigma).unwrap();
            let k = rng.gen_range(0..=4);
            let p = rng.gen_range(0..=n + 1);
            let got = enumerate_subseq_pk(&tw, k, p, 1 << 20).unwrap();
            let pe = p.min(n);
            let mut expect = BTreeSet::new();
            if k <= pe {
                for idx in 0..candidate_count(sigma, k) as u64 {
                    let x = decode(idx, sigma, k);
                    if (pe..=n).any(|t| is_subsequence(&x, &text[t - pe..t])) {
                        expect.insert(x);
                    }
                }
            }
            assert_eq!(got.members, expect, "w={text:?} k={k} p={p}");
        }
    }

    #[test]
    fn non_universal_examples() {
        let cfg = SearchConfig::default();
        assert_eq!(
            kp_non_universal(&w("abab"), 1, 1, &cfg).unwrap().witness,
            None
        );
        let out = kp_non_universal(&w("abab"), 2, 2, &cfg).unwrap();
        assert_eq!(out.witness.unwrap().to_letters(), "aa");
        assert!(!out.shortcut);
        assert_eq!(
            kp_non_universal(&w("abab"), 2, 4, &cfg).unwrap().witness,
            None
        );
    }

    #[test]
    fn non_universal_shortcut() {
        let out = kp_non_universal(&w("abb"), 2, 3, &SearchConfig::default()).unwrap();
        assert!(out.shortcut);
        assert_eq!(out.witness.unwrap().to_letters(), "aa");
        assert_eq!(out.candidates_checked, 0);
    }

    #[test]
    fn non_universal_budget() {
        let cfg = SearchConfig::with_budget(15);
        let err = kp_non_universal(&w("abababab"), 4, 8, &cfg).unwrap_err();
        assert_eq!(
            err,
            Error::BudgetExceeded {
                what: "candidate words",
                required: 16,
                budget: 15
            }
        );
        assert!(kp_non_universal(&w("abababab"), 4, 8, &SearchConfig::with_budget(16)).is_ok());
    }

    #[test]
    fn non_equivalent_examples() {
        let cfg = SearchConfig::default();
        assert_eq!(
            kp_non_equivalent(&w("abab"), &w("abab"), 2, 2, &cfg)
                .unwrap()
                .witness,
            None
        );
        // windows of "abab": {ab, ba}; of "aabb": {aa, ab, bb}
        let out = kp_non_equivalent(&w("abab"), &w("aabb"), 2, 2, &cfg).unwrap();
        assert_eq!(out.witness.unwrap().to_letters(), "aa");
        assert_eq!(out.candidates_checked, 1);
        assert_eq!(
            kp_non_equivalent(&w("ab"), &w("ba"), 1, 1, &cfg)
                .unwrap()
                .witness,
            None
        );
    }

    #[test]
    fn threaded_search_returns_least_witness() {
        let seq = SearchConfig::default();
        let par = SearchConfig {
            threads: 4,
            ..SearchConfig::default()
        };
        let text = w("abcabcbacbcacbabcabaccbacb");
        for k in 1..=4 {
            for p in [3, 5, 8] {
                assert_eq!(
                    kp_non_universal(&text, k, p, &seq).unwrap(),
                    kp_non_universal(&text, k, p, &par).unwrap()
                );
            }
        }
    }

    #[test]
    fn universality_index_examples() {
        assert_eq!(universality_index(&w("ab")).unwrap(), 1);
        assert_eq!(universality_index(&w("abab")).unwrap(), 2);
        assert_eq!(universality_index(&w("aaaa")).unwrap(), 4);
        assert!(universality_index(&Word::empty(1)).is_err());
    }

    /// `max{k : alph(w)^k ⊆ Subseq(w)}` by enumeration.
    fn iota_brute(text: &[Symbol]) -> usize {
        let mut alph: Vec<Symbol> = text.to_vec();
        alph.sort_unstable();
        alph.dedup();
        let mut k = 0;
        loop {
            let next = k + 1;
            let mut all = true;
            let total = (alph.len() as u64).pow(next as u32);
            for idx in 0..total {
                let mut x = Vec::with_capacity(next);
                let mut r = idx;
                for _ in 0..next {
                    x.push(alph[(r % alph.len() as u64) as usize]);
                    r /= alph.len() as u64;
                }
                if !is_subsequence(&x, text) {
                    all = false;
                    break;
                }
            }
            if !all {
                return k;
            }
            k = next;
        }
    }

    #[test]
    fn universality_index_matches_definition_exhaustively() {
        for n in 1..=12usize {
            for code in 0..(1u32 << n) {
                let text: Vec<Symbol> = (0..n).map(|i| (code >> i & 1) + 1).collect();
                let got = universality_index(&Word::new(text.clone(), 2).unwrap()).unwrap();
                assert_eq!(got, iota_brute(&text), "{text:?}");
            }
        }
    }

    #[test]
    fn non_universal_agrees_with_enumeration() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(8);
        let cfg = SearchConfig::default();
        for _ in 0..300 {
            let sigma = rng.gen_range(1..=3u32);
            let n = rng.gen_range(1..=14);
            let text: Vec<Symbol> = (0..n).map(|_| rng.gen_range(1..=sigma)).collect();
            let tw = Word::new(text, sigma).unwrap();
            let k = rng.gen_range(0..=3);
            let p = rng.gen_range(1..=n);
            let answer = kp_non_universal(&tw, k, p, &cfg).unwrap();
            let set = enumerate_subseq_pk(&tw, k, p, 1 << 20).unwrap();
            assert_eq!(
                answer.witness.is_none(),
                set.len() as u128 == candidate_count(sigma, k)
            );
            if let Some(x) = answer.witness {
                assert!(!set.contains(x.symbols()));
            }
        }
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn non_equivalence_is_symmetric(
                a in prop::collection::vec(1u32..=2, 0..=10),
                b in prop::collection::vec(1u32..=2, 0..=10),
                k in 0usize..=3,
                p in 0usize..=10,
            ) {
                let (a, b) = (Word::new(a, 2).unwrap(), Word::new(b, 2).unwrap());
                let cfg = SearchConfig::default();
                let ab = kp_non_equivalent(&a, &b, k, p, &cfg).unwrap();
                let ba = kp_non_equivalent(&b, &a, k, p, &cfg).unwrap();
                prop_assert_eq!(ab.witness, ba.witness);
            }
        }
    }
}
