//! Absent subsequences under a window bound.
//!
//! The minimal-absent decider scans the text once. Per symbol it keeps the
//! positions of that symbol inside the current window, and per pattern index
//! two pointers into those lists: the greedy left-to-right embedding of the
//! pattern (`j_i`, the end of the shortest window prefix containing
//! `v[1:i]`) and the greedy right-to-left embedding (`g_i`, the start of the
//! shortest window suffix containing `v[i:m]`). The pattern occurs in a
//! window iff some prefix embedding ends before the matching suffix
//! embedding starts, and the deletion `v[1:i-1]v[i+1:m]` occurs iff
//! `j_{i-1} < g_{i+1}`.

use std::collections::VecDeque;

use crate::analysis::{for_each_candidate_until, SearchConfig};
use crate::error::{Error, Result};
use crate::matcher::p_subsequence_occurs;
use crate::word::{Symbol, Word};

/// Position value of an undefined prefix pointer; larger than any position.
const NO_PREFIX: usize = usize::MAX;
/// Position value of an undefined suffix pointer; smaller than any position.
const NO_SUFFIX: usize = 0;

/// Streaming state of the minimal-absent decider.
#[derive(Clone, Debug)]
pub struct PmasState {
    pattern: Vec<Symbol>,
    window: usize,
    /// Positions of each symbol inside the current window, increasing.
    lists: Vec<VecDeque<usize>>,
    /// Elements ever popped from the front of each list, so that pointers
    /// can be stored as stable absolute indices.
    popped: Vec<usize>,
    /// Letters of the current window, oldest first.
    window_symbols: VecDeque<Symbol>,
    /// Absolute list index of `j_i` for `i = 1..=m` (slot 0 unused).
    fwd: Vec<Option<usize>>,
    /// Absolute list index of `g_i` for `i = 1..=m` (slot 0 unused).
    bwd: Vec<Option<usize>>,
    covered: Vec<bool>,
    t: usize,
    first_occurrence: Option<usize>,
}

impl PmasState {
    /// `window` must be at least 1; callers clamp it to the text length.
    pub fn new(pattern: &Word, window: usize, alphabet_size: u32) -> Self {
        assert!(window >= 1, "window must be positive");
        let m = pattern.len();
        let sigma = alphabet_size.max(pattern.alphabet_size()) as usize;
        PmasState {
            pattern: pattern.symbols().to_vec(),
            window,
            lists: vec![VecDeque::new(); sigma + 1],
            popped: vec![0; sigma + 1],
            window_symbols: VecDeque::with_capacity(window + 1),
            fwd: vec![None; m + 1],
            bwd: vec![None; m + 1],
            covered: vec![false; m + 1],
            t: 0,
            first_occurrence: None,
        }
    }

    fn m(&self) -> usize {
        self.pattern.len()
    }

    fn list_len_abs(&self, a: Symbol) -> usize {
        self.popped[a as usize] + self.lists[a as usize].len()
    }

    fn pos(&self, a: Symbol, abs: usize) -> usize {
        self.lists[a as usize][abs - self.popped[a as usize]]
    }

    /// `j_i`: end of the shortest window prefix containing `v[1:i]`, or
    /// `None`. `i = 0` gives `Some(0)`.
    pub fn prefix_end(&self, i: usize) -> Option<usize> {
        if i == 0 {
            return Some(0);
        }
        self.fwd[i].map(|abs| self.pos(self.pattern[i - 1], abs))
    }

    /// `g_i`: start of the shortest window suffix containing `v[i:m]`, or
    /// `None`.
    pub fn suffix_start(&self, i: usize) -> Option<usize> {
        self.bwd[i].map(|abs| self.pos(self.pattern[i - 1], abs))
    }

    fn j(&self, i: usize) -> usize {
        self.prefix_end(i).unwrap_or(NO_PREFIX)
    }

    /// `g_{m+1}` stands for the empty suffix and is always satisfiable.
    fn g(&self, i: usize) -> usize {
        if i == self.m() + 1 {
            return usize::MAX;
        }
        self.suffix_start(i).unwrap_or(NO_SUFFIX)
    }

    /// Positions of `a` inside the current window.
    pub fn window_positions(&self, a: Symbol) -> Vec<usize> {
        self.lists[a as usize].iter().copied().collect()
    }

    /// Indices `i` whose deletion has occurred in some full window so far.
    pub fn covered(&self) -> Vec<usize> {
        (1..=self.m()).filter(|&i| self.covered[i]).collect()
    }

    pub fn all_covered(&self) -> bool {
        self.covered[1..].iter().all(|&c| c)
    }

    /// End position of the first full window containing the pattern.
    pub fn first_occurrence(&self) -> Option<usize> {
        self.first_occurrence
    }

    pub fn position(&self) -> usize {
        self.t
    }

    /// Scans the next letter. Returns whether the pattern occurs in the
    /// window now ending at this letter (false while the window is not full).
    pub fn step(&mut self, c: Symbol) -> bool {
        self.t += 1;
        let t = self.t;
        let p = self.window;
        let m = self.m();
        let expiring = t.checked_sub(p).filter(|&e| e >= 1);

        self.lists[c as usize].push_back(t);
        self.window_symbols.push_back(c);
        let new_abs = self.list_len_abs(c) - 1;

        // The new letter can only complete the first undefined prefix.
        if let Some(i0) = (1..=m).find(|&i| self.fwd[i].is_none()) {
            if self.pattern[i0 - 1] == c {
                self.fwd[i0] = Some(new_abs);
            }
        }

        if let Some(e) = expiring {
            if m > 0 && self.prefix_end(1) == Some(e) {
                self.refresh_prefixes();
            }
        }

        if m > 0 && self.pattern[m - 1] == c {
            self.bwd[m] = Some(new_abs);
            self.refresh_suffixes();
        }
        if let Some(e) = expiring {
            // Suffix starts are strictly increasing, so only g_1 can expire;
            // an expired g_i would drag all lower pointers with it.
            for i in 1..=m {
                if self.suffix_start(i) == Some(e) {
                    for d in 1..=i {
                        self.bwd[d] = None;
                    }
                }
            }
            let a = self.window_symbols.pop_front().expect("window is full");
            debug_assert_eq!(self.lists[a as usize].front(), Some(&e));
            self.lists[a as usize].pop_front();
            self.popped[a as usize] += 1;
        }

        if t < p {
            return false;
        }

        let found = (0..=m).any(|i| self.j(i) < self.g(i + 1));
        if found && self.first_occurrence.is_none() {
            self.first_occurrence = Some(t);
        }
        for i in 1..=m {
            if !self.covered[i] && self.j(i - 1) < self.g(i + 1) {
                self.covered[i] = true;
            }
        }
        found
    }

    /// Re-runs the greedy left-to-right embedding after `j_1` left the
    /// window. Pointers only move right.
    fn refresh_prefixes(&mut self) {
        let m = self.m();
        let mut prev_end = 0usize;
        for i in 1..=m {
            let a = self.pattern[i - 1];
            let Some(mut abs) = self.fwd[i] else {
                // once undefined, every later prefix is undefined too
                for d in i..=m {
                    self.fwd[d] = None;
                }
                return;
            };
            let before = abs;
            let limit = self.list_len_abs(a);
            while abs < limit
                && self.pos(a, abs) <= prev_end.max(self.t.saturating_sub(self.window))
            {
                abs += 1;
            }
            if abs >= limit {
                for d in i..=m {
                    self.fwd[d] = None;
                }
                return;
            }
            self.fwd[i] = Some(abs);
            if i > 1 && abs == before {
                // unchanged pointer: the rest of the chain is unchanged too
                return;
            }
            prev_end = self.pos(a, abs);
        }
    }

    /// Re-runs the greedy right-to-left embedding after `g_m` moved to the
    /// newest letter. Pointers only move right.
    fn refresh_suffixes(&mut self) {
        let m = self.m();
        let mut next_start = self.g(m);
        for i in (1..m).rev() {
            let a = self.pattern[i - 1];
            let limit = self.list_len_abs(a);
            let mut abs = match self.bwd[i] {
                Some(abs) => abs,
                None => self.popped[a as usize],
            };
            if abs >= limit || self.pos(a, abs) >= next_start {
                for d in 1..=i {
                    self.bwd[d] = None;
                }
                return;
            }
            while abs + 1 < limit && self.pos(a, abs + 1) < next_start {
                abs += 1;
            }
            self.bwd[i] = Some(abs);
            next_start = self.pos(a, abs);
        }
    }
}

/// Result of a full minimal-absent scan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PmasScan {
    pub is_pmas: bool,
    /// End of the first full window containing the pattern.
    pub occurrence: Option<usize>,
    /// `covered[i-1]`: the deletion of `v[i]` occurred in some window.
    pub covered: Vec<bool>,
}

/// Runs the minimal-absent scan. With `stop_early` the scan ends at the first
/// window containing `v`; otherwise the whole text is scanned so that
/// `covered` is complete.
pub fn pmas_scan(v: &Word, w: &Word, p: usize, stop_early: bool) -> PmasScan {
    let m = v.len();
    let pe = p.min(w.len());
    if pe == 0 {
        // every window is empty: only ε occurs
        return PmasScan {
            is_pmas: m == 1,
            occurrence: (m == 0).then_some(0),
            covered: vec![m == 1; m],
        };
    }
    let mut state = PmasState::new(v, pe, w.alphabet_size());
    for &c in w.symbols() {
        if state.step(c) && stop_early {
            break;
        }
    }
    let covered: Vec<bool> = (1..=m).map(|i| state.covered[i]).collect();
    let occurrence = state.first_occurrence();
    PmasScan {
        is_pmas: occurrence.is_none() && covered.iter().all(|&c| c),
        occurrence,
        covered,
    }
}

/// Whether `v` is a minimal absent `p`-subsequence of `w`.
pub fn is_pmas(v: &Word, w: &Word, p: usize) -> bool {
    pmas_scan(v, w, p, true).is_pmas
}

/// Whether `v` occurs in no window of size `p` of `w`.
pub fn is_p_absent(v: &Word, w: &Word, p: usize) -> bool {
    !p_subsequence_occurs(v, w, p)
}

/// Whether `v` is a shortest absent `p`-subsequence of `w`: absent, and every
/// word of length `|v| - 1` over the alphabet occurs in some window.
///
/// Exponential in `|v|`; fails when `σ^(|v|-1)` exceeds the budget.
pub fn is_psas(v: &Word, w: &Word, p: usize) -> Result<bool> {
    is_psas_with(v, w, p, &SearchConfig::default())
}

pub fn is_psas_with(v: &Word, w: &Word, p: usize, cfg: &SearchConfig) -> Result<bool> {
    if v.is_empty() {
        return Ok(false);
    }
    let sigma = v.alphabet_size().max(w.alphabet_size());
    let k = v.len() - 1;
    let required = (sigma as u128).checked_pow(k as u32).unwrap_or(u128::MAX);
    if required > cfg.budget {
        return Err(Error::BudgetExceeded {
            what: "candidate words",
            required,
            budget: cfg.budget,
        });
    }
    if !is_p_absent(v, w, p) {
        return Ok(false);
    }
    let missing = for_each_candidate_until(sigma, k, cfg, |x| {
        let x = Word::new(x.to_vec(), sigma).expect("candidate in range");
        !p_subsequence_occurs(&x, w, p)
    });
    Ok(missing.is_none())
}
