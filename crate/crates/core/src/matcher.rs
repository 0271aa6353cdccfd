//! Sliding-window subsequence matching in `O(|u|)` space and `O(|u|)` time
//! per scanned letter.
//!
//! For the current window `w[t-p+1:t]` the matcher keeps, for every prefix
//! `u[1:i]` of the pattern, the length of the shortest suffix of the window
//! that contains `u[1:i]` as a subsequence. Scanning one more letter `c`
//! extends every such suffix by one; prefixes ending in `c` may instead be
//! completed by `c` itself, starting from the suffix for `u[1:i-1]`. Lengths
//! that no longer fit the window are dropped to infinity. The pattern occurs
//! in the window exactly when the entry for the whole pattern is finite.

use crate::error::{Error, Result};
use crate::word::{window_ends, MatchReport, Symbol, Word};

/// Length sentinel for "no suffix of the window contains this prefix".
/// Strictly greater than any window size.
pub const INFINITY: usize = usize::MAX;

/// Streaming state for one pattern and one window size.
#[derive(Clone, Debug)]
pub struct MatcherState {
    pattern: Vec<Symbol>,
    window: usize,
    /// `shortest[i]` for `i` in `1..=m`; `shortest[0]` is the empty prefix
    /// and stays 0.
    shortest: Vec<usize>,
    /// For each symbol, the 1-based positions of the pattern holding it.
    occ: Vec<Vec<usize>>,
    scanned: usize,
}

impl MatcherState {
    /// Fresh state; rejects patterns longer than the window.
    pub fn new(pattern: &Word, window: usize) -> Result<Self> {
        let m = pattern.len();
        if m > window {
            return Err(Error::PatternLongerThanWindow {
                pattern_len: m,
                window,
            });
        }
        let mut occ = vec![Vec::new(); pattern.alphabet_size() as usize + 1];
        for (i, &s) in pattern.symbols().iter().enumerate() {
            occ[s as usize].push(i + 1);
        }
        let mut shortest = vec![INFINITY; m + 1];
        shortest[0] = 0;
        Ok(MatcherState {
            pattern: pattern.symbols().to_vec(),
            window,
            shortest,
            occ,
            scanned: 0,
        })
    }

    /// Scans one letter. Returns whether the pattern occurs in the window
    /// ending at this letter (which is only a full window once `window`
    /// letters have been scanned).
    pub fn step(&mut self, c: Symbol) -> bool {
        self.scanned += 1;
        let p = self.window;
        let a = &mut self.shortest;
        let hits: &[usize] = self.occ.get(c as usize).map_or(&[], Vec::as_slice);
        let mut h = hits.len();
        // Descending, so a[i - 1] still holds the value from before this letter.
        for i in (1..a.len()).rev() {
            let base = if h > 0 && hits[h - 1] == i {
                h -= 1;
                a[i - 1]
            } else {
                a[i]
            };
            let next = base.saturating_add(1);
            a[i] = if next <= p { next } else { INFINITY };
        }
        self.occurs()
    }

    /// Whether the pattern occurs in the current window.
    #[inline]
    pub fn occurs(&self) -> bool {
        self.shortest[self.pattern.len()] <= self.window
    }

    /// Shortest-suffix lengths for `u[1:1] .. u[1:m]`.
    pub fn shortest_suffixes(&self) -> &[usize] {
        &self.shortest[1..]
    }

    /// Positions of `c` in the pattern (1-based).
    pub fn occurrences(&self, c: Symbol) -> &[usize] {
        self.occ.get(c as usize).map_or(&[], Vec::as_slice)
    }

    pub fn window(&self) -> usize {
        self.window
    }

    pub fn scanned(&self) -> usize {
        self.scanned
    }

    /// Number of integers held in the per-prefix table; depends on `|u|` only.
    pub fn table_len(&self) -> usize {
        self.shortest.len()
    }
}

/// Decides `u ≤_p w` and reports the verdict for every window.
///
/// Windows larger than the text collapse to the text itself; a pattern longer
/// than the window never occurs.
pub fn p_subsequence_match(u: &Word, w: &Word, p: usize) -> MatchReport {
    let n = w.len();
    let ends = window_ends(n, p);
    let pe = *ends.start();
    let windows = ends.count();
    if u.len() > pe {
        return MatchReport::from_windows(pe, vec![false; windows]);
    }
    if u.is_empty() {
        return MatchReport::from_windows(pe, vec![true; windows]);
    }
    let mut state = MatcherState::new(u, pe).expect("pattern fits the window");
    let mut per_window = Vec::with_capacity(windows);
    for (t, &c) in w.symbols().iter().enumerate() {
        let hit = state.step(c);
        if t + 1 >= pe {
            per_window.push(hit);
        }
    }
    MatchReport::from_windows(pe, per_window)
}

/// Just the decision, without materializing per-window verdicts.
pub fn p_subsequence_occurs(u: &Word, w: &Word, p: usize) -> bool {
    let n = w.len();
    let pe = p.min(n);
    if u.len() > pe {
        return false;
    }
    if u.is_empty() {
        return true;
    }
    let mut state = MatcherState::new(u, pe).expect("pattern fits the window");
    w.symbols()
        .iter()
        .enumerate()
        .any(|(t, &c)| state.step(c) && t + 1 >= pe)
}
