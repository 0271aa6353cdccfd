//! Circular words: minimal representation, circular subsequence matching and
//! iterated matching through a next-position table.
//!
//! Positions and rotation offsets are 1-based: offset `i` names the conjugate
//! `w[i:n] w[1:i-1]`.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lce::Lce;
use crate::matcher::p_subsequence_occurs;
use crate::word::{Symbol, Word};

/// The shortest, then lexicographically least, root `u` such that the
/// length-`n` prefix of `u^ω` is a conjugate of the word. `|u|` need not
/// divide `n`: `ababa` is represented by `(ab, 5)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinimalRepresentation {
    pub root: Word,
    pub total_len: usize,
    /// Least offset `i` with `w[i:n] w[1:i-1]` a prefix of `root^ω`.
    pub rotation_offset: usize,
}

impl MinimalRepresentation {
    /// The minimal rotation, `root^(n/|root|)`.
    pub fn expand(&self) -> Word {
        let q = self.root.len();
        let symbols = (0..self.total_len)
            .map(|x| self.root.symbols()[x % q])
            .collect();
        Word::new(symbols, self.root.alphabet_size()).expect("root symbols are valid")
    }
}

/// Computes the minimal representation of `w∘`.
///
/// A conjugate starting at `i` has period `q` iff `w[x] = w[x+q]` (indices
/// mod `n`) for the `n - q` consecutive positions `x` from `i`. For
/// increasing `q` such a run is searched by probing every multiple of
/// `n - q` with forward and backward longest-common-extension queries, which
/// costs `O(n / (n - q))` per `q` and `O(n log n)` overall after building the
/// suffix arrays. Equal-length roots are compared with the same queries.
pub fn minimal_representation(w: &Word) -> Result<MinimalRepresentation> {
    let n = w.len();
    if n == 0 {
        return Err(Error::EmptyWord);
    }
    let text = w.symbols();
    // four copies; unrolled position y of the cyclic word lives at y + n
    let s: Vec<u32> = text.repeat(4);
    let fwd = Lce::new(&s);
    let mut rev = s.clone();
    rev.reverse();
    let bwd = Lce::new(&rev);
    let len = s.len();
    // matches at shift q running forward from y, and backward ending at y - 1
    let run_right = |y: usize, q: usize| fwd.query(y + n, y + n + q);
    let run_left = |y: usize, q: usize| bwd.query(len - (y + n), len - (y + n + q));

    let mut period = n;
    let mut starts = vec![false; n];
    for q in 1..n {
        let need = n - q;
        let mut found = false;
        let mut y = 0;
        while y < 2 * n {
            let right = run_right(y, q).min(need);
            let left = run_left(y, q).min(need);
            if left + right >= need {
                found = true;
                for i in y + n - left..=y + n + right - need {
                    starts[i % n] = true;
                }
            }
            y += need;
        }
        if found {
            period = q;
            break;
        }
    }
    if period == n {
        starts.iter_mut().for_each(|x| *x = true);
    }

    let mut best: Option<usize> = None;
    for i in (0..n).filter(|&i| starts[i]) {
        best = match best {
            None => Some(i),
            Some(b) => {
                let common = fwd.query(i, b);
                if common < period && s[i + common] < s[b + common] {
                    Some(i)
                } else {
                    Some(b)
                }
            }
        };
    }
    let offset = best.expect("some conjugate has period n");
    let root: Vec<Symbol> = s[offset..offset + period].to_vec();
    Ok(MinimalRepresentation {
        root: Word::new(root, w.alphabet_size())?,
        total_len: n,
        rotation_offset: offset + 1,
    })
}

/// Whether `v` is a subsequence of some conjugate of `w`, i.e. of some
/// length-`n` window of `ww`.
pub fn circular_match(v: &Word, w: &Word) -> bool {
    let n = w.len();
    if v.len() > n {
        return false;
    }
    p_subsequence_occurs(v, &w.concat(w), n)
}

/// `nextpos[i][a]`: the first position after `i`, going around the circle,
/// that holds `a`. Immutable once built.
#[derive(Clone, Debug)]
pub struct CircularIndex {
    n: usize,
    sigma: usize,
    /// Row `i - 1` for position `i`; 0 marks a letter absent from the word.
    table: Vec<u32>,
}

/// Fills the `n × σ` table in `O(nσ)` by scanning `ww` right to left.
pub fn build_circular_index(w: &Word) -> Result<CircularIndex> {
    let n = w.len();
    if n == 0 {
        return Err(Error::EmptyWord);
    }
    let n32 = u32::try_from(n).map_err(|_| Error::InvalidInstance("word too long".into()))?;
    let sigma = w.alphabet_size() as usize;
    let text = w.symbols();
    let mut table = vec![0u32; n * sigma];
    let mut next = vec![0u32; sigma];
    for y in (0..2 * n).rev() {
        if y < n {
            // y is position y+1; next holds the first occurrences after it
            table[y * sigma..(y + 1) * sigma].copy_from_slice(&next);
        }
        let x = y % n;
        next[text[x] as usize - 1] = x as u32 + 1;
    }
    debug_assert!(table.iter().all(|&e| e <= n32));
    Ok(CircularIndex { n, sigma, table })
}

impl CircularIndex {
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// First position strictly after `i` (circularly) holding `a`, for
    /// `i ∈ [0:n]` with 0 standing for `n`.
    pub fn nextpos(&self, i: usize, a: Symbol) -> Option<usize> {
        if a == 0 || a as usize > self.sigma {
            return None;
        }
        let row = if i == 0 { self.n } else { i } - 1;
        match self.table[row * self.sigma + a as usize - 1] {
            0 => None,
            j => Some(j as usize),
        }
    }
}

/// A word relabeled onto `alph(v) ∪ {$}` together with its index, shared by
/// all starting offsets.
struct Traversal {
    index: CircularIndex,
    pattern: Vec<Symbol>,
}

impl Traversal {
    /// `None` when `v` uses a letter that `w` lacks.
    fn new(v: &Word, w: &Word) -> Result<Option<Self>> {
        let sigma = w.alphabet_size().max(v.alphabet_size()) as usize;
        let mut in_w = vec![false; sigma + 1];
        for &c in w.symbols() {
            in_w[c as usize] = true;
        }
        if w.is_empty() || v.symbols().iter().any(|&c| !in_w[c as usize]) {
            return Ok(None);
        }
        // letters of v get ids 1..=k in increasing order, everything else is $
        let mut map = vec![0u32; sigma + 1];
        for &c in v.symbols() {
            map[c as usize] = 1;
        }
        let mut k = 0;
        for slot in map.iter_mut() {
            if *slot == 1 {
                k += 1;
                *slot = k;
            }
        }
        let dollar = k + 1;
        let relabeled: Vec<Symbol> = w
            .symbols()
            .iter()
            .map(|&c| {
                if map[c as usize] == 0 {
                    dollar
                } else {
                    map[c as usize]
                }
            })
            .collect();
        let index = build_circular_index(&Word::new(relabeled, dollar)?)?;
        let pattern = v.symbols().iter().map(|&c| map[c as usize]).collect();
        Ok(Some(Traversal { index, pattern }))
    }

    /// Smallest `ℓ` with `v ≤ u^ℓ` for the conjugate `u` starting at `r`.
    ///
    /// Greedy matching in `u^ω`: a wrap is counted whenever the next
    /// position is not after the current one relative to `r`. Comparing raw
    /// positions instead would miss a wrap that starts before `r` and ends at
    /// or after it.
    fn ell_from(&self, r: usize) -> usize {
        let n = self.index.len();
        let rel = |x: usize| (x + n - r) % n;
        let Some((&first, rest)) = self.pattern.split_first() else {
            return 1;
        };
        let mut cur = self.index.nextpos(r - 1, first).expect("letter occurs");
        let mut wraps = 0;
        for &a in rest {
            let next = self.index.nextpos(cur, a).expect("letter occurs");
            if rel(next) <= rel(cur) {
                wraps += 1;
            }
            cur = next;
        }
        wraps + 1
    }
}

/// Smallest `ℓ ≥ 1` with `v ≤ u^ℓ` where `u` is the minimal rotation of `w`;
/// `None` when some letter of `v` does not occur in `w`.
pub fn iterated_circular_match(v: &Word, w: &Word) -> Result<Option<usize>> {
    let Some(traversal) = Traversal::new(v, w)? else {
        return Ok(None);
    };
    let r = minimal_representation(w)?.rotation_offset;
    Ok(Some(traversal.ell_from(r)))
}

/// Smallest `ℓ ≥ 1` with `v ≤ u^ℓ` for the conjugate `u` starting at the
/// 1-based `offset`.
pub fn iterated_circular_match_from(v: &Word, w: &Word, offset: usize) -> Result<Option<usize>> {
    if offset == 0 || offset > w.len().max(1) {
        return Err(Error::PositionOutOfRange {
            t: offset,
            len: w.len(),
        });
    }
    Ok(Traversal::new(v, w)?.map(|t| t.ell_from(offset)))
}

/// Minimum of the iterated count over all conjugates, with the least offset
/// achieving it. `threads > 1` splits the offsets across a thread pool.
pub fn best_iterated_circular_match(
    v: &Word,
    w: &Word,
    threads: usize,
) -> Result<Option<(usize, usize)>> {
    let Some(traversal) = Traversal::new(v, w)? else {
        return Ok(None);
    };
    let n = w.len();
    let best = if threads > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .expect("thread pool");
        pool.install(|| {
            (1..=n)
                .into_par_iter()
                .map(|r| (traversal.ell_from(r), r))
                .min()
        })
    } else {
        (1..=n).map(|r| (traversal.ell_from(r), r)).min()
    };
    Ok(best)
}
