//! Naive reference implementations, written straight from the definitions.
//!
//! Nothing here calls into the matcher, the pMAS scanner, the circular
//! module or the reductions; the only shared items are plain data types.

use crate::circular::MinimalRepresentation;
use crate::error::{Error, Result};
use crate::reductions::OvInstance;
use crate::word::{Cell, MatchReport, PartialWord, Symbol, Word};

/// Longest text `oracle_p_match` accepts.
pub const ORACLE_TEXT_BOUND: usize = 10_000;

/// Two-pointer greedy subsequence test.
pub fn greedy_subsequence(u: &[Symbol], w: &[Symbol]) -> bool {
    let mut i = 0;
    for &c in w {
        if i < u.len() && u[i] == c {
            i += 1;
        }
    }
    i == u.len()
}

/// Tries every strictly increasing index tuple. Exponential; used only to
/// validate [`greedy_subsequence`] on tiny inputs.
pub fn tuple_subsequence(u: &[Symbol], w: &[Symbol]) -> bool {
    fn go(u: &[Symbol], w: &[Symbol], from: usize) -> bool {
        match u.split_first() {
            None => true,
            Some((&c, rest)) => (from..w.len()).any(|j| w[j] == c && go(rest, w, j + 1)),
        }
    }
    go(u, w, 0)
}

/// Checks every window `w[t-p+1:t]` separately.
pub fn oracle_p_match(u: &Word, w: &Word, p: usize) -> Result<MatchReport> {
    let n = w.len();
    if n > ORACLE_TEXT_BOUND {
        return Err(Error::BudgetExceeded {
            what: "text letters",
            required: n as u128,
            budget: ORACLE_TEXT_BOUND as u128,
        });
    }
    let pe = p.min(n);
    let text = w.symbols();
    let per_window = (pe..=n)
        .map(|t| greedy_subsequence(u.symbols(), &text[t - pe..t]))
        .collect();
    Ok(MatchReport::from_windows(pe, per_window))
}

fn occurs_in_some_window(u: &[Symbol], text: &[Symbol], p: usize) -> bool {
    let pe = p.min(text.len());
    (pe..=text.len()).any(|t| greedy_subsequence(u, &text[t - pe..t]))
}

/// `v` is absent from every window while each single-letter deletion of `v`
/// is present in some window.
pub fn oracle_pmas(v: &Word, w: &Word, p: usize) -> bool {
    let (v, text) = (v.symbols(), w.symbols());
    if v.is_empty() || occurs_in_some_window(v, text, p) {
        return false;
    }
    (0..v.len()).all(|i| {
        let mut d = v.to_vec();
        d.remove(i);
        occurs_in_some_window(&d, text, p)
    })
}

/// Whether some `a ∈ A`, `b ∈ B` have `a[i]·b[i] = 0` for every `i`.
pub fn oracle_ov(inst: &OvInstance) -> bool {
    inst.set_a.iter().any(|a| {
        inst.set_b
            .iter()
            .any(|b| a.iter().zip(b).all(|(&x, &y)| !(x && y)))
    })
}

/// The lexicographically least `x ∈ {0,1}^L` compatible with no member of
/// `s`, by enumeration of all `2^L` words.
pub fn oracle_partial_words(
    s: &[PartialWord],
    len: usize,
    budget: u128,
) -> Result<Option<Vec<bool>>> {
    let required = 1u128.checked_shl(len as u32).unwrap_or(u128::MAX);
    if len >= 64 || required > budget {
        return Err(Error::BudgetExceeded {
            what: "binary words",
            required,
            budget,
        });
    }
    for pw in s {
        if pw.len() != len {
            return Err(Error::LengthMismatch {
                expected: len,
                found: pw.len(),
            });
        }
    }
    for code in 0..(1u64 << len) {
        let x: Vec<bool> = (0..len).map(|j| code >> (len - 1 - j) & 1 == 1).collect();
        let hits_one = s.iter().any(|pw| {
            pw.cells().iter().zip(&x).all(|(&c, &bit)| match c {
                Cell::Wildcard => true,
                Cell::Zero => !bit,
                Cell::One => bit,
            })
        });
        if !hits_one {
            return Ok(Some(x));
        }
    }
    Ok(None)
}

/// Tries every conjugate and every root length; `O(n³)`.
pub fn oracle_min_rep(w: &Word) -> Result<MinimalRepresentation> {
    let n = w.len();
    if n == 0 {
        return Err(Error::EmptyWord);
    }
    let text = w.symbols();
    let mut best: Option<(usize, Vec<Symbol>, usize)> = None;
    for i in 0..n {
        let conj: Vec<Symbol> = text[i..].iter().chain(&text[..i]).copied().collect();
        for q in 1..=n {
            if (q..n).all(|x| conj[x] == conj[x - q]) {
                let cand = (q, conj[..q].to_vec(), i + 1);
                if best.as_ref().is_none_or(|b| cand < *b) {
                    best = Some(cand);
                }
                break;
            }
        }
    }
    let (_, root, offset) = best.expect("n >= 1");
    Ok(MinimalRepresentation {
        root: Word::new(root, w.alphabet_size())?,
        total_len: n,
        rotation_offset: offset,
    })
}
