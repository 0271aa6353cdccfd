//! Words over integer alphabets, partial words, and window arithmetic.
//!
//! Symbols are 1-based: a word over an alphabet of size `σ` holds symbol ids
//! in `[1:σ]`. Positions handed to and returned from the public API are
//! 1-based as well; slices inside the crate are 0-based as usual.

use std::collections::HashMap;
use std::fmt;
use std::ops::RangeInclusive;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A symbol id in `[1:σ]`.
pub type Symbol = u32;

/// An immutable word over the integer alphabet `[1:alphabet_size]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Word {
    symbols: Vec<Symbol>,
    alphabet_size: u32,
}

impl Word {
    pub fn new(symbols: Vec<Symbol>, alphabet_size: u32) -> Result<Self> {
        if alphabet_size == 0 {
            return Err(Error::EmptyAlphabet);
        }
        if let Some((index, &symbol)) = symbols
            .iter()
            .enumerate()
            .find(|(_, &s)| s == 0 || s > alphabet_size)
        {
            return Err(Error::SymbolOutOfRange {
                symbol,
                index,
                alphabet_size,
            });
        }
        Ok(Word {
            symbols,
            alphabet_size,
        })
    }

    /// Builds a word from symbols, taking the largest symbol as the alphabet
    /// size (at least 1).
    pub fn from_symbols(symbols: Vec<Symbol>) -> Result<Self> {
        let sigma = symbols.iter().copied().max().unwrap_or(1).max(1);
        Word::new(symbols, sigma)
    }

    /// Maps `'a'..='z'` to `1..=26`. The alphabet is `[1:max letter]`, so
    /// `"abab"` lives over `{a,b}` and `"aaaa"` over `{a}`.
    ///
    /// Panics on characters outside `'a'..='z'`; meant for tests and examples.
    pub fn from_letters(s: &str) -> Self {
        let symbols: Vec<Symbol> = s
            .bytes()
            .map(|b| {
                assert!(
                    b.is_ascii_lowercase(),
                    "from_letters expects a-z, got {:?}",
                    b as char
                );
                (b - b'a' + 1) as Symbol
            })
            .collect();
        Word::from_symbols(symbols).expect("letters are in range")
    }

    pub fn empty(alphabet_size: u32) -> Self {
        Word {
            symbols: Vec::new(),
            alphabet_size: alphabet_size.max(1),
        }
    }

    /// Same symbols over a (possibly) larger alphabet.
    pub fn with_alphabet(&self, alphabet_size: u32) -> Result<Self> {
        Word::new(self.symbols.clone(), alphabet_size)
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    #[inline]
    pub fn alphabet_size(&self) -> u32 {
        self.alphabet_size
    }

    #[inline]
    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn into_symbols(self) -> Vec<Symbol> {
        self.symbols
    }

    /// 1-based access, `w[i]`.
    #[inline]
    pub fn at(&self, i: usize) -> Symbol {
        self.symbols[i - 1]
    }

    /// Number of occurrences of each symbol; index 0 is unused.
    pub fn counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.alphabet_size as usize + 1];
        for &s in &self.symbols {
            counts[s as usize] += 1;
        }
        counts
    }

    /// `alph(w)` as a sorted list of symbols.
    pub fn alph(&self) -> Vec<Symbol> {
        self.counts()
            .iter()
            .enumerate()
            .skip(1)
            .filter(|(_, &c)| c > 0)
            .map(|(s, _)| s as Symbol)
            .collect()
    }

    /// The factor `w[from:to]` with the clamping conventions: a start below 1
    /// is clamped to 1, an end past `|w|` to `|w|`, and an empty range gives ε.
    pub fn factor(&self, from: isize, to: isize) -> Word {
        let n = self.len() as isize;
        let lo = from.max(1);
        let hi = to.min(n);
        let symbols = if lo > hi {
            Vec::new()
        } else {
            self.symbols[(lo - 1) as usize..hi as usize].to_vec()
        };
        Word {
            symbols,
            alphabet_size: self.alphabet_size,
        }
    }

    /// The conjugate `w[i:n] w[1:i-1]` for a 1-based offset `i`.
    pub fn rotation(&self, offset: usize) -> Word {
        let n = self.len();
        let mut symbols = Vec::with_capacity(n);
        if n > 0 {
            let start = (offset - 1) % n;
            symbols.extend_from_slice(&self.symbols[start..]);
            symbols.extend_from_slice(&self.symbols[..start]);
        }
        Word {
            symbols,
            alphabet_size: self.alphabet_size,
        }
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut symbols = Vec::with_capacity(self.len() + other.len());
        symbols.extend_from_slice(&self.symbols);
        symbols.extend_from_slice(&other.symbols);
        Word {
            symbols,
            alphabet_size: self.alphabet_size.max(other.alphabet_size),
        }
    }

    pub fn power(&self, k: usize) -> Word {
        Word {
            symbols: self.symbols.repeat(k),
            alphabet_size: self.alphabet_size,
        }
    }

    /// `w` with its `i`-th letter (1-based) removed.
    pub fn delete_at(&self, i: usize) -> Word {
        let mut symbols = self.symbols.clone();
        symbols.remove(i - 1);
        Word {
            symbols,
            alphabet_size: self.alphabet_size,
        }
    }

    /// Renders symbols `1..=26` as `a..=z`, larger ids as `<id>`.
    pub fn to_letters(&self) -> String {
        let mut out = String::with_capacity(self.len());
        for &s in &self.symbols {
            if (1..=26).contains(&s) {
                out.push((b'a' + (s - 1) as u8) as char);
            } else {
                out.push_str(&format!("<{s}>"));
            }
        }
        out
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({:?}, σ={})", self.to_letters(), self.alphabet_size)
    }
}

/// Greedy left-to-right test of `u ≤ w` on raw symbol slices.
#[inline]
pub(crate) fn is_subsequence(u: &[Symbol], w: &[Symbol]) -> bool {
    let mut it = w.iter();
    u.iter().all(|c| it.any(|x| x == c))
}

/// `u ≤ w`: whether `u` is a subsequence of `w`.
pub fn classic_subsequence(u: &Word, w: &Word) -> bool {
    is_subsequence(u.symbols(), w.symbols())
}

/// The window of size `p` ending at position `t`, i.e. `w[t-p+1:t]` with the
/// start clamped to 1.
pub fn window_at(w: &Word, p: usize, t: usize) -> Result<Word> {
    if t == 0 || t > w.len() {
        return Err(Error::PositionOutOfRange { t, len: w.len() });
    }
    if p == 0 {
        return Err(Error::InvalidInstance(
            "window size must be at least 1".into(),
        ));
    }
    Ok(w.factor(t as isize - p as isize + 1, t as isize))
}

/// Window size actually used for a text of length `n`: windows larger than
/// the text collapse to the whole text.
#[inline]
pub fn effective_window(n: usize, p: usize) -> usize {
    p.min(n)
}

/// End positions `t` of all windows of size `p` in a text of length `n`,
/// after clamping `p` to `n`.
#[inline]
pub fn window_ends(n: usize, p: usize) -> RangeInclusive<usize> {
    effective_window(n, p)..=n
}

/// A pattern together with the window size it is sought in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WindowQuery {
    pattern: Word,
    window: usize,
}

impl WindowQuery {
    pub fn new(pattern: Word, window: usize) -> Result<Self> {
        if pattern.len() > window {
            return Err(Error::PatternLongerThanWindow {
                pattern_len: pattern.len(),
                window,
            });
        }
        Ok(WindowQuery { pattern, window })
    }

    pub fn pattern(&self) -> &Word {
        &self.pattern
    }

    pub fn window(&self) -> usize {
        self.window
    }
}

/// Per-window verdicts of a bounded-range query.
///
/// `per_window[k]` is the verdict for the window ending at `t = p + k`, where
/// `p` is the effective window size. `first_hit` is the 1-based start of the
/// earliest matching window.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatchReport {
    pub window: usize,
    pub per_window: Vec<bool>,
    pub first_hit: Option<usize>,
    pub found: bool,
}

impl MatchReport {
    pub fn from_windows(window: usize, per_window: Vec<bool>) -> Self {
        let first_hit = per_window.iter().position(|&b| b).map(|k| k + 1);
        MatchReport {
            window,
            found: first_hit.is_some(),
            per_window,
            first_hit,
        }
    }

    /// Verdict for the window ending at 1-based position `t`, if such a
    /// window exists.
    pub fn at_end(&self, t: usize) -> Option<bool> {
        t.checked_sub(self.window)
            .and_then(|k| self.per_window.get(k).copied())
    }
}

/// One cell of a binary partial word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Cell {
    Zero,
    One,
    Wildcard,
}

impl Cell {
    pub fn from_char(c: char) -> Result<Self> {
        match c {
            '0' => Ok(Cell::Zero),
            '1' => Ok(Cell::One),
            '*' | '?' | '◊' | '_' => Ok(Cell::Wildcard),
            other => Err(Error::InvalidCell(other)),
        }
    }

    pub fn to_char(self) -> char {
        match self {
            Cell::Zero => '0',
            Cell::One => '1',
            Cell::Wildcard => '*',
        }
    }

    /// Whether the full letter `bit` is contained in this cell.
    #[inline]
    pub fn admits(self, bit: bool) -> bool {
        match self {
            Cell::Zero => !bit,
            Cell::One => bit,
            Cell::Wildcard => true,
        }
    }
}

/// A word over `{0, 1, ◊}`. Serialized as a string such as `"0*1"`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct PartialWord {
    cells: Vec<Cell>,
}

impl PartialWord {
    pub fn new(cells: Vec<Cell>) -> Self {
        PartialWord { cells }
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Whether the full binary word `bits` is compatible with this partial
    /// word (equivalently, contained in it).
    pub fn is_compatible_with(&self, bits: &[bool]) -> bool {
        self.cells.len() == bits.len() && self.cells.iter().zip(bits).all(|(c, &b)| c.admits(b))
    }
}

impl std::str::FromStr for PartialWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(Cell::from_char)
            .collect::<Result<Vec<_>>>()
            .map(PartialWord::new)
    }
}

impl TryFrom<String> for PartialWord {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<PartialWord> for String {
    fn from(pw: PartialWord) -> String {
        pw.to_string()
    }
}

impl fmt::Display for PartialWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.cells
            .iter()
            .try_for_each(|c| write!(f, "{}", c.to_char()))
    }
}

impl fmt::Debug for PartialWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PartialWord({self})")
    }
}

/// Byte-to-symbol mapping for text input, in first-appearance order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymbolTable {
    bytes: Vec<u8>,
    #[serde(skip)]
    index: HashMap<u8, Symbol>,
}

impl SymbolTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// Id of `b`, assigning the next free id on first sight.
    pub fn intern(&mut self, b: u8) -> Symbol {
        if let Some(&s) = self.index.get(&b) {
            return s;
        }
        self.bytes.push(b);
        let s = self.bytes.len() as Symbol;
        self.index.insert(b, s);
        s
    }

    pub fn get(&self, b: u8) -> Option<Symbol> {
        self.index.get(&b).copied()
    }

    pub fn byte_of(&self, s: Symbol) -> Option<u8> {
        self.bytes.get((s as usize).checked_sub(1)?).copied()
    }

    pub fn len(&self) -> usize {
        self.bytes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bytes.is_empty()
    }

    /// Bytes in id order: `bytes()[s-1]` has id `s`.
    pub fn bytes(&self) -> &[u8] {
        &self.bytes
    }

    pub fn intern_all(&mut self, text: &[u8]) -> Vec<Symbol> {
        text.iter().map(|&b| self.intern(b)).collect()
    }

    pub fn render(&self, w: &Word) -> String {
        w.symbols()
            .iter()
            .map(|&s| match self.byte_of(s) {
                Some(b) => (b as char).to_string(),
                None => format!("<{s}>"),
            })
            .collect()
    }
}
