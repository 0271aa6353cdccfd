//! Instance generators for the hardness reductions.
//!
//! Every constructor returns the target instance together with its source
//! and the closed-form sizes it was checked against. Gadget letters use fixed
//! ids: `0 → 1`, `1 → 2`, `# → 3`, `[ → 4`, `] → 5`; the fresh letter `$` of
//! the pMAS reductions is `σ + 1`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::word::{Cell, PartialWord, Symbol, Word};

pub const ZERO: Symbol = 1;
pub const ONE: Symbol = 2;
pub const HASH: Symbol = 3;
pub const OPEN: Symbol = 4;
pub const CLOSE: Symbol = 5;

/// Two sets of Boolean vectors of one common dimension.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OvInstance {
    pub set_a: Vec<Vec<bool>>,
    pub set_b: Vec<Vec<bool>>,
}

impl OvInstance {
    /// Both sets nonempty and of equal size, all vectors of one dimension
    /// `d ≥ 1`.
    pub fn new(set_a: Vec<Vec<bool>>, set_b: Vec<Vec<bool>>) -> Result<Self> {
        let inst = OvInstance { set_a, set_b };
        inst.validate()?;
        Ok(inst)
    }

    pub fn validate(&self) -> Result<()> {
        let d = self.set_a.first().map_or(0, Vec::len);
        let same_dim = self.set_a.iter().chain(&self.set_b).all(|v| v.len() == d);
        if d == 0 || self.set_a.len() != self.set_b.len() || !same_dim {
            return Err(Error::MalformedOvInstance);
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.set_a.len()
    }

    pub fn dim(&self) -> usize {
        self.set_a[0].len()
    }
}

/// A CNF formula over variables `1..=num_vars`; literal `-j` is `¬x_j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cnf {
    pub num_vars: u32,
    pub clauses: Vec<Vec<i32>>,
}

/// A set of partial words of common length `len`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartialWordSet {
    pub len: usize,
    pub words: Vec<PartialWord>,
}

impl PartialWordSet {
    pub fn new(len: usize, words: Vec<PartialWord>) -> Result<Self> {
        if len == 0 {
            return Err(Error::InvalidInstance(
                "partial words must have length >= 1".into(),
            ));
        }
        if let Some(pw) = words.iter().find(|pw| pw.len() != len) {
            return Err(Error::LengthMismatch {
                expected: len,
                found: pw.len(),
            });
        }
        Ok(PartialWordSet { len, words })
    }
}

/// A `pSubSeqMatch` instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatchInstance {
    pub pattern: Word,
    pub text: Word,
    pub window: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ReductionKind {
    OvToMatch,
    Sat3ToPw,
    PwToKpNonUniv,
    KpNonUnivToKpNonEquiv,
    PwToPsas,
    MatchToPmas,
    MatchToPmasStream,
}

impl ReductionKind {
    pub const ALL: [ReductionKind; 7] = [
        ReductionKind::OvToMatch,
        ReductionKind::Sat3ToPw,
        ReductionKind::PwToKpNonUniv,
        ReductionKind::KpNonUnivToKpNonEquiv,
        ReductionKind::PwToPsas,
        ReductionKind::MatchToPmas,
        ReductionKind::MatchToPmasStream,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ReductionKind::OvToMatch => "ov_to_match",
            ReductionKind::Sat3ToPw => "sat3_to_pw",
            ReductionKind::PwToKpNonUniv => "pw_to_kp_non_univ",
            ReductionKind::KpNonUnivToKpNonEquiv => "kp_non_univ_to_kp_non_equiv",
            ReductionKind::PwToPsas => "pw_to_psas",
            ReductionKind::MatchToPmas => "match_to_pmas",
            ReductionKind::MatchToPmasStream => "match_to_pmas_stream",
        }
    }
}

impl std::str::FromStr for ReductionKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ReductionKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::InvalidInstance(format!("unknown reduction kind {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Source {
    Ov(OvInstance),
    Cnf(Cnf),
    PartialWords(PartialWordSet),
    Match(MatchInstance),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Payload {
    /// Is `pattern` a `window`-subsequence of `text`?
    Match(MatchInstance),
    PartialWords(PartialWordSet),
    /// Is `Subseq^p_k(text) ≠ Σ^k`?
    NonUniv {
        text: Word,
        k: usize,
        p: usize,
    },
    /// Is `Subseq^p_k(text) ≠ Subseq^p_k(other)`?
    NonEquiv {
        text: Word,
        other: Word,
        k: usize,
        p: usize,
    },
    /// Is `pattern` a pSAS of `text`?
    Psas {
        pattern: Word,
        text: Word,
        p: usize,
    },
    /// Is `pattern` a pMAS of `text`?
    Pmas {
        pattern: Word,
        text: Word,
        p: usize,
    },
}

/// A closed-form size the construction was checked against.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SizeCheck {
    pub quantity: String,
    pub formula: String,
    pub expected: usize,
    pub actual: usize,
}

impl SizeCheck {
    fn new(quantity: &str, formula: &str, expected: usize, actual: usize) -> Self {
        assert_eq!(expected, actual, "{quantity} = {formula}");
        SizeCheck {
            quantity: quantity.into(),
            formula: formula.into(),
            expected,
            actual,
        }
    }

    pub fn holds(&self) -> bool {
        self.expected == self.actual
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionInstance {
    pub kind: ReductionKind,
    pub source: Source,
    pub payload: Payload,
    pub size_checks: Vec<SizeCheck>,
}

fn gadget_word(symbols: Vec<Symbol>, sigma: u32) -> Word {
    Word::new(symbols, sigma).expect("gadget letters are in range")
}

/// `ψ_A(a)`: `01#` for a 0 entry, `00#` for a 1 entry.
pub fn psi_a(a: &[bool]) -> Vec<Symbol> {
    a.iter()
        .flat_map(|&x| {
            if x {
                [ZERO, ZERO, HASH]
            } else {
                [ZERO, ONE, HASH]
            }
        })
        .collect()
}

/// `ψ_B(b)`: the entry followed by `#`.
pub fn psi_b(b: &[bool]) -> Vec<Symbol> {
    b.iter()
        .flat_map(|&y| [if y { ONE } else { ZERO }, HASH])
        .collect()
}

fn bracket(out: &mut Vec<Symbol>, body: Vec<Symbol>) {
    out.push(OPEN);
    out.extend(body);
    out.push(CLOSE);
}

/// Orthogonal vectors to `pSubSeqMatch`: `u = U`, `w = W²`, `p = |W|` with
///
/// `W = [1][0][a_1][0][a_2][0] … [a_n][0][1]` (blocks encoded by `ψ_A`),
/// `U = [1][b_1] … [b_n][1]` (blocks encoded by `ψ_B`).
///
/// `U ≤_p W²` iff some `a_i`, `b_j` are orthogonal.
pub fn ov_to_match(inst: &OvInstance) -> Result<ReductionInstance> {
    inst.validate()?;
    let (n, d) = (inst.n(), inst.dim());
    let ones = vec![true; d];
    let zeros = vec![false; d];

    let mut big_w = Vec::new();
    bracket(&mut big_w, psi_a(&ones));
    bracket(&mut big_w, psi_a(&zeros));
    for a in &inst.set_a {
        bracket(&mut big_w, psi_a(a));
        bracket(&mut big_w, psi_a(&zeros));
    }
    bracket(&mut big_w, psi_a(&ones));

    let mut big_u = Vec::new();
    bracket(&mut big_u, psi_b(&ones));
    for b in &inst.set_b {
        bracket(&mut big_u, psi_b(b));
    }
    bracket(&mut big_u, psi_b(&ones));

    let size_checks = vec![
        SizeCheck::new(
            "|W|",
            "(2n+3)(3d+2)",
            (2 * n + 3) * (3 * d + 2),
            big_w.len(),
        ),
        SizeCheck::new("|U|", "(n+2)(2d+2)", (n + 2) * (2 * d + 2), big_u.len()),
    ];
    let p = big_w.len();
    let text = gadget_word(big_w.repeat(2), CLOSE);
    Ok(ReductionInstance {
        kind: ReductionKind::OvToMatch,
        source: Source::Ov(inst.clone()),
        payload: Payload::Match(MatchInstance {
            pattern: gadget_word(big_u, CLOSE),
            text,
            window: p,
        }),
        size_checks,
    })
}

/// CNF satisfiability to partial-word non-universality: clause `c_i` becomes
/// the partial word describing the assignments falsifying it (1 where `¬c_i`
/// holds `x_j`, 0 where it holds `¬x_j`, ◊ elsewhere). The formula is
/// satisfiable iff some full word is compatible with none of them. Clauses of
/// any size are accepted; the construction does not depend on the size.
pub fn sat3_to_partial_words(cnf: &Cnf) -> Result<ReductionInstance> {
    if cnf.num_vars == 0 {
        return Err(Error::InvalidInstance(
            "formula needs at least one variable".into(),
        ));
    }
    let len = cnf.num_vars as usize;
    let mut words = Vec::with_capacity(cnf.clauses.len());
    for (ci, clause) in cnf.clauses.iter().enumerate() {
        let mut cells = vec![Cell::Wildcard; len];
        for &lit in clause {
            let var = lit.unsigned_abs();
            if var == 0 || var > cnf.num_vars {
                return Err(Error::VariableOutOfRange {
                    clause: ci + 1,
                    var,
                    num_vars: cnf.num_vars,
                });
            }
            // the literal is false in ¬c_i
            let cell = if lit > 0 { Cell::Zero } else { Cell::One };
            let slot = &mut cells[var as usize - 1];
            match *slot {
                Cell::Wildcard => *slot = cell,
                existing if existing != cell => {
                    return Err(Error::TautologicalClause {
                        clause: ci + 1,
                        var,
                    });
                }
                _ => {}
            }
        }
        words.push(PartialWord::new(cells));
    }
    let count = words.len();
    Ok(ReductionInstance {
        kind: ReductionKind::Sat3ToPw,
        source: Source::Cnf(cnf.clone()),
        payload: Payload::PartialWords(PartialWordSet { len, words }),
        size_checks: vec![
            SizeCheck::new("L", "number of variables", len, len),
            SizeCheck::new("|S|", "number of clauses", cnf.clauses.len(), count),
        ],
    })
}

/// Which word pair to build for the partial-word reductions.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum KpGadget {
    /// `V = (01)^{2L}`-blocks between `#^{2L}` runs, placed after `U`; every
    /// length-`2L` word except `a_1#…a_L#` occurs in a window of `V`.
    #[default]
    Sound,
    /// `V = #^{2L}(001101#^{2L})^{L-1}` before `U`.
    /// Not sound: `V` misses words such as `0^{2L}`, so every instance is
    /// non-universal.
    Literal,
}

/// The words shared by the three partial-word reductions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KpConstruction {
    /// Non-universal iff the source has a witness.
    pub w: Word,
    /// Always `2L`-universal (for the sound gadget).
    pub w_prime: Word,
    /// `(0#)^L 0`, absent from every window of `w`.
    pub v: Word,
    pub k: usize,
    pub p: usize,
    pub size_checks: Vec<SizeCheck>,
}

/// `u_i`: `0#`, `1#` or `01#` per cell.
fn cell_gadgets(pw: &PartialWord) -> Vec<Symbol> {
    let mut out = Vec::new();
    for &c in pw.cells() {
        match c {
            Cell::Zero => out.extend([ZERO, HASH]),
            Cell::One => out.extend([ONE, HASH]),
            Cell::Wildcard => out.extend([ZERO, ONE, HASH]),
        }
    }
    out
}

fn hashes(k: usize) -> Vec<Symbol> {
    vec![HASH; k]
}

pub fn build_kp_construction(s: &PartialWordSet, gadget: KpGadget) -> Result<KpConstruction> {
    let s = PartialWordSet::new(s.len, s.words.clone())?;
    let l = s.len;
    let gadgets: Vec<Vec<Symbol>> = s.words.iter().map(cell_gadgets).collect();
    let gadget_total: usize = gadgets.iter().map(Vec::len).sum();
    let mut v = Vec::with_capacity(2 * l + 1);
    for _ in 0..l {
        v.extend([ZERO, HASH]);
    }
    v.push(ZERO);
    let binary_hash: Vec<Symbol> = [ZERO, ONE, HASH].repeat(l);
    let k_words = s.words.len();

    let isolated = |sep: &[Symbol]| {
        let mut u = sep.to_vec();
        for g in &gadgets {
            u.extend(g);
            u.extend(sep);
        }
        u
    };

    let (w, w_prime, p, size_checks) = match gadget {
        KpGadget::Sound => {
            let block = [ZERO, ONE].repeat(2 * l);
            let mut vv = hashes(2 * l);
            for _ in 1..l {
                vv.extend(&block);
                vv.extend(hashes(2 * l));
            }
            vv.extend(&block);
            let p = vv.len();
            let sep = hashes(p);
            let u = isolated(&sep);
            let mut w = u.clone();
            w.extend(&vv);
            let mut w_prime = sep.clone();
            w_prime.extend(&binary_hash);
            w_prime.extend(&sep);
            w_prime.extend(&vv);
            let checks = vec![
                SizeCheck::new("|V|", "6L^2", 6 * l * l, p),
                SizeCheck::new(
                    "|U|",
                    "(|S|+1)|V| + sum |u_i|",
                    (k_words + 1) * p + gadget_total,
                    u.len(),
                ),
                SizeCheck::new("|W|", "|U| + |V|", u.len() + p, w.len()),
                SizeCheck::new("|W'|", "3|V| + 3L", 3 * p + 3 * l, w_prime.len()),
            ];
            (w, w_prime, p, checks)
        }
        KpGadget::Literal => {
            let mut vv = hashes(2 * l);
            for _ in 1..l {
                vv.extend([ZERO, ZERO, ONE, ONE, ZERO, ONE]);
                vv.extend(hashes(2 * l));
            }
            let p = vv.len();
            let sep = hashes(4 * l * l);
            let u = isolated(&sep);
            let mut w = vv.clone();
            w.extend(&u);
            let mut w_prime = vv.clone();
            w_prime.extend(&sep);
            w_prime.extend(&binary_hash);
            w_prime.extend(&sep);
            let checks = vec![
                SizeCheck::new("|V|", "2L^2 + 6L - 6", 2 * l * l + 6 * l - 6, p),
                SizeCheck::new(
                    "|U|",
                    "(|S|+1)4L^2 + sum |u_i|",
                    (k_words + 1) * 4 * l * l + gadget_total,
                    u.len(),
                ),
                SizeCheck::new("|W|", "|V| + |U|", p + u.len(), w.len()),
                SizeCheck::new(
                    "|W'|",
                    "|V| + 8L^2 + 3L",
                    p + 8 * l * l + 3 * l,
                    w_prime.len(),
                ),
            ];
            (w, w_prime, p, checks)
        }
    };
    Ok(KpConstruction {
        w: gadget_word(w, HASH),
        w_prime: gadget_word(w_prime, HASH),
        v: gadget_word(v, HASH),
        k: 2 * l,
        p,
        size_checks,
    })
}

/// Partial-word non-universality to `kpNonUniv` on `(W, 2L, |V|)`.
pub fn partial_words_to_kp_non_univ(
    s: &PartialWordSet,
    gadget: KpGadget,
) -> Result<ReductionInstance> {
    let c = build_kp_construction(s, gadget)?;
    Ok(ReductionInstance {
        kind: ReductionKind::PwToKpNonUniv,
        source: Source::PartialWords(s.clone()),
        payload: Payload::NonUniv {
            text: c.w,
            k: c.k,
            p: c.p,
        },
        size_checks: c.size_checks,
    })
}

/// Adds the always-universal companion `W'`: the sets of `W` and `W'`
/// differ iff `W` is not universal.
pub fn kp_non_univ_to_kp_non_equiv(
    s: &PartialWordSet,
    gadget: KpGadget,
) -> Result<ReductionInstance> {
    let c = build_kp_construction(s, gadget)?;
    Ok(ReductionInstance {
        kind: ReductionKind::KpNonUnivToKpNonEquiv,
        source: Source::PartialWords(s.clone()),
        payload: Payload::NonEquiv {
            text: c.w,
            other: c.w_prime,
            k: c.k,
            p: c.p,
        },
        size_checks: c.size_checks,
    })
}

/// `v = (0#)^L 0` is a pSAS of `W` iff `W` is `2L`-universal, i.e. iff the
/// source has no witness.
pub fn psas_instance_from_partial_words(
    s: &PartialWordSet,
    gadget: KpGadget,
) -> Result<ReductionInstance> {
    let c = build_kp_construction(s, gadget)?;
    let mut size_checks = c.size_checks;
    size_checks.push(SizeCheck::new("|v|", "2L + 1", c.k + 1, c.v.len()));
    Ok(ReductionInstance {
        kind: ReductionKind::PwToPsas,
        source: Source::PartialWords(s.clone()),
        payload: Payload::Psas {
            pattern: c.v,
            text: c.w,
            p: c.p,
        },
        size_checks,
    })
}

fn check_match_source(u: &Word, p: usize) -> Result<()> {
    if u.is_empty() {
        return Err(Error::EmptyWord);
    }
    if u.len() > p {
        return Err(Error::PatternLongerThanWindow {
            pattern_len: u.len(),
            window: p,
        });
    }
    Ok(())
}

/// `pSubSeqMatch` to pMAS: `w' = φ(w) $^{3p₀σ} u_1 … u_{m-1}` with
/// `φ(a) = a $^{σ-1}` and `u_i` a permutation of the alphabet ending in
/// `u[i]` (other letters increasing), window `p₀σ`. Then `u` is a pMAS of
/// `w'` iff `u` is not a `p₀`-subsequence of `w`.
pub fn match_to_pmas(u: &Word, w: &Word, p0: usize) -> Result<ReductionInstance> {
    check_match_source(u, p0)?;
    let sigma = u.alphabet_size().max(w.alphabet_size());
    let s = sigma as usize;
    let dollar = sigma + 1;
    let (n, m) = (w.len(), u.len());
    let mut text = Vec::with_capacity(s * n + 3 * p0 * s + s * (m - 1));
    for &a in w.symbols() {
        text.push(a);
        text.extend(std::iter::repeat_n(dollar, s - 1));
    }
    text.extend(std::iter::repeat_n(dollar, 3 * p0 * s));
    for &last in &u.symbols()[..m - 1] {
        text.extend((1..=sigma).filter(|&a| a != last));
        text.push(last);
    }
    let size_checks = vec![SizeCheck::new(
        "|w'|",
        "σ|w| + 3p₀σ + σ(m-1)",
        s * n + 3 * p0 * s + s * (m - 1),
        text.len(),
    )];
    Ok(ReductionInstance {
        kind: ReductionKind::MatchToPmas,
        source: Source::Match(MatchInstance {
            pattern: u.clone(),
            text: w.clone(),
            window: p0,
        }),
        payload: Payload::Pmas {
            pattern: u.with_alphabet(dollar)?,
            text: gadget_word(text, dollar),
            p: p0 * s,
        },
        size_checks,
    })
}

/// The streaming variant: `v = w $^{p+1} u_1 $^{p+1} u_2 … $^{p+1} u_m` with
/// `u_i` = `u` minus its `i`-th letter, same window. Then `u` is a pMAS of `v`
/// iff `u` is `p`-absent from `w`.
pub fn match_to_pmas_stream(u: &Word, w: &Word, p: usize) -> Result<ReductionInstance> {
    check_match_source(u, p)?;
    let sigma = u.alphabet_size().max(w.alphabet_size());
    let dollar = sigma + 1;
    let (n, m) = (w.len(), u.len());
    let mut text = w.symbols().to_vec();
    for i in 0..m {
        text.extend(std::iter::repeat_n(dollar, p + 1));
        text.extend(
            u.symbols()
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, &c)| c),
        );
    }
    let size_checks = vec![SizeCheck::new(
        "|v|",
        "|w| + m(p+1) + m(m-1)",
        n + m * (p + 1) + m * (m - 1),
        text.len(),
    )];
    Ok(ReductionInstance {
        kind: ReductionKind::MatchToPmasStream,
        source: Source::Match(MatchInstance {
            pattern: u.clone(),
            text: w.clone(),
            window: p,
        }),
        payload: Payload::Pmas {
            pattern: u.with_alphabet(dollar)?,
            text: gadget_word(text, dollar),
            p,
        },
        size_checks,
    })
}

/// Builds the reduction of `kind` from a matching source.
pub fn reduce(kind: ReductionKind, source: &Source, gadget: KpGadget) -> Result<ReductionInstance> {
    let mismatch =
        || Error::InvalidInstance(format!("{} needs a different source type", kind.name()));
    match (kind, source) {
        (ReductionKind::OvToMatch, Source::Ov(inst)) => ov_to_match(inst),
        (ReductionKind::Sat3ToPw, Source::Cnf(cnf)) => sat3_to_partial_words(cnf),
        (ReductionKind::PwToKpNonUniv, Source::PartialWords(s)) => {
            partial_words_to_kp_non_univ(s, gadget)
        }
        (ReductionKind::KpNonUnivToKpNonEquiv, Source::PartialWords(s)) => {
            kp_non_univ_to_kp_non_equiv(s, gadget)
        }
        (ReductionKind::PwToPsas, Source::PartialWords(s)) => {
            psas_instance_from_partial_words(s, gadget)
        }
        (ReductionKind::MatchToPmas, Source::Match(mi)) => {
            match_to_pmas(&mi.pattern, &mi.text, mi.window)
        }
        (ReductionKind::MatchToPmasStream, Source::Match(mi)) => {
            match_to_pmas_stream(&mi.pattern, &mi.text, mi.window)
        }
        _ => Err(mismatch()),
    }
}
