//! Seeded inputs shared by the benchmarks.

use bounded_subseq::Word;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// A uniformly random word of length `n` over `[1:sigma]`.
pub fn random_word(n: usize, sigma: u32, seed: u64) -> Word {
    let mut rng = StdRng::seed_from_u64(seed);
    let symbols = (0..n).map(|_| rng.gen_range(1..=sigma)).collect();
    Word::new(symbols, sigma).expect("symbols drawn from the alphabet")
}
