//! Workload generators shared by the criterion benches.

use attractors::RemappedText;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// Uniform random text of length `n` over `sigma` symbols.
pub fn random_text(n: usize, sigma: u64, seed: u64) -> RemappedText {
    let mut rng = StdRng::seed_from_u64(seed);
    let raw: Vec<u64> = (0..n).map(|_| rng.gen_range(0..sigma)).collect();
    RemappedText::from_symbols(&raw).expect("n > 0")
}

/// Prefix of the Fibonacci word. Highly repetitive: two positions attract it.
pub fn fibonacci_text(n: usize) -> RemappedText {
    let (mut a, mut b) = (vec![0u64], vec![0u64, 1]);
    while b.len() < n {
        let next = [b.as_slice(), a.as_slice()].concat();
        a = b;
        b = next;
    }
    b.truncate(n);
    RemappedText::from_symbols(&b).expect("n > 0")
}
