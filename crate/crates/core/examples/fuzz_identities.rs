//! Random words and the arithmetic every level profile obeys.
//!
//!     cargo run --release --example fuzz_identities [count] [seed]

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thinpos::random::{random_word, WordParams};
use thinpos::{bridge_count, trunk_embedding, LevelProfile};

fn main() {
    let mut args = std::env::args().skip(1);
    let count: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(10_000);
    let seed: u64 = args.next().and_then(|s| s.parse().ok()).unwrap_or(1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let params = WordParams { max_strands: 12, target_len: 30, ..WordParams::default() };
    let (mut tightest, mut example) = (0.0f64, String::new());
    for _ in 0..count {
        let w = random_word(&mut rng, &params);
        let p = LevelProfile::of(&w);
        let sq: usize = p.thick().iter().map(|x| x * x).sum::<usize>() - p.thin().iter().map(|x| x * x).sum::<usize>();
        assert_eq!(2 * p.width(), sq, "{}", w);
        let ratio = trunk_embedding(&w) as f64 / (2 * bridge_count(&w)) as f64;
        assert!(ratio <= 1.0);
        if ratio > tightest && !p.thin().is_empty() {
            tightest = ratio;
            example = w.to_string();
        }
    }
    println!("{} words: width identity and trunk <= 2 bridge hold", count);
    println!("closest non-bridge word to the bound ({:.3}): {}", tightest, example);
}
