//! Random valid words, for fuzzing and property tests.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::dsu::DisjointSets;
use crate::word::{MorseEvent, MorseWord, Sign};

#[derive(Debug, Clone)]
pub struct WordParams {
    /// Largest strand count any level may reach (at least 2).
    pub max_strands: usize,
    /// Length to aim for before closing up; the word ends once every strand is capped.
    pub target_len: usize,
    pub max_crossings: usize,
    /// All cups come before all caps.
    pub bridge: bool,
    /// Caps anywhere, so the result may be a link.
    pub allow_links: bool,
}

impl Default for WordParams {
    fn default() -> Self {
        WordParams { max_strands: 8, target_len: 16, max_crossings: 8, bridge: false, allow_links: false }
    }
}

/// A random valid word. Unless `allow_links` is set it presents a knot:
/// caps only ever join strands from different arcs until the last one.
pub fn random_word<R: Rng + ?Sized>(rng: &mut R, params: &WordParams) -> MorseWord {
    let max_strands = params.max_strands.max(2);
    let mut events = Vec::new();
    let mut level: Vec<usize> = Vec::new();
    let mut arcs = DisjointSets::new(params.target_len + max_strands + 2);
    let mut next_arc = 0;
    let mut crossings = 0;
    let mut falling = false;

    loop {
        let n = level.len();
        if n == 0 && !events.is_empty() {
            break;
        }
        let long_enough = events.len() >= params.target_len;
        let can_cup = n + 2 <= max_strands && !long_enough && !(params.bridge && falling);
        let can_cross = n >= 2 && crossings < params.max_crossings && !long_enough;
        let can_cap = n >= 4 || (n == 2 && (long_enough || (!can_cup && !can_cross)));
        let mut options = Vec::new();
        if can_cup || n == 0 {
            options.push(0);
        }
        if can_cross {
            options.extend([1, 1]);
        }
        if can_cap {
            options.push(2);
        }
        match *options.choose(rng).unwrap() {
            0 => {
                let i = rng.gen_range(0..=n);
                level.splice(i..i, [next_arc, next_arc]);
                next_arc += 1;
                events.push(MorseEvent::Cup(i + 1));
            }
            1 => {
                let i = rng.gen_range(0..n - 1);
                level.swap(i, i + 1);
                let sign = if rng.gen_bool(0.5) { Sign::Pos } else { Sign::Neg };
                events.push(MorseEvent::Cross(i + 1, sign));
                crossings += 1;
            }
            _ => {
                let i = if n == 2 {
                    0
                } else if params.allow_links {
                    rng.gen_range(0..n - 1)
                } else {
                    let ok: Vec<usize> =
                        (0..n - 1).filter(|&i| arcs.find(level[i]) != arcs.find(level[i + 1])).collect();
                    *ok.choose(rng).expect("some adjacent pair belongs to different arcs")
                };
                arcs.union(level[i], level[i + 1]);
                level.drain(i..=i + 1);
                events.push(MorseEvent::Cap(i + 1));
                falling = true;
            }
        }
    }
    MorseWord::from_valid(events)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn knots_and_bridge_positions() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..500 {
            let w = random_word(&mut rng, &WordParams::default());
            assert!(w.is_knot(), "{}", w);
            let b = random_word(&mut rng, &WordParams { bridge: true, ..WordParams::default() });
            assert!(b.is_knot());
            let first_cap = b.events().iter().position(|e| matches!(e, MorseEvent::Cap(_))).unwrap();
            assert!(b.events()[first_cap..].iter().all(|e| !matches!(e, MorseEvent::Cup(_))), "{}", b);
        }
    }

    #[test]
    fn links_appear_when_allowed() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let params = WordParams { allow_links: true, ..WordParams::default() };
        let multi = (0..200).filter(|_| random_word(&mut rng, &params).component_count() > 1).count();
        assert!(multi > 0);
    }
}
