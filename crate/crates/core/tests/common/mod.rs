#![allow(dead_code)]

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thinpos::random::{random_word, WordParams};
use thinpos::{LaurentPoly, MorseWord};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn words(seed: u64, n: usize, params: &WordParams) -> Vec<MorseWord> {
    let mut r = rng(seed);
    (0..n).map(|_| random_word(&mut r, params)).collect()
}

/// Bracket of a planar diagram code, by enumerating every state.
///
/// `pd` lists crossings `[a, b, c, d]` counterclockwise from the incoming
/// under-strand. The A-smoothing joins a-b and c-d, the B-smoothing a-d and
/// b-c. With `mirror` set the roles swap, giving the mirror diagram.
pub fn pd_bracket(pd: &[[usize; 4]], mirror: bool) -> LaurentPoly {
    let edges = pd.iter().flatten().copied().max().unwrap_or(0) + 1;
    let d = LaurentPoly::from_terms([(2, -1), (-2, -1)]);
    let mut total = LaurentPoly::zero();
    for state in 0u32..(1 << pd.len()) {
        let mut parent: Vec<usize> = (0..edges).collect();
        fn root(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                x = p[x];
            }
            x
        }
        let mut a_count = 0i64;
        for (k, &[a, b, c, e]) in pd.iter().enumerate() {
            let b_smoothing = (state >> k) & 1 == 1;
            let a_smoothing = b_smoothing == mirror;
            if a_smoothing {
                a_count += 1;
            }
            let pairs = if b_smoothing { [(a, e), (b, c)] } else { [(a, b), (c, e)] };
            for (x, y) in pairs {
                let (rx, ry) = (root(&mut parent, x), root(&mut parent, y));
                parent[rx] = ry;
            }
        }
        let used: std::collections::BTreeSet<usize> = pd.iter().flatten().copied().collect();
        let loops = used.iter().map(|&x| root(&mut parent, x)).collect::<std::collections::BTreeSet<_>>().len();
        let b_count = pd.len() as i64 - a_count;
        let term = d.pow(loops as u32 - 1).scale(1, a_count - b_count);
        total = &total + &term;
    }
    total
}

/// Standard code of the trefoil and of the figure-eight knot.
pub const TREFOIL_PD: [[usize; 4]; 3] = [[1, 5, 2, 4], [3, 1, 4, 6], [5, 3, 6, 2]];
pub const FIGURE8_PD: [[usize; 4]; 4] = [[4, 2, 5, 1], [8, 6, 1, 5], [6, 3, 7, 4], [2, 7, 3, 8]];
