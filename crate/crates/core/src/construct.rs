//! Building words: connected sum and the generators behind the catalog.

use crate::dsu::DisjointSets;
use crate::error::{Error, Result};
use crate::profile::LevelProfile;
use crate::word::{MorseEvent, MorseWord, Sign};

/// Splices `b` onto the top of `a`: the last cap of `a` and the first cup of
/// `b` are dropped, so `b` continues on the two strands `a` leaves open.
pub fn connected_sum(a: &MorseWord, b: &MorseWord) -> Result<MorseWord> {
    a.require_knot().map_err(|e| Error::InvalidInput(format!("left summand: {}", e)))?;
    b.require_knot().map_err(|e| Error::InvalidInput(format!("right summand: {}", e)))?;
    let left = a.events();
    let right = b.events();
    let mut events = Vec::with_capacity(left.len() + right.len() - 2);
    events.extend_from_slice(&left[..left.len() - 1]);
    events.extend_from_slice(&right[1..]);
    Ok(MorseWord::from_valid(events))
}

/// Closure of the braid `(x1 x2 ... x(p-1))^q` drawn with `p` nested cups
/// and `p` nested caps. A knot when `gcd(p, q) = 1`.
pub fn torus_plat(p: usize, q: usize, sign: Sign) -> Result<MorseWord> {
    if p == 0 || q == 0 {
        return Err(Error::InvalidInput(format!("torus_plat({}, {}) needs p, q >= 1", p, q)));
    }
    let mut events: Vec<MorseEvent> = (1..=p).map(MorseEvent::Cup).collect();
    for _ in 0..q {
        events.extend((1..p).map(|i| MorseEvent::Cross(i, sign)));
    }
    events.extend((1..=p).rev().map(MorseEvent::Cap));
    Ok(MorseWord::from_valid(events))
}

/// A crossing-free knot word (an unknot) whose thick and thin levels are
/// exactly `levels`, read bottom to top: thick, thin, thick, ..., thick.
///
/// Cups are always `b1`. Each cap joins the lowest adjacent pair of strands
/// belonging to different arcs, so no loop closes before the final `d1`.
pub fn realize_profile(levels: &[usize]) -> Result<MorseWord> {
    let bad = |why: &str| Error::InvalidInput(format!("profile {:?}: {}", levels, why));
    if levels.len().is_multiple_of(2) {
        return Err(bad("needs an odd number of levels, thick first and last"));
    }
    if levels.iter().any(|&w| w == 0 || w % 2 != 0) {
        return Err(bad("widths must be even and positive"));
    }
    for (k, pair) in levels.windows(2).enumerate() {
        let (lower, upper) = (pair[0], pair[1]);
        let rising = k % 2 == 1;
        if (rising && upper <= lower) || (!rising && upper >= lower) {
            return Err(bad("thick levels must exceed their neighbouring thin levels"));
        }
    }

    let mut events = Vec::new();
    // arc labels of the strands at the current level, joined as caps merge arcs
    let mut level: Vec<usize> = Vec::new();
    let mut arcs = DisjointSets::new(levels.iter().sum::<usize>() / 2 + 1);
    let mut next_arc = 0;
    let mut n = 0;
    for (k, &target) in levels.iter().chain(std::iter::once(&0)).enumerate() {
        let rising = k % 2 == 0;
        while n != target {
            if rising {
                level.splice(0..0, [next_arc, next_arc]);
                next_arc += 1;
                events.push(MorseEvent::Cup(1));
                n += 2;
            } else {
                let i = if n == 2 {
                    0
                } else {
                    (0..n - 1)
                        .find(|&i| arcs.find(level[i]) != arcs.find(level[i + 1]))
                        .expect("a non-crossing level always has an adjacent pair from distinct arcs")
                };
                arcs.union(level[i], level[i + 1]);
                level.drain(i..=i + 1);
                events.push(MorseEvent::Cap(i + 1));
                n -= 2;
            }
        }
    }
    let word = MorseWord::from_valid(events);
    debug_assert_eq!(word.component_count(), 1);
    Ok(word)
}

/// Inserts `fingers` zig-zags `b1 d2`, each just above the first event that
/// reaches the current trunk. Every finger raises the trunk by two and can be
/// removed again by a single zig-zag cancellation.
pub fn pad(word: &MorseWord, fingers: usize) -> MorseWord {
    let mut events = word.events().to_vec();
    for _ in 0..fingers {
        let w = MorseWord::from_valid(events.clone());
        let trunk = LevelProfile::of(&w).trunk();
        let counts = w.counts();
        let site = (1..counts.len()).find(|&k| counts[k] == trunk).unwrap_or(1);
        events.splice(site..site, [MorseEvent::Cup(1), MorseEvent::Cap(2)]);
    }
    MorseWord::from_valid(events)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::*;
    use MorseEvent::*;

    fn trefoil() -> MorseWord {
        MorseWord::knot(vec![
            Cup(1), Cup(3), Cross(2, Sign::Neg), Cross(2, Sign::Neg), Cross(2, Sign::Neg), Cap(3), Cap(1),
        ])
        .unwrap()
    }

    #[test]
    fn trefoil_sum() {
        let s = connected_sum(&trefoil(), &trefoil()).unwrap();
        let p = LevelProfile::of(&s);
        let widths: Vec<usize> = p.gaps().iter().map(|g| g.width).collect();
        assert_eq!(widths, vec![2, 4, 2, 4, 2]);
        assert_eq!(width(&s), 14);
        assert_eq!(bridge_count(&s), 3);
        assert_eq!(trunk_embedding(&s), 4);
        assert!(s.is_knot());
    }

    #[test]
    fn unknot_is_identity() {
        let t = trefoil();
        assert_eq!(connected_sum(&MorseWord::unknot(), &t).unwrap(), t);
        assert_eq!(connected_sum(&t, &MorseWord::unknot()).unwrap(), t);
    }

    #[test]
    fn sum_rejects_links() {
        let link = MorseWord::new(vec![Cup(1), Cup(1), Cap(1), Cap(1)]).unwrap();
        assert!(matches!(connected_sum(&link, &trefoil()), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn torus_words() {
        let t23 = torus_plat(2, 3, Sign::Pos).unwrap();
        assert_eq!(t23.to_string(), "b1 b2 x1+ x1+ x1+ d2 d1");
        assert!(t23.is_knot());
        assert_eq!(torus_plat(3, 3, Sign::Pos).unwrap().component_count(), 3);
        assert!(torus_plat(3, 4, Sign::Pos).unwrap().is_knot());
    }

    #[test]
    fn realized_profiles() {
        let w = realize_profile(&[10, 4, 10, 4, 10]).unwrap();
        assert!(w.is_knot());
        assert_eq!(w.crossing_count(), 0);
        let p = LevelProfile::of(&w);
        assert_eq!(p.thick(), vec![10, 10, 10]);
        assert_eq!(p.thin(), vec![4, 4]);
        assert_eq!(p.width(), 134);
        assert!(realize_profile(&[10, 4]).is_err());
        assert!(realize_profile(&[10, 12, 14]).is_err());
        assert!(realize_profile(&[3]).is_err());
    }

    #[test]
    fn padding_adds_a_finger() {
        let p = pad(&trefoil(), 1);
        let widths: Vec<usize> = LevelProfile::of(&p).gaps().iter().map(|g| g.width).collect();
        assert_eq!(widths, vec![2, 4, 6, 4, 2]);
        assert!(p.is_knot());
        assert_eq!(width(&pad(&trefoil(), 2)), 2 + 4 + 6 + 8 + 6 + 4 + 2);
    }
}
