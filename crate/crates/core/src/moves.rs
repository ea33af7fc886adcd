//! Local rewrites of Morse words that preserve the knot type.
//!
//! Every move acts on one or a few adjacent events at `site` (a 0-based event
//! position; insertion moves insert before the event at `site`). Each move has
//! an inverse, computed by [`inverse_move`].

use std::fmt;

use crate::error::{Error, Result};
use crate::word::{MorseEvent, MorseWord, Sign};

/// Which way a zig-zag finger points, or where a commuted cup lands when it
/// passes a cap at the same gap.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Left,
    Right,
}

/// Where a first Reidemeister kink is inserted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Anchor {
    /// On the two strands born at the cup just below `site`.
    AfterCup,
    /// On the two strands joined by the cap at `site`.
    BeforeCap,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MoveKind {
    /// Swap the events at `site` and `site + 1`, which act on disjoint strands.
    CommuteDistant { side: Side },
    /// Remove `Cup(i)` at `site` followed by `Cap(i + 1)` or `Cap(i - 1)`.
    ZigZagCancel,
    /// Insert `Cup(index)` then `Cap(index + 1)` (right) or `Cap(index - 1)` (left).
    ZigZagInsert { index: usize, side: Side },
    /// Remove the crossing right after `Cup(i)` on its own two strands.
    R1Absorb,
    R1Insert { anchor: Anchor, sign: Sign },
    /// Remove `Cross(i, s) Cross(i, -s)`.
    R2Cancel,
    /// Insert `Cross(index, sign) Cross(index, -sign)`.
    R2Insert { index: usize, sign: Sign },
    /// `x(i) x(i+1) x(i)` and `x(i+1) x(i) x(i+1)` with one common sign.
    YangBaxter,
    /// Remove `Cross(i, s)` directly below `Cap(i)`.
    CapAbsorbCross,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Move {
    pub site: usize,
    pub kind: MoveKind,
}

impl Move {
    pub fn new(site: usize, kind: MoveKind) -> Self {
        Move { site, kind }
    }

    /// Moves that lengthen the word.
    pub fn is_growth(&self) -> bool {
        matches!(
            self.kind,
            MoveKind::ZigZagInsert { .. } | MoveKind::R1Insert { .. } | MoveKind::R2Insert { .. }
        )
    }

    /// First Reidemeister moves change the bracket by a unit factor.
    pub fn changes_writhe(&self) -> bool {
        matches!(self.kind, MoveKind::R1Absorb | MoveKind::R1Insert { .. } | MoveKind::CapAbsorbCross)
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = |s: Sign| if s == Sign::Pos { '+' } else { '-' };
        let side = |s: Side| if s == Side::Left { "left" } else { "right" };
        match self.kind {
            MoveKind::CommuteDistant { side: s } => write!(f, "commute@{} ({})", self.site, side(s)),
            MoveKind::ZigZagCancel => write!(f, "zigzag-cancel@{}", self.site),
            MoveKind::ZigZagInsert { index, side: s } => {
                write!(f, "zigzag-insert@{} (b{}, {})", self.site, index, side(s))
            }
            MoveKind::R1Absorb => write!(f, "r1-absorb@{}", self.site),
            MoveKind::R1Insert { anchor, sign: s } => {
                let a = if anchor == Anchor::AfterCup { "after-cup" } else { "before-cap" };
                write!(f, "r1-insert@{} ({}, {})", self.site, a, sign(s))
            }
            MoveKind::R2Cancel => write!(f, "r2-cancel@{}", self.site),
            MoveKind::R2Insert { index, sign: s } => {
                write!(f, "r2-insert@{} (x{}{})", self.site, index, sign(s))
            }
            MoveKind::YangBaxter => write!(f, "yang-baxter@{}", self.site),
            MoveKind::CapAbsorbCross => write!(f, "cap-absorb@{}", self.site),
        }
    }
}

/// Where an event touches the level between two adjacent events: either a
/// run of strands `[lo, hi)` or a single gap just left of strand `at`.
#[derive(Clone, Copy)]
enum Footprint {
    Strands(usize, usize),
    Gap(usize),
}

/// Footprint of `lower` on the level above it.
fn out_footprint(lower: MorseEvent) -> Footprint {
    match lower {
        MorseEvent::Cup(i) | MorseEvent::Cross(i, _) => Footprint::Strands(i, i + 2),
        MorseEvent::Cap(i) => Footprint::Gap(i),
    }
}

/// Footprint of `upper` on the level below it.
fn in_footprint(upper: MorseEvent) -> Footprint {
    match upper {
        MorseEvent::Cap(j) | MorseEvent::Cross(j, _) => Footprint::Strands(j, j + 2),
        MorseEvent::Cup(j) => Footprint::Gap(j),
    }
}

/// A cap immediately followed by a cup in the same gap; commuting them needs
/// a choice of side.
fn is_tie(lower: MorseEvent, upper: MorseEvent) -> bool {
    matches!((lower, upper), (MorseEvent::Cap(i), MorseEvent::Cup(j)) if i == j)
}

/// Commutes two adjacent events with disjoint supports, returning the new
/// (lower, upper) pair, reindexed.
pub(crate) fn commute(lower: MorseEvent, upper: MorseEvent, side: Side) -> Option<(MorseEvent, MorseEvent)> {
    use Footprint::*;
    let upper_is_left = match (out_footprint(lower), in_footprint(upper)) {
        (Strands(a, b), Strands(c, d)) => {
            if d <= a {
                true
            } else if c >= b {
                false
            } else {
                return None;
            }
        }
        (Strands(a, b), Gap(p)) => {
            if p <= a {
                true
            } else if p >= b {
                false
            } else {
                return None;
            }
        }
        (Gap(p), Strands(c, d)) => {
            if d <= p {
                true
            } else if c >= p {
                false
            } else {
                return None;
            }
        }
        (Gap(p), Gap(q)) => {
            if q == p {
                side == Side::Left
            } else {
                q < p
            }
        }
    };
    let shift = |e: MorseEvent, by: isize| e.with_index((e.index() as isize + by) as usize);
    let new_lower = if upper_is_left { upper } else { shift(upper, -lower.delta()) };
    let new_upper = if upper_is_left { shift(lower, new_lower.delta()) } else { lower };
    Some((new_lower, new_upper))
}

fn cross_parts(e: MorseEvent) -> Option<(usize, Sign)> {
    match e {
        MorseEvent::Cross(i, s) => Some((i, s)),
        _ => None,
    }
}

/// The events a move replaces and what it puts in their place, or `None`
/// when the move's precondition fails.
fn rewrite(events: &[MorseEvent], counts: &[usize], mv: &Move) -> Option<(std::ops::Range<usize>, Vec<MorseEvent>)> {
    use MorseEvent::*;
    let s = mv.site;
    let at = |k: usize| events.get(k).copied();
    match mv.kind {
        MoveKind::CommuteDistant { side } => {
            let (lo, up) = (at(s)?, at(s + 1)?);
            if !is_tie(lo, up) && side != Side::Left {
                return None;
            }
            let (a, b) = commute(lo, up, side)?;
            Some((s..s + 2, vec![a, b]))
        }
        MoveKind::ZigZagCancel => match (at(s)?, at(s + 1)?) {
            (Cup(i), Cap(j)) if j == i + 1 || j + 1 == i => Some((s..s + 2, vec![])),
            _ => None,
        },
        MoveKind::ZigZagInsert { index, side } => {
            let n = *counts.get(s)?;
            if s == 0 || s >= events.len() {
                return None;
            }
            let cap = match side {
                Side::Right if index >= 1 && index <= n => Cap(index + 1),
                Side::Left if index >= 2 && index <= n + 1 => Cap(index - 1),
                _ => return None,
            };
            Some((s..s, vec![Cup(index), cap]))
        }
        MoveKind::R1Absorb => match (at(s)?, at(s + 1)?) {
            (Cup(i), Cross(j, _)) if i == j => Some((s + 1..s + 2, vec![])),
            _ => None,
        },
        MoveKind::R1Insert { anchor, sign } => match anchor {
            Anchor::AfterCup => match at(s.checked_sub(1)?)? {
                Cup(i) => Some((s..s, vec![Cross(i, sign)])),
                _ => None,
            },
            Anchor::BeforeCap => match at(s)? {
                Cap(i) => Some((s..s, vec![Cross(i, sign)])),
                _ => None,
            },
        },
        MoveKind::CapAbsorbCross => match (at(s)?, at(s + 1)?) {
            (Cross(i, _), Cap(j)) if i == j => Some((s..s + 1, vec![])),
            _ => None,
        },
        MoveKind::R2Cancel => {
            let (i, a) = cross_parts(at(s)?)?;
            let (j, b) = cross_parts(at(s + 1)?)?;
            (i == j && a != b).then(|| (s..s + 2, vec![]))
        }
        MoveKind::R2Insert { index, sign } => {
            let n = *counts.get(s)?;
            if index == 0 || index + 1 > n {
                return None;
            }
            Some((s..s, vec![Cross(index, sign), Cross(index, sign.flip())]))
        }
        MoveKind::YangBaxter => {
            let (i, a) = cross_parts(at(s)?)?;
            let (j, b) = cross_parts(at(s + 1)?)?;
            let (k, c) = cross_parts(at(s + 2)?)?;
            if a != b || b != c || i != k || (j != i + 1 && j + 1 != i) {
                return None;
            }
            Some((s..s + 3, vec![Cross(j, a), Cross(i, a), Cross(j, a)]))
        }
    }
}

/// Applies a move, returning the rewritten word.
pub fn apply_move(word: &MorseWord, mv: &Move) -> Result<MorseWord> {
    let counts = word.counts();
    let (range, replacement) =
        rewrite(word.events(), &counts, mv).ok_or_else(|| Error::InvalidMove(mv.to_string()))?;
    let mut events = word.events().to_vec();
    events.splice(range, replacement);
    MorseWord::new(events).map_err(|e| Error::InvalidMove(format!("{}: {}", mv, e)))
}

/// The move undoing `mv` on `word`.
pub fn inverse_move(word: &MorseWord, mv: &Move) -> Result<Move> {
    use MorseEvent::*;
    let invalid = || Error::InvalidMove(mv.to_string());
    let events = word.events();
    let s = mv.site;
    let inv = match mv.kind {
        MoveKind::CommuteDistant { .. } => {
            let after = apply_move(word, mv)?;
            let back = [Side::Left, Side::Right]
                .into_iter()
                .map(|side| Move::new(s, MoveKind::CommuteDistant { side }))
                .find(|m| apply_move(&after, m).map(|w| &w == word).unwrap_or(false));
            return back.ok_or_else(invalid);
        }
        MoveKind::ZigZagCancel => match (events.get(s), events.get(s + 1)) {
            (Some(&Cup(i)), Some(&Cap(j))) => {
                let side = if j == i + 1 { Side::Right } else { Side::Left };
                MoveKind::ZigZagInsert { index: i, side }
            }
            _ => return Err(invalid()),
        },
        MoveKind::ZigZagInsert { .. } => MoveKind::ZigZagCancel,
        MoveKind::R1Absorb => match events.get(s + 1) {
            Some(&Cross(_, sign)) => {
                return check(word, mv, Move::new(s + 1, MoveKind::R1Insert { anchor: Anchor::AfterCup, sign }))
            }
            _ => return Err(invalid()),
        },
        MoveKind::R1Insert { anchor: Anchor::AfterCup, .. } => {
            return check(word, mv, Move::new(s.checked_sub(1).ok_or_else(invalid)?, MoveKind::R1Absorb))
        }
        MoveKind::R1Insert { anchor: Anchor::BeforeCap, .. } => MoveKind::CapAbsorbCross,
        MoveKind::CapAbsorbCross => match events.get(s) {
            Some(&Cross(_, sign)) => MoveKind::R1Insert { anchor: Anchor::BeforeCap, sign },
            _ => return Err(invalid()),
        },
        MoveKind::R2Cancel => match events.get(s) {
            Some(&Cross(index, sign)) => MoveKind::R2Insert { index, sign },
            _ => return Err(invalid()),
        },
        MoveKind::R2Insert { .. } => MoveKind::R2Cancel,
        MoveKind::YangBaxter => MoveKind::YangBaxter,
    };
    check(word, mv, Move::new(s, inv))
}

fn check(word: &MorseWord, mv: &Move, inv: Move) -> Result<Move> {
    apply_move(word, mv)?;
    Ok(inv)
}

/// Every applicable move, ordered by site and then kind.
pub fn enumerate_moves(word: &MorseWord) -> Vec<Move> {
    enumerate_moves_with(word, true)
}

/// Applicable moves; growth moves (insertions) only when `growth` is set.
pub fn enumerate_moves_with(word: &MorseWord, growth: bool) -> Vec<Move> {
    use MorseEvent::*;
    let events = word.events();
    let counts = word.counts();
    let mut out = Vec::new();
    for s in 0..=events.len() {
        let here = events.get(s).copied();
        let next = events.get(s + 1).copied();
        if let (Some(lo), Some(up)) = (here, next) {
            if commute(lo, up, Side::Left).is_some() {
                out.push(Move::new(s, MoveKind::CommuteDistant { side: Side::Left }));
                if is_tie(lo, up) {
                    out.push(Move::new(s, MoveKind::CommuteDistant { side: Side::Right }));
                }
            }
        }
        let n = counts[s];
        let mut candidates = vec![
            MoveKind::ZigZagCancel,
            MoveKind::R1Absorb,
            MoveKind::R2Cancel,
            MoveKind::YangBaxter,
            MoveKind::CapAbsorbCross,
        ];
        if growth && s > 0 && s < events.len() {
            for index in 1..=n + 1 {
                candidates.push(MoveKind::ZigZagInsert { index, side: Side::Right });
                candidates.push(MoveKind::ZigZagInsert { index, side: Side::Left });
            }
            for sign in [Sign::Pos, Sign::Neg] {
                if matches!(events[s - 1], Cup(_)) {
                    candidates.push(MoveKind::R1Insert { anchor: Anchor::AfterCup, sign });
                }
                if matches!(here, Some(Cap(_))) {
                    candidates.push(MoveKind::R1Insert { anchor: Anchor::BeforeCap, sign });
                }
                for index in 1..n {
                    candidates.push(MoveKind::R2Insert { index, sign });
                }
            }
        }
        for kind in candidates {
            let mv = Move::new(s, kind);
            if rewrite(events, &counts, &mv).is_some() {
                out.push(mv);
            }
        }
    }
    out.sort();
    out
}

/// Normal form used to deduplicate words that differ only by sliding
/// crossings: each crossing moves as early as it legally can, and two
/// commuting crossings are ordered lowest index first.
pub fn canonical_form(word: &MorseWord) -> MorseWord {
    let mut events = word.events().to_vec();
    loop {
        let mut changed = false;
        for s in 1..events.len() {
            let (lo, up) = (events[s - 1], events[s]);
            let wanted = match (lo, up) {
                (_, MorseEvent::Cup(_) | MorseEvent::Cap(_)) => false,
                (MorseEvent::Cross(j, _), MorseEvent::Cross(i, _)) => i < j,
                _ => true,
            };
            if !wanted {
                continue;
            }
            if let Some((a, b)) = commute(lo, up, Side::Left) {
                events[s - 1] = a;
                events[s] = b;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    MorseWord::from_valid(events)
}
