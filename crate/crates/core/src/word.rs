//! Morse words: bottom-to-top event sequences presenting knots, links and tangles.
//!
//! Strand indices are 1-based. `Cup(i)` creates two strands at positions `i, i+1`
//! and shifts everything at `i` and above up by two. `Cap(i)` joins strands
//! `i, i+1` and shifts the strands above them down by two. `Cross(i, s)` crosses
//! strands `i` and `i+1`; for `Sign::Pos` the strand entering at `i` passes over.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::components::{components_of_knot_word, components_of_tangle_word, TangleComponents};
use crate::error::{Error, ValidationReport, Violation, ViolationKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }

    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum MorseEvent {
    /// A local minimum.
    Cup(usize),
    /// A local maximum.
    Cap(usize),
    Cross(usize, Sign),
}

impl MorseEvent {
    pub fn index(self) -> usize {
        match self {
            MorseEvent::Cup(i) | MorseEvent::Cap(i) | MorseEvent::Cross(i, _) => i,
        }
    }

    pub fn with_index(self, index: usize) -> MorseEvent {
        match self {
            MorseEvent::Cup(_) => MorseEvent::Cup(index),
            MorseEvent::Cap(_) => MorseEvent::Cap(index),
            MorseEvent::Cross(_, s) => MorseEvent::Cross(index, s),
        }
    }

    /// True for cups and caps, the critical points of the height function.
    pub fn is_critical(self) -> bool {
        !matches!(self, MorseEvent::Cross(..))
    }

    /// Change in strand count.
    pub fn delta(self) -> isize {
        match self {
            MorseEvent::Cup(_) => 2,
            MorseEvent::Cap(_) => -2,
            MorseEvent::Cross(..) => 0,
        }
    }

    /// Whether the event may act on a level with `strands` strands.
    pub fn fits(self, strands: usize) -> bool {
        match self {
            MorseEvent::Cup(i) => i >= 1 && i <= strands + 1,
            MorseEvent::Cap(i) | MorseEvent::Cross(i, _) => i >= 1 && i < strands,
        }
    }

    /// Strand count after applying the event to a level with `strands` strands.
    pub fn apply_count(self, strands: usize) -> usize {
        (strands as isize + self.delta()) as usize
    }
}

impl fmt::Display for MorseEvent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MorseEvent::Cup(i) => write!(f, "b{}", i),
            MorseEvent::Cap(i) => write!(f, "d{}", i),
            MorseEvent::Cross(i, Sign::Pos) => write!(f, "x{}+", i),
            MorseEvent::Cross(i, Sign::Neg) => write!(f, "x{}-", i),
        }
    }
}

/// Whether a closed word must present a single component.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Knot,
    Link,
}

/// Checks the local validity of `events` starting from `start` strands.
/// Returns the violations found and the final count.
fn local_violations(events: &[MorseEvent], start: usize) -> (Vec<Violation>, usize) {
    let mut violations = Vec::new();
    let mut n = start;
    for (pos, &e) in events.iter().enumerate() {
        if let MorseEvent::Cap(_) = e {
            if n < 2 {
                violations.push(Violation { position: Some(pos), kind: ViolationKind::NegativeCount });
                continue;
            }
        }
        if !e.fits(n) {
            violations.push(Violation {
                position: Some(pos),
                kind: ViolationKind::BadIndex { strands: n },
            });
        }
        n = e.apply_count(n);
    }
    if n != 0 {
        violations.push(Violation { position: None, kind: ViolationKind::NonzeroEnd { strands: n } });
    }
    (violations, n)
}

/// Validates a raw event sequence as a closed word.
pub fn validate(events: Vec<MorseEvent>, mode: Mode) -> Result<MorseWord, ValidationReport> {
    if events.is_empty() {
        return Err(ValidationReport::single(None, ViolationKind::Empty));
    }
    let (violations, _) = local_violations(&events, 0);
    if !violations.is_empty() {
        return Err(ValidationReport { violations });
    }
    let word = MorseWord { events };
    if mode == Mode::Knot {
        let c = word.component_count();
        if c != 1 {
            return Err(ValidationReport::single(
                None,
                ViolationKind::MultipleComponents { components: c },
            ));
        }
    }
    Ok(word)
}

/// A validated closed Morse word (knot or link).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MorseWord {
    events: Vec<MorseEvent>,
}

impl MorseWord {
    /// Validates `events` as a knot or link word.
    pub fn new(events: Vec<MorseEvent>) -> Result<Self, ValidationReport> {
        validate(events, Mode::Link)
    }

    /// Validates `events` as a single-component word.
    pub fn knot(events: Vec<MorseEvent>) -> Result<Self, ValidationReport> {
        validate(events, Mode::Knot)
    }

    /// The two-event unknot `b1 d1`.
    pub fn unknot() -> Self {
        MorseWord { events: vec![MorseEvent::Cup(1), MorseEvent::Cap(1)] }
    }

    /// Skips validation; callers guarantee local validity.
    pub(crate) fn from_valid(events: Vec<MorseEvent>) -> Self {
        debug_assert!(local_violations(&events, 0).0.is_empty(), "invalid word {:?}", events);
        MorseWord { events }
    }

    pub fn events(&self) -> &[MorseEvent] {
        &self.events
    }

    pub fn into_events(self) -> Vec<MorseEvent> {
        self.events
    }

    pub fn len(&self) -> usize {
        self.events.len()
    }

    pub fn is_empty(&self) -> bool {
        self.events.is_empty()
    }

    /// Strand counts at every level: `counts()[k]` is the count below event `k`.
    /// Has `len() + 1` entries, first and last zero.
    pub fn counts(&self) -> Vec<usize> {
        level_counts(&self.events, 0)
    }

    pub fn crossing_count(&self) -> usize {
        self.events.iter().filter(|e| !e.is_critical()).count()
    }

    pub fn component_count(&self) -> usize {
        components_of_knot_word(&self.events)
    }

    pub fn is_knot(&self) -> bool {
        self.component_count() == 1
    }

    /// Errors with `MultipleComponents` unless the word presents a knot.
    pub fn require_knot(&self) -> Result<(), Error> {
        match self.component_count() {
            1 => Ok(()),
            c => Err(Error::multiple_components(c)),
        }
    }
}

impl fmt::Display for MorseWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_events(f, &self.events)
    }
}

pub(crate) fn write_events(f: &mut fmt::Formatter<'_>, events: &[MorseEvent]) -> fmt::Result {
    for (i, e) in events.iter().enumerate() {
        if i > 0 {
            write!(f, " ")?;
        }
        write!(f, "{}", e)?;
    }
    Ok(())
}

pub(crate) fn level_counts(events: &[MorseEvent], start: usize) -> Vec<usize> {
    let mut out = Vec::with_capacity(events.len() + 1);
    let mut n = start;
    out.push(n);
    for e in events {
        n = e.apply_count(n);
        out.push(n);
    }
    out
}

/// A validated word presenting an n-string tangle: the level below the first
/// event meets the boundary sphere in `boundary` points, and every strand is
/// capped off by the end.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TangleWord {
    boundary: usize,
    events: Vec<MorseEvent>,
}

impl TangleWord {
    pub fn new(boundary: usize, events: Vec<MorseEvent>) -> Result<Self, ValidationReport> {
        if boundary == 0 || !boundary.is_multiple_of(2) {
            return Err(ValidationReport::single(
                None,
                ViolationKind::BadIndex { strands: boundary },
            ));
        }
        let (violations, _) = local_violations(&events, boundary);
        if !violations.is_empty() {
            return Err(ValidationReport { violations });
        }
        let comps = components_of_tangle_word(boundary, &events);
        if comps.closed > 0 {
            return Err(ValidationReport::single(None, ViolationKind::ClosedComponent));
        }
        Ok(TangleWord { boundary, events })
    }

    pub fn boundary(&self) -> usize {
        self.boundary
    }

    pub fn events(&self) -> &[MorseEvent] {
        &self.events
    }

    pub fn counts(&self) -> Vec<usize> {
        level_counts(&self.events, self.boundary)
    }

    pub fn components(&self) -> TangleComponents {
        components_of_tangle_word(self.boundary, &self.events)
    }
}

impl fmt::Display for TangleWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "tangle {}", self.boundary)?;
        if !self.events.is_empty() {
            write!(f, " ")?;
        }
        write_events(f, &self.events)
    }
}

/// Either kind of word, as produced by the text parser.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AnyWord {
    Closed(MorseWord),
    Tangle(TangleWord),
}
