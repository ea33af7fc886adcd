//! Strand segments of a word: the pieces of the curve between consecutive
//! events, with what each end is attached to.

use crate::word::{MorseEvent, Sign};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Port {
    BelowLeft,
    BelowRight,
    AboveLeft,
    AboveRight,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum End {
    /// Still open at the top of a partial trace.
    Open,
    /// Starts on the boundary level of a tangle.
    Boundary,
    Cup(usize),
    Cap(usize),
    Cross(usize, Port),
}

#[derive(Debug, Clone, Copy)]
pub(crate) struct Segment {
    pub bottom: End,
    pub top: End,
}

#[derive(Debug, Clone, Copy)]
pub(crate) struct TracedCrossing {
    /// Position of the crossing in the word.
    pub event: usize,
    pub sign: Sign,
    /// Segments at below-left, below-right, above-left, above-right.
    pub ports: [usize; 4],
}

#[derive(Debug, Clone)]
pub(crate) struct Trace {
    pub segments: Vec<Segment>,
    pub crossings: Vec<TracedCrossing>,
    /// Segments starting on the boundary, left to right.
    pub boundary: Vec<usize>,
}

impl Trace {
    pub fn new(events: &[MorseEvent], start: usize) -> Trace {
        let mut segments: Vec<Segment> = (0..start)
            .map(|_| Segment { bottom: End::Boundary, top: End::Open })
            .collect();
        let boundary: Vec<usize> = (0..start).collect();
        let mut level = boundary.clone();
        let mut crossings = Vec::new();
        for (pos, &e) in events.iter().enumerate() {
            match e {
                MorseEvent::Cup(i) => {
                    let a = segments.len();
                    let b = a + 1;
                    segments.push(Segment { bottom: End::Cup(b), top: End::Open });
                    segments.push(Segment { bottom: End::Cup(a), top: End::Open });
                    level.splice(i - 1..i - 1, [a, b]);
                }
                MorseEvent::Cap(i) => {
                    let p = level[i - 1];
                    let q = level[i];
                    segments[p].top = End::Cap(q);
                    segments[q].top = End::Cap(p);
                    level.drain(i - 1..=i);
                }
                MorseEvent::Cross(i, sign) => {
                    let c = crossings.len();
                    let bl = level[i - 1];
                    let br = level[i];
                    let al = segments.len();
                    let ar = al + 1;
                    segments[bl].top = End::Cross(c, Port::BelowLeft);
                    segments[br].top = End::Cross(c, Port::BelowRight);
                    segments.push(Segment { bottom: End::Cross(c, Port::AboveLeft), top: End::Open });
                    segments.push(Segment { bottom: End::Cross(c, Port::AboveRight), top: End::Open });
                    level[i - 1] = al;
                    level[i] = ar;
                    crossings.push(TracedCrossing { event: pos, sign, ports: [bl, br, al, ar] });
                }
            }
        }
        Trace { segments, crossings, boundary }
    }

    /// Pairs of segments joined at cups and caps, each listed once.
    pub fn critical_joins(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.segments.iter().enumerate().flat_map(|(s, seg)| {
            let below = match seg.bottom {
                End::Cup(p) if p > s => Some((s, p)),
                _ => None,
            };
            let above = match seg.top {
                End::Cap(p) if p > s => Some((s, p)),
                _ => None,
            };
            below.into_iter().chain(above)
        })
    }
}
