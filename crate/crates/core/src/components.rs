//! Counting the closed components and arcs a word forms.

use crate::dsu::DisjointSets;
use crate::trace::Trace;
use crate::word::MorseEvent;

/// Components of a tangle word: arcs ending on the boundary and closed loops.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TangleComponents {
    pub arcs: usize,
    pub closed: usize,
}

/// Joins every pair of segments that belong to the same strand of the curve.
fn strand_sets(trace: &Trace) -> DisjointSets {
    let mut sets = DisjointSets::new(trace.segments.len());
    for (a, b) in trace.critical_joins() {
        sets.union(a, b);
    }
    for c in &trace.crossings {
        let [bl, br, al, ar] = c.ports;
        sets.union(bl, ar);
        sets.union(br, al);
    }
    sets
}

pub(crate) fn components_of_knot_word(events: &[MorseEvent]) -> usize {
    let trace = Trace::new(events, 0);
    strand_sets(&trace).count_sets()
}

pub(crate) fn components_of_tangle_word(boundary: usize, events: &[MorseEvent]) -> TangleComponents {
    let trace = Trace::new(events, boundary);
    let mut sets = strand_sets(&trace);
    let total = sets.count_sets();
    let mut roots: Vec<usize> = trace.boundary.iter().map(|&s| sets.find(s)).collect();
    roots.sort_unstable();
    roots.dedup();
    TangleComponents { arcs: roots.len(), closed: total - roots.len() }
}
