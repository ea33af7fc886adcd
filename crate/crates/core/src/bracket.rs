//! Kauffman bracket of a Morse word by an exact state sum.
//!
//! The bracket certifies that rewrites keep the knot type: regular-isotopy
//! moves leave it unchanged, and the writhe-normalized version is also
//! unchanged by first Reidemeister moves.

use rayon::prelude::*;

use crate::dsu::DisjointSets;
use crate::error::{Error, Result};
use crate::poly::LaurentPoly;
use crate::trace::{End, Port, Trace};
use crate::word::{MorseWord, Sign};

/// Largest crossing count accepted by the state sum (2^18 states).
pub const MAX_CROSSINGS: usize = 18;

/// A crossing with its four incident arcs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DiagramCrossing {
    /// Position of the crossing event in the word.
    pub event: usize,
    pub braid_sign: Sign,
    /// Oriented sign (+1 or -1) under the orientation chosen by tracing.
    pub sign: i64,
    pub below_left: usize,
    pub below_right: usize,
    pub above_left: usize,
    pub above_right: usize,
}

impl DiagramCrossing {
    fn ports(&self) -> [usize; 4] {
        [self.below_left, self.below_right, self.above_left, self.above_right]
    }
}

/// Crossings and the arcs joining them. An arc is a maximal piece of the
/// curve between crossings, running through any number of cups and caps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlanarDiagram {
    pub crossings: Vec<DiagramCrossing>,
    pub arcs: usize,
    /// Closed curves that meet no crossing.
    pub free_loops: usize,
}

impl PlanarDiagram {
    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|c| c.sign).sum()
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Dir {
    Up,
    Down,
}

/// Orientation of every segment, walking each component once.
fn orient(trace: &Trace) -> Vec<Dir> {
    let n = trace.segments.len();
    let mut dir: Vec<Option<Dir>> = vec![None; n];
    for start in 0..n {
        if dir[start].is_some() {
            continue;
        }
        let (mut seg, mut d) = (start, Dir::Up);
        while dir[seg].is_none() {
            dir[seg] = Some(d);
            let s = &trace.segments[seg];
            let (next, nd) = match (d, if d == Dir::Up { s.top } else { s.bottom }) {
                (Dir::Up, End::Cap(p)) => (p, Dir::Down),
                (Dir::Down, End::Cup(p)) => (p, Dir::Up),
                (_, End::Cross(c, port)) => {
                    let [bl, br, al, ar] = trace.crossings[c].ports;
                    match port {
                        Port::BelowLeft => (ar, Dir::Up),
                        Port::BelowRight => (al, Dir::Up),
                        Port::AboveLeft => (br, Dir::Down),
                        Port::AboveRight => (bl, Dir::Down),
                    }
                }
                _ => unreachable!("closed words have no open or boundary ends"),
            };
            seg = next;
            d = nd;
        }
    }
    dir.into_iter().map(|d| d.unwrap()).collect()
}

pub fn planar_diagram(word: &MorseWord) -> PlanarDiagram {
    let trace = Trace::new(word.events(), 0);
    let dir = orient(&trace);
    let mut sets = DisjointSets::new(trace.segments.len());
    for (a, b) in trace.critical_joins() {
        sets.union(a, b);
    }
    let mut arc_of = vec![usize::MAX; trace.segments.len()];
    let mut arcs = 0;
    for s in 0..trace.segments.len() {
        let r = sets.find(s);
        if arc_of[r] == usize::MAX {
            arc_of[r] = arcs;
            arcs += 1;
        }
        arc_of[s] = arc_of[r];
    }
    let mut touched = vec![false; arcs];
    let crossings: Vec<DiagramCrossing> = trace
        .crossings
        .iter()
        .map(|c| {
            let [bl, br, al, ar] = c.ports;
            let ud = |s: usize| if dir[s] == Dir::Up { 1 } else { -1 };
            for s in c.ports {
                touched[arc_of[s]] = true;
            }
            DiagramCrossing {
                event: c.event,
                braid_sign: c.sign,
                sign: c.sign.as_i64() * ud(bl) * ud(br),
                below_left: arc_of[bl],
                below_right: arc_of[br],
                above_left: arc_of[al],
                above_right: arc_of[ar],
            }
        })
        .collect();
    let free_loops = touched.iter().filter(|t| !**t).count();
    PlanarDiagram { crossings, arcs, free_loops }
}

/// Loop count for each (number of B-smoothings) over a range of states.
fn tally(diagram: &PlanarDiagram, states: std::ops::Range<u64>, hist: &mut [Vec<u64>]) {
    let c = diagram.crossings.len();
    let mut parent: Vec<u16> = vec![0; diagram.arcs];
    fn find(parent: &mut [u16], mut x: u16) -> u16 {
        while parent[x as usize] != x {
            let g = parent[parent[x as usize] as usize];
            parent[x as usize] = g;
            x = g;
        }
        x
    }
    let touched: usize = diagram.arcs - diagram.free_loops;
    for mask in states {
        for (i, p) in parent.iter_mut().enumerate() {
            *p = i as u16;
        }
        let mut merges = 0;
        for (k, x) in diagram.crossings.iter().enumerate() {
            let b_smoothing = mask >> k & 1 == 1;
            let [bl, br, al, ar] = x.ports();
            // a positive crossing's A-smoothing keeps the strands vertical
            let vertical = b_smoothing != (x.braid_sign == Sign::Pos);
            let pairs = if vertical { [(bl, al), (br, ar)] } else { [(bl, br), (al, ar)] };
            for (u, v) in pairs {
                let (ru, rv) = (find(&mut parent, u as u16), find(&mut parent, v as u16));
                if ru != rv {
                    parent[ru as usize] = rv;
                    merges += 1;
                }
            }
        }
        let loops = diagram.free_loops + touched - merges;
        let b = mask.count_ones() as usize;
        debug_assert!(b <= c);
        hist[b][loops] += 1;
    }
}

/// `sum over states of A^(a-b) (-A^2 - A^-2)^(loops-1)`, normalized so the
/// crossing-free circle is 1.
pub fn kauffman_bracket(word: &MorseWord) -> Result<LaurentPoly> {
    let c = word.crossing_count();
    if c > MAX_CROSSINGS {
        return Err(Error::budget(format!(
            "state sum over {} crossings exceeds the limit of {}",
            c, MAX_CROSSINGS
        )));
    }
    let diagram = planar_diagram(word);
    Ok(bracket_of_diagram(&diagram))
}

fn bracket_of_diagram(diagram: &PlanarDiagram) -> LaurentPoly {
    let c = diagram.crossings.len();
    let max_loops = diagram.arcs + 1;
    let total: u64 = 1 << c;
    let empty = || vec![vec![0u64; max_loops + 1]; c + 1];
    const CHUNK: u64 = 1 << 12;
    let hist = if total <= CHUNK {
        let mut h = empty();
        tally(diagram, 0..total, &mut h);
        h
    } else {
        (0..total / CHUNK)
            .into_par_iter()
            .map(|k| {
                let mut h = empty();
                tally(diagram, k * CHUNK..(k + 1) * CHUNK, &mut h);
                h
            })
            .reduce(empty, |mut a, b| {
                for (ra, rb) in a.iter_mut().zip(b) {
                    for (x, y) in ra.iter_mut().zip(rb) {
                        *x += y;
                    }
                }
                a
            })
    };

    let delta = LaurentPoly::from_terms([(2, -1), (-2, -1)]);
    let delta_pows: Vec<LaurentPoly> = (0..=max_loops as u32).map(|k| delta.pow(k)).collect();
    let mut out = LaurentPoly::zero();
    for (b, row) in hist.iter().enumerate() {
        let exp = c as i64 - 2 * b as i64;
        for (loops, &count) in row.iter().enumerate() {
            if count > 0 {
                out = &out + &delta_pows[loops - 1].scale(count as i64, exp);
            }
        }
    }
    out
}

/// `(-A^3)^(-writhe) * bracket`, invariant under all three Reidemeister moves.
pub fn jones_normalized(word: &MorseWord) -> Result<LaurentPoly> {
    let c = word.crossing_count();
    if c > MAX_CROSSINGS {
        return Err(Error::budget(format!(
            "state sum over {} crossings exceeds the limit of {}",
            c, MAX_CROSSINGS
        )));
    }
    let diagram = planar_diagram(word);
    let w = diagram.writhe();
    let sign = if w % 2 == 0 { 1 } else { -1 };
    Ok(bracket_of_diagram(&diagram).scale(sign, -3 * w))
}
