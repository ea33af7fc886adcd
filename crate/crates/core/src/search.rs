//! Searching the move graph for thinner positions.
//!
//! Both searches walk the graph in breadth-first layers. The exhaustive search
//! keeps every word of each layer; the beam search keeps the best
//! `beam_width` of them. Words are deduplicated by [`canonical_form`], and
//! when two words of a layer share a canonical form the one reached with
//! fewer insertions (then the smaller word) is kept, so an unbounded beam
//! explores exactly the exhaustive ball.
//!
//! Found positions are only empirical: "minimal" always means minimal among
//! the words that were explored or supplied.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::bracket::jones_normalized;
use crate::error::{Error, Result};
use crate::invariants::EmbeddingReport;
use crate::moves::{apply_move, canonical_form, enumerate_moves_with, Move};
use crate::profile::LevelProfile;
use crate::word::MorseWord;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ObjectiveKind {
    /// Total width, the sum over all regular levels.
    GabaiWidth,
    /// Number of cups and caps.
    CriticalCount,
    /// Thick widths sorted non-increasing, compared lexicographically, then width.
    OTPLex,
    TrunkOnly,
}

/// A total preorder on words: smaller scores are better.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Objective {
    pub kind: ObjectiveKind,
    pub tiebreak: Option<Box<Objective>>,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ScorePart {
    Int(usize),
    Seq(Vec<usize>),
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Score(pub Vec<ScorePart>);

impl Objective {
    pub fn new(kind: ObjectiveKind) -> Self {
        Objective { kind, tiebreak: None }
    }

    pub fn then(mut self, next: Objective) -> Self {
        match self.tiebreak {
            Some(t) => self.tiebreak = Some(Box::new(t.then(next))),
            None => self.tiebreak = Some(Box::new(next)),
        }
        self
    }

    pub fn score(&self, word: &MorseWord) -> Score {
        let profile = LevelProfile::of(word);
        let mut parts = Vec::new();
        self.push_parts(word, &profile, &mut parts);
        Score(parts)
    }

    fn push_parts(&self, word: &MorseWord, profile: &LevelProfile, parts: &mut Vec<ScorePart>) {
        match self.kind {
            ObjectiveKind::GabaiWidth => parts.push(ScorePart::Int(profile.width())),
            ObjectiveKind::CriticalCount => {
                parts.push(ScorePart::Int(word.events().iter().filter(|e| e.is_critical()).count()))
            }
            ObjectiveKind::OTPLex => {
                parts.push(ScorePart::Seq(profile.otp_vector()));
                parts.push(ScorePart::Int(profile.width()));
            }
            ObjectiveKind::TrunkOnly => parts.push(ScorePart::Int(profile.trunk())),
        }
        if let Some(t) = &self.tiebreak {
            t.push_parts(word, profile, parts);
        }
    }
}

impl fmt::Display for Objective {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.kind {
            ObjectiveKind::GabaiWidth => "width",
            ObjectiveKind::CriticalCount => "critical",
            ObjectiveKind::OTPLex => "otp",
            ObjectiveKind::TrunkOnly => "trunk",
        };
        write!(f, "{}", name)?;
        if let Some(t) = &self.tiebreak {
            write!(f, ",{}", t)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchConfig {
    pub beam_width: usize,
    /// Number of layers to expand.
    pub max_steps: usize,
    /// Insertion moves allowed along any one path.
    pub insertion_budget: usize,
    /// Seeds the order among equally scored words when the beam is cut.
    pub random_seed: u64,
    /// Distinct canonical words the search may visit before giving up.
    pub max_visited: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig { beam_width: 64, max_steps: 32, insertion_budget: 2, random_seed: 0, max_visited: 500_000 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchResult {
    #[serde(serialize_with = "as_text")]
    pub best_word: MorseWord,
    pub best_report: EmbeddingReport,
    #[serde(serialize_with = "moves_as_text")]
    pub trace: Vec<Move>,
    pub visited: usize,
}

fn as_text<S: serde::Serializer>(w: &MorseWord, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(w)
}

fn moves_as_text<S: serde::Serializer>(m: &[Move], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(m.iter().map(|m| m.to_string()))
}

/// Applies `trace` to `start` in order.
pub fn replay(start: &MorseWord, trace: &[Move]) -> Result<MorseWord> {
    trace.iter().try_fold(start.clone(), |w, m| apply_move(&w, m))
}

#[derive(Clone)]
struct Node {
    word: MorseWord,
    trace: Vec<Move>,
    insertions: usize,
    score: Score,
}

struct Explorer<'a> {
    objective: &'a Objective,
    config: &'a SearchConfig,
    visited: HashSet<MorseWord>,
    best: Node,
}

impl<'a> Explorer<'a> {
    fn new(start: &MorseWord, objective: &'a Objective, config: &'a SearchConfig) -> Result<Self> {
        start.require_knot()?;
        let mut visited = HashSet::new();
        visited.insert(canonical_form(start));
        let best = Node { word: start.clone(), trace: vec![], insertions: 0, score: objective.score(start) };
        Ok(Explorer { objective, config, visited, best })
    }

    /// The next layer, sorted by canonical form, with new words marked visited.
    fn expand(&mut self, frontier: &[Node]) -> Vec<Node> {
        let budget = self.config.insertion_budget;
        let children: Vec<Vec<(MorseWord, MorseWord, Move, usize)>> = frontier
            .par_iter()
            .map(|node| {
                let growth = node.insertions < budget;
                enumerate_moves_with(&node.word, growth)
                    .into_iter()
                    .filter_map(|m| {
                        let w = apply_move(&node.word, &m).ok()?;
                        let key = canonical_form(&w);
                        Some((key, w, m, node.insertions + m.is_growth() as usize))
                    })
                    .collect()
            })
            .collect();

        let mut layer: BTreeMap<MorseWord, (usize, usize, Move, MorseWord)> = BTreeMap::new();
        for (parent, kids) in children.into_iter().enumerate() {
            for (key, word, mv, insertions) in kids {
                if self.visited.contains(&key) {
                    continue;
                }
                let better = match layer.get(&key) {
                    None => true,
                    Some((ins, _, _, w)) => (insertions, &word) < (*ins, w),
                };
                if better {
                    layer.insert(key, (insertions, parent, mv, word));
                }
            }
        }
        let entries: Vec<_> = layer.into_iter().collect();
        for (key, _) in &entries {
            self.visited.insert(key.clone());
        }
        let objective = self.objective;
        entries
            .into_par_iter()
            .map(|(_, (insertions, parent, mv, word))| {
                let mut trace = frontier[parent].trace.clone();
                trace.push(mv);
                let score = objective.score(&word);
                Node { word, trace, insertions, score }
            })
            .collect()
    }

    fn observe(&mut self, layer: &[Node]) {
        for node in layer {
            if node.score < self.best.score {
                self.best = node.clone();
            }
        }
    }

    fn over_budget(&self) -> bool {
        self.visited.len() > self.config.max_visited
    }

    fn result(&self) -> Result<SearchResult> {
        Ok(SearchResult {
            best_word: self.best.word.clone(),
            best_report: EmbeddingReport::of(&self.best.word)?,
            trace: self.best.trace.clone(),
            visited: self.visited.len(),
        })
    }

    fn budget_error(&self) -> Error {
        Error::BudgetExceeded {
            what: format!("visited more than {} words", self.config.max_visited),
            best: self.result().ok().map(Box::new),
        }
    }
}

/// Beam search from `start`. Never returns a word scoring worse than `start`.
pub fn beam_search(start: &MorseWord, objective: &Objective, config: &SearchConfig) -> Result<SearchResult> {
    if config.beam_width == 0 {
        return Err(Error::InvalidInput("beam width must be positive".into()));
    }
    let mut ex = Explorer::new(start, objective, config)?;
    let mut rng = ChaCha8Rng::seed_from_u64(config.random_seed);
    let mut frontier = vec![ex.best.clone()];
    for _ in 0..config.max_steps {
        let layer = ex.expand(&frontier);
        if layer.is_empty() {
            break;
        }
        ex.observe(&layer);
        if ex.over_budget() {
            return Err(ex.budget_error());
        }
        let mut ranked: Vec<(Score, u64, Node)> =
            layer.into_iter().map(|n| (n.score.clone(), rng.gen::<u64>(), n)).collect();
        ranked.sort_by(|a, b| (&a.0, a.1).cmp(&(&b.0, b.1)));
        ranked.truncate(config.beam_width);
        frontier = ranked.into_iter().map(|(_, _, n)| n).collect();
    }
    ex.result()
}

/// The best word within `radius` moves of `start`, by breadth-first search
/// of the whole ball. Uses `insertion_budget` and `max_visited` from `config`.
pub fn exhaustive_min(
    start: &MorseWord,
    objective: &Objective,
    radius: usize,
    config: &SearchConfig,
) -> Result<SearchResult> {
    let mut ex = Explorer::new(start, objective, config)?;
    let mut frontier = vec![ex.best.clone()];
    for _ in 0..radius {
        let layer = ex.expand(&frontier);
        if layer.is_empty() {
            break;
        }
        ex.observe(&layer);
        if ex.over_budget() {
            return Err(ex.budget_error());
        }
        frontier = layer;
    }
    ex.result()
}

/// Membership of one word in the empirical TP / MCP / OTP sets of a collection.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PositionClass {
    pub index: usize,
    pub width: usize,
    pub critical_count: usize,
    pub otp_vector: Vec<usize>,
    /// Width-minimal within the collection.
    pub tp: bool,
    /// Critical-count-minimal within the collection.
    pub mcp: bool,
    /// OTP-minimal within the collection.
    pub otp: bool,
}

impl PositionClass {
    /// The Venn cell, e.g. `TP∩OTP` or `MCP` or `none`.
    pub fn cell(&self) -> String {
        let names: Vec<&str> = [(self.tp, "TP"), (self.mcp, "MCP"), (self.otp, "OTP")]
            .into_iter()
            .filter_map(|(b, n)| b.then_some(n))
            .collect();
        if names.is_empty() {
            "none".to_string()
        } else {
            names.join("∩")
        }
    }
}

/// Classifies positions assumed to present one knot. The assumption is
/// checked only through the writhe-normalized bracket.
pub fn classify_positions(words: &[MorseWord]) -> Result<Vec<PositionClass>> {
    let mut reports = Vec::with_capacity(words.len());
    let mut first_poly = None;
    for (i, w) in words.iter().enumerate() {
        reports.push(EmbeddingReport::of(w)?);
        let p = jones_normalized(w)?;
        match &first_poly {
            None => first_poly = Some(p),
            Some(q) if *q != p => return Err(Error::BracketMismatch { first: 0, second: i }),
            Some(_) => {}
        }
    }
    let min_width = reports.iter().map(|r| r.width).min();
    let min_crit = reports.iter().map(|r| r.critical_count).min();
    let min_otp = reports.iter().map(|r| r.otp_vector.clone()).min();
    Ok(reports
        .into_iter()
        .enumerate()
        .map(|(index, r)| PositionClass {
            index,
            tp: Some(r.width) == min_width,
            mcp: Some(r.critical_count) == min_crit,
            otp: min_otp.as_ref() == Some(&r.otp_vector),
            width: r.width,
            critical_count: r.critical_count,
            otp_vector: r.otp_vector,
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::pad;
    use crate::word::{MorseEvent::*, Sign::Neg};

    fn trefoil() -> MorseWord {
        MorseWord::knot(vec![Cup(1), Cup(3), Cross(2, Neg), Cross(2, Neg), Cross(2, Neg), Cap(3), Cap(1)])
            .unwrap()
    }

    #[test]
    fn scores_order_as_documented() {
        let otp = Objective::new(ObjectiveKind::OTPLex);
        assert!(otp.score(&trefoil()) < otp.score(&pad(&trefoil(), 1)));
        let w = Objective::new(ObjectiveKind::GabaiWidth).then(Objective::new(ObjectiveKind::TrunkOnly));
        assert_eq!(w.score(&trefoil()), Score(vec![ScorePart::Int(8), ScorePart::Int(4)]));
        assert_eq!(w.to_string(), "width,trunk");
    }

    #[test]
    fn beam_unpads_trefoil() {
        let start = pad(&trefoil(), 1);
        let r = beam_search(&start, &Objective::new(ObjectiveKind::GabaiWidth), &SearchConfig::default()).unwrap();
        assert_eq!(r.best_report.width, 8);
        assert_eq!(replay(&start, &r.trace).unwrap(), r.best_word);
    }

    #[test]
    fn unknot_stays() {
        let cfg = SearchConfig { max_steps: 3, ..SearchConfig::default() };
        for kind in [ObjectiveKind::GabaiWidth, ObjectiveKind::CriticalCount, ObjectiveKind::OTPLex] {
            let r = beam_search(&MorseWord::unknot(), &Objective::new(kind), &cfg).unwrap();
            assert_eq!(r.best_word, MorseWord::unknot());
            assert!(r.trace.is_empty());
        }
    }

    #[test]
    fn tiny_budget_reports_best_so_far() {
        let cfg = SearchConfig { max_visited: 3, ..SearchConfig::default() };
        let err = beam_search(&pad(&trefoil(), 1), &Objective::new(ObjectiveKind::GabaiWidth), &cfg).unwrap_err();
        match err {
            Error::BudgetExceeded { best: Some(best), .. } => assert!(best.best_report.width <= 18),
            other => panic!("unexpected {:?}", other),
        }
    }

    #[test]
    fn classification_of_plat_and_padding() {
        let classes = classify_positions(&[trefoil(), pad(&trefoil(), 1)]).unwrap();
        assert_eq!(classes[0].cell(), "TP∩MCP∩OTP");
        assert_eq!(classes[1].cell(), "none");
        let single = classify_positions(&[trefoil()]).unwrap();
        assert_eq!(single[0].cell(), "TP∩MCP∩OTP");
    }

    #[test]
    fn different_knots_are_rejected() {
        let err = classify_positions(&[trefoil(), MorseWord::unknot()]).unwrap_err();
        assert!(matches!(err, Error::BracketMismatch { first: 0, second: 1 }));
    }
}
