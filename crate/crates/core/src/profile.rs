//! Level profiles: the regular levels between consecutive critical points.

use serde::Serialize;

use crate::word::{MorseEvent, MorseWord};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GapClass {
    /// A minimum below and a maximum above.
    Thick,
    /// A maximum below and a minimum above.
    Thin,
    Neither,
}

impl GapClass {
    pub fn as_str(self) -> &'static str {
        match self {
            GapClass::Thick => "thick",
            GapClass::Thin => "thin",
            GapClass::Neither => "neither",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CriticalKind {
    Min,
    Max,
}

/// One regular interval between consecutive critical events.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Gap {
    pub width: usize,
    pub below: CriticalKind,
    pub above: CriticalKind,
    /// Position in the word of the critical event below the gap.
    pub start: usize,
}

impl Gap {
    pub fn class(&self) -> GapClass {
        match (self.below, self.above) {
            (CriticalKind::Min, CriticalKind::Max) => GapClass::Thick,
            (CriticalKind::Max, CriticalKind::Min) => GapClass::Thin,
            _ => GapClass::Neither,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LevelProfile {
    gaps: Vec<Gap>,
}

impl LevelProfile {
    pub fn of(word: &MorseWord) -> Self {
        let mut gaps = Vec::new();
        let mut n = 0usize;
        let mut prev: Option<(usize, CriticalKind)> = None;
        for (pos, &e) in word.events().iter().enumerate() {
            let kind = match e {
                MorseEvent::Cup(_) => CriticalKind::Min,
                MorseEvent::Cap(_) => CriticalKind::Max,
                MorseEvent::Cross(..) => continue,
            };
            if let Some((start, below)) = prev {
                gaps.push(Gap { width: n, below, above: kind, start });
            }
            n = e.apply_count(n);
            prev = Some((pos, kind));
        }
        LevelProfile { gaps }
    }

    pub fn gaps(&self) -> &[Gap] {
        &self.gaps
    }

    pub fn widths_of(&self, class: GapClass) -> impl Iterator<Item = usize> + '_ {
        self.gaps.iter().filter(move |g| g.class() == class).map(|g| g.width)
    }

    pub fn thick(&self) -> Vec<usize> {
        self.widths_of(GapClass::Thick).collect()
    }

    pub fn thin(&self) -> Vec<usize> {
        self.widths_of(GapClass::Thin).collect()
    }

    /// Sum of all gap widths.
    pub fn width(&self) -> usize {
        self.gaps.iter().map(|g| g.width).sum()
    }

    /// Largest gap width.
    pub fn trunk(&self) -> usize {
        self.gaps.iter().map(|g| g.width).max().unwrap_or(0)
    }

    pub fn height(&self) -> usize {
        self.widths_of(GapClass::Thick).count()
    }

    /// Thick widths sorted non-increasing.
    pub fn otp_vector(&self) -> Vec<usize> {
        let mut v = self.thick();
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    }
}
