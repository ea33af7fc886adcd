//! Per-embedding invariants of a Morse word.
//!
//! Everything here is a property of one presentation. Knot-type minima
//! (minimum width or trunk over every embedding) are not computed; at best
//! they are bounded empirically by searching over positions.

use std::cmp::Ordering;
use std::fmt;

use num_rational::Ratio;
use serde::{Serialize, Serializer};

use crate::error::Result;
use crate::profile::{GapClass, LevelProfile};
use crate::word::{MorseWord, TangleWord};

/// An exact non-negative rational, serialized as `{num, den}` in lowest terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Fraction(pub Ratio<u64>);

impl Fraction {
    pub fn new(num: u64, den: u64) -> Self {
        Fraction(Ratio::new(num, den))
    }

    pub fn num(&self) -> u64 {
        *self.0.numer()
    }

    pub fn den(&self) -> u64 {
        *self.0.denom()
    }

    pub fn to_f64(&self) -> f64 {
        self.num() as f64 / self.den() as f64
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num(), self.den())
    }
}

impl Serialize for Fraction {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            num: u64,
            den: u64,
        }
        Repr { num: self.num(), den: self.den() }.serialize(s)
    }
}

pub fn width(word: &MorseWord) -> usize {
    LevelProfile::of(word).width()
}

/// Largest number of strands met by any regular level.
pub fn trunk_embedding(word: &MorseWord) -> usize {
    LevelProfile::of(word).trunk()
}

/// Number of maxima.
pub fn bridge_count(word: &MorseWord) -> usize {
    word.events().iter().filter(|e| matches!(e, crate::MorseEvent::Cap(_))).count()
}

pub fn critical_count(word: &MorseWord) -> usize {
    word.events().iter().filter(|e| e.is_critical()).count()
}

/// Number of thick levels.
pub fn height_embedding(word: &MorseWord) -> usize {
    LevelProfile::of(word).height()
}

pub fn otp_vector(word: &MorseWord) -> Vec<usize> {
    LevelProfile::of(word).otp_vector()
}

/// Lexicographic order on non-increasing thick-width vectors. A proper prefix
/// sorts before its extensions, which is the same as padding with zeros.
pub fn otp_compare(a: &[usize], b: &[usize]) -> Ordering {
    a.cmp(b)
}

/// `trunk / (height * 2 * bridge)`.
pub fn proportion(word: &MorseWord) -> Fraction {
    let p = LevelProfile::of(word);
    proportion_of(p.trunk(), p.height(), bridge_count(word))
}

fn proportion_of(trunk: usize, height: usize, bridge: usize) -> Fraction {
    Fraction::new(trunk as u64, (height * 2 * bridge) as u64)
}

/// Mean width of the thick levels.
pub fn average_trunk(word: &MorseWord) -> Fraction {
    average_of(&LevelProfile::of(word).thick())
}

fn average_of(thick: &[usize]) -> Fraction {
    Fraction::new(thick.iter().sum::<usize>() as u64, thick.len() as u64)
}

/// Upper bound on representativity carried by this embedding:
/// `min(bridge, floor(trunk / 2))`.
pub fn rep_upper_bound(word: &MorseWord) -> Result<usize> {
    word.require_knot()?;
    Ok(bridge_count(word).min(trunk_embedding(word) / 2))
}

/// Upper bound on the waist carried by this embedding: `floor(trunk / 3)`.
pub fn waist_upper_bound(word: &MorseWord) -> Result<usize> {
    word.require_knot()?;
    Ok(trunk_embedding(word) / 3)
}

/// Largest strand count over the levels of a tangle, boundary level included.
pub fn tangle_trunk(word: &TangleWord) -> usize {
    word.counts().into_iter().max().unwrap_or(0)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GapSummary {
    pub width: usize,
    pub class: GapClass,
}

/// Every per-embedding invariant of a knot word.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EmbeddingReport {
    pub width: usize,
    pub trunk: usize,
    pub height: usize,
    pub bridge: usize,
    pub critical_count: usize,
    pub otp_vector: Vec<usize>,
    pub proportion: Fraction,
    pub average_trunk: Fraction,
    pub rep_upper: usize,
    pub waist_upper: usize,
    pub gaps: Vec<GapSummary>,
}

impl EmbeddingReport {
    pub fn of(word: &MorseWord) -> Result<Self> {
        word.require_knot()?;
        let p = LevelProfile::of(word);
        let bridge = bridge_count(word);
        let trunk = p.trunk();
        let height = p.height();
        Ok(EmbeddingReport {
            width: p.width(),
            trunk,
            height,
            bridge,
            critical_count: critical_count(word),
            otp_vector: p.otp_vector(),
            proportion: proportion_of(trunk, height, bridge),
            average_trunk: average_of(&p.thick()),
            rep_upper: bridge.min(trunk / 2),
            waist_upper: trunk / 3,
            gaps: p.gaps().iter().map(|g| GapSummary { width: g.width, class: g.class() }).collect(),
        })
    }

    pub fn thick(&self) -> Vec<usize> {
        self.widths(GapClass::Thick)
    }

    pub fn thin(&self) -> Vec<usize> {
        self.widths(GapClass::Thin)
    }

    fn widths(&self, class: GapClass) -> Vec<usize> {
        self.gaps.iter().filter(|g| g.class == class).map(|g| g.width).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::{MorseEvent::*, Sign::Neg};

    fn trefoil() -> MorseWord {
        MorseWord::knot(vec![Cup(1), Cup(3), Cross(2, Neg), Cross(2, Neg), Cross(2, Neg), Cap(3), Cap(1)])
            .unwrap()
    }

    #[test]
    fn trefoil_counts() {
        let w = trefoil();
        assert_eq!(bridge_count(&w), 2);
        assert_eq!(critical_count(&w), 4);
        assert_eq!(height_embedding(&w), 1);
        assert_eq!(otp_vector(&w), vec![4]);
        assert_eq!(trunk_embedding(&w), 4);
        assert_eq!(proportion(&w), Fraction::new(1, 1));
    }

    #[test]
    fn otp_order() {
        assert_eq!(otp_compare(&[8, 8], &[10, 10, 10]), Ordering::Less);
        assert_eq!(otp_compare(&[4], &[4]), Ordering::Equal);
        assert_eq!(otp_compare(&[10, 10], &[10, 10, 10]), Ordering::Less);
        assert_eq!(otp_compare(&[10, 10, 10], &[10, 8]), Ordering::Greater);
    }

    #[test]
    fn bounds() {
        assert_eq!(rep_upper_bound(&trefoil()).unwrap(), 2);
        assert_eq!(waist_upper_bound(&trefoil()).unwrap(), 1);
        assert_eq!(rep_upper_bound(&MorseWord::unknot()).unwrap(), 1);
        assert_eq!(waist_upper_bound(&MorseWord::unknot()).unwrap(), 0);
    }

    #[test]
    fn knot_level_ops_reject_links() {
        let link = MorseWord::new(vec![Cup(1), Cup(1), Cap(1), Cap(1)]).unwrap();
        assert!(rep_upper_bound(&link).is_err());
        assert!(EmbeddingReport::of(&link).is_err());
        // calculus still works
        assert_eq!(width(&link), 2 + 4 + 2);
    }

    #[test]
    fn fraction_json() {
        let s = serde_json::to_string(&Fraction::new(10, 66)).unwrap();
        assert_eq!(s, r#"{"num":5,"den":33}"#);
    }
}
