//! Built-in presentations and the `WordSource` syntax used by the CLI.
//!
//! Entries named after published profiles (`cex4_*`, `bt*`, `stack_101010`)
//! reproduce level profiles only. The knots they were quoted for are built
//! from braid boxes that are not pinned down, so these stand-ins are
//! crossing-free unknots with exactly the quoted thick and thin widths.

use std::str::FromStr;

use crate::construct::{pad, realize_profile, torus_plat};
use crate::dsl::{parse, parse_closed};
use crate::error::{Error, Result};
use crate::word::{AnyWord, MorseWord, Sign, TangleWord};

pub struct Entry {
    pub name: &'static str,
    pub about: &'static str,
}

pub const ENTRIES: &[Entry] = &[
    Entry { name: "unknot", about: "b1 d1" },
    Entry { name: "trefoil_plat", about: "(2,3)-torus knot as a 4-plat, width 8" },
    Entry { name: "figure8_plat", about: "figure-eight knot as a 4-plat" },
    Entry { name: "torus_plat(p,q)", about: "closure of (x1..x(p-1))^q with p nested cups and caps" },
    Entry { name: "padded_trefoil", about: "trefoil_plat with one zig-zag finger, profile 2,4,6,4,2" },
    Entry { name: "cex4_gamma", about: "profile stand-in: one thick level of 22, width 242" },
    Entry { name: "cex4_gamma_prime", about: "profile stand-in: thick 18,14 and thin 6, width 242" },
    Entry { name: "bt134", about: "profile stand-in: thick 10,10,10 and thin 4,4, width 134" },
    Entry { name: "bt_mcp", about: "profile stand-in: thick 12,12 and thin 4, width 136" },
    Entry { name: "stack_101010", about: "profile stand-in: thick 10,10,10 and thin 6,6" },
    Entry { name: "rational_tangle", about: "2-string rational tangle, 4 -> 2 -> 0 strands" },
    Entry { name: "two_rational_sum", about: "two rational tangles side by side on 4 boundary points, trunk 6" },
];

pub const TREFOIL_PLAT: &str = "b1 b3 x2- x2- x2- d3 d1";
pub const FIGURE8_PLAT: &str = "b1 b3 x2+ x2+ x1- x2+ d3 d1";
pub const RATIONAL_TANGLE: &str = "tangle 4 x2+ x2+ x2+ d2 d1";
pub const TWO_RATIONAL_SUM: &str = "tangle 4 b3 x2+ x2+ x2+ x4- x4- x4- d1 d3 d1";

fn closed(text: &str) -> MorseWord {
    parse_closed(text).expect("catalog text is valid")
}

fn tangle(text: &str) -> TangleWord {
    match parse(text).expect("catalog text is valid") {
        AnyWord::Tangle(t) => t,
        AnyWord::Closed(_) => unreachable!(),
    }
}

fn parse_pair(args: &str) -> Option<(usize, usize)> {
    let (p, q) = args.split_once(',')?;
    Some((p.trim().parse().ok()?, q.trim().parse().ok()?))
}

/// Looks up a catalog entry by name.
pub fn catalog(name: &str) -> Result<AnyWord> {
    let name = name.trim();
    let word = match name {
        "unknot" => MorseWord::unknot(),
        "trefoil_plat" => closed(TREFOIL_PLAT),
        "figure8_plat" => closed(FIGURE8_PLAT),
        "padded_trefoil" => pad(&closed(TREFOIL_PLAT), 1),
        "cex4_gamma" => realize_profile(&[22])?,
        "cex4_gamma_prime" => realize_profile(&[18, 6, 14])?,
        "bt134" => realize_profile(&[10, 4, 10, 4, 10])?,
        "bt_mcp" => realize_profile(&[12, 4, 12])?,
        "stack_101010" => realize_profile(&[10, 6, 10, 6, 10])?,
        "rational_tangle" => return Ok(AnyWord::Tangle(tangle(RATIONAL_TANGLE))),
        "two_rational_sum" => return Ok(AnyWord::Tangle(tangle(TWO_RATIONAL_SUM))),
        _ => {
            let args = name
                .strip_prefix("torus_plat(")
                .and_then(|r| r.strip_suffix(')'))
                .ok_or_else(|| Error::UnknownName(name.to_string()))?;
            let (p, q) = parse_pair(args).ok_or_else(|| Error::UnknownName(name.to_string()))?;
            torus_plat(p, q, Sign::Pos)?
        }
    };
    Ok(AnyWord::Closed(word))
}

/// A closed catalog word; errors for tangle entries.
pub fn catalog_closed(name: &str) -> Result<MorseWord> {
    match catalog(name)? {
        AnyWord::Closed(w) => Ok(w),
        AnyWord::Tangle(_) => Err(Error::InvalidInput(format!("`{}` is a tangle", name))),
    }
}

/// Where a word comes from on the command line.
///
/// * `catalog:<name>`, e.g. `catalog:bt134` or `catalog:torus_plat(2,5)`
/// * `profile:<w1>,<w2>,...` realizes thick/thin widths bottom to top
/// * `torus:<p>,<q>`
/// * `pad:<k>:<source>` adds `k` zig-zag fingers to another source
/// * `file:<path>` reads word text from a file
/// * anything else is word text
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WordSource {
    Text(String),
    Catalog(String),
    Profile(Vec<usize>),
    Torus(usize, usize),
    Pad(usize, Box<WordSource>),
    File(String),
}

impl FromStr for WordSource {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidInput(format!("cannot read word source `{}`", s));
        Ok(if let Some(name) = s.strip_prefix("catalog:") {
            WordSource::Catalog(name.to_string())
        } else if let Some(list) = s.strip_prefix("profile:") {
            let widths = list
                .split(',')
                .map(|w| w.trim().parse::<usize>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|_| bad())?;
            WordSource::Profile(widths)
        } else if let Some(pq) = s.strip_prefix("torus:") {
            let (p, q) = parse_pair(pq).ok_or_else(bad)?;
            WordSource::Torus(p, q)
        } else if let Some(rest) = s.strip_prefix("pad:") {
            let (k, inner) = rest.split_once(':').ok_or_else(bad)?;
            WordSource::Pad(k.parse().map_err(|_| bad())?, Box::new(inner.parse()?))
        } else if let Some(path) = s.strip_prefix("file:") {
            WordSource::File(path.to_string())
        } else {
            WordSource::Text(s.to_string())
        })
    }
}

impl WordSource {
    pub fn resolve(&self) -> Result<AnyWord> {
        match self {
            WordSource::Text(t) => parse(t),
            WordSource::Catalog(name) => catalog(name),
            WordSource::Profile(levels) => Ok(AnyWord::Closed(realize_profile(levels)?)),
            WordSource::Torus(p, q) => Ok(AnyWord::Closed(torus_plat(*p, *q, Sign::Pos)?)),
            WordSource::Pad(k, inner) => match inner.resolve()? {
                AnyWord::Closed(w) => Ok(AnyWord::Closed(pad(&w, *k))),
                AnyWord::Tangle(_) => Err(Error::InvalidInput("only closed words can be padded".into())),
            },
            WordSource::File(path) => parse(&std::fs::read_to_string(path)?),
        }
    }

    pub fn resolve_closed(&self) -> Result<MorseWord> {
        match self.resolve()? {
            AnyWord::Closed(w) => Ok(w),
            AnyWord::Tangle(_) => Err(Error::InvalidInput("expected a closed word, found a tangle".into())),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::*;

    #[test]
    fn every_entry_resolves() {
        for e in ENTRIES {
            let name = e.name.replace("(p,q)", "(2,5)");
            let w = catalog(&name).unwrap();
            if let AnyWord::Closed(w) = w {
                assert!(w.is_knot(), "{} is not a knot", name);
            }
        }
        assert!(matches!(catalog("granny"), Err(Error::UnknownName(_))));
        assert!(matches!(catalog("torus_plat(2,)"), Err(Error::UnknownName(_))));
    }

    #[test]
    fn stand_in_profiles() {
        let w = catalog_closed("cex4_gamma").unwrap();
        assert_eq!((width(&w), trunk_embedding(&w), bridge_count(&w)), (242, 22, 11));
        let w = catalog_closed("bt_mcp").unwrap();
        assert_eq!((width(&w), bridge_count(&w)), (136, 10));
    }

    #[test]
    fn sources() {
        let s: WordSource = "pad:1:catalog:trefoil_plat".parse().unwrap();
        assert_eq!(s.resolve_closed().unwrap(), catalog_closed("padded_trefoil").unwrap());
        let s: WordSource = "profile:8,2,8".parse().unwrap();
        assert_eq!(otp_vector(&s.resolve_closed().unwrap()), vec![8, 8]);
        let s: WordSource = "torus:2,3".parse().unwrap();
        assert_eq!(s.resolve_closed().unwrap().to_string(), "b1 b2 x1+ x1+ x1+ d2 d1");
        assert_eq!("b1 d1".parse::<WordSource>().unwrap(), WordSource::Text("b1 d1".into()));
        assert!("profile:8,x".parse::<WordSource>().is_err());
    }
}
