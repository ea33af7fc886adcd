//! Drawing level profiles as text or SVG.
//!
//! One bar per thick or thin level, highest level first, with bar length
//! proportional to the number of strands crossing that level.

use std::fmt::Write;

use crate::profile::{GapClass, LevelProfile};
use crate::word::MorseWord;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Ascii,
    Svg,
}

const MAX_BAR: usize = 60;
const SVG_UNIT: usize = 8;
const SVG_ROW: usize = 24;

/// Thick and thin levels, top to bottom.
fn bars(word: &MorseWord) -> Vec<(usize, GapClass)> {
    let p = LevelProfile::of(word);
    p.gaps().iter().rev().filter(|g| g.class() != GapClass::Neither).map(|g| (g.width, g.class())).collect()
}

pub fn render_profile(word: &MorseWord, format: Format) -> String {
    match format {
        Format::Ascii => ascii(word),
        Format::Svg => svg(word),
    }
}

fn ascii(word: &MorseWord) -> String {
    let bars = bars(word);
    let widest = bars.iter().map(|b| b.0).max().unwrap_or(1);
    let mut out = String::new();
    for (width, class) in bars {
        let len = if widest <= MAX_BAR { width } else { (width * MAX_BAR).div_ceil(widest) };
        writeln!(out, "{:<5} {:>4} {}", class.as_str(), width, "#".repeat(len)).unwrap();
    }
    out
}

fn svg(word: &MorseWord) -> String {
    let bars = bars(word);
    let widest = bars.iter().map(|b| b.0).max().unwrap_or(1);
    let label = 100;
    let w = label + widest * SVG_UNIT + 10;
    let h = bars.len() * SVG_ROW + 10;
    let mut out = String::new();
    writeln!(out, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{}" height="{}" viewBox="0 0 {} {}">"#, w, h, w, h)
        .unwrap();
    for (k, (width, class)) in bars.iter().enumerate() {
        let y = 5 + k * SVG_ROW;
        let fill = if *class == GapClass::Thick { "#c0392b" } else { "#2980b9" };
        writeln!(
            out,
            r#"  <text x="5" y="{}" font-family="monospace" font-size="12">{} {}</text>"#,
            y + 15,
            class.as_str(),
            width
        )
        .unwrap();
        writeln!(
            out,
            r#"  <rect class="{}" x="{}" y="{}" width="{}" height="{}" fill="{}"/>"#,
            class.as_str(),
            label,
            y,
            width * SVG_UNIT,
            SVG_ROW - 6,
            fill
        )
        .unwrap();
    }
    out.push_str("</svg>\n");
    out
}
