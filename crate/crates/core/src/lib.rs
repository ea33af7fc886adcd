//! Width, trunk, height and related invariants of Morse presentations of
//! knots and tangles, plus a search over knot-type-preserving rewrites for
//! thinner positions.
//!
//! A presentation is a [`MorseWord`]: cups, caps and signed crossings read
//! bottom to top. Everything computed from one word is a property of that
//! embedding; see `examples/` for a tour of each capability.

pub mod bracket;
pub mod catalog;
pub mod cli;
pub mod components;
pub mod construct;
pub mod dsl;
pub mod dsu;
pub mod error;
pub mod invariants;
pub mod moves;
pub mod poly;
pub mod profile;
pub mod random;
pub mod render;
pub mod search;
mod trace;
pub mod word;

pub use bracket::{jones_normalized, kauffman_bracket, planar_diagram, PlanarDiagram};
pub use catalog::{catalog, catalog_closed, WordSource};
pub use construct::{connected_sum, pad, realize_profile, torus_plat};
pub use dsl::{parse, parse_closed, serialize};
pub use error::{Error, Result, SyntaxError, ValidationReport, Violation, ViolationKind};
pub use invariants::*;
pub use poly::LaurentPoly;
pub use moves::{apply_move, canonical_form, enumerate_moves, inverse_move, Anchor, Move, MoveKind, Side};
pub use profile::{Gap, GapClass, LevelProfile};
pub use render::{render_profile, Format};
pub use word::{validate, AnyWord, Mode, MorseEvent, MorseWord, Sign, TangleWord};
pub use search::{
    beam_search, classify_positions, exhaustive_min, replay, Objective, ObjectiveKind, PositionClass, SearchConfig,
    SearchResult,
};
