//! The local moves available on a word, applied one at a time and undone.
//!
//!     cargo run --example rewrite_moves -- "b1 b3 x2- x2- x2- d3 d1"

use thinpos::{apply_move, canonical_form, enumerate_moves, inverse_move, parse_closed, width};

fn main() -> thinpos::Result<()> {
    let text = std::env::args().nth(1).unwrap_or_else(|| "b1 b3 x2+ x2+ x1- x2+ d3 d1".into());
    let w = parse_closed(&text)?;
    println!("word      {}  (width {})", w, width(&w));
    println!("canonical {}", canonical_form(&w));
    for mv in enumerate_moves(&w) {
        let after = apply_move(&w, &mv)?;
        let back = apply_move(&after, &inverse_move(&w, &mv)?)?;
        assert_eq!(back, w);
        println!("{:<28} width {:>3}  {}", mv.to_string(), width(&after), after);
    }
    Ok(())
}
