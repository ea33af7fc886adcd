//! Kauffman bracket as a knot-type check: a rewrite changes the word but
//! not the writhe-normalized bracket.
//!
//!     cargo run --example bracket_oracle

use thinpos::{
    apply_move, catalog_closed, enumerate_moves, jones_normalized, kauffman_bracket, planar_diagram, torus_plat,
    Error, Sign,
};

fn main() -> thinpos::Result<()> {
    for name in ["unknot", "trefoil_plat", "figure8_plat", "torus_plat(2,5)"] {
        let w = catalog_closed(name)?;
        println!("{:<16} writhe {:>3}  <K> = {}", name, planar_diagram(&w).writhe(), kauffman_bracket(&w)?);
    }

    let w = catalog_closed("figure8_plat")?;
    let reference = jones_normalized(&w)?;
    for mv in enumerate_moves(&w) {
        let after = apply_move(&w, &mv)?;
        let same = jones_normalized(&after)? == reference;
        println!("{:<28} -> {:<40} invariant: {}", mv.to_string(), after.to_string(), same);
        assert!(same);
    }

    match kauffman_bracket(&torus_plat(2, 21, Sign::Pos)?) {
        Err(Error::BudgetExceeded { what, .. }) => println!("21 crossings: {}", what),
        other => panic!("expected a budget error, got {:?}", other),
    }
    Ok(())
}
