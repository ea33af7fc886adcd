//! Per-embedding invariants of every closed catalog word.
//!
//!     cargo run --example analyze_catalog

use thinpos::catalog::ENTRIES;
use thinpos::{catalog, AnyWord, EmbeddingReport};

fn main() -> thinpos::Result<()> {
    println!("{:<18} {:>5} {:>5} {:>3} {:>3}  {:<7} {:<12} thick / thin", "word", "width", "trunk", "ht", "b", "pro", "avg trunk");
    for e in ENTRIES {
        let name = e.name.replace("(p,q)", "(3,4)");
        let AnyWord::Closed(w) = catalog(&name)? else { continue };
        let r = EmbeddingReport::of(&w)?;
        println!(
            "{:<18} {:>5} {:>5} {:>3} {:>3}  {:<7} {:<12} {:?} / {:?}",
            name,
            r.width,
            r.trunk,
            r.height,
            r.bridge,
            format!("{}/{}", r.proportion.num(), r.proportion.den()),
            format!("{}/{}", r.average_trunk.num(), r.average_trunk.den()),
            r.thick(),
            r.thin()
        );
    }
    Ok(())
}
