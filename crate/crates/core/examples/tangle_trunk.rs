//! Tangle words: boundary strands enter from below, the trunk is the widest level.
//!
//!     cargo run --example tangle_trunk

use thinpos::{catalog, parse, tangle_trunk, AnyWord};

fn main() -> thinpos::Result<()> {
    for name in ["rational_tangle", "two_rational_sum"] {
        if let AnyWord::Tangle(t) = catalog(name)? {
            let arcs = t.components().arcs;
            println!("{:<17} {}  levels {:?}  arcs {}  trunk {}", name, t, t.counts(), arcs, tangle_trunk(&t));
        }
    }
    // a closed loop inside a tangle is rejected
    match parse("tangle 2 b1 d1 d1") {
        Err(e) => println!("rejected: {}", e),
        Ok(w) => println!("accepted {:?}", w),
    }
    Ok(())
}
