//! Width, bridge number and trunk of a connected sum.
//!
//!     cargo run --example connected_sum

use thinpos::{bridge_count, catalog_closed, connected_sum, jones_normalized, trunk_embedding, width};

fn main() -> thinpos::Result<()> {
    let trefoil = catalog_closed("trefoil_plat")?;
    let fig8 = catalog_closed("figure8_plat")?;
    let sum = connected_sum(&trefoil, &fig8)?;
    println!("{}  #  {}", trefoil, fig8);
    println!("  = {}", sum);
    for (name, w) in [("trefoil", &trefoil), ("figure-8", &fig8), ("sum", &sum)] {
        println!("{:<9} width {:>3}  bridge {}  trunk {}", name, width(w), bridge_count(w), trunk_embedding(w));
    }
    println!("width(sum) = {} + {} - 2", width(&trefoil), width(&fig8));

    let product = &jones_normalized(&trefoil)? * &jones_normalized(&fig8)?;
    assert_eq!(jones_normalized(&sum)?, product);
    println!("normalized bracket of the sum: {}", product);
    Ok(())
}
