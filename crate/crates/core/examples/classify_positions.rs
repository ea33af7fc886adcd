//! Which of several positions of one knot are width-, critical- or
//! OTP-minimal among themselves.
//!
//!     cargo run --example classify_positions

use thinpos::{catalog_closed, classify_positions, pad};

fn main() -> thinpos::Result<()> {
    let groups = [
        vec!["bt134", "bt_mcp"],
        vec!["stack_101010", "bt134", "bt_mcp", "cex4_gamma"],
    ];
    for names in groups {
        let words = names.iter().map(|n| catalog_closed(n)).collect::<thinpos::Result<Vec<_>>>()?;
        for c in classify_positions(&words)? {
            println!(
                "{:<14} width {:>4}  critical {:>3}  otp {:<14} {}",
                names[c.index],
                c.width,
                c.critical_count,
                format!("{:?}", c.otp_vector),
                c.cell()
            );
        }
        println!();
    }

    let plat = catalog_closed("trefoil_plat")?;
    let words = [plat.clone(), pad(&plat, 1), pad(&plat, 2)];
    for c in classify_positions(&words)? {
        println!("trefoil +{} fingers  width {:>3}  {}", c.index, c.width, c.cell());
    }
    Ok(())
}
