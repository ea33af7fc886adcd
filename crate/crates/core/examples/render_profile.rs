//! Thick and thin levels as ASCII bars, or SVG with `--svg`.
//!
//!     cargo run --example render_profile -- bt134
//!     cargo run --example render_profile -- cex4_gamma_prime --svg > levels.svg

use thinpos::{catalog_closed, render_profile, Format};

fn main() -> thinpos::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let svg = args.iter().any(|a| a == "--svg");
    let name = args.iter().find(|a| !a.starts_with("--")).map(String::as_str).unwrap_or("bt134");
    let w = catalog_closed(name)?;
    let format = if svg { Format::Svg } else { Format::Ascii };
    print!("{}", render_profile(&w, format));
    Ok(())
}
