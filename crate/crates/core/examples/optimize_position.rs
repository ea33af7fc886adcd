//! Beam search from a padded trefoil back down to a minimal-width plat,
//! then the same search checked against an exhaustive sweep of a small ball.
//!
//!     cargo run --release --example optimize_position [seed]

use thinpos::{
    beam_search, catalog_closed, exhaustive_min, Objective, ObjectiveKind, SearchConfig,
};

fn main() -> thinpos::Result<()> {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(0);
    let start = catalog_closed("padded_trefoil")?;
    let objective = Objective::new(ObjectiveKind::GabaiWidth).then(Objective::new(ObjectiveKind::CriticalCount));
    let config = SearchConfig { random_seed: seed, ..SearchConfig::default() };

    let r = beam_search(&start, &objective, &config)?;
    println!("start  {}  (width {})", start, thinpos::width(&start));
    for (k, m) in r.trace.iter().enumerate() {
        println!("  {:>2}. {}", k + 1, m);
    }
    println!("best   {}  (width {}, otp {:?})", r.best_word, r.best_report.width, r.best_report.otp_vector);
    println!("visited {} canonical words", r.visited);

    let ball = exhaustive_min(&start, &objective, 2, &SearchConfig { insertion_budget: 0, ..config })?;
    println!("exhaustive radius 2: width {} after visiting {}", ball.best_report.width, ball.visited);
    Ok(())
}
