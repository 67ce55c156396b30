//! Runs every relation suite on one category and prints the worst case of each.
//!
//!     cargo run --example verify_relations -- ising

use tubecat::category::catalog_entry;
use tubecat::diagram::{global_dim_routes, run_all_suites};
use tubecat::Engine;

fn main() -> tubecat::Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "fib".into());
    let engine = Engine::new(catalog_entry(&name)?)?;
    for r in run_all_suites(&engine, 1e-9, 1) {
        println!("{}", r.to_text());
        if let Some(w) = r.worst() {
            println!("    worst at ({}) = {:.3e}", w.labels.join(", "), w.residual);
        }
    }
    // Σ double bigons = dim(C), computed three ways
    for x in 0..engine.rank() {
        let r = global_dim_routes(&engine, x, x);
        println!(
            "  x = {:<6} direct {:.12}  bigon {:.12}  I=H {:.12}",
            engine.spec().label(x),
            r.direct.re,
            r.bigon,
            r.ih.re
        );
    }
    Ok(())
}
