//! Splits the tube algebra into matrix blocks and prints the simple objects
//! of the Drinfeld center with their half-braiding residuals and twists.
//!
//!     cargo run --example center -- fib 1

use tubecat::category::catalog_entry;
use tubecat::center::center_report;
use tubecat::LambdaObject;

fn main() -> tubecat::Result<()> {
    let mut args = std::env::args().skip(1);
    let name = args.next().unwrap_or_else(|| "ising".into());
    let seed: u64 = args.next().and_then(|s| s.parse().ok()).unwrap_or(1);
    let spec = catalog_entry(&name)?;
    let lambda = LambdaObject::all_simples(spec.rank());
    let dim = spec.global_dim();
    let report = center_report(spec, lambda, seed, 1e-9)?;
    print!("{}", report.to_text());
    let sq: usize = report.blocks.iter().map(|b| b.size * b.size).sum();
    println!(
        "sum of n^2 = {sq} (tube dim {}), dim(C)^2 = {:.6}",
        report.tube_dim,
        dim * dim
    );
    Ok(())
}
