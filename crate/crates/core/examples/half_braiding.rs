//! Builds Δ = ⊕ₓ x⊗Λ⊗x̄ and checks that its half-braiding is unitary,
//! natural and satisfies the hexagon.
//!
//!     cargo run --example half_braiding -- rep_s3

use std::sync::Arc;

use tubecat::category::catalog_entry;
use tubecat::tube::build_delta;
use tubecat::{Engine, LambdaObject};

fn main() -> tubecat::Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "ising".into());
    let engine = Arc::new(Engine::new(catalog_entry(&name)?)?);
    let spec = engine.spec();
    let delta = build_delta(engine.clone(), LambdaObject::all_simples(spec.rank()), 1e-9)?;
    println!("Δ has {} summands:", delta.summands().len());
    for w in delta.words() {
        println!("  {}", w.names(spec).join(" ⊗ "));
    }
    for r in delta.verify(1e-9) {
        println!("{}", r.to_text());
    }
    for a in 0..spec.rank() {
        let e = delta.half_braiding(a);
        println!(
            "e_(Δ,{}) is a {} x {} block matrix",
            spec.label(a),
            e.target().len(),
            e.source().len()
        );
    }
    Ok(())
}
