//! The tube algebra of Λ: basis, products, the star, and the maps
//! f ↦ T_f ∈ End(Δ) and T ↦ f_T back.
//!
//!     cargo run --example tube_algebra -- fib "1:1,tau:1"

use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tubecat::category::catalog_entry;
use tubecat::tube::{f_map, t_map, DeltaObject};
use tubecat::{Engine, LambdaObject, TubeAlgebra};

fn main() -> tubecat::Result<()> {
    let mut args = std::env::args().skip(1);
    let name = args.next().unwrap_or_else(|| "fib".into());
    let lambda_text = args.next().unwrap_or_else(|| "all-simples".into());
    let engine = Arc::new(Engine::new(catalog_entry(&name)?)?);
    let spec = engine.spec();
    let lambda = LambdaObject::parse(spec, &lambda_text)?;
    let alg = TubeAlgebra::new(engine.clone(), lambda.clone(), 1e-9)?;

    println!("dim A = {}", alg.dim());
    for (i, b) in alg.basis().iter().enumerate() {
        let slots = alg.slots();
        println!(
            "  e{i}: {} ⊗ {} → {} ⊗ {}  (#{})",
            spec.label(slots[b.source_slot]),
            spec.label(b.a),
            spec.label(b.a),
            spec.label(slots[b.target_slot]),
            b.index
        );
    }

    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let f = alg.random(&mut rng);
    let g = alg.random(&mut rng);
    let fg = alg.product(&f, &g)?;
    println!(
        "table vs diagram product: {:.3e}",
        fg.max_diff(&alg.product_diagram(&f, &g)?)
    );

    let delta = DeltaObject::build(engine.clone(), lambda)?;
    let tf = t_map(&alg, &delta, &f)?;
    let tg = t_map(&alg, &delta, &g)?;
    println!(
        "T_f commutes with the half-braiding: {:.3e}",
        delta.commutant_residual(&tf)?
    );
    println!("f_(T_f) = f: {:.3e}", f_map(&alg, &delta, &tf)?.max_diff(&f));
    println!(
        "T_(fg) = T_f T_g: {:.3e}",
        t_map(&alg, &delta, &fg)?.max_diff(&tg.then(&tf)?)
    );
    println!(
        "T_(f*) = T_f†: {:.3e}",
        t_map(&alg, &delta, &alg.star(&f))?.max_diff(&tf.dagger())
    );

    // a generic endomorphism of Δ is refused until it is averaged
    let m = delta.random_end(&mut rng);
    match f_map(&alg, &delta, &m) {
        Err(e) => println!("random T: {e}"),
        Ok(_) => println!("random T happened to commute"),
    }
    let avg = delta.average(&m)?;
    println!("averaged T: residual {:.3e}", delta.commutant_residual(&avg)?);
    Ok(())
}
