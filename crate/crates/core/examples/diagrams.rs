//! Builds a few string diagrams by hand: a loop, a zigzag and an F-move.
//!
//!     cargo run --example diagrams

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tubecat::category::catalog_entry;
use tubecat::Engine;

fn main() -> tubecat::Result<()> {
    let e = Engine::new(catalog_entry("fib")?)?;
    let tau = e.word(&["tau"])?;
    let t = tau.0[0];

    // a closed τ loop evaluates to d_τ
    let lp = e.chain(&[&e.coev(t), &e.coev(t).dagger()])?;
    println!("loop(tau) = {:.12}", lp.scalar(e.unit()).unwrap());

    // (id ⊗ ev)(coev ⊗ id) = id
    let snake = e.chain(&[&e.tensor_id_right(&e.coev(t), &tau), &e.tensor_id_left(&tau, &e.ev(t))])?;
    println!("zigzag residual = {:.3e}", snake.max_diff(&e.id(&tau)));

    // the two splitting trees of τ → τττ differ by the F-matrix
    for mid in 0..2 {
        let left = e.chain(&[&e.vertex(mid, t, t)?, &e.tensor_id_right(&e.vertex(t, t, mid)?, &tau)])?;
        let mut right = e.zero(left.source(), left.target());
        for f in 0..2 {
            let tree = e.chain(&[&e.vertex(t, f, t)?, &e.tensor_id_left(&tau, &e.vertex(t, t, f)?)])?;
            right.axpy(e.spec().fsymbols.f(t, t, t, t, mid, f), &tree)?;
        }
        println!(
            "F-move through {}: residual {:.3e}",
            e.spec().label(mid),
            left.max_diff(&right)
        );
    }

    let h = e.random(
        &e.word(&["tau", "tau"])?,
        &e.word(&["tau", "tau"])?,
        &mut ChaCha8Rng::seed_from_u64(1),
    );
    let (l, r) = (e.left_trace(&h)?, e.right_trace(&h)?);
    println!("left trace {l:.6}, right trace {r:.6}");
    Ok(())
}
