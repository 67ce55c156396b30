//! Oracles shared by the integration tests.

use std::collections::HashMap;
use std::sync::Arc;

use num_complex::Complex64;
use tubecat::category::catalog_entry;
use tubecat::{Engine, LambdaObject, TubeAlgebra};

type Table3 = HashMap<(usize, usize, usize), f64>;
type Table2 = HashMap<(usize, usize), f64>;

/// Structure constants of the (twisted) double of Z/2 in the basis `δ_s a`,
/// indexed `2a + s`. `omega` is the cocycle value on `(g, g, g)`.
pub fn z2_double(omega: f64) -> (Table3, Table2) {
    let idx = |a: usize, s: usize| 2 * a + s;
    let mut mult = HashMap::new();
    let mut star = HashMap::new();
    for a in 0..2 {
        for s in 0..2 {
            for b in 0..2 {
                // δ_s a · δ_t b = δ_{s,t} θ_s(a, b) δ_s ab, and θ_s(a, b) is
                // ω(g,g,g) exactly when s = a = b = g
                let phase = if s == 1 && a == 1 && b == 1 { omega } else { 1.0 };
                mult.insert((idx(a, s), idx(b, s), idx(a ^ b, s)), phase);
            }
            let phase = if s == 1 && a == 1 { omega } else { 1.0 };
            star.insert((idx(a, s), idx(a, s)), phase);
        }
    }
    (mult, star)
}

/// Largest entrywise difference between the tube algebra of `name` with
/// `Λ = 1 ⊕ g` and the double of Z/2, after aligning `(a, s, s) ↔ δ_s a`.
pub fn z2_double_residual(name: &str, omega: f64) -> f64 {
    let e = Arc::new(Engine::new(catalog_entry(name).unwrap()).unwrap());
    let alg = TubeAlgebra::build(e, LambdaObject::all_simples(2)).unwrap();
    if alg.dim() != 4 || alg.basis().iter().any(|l| l.source_slot != l.target_slot) {
        return f64::INFINITY;
    }
    let pos: Vec<usize> = alg.basis().iter().map(|l| 2 * l.a + l.source_slot).collect();
    let (mult, star) = z2_double(omega);
    let got_mult: HashMap<_, Complex64> = alg
        .mult_table()
        .into_iter()
        .map(|(i, j, k, z)| ((pos[i], pos[j], pos[k]), z))
        .collect();
    let got_star: HashMap<_, Complex64> = alg
        .star_table()
        .into_iter()
        .map(|(i, j, z)| ((pos[i], pos[j]), z))
        .collect();
    let mut worst: f64 = 0.0;
    for i in 0..4 {
        for j in 0..4 {
            for k in 0..4 {
                let want = mult.get(&(i, j, k)).copied().unwrap_or(0.0);
                let got = got_mult.get(&(i, j, k)).copied().unwrap_or_default();
                worst = worst.max((got - want).norm());
            }
            let want = star.get(&(i, j)).copied().unwrap_or(0.0);
            let got = got_star.get(&(i, j)).copied().unwrap_or_default();
            worst = worst.max((got - want).norm());
        }
    }
    worst
}
