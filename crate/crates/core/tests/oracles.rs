//! Independent oracles: group doubles, Perron-Frobenius dimensions and known
//! twists, each computed without the diagram engine.

use std::f64::consts::PI;

use num_complex::Complex64;
use tubecat::category::catalog_entry;
use tubecat::center::{center_report, CenterReport};
use tubecat::diagram::{global_dim_routes, Engine};
use tubecat::LambdaObject;

mod common;

fn report(name: &str) -> CenterReport {
    let spec = catalog_entry(name).unwrap();
    let r = spec.rank();
    center_report(spec, LambdaObject::all_simples(r), 1, 1e-9).unwrap()
}

fn twists(rep: &CenterReport) -> Vec<Complex64> {
    rep.blocks
        .iter()
        .map(|b| Complex64::new(b.twist[0], b.twist[1]))
        .collect()
}

/// Greedy multiset match of complex numbers.
fn same_multiset(mut got: Vec<Complex64>, want: &[Complex64], tol: f64) -> bool {
    if got.len() != want.len() {
        return false;
    }
    for w in want {
        match got.iter().position(|g| (g - w).norm() < tol) {
            Some(i) => {
                got.swap_remove(i);
            }
            None => return false,
        }
    }
    true
}

fn cis(t: f64) -> Complex64 {
    Complex64::from_polar(1.0, t)
}

fn check_against_double(name: &str, omega: f64) {
    let r = common::z2_double_residual(name, omega);
    assert!(r < 1e-10, "{name}: {r}");
}

#[test]
fn z2_tube_algebra_is_the_drinfeld_double() {
    check_against_double("vec_z2", 1.0);
}

#[test]
fn twisted_z2_tube_algebra_is_the_twisted_double() {
    let spec = catalog_entry("vec_z2_omega").unwrap();
    let omega = spec.fsymbols.f(1, 1, 1, 1, 0, 0);
    assert!(omega.im.abs() < 1e-15);
    check_against_double("vec_z2_omega", omega.re);
}

#[test]
fn global_dimensions_from_perron_frobenius() {
    let phi = (1.0 + 5f64.sqrt()) / 2.0;
    // τ² = 1 + τ
    assert!((phi * phi - phi - 1.0).abs() < 1e-15);
    for (name, want) in [
        ("fib", 1.0 + phi * phi),
        ("ising", 4.0),
        ("rep_s3", 6.0),
        ("vec_z3", 3.0),
    ] {
        let spec = catalog_entry(name).unwrap();
        assert!((spec.global_dim() - want).abs() < 1e-12, "{name}");
    }
    assert!((catalog_entry("fib").unwrap().global_dim() - 3.6180339887).abs() < 1e-10);
}

#[test]
fn global_dimension_routes_agree() {
    for name in ["fib", "ising"] {
        let e = Engine::new(catalog_entry(name).unwrap()).unwrap();
        let dim = e.spec().global_dim();
        for x in 0..e.rank() {
            for y in 0..e.rank() {
                let r = global_dim_routes(&e, x, y);
                let want = if x == y { dim } else { 0.0 };
                assert!(
                    (r.direct.re - want).abs() < 1e-9 && r.direct.im.abs() < 1e-9,
                    "{name} direct"
                );
                assert!((r.bigon - want).abs() < 1e-9, "{name} bigon");
                assert!((r.ih.re - want).abs() < 1e-9, "{name} ih");
                assert_eq!(r.discarded, 0.0);
            }
        }
    }
}

#[test]
fn toric_code_twists() {
    let rep = report("vec_z2");
    assert_eq!(rep.rank, 4);
    let one = Complex64::new(1.0, 0.0);
    assert!(same_multiset(twists(&rep), &[one, one, one, -one], 1e-9));
    // the fermion carries the nontrivial flux
    let fermion = rep.blocks.iter().find(|b| b.twist[0] < 0.0).unwrap();
    assert_eq!(fermion.underlying.keys().collect::<Vec<_>>(), vec!["g"]);
}

#[test]
fn double_semion_twists_from_projective_characters() {
    let spec = catalog_entry("vec_z2_omega").unwrap();
    // flux g charges: χ(g)² = ω(g,g,g)
    let w = spec.fsymbols.f(1, 1, 1, 1, 0, 0);
    let r = w.sqrt();
    let rep = report("vec_z2_omega");
    assert_eq!(rep.rank, 4);
    let one = Complex64::new(1.0, 0.0);
    assert!(same_multiset(twists(&rep), &[one, one, r, -r], 1e-9));
}

#[test]
fn z3_double_twists_are_character_values() {
    let rep = report("vec_z3");
    assert_eq!(rep.rank, 9);
    assert_eq!(rep.sorted_sizes(), vec![1; 9]);
    let mut want = Vec::new();
    for a in 0..3 {
        for j in 0..3 {
            want.push(cis(2.0 * PI * (a * j) as f64 / 3.0));
        }
    }
    assert!(same_multiset(twists(&rep), &want, 1e-9));
}

#[test]
fn fibonacci_double_is_fib_times_reverse() {
    let phi = (1.0 + 5f64.sqrt()) / 2.0;
    // θ_τ = e^{4πi/5} solves the Fibonacci hexagons; Z(Fib) ≅ Fib ⊠ Fib^rev
    let t = cis(4.0 * PI / 5.0);
    let want_twist = [Complex64::new(1.0, 0.0), t, t.conj(), t * t.conj()];
    let want_dims = [1.0, phi, phi, phi * phi];
    let rep = report("fib");
    assert_eq!(rep.rank, 4);
    assert_eq!(rep.sorted_sizes(), vec![1, 1, 1, 2]);
    assert!(same_multiset(twists(&rep), &want_twist, 1e-9));
    let mut dims: Vec<f64> = rep
        .blocks
        .iter()
        .map(|b| {
            b.underlying
                .iter()
                .map(|(k, &m)| m as f64 * if k == "tau" { phi } else { 1.0 })
                .sum()
        })
        .collect();
    dims.sort_by(f64::total_cmp);
    for (g, w) in dims.iter().zip(want_dims) {
        assert!((g - w).abs() < 1e-12);
    }
    let big = rep.blocks.iter().find(|b| b.size == 2).unwrap();
    assert!((big.twist[0] - 1.0).abs() < 1e-9);
    assert_eq!(big.underlying.len(), 2);
}

#[test]
fn ising_double_is_ising_times_reverse() {
    let spec = catalog_entry("ising").unwrap();
    let s = spec.ring.index("sigma").unwrap();
    // the sign of F^{σσσ}_σ[1,1] picks the Frobenius-Schur class, which
    // fixes θ_σ = e^{2πiν/16} up to ν ↦ −ν and ν ↦ ν + 8
    let kappa = (spec.fsymbols.f(s, s, s, s, 0, 0).re * 2f64.sqrt()).round();
    let nu = if kappa > 0.0 { 1.0 } else { 3.0 };
    let ts = cis(2.0 * PI * nu / 16.0);
    let theta = [Complex64::new(1.0, 0.0), ts, Complex64::new(-1.0, 0.0)];
    let mut want = Vec::new();
    for a in theta {
        for b in theta {
            want.push(a * b.conj());
        }
    }
    let rep = report("ising");
    assert_eq!(rep.rank, 9);
    assert_eq!(rep.sorted_sizes(), vec![1, 1, 1, 1, 1, 1, 1, 1, 2]);
    assert!(same_multiset(twists(&rep), &want, 1e-9));
}

/// Permutations of three points as arrays.
fn s3() -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for a in 0..3 {
        for b in 0..3 {
            for c in 0..3 {
                if a != b && b != c && a != c {
                    out.push([a, b, c]);
                }
            }
        }
    }
    out
}

fn compose(p: &[usize; 3], q: &[usize; 3]) -> [usize; 3] {
    [p[q[0]], p[q[1]], p[q[2]]]
}

fn inverse(p: &[usize; 3]) -> [usize; 3] {
    let mut r = [0; 3];
    for i in 0..3 {
        r[p[i]] = i;
    }
    r
}

fn order(p: &[usize; 3]) -> usize {
    let id = [0, 1, 2];
    let mut q = *p;
    let mut k = 1;
    while q != id {
        q = compose(p, &q);
        k += 1;
    }
    k
}

#[test]
fn rep_s3_center_matches_the_double_of_s3() {
    // Z(Rep G) ≅ Z(Vec G) = D(G): simples are (class of g, irrep of C(g)),
    // with d = |class| dim π and θ = χ_π(g) / dim π
    let g = s3();
    let id = [0, 1, 2];
    let mut seen: Vec<[usize; 3]> = Vec::new();
    let mut want_twists = Vec::new();
    let mut want_dims = Vec::new();
    for x in &g {
        if seen.contains(x) {
            continue;
        }
        let class: Vec<[usize; 3]> = {
            let mut c: Vec<_> = g.iter().map(|h| compose(&compose(h, x), &inverse(h))).collect();
            c.sort();
            c.dedup();
            c
        };
        seen.extend(&class);
        if *x == id {
            // irreps of S3 have degrees 1, 1, 2
            for d in [1.0, 1.0, 2.0] {
                want_twists.push(Complex64::new(1.0, 0.0));
                want_dims.push(d);
            }
        } else {
            // the centralizer is the cyclic group generated by x
            let centralizer = g.iter().filter(|h| compose(h, x) == compose(x, h)).count();
            let k = order(x);
            assert_eq!(centralizer, k);
            for j in 0..k {
                want_twists.push(cis(2.0 * PI * j as f64 / k as f64));
                want_dims.push(class.len() as f64);
            }
        }
    }
    let rep = report("rep_s3");
    assert_eq!(rep.rank, want_twists.len());
    assert!(same_multiset(twists(&rep), &want_twists, 1e-9));
    let spec = catalog_entry("rep_s3").unwrap();
    let mut dims: Vec<f64> = rep
        .blocks
        .iter()
        .map(|b| {
            b.underlying
                .iter()
                .map(|(k, &m)| m as f64 * spec.d(spec.ring.index(k).unwrap()))
                .sum()
        })
        .collect();
    dims.sort_by(f64::total_cmp);
    want_dims.sort_by(f64::total_cmp);
    for (a, b) in dims.iter().zip(&want_dims) {
        assert!((a - b).abs() < 1e-10);
    }
}

#[test]
fn block_sizes_square_to_the_dimension() {
    for (name, dim, sizes) in [
        ("vec_z2", 4, vec![1, 1, 1, 1]),
        ("vec_z3", 9, vec![1; 9]),
        ("fib", 7, vec![1, 1, 1, 2]),
        ("ising", 12, vec![1, 1, 1, 1, 1, 1, 1, 1, 2]),
    ] {
        let rep = report(name);
        assert_eq!(rep.tube_dim, dim, "{name}");
        assert_eq!(rep.sorted_sizes(), sizes, "{name}");
        assert_eq!(sizes.iter().map(|n| n * n).sum::<usize>(), dim);
    }
}
