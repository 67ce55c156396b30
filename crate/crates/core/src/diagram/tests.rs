use super::relations::pair_residual;
use super::*;
use crate::category::{catalog_entry, catalog_names};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn engine(name: &str) -> Engine {
    Engine::new(catalog_entry(name).unwrap()).unwrap()
}

#[test]
fn vertex_is_an_isometry() {
    let e = engine("fib");
    let t = 1;
    for cc in 0..2 {
        let v = e.vertex(t, t, cc).unwrap();
        let vv = e.compose(&v.dagger(), &v).unwrap();
        assert!(vv.max_diff(&e.id(&TensorWord(vec![cc]))) < 1e-14);
    }
}

#[test]
fn vertex_outside_fusion_rules_is_empty_space() {
    let e = engine("vec_z2");
    let err = e.vertex(1, 1, 1).unwrap_err();
    assert!(matches!(err, Error::EmptySpace(_)));
}

#[test]
fn compose_checks_words() {
    let e = engine("fib");
    let f = e.id(&e.word(&["tau"]).unwrap());
    let g = e.id(&e.word(&["tau", "tau"]).unwrap());
    assert!(matches!(e.compose(&g, &f), Err(Error::Shape(_))));
}

#[test]
fn unknown_label_in_word() {
    let e = engine("fib");
    assert!(matches!(e.word(&["sigma"]), Err(Error::Schema(_))));
}

#[test]
fn hom_space_dimension_counts_channels() {
    let e = engine("fib");
    let tt = e.word(&["tau", "tau"]).unwrap();
    assert_eq!(e.hom_space(&tt, &tt).dim, 2);
    let ttt = e.word(&["tau", "tau", "tau"]).unwrap();
    // 1 + 2² from charges 1 and tau
    assert_eq!(e.hom_space(&ttt, &ttt).dim, 5);
    assert_eq!(e.hom_space(&TensorWord::empty(), &e.word(&["tau"]).unwrap()).dim, 0);
}

#[test]
fn loop_values_are_dimensions() {
    for name in catalog_names() {
        let e = engine(name);
        for x in 0..e.rank() {
            let w = TensorWord(vec![x]);
            let r = e.right_trace(&e.id(&w)).unwrap();
            let l = e.left_trace(&e.id(&w)).unwrap();
            assert!((r - c(e.d(x))).norm() < 1e-12, "{name} {x}");
            assert!((l - c(e.d(x))).norm() < 1e-12, "{name} {x}");
        }
    }
}

#[test]
fn coev_norm_is_dimension() {
    let e = engine("ising");
    for x in 0..e.rank() {
        let cv = e.coev(x);
        let s = e.compose(&cv.dagger(), &cv).unwrap().scalar(e.unit()).unwrap();
        assert!((s - c(e.d(x))).norm() < 1e-12);
    }
}

#[test]
fn f_move_relates_the_two_trees() {
    // (V^{ab}_e ⊗ id) V^{ec}_d = Σ_f F[e,f] (id ⊗ V^{bc}_f) V^{af}_d
    let e = engine("fib");
    let spec = e.spec().clone();
    let t = 1;
    for ee in 0..2 {
        let lhs = e
            .compose(
                &e.tensor_id_right(&e.vertex(t, t, ee).unwrap(), &TensorWord(vec![t])),
                &e.vertex(ee, t, t).unwrap(),
            )
            .unwrap();
        let mut rhs = e.zero(lhs.source(), lhs.target());
        for f in 0..2 {
            let m = e
                .compose(
                    &e.tensor_id_left(&TensorWord(vec![t]), &e.vertex(t, t, f).unwrap()),
                    &e.vertex(t, f, t).unwrap(),
                )
                .unwrap();
            rhs.axpy(spec.fsymbols.f(t, t, t, t, ee, f), &m).unwrap();
        }
        assert!(lhs.max_diff(&rhs) < 1e-14);
    }
}

#[test]
fn tensor_product_interchange() {
    let e = engine("ising");
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let s = e.word(&["sigma"]).unwrap();
    let ss = e.word(&["sigma", "sigma"]).unwrap();
    let f = e.random(&s, &s, &mut rng);
    let g = e.random(&ss, &ss, &mut rng);
    let both = e.tensor(&f, &g);
    let seq = e
        .compose(&e.tensor_id_left(&s, &g), &e.tensor_id_right(&f, &ss))
        .unwrap();
    assert!(both.max_diff(&seq) < 1e-12);
}

#[test]
fn dual_word_reverses_and_dualizes() {
    let e = engine("vec_z3");
    let w = e.word(&["g", "g", "g2"]).unwrap();
    assert_eq!(e.dual_word(&w), e.word(&["g", "g2", "g2"]).unwrap());
}

#[test]
fn coefficients_round_trip() {
    let e = engine("rep_s3");
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let w = e.word(&["rho", "rho"]).unwrap();
    let f = e.random(&w, &w, &mut rng);
    let mut g = e.zero(&w, &w);
    g.set_coeffs(&f.coeffs()).unwrap();
    assert_eq!(f, g);
    assert!(g.set_coeffs(&[c(1.0)]).is_err());
}

#[test]
fn canonical_pairs_are_dual() {
    let e = engine("fib");
    let p = canonical_pair(&e, 1, 1, 1).unwrap();
    assert!(pair_residual(&e, &p) < 1e-13);
}
