use super::*;
use crate::category::catalog_entry;
use crate::linalg::c;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn engine(name: &str) -> Arc<Engine> {
    Arc::new(Engine::new(catalog_entry(name).unwrap()).unwrap())
}

fn algebra(name: &str) -> TubeAlgebra {
    let e = engine(name);
    let r = e.rank();
    TubeAlgebra::build(e, LambdaObject::all_simples(r)).unwrap()
}

#[test]
fn lambda_grammar() {
    let spec = catalog_entry("fib").unwrap();
    assert_eq!(LambdaObject::parse(&spec, "all-simples").unwrap().mult(), &[1, 1]);
    assert_eq!(LambdaObject::parse(&spec, "tau:2").unwrap().mult(), &[0, 2]);
    assert_eq!(
        LambdaObject::parse(&spec, "1, tau:3").unwrap().slots(),
        vec![0, 1, 1, 1]
    );
    for bad in ["sigma:1", "tau:x", "tau:0", ""] {
        assert!(
            matches!(LambdaObject::parse(&spec, bad), Err(Error::Schema(_))),
            "{bad}"
        );
    }
}

#[test]
fn fibonacci_direction_dimensions() {
    let alg = algebra("fib");
    assert_eq!(alg.dim(), 7);
    assert_eq!(alg.direction_dim(0), 2);
    assert_eq!(alg.direction_dim(1), 5);
}

#[test]
fn single_simple_lambda() {
    let e = engine("fib");
    let alg = TubeAlgebra::build(e, LambdaObject::simple(2, 1)).unwrap();
    // Hom(τ, τ) plus Hom(ττ, ττ)
    assert_eq!(alg.dim(), 3);
    assert!(alg.verify(1e-10).iter().all(|r| r.pass));
}

#[test]
fn table_product_matches_diagram_product() {
    let alg = algebra("ising");
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..4 {
        let f = alg.random(&mut rng);
        let g = alg.random(&mut rng);
        let a = alg.product(&f, &g).unwrap();
        let b = alg.product_diagram(&f, &g).unwrap();
        assert!(a.max_diff(&b) < 1e-12);
        assert!(alg.star(&f).max_diff(&alg.star_diagram(&f)) < 1e-12);
    }
}

#[test]
fn star_is_conjugate_linear() {
    let alg = algebra("rep_s3");
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let f = alg.random(&mut rng);
    let i = Complex64::new(0.0, 1.0);
    let lhs = alg.star(&f.scale(i));
    let rhs = alg.star(&f).scale(-i);
    assert!(lhs.max_diff(&rhs) < 1e-12);
}

#[test]
fn unit_is_two_sided() {
    let alg = algebra("fib");
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let f = alg.random(&mut rng);
    assert!(alg.product(alg.unit(), &f).unwrap().max_diff(&f) < 1e-13);
    assert!(alg.product(&f, alg.unit()).unwrap().max_diff(&f) < 1e-13);
}

#[test]
fn components_round_trip() {
    let alg = algebra("ising");
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let f = alg.random(&mut rng);
    let comps: Vec<_> = (0..3).map(|a| alg.component(&f, a).unwrap()).collect();
    assert_eq!(alg.from_components(&comps).unwrap(), f);
}

#[test]
fn mismatched_dimensions_are_shape_errors() {
    let alg = algebra("fib");
    let short = TubeElement::from_coeffs(vec![c(1.0)]);
    assert!(matches!(alg.product(&short, alg.unit()), Err(Error::Shape(_))));
    assert!(alg.element(vec![c(0.0); 3]).is_err());
}

#[test]
fn unit_goes_to_identity_of_delta() {
    let alg = algebra("fib");
    let delta = DeltaObject::build(alg.engine_arc(), alg.lambda().clone()).unwrap();
    let t = t_map(&alg, &delta, alg.unit()).unwrap();
    assert!(t.max_diff(&delta.id()) < 1e-12);
}

#[test]
fn compiled_maps_agree_with_diagrams() {
    let alg = algebra("ising");
    let delta = DeltaObject::build(alg.engine_arc(), alg.lambda().clone()).unwrap();
    let maps = CompiledMaps::new(&alg, &delta).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let f = alg.random(&mut rng);
    let t = t_map(&alg, &delta, &f).unwrap();
    assert!(maps.t_apply(&f).unwrap().max_diff(&t) < 1e-12);
    let back = f_map(&alg, &delta, &t).unwrap();
    assert!(maps.f_apply(&t).unwrap().max_diff(&back) < 1e-12);
}

#[test]
fn generic_endomorphism_is_rejected_then_averaged() {
    let alg = algebra("fib");
    let delta = DeltaObject::build(alg.engine_arc(), alg.lambda().clone()).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let m = delta.random_end(&mut rng);
    assert!(matches!(f_map(&alg, &delta, &m), Err(Error::NotInCommutant { .. })));
    let avg = delta.average(&m).unwrap();
    assert!(delta.commutant_residual(&avg).unwrap() < 1e-12);
    // averaging is idempotent
    assert!(delta.average(&avg).unwrap().max_diff(&avg) < 1e-12);
    assert!(f_map(&alg, &delta, &avg).is_ok());
}

#[test]
fn delta_of_vec_has_trivial_braiding() {
    let e = engine("vec");
    let delta = build_delta(e, LambdaObject::all_simples(1), 1e-12).unwrap();
    assert_eq!(delta.summands().len(), 1);
    let b = delta.half_braiding(0).block(0);
    assert_eq!(b.shape(), (1, 1));
    assert!((b[(0, 0)] - c(1.0)).norm() < 1e-15);
}

#[test]
fn json_lists_every_basis_element() {
    let alg = algebra("vec_z2");
    let v: serde_json::Value = serde_json::from_str(&alg.to_json()).unwrap();
    assert_eq!(v["dim"], 4);
    assert_eq!(v["basis"].as_array().unwrap().len(), 4);
    assert_eq!(v["mult_table"].as_array().unwrap().len(), 8);
}
