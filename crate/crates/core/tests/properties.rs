use std::sync::{Arc, OnceLock};

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tubecat::category::{catalog_entry, catalog_names};
use tubecat::json::format_f64;
use tubecat::tube::{CompiledMaps, DeltaObject};
use tubecat::{Complex64, Engine, LambdaObject, TensorWord, TubeAlgebra};

struct Fixture {
    engine: Arc<Engine>,
    alg: TubeAlgebra,
    delta: DeltaObject,
    maps: CompiledMaps,
}

fn fixtures() -> &'static [Fixture] {
    static F: OnceLock<Vec<Fixture>> = OnceLock::new();
    F.get_or_init(|| {
        catalog_names()
            .iter()
            .map(|n| {
                let engine = Arc::new(Engine::new(catalog_entry(n).unwrap()).unwrap());
                let lambda = LambdaObject::all_simples(engine.rank());
                let alg = TubeAlgebra::build(engine.clone(), lambda.clone()).unwrap();
                let delta = DeltaObject::build(engine.clone(), lambda).unwrap();
                let maps = CompiledMaps::new(&alg, &delta).unwrap();
                Fixture {
                    engine,
                    alg,
                    delta,
                    maps,
                }
            })
            .collect()
    })
}

fn cat() -> impl Strategy<Value = usize> {
    0..catalog_names().len()
}

/// A random word of up to `n` letters.
fn word(e: &Engine, rng: &mut ChaCha8Rng, n: usize) -> TensorWord {
    use rand::Rng;
    let len = rng.random_range(1..=n);
    TensorWord((0..len).map(|_| rng.random_range(0..e.rank())).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn tube_product_is_associative(k in cat(), seed in any::<u64>()) {
        let fx = &fixtures()[k];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (f, g, h) = (fx.alg.random(&mut rng), fx.alg.random(&mut rng), fx.alg.random(&mut rng));
        let a = fx.alg.product(&fx.alg.product(&f, &g).unwrap(), &h).unwrap();
        let b = fx.alg.product(&f, &fx.alg.product(&g, &h).unwrap()).unwrap();
        prop_assert!(a.max_diff(&b) < 1e-9 * (1.0 + a.max_abs()));
    }

    #[test]
    fn star_is_an_antimultiplicative_involution(k in cat(), seed in any::<u64>()) {
        let fx = &fixtures()[k];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (f, g) = (fx.alg.random(&mut rng), fx.alg.random(&mut rng));
        prop_assert!(fx.alg.star(&fx.alg.star(&f)).max_diff(&f) < 1e-10);
        let lhs = fx.alg.star(&fx.alg.product(&f, &g).unwrap());
        let rhs = fx.alg.product(&fx.alg.star(&g), &fx.alg.star(&f)).unwrap();
        prop_assert!(lhs.max_diff(&rhs) < 1e-9 * (1.0 + lhs.max_abs()));
    }

    #[test]
    fn t_map_is_a_star_homomorphism(k in cat(), seed in any::<u64>()) {
        let fx = &fixtures()[k];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (f, g) = (fx.alg.random(&mut rng), fx.alg.random(&mut rng));
        let tf = fx.maps.t_apply(&f).unwrap();
        let tg = fx.maps.t_apply(&g).unwrap();
        let tfg = fx.maps.t_apply(&fx.alg.product(&f, &g).unwrap()).unwrap();
        prop_assert!(tg.then(&tf).unwrap().max_diff(&tfg) < 1e-9 * (1.0 + tfg.max_abs()));
        let ts = fx.maps.t_apply(&fx.alg.star(&f)).unwrap();
        prop_assert!(ts.max_diff(&tf.dagger()) < 1e-9 * (1.0 + ts.max_abs()));
    }

    #[test]
    fn maps_are_mutually_inverse(k in cat(), seed in any::<u64>()) {
        let fx = &fixtures()[k];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = fx.alg.random(&mut rng);
        let t = fx.maps.t_apply(&f).unwrap();
        prop_assert!(fx.delta.commutant_residual(&t).unwrap() < 1e-9 * (1.0 + t.max_abs()));
        prop_assert!(fx.maps.f_apply(&t).unwrap().max_diff(&f) < 1e-9);
        let m = fx.delta.average(&fx.delta.random_end(&mut rng)).unwrap();
        let back = fx.maps.t_apply(&fx.maps.f_apply(&m).unwrap()).unwrap();
        prop_assert!(back.max_diff(&m) < 1e-9);
    }

    #[test]
    fn trace_is_cyclic_and_spherical(k in cat(), seed in any::<u64>()) {
        let e = &fixtures()[k].engine;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = word(e, &mut rng, 3);
        let y = word(e, &mut rng, 3);
        let f = e.random(&x, &y, &mut rng);
        let g = e.random(&y, &x, &mut rng);
        let fg = e.trace(&e.compose(&f, &g).unwrap()).unwrap();
        let gf = e.trace(&e.compose(&g, &f).unwrap()).unwrap();
        prop_assert!((fg - gf).norm() < 1e-9 * (1.0 + fg.norm()));
        let h = e.random(&x, &x, &mut rng);
        let l = e.left_trace(&h).unwrap();
        let r = e.right_trace(&h).unwrap();
        prop_assert!((l - r).norm() < 1e-9 * (1.0 + l.norm()));
    }

    #[test]
    fn dagger_reverses_composition(k in cat(), seed in any::<u64>()) {
        let e = &fixtures()[k].engine;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (x, y, z) = (word(e, &mut rng, 2), word(e, &mut rng, 2), word(e, &mut rng, 2));
        let f = e.random(&x, &y, &mut rng);
        let g = e.random(&y, &z, &mut rng);
        let lhs = e.compose(&g, &f).unwrap().dagger();
        let rhs = e.compose(&f.dagger(), &g.dagger()).unwrap();
        prop_assert!(lhs.max_diff(&rhs) < 1e-12 * (1.0 + lhs.max_abs()));
    }

    #[test]
    fn tensor_product_is_functorial(k in cat(), seed in any::<u64>()) {
        let e = &fixtures()[k].engine;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (x, y) = (word(e, &mut rng, 2), word(e, &mut rng, 2));
        let (f1, f2) = (e.random(&x, &x, &mut rng), e.random(&x, &x, &mut rng));
        let (g1, g2) = (e.random(&y, &y, &mut rng), e.random(&y, &y, &mut rng));
        let lhs = e.tensor(&e.compose(&f2, &f1).unwrap(), &e.compose(&g2, &g1).unwrap());
        let rhs = e.compose(&e.tensor(&f2, &g2), &e.tensor(&f1, &g1)).unwrap();
        prop_assert!(lhs.max_diff(&rhs) < 1e-9 * (1.0 + lhs.max_abs()));
    }

    #[test]
    fn zigzag_on_random_letters(k in cat(), seed in any::<u64>()) {
        let e = &fixtures()[k].engine;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let w = word(e, &mut rng, 2);
        let wb = e.dual_word(&w);
        let step1 = e.tensor_id_right(&e.coev_word(&w), &w);
        let step2 = e.tensor_id_left(&w, &e.ev_word(&w));
        let snake = e.compose(&step2, &step1).unwrap();
        prop_assert!(snake.max_diff(&e.id(&w)) < 1e-9);
        prop_assert_eq!(e.dual_word(&wb), w);
    }

    #[test]
    fn lambda_text_round_trips(k in cat(), mult in proptest::collection::vec(0u32..4, 1..4)) {
        let spec = fixtures()[k].engine.spec();
        let mut m: Vec<u32> = mult.into_iter().chain(std::iter::repeat(0)).take(spec.rank()).collect();
        if m.iter().all(|&v| v == 0) {
            m[0] = 1;
        }
        let lambda = LambdaObject::new(m.clone()).unwrap();
        let text = lambda.to_map(spec).iter().map(|(l, v)| format!("{l}:{v}")).collect::<Vec<_>>().join(",");
        let parsed = LambdaObject::parse(spec, &text).unwrap();
        prop_assert_eq!(parsed.mult(), &m[..]);
    }

    #[test]
    fn floats_survive_serialization(x in any::<f64>().prop_filter("finite", |v| v.is_finite())) {
        let s = format_f64(x);
        prop_assert_eq!(s.parse::<f64>().unwrap(), x);
    }
}

#[test]
fn complex_scalars_are_linear() {
    let fx = &fixtures()[4];
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let f = fx.alg.random(&mut rng);
    let z = Complex64::new(0.3, -1.2);
    let a = fx.maps.t_apply(&f.scale(z)).unwrap();
    let b = fx.maps.t_apply(&f).unwrap().scale(z);
    assert!(a.max_diff(&b) < 1e-12);
}
