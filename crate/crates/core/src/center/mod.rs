//! Matrix-block decomposition of the tube algebra and the simple objects of
//! the Drinfeld center it carries.
//!
//! The algebra center is the common kernel of `z ↦ e_i z − z e_i`. A random
//! self-adjoint central element is split by the eigenvalues of its action on
//! the center; Lagrange polynomials in it give the minimal central
//! idempotents, which are then polished by `p ← 3p² − 2p³`. Inside each block
//! a minimal projection `q` is found from the top eigenspace of a random
//! positive element, and the range of `T_q ⊆ Δ` is the center simple.

use std::collections::BTreeMap;
use std::sync::Arc;

use nalgebra::Schur;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::category::{FusionCategorySpec, Label};
use crate::diagram::{Engine, TensorWord};
use crate::error::{Error, Result};
use crate::linalg::{c, gaussian, hermitian_eigen, CMat};
use crate::report::VerificationReport;
use crate::tube::{CompiledMaps, DeltaObject, HalfBraiding, LambdaObject, ObjMorphism, TubeAlgebra, TubeElement};

/// Tolerance for idempotent identities and center-simple checks.
pub const CENTER_TOL: f64 = 1e-8;

const NEWTON_STEPS: usize = 60;

/// Minimal central idempotents of a tube algebra and their block sizes.
#[derive(Clone, Debug)]
pub struct BlockDecomposition {
    pub idempotents: Vec<TubeElement>,
    pub sizes: Vec<usize>,
    /// Dimension of the algebra center.
    pub center_dim: usize,
    pub seed: u64,
}

impl BlockDecomposition {
    pub fn rank(&self) -> usize {
        self.sizes.len()
    }

    /// Sizes in increasing order.
    pub fn sorted_sizes(&self) -> Vec<usize> {
        let mut s = self.sizes.clone();
        s.sort_unstable();
        s
    }

    /// Orthogonality, idempotency, self-adjointness, completeness and `Σ n² = dim`.
    pub fn verify(&self, alg: &TubeAlgebra, tol: f64) -> Vec<VerificationReport> {
        let mut idem = Vec::new();
        let mut ortho = Vec::new();
        for (i, p) in self.idempotents.iter().enumerate() {
            let pp = alg.product(p, p).expect("same algebra");
            let r = pp.max_diff(p).max(alg.star(p).max_diff(p));
            idem.push((vec![format!("p{i}")], r));
            for (j, q) in self.idempotents.iter().enumerate() {
                if i != j {
                    let pq = alg.product(p, q).expect("same algebra");
                    ortho.push((vec![format!("p{i}"), format!("p{j}")], pq.max_abs()));
                }
            }
        }
        let mut sum = alg.zero();
        for p in &self.idempotents {
            sum = sum.add(p).expect("same algebra");
        }
        let complete = vec![(vec!["sum".to_string()], sum.max_diff(alg.unit()))];
        let n2: usize = self.sizes.iter().map(|n| n * n).sum();
        let count = vec![(vec!["sum_n2".to_string()], (n2 as f64 - alg.dim() as f64).abs())];
        vec![
            VerificationReport::from_cases("block_idempotents", idem, tol),
            VerificationReport::from_cases("block_orthogonality", ortho, tol),
            VerificationReport::from_cases("block_completeness", complete, tol),
            VerificationReport::from_cases("block_dimension", count, 0.5),
        ]
    }
}

/// Newton polishing of a self-adjoint idempotent.
fn refine_projection(alg: &TubeAlgebra, p: &TubeElement) -> TubeElement {
    let mut p = p.clone();
    for _ in 0..NEWTON_STEPS {
        p = p.add(&alg.star(&p)).expect("same algebra").scale(c(0.5));
        let p2 = alg.product(&p, &p).expect("same algebra");
        let err = p2.max_diff(&p);
        let p3 = alg.product(&p2, &p).expect("same algebra");
        p = p2.scale(c(3.0)).sub(&p3.scale(c(2.0))).expect("same algebra");
        if err < 1e-15 {
            break;
        }
    }
    p.add(&alg.star(&p)).expect("same algebra").scale(c(0.5))
}

fn element_from_column(alg: &TubeAlgebra, v: nalgebra::DVectorView<'_, Complex64>) -> TubeElement {
    alg.element(v.iter().copied().collect()).expect("algebra dimension")
}

/// Orthonormal basis of the algebra center as columns.
pub fn algebra_center(alg: &TubeAlgebra) -> CMat {
    let n = alg.dim();
    let mut gram = CMat::zeros(n, n);
    for i in 0..n {
        let e = alg.basis_element(i);
        let d = alg.left_matrix(&e) - alg.right_matrix(&e);
        gram += d.adjoint() * d;
    }
    let (vals, vecs) = hermitian_eigen(&gram);
    let scale = vals.last().copied().unwrap_or(1.0).max(1.0);
    let keep: Vec<usize> = (0..n).filter(|&k| vals[k] < 1e-10 * scale).collect();
    CMat::from_fn(n, keep.len(), |r, k| vecs[(r, keep[k])])
}

/// Splits `A` into matrix blocks using a random self-adjoint central element.
pub fn decompose_blocks(alg: &TubeAlgebra, seed: u64) -> Result<BlockDecomposition> {
    let z = algebra_center(alg);
    let r = z.ncols();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut h = alg.zero();
    for k in 0..r {
        // real coefficients leave conjugate characters degenerate
        let g = gaussian(&mut rng);
        h = h
            .add(&element_from_column(alg, z.column(k)).scale(g))
            .expect("same algebra");
    }
    h = h.add(&alg.star(&h)).expect("same algebra").scale(c(0.5));
    let lh = alg.left_matrix(&h);
    let m = z.adjoint() * &lh * &z;
    let eig = Schur::new(m)
        .eigenvalues()
        .ok_or_else(|| Error::DegenerateSpectrum("Schur form did not converge".into()))?;
    let mut lam: Vec<f64> = eig.iter().map(|z| z.re).collect();
    lam.sort_by(f64::total_cmp);
    let spread = lam.iter().map(|x| x.abs()).fold(1e-300, f64::max);
    for w in lam.windows(2) {
        if w[1] - w[0] < 1e-6 * spread {
            return Err(Error::DegenerateSpectrum(format!(
                "central eigenvalues {:.6e} and {:.6e} are too close (seed {seed})",
                w[0], w[1]
            )));
        }
    }
    let ident = alg.unit().clone();
    let mut idempotents = Vec::with_capacity(r);
    let mut sizes = Vec::with_capacity(r);
    for j in 0..r {
        let mut p = ident.clone();
        for k in (0..r).filter(|&k| k != j) {
            let shifted = h.sub(&ident.scale(c(lam[k]))).expect("same algebra");
            p = alg
                .product(&p, &shifted)
                .expect("same algebra")
                .scale(c(1.0 / (lam[j] - lam[k])));
        }
        let p = refine_projection(alg, &p);
        let n2 = alg.left_matrix(&p).trace().re;
        let n = n2.max(0.0).sqrt().round();
        if (n * n - n2).abs() > 1e-6 || n < 1.0 {
            return Err(Error::Tolerance {
                check: "block size".into(),
                residual: (n * n - n2).abs(),
                tol: 1e-6,
            });
        }
        idempotents.push(p);
        sizes.push(n as usize);
    }
    let dec = BlockDecomposition {
        idempotents,
        sizes,
        center_dim: r,
        seed,
    };
    for rep in dec.verify(alg, CENTER_TOL) {
        if !rep.pass {
            return Err(Error::Tolerance {
                check: rep.suite,
                residual: rep.max_residual,
                tol: CENTER_TOL,
            });
        }
    }
    Ok(dec)
}

/// A simple object of the Drinfeld center realized inside `Δ`.
#[derive(Clone, Debug)]
pub struct CenterSimple {
    /// Minimal projection `q` in the block; `T_q` projects onto the object.
    pub idempotent: TubeElement,
    /// Block size `n` of the matrix block the object came from.
    pub block_size: usize,
    /// Multiplicity of each simple in the underlying object.
    pub underlying: Vec<u32>,
    /// The object as `⊕_k c_k`, one single-letter word per summand.
    pub isometry: ObjMorphism,
    pub half_braiding: HalfBraiding,
    pub twist: Complex64,
    /// Worst of the unitarity, hexagon and unit residuals.
    pub residual: f64,
}

impl CenterSimple {
    /// `Σ_x mult_x d_x`.
    pub fn dim(&self, engine: &Engine) -> f64 {
        self.underlying
            .iter()
            .enumerate()
            .map(|(x, &m)| m as f64 * engine.d(x))
            .sum()
    }

    pub fn summands(&self) -> Vec<Label> {
        self.half_braiding.words().iter().map(|w| w.0[0]).collect()
    }

    pub fn verify(&self, engine: &Engine, tol: f64) -> Vec<VerificationReport> {
        self.half_braiding.verify(engine, "center", tol)
    }
}

/// Per-charge eigenpairs of a Hermitian endomorphism of `Δ`, as
/// `(value, charge, vector)`.
fn end_eigen(m: &ObjMorphism) -> Vec<(f64, usize, nalgebra::DVector<Complex64>)> {
    let mut out = Vec::new();
    for (ch, b) in m.blocks().iter().enumerate() {
        if b.is_empty() {
            continue;
        }
        let (vals, vecs) = hermitian_eigen(b);
        for (k, v) in vals.into_iter().enumerate() {
            out.push((v, ch, vecs.column(k).into_owned()));
        }
    }
    out
}

/// Projector in `End(Δ)` onto the span of the given per-charge vectors.
fn projector(template: &ObjMorphism, vecs: &[(usize, nalgebra::DVector<Complex64>)]) -> ObjMorphism {
    let mut p = template.clone();
    for b in p.blocks_mut() {
        b.fill(Complex64::new(0.0, 0.0));
    }
    for (ch, v) in vecs {
        let blk = &mut p.blocks_mut()[*ch];
        *blk += v * v.adjoint();
    }
    p
}

/// A minimal projection inside the block of `p`.
fn minimal_projection<R: Rng + ?Sized>(
    alg: &TubeAlgebra,
    maps: &CompiledMaps,
    delta: &DeltaObject,
    p: &TubeElement,
    n: usize,
    rng: &mut R,
) -> Result<TubeElement> {
    if n == 1 {
        return Ok(p.clone());
    }
    let k = alg.random(rng);
    let kp = alg.product(&k, p)?;
    let h = alg.product(&alg.star(&kp), &kp)?;
    let th = maps.t_apply(&h)?;
    let eig = end_eigen(&th);
    let top = eig.iter().map(|e| e.0).fold(f64::NEG_INFINITY, f64::max);
    let cut = top * (1.0 - 1e-6);
    let next = eig
        .iter()
        .map(|e| e.0)
        .filter(|&v| v < cut)
        .fold(f64::NEG_INFINITY, f64::max);
    if top - next < 1e-4 * top {
        return Err(Error::DegenerateSpectrum(format!(
            "top eigenvalues {top:.6e} and {next:.6e} of a block element are too close"
        )));
    }
    let vecs: Vec<_> = eig
        .into_iter()
        .filter(|e| e.0 >= cut)
        .map(|(_, ch, v)| (ch, v))
        .collect();
    let proj = projector(&delta.zero_end(), &vecs);
    let q = maps.f_apply(&proj)?;
    Ok(refine_projection(alg, &q))
}

/// `θ = tr(e_{X,X}) / d_X`, with `e_{X,X}` assembled from `e_{X,c_k}` on the
/// summands `c_k` of `X`.
pub fn twist_of(engine: &Engine, braiding: &HalfBraiding) -> Complex64 {
    let letters: Vec<Label> = braiding.words().iter().map(|w| w.0[0]).collect();
    let dx: f64 = letters.iter().map(|&x| engine.d(x)).sum();
    let mut tr = Complex64::new(0.0, 0.0);
    for (k, &ck) in letters.iter().enumerate() {
        let blk = braiding.component(ck).get(k, k);
        tr += engine.trace(&blk).expect("endomorphism of c_k ⊗ c_k");
    }
    tr / dx
}

/// Twists of a list of center simples.
pub fn compute_twists(engine: &Engine, simples: &[CenterSimple]) -> Vec<Complex64> {
    simples.iter().map(|s| twist_of(engine, &s.half_braiding)).collect()
}

/// One center simple per block: a minimal projection `q`, the range of `T_q`
/// as an isometry into `Δ`, and the restricted half-braiding.
pub fn extract_center_simples(
    alg: &TubeAlgebra,
    delta: &DeltaObject,
    maps: &CompiledMaps,
    dec: &BlockDecomposition,
) -> Result<Vec<CenterSimple>> {
    let eng = delta.engine();
    let seeds: Vec<u64> = {
        let mut rng = ChaCha8Rng::seed_from_u64(dec.seed ^ 0x005e_ed0f_b10c);
        (0..dec.rank()).map(|_| rng.random()).collect()
    };
    (0..dec.rank())
        .into_par_iter()
        .map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(seeds[i]);
            let n = dec.sizes[i];
            let q = minimal_projection(alg, maps, delta, &dec.idempotents[i], n, &mut rng)?;
            let tq = maps.t_apply(&q)?;
            let eig = end_eigen(&tq);
            let kept: Vec<_> = eig.into_iter().filter(|e| e.0 > 0.5).collect();
            let letters: Vec<Label> = kept.iter().map(|e| e.1).collect();
            let mut order: Vec<usize> = (0..kept.len()).collect();
            order.sort_by_key(|&k| letters[k]);
            let xwords: Vec<TensorWord> = order.iter().map(|&k| TensorWord(vec![letters[k]])).collect();
            let mut v = ObjMorphism::zero(eng, &xwords, delta.words());
            let mut filled = vec![0usize; eng.rank()];
            for &k in &order {
                let (_, ch, ref vec) = kept[k];
                v.blocks_mut()[ch].set_column(filled[ch], vec);
                filled[ch] += 1;
            }
            let mut underlying = vec![0u32; eng.rank()];
            for &x in &letters {
                underlying[x] += 1;
            }
            let braiding = delta.braiding().restrict(eng, &v)?;
            let twist = twist_of(eng, &braiding);
            let residual = braiding
                .verify(eng, "center", CENTER_TOL)
                .iter()
                .map(|r| r.max_residual)
                .fold((twist.norm() - 1.0).abs(), f64::max);
            Ok(CenterSimple {
                idempotent: q,
                block_size: n,
                underlying,
                isometry: v,
                half_braiding: braiding,
                twist,
                residual,
            })
        })
        .collect()
}

/// One block of a center report.
#[derive(Clone, Debug, Serialize)]
pub struct BlockReport {
    pub size: usize,
    pub underlying: BTreeMap<String, u32>,
    pub twist: [f64; 2],
    pub hexagon_residual: f64,
}

/// End-to-end summary of the center computation.
#[derive(Clone, Debug, Serialize)]
pub struct CenterReport {
    pub category: String,
    pub lambda: BTreeMap<String, u32>,
    pub tube_dim: usize,
    pub rank: usize,
    pub blocks: Vec<BlockReport>,
    /// Twists are an extension beyond the tube-algebra construction.
    pub twist_convention: String,
    pub seed: u64,
    pub pass: bool,
    #[serde(skip)]
    pub checks: Vec<VerificationReport>,
}

impl CenterReport {
    pub fn to_json(&self) -> String {
        crate::json::to_string(self)
    }

    pub fn sorted_sizes(&self) -> Vec<usize> {
        let mut s: Vec<usize> = self.blocks.iter().map(|b| b.size).collect();
        s.sort_unstable();
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "center {} category={} lambda={} tube_dim={} rank={} seed={}\n",
            if self.pass { "PASS" } else { "FAIL" },
            self.category,
            fmt_map(&self.lambda),
            self.tube_dim,
            self.rank,
            self.seed
        );
        for b in &self.blocks {
            out.push_str(&format!(
                "  size={} underlying={} twist=({:+.12}, {:+.12}) residual={:.3e}\n",
                b.size,
                fmt_map(&b.underlying),
                b.twist[0],
                b.twist[1],
                b.hexagon_residual
            ));
        }
        for r in &self.checks {
            out.push_str(&format!("  {}\n", r.to_text().lines().next().unwrap_or("")));
        }
        out
    }
}

fn fmt_map(m: &BTreeMap<String, u32>) -> String {
    m.iter().map(|(k, v)| format!("{k}:{v}")).collect::<Vec<_>>().join(",")
}

/// Everything computed on the way to a [`CenterReport`].
pub struct CenterPipeline {
    pub algebra: TubeAlgebra,
    pub delta: DeltaObject,
    pub maps: CompiledMaps,
    pub decomposition: BlockDecomposition,
    pub simples: Vec<CenterSimple>,
    pub checks: Vec<VerificationReport>,
}

const RETRIES: u64 = 8;

/// Tube algebra, `Δ`, block decomposition and center simples. Degenerate
/// random draws are retried with derived seeds.
pub fn run_pipeline(engine: Arc<Engine>, lambda: LambdaObject, seed: u64, tol: f64) -> Result<CenterPipeline> {
    let algebra = TubeAlgebra::build(engine.clone(), lambda.clone())?;
    let delta = DeltaObject::build(engine.clone(), lambda)?;
    let maps = CompiledMaps::new(&algebra, &delta)?;
    let mut checks = algebra.verify(tol);
    checks.extend(delta.verify(tol));
    let mut last = None;
    for attempt in 0..RETRIES {
        let s = seed.wrapping_add(attempt.wrapping_mul(0x9e37_79b9_7f4a_7c15));
        let res = decompose_blocks(&algebra, s)
            .and_then(|dec| extract_center_simples(&algebra, &delta, &maps, &dec).map(|simples| (dec, simples)));
        match res {
            Ok((decomposition, simples)) => {
                checks.extend(decomposition.verify(&algebra, CENTER_TOL));
                checks.push(simple_checks(&engine, &simples));
                checks.push(dimension_check(&engine, &simples));
                return Ok(CenterPipeline {
                    algebra,
                    delta,
                    maps,
                    decomposition,
                    simples,
                    checks,
                });
            }
            Err(e @ Error::DegenerateSpectrum(_)) => last = Some(e),
            Err(e) => return Err(e),
        }
    }
    Err(last.expect("at least one attempt"))
}

fn simple_checks(engine: &Engine, simples: &[CenterSimple]) -> VerificationReport {
    let cases = simples
        .iter()
        .enumerate()
        .map(|(i, s)| {
            (
                vec![format!("Z{i}"), fmt_underlying(engine.spec(), &s.underlying)],
                s.residual,
            )
        })
        .collect();
    VerificationReport::from_cases("center_half_braidings", cases, CENTER_TOL)
}

/// `Σ_Z d_Z² = dim(C)²`, relative to `dim(C)²`.
fn dimension_check(engine: &Engine, simples: &[CenterSimple]) -> VerificationReport {
    let dim = engine.spec().global_dim();
    let total: f64 = simples.iter().map(|s| s.dim(engine).powi(2)).sum();
    let r = (total - dim * dim).abs() / (dim * dim);
    VerificationReport::from_cases("center_global_dim", vec![(vec!["sum_dZ2".into()], r)], 1e-6)
}

fn fmt_underlying(spec: &FusionCategorySpec, m: &[u32]) -> String {
    fmt_map(&underlying_map(spec, m))
}

fn underlying_map(spec: &FusionCategorySpec, m: &[u32]) -> BTreeMap<String, u32> {
    m.iter()
        .enumerate()
        .filter(|(_, &k)| k > 0)
        .map(|(x, &k)| (spec.label(x).to_string(), k))
        .collect()
}

/// Runs the pipeline and summarizes it. Blocks are listed by size, then
/// dimension, then underlying multiplicities, then twist angle.
pub fn center_report(spec: FusionCategorySpec, lambda: LambdaObject, seed: u64, tol: f64) -> Result<CenterReport> {
    let engine = Arc::new(Engine::new(spec)?);
    let pipe = run_pipeline(engine.clone(), lambda, seed, tol)?;
    Ok(report_from(&engine, &pipe, seed))
}

pub fn report_from(engine: &Engine, pipe: &CenterPipeline, seed: u64) -> CenterReport {
    let sp = engine.spec();
    let mut simples: Vec<&CenterSimple> = pipe.simples.iter().collect();
    let key = |s: &CenterSimple| {
        let arg = s.twist.arg();
        // -π and π are the same angle
        let arg = if arg <= -std::f64::consts::PI + 1e-9 {
            std::f64::consts::PI
        } else {
            arg
        };
        (s.block_size, s.dim(engine), s.underlying.clone(), arg)
    };
    simples.sort_by(|a, b| {
        let (ka, kb) = (key(a), key(b));
        ka.0.cmp(&kb.0)
            .then(ka.1.total_cmp(&kb.1))
            .then(ka.2.cmp(&kb.2))
            .then(ka.3.total_cmp(&kb.3))
    });
    let blocks = simples
        .iter()
        .map(|s| BlockReport {
            size: s.block_size,
            underlying: underlying_map(sp, &s.underlying),
            twist: [clean(s.twist.re), clean(s.twist.im)],
            hexagon_residual: s.residual,
        })
        .collect();
    CenterReport {
        category: sp.name.clone(),
        lambda: pipe.algebra.lambda().to_map(sp),
        tube_dim: pipe.algebra.dim(),
        rank: pipe.simples.len(),
        blocks,
        twist_convention: "extension: theta = tr(e_{X,X}) / d_X".into(),
        seed,
        pass: pipe.checks.iter().all(|r| r.pass),
        checks: pipe.checks.clone(),
    }
}

/// Rounds away digits below `1e-12` so that reports are stable across seeds.
fn clean(x: f64) -> f64 {
    let r = (x * 1e12).round() / 1e12;
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::catalog_entry;

    fn pipeline(name: &str, seed: u64) -> (Arc<Engine>, CenterPipeline) {
        let e = Arc::new(Engine::new(catalog_entry(name).unwrap()).unwrap());
        let r = e.rank();
        let p = run_pipeline(e.clone(), LambdaObject::all_simples(r), seed, 1e-9).unwrap();
        (e, p)
    }

    #[test]
    fn center_dimension_of_commutative_algebra() {
        let (_, p) = pipeline("vec_z3", 1);
        assert_eq!(algebra_center(&p.algebra).ncols(), 9);
    }

    #[test]
    fn idempotents_are_central_and_sum_to_one() {
        let (_, p) = pipeline("fib", 2);
        let alg = &p.algebra;
        let mut sum = alg.zero();
        for e in &p.decomposition.idempotents {
            sum = sum.add(e).unwrap();
            let x = alg.random(&mut ChaCha8Rng::seed_from_u64(4));
            let l = alg.product(e, &x).unwrap();
            let r = alg.product(&x, e).unwrap();
            assert!(l.max_diff(&r) < 1e-9);
        }
        assert!(sum.max_diff(alg.unit()) < 1e-9);
        assert_eq!(p.decomposition.sorted_sizes(), vec![1, 1, 1, 2]);
    }

    #[test]
    fn minimal_projection_has_rank_one() {
        let (_, p) = pipeline("ising", 3);
        for s in &p.simples {
            let q = &s.idempotent;
            let q2 = p.algebra.product(q, q).unwrap();
            assert!(q2.max_diff(q) < 1e-8);
            assert!(p.algebra.star(q).max_diff(q) < 1e-8);
            let tr = p.algebra.left_matrix(q).trace().re;
            // left regular trace of a minimal projection in an n×n block is n
            assert!((tr - s.block_size as f64).abs() < 1e-8);
        }
    }

    #[test]
    fn isometry_spans_the_range_of_t_q() {
        let (e, p) = pipeline("fib", 4);
        for s in &p.simples {
            let v = &s.isometry;
            let vtv = v.then(&v.dagger()).unwrap();
            assert!(vtv.max_diff(&ObjMorphism::id(&e, v.source())) < 1e-10);
            let tq = p.maps.t_apply(&s.idempotent).unwrap();
            assert!(v.dagger().then(v).unwrap().max_diff(&tq) < 1e-8);
            let d = vtv.trace(&e).unwrap().re;
            assert!((d - s.dim(&e)).abs() < 1e-10);
            assert_eq!(s.summands().len(), s.underlying.iter().sum::<u32>() as usize);
        }
    }

    #[test]
    fn twist_of_unit_object_is_one() {
        let (e, p) = pipeline("rep_s3", 5);
        let unit = p
            .simples
            .iter()
            .find(|s| s.underlying == vec![1, 0, 0])
            .expect("unit object of the center");
        assert!((twist_of(&e, &unit.half_braiding) - c(1.0)).norm() < 1e-10);
    }

    #[test]
    fn report_is_sorted_and_serializable() {
        let spec = catalog_entry("vec_z2").unwrap();
        let rep = center_report(spec, LambdaObject::all_simples(2), 1, 1e-9).unwrap();
        assert!(rep.pass);
        assert_eq!(rep.rank, 4);
        let v: serde_json::Value = serde_json::from_str(&rep.to_json()).unwrap();
        assert_eq!(v["blocks"].as_array().unwrap().len(), 4);
        assert!(v.get("checks").is_none());
        assert!(rep.to_text().starts_with("center PASS"));
    }
}
