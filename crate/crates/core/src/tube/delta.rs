//! `Δ(Λ) = ⊕ₓ x⊗Λ⊗x̄`, its half-braiding and the maps `f ↦ T_f`, `T ↦ f_T`.
//!
//! Each crossed pair of colored vertices is normalized by its planar closure:
//! the vertex `L` is kept and its partner `R` is divided by the closed
//! diagram `⟨L, R⟩`, then the pair is weighted by `√(d d d)`.

use std::collections::HashMap;
use std::sync::Arc;

use num_complex::Complex64;
use rand::Rng;
use rayon::prelude::*;

use super::{HalfBraiding, LambdaObject, ObjMorphism, TubeAlgebra, TubeElement};
use crate::category::Label;
use crate::diagram::{Engine, Morphism, TensorWord};
use crate::error::{Error, Result};
use crate::linalg::{c, hermitian_eigen, random_matrix, CMat, ONE, ZERO};
use crate::report::VerificationReport;

/// Residual above which `f_map` rejects its argument.
pub const COMMUTANT_TOL: f64 = 1e-7;

fn w(v: &[Label]) -> TensorWord {
    TensorWord(v.to_vec())
}

fn fuse(engine: &Engine, a: Label, b: Label, z: Label) -> Morphism {
    engine.vertex(a, b, z).expect("admissible vertex").dagger()
}

fn split(engine: &Engine, z: Label, a: Label, b: Label) -> Morphism {
    engine.vertex(a, b, z).expect("admissible vertex")
}

fn closed(engine: &Engine, parts: &[&Morphism]) -> Complex64 {
    let m = engine.chain(parts).expect("closed diagram composes");
    m.scalar(engine.unit()).expect("closed diagram is a scalar")
}

fn admissible(engine: &Engine, a: Label, b: Label, z: Label) -> bool {
    engine.spec().ring.n(a, b, z) > 0
}

/// `Δ(Λ)` with its half-braiding `e_{Δ,a} : Δ⊗a → a⊗Δ` for every simple `a`.
pub struct DeltaObject {
    engine: Arc<Engine>,
    lambda: LambdaObject,
    slots: Vec<Label>,
    summands: Vec<(Label, usize)>,
    words: Vec<TensorWord>,
    braiding: HalfBraiding,
}

impl std::fmt::Debug for DeltaObject {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("DeltaObject")
            .field("lambda", &self.lambda)
            .field("summands", &self.summands)
            .finish()
    }
}

impl DeltaObject {
    /// Assembles `Δ` and `e_Δ` without checking them.
    pub fn build(engine: Arc<Engine>, lambda: LambdaObject) -> Result<Self> {
        let rank = engine.rank();
        if lambda.mult().len() != rank {
            return Err(Error::Shape("lambda does not match the category rank".into()));
        }
        let slots = lambda.slots();
        let mut summands = Vec::new();
        let mut words = Vec::new();
        for x in 0..rank {
            for (s, &l) in slots.iter().enumerate() {
                summands.push((x, s));
                words.push(w(&[x, l, engine.dual(x)]));
            }
        }
        let mut delta = DeltaObject {
            engine,
            lambda,
            slots,
            summands,
            braiding: HalfBraiding::new(words.clone(), Vec::new()),
            words,
        };
        let comps = (0..rank).into_par_iter().map(|a| delta.build_braiding(a)).collect();
        delta.braiding = HalfBraiding::new(delta.words.clone(), comps);
        Ok(delta)
    }

    /// `e_{Δ,a} = Σ_{x,y} d_a^{-1/2} · (pair of vertices x → a⊗y, x̄⊗a → ȳ)`.
    fn build_braiding(&self, a: Label) -> ObjMorphism {
        let eng = &*self.engine;
        let ab = eng.dual(a);
        let src = self.words_right(a);
        let tgt = self.words_left(a);
        let mut e = ObjMorphism::zero(eng, &src, &tgt);
        let mut norms: HashMap<(Label, Label), Complex64> = HashMap::new();
        for (k, &(x, s)) in self.summands.iter().enumerate() {
            let xb = eng.dual(x);
            let ls = self.slots[s];
            for (l, &(y, s2)) in self.summands.iter().enumerate() {
                let yb = eng.dual(y);
                if s2 != s || !admissible(eng, a, y, x) || !admissible(eng, xb, a, yb) {
                    continue;
                }
                let lv = split(eng, x, a, y);
                let rv = fuse(eng, xb, a, yb);
                let pairing = *norms.entry((x, y)).or_insert_with(|| {
                    let cup = eng.tensor(&eng.coev(x), &eng.coev(a));
                    let mid = eng.tensor_id_right(&eng.tensor(&lv, &rv), &w(&[ab]));
                    let cap = eng.whisker(&w(&[a]), &eng.coev(y).dagger(), &w(&[ab]));
                    closed(eng, &[&cup, &mid, &cap, &eng.coev(a).dagger()])
                });
                let scale = (eng.d(x) * eng.d(a) * eng.d(y)).sqrt() / eng.d(a).sqrt();
                let r = eng.whisker(&w(&[x, ls]), &rv, &TensorWord::empty());
                let lm = eng.tensor_id_right(&lv, &w(&[ls, yb]));
                let m = eng.compose(&lm, &r).expect("braiding chain");
                e.add_at(l, k, c(scale) / pairing, &m).expect("braiding block");
            }
        }
        e
    }

    /// Summands `x⊗λ⊗x̄⊗a` of `Δ⊗a`.
    pub fn words_right(&self, a: Label) -> Vec<TensorWord> {
        self.words.iter().map(|wd| wd.concat(&w(&[a]))).collect()
    }

    /// Summands `a⊗x⊗λ⊗x̄` of `a⊗Δ`.
    pub fn words_left(&self, a: Label) -> Vec<TensorWord> {
        self.words.iter().map(|wd| w(&[a]).concat(wd)).collect()
    }

    pub fn engine(&self) -> &Engine {
        &self.engine
    }

    pub fn lambda(&self) -> &LambdaObject {
        &self.lambda
    }

    pub fn slots(&self) -> &[Label] {
        &self.slots
    }

    /// `(x, slot)` for every summand `x⊗λ_slot⊗x̄`, ordered by `x` then slot.
    pub fn summands(&self) -> &[(Label, usize)] {
        &self.summands
    }

    pub fn words(&self) -> &[TensorWord] {
        &self.words
    }

    pub fn summand_index(&self, x: Label, slot: usize) -> usize {
        x * self.slots.len() + slot
    }

    pub fn half_braiding(&self, a: Label) -> &ObjMorphism {
        self.braiding.component(a)
    }

    pub fn braiding(&self) -> &HalfBraiding {
        &self.braiding
    }

    pub fn id(&self) -> ObjMorphism {
        ObjMorphism::id(&self.engine, &self.words)
    }

    pub fn zero_end(&self) -> ObjMorphism {
        ObjMorphism::zero(&self.engine, &self.words, &self.words)
    }

    /// Complex Gaussian endomorphism of `Δ`.
    pub fn random_end<R: Rng + ?Sized>(&self, rng: &mut R) -> ObjMorphism {
        let mut m = self.zero_end();
        for b in m.blocks_mut() {
            if !b.is_empty() {
                *b = random_matrix(rng, b.nrows(), b.ncols());
            }
        }
        m
    }

    /// Unitarity both ways, the hexagon on all pairs and `e_{Δ,1} = id`.
    pub fn verify(&self, tol: f64) -> Vec<VerificationReport> {
        self.braiding.verify(&self.engine, "delta", tol)
    }

    /// `max_b ‖(id_b ⊗ T) e_{Δ,b} − e_{Δ,b} (T ⊗ id_b)‖`.
    pub fn commutant_residual(&self, t: &ObjMorphism) -> Result<f64> {
        self.check_end(t)?;
        let eng = &*self.engine;
        let mut worst: f64 = 0.0;
        for b in 0..eng.rank() {
            let bw = w(&[b]);
            let e = &self.braiding.component(b);
            let lhs = e.then(&t.whisker(eng, &bw, &TensorWord::empty()))?;
            let rhs = t.whisker(eng, &TensorWord::empty(), &bw).then(e)?;
            worst = worst.max(lhs.max_diff(&rhs));
        }
        Ok(worst)
    }

    /// `dim(C)⁻¹ Σ_a d_a ptr_a(e_{Δ,a}† (id_a ⊗ M) e_{Δ,a})`, an expectation onto
    /// the commutant of the half-braiding.
    pub fn average(&self, m: &ObjMorphism) -> Result<ObjMorphism> {
        self.check_end(m)?;
        let eng = &*self.engine;
        let mut out = self.zero_end();
        for a in 0..eng.rank() {
            let e = &self.braiding.component(a);
            let inner = e
                .then(&m.whisker(eng, &w(&[a]), &TensorWord::empty()))?
                .then(&e.dagger())?;
            let ab = w(&[eng.dual(a)]);
            let opened = inner.whisker(eng, &TensorWord::empty(), &ab);
            let coev = eng.coev(a);
            let cup = ObjMorphism::diagonal(
                eng,
                &self
                    .words
                    .iter()
                    .map(|wd| eng.tensor_id_left(wd, &coev))
                    .collect::<Vec<_>>(),
            );
            let tr = cup.then(&opened)?.then(&cup.dagger())?;
            out.axpy(c(eng.d(a)), &tr)?;
        }
        Ok(out.scale(c(1.0 / eng.spec().global_dim())))
    }

    fn check_end(&self, t: &ObjMorphism) -> Result<()> {
        if t.source() != self.words.as_slice() || t.target() != self.words.as_slice() {
            return Err(Error::Shape("not an endomorphism of Δ".into()));
        }
        Ok(())
    }
}

/// Builds `Δ(Λ)` and fails with [`Error::Tolerance`] if its half-braiding is
/// not unitary, violates the hexagon or is not the identity at the unit.
pub fn build_delta(engine: Arc<Engine>, lambda: LambdaObject, tol: f64) -> Result<DeltaObject> {
    let delta = DeltaObject::build(engine, lambda)?;
    for r in delta.verify(tol) {
        if !r.pass {
            return Err(Error::Tolerance {
                check: r.suite,
                residual: r.max_residual,
                tol,
            });
        }
    }
    Ok(delta)
}

fn check_pair(alg: &TubeAlgebra, delta: &DeltaObject) -> Result<()> {
    if alg.lambda() != delta.lambda() || alg.spec().name != delta.engine().spec().name {
        return Err(Error::Shape("tube algebra and Δ were built from different data".into()));
    }
    Ok(())
}

/// `T_f = Σ_{a,x,y} √(d_x d_a d_y) · (x⊗a → y) (id_x ⊗ f_a ⊗ id_ȳ) (x̄ → a⊗ȳ) / ⟨pair⟩`.
pub fn t_map(alg: &TubeAlgebra, delta: &DeltaObject, f: &TubeElement) -> Result<ObjMorphism> {
    check_pair(alg, delta)?;
    let eng = &*delta.engine;
    let rank = eng.rank();
    let mut out = delta.zero_end();
    let mut norms: HashMap<(Label, Label, Label), Complex64> = HashMap::new();
    for a in 0..rank {
        let fa = alg.component(f, a)?;
        for s in 0..delta.slots.len() {
            for t in 0..delta.slots.len() {
                if fa.is_zero_at(t, s) {
                    continue;
                }
                let fst = fa.get(t, s);
                let (ls, lt) = (delta.slots[s], delta.slots[t]);
                for x in 0..rank {
                    let xb = eng.dual(x);
                    for y in 0..rank {
                        let yb = eng.dual(y);
                        if !admissible(eng, x, a, y) || !admissible(eng, a, yb, xb) {
                            continue;
                        }
                        let lv = fuse(eng, x, a, y);
                        let rv = split(eng, xb, a, yb);
                        let pairing = *norms.entry((x, a, y)).or_insert_with(|| {
                            let mid = eng.tensor_id_left(&w(&[x]), &rv);
                            let top = eng.tensor_id_right(&lv, &w(&[yb]));
                            closed(eng, &[&eng.coev(x), &mid, &top, &eng.coev(y).dagger()])
                        });
                        let step1 = eng.tensor_id_left(&w(&[x, ls]), &rv);
                        let step2 = eng.whisker(&w(&[x]), &fst, &w(&[yb]));
                        let step3 = eng.tensor_id_right(&lv, &w(&[lt, yb]));
                        let m = eng.chain(&[&step1, &step2, &step3])?;
                        let z = c((eng.d(x) * eng.d(a) * eng.d(y)).sqrt()) / pairing;
                        out.add_at(delta.summand_index(y, t), delta.summand_index(x, s), z, &m)?;
                    }
                }
            }
        }
    }
    Ok(out)
}

/// `f_T` without the commutant check.
fn f_map_raw(alg: &TubeAlgebra, delta: &DeltaObject, t: &ObjMorphism) -> Result<TubeElement> {
    let eng = &*delta.engine;
    let rank = eng.rank();
    let n = delta.slots.len();
    let dim_c = eng.spec().global_dim();
    let mut comps: Vec<ObjMorphism> = (0..rank)
        .map(|a| ObjMorphism::zero(eng, &alg.lambda_a_words(a), &alg.a_lambda_words(a)))
        .collect();
    for (k, &(x, s)) in delta.summands.iter().enumerate() {
        let xb = eng.dual(x);
        let ls = delta.slots[s];
        for (l, &(y, tt)) in delta.summands.iter().enumerate() {
            if t.is_zero_at(l, k) {
                continue;
            }
            let lt = delta.slots[tt];
            let block = t.get(l, k);
            let mid = eng.whisker(&w(&[xb]), &block, &w(&[y]));
            for a in eng.spec().ring.fuse(xb, y) {
                let step1 = eng.tensor_id_right(&eng.ev(x).dagger(), &w(&[ls, a]));
                let step2 = eng.tensor_id_left(&w(&[xb, x, ls]), &split(eng, a, xb, y));
                let step4 = eng.tensor_id_left(&w(&[xb, y, lt]), &eng.ev(y));
                let step5 = eng.tensor_id_right(&fuse(eng, xb, y, a), &w(&[lt]));
                let m = eng.chain(&[&step1, &step2, &mid, &step4, &step5])?;
                let z = c((eng.d(x) * eng.d(y) / eng.d(a)).sqrt() / dim_c);
                comps[a].add_at(tt, s, z, &m)?;
            }
        }
    }
    debug_assert_eq!(n, alg.slots().len());
    alg.from_components(&comps)
}

/// `f_T = dim(C)⁻¹ Σ_{x,y} √(d_x d_y / d_a) · (T closed by a cup on x and a cap on y)`.
///
/// Fails with [`Error::NotInCommutant`] if `T` does not commute with the
/// half-braiding to within [`COMMUTANT_TOL`].
pub fn f_map(alg: &TubeAlgebra, delta: &DeltaObject, t: &ObjMorphism) -> Result<TubeElement> {
    check_pair(alg, delta)?;
    let residual = delta.commutant_residual(t)?;
    if residual.is_nan() || residual > COMMUTANT_TOL * t.max_abs().max(1.0) {
        return Err(Error::NotInCommutant { residual });
    }
    f_map_raw(alg, delta, t)
}

/// Dense matrices of `f ↦ T_f` and `T ↦ f_T` in the coefficient bases of
/// `A(Λ)` and `End(Δ)`.
pub struct CompiledMaps {
    template: ObjMorphism,
    t: CMat,
    f: CMat,
    weights: Vec<f64>,
}

impl CompiledMaps {
    pub fn new(alg: &TubeAlgebra, delta: &DeltaObject) -> Result<Self> {
        check_pair(alg, delta)?;
        let template = delta.zero_end();
        let ne = template.dim();
        let na = alg.dim();
        let tcols: Vec<Vec<Complex64>> = (0..na)
            .into_par_iter()
            .map(|i| t_map(alg, delta, &alg.basis_element(i)).map(|m| m.coeffs()))
            .collect::<Result<_>>()?;
        let fcols: Vec<Vec<Complex64>> = (0..ne)
            .into_par_iter()
            .map(|j| {
                let mut e = template.clone();
                let mut v = vec![ZERO; ne];
                v[j] = ONE;
                e.set_coeffs(&v)?;
                f_map_raw(alg, delta, &e).map(|f| f.coeffs().to_vec())
            })
            .collect::<Result<_>>()?;
        let t = CMat::from_fn(ne, na, |r, k| tcols[k][r]);
        let f = CMat::from_fn(na, ne, |r, k| fcols[k][r]);
        let mut weights = Vec::with_capacity(ne);
        for (ch, b) in template.blocks().iter().enumerate() {
            weights.extend(std::iter::repeat_n(delta.engine.d(ch), b.len()));
        }
        Ok(CompiledMaps {
            template,
            t,
            f,
            weights,
        })
    }

    pub fn t_matrix(&self) -> &CMat {
        &self.t
    }

    pub fn f_matrix(&self) -> &CMat {
        &self.f
    }

    pub fn end_dim(&self) -> usize {
        self.t.nrows()
    }

    pub fn t_apply(&self, f: &TubeElement) -> Result<ObjMorphism> {
        if f.dim() != self.t.ncols() {
            return Err(Error::Shape("element does not belong to this algebra".into()));
        }
        let v = &self.t * nalgebra::DVector::from_column_slice(f.coeffs());
        let mut m = self.template.clone();
        m.set_coeffs(v.as_slice())?;
        Ok(m)
    }

    /// `f_T` by the compiled matrix; the commutant condition is not checked.
    pub fn f_apply(&self, t: &ObjMorphism) -> Result<TubeElement> {
        if t.source() != self.template.source() || t.target() != self.template.target() {
            return Err(Error::Shape("not an endomorphism of Δ".into()));
        }
        let v = &self.f * nalgebra::DVector::from_column_slice(&t.coeffs());
        Ok(TubeElement::from_coeffs(v.as_slice().to_vec()))
    }

    /// `G_ij = tr_Δ(T_{e_j}† T_{e_i})`.
    pub fn gram(&self) -> CMat {
        let mut wt = self.t.clone();
        for (r, &wv) in self.weights.iter().enumerate() {
            wt.row_mut(r).scale_mut(wv);
        }
        (self.t.adjoint() * wt).transpose()
    }

    /// Smallest and largest eigenvalue of the Gram matrix.
    pub fn gram_spectrum(&self) -> (f64, f64) {
        let (vals, _) = hermitian_eigen(&self.gram());
        (
            vals.first().copied().unwrap_or(0.0),
            vals.last().copied().unwrap_or(0.0),
        )
    }
}
