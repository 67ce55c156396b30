//! The tube algebra `A(Λ) = ⊕_a Hom(Λ⊗a, a⊗Λ)` and the object `Δ(Λ)`.
//!
//! `Λ` is a direct sum of simple objects listed slot by slot. A basis element
//! of `A(Λ)` is a tree-basis morphism `λ_s ⊗ a → a ⊗ λ_t` labelled by the tube
//! direction `a`, the two slots and its position in the hom-space basis.
//!
//! The product of `f` and `g` in direction `a` splits `a` into `c ⊗ b`, runs
//! `g_c` then `f_b` across `Λ` and fuses back:
//!
//! ```text
//! (f·g)_a = Σ_{b,c} √(d_b d_c / d_a) (V† ⊗ id)(id_c ⊗ f_b)(g_c ⊗ id_b)(id ⊗ V),   V = V^{cb}_a
//! ```
//!
//! and the star bends `(f_ā)†` with a cup on the left and a cap on the right.

mod braiding;
mod delta;
mod object;

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use num_complex::Complex64;
use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::category::{FusionCategorySpec, Label};
use crate::diagram::{Engine, Morphism, TensorWord};
use crate::error::{Error, Result};
use crate::linalg::{c, gaussian, ONE, ZERO};
use crate::report::VerificationReport;

pub use braiding::HalfBraiding;
pub use delta::{build_delta, f_map, t_map, CompiledMaps, DeltaObject, COMMUTANT_TOL};
pub use object::ObjMorphism;

/// Coefficients below this magnitude are dropped from the structure tables.
const SNAP: f64 = 1e-14;

/// `Λ = ⊕ₓ x^{⊕ mult[x]}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaObject {
    mult: Vec<u32>,
}

impl LambdaObject {
    pub fn new(mult: Vec<u32>) -> Result<Self> {
        if mult.iter().all(|&m| m == 0) {
            return Err(Error::Schema("lambda must contain at least one simple".into()));
        }
        Ok(LambdaObject { mult })
    }

    /// `⊕ₓ x`, one copy of every simple.
    pub fn all_simples(rank: usize) -> Self {
        LambdaObject { mult: vec![1; rank] }
    }

    pub fn simple(rank: usize, x: Label) -> Self {
        let mut mult = vec![0; rank];
        mult[x] = 1;
        LambdaObject { mult }
    }

    /// Parses `all-simples` or a comma list such as `1:1,tau:2`; a bare
    /// label counts once.
    pub fn parse(spec: &FusionCategorySpec, text: &str) -> Result<Self> {
        let text = text.trim();
        if text == "all-simples" {
            return Ok(Self::all_simples(spec.rank()));
        }
        let mut mult = vec![0u32; spec.rank()];
        for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (name, count) = match item.rsplit_once(':') {
                Some((n, k)) => {
                    let k: u32 = k
                        .trim()
                        .parse()
                        .map_err(|_| Error::Schema(format!("bad multiplicity in lambda item '{item}'")))?;
                    (n.trim(), k)
                }
                None => (item, 1),
            };
            let x = spec
                .ring
                .index(name)
                .ok_or_else(|| Error::Schema(format!("unknown label '{name}' in lambda")))?;
            mult[x] += count;
        }
        Self::new(mult)
    }

    pub fn mult(&self) -> &[u32] {
        &self.mult
    }

    /// Expanded list of simple summands, in label order.
    pub fn slots(&self) -> Vec<Label> {
        self.mult
            .iter()
            .enumerate()
            .flat_map(|(x, &m)| std::iter::repeat_n(x, m as usize))
            .collect()
    }

    pub fn to_map(&self, spec: &FusionCategorySpec) -> BTreeMap<String, u32> {
        self.mult
            .iter()
            .enumerate()
            .filter(|(_, &m)| m > 0)
            .map(|(x, &m)| (spec.label(x).to_string(), m))
            .collect()
    }
}

/// Basis label `(a, s, t, i)`: the `i`-th tree-basis morphism `λ_s ⊗ a → a ⊗ λ_t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TubeBasisLabel {
    pub a: Label,
    pub source_slot: usize,
    pub target_slot: usize,
    pub index: usize,
}

/// One summand `Hom(λ_s ⊗ a, a ⊗ λ_t)` of the algebra.
#[derive(Clone, Debug)]
struct Sector {
    a: Label,
    s: usize,
    t: usize,
    offset: usize,
    dim: usize,
    source: TensorWord,
    target: TensorWord,
}

/// An element of `A(Λ)` in the basis of its algebra.
#[derive(Clone, Debug, PartialEq)]
pub struct TubeElement {
    coeffs: Vec<Complex64>,
}

impl TubeElement {
    pub fn from_coeffs(coeffs: Vec<Complex64>) -> Self {
        TubeElement { coeffs }
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn scale(&self, z: Complex64) -> TubeElement {
        TubeElement {
            coeffs: self.coeffs.iter().map(|x| x * z).collect(),
        }
    }

    pub fn add(&self, other: &TubeElement) -> Result<TubeElement> {
        self.check(other)?;
        Ok(TubeElement {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &TubeElement) -> Result<TubeElement> {
        self.add(&other.scale(c(-1.0)))
    }

    pub fn max_diff(&self, other: &TubeElement) -> f64 {
        if self.check(other).is_err() {
            return f64::INFINITY;
        }
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn max_abs(&self) -> f64 {
        self.coeffs.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    fn check(&self, other: &TubeElement) -> Result<()> {
        if self.coeffs.len() != other.coeffs.len() {
            return Err(Error::Shape(format!(
                "tube elements of dimension {} and {}",
                self.coeffs.len(),
                other.coeffs.len()
            )));
        }
        Ok(())
    }
}

/// `A(Λ)` with its structure constants.
pub struct TubeAlgebra {
    engine: Arc<Engine>,
    lambda: LambdaObject,
    slots: Vec<Label>,
    sectors: Vec<Sector>,
    sector_index: HashMap<(Label, usize, usize), usize>,
    basis: Vec<TubeBasisLabel>,
    basis_sector: Vec<usize>,
    /// `e_i · e_j = Σ_k mult[i][j][..] e_k`.
    mult: Vec<Vec<Vec<(usize, Complex64)>>>,
    /// `star(e_i) = Σ_j star[i][..] e_j`.
    star: Vec<Vec<(usize, Complex64)>>,
    unit: TubeElement,
}

impl std::fmt::Debug for TubeAlgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("TubeAlgebra")
            .field("category", &self.engine.spec().name)
            .field("lambda", &self.lambda.mult)
            .field("dim", &self.dim())
            .finish()
    }
}

fn snap(v: Vec<Complex64>) -> Vec<(usize, Complex64)> {
    v.into_iter().enumerate().filter(|(_, z)| z.norm() > SNAP).collect()
}

impl TubeAlgebra {
    /// Assembles the basis and evaluates the product and star diagrams on all
    /// basis elements. No invariants are checked; see [`TubeAlgebra::verify`].
    pub fn build(engine: Arc<Engine>, lambda: LambdaObject) -> Result<Self> {
        let rank = engine.rank();
        if lambda.mult.len() != rank {
            return Err(Error::Shape(format!(
                "lambda has {} entries but the category has rank {rank}",
                lambda.mult.len()
            )));
        }
        let slots = lambda.slots();
        let mut sectors = Vec::new();
        let mut sector_index = HashMap::new();
        let mut basis = Vec::new();
        let mut basis_sector = Vec::new();
        let mut offset = 0;
        for a in 0..rank {
            for (s, &ls) in slots.iter().enumerate() {
                for (t, &lt) in slots.iter().enumerate() {
                    let source = TensorWord(vec![ls, a]);
                    let target = TensorWord(vec![a, lt]);
                    let dim = engine.hom_space(&source, &target).dim;
                    if dim == 0 {
                        continue;
                    }
                    sector_index.insert((a, s, t), sectors.len());
                    for index in 0..dim {
                        basis.push(TubeBasisLabel {
                            a,
                            source_slot: s,
                            target_slot: t,
                            index,
                        });
                        basis_sector.push(sectors.len());
                    }
                    sectors.push(Sector {
                        a,
                        s,
                        t,
                        offset,
                        dim,
                        source,
                        target,
                    });
                    offset += dim;
                }
            }
        }
        let n = basis.len();
        let mut alg = TubeAlgebra {
            engine,
            lambda,
            slots,
            sectors,
            sector_index,
            basis,
            basis_sector,
            mult: Vec::new(),
            star: Vec::new(),
            unit: TubeElement { coeffs: vec![ZERO; n] },
        };
        alg.unit = alg.unit_by_construction();
        let mult: Vec<Vec<Vec<(usize, Complex64)>>> = (0..n)
            .into_par_iter()
            .map(|i| {
                let ei = alg.basis_element(i);
                (0..n)
                    .map(|j| {
                        let p = alg.product_diagram(&ei, &alg.basis_element(j)).expect("basis elements");
                        snap(p.coeffs)
                    })
                    .collect()
            })
            .collect();
        let star: Vec<Vec<(usize, Complex64)>> = (0..n)
            .into_par_iter()
            .map(|i| snap(alg.star_diagram(&alg.basis_element(i)).coeffs))
            .collect();
        alg.mult = mult;
        alg.star = star;
        Ok(alg)
    }

    /// Builds the algebra and fails with [`Error::Tolerance`] if an algebraic
    /// invariant is violated.
    pub fn new(engine: Arc<Engine>, lambda: LambdaObject, tol: f64) -> Result<Self> {
        let alg = Self::build(engine, lambda)?;
        for r in alg.verify(tol) {
            if !r.pass {
                return Err(Error::Tolerance {
                    check: format!("tube {}", r.suite),
                    residual: r.max_residual,
                    tol,
                });
            }
        }
        Ok(alg)
    }

    pub fn engine(&self) -> &Engine {
        &self.engine
    }

    pub fn engine_arc(&self) -> Arc<Engine> {
        self.engine.clone()
    }

    pub fn spec(&self) -> &FusionCategorySpec {
        self.engine.spec()
    }

    pub fn lambda(&self) -> &LambdaObject {
        &self.lambda
    }

    pub fn slots(&self) -> &[Label] {
        &self.slots
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[TubeBasisLabel] {
        &self.basis
    }

    /// Position of a basis label, if present.
    pub fn position(&self, label: &TubeBasisLabel) -> Option<usize> {
        let sec = &self.sectors[*self
            .sector_index
            .get(&(label.a, label.source_slot, label.target_slot))?];
        (label.index < sec.dim).then_some(sec.offset + label.index)
    }

    /// `Σ_a dim Hom(Λ⊗a, a⊗Λ)` for the direction `a` alone.
    pub fn direction_dim(&self, a: Label) -> usize {
        self.sectors.iter().filter(|s| s.a == a).map(|s| s.dim).sum()
    }

    pub fn zero(&self) -> TubeElement {
        TubeElement {
            coeffs: vec![ZERO; self.dim()],
        }
    }

    pub fn unit(&self) -> &TubeElement {
        &self.unit
    }

    pub fn basis_element(&self, i: usize) -> TubeElement {
        let mut e = self.zero();
        e.coeffs[i] = ONE;
        e
    }

    pub fn element(&self, coeffs: Vec<Complex64>) -> Result<TubeElement> {
        if coeffs.len() != self.dim() {
            return Err(Error::Shape(format!(
                "expected {} coefficients, got {}",
                self.dim(),
                coeffs.len()
            )));
        }
        Ok(TubeElement { coeffs })
    }

    /// Complex Gaussian coefficients.
    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> TubeElement {
        TubeElement {
            coeffs: (0..self.dim()).map(|_| gaussian(rng)).collect(),
        }
    }

    /// The basis element `i` as a morphism `λ_s ⊗ a → a ⊗ λ_t`.
    pub fn basis_morphism(&self, i: usize) -> Morphism {
        let sec = &self.sectors[self.basis_sector[i]];
        let mut v = vec![ZERO; sec.dim];
        v[i - sec.offset] = ONE;
        self.sector_morphism(sec, &v)
    }

    fn sector_morphism(&self, sec: &Sector, coeffs: &[Complex64]) -> Morphism {
        let mut m = self.engine.zero(&sec.source, &sec.target);
        m.set_coeffs(coeffs).expect("sector dimension");
        m
    }

    fn sector_part(&self, sec: &Sector, f: &TubeElement) -> Option<Morphism> {
        let v = &f.coeffs[sec.offset..sec.offset + sec.dim];
        v.iter().any(|z| *z != ZERO).then(|| self.sector_morphism(sec, v))
    }

    /// Summand words `λ_s ⊗ a` of `Λ ⊗ a`.
    pub fn lambda_a_words(&self, a: Label) -> Vec<TensorWord> {
        self.slots.iter().map(|&l| TensorWord(vec![l, a])).collect()
    }

    /// Summand words `a ⊗ λ_t` of `a ⊗ Λ`.
    pub fn a_lambda_words(&self, a: Label) -> Vec<TensorWord> {
        self.slots.iter().map(|&l| TensorWord(vec![a, l])).collect()
    }

    /// The component `f_a : Λ⊗a → a⊗Λ`.
    pub fn component(&self, f: &TubeElement, a: Label) -> Result<ObjMorphism> {
        self.check(f)?;
        let mut m = ObjMorphism::zero(&self.engine, &self.lambda_a_words(a), &self.a_lambda_words(a));
        for sec in self.sectors.iter().filter(|s| s.a == a) {
            if let Some(p) = self.sector_part(sec, f) {
                m.set(sec.t, sec.s, &p)?;
            }
        }
        Ok(m)
    }

    /// Assembles an element from components indexed by direction.
    pub fn from_components(&self, comps: &[ObjMorphism]) -> Result<TubeElement> {
        if comps.len() != self.engine.rank() {
            return Err(Error::Shape(format!("expected {} components", self.engine.rank())));
        }
        let mut e = self.zero();
        for (a, comp) in comps.iter().enumerate() {
            if comp.source() != self.lambda_a_words(a).as_slice() || comp.target() != self.a_lambda_words(a).as_slice()
            {
                return Err(Error::Shape(format!("component {a} is not a morphism Λ⊗a → a⊗Λ")));
            }
            for sec in self.sectors.iter().filter(|s| s.a == a) {
                let v = comp.get(sec.t, sec.s).coeffs();
                e.coeffs[sec.offset..sec.offset + sec.dim].copy_from_slice(&v);
            }
            // components between slots with no sector must vanish
            for s in 0..self.slots.len() {
                for t in 0..self.slots.len() {
                    if !self.sector_index.contains_key(&(a, s, t)) && !comp.is_zero_at(t, s) {
                        return Err(Error::Shape("component outside the tube sectors".into()));
                    }
                }
            }
        }
        Ok(e)
    }

    fn check(&self, f: &TubeElement) -> Result<()> {
        if f.dim() != self.dim() {
            return Err(Error::Shape(format!(
                "element of dimension {} in an algebra of dimension {}",
                f.dim(),
                self.dim()
            )));
        }
        Ok(())
    }

    fn unit_by_construction(&self) -> TubeElement {
        let u = self.engine.unit();
        let mut e = self.zero();
        for (s, &l) in self.slots.iter().enumerate() {
            let sec = &self.sectors[self.sector_index[&(u, s, s)]];
            let mut m = self.engine.zero(&sec.source, &sec.target);
            m.block_mut(l)[(0, 0)] = ONE;
            e.coeffs[sec.offset..sec.offset + sec.dim].copy_from_slice(&m.coeffs());
        }
        e
    }

    /// `f · g` evaluated from the product diagram.
    pub fn product_diagram(&self, f: &TubeElement, g: &TubeElement) -> Result<TubeElement> {
        self.check(f)?;
        self.check(g)?;
        let eng = &*self.engine;
        let mut out = self.zero();
        let fparts: Vec<_> = self
            .sectors
            .iter()
            .filter_map(|s| Some((s, self.sector_part(s, f)?)))
            .collect();
        let gparts: Vec<_> = self
            .sectors
            .iter()
            .filter_map(|s| Some((s, self.sector_part(s, g)?)))
            .collect();
        for (fs, fm) in &fparts {
            for (gs, gm) in &gparts {
                if fs.s != gs.t {
                    continue;
                }
                let (b, cc) = (fs.a, gs.a);
                let (s, t) = (gs.s, fs.t);
                for a in eng.spec().ring.fuse(cc, b) {
                    let Some(&k) = self.sector_index.get(&(a, s, t)) else {
                        continue;
                    };
                    let sec = &self.sectors[k];
                    let v = eng.vertex(cc, b, a)?;
                    let ls = TensorWord(vec![self.slots[s]]);
                    let lt = TensorWord(vec![self.slots[t]]);
                    let step1 = eng.whisker(&ls, &v, &TensorWord::empty());
                    let step2 = eng.tensor_id_right(gm, &TensorWord(vec![b]));
                    let step3 = eng.tensor_id_left(&TensorWord(vec![cc]), fm);
                    let step4 = eng.tensor_id_right(&v.dagger(), &lt);
                    let m = eng.chain(&[&step1, &step2, &step3, &step4])?;
                    let z = c((eng.d(b) * eng.d(cc) / eng.d(a)).sqrt());
                    for (dst, x) in out.coeffs[sec.offset..sec.offset + sec.dim].iter_mut().zip(m.coeffs()) {
                        *dst += z * x;
                    }
                }
            }
        }
        Ok(out)
    }

    /// `f*` evaluated from the star diagram.
    pub fn star_diagram(&self, f: &TubeElement) -> TubeElement {
        let eng = &*self.engine;
        let mut out = self.zero();
        for fs in &self.sectors {
            let Some(fm) = self.sector_part(fs, f) else {
                continue;
            };
            // f_ā : λ_s ⊗ ā → ā ⊗ λ_t contributes to direction a, slots t → s
            let a = eng.dual(fs.a);
            let sec = &self.sectors[self.sector_index[&(a, fs.t, fs.s)]];
            let aw = TensorWord(vec![a]);
            let step1 = eng.tensor_id_right(&eng.coev(a), &sec.source);
            let step2 = eng.whisker(&aw, &fm.dagger(), &aw);
            let step3 = eng.tensor_id_left(&TensorWord(vec![a, self.slots[fs.s]]), &eng.ev(a));
            let m = eng.chain(&[&step1, &step2, &step3]).expect("star chain");
            for (dst, x) in out.coeffs[sec.offset..sec.offset + sec.dim].iter_mut().zip(m.coeffs()) {
                *dst += x;
            }
        }
        out
    }

    /// `f · g` from the structure constants.
    pub fn product(&self, f: &TubeElement, g: &TubeElement) -> Result<TubeElement> {
        self.check(f)?;
        self.check(g)?;
        let mut out = self.zero();
        for (i, fi) in f.coeffs.iter().enumerate().filter(|(_, z)| **z != ZERO) {
            for (j, gj) in g.coeffs.iter().enumerate().filter(|(_, z)| **z != ZERO) {
                let z = fi * gj;
                for &(k, cijk) in &self.mult[i][j] {
                    out.coeffs[k] += z * cijk;
                }
            }
        }
        Ok(out)
    }

    /// `f*` from the star table; antilinear in `f`.
    pub fn star(&self, f: &TubeElement) -> TubeElement {
        let mut out = self.zero();
        for (i, fi) in f.coeffs.iter().enumerate().filter(|(_, z)| **z != ZERO) {
            for &(j, sij) in &self.star[i] {
                out.coeffs[j] += fi.conj() * sij;
            }
        }
        out
    }

    /// Nonzero `c_{ij}^k` as `(i, j, k, c)`.
    pub fn mult_table(&self) -> Vec<(usize, usize, usize, Complex64)> {
        let mut out = Vec::new();
        for (i, row) in self.mult.iter().enumerate() {
            for (j, entries) in row.iter().enumerate() {
                for &(k, z) in entries {
                    out.push((i, j, k, z));
                }
            }
        }
        out
    }

    /// Nonzero star coefficients as `(i, j, s)` with `star(e_i) = Σ_j s e_j`.
    pub fn star_table(&self) -> Vec<(usize, usize, Complex64)> {
        self.star
            .iter()
            .enumerate()
            .flat_map(|(i, row)| row.iter().map(move |&(j, z)| (i, j, z)))
            .collect()
    }

    /// Left multiplication by `f` as a matrix on coefficient vectors.
    pub fn left_matrix(&self, f: &TubeElement) -> crate::linalg::CMat {
        let n = self.dim();
        let mut m = crate::linalg::CMat::zeros(n, n);
        for (i, fi) in f.coeffs.iter().enumerate().filter(|(_, z)| **z != ZERO) {
            for j in 0..n {
                for &(k, cijk) in &self.mult[i][j] {
                    m[(k, j)] += fi * cijk;
                }
            }
        }
        m
    }

    /// Right multiplication by `f` as a matrix on coefficient vectors.
    pub fn right_matrix(&self, f: &TubeElement) -> crate::linalg::CMat {
        let n = self.dim();
        let mut m = crate::linalg::CMat::zeros(n, n);
        for (j, fj) in f.coeffs.iter().enumerate().filter(|(_, z)| **z != ZERO) {
            for i in 0..n {
                for &(k, cijk) in &self.mult[i][j] {
                    m[(k, i)] += fj * cijk;
                }
            }
        }
        m
    }

    /// Associativity, star, and unit laws on full basis sweeps.
    pub fn verify(&self, tol: f64) -> Vec<VerificationReport> {
        let n = self.dim();
        let sp = self.spec();
        let name = |i: usize| {
            let b = &self.basis[i];
            format!(
                "{}:{}->{}#{}",
                sp.label(b.a),
                sp.label(self.slots[b.source_slot]),
                sp.label(self.slots[b.target_slot]),
                b.index
            )
        };
        let e: Vec<_> = (0..n).map(|i| self.basis_element(i)).collect();
        let prods: Vec<Vec<TubeElement>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| self.product(&e[i], &e[j]).expect("same algebra"))
                    .collect()
            })
            .collect();
        let assoc: Vec<(Vec<String>, f64)> = (0..n)
            .into_par_iter()
            .flat_map_iter(|i| {
                let prods = &prods;
                let e = &e;
                (0..n).map(move |j| {
                    let mut worst: f64 = 0.0;
                    for k in 0..n {
                        let l = self.product(&prods[i][j], &e[k]).expect("same algebra");
                        let r = self.product(&e[i], &prods[j][k]).expect("same algebra");
                        worst = worst.max(l.max_diff(&r));
                    }
                    (vec![name(i), name(j)], worst)
                })
            })
            .collect();
        let mut invol = Vec::new();
        let mut anti = Vec::new();
        let mut unit = Vec::new();
        for i in 0..n {
            let s = self.star(&e[i]);
            invol.push((vec![name(i)], self.star(&s).max_diff(&e[i])));
            let l = self.product(&self.unit, &e[i]).expect("same algebra");
            let r = self.product(&e[i], &self.unit).expect("same algebra");
            unit.push((vec![name(i)], l.max_diff(&e[i]).max(r.max_diff(&e[i]))));
            for j in 0..n {
                let lhs = self.star(&prods[i][j]);
                let rhs = self.product(&self.star(&e[j]), &s).expect("same algebra");
                anti.push((vec![name(i), name(j)], lhs.max_diff(&rhs)));
            }
        }
        unit.push((vec!["star(1)".into()], self.star(&self.unit).max_diff(&self.unit)));
        vec![
            VerificationReport::from_cases("associativity", assoc, tol),
            VerificationReport::from_cases("star_involution", invol, tol),
            VerificationReport::from_cases("star_antimultiplicative", anti, tol),
            VerificationReport::from_cases("unit", unit, tol),
        ]
    }

    pub fn to_json_value(&self) -> TubeJson {
        let sp = self.spec();
        TubeJson {
            category: sp.name.clone(),
            lambda: self.lambda.to_map(sp),
            dim: self.dim(),
            basis: self
                .basis
                .iter()
                .map(|b| BasisJson {
                    a: sp.label(b.a).to_string(),
                    source: sp.label(self.slots[b.source_slot]).to_string(),
                    target: sp.label(self.slots[b.target_slot]).to_string(),
                    source_slot: b.source_slot,
                    target_slot: b.target_slot,
                    index: b.index,
                })
                .collect(),
            mult_table: self
                .mult_table()
                .into_iter()
                .map(|(i, j, k, z)| (i, j, k, z.re, z.im))
                .collect(),
            star_table: self
                .star_table()
                .into_iter()
                .map(|(i, j, z)| (i, j, z.re, z.im))
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        crate::json::to_string(&self.to_json_value())
    }
}

/// Serialized form of a tube algebra.
#[derive(Clone, Debug, Serialize)]
pub struct TubeJson {
    pub category: String,
    pub lambda: BTreeMap<String, u32>,
    pub dim: usize,
    pub basis: Vec<BasisJson>,
    pub mult_table: Vec<(usize, usize, usize, f64, f64)>,
    pub star_table: Vec<(usize, usize, f64, f64)>,
}

#[derive(Clone, Debug, Serialize)]
pub struct BasisJson {
    pub a: String,
    pub source: String,
    pub target: String,
    pub source_slot: usize,
    pub target_slot: usize,
    pub index: usize,
}

/// Builds and verifies `A(Λ)` for a category.
pub fn build_tube_algebra(spec: FusionCategorySpec, lambda: LambdaObject, tol: f64) -> Result<TubeAlgebra> {
    let engine = Arc::new(Engine::new(spec)?);
    TubeAlgebra::new(engine, lambda, tol)
}

/// `f · g`.
pub fn tube_product(alg: &TubeAlgebra, f: &TubeElement, g: &TubeElement) -> Result<TubeElement> {
    alg.product(f, g)
}

/// `f*`.
pub fn tube_star(alg: &TubeAlgebra, f: &TubeElement) -> TubeElement {
    alg.star(f)
}

#[cfg(test)]
mod tests;
