//! Canonical vertex pairs and the identity suites of the graphical calculus.
//!
//! A pair of colored nodes stands for `√(d_x d_y d_z) Σ_i e_i ⊗ e^i` where
//! `{e^i}` is dual to `{e_i}` under a planar closure. When both nodes sit on
//! the same side the closure is the trace and `e^i = e_i†/d_z`; for the
//! crossed configurations the closure is spelled out per diagram below and
//! the dual vector is obtained by dividing by the closed value.

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{Engine, Morphism, TensorWord};
use crate::category::{verify_dims, verify_pentagon, verify_unitarity, Label};
use crate::error::Result;
use crate::linalg::{c, max_diff, CMat};
use crate::report::VerificationReport;

/// Dual bases of `Hom(z, x⊗y)` and `Hom(x⊗y, z)` under the trace pairing.
#[derive(Clone, Debug)]
pub struct CanonicalPair {
    pub x: Label,
    pub y: Label,
    pub z: Label,
    /// `e_i : z → x⊗y`.
    pub lower: Vec<Morphism>,
    /// `e^i : x⊗y → z`.
    pub upper: Vec<Morphism>,
    /// `√(d_x d_y d_z)`.
    pub scalar: f64,
}

impl CanonicalPair {
    /// `√(d_x d_y d_z) Σ_i e_i ∘ e^i ∈ End(x⊗y)`.
    pub fn projector(&self, engine: &Engine) -> Morphism {
        let w = TensorWord(vec![self.x, self.y]);
        let mut acc = engine.zero(&w, &w);
        for (lo, up) in self.lower.iter().zip(&self.upper) {
            let p = engine.compose(lo, up).expect("pair composes");
            acc.axpy(c(self.scalar), &p).expect("same space");
        }
        acc
    }
}

/// Trace-normalized dual bases with `e_i = V^{xy}_z` and `e^i = V†/d_z`.
pub fn canonical_pair(engine: &Engine, x: Label, y: Label, z: Label) -> Result<CanonicalPair> {
    let v = engine.vertex(x, y, z)?;
    let dz = engine.d(z);
    Ok(CanonicalPair {
        x,
        y,
        z,
        upper: vec![v.dagger().scale(c(1.0 / dz))],
        lower: vec![v],
        scalar: (engine.d(x) * engine.d(y) * dz).sqrt(),
    })
}

fn closed(engine: &Engine, parts: &[&Morphism]) -> Complex64 {
    let m = engine.chain(parts).expect("closed diagram composes");
    m.scalar(engine.spec().ring.unit()).expect("closed diagram is a scalar")
}

fn fuse(engine: &Engine, a: Label, b: Label, z: Label) -> Morphism {
    engine.vertex(a, b, z).expect("admissible vertex").dagger()
}

fn split(engine: &Engine, z: Label, a: Label, b: Label) -> Morphism {
    engine.vertex(a, b, z).expect("admissible vertex")
}

fn w(v: &[Label]) -> TensorWord {
    TensorWord(v.to_vec())
}

/// Outer product of coefficient vectors, the coordinates of `f ⊗ g` in
/// `Hom ⊗ Hom`.
fn kron_coeffs(f: &Morphism, g: &Morphism) -> CMat {
    let (a, b) = (f.coeffs(), g.coeffs());
    DMatrix::from_fn(a.len(), b.len(), |i, j| a[i] * b[j])
}

fn n(engine: &Engine, a: Label, b: Label, cc: Label) -> bool {
    engine.spec().ring.n(a, b, cc) > 0
}

fn labels(engine: &Engine, xs: &[Label]) -> Vec<String> {
    engine.spec().labels_of(xs)
}

fn triples(engine: &Engine) -> Vec<[Label; 3]> {
    let r = engine.spec().rank();
    let mut out = Vec::new();
    for x in 0..r {
        for y in 0..r {
            for z in 0..r {
                if n(engine, x, y, z) {
                    out.push([x, y, z]);
                }
            }
        }
    }
    out
}

/// `tr(e^j ∘ e_i) = δ_ij` and `e^j ∘ e_i = d_z⁻¹ δ_ij id_z`.
pub fn pair_residual(engine: &Engine, p: &CanonicalPair) -> f64 {
    let z = w(&[p.z]);
    let mut res: f64 = 0.0;
    for (i, lo) in p.lower.iter().enumerate() {
        for (j, up) in p.upper.iter().enumerate() {
            let m = engine.compose(up, lo).expect("pair composes");
            let delta = if i == j { 1.0 } else { 0.0 };
            let t = engine.trace(&m).expect("endomorphism");
            res = res.max((t - c(delta)).norm());
            let want = engine.id(&z).scale(c(delta / engine.d(p.z)));
            res = res.max(m.max_diff(&want));
        }
    }
    res
}

/// Bigon 1: `√(d_x d_y d_z) Σ_i e^i ∘ e_i = √(d_x d_y / d_z) N_{xy}^z id_z`.
pub fn check_bigon1(engine: &Engine, tol: f64) -> VerificationReport {
    let cases = triples(engine)
        .par_iter()
        .map(|&[x, y, z]| {
            let p = canonical_pair(engine, x, y, z).expect("admissible");
            let zw = w(&[z]);
            let mut lhs = engine.zero(&zw, &zw);
            for (lo, up) in p.lower.iter().zip(&p.upper) {
                lhs.axpy(c(p.scalar), &engine.compose(up, lo).unwrap()).unwrap();
            }
            let coef = (engine.d(x) * engine.d(y) / engine.d(z)).sqrt() * p.lower.len() as f64;
            let rhs = engine.id(&zw).scale(c(coef));
            let res = lhs.max_diff(&rhs).max(pair_residual(engine, &p));
            (labels(engine, &[x, y, z]), res)
        })
        .collect();
    VerificationReport::from_cases("bigon1", cases, tol)
}

/// Bigon 2: a bigon between a blue and an orange pair collapses to
/// `√(d_x d_y / d_z) id_z ⊗ (orange pair)`. The blue pair is taken in a
/// rephased basis so the two colors are independent.
pub fn check_bigon2(engine: &Engine, tol: f64) -> VerificationReport {
    let cases = triples(engine)
        .par_iter()
        .map(|&[x, y, z]| {
            let orange = canonical_pair(engine, x, y, z).expect("admissible");
            let phase = Complex64::from_polar(1.0, 0.7 + x as f64 + 2.0 * y as f64 + 3.0 * z as f64);
            let blue = CanonicalPair {
                lower: orange.lower.iter().map(|m| m.scale(phase)).collect(),
                upper: orange.upper.iter().map(|m| m.scale(phase.conj())).collect(),
                ..orange.clone()
            };
            let mut lhs: Vec<Complex64> = Vec::new();
            for (lo_o, up_o) in orange.lower.iter().zip(&orange.upper) {
                for (lo_b, up_b) in blue.lower.iter().zip(&blue.upper) {
                    let bigon = engine.compose(up_b, lo_o).unwrap();
                    let t = outer(&outer(&bigon.coeffs(), &lo_b.coeffs()), &up_o.coeffs());
                    accumulate(&mut lhs, &t, c(orange.scalar * blue.scalar));
                }
            }
            let mut rhs: Vec<Complex64> = Vec::new();
            let id = engine.id(&w(&[z]));
            let coef = (engine.d(x) * engine.d(y) / engine.d(z)).sqrt() * orange.scalar;
            for (lo, up) in orange.lower.iter().zip(&orange.upper) {
                let t = outer(&outer(&id.coeffs(), &lo.coeffs()), &up.coeffs());
                accumulate(&mut rhs, &t, c(coef));
            }
            let res = lhs.iter().zip(&rhs).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max);
            (labels(engine, &[x, y, z]), res)
        })
        .collect();
    VerificationReport::from_cases("bigon2", cases, tol)
}

fn outer(a: &[Complex64], b: &[Complex64]) -> Vec<Complex64> {
    a.iter().flat_map(|x| b.iter().map(move |y| x * y)).collect()
}

fn accumulate(acc: &mut Vec<Complex64>, t: &[Complex64], s: Complex64) {
    if acc.is_empty() {
        acc.resize(t.len(), c(0.0));
    }
    for (a, b) in acc.iter_mut().zip(t) {
        *a += s * b;
    }
}

/// Fusion: `Σ_z √d_z √(d_x d_y d_z) Σ_i e_i ∘ e^i = √(d_x d_y) id_{x⊗y}`.
pub fn check_fusion(engine: &Engine, tol: f64) -> VerificationReport {
    let r = engine.spec().rank();
    let pairs: Vec<(Label, Label)> = (0..r).flat_map(|x| (0..r).map(move |y| (x, y))).collect();
    let cases = pairs
        .par_iter()
        .map(|&(x, y)| {
            let xy = w(&[x, y]);
            let mut lhs = engine.zero(&xy, &xy);
            for z in 0..r {
                if !n(engine, x, y, z) {
                    continue;
                }
                let p = canonical_pair(engine, x, y, z).unwrap();
                lhs.axpy(c(engine.d(z).sqrt()), &p.projector(engine)).unwrap();
            }
            let rhs = engine.id(&xy).scale(c((engine.d(x) * engine.d(y)).sqrt()));
            (labels(engine, &[x, y]), lhs.max_diff(&rhs))
        })
        .collect();
    VerificationReport::from_cases("fusion", cases, tol)
}

/// `⟨A, A'⟩` for `A : x⊗w → v`, `A' : w̄⊗x̄ → v̄`.
fn pairing_fuse_fuse(engine: &Engine, x: Label, wl: Label, v: Label, a: &Morphism, ap: &Morphism) -> Complex64 {
    let xb = engine.dual(x);
    let cx = engine.coev(x);
    let mid = engine.whisker(&w(&[x]), &engine.coev(wl), &w(&[xb]));
    let aa = engine.tensor(a, ap);
    let cv = engine.coev(v).dagger();
    closed(engine, &[&cx, &mid, &aa, &cv])
}

/// `⟨B, B'⟩` for `B : v → y⊗z`, `B' : v̄ → z̄⊗ȳ`.
fn pairing_split_split(engine: &Engine, v: Label, y: Label, z: Label, b: &Morphism, bp: &Morphism) -> Complex64 {
    let yb = engine.dual(y);
    let cv = engine.coev(v);
    let bb = engine.tensor(b, bp);
    let mid = engine.whisker(&w(&[y]), &engine.coev(z).dagger(), &w(&[yb]));
    let cy = engine.coev(y).dagger();
    closed(engine, &[&cv, &bb, &mid, &cy])
}

/// Both sides of I=H for `x⊗w → y⊗z` as elements of
/// `Hom(x⊗w, y⊗z) ⊗ Hom(w̄⊗x̄, z̄⊗ȳ)`.
pub fn ih_sides(engine: &Engine, x: Label, wl: Label, y: Label, z: Label) -> (CMat, CMat) {
    let r = engine.spec().rank();
    let d = |a: Label| engine.d(a);
    let bar = |a: Label| engine.dual(a);
    let (xb, wb, yb, zb) = (bar(x), bar(wl), bar(y), bar(z));
    let left = engine.hom_space(&w(&[x, wl]), &w(&[y, z])).dim;
    let right = engine.hom_space(&w(&[wb, xb]), &w(&[zb, yb])).dim;
    let mut lhs = CMat::zeros(left, right);
    let mut rhs = CMat::zeros(left, right);

    for v in 0..r {
        if !(n(engine, x, wl, v) && n(engine, y, z, v)) {
            continue;
        }
        let vb = bar(v);
        let a = fuse(engine, x, wl, v);
        let ap = fuse(engine, wb, xb, vb);
        let b = split(engine, v, y, z);
        let bp = split(engine, vb, zb, yb);
        let ca = (d(x) * d(wl) * d(v)).sqrt() / pairing_fuse_fuse(engine, x, wl, v, &a, &ap);
        let cb = (d(y) * d(z) * d(v)).sqrt() / pairing_split_split(engine, v, y, z, &b, &bp);
        let f1 = engine.compose(&b, &a).unwrap();
        let f2 = engine.compose(&bp, &ap).unwrap();
        lhs += kron_coeffs(&f1, &f2) * (ca * cb);
    }

    for u in 0..r {
        if !(n(engine, y, u, x) && n(engine, u, wl, z)) {
            continue;
        }
        let ub = bar(u);
        // left strand: x → y ⊗ u, horizontal u fuses into w → z
        let bl = split(engine, x, y, u);
        let o = fuse(engine, u, wl, z);
        let op = split(engine, wb, zb, u);
        let blp = fuse(engine, u, xb, yb);
        let h1 = engine
            .compose(
                &engine.tensor_id_left(&w(&[y]), &o),
                &engine.tensor_id_right(&bl, &w(&[wl])),
            )
            .unwrap();
        let h2 = engine
            .compose(
                &engine.tensor_id_left(&w(&[zb]), &blp),
                &engine.tensor_id_right(&op, &w(&[xb])),
            )
            .unwrap();
        // orange closure of (o, o')
        let start = engine.tensor(&engine.ev(u).dagger(), &engine.coev(wl));
        let oo = engine.whisker(&w(&[ub]), &engine.tensor(&o, &op), &TensorWord::empty());
        let cap = engine.whisker(&w(&[ub]), &engine.coev(z).dagger(), &w(&[u]));
        let po = closed(engine, &[&start, &oo, &cap, &engine.ev(u)]);
        // blue closure of (bl, bl')
        let cx = engine.coev(x);
        let s1 = engine.tensor_id_right(&bl, &w(&[xb]));
        let s2 = engine.tensor_id_left(&w(&[y]), &blp);
        let pb = closed(engine, &[&cx, &s1, &s2, &engine.coev(y).dagger()]);
        let co = (d(u) * d(wl) * d(z)).sqrt() / po;
        let cbl = (d(x) * d(y) * d(u)).sqrt() / pb;
        rhs += kron_coeffs(&h1, &h2) * (co * cbl);
    }
    (lhs, rhs)
}

/// I=H on every `(x, w, y, z)`.
pub fn check_ih(engine: &Engine, tol: f64) -> VerificationReport {
    let r = engine.spec().rank();
    let quads: Vec<[Label; 4]> = (0..r.pow(4))
        .map(|i| [i / (r * r * r), (i / (r * r)) % r, (i / r) % r, i % r])
        .collect();
    let cases = quads
        .par_iter()
        .map(|&[x, wl, y, z]| {
            let (lhs, rhs) = ih_sides(engine, x, wl, y, z);
            (labels(engine, &[x, wl, y, z]), max_diff(&lhs, &rhs))
        })
        .collect();
    VerificationReport::from_cases("ih", cases, tol)
}

/// The three evaluations of the double-bigon sum for one `(x, y)`.
#[derive(Clone, Copy, Debug)]
pub struct GlobalDimRoutes {
    /// Direct contraction of every double bigon, as the coefficient of
    /// `id_x ⊗ id_x̄` (zero when `x ≠ y`).
    pub direct: Complex64,
    /// `Σ_{a,b} d_a d_b d_x⁻¹ N_{ab}^x` from the two Bigon relations.
    pub bigon: f64,
    /// `Σ_a (loop a)(loop ā)` after I=H, where only `b = 1` survives.
    pub ih: Complex64,
    /// Largest entry of a `b ≠ 1` term that I=H route discards; must vanish.
    pub discarded: f64,
}

pub fn global_dim_routes(engine: &Engine, x: Label, y: Label) -> GlobalDimRoutes {
    let r = engine.spec().rank();
    let d = |a: Label| engine.d(a);
    let bar = |a: Label| engine.dual(a);
    let unit = engine.spec().ring.unit();
    let (xb, yb) = (bar(x), bar(y));
    let mut direct = c(0.0);
    let mut bigon = 0.0;
    if x == y {
        for a in 0..r {
            for b in 0..r {
                if !(n(engine, a, b, x) && n(engine, a, b, y)) {
                    continue;
                }
                let (ab, bb) = (bar(a), bar(b));
                let sa = split(engine, x, a, b);
                let sap = split(engine, xb, bb, ab);
                let fb = fuse(engine, a, b, y);
                let fbp = fuse(engine, bb, ab, yb);
                // orange closure of (sa, sa')
                let cx = engine.coev(x);
                let t = engine.tensor(&sa, &sap);
                let cap_b = engine.whisker(&w(&[a]), &engine.coev(b).dagger(), &w(&[ab]));
                let po = closed(engine, &[&cx, &t, &cap_b, &engine.coev(a).dagger()]);
                // blue closure of (fb, fb')
                let ca = engine.coev(a);
                let cup_b = engine.whisker(&w(&[a]), &engine.coev(b), &w(&[ab]));
                let t2 = engine.tensor(&fb, &fbp);
                let pb = closed(engine, &[&ca, &cup_b, &t2, &engine.coev(y).dagger()]);
                let coef = (d(x) * d(a) * d(b)).sqrt() / po * (d(y) * d(a) * d(b)).sqrt() / pb;
                let l = engine.compose(&fb, &sa).unwrap();
                let rr = engine.compose(&fbp, &sap).unwrap();
                direct += coef * l.block(x)[(0, 0)] * rr.block(xb)[(0, 0)];
                bigon += d(a) * d(b) / d(x);
            }
        }
    }
    let mut ih = c(0.0);
    let mut discarded: f64 = 0.0;
    if x == y {
        for a in 0..r {
            let la = engine.right_trace(&engine.id(&w(&[a]))).unwrap();
            let lab = engine.right_trace(&engine.id(&w(&[bar(a)]))).unwrap();
            ih += la * lab;
        }
        for b in 0..r {
            if b != unit {
                discarded = discarded.max(engine.hom_space(&w(&[b]), &TensorWord::empty()).dim as f64);
            }
        }
    }
    GlobalDimRoutes {
        direct,
        bigon,
        ih,
        discarded,
    }
}

/// `Σ_{a,b}` double bigon `= dim(C) δ_{xy}`, with all three routes required to agree.
pub fn check_global_dim(engine: &Engine, tol: f64) -> VerificationReport {
    let r = engine.spec().rank();
    let dim = engine.spec().global_dim();
    let pairs: Vec<(Label, Label)> = (0..r).flat_map(|x| (0..r).map(move |y| (x, y))).collect();
    let cases = pairs
        .par_iter()
        .map(|&(x, y)| {
            let g = global_dim_routes(engine, x, y);
            let want = if x == y { dim } else { 0.0 };
            let res = (g.direct - c(want))
                .norm()
                .max((g.bigon - want).abs())
                .max((g.ih - c(want)).norm())
                .max(g.discarded);
            (labels(engine, &[x, y]), res / dim.max(1.0))
        })
        .collect();
    VerificationReport::from_cases("globaldim", cases, tol)
}

/// Zig-zag identities and `coev†coev = ev ev† = d_x` for every simple.
pub fn check_zigzag(engine: &Engine, tol: f64) -> VerificationReport {
    let r = engine.spec().rank();
    let cases = (0..r)
        .map(|x| {
            let xb = engine.dual(x);
            let (ev, coev, evd, coevd) = engine.ev_coev(x);
            let z1 = engine
                .chain(&[
                    &engine.tensor_id_right(&coev, &w(&[x])),
                    &engine.tensor_id_left(&w(&[x]), &ev),
                ])
                .unwrap();
            let z2 = engine
                .chain(&[
                    &engine.tensor_id_left(&w(&[xb]), &coev),
                    &engine.tensor_id_right(&ev, &w(&[xb])),
                ])
                .unwrap();
            let unit = engine.spec().ring.unit();
            let dc = engine.compose(&coevd, &coev).unwrap().scalar(unit).unwrap();
            let de = engine.compose(&ev, &evd).unwrap().scalar(unit).unwrap();
            let dx = c(engine.d(x));
            let res = z1
                .max_diff(&engine.id(&w(&[x])))
                .max(z2.max_diff(&engine.id(&w(&[xb]))))
                .max((dc - dx).norm())
                .max((de - dx).norm())
                .max((engine.trace(&engine.id(&w(&[x]))).unwrap() - dx).norm());
            (labels(engine, &[x]), res)
        })
        .collect();
    VerificationReport::from_cases("zigzag", cases, tol)
}

fn short_words(engine: &Engine) -> Vec<TensorWord> {
    let r = engine.spec().rank();
    let mut out: Vec<TensorWord> = (0..r).map(|x| w(&[x])).collect();
    for x in 0..r {
        for y in 0..r {
            out.push(w(&[x, y]));
        }
    }
    out
}

/// Left and right closures of random endomorphisms agree with each other
/// and with the block trace.
pub fn check_spherical(engine: &Engine, trials: usize, seed: u64, tol: f64) -> VerificationReport {
    let words = short_words(engine);
    let cases = words
        .par_iter()
        .enumerate()
        .map(|(k, word)| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(k as u64));
            let mut res: f64 = 0.0;
            for t in 0..=trials {
                let f = if t == 0 {
                    engine.id(word)
                } else {
                    engine.random(word, word, &mut rng)
                };
                let l = engine.left_trace(&f).unwrap();
                let rr = engine.right_trace(&f).unwrap();
                let b = engine.trace(&f).unwrap();
                let scale = 1.0 + b.norm();
                res = res.max((l - rr).norm() / scale).max((rr - b).norm() / scale);
            }
            (word.names(engine.spec()), res)
        })
        .collect();
    VerificationReport::from_cases("spherical", cases, tol)
}

/// Conjugation: `conj(id_x) = id_x̄`, `conj(conj f) = (φ_Y/φ_X) f`, antilinearity,
/// and `conj(ev_x) = λ ev_x` with `|λ| = 1`.
pub fn check_conjugation(engine: &Engine, seed: u64, tol: f64) -> VerificationReport {
    let words = short_words(engine);
    let r = engine.spec().rank();
    let mut cases: Vec<(Vec<String>, f64)> = words
        .par_iter()
        .enumerate()
        .map(|(k, word)| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(1000 + k as u64));
            let target = if word.len() == 1 {
                word.clone()
            } else {
                let mut t = word.0.clone();
                t.reverse();
                w(&t)
            };
            let f = engine.random(word, &target, &mut rng);
            let ff = engine.conjugate(&engine.conjugate(&f));
            let phase = engine.pivotal_phase(&target) / engine.pivotal_phase(word);
            let mut res = ff.max_diff(&f.scale(phase));
            let idb = engine.conjugate(&engine.id(word));
            res = res.max(idb.max_diff(&engine.id(&engine.dual_word(word))));
            let s = Complex64::new(0.3, -1.1);
            let lin = engine
                .conjugate(&f.scale(s))
                .max_diff(&engine.conjugate(&f).scale(s.conj()));
            res = res.max(lin);
            (word.names(engine.spec()), res)
        })
        .collect();
    for x in 0..r {
        let ev = engine.ev(x);
        let ce = engine.conjugate(&ev);
        let unit = engine.spec().ring.unit();
        let lam = ce.block(unit)[(0, 0)] / ev.block(unit)[(0, 0)];
        let res = ce.max_diff(&ev.scale(lam)).max((lam.norm() - 1.0).abs());
        cases.push((vec!["ev".to_string(), engine.spec().label(x).to_string()], res));
    }
    VerificationReport::from_cases("conjugation", cases, tol)
}

/// Every suite in a fixed order: data checks first, then the diagram identities.
pub fn run_all_suites(engine: &Engine, tol: f64, seed: u64) -> Vec<VerificationReport> {
    let spec = engine.spec();
    vec![
        verify_pentagon(spec, tol),
        verify_unitarity(spec, tol),
        verify_dims(spec, tol),
        check_zigzag(engine, tol),
        check_bigon1(engine, tol),
        check_bigon2(engine, tol),
        check_fusion(engine, tol),
        check_ih(engine, tol),
        check_global_dim(engine, tol),
        check_spherical(engine, 3, seed, tol),
        check_conjugation(engine, seed, tol),
    ]
}
