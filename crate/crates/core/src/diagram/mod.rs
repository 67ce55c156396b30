//! Morphisms between tensor words in a left-comb fusion-tree basis.
//!
//! A tree on the word `x_1 … x_n` with charge `c` is a sequence of simple
//! labels `p_1, …, p_n = c` with `p_k ∈ p_{k-1} ⊗ x_k` and `p_0 = 1`. It
//! stands for the isometry
//!
//! ```text
//! T_p = (…((V^{p_1 x_2}_{p_2} ⊗ id) V^{p_2 x_3}_{p_3}) ⊗ id …) : c → x_1 ⊗ … ⊗ x_n
//! ```
//!
//! so that `{T_t S_s†}` over trees `t` of the target and `s` of the source
//! with the same charge is a basis of `Hom(X, Y)`. A [`Morphism`] stores one
//! coefficient matrix per charge; composition is block multiplication and the
//! dagger is the blockwise adjoint. Tensoring with an identity on the right
//! keeps the comb structure; tensoring on the left goes through a cached
//! change of basis assembled from F-moves.

mod relations;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, RwLock};

use num_complex::Complex64;
use rand::Rng;

use crate::category::{FusionCategorySpec, Label};
use crate::error::{Error, Result};
use crate::linalg::{c, max_diff, random_matrix, CMat, ONE, ZERO};

pub use relations::{
    canonical_pair, check_bigon1, check_bigon2, check_conjugation, check_fusion, check_global_dim, check_ih,
    check_spherical, check_zigzag, global_dim_routes, run_all_suites, CanonicalPair, GlobalDimRoutes,
};

/// An ordered list of simple labels; the empty word is the tensor unit.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TensorWord(pub Vec<Label>);

impl TensorWord {
    pub fn new(letters: Vec<Label>) -> Self {
        TensorWord(letters)
    }

    pub fn empty() -> Self {
        TensorWord(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Label] {
        &self.0
    }

    pub fn concat(&self, other: &TensorWord) -> TensorWord {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        TensorWord(v)
    }

    pub fn names(&self, spec: &FusionCategorySpec) -> Vec<String> {
        spec.labels_of(&self.0)
    }
}

impl From<Vec<Label>> for TensorWord {
    fn from(v: Vec<Label>) -> Self {
        TensorWord(v)
    }
}

impl From<&[Label]> for TensorWord {
    fn from(v: &[Label]) -> Self {
        TensorWord(v.to_vec())
    }
}

/// All left-comb trees of one word, grouped by charge.
#[derive(Debug)]
pub struct Trees {
    by_charge: Vec<Vec<Vec<Label>>>,
    index: Vec<HashMap<Vec<Label>, usize>>,
}

impl Trees {
    fn build(spec: &FusionCategorySpec, word: &[Label]) -> Self {
        let r = spec.rank();
        let unit = spec.ring.unit();
        let mut seqs: Vec<Vec<Label>> = vec![vec![]];
        for &x in word {
            let mut next = Vec::new();
            for s in &seqs {
                let p = s.last().copied().unwrap_or(unit);
                for z in spec.ring.fuse(p, x) {
                    let mut t = s.clone();
                    t.push(z);
                    next.push(t);
                }
            }
            seqs = next;
        }
        let mut by_charge = vec![Vec::new(); r];
        for s in seqs {
            let ch = s.last().copied().unwrap_or(unit);
            by_charge[ch].push(s);
        }
        let index = by_charge
            .iter()
            .map(|v| v.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect())
            .collect();
        Trees { by_charge, index }
    }

    pub fn count(&self, charge: Label) -> usize {
        self.by_charge[charge].len()
    }

    pub fn of_charge(&self, charge: Label) -> &[Vec<Label>] {
        &self.by_charge[charge]
    }

    pub fn position(&self, charge: Label, seq: &[Label]) -> Option<usize> {
        self.index[charge].get(seq).copied()
    }
}

/// Shape of `Hom(source, target)` in the tree basis.
#[derive(Clone, Debug, PartialEq)]
pub struct HomSpace {
    pub source: TensorWord,
    pub target: TensorWord,
    /// `(charge, #target trees, #source trees)` for every charge with a nonzero block.
    pub blocks: Vec<(Label, usize, usize)>,
    pub dim: usize,
}

impl HomSpace {
    /// Basis elements as `(charge, target tree, source tree)`, charge-major,
    /// then target tree, then source tree.
    pub fn basis(&self, engine: &Engine) -> Vec<(Label, Vec<Label>, Vec<Label>)> {
        let ts = engine.trees(&self.target);
        let ss = engine.trees(&self.source);
        let mut out = Vec::with_capacity(self.dim);
        for &(ch, _, _) in &self.blocks {
            for t in ts.of_charge(ch) {
                for s in ss.of_charge(ch) {
                    out.push((ch, t.clone(), s.clone()));
                }
            }
        }
        out
    }
}

/// A morphism `source → target`, one coefficient block per charge.
///
/// Block `c` has one row per tree of `target` with charge `c` and one column
/// per tree of `source` with charge `c`.
#[derive(Clone, PartialEq)]
pub struct Morphism {
    source: TensorWord,
    target: TensorWord,
    blocks: Vec<CMat>,
}

impl fmt::Debug for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Morphism")
            .field("source", &self.source.0)
            .field("target", &self.target.0)
            .field("coeffs", &self.coeffs())
            .finish()
    }
}

impl Morphism {
    pub(crate) fn from_blocks(source: TensorWord, target: TensorWord, blocks: Vec<CMat>) -> Morphism {
        Morphism { source, target, blocks }
    }

    pub fn source(&self) -> &TensorWord {
        &self.source
    }

    pub fn target(&self) -> &TensorWord {
        &self.target
    }

    pub fn block(&self, charge: Label) -> &CMat {
        &self.blocks[charge]
    }

    pub fn block_mut(&mut self, charge: Label) -> &mut CMat {
        &mut self.blocks[charge]
    }

    pub fn dim(&self) -> usize {
        self.blocks.iter().map(|b| b.len()).sum()
    }

    /// Coefficients in [`HomSpace::basis`] order.
    pub fn coeffs(&self) -> Vec<Complex64> {
        let mut out = Vec::with_capacity(self.dim());
        for b in &self.blocks {
            for i in 0..b.nrows() {
                for j in 0..b.ncols() {
                    out.push(b[(i, j)]);
                }
            }
        }
        out
    }

    /// Overwrites the coefficients from a vector in [`HomSpace::basis`] order.
    pub fn set_coeffs(&mut self, v: &[Complex64]) -> Result<()> {
        if v.len() != self.dim() {
            return Err(Error::Shape(format!(
                "expected {} coefficients, got {}",
                self.dim(),
                v.len()
            )));
        }
        let mut k = 0;
        for b in &mut self.blocks {
            for i in 0..b.nrows() {
                for j in 0..b.ncols() {
                    b[(i, j)] = v[k];
                    k += 1;
                }
            }
        }
        Ok(())
    }

    pub fn dagger(&self) -> Morphism {
        Morphism {
            source: self.target.clone(),
            target: self.source.clone(),
            blocks: self.blocks.iter().map(|b| b.adjoint()).collect(),
        }
    }

    pub fn scale(&self, s: Complex64) -> Morphism {
        Morphism {
            source: self.source.clone(),
            target: self.target.clone(),
            blocks: self.blocks.iter().map(|b| b * s).collect(),
        }
    }

    fn same_space(&self, other: &Morphism) -> Result<()> {
        if self.source != other.source || self.target != other.target {
            return Err(Error::Shape(format!(
                "{:?}→{:?} vs {:?}→{:?}",
                self.source.0, self.target.0, other.source.0, other.target.0
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Morphism) -> Result<Morphism> {
        self.same_space(other)?;
        Ok(Morphism {
            source: self.source.clone(),
            target: self.target.clone(),
            blocks: self.blocks.iter().zip(&other.blocks).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &Morphism) -> Result<Morphism> {
        self.add(&other.scale(c(-1.0)))
    }

    /// `self += s · other`.
    pub fn axpy(&mut self, s: Complex64, other: &Morphism) -> Result<()> {
        self.same_space(other)?;
        for (a, b) in self.blocks.iter_mut().zip(&other.blocks) {
            *a += b * s;
        }
        Ok(())
    }

    /// Max-norm distance; infinite if the spaces differ.
    pub fn max_diff(&self, other: &Morphism) -> f64 {
        if self.same_space(other).is_err() {
            return f64::INFINITY;
        }
        self.blocks
            .iter()
            .zip(&other.blocks)
            .map(|(a, b)| max_diff(a, b))
            .fold(0.0, f64::max)
    }

    pub fn max_abs(&self) -> f64 {
        self.blocks
            .iter()
            .flat_map(|b| b.iter())
            .map(|z| z.norm())
            .fold(0.0, f64::max)
    }

    pub fn is_finite(&self) -> bool {
        self.blocks
            .iter()
            .flat_map(|b| b.iter())
            .all(|z| z.re.is_finite() && z.im.is_finite())
    }

    /// The value of an endomorphism of the empty word.
    pub fn scalar(&self, unit: Label) -> Option<Complex64> {
        if !self.source.is_empty() || !self.target.is_empty() {
            return None;
        }
        Some(self.blocks[unit][(0, 0)])
    }
}

type SplitKey = (Label, usize, Label, usize);

/// Change of basis from split trees `(T_W ⊗ T_X) V^{pq}_c` to left combs on `W ⊗ X`.
struct SplitBasis {
    /// Per charge: the split keys `(p, tree of W, q, tree of X)` in column order.
    keys: Vec<Vec<SplitKey>>,
    /// Per charge: `#combs × #splits`.
    mats: Vec<CMat>,
}

/// Expansions of a comb after re-bracketing, keyed by `(sw, sx, charge)`.
type RecoupleMemo = HashMap<(Vec<Label>, Vec<Label>, Label), Vec<(Vec<Label>, Complex64)>>;

type SplitCache = RwLock<HashMap<(Vec<Label>, Vec<Label>), Arc<SplitBasis>>>;

/// Diagram evaluator over a fixed multiplicity-free category.
pub struct Engine {
    spec: Arc<FusionCategorySpec>,
    trees: RwLock<HashMap<Vec<Label>, Arc<Trees>>>,
    splits: SplitCache,
}

impl fmt::Debug for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Engine").field("category", &self.spec.name).finish()
    }
}

impl Engine {
    pub fn new(spec: FusionCategorySpec) -> Result<Self> {
        Self::from_arc(Arc::new(spec))
    }

    pub fn from_arc(spec: Arc<FusionCategorySpec>) -> Result<Self> {
        if !spec.ring.is_multiplicity_free() {
            return Err(Error::Unsupported(format!(
                "{} has fusion multiplicities; the diagram engine is multiplicity-free",
                spec.name
            )));
        }
        Ok(Engine {
            spec,
            trees: RwLock::new(HashMap::new()),
            splits: RwLock::new(HashMap::new()),
        })
    }

    pub fn spec(&self) -> &FusionCategorySpec {
        &self.spec
    }

    pub fn spec_arc(&self) -> Arc<FusionCategorySpec> {
        self.spec.clone()
    }

    pub fn rank(&self) -> usize {
        self.spec.rank()
    }

    pub fn unit(&self) -> Label {
        self.spec.ring.unit()
    }

    pub fn dual(&self, x: Label) -> Label {
        self.spec.ring.dual(x)
    }

    pub fn d(&self, x: Label) -> f64 {
        self.spec.d(x)
    }

    #[inline]
    fn f(&self, a: Label, b: Label, cc: Label, d: Label, e: Label, f: Label) -> Complex64 {
        self.spec.fsymbols.f(a, b, cc, d, e, f)
    }

    /// Parses label names into a word.
    pub fn word(&self, names: &[&str]) -> Result<TensorWord> {
        names
            .iter()
            .map(|n| {
                self.spec
                    .ring
                    .index(n)
                    .ok_or_else(|| Error::Schema(format!("unknown label {n:?}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(TensorWord)
    }

    /// `X̄`: letters reversed and dualized.
    pub fn dual_word(&self, w: &TensorWord) -> TensorWord {
        TensorWord(w.0.iter().rev().map(|&x| self.dual(x)).collect())
    }

    pub fn trees(&self, w: &TensorWord) -> Arc<Trees> {
        if let Some(t) = self.trees.read().unwrap().get(&w.0) {
            return t.clone();
        }
        let t = Arc::new(Trees::build(&self.spec, &w.0));
        self.trees.write().unwrap().entry(w.0.clone()).or_insert(t).clone()
    }

    pub fn hom_space(&self, source: &TensorWord, target: &TensorWord) -> HomSpace {
        let (s, t) = (self.trees(source), self.trees(target));
        let blocks: Vec<_> = (0..self.rank())
            .map(|ch| (ch, t.count(ch), s.count(ch)))
            .filter(|&(_, a, b)| a * b > 0)
            .collect();
        let dim = blocks.iter().map(|&(_, a, b)| a * b).sum();
        HomSpace {
            source: source.clone(),
            target: target.clone(),
            blocks,
            dim,
        }
    }

    pub fn zero(&self, source: &TensorWord, target: &TensorWord) -> Morphism {
        let (s, t) = (self.trees(source), self.trees(target));
        Morphism {
            source: source.clone(),
            target: target.clone(),
            blocks: (0..self.rank())
                .map(|ch| CMat::zeros(t.count(ch), s.count(ch)))
                .collect(),
        }
    }

    pub fn id(&self, w: &TensorWord) -> Morphism {
        let t = self.trees(w);
        Morphism {
            source: w.clone(),
            target: w.clone(),
            blocks: (0..self.rank())
                .map(|ch| CMat::identity(t.count(ch), t.count(ch)))
                .collect(),
        }
    }

    /// A scalar as an endomorphism of the empty word.
    pub fn scalar(&self, s: Complex64) -> Morphism {
        self.id(&TensorWord::empty()).scale(s)
    }

    /// Complex Gaussian coefficients drawn in basis order.
    pub fn random<R: Rng + ?Sized>(&self, source: &TensorWord, target: &TensorWord, rng: &mut R) -> Morphism {
        let mut m = self.zero(source, target);
        for b in &mut m.blocks {
            if !b.is_empty() {
                *b = random_matrix(rng, b.nrows(), b.ncols());
            }
        }
        m
    }

    /// `g ∘ f`.
    pub fn compose(&self, g: &Morphism, f: &Morphism) -> Result<Morphism> {
        if f.target != g.source {
            return Err(Error::Shape(format!(
                "cannot compose {:?}→{:?} after {:?}→{:?}",
                g.source.0, g.target.0, f.source.0, f.target.0
            )));
        }
        Ok(Morphism {
            source: f.source.clone(),
            target: g.target.clone(),
            blocks: g.blocks.iter().zip(&f.blocks).map(|(a, b)| a * b).collect(),
        })
    }

    /// Composes a chain given in application order: `fs[n-1] ∘ … ∘ fs[0]`.
    pub fn chain(&self, fs: &[&Morphism]) -> Result<Morphism> {
        let (first, rest) = fs.split_first().ok_or_else(|| Error::Shape("empty chain".into()))?;
        let mut acc = (*first).clone();
        for g in rest {
            acc = self.compose(g, &acc)?;
        }
        Ok(acc)
    }

    pub fn dagger(&self, f: &Morphism) -> Morphism {
        f.dagger()
    }

    /// The isometric vertex `V^{ab}_c : c → a⊗b`.
    pub fn vertex(&self, a: Label, b: Label, cc: Label) -> Result<Morphism> {
        if self.spec.ring.n(a, b, cc) == 0 {
            return Err(Error::EmptySpace(format!(
                "N_{{{},{}}}^{} = 0",
                self.spec.label(a),
                self.spec.label(b),
                self.spec.label(cc)
            )));
        }
        let mut m = self.zero(&TensorWord(vec![cc]), &TensorWord(vec![a, b]));
        let t = self.trees(&m.target);
        let i = t.position(cc, &[a, cc]).expect("admissible comb");
        m.blocks[cc][(i, 0)] = ONE;
        Ok(m)
    }

    /// The comb isometry `T_seq : c → w` as a morphism from the one-letter word `c`.
    pub fn tree_morphism(&self, w: &TensorWord, seq: &[Label]) -> Result<Morphism> {
        let ch = seq.last().copied().unwrap_or(self.unit());
        let t = self.trees(w);
        let i = t
            .position(ch, seq)
            .ok_or_else(|| Error::Shape(format!("{seq:?} is not a tree on {:?}", w.0)))?;
        let src = if ch == self.unit() && w.is_empty() {
            TensorWord::empty()
        } else {
            TensorWord(vec![ch])
        };
        let mut m = self.zero(&src, w);
        m.blocks[ch][(i, 0)] = ONE;
        Ok(m)
    }

    /// `f ⊗ id_w`.
    pub fn tensor_id_right(&self, f: &Morphism, w: &TensorWord) -> Morphism {
        if w.is_empty() {
            return f.clone();
        }
        let unit = self.unit();
        let (nx, ny) = (f.source.len(), f.target.len());
        let src = f.source.concat(w);
        let tgt = f.target.concat(w);
        let (sx, sy) = (self.trees(&f.source), self.trees(&f.target));
        let (ss, st) = (self.trees(&src), self.trees(&tgt));
        let mut out = self.zero(&src, &tgt);
        for ch in 0..self.rank() {
            if out.blocks[ch].is_empty() {
                continue;
            }
            #[allow(clippy::type_complexity)]
            let mut cols: HashMap<(Label, &[Label]), Vec<(usize, usize)>> = HashMap::new();
            for (j, s) in ss.of_charge(ch).iter().enumerate() {
                let q = if nx == 0 { unit } else { s[nx - 1] };
                let head = sx.position(q, &s[..nx]).expect("prefix of a comb is a comb");
                cols.entry((q, &s[nx..])).or_default().push((j, head));
            }
            let blk = &mut out.blocks[ch];
            for (i, t) in st.of_charge(ch).iter().enumerate() {
                let q = if ny == 0 { unit } else { t[ny - 1] };
                let Some(cs) = cols.get(&(q, &t[ny..])) else { continue };
                let hi = sy.position(q, &t[..ny]).expect("prefix of a comb is a comb");
                let fq = &f.blocks[q];
                for &(j, hj) in cs {
                    blk[(i, j)] = fq[(hi, hj)];
                }
            }
        }
        out
    }

    fn split_basis(&self, w: &TensorWord, x: &TensorWord) -> Arc<SplitBasis> {
        let key = (w.0.clone(), x.0.clone());
        if let Some(b) = self.splits.read().unwrap().get(&key) {
            return b.clone();
        }
        let b = Arc::new(self.build_split_basis(w, x));
        self.splits.write().unwrap().entry(key).or_insert(b).clone()
    }

    fn build_split_basis(&self, w: &TensorWord, x: &TensorWord) -> SplitBasis {
        let r = self.rank();
        let (tw, tx) = (self.trees(w), self.trees(x));
        let wx = w.concat(x);
        let tc = self.trees(&wx);
        let mut memo = RecoupleMemo::new();
        let mut keys = Vec::with_capacity(r);
        let mut mats = Vec::with_capacity(r);
        for ch in 0..r {
            let mut kc = Vec::new();
            for p in 0..r {
                for q in 0..r {
                    if self.spec.ring.n(p, q, ch) == 0 {
                        continue;
                    }
                    for iw in 0..tw.count(p) {
                        for ix in 0..tx.count(q) {
                            kc.push((p, iw, q, ix));
                        }
                    }
                }
            }
            let mut m = CMat::zeros(tc.count(ch), kc.len());
            for (col, &(p, iw, q, ix)) in kc.iter().enumerate() {
                let sw = &tw.of_charge(p)[iw];
                let sx = &tx.of_charge(q)[ix];
                for (seq, v) in self.split_vector(sw, p, sx, &x.0, ch, &mut memo) {
                    let row = tc.position(ch, &seq).expect("split expansion lands on combs");
                    m[(row, col)] += v;
                }
            }
            keys.push(kc);
            mats.push(m);
        }
        SplitBasis { keys, mats }
    }

    /// `(T_W ⊗ T_X) V^{pq}_c` expanded in left combs of `W ⊗ X`, where `q`
    /// is the charge of the X-tree `sx`.
    fn split_vector(
        &self,
        sw: &[Label],
        p: Label,
        sx: &[Label],
        xw: &[Label],
        ch: Label,
        memo: &mut RecoupleMemo,
    ) -> Vec<(Vec<Label>, Complex64)> {
        let m = sx.len();
        if m == 0 {
            return vec![(sw.to_vec(), ONE)];
        }
        if m == 1 {
            let mut s = sw.to_vec();
            s.push(ch);
            return vec![(s, ONE)];
        }
        let key = (sw.to_vec(), sx.to_vec(), ch);
        if let Some(v) = memo.get(&key) {
            return v.clone();
        }
        let q = sx[m - 1];
        let qp = sx[m - 2];
        let b = xw[m - 1];
        let mut acc: HashMap<Vec<Label>, Complex64> = HashMap::new();
        for rr in 0..self.rank() {
            if self.spec.ring.n(p, qp, rr) == 0 || self.spec.ring.n(rr, b, ch) == 0 {
                continue;
            }
            let coef = self.f(p, qp, b, ch, rr, q).conj();
            if coef == ZERO {
                continue;
            }
            for (mut seq, v) in self.split_vector(sw, p, &sx[..m - 1], xw, rr, memo) {
                seq.push(ch);
                *acc.entry(seq).or_insert(ZERO) += coef * v;
            }
        }
        let mut out: Vec<_> = acc.into_iter().filter(|(_, v)| *v != ZERO).collect();
        out.sort_by(|a, b| a.0.cmp(&b.0));
        memo.insert(key, out.clone());
        out
    }

    /// `id_w ⊗ g`.
    pub fn tensor_id_left(&self, w: &TensorWord, g: &Morphism) -> Morphism {
        if w.is_empty() {
            return g.clone();
        }
        let bx = self.split_basis(w, &g.source);
        let by = self.split_basis(w, &g.target);
        let src = w.concat(&g.source);
        let tgt = w.concat(&g.target);
        let mut out = self.zero(&src, &tgt);
        for ch in 0..self.rank() {
            if out.blocks[ch].is_empty() {
                continue;
            }
            let mut cols: HashMap<(Label, usize, Label), Vec<(usize, usize)>> = HashMap::new();
            for (j, &(p, iw, q, ix)) in bx.keys[ch].iter().enumerate() {
                cols.entry((p, iw, q)).or_default().push((j, ix));
            }
            let mut gm = CMat::zeros(by.keys[ch].len(), bx.keys[ch].len());
            for (i, &(p, iw, q, iy)) in by.keys[ch].iter().enumerate() {
                if let Some(cs) = cols.get(&(p, iw, q)) {
                    for &(j, ix) in cs {
                        gm[(i, j)] = g.blocks[q][(iy, ix)];
                    }
                }
            }
            out.blocks[ch] = &by.mats[ch] * gm * bx.mats[ch].adjoint();
        }
        out
    }

    /// `id_left ⊗ f ⊗ id_right`.
    pub fn whisker(&self, left: &TensorWord, f: &Morphism, right: &TensorWord) -> Morphism {
        let fr = self.tensor_id_right(f, right);
        self.tensor_id_left(left, &fr)
    }

    /// `f ⊗ g = (f ⊗ id) ∘ (id ⊗ g)`.
    pub fn tensor(&self, f: &Morphism, g: &Morphism) -> Morphism {
        let a = self.tensor_id_left(&f.source, g);
        let b = self.tensor_id_right(f, &g.target);
        self.compose(&b, &a).expect("tensor factors line up")
    }

    /// Scalar `κ_x = 1/(d_x F^{x x̄ x}_x[1,1])` fixing the evaluation map.
    pub fn kappa(&self, x: Label) -> Complex64 {
        let u = self.unit();
        let xb = self.dual(x);
        ONE / (self.f(x, xb, x, x, u, u) * self.d(x))
    }

    /// `coev_x = √d_x V^{x x̄}_1 : 1 → x ⊗ x̄`.
    pub fn coev(&self, x: Label) -> Morphism {
        let u = self.unit();
        let mut m = self.zero(&TensorWord::empty(), &TensorWord(vec![x, self.dual(x)]));
        m.blocks[u][(0, 0)] = c(self.d(x).sqrt());
        m
    }

    /// `ev_x = √d_x κ_x (V^{x̄ x}_1)† : x̄ ⊗ x → 1`.
    pub fn ev(&self, x: Label) -> Morphism {
        let u = self.unit();
        let mut m = self.zero(&TensorWord(vec![self.dual(x), x]), &TensorWord::empty());
        m.blocks[u][(0, 0)] = self.kappa(x) * self.d(x).sqrt();
        m
    }

    /// `(ev_x, coev_x, ev_x†, coev_x†)`.
    pub fn ev_coev(&self, x: Label) -> (Morphism, Morphism, Morphism, Morphism) {
        let (ev, coev) = (self.ev(x), self.coev(x));
        let (evd, coevd) = (ev.dagger(), coev.dagger());
        (ev, coev, evd, coevd)
    }

    /// `coev_X : 1 → X ⊗ X̄`, nested.
    pub fn coev_word(&self, w: &TensorWord) -> Morphism {
        let mut acc = self.id(&TensorWord::empty());
        for k in 0..w.len() {
            let head = TensorWord(w.0[..k].to_vec());
            let tail = self.dual_word(&head);
            let step = self.whisker(&head, &self.coev(w.0[k]), &tail);
            acc = self.compose(&step, &acc).expect("nested coev");
        }
        acc
    }

    /// `ev_X : X̄ ⊗ X → 1`, nested.
    pub fn ev_word(&self, w: &TensorWord) -> Morphism {
        let mut acc = self.id(&TensorWord::empty());
        // inside out: ev_{X'x} = ev_x ∘ (id_x̄ ⊗ ev_{X'} ⊗ id_x)
        for k in 0..w.len() {
            let x = w.0[k];
            let l = TensorWord(vec![self.dual(x)]);
            let rgt = TensorWord(vec![x]);
            let step = self.whisker(&l, &acc, &rgt);
            acc = self.compose(&self.ev(x), &step).expect("nested ev");
        }
        acc
    }

    /// Categorical trace `Σ_c d_c Tr(f_c)`.
    pub fn trace(&self, f: &Morphism) -> Result<Complex64> {
        if f.source != f.target {
            return Err(Error::Shape("trace of a non-endomorphism".into()));
        }
        Ok(f.blocks.iter().enumerate().map(|(ch, b)| b.trace() * self.d(ch)).sum())
    }

    /// `coev_X† (f ⊗ id_X̄) coev_X`, closing the strand on the right.
    pub fn right_trace(&self, f: &Morphism) -> Result<Complex64> {
        if f.source != f.target {
            return Err(Error::Shape("trace of a non-endomorphism".into()));
        }
        let cv = self.coev_word(&f.source);
        let xb = self.dual_word(&f.source);
        let m = self.chain(&[&cv, &self.tensor_id_right(f, &xb), &cv.dagger()])?;
        Ok(m.scalar(self.unit()).expect("closed diagram"))
    }

    /// `ev_X (id_X̄ ⊗ f) ev_X†`, closing the strand on the left.
    pub fn left_trace(&self, f: &Morphism) -> Result<Complex64> {
        if f.source != f.target {
            return Err(Error::Shape("trace of a non-endomorphism".into()));
        }
        let ev = self.ev_word(&f.source);
        let xb = self.dual_word(&f.source);
        let m = self.chain(&[&ev.dagger(), &self.tensor_id_left(&xb, f), &ev])?;
        Ok(m.scalar(self.unit()).expect("closed diagram"))
    }

    /// The transpose `g^∨ : Ȳ → X̄` of `g : X → Y`.
    pub fn transpose(&self, g: &Morphism) -> Morphism {
        let xb = self.dual_word(&g.source);
        let yb = self.dual_word(&g.target);
        let a = self.tensor_id_left(&yb, &self.coev_word(&g.source));
        let b = self.whisker(&yb, g, &xb);
        let cc = self.tensor_id_right(&self.ev_word(&g.target), &xb);
        self.chain(&[&a, &b, &cc]).expect("transpose chain")
    }

    /// Conjugate `f̄ = (f†)^∨ : X̄ → Ȳ` of `f : X → Y`.
    pub fn conjugate(&self, f: &Morphism) -> Morphism {
        self.transpose(&f.dagger())
    }

    /// Product of `κ` over the letters of a word, the pivotal phase of `w`.
    pub fn pivotal_phase(&self, w: &TensorWord) -> Complex64 {
        w.0.iter().map(|&x| self.kappa(x)).product()
    }
}

#[cfg(test)]
mod tests;
