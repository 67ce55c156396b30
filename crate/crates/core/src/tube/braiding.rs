//! Half-braidings `e_{X,a} : X⊗a → a⊗X` on direct sums of words.

use rayon::prelude::*;

use super::ObjMorphism;
use crate::category::Label;
use crate::diagram::{Engine, TensorWord};
use crate::error::Result;
use crate::linalg::ONE;
use crate::report::VerificationReport;

fn w(v: &[Label]) -> TensorWord {
    TensorWord(v.to_vec())
}

/// A family `e_{X,a}` indexed by the simple objects `a`, where `X` is the
/// direct sum of `words`.
#[derive(Clone, Debug)]
pub struct HalfBraiding {
    words: Vec<TensorWord>,
    components: Vec<ObjMorphism>,
}

impl HalfBraiding {
    pub fn new(words: Vec<TensorWord>, components: Vec<ObjMorphism>) -> Self {
        HalfBraiding { words, components }
    }

    pub fn words(&self) -> &[TensorWord] {
        &self.words
    }

    pub fn component(&self, a: Label) -> &ObjMorphism {
        &self.components[a]
    }

    pub fn components(&self) -> &[ObjMorphism] {
        &self.components
    }

    /// Summands of `X ⊗ w`.
    pub fn words_right(&self, tail: &TensorWord) -> Vec<TensorWord> {
        self.words.iter().map(|x| x.concat(tail)).collect()
    }

    /// Summands of `w ⊗ X`.
    pub fn words_left(&self, head: &TensorWord) -> Vec<TensorWord> {
        self.words.iter().map(|x| head.concat(x)).collect()
    }

    /// `e_{X,a⊗b} = Σ_c (V ⊗ id_X) e_{X,c} (id_X ⊗ V†)` over channels `V : c → a⊗b`.
    pub fn on_pair(&self, engine: &Engine, a: Label, b: Label) -> ObjMorphism {
        let ab = w(&[a, b]);
        let mut out = ObjMorphism::zero(engine, &self.words_right(&ab), &self.words_left(&ab));
        for cc in engine.spec().ring.fuse(a, b) {
            let v = engine.vertex(a, b, cc).expect("channel");
            let vd = v.dagger();
            let down: Vec<_> = self.words.iter().map(|x| engine.tensor_id_left(x, &vd)).collect();
            let up: Vec<_> = self.words.iter().map(|x| engine.tensor_id_right(&v, x)).collect();
            let term = ObjMorphism::diagonal(engine, &down)
                .then(&self.components[cc])
                .and_then(|m| m.then(&ObjMorphism::diagonal(engine, &up)))
                .expect("hexagon chain");
            out.axpy(ONE, &term).expect("same space");
        }
        out
    }

    /// `(id_a ⊗ e_{X,b}) ∘ (e_{X,a} ⊗ id_b)`.
    pub fn composite(&self, engine: &Engine, a: Label, b: Label) -> ObjMorphism {
        let first = self.components[a].whisker(engine, &TensorWord::empty(), &w(&[b]));
        let second = self.components[b].whisker(engine, &w(&[a]), &TensorWord::empty());
        first.then(&second).expect("hexagon chain")
    }

    /// `max_a ‖e e† − id‖` and `max_a ‖e† e − id‖` per simple `a`.
    pub fn unitarity(&self, engine: &Engine) -> Vec<(Label, f64, f64)> {
        self.components
            .iter()
            .enumerate()
            .map(|(a, e)| {
                let id_src = ObjMorphism::id(engine, e.source());
                let id_tgt = ObjMorphism::id(engine, e.target());
                let l = e.then(&e.dagger()).expect("square").max_diff(&id_src);
                let r = e.dagger().then(e).expect("square").max_diff(&id_tgt);
                (a, l, r)
            })
            .collect()
    }

    /// Residual of the hexagon for every ordered pair of simples.
    pub fn hexagon(&self, engine: &Engine) -> Vec<(Label, Label, f64)> {
        let rank = engine.rank();
        let pairs: Vec<(Label, Label)> = (0..rank).flat_map(|a| (0..rank).map(move |b| (a, b))).collect();
        pairs
            .par_iter()
            .map(|&(a, b)| (a, b, self.on_pair(engine, a, b).max_diff(&self.composite(engine, a, b))))
            .collect()
    }

    /// `‖e_{X,1} − id_X‖`, identifying `X⊗1` and `1⊗X` with `X`.
    pub fn unit_residual(&self, engine: &Engine) -> f64 {
        let u = engine.unit();
        let uw = w(&[u]);
        let mut id1 = ObjMorphism::zero(engine, &self.words_right(&uw), &self.words_left(&uw));
        for (k, x) in self.words.iter().enumerate() {
            let m = engine.id(x);
            let mut blk = engine.zero(&x.concat(&uw), &uw.concat(x));
            for ch in 0..engine.rank() {
                *blk.block_mut(ch) = m.block(ch).clone();
            }
            id1.set(k, k, &blk).expect("unit block");
        }
        self.components[u].max_diff(&id1)
    }

    /// Unitarity both ways, hexagon on all pairs and the unit condition.
    pub fn verify(&self, engine: &Engine, prefix: &str, tol: f64) -> Vec<VerificationReport> {
        let sp = engine.spec();
        let (mut left, mut right) = (Vec::new(), Vec::new());
        for (a, l, r) in self.unitarity(engine) {
            left.push((vec![sp.label(a).to_string()], l));
            right.push((vec![sp.label(a).to_string()], r));
        }
        let hex = self
            .hexagon(engine)
            .into_iter()
            .map(|(a, b, r)| (sp.labels_of(&[a, b]), r))
            .collect();
        let unit = vec![(vec![sp.label(engine.unit()).to_string()], self.unit_residual(engine))];
        vec![
            VerificationReport::from_cases(&format!("{prefix}_unitarity_left"), left, tol),
            VerificationReport::from_cases(&format!("{prefix}_unitarity_right"), right, tol),
            VerificationReport::from_cases(&format!("{prefix}_hexagon"), hex, tol),
            VerificationReport::from_cases(&format!("{prefix}_unit"), unit, tol),
        ]
    }

    /// The half-braiding pulled back along an isometry `v : Y → X`:
    /// `e_{Y,a} = (id_a ⊗ v†) e_{X,a} (v ⊗ id_a)`.
    pub fn restrict(&self, engine: &Engine, v: &ObjMorphism) -> Result<HalfBraiding> {
        let components = (0..engine.rank())
            .map(|a| {
                let aw = w(&[a]);
                let down = v.whisker(engine, &TensorWord::empty(), &aw);
                let up = v.dagger().whisker(engine, &aw, &TensorWord::empty());
                down.then(&self.components[a])?.then(&up)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(HalfBraiding {
            words: v.source().to_vec(),
            components,
        })
    }
}
