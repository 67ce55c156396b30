//! Morphisms between finite direct sums of tensor words.

use std::fmt;

use num_complex::Complex64;

use crate::diagram::{Engine, Morphism, TensorWord};
use crate::error::{Error, Result};
use crate::linalg::{c, max_diff, CMat};

/// Per charge, the starting row of every summand plus the total at the end.
fn offsets(engine: &Engine, words: &[TensorWord]) -> Vec<Vec<usize>> {
    let trees: Vec<_> = words.iter().map(|w| engine.trees(w)).collect();
    (0..engine.rank())
        .map(|ch| {
            let mut v = Vec::with_capacity(words.len() + 1);
            let mut acc = 0;
            v.push(0);
            for t in &trees {
                acc += t.count(ch);
                v.push(acc);
            }
            v
        })
        .collect()
}

/// A morphism `⊕_s source[s] → ⊕_t target[t]`.
///
/// Stored as one matrix per charge whose rows run over the trees of every
/// target summand in order, and columns likewise over the source summands.
#[derive(Clone, PartialEq)]
pub struct ObjMorphism {
    source: Vec<TensorWord>,
    target: Vec<TensorWord>,
    src_off: Vec<Vec<usize>>,
    tgt_off: Vec<Vec<usize>>,
    blocks: Vec<CMat>,
}

impl fmt::Debug for ObjMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ObjMorphism")
            .field("source", &self.source)
            .field("target", &self.target)
            .field("dim", &self.dim())
            .finish()
    }
}

impl ObjMorphism {
    pub fn zero(engine: &Engine, source: &[TensorWord], target: &[TensorWord]) -> Self {
        let src_off = offsets(engine, source);
        let tgt_off = offsets(engine, target);
        let blocks = (0..engine.rank())
            .map(|ch| CMat::zeros(*tgt_off[ch].last().unwrap(), *src_off[ch].last().unwrap()))
            .collect();
        ObjMorphism {
            source: source.to_vec(),
            target: target.to_vec(),
            src_off,
            tgt_off,
            blocks,
        }
    }

    pub fn id(engine: &Engine, words: &[TensorWord]) -> Self {
        let mut m = Self::zero(engine, words, words);
        for b in &mut m.blocks {
            b.fill_with_identity();
        }
        m
    }

    /// Block-diagonal morphism with `parts[k] : source[k] → target[k]`.
    pub fn diagonal(engine: &Engine, parts: &[Morphism]) -> Self {
        let source: Vec<_> = parts.iter().map(|p| p.source().clone()).collect();
        let target: Vec<_> = parts.iter().map(|p| p.target().clone()).collect();
        let mut m = Self::zero(engine, &source, &target);
        for (k, p) in parts.iter().enumerate() {
            m.set(k, k, p).expect("diagonal part fits");
        }
        m
    }

    pub fn source(&self) -> &[TensorWord] {
        &self.source
    }

    pub fn target(&self) -> &[TensorWord] {
        &self.target
    }

    pub fn block(&self, charge: usize) -> &CMat {
        &self.blocks[charge]
    }

    pub(crate) fn blocks(&self) -> &[CMat] {
        &self.blocks
    }

    pub(crate) fn blocks_mut(&mut self) -> &mut [CMat] {
        &mut self.blocks
    }

    /// Number of summand trees of the target with the given charge.
    pub fn target_count(&self, charge: usize) -> usize {
        *self.tgt_off[charge].last().unwrap()
    }

    /// Index of the first row of target summand `t` in block `charge`.
    pub fn target_offset(&self, charge: usize, t: usize) -> usize {
        self.tgt_off[charge][t]
    }

    pub fn source_offset(&self, charge: usize, s: usize) -> usize {
        self.src_off[charge][s]
    }

    fn ranges(&self, ch: usize, t: usize, s: usize) -> (usize, usize, usize, usize) {
        let (r0, r1) = (self.tgt_off[ch][t], self.tgt_off[ch][t + 1]);
        let (c0, c1) = (self.src_off[ch][s], self.src_off[ch][s + 1]);
        (r0, r1 - r0, c0, c1 - c0)
    }

    /// The component `source[s] → target[t]`.
    pub fn get(&self, t: usize, s: usize) -> Morphism {
        let blocks = (0..self.blocks.len())
            .map(|ch| {
                let (r0, nr, c0, nc) = self.ranges(ch, t, s);
                self.blocks[ch].view((r0, c0), (nr, nc)).into_owned()
            })
            .collect();
        Morphism::from_blocks(self.source[s].clone(), self.target[t].clone(), blocks)
    }

    pub fn is_zero_at(&self, t: usize, s: usize) -> bool {
        (0..self.blocks.len()).all(|ch| {
            let (r0, nr, c0, nc) = self.ranges(ch, t, s);
            self.blocks[ch]
                .view((r0, c0), (nr, nc))
                .iter()
                .all(|z| *z == Complex64::new(0.0, 0.0))
        })
    }

    fn check_slot(&self, t: usize, s: usize, m: &Morphism) -> Result<()> {
        if m.source() != &self.source[s] || m.target() != &self.target[t] {
            return Err(Error::Shape(format!(
                "component {:?}→{:?} does not fit slot {:?}→{:?}",
                m.source().0,
                m.target().0,
                self.source[s].0,
                self.target[t].0
            )));
        }
        Ok(())
    }

    pub fn set(&mut self, t: usize, s: usize, m: &Morphism) -> Result<()> {
        self.check_slot(t, s, m)?;
        for ch in 0..self.blocks.len() {
            let (r0, nr, c0, nc) = self.ranges(ch, t, s);
            self.blocks[ch].view_mut((r0, c0), (nr, nc)).copy_from(m.block(ch));
        }
        Ok(())
    }

    /// `component(t, s) += z · m`.
    pub fn add_at(&mut self, t: usize, s: usize, z: Complex64, m: &Morphism) -> Result<()> {
        self.check_slot(t, s, m)?;
        for ch in 0..self.blocks.len() {
            let (r0, nr, c0, nc) = self.ranges(ch, t, s);
            let mut v = self.blocks[ch].view_mut((r0, c0), (nr, nc));
            v += m.block(ch) * z;
        }
        Ok(())
    }

    /// `g ∘ self`.
    pub fn then(&self, g: &ObjMorphism) -> Result<ObjMorphism> {
        if self.target != g.source {
            return Err(Error::Shape("direct-sum morphisms do not compose".into()));
        }
        Ok(ObjMorphism {
            source: self.source.clone(),
            target: g.target.clone(),
            src_off: self.src_off.clone(),
            tgt_off: g.tgt_off.clone(),
            blocks: g.blocks.iter().zip(&self.blocks).map(|(a, b)| a * b).collect(),
        })
    }

    pub fn dagger(&self) -> ObjMorphism {
        ObjMorphism {
            source: self.target.clone(),
            target: self.source.clone(),
            src_off: self.tgt_off.clone(),
            tgt_off: self.src_off.clone(),
            blocks: self.blocks.iter().map(|b| b.adjoint()).collect(),
        }
    }

    pub fn scale(&self, z: Complex64) -> ObjMorphism {
        let mut m = self.clone();
        for b in &mut m.blocks {
            *b *= z;
        }
        m
    }

    fn same_space(&self, other: &ObjMorphism) -> Result<()> {
        if self.source != other.source || self.target != other.target {
            return Err(Error::Shape("direct-sum morphisms live in different spaces".into()));
        }
        Ok(())
    }

    /// `self += z · other`.
    pub fn axpy(&mut self, z: Complex64, other: &ObjMorphism) -> Result<()> {
        self.same_space(other)?;
        for (a, b) in self.blocks.iter_mut().zip(&other.blocks) {
            *a += b * z;
        }
        Ok(())
    }

    pub fn sub(&self, other: &ObjMorphism) -> Result<ObjMorphism> {
        let mut m = self.clone();
        m.axpy(c(-1.0), other)?;
        Ok(m)
    }

    pub fn max_diff(&self, other: &ObjMorphism) -> f64 {
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

    pub fn dim(&self) -> usize {
        self.blocks.iter().map(|b| b.len()).sum()
    }

    /// Coefficients, charge by charge, each block row-major.
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

    /// Categorical trace `Σ_c d_c Tr(block_c)`.
    pub fn trace(&self, engine: &Engine) -> Result<Complex64> {
        if self.source != self.target {
            return Err(Error::Shape("trace of a non-endomorphism".into()));
        }
        Ok(self
            .blocks
            .iter()
            .enumerate()
            .map(|(ch, b)| b.trace() * engine.d(ch))
            .sum())
    }

    /// `id_left ⊗ self ⊗ id_right`, summand by summand.
    pub fn whisker(&self, engine: &Engine, left: &TensorWord, right: &TensorWord) -> ObjMorphism {
        let wrap = |w: &TensorWord| left.concat(w).concat(right);
        let src: Vec<_> = self.source.iter().map(wrap).collect();
        let tgt: Vec<_> = self.target.iter().map(wrap).collect();
        let mut out = ObjMorphism::zero(engine, &src, &tgt);
        for t in 0..self.target.len() {
            for s in 0..self.source.len() {
                if self.is_zero_at(t, s) {
                    continue;
                }
                let m = engine.whisker(left, &self.get(t, s), right);
                out.set(t, s, &m).expect("whiskered component fits");
            }
        }
        out
    }
}
