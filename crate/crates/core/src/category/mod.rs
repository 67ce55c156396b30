//! Finite presentations of unitary fusion categories.
//!
//! A presentation is a fusion ring, its Perron-Frobenius dimensions and a
//! table of F-symbols in the isometric vertex convention:
//!
//! ```text
//! (V^{ab}_e ⊗ id_c) V^{ec}_d = Σ_f F^{abc}_d[e,f] (id_a ⊗ V^{bc}_f) V^{af}_d
//! ```
//!
//! where `V^{ab}_c : c → a⊗b` satisfies `V†V = id`.

mod catalog;
mod json;

use std::collections::{BTreeMap, HashMap};

use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::report::VerificationReport;

pub use catalog::{builtin_catalog, catalog_entry, catalog_names, from_group, rep_a4};
pub use json::{load_spec, load_spec_unchecked, CategoryFile, FEntry};

/// Index of a simple object inside a [`FusionRing`].
pub type Label = usize;

/// Tolerance used by [`load_spec`] for unitarity and pentagon checks.
pub const LOAD_TOL: f64 = 1e-9;

/// Maximum allowed disagreement between supplied and computed dimensions.
pub const DIM_TOL: f64 = 1e-8;

#[derive(Clone, Debug, PartialEq)]
pub struct FusionRing {
    labels: Vec<String>,
    unit: Label,
    dual: Vec<Label>,
    n: Vec<u32>,
}

impl FusionRing {
    /// Builds a ring from a label list, unit, dual map and a sparse table of
    /// multiplicities. Only the shape is checked here; see [`FusionRing::validate`].
    pub fn new(
        labels: Vec<String>,
        unit: Label,
        dual: Vec<Label>,
        entries: &[(Label, Label, Label, u32)],
    ) -> Result<Self> {
        let r = labels.len();
        if r == 0 {
            return Err(Error::Schema("label set is empty".into()));
        }
        if unit >= r || dual.len() != r || dual.iter().any(|&d| d >= r) {
            return Err(Error::Schema("unit or dual map out of range".into()));
        }
        let mut n = vec![0u32; r * r * r];
        for &(x, y, z, m) in entries {
            if x >= r || y >= r || z >= r {
                return Err(Error::Schema("fusion entry label out of range".into()));
            }
            n[(x * r + y) * r + z] = m;
        }
        Ok(FusionRing { labels, unit, dual, n })
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn name(&self, x: Label) -> &str {
        &self.labels[x]
    }

    pub fn index(&self, name: &str) -> Option<Label> {
        self.labels.iter().position(|l| l == name)
    }

    pub fn unit(&self) -> Label {
        self.unit
    }

    pub fn dual(&self, x: Label) -> Label {
        self.dual[x]
    }

    #[inline]
    pub fn n(&self, x: Label, y: Label, z: Label) -> u32 {
        let r = self.rank();
        self.n[(x * r + y) * r + z]
    }

    /// Simple summands of `x ⊗ y`, in label order.
    pub fn fuse(&self, x: Label, y: Label) -> impl Iterator<Item = Label> + '_ {
        (0..self.rank()).filter(move |&z| self.n(x, y, z) > 0)
    }

    pub fn is_multiplicity_free(&self) -> bool {
        self.n.iter().all(|&m| m <= 1)
    }

    /// Nonzero entries `(x, y, z, N)` in lexicographic order.
    pub fn entries(&self) -> Vec<(Label, Label, Label, u32)> {
        let r = self.rank();
        let mut out = Vec::new();
        for x in 0..r {
            for y in 0..r {
                for z in 0..r {
                    let m = self.n(x, y, z);
                    if m > 0 {
                        out.push((x, y, z, m));
                    }
                }
            }
        }
        out
    }

    /// The matrix `(N[x][y][z])_{y,z}` of left multiplication by `x`.
    pub fn fusion_matrix(&self, x: Label) -> DMatrix<f64> {
        let r = self.rank();
        DMatrix::from_fn(r, r, |y, z| self.n(x, y, z) as f64)
    }

    /// Checks unit, duality and associativity axioms with exact integer arithmetic.
    pub fn validate(&self) -> Result<()> {
        let r = self.rank();
        let u = self.unit;
        let name = |x: Label| self.labels[x].clone();
        let mut seen = std::collections::HashSet::new();
        for l in &self.labels {
            if !seen.insert(l) {
                return Err(Error::Schema(format!("duplicate label {l}")));
            }
        }
        for x in 0..r {
            if self.dual[self.dual[x]] != x {
                return Err(Error::consistency("dual involution", vec![name(x)], 1.0));
            }
        }
        for y in 0..r {
            for z in 0..r {
                let want = u32::from(y == z);
                if self.n(u, y, z) != want || self.n(y, u, z) != want {
                    return Err(Error::consistency("unit fusion", vec![name(y), name(z)], 1.0));
                }
            }
        }
        for x in 0..r {
            for y in 0..r {
                let want = u32::from(y == self.dual[x]);
                if self.n(x, y, u) != want {
                    return Err(Error::consistency("duality", vec![name(x), name(y)], 1.0));
                }
                for z in 0..r {
                    let lhs = self.n(x, y, z);
                    let rhs = self.n(self.dual[y], self.dual[x], self.dual[z]);
                    if lhs != rhs {
                        let res = (lhs as f64 - rhs as f64).abs();
                        return Err(Error::consistency(
                            "dual symmetry",
                            vec![name(x), name(y), name(z)],
                            res,
                        ));
                    }
                }
            }
        }
        for x in 0..r {
            for y in 0..r {
                for z in 0..r {
                    for w in 0..r {
                        let lhs: u64 = (0..r).map(|e| self.n(x, y, e) as u64 * self.n(e, z, w) as u64).sum();
                        let rhs: u64 = (0..r).map(|f| self.n(y, z, f) as u64 * self.n(x, f, w) as u64).sum();
                        if lhs != rhs {
                            return Err(Error::consistency(
                                "ring associativity",
                                vec![name(x), name(y), name(z), name(w)],
                                (lhs as f64 - rhs as f64).abs(),
                            ));
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct QuantumDimensions {
    pub d: Vec<f64>,
    pub global_dim: f64,
}

impl QuantumDimensions {
    pub fn from_dims(d: Vec<f64>) -> Self {
        let global_dim = d.iter().map(|x| x * x).sum();
        QuantumDimensions { d, global_dim }
    }
}

/// Perron-Frobenius dimensions of a validated ring.
///
/// `M = Σ_x N_x` is symmetric (the sum runs over a dual-closed set) with
/// strictly positive entries, so its top eigenvector is the dimension vector.
pub fn compute_fp_dims(ring: &FusionRing) -> Result<QuantumDimensions> {
    let r = ring.rank();
    let mut m = DMatrix::<f64>::zeros(r, r);
    for x in 0..r {
        m += ring.fusion_matrix(x);
    }
    let eig = SymmetricEigen::new(m);
    let top = eig.eigenvalues.imax();
    let v = eig.eigenvectors.column(top).into_owned();
    let scale = v[ring.unit()];
    if scale.abs() < 1e-12 {
        return Err(Error::consistency(
            "Perron-Frobenius",
            vec![ring.name(ring.unit()).into()],
            0.0,
        ));
    }
    let d: Vec<f64> = v.iter().map(|&c| c / scale).collect();
    if let Some(x) = (0..r).find(|&x| d[x] <= 0.0) {
        return Err(Error::consistency("Perron-Frobenius", vec![ring.name(x).into()], d[x]));
    }
    for x in 0..r {
        let nx = ring.fusion_matrix(x);
        for y in 0..r {
            let lhs: f64 = (0..r).map(|z| nx[(y, z)] * d[z]).sum();
            let res = (lhs - d[x] * d[y]).abs();
            if res > 1e-10 * (1.0 + d[x] * d[y]) {
                return Err(Error::consistency(
                    "Perron-Frobenius",
                    vec![ring.name(x).into(), ring.name(y).into()],
                    res,
                ));
            }
        }
    }
    Ok(QuantumDimensions::from_dims(d))
}

/// One F-matrix: rows `(e, α, β)`, columns `(f, γ, δ)`, in lexicographic order.
///
/// `α` indexes `V^{ab}_e`, `β` indexes `V^{ec}_d`, `γ` indexes `V^{bc}_f`
/// and `δ` indexes `V^{af}_d`.
#[derive(Clone, Debug, PartialEq)]
pub struct FMatrix {
    pub rows: Vec<(Label, u32, u32)>,
    pub cols: Vec<(Label, u32, u32)>,
    pub data: DMatrix<Complex64>,
}

impl FMatrix {
    pub fn row_index(&self, e: Label, alpha: u32, beta: u32) -> Option<usize> {
        self.rows.iter().position(|&k| k == (e, alpha, beta))
    }

    pub fn col_index(&self, f: Label, gamma: u32, delta: u32) -> Option<usize> {
        self.cols.iter().position(|&k| k == (f, gamma, delta))
    }
}

fn row_keys(ring: &FusionRing, a: Label, b: Label, c: Label, d: Label) -> Vec<(Label, u32, u32)> {
    let mut out = Vec::new();
    for e in 0..ring.rank() {
        for al in 0..ring.n(a, b, e) {
            for be in 0..ring.n(e, c, d) {
                out.push((e, al, be));
            }
        }
    }
    out
}

fn col_keys(ring: &FusionRing, a: Label, b: Label, c: Label, d: Label) -> Vec<(Label, u32, u32)> {
    let mut out = Vec::new();
    for f in 0..ring.rank() {
        for ga in 0..ring.n(b, c, f) {
            for de in 0..ring.n(a, f, d) {
                out.push((f, ga, de));
            }
        }
    }
    out
}

/// All F-matrices of a category, keyed by `(a, b, c, d)`.
#[derive(Clone, Debug, PartialEq)]
pub struct FSymbolTable {
    rank: usize,
    blocks: HashMap<[Label; 4], FMatrix>,
    /// `F[a,b,c,d,e,f]` for multiplicity-free rings, zero when not admissible.
    dense: Option<Vec<Complex64>>,
}

/// A single F entry with explicit multiplicity indices.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FValue {
    pub abcd: [Label; 4],
    pub e: Label,
    pub f: Label,
    pub mu: [u32; 2],
    pub nu: [u32; 2],
    pub value: Complex64,
}

impl FSymbolTable {
    /// Assembles F-matrices from sparse entries. Entries with a unit among
    /// `a, b, c` that are not supplied are filled in as the identity.
    pub fn from_entries(ring: &FusionRing, entries: &[FValue]) -> Result<Self> {
        let r = ring.rank();
        let u = ring.unit();
        let mut blocks = HashMap::new();
        for a in 0..r {
            for b in 0..r {
                for c in 0..r {
                    for d in 0..r {
                        let rows = row_keys(ring, a, b, c, d);
                        let cols = col_keys(ring, a, b, c, d);
                        if rows.is_empty() && cols.is_empty() {
                            continue;
                        }
                        let mut data = DMatrix::zeros(rows.len(), cols.len());
                        if a == u || b == u || c == u {
                            for (i, &(e, al, be)) in rows.iter().enumerate() {
                                for (j, &(f, ga, de)) in cols.iter().enumerate() {
                                    let one = if a == u {
                                        e == b && f == d && be == ga
                                    } else if b == u {
                                        e == a && f == c && be == de
                                    } else {
                                        e == d && f == b && al == de
                                    };
                                    if one {
                                        data[(i, j)] = Complex64::new(1.0, 0.0);
                                    }
                                }
                            }
                        }
                        blocks.insert([a, b, c, d], FMatrix { rows, cols, data });
                    }
                }
            }
        }
        let lab = |x: Label| ring.name(x).to_string();
        for ent in entries {
            let [a, b, c, d] = ent.abcd;
            if [a, b, c, d, ent.e, ent.f].iter().any(|&x| x >= r) {
                return Err(Error::Schema("F entry label out of range".into()));
            }
            let names = || vec![lab(a), lab(b), lab(c), lab(d), lab(ent.e), lab(ent.f)];
            let block = blocks
                .get_mut(&[a, b, c, d])
                .ok_or_else(|| Error::consistency("F admissibility", names(), ent.value.norm()))?;
            let i = block.row_index(ent.e, ent.mu[0], ent.mu[1]);
            let j = block.col_index(ent.f, ent.nu[0], ent.nu[1]);
            match (i, j) {
                (Some(i), Some(j)) => block.data[(i, j)] = ent.value,
                _ => {
                    return Err(Error::consistency("F admissibility", names(), ent.value.norm()));
                }
            }
        }
        let dense = ring.is_multiplicity_free().then(|| {
            let mut v = vec![Complex64::new(0.0, 0.0); r.pow(6)];
            for (&[a, b, c, d], blk) in &blocks {
                for (i, &(e, _, _)) in blk.rows.iter().enumerate() {
                    for (j, &(f, _, _)) in blk.cols.iter().enumerate() {
                        v[((((a * r + b) * r + c) * r + d) * r + e) * r + f] = blk.data[(i, j)];
                    }
                }
            }
            v
        });
        Ok(FSymbolTable { rank: r, blocks, dense })
    }

    pub fn block(&self, a: Label, b: Label, c: Label, d: Label) -> Option<&FMatrix> {
        self.blocks.get(&[a, b, c, d])
    }

    /// Multiplicity-free entry `F^{abc}_d[e,f]`; zero if not admissible.
    ///
    /// # Panics
    /// Panics if the ring has multiplicities.
    #[inline]
    pub fn f(&self, a: Label, b: Label, c: Label, d: Label, e: Label, f: Label) -> Complex64 {
        let r = self.rank;
        let dense = self
            .dense
            .as_ref()
            .expect("scalar F lookup requires a multiplicity-free ring");
        dense[((((a * r + b) * r + c) * r + d) * r + e) * r + f]
    }

    /// General entry with multiplicity indices; zero if not admissible.
    pub fn entry(&self, abcd: [Label; 4], e: Label, f: Label, mu: [u32; 2], nu: [u32; 2]) -> Complex64 {
        self.blocks
            .get(&abcd)
            .and_then(|b| {
                let i = b.row_index(e, mu[0], mu[1])?;
                let j = b.col_index(f, nu[0], nu[1])?;
                Some(b.data[(i, j)])
            })
            .unwrap_or_default()
    }

    /// Every stored entry with nonzero value, sorted by key.
    pub fn nonzero_entries(&self) -> Vec<FValue> {
        let mut out = Vec::new();
        for (&abcd, b) in &self.blocks {
            for (i, &(e, al, be)) in b.rows.iter().enumerate() {
                for (j, &(f, ga, de)) in b.cols.iter().enumerate() {
                    let v = b.data[(i, j)];
                    if v != Complex64::new(0.0, 0.0) {
                        out.push(FValue {
                            abcd,
                            e,
                            f,
                            mu: [al, be],
                            nu: [ga, de],
                            value: v,
                        });
                    }
                }
            }
        }
        out.sort_by_key(|v| (v.abcd, v.e, v.mu, v.f, v.nu));
        out
    }

    fn sorted_keys(&self) -> Vec<[Label; 4]> {
        let mut keys: Vec<_> = self.blocks.keys().copied().collect();
        keys.sort();
        keys
    }
}

/// A validated unitary fusion category presentation.
#[derive(Clone, Debug, PartialEq)]
pub struct FusionCategorySpec {
    pub name: String,
    pub ring: FusionRing,
    pub dims: QuantumDimensions,
    pub fsymbols: FSymbolTable,
    pub metadata: BTreeMap<String, String>,
}

impl FusionCategorySpec {
    /// Builds a spec from parts, recomputing dimensions, and runs every check.
    pub fn new(
        name: &str,
        ring: FusionRing,
        fsymbols: FSymbolTable,
        metadata: BTreeMap<String, String>,
    ) -> Result<Self> {
        ring.validate()?;
        let dims = compute_fp_dims(&ring)?;
        let spec = FusionCategorySpec {
            name: name.to_string(),
            ring,
            dims,
            fsymbols,
            metadata,
        };
        spec.validate(LOAD_TOL)?;
        Ok(spec)
    }

    pub fn rank(&self) -> usize {
        self.ring.rank()
    }

    pub fn d(&self, x: Label) -> f64 {
        self.dims.d[x]
    }

    pub fn global_dim(&self) -> f64 {
        self.dims.global_dim
    }

    pub fn label(&self, x: Label) -> &str {
        self.ring.name(x)
    }

    pub fn labels_of(&self, xs: &[Label]) -> Vec<String> {
        xs.iter().map(|&x| self.label(x).to_string()).collect()
    }

    /// Dimension, unit-constraint, pentagon and unitarity checks, in that order.
    pub fn validate(&self, tol: f64) -> Result<()> {
        let r = self.rank();
        for x in 0..r {
            let res = (self.d(x) - self.d(self.ring.dual(x))).abs();
            if res > 1e-10 {
                return Err(Error::consistency("dual dimension", self.labels_of(&[x]), res));
            }
        }
        self.check_unit_constraints(tol)?;
        let pent = verify_pentagon(self, tol);
        if !pent.pass {
            let w = pent.worst().expect("failed report has a case");
            return Err(Error::consistency("pentagon", w.labels.clone(), w.residual));
        }
        let uni = verify_unitarity(self, tol);
        if !uni.pass {
            let w = uni.worst().expect("failed report has a case");
            return Err(Error::consistency("F unitarity", w.labels.clone(), w.residual));
        }
        Ok(())
    }

    fn check_unit_constraints(&self, tol: f64) -> Result<()> {
        let u = self.ring.unit();
        for key in self.fsymbols.sorted_keys() {
            let [a, b, c, _] = key;
            if a != u && b != u && c != u {
                continue;
            }
            let blk = self.fsymbols.block(key[0], key[1], key[2], key[3]).unwrap();
            if blk.rows.len() != blk.cols.len() {
                return Err(Error::consistency("F shape", self.labels_of(&key), 1.0));
            }
            let id = DMatrix::<Complex64>::identity(blk.rows.len(), blk.cols.len());
            let res = max_abs(&(&blk.data - id));
            if res > tol {
                return Err(Error::consistency("F unit constraint", self.labels_of(&key), res));
            }
        }
        Ok(())
    }
}

pub(crate) fn max_abs(m: &DMatrix<Complex64>) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// `‖F F† − I‖_max` for every F-matrix.
pub fn verify_unitarity(spec: &FusionCategorySpec, tol: f64) -> VerificationReport {
    let cases = spec
        .fsymbols
        .sorted_keys()
        .into_iter()
        .map(|key| {
            let blk = spec.fsymbols.block(key[0], key[1], key[2], key[3]).unwrap();
            let res = if blk.rows.len() != blk.cols.len() {
                f64::INFINITY
            } else {
                let n = blk.rows.len();
                let ffd = &blk.data * blk.data.adjoint();
                max_abs(&(ffd - DMatrix::identity(n, n)))
            };
            (spec.labels_of(&key), res)
        })
        .collect();
    VerificationReport::from_cases("unitarity", cases, tol)
}

type Basis = Vec<Vec<u32>>;

fn index_of(basis: &Basis) -> HashMap<Vec<u32>, usize> {
    basis.iter().enumerate().map(|(i, k)| (k.clone(), i)).collect()
}

/// Residual of the pentagon for the four-letter word `abcd` fused to `e`.
///
/// The five bracketings of `a⊗b⊗c⊗d` are related by F-moves; the residual is
/// the max-norm distance between the two composite change-of-basis matrices
/// from `((ab)c)d` to `a(b(cd))`.
fn pentagon_instance(spec: &FusionCategorySpec, a: Label, b: Label, c: Label, d: Label, e: Label) -> f64 {
    let ring = &spec.ring;
    let fs = &spec.fsymbols;
    let r = ring.rank() as u32;
    let n = |x: u32, y: u32, z: u32| ring.n(x as usize, y as usize, z as usize);
    let (a, b, c, d, e) = (a as u32, b as u32, c as u32, d as u32, e as u32);
    let fe = |abcd: [u32; 4], x: u32, y: u32, mu: [u32; 2], nu: [u32; 2]| {
        fs.entry(abcd.map(|v| v as usize), x as usize, y as usize, mu, nu)
    };

    // ((ab)c)d: f=ab (α), g=fc (β), e=gd (γ)
    let mut b1: Basis = Vec::new();
    // (ab)(cd): f=ab (α), l=cd (μ), e=fl (ν)
    let mut b2: Basis = Vec::new();
    // a(b(cd)): l=cd (μ), k=bl (ρ), e=ak (σ)
    let mut b3: Basis = Vec::new();
    // (a(bc))d: h=bc (x), g=ah (y), e=gd (γ)
    let mut b4: Basis = Vec::new();
    // a((bc)d): h=bc (x), k=hd (z), e=ak (σ)
    let mut b5: Basis = Vec::new();
    for p in 0..r {
        for q in 0..r {
            for (al, be, ga) in iproduct3(n(a, b, p), n(p, c, q), n(q, d, e)) {
                b1.push(vec![p, al, q, be, ga]);
            }
            for (al, mu, nu) in iproduct3(n(a, b, p), n(c, d, q), n(p, q, e)) {
                b2.push(vec![p, al, q, mu, nu]);
            }
            for (mu, rho, si) in iproduct3(n(c, d, p), n(b, p, q), n(a, q, e)) {
                b3.push(vec![p, mu, q, rho, si]);
            }
            for (x, y, ga) in iproduct3(n(b, c, p), n(a, p, q), n(q, d, e)) {
                b4.push(vec![p, x, q, y, ga]);
            }
            for (x, z, si) in iproduct3(n(b, c, p), n(p, d, q), n(a, q, e)) {
                b5.push(vec![p, x, q, z, si]);
            }
        }
    }
    if b1.is_empty() && b3.is_empty() {
        return 0.0;
    }
    let (i2, i3, i4, i5) = (index_of(&b2), index_of(&b3), index_of(&b4), index_of(&b5));
    let zero = || Complex64::new(0.0, 0.0);

    let mut m12 = DMatrix::from_element(b1.len(), b2.len(), zero());
    for (i, k) in b1.iter().enumerate() {
        let (f, al, g, be, ga) = (k[0], k[1], k[2], k[3], k[4]);
        for l in 0..r {
            for (mu, nu) in iproduct2(n(c, d, l), n(f, l, e)) {
                let v = fe([f, c, d, e], g, l, [be, ga], [mu, nu]);
                if let Some(&j) = i2.get(&vec![f, al, l, mu, nu]) {
                    m12[(i, j)] += v;
                }
            }
        }
    }
    let mut m23 = DMatrix::from_element(b2.len(), b3.len(), zero());
    for (i, k) in b2.iter().enumerate() {
        let (f, al, l, mu, nu) = (k[0], k[1], k[2], k[3], k[4]);
        for kk in 0..r {
            for (rho, si) in iproduct2(n(b, l, kk), n(a, kk, e)) {
                let v = fe([a, b, l, e], f, kk, [al, nu], [rho, si]);
                if let Some(&j) = i3.get(&vec![l, mu, kk, rho, si]) {
                    m23[(i, j)] += v;
                }
            }
        }
    }
    let mut m14 = DMatrix::from_element(b1.len(), b4.len(), zero());
    for (i, k) in b1.iter().enumerate() {
        let (f, al, g, be, ga) = (k[0], k[1], k[2], k[3], k[4]);
        for h in 0..r {
            for (x, y) in iproduct2(n(b, c, h), n(a, h, g)) {
                let v = fe([a, b, c, g], f, h, [al, be], [x, y]);
                if let Some(&j) = i4.get(&vec![h, x, g, y, ga]) {
                    m14[(i, j)] += v;
                }
            }
        }
    }
    let mut m45 = DMatrix::from_element(b4.len(), b5.len(), zero());
    for (i, k) in b4.iter().enumerate() {
        let (h, x, g, y, ga) = (k[0], k[1], k[2], k[3], k[4]);
        for kk in 0..r {
            for (z, si) in iproduct2(n(h, d, kk), n(a, kk, e)) {
                let v = fe([a, h, d, e], g, kk, [y, ga], [z, si]);
                if let Some(&j) = i5.get(&vec![h, x, kk, z, si]) {
                    m45[(i, j)] += v;
                }
            }
        }
    }
    let mut m53 = DMatrix::from_element(b5.len(), b3.len(), zero());
    for (i, k) in b5.iter().enumerate() {
        let (h, x, kk, z, si) = (k[0], k[1], k[2], k[3], k[4]);
        for l in 0..r {
            for (mu, rho) in iproduct2(n(c, d, l), n(b, l, kk)) {
                let v = fe([b, c, d, kk], h, l, [x, z], [mu, rho]);
                if let Some(&j) = i3.get(&vec![l, mu, kk, rho, si]) {
                    m53[(i, j)] += v;
                }
            }
        }
    }
    let lhs = &m12 * &m23;
    let rhs = &m14 * &m45 * &m53;
    max_abs(&(lhs - rhs))
}

fn iproduct2(n1: u32, n2: u32) -> impl Iterator<Item = (u32, u32)> {
    (0..n1).flat_map(move |i| (0..n2).map(move |j| (i, j)))
}

fn iproduct3(n1: u32, n2: u32, n3: u32) -> impl Iterator<Item = (u32, u32, u32)> {
    (0..n1).flat_map(move |i| (0..n2).flat_map(move |j| (0..n3).map(move |k| (i, j, k))))
}

/// Pentagon residual for every `(a, b, c, d; e)`.
pub fn verify_pentagon(spec: &FusionCategorySpec, tol: f64) -> VerificationReport {
    let r = spec.rank();
    let tuples: Vec<[Label; 5]> = (0..r.pow(5))
        .map(|mut i| {
            let mut t = [0; 5];
            for slot in t.iter_mut().rev() {
                *slot = i % r;
                i /= r;
            }
            t
        })
        .collect();
    let cases = tuples
        .par_iter()
        .filter_map(|&[a, b, c, d, e]| {
            let any = (0..r).any(|g| {
                (0..r).any(|f| spec.ring.n(a, b, f) > 0 && spec.ring.n(f, c, g) > 0 && spec.ring.n(g, d, e) > 0)
            });
            any.then(|| (spec.labels_of(&[a, b, c, d, e]), pentagon_instance(spec, a, b, c, d, e)))
        })
        .collect();
    VerificationReport::from_cases("pentagon", cases, tol)
}

/// Ring-level checks as a report: associativity and `d_x d_y = Σ_z N d_z`.
pub fn verify_dims(spec: &FusionCategorySpec, tol: f64) -> VerificationReport {
    let r = spec.rank();
    let mut cases = Vec::new();
    for x in 0..r {
        for y in 0..r {
            let lhs: f64 = (0..r).map(|z| spec.ring.n(x, y, z) as f64 * spec.d(z)).sum();
            let res = (lhs - spec.d(x) * spec.d(y)).abs();
            cases.push((spec.labels_of(&[x, y]), res));
        }
    }
    VerificationReport::from_cases("dims", cases, tol)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z2_ring() -> FusionRing {
        FusionRing::new(
            vec!["1".into(), "g".into()],
            0,
            vec![0, 1],
            &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1), (1, 1, 0, 1)],
        )
        .unwrap()
    }

    #[test]
    fn z2_ring_is_valid() {
        let ring = z2_ring();
        ring.validate().unwrap();
        let dims = compute_fp_dims(&ring).unwrap();
        assert_eq!(dims.d.len(), 2);
        assert!((dims.d[1] - 1.0).abs() < 1e-12);
        assert!((dims.global_dim - 2.0).abs() < 1e-12);
    }

    #[test]
    fn broken_associativity_is_rejected() {
        // g⊗g = g is not associative with a unit-only dual.
        let ring = FusionRing::new(
            vec!["1".into(), "g".into()],
            0,
            vec![0, 1],
            &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1), (1, 1, 1, 1)],
        )
        .unwrap();
        assert!(matches!(ring.validate(), Err(Error::Consistency { .. })));
    }

    #[test]
    fn empty_labels_rejected() {
        assert!(matches!(FusionRing::new(vec![], 0, vec![], &[]), Err(Error::Schema(_))));
    }

    #[test]
    fn fib_dimension_is_golden_ratio() {
        let ring = FusionRing::new(
            vec!["1".into(), "tau".into()],
            0,
            vec![0, 1],
            &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1), (1, 1, 0, 1), (1, 1, 1, 1)],
        )
        .unwrap();
        let dims = compute_fp_dims(&ring).unwrap();
        // root of x^2 = x + 1
        let t = dims.d[1];
        assert!((t * t - t - 1.0).abs() < 1e-12);
        assert!(t > 0.0);
    }

    #[test]
    fn missing_unit_entries_are_forced() {
        let ring = z2_ring();
        let fs = FSymbolTable::from_entries(&ring, &[]).unwrap();
        assert_eq!(fs.f(0, 1, 1, 0, 1, 0), Complex64::new(1.0, 0.0));
        assert_eq!(fs.f(1, 1, 1, 1, 0, 0), Complex64::new(0.0, 0.0));
    }
}
