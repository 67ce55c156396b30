//! Builtin categories.

use std::collections::{BTreeMap, HashMap};

use nalgebra::DMatrix;
use num_complex::Complex64;

use super::{FSymbolTable, FValue, FusionCategorySpec, FusionRing, Label};
use crate::error::{Error, Result};
use crate::linalg::{c, nullspace, CMat, ONE};

/// Names accepted by [`catalog_entry`], in catalog order.
pub fn catalog_names() -> &'static [&'static str] {
    &["vec", "vec_z2", "vec_z2_omega", "vec_z3", "fib", "ising", "rep_s3"]
}

pub fn builtin_catalog() -> Vec<FusionCategorySpec> {
    catalog_names()
        .iter()
        .map(|n| catalog_entry(n).expect("catalog entries are valid"))
        .collect()
}

pub fn catalog_entry(name: &str) -> Result<FusionCategorySpec> {
    match name {
        "vec" => pointed("vec", "Vec", 1, None),
        "vec_z2" => pointed("vec_z2", "Vec[Z/2], trivial ω", 2, None),
        "vec_z2_omega" => pointed("vec_z2_omega", "Vec[Z/2], ω nontrivial", 2, Some(-1.0)),
        "vec_z3" => pointed("vec_z3", "Vec[Z/3]", 3, None),
        "fib" => fibonacci(),
        "ising" => ising(),
        "rep_s3" => rep_s3(),
        other => Err(Error::Schema(format!("unknown catalog entry {other:?}"))),
    }
}

fn meta(title: &str, gauge: &str) -> BTreeMap<String, String> {
    BTreeMap::from([
        ("title".to_string(), title.to_string()),
        ("gauge".to_string(), gauge.to_string()),
    ])
}

/// Multiplicity-free spec where every admissible F entry is 1 except `overrides`.
fn multiplicity_free(
    name: &str,
    ring: FusionRing,
    overrides: &[([Label; 6], f64)],
    metadata: BTreeMap<String, String>,
) -> Result<FusionCategorySpec> {
    let r = ring.rank();
    let over: HashMap<[Label; 6], f64> = overrides.iter().copied().collect();
    let mut entries = Vec::new();
    for a in 0..r {
        for b in 0..r {
            for cc in 0..r {
                for d in 0..r {
                    for e in ring.fuse(a, b) {
                        if ring.n(e, cc, d) == 0 {
                            continue;
                        }
                        for f in ring.fuse(b, cc) {
                            if ring.n(a, f, d) == 0 {
                                continue;
                            }
                            let v = over.get(&[a, b, cc, d, e, f]).copied().unwrap_or(1.0);
                            entries.push(FValue {
                                abcd: [a, b, cc, d],
                                e,
                                f,
                                mu: [0, 0],
                                nu: [0, 0],
                                value: c(v),
                            });
                        }
                    }
                }
            }
        }
    }
    let fs = FSymbolTable::from_entries(&ring, &entries)?;
    FusionCategorySpec::new(name, ring, fs, metadata)
}

/// `Vec[Z/n]`, optionally with the nontrivial 3-cocycle on `Z/2`.
fn pointed(name: &str, title: &str, n: usize, omega: Option<f64>) -> Result<FusionCategorySpec> {
    let labels: Vec<String> = (0..n)
        .map(|k| match k {
            0 => "1".to_string(),
            1 => "g".to_string(),
            k => format!("g{k}"),
        })
        .collect();
    let dual = (0..n).map(|k| (n - k) % n).collect();
    let mut entries = Vec::new();
    for x in 0..n {
        for y in 0..n {
            entries.push((x, y, (x + y) % n, 1));
        }
    }
    let ring = FusionRing::new(labels, 0, dual, &entries)?;
    let overrides: Vec<([Label; 6], f64)> = match omega {
        Some(w) => vec![([1, 1, 1, 1, 0, 0], w)],
        None => vec![],
    };
    let gauge = if omega.is_some() {
        "F^{ggg}_g = -1, all other entries 1"
    } else {
        "all entries 1"
    };
    multiplicity_free(name, ring, &overrides, meta(title, gauge))
}

fn fibonacci() -> Result<FusionCategorySpec> {
    let ring = FusionRing::new(
        vec!["1".into(), "tau".into()],
        0,
        vec![0, 1],
        &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1), (1, 1, 0, 1), (1, 1, 1, 1)],
    )?;
    let phi = (1.0 + 5f64.sqrt()) / 2.0;
    let (a, b) = (1.0 / phi, 1.0 / phi.sqrt());
    let overrides = [
        ([1, 1, 1, 1, 0, 0], a),
        ([1, 1, 1, 1, 0, 1], b),
        ([1, 1, 1, 1, 1, 0], b),
        ([1, 1, 1, 1, 1, 1], -a),
    ];
    multiplicity_free(
        "fib",
        ring,
        &overrides,
        meta("Fibonacci", "real symmetric F^{τττ}_τ, all 1x1 entries 1"),
    )
}

fn ising() -> Result<FusionCategorySpec> {
    let (one, s, p) = (0, 1, 2);
    let ring = FusionRing::new(
        vec!["1".into(), "sigma".into(), "psi".into()],
        one,
        vec![0, 1, 2],
        &[
            (one, one, one, 1),
            (one, s, s, 1),
            (one, p, p, 1),
            (s, one, s, 1),
            (p, one, p, 1),
            (s, s, one, 1),
            (s, s, p, 1),
            (s, p, s, 1),
            (p, s, s, 1),
            (p, p, one, 1),
        ],
    )?;
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let overrides = [
        ([s, s, s, s, one, one], h),
        ([s, s, s, s, one, p], h),
        ([s, s, s, s, p, one], h),
        ([s, s, s, s, p, p], -h),
        ([s, p, s, p, s, s], -1.0),
        ([p, s, p, s, s, s], -1.0),
    ];
    multiplicity_free(
        "ising",
        ring,
        &overrides,
        meta("Ising", "Hadamard F^{σσσ}_σ, F^{σψσ}_ψ = F^{ψσψ}_σ = -1"),
    )
}

fn rotation(turns: f64) -> CMat {
    let t = 2.0 * std::f64::consts::PI * turns;
    DMatrix::from_row_slice(2, 2, &[c(t.cos()), c(-t.sin()), c(t.sin()), c(t.cos())])
}

/// `Rep(S₃)` with F-symbols computed from real orthogonal irreps.
fn rep_s3() -> Result<FusionCategorySpec> {
    let one = DMatrix::from_element(1, 1, ONE);
    let minus = DMatrix::from_element(1, 1, c(-1.0));
    let refl = DMatrix::from_row_slice(2, 2, &[ONE, c(0.0), c(0.0), c(-1.0)]);
    // generators: a transposition and a 3-cycle
    let irreps = vec![
        ("1".to_string(), vec![one.clone(), one.clone()]),
        ("sign".to_string(), vec![minus, one]),
        ("rho".to_string(), vec![refl, rotation(1.0 / 3.0)]),
    ];
    from_group("rep_s3", "Rep(S3)", irreps)
}

/// `Rep(A₄)`, which has fusion multiplicity 2 in `3 ⊗ 3`.
///
/// Not part of the builtin catalog because the diagram engine is
/// multiplicity-free; kept for exercising the general F-symbol code.
pub fn rep_a4() -> Result<FusionCategorySpec> {
    let w = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / 3.0);
    let one = DMatrix::from_element(1, 1, ONE);
    let diag = DMatrix::from_diagonal(&nalgebra::DVector::from_vec(vec![ONE, c(-1.0), c(-1.0)]));
    let cyc = DMatrix::from_row_slice(3, 3, &[c(0.0), c(0.0), ONE, ONE, c(0.0), c(0.0), c(0.0), ONE, c(0.0)]);
    let irreps = vec![
        ("1".to_string(), vec![one.clone(), one.clone()]),
        ("1p".to_string(), vec![one.clone(), DMatrix::from_element(1, 1, w)]),
        ("1pp".to_string(), vec![one, DMatrix::from_element(1, 1, w * w)]),
        ("3".to_string(), vec![diag, cyc]),
    ];
    from_group("rep_a4", "Rep(A4)", irreps)
}

/// F-symbols of `Rep(G)` from unitary irreps given on a generating set.
///
/// Intertwiners `V^{ab}_c : c → a⊗b` are orthonormal kernel vectors of the
/// intertwining equations, rescaled so that `V†V = id`. Intertwiners with a
/// trivial factor are the identity. Then
/// `F^{abc}_d[e,f] = tr(Y_f† X_e) / dim d` with `X_e = (V^{ab}_e ⊗ 1)V^{ec}_d`
/// and `Y_f = (1 ⊗ V^{bc}_f)V^{af}_d`.
pub fn from_group(name: &str, title: &str, irreps: Vec<(String, Vec<CMat>)>) -> Result<FusionCategorySpec> {
    let r = irreps.len();
    let dim: Vec<usize> = irreps.iter().map(|(_, g)| g[0].nrows()).collect();
    let gens = irreps[0].1.len();
    let mut verts: HashMap<(Label, Label, Label), Vec<CMat>> = HashMap::new();
    for a in 0..r {
        for b in 0..r {
            for cc in 0..r {
                let (da, db, dc) = (dim[a], dim[b], dim[cc]);
                let vs = if a == 0 || b == 0 {
                    if cc == if a == 0 { b } else { a } {
                        vec![CMat::identity(da * db, dc)]
                    } else {
                        vec![]
                    }
                } else {
                    let n = da * db * dc;
                    let mut eqs = CMat::zeros(gens * n, n);
                    for g in 0..gens {
                        let rab = irreps[a].1[g].kronecker(&irreps[b].1[g]);
                        let lhs = CMat::identity(dc, dc).kronecker(&rab);
                        let rhs = irreps[cc].1[g].transpose().kronecker(&CMat::identity(da * db, da * db));
                        eqs.view_mut((g * n, 0), (n, n)).copy_from(&(lhs - rhs));
                    }
                    nullspace(&eqs, 1e-10)
                        .into_iter()
                        .map(|v| CMat::from_column_slice(da * db, dc, v.as_slice()) * c((dc as f64).sqrt()))
                        .collect()
                };
                if !vs.is_empty() {
                    verts.insert((a, b, cc), vs);
                }
            }
        }
    }
    let nn = |a, b, cc| verts.get(&(a, b, cc)).map_or(0, |v| v.len() as u32);
    let mut entries = Vec::new();
    for a in 0..r {
        for b in 0..r {
            for cc in 0..r {
                let m = nn(a, b, cc);
                if m > 0 {
                    entries.push((a, b, cc, m));
                }
            }
        }
    }
    let dual = (0..r).map(|a| (0..r).find(|&b| nn(a, b, 0) > 0).unwrap_or(a)).collect();
    let labels = irreps.iter().map(|(l, _)| l.clone()).collect();
    let ring = FusionRing::new(labels, 0, dual, &entries)?;

    let mut fvals = Vec::new();
    for a in 0..r {
        for b in 0..r {
            for cc in 0..r {
                for d in 0..r {
                    let dd = dim[d] as f64;
                    for e in 0..r {
                        for (al, vab) in verts.get(&(a, b, e)).into_iter().flatten().enumerate() {
                            for (be, vec_) in verts.get(&(e, cc, d)).into_iter().flatten().enumerate() {
                                let x = vab.kronecker(&CMat::identity(dim[cc], dim[cc])) * vec_;
                                for f in 0..r {
                                    for (ga, vbc) in verts.get(&(b, cc, f)).into_iter().flatten().enumerate() {
                                        for (de, vaf) in verts.get(&(a, f, d)).into_iter().flatten().enumerate() {
                                            let y = CMat::identity(dim[a], dim[a]).kronecker(vbc) * vaf;
                                            let mut v = (y.adjoint() * &x).trace() / dd;
                                            v.re = snap(v.re);
                                            v.im = snap(v.im);
                                            if v.norm() > 0.0 {
                                                fvals.push(FValue {
                                                    abcd: [a, b, cc, d],
                                                    e,
                                                    f,
                                                    mu: [al as u32, be as u32],
                                                    nu: [ga as u32, de as u32],
                                                    value: v,
                                                });
                                            }
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    let fs = FSymbolTable::from_entries(&ring, &fvals)?;
    FusionCategorySpec::new(
        name,
        ring,
        fs,
        meta(
            title,
            "computed from explicit unitary irreps, trivial-factor intertwiners = id",
        ),
    )
}

fn snap(x: f64) -> f64 {
    if x.abs() < 1e-14 {
        0.0
    } else {
        x
    }
}
