//! Numerical engine for unitary fusion categories.
//!
//! The crate evaluates string diagrams in a fusion-tree basis, checks the
//! standard graphical-calculus identities, builds the tube algebra of an
//! object `Λ` together with the object `Δ(Λ) = ⊕ₓ x⊗Λ⊗x̄` and its unitary
//! half-braiding, and splits the tube algebra into matrix blocks to recover
//! simple objects of the Drinfeld center.
//!
//! Modules, bottom-up:
//!
//! - [`category`]: fusion rings, quantum dimensions, F-symbols, the JSON
//!   format and a builtin catalog.
//! - [`diagram`]: morphisms between tensor words, composition, tensor
//!   products, cups and caps, traces and the relation checks.
//! - [`tube`]: `Δ(Λ)`, its half-braiding, the tube algebra and the maps
//!   `f ↦ T_f`, `T ↦ f_T`.
//! - [`center`]: block decomposition, center simples, twists and reports.
//! - [`cli`]: the `tubecat` command-line front end.
//!
//! ```
//! use tubecat::category::catalog_entry;
//! use tubecat::center::center_report;
//! use tubecat::LambdaObject;
//!
//! let spec = catalog_entry("fib")?;
//! let report = center_report(spec, LambdaObject::all_simples(2), 1, 1e-9)?;
//! assert_eq!(report.rank, 4);
//! assert_eq!(report.sorted_sizes(), vec![1, 1, 1, 2]);
//! # Ok::<(), tubecat::Error>(())
//! ```

pub mod category;
pub mod center;
pub mod cli;
pub mod diagram;
mod error;
pub mod json;
mod linalg;
pub mod report;
pub mod tube;

pub use category::{FSymbolTable, FusionCategorySpec, FusionRing, Label, QuantumDimensions};
pub use center::{BlockDecomposition, CenterReport, CenterSimple};
pub use diagram::{Engine, HomSpace, Morphism, TensorWord};
pub use error::{Error, Result};
pub use report::VerificationReport;
pub use tube::{DeltaObject, LambdaObject, ObjMorphism, TubeAlgebra, TubeElement};

pub use num_complex::Complex64;
