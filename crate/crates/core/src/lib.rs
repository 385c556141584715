//! Continuous-time quantum walks on graphs, with closed-form machinery for
//! corona products `G ∘ (H_1, ..., H_n)`.
//!
//! The crate covers:
//!
//! - [`graph`]: simple graphs, named families, adjacency and Laplacian matrices;
//! - [`corona`]: the corona construction and its block Laplacian;
//! - [`spectral`]: distinct-eigenvalue decompositions, eigenvalue supports,
//!   strong cospectrality;
//! - [`corona_spectrum`]: closed-form corona spectra and eigenprojectors;
//! - [`walk`]: `U(t) = exp(-itM)`, transition elements, fidelity curves;
//! - [`numtheory`]: perfect squares, square-free parts, support gcds;
//! - [`transfer`]: perfect state transfer certificates, no-PST witnesses for
//!   coronas, and pretty good state transfer time searches;
//! - [`experiments`]: the fixed setups reproduced by `coronawalk figures`;
//! - [`cli`]: the `coronawalk` command line front end.
//!
//! ```
//! use coronawalk::graph::{build_named, Family};
//! use coronawalk::spectral::eigendecompose;
//! use coronawalk::transfer::check_pst;
//!
//! let q3 = build_named(Family::Hypercube, 3).unwrap();
//! let d = eigendecompose(&q3.laplacian(), None).unwrap();
//! let verdict = check_pst(&d, 0, 7).unwrap();
//! assert!(verdict.pst);
//! assert!((verdict.t0.unwrap() - std::f64::consts::FRAC_PI_2).abs() < 1e-12);
//! ```

pub mod cli;
pub mod corona;
pub mod corona_spectrum;
mod error;
pub mod experiments;
pub mod graph;
pub mod numtheory;
pub mod spectral;
pub mod transfer;
pub mod walk;

pub use error::{Error, Result};
