//! Combinatorics, seminormal forms and alcove geometry for calibrated Hecke modules.
//!
//! The crate is organised bottom-up:
//!
//! - [`multipartition`]: charges, boxes, tableaux, residues, degrees, dominance
//! - [`cyclotomic`]: exact arithmetic in `Q(zeta_e)` and sparse matrices over it
//! - [`crystal`]: the `sl_e`-crystal on charged multipartitions
//! - [`cali`]: border multisets, FLOTW and calibrated multipartitions, splittings
//! - [`seminormal`]: seminormal modules, Hecke relations, invariant forms
//! - [`alcove`]: the shifted affine Weyl geometry on `E_h`
//! - [`bgg`]: block posets, diamonds, sign systems, character identities, KLR action
//! - [`level1`]: level-one unitary loci
//! - [`sweeps`]: bounded exhaustive checks against independent oracles

pub mod alcove;
pub mod bgg;
pub mod cali;
pub mod crystal;
pub mod cyclotomic;
pub mod error;
pub mod level1;
pub mod multipartition;
pub mod seminormal;
pub mod sweeps;

pub use error::{Error, Result};
pub use multipartition::{Charge, Multipartition, Node, Tableau};
