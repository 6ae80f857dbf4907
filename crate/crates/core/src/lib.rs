//! Spectra of lifts of voltage digraphs over finite groups.
//!
//! A base digraph with arcs labelled by elements of a finite group `G`
//! determines a lift on `V × G`, where an arc `u -> v` with voltage `x`
//! becomes `(u, g) -> (v, g·x)` for every `g`. Its spectrum is the union of
//! the spectra of `ρ(B)` over the irreducible representations `ρ` of `G`,
//! where `B` is the associated matrix over the group algebra `ℤ[G]`.
//!
//! ```
//! use std::sync::Arc;
//! use voltlift::{build_builtin_group, builtin_irreps, lift_spectrum_repr, parse_voltage_digraph};
//!
//! let g = Arc::new(build_builtin_group("cyclic:4").unwrap());
//! let d = parse_voltage_digraph(
//!     r#"{"vertices":["x"],"arcs":[{"from":"x","to":"x","voltage":"g"}]}"#,
//!     g.clone(),
//! )
//! .unwrap();
//! let spectrum = lift_spectrum_repr(&d, &builtin_irreps(g).unwrap(), 1e-9).unwrap();
//! assert_eq!(spectrum.total(), 4);
//! ```

pub mod cli;
pub mod error;
pub mod group;
pub mod linalg;
pub mod random;
pub mod repr;
pub mod spectra;
pub mod voltage;

pub use error::{Error, Result};
pub use group::{build_builtin_group, conjugacy_classes, find_isomorphism, parse_group_table, GroupFamily, GroupTable};
pub use repr::{builtin_irreps, character_table, load_character_table, load_irreps, CharacterTable, Irrep, IrrepSet};
pub use spectra::{
    lift_eigenvectors, lift_spectrum, lift_spectrum_bruteforce, lift_spectrum_charsum, lift_spectrum_repr,
    roots_from_power_sums, spectra_equal, Method, PowerSums, SpectrumMultiset,
};
pub use voltage::{
    algebra_matrix_power, algebra_mul, associated_matrix, build_lift, count_walks_lift, parse_voltage_digraph,
    GroupAlgebraElement, GroupAlgebraMatrix, LiftDigraph, VoltageDigraph,
};
