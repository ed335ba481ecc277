//! Folding of Kac–Moody algebras along Dynkin-diagram automorphisms, twining
//! characters, affine modular data and fixed-point resolution for diagonal
//! coset theories — all in exact arithmetic.

pub mod acceptance;
pub mod affine;
pub mod cartan;
pub mod catalog;
pub mod coset;
pub mod characters;
pub mod cyclotomic;
pub mod error;
pub mod field;
pub mod fold;
pub mod linalg;
pub mod qseries;
pub mod twining;
pub mod weyl;

pub use cartan::{classify, validate_cartan, weight_inner_product, CartanMatrix, Kind, WeightCoords};
pub use cyclotomic::Cyclotomic;
pub use error::{Error, Result};
pub use field::Rational;
pub use qseries::QSeries;
