//! Exact constructions and verification of bent and plateaued Boolean
//! functions through composite representations `F(x) = f(h_1(x), ..., h_k(x))`.
//!
//! Points of `F_2^n` are integers with `x_1` as the most significant bit;
//! see [`function`].

pub mod analysis;
pub mod anf;
pub mod class;
pub mod cli;
pub mod constructions;
pub mod dual;
pub mod error;
pub mod function;
pub mod regressions;
pub mod report;
pub mod synth;
pub mod walsh;

pub use anf::{algebraic_degree, anf_of, parse_function, Anf};
pub use class::{classify, ClassTag, SpectrumClass};
pub use dual::{bent_dual, dual, Dual};
pub use error::{Error, Result};
pub use function::{BooleanFunction, DisjointSpace, VectorialFunction, MAX_VARS};
pub use walsh::{inverse_wht, walsh_support, wht, WalshSpectrum};
