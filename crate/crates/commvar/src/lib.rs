//! Exact computation of dimensions of commuting and mixed commuting
//! varieties inside sl3 (and the centralizer family inside sln), checked
//! three independent ways: closed-form formulas, Groebner-basis Krull
//! dimension, and finite-field point counting. Includes the induced
//! support-variety calculator for Frobenius kernels of SL3.

pub mod ring;
pub mod linalg;
pub mod groebner;
pub mod detvar;
pub mod lie;
pub mod formulas;
pub mod pointcount;
pub mod support;
pub mod report;
pub mod verify;

pub mod cli;
