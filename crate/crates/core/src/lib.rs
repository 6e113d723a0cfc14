//! Exact computations with N-complexes over fields with a distinguished
//! primitive N-th root of unity.

pub mod coeff;
pub mod error;
pub mod exactla;
pub mod gen;
pub mod homalg;
pub mod io;
pub mod ncomplex;
pub mod nhomog;
pub mod qdga;
pub mod tensor;

pub use coeff::{Field, FieldSpec, Scalar};
pub use error::{Error, Result};
pub use exactla::{Matrix, Quotient, Subspace};
