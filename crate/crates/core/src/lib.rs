//! Composite group-ring matrices of order 18, binary self-dual `[36,18]`
//! codes built from them, and their lifts over `R1 = F2 + uF2`.
//!
//! Matrix code is generic over a [`scalar::Ring`]; the aliases below name
//! the two instantiations used throughout.

pub mod bitmat;
pub mod codeanalysis;
pub mod combinations;
pub mod constructions;
pub mod dense;
pub mod error;
pub mod fixtures;
pub mod groupring;
pub mod r1ring;
pub mod records;
pub mod report;
pub mod scalar;
pub mod searchlift;
pub mod verify;

pub use bitmat::BitMatrix;
pub use codeanalysis::{analyze, CodeParams, CodeType, Family};
pub use constructions::{check_selfdual_blocks, ConstructionId, FirstRows};
pub use dense::DenseMatrix;
pub use error::{Error, Result};
pub use r1ring::{R1Matrix, R1};
pub use records::{CodeRecord, RecordFile, RingKind};
pub use scalar::{Gf2, Ring};

pub type Gf2Dense = DenseMatrix<Gf2>;
pub type R1Dense = DenseMatrix<R1>;
