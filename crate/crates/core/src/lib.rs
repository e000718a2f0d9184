//! Exact combinatorics for symmetric group representations: partitions,
//! characters, Kronecker and Littlewood-Richardson coefficients, crystal
//! operators, ranks on elementary abelian subgroups and growth of tensor
//! products.
//!
//! The crate is `no_std` and only needs `alloc`. All arithmetic is exact.

#![no_std]

extern crate alloc;

pub mod character;
pub mod crystal;
pub mod error;
pub mod growth;
pub mod numbers;
pub mod parallel;
pub mod partition;
pub mod rank;
pub mod report;
pub mod tensor;

pub use character::{CharacterMemo, CharacterTable, ClassFunction, TableSet};
pub use error::{Error, Result};
pub use parallel::{ParallelMap, Sequential};
pub use partition::{Characteristic, Node, Partition};
pub use report::{Failure, VerificationReport, Witness};
pub use tensor::Decomposition;
