//! Incremental computation of the lexicographic escalier of the vanishing
//! ideal of a finite set of points, together with squarefree separators and
//! multiplication matrices, all extended one point at a time.
//!
//! Works over exact rationals or a prime field. Needs only `alloc`.

#![no_std]

extern crate alloc;

pub mod barcode;
pub mod error;
pub mod lexgame;
pub mod matrix;
pub mod monomial;
pub mod mulmat;
pub mod oracle;
pub mod poly;
pub mod scalar;
pub mod separators;
pub mod session;
pub mod trie;

pub use barcode::{Bar, BarCode, EList};
pub use error::{Error, Result};
pub use lexgame::{EscalierTable, LexGame, StepTrace};
pub use matrix::Matrix;
pub use monomial::Term;
pub use mulmat::MulState;
pub use poly::Poly;
pub use scalar::{FieldSpec, Scalar};
pub use separators::{LinearFactor, Separator, SeparatorFamily};
pub use session::Session;
pub use trie::{Candidates, NodeId, Point, PointTrie};
