//! Exact symbolic computation in the infinitesimal Hopf algebra of planar
//! rooted forests, together with the two forest operads obtained from root
//! grafting and left-leaf grafting.
//!
//! The basis objects are planar rooted forests in their canonical bracket
//! encoding (`[combinat]`). Linear combinations over arbitrary-precision
//! integers, the concatenation product and the two grafting products live in
//! [`algebra`]; left-admissible cuts, the two coproducts and the antipodes in
//! [`coalgebra`]; the Hopf pairing and the dual basis in [`pairing`]; the
//! operad actions, compositions and the primitive suboperads in [`operad`];
//! and the forest partial order with its Möbius machinery in [`tamari`].
//!
//! Everything is exact, deterministic and pure: values are immutable, memo
//! tables are internally synchronized, and all iteration orders are canonical.

pub mod algebra;
pub mod checks;
pub mod cli;
pub mod coalgebra;
pub mod combinat;
mod error;
pub mod linalg;
pub mod operad;
pub mod pairing;
pub mod report;
pub mod tamari;

pub use algebra::{Element, Scalar, Tensor};
pub use combinat::{BinaryTree, Forest, Tree};
pub use error::{Error, Result};
