//! Signed ribbon graphs, partial duality, Bollobás–Riordan type polynomials
//! with their quasi-tree expansions, and the Kauffman bracket of virtual
//! link diagrams.

pub mod duality;
pub mod edge_set;
pub mod error;
pub mod generate;
pub mod oracle;
pub mod poly;
pub mod quasitree;
pub mod ribbon;
pub mod verify;
pub mod virtual_link;

pub use edge_set::{EdgeOrder, EdgeSet};
pub use error::{Error, Result};
pub use poly::{AbstractGraph, LaurentPoly, Var};
pub use ribbon::{Arrow, GraphCounts, RibbonGraph, Sign};
