//! Exact computation of homology digraphs of finite preordered spaces:
//! homology over a field enriched with a bilinear pointing relation, together
//! with machinery to verify the structural behavior of the construction
//! (functoriality, coproducts, excision, connecting morphisms, products).

pub mod bitmatrix;
pub mod complex;
pub mod digraph;
pub mod directional;
pub mod doc;
pub mod error;
pub mod exec;
pub mod field;
pub mod graded;
pub mod homology;
pub mod linalg;
pub mod matrix;
pub mod models;
pub mod report;
pub mod space;

pub use error::{Error, Result};
pub use exec::Mode;
pub use field::{Field, Gf2, GfPrime, Rationals};
