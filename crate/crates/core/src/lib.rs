//! Exact characteristic polynomials of graphs with loops.
//!
//! A loop at vertex `v` puts a 1 on the diagonal of the adjacency matrix.
//! The crate computes `φ(G) = det(xI - A(G))` over the integers by several
//! unrelated routes so that each can check the others:
//!
//! * [`sachs`]: sums over basic figures (edges, cycles and loops);
//! * [`deletion`]: loop-expansion, vertex-deletion and loop-removal identities;
//! * [`oracle`]: Faddeev–LeVerrier and Bareiss interpolation on the matrix.
//!
//! [`cayley`] applies them to unitary addition Cayley graphs and their
//! anti-circulant companions, and [`cli`] is the command-line front end.

pub mod cayley;
pub mod cli;
pub mod deletion;
pub mod error;
pub mod graph;
pub mod named;
pub mod oracle;
pub mod poly;
pub mod sachs;

pub use deletion::{CharpolyEngine, LeafMethod};
pub use error::{Error, Result};
pub use graph::{GraphBuilder, LabelMap, Pseudograph, VertexSet};
pub use poly::{Degree, IntPolynomial};
pub use sachs::{BasicFigure, Cycle};
