//! Exact computations with rc-graphs and Schubert polynomials.
//!
//! * [`permutation`]: finite-window permutations, reduced words.
//! * [`polynomial`]: sparse integer polynomials, divided differences and the
//!   divided-difference Schubert polynomial.
//! * [`rcgraph`]: rc-graphs, strand tracing, ladder moves, enumeration.
//! * [`pieri`]: row insertion of σ[r,m] graphs, its inverse, and the
//!   admissible expansion of `P_w · h_m(x_1, ..., x_r)`.
//! * [`verify`]: oracle checks and exhaustive sweeps.

pub mod error;
pub mod par;
pub mod permutation;
pub mod pieri;
pub mod polynomial;
pub mod rcgraph;
pub mod verify;

pub use error::{Error, Result};
pub use permutation::{Permutation, Word};
pub use polynomial::{complete_homogeneous, schubert_ddiff, MultiPoly};
pub use rcgraph::{Composition, RcGraph};

/// `P_w` as the sum of `x^D` over `RC(w)`.
pub fn schubert_rc(w: &Permutation) -> Result<MultiPoly> {
    let monomials: Vec<MultiPoly> = rcgraph::enumerate_rc(w)
        .iter()
        .map(RcGraph::monomial)
        .collect();
    MultiPoly::checked_sum(&monomials)
}
