//! Exact spectra of centralizer and co-centralizer graphs of finite
//! non-abelian groups.
//!
//! The library constructs five group families (generalized quaternion Q_{4n},
//! dihedral D_{2n}, quasidihedral QD_{2^n}, metacyclic M_{2pq} and
//! PSL(2,2^k)), builds their centralizer and co-centralizer graphs from the
//! definition by exhaustive search, computes adjacency / Laplacian /
//! signless Laplacian spectra exactly from characteristic polynomials over
//! arbitrary-precision integers, and compares that independent computation
//! against closed-form spectra, claimed clique structures, eigenvector
//! families and integrality conditions.
//!
//! Floating point appears in exactly one place (`spectrum::approx_real_roots`)
//! and is used only to annotate reports; every verification decision is an
//! exact integer computation.

pub mod closed_forms;
pub mod gf2k;
pub mod graph;
pub mod group;
pub mod matrix;
pub mod output;
pub mod poly;
pub mod spectrum;
pub mod verify;

pub use graph::{
    centralizer_graph, clique_decomposition, cocentralizer_graph, claimed_structure,
    CliqueDecomposition, Graph, GraphVariant,
};
pub use group::{build_group, ElementSubset, FiniteGroup, GroupError, GroupSpec};
pub use matrix::{IntMatrix, MatrixKind};
pub use poly::IntPolynomial;
pub use spectrum::{
    complement_laplacian_spectrum, extract_spectrum, quotient_matrix, ExactSpectrum,
    PartitionShape,
};
pub use verify::{sweep, verify_instance, VerificationReport, VerifyError, DEFAULT_BUDGET};
