//! Exact monomial-ideal algebra for height-two Cohen-Macaulay quotients:
//! decompositions, Hilbert-Burch matrices and their minors, Betti numbers,
//! canonical traces with nearly-Gorenstein classification, and a brute-force
//! fine-graded kernel oracle that checks the trace formulas independently.

pub mod betti;
pub mod classify;
pub mod decomposition;
pub mod error;
pub mod families;
pub mod graph;
pub mod hilbert_burch;
pub mod ideal;
pub mod linalg;
pub mod matrix;
pub mod monomial;
pub mod oracle;
pub mod polarization;
pub mod ring;
pub mod trace;

pub use betti::{
    betti_numbers, cm_type, is_cohen_macaulay, is_cohen_macaulay_h2, lcm_lattice_degrees, projective_dimension,
    upper_koszul_complex, BettiTable, SimplicialComplex,
};
pub use classify::{
    classify_ng_height2, classify_ng_two_vars, verify_classification_consistency, CaseParams, ConsistencyReport,
    NGClassification, NgCase,
};
pub use decomposition::{
    height, irreducible_decomposition, is_height_unmixed, standard_primary_decomposition, IrreducibleComponent,
    PrimaryComponent, StandardPrimaryDecomposition,
};
pub use error::{Error, Result};
pub use graph::{edge_ideal, recover_data, Chordality, EdgeSequenceData, Recovery, RecoveryObstruction, SimpleGraph};
pub use hilbert_burch::{
    hb_matrix_general, hb_matrix_xy, minimal_first_syzygies, taylor_matrix, taylor_syzygies, xy_sequences, TaylorSyzygy,
};
pub use ideal::{minimalize, MonomialIdeal};
pub use matrix::{minor, minors_ideal, nonzero_minors, MinorValue, SignedMonomialEntry, SignedMonomialMatrix};
pub use monomial::Monomial;
pub use oracle::{
    c_vector, comparison_window, default_bound, entries_ideal, is_kernel_element, kernel_generators, psi_component,
    quotient_basis, quotient_dim, verify_conjecture, verify_inclusion, verify_kernel_theorem_xy, InclusionReport,
    KernelGenerator, KernelGenerators, PsiComponent, QuotientBasis, Verdict, VerificationReport, Witness,
    DEFAULT_DEGREE_CAP,
};
pub use polarization::{alexander_dual, polarize, polarize_with_copies, PolarizationMap};
pub use ring::AmbientRing;
pub use trace::{
    canonical_trace, is_generically_gorenstein, is_gorenstein_h2, is_nearly_gorenstein_h2, GenericGorenstein,
    LocalizationWitness, TraceBasis, TraceReport,
};
