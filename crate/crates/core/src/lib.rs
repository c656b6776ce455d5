//! Symbolic kernels for higher distributivity and the mod-2 Steenrod
//! algebra.
//!
//! The library has two halves that meet in the test suites:
//!
//! * [`cube`] and [`face`] implement the cubical combinatorics of
//!   distributivity: cells of the n-cube as codes over `{0, 1, I}`, the
//!   face formula assigning a distributor expression to every cell, the
//!   obstruction table over all proper faces, and exhaustive machine checks
//!   that syntactic boundary restriction agrees with recomputation and that
//!   every label collapses to `a*x_k` on the wedge.
//! * [`steenrod`] and [`derivation`] implement the mod-2 Steenrod algebra
//!   on the admissible basis with Adem straightening, plus
//!   generator-defined derivations: Leibniz extension, well-definedness
//!   against the Adem relations, the Kristensen derivation
//!   `kappa(Sq^m) = Sq^{m-1}`, and its composite square.
//!
//! [`tikz`] renders labeled cubes for n <= 3, and [`report`] carries the
//! sweep outcomes. The `distlab` binary in the companion CLI crate exposes
//! all of it on the command line.

pub mod cube;
pub mod derivation;
pub mod face;
pub mod report;
pub mod steenrod;
pub mod tikz;

pub use cube::{enumerate_codes, proper_codes, Bit, Code, CubeError, Entry};
pub use derivation::{
    compose, extend_leibniz, kappa_squared_on_generators, kristensen_kappa, leibniz_word,
    parse_derivation_table, verify_derivation_property, verify_well_defined, ComposedMap,
    DerivationError, GeneratorDerivation, PairCounterexample, RelationCounterexample, TableError,
    TailRule,
};
pub use face::{
    check_face_compatibility, check_restriction_commutes, check_single_restrictions,
    check_wedge_collapse, face_label, obstruction_map, partition_blocks, restrict_label,
    wedge_collapse, CompatCounterexample, DistributorTerm, FaceLabel, IntervalSum, LabelError,
    ObstructionTable, WedgeCounterexample, WedgeValue,
};
pub use report::VerificationReport;
pub use steenrod::{
    adem_expand, admissible_basis, normalize, normalize_with, odd_binomial, parse_element,
    parse_words, Element, Monomial, ParseError, RewriteStrategy, SteenrodError,
};
pub use tikz::{render_tikz, TikzError};
