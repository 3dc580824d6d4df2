//! Exact arithmetic for Dehn fillings on torus boundaries.
//!
//! Slopes, lens spaces and the two-sided filling of T²×[0,1] are computed
//! with checked integer arithmetic. On top of that sit braid words in a solid
//! torus and a search for pairs of fillings that produce homeomorphic lens
//! spaces.

pub mod arith;
pub mod braid;
pub mod error;
pub mod filling;
pub mod lens;
pub mod search;
pub mod slope;
pub mod verify;

pub use braid::{
    is_knot, paper_example, permutation_of, type_iv_family, winding_number, BraidToken, BraidWord,
    FamilyRecord, PaperExample, Permutation,
};
pub use error::{Error, ErrorKind, Result};
pub use filling::{
    fill_two_sided, fill_with_completion, gordon_meridian, lens_from_construction, Meridian,
};
pub use lens::{
    is_amphicheiral, is_homeo, is_homotopy_equivalent, is_oriented_homeo, make_lens, mod_inverse,
    reverse, LensSpace,
};
pub use search::{
    check_report, classify_pair, evaluate_construction, heegaard_swap_pairs, scan_meridians,
    scan_type_iv, slopes_of_height, CandidateReport, Classification,
};
pub use slope::{
    apply_map, complete_to_unimodular, distance, equidistant_slopes, negate, parse_slope, Slope,
    UnimodularMap,
};
pub use verify::{verify_paper_example, Check, VerifyReport};
