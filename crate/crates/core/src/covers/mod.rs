//! Artin-Schreier covers of the formal punctured disk over finite fields.
//!
//! A `Z/p`-cover is `g^p - g = f` for a Laurent series `f`; two series give the
//! same cover iff they differ by some `h^p - h`. [`reduce`] picks the normal form,
//! [`verify_jump`] recomputes the ramification jump from the valuation on the
//! cover, and [`enumerate_covers`] checks the stratum counts by brute force.

mod census;
mod count;
mod field;
mod laurent;
mod oe;
mod reduce;
mod text;

pub use census::{enumerate_covers, CensusChecks, CensusForm, CensusOptions, CensusReport, DEFAULT_LIMIT};
pub use count::{count_classes_up_to, count_extensions, count_rep_covers};
pub use field::{Fq, FqDisplay, GaloisField};
pub use laurent::{LaurentSeries, EXACT};
pub use oe::{
    default_jump_prec, jump_witness, oe_arith, oe_valuation, verify_jump, CoverRing, JumpWitness,
    OEElement, OEOp,
};
pub use reduce::{
    const_class, ramification_jump, reduce, reduce_with_witness, uniformizer_params, ASCoverClass,
    Reduction, RepPoly, UniformizerParams,
};
pub use text::parse_series;
