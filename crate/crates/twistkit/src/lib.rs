//! twistkit: exact verification of a family of Dehn twist relations.
//!
//! The toolkit machine-checks, in exact integer arithmetic and without any
//! floating point or sampling:
//!
//! * word identities in the braid group on `2g+2` strands, via the faithful
//!   action on a free group ([`artin`]);
//! * the induced relations between Dehn twists on the homology of a closed
//!   genus-`g` surface, via symplectic transvection matrices ([`homology`]);
//! * first homology of the Lefschetz fibrations carrying those relations as
//!   global monodromy, via Smith normal form ([`fp_group`]);
//! * their Euler characteristics, signatures, and Betti numbers
//!   ([`invariants`]).
//!
//! Everything is parameterized by the genus `g` and, where relevant, the
//! twist multiplicity `n`. See the crate examples for one runnable program
//! per capability and [`verify`] for the claim-level checking used by the
//! `twistkit` binary.

pub mod artin;
pub mod braid;
pub mod fp_group;
pub mod homology;
pub mod intmat;
pub mod invariants;
pub mod verify;
pub mod word;
