//! Exact computation of classical invariants of Legendrian links presented by
//! contact (+1)- and (-1)-surgery diagrams, together with two cross-checking
//! layers for Legendrian Hopf links in the lens spaces L(p,1):
//!
//! * [`slopes`] counts tight minimally twisting contact structures on a
//!   thickened torus via negative continued fractions,
//! * [`atlas`] lists every Legendrian realization of the Hopf link with given
//!   Thurston-Bennequin pair, and
//! * [`families`] builds explicit surgery presentations whose computed
//!   invariants must reproduce the atlas.
//!
//! All arithmetic is exact: integers are arbitrary precision and rational
//! values are reduced fractions. There are no floating-point code paths.

pub mod atlas;
pub mod families;
pub mod linalg;
pub mod slopes;
pub mod surgery;
pub mod verify;
