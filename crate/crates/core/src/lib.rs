//! Exact computations with graded skew cellular algebras.
//!
//! The crate is organised in layers: [`exactmath`] supplies exact scalars and
//! linear algebra, [`gcomb`] the multipartition combinatorics of G(ℓ,p,n),
//! [`cellcore`] the generic cellular machinery, [`shiftfix`] fixed-point
//! subalgebras and their Clifford theory, and [`instances`] concrete algebras
//! and the on-disk format.

pub mod exactmath;
pub mod cellcore;
pub mod gcomb;
pub mod instances;
pub mod shiftfix;
