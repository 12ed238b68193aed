//! Exact computations for genus one fibered knots in lens spaces.
//!
//! A closed 3-braid determines a genus one fibered knot (the lift of its
//! braid axis) in the double branched cover of its closure. This crate maps
//! braid words to monodromy matrices in SL(2,Z), enumerates the knots that
//! each lens space carries, decides GL(2,Z) conjugacy exactly, and reports
//! which integral surgeries are known to have left-orderable fundamental
//! group.
//!
//! ```
//! use gof_core::{baker, lens::LensSpace, verdict};
//!
//! let space = LensSpace::new(4, 1).unwrap();
//! let knots = baker::classify(&space).unwrap();
//! assert_eq!(knots.len(), 3);
//! let a2 = &knots[1];
//! assert_eq!(a2.trace, 6);
//! assert_eq!(verdict::all_integral_lo(a2), verdict::AllIntegral::AllLo);
//! ```

pub mod atlas;
pub mod baker;
pub mod braid3;
mod error;
pub mod lens;
pub mod mat2;
pub mod verdict;

pub use error::{Error, Result};
