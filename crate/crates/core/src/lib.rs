//! Exact computation with finite frames and pointfree real function algebras.
//!
//! Everything here is finite and rational: frames are finite distributive
//! lattices with cached Heyting tables, and real-valued "functions" on a frame
//! are pairs of piecewise-constant maps from the rationals into the frame.
//! All operations are exact; there is no floating point anywhere.

pub mod frame;
pub mod generate;
pub mod intervalfn;
pub mod io;
pub mod rat;
pub mod realfn;
pub mod riesz;
pub mod spatial;
pub mod step;
pub mod suite;

pub use frame::{Booleanization, FiniteFrame, FrameError, FrameHom};
pub use rat::{ExtRat, Rat};
pub use realfn::{FnClass, FnError, RealFn, Scale};
pub use step::{Orientation, StepMap};
