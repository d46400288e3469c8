//! Exact cohomology rings of symmetric squares of projective spaces.
//!
//! The crate computes, degree by degree and in exact arithmetic, the integral
//! and mod-2 cohomology of the symmetric square of a complex or quaternionic
//! projective space, together with the auxiliary spaces and maps tying those
//! rings together. Everything is organized bottom-up: polynomial arithmetic
//! (`poly`), linear algebra over F2 (`f2`) and Z (`snf`), recurrence families
//! (`fib`), graded presentations of the catalogued spaces (`presentation`),
//! ring maps and exact-sequence checks (`homs`), independent brute-force
//! recomputations (`oracle`), and the CLI surface (`expr`, `report`, `cli`,
//! `verify`).

pub mod cli;
pub mod error;
pub mod expr;
pub mod f2;
pub mod fib;
pub mod homs;
pub mod names;
pub mod oracle;
pub mod poly;
pub mod presentation;
pub mod report;
pub mod snf;
pub mod space;
pub mod verify;

pub use error::Error;
pub use space::{CoeffRing, Field, SpaceId, SpaceSpec, Trunc};
