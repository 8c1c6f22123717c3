//! Invariants of oriented classical and virtual links built from finite
//! mc-biquandles: structures carrying one biquandle operation pair for
//! crossings between strands of the same component and a second pair for
//! crossings between different components.
//!
//! The crate is `no_std` (it needs `alloc`). It covers
//!
//! - [`algebra`]: operation tables, axiom checking, trivial extensions,
//!   Alexander mc-biquandles, endomorphisms, enumeration and isomorphism;
//! - [`diagram`]: signed Gauss codes and PD codes, semiarc tracing,
//!   crossing classes and presentations;
//! - [`coloring`]: the coloring homset and the counting invariant;
//! - [`linear`]: coloring matrices and row reduction over `Z/p`;
//! - [`quiver`]: coloring quivers, in-degree polynomials and quiver
//!   isomorphism.
#![no_std]
#![deny(unsafe_code)]

extern crate alloc;

pub mod algebra;
pub mod coloring;
pub mod diagram;
pub mod linear;
pub mod quiver;

pub use algebra::{
    AlexanderParams, AxiomReport, CrossingClass, Endomorphism, McBiquandle, Op, OperationTables,
};
pub use coloring::{count_colorings, find_colorings, Coloring, Homset};
pub use diagram::{parse_gauss, parse_pd, Crossing, LinkDiagram, SemiarcId, Sign};
pub use linear::{linear_count, ColoringMatrix};
pub use quiver::{build_quiver, quiver_isomorphic, InDegreePolynomial, Quiver};
