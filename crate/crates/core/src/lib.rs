//! Exact computations for birational involutions of the real projective plane
//! given by regularised surface data.

pub mod exactnum;
pub mod projline;
pub mod wittforms;
pub mod conicbundle;
pub mod realcurves;
pub mod involutions;
