//! IO companion to `lap2-core`: JSON formats, graph6, spectral reports and
//! the theorem verification suite.

pub mod graph6;
pub mod json;
pub mod report;
pub mod suite;
