//! Exact computations with Lie superalgebras, spin modules and invariant
//! connections on homogeneous superspaces.

pub mod exactla;
pub mod liesuper;
pub mod clifford;
pub mod connection;
pub mod killing;
pub mod catalog;
pub mod pbw;
pub mod svf;
pub mod cli;
