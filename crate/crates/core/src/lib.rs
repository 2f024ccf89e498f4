#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod aqmat;
pub mod combinat;
pub mod gtmodule;
pub mod hecke;
pub mod identities;
pub mod immanant;
pub mod linalg;
pub mod qscalar;
pub mod report;
pub mod suites;
pub mod superlinear;
pub mod symfun;
