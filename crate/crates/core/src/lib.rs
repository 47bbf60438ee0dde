pub mod coeffs;
pub mod free_algebra;
pub mod gkm;
pub mod lattice;
pub mod ncsf;
pub mod quiver;
pub mod seminil;
pub mod twist;
