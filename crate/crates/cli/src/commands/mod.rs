pub mod coeffs;
pub mod integrate;
pub mod tables;
pub mod verify;
