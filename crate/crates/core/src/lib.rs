pub mod cli;
pub mod curve;
pub mod groebner;
pub mod mono;
pub mod poly;
pub mod verify;
