pub mod catalog;
pub mod error;
pub mod exactalg;
pub mod involut;
pub mod liecore;
pub mod repcat;
pub mod sigengine;
