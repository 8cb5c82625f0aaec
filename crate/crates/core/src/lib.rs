pub mod construct;
pub mod design;
pub mod error;
pub mod exact;
pub mod harmonic;
pub mod interval;
pub mod io;
pub mod orthopoly;
pub mod poly;
