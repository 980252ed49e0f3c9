//! Command-line companion to the `siggb` core: ideal file parsing and
//! rendering, built-in benchmark systems, and the run driver that turns a
//! resolved configuration into a printable run record.

pub mod bench;
pub mod driver;
pub mod ideal_file;
