//! The running example database used throughout tests and examples.

use crate::dataset::Database;

/// Six attributes `A..F`, five objects `1..5`.
pub const EXAMPLE_DB: &str = include_str!("../data/example.db");

pub fn example_db() -> Database {
    Database::parse(EXAMPLE_DB).expect("bundled example parses")
}
