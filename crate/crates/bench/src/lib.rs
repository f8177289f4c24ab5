//! Fixtures shared by the benches.

use transpoly_core::Ring;

/// Fields swept by the construction benches.
pub const FIELD_SPECS: [&str; 4] = ["gf:7", "gf:2^3", "gf:13", "gf:2^5"];

pub fn ring(spec: &str) -> Ring {
    spec.parse().expect("bench ring specs are valid")
}
