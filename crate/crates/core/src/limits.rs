//! Configurable guards against runaway constructions and enumerations.

/// Size and enumeration caps threaded through the engine. All values are
/// hard aborts (a clear error), never silent truncation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Maximum number of objects a materialized comma category may have.
    pub max_comma_objects: usize,
    /// Maximum size of any constructed set object (colimit apexes,
    /// coproduct totals, collapsed carriers).
    pub max_set_size: usize,
    /// Maximum number of candidates a brute-force enumeration may visit.
    pub max_enumeration: u128,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_comma_objects: 10_000,
            max_set_size: 1_000_000,
            max_enumeration: 1_000_000,
        }
    }
}
