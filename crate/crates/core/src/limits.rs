/// Brute-force bounds shared by the search routines.
///
/// Every exhaustive procedure in the crate checks the relevant field before
/// starting and fails with [`Error::ResourceLimit`](crate::Error::ResourceLimit)
/// instead of running unbounded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Limits {
    /// Largest abelian group handled by automorphism enumeration and Galkin construction.
    pub max_group_order: usize,
    /// Automorphisms visited by a single enumeration before giving up.
    pub max_automorphisms: u64,
    /// Largest quandle searched for good involutions.
    pub max_involution_order: usize,
    /// Largest quandle tested against all Alexander quandles of its order.
    pub max_alexander_order: usize,
    /// Largest order for connected-quandle enumeration.
    pub max_enumeration_order: usize,
    /// Tuple-space size above which coloring counts switch to arc backtracking.
    pub max_coloring_tuples: u64,
    /// Node budget for arc-backtracking coloring counts.
    pub max_search_nodes: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_group_order: 64,
            max_automorphisms: 100_000_000,
            max_involution_order: 30,
            max_alexander_order: 27,
            max_enumeration_order: 8,
            max_coloring_tuples: 100_000_000,
            max_search_nodes: 1_000_000_000,
        }
    }
}
