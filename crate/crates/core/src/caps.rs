use serde::{Deserialize, Serialize};

/// Resource limits for the enumeration-heavy operations.
///
/// Every cap has a safe default sized for desk-scale inputs; callers that
/// need more (or tighter CI budgets) construct their own value.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct Caps {
    /// Largest exponent k accepted by the subset meet semilattice builder (order 2^k).
    pub subset_semilattice_max_exponent: usize,
    /// Semigroup order up to which s-ideals are found by exhaustive subset scan;
    /// larger orders switch to closure generation.
    pub s_ideal_scan_max_order: usize,
    /// Abort s-ideal closure generation once this many distinct s-ideals exist.
    pub s_ideal_max_count: usize,
    /// Largest order for exhaustive semigroup enumeration.
    pub semigroup_enum_max_order: usize,
    /// Largest vertex count accepted by the brute-force graph isomorphism check.
    pub iso_max_vertices: usize,
    /// Semiring order up to which ideals are found by exhaustive subset scan.
    pub ideal_scan_max_order: usize,
    /// Hard limit on semiring order for ideal enumeration of any kind.
    pub ideal_max_order: usize,
    /// Module order up to which submodules are found by exhaustive subset scan.
    pub submodule_scan_max_order: usize,
    /// Hard limit on module order for submodule enumeration of any kind.
    pub submodule_max_order: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            subset_semilattice_max_exponent: 10,
            s_ideal_scan_max_order: 16,
            s_ideal_max_count: 100_000,
            semigroup_enum_max_order: 5,
            iso_max_vertices: 10,
            ideal_scan_max_order: 12,
            ideal_max_order: 64,
            submodule_scan_max_order: 16,
            submodule_max_order: 256,
        }
    }
}
