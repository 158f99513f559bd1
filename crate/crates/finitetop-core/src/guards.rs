//! Size guards. Every enumeration that can blow up is capped here.

/// Default cap on stored relation pairs (`n * n`) of a materialized
/// preorder. Raise with the `*_with_pair_cap` constructors.
pub const DEFAULT_PAIR_CAP: usize = 1 << 16;

/// Ground-set bound for materializing all nonempty subsets.
pub const POWER_UNCAPPED_MAX_GROUND: usize = 16;

/// Ground-set bound when a cardinality cap `r <= POWER_MAX_CAP` is given.
pub const POWER_CAPPED_MAX_GROUND: usize = 64;

/// Largest cardinality cap accepted for the wide-ground regime.
pub const POWER_MAX_CAP: usize = 3;

/// Ground-set bound for hyperspace automorphism enumeration.
pub const AUTOMORPHISM_MAX_GROUND: usize = 8;

/// Bound on the product of stage sizes in brute-force limit enumeration.
pub const LIMIT_ENUMERATION_MAX: u128 = 1_000_000;

/// Default cap on enumerated faces of a simplicial complex.
pub const DEFAULT_MAX_FACES: usize = 1_000_000;

/// Combined simplex-count bound for the isomorphism backtracker.
pub const ISOMORPHISM_MAX_SIMPLICES: usize = 200;
/// Largest subdivided complex on which the Rips-correspondence check
/// also compares homology exactly.
pub const HOMOLOGY_CROSS_CHECK_MAX_FACES: usize = 800;

/// Simplex-count bound for chain-complex construction.
pub const CHAIN_COMPLEX_MAX_SIMPLICES: usize = 100_000;

/// Point bound for materializing epsilon-neighborhoods in the hyperspace.
pub const U_EPSILON_MAX_POINTS: usize = 14;

/// Family-size bound for nerve construction (subsets are enumerated).
pub const NERVE_MAX_FAMILY: usize = 16;

/// Space bound for enumerating closed sets in `hyperspace_of_finite_space`.
pub const OF_SPACE_MAX_POINTS: usize = 16;

/// Truncation bound for the inverse-sequence verification report.
pub const H_VERIFY_MAX_N: u32 = 12;
