use serde::{Deserialize, Serialize};

/// Size and effort caps shared by constructions, searches and checks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Limits {
    /// Largest graph a family constructor will build.
    pub max_vertices: usize,
    /// Largest degree of an attached permutation group.
    pub max_group_degree: usize,
    /// Largest index for coset tables.
    pub max_cosets: usize,
    /// Largest graph handed to the automorphism search.
    pub autgroup_vertices: usize,
    /// Largest valency for the definitional star and edge-star checks.
    pub direct_valency: usize,
    /// Largest number of candidate maps per vertex or edge pair in the
    /// definitional checks.
    pub direct_maps: u64,
    /// Cap on the local s-arc transitivity search.
    pub max_s: usize,
    /// Largest `r` accepted by the `S_{(r-1)^2}` coset construction.
    pub s_squared_max_r: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_vertices: 5000,
            max_group_degree: 5000,
            max_cosets: 10_000,
            autgroup_vertices: 2000,
            direct_valency: 8,
            direct_maps: 5_000_000,
            max_s: 9,
            s_squared_max_r: 4,
        }
    }
}
