//! Combinatorics of ℓ-partitions for the G(ℓ,p,n) setting: parameters,
//! residues, loadings, regions, standard tableaux and their degrees,
//! dominance, the σ-action, orbit skeletons and good nodes.

mod dominance;
mod goodnodes;
mod lemmas;
mod nodes;
mod orbits;
mod params;
mod partition;
mod tableau;

pub use dominance::{dominates, dominates_tab, loadings_by_residue};
pub use lemmas::{brute_force_dominates, lemma_sweep, LemmaReport};
pub use goodnodes::{good_node, good_node_oriented, removable_residues, uglov, uglov_oriented, Orientation};
pub use nodes::{
    all_nodes, block_of, canonical_residue, eps_times, loading, q_times, red_offset, region_interval, region_of, residue, sigma_node,
    sigma_node_pow, Node, Residue,
};
pub use orbits::{
    orbit, orbit_data, orbit_rep, parts_reps, psig_skeleton, sigma_strictly_dominates, std_orbits, std_reps, tableau_orbit_size,
    PsigSkeleton, SkeletonRep,
};
pub use params::{derive_params, minimal_strict_charge, rational_string, HeckeParams};
pub use partition::{enumerate_partitions, partitions_of, Multipartition};
pub use tableau::{degree_profile, enumerate_std, tableau_degree, Tableau};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CombError {
    #[error("bad d-charge: {0}")]
    BadDCharge(String),
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("bad shape: {0}")]
    BadShape(String),
    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("tied loadings: {0}")]
    TiedLoadings(String),
}
