//! Partitions, tableaux and shifted plane partitions.

pub mod partition;
pub mod spp;
pub mod tableau;

pub use partition::{
    frobenius, from_index_set, hook, index_set, parse_doubled_parts, shape_family, Family, FrobeniusCoords,
    HalfPartition, Partition, StrictPartition,
};
pub use spp::{enumerate_spp, for_each_spp, spp_statistics, spp_to_tableau, tableau_to_spp, ProfileFilter, ShiftedPlanePartition, SppStats};
pub use tableau::{enumerate_tableaux, for_each_tableau, IntSympTableau, Letter};
