//! Principal q-specializations and generating functions of shifted plane
//! partitions.

pub mod gf;
pub mod special;

pub use gf::{
    bender_knuth_product, family_count, gf_closed_form, gf_enumerated, hopkins_lai_count, macmahon_bk_check,
    macmahon_product, prime_pair_check, prime_parts, qhl_product, spp_count, spp_gf, specialization_transport,
    verify_gf, verify_gf_all, GFCase, GfReport, Weight,
};
pub use special::{binom_square_sum, principal_direct, principal_special, q_at_one, Grid};
