//! Mechanical checks of the summation identities and the Pfaffian machinery
//! behind them.

pub mod main_thm;
pub mod pfaffian;
pub mod reduction;

pub use main_thm::{
    main_lhs, main_rhs, main_schur_sides, rect_factorization_sides, schur_at, verify_main, verify_main_all,
    verify_main_schur, verify_rect_factorizations, MainIdentityCase, MainReport,
};
pub use pfaffian::{
    abar_empty_det, build_q, build_subpf_matrix, minor_summation_check, minor_summation_sides, pf_det_det_sides,
    pf_y_check, subpf_case_table, verify_pf_det_det, verify_sum_eq_pf, x_matrix, x_minor_check, PfCheckMode,
    QMatrixParams, SubPfKind, SumPfReport, sum_pf_sign,
};
pub use reduction::{reduction_transport, times_x1_at_zero, truncate_at_zero, truncate_classical, truncate_expected, ClassicalKind};
