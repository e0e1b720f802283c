//! Harish-Chandra parameters, formal degrees, covolumes, multiplicities and
//! the Heisenberg group of the minimal parabolic of SU(n,1).

mod heisenberg;
mod multiplicity;
mod param;
mod volume;

pub use heisenberg::{
    adjoint, heisenberg_matrix, heisenberg_mul, hermitian, mat_mul, preserves_form, s_form, HeisenbergElement,
    Matrix, QComplex,
};
pub use multiplicity::{
    error_constant, multiplicity, n2_volume_lower_bound, positivity_threshold, ErrInputs, MultiplicityResult,
    SqrtValue,
};
pub use param::{delta_k, formal_degree, k_type_dim, validate, weyl_dim, HCParam, ParamFlags};
pub use volume::{covolume, covolume_unfolded, net_disc_power, s_exponent};
