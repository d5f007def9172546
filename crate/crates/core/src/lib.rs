//! Exact Grothendieck-ring computations for `gl(m|n)`: Laurent polynomial
//! characters, weight diagrams, the canonical bilinear form and the
//! decomposition algorithms built on it.

// errors carry the offending diagrams; they are cold paths
#![allow(clippy::result_large_err)]

pub mod characters;
pub mod decompose;
pub mod diagrams;
pub mod latex;
pub mod laurent;
pub mod pairing;

pub use characters::{
    chi_gamma, euler_char, kac_char, schur, shift_t_euler, shift_t_laurent, Basis,
    CharCombination, CharError, GammaGraphParams,
};
pub use decompose::{
    euler_support, euler_support_pp, euler_to_irr, gl22_irr_char, irr_char, irr_char_euler,
    kac_constituents, p_set, proj_flag, DecomposeError,
};
pub use diagrams::{
    diagram_to_weight, eps_sign, euler_weight_to_diagram, weight_to_diagram, Diagram,
    DiagramError, Kind, Symbol, Transposition, Weight,
};
pub use laurent::{LaurentError, LaurentPoly, Monomial, Perm};
pub use pairing::{
    pair_general, pair_kac_euler, pair_kac_kac, pair_oracle, pair_proj_euler, pair_proj_kac,
    PairingError,
};
