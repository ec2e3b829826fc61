//! Exact resonance combinatorics for quasi-circular weights and the algebra of
//! triangular resonant polynomial automorphisms.
//!
//! For a weight vector `m` the crate enumerates the resonance sets
//! `E_i = { alpha : m . alpha = m_i }` and the resonance order `mu`, builds
//! maps `sigma = id + g` whose nonlinear part is resonant, inverts them in
//! closed form, and studies conjugates `sigma^{-1} ∘ L ∘ sigma` of linear maps:
//! when `L` preserves the equal-weight blocks the conjugate has degree at most
//! `mu`, and otherwise it may not. All arithmetic is over `Q`.
//!
//! ```
//! use resonant_core::{conjugate, LinearMap, TriangularResonantMap, WeightVector};
//! use resonant_core::json::linear_from_json;
//!
//! let m = WeightVector::new(&[1, 2]).unwrap();
//! let sigma = TriangularResonantMap::random(&m, 0, &resonant_core::default_pool()).unwrap();
//! let shear = linear_from_json(&serde_json::json!(["1", "1", "0", "1"])).unwrap();
//! let f = conjugate(&sigma, &shear).unwrap();
//! assert_eq!(f.total_degree(), 4);
//! assert!(f.total_degree() > m.resonance_order());
//! ```

pub mod bergman;
pub mod conjugation;
pub mod error;
pub mod json;
pub mod linear;
pub mod poly;
pub mod resonant;
pub mod text;
pub mod weights;

pub use bergman::{
    admissibility_pattern, admissible_exponents, check_sigma_jacobian_structure, tensor_block_pattern,
    AdmissibilityPattern, BlockPattern, JacobianReport, JacobianViolation,
};
pub use conjugation::{
    check_theorem_instance, conjugate, find_violation, is_block_diagonal, quasi_resonance_estimate,
    random_block_diagonal_linear, random_linear, solve_conjugacy, ConjugacySolution, ConjugationReport,
    QuasiResonanceEstimate, ViolationWitness,
};
pub use error::{Error, Result};
pub use linear::LinearMap;
pub use poly::{MOrderDecomposition, PolyMap, Polynomial, Rational};
pub use resonant::{default_pool, nonlinear_resonant_monomials, TriangularResonantMap};
pub use text::{parse_poly_map, parse_polynomial};
pub use weights::{BlockPartition, MultiIndex, ResonanceProfile, WeightVector};
