//! Exact Hall–Littlewood polynomials of type BC_n: the `q = 0` limit of the
//! symmetric and nonsymmetric Koornwinder polynomials, their densities, and
//! an iterated-residue constant-term engine used to check orthogonality,
//! norms and constant-term evaluations exactly over the rationals.

pub mod ct;
pub mod error;
pub mod families;
pub mod laurent;
pub mod nonsymmetric;
pub mod params;
pub mod partition;
pub mod scalar;
pub mod signed_perm;
pub mod suites;
pub mod symmetric;

pub use error::{Error, Result};
pub use laurent::{monomial_orbit_sum, LaurentPoly, PolyJson};
pub use params::{Assignments, Mode, ParamSampler, ParameterPoint};
pub use partition::{Composition, Partition};
pub use scalar::Q;
pub use signed_perm::SignedPermutation;
