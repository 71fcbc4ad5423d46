//! Test-side oracles and generators, independent of the solver paths they
//! check: strict-inequality feasibility by Fourier-Motzkin elimination,
//! exact vertex enumeration of cone cross-sections, and a deterministic
//! xorshift generator for reproducible random instances.

pub mod fm;
pub mod rng;
pub mod vertices;

pub use fm::strict_feasible;
pub use rng::XorShift;
pub use vertices::enumerate_cross_section_vertices;
