//! Dual rings of corings, endomorphism rings, and the transported coaction on `*C`.

mod coaction;
mod dual_ring;
mod end_ring;

pub use coaction::{coaction_via, comodule_on_left_dual, smash_coaction};
pub use dual_ring::{dual_basis, left_dual, product_functional, random_lift_shifts, right_dual, DualBasisPair, DualRing, Side};
pub use end_ring::{end_ring, EndRing};
