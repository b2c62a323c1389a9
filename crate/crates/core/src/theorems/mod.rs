//! One verification suite per duality statement, each ending in certificates.

mod certificate;
mod report;
mod t1;
mod t2;
mod t3;
mod t4;
mod t5;
mod ulb;

pub use certificate::{product_witness, LinearIsoCertificate, MapKind, RingIsoCertificate, Witness};
pub use report::{Dimension, SuiteReport};
pub use t1::verify_t1;
pub use t2::{verify_t2, SmashDuals};
pub use t3::verify_t3;
pub use t4::verify_t4;
pub use t5::verify_t5;
pub use ulb::verify_ulb;
