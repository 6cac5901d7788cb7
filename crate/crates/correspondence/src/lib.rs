//! Coideal subalgebras and module factor coalgebras of a finite-dimensional Hopf algebra,
//! the maps `A ↦ H/HA⁺` and `C ↦ ᶜᵒCH` between them, dominions, and the antipode
//! identities that let one side of the correspondence be read off from the other.

mod dominion;
mod error;
mod factor;
mod generate;
mod report;
mod roundtrip;
mod subalgebra;
mod transport;

pub use dominion::{codominion_ideal, cotensor_h_h, dominion, is_dominion_factor_coalgebra, tensor_over_subalgebra};
pub use error::{CorrespondenceError, Violation};
pub use factor::{
    coinvariant_subalgebra, coinvariants, factor_by_subalgebra, left_ideal_generated, right_ideal_generated,
    FactorCoalgebra,
};
pub use generate::{enumerate_coideal_subalgebras, random_coideal_subalgebra, random_element, EXHAUSTIVE_MAX_DIM};
pub use report::{
    subspace_equality, ComoduleFlags, CorrespondenceReport, FlatnessOracle, ModuleFlags, Status, Verdict,
};
pub use roundtrip::{roundtrip_from_coalgebra, roundtrip_from_subalgebra};
pub use subalgebra::{antipode_image, check_coideal_subalgebra, generate_coideal_subalgebra, CoidealSubalgebra, Side};
pub use transport::{
    antipode_augmentation, antipode_preimage, antipode_transport_coinvariants, antipode_transport_ideal,
    membership_criterion, side_switch_algebra, side_switch_coalgebra,
};
