//! Cycle classes of Ekedahl-Oort strata, `p`-rank and `a`-number loci,
//! together with the mass and degree formulas they imply.

mod formulas;
mod fulton;
mod table;

pub use formulas::{
    bg_class, deuring_check, flag_degrees, h_factor, p_pow_signed, penultimate_class,
    signed_product, supersingular3_class, superspecial_mass, superspecial_mass_at, ta_class,
    vf_class, zi_class,
};
pub use fulton::{
    alternate_longest_word, fulton_class, longest_word, operator_sequence, pushforward_to_ag,
    pushforward_with_word, specialize, stratum_pushforward, top_class, Conventions, DeltaConstant,
    FultonEngine, ProductSign, WordOrder,
};
pub use table::{
    class_ratio, compare_rows, corrected_g3, g3_errata, published_g3, strata_table,
    strata_table_unchecked, PublishedRow, RowComparison, StratumClassReport,
    DEFAULT_CLASS_GENUS_LIMIT,
};

use thiserror::Error;

use crate::polyengine::PolyError;
use crate::tautring::RingError;
use crate::weyl::WeylError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CycleError {
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Weyl(#[from] WeylError),
    #[error("push-forward is not symmetric in the Chern roots")]
    NotSymmetric,
    #[error("genus {0} is out of range")]
    BadGenus(usize),
    #[error("genus mismatch: {0} vs {1}")]
    GenusMismatch(usize, usize),
    #[error("p-rank {f} must be below the genus {g}")]
    BadPRank { f: usize, g: usize },
    #[error("a-number {a} must lie in 1..={g}")]
    BadANumber { a: usize, g: usize },
    #[error("variable index {0} is out of range")]
    BadIndex(usize),
    #[error("stratum classes above genus {limit} are disabled (asked for {g})")]
    TooExpensive { g: usize, limit: usize },
    #[error("{0}")]
    Inconsistent(String),
}
