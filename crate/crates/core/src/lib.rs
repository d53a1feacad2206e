//! Border sequences of partitions, k-quotients, rim hook tableaux and the
//! Murnaghan-Nakayama rule, with an exact evaluation of Kostant's
//! coefficients in the expansion of `φ(x)^{k²-1}`.

pub mod characters;
pub mod cli;
pub mod error;
pub mod kostant;
pub mod partition;
pub mod quotient;
pub mod rimhook;
pub mod series;

pub use characters::{
    char_rectangular, count_ribbon_tableaux, dimension, littlewood_reduce, mn_character, z_value,
    CharacterValue, CycleType, MnEvaluator,
};
pub use error::{Error, Result};
pub use kostant::{
    c_exponent, direct_series, enumerate_weights, epsilon_bruteforce, epsilon_closed,
    epsilon_theorem, kostant_series, term_table, weyl_dim, DominantWeight, KostantTerm,
};
pub use partition::{
    partitions_bounded, partitions_of, BorderSequence, FrobeniusCoordinates, Partition,
};
pub use quotient::{has_empty_core, k_core, k_quotient, reconstruct, QuotientDecomposition};
pub use rimhook::{
    apply_removals, enumerate_rht, hook_removals, lambda_permutation, lambda_sign, omega_decompose,
    omega_fiber_size, omega_image_space, remove_hook, split_long_hook, tableau_height, type_splits,
    zero_permutation, zero_word, HookRemoval, Permutation, RimHookTableau, SplitHook,
};
pub use series::{phi, phi_by_product, PowerSeries};
