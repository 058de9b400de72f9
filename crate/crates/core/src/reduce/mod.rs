//! Hardness reductions: 1-reproducing normalization, the `T` embeddings,
//! formula synthesis over an arbitrary base, the balanced `Tr`
//! composition, and the exponential-diameter family.

pub mod expdiam;
pub mod synth;
pub mod tr;
pub mod transform;

pub use expdiam::{expdiam_words, gen_expdiam, EXPDIAM_MAX_K};
pub use synth::{synth_bformula, SynthBudget, Synthesizer};
pub use tr::{tr_combine, tr_combine_with, TrResult};
pub use transform::{
    apply_t_relation, extra_vars, pad_bits, shift_to_one_reproducing, t_matrix, t_transform,
    t_transform_cnf, TransformInfo, Transformed,
};
