//! Romik's dynamical system on the arc and its conjugate on `[0, ∞]`.

pub mod dynamics;
pub mod line;
pub mod point;
pub mod tree;
pub mod word;

pub use dynamics::{
    cylinder_boundaries, digit_of, expand_rational, prepend_word, romik_map, romik_step,
    word_product_m, word_sign, Expansion,
};
pub use line::{
    line_digits, line_step, mobius, norm_of_stream, order_exact_points, order_points,
    periodic_norm, point_from_norm, point_of_stream, stereo_norm, stereo_norm_exact,
    stream_from_norm, word_graded, word_matrix, ExtNorm,
};
pub use point::{CirclePointQ, SurdPoint};
pub use tree::{enumerate_triples, enumerate_triples_with, triples_u64};
pub use word::{vee, DigitStream, RomikWord};
