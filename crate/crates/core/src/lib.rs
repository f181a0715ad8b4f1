//! Hull dimensions, congruence canonical forms and shortest hull embeddings
//! of linear codes over finite fields.

pub mod cli;
pub mod code;
pub mod congruence;
pub mod embedding;
pub mod error;
pub mod field;
pub mod fixtures;
pub mod io;
pub mod matrix;

pub use code::{
    classify, hull_basis, hull_dimension, hull_first_generator, minimum_distance, CodeType, CodeTypeTag,
    LinearCode, DEFAULT_MAX_ENUM,
};
pub use congruence::{
    canonize, canonize_char2, diagonalize_hermitian, diagonalize_symmetric_odd, CanonicalForm, CongruenceWitness,
};
pub use embedding::{
    append_manual, build_pr, embed, embed_euclidean_even, embed_euclidean_odd, embed_hermitian, existence_pad,
    shortest_length, verify_embedding, EmbeddingResult, LengthRule, LengthVerdict, VerificationReport,
};
pub use error::{Error, Result};
pub use field::{Elem, Field};
pub use matrix::{InnerKind, Matrix};
