pub mod characters;
pub mod error;
pub mod forms;
pub mod free_algebra;
pub mod groebner;
pub mod lcs;
pub mod linalg;
pub mod poly;
pub mod verify;

pub use characters::{bound, decompose, BoundReport, Character, Decomposition, Partition};
pub use error::{Error, Result};
pub use free_algebra::{FreeAlgebraElement, MultiDegree, Word, WordBlock};
pub use lcs::{
    b_character, build_lcs_table, build_lcs_table_with, BQuotientCharacter, LcsOptions, LcsTable,
};
pub use linalg::{rank, subspace_span, Arithmetic, GradedSubspace, Rational, SparseVector};
pub use verify::{verify_instance, verify_lemmas, CheckResult, Lemma, Status, VerificationReport};
