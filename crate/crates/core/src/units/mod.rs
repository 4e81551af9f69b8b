//! Invertible decorations: symmetric groups, rotation groups and braid groups.

pub mod braid;
pub mod perm;

pub use braid::{lift, BraidNormalForm, BraidWord};
pub use perm::{Permutation, Rotation};
