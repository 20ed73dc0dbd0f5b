//! Runs the guide's code blocks as doc-tests.
//!
//! Each chapter of `book/` is included verbatim as the documentation of an
//! empty module, so `cargo test -p book-tests` compiles and executes every
//! Rust snippet in the book. A guide example that drifts from the library
//! fails the build instead of misleading a reader.

#[doc = include_str!("../../../book/src/ch01-overview.md")]
pub mod chapter01 {}

#[doc = include_str!("../../../book/src/ch02-exact-arithmetic.md")]
pub mod chapter02 {}

#[doc = include_str!("../../../book/src/ch03-fair-independent-sets.md")]
pub mod chapter03 {}

#[doc = include_str!("../../../book/src/ch04-fair-splits.md")]
pub mod chapter04 {}

#[doc = include_str!("../../../book/src/ch05-stable-subsets-and-colorings.md")]
pub mod chapter05 {}

#[doc = include_str!("../../../book/src/ch06-sign-vectors-and-labelings.md")]
pub mod chapter06 {}

#[doc = include_str!("../../../book/src/ch07-reduction-chain.md")]
pub mod chapter07 {}

#[doc = include_str!("../../../book/src/ch08-cli-and-formats.md")]
pub mod chapter08 {}
