pub mod characters;
pub mod cubic;
pub mod cyclotomic;
pub mod eisenstein;
pub mod error;
pub mod field;
pub mod gaussian;
pub mod integers;
pub mod literal;
pub mod poly;
pub mod sweep;

pub use error::{Error, Result};
