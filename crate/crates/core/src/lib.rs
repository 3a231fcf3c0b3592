pub mod dynamics;
pub mod error;
pub mod linalg;
pub mod model;
pub mod quantifiers;
pub mod states;
pub mod sweep;
pub mod tolerances;
pub mod validate;

pub use error::{Error, Result};
