pub mod algebra;
pub mod certificate;
pub mod error;
pub mod filling;
pub mod ideal;
pub mod realroots;
pub mod variety;

pub use error::{Error, Result};
