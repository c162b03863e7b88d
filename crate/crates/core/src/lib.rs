pub mod actions;
pub mod braids;
pub mod cli;
pub mod error;
pub mod homrep;
pub mod intlinalg;
pub mod presentations;
pub mod surfaces;
pub mod theorem;
pub mod words;

pub use error::{Error, Result};
