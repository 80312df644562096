pub mod beilinson;
pub mod chow;
pub mod cli;
pub mod error;
pub mod instanton;
pub mod les;
pub mod linalg;
pub mod poly;
pub mod projcoh;
pub mod reproduce;
pub mod sections;
pub mod sheafdag;
pub mod stability;

pub use error::{Error, Result};
