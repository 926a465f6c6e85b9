pub mod cidecide;
pub mod cli;
pub mod error;
pub mod field;
pub mod groebner;
pub mod groupmat;
pub mod koszul;
pub mod linalg;
pub mod polyring;

pub use error::{Error, Result};
