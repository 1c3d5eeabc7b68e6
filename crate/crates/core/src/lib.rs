pub mod algebraic;
pub mod cyclo;
pub mod error;
pub mod group;
pub mod laurent;
pub mod multipoly;
pub mod oracle;
pub mod rates;
pub mod resultant;
pub mod roots;
pub mod series;
pub mod solver;
pub mod upoly;

pub use error::{Error, Result};
pub use group::GroupSpec;
pub use laurent::LaurentPoly;
pub use series::TruncatedSeries;
