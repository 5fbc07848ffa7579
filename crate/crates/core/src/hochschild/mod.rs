mod algebra;
mod compare;
mod loday;
mod oracle;

pub use algebra::*;
pub use compare::*;
pub use loday::*;
pub use oracle::*;
