//! Input formats, exhaustive generation and the batch runner.

pub mod battery;
pub mod corpus;
pub mod edgelist;
pub mod enumerate;
pub mod graph6;
