//! Library surface of the command-line front end: the presentation grammar
//! parser and the result envelope, shared with the integration tests.

pub mod output;
pub mod parser;
