//! Library half of the `bnspinor` binary: argument definitions, report
//! rendering and the verb dispatch, kept out of `main` so they are unit- and
//! integration-testable.

pub mod args;
pub mod report;
pub mod run;
