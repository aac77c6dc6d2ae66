//! Report types and rendering shared between the binary and its tests.

pub mod report;
