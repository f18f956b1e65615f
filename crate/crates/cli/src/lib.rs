//! Catalog, sampling, enumeration and verification suites on top of
//! `morita-core`.

pub mod catalog;
pub mod commands;
pub mod corner;
pub mod enumerate;
pub mod format;
pub mod report;
pub mod sample;
pub mod suites;
