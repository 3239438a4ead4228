//! Exact-arithmetic analysis of nilpotent pairs in semisimple Lie algebras.

pub mod catalog;
pub mod classify;
pub mod exactla;
pub mod grading;
pub mod pairs;
pub mod parse;
pub mod render;
pub mod report;
pub mod rootsystem;
pub mod serial;
pub mod suite;
