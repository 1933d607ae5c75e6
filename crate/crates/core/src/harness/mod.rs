//! File format, random instances, exhaustive oracles and the CLI.

pub mod brute;
pub mod cli;
pub mod format;
pub mod generate;
pub mod report;

pub use brute::{
    brute_chromatic, brute_chromatic_by, brute_chromatic_unordered, DEFAULT_BRUTE_BOUND,
};
pub use format::{
    load_instance, load_instance_with, parse_instance, save_instance, Application, Instance,
    InstanceFile, LoadError, LoadOptions, SCHEMA,
};
pub use generate::{generate, Family, GenParams};
pub use report::{ErrorReport, RunReport, Status};
