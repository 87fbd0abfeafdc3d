//! Partitions, flag types, weights and tableau counts.

mod flag;
mod partition;
mod tableaux;
mod weight;

pub use flag::FlagType;
pub use partition::{bounded_partitions, enumerate_partitions, Partition};
pub use tableaux::syt_count_padded;
pub use weight::{parse_int_list, weight_grid, WeightVector};
