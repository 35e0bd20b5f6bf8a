//! Exact combinatorics of integer partitions and Young diagrams.
//!
//! This crate provides the partition machinery shared by the rest of the
//! workspace: strict and p-strict partitions, node residues and ladders,
//! the dominance order, hook-length dimensions, James regularisation and
//! bounded enumeration. All arithmetic is exact.

mod diagram;
mod dims;
mod enumerate;
mod node;
mod partition;
mod regularize;

pub use diagram::{addable_removable_nodes, is_even_cycle_type};
pub use dims::{centralizer_order, specht_dim};
pub use enumerate::{all_partitions, odd_partitions, strict_partitions, ENUMERATION_BOUND};
pub use node::{ladder_index, residue, Node};
pub use partition::{Parity, Partition};
pub use regularize::{james_regularize, ladder_population};

use thiserror::Error;

/// Errors raised by partition operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("parts must be weakly decreasing and positive: {0:?}")]
    NotWeaklyDecreasing(Vec<u32>),
    #[error("operation requires partitions of equal size ({0} vs {1})")]
    SizeMismatch(u32, u32),
    #[error("operation requires a strict partition, got {0}")]
    NotStrict(Partition),
    #[error("enumeration bound exceeded: n = {0} > {1}")]
    BoundExceeded(u32, u32),
    #[error("cannot parse partition from {0:?}")]
    Parse(String),
}
