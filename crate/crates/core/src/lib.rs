//! Restricted non-deterministic matrix semantics as executable decision
//! procedures.
//!
//! The crate provides formula syntax ([`formula`]), finite multialgebras and
//! restriction rules ([`algebra`]), powerset Boolean algebras ([`boolean`]),
//! snapshot swap structures for the da Costa hierarchy ([`snapshots`]), a
//! catalog of ready-made logics ([`logics`]), a row-branching row-eliminating
//! truth-table engine ([`truthtable`]), labeled tableau calculi
//! ([`tableau`]), the LFI to incompatibility translation ([`translate`]), and
//! finite metatheory witnesses ([`metacheck`]). [`cli`] wraps everything in a
//! command-line front end.

pub mod algebra;
pub mod boolean;
pub mod cli;
pub mod error;
pub mod formula;
pub mod logics;
pub mod metacheck;
pub mod snapshots;
pub mod tableau;
pub mod translate;
pub mod truthtable;

pub use error::{Error, Result};
pub use formula::{parse, render, Conn, Formula, Signature};
pub use logics::{get_logic, list_logics, LogicSpec};
