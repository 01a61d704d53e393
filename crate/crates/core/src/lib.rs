#![no_std]
#![allow(clippy::needless_range_loop, clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;

pub mod polyalg;
pub mod automaton;
pub mod numeric;
pub mod series;
pub mod spectral;
pub mod indicatrice;
pub mod asymptotics;
pub mod catalog;
