//! Riordan graphs over GF(2): construction from generating functions,
//! exact independent-set counting, and executable forms of the known
//! counting formulas and bounds.

pub mod counting;
pub mod formulas;
pub mod graphs;
pub mod series;
pub mod verify;
