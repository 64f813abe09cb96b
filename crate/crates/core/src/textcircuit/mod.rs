//! A line-oriented circuit language compiled to superoperator pipelines.
//!
//! ```text
//! # comments run to end of line
//! wires a b c
//! init a T
//! init b c epr
//! gate H a
//! cgate X a b        # control first, then target
//! measure a
//! discard b
//! ```
//!
//! The router brings each step's operand wires to the front with a
//! permutation `arr`, applies the lifted gate through `first`, and permutes
//! back. Wires that are never measured or discarded are simply left live; the
//! language does not insist that every wire be consumed.

mod cli;
mod parse;
mod route;

pub use cli::run_cli;
pub use parse::{parse_circuit, ParseError, ParseErrorKind};
pub use route::{initial_density, route, RoutedPipeline, Stage, StageKind};

use crate::linear::{controlled, hadamard, pauli_z, phase, qnot, LinearOp};
use crate::vector::{self, StateVector};

/// Gate names accepted by `gate` and `cgate`.
pub const GATES: [&str; 5] = ["H", "X", "PHASE", "APHASE", "Z"];

/// Single-wire initial states accepted by `init`.
pub const INIT_STATES: [&str; 4] = ["F", "T", "FT", "FmT"];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Gate {
    H,
    X,
    Phase,
    APhase,
    Z,
}

impl Gate {
    pub fn parse(name: &str) -> Option<Gate> {
        Some(match name {
            "H" => Gate::H,
            "X" => Gate::X,
            "PHASE" => Gate::Phase,
            "APHASE" => Gate::APhase,
            "Z" => Gate::Z,
            _ => return None,
        })
    }

    pub fn name(self) -> &'static str {
        match self {
            Gate::H => "H",
            Gate::X => "X",
            Gate::Phase => "PHASE",
            Gate::APhase => "APHASE",
            Gate::Z => "Z",
        }
    }

    pub fn linear(self) -> LinearOp {
        match self {
            Gate::H => hadamard(),
            Gate::X => qnot(),
            Gate::Phase => phase(),
            Gate::APhase => phase().adjoint(),
            Gate::Z => pauli_z(),
        }
    }

    /// The gate itself, or its controlled version when `controlled` is set.
    pub fn operator(self, is_controlled: bool) -> LinearOp {
        let g = self.linear();
        if is_controlled {
            controlled(&g).expect("single-qubit gates are square")
        } else {
            g
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InitState {
    False,
    True,
    FT,
    FmT,
}

impl InitState {
    pub fn parse(name: &str) -> Option<InitState> {
        Some(match name {
            "F" => InitState::False,
            "T" => InitState::True,
            "FT" => InitState::FT,
            "FmT" => InitState::FmT,
            _ => return None,
        })
    }

    pub fn vector(self) -> StateVector {
        match self {
            InitState::False => vector::q_false(),
            InitState::True => vector::q_true(),
            InitState::FT => vector::q_ft(),
            InitState::FmT => vector::q_fmt(),
        }
    }
}

/// An initialization directive; wires are indices into [`CircuitIr::wires`].
#[derive(Debug, Clone, PartialEq)]
pub enum Init {
    Single { wire: usize, state: InitState },
    Epr { left: usize, right: usize },
}

#[derive(Debug, Clone, PartialEq)]
pub enum Step {
    /// `operands` lists the control first for controlled gates.
    Gate {
        gate: Gate,
        controlled: bool,
        operands: Vec<usize>,
        line: usize,
    },
    Measure {
        wire: usize,
        line: usize,
    },
    Discard {
        wire: usize,
        line: usize,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub struct CircuitIr {
    pub wires: Vec<String>,
    pub inits: Vec<Init>,
    pub steps: Vec<Step>,
}

impl CircuitIr {
    /// Wires still live after every step, in declaration order.
    pub fn surviving_wires(&self) -> Vec<String> {
        let discarded: Vec<usize> = self
            .steps
            .iter()
            .filter_map(|s| match s {
                Step::Discard { wire, .. } => Some(*wire),
                _ => None,
            })
            .collect();
        self.wires
            .iter()
            .enumerate()
            .filter(|(i, _)| !discarded.contains(i))
            .map(|(_, w)| w.clone())
            .collect()
    }
}
