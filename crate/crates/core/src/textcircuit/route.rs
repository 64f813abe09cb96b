use std::fmt;

use super::{CircuitIr, Gate, Init, Step};
use crate::basis::Basis;
use crate::density::DensityMatrix;
use crate::error::Result;
use crate::superop::Superoperator;
use crate::vector::{self, Amplitude, StateVector};

#[derive(Debug, Clone, PartialEq)]
pub enum StageKind {
    /// Reorders live wires; `order[i]` is the wire now at position `i`.
    Permute {
        order: Vec<String>,
    },
    Gate {
        gate: Gate,
        controlled: bool,
        line: usize,
    },
    Measure {
        wire: String,
        line: usize,
    },
    Discard {
        wire: String,
        line: usize,
    },
}

impl fmt::Display for StageKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StageKind::Permute { order } => write!(f, "permute -> ({})", order.join(", ")),
            StageKind::Gate {
                gate,
                controlled,
                line,
            } => {
                let prefix = if *controlled { "c" } else { "" };
                write!(f, "line {line}: {prefix}{}", gate.name())
            }
            StageKind::Measure { wire, line } => write!(f, "line {line}: measure {wire}"),
            StageKind::Discard { wire, line } => write!(f, "line {line}: discard {wire}"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Stage {
    pub kind: StageKind,
    pub superop: Superoperator,
}

/// A routed circuit: a chain of superoperators over the live wires, each
/// wire kept in declaration order between steps.
#[derive(Debug, Clone)]
pub struct RoutedPipeline {
    pub stages: Vec<Stage>,
    pub input_wires: Vec<String>,
    pub output_wires: Vec<String>,
    input: Basis,
    output: Basis,
}

impl RoutedPipeline {
    pub fn input(&self) -> &Basis {
        &self.input
    }

    pub fn output(&self) -> &Basis {
        &self.output
    }

    /// Push `d` through every stage in turn.
    pub fn apply(&self, d: &DensityMatrix) -> Result<DensityMatrix> {
        let mut out = d.clone().regroup(&self.input)?;
        for stage in &self.stages {
            out = stage.superop.apply(&out)?;
        }
        out.regroup(&self.output)
    }

    /// The whole pipeline folded into a single superoperator.
    pub fn compose(&self) -> Result<Superoperator> {
        let folded = self
            .stages
            .iter()
            .try_fold(Superoperator::identity(&self.input), |acc, s| {
                acc.then(&s.superop)
            })?;
        folded.regroup(&self.input, &self.output)
    }
}

/// Position map that moves `front` to the head of `live`, keeping the rest in order.
fn front_permutation(live: &[usize], front: &[usize]) -> Vec<usize> {
    let pos = |w: usize| live.iter().position(|&l| l == w).expect("operand is live");
    let head: Vec<usize> = front.iter().map(|&w| pos(w)).collect();
    let tail = (0..live.len()).filter(|p| !head.contains(p));
    head.iter().copied().chain(tail).collect()
}

fn inverse(perm: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; perm.len()];
    for (i, &p) in perm.iter().enumerate() {
        inv[p] = i;
    }
    inv
}

fn is_identity(perm: &[usize]) -> bool {
    perm.iter().enumerate().all(|(i, &p)| i == p)
}

struct Router<'a> {
    names: &'a [String],
    live: Vec<usize>,
    stages: Vec<Stage>,
}

impl Router<'_> {
    fn basis(&self) -> Basis {
        Basis::qubits(self.live.len()).expect("at least one live wire")
    }

    fn push_permute(&mut self, perm: &[usize]) -> Result<()> {
        if is_identity(perm) {
            return Ok(());
        }
        let superop = Superoperator::permute(&self.basis(), perm)?;
        let order = perm
            .iter()
            .map(|&p| self.names[self.live[p]].clone())
            .collect();
        self.stages.push(Stage {
            kind: StageKind::Permute { order },
            superop,
        });
        Ok(())
    }

    /// Apply `op` to `operands` brought to the front, then restore the order.
    fn act(&mut self, operands: &[usize], op: Superoperator, kind: StageKind) -> Result<()> {
        let perm = front_permutation(&self.live, operands);
        self.push_permute(&perm)?;
        let rest = self.live.len() - operands.len();
        let superop = if rest == 0 {
            op
        } else {
            op.first(&Basis::qubits(rest)?)
        };
        self.stages.push(Stage { kind, superop });
        self.push_permute(&inverse(&perm))
    }

    fn discard(&mut self, wire: usize, line: usize) -> Result<()> {
        let perm = front_permutation(&self.live, &[wire]);
        self.push_permute(&perm)?;
        let rest = Basis::qubits(self.live.len() - 1)?;
        let superop = Superoperator::tr_l(&Basis::pair(&Basis::boolean(), &rest))?;
        let kind = StageKind::Discard {
            wire: self.names[wire].clone(),
            line,
        };
        self.stages.push(Stage { kind, superop });
        self.live.retain(|&w| w != wire);
        Ok(())
    }
}

/// Measure-and-forget on one wire: the collapsed copy is traced out and the
/// observed value stays on the wire.
fn measure_wire() -> Superoperator {
    let b = Basis::boolean();
    let m = Superoperator::meas(&b);
    let keep_observed = Superoperator::tr_l(m.output()).expect("meas output is a pair");
    m.then(&keep_observed).expect("bases line up")
}

/// Compile a parsed circuit into a superoperator pipeline.
pub fn route(ir: &CircuitIr) -> Result<RoutedPipeline> {
    let mut router = Router {
        names: &ir.wires,
        live: (0..ir.wires.len()).collect(),
        stages: Vec::new(),
    };
    let input = router.basis();
    for step in &ir.steps {
        match step {
            Step::Gate {
                gate,
                controlled,
                operands,
                line,
            } => {
                let op = Superoperator::lift(&gate.operator(*controlled));
                let kind = StageKind::Gate {
                    gate: *gate,
                    controlled: *controlled,
                    line: *line,
                };
                router.act(operands, op, kind)?;
            }
            Step::Measure { wire, line } => {
                let kind = StageKind::Measure {
                    wire: ir.wires[*wire].clone(),
                    line: *line,
                };
                router.act(&[*wire], measure_wire(), kind)?;
            }
            Step::Discard { wire, line } => router.discard(*wire, *line)?,
        }
    }
    let output = router.basis();
    let output_wires = router.live.iter().map(|&w| ir.wires[w].clone()).collect();
    Ok(RoutedPipeline {
        stages: router.stages,
        input_wires: ir.wires.clone(),
        output_wires,
        input,
        output,
    })
}

/// The pure product state described by the `init` lines; uninitialized wires
/// start in `F`. EPR pairs may join any two wires.
pub fn initial_density(ir: &CircuitIr) -> Result<DensityMatrix> {
    let n = ir.wires.len();
    let basis = Basis::qubits(n)?;
    let bit = |i: usize, w: usize| (i >> (n - 1 - w)) & 1;
    let mut covered = vec![false; n];
    let mut factors: Vec<(Vec<usize>, StateVector)> = Vec::new();
    for init in &ir.inits {
        match init {
            Init::Single { wire, state } => {
                covered[*wire] = true;
                factors.push((vec![*wire], state.vector()));
            }
            Init::Epr { left, right } => {
                covered[*left] = true;
                covered[*right] = true;
                factors.push((vec![*left, *right], vector::epr()));
            }
        }
    }
    let amps = (0..basis.size())
        .map(|i| {
            factors
                .iter()
                .fold(Amplitude::new(1.0, 0.0), |acc, (wires, v)| {
                    let local = wires.iter().fold(0, |k, &w| k * 2 + bit(i, w));
                    acc * v.get(local)
                })
                * if (0..n).any(|w| !covered[w] && bit(i, w) == 1) {
                    0.0
                } else {
                    1.0
                }
        })
        .collect();
    Ok(DensityMatrix::pure(&StateVector::new(basis, amps)?))
}
