//! Worked circuits: Toffoli (monadic and arrow style), teleportation, and the
//! `copy`/`weaken` operators.
//!
//! Wire orders follow the tuple patterns of each circuit: Toffoli is
//! `(top, middle, bottom)`, `alice` takes `(eprL, q)`, `bob` takes
//! `(eprR, m1, m2)` and `teleport` takes `(eprL, eprR, q)`.

use crate::basis::Basis;
use crate::density::DensityMatrix;
use crate::error::{Error, Result};
use crate::linear::{controlled, hadamard, pauli_z, phase, qnot, LinearOp};
use crate::superop::Superoperator;
use crate::vector::{self, Amplitude, StateVector};

/// Names accepted by [`lookup`].
pub const CATALOG: [&str; 2] = ["toffoli", "teleport"];

fn bool3() -> Basis {
    Basis::qubits(3).expect("three wires")
}

/// Toffoli as a chain of binds over the seven-gate decomposition
/// (H, controlled phase, cnot, controlled adjoint phase, cnot, controlled
/// phase, H), wire order `(top, middle, bottom)`.
pub fn toffoli_lin() -> LinearOp {
    let b3 = bool3();
    let had = &hadamard();
    let cnot = &controlled(&qnot()).expect("square");
    let cphase = &controlled(&phase()).expect("square");
    let caphase = &controlled(&phase().adjoint()).expect("square");
    let pair = |x: usize, y: usize| x * 2 + y;
    let out = &b3;

    LinearOp::from_fn(&b3, &b3, |i| {
        let (top, middle, bottom) = (i >> 2, (i >> 1) & 1, i & 1);
        had.row(bottom).bind_with(out, |b1| {
            cphase.row(pair(middle, b1)).bind_with(out, |mb| {
                let (m1, b2) = (mb >> 1, mb & 1);
                cnot.row(pair(top, m1)).bind_with(out, |tm| {
                    let (t1, m2) = (tm >> 1, tm & 1);
                    caphase.row(pair(m2, b2)).bind_with(out, |mb| {
                        let (m3, b3) = (mb >> 1, mb & 1);
                        cnot.row(pair(t1, m3)).bind_with(out, |tm| {
                            let (t2, m4) = (tm >> 1, tm & 1);
                            cphase.row(pair(t2, b3)).bind_with(out, |tb| {
                                let (t3, b4) = (tb >> 1, tb & 1);
                                had.row(b4).bind_with(out, |b5| {
                                    StateVector::unit(out, (t3 << 2) | (m4 << 1) | b5)
                                })
                            })
                        })
                    })
                })
            })
        })
    })
    .expect("rows live over bool^3")
}

/// Arrow over `n` boolean wires that reorders them from layout `from` to
/// layout `to`; each character names one wire.
fn shuffle(from: &str, to: &str) -> Superoperator {
    let n = from.len();
    let perm: Vec<usize> = to
        .chars()
        .map(|c| from.find(c).expect("wire present in both layouts"))
        .collect();
    Superoperator::permute(&Basis::qubits(n).expect("n >= 1"), &perm).expect("bijective layouts")
}

/// Toffoli in arrow style: every gate acts through `first` after the wires it
/// touches have been permuted to the front.
pub fn toffoli_super() -> Superoperator {
    let had = Superoperator::lift(&hadamard());
    let cnot = Superoperator::lift(&controlled(&qnot()).expect("square"));
    let cphase = Superoperator::lift(&controlled(&phase()).expect("square"));
    let caphase = Superoperator::lift(&controlled(&phase().adjoint()).expect("square"));

    // (gate, layout with the gate's operands leading)
    let steps: [(&Superoperator, &str); 7] = [
        (&had, "cab"),
        (&cphase, "bca"),
        (&cnot, "abc"),
        (&caphase, "bca"),
        (&cnot, "abc"),
        (&cphase, "acb"),
        (&had, "cab"),
    ];
    let mut layout = "abc";
    let mut acc = Superoperator::identity(&bool3());
    for (gate, next) in steps {
        let rest = Basis::qubits(3 - gate.input().arity()).expect("at least one carried wire");
        acc = acc
            .then(&shuffle(layout, next))
            .and_then(|s| s.then(&gate.first(&rest)))
            .expect("layouts line up");
        layout = next;
    }
    acc.then(&shuffle(layout, "abc")).expect("layouts line up")
}

/// `(a, b, c) -> (a, b, c xor (a and b))` on row-major indices.
pub fn toffoli_fn(i: usize) -> usize {
    let (a, b) = ((i >> 2) & 1, (i >> 1) & 1);
    i ^ (a & b)
}

/// Alice's half of teleportation on `(eprL, q)`: cnot from `q` onto `eprL`,
/// Hadamard on `q`, measure both, and keep only the two classical bits `(m1, m2)`.
pub fn alice() -> Superoperator {
    let b = Basis::boolean();
    let two = Basis::qubits(2).expect("two wires");
    let cnot = Superoperator::lift(&controlled(&qnot()).expect("square"));
    let had = Superoperator::lift(&hadamard());
    let meas = Superoperator::meas(&two);
    let discard_collapsed = Superoperator::tr_l(meas.output()).expect("meas output is a pair");
    [cnot, had.first(&b), meas, discard_collapsed]
        .iter()
        .try_fold(shuffle("lq", "ql"), |acc, s| acc.then(s))
        .expect("stages line up")
}

/// Bob's half on `(eprR, m1, m2)`: `m2` controls a not and `m1` a Z on
/// `eprR`, then the two classical bits are traced out.
pub fn bob() -> Superoperator {
    let b = Basis::boolean();
    let cnot = Superoperator::lift(&controlled(&qnot()).expect("square"));
    let cz = Superoperator::lift(&controlled(&pauli_z()).expect("square"));
    let bits = Basis::qubits(2).expect("two wires");
    let discard_bits = Superoperator::tr_l(&Basis::pair(&bits, &b)).expect("binary product");
    [
        cnot.first(&b),
        shuffle("yrx", "xry"),
        cz.first(&b),
        shuffle("xry", "xyr"),
        discard_bits,
    ]
    .iter()
    .try_fold(shuffle("rxy", "yrx"), |acc, s| acc.then(s))
    .expect("stages line up")
}

/// Teleportation on `(eprL, eprR, q)`: Alice consumes `(eprL, q)`, Bob
/// consumes `(eprR, m1, m2)` and returns the reconstructed qubit.
pub fn teleport() -> Superoperator {
    let b = Basis::boolean();
    [alice().first(&b), shuffle("xyr", "rxy"), bob()]
        .iter()
        .try_fold(shuffle("lrq", "lqr"), |acc, s| acc.then(s))
        .expect("stages line up")
}

/// Initial density for [`teleport`]: an EPR pair on `(eprL, eprR)` next to `q`.
pub fn teleport_input(q: &StateVector) -> Result<DensityMatrix> {
    Basis::boolean().expect_eq(q.basis())?;
    DensityMatrix::pure(&vector::epr().tensor(q)).regroup(&bool3())
}

/// `arr (\x -> (x, x))`: shares a value, does not clone a state.
pub fn copy() -> Superoperator {
    let b = Basis::boolean();
    Superoperator::arr(&b, &Basis::pair(&b, &b), |x| x * 2 + x).expect("in range")
}

/// `arr (\(x, y) -> y)`: forgets `x` without measuring it; not physically realizable.
pub fn weaken() -> Superoperator {
    let b = Basis::boolean();
    Superoperator::arr(&Basis::pair(&b, &b), &b, |i| i % 2).expect("in range")
}

/// A catalog circuit with its documented default input.
#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub circuit: Superoperator,
    pub input: DensityMatrix,
    pub expected: DensityMatrix,
}

/// Default teleport payload: `0.6|False> + 0.8i|True>`.
pub fn default_teleport_qubit() -> StateVector {
    StateVector::new(
        Basis::boolean(),
        vec![Amplitude::new(0.6, 0.0), Amplitude::new(0.0, 0.8)],
    )
    .expect("two amplitudes")
}

pub fn lookup(name: &str) -> Result<CatalogEntry> {
    match name {
        "toffoli" => {
            let b3 = bool3();
            Ok(CatalogEntry {
                name: "toffoli",
                circuit: toffoli_super(),
                input: DensityMatrix::pure(&StateVector::unit(&b3, 0b110)?),
                expected: DensityMatrix::pure(&StateVector::unit(&b3, 0b111)?),
            })
        }
        "teleport" => {
            let q = default_teleport_qubit();
            Ok(CatalogEntry {
                name: "teleport",
                circuit: teleport(),
                input: teleport_input(&q)?,
                expected: DensityMatrix::pure(&q),
            })
        }
        _ => Err(Error::UnknownCircuit {
            name: name.to_string(),
            valid: CATALOG.join(", "),
        }),
    }
}
