//! Linear operators `A -o B`, stored as one output vector per input basis element.

use crate::basis::Basis;
use crate::error::{Error, Result};
use crate::vector::{self, Amplitude, StateVector};

/// Names accepted by [`gate`].
pub const GATE_NAMES: [&str; 4] = ["qnot", "phase", "hadamard", "z"];

/// A linear map given by its action on basis elements: row `a` is the image of `|a>`.
///
/// Equivalently an `|A| x |B|` complex matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct LinearOp {
    input: Basis,
    output: Basis,
    entries: Vec<Amplitude>,
}

impl LinearOp {
    pub fn from_matrix(input: &Basis, output: &Basis, entries: Vec<Amplitude>) -> Result<Self> {
        let expected = input.size() * output.size();
        if entries.len() != expected {
            return Err(Error::LengthMismatch {
                expected,
                found: entries.len(),
            });
        }
        Ok(LinearOp {
            input: input.clone(),
            output: output.clone(),
            entries,
        })
    }

    /// Build from the image of every input basis element.
    pub fn from_fn<F>(input: &Basis, output: &Basis, mut f: F) -> Result<Self>
    where
        F: FnMut(usize) -> Result<StateVector>,
    {
        let mut entries = Vec::with_capacity(input.size() * output.size());
        for a in 0..input.size() {
            let row = f(a)?;
            output.expect_eq(row.basis())?;
            entries.extend_from_slice(row.amplitudes());
        }
        Ok(LinearOp {
            input: input.clone(),
            output: output.clone(),
            entries,
        })
    }

    pub fn from_rows(input: &Basis, output: &Basis, rows: Vec<StateVector>) -> Result<Self> {
        if rows.len() != input.size() {
            return Err(Error::LengthMismatch {
                expected: input.size(),
                found: rows.len(),
            });
        }
        let mut rows = rows.into_iter();
        LinearOp::from_fn(input, output, |_| Ok(rows.next().expect("length checked")))
    }

    /// `fun2lin`: the permutation-like operator sending `|a>` to `|f a>`.
    pub fn fun2lin<F>(input: &Basis, output: &Basis, f: F) -> Result<Self>
    where
        F: Fn(usize) -> usize,
    {
        LinearOp::from_fn(input, output, |a| StateVector::unit(output, f(a)))
    }

    pub fn identity(basis: &Basis) -> Self {
        LinearOp::fun2lin(basis, basis, |a| a).expect("identity stays in range")
    }

    pub fn zero(input: &Basis, output: &Basis) -> Self {
        LinearOp {
            input: input.clone(),
            output: output.clone(),
            entries: vec![Amplitude::new(0.0, 0.0); input.size() * output.size()],
        }
    }

    pub fn input(&self) -> &Basis {
        &self.input
    }

    pub fn output(&self) -> &Basis {
        &self.output
    }

    pub fn entries(&self) -> &[Amplitude] {
        &self.entries
    }

    pub fn entry(&self, a: usize, b: usize) -> Amplitude {
        self.entries[a * self.output.size() + b]
    }

    pub(crate) fn row_slice(&self, a: usize) -> &[Amplitude] {
        let n = self.output.size();
        &self.entries[a * n..(a + 1) * n]
    }

    /// Image of the `a`-th input basis element.
    pub fn row(&self, a: usize) -> StateVector {
        StateVector::from_parts(self.output.clone(), self.row_slice(a).to_vec())
    }

    /// Conjugate transpose: `adjoint f b a = conj (f a b)`.
    pub fn adjoint(&self) -> LinearOp {
        let (n, m) = (self.input.size(), self.output.size());
        let mut entries = Vec::with_capacity(n * m);
        for b in 0..m {
            entries.extend((0..n).map(|a| self.entry(a, b).conj()));
        }
        LinearOp {
            input: self.output.clone(),
            output: self.input.clone(),
            entries,
        }
    }

    /// `linplus`
    pub fn plus(&self, other: &LinearOp) -> Result<LinearOp> {
        self.input.expect_eq(&other.input)?;
        self.output.expect_eq(&other.output)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(x, y)| x + y)
            .collect();
        Ok(LinearOp {
            input: self.input.clone(),
            output: self.output.clone(),
            entries,
        })
    }

    /// `lintens`: row `(a, c)` is `f(a) <*> g(c)`.
    pub fn tensor(&self, other: &LinearOp) -> LinearOp {
        let input = Basis::pair(&self.input, &other.input);
        let output = Basis::pair(&self.output, &other.output);
        LinearOp::from_fn(&input, &output, |ac| {
            let (a, c) = (ac / other.input.size(), ac % other.input.size());
            Ok(self.row(a).tensor(&other.row(c)))
        })
        .expect("tensor rows live in the pair basis")
    }

    /// Diagrammatic composition, `self` then `next`:
    /// row `a` is `self(a) >>= next`.
    pub fn compose(&self, next: &LinearOp) -> Result<LinearOp> {
        self.output.expect_eq(&next.input)?;
        LinearOp::from_fn(&self.input, &next.output, |a| self.row(a).bind(next))
    }

    pub fn max_abs_diff(&self, other: &LinearOp) -> Result<f64> {
        self.input.expect_eq(&other.input)?;
        self.output.expect_eq(&other.output)?;
        Ok(vector::max_abs_diff(&self.entries, &other.entries))
    }

    pub(crate) fn regroup(self, input: &Basis, output: &Basis) -> Result<LinearOp> {
        input.expect_eq(&self.input)?;
        output.expect_eq(&self.output)?;
        Ok(LinearOp {
            input: input.clone(),
            output: output.clone(),
            entries: self.entries,
        })
    }
}

/// Boolean negation lifted to a linear operator.
pub fn qnot() -> LinearOp {
    let b = Basis::boolean();
    LinearOp::fun2lin(&b, &b, |x| 1 - x).expect("in range")
}

/// `diag(1, i)`
pub fn phase() -> LinearOp {
    let b = Basis::boolean();
    LinearOp::from_rows(
        &b,
        &b,
        vec![
            vector::q_false(),
            vector::q_true().scale(Amplitude::new(0.0, 1.0)),
        ],
    )
    .expect("two rows")
}

/// Rows `qFT` and `qFmT`.
pub fn hadamard() -> LinearOp {
    let b = Basis::boolean();
    LinearOp::from_rows(&b, &b, vec![vector::q_ft(), vector::q_fmt()]).expect("two rows")
}

/// Pauli-Z, `diag(1, -1)`.
pub fn pauli_z() -> LinearOp {
    let b = Basis::boolean();
    LinearOp::from_rows(
        &b,
        &b,
        vec![vector::q_false(), vector::q_true().scale((-1.0).into())],
    )
    .expect("two rows")
}

/// Single-qubit gate by name: `qnot`, `phase`, `hadamard` or `z`.
pub fn gate(name: &str) -> Result<LinearOp> {
    match name {
        "qnot" => Ok(qnot()),
        "phase" => Ok(phase()),
        "hadamard" => Ok(hadamard()),
        "z" => Ok(pauli_z()),
        _ => Err(Error::UnknownGate {
            name: name.to_string(),
            valid: GATE_NAMES.join(", "),
        }),
    }
}

/// `controlled f (b1, b2) = return b1 <*> (if b1 then f b2 else return b2)`.
pub fn controlled(f: &LinearOp) -> Result<LinearOp> {
    if f.input() != f.output() {
        return Err(Error::NotSquare {
            input: f.input().to_string(),
            output: f.output().to_string(),
        });
    }
    let b = Basis::boolean();
    let a = f.input();
    let basis = Basis::pair(&b, a);
    LinearOp::from_fn(&basis, &basis, |i| {
        let (ctrl, x) = (i / a.size(), i % a.size());
        let target = if ctrl == 1 {
            f.row(x)
        } else {
            StateVector::unit(a, x)?
        };
        Ok(StateVector::unit(&b, ctrl)?.tensor(&target))
    })
}

/// `(v >*< w) a1 a2 = v a1 * conj (w a2)`.
pub fn outer(v: &StateVector, w: &StateVector) -> Result<LinearOp> {
    v.basis().expect_eq(w.basis())?;
    let basis = v.basis();
    let mut entries = Vec::with_capacity(basis.size() * basis.size());
    for &x in v.amplitudes() {
        entries.extend(w.amplitudes().iter().map(|y| x * y.conj()));
    }
    LinearOp::from_matrix(basis, basis, entries)
}
