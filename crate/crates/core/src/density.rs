//! Density matrices: vectors over `A x A`, read as `|A| x |A|` matrices with
//! entry `(a1, a2)` at row `a1`, column `a2`.

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::basis::Basis;
use crate::error::{Error, Result};
use crate::linear::outer;
use crate::vector::{self, Amplitude, StateVector};

#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    basis: Basis,
    entries: Vec<Amplitude>,
}

/// Physicality report. A density can fail any of these and still be a valid
/// value of the algebra.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Diagnostics {
    pub hermitian: bool,
    pub psd: bool,
    pub unit_trace: bool,
    pub min_eigenvalue: f64,
    pub trace: Amplitude,
    pub max_violation: f64,
}

impl Diagnostics {
    pub fn is_physical(&self) -> bool {
        self.hermitian && self.psd && self.unit_trace
    }
}

/// Wire format shared with the CLI.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DensityJson {
    pub basis: Vec<String>,
    pub re: Vec<Vec<f64>>,
    pub im: Vec<Vec<f64>>,
}

impl DensityMatrix {
    pub fn new(basis: &Basis, entries: Vec<Amplitude>) -> Result<Self> {
        let expected = basis.size() * basis.size();
        if entries.len() != expected {
            return Err(Error::LengthMismatch {
                expected,
                found: entries.len(),
            });
        }
        Ok(DensityMatrix {
            basis: basis.clone(),
            entries,
        })
    }

    /// Row-major real entries.
    pub fn from_reals(basis: &Basis, reals: &[f64]) -> Result<Self> {
        DensityMatrix::new(basis, reals.iter().map(|&r| r.into()).collect())
    }

    pub fn diagonal(basis: &Basis, diag: &[f64]) -> Result<Self> {
        if diag.len() != basis.size() {
            return Err(Error::LengthMismatch {
                expected: basis.size(),
                found: diag.len(),
            });
        }
        let n = basis.size();
        let mut entries = vec![Amplitude::new(0.0, 0.0); n * n];
        for (i, &d) in diag.iter().enumerate() {
            entries[i * n + i] = d.into();
        }
        Ok(DensityMatrix {
            basis: basis.clone(),
            entries,
        })
    }

    pub fn zero(basis: &Basis) -> Self {
        DensityMatrix {
            basis: basis.clone(),
            entries: vec![Amplitude::new(0.0, 0.0); basis.size() * basis.size()],
        }
    }

    /// `pureD v = lin2vec (v >*< v)`.
    pub fn pure(v: &StateVector) -> Self {
        let op = outer(v, v).expect("same vector, same basis");
        DensityMatrix {
            basis: v.basis().clone(),
            entries: op.entries().to_vec(),
        }
    }

    /// Reinterpret a vector over `A x A` as a density over `A`.
    pub fn from_vector(basis: &Basis, v: StateVector) -> Result<Self> {
        Basis::pair(basis, basis).expect_eq(v.basis())?;
        Ok(DensityMatrix {
            basis: basis.clone(),
            entries: v.into_amplitudes(),
        })
    }

    /// The underlying vector over `A x A`.
    pub fn as_vector(&self) -> StateVector {
        StateVector::from_parts(Basis::pair(&self.basis, &self.basis), self.entries.clone())
    }

    pub fn basis(&self) -> &Basis {
        &self.basis
    }

    pub fn entries(&self) -> &[Amplitude] {
        &self.entries
    }

    pub fn get(&self, row: usize, col: usize) -> Amplitude {
        self.entries[row * self.basis.size() + col]
    }

    pub fn trace(&self) -> Amplitude {
        (0..self.basis.size()).map(|i| self.get(i, i)).sum()
    }

    pub fn max_abs_diff(&self, other: &DensityMatrix) -> Result<f64> {
        self.basis.expect_eq(&other.basis)?;
        Ok(vector::max_abs_diff(&self.entries, &other.entries))
    }

    /// Largest modulus of an off-diagonal entry.
    pub fn max_off_diagonal(&self) -> f64 {
        let n = self.basis.size();
        (0..n)
            .flat_map(|r| (0..n).filter(move |&c| c != r).map(move |c| (r, c)))
            .map(|(r, c)| self.get(r, c).norm())
            .fold(0.0, f64::max)
    }

    /// The same matrix relabelled with an equal (up to nesting) basis.
    pub fn regroup(self, basis: &Basis) -> Result<Self> {
        basis.expect_eq(&self.basis)?;
        Ok(DensityMatrix {
            basis: basis.clone(),
            entries: self.entries,
        })
    }

    pub fn diagnostics(&self, tol: f64) -> Diagnostics {
        let n = self.basis.size();
        let mut herm_dev: f64 = 0.0;
        for r in 0..n {
            for c in 0..n {
                herm_dev = herm_dev.max((self.get(r, c) - self.get(c, r).conj()).norm());
            }
        }
        // Eigenvalues of the Hermitian part; for Hermitian input that is the matrix itself.
        let m = DMatrix::from_fn(n, n, |r, c| (self.get(r, c) + self.get(c, r).conj()) * 0.5);
        let min_eigenvalue = m
            .symmetric_eigenvalues()
            .iter()
            .copied()
            .fold(f64::INFINITY, f64::min);
        let trace = self.trace();
        let trace_dev = (trace - Amplitude::new(1.0, 0.0)).norm();
        Diagnostics {
            hermitian: herm_dev <= tol,
            psd: min_eigenvalue >= -tol,
            unit_trace: trace_dev <= tol,
            min_eigenvalue,
            trace,
            max_violation: herm_dev.max(-min_eigenvalue).max(trace_dev).max(0.0),
        }
    }

    /// Serialize, rounding every component to `precision` decimals when given.
    pub fn to_json(&self, precision: Option<usize>) -> DensityJson {
        let n = self.basis.size();
        let round = |x: f64| precision.map_or(x, |p| round_to(x, p));
        let grid = |part: fn(&Amplitude) -> f64| -> Vec<Vec<f64>> {
            (0..n)
                .map(|r| (0..n).map(|c| round(part(&self.get(r, c)))).collect())
                .collect()
        };
        DensityJson {
            basis: self.basis.labels(),
            re: grid(|a| a.re),
            im: grid(|a| a.im),
        }
    }

    /// Parse the wire format back. The result lives over an atomic basis
    /// carrying the serialized labels.
    pub fn from_json(json: &DensityJson) -> Result<Self> {
        let basis = Basis::new(json.basis.iter().cloned())?;
        let n = basis.size();
        let square = |m: &Vec<Vec<f64>>| m.len() == n && m.iter().all(|row| row.len() == n);
        if !square(&json.re) || !square(&json.im) {
            return Err(Error::MalformedDensity(format!(
                "expected {n}x{n} re and im grids"
            )));
        }
        let entries = json
            .re
            .iter()
            .flatten()
            .zip(json.im.iter().flatten())
            .map(|(&re, &im)| Amplitude::new(re, im))
            .collect();
        DensityMatrix::new(&basis, entries)
    }

    /// Aligned text table with row and column labels.
    pub fn to_table(&self, precision: usize) -> String {
        let n = self.basis.size();
        let labels = self.basis.labels();
        let cells: Vec<String> = self
            .entries
            .iter()
            .map(|a| format_amplitude(*a, precision))
            .collect();
        let label_w = labels.iter().map(String::len).max().unwrap_or(0);
        let col_w = cells
            .iter()
            .chain(labels.iter())
            .map(String::len)
            .max()
            .unwrap_or(0);
        let mut out = format!("{:label_w$}", "");
        for l in &labels {
            out.push_str(&format!("  {l:>col_w$}"));
        }
        out.push('\n');
        for (r, l) in labels.iter().enumerate() {
            out.push_str(&format!("{l:<label_w$}"));
            for cell in &cells[r * n..(r + 1) * n] {
                out.push_str(&format!("  {cell:>col_w$}"));
            }
            out.push('\n');
        }
        out
    }
}

fn round_to(x: f64, decimals: usize) -> f64 {
    let scale = 10f64.powi(decimals as i32);
    let r = (x * scale).round() / scale;
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

fn format_amplitude(a: Amplitude, precision: usize) -> String {
    let (re, im) = (round_to(a.re, precision), round_to(a.im, precision));
    if im == 0.0 {
        format!("{re:.precision$}")
    } else if re == 0.0 {
        format!("{im:.precision$}i")
    } else {
        let sign = if im < 0.0 { '-' } else { '+' };
        format!("{re:.precision$}{sign}{:.precision$}i", im.abs())
    }
}
