//! Amplitude vectors over a finite basis.
//!
//! `return` and `bind` give vectors their monad-like structure; `plus`,
//! `minus`, `zero` and `scale` make them a vector space. Nothing here
//! normalizes: the laws are stated over arbitrary vectors.

use std::f64::consts::FRAC_1_SQRT_2;

use num_complex::Complex64;

use crate::basis::{Basis, Element};
use crate::error::{Error, Result};
use crate::linear::LinearOp;

/// Complex probability amplitude.
pub type Amplitude = Complex64;

/// Names accepted by [`named_state`].
pub const STATE_NAMES: [&str; 8] = ["qFalse", "qTrue", "qFT", "qFmT", "epr", "p1", "p2", "p3"];

/// A total map from basis elements to amplitudes, stored densely in basis order.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    basis: Basis,
    amps: Vec<Amplitude>,
}

impl StateVector {
    pub fn new(basis: Basis, amps: Vec<Amplitude>) -> Result<Self> {
        if amps.len() != basis.size() {
            return Err(Error::LengthMismatch {
                expected: basis.size(),
                found: amps.len(),
            });
        }
        Ok(StateVector { basis, amps })
    }

    /// Build from real amplitudes.
    pub fn from_reals(basis: Basis, reals: &[f64]) -> Result<Self> {
        StateVector::new(
            basis,
            reals.iter().map(|&r| Amplitude::new(r, 0.0)).collect(),
        )
    }

    pub(crate) fn from_parts(basis: Basis, amps: Vec<Amplitude>) -> Self {
        debug_assert_eq!(amps.len(), basis.size());
        StateVector { basis, amps }
    }

    /// The zero vector (`mzero`).
    pub fn zero(basis: &Basis) -> Self {
        StateVector {
            basis: basis.clone(),
            amps: vec![Amplitude::new(0.0, 0.0); basis.size()],
        }
    }

    /// `return`: amplitude one at `index`, zero elsewhere.
    pub fn unit(basis: &Basis, index: usize) -> Result<Self> {
        basis.check_index(index)?;
        let mut v = StateVector::zero(basis);
        v.amps[index] = Amplitude::new(1.0, 0.0);
        Ok(v)
    }

    /// `return` addressed by element rather than index.
    pub fn unit_of(basis: &Basis, e: &Element) -> Result<Self> {
        StateVector::unit(basis, basis.index_of(e)?)
    }

    pub fn basis(&self) -> &Basis {
        &self.basis
    }

    pub fn amplitudes(&self) -> &[Amplitude] {
        &self.amps
    }

    pub fn into_amplitudes(self) -> Vec<Amplitude> {
        self.amps
    }

    pub fn get(&self, index: usize) -> Amplitude {
        self.amps[index]
    }

    /// Amplitude of a basis element.
    pub fn at(&self, e: &Element) -> Result<Amplitude> {
        Ok(self.amps[self.basis.index_of(e)?])
    }

    /// `v >>= f`: `result(b) = sum over a of v(a) * f(a)(b)`.
    pub fn bind(&self, f: &LinearOp) -> Result<StateVector> {
        f.input().expect_eq(&self.basis)?;
        let out = f.output();
        let mut acc = vec![Amplitude::new(0.0, 0.0); out.size()];
        for (a, &va) in self.amps.iter().enumerate() {
            if va == Amplitude::new(0.0, 0.0) {
                continue;
            }
            for (slot, &fab) in acc.iter_mut().zip(f.row_slice(a)) {
                *slot += va * fab;
            }
        }
        Ok(StateVector::from_parts(out.clone(), acc))
    }

    /// `bind` with the continuation given as a closure from input indices to
    /// vectors over `output`. Lets multi-step computations be written as a
    /// chain of nested continuations.
    pub fn bind_with<F>(&self, output: &Basis, mut f: F) -> Result<StateVector>
    where
        F: FnMut(usize) -> Result<StateVector>,
    {
        let mut acc = StateVector::zero(output);
        for (a, &va) in self.amps.iter().enumerate() {
            if va == Amplitude::new(0.0, 0.0) {
                continue;
            }
            let fa = f(a)?;
            output.expect_eq(&fa.basis)?;
            for (slot, &x) in acc.amps.iter_mut().zip(&fa.amps) {
                *slot += va * x;
            }
        }
        Ok(acc)
    }

    /// `mplus`
    pub fn plus(&self, other: &StateVector) -> Result<StateVector> {
        self.zip_with(other, |x, y| x + y)
    }

    /// `mminus`
    pub fn minus(&self, other: &StateVector) -> Result<StateVector> {
        self.zip_with(other, |x, y| x - y)
    }

    fn zip_with(
        &self,
        other: &StateVector,
        op: impl Fn(Amplitude, Amplitude) -> Amplitude,
    ) -> Result<StateVector> {
        self.basis.expect_eq(&other.basis)?;
        let amps = self
            .amps
            .iter()
            .zip(&other.amps)
            .map(|(&x, &y)| op(x, y))
            .collect();
        Ok(StateVector::from_parts(self.basis.clone(), amps))
    }

    /// `k $* v`
    pub fn scale(&self, k: Amplitude) -> StateVector {
        StateVector::from_parts(
            self.basis.clone(),
            self.amps.iter().map(|&x| k * x).collect(),
        )
    }

    /// `v <*> w` over the pair basis.
    pub fn tensor(&self, other: &StateVector) -> StateVector {
        let basis = Basis::pair(&self.basis, &other.basis);
        let mut amps = Vec::with_capacity(basis.size());
        for &x in &self.amps {
            amps.extend(other.amps.iter().map(|&y| x * y));
        }
        StateVector::from_parts(basis, amps)
    }

    /// `v <.> w`: sum of `conj(v(a)) * w(a)`.
    pub fn dot(&self, other: &StateVector) -> Result<Amplitude> {
        self.basis.expect_eq(&other.basis)?;
        Ok(self
            .amps
            .iter()
            .zip(&other.amps)
            .map(|(x, y)| x.conj() * y)
            .sum())
    }

    /// Largest entrywise modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &StateVector) -> Result<f64> {
        self.basis.expect_eq(&other.basis)?;
        Ok(max_abs_diff(&self.amps, &other.amps))
    }

    /// Same vector viewed over a different but equal (up to nesting) basis.
    pub fn regroup(self, basis: &Basis) -> Result<StateVector> {
        basis.expect_eq(&self.basis)?;
        Ok(StateVector {
            basis: basis.clone(),
            amps: self.amps,
        })
    }
}

pub(crate) fn max_abs_diff(a: &[Amplitude], b: &[Amplitude]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

/// `|False>`
pub fn q_false() -> StateVector {
    StateVector::unit(&Basis::boolean(), 0).expect("index in range")
}

/// `|True>`
pub fn q_true() -> StateVector {
    StateVector::unit(&Basis::boolean(), 1).expect("index in range")
}

/// `(|False> + |True>) / sqrt 2`
pub fn q_ft() -> StateVector {
    q_false()
        .plus(&q_true())
        .expect("same basis")
        .scale(FRAC_1_SQRT_2.into())
}

/// `(|False> - |True>) / sqrt 2`
pub fn q_fmt() -> StateVector {
    q_false()
        .minus(&q_true())
        .expect("same basis")
        .scale(FRAC_1_SQRT_2.into())
}

/// The entangled pair with amplitude `1/sqrt 2` on `(False,False)` and `(True,True)`.
pub fn epr() -> StateVector {
    let b = Basis::boolean();
    let two = Basis::pair(&b, &b);
    let mut v = StateVector::zero(&two);
    v.amps[0] = FRAC_1_SQRT_2.into();
    v.amps[3] = FRAC_1_SQRT_2.into();
    v
}

/// Look up one of the predefined vectors by name.
pub fn named_state(name: &str) -> Result<StateVector> {
    Ok(match name {
        "qFalse" => q_false(),
        "qTrue" => q_true(),
        "qFT" => q_ft(),
        "qFmT" => q_fmt(),
        "epr" => epr(),
        "p1" => q_ft().tensor(&q_false()),
        "p2" => q_false().tensor(&q_ft()),
        "p3" => q_ft().tensor(&q_ft()),
        _ => {
            return Err(Error::UnknownState {
                name: name.to_string(),
                valid: STATE_NAMES.join(", "),
            })
        }
    })
}
