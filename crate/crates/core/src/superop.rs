//! Superoperators and their arrow combinators.
//!
//! A superoperator `A ~> B` assigns to every ordered pair `(a1, a2)` of input
//! basis elements a density matrix over `B`. Read as a linear operator from
//! `A x A` to `B x B`, sequencing is plain composition of linear operators and
//! applying one to a density is `bind`.
//!
//! The arrow interface is [`Superoperator::arr`], [`Superoperator::then`] and
//! [`Superoperator::first`]. Everything else (`second`, `parallel`, wire
//! permutations) is derived from those three.

use crate::basis::Basis;
use crate::density::DensityMatrix;
use crate::error::{Error, Result};
use crate::linear::LinearOp;
use crate::vector::StateVector;

#[derive(Debug, Clone, PartialEq)]
pub struct Superoperator {
    input: Basis,
    output: Basis,
    op: LinearOp,
}

/// Outcome of an extensional comparison.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Comparison {
    pub equal: bool,
    pub max_diff: f64,
}

impl Superoperator {
    /// Build block by block; `block(a1, a2)` must be a density over `output`.
    pub fn from_blocks<F>(input: &Basis, output: &Basis, mut block: F) -> Result<Self>
    where
        F: FnMut(usize, usize) -> Result<DensityMatrix>,
    {
        let n = input.size();
        let pin = Basis::pair(input, input);
        let pout = Basis::pair(output, output);
        let op = LinearOp::from_fn(&pin, &pout, |i| {
            let d = block(i / n, i % n)?;
            output.expect_eq(d.basis())?;
            Ok(d.as_vector())
        })?;
        Ok(Superoperator {
            input: input.clone(),
            output: output.clone(),
            op,
        })
    }

    /// View a linear operator on `A x A -> B x B` as a superoperator.
    pub fn from_linear(input: &Basis, output: &Basis, op: LinearOp) -> Result<Self> {
        let op = op.regroup(&Basis::pair(input, input), &Basis::pair(output, output))?;
        Ok(Superoperator {
            input: input.clone(),
            output: output.clone(),
            op,
        })
    }

    /// `lin2super f (a1, a2) = f a1 <*> dual (adjoint f) a2`.
    pub fn lift(f: &LinearOp) -> Self {
        let (input, output) = (f.input(), f.output());
        let adj = f.adjoint();
        // dual g a b = g b a
        let dual = |a: usize| {
            let amps = (0..output.size()).map(|b| adj.entry(b, a)).collect();
            StateVector::new(output.clone(), amps).expect("row length is |B|")
        };
        Superoperator::from_blocks(input, output, |a1, a2| {
            DensityMatrix::from_vector(output, f.row(a1).tensor(&dual(a2)))
        })
        .expect("blocks live over B x B")
    }

    /// `arr f = fun2lin (\(b1, b2) -> (f b1, f b2))`.
    pub fn arr<F>(input: &Basis, output: &Basis, f: F) -> Result<Self>
    where
        F: Fn(usize) -> usize,
    {
        let (n, m) = (input.size(), output.size());
        for a in 0..n {
            output.check_index(f(a))?;
        }
        let op = LinearOp::fun2lin(
            &Basis::pair(input, input),
            &Basis::pair(output, output),
            |i| f(i / n) * m + f(i % n),
        )?;
        Ok(Superoperator {
            input: input.clone(),
            output: output.clone(),
            op,
        })
    }

    pub fn identity(basis: &Basis) -> Self {
        Superoperator::arr(basis, basis, |a| a).expect("identity stays in range")
    }

    /// Arrow composition `self >>> next`.
    pub fn then(&self, next: &Superoperator) -> Result<Superoperator> {
        self.output.expect_eq(&next.input)?;
        let op = self.op.compose(&next.op)?;
        Ok(Superoperator {
            input: self.input.clone(),
            output: next.output.clone(),
            op,
        })
    }

    /// Act on the first component of `A x D`, leaving the carried `D` alone:
    /// `first f ((b1,d1),(b2,d2)) = permute (f (b1,b2) <*> return (d1,d2))`.
    pub fn first(&self, carried: &Basis) -> Superoperator {
        let (nd, nb) = (carried.size(), self.output.size());
        let input = Basis::pair(&self.input, carried);
        let output = Basis::pair(&self.output, carried);
        let dd = Basis::pair(carried, carried);
        Superoperator::from_blocks(&input, &output, |i1, i2| {
            let (a1, d1) = (i1 / nd, i1 % nd);
            let (a2, d2) = (i2 / nd, i2 % nd);
            let v = self
                .block(a1, a2)
                .as_vector()
                .tensor(&StateVector::unit(&dd, d1 * nd + d2)?);
            DensityMatrix::from_vector(&output, swap_middle(&v, &output, nb, nd))
        })
        .expect("blocks live over (B x D) x (B x D)")
    }

    /// Act on the second component of `D x A`.
    pub fn second(&self, carried: &Basis) -> Superoperator {
        let swap_in = Superoperator::permute(&Basis::pair(carried, &self.input), &[1, 0])
            .expect("swap of two factors");
        let swap_out = Superoperator::permute(&Basis::pair(&self.output, carried), &[1, 0])
            .expect("swap of two factors");
        swap_in
            .then(&self.first(carried))
            .and_then(|s| s.then(&swap_out))
            .expect("bases line up by construction")
    }

    /// `self *** other` on `A x C -> B x E`, as `first self >>> second other`.
    pub fn parallel(&self, other: &Superoperator) -> Superoperator {
        self.first(&other.input)
            .then(&other.second(&self.output))
            .expect("bases line up by construction")
    }

    /// `arr` of a positional shuffle of the top-level factors of `input`:
    /// output position `i` carries input factor `perm[i]`.
    pub fn permute(input: &Basis, perm: &[usize]) -> Result<Superoperator> {
        let factors = input.factors();
        let k = factors.len();
        let mut seen = vec![false; k];
        let bijective = perm.len() == k
            && perm
                .iter()
                .all(|&p| p < k && !std::mem::replace(&mut seen[p], true));
        if !bijective {
            return Err(Error::InvalidPermutation {
                perm: perm.to_vec(),
                arity: k,
            });
        }
        let out_factors: Vec<Basis> = perm.iter().map(|&p| factors[p].clone()).collect();
        let output = if k == 1 {
            input.clone()
        } else {
            Basis::product(&out_factors)?
        };
        Superoperator::arr(input, &output, |i| {
            let parts = input.split(i);
            let shuffled: Vec<usize> = perm.iter().map(|&p| parts[p]).collect();
            output.join(&shuffled)
        })
    }

    /// Partial trace discarding the left component of a binary product `A x B`.
    pub fn tr_l(ab: &Basis) -> Result<Superoperator> {
        let (_, right) = ab.binary_split()?;
        let nb = right.size();
        let rr = Basis::pair(&right, &right);
        Superoperator::from_blocks(ab, &right, |i1, i2| {
            let (a1, b1) = (i1 / nb, i1 % nb);
            let (a2, b2) = (i2 / nb, i2 % nb);
            if a1 == a2 {
                DensityMatrix::from_vector(&right, StateVector::unit(&rr, b1 * nb + b2)?)
            } else {
                Ok(DensityMatrix::zero(&right))
            }
        })
    }

    /// Measurement `A ~> A x A`. The output pair is (collapsed state, observed value).
    pub fn meas(basis: &Basis) -> Superoperator {
        let out = Basis::pair(basis, basis);
        let oo = Basis::pair(&out, &out);
        let n = basis.size();
        Superoperator::from_blocks(basis, &out, |a1, a2| {
            if a1 == a2 {
                let k = a1 * n + a1;
                DensityMatrix::from_vector(&out, StateVector::unit(&oo, k * out.size() + k)?)
            } else {
                Ok(DensityMatrix::zero(&out))
            }
        })
        .expect("blocks live over (A x A) x (A x A)")
    }

    pub fn input(&self) -> &Basis {
        &self.input
    }

    pub fn output(&self) -> &Basis {
        &self.output
    }

    /// The underlying linear operator `A x A -> B x B`.
    pub fn as_linear(&self) -> &LinearOp {
        &self.op
    }

    /// Image of the basis pair `(a1, a2)`.
    pub fn block(&self, a1: usize, a2: usize) -> DensityMatrix {
        let row = self.op.row(a1 * self.input.size() + a2);
        DensityMatrix::from_vector(&self.output, row).expect("rows live over B x B")
    }

    /// `d >>= self`
    pub fn apply(&self, d: &DensityMatrix) -> Result<DensityMatrix> {
        self.input.expect_eq(d.basis())?;
        let v = d.as_vector().regroup(self.op.input())?.bind(&self.op)?;
        DensityMatrix::from_vector(&self.output, v)
    }

    pub fn max_abs_diff(&self, other: &Superoperator) -> Result<f64> {
        self.input.expect_eq(&other.input)?;
        self.output.expect_eq(&other.output)?;
        Ok(crate::vector::max_abs_diff(
            self.op.entries(),
            other.op.entries(),
        ))
    }

    /// Agreement on every basis block, which by linearity is agreement on every density.
    pub fn extensional_eq(&self, other: &Superoperator, tol: f64) -> Result<Comparison> {
        let max_diff = self.max_abs_diff(other)?;
        Ok(Comparison {
            equal: max_diff <= tol,
            max_diff,
        })
    }

    /// Same superoperator with bases regrouped (equal up to nesting).
    pub fn regroup(self, input: &Basis, output: &Basis) -> Result<Superoperator> {
        Superoperator::from_linear(input, output, self.op)
    }
}

/// `((b1,b2),(d1,d2)) -> ((b1,d1),(b2,d2))` on a vector over `(B x B) x (D x D)`.
fn swap_middle(v: &StateVector, bd: &Basis, nb: usize, nd: usize) -> StateVector {
    let out_basis = Basis::pair(bd, bd);
    let mut amps = vec![Default::default(); out_basis.size()];
    for (src, &x) in v.amplitudes().iter().enumerate() {
        let (bb, dd) = (src / (nd * nd), src % (nd * nd));
        let (b1, b2, d1, d2) = (bb / nb, bb % nb, dd / nd, dd % nd);
        amps[(b1 * nd + d1) * (nb * nd) + (b2 * nd + d2)] = x;
    }
    StateVector::new(out_basis, amps).expect("same size")
}
