//! Reference computations written against plain column-vector matrices.
//! Nothing here calls into the library's algebra; results are compared
//! against it entry by entry.
#![allow(dead_code, clippy::needless_range_loop)]

use num_complex::Complex64 as C;
use qarrow::{DensityMatrix, LinearOp, Superoperator};

pub type Mat = Vec<Vec<C>>;

pub fn c(re: f64, im: f64) -> C {
    C::new(re, im)
}

pub fn zeros(n: usize) -> Mat {
    vec![vec![c(0.0, 0.0); n]; n]
}

pub fn eye(n: usize) -> Mat {
    let mut m = zeros(n);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = c(1.0, 0.0);
    }
    m
}

/// `a * b` in the usual sense: apply `b` first.
pub fn matmul(a: &Mat, b: &Mat) -> Mat {
    let n = a.len();
    let mut out = zeros(n);
    for i in 0..n {
        for j in 0..n {
            out[i][j] = (0..n).map(|k| a[i][k] * b[k][j]).sum();
        }
    }
    out
}

pub fn dagger(a: &Mat) -> Mat {
    let n = a.len();
    let mut out = zeros(n);
    for i in 0..n {
        for j in 0..n {
            out[i][j] = a[j][i].conj();
        }
    }
    out
}

pub fn max_diff(a: &Mat, b: &Mat) -> f64 {
    a.iter()
        .flatten()
        .zip(b.iter().flatten())
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

/// The column-vector matrix of a library operator: `m[b][a] = <b| f |a>`.
pub fn matrix_of(op: &LinearOp) -> Mat {
    let n = op.input().size();
    assert_eq!(n, op.output().size());
    let mut m = zeros(n);
    for a in 0..n {
        for b in 0..n {
            m[b][a] = op.entry(a, b);
        }
    }
    m
}

pub fn density_matrix(d: &DensityMatrix) -> Mat {
    let n = d.basis().size();
    (0..n)
        .map(|r| (0..n).map(|s| d.get(r, s)).collect())
        .collect()
}

/// `|v><v|` from raw amplitudes.
pub fn projector(v: &[C]) -> Mat {
    v.iter()
        .map(|x| v.iter().map(|y| x * y.conj()).collect())
        .collect()
}

/// Bit `w` of an index over `n` wires, wire 0 being the most significant.
pub fn bit(i: usize, w: usize, n: usize) -> usize {
    (i >> (n - 1 - w)) & 1
}

/// A single-qubit gate `g` (column convention) on wire `w` of `n`.
pub fn on_wire(g: [[C; 2]; 2], w: usize, n: usize) -> Mat {
    let size = 1 << n;
    let mut m = zeros(size);
    for col in 0..size {
        for row in 0..size {
            let others_agree = (0..n)
                .filter(|&k| k != w)
                .all(|k| bit(row, k, n) == bit(col, k, n));
            if others_agree {
                m[row][col] = g[bit(row, w, n)][bit(col, w, n)];
            }
        }
    }
    m
}

/// Gate `g` on wire `t`, applied only where wire `ctrl` is 1.
pub fn controlled_on(g: [[C; 2]; 2], ctrl: usize, t: usize, n: usize) -> Mat {
    let size = 1 << n;
    let active = on_wire(g, t, n);
    let mut m = zeros(size);
    for col in 0..size {
        for row in 0..size {
            m[row][col] = if bit(col, ctrl, n) == 1 {
                active[row][col]
            } else if row == col {
                c(1.0, 0.0)
            } else {
                c(0.0, 0.0)
            };
        }
    }
    m
}

pub fn h() -> [[C; 2]; 2] {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    [[c(s, 0.0), c(s, 0.0)], [c(s, 0.0), c(-s, 0.0)]]
}

pub fn x() -> [[C; 2]; 2] {
    [[c(0.0, 0.0), c(1.0, 0.0)], [c(1.0, 0.0), c(0.0, 0.0)]]
}

pub fn s() -> [[C; 2]; 2] {
    [[c(1.0, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), c(0.0, 1.0)]]
}

pub fn s_dagger() -> [[C; 2]; 2] {
    [[c(1.0, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), c(0.0, -1.0)]]
}

pub fn z() -> [[C; 2]; 2] {
    [[c(1.0, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), c(-1.0, 0.0)]]
}

/// The seven-gate Toffoli product on wires (a, b, c), multiplied out
/// right to left in circuit order.
pub fn toffoli_oracle() -> Mat {
    let n = 3;
    let (a, b, cw) = (0, 1, 2);
    let circuit = [
        on_wire(h(), cw, n),
        controlled_on(s(), b, cw, n),
        controlled_on(x(), a, b, n),
        controlled_on(s_dagger(), b, cw, n),
        controlled_on(x(), a, b, n),
        controlled_on(s(), a, cw, n),
        on_wire(h(), cw, n),
    ];
    circuit.iter().fold(eye(8), |acc, g| matmul(g, &acc))
}

/// Permutation matrix of `(a, b, c) -> (a, b, c xor (a and b))`.
pub fn toffoli_truth_table() -> Mat {
    let mut m = zeros(8);
    for col in 0..8 {
        let row = col ^ ((col >> 2) & (col >> 1) & 1);
        m[row][col] = c(1.0, 0.0);
    }
    m
}

/// Largest deviation between the superoperator `rho -> u rho u^dagger` and `s`,
/// checked on every matrix unit `|a1><a2|`.
pub fn unitary_channel_diff(u: &Mat, s: &Superoperator) -> f64 {
    let n = u.len();
    let ud = dagger(u);
    let mut worst: f64 = 0.0;
    for a1 in 0..n {
        for a2 in 0..n {
            let mut unit = zeros(n);
            unit[a1][a2] = c(1.0, 0.0);
            let expected = matmul(&matmul(u, &unit), &ud);
            let got = density_matrix(&s.block(a1, a2));
            worst = worst.max(max_diff(&expected, &got));
        }
    }
    worst
}
