mod common;

use common::*;
use qarrow::circuits::{
    self, alice, bob, copy, teleport, teleport_input, toffoli_fn, toffoli_lin, toffoli_super,
    weaken,
};
use qarrow::laws::SeededGenerator;
use qarrow::vector::{epr, q_false, q_ft, q_true};
use qarrow::{Basis, DensityMatrix, Superoperator};

const TOL: f64 = 1e-9;

#[test]
fn toffoli_lin_matches_seven_gate_product() {
    let oracle = toffoli_oracle();
    assert!(max_diff(&oracle, &toffoli_truth_table()) <= TOL);
    assert!(max_diff(&matrix_of(&toffoli_lin()), &oracle) <= TOL);
}

#[test]
fn toffoli_super_is_the_truth_table_channel() {
    let s = toffoli_super();
    assert!(unitary_channel_diff(&toffoli_oracle(), &s) <= TOL);
    let lifted = Superoperator::lift(&toffoli_lin());
    assert!(s.extensional_eq(&lifted, TOL).unwrap().equal);
    let b3 = Basis::qubits(3).unwrap();
    let table = Superoperator::arr(&b3, &b3, toffoli_fn).unwrap();
    assert!(s.max_abs_diff(&table).unwrap() <= TOL);
}

#[test]
fn toffoli_fn_flips_only_when_both_controls_set() {
    let images: Vec<usize> = (0..8).map(toffoli_fn).collect();
    assert_eq!(images, vec![0, 1, 2, 3, 4, 5, 7, 6]);
}

#[test]
fn teleport_recreates_random_qubits() {
    let mut gen = SeededGenerator::new(2024);
    let b = Basis::boolean();
    let t = teleport();
    for _ in 0..20 {
        let q = gen.normalized(&b);
        let out = t.apply(&teleport_input(&q).unwrap()).unwrap();
        let dev = out.max_abs_diff(&DensityMatrix::pure(&q)).unwrap();
        assert!(dev <= TOL, "deviation {dev} for {:?}", q.amplitudes());
    }
}

#[test]
fn alice_output_is_classical() {
    let mut gen = SeededGenerator::new(5);
    let two = Basis::qubits(2).unwrap();
    for _ in 0..10 {
        let v = gen.normalized(&two);
        let out = alice().apply(&DensityMatrix::pure(&v)).unwrap();
        assert!(out.max_off_diagonal() <= 1e-12);
        assert!((out.trace().re - 1.0).abs() <= 1e-12);
    }
}

#[test]
fn alice_on_false_false() {
    // (eprL, q) = (F, F): cnot does nothing, H puts q in FT, so the
    // measured pair (m1 from q, m2 from eprL) is (F,F) or (T,F).
    let out = alice()
        .apply(&DensityMatrix::pure(&q_false().tensor(&q_false())))
        .unwrap();
    let expected =
        DensityMatrix::diagonal(&Basis::qubits(2).unwrap(), &[0.5, 0.0, 0.5, 0.0]).unwrap();
    assert!(out.max_abs_diff(&expected).unwrap() <= 1e-12);
}

#[test]
fn bob_corrects_each_classical_outcome() {
    // Bell-basis outcome (m1, m2) leaves eprR as Z^m1 X^m2 q; bob undoes it.
    let q = circuits::default_teleport_qubit();
    let amps = q.amplitudes().to_vec();
    for m1 in 0..2 {
        for m2 in 0..2 {
            let mut r = amps.clone();
            if m2 == 1 {
                r.swap(0, 1);
            }
            if m1 == 1 {
                r[1] = -r[1];
            }
            let mut joint = vec![c(0.0, 0.0); 8];
            for (e, amp) in r.iter().enumerate() {
                joint[(e << 2) | (m1 << 1) | m2] = *amp;
            }
            let state = qarrow::StateVector::new(Basis::qubits(3).unwrap(), joint).unwrap();
            let out = bob().apply(&DensityMatrix::pure(&state)).unwrap();
            assert!(
                max_diff(&density_matrix(&out), &projector(&amps)) <= 1e-12,
                "m1={m1} m2={m2}"
            );
        }
    }
}

#[test]
fn copy_and_weaken() {
    let copied = copy().apply(&DensityMatrix::pure(&q_ft())).unwrap();
    assert!(copied.max_abs_diff(&DensityMatrix::pure(&epr())).unwrap() <= 1e-12);

    let weakened = weaken().apply(&DensityMatrix::pure(&epr())).unwrap();
    assert!(
        weakened
            .max_abs_diff(&DensityMatrix::pure(&q_ft()))
            .unwrap()
            <= 1e-12
    );

    let doubled = weaken()
        .apply(&DensityMatrix::pure(&q_ft().tensor(&q_ft())))
        .unwrap();
    assert!((doubled.trace().re - 2.0).abs() <= 1e-12);
    assert!(doubled.trace().im.abs() <= 1e-12);
}

#[test]
fn weaken_is_not_the_partial_trace() {
    let b = Basis::boolean();
    let tr = Superoperator::tr_l(&Basis::pair(&b, &b)).unwrap();
    assert!(!weaken().extensional_eq(&tr, TOL).unwrap().equal);
    let d = DensityMatrix::pure(&q_true().tensor(&q_ft()));
    let traced = tr.apply(&d).unwrap();
    assert!(traced.max_abs_diff(&DensityMatrix::pure(&q_ft())).unwrap() <= 1e-12);
}

#[test]
fn catalog_defaults_hold() {
    for name in circuits::CATALOG {
        let entry = circuits::lookup(name).unwrap();
        let out = entry.circuit.apply(&entry.input).unwrap();
        assert!(out.max_abs_diff(&entry.expected).unwrap() <= TOL, "{name}");
    }
    assert!(circuits::lookup("grover").is_err());
}
